"""Translation-invariant absolute value and distance, density witnesses, epsilon-nets."""

from __future__ import annotations

import math
from fractions import Fraction

from .element import SolenoidElement, add, neg
from .errors import DomainError
from .rational import PrimeContext, abs_ell, as_context, residue_mod_power


def abs_value(x: SolenoidElement) -> Fraction:
    """``|x|``, the smaller of the two decompositions ``[x] + {x}`` and ``([x] + 1) + ({x} - 1)``.

    Always in ``[0, 1]``.
    """
    ctx = x.ctx
    first = max(abs_ell(x.whole, ctx), x.frac)
    second = max(abs_ell(x.whole + 1, ctx), 1 - x.frac)
    return min(first, second)


def dist(x: SolenoidElement, y: SolenoidElement) -> Fraction:
    return abs_value(add(x, neg(y)))


def infimum_oracle(x: SolenoidElement, max_exponent: int = 3, max_shift: int = 3) -> Fraction:
    """Brute-force ``inf_z max(|[x] + z|_ell, |{x} - z|)`` over a window of ``Z[1/ell]``.

    Searches ``z = k / ell**j`` with ``0 <= j <= max_exponent`` and
    ``|z| <= max_shift``.  Test oracle only; :func:`abs_value` is the fast path.
    """
    ell = x.ell
    best = None
    for j in range(max_exponent + 1):
        scale = ell**j
        for k in range(-max_shift * scale, max_shift * scale + 1):
            z = Fraction(k, scale)
            value = max(abs_ell(x.whole + z, x.ctx), abs(x.frac - z))
            if best is None or value < best:
                best = value
    return best


def approximate_real(x: SolenoidElement, n: int) -> Fraction:
    """A rational ``r`` with ``dist(x, embed_real(r)) <= ell**-n``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    i = residue_mod_power(x.whole, x.ctx, n)
    return i + x.frac


def approximate_padic(x: SolenoidElement, n: int) -> Fraction:
    """A rational ``q`` with ``dist(x, embed_padic(q)) <= ell**-n``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    scale = x.ell**n
    return x.whole + Fraction(math.floor(x.frac * scale), scale)


def epsilon_net(k: int, ctx: PrimeContext | int) -> list[SolenoidElement]:
    """The ``ell**(2k)`` points ``i + j/ell**k`` (``0 <= i, j < ell**k``).

    Every element lies within ``ell**-k`` of one of them.
    """
    if k < 0:
        raise DomainError("k must be non-negative")
    ctx = as_context(ctx)
    size = ctx.ell**k
    return [
        SolenoidElement(Fraction(i), Fraction(j, size), ctx)
        for i in range(size)
        for j in range(size)
    ]


def nearest_net_point(x: SolenoidElement, k: int) -> SolenoidElement:
    """The point of ``epsilon_net(k)`` sharing ``x``'s residue mod ``ell**k`` and first ``k`` real digits."""
    size = x.ell**k
    i = residue_mod_power(x.whole, x.ctx, k)
    j = math.floor(x.frac * size)
    return SolenoidElement(Fraction(i), Fraction(j, size), x.ctx)
