"""Rational-coordinate points of the l-adic compactification of the reals.

A point is the class of a pair ``(q, r)`` (``q`` read l-adically, ``r`` read
as a real) modulo ``(q, r) ~ (q + z, r - z)`` for ``z`` in ``Z[1/ell]``.  Each
class is stored in its standard form ``whole + frac`` with ``whole`` an
l-adic integer and ``0 <= frac < 1``, so equality and hashing are structural.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .rational import (
    PrimeContext,
    RationalLike,
    as_context,
    ell_fractional_part,
    format_rational,
    in_z_one_over_ell,
    is_ell_integral,
    parse_rational,
    prime_to_part,
    residue_mod_power,
    to_rational,
)


@dataclass(frozen=True)
class SolenoidElement:
    """Canonical point ``[x] + {x}``.

    Use :func:`from_pair` and the embeddings rather than the raw constructor;
    the constructor only checks that the given fields are already canonical.
    """

    whole: Fraction
    frac: Fraction
    ctx: PrimeContext

    def __post_init__(self):
        if not isinstance(self.whole, Fraction) or not isinstance(self.frac, Fraction):
            raise TypeError("whole and frac must be Fractions")
        if not is_ell_integral(self.whole, self.ctx):
            raise DomainError(f"whole part {self.whole} is not an {self.ctx.ell}-adic integer")
        if not 0 <= self.frac < 1:
            raise DomainError(f"fractional part {self.frac} is outside [0, 1)")

    @property
    def ell(self) -> int:
        return self.ctx.ell

    def is_zero(self) -> bool:
        return self.whole == 0 and self.frac == 0

    def __add__(self, other):
        if not isinstance(other, SolenoidElement):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __abs__(self):
        from .metric import abs_value

        return abs_value(self)

    def __sub__(self, other):
        if not isinstance(other, SolenoidElement):
            return NotImplemented
        return add(self, neg(other))

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return _scale(self, Fraction(k))

    __rmul__ = __mul__

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"SolenoidElement({format_element(self)}, ell={self.ell})"


@dataclass(frozen=True)
class ShiftedForm:
    """Decomposition ``x = whole_a + frac_a`` with ``whole_a`` in ``ell**a Z_ell``
    and ``0 <= frac_a < ell**a``."""

    a: int
    whole_a: Fraction
    frac_a: Fraction


def _check_same(x: SolenoidElement, y: SolenoidElement) -> None:
    if x.ctx != y.ctx:
        raise DomainError(f"elements over different primes ({x.ell} and {y.ell})")


def from_pair(q: RationalLike, r: RationalLike, ctx: PrimeContext | int) -> SolenoidElement:
    """Canonical form of the class of ``(q, r)``, i.e. of the sum ``q + r``."""
    ctx = as_context(ctx)
    q = to_rational(q)
    r = to_rational(r)
    w = ell_fractional_part(q, ctx)
    shifted = r + w
    n = math.floor(shifted)
    return SolenoidElement(q - w + n, shifted - n, ctx)


def zero(ctx: PrimeContext | int) -> SolenoidElement:
    return SolenoidElement(Fraction(0), Fraction(0), as_context(ctx))


def embed_real(r: RationalLike, ctx: PrimeContext | int) -> SolenoidElement:
    return from_pair(0, r, ctx)


def embed_padic(q: RationalLike, ctx: PrimeContext | int) -> SolenoidElement:
    return from_pair(q, 0, ctx)


def add(x: SolenoidElement, y: SolenoidElement) -> SolenoidElement:
    _check_same(x, y)
    whole = x.whole + y.whole
    frac = x.frac + y.frac
    if frac >= 1:
        whole += 1
        frac -= 1
    return SolenoidElement(whole, frac, x.ctx)


def neg(x: SolenoidElement) -> SolenoidElement:
    if x.frac == 0:
        return SolenoidElement(-x.whole, Fraction(0), x.ctx)
    return SolenoidElement(-x.whole - 1, 1 - x.frac, x.ctx)


def sub(x: SolenoidElement, y: SolenoidElement) -> SolenoidElement:
    return add(x, neg(y))


def _scale(x: SolenoidElement, rho: Fraction) -> SolenoidElement:
    # Only meaningful for rho in Z[1/ell]; callers validate.
    return from_pair(rho * x.whole, rho * x.frac, x.ctx)


def standard_form(x: SolenoidElement) -> tuple[Fraction, Fraction]:
    return x.whole, x.frac


def torus_projection(x: SolenoidElement) -> Fraction:
    """Image of ``x`` in ``T = R/Z``, represented in ``[0, 1)``."""
    return x.frac


def standard_form_at(x: SolenoidElement, a: int) -> ShiftedForm:
    """Split ``x`` across the cut at ``ell**a`` instead of at 1.

    For ``a > 0`` the residue of ``[x]`` modulo ``ell**a`` moves to the real
    side; for ``a < 0`` the base-ell digits of ``{x}`` at positions
    ``a .. -1`` move to the l-adic side.
    """
    ell = x.ell
    if a >= 0:
        i = residue_mod_power(x.whole, x.ctx, a)
        return ShiftedForm(a, x.whole - i, x.frac + i)
    scale = ell ** (-a)
    lifted = Fraction(math.floor(x.frac * scale), scale)
    return ShiftedForm(a, x.whole + lifted, x.frac - lifted)


def tau(s: RationalLike, ctx: PrimeContext | int) -> SolenoidElement:
    """Class of ``(s, -s)``: a torsion point, zero exactly when ``s`` is in ``Z[1/ell]``."""
    s = to_rational(s)
    return from_pair(s, -s, ctx)


def is_torsion(x: SolenoidElement) -> bool:
    # whole + frac is invariant on the class of (q, r); it is 0 exactly on tau's image.
    return x.whole + x.frac == 0


def torsion_order(x: SolenoidElement) -> int | None:
    """Least ``m >= 1`` with ``m * x == 0``, or ``None`` when ``x`` has infinite order."""
    if not is_torsion(x):
        return None
    return prime_to_part(x.frac.denominator, x.ctx)


def in_real_line(x: SolenoidElement) -> bool:
    """Whether ``x`` lies on the real line through 0 (its path component)."""
    return in_z_one_over_ell(x.whole, x.ctx)


def in_padic_line(x: SolenoidElement) -> bool:
    return in_z_one_over_ell(x.frac, x.ctx)


# -- text format -------------------------------------------------------------

_PAIR_RE = re.compile(r"^\s*padic:\s*(\S+?)\s*\+\s*real:\s*(\S+)\s*$")
_SINGLE_RE = re.compile(r"^\s*(padic|real):\s*(\S+)\s*$")
_CANON_RE = re.compile(r"^\s*\[\s*([^\]]+?)\s*\]\s*\+\s*\{\s*([^}]+?)\s*\}\s*$")


def format_element(x: SolenoidElement) -> str:
    return f"[{format_rational(x.whole)}] + {{{format_rational(x.frac)}}}"


def parse_element(text: str, ctx: PrimeContext | int) -> SolenoidElement:
    """Read an element.

    Accepted forms: ``padic:<q>+real:<r>``, ``padic:<q>``, ``real:<r>``, the
    canonical output ``[<w>] + {<f>}`` (which must already be canonical) and a
    bare rational, read as a real.
    """
    ctx = as_context(ctx)
    m = _PAIR_RE.match(text)
    if m:
        return from_pair(parse_rational(m.group(1)), parse_rational(m.group(2)), ctx)
    m = _SINGLE_RE.match(text)
    if m:
        value = parse_rational(m.group(2))
        return embed_padic(value, ctx) if m.group(1) == "padic" else embed_real(value, ctx)
    m = _CANON_RE.match(text)
    if m:
        whole, frac = parse_rational(m.group(1)), parse_rational(m.group(2))
        try:
            return SolenoidElement(whole, frac, ctx)
        except DomainError as exc:
            raise ParseError(f"not a canonical element: {text!r} ({exc})") from None
    try:
        return embed_real(parse_rational(text), ctx)
    except ParseError:
        raise ParseError(f"not an element: {text!r}") from None
