"""Inverse-limit coordinates: ``x -> (x_n)`` in ``T**N`` with ``x_n = ell * x_(n+1)`` mod 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .element import SolenoidElement, embed_real
from .errors import DomainError
from .rational import PrimeContext, RationalLike, as_context, to_rational
from .structure import scalar_mul

#: Digits printed for the display-only circle form.
CIRCLE_DIGITS = 12


@dataclass(frozen=True)
class CoherentSequence:
    """Torus points ``x_0 .. x_depth`` (rationals in ``[0, 1)``) of one solenoid point."""

    ell: int
    points: tuple[Fraction, ...]

    @property
    def depth(self) -> int:
        return len(self.points) - 1

    def is_coherent(self) -> bool:
        return all(
            (self.ell * self.points[n + 1] - self.points[n]).denominator == 1
            for n in range(self.depth)
        )


def coords(x: SolenoidElement, depth: int) -> CoherentSequence:
    """``x_n = {x / ell**n}`` for ``0 <= n <= depth``."""
    if depth < 0:
        raise DomainError("depth must be non-negative")
    ell = x.ell
    return CoherentSequence(
        ell, tuple(scalar_mul(Fraction(1, ell**n), x).frac for n in range(depth + 1))
    )


def from_coords(p: RationalLike, depth: int, ctx: PrimeContext | int) -> SolenoidElement:
    """An element whose ``depth``-th coordinate is ``p``.

    Any other such element differs from it by a point of ``ell**depth Z_ell``.
    """
    ctx = as_context(ctx)
    p = to_rational(p)
    if not 0 <= p < 1:
        raise DomainError(f"torus point {p} must lie in [0, 1)")
    if depth < 0:
        raise DomainError("depth must be non-negative")
    return scalar_mul(ctx.ell**depth, embed_real(p, ctx))


def circle_form(p: RationalLike) -> tuple[float, float]:
    """``(cos 2 pi p, sin 2 pi p)`` rounded to ``CIRCLE_DIGITS`` places; display only."""
    angle = 2 * math.pi * float(to_rational(p))
    # + 0.0 turns -0.0 into 0.0
    return round(math.cos(angle), CIRCLE_DIGITS) + 0.0, round(math.sin(angle), CIRCLE_DIGITS) + 0.0
