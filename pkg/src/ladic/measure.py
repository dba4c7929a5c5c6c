"""Haar measure on cylinders ``c + (ell**n Z_ell (+) [alpha, beta))``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .element import SolenoidElement, add, embed_padic, format_element, parse_element, sub
from .errors import DomainError, ParseError
from .rational import PrimeContext, as_context, format_rational, parse_rational, val_ell


@dataclass(frozen=True)
class Cylinder:
    center: SolenoidElement
    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("cylinders need n >= 0 (ell**n Z_ell inside Z_ell)")
        if not 0 <= self.alpha <= self.beta <= 1:
            raise DomainError(f"need 0 <= alpha <= beta <= 1, got [{self.alpha}, {self.beta})")

    @property
    def ctx(self) -> PrimeContext:
        return self.center.ctx

    def translate(self, t: SolenoidElement) -> Cylinder:
        return Cylinder(add(self.center, t), self.n, self.alpha, self.beta)

    def __str__(self):
        return format_cylinder(self)


def haar_measure(c: Cylinder) -> Fraction:
    return Fraction(1, c.ctx.ell**c.n) * (c.beta - c.alpha)


def cylinder_contains(c: Cylinder, x: SolenoidElement) -> bool:
    y = sub(x, c.center)
    return val_ell(y.whole, c.ctx) >= c.n and c.alpha <= y.frac < c.beta


def refine(c: Cylinder) -> list[Cylinder]:
    """Split into ``ell**2`` disjoint cylinders: ``ell`` l-adic cosets times ``ell`` equal subintervals."""
    ell = c.ctx.ell
    step = (c.beta - c.alpha) / ell
    parts = []
    for i in range(ell):
        center = add(c.center, embed_padic(i * ell**c.n, c.ctx))
        for j in range(ell):
            parts.append(Cylinder(center, c.n + 1, c.alpha + j * step, c.alpha + (j + 1) * step))
    return parts


def full_space(ctx: PrimeContext | int) -> Cylinder:
    ctx = as_context(ctx)
    return Cylinder(embed_padic(0, ctx), 0, Fraction(0), Fraction(1))


_CYL_RE = re.compile(
    r"^\s*cyl\(\s*center\s*=\s*(.+?)\s*,\s*n\s*=\s*([+-]?\d+)\s*,\s*\[\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)\s*\)\s*$"
)


def format_cylinder(c: Cylinder) -> str:
    return (
        f"cyl(center={format_element(c.center)}, n={c.n}, "
        f"[{format_rational(c.alpha)},{format_rational(c.beta)}))"
    )


def parse_cylinder(text: str, ctx: PrimeContext | int) -> Cylinder:
    m = _CYL_RE.match(text)
    if m is None:
        raise ParseError(f"not a cylinder: {text!r}")
    center = parse_element(m.group(1), ctx)
    alpha, beta = parse_rational(m.group(3)), parse_rational(m.group(4))
    return Cylinder(center, int(m.group(2)), alpha, beta)
