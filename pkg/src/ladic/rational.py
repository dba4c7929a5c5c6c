"""Exact rationals with l-adic valuation, l-adic absolute value and l-fractional part."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError

#: Valuation of zero.  Compares above every integer, so ``min``/``>=`` stay total.
INFINITY = math.inf

Valuation = Union[int, float]
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """The fixed prime ``ell`` every element and operation is built over."""

    ell: int

    def __post_init__(self):
        if isinstance(self.ell, bool) or not isinstance(self.ell, int):
            raise TypeError(f"ell must be an int, got {type(self.ell).__name__}")
        if not is_prime(self.ell):
            raise DomainError(f"ell = {self.ell} is not prime")

    def __repr__(self):
        return f"PrimeContext(ell={self.ell})"


def as_context(ctx: PrimeContext | int) -> PrimeContext:
    if isinstance(ctx, PrimeContext):
        return ctx
    return PrimeContext(ctx)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a reduced Fraction.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def split_int(n: int, ell: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``n = ell**v * u`` and ``ell`` not dividing ``u``; ``n != 0``."""
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v, n


def val_ell(q: RationalLike, ctx: PrimeContext | int) -> Valuation:
    q = to_rational(q)
    ell = as_context(ctx).ell
    if q == 0:
        return INFINITY
    return split_int(q.numerator, ell)[0] - split_int(q.denominator, ell)[0]


def abs_ell(q: RationalLike, ctx: PrimeContext | int) -> Fraction:
    q = to_rational(q)
    if q == 0:
        return Fraction(0)
    ell = as_context(ctx).ell
    return Fraction(ell) ** (-val_ell(q, ell))


def prime_to_part(n: int, ctx: PrimeContext | int) -> int:
    """Largest divisor of ``|n|`` coprime to ``ell``; ``n`` must be nonzero."""
    if n == 0:
        raise DomainError("prime-to-ell part of 0 is undefined")
    return abs(split_int(n, as_context(ctx).ell)[1])


def is_ell_integral(q: Fraction, ctx: PrimeContext | int) -> bool:
    """True when ``ell`` does not divide the denominator (``q`` lies in Z_ell)."""
    return q.denominator % as_context(ctx).ell != 0


def in_z_one_over_ell(q: Fraction, ctx: PrimeContext | int) -> bool:
    """True when the denominator of ``q`` is a power of ``ell``."""
    ell = as_context(ctx).ell
    return split_int(q.denominator, ell)[1] == 1


def residue_mod_power(q: Fraction, ctx: PrimeContext | int, a: int) -> int:
    """The residue ``0 <= i < ell**a`` with ``q - i`` in ``ell**a Z_ell``.

    ``q`` must be an l-adic integer.
    """
    ell = as_context(ctx).ell
    if q.denominator % ell == 0:
        raise DomainError(f"{q} is not an {ell}-adic integer")
    modulus = ell**a
    if modulus == 1:
        return 0
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


def ell_fractional_part(q: RationalLike, ctx: PrimeContext | int) -> Fraction:
    """The unique ``w = k / ell**a`` in ``[0, 1)`` with ``q - w`` an l-adic integer.

    ``ell**a`` is the ell-part of the denominator of ``q`` and ``k`` is the
    numerator times the inverse of the prime-to-ell denominator, mod ``ell**a``.
    """
    q = to_rational(q)
    ell = as_context(ctx).ell
    a, unit = split_int(q.denominator, ell)
    if a == 0:
        return Fraction(0)
    modulus = ell**a
    k = q.numerator * pow(unit, -1, modulus) % modulus
    return Fraction(k, modulus)
