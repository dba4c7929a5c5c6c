"""Torsion, closed subgroups, homotheties, division points and characters."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .element import (
    SolenoidElement,
    _scale,
    from_pair,
    standard_form_at,
    tau,
    torsion_order,
)
from .errors import DomainError
from .rational import (
    INFINITY,
    PrimeContext,
    RationalLike,
    as_context,
    in_z_one_over_ell,
    prime_to_part,
    split_int,
    to_rational,
    val_ell,
)


class _Irrational:
    """Marker for a real coordinate known to be irrational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "IRRATIONAL"


IRRATIONAL = _Irrational()


@dataclass(frozen=True)
class SubgroupDescriptor:
    """``{x : m*x in ell**a Z_ell}``, or the finite ``m``-torsion group when ``a`` is infinite."""

    m: int
    a: Union[int, float]
    ctx: PrimeContext

    def __post_init__(self):
        if self.m < 1 or self.m % self.ctx.ell == 0:
            raise DomainError(f"m = {self.m} must be positive and prime to {self.ctx.ell}")
        if self.a != INFINITY and not isinstance(self.a, int):
            raise TypeError("a must be an int or INFINITY")

    def __str__(self):
        a = "inf" if self.a == INFINITY else str(self.a)
        return f"subgroup(m={self.m}, a={a})"


class ClosureKind(enum.Enum):
    FINITE = "finite"
    PROCYCLIC_PRODUCT = "procyclic"
    DENSE = "dense"


@dataclass(frozen=True)
class ClosureClass:
    tag: ClosureKind
    m: int | None = None
    a: int | None = None

    def __str__(self):
        if self.tag is ClosureKind.FINITE:
            return f"finite({self.m})"
        if self.tag is ClosureKind.PROCYCLIC_PRODUCT:
            return f"procyclic({self.m}, {self.a})"
        return "dense"


def homothety_ratio(rho: RationalLike, ctx: PrimeContext | int) -> Fraction:
    """Validate ``rho`` as a nonzero element of ``Z[1/ell]``."""
    rho = to_rational(rho)
    if rho == 0:
        raise DomainError("the zero map is not a homothety")
    if not in_z_one_over_ell(rho, ctx):
        raise DomainError(f"{rho} is not in Z[1/{as_context(ctx).ell}]")
    return rho


def torsion_subgroup(m: int, ctx: PrimeContext | int) -> list[SolenoidElement]:
    """The unique subgroup of order ``m``: ``tau(k/m)`` for ``0 <= k < m``."""
    ctx = as_context(ctx)
    if m < 1:
        raise DomainError("m must be positive")
    if m % ctx.ell == 0:
        raise DomainError(f"no subgroup of order {m}: there is no {ctx.ell}-torsion")
    return [tau(Fraction(k, m), ctx) for k in range(m)]


def subgroup_contains(d: SubgroupDescriptor, x: SolenoidElement) -> bool:
    if d.ctx != x.ctx:
        raise DomainError("descriptor and element use different primes")
    if d.a == INFINITY:
        order = torsion_order(x)
        return order is not None and d.m % order == 0
    y = x * d.m
    # y lies in ell**a Z_ell exactly when its shifted real part vanishes.
    return standard_form_at(y, d.a).frac_a == 0


def classify_closure(q: RationalLike, r, ctx: PrimeContext | int) -> ClosureClass:
    """Kind of the closure of ``Z*x`` for ``x = q + r``.

    Writes ``x = tau(-{x}) + ([x] + {x})`` (torsion plus l-adic, a unique split).
    """
    ctx = as_context(ctx)
    if r is IRRATIONAL:
        return ClosureClass(ClosureKind.DENSE)
    x = from_pair(q, r, ctx)
    m = prime_to_part(x.frac.denominator, ctx)
    t = x.whole + x.frac
    if t == 0:
        return ClosureClass(ClosureKind.FINITE, m)
    return ClosureClass(ClosureKind.PROCYCLIC_PRODUCT, m, val_ell(t, ctx))


def closure_descriptor(c: ClosureClass, ctx: PrimeContext | int) -> SubgroupDescriptor:
    ctx = as_context(ctx)
    if c.tag is ClosureKind.FINITE:
        return SubgroupDescriptor(c.m, INFINITY, ctx)
    if c.tag is ClosureKind.PROCYCLIC_PRODUCT:
        return SubgroupDescriptor(c.m, c.a, ctx)
    raise DomainError("a dense closure is the whole group, not a proper descriptor")


def scalar_mul(rho: RationalLike, x: SolenoidElement) -> SolenoidElement:
    """Homothety ``x -> rho*x`` for ``rho`` in ``Z[1/ell]``, nonzero."""
    return _scale(x, homothety_ratio(rho, x.ctx))


def homothety_kernel_order(rho: RationalLike, ctx: PrimeContext | int) -> int:
    rho = homothety_ratio(rho, ctx)
    return prime_to_part(rho.numerator, ctx)


def division_points(x: SolenoidElement, n: int) -> list[SolenoidElement]:
    """All ``y`` with ``n*y == x``.

    With ``n = m * ell**v`` and ``m`` prime to ell there are exactly ``m`` of
    them, indexed ``k = 0 .. m-1``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    ell = x.ell
    v, m = split_int(n, ell)
    shift = Fraction(1, ell**v)
    w, f = x.whole * shift, x.frac * shift
    return [from_pair((w + k) / m, (f - k) / m, x.ctx) for k in range(m)]


def character_eval(rho: RationalLike, x: SolenoidElement) -> Fraction:
    """``chi_rho(x)``: multiply by ``rho`` then project to ``T``, as a rational in ``[0, 1)``."""
    return scalar_mul(rho, x).frac


def character_kernel(rho: RationalLike, ctx: PrimeContext | int) -> SubgroupDescriptor:
    """Kernel of ``chi_rho`` for ``rho = +-m * ell**e``: the descriptor ``(m, -e)``."""
    ctx = as_context(ctx)
    rho = homothety_ratio(rho, ctx)
    e = val_ell(rho, ctx)
    m = prime_to_part(rho.numerator, ctx)
    return SubgroupDescriptor(m, -e, ctx)
