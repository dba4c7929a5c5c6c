from fractions import Fraction

import pytest

from conftest import random_element
from ladic import (
    INFINITY,
    IRRATIONAL,
    ClosureKind,
    PrimeContext,
    SolenoidElement,
    SubgroupDescriptor,
    character_eval,
    character_kernel,
    classify_closure,
    division_points,
    embed_padic,
    embed_real,
    from_pair,
    scalar_mul,
    standard_form_at,
    subgroup_contains,
    tau,
    torsion_order,
    torsion_subgroup,
    zero,
)
from ladic.errors import DomainError
from ladic.structure import closure_descriptor, homothety_kernel_order

C3 = PrimeContext(3)


def E(w, f, ell=3):
    return SolenoidElement(Fraction(w), Fraction(f), PrimeContext(ell))


def brute_order(x, limit=500):
    for m in range(1, limit + 1):
        if (m * x).is_zero():
            return m
    return None


def torsion_candidates(ctx, max_den=30):
    return {tau(Fraction(k, n), ctx) for n in range(1, max_den + 1) for k in range(n)}


def test_torsion_subgroup_examples():
    assert torsion_subgroup(1, 3) == [zero(3)]
    assert torsion_subgroup(2, 3) == [zero(3), E(Fraction(-1, 2), Fraction(1, 2))]
    g = torsion_subgroup(4, 3)
    orders = [brute_order(x) for x in g]
    assert len(set(g)) == 4 and all(4 % o == 0 for o in orders) and 4 in orders
    with pytest.raises(DomainError):
        torsion_subgroup(6, 3)


@pytest.mark.parametrize("m", [2, 4, 5, 7, 8])
def test_torsion_subgroup_structure(ctx, m):
    if m % ctx.ell == 0:
        with pytest.raises(DomainError):
            torsion_subgroup(m, ctx)
        return
    g = torsion_subgroup(m, ctx)
    members = set(g)
    assert len(members) == m
    assert all(x + y in members for x in g for y in g)
    assert all(-x in members for x in g)
    assert any(brute_order(x) == m for x in g)
    # every torsion point of order dividing m is already there
    for t in torsion_candidates(ctx, 3 * m):
        if (m * t).is_zero():
            assert t in members


def test_subgroup_contains_examples():
    d = SubgroupDescriptor(2, 0, C3)
    assert subgroup_contains(d, tau(Fraction(1, 2), 3))
    assert subgroup_contains(d, zero(3))
    d = SubgroupDescriptor(1, 1, C3)
    assert subgroup_contains(d, embed_padic(9, 3))
    assert not subgroup_contains(d, embed_padic(1, 3))
    assert subgroup_contains(SubgroupDescriptor(4, INFINITY, C3), tau(Fraction(3, 4), 3))
    assert not subgroup_contains(SubgroupDescriptor(4, INFINITY, C3), tau(Fraction(1, 5), 3))
    assert not subgroup_contains(SubgroupDescriptor(4, INFINITY, C3), embed_real(1, 3))


def test_subgroup_with_negative_exponent():
    # 3**-1 Z_3 contains 1/3, whose canonical fractional part is nonzero
    d = SubgroupDescriptor(1, -1, C3)
    assert subgroup_contains(d, embed_padic(Fraction(1, 3), 3))
    assert subgroup_contains(d, embed_padic(Fraction(5, 3), 3))
    assert not subgroup_contains(d, embed_padic(Fraction(1, 9), 3))
    assert not subgroup_contains(d, embed_real(Fraction(1, 2), 3))


def test_descriptor_rejects_multiples_of_ell():
    with pytest.raises(DomainError):
        SubgroupDescriptor(3, 0, C3)


@pytest.mark.parametrize(
    "q, r, text",
    [
        (0, 0, "finite(1)"),
        (Fraction(1, 2), Fraction(-1, 2), "finite(2)"),
        (9, 0, "procyclic(1, 2)"),
        (Fraction(5, 6), Fraction(3, 4), "procyclic(4, -1)"),
        (Fraction(5, 6), IRRATIONAL, "dense"),
    ],
)
def test_classify_examples(q, r, text):
    assert str(classify_closure(q, r, 3)) == text


def _closure_checks(x, c, ctx):
    if c.tag is ClosureKind.FINITE:
        multiples = {k * x for k in range(2 * c.m + 2)}
        assert len(multiples) == c.m
        return
    d = closure_descriptor(c, ctx)
    for j in range(4):
        level = c.a + j
        cosets = set()
        for k in range(c.m * ctx.ell**j):
            y = k * x
            assert subgroup_contains(d, y)
            cosets.add(standard_form_at(y, level).frac_a)
        assert len(cosets) == c.m * ctx.ell**j


def test_classification_consistency(ctx, rng):
    for _ in range(40):
        q = Fraction(rng.randint(-300, 300), rng.randint(1, 60))
        r = Fraction(rng.randint(-300, 300), rng.randint(1, 60))
        c = classify_closure(q, r, ctx)
        _closure_checks(from_pair(q, r, ctx), c, ctx)
    for _ in range(20):
        s = Fraction(rng.randint(-300, 300), rng.randint(1, 60))
        c = classify_closure(s, -s, ctx)
        assert c.tag is ClosureKind.FINITE and c.m == torsion_order(tau(s, ctx))


def test_scalar_mul_examples():
    x = E(Fraction(3, 2), Fraction(1, 12))
    assert scalar_mul(1, x) == x
    assert scalar_mul(2, tau(Fraction(1, 2), 3)).is_zero()
    assert scalar_mul(Fraction(1, 3), embed_padic(Fraction(1, 2), 3)) == E(Fraction(-1, 2), Fraction(2, 3))
    for bad in (0, Fraction(1, 2), Fraction(2, 5)):
        with pytest.raises(DomainError):
            scalar_mul(bad, x)


def test_scalar_mul_is_an_endomorphism(ctx, rng):
    ratios = [1, -1, 2, -3, Fraction(1, ctx.ell), Fraction(-5, ctx.ell**2), 7 * ctx.ell]
    for _ in range(100):
        x, y = random_element(rng, ctx), random_element(rng, ctx)
        rho = rng.choice(ratios)
        assert scalar_mul(rho, x + y) == scalar_mul(rho, x) + scalar_mul(rho, y)
        assert scalar_mul(rho, -x) == -scalar_mul(rho, x)


def test_homothety_kernel_is_torsion_subgroup(ctx):
    candidates = torsion_candidates(ctx, 40)
    for rho in (2, -4, Fraction(5, ctx.ell), 6 * ctx.ell, Fraction(-7, ctx.ell**2)):
        m = homothety_kernel_order(rho, ctx)
        if m % ctx.ell == 0:
            continue
        kernel = {t for t in candidates if scalar_mul(rho, t).is_zero()}
        assert kernel == set(torsion_subgroup(m, ctx))


def test_division_points_examples():
    assert division_points(embed_real(5, 3), 9) == [scalar_mul(Fraction(1, 9), embed_real(5, 3))]
    assert set(division_points(zero(3), 2)) == {zero(3), E(Fraction(-1, 2), Fraction(1, 2))}
    assert set(division_points(embed_real(1, 3), 2)) == {E(0, Fraction(1, 2)), E(Fraction(1, 2), 0)}
    assert 2 * E(Fraction(1, 2), 0) == embed_real(1, 3)


def test_division_points_count_and_coset(ctx, rng):
    for _ in range(60):
        x = random_element(rng, ctx)
        n = rng.randint(1, 24)
        points = division_points(x, n)
        m = n
        while m % ctx.ell == 0:
            m //= ctx.ell
        assert len(set(points)) == len(points) == m
        assert all(n * y == x for y in points)
        assert {y - points[0] for y in points} == set(torsion_subgroup(m, ctx))


def test_character_examples():
    assert character_eval(5, zero(3)) == 0
    assert character_eval(1, E(Fraction(3, 2), Fraction(1, 12))) == Fraction(1, 12)
    assert character_eval(2, tau(Fraction(1, 2), 3)) == 0


def test_character_kernel_examples():
    assert character_kernel(1, 3) == SubgroupDescriptor(1, 0, C3)
    assert character_kernel(2, 3) == SubgroupDescriptor(2, 0, C3)
    assert character_kernel(Fraction(1, 3), 3) == SubgroupDescriptor(1, 1, C3)
    assert character_kernel(-18, 3) == SubgroupDescriptor(2, -2, C3)


def test_character_laws(ctx, rng):
    ratios = [1, -1, 2, -2, Fraction(1, ctx.ell), Fraction(-5, ctx.ell**2)]
    for _ in range(150):
        x, y = random_element(rng, ctx), random_element(rng, ctx)
        rho, sigma = rng.choice(ratios), rng.choice(ratios)
        lhs = character_eval(rho, x + y)
        assert (lhs - character_eval(rho, x) - character_eval(rho, y)).denominator == 1
        if rho + sigma != 0:
            s = character_eval(rho + sigma, x) - character_eval(rho, x) - character_eval(sigma, x)
            assert s.denominator == 1
        kernel = character_kernel(rho, ctx)
        assert (character_eval(rho, x) == 0) == subgroup_contains(kernel, x)
