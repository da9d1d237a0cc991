"""Covering polynomials, Hilbert identity, Euler characteristic via covers."""

import random

import pytest

from srcores import (
    BudgetExceededError,
    MonomialIdeal,
    MultigradedPolynomial,
    cover_coefficient,
    covering_polynomial,
    euler_via_covers,
    hilbert_identity_check,
    make_universe,
    realize,
)
from srcores.ideals import mask_to_exponents

from conftest import bf_signed_cover_count, ideal_of, random_ideal


def exps(universe, *names):
    return mask_to_exponents(universe.mask_of(names), len(universe))


def test_covering_polynomial_small():
    assert covering_polynomial(2, []) == MultigradedPolynomial.constant(2, 1)
    u = make_universe(2)
    one_gen = covering_polynomial(2, [exps(u, "x1", "x2")])
    assert one_gen.terms == {(0, 0): 1, (1, 1): -1}


def test_covering_polynomial_triangle():
    # three quadratic generators covering x1 x2 x3 with net coefficient +2
    u = make_universe(3)
    poly = covering_polynomial(
        3, [exps(u, "x1", "x2"), exps(u, "x1", "x3"), exps(u, "x2", "x3")]
    )
    assert poly.coefficient((1, 1, 1)) == 2


def test_covering_polynomial_budget():
    with pytest.raises(BudgetExceededError):
        covering_polynomial(1, [(1,)] * 25)


def test_cover_coefficient_examples():
    u = make_universe(3)
    gens3 = [exps(u, "x1", "x2", "x3")]
    assert cover_coefficient(3, gens3, (1, 1, 1)) == -1
    triangle = [exps(u, "x1", "x2"), exps(u, "x1", "x3"), exps(u, "x2", "x3")]
    assert cover_coefficient(3, triangle, (1, 1, 1)) == 2
    assert cover_coefficient(3, triangle, (1, 1, 2)) == 0  # no covers beyond lcm(M)


def test_cover_coefficient_matches_polynomial_and_bruteforce():
    rng = random.Random(20)
    for _ in range(40):
        n = rng.randint(1, 6)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(0, 6))]
        poly = covering_polynomial(n, [mask_to_exponents(g, n) for g in gens])
        target = rng.randint(0, (1 << n) - 1)
        texp = mask_to_exponents(target, n)
        got = cover_coefficient(n, [mask_to_exponents(g, n) for g in gens], texp)
        assert got == poly.coefficient(texp)
        assert got == bf_signed_cover_count(gens, target)


def test_cover_coefficient_with_exponents():
    # covers must match exponents exactly, not only supports
    gens = [(2, 0), (1, 1)]
    assert cover_coefficient(2, gens, (2, 1)) == 1  # only {x1^2, x1 x2}
    assert cover_coefficient(2, gens, (1, 1)) == -1
    assert cover_coefficient(2, gens, (2, 0)) == -1


def test_hilbert_identity_frozen_case():
    # B = {x1 x2} over two variables: both sides expanded by hand
    u = make_universe(2)
    ideal = ideal_of(u, "x1 x2")
    monomials = [exps(u, "x1", "x2"), (2, 0), (0, 2)]
    lhs = covering_polynomial(2, monomials)
    assert lhs.terms == {
        (0, 0): 1,
        (1, 1): -1,
        (2, 0): -1,
        (0, 2): -1,
        (2, 1): 1,
        (1, 2): 1,
    }
    assert hilbert_identity_check(ideal)


def test_hilbert_identity_single_variable():
    u = make_universe(1)
    assert hilbert_identity_check(MonomialIdeal.from_masks(u, []))


def test_hilbert_identity_random():
    rng = random.Random(21)
    for _ in range(40):
        ideal = random_ideal(rng, max_vars=5, max_gens=6)
        assert hilbert_identity_check(ideal)


def test_euler_via_covers_examples():
    u = make_universe(3)
    triangle = ideal_of(u, "x1 x2", "x1 x3", "x2 x3")
    assert euler_via_covers(triangle) == 2

    for n in range(1, 6):
        un = make_universe(n)
        sphere = MonomialIdeal.from_masks(un, [un.full_mask])
        assert euler_via_covers(sphere) == (1 if n % 2 == 0 else -1)
        full = MonomialIdeal.from_masks(un, [])
        assert euler_via_covers(full) == 0


def test_euler_via_covers_matches_enumeration():
    rng = random.Random(22)
    for _ in range(60):
        ideal = random_ideal(rng, max_vars=8, max_gens=10)
        assert euler_via_covers(ideal) == realize(ideal).reduced_euler()


def test_parity_shortcut():
    # reduced Euler is congruent mod 2 to the number of covers of the
    # all-variables monomial
    rng = random.Random(23)
    for _ in range(30):
        ideal = random_ideal(rng, max_vars=6, max_gens=8)
        n = len(ideal.universe)
        covers = 0
        gens = ideal.sorted_gens()
        for s in range(1 << len(gens)):
            acc = 0
            for i, g in enumerate(gens):
                if (s >> i) & 1:
                    acc |= g
            if acc == ideal.universe.full_mask:
                covers += 1
        assert (realize(ideal).reduced_euler() - covers) % 2 == 0


def test_multiplicativity_on_disjoint_supports():
    # star product degenerates to an honest product across disjoint variables
    u = make_universe(6)
    left = [exps(u, "x1", "x2"), exps(u, "x2", "x3")]
    right = [exps(u, "x4", "x5"), exps(u, "x5", "x6")]
    combined = covering_polynomial(6, left + right)
    assert combined == covering_polynomial(6, left) * covering_polynomial(6, right)


def test_disjoint_triangles_power_euler():
    # disjoint triangle unions multiply reduced Euler characteristics: 2^n
    for n in (1, 2, 3):
        un = make_universe(3 * n)
        gens = []
        for b in range(n):
            o = 3 * b
            names = [f"x{o + 1}", f"x{o + 2}", f"x{o + 3}"]
            gens += [
                [names[0], names[1]],
                [names[0], names[2]],
                [names[1], names[2]],
            ]
        ideal = MonomialIdeal.from_names(un, gens)
        assert euler_via_covers(ideal) == 2 ** n * (1 if (3 * n - 1) % 2 == 0 else -1)
