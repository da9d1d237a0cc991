"""Monomial arithmetic, ideal algebra, and the .ideal text format."""

import random

import pytest

from srcores import (
    Monomial,
    MonomialIdeal,
    ParseError,
    UniverseMismatchError,
    VariableUniverse,
    divides,
    format_ideal,
    lcm_set,
    make_universe,
    parse_ideal,
)
from srcores.ideals import minimalize

from conftest import bf_colon_members, ideal_of, random_ideal


def test_universe_rejects_duplicates_and_oversize():
    with pytest.raises(ValueError):
        VariableUniverse(("a", "a"))
    with pytest.raises(ValueError):
        VariableUniverse(tuple(f"x{i}" for i in range(65)))


def test_divides_basics():
    u = make_universe(3)
    assert divides(u.monomial("x1"), u.monomial("x1", "x2"))
    assert not divides(u.monomial("x1", "x3"), u.monomial("x1", "x2"))
    assert divides(u.one, u.monomial("x2"))
    with pytest.raises(UniverseMismatchError):
        divides(u.monomial("x1"), make_universe(2).monomial("x1"))


def test_lcm_set():
    u = make_universe(3)
    assert lcm_set(u, [u.monomial("x1", "x2"), u.monomial("x2", "x3")]) == u.monomial(
        "x1", "x2", "x3"
    )
    assert lcm_set(u, []) == u.one
    assert lcm_set(u, [u.monomial("x1", "x2", "x3")]) == u.monomial("x1", "x2", "x3")


def test_contains():
    u = make_universe(3)
    ideal = ideal_of(u, "x1 x2")
    assert ideal.contains(u.monomial("x1", "x2", "x3"))
    assert not ideal.contains(u.monomial("x1", "x3"))
    unit = MonomialIdeal.from_masks(u, [0])
    assert unit.is_unit and unit.contains(u.one)


def test_colon_examples():
    u = make_universe(3)
    ideal = ideal_of(u, "x1 x2 x3")
    assert ideal.colon(u.variable("x3")) == ideal_of(u, "x1 x2", "x3")

    u4 = make_universe(4)
    ideal4 = ideal_of(u4, "x1 x2", "x3 x4")
    assert ideal4.colon(u4.variable("x3")) == ideal_of(u4, "x1 x2", "x4", "x3")
    assert ideal4.colon(u4.one) == ideal4


def test_add_examples():
    u = make_universe(3)
    assert ideal_of(u, "x1 x2").add(u.variable("x1")) == ideal_of(u, "x1")
    assert ideal_of(u, "x1 x2").add(u.variable("x3")) == ideal_of(u, "x1 x2", "x3")
    uj = VariableUniverse(("x", "y", "u", "v"))
    j = ideal_of(uj, "x y", "y u").add(uj.monomial("x", "v"))
    assert j == ideal_of(uj, "x y", "y u", "x v")


def test_canonicalize():
    u = make_universe(3)
    reduced = ideal_of(u, "x1", "x2 x3").canonicalize()
    assert reduced.universe.names == ("x2", "x3")
    assert reduced == ideal_of(reduced.universe, "x2 x3")

    untouched = ideal_of(u, "x1 x2").canonicalize()
    assert untouched.universe.names == ("x1", "x2", "x3")

    sphere = ideal_of(u, "x1", "x2", "x3").canonicalize()
    assert sphere.universe.names == ()
    assert sphere.is_zero

    assert sphere.canonicalize() == sphere  # idempotent


def test_minimalize_idempotent():
    rng = random.Random(1)
    for _ in range(50):
        masks = [rng.randint(1, 255) for _ in range(rng.randint(0, 8))]
        once = minimalize(masks)
        assert minimalize(once) == once


def test_colon_agrees_with_brute_force_membership():
    rng = random.Random(2)
    for _ in range(60):
        ideal = random_ideal(rng, max_vars=6, max_gens=6)
        n = len(ideal.universe)
        x_mask = rng.randint(0, (1 << n) - 1)
        x = Monomial(ideal.universe, x_mask)
        colon = ideal.colon(x)
        members = {m for m in range(1 << n) if colon.contains_mask(m)}
        assert members == bf_colon_members(ideal, x_mask)


def test_colon_and_add_return_antichains():
    rng = random.Random(3)
    for _ in range(40):
        ideal = random_ideal(rng, max_vars=7, max_gens=7)
        n = len(ideal.universe)
        x = Monomial(ideal.universe, rng.randint(0, (1 << n) - 1))
        for result in (ideal.colon(x), ideal.add(x)):
            assert result.gens == minimalize(result.gens)


def test_parse_and_format_roundtrip():
    text = """# sample
vars: a b c d
a b
c d
"""
    ideal = parse_ideal(text)
    assert ideal.universe.names == ("a", "b", "c", "d")
    assert ideal == ideal_of(ideal.universe, "a b", "c d")
    assert parse_ideal(format_ideal(ideal)) == ideal


def test_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_ideal("a b\n")  # missing header
    with pytest.raises(ParseError):
        parse_ideal("vars: a b\na z\n")  # unknown variable
    with pytest.raises(ParseError):
        parse_ideal("vars: a b\na b\nb a\n")  # duplicate generator
    with pytest.raises(ParseError):
        parse_ideal("")


def test_format_is_deterministic_and_minimal():
    u = make_universe(3)
    ideal = MonomialIdeal.from_masks(u, [0b011, 0b111, 0b100])
    assert format_ideal(ideal) == "vars: x1 x2 x3\nx3\nx1 x2\n"
