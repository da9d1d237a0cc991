"""Boundary maps, Smith normal form, homology profiles, generator tests."""

import random

import pytest

from srcores import (
    Chain,
    HomologyGroup,
    Monomial,
    SimplicialComplex,
    boundary,
    generates_top_class,
    h_and_hd,
    is_cycle,
    make_universe,
    realize,
    reduced_homology,
    smith_invariant_factors,
    suspension,
)
from srcores.homology import _ChainComplexData

from conftest import ideal_of, random_ideal


def chain(universe, mapping):
    return Chain.from_monomials(
        {universe.monomial(*names.split()): c for names, c in mapping.items()}
    )


def test_boundary_of_edge_and_vertex():
    u = make_universe(3)
    cplx = realize(ideal_of(u, "x1 x2 x3"))
    d = boundary(chain(u, {"x1 x2": 1}), cplx)
    assert d.coeffs == {u.mask_of(["x2"]): 1, u.mask_of(["x1"]): -1}
    aug = boundary(chain(u, {"x1": 1}), cplx)
    assert aug.coeffs == {0: 1}
    dd = boundary(boundary(chain(u, {"x1 x2": 1, "x1 x3": -1}), cplx), cplx)
    assert dd.is_zero


def test_boundary_squared_vanishes_randomly():
    rng = random.Random(10)
    for _ in range(40):
        ideal = random_ideal(rng, max_vars=8, max_gens=6)
        cplx = realize(ideal)
        by_deg = {}
        for m in cplx.faces:
            by_deg.setdefault(bin(m).count("1"), []).append(m)
        degs = [d for d in by_deg if d >= 2]
        if not degs:
            continue
        d = rng.choice(degs)
        coeffs = {m: rng.randint(-3, 3) for m in rng.sample(by_deg[d], min(4, len(by_deg[d])))}
        z = Chain(ideal.universe, d - 1, coeffs)
        if z.is_zero:
            continue
        assert boundary(boundary(z, cplx), cplx).is_zero


def test_boundary_rejects_foreign_faces():
    u = make_universe(3)
    cplx = realize(ideal_of(u, "x1 x2"))
    with pytest.raises(ValueError):
        boundary(chain(u, {"x1 x2": 1}), cplx)


def test_smith_invariant_factors_known_matrices():
    # diag(2, 3) ~ (1, 6)
    assert smith_invariant_factors([[(0, 2)], [(1, 3)]]) == [1, 6]
    # 2x2 with determinant 0
    assert smith_invariant_factors([[(0, 1), (1, 1)], [(0, 1), (1, 1)]]) == [1]
    assert smith_invariant_factors([]) == []
    assert smith_invariant_factors([[(0, 0)]]) == []
    # classic example with nontrivial chain
    cols = [[(0, 2), (1, 1)], [(0, 4), (1, 3)]]
    assert smith_invariant_factors(cols) == [1, 2]


def test_smith_matches_sympy_on_random_matrices():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(11)
    for _ in range(25):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        dense = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        sparse = [
            [(i, dense[i][j]) for i in range(rows) if dense[i][j]] for j in range(cols)
        ]
        got = smith_invariant_factors(sparse)
        snf = smith_normal_form(sympy.Matrix(dense))
        want = sorted(
            abs(snf[i, i]) for i in range(min(rows, cols)) if snf[i, i] != 0
        )
        assert got == want


def test_reduced_homology_spheres_and_simplices():
    u = make_universe(4)
    square = realize(ideal_of(u, "x1 x2", "x3 x4"))
    assert reduced_homology(square).groups == {1: HomologyGroup(1)}

    u3 = make_universe(3)
    full = realize(ideal_of(u3))
    assert reduced_homology(full).is_trivial

    point_sphere = SimplicialComplex(u3, frozenset([0]))
    assert reduced_homology(point_sphere).groups == {-1: HomologyGroup(1)}

    empty = SimplicialComplex(u3, frozenset())
    assert reduced_homology(empty).is_trivial


def test_reduced_homology_torsion_projective_plane():
    # minimal 6-vertex triangulation of the real projective plane
    u = make_universe(6)
    triangles = [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
    faces = set()
    for t in triangles:
        m = sum(1 << (i - 1) for i in t)
        faces.add(m)
        for v in t:
            faces.add(m ^ (1 << (v - 1)))
            for w in t:
                if w != v:
                    faces.add(m & ~(1 << (v - 1)) & ~(1 << (w - 1)))
    faces.add(0)
    cplx = SimplicialComplex.from_masks(u, faces)
    profile = reduced_homology(cplx)
    assert profile.groups == {1: HomologyGroup(0, (2,))}
    assert profile.h_total == 1 and profile.h_free == 0
    assert h_and_hd(profile) == (1, 1)


def test_euler_poincare_identity():
    rng = random.Random(12)
    for _ in range(30):
        ideal = random_ideal(rng, max_vars=7, max_gens=7)
        cplx = realize(ideal)
        assert reduced_homology(cplx).euler == cplx.reduced_euler()


def test_suspension_shifts_homology():
    rng = random.Random(13)
    for _ in range(15):
        ideal = random_ideal(rng, max_vars=5, max_gens=5)
        base = realize(ideal)
        n = len(ideal.universe)
        wide = make_universe(n + 2)
        lifted = SimplicialComplex(wide, base.faces)
        sus = suspension(lifted, wide.variable(f"x{n+1}"), wide.variable(f"x{n+2}"))
        before = reduced_homology(lifted)
        after = reduced_homology(sus)
        assert after.groups == {k + 1: g for k, g in before.groups.items()}


def test_is_cycle_and_generates_top_class():
    u = make_universe(2)
    s0 = realize(ideal_of(u, "x1 x2"))
    z = chain(u, {"x1": 1, "x2": -1})
    assert is_cycle(z, s0)
    assert generates_top_class(z, s0, 0)
    assert not generates_top_class(chain(u, {"x1": 2, "x2": -2}), s0, 0)
    assert not generates_top_class(chain(u, {"x1": 1, "x2": 1}), s0, 0)  # not a cycle

    u4 = make_universe(4)
    square = realize(ideal_of(u4, "x1 x2", "x3 x4"))
    z2 = chain(u4, {"x1 x3": 1, "x2 x3": -1, "x1 x4": -1, "x2 x4": 1})
    assert is_cycle(z2, square)
    assert generates_top_class(z2, square, 1)
    not_gen = chain(u4, {"x1 x3": 2, "x2 x3": -2, "x1 x4": -2, "x2 x4": 2})
    assert not generates_top_class(not_gen, square, 1)
    with pytest.raises(ValueError):
        generates_top_class(z2, square, 0)  # profile precondition fails


def test_h_and_hd():
    u = make_universe(4)
    square = realize(ideal_of(u, "x1 x2", "x3 x4"))
    assert h_and_hd(reduced_homology(square)) == (1, 1)
    full = realize(ideal_of(u))
    assert h_and_hd(reduced_homology(full)) == (0, None)

    u6 = make_universe(6)
    c6 = realize(
        ideal_of(u6, "x1 x2", "x2 x3", "x3 x4", "x4 x5", "x5 x6", "x1 x6")
    )
    assert h_and_hd(reduced_homology(c6)) == (2, 1)


def test_chain_data_boundary_columns_square():
    u = make_universe(4)
    square = realize(ideal_of(u, "x1 x2", "x3 x4"))
    data = _ChainComplexData(square)
    assert data.n_cells(-1) == 1 and data.n_cells(0) == 4 and data.n_cells(1) == 4
    assert data.rank(0) == 1 and data.rank(1) == 3
