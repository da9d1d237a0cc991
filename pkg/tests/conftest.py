"""Shared fixtures: seeded corpora, brute-force oracles, golden instances."""

from __future__ import annotations

import random

import pytest

from srcores import Graph, MonomialIdeal, VariableUniverse, make_universe
from srcores.ideals import bits, popcount


def ideal_of(universe: VariableUniverse, *gens: str) -> MonomialIdeal:
    """Ideal from generator strings like "x1 x2"."""
    return MonomialIdeal.from_names(universe, [g.split() for g in gens])


def random_ideal(rng: random.Random, max_vars: int, max_gens: int) -> MonomialIdeal:
    n = rng.randint(1, max_vars)
    universe = make_universe(n)
    k = rng.randint(0, max_gens)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(k)]
    return MonomialIdeal.from_masks(universe, masks)


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Random labeled tree by uniform attachment."""
    return [(rng.randint(0, v - 1), v) for v in range(1, n)]


def random_forest(rng: random.Random, max_vertices: int, min_vertices: int = 1) -> Graph:
    n = rng.randint(min_vertices, max_vertices)
    names = [f"v{i + 1}" for i in range(n)]
    keep_prob = rng.choice((1.0, 0.9, 0.75))
    edges = [
        (names[u], names[v])
        for u, v in random_tree_edges(rng, n)
        if rng.random() < keep_prob
    ]
    return Graph.from_edges(edges, names)


def random_graph(rng: random.Random, max_vertices: int) -> Graph:
    n = rng.randint(1, max_vertices)
    names = [f"v{i + 1}" for i in range(n)]
    p = rng.choice((0.15, 0.3, 0.5))
    edges = [
        (names[u], names[v])
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(edges, names)


def cycle_graph(k: int) -> Graph:
    names = [f"c{i + 1}" for i in range(k)]
    return Graph.from_edges([(names[i], names[(i + 1) % k]) for i in range(k)], names)


def path_graph(k: int) -> Graph:
    names = [f"p{i + 1}" for i in range(k)]
    return Graph.from_edges([(names[i], names[i + 1]) for i in range(k - 1)], names)


def graph_from_networkx(nxg) -> Graph:
    names = [f"v{u}" for u in sorted(nxg.nodes)]
    edges = [(f"v{u}", f"v{v}") for u, v in sorted(tuple(sorted(e)) for e in nxg.edges)]
    return Graph.from_edges(edges, names)


def all_small_trees(max_vertices: int) -> list[Graph]:
    """Every tree up to isomorphism with at most max_vertices vertices."""
    import networkx as nx

    out = [Graph.from_edges([], ["v0"])]  # the one-vertex tree
    if max_vertices >= 2:
        out.append(Graph.from_edges([("v0", "v1")], ["v0", "v1"]))
    for n in range(3, max_vertices + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(graph_from_networkx(t))
    return out


# ---------------------------------------------------------------------------
# Brute-force oracles (independent of the library's fast paths)


def bf_faces(ideal: MonomialIdeal) -> set[int]:
    """R(I) by filtering all 2^n subsets."""
    n = len(ideal.universe)
    gens = list(ideal.gens)
    return {
        m
        for m in range(1 << n)
        if not any(g & m == g for g in gens)
    }


def bf_membership_with_squares(ideal: MonomialIdeal, exponents: tuple[int, ...]) -> bool:
    """Membership of an arbitrary monomial in (B + all squares)."""
    if any(e >= 2 for e in exponents):
        return True
    mask = 0
    for i, e in enumerate(exponents):
        if e:
            mask |= 1 << i
    return ideal.contains_mask(mask)


def bf_colon_members(ideal: MonomialIdeal, x_mask: int) -> set[int]:
    """Square-free members of (I : x) by testing x*m for every m."""
    n = len(ideal.universe)
    out = set()
    for m in range(1 << n):
        exps = tuple(((m >> i) & 1) + ((x_mask >> i) & 1) for i in range(n))
        if bf_membership_with_squares(ideal, exps):
            out.add(m)
    return out


def bf_reduced_euler(faces: set[int]) -> int:
    return -sum(-1 if popcount(m) & 1 else 1 for m in faces)


def bf_signed_cover_count(gens: list[int], target: int) -> int:
    total = 0
    for s in range(1 << len(gens)):
        acc = 0
        size = 0
        for i, g in enumerate(gens):
            if (s >> i) & 1:
                acc |= g
                size += 1
        if acc == target:
            total += -1 if size & 1 else 1
    return total


def bf_is_dominating(graph: Graph, d_mask: int) -> bool:
    return all(graph.closed_mask(v) & d_mask for v in range(graph.n_vertices))


def bf_independent_sets(graph: Graph) -> set[int]:
    n = graph.n_vertices
    out = set()
    for m in range(1 << n):
        if all(not (graph.adjacency(v) & m) for v in bits(m)):
            out.add(m)
    return out


@pytest.fixture(scope="session")
def golden_tree() -> Graph:
    """The 14-vertex example tree: a 5-leaf hub v3, a path v3-v7-v8 with
    v8-v9-v10 hanging off, and a 3-leaf hub v11 on v8."""
    edges = [
        ("v1", "v3"), ("v2", "v3"), ("v3", "v4"), ("v3", "v5"), ("v3", "v6"),
        ("v3", "v7"), ("v7", "v8"), ("v8", "v9"), ("v9", "v10"),
        ("v8", "v11"), ("v11", "v12"), ("v11", "v13"), ("v11", "v14"),
    ]
    return Graph.from_edges(edges, [f"v{i}" for i in range(1, 15)])


def double_star(k: int) -> Graph:
    """Adjacent hubs with k+1 leaves each; independent domination exceeds
    domination by exactly k."""
    names = (
        ["L", "R"]
        + [f"l{i}" for i in range(k + 1)]
        + [f"r{i}" for i in range(k + 1)]
    )
    edges = [("L", "R")]
    edges += [("L", f"l{i}") for i in range(k + 1)]
    edges += [("R", f"r{i}") for i in range(k + 1)]
    return Graph.from_edges(edges, names)
