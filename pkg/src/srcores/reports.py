"""Bundled verdicts for forests, unicyclic graphs and homology bounds.

Each report runs the relevant classification and homology computations and
records every expected identity as a named boolean check; ``ok`` is the
conjunction.  A False check is a real finding (either a bug or a violated
theorem), never an expected state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import FACE_BUDGET, SimplicialComplex, realize
from .covers import euler_via_covers
from .errors import BudgetExceededError
from .graphs import (
    Graph,
    GraphInvariants,
    GraphStructure,
    dominating_sign_sum,
    edge_cover_polynomial,
    edge_ideal,
    invariants,
    star_ideal,
    structure,
)
from .homology import HomologyGroup, HomologyProfile, reduced_homology
from .ideals import bits
from .resolution import Classification, classify


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _sphere_check(profile: HomologyProfile, degree: int) -> bool:
    return profile.sphere_degree() == degree


@dataclass
class ForestReport:
    graph: Graph
    invariants: GraphInvariants
    structure: GraphStructure
    independence: Classification
    independence_homology: HomologyProfile
    dominance: Classification
    dominance_homology: HomologyProfile
    euler_covers: int
    euler_enumeration: int
    cov_polynomial: list[int]
    leaf_stripping_conical: bool
    sign_sum: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def leaf_stripping_is_conical(forest: Graph) -> bool:
    """Deterministic maximal leaf-stripping pass.

    Repeatedly removes the closed neighborhood of the smallest vertex
    adjacent to a leaf; the forest is conical exactly when an isolated
    vertex ever appears (equivalently when some vertices outlive the edges).
    """
    cur = forest
    while True:
        if cur.isolated_mask():
            return True
        if cur.n_edges == 0:
            return False  # no vertices left at all
        support = None
        for v in range(cur.n_vertices):
            adj = cur.adjacency(v)
            if adj and not adj & (adj - 1):  # v is a leaf
                u = adj.bit_length() - 1
                support = u if support is None else min(support, u)
        if support is None:
            raise ValueError("graph with edges but no leaf is not a forest")
        cur = cur.delete(cur.closed_neighborhood([cur.universe.names[support]]))


def forest_report(forest: Graph, *, max_faces: int = FACE_BUDGET) -> ForestReport:
    """All forest-level identities: independence classification against the
    graph invariants, the conicality equivalences, the dominance-side
    matching/vertex-cover identity, sign identities, Koenig and Gallai."""
    struct = structure(forest)
    if not struct.is_forest:
        raise ValueError("forest_report requires an acyclic graph")
    inv = invariants(forest)
    ind_ideal = edge_ideal(forest)
    ind_cls = classify(ind_ideal)
    ind_hom = reduced_homology(realize(ind_ideal, max_faces=max_faces))
    dom_ideal = star_ideal(forest)
    dom_cls = classify(dom_ideal)
    dom_hom = reduced_homology(realize(dom_ideal, max_faces=max_faces))
    e_cov = euler_via_covers(ind_ideal)
    e_enum = realize(ind_ideal, max_faces=max_faces).reduced_euler()
    cov_poly = edge_cover_polynomial(forest)
    cov_at_m1 = sum(_sign(k) * c for k, c in enumerate(cov_poly))
    stripping = leaf_stripping_is_conical(forest)
    sign_sum = dominating_sign_sum(forest)
    n = forest.n_vertices

    checks = {
        "euler_methods_agree": e_cov == e_enum,
        "facco_parity": (not ind_cls.spherical) == (e_cov % 2 == 0),
        "facco_cov_at_minus1": (not ind_cls.spherical) == (cov_at_m1 == 0),
        "facco_leaf_stripping": (not ind_cls.spherical) == stripping,
        "independence_homology": (
            ind_hom.is_trivial
            if not ind_cls.spherical
            else _sphere_check(ind_hom, ind_cls.depth - 1)
        ),
        "independence_simple": ind_cls.verdict == "conical" or ind_cls.is_simple is True,
        "forind_corind": (
            True
            if not ind_cls.spherical
            else ind_cls.depth == inv.i == inv.gamma
        ),
        "mucca": (
            dom_cls.spherical
            and dom_cls.is_simple is True
            and dom_cls.depth == inv.beta1 == inv.alpha0
        ),
        "dominance_homology": _sphere_check(dom_hom, inv.beta1 - 1),
        "konig": inv.alpha0 == inv.beta1,
        "gallai": inv.alpha1 is None or inv.alpha1 + inv.beta1 == n,
        "sign_identity": sign_sum == _sign(inv.beta1 + n),
        "depth_order": (not ind_cls.spherical)
        or forest.isolated_mask() != 0
        or ind_cls.depth <= dom_cls.depth,
    }
    return ForestReport(
        graph=forest,
        invariants=inv,
        structure=struct,
        independence=ind_cls,
        independence_homology=ind_hom,
        dominance=dom_cls,
        dominance_homology=dom_hom,
        euler_covers=e_cov,
        euler_enumeration=e_enum,
        cov_polynomial=cov_poly,
        leaf_stripping_conical=stripping,
        sign_sum=sign_sum,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# Unicyclic graphs


@dataclass
class UnicyclicReport:
    graph: Graph
    structure: GraphStructure
    euler_covers: int
    euler_enumeration: int
    homology: HomologyProfile
    shape_class: str  # "contractible" | "sphere" | "wedge"
    tentacles_conical: list[bool]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def tree_tentacles(graph: Graph, cycle: tuple[str, ...]) -> list[Graph]:
    """Trees hanging off cycle vertices, each including its attachment
    vertex (which is a leaf of the tentacle)."""
    cyc = set(cycle)
    out = []
    names = graph.universe.names
    for v_name in cycle:
        v = graph.universe.index(v_name)
        for w in bits(graph.adjacency(v)):
            if names[w] in cyc:
                continue
            # grow the branch from w away from v
            comp = {w}
            stack = [w]
            while stack:
                x = stack.pop()
                for y in bits(graph.adjacency(x)):
                    if y != v and y not in comp:
                        comp.add(y)
                        stack.append(y)
            keep = {names[x] for x in comp} | {v_name}
            drop = [name for name in names if name not in keep]
            out.append(graph.delete(drop))
    return out


def _cycle_profile_expectation(k: int) -> tuple[int, int]:
    """(rank, degree) of the independence-complex homology of the k-cycle."""
    if k % 3 == 0:
        return 2, k // 3 - 1
    if k % 3 == 1:
        return 1, (k - 1) // 3 - 1
    return 1, (k + 1) // 3 - 1


def unicyclic_report(graph: Graph, *, max_faces: int = FACE_BUDGET) -> UnicyclicReport:
    """Trichotomy for h1 = 1: the Euler characteristic computed from covers
    picks contractible vs sphere vs wedge, and exact homology must agree."""
    struct = structure(graph)
    if struct.h1 != 1:
        raise ValueError("unicyclic_report requires h1 = 1")
    ideal = edge_ideal(graph)
    e_cov = euler_via_covers(ideal)
    cplx = realize(ideal, max_faces=max_faces)
    e_enum = cplx.reduced_euler()
    hom = reduced_homology(cplx)
    magnitude = abs(e_cov)
    shape = {0: "contractible", 1: "sphere", 2: "wedge"}.get(magnitude, "out-of-range")
    tentacles = tree_tentacles(graph, struct.cycle)
    tent_conical = [not classify(edge_ideal(t)).spherical for t in tentacles]
    cycle_len = len(struct.cycle)

    if shape == "contractible":
        hom_matches = hom.is_trivial
    elif shape == "sphere":
        hom_matches = hom.sphere_degree() is not None
    elif shape == "wedge":
        hom_matches = (
            len(hom.groups) == 1
            and next(iter(hom.groups.values())).rank == 2
            and not next(iter(hom.groups.values())).torsion
        )
    else:
        hom_matches = False

    checks = {
        "euler_methods_agree": e_cov == e_enum,
        "euler_in_trichotomy_range": magnitude <= 2,
        "homology_matches_class": hom_matches,
        "h_equals_abs_euler": hom.h_total == magnitude,
        "casi_necessity": shape != "wedge"
        or (all(tent_conical) and cycle_len % 3 == 0),
    }
    if graph.n_edges == cycle_len and graph.n_vertices == cycle_len:
        rank, degree = _cycle_profile_expectation(cycle_len)
        checks["pure_cycle_table"] = hom.groups == {degree: HomologyGroup(rank)}
    return UnicyclicReport(
        graph=graph,
        structure=struct,
        euler_covers=e_cov,
        euler_enumeration=e_enum,
        homology=hom,
        shape_class=shape,
        tentacles_conical=tent_conical,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# Homology bounds


@dataclass
class BoundsReport:
    graph: Graph
    structure: GraphStructure
    homology: HomologyProfile
    h_total: int
    h_free: int
    hd: int | None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def bounds_check(graph: Graph, *, max_faces: int = FACE_BUDGET) -> BoundsReport:
    """h <= 2^h1 and hd <= |V|/2 - 1 for the independence complex, with the
    torsion-inclusive h (the stronger reading)."""
    struct = structure(graph)
    hom = reduced_homology(realize(edge_ideal(graph), max_faces=max_faces))
    hd = hom.hd
    checks = {
        "h_bound": hom.h_total <= 2 ** struct.h1,
        "hd_bound": hd is None or 2 * (hd + 1) <= graph.n_vertices,
    }
    return BoundsReport(
        graph=graph,
        structure=struct,
        homology=hom,
        h_total=hom.h_total,
        h_free=hom.h_free,
        hd=hd,
        checks=checks,
    )
