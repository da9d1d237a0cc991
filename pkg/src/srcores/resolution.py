"""Cone apexes, domination, resolutions, cores and collapse witnesses.

A resolution is a sequence of variables, each either a cone apex of the
current complex or dominating some other variable in the current ideal; the
ideal is coloned by the chosen variable after every step.  The final ideal
is the core.  Spherical ideals admit only domination steps and have a core
unique up to a variable permutation; conical ideals run into a cone apex
and their complexes collapse to a point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import (
    FACE_BUDGET,
    CollapseStep,
    SimplicialComplex,
    cross_polytope_boundary,
    join,
    realize,
)
from .errors import BudgetExceededError, InternalError
from .homology import Chain
from .ideals import Monomial, MonomialIdeal, bits, popcount


def is_cone_apex(ideal: MonomialIdeal, a: Monomial) -> bool:
    """True iff R(I) is a cone with apex a: a divides no minimal generator."""
    if popcount(a.mask) != 1:
        raise ValueError("cone apex must be a single variable")
    if ideal.contains(a):
        raise ValueError(f"{a} lies in the ideal and cannot be an apex")
    return all(g & a.mask == 0 for g in ideal.gens)


def dominates(ideal: MonomialIdeal, a: Monomial, b: Monomial) -> bool:
    """True iff a dominates b: every minimal generator divisible by b is
    divisible by a and at least one such generator exists."""
    if popcount(a.mask) != 1 or popcount(b.mask) != 1:
        raise ValueError("domination is between single variables")
    if a.mask == b.mask:
        raise ValueError("a variable cannot dominate itself")
    if ideal.contains(a) or ideal.contains(b):
        raise ValueError("domination requires both variables outside the ideal")
    return _dominates_bits(ideal.gens, a.mask, b.mask)


def _dominates_bits(gens: frozenset[int], a_bit: int, b_bit: int) -> bool:
    found = False
    for g in gens:
        if g & b_bit:
            if not g & a_bit:
                return False
            found = True
    return found


def _cone_apex_bits(ideal: MonomialIdeal) -> list[int]:
    """Variables outside the ideal dividing no generator, in universe order."""
    out = []
    for v in range(len(ideal.universe)):
        bit = 1 << v
        if ideal.contains_mask(bit):
            continue
        if all(g & bit == 0 for g in ideal.gens):
            out.append(v)
    return out


def _domination_pairs_bits(ideal: MonomialIdeal) -> list[tuple[int, int]]:
    """All (a, b) variable-index pairs with a dominating b, in lex order."""
    n = len(ideal.universe)
    live = [v for v in range(n) if not ideal.contains_mask(1 << v)]
    pairs = []
    for a in live:
        for b in live:
            if a != b and _dominates_bits(ideal.gens, 1 << a, 1 << b):
                pairs.append((a, b))
    return pairs


@dataclass(frozen=True)
class ResolutionStep:
    """One step: variable ``a`` dominating ``b``, or a cone apex (b is None)."""

    a: str
    b: str | None

    @property
    def is_cone_apex(self) -> bool:
        return self.b is None

    def __str__(self) -> str:
        return f"{self.a} (cone apex)" if self.b is None else f"{self.a} dominates {self.b}"


@dataclass(frozen=True)
class Resolution:
    ideal: MonomialIdeal
    steps: tuple[ResolutionStep, ...]
    core: MonomialIdeal
    spherical: bool

    @property
    def depth(self) -> int:
        return len(self.steps)

    @property
    def pairs(self) -> list[tuple[str, str]]:
        """(a, b) pairs of the domination steps, in order."""
        return [(s.a, s.b) for s in self.steps if s.b is not None]

    @property
    def has_cone_step(self) -> bool:
        return any(s.is_cone_apex for s in self.steps)

    def intermediate_ideals(self) -> list[MonomialIdeal]:
        """I_1 = I, I_2 = (I : a_1), ..., I_{r+1} = core."""
        out = [self.ideal]
        for step in self.steps:
            out.append(out[-1].colon(self.ideal.universe.variable(step.a)))
        return out

    def to_json(self) -> dict:
        return {
            "steps": [{"a": s.a, "b": s.b} for s in self.steps],
            "depth": self.depth,
            "spherical": self.spherical,
            "core": [
                " ".join(self.core.universe.names_of(g)) or "1"
                for g in self.core.sorted_gens()
            ],
        }


def _core_is_cone(core: MonomialIdeal) -> bool:
    return bool(_cone_apex_bits(core))


def find_resolution(ideal: MonomialIdeal, strategy: str = "first-cone") -> Resolution:
    """Greedy resolution with deterministic lexicographic tie-breaks.

    ``first-cone`` checks every variable for a cone apex before extending and
    stops at the first apex step (enough to classify); ``dominations-first``
    prefers domination steps and only takes an apex when none remains.  Both
    stop after taking an apex step.  When neither kind of step exists the
    resolution is maximal.
    """
    if strategy not in ("first-cone", "dominations-first"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if ideal.is_unit:
        # the empty complex is contractible: file it with the conical ideals
        return Resolution(ideal, (), ideal, False)
    universe = ideal.universe
    cur = ideal
    steps: list[ResolutionStep] = []
    while True:
        apexes = _cone_apex_bits(cur)
        pairs = _domination_pairs_bits(cur)
        if apexes and (strategy == "first-cone" or not pairs):
            v = apexes[0]
            steps.append(ResolutionStep(universe.names[v], None))
            cur = cur.colon(universe.variable(universe.names[v]))
            return Resolution(ideal, tuple(steps), cur, False)
        if not pairs:
            return Resolution(ideal, tuple(steps), cur, not _core_is_cone(cur))
        a, b = pairs[0]
        steps.append(ResolutionStep(universe.names[a], universe.names[b]))
        cur = cur.colon(universe.variable(universe.names[a]))


def all_maximal_resolutions(ideal: MonomialIdeal, budget: int = 100_000) -> list[Resolution]:
    """Every maximal sequence of domination steps, by depth-first search.

    Distinct orders count as distinct resolutions; the recorded witness b for
    each step is the lexicographically smallest dominated variable.  Cone
    apexes are never taken as steps: a complex with an apex can only lose
    domination-maximality to that apex, and the per-resolution ``spherical``
    flag (core not a cone) captures exactly that.
    """
    if ideal.is_unit:
        return [Resolution(ideal, (), ideal, False)]
    universe = ideal.universe
    results: list[Resolution] = []
    visited = 0

    def walk(cur: MonomialIdeal, steps: tuple[ResolutionStep, ...]) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"resolution search exceeded {budget} states")
        pairs = _domination_pairs_bits(cur)
        if not pairs:
            results.append(Resolution(ideal, steps, cur, not _core_is_cone(cur)))
            return
        by_a: dict[int, int] = {}
        for a, b in pairs:
            by_a.setdefault(a, b)
        for a, b in sorted(by_a.items()):
            step = ResolutionStep(universe.names[a], universe.names[b])
            walk(cur.colon(universe.variable(universe.names[a])), steps + (step,))

    walk(ideal, ())
    return results


def permutation_equivalent(c1: MonomialIdeal, c2: MonomialIdeal) -> dict[str, str] | None:
    """A variable bijection carrying the generators of c1 onto those of c2,
    or None.  Backtracking over degree-profile-compatible assignments."""
    if c1.universe != c2.universe:
        return None
    if len(c1.gens) != len(c2.gens):
        return None
    n = len(c1.universe)

    def signature(gens: frozenset[int], v: int) -> tuple:
        return tuple(sorted(popcount(g) for g in gens if g & (1 << v)))

    sig1 = [signature(c1.gens, v) for v in range(n)]
    sig2 = [signature(c2.gens, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    assignment: dict[int, int] = {}
    used: set[int] = set()
    gens2 = c2.gens

    def gen_image_ok() -> bool:
        assigned = 0
        for v in assignment:
            assigned |= 1 << v
        for g in c1.gens:
            if g & assigned == g:
                img = 0
                for v in bits(g):
                    img |= 1 << assignment[v]
                if img not in gens2:
                    return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in candidates[v]:
            if w in used:
                continue
            assignment[v] = w
            used.add(w)
            if gen_image_ok() and backtrack(pos + 1):
                return True
            del assignment[v]
            used.discard(w)
        return False

    if not backtrack(0):
        return None
    names = c1.universe.names
    return {names[v]: names[w] for v, w in assignment.items()}


@dataclass
class Classification:
    """Verdict plus the witnesses behind it."""

    ideal: MonomialIdeal  # canonicalized input
    verdict: str  # "spherical" | "conical"
    resolution: Resolution
    depth: int | None
    core: MonomialIdeal | None
    is_simple: bool | None
    all_resolutions: list[Resolution] | None = None
    all_cores: list[MonomialIdeal] | None = None
    coco_consistent: bool | None = None

    @property
    def spherical(self) -> bool:
        return self.verdict == "spherical"


def _is_whole_variable_ideal(core: MonomialIdeal) -> bool:
    n = len(core.universe)
    return core.gens == frozenset(1 << v for v in range(n))


def classify(
    ideal: MonomialIdeal, *, exhaustive: bool = False, budget: int = 100_000
) -> Classification:
    """Spherical/conical verdict from one greedy resolution.

    The input is canonicalized first.  Spherical and conical are mutually
    exclusive, so any resolution decides; with ``exhaustive`` all maximal
    resolutions are enumerated and the expected consistencies (single depth,
    permutation-equivalent cores, unanimous verdict) are recorded.
    """
    ideal = ideal.canonicalize()
    res = find_resolution(ideal)
    if not res.spherical:
        cls = Classification(ideal, "conical", res, None, None, None)
    else:
        simple = _is_whole_variable_ideal(res.core)
        cls = Classification(ideal, "spherical", res, res.depth, res.core, simple)
    if exhaustive:
        allres = all_maximal_resolutions(ideal, budget=budget)
        cores: list[MonomialIdeal] = []
        seen: set[frozenset[int]] = set()
        for r in allres:
            if r.core.gens not in seen:
                seen.add(r.core.gens)
                cores.append(r.core)
        consistent = all(r.spherical == cls.spherical for r in allres)
        if cls.spherical and allres:
            d0 = allres[0].depth
            consistent &= all(r.depth == d0 for r in allres)
            consistent &= all(
                permutation_equivalent(cores[0], c) is not None for c in cores[1:]
            )
            cls.is_simple = any(_is_whole_variable_ideal(c) for c in cores)
        cls.all_resolutions = allres
        cls.all_cores = cores
        cls.coco_consistent = consistent
    return cls


# ---------------------------------------------------------------------------
# Collapse witnesses


@dataclass(frozen=True)
class CollapsePlan:
    start: SimplicialComplex
    steps: tuple[CollapseStep, ...]
    end: SimplicialComplex


def _paba_steps(
    faces: frozenset[int], a_bit: int, b_bit: int, target: frozenset[int]
) -> list[tuple[int, int]]:
    """Collapse R(I_i) down to the suspension-by-(a,b) of its colon complex.

    Repeatedly removes the largest face outside the target together with its
    b-quotient; the target being downward closed makes that face maximal and
    the pair free.
    """
    cur = set(faces)
    out: list[tuple[int, int]] = []
    pending = sorted((m for m in faces if m not in target), key=lambda m: (popcount(m), m))
    while pending:
        sigma = pending.pop()
        if sigma not in cur:
            continue
        if not sigma & b_bit:
            raise InternalError("maximal face outside the suspension target misses b")
        tau = sigma & ~b_bit
        if tau in target or tau not in cur:
            raise InternalError("free-pair partner is unavailable")
        out.append((tau, sigma))
        cur.discard(sigma)
        cur.discard(tau)
    if cur != target:
        raise InternalError("suspension collapse did not reach its target")
    return out


def _lift_steps(
    steps: list[tuple[int, int]],
    lower_start: frozenset[int],
    x_bit: int,
    y_bit: int,
) -> tuple[list[tuple[int, int]], frozenset[int]]:
    """Lift a collapse sequence through the suspension by {1, x, y}.

    Case analysis on how x and y meet the removed pair; the impossible
    branches (which would change the Euler characteristic) are guarded."""
    lower = set(lower_start)
    out: list[tuple[int, int]] = []
    for tau, sigma in steps:
        lower.discard(tau)
        lower.discard(sigma)
        x_s = bool(sigma & x_bit)
        y_s = bool(sigma & y_bit)
        x_t = bool(tau & x_bit)
        y_t = bool(tau & y_bit)
        if x_s and y_s:
            pass  # sigma already lies in the suspension of the smaller complex
        elif not x_s and not y_s:
            out.extend(((tau | x_bit, sigma | x_bit), (tau | y_bit, sigma | y_bit), (tau, sigma)))
        elif x_s and not x_t and not y_s:
            out.extend(((tau | y_bit, sigma | y_bit), (tau, sigma)))
        elif y_s and not y_t and not x_s:
            out.extend(((tau | x_bit, sigma | x_bit), (tau, sigma)))
        elif x_t and not y_s:
            if (sigma & ~x_bit) | y_bit in lower:
                pass
            elif (tau & ~x_bit) | y_bit not in lower:
                out.append((tau | y_bit, sigma | y_bit))
            else:
                raise InternalError("collapse does not lift through the suspension")
        elif y_t and not x_s:
            if (sigma & ~y_bit) | x_bit in lower:
                pass
            elif (tau & ~y_bit) | x_bit not in lower:
                out.append((tau | x_bit, sigma | x_bit))
            else:
                raise InternalError("collapse does not lift through the suspension")
        else:  # pragma: no cover - the six cases are exhaustive
            raise InternalError("unclassified suspension-lift case")
    upper_start = frozenset(
        m | extra for m in lower_start for extra in (0, x_bit, y_bit)
    )
    return out, upper_start


def _cone_collapse_steps(faces: frozenset[int], apex_bit: int) -> list[tuple[int, int]]:
    """Collapse a cone onto its apex point {1, apex}: remove (tau, apex*tau)
    pairs by decreasing degree of tau."""
    taus = sorted(
        (m for m in faces if not m & apex_bit and m != 0),
        key=lambda m: (popcount(m), m),
        reverse=True,
    )
    return [(tau, tau | apex_bit) for tau in taus]


def witness_collapse_to_core(
    ideal: MonomialIdeal,
    resolution: Resolution | None = None,
    *,
    max_faces: int = FACE_BUDGET,
) -> CollapsePlan:
    """Explicit elementary-collapse sequence from R(I) to the resolution's
    target complex.

    For a resolution of domination steps the target is the join of the
    cross-polytope-like complex on the (a_i, b_i) pairs with R(core); each
    step's collapse is built constructively and lifted through the earlier
    suspensions.  When the resolution ends in a cone apex, the plan finishes
    by collapsing the final (cone) complex onto the apex point.
    """
    if resolution is None:
        resolution = find_resolution(ideal)
    if resolution.ideal != ideal:
        raise ValueError("resolution does not belong to this ideal")
    if any(s.is_cone_apex for s in resolution.steps[:-1]):
        raise ValueError("cone apex steps are only supported in final position")
    if ideal.is_unit:
        empty = realize(ideal, max_faces=max_faces)
        return CollapsePlan(empty, (), empty)
    universe = ideal.universe
    ideals = resolution.intermediate_ideals()
    complexes = [realize(i, max_faces=max_faces) for i in ideals]
    start = complexes[0]

    dom_steps = [s for s in resolution.steps if not s.is_cone_apex]
    pair_bits = [
        (universe.variable(s.a).mask, universe.variable(s.b).mask) for s in dom_steps
    ]
    plan: list[tuple[int, int]] = []
    for i, (a_bit, b_bit) in enumerate(pair_bits):
        link_faces = complexes[i].link(Monomial(universe, a_bit)).faces
        target = frozenset(
            m | extra for m in link_faces for extra in (0, a_bit, b_bit)
        )
        seg = _paba_steps(complexes[i].faces, a_bit, b_bit, target)
        lower_start = complexes[i].faces
        for x_bit, y_bit in reversed(pair_bits[:i]):
            seg, lower_start = _lift_steps(seg, lower_start, x_bit, y_bit)
        plan.extend(seg)

    sigma_cplx = cross_polytope_boundary(universe, [(s.a, s.b) for s in dom_steps])
    if resolution.has_cone_step:
        apex_bit = universe.variable(resolution.steps[-1].a).mask
        joined = join(sigma_cplx, complexes[len(dom_steps)], max_faces=max_faces)
        plan.extend(_cone_collapse_steps(joined.faces, apex_bit))
        end = SimplicialComplex(universe, frozenset((0, apex_bit)))
    else:
        end = join(sigma_cplx, complexes[-1], max_faces=max_faces)

    steps = tuple(
        CollapseStep(Monomial(universe, tau), Monomial(universe, sigma)) for tau, sigma in plan
    )
    return CollapsePlan(start, steps, end)


# ---------------------------------------------------------------------------
# Generator cycles


def generator_cycle(resolution: Resolution, *, max_faces: int = FACE_BUDGET) -> Chain:
    """The top-homology generator prod(a_i - b_i) of a simple spherical
    maximal resolution, as a chain over the interleaved variable order
    a_1 < b_1 < ... < a_r < b_r < rest.

    Requires all 2r pair variables distinct and the core generated by the
    whole variable set; every monomial in the expansion is checked to be a
    face of the reordered complex.
    """
    if not resolution.spherical or resolution.has_cone_step:
        raise ValueError("generator cycles exist only for spherical resolutions")
    if not _is_whole_variable_ideal(resolution.core):
        raise ValueError("generator cycle implemented only for whole-variable cores")
    pairs = resolution.pairs
    flat = [name for ab in pairs for name in ab]
    if len(set(flat)) != len(flat):
        raise ValueError("generator cycle needs pairwise distinct a_i, b_i")
    universe = resolution.ideal.universe.reordered(flat)
    cplx = realize(resolution.ideal.translate(universe), max_faces=max_faces)
    coeffs: dict[int, int] = {}
    for choice in itertools.product(*([0, 1],) * len(pairs)):
        mask = 0
        for (a, b), pick_b in zip(pairs, choice):
            mask |= universe.variable(b if pick_b else a).mask
        if mask not in cplx.faces:
            raise InternalError("expansion monomial is not a face")
        coeffs[mask] = -1 if sum(choice) & 1 else 1
    return Chain(universe, len(pairs) - 1, coeffs)
