"""Simplicial complexes as explicit face sets of square-free monomials.

A complex is the set R(I) of monomials outside a square-free-plus-squares
monomial ideal, or any downward-closed set of masks over a universe.  The
empty complex (no faces at all) and the one-face complex {1} are distinct:
the former is the (-1)-dimensional simplex, the latter the (-1)-dimensional
sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import BudgetExceededError, InvalidCollapseError, UniverseMismatchError
from .ideals import (
    Monomial,
    MonomialIdeal,
    MultigradedPolynomial,
    VariableUniverse,
    bits,
    mask_to_exponents,
    popcount,
)

FACE_BUDGET = 1 << 20


class SimplicialComplex:
    """Immutable set of faces (support masks) over a variable universe."""

    __slots__ = ("universe", "faces")

    def __init__(self, universe: VariableUniverse, faces: frozenset[int]):
        self.universe = universe
        self.faces = faces

    @classmethod
    def from_masks(
        cls, universe: VariableUniverse, masks: Iterable[int], validate: bool = True
    ) -> "SimplicialComplex":
        faces = frozenset(masks)
        if validate:
            for m in faces:
                for v in bits(m):
                    if m ^ (1 << v) not in faces:
                        raise ValueError("face set is not downward closed")
        return cls(universe, faces)

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "SimplicialComplex":
        ms = list(monomials)
        if not ms:
            raise ValueError("cannot infer a universe from no monomials; use from_masks")
        universe = ms[0].universe
        for m in ms:
            if m.universe != universe:
                raise UniverseMismatchError("faces over different universes")
        return cls.from_masks(universe, (m.mask for m in ms))

    @property
    def is_empty(self) -> bool:
        return not self.faces

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def dim(self) -> int:
        """Simplicial dimension; -2 for the empty complex by convention."""
        if not self.faces:
            return -2
        return max(popcount(m) for m in self.faces) - 1

    def __contains__(self, m) -> bool:
        if isinstance(m, Monomial):
            if m.universe != self.universe:
                raise UniverseMismatchError("monomial over a different universe")
            return m.mask in self.faces
        return m in self.faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.universe == other.universe
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.faces))

    def sorted_masks(self) -> list[int]:
        return sorted(self.faces, key=lambda m: (popcount(m), m))

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.universe, m) for m in self.sorted_masks()]

    def vertices_mask(self) -> int:
        out = 0
        for m in self.faces:
            out |= m
        return out

    def link(self, x: Monomial) -> "SimplicialComplex":
        """(Delta : x) = faces m with x*m again a face (so m disjoint from x)."""
        xm = self._mask(x)
        faces = frozenset(m for m in self.faces if not m & xm and (m | xm) in self.faces)
        return SimplicialComplex(self.universe, faces)

    def deletion(self, x: Monomial) -> "SimplicialComplex":
        """(Delta, x) = faces not divisible by x."""
        xm = self._mask(x)
        if xm == 0:
            # 1 divides everything; deleting it leaves nothing
            return SimplicialComplex(self.universe, frozenset())
        faces = frozenset(m for m in self.faces if m & xm != xm)
        return SimplicialComplex(self.universe, faces)

    def _mask(self, x: Monomial) -> int:
        if x.universe != self.universe:
            raise UniverseMismatchError("monomial over a different universe")
        return x.mask

    def is_cone_with_apex(self, x: Monomial) -> bool:
        xm = self._mask(x)
        return all((m | xm) in self.faces for m in self.faces)

    def face_polynomial(self) -> MultigradedPolynomial:
        n = len(self.universe)
        return MultigradedPolynomial(n, {mask_to_exponents(m, n): 1 for m in self.faces})

    def face_count_polynomial(self) -> list[int]:
        """Coefficients of F(t) = sum over faces of t^degree."""
        if not self.faces:
            return [0]
        out = [0] * (self.dim + 2)
        for m in self.faces:
            out[popcount(m)] += 1
        return out

    def reduced_euler(self) -> int:
        """-F(-1); the (-1)-sphere {1} gives -1, the (-1)-simplex gives 0."""
        total = 0
        for m in self.faces:
            total += -1 if popcount(m) & 1 else 1
        return -total

    def dump(self) -> str:
        """One face per line, ``()`` for the empty face, sorted by
        (degree, lexicographic support)."""
        keyed = sorted(
            (popcount(m), self.universe.names_of(m)) for m in self.faces
        )
        lines = [" ".join(names) if names else "()" for _, names in keyed]
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.universe)} vars, {len(self.faces)} faces)"


def realize(ideal: MonomialIdeal, max_faces: int = FACE_BUDGET) -> SimplicialComplex:
    """Enumerate R(I): all square-free monomials outside the ideal."""
    faces = kernels.enumerate_faces(ideal.sorted_gens(), len(ideal.universe), max_faces)
    return SimplicialComplex(ideal.universe, frozenset(faces))


def join(*complexes: SimplicialComplex, max_faces: int = FACE_BUDGET) -> SimplicialComplex:
    """Faces are lcms of one face from each factor (vertex sets may overlap)."""
    if not complexes:
        raise ValueError("join of no complexes is undefined; pass the {1} complex")
    universe = complexes[0].universe
    for c in complexes:
        if c.universe != universe:
            raise UniverseMismatchError("join of complexes over different universes")
    acc = complexes[0].faces
    for c in complexes[1:]:
        nxt = {a | b for a in acc for b in c.faces}
        if len(nxt) > max_faces:
            raise BudgetExceededError(f"join exceeds {max_faces} faces")
        acc = nxt
    return SimplicialComplex(universe, frozenset(acc))


def point_complex(universe: VariableUniverse, masks: Iterable[int] = (0,)) -> SimplicialComplex:
    return SimplicialComplex(universe, frozenset(masks))


def cone(
    cplx: SimplicialComplex, x: Monomial, *, assert_coprime: bool = False
) -> SimplicialComplex:
    if assert_coprime and cplx.vertices_mask() & x.mask:
        raise ValueError("cone apex shares variables with the base complex")
    apex = SimplicialComplex(cplx.universe, frozenset((0, x.mask)))
    return join(cplx, apex)


def suspension(
    cplx: SimplicialComplex, x: Monomial, y: Monomial, *, assert_coprime: bool = False
) -> SimplicialComplex:
    if x.mask == y.mask:
        raise ValueError("suspension needs two distinct monomials")
    if assert_coprime and cplx.vertices_mask() & (x.mask | y.mask):
        raise ValueError("suspension points share variables with the base complex")
    pts = SimplicialComplex(cplx.universe, frozenset((0, x.mask, y.mask)))
    return join(cplx, pts)


def decompose_check(cplx: SimplicialComplex, x: Monomial) -> bool:
    """Delta equals the cone over the link united with the deletion."""
    rebuilt = cone(cplx.link(x), x).faces | cplx.deletion(x).faces
    if cplx.is_empty:
        return not rebuilt
    return rebuilt == cplx.faces


def cross_polytope_boundary(
    universe: VariableUniverse, pairs: Sequence[tuple[str, str]]
) -> SimplicialComplex:
    """Join of the two-point complexes {1, a_i, b_i}.

    Requires the a_i distinct and a_j != b_i for j <= i; repeated b's are
    allowed, producing hybrids between a cross-polytope boundary (all 2r
    variables distinct) and a simplex boundary.
    """
    a_seen: list[str] = []
    for i, (a, b) in enumerate(pairs):
        if a in a_seen:
            raise ValueError(f"repeated left variable {a!r}")
        if b in a_seen or b == a:
            raise ValueError(f"right variable {b!r} collides with an earlier left one")
        a_seen.append(a)
    factors = [
        SimplicialComplex(
            universe, frozenset((0, universe.variable(a).mask, universe.variable(b).mask))
        )
        for a, b in pairs
    ]
    if not factors:
        return point_complex(universe)
    return join(*factors)


@dataclass(frozen=True)
class CollapseStep:
    """A free pair: sigma = tau * a is the unique face properly containing tau."""

    tau: Monomial
    sigma: Monomial

    def __post_init__(self):
        if self.tau.universe != self.sigma.universe:
            raise UniverseMismatchError("collapse pair over different universes")

    def __str__(self) -> str:
        return f"({self.tau} < {self.sigma})"


def _superfaces(faces: frozenset[int], mask: int, n: int) -> list[int]:
    """One-variable extensions of ``mask`` inside ``faces``; by downward
    closure these detect all proper superfaces."""
    out = []
    for v in range(n):
        bit = 1 << v
        if not mask & bit and (mask | bit) in faces:
            out.append(mask | bit)
    return out


def apply_collapse(cplx: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    """Remove the free pair (tau, sigma); raises when the pair is not free."""
    if step.tau.universe != cplx.universe:
        raise UniverseMismatchError("collapse step over a different universe")
    tau, sigma = step.tau.mask, step.sigma.mask
    n = len(cplx.universe)
    if sigma not in cplx.faces:
        raise InvalidCollapseError(f"{step.sigma} is not a face")
    if tau & sigma != tau or popcount(sigma) != popcount(tau) + 1:
        raise InvalidCollapseError("sigma must cover tau by exactly one variable")
    if _superfaces(cplx.faces, sigma, n):
        raise InvalidCollapseError(f"{step.sigma} is not maximal")
    if _superfaces(cplx.faces, tau, n) != [sigma]:
        raise InvalidCollapseError(f"{step.sigma} is not the only face containing {step.tau}")
    return SimplicialComplex(cplx.universe, cplx.faces - {tau, sigma})


@dataclass(frozen=True)
class CollapseCheck:
    ok: bool
    failed_at: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_collapse_sequence(
    start: SimplicialComplex, steps: Sequence[CollapseStep], end: SimplicialComplex
) -> CollapseCheck:
    """Replay the steps; every one must be a valid elementary collapse and the
    final face set must equal ``end`` exactly."""
    cur = start
    for i, step in enumerate(steps):
        try:
            cur = apply_collapse(cur, step)
        except (InvalidCollapseError, UniverseMismatchError) as exc:
            return CollapseCheck(False, i, str(exc))
    if cur.faces != end.faces or cur.universe != end.universe:
        return CollapseCheck(False, len(steps), "sequence does not end at the target complex")
    return CollapseCheck(True)
