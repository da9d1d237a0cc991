"""Exact reduced simplicial homology over the integers.

Chains of simplicial dimension k are spanned by the degree-(k+1) faces; the
empty face is a basis element in dimension -1 for every nonempty complex
(augmented convention), which makes the (-1)-sphere {1} come out with a
single Z in dimension -1 and the empty complex with nothing at all.

Homology ranks and torsion come from Smith normal form of the boundary
matrices, computed sparsely over arbitrary-precision integers with pivoting
on minimal absolute value; no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex
from .errors import UniverseMismatchError
from .ideals import Monomial, VariableUniverse, bits, popcount


@dataclass(frozen=True)
class Chain:
    """Integer combination of faces of one common degree.

    ``degree`` is the simplicial dimension: supports have degree+1 variables.
    """

    universe: VariableUniverse
    degree: int
    coeffs: dict

    def __post_init__(self):
        clean = {m: c for m, c in self.coeffs.items() if c}
        for m in clean:
            if popcount(m) != self.degree + 1:
                raise ValueError("chain mixes faces of different degrees")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_monomials(cls, coeffs: dict[Monomial, int], degree: int | None = None) -> "Chain":
        if not coeffs:
            raise ValueError("cannot infer universe/degree from an empty mapping")
        universe = next(iter(coeffs)).universe
        masks = {}
        for m, c in coeffs.items():
            if m.universe != universe:
                raise UniverseMismatchError("chain faces over different universes")
            masks[m.mask] = masks.get(m.mask, 0) + c
        if degree is None:
            degree = max(popcount(m) for m in masks) - 1
        return cls(universe, degree, masks)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> list[tuple[Monomial, int]]:
        return [
            (Monomial(self.universe, m), self.coeffs[m])
            for m in sorted(self.coeffs)
        ]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{mono}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def boundary(chain: Chain, cplx: SimplicialComplex) -> Chain:
    """Boundary with signs from the universe order; vertices map to the empty
    face (augmented complex).  Every chain face must lie in the complex."""
    if chain.universe != cplx.universe:
        raise UniverseMismatchError("chain over a different universe")
    out: dict[int, int] = {}
    for mask, coeff in chain.coeffs.items():
        if mask not in cplx.faces:
            raise ValueError(f"face {Monomial(chain.universe, mask)} is not in the complex")
        for i, v in enumerate(bits(mask)):
            child = mask ^ (1 << v)
            sign = -1 if i & 1 else 1
            val = out.get(child, 0) + sign * coeff
            if val:
                out[child] = val
            else:
                out.pop(child, None)
    return Chain(chain.universe, chain.degree - 1, out)


def is_cycle(chain: Chain, cplx: SimplicialComplex) -> bool:
    if chain.degree <= -1:
        # dimension -1 chains (multiples of the empty face) are always cycles
        for mask in chain.coeffs:
            if mask not in cplx.faces:
                raise ValueError("face is not in the complex")
        return True
    return boundary(chain, cplx).is_zero


# ---------------------------------------------------------------------------
# Smith normal form


def smith_invariant_factors(columns: list[list[tuple[int, int]]]) -> list[int]:
    """Invariant factors (positive, each dividing the next) of the integer
    matrix given by sparse columns of (row, value) pairs.

    Elimination keeps the matrix sparse: pivots prefer +-1 entries in short
    rows, falling back to the entry of globally minimal absolute value.  The
    resulting diagonal is normalized by pairwise gcd/lcm exchanges.
    """
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for j, col in enumerate(columns):
        for i, v in col:
            if not v:
                continue
            rows.setdefault(i, {})[j] = v  # each (row, col) listed at most once
            colrows.setdefault(j, set()).add(i)

    def axpy_row(dst: int, src: int, k: int) -> None:
        rdst = rows[dst]
        for j, w in rows[src].items():
            nv = rdst.get(j, 0) + k * w
            if nv:
                if j not in rdst:
                    colrows[j].add(dst)
                rdst[j] = nv
            elif j in rdst:
                del rdst[j]
                colrows[j].discard(dst)
        if not rdst:
            del rows[dst]

    diagonal: list[int] = []
    while rows:
        # shortest row, then its smallest-|value| entry (thinnest column on ties)
        best_r = min(rows, key=lambda r: (len(rows[r]), r))
        row = rows[best_r]
        best_c = min(row, key=lambda j: (abs(row[j]) != 1, len(colrows[j]), j))
        if abs(row[best_c]) != 1:
            # no unit available there: global minimal-absolute-value scan
            best = None
            for r, rw in rows.items():
                for j, v in rw.items():
                    key = (abs(v), len(colrows[j]), r, j)
                    if best is None or key < best[0]:
                        best = (key, r, j)
            best_r, best_c = best[1], best[2]
        r, c = best_r, best_c

        while True:
            v = rows[r][c]
            if v < 0:
                for j in list(rows[r]):
                    rows[r][j] = -rows[r][j]
                v = -v
            # clear the pivot column
            retry = False
            for i in [i for i in colrows[c] if i != r]:
                a = rows[i][c]
                q = a // v
                if q:
                    axpy_row(i, r, -q)
            leftover = [i for i in colrows[c] if i != r]
            if leftover:
                # remainders are strictly smaller than v: move the pivot there
                r = min(leftover, key=lambda i: (abs(rows[i][c]), i))
                continue
            # clear the pivot row; column c now holds only the pivot, so a
            # column operation touches row r alone
            for j in [j for j in rows[r] if j != c]:
                a = rows[r][j]
                q = a // v
                if q:
                    nv = a - q * v
                    if nv:
                        rows[r][j] = nv
                    else:
                        del rows[r][j]
                        colrows[j].discard(r)
            rest = [j for j in rows[r] if j != c]
            if rest:
                c = min(rest, key=lambda j: (abs(rows[r][j]), j))
                retry = True
            if not retry:
                break
        diagonal.append(rows[r][c])
        del rows[r]
        colrows[c].discard(r)
        if not colrows[c]:
            del colrows[c]

    # normalize: invariant factors form a divisibility chain
    ones = sum(1 for d in diagonal if abs(d) == 1)
    rest = sorted(abs(d) for d in diagonal if abs(d) != 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                if rest[j] % rest[i]:
                    g = gcd(rest[i], rest[j])
                    rest[i], rest[j] = g, rest[i] * rest[j] // g
                    changed = True
        rest.sort()
    return [1] * ones + rest


# ---------------------------------------------------------------------------
# Homology profiles


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


class HomologyProfile:
    """Per-degree free rank and torsion coefficients of reduced homology."""

    __slots__ = ("groups",)

    def __init__(self, groups: dict[int, HomologyGroup]):
        self.groups = {k: g for k, g in sorted(groups.items()) if not g.is_trivial}

    def rank(self, k: int) -> int:
        g = self.groups.get(k)
        return g.rank if g else 0

    def torsion(self, k: int) -> tuple[int, ...]:
        g = self.groups.get(k)
        return g.torsion if g else ()

    @property
    def is_trivial(self) -> bool:
        return not self.groups

    @property
    def h_free(self) -> int:
        return sum(g.rank for g in self.groups.values())

    @property
    def h_total(self) -> int:
        """Free rank plus one per torsion summand (the inclusive count)."""
        return sum(g.rank + len(g.torsion) for g in self.groups.values())

    @property
    def hd(self) -> int | None:
        """Largest degree with a nonzero group; None when all groups vanish."""
        if not self.groups:
            return None
        return max(self.groups)

    @property
    def euler(self) -> int:
        """Alternating sum of free ranks (equals the reduced Euler number)."""
        total = 0
        for k, g in self.groups.items():
            total += -g.rank if k & 1 else g.rank
        return total

    def sphere_degree(self) -> int | None:
        """k when the profile is exactly one free Z in degree k, else None."""
        if len(self.groups) == 1:
            (k, g), = self.groups.items()
            if g.rank == 1 and not g.torsion:
                return k
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologyProfile) and self.groups == other.groups

    def __repr__(self) -> str:
        if not self.groups:
            return "HomologyProfile(trivial)"
        parts = []
        for k, g in self.groups.items():
            torsion = "" if not g.torsion else " + " + " + ".join(f"Z/{d}" for d in g.torsion)
            parts.append(f"H~{k} = Z^{g.rank}{torsion}")
        return "HomologyProfile(" + ", ".join(parts) + ")"

    def to_json_entries(self) -> list[dict]:
        return [
            {"degree": k, "rank": g.rank, "torsion": list(g.torsion)}
            for k, g in self.groups.items()
        ]


class _ChainComplexData:
    """Bases and boundary matrices of the augmented chain complex."""

    def __init__(self, cplx: SimplicialComplex):
        self.cplx = cplx
        self.faces: dict[int, list[int]] = {}
        for mask in cplx.faces:
            self.faces.setdefault(popcount(mask) - 1, []).append(mask)
        for lst in self.faces.values():
            lst.sort()
        self.index = {
            k: {m: i for i, m in enumerate(lst)} for k, lst in self.faces.items()
        }
        self._inv: dict[int, list[int]] = {}

    @property
    def dims(self) -> list[int]:
        return sorted(self.faces)

    def n_cells(self, k: int) -> int:
        return len(self.faces.get(k, ()))

    def boundary_columns(self, k: int) -> list[list[tuple[int, int]]]:
        """Columns of the boundary map from dimension k to k-1."""
        if k <= -1 or k not in self.faces or (k - 1) not in self.faces:
            return []
        rowidx = self.index[k - 1]
        cols = []
        for mask in self.faces[k]:
            col = []
            for i, v in enumerate(bits(mask)):
                child = mask ^ (1 << v)
                col.append((rowidx[child], -1 if i & 1 else 1))
            cols.append(col)
        return cols

    def invariant_factors(self, k: int) -> list[int]:
        if k not in self._inv:
            self._inv[k] = smith_invariant_factors(self.boundary_columns(k))
        return self._inv[k]

    def rank(self, k: int) -> int:
        return len(self.invariant_factors(k))


def reduced_homology(cplx: SimplicialComplex) -> HomologyProfile:
    """Exact ranks and torsion of the reduced homology of the complex."""
    data = _ChainComplexData(cplx)
    groups = {}
    for k in data.dims:
        free = data.n_cells(k) - data.rank(k) - data.rank(k + 1)
        torsion = tuple(d for d in data.invariant_factors(k + 1) if d > 1)
        if free or torsion:
            groups[k] = HomologyGroup(free, torsion)
    return HomologyProfile(groups)


def generates_top_class(z: Chain, cplx: SimplicialComplex, k: int) -> bool:
    """True iff the class of z generates the unique Z in degree k.

    Requires the profile to be exactly one free Z in degree k (checked
    first); then [z] generates iff the columns of the degree-(k+1) boundary
    together with z span the full cycle lattice, i.e. the stacked matrix has
    rank equal to dim ker and all invariant factors 1.
    """
    profile = reduced_homology(cplx)
    if profile.groups != {k: HomologyGroup(1, ())}:
        raise ValueError(f"homology is not a single Z in degree {k}: {profile!r}")
    if z.degree != k:
        return False
    if not is_cycle(z, cplx):
        return False
    if z.is_zero:
        return False
    data = _ChainComplexData(cplx)
    cols = data.boundary_columns(k + 1)
    rowidx = data.index[k]
    zcol = [(rowidx[m], c) for m, c in z.coeffs.items()]
    inv = smith_invariant_factors(cols + [zcol])
    dim_ker = data.n_cells(k) - data.rank(k)
    return len(inv) == dim_ker and all(d == 1 for d in inv)


def h_and_hd(profile: HomologyProfile) -> tuple[int, int | None]:
    """Total homology mass (torsion summands included) and top degree."""
    return profile.h_total, profile.hd
