"""Square-free monomial arithmetic over a fixed, ordered variable universe.

A monomial is a subset of the universe's variables stored as a bit mask, so
divisibility, lcm and gcd are single word operations.  A monomial ideal is
stored by its minimal square-free generators (an antichain under
divisibility); the squares of all variables are implicitly present and never
stored.  The universe order is fixed for the lifetime of the universe: it
induces the signs of the simplicial boundary maps downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, UniverseMismatchError

MAX_VARIABLES = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VariableUniverse:
    """An ordered tuple of distinct variable names, at most 64 of them."""

    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables supported, got {len(names)}")
        index = {}
        for i, name in enumerate(names):
            if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
                raise ValueError(f"invalid variable name {name!r}")
            if name in index:
                raise ValueError(f"duplicate variable name {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in bits(mask))

    def monomial(self, *names: str) -> "Monomial":
        return Monomial(self, self.mask_of(names))

    @property
    def one(self) -> "Monomial":
        return Monomial(self, 0)

    def variable(self, name: str) -> "Monomial":
        return Monomial(self, 1 << self.index(name))

    def drop(self, mask: int) -> "VariableUniverse":
        """Universe without the variables in ``mask``, order preserved."""
        return VariableUniverse(tuple(n for i, n in enumerate(self.names) if not (mask >> i) & 1))

    def reordered(self, first: Sequence[str]) -> "VariableUniverse":
        """Same variables with ``first`` moved to the front in the given order."""
        head = list(first)
        if len(set(head)) != len(head):
            raise ValueError("reorder prefix contains repeats")
        for name in head:
            self.index(name)
        rest = [n for n in self.names if n not in set(head)]
        return VariableUniverse(tuple(head + rest))

    def translate_mask(self, mask: int, other: "VariableUniverse") -> int:
        """Re-encode ``mask`` over ``other`` (same names, any order)."""
        return other.mask_of(self.names_of(mask))

    def __repr__(self) -> str:
        return f"VariableUniverse({' '.join(self.names)})"


def make_universe(n: int, prefix: str = "x") -> VariableUniverse:
    """Universe with names ``x1 .. xn`` (handy for tests and examples)."""
    return VariableUniverse(tuple(f"{prefix}{i + 1}" for i in range(n)))


@dataclass(frozen=True)
class Monomial:
    """A square-free monomial: a subset of the universe's variables.

    The empty support is the monomial 1 (the empty face).
    """

    universe: VariableUniverse
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValueError(f"mask {self.mask:#x} outside universe of size {len(self.universe)}")

    @property
    def degree(self) -> int:
        return popcount(self.mask)

    @property
    def names(self) -> tuple[str, ...]:
        return self.universe.names_of(self.mask)

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def _check(self, other: "Monomial") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError("monomials over different universes")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return self.mask & other.mask == self.mask

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.universe, self.mask | other.mask)

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.universe, self.mask & other.mask)

    def quotient_by(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        self._check(other)
        return Monomial(self.universe, self.mask & ~other.mask)

    def __str__(self) -> str:
        return " ".join(self.names) if self.mask else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def divides(m: Monomial, m2: Monomial) -> bool:
    """True iff the support of ``m`` is contained in the support of ``m2``."""
    return m.divides(m2)


def lcm_set(universe: VariableUniverse, monomials: Iterable[Monomial]) -> Monomial:
    """Least common multiple; the empty collection yields 1."""
    mask = 0
    for m in monomials:
        if m.universe != universe:
            raise UniverseMismatchError("monomials over different universes")
        mask |= m.mask
    return Monomial(universe, mask)


def minimalize(masks: Iterable[int]) -> frozenset[int]:
    """Antichain of the given supports under divisibility (inclusion)."""
    pool = sorted(set(masks), key=popcount)
    kept: list[int] = []
    for m in pool:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal square-free generators B; squares of all variables implicit.

    The unit ideal is represented by generators = {1}; the zero ideal (only
    the squares) by an empty generator set.
    """

    universe: VariableUniverse
    gens: frozenset[int]

    @classmethod
    def from_masks(cls, universe: VariableUniverse, masks: Iterable[int]) -> "MonomialIdeal":
        return cls(universe, minimalize(masks))

    @classmethod
    def from_names(
        cls, universe: VariableUniverse, gens: Iterable[Iterable[str]]
    ) -> "MonomialIdeal":
        return cls.from_masks(universe, (universe.mask_of(g) for g in gens))

    def __post_init__(self):
        if self.gens != minimalize(self.gens):
            raise ValueError("generators are not a minimal antichain")

    @property
    def is_unit(self) -> bool:
        return 0 in self.gens

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(
            Monomial(self.universe, m) for m in sorted(self.gens, key=lambda m: (popcount(m), m))
        )

    def sorted_gens(self) -> list[int]:
        return sorted(self.gens, key=lambda m: (popcount(m), m))

    def _check(self, m: Monomial) -> int:
        if m.universe != self.universe:
            raise UniverseMismatchError("monomial over a different universe")
        return m.mask

    def contains(self, m: Monomial) -> bool:
        """Membership of a square-free monomial; only B matters since squares
        never divide a square-free monomial."""
        mask = self._check(m)
        return any(g & mask == g for g in self.gens)

    def contains_mask(self, mask: int) -> bool:
        return any(g & mask == g for g in self.gens)

    def colon(self, x: Monomial) -> "MonomialIdeal":
        """(I : x), minimally generated.

        Each generator g contributes g / gcd(g, x); each variable of x
        contributes itself (from its implicit square).
        """
        xm = self._check(x)
        masks = [g & ~xm for g in self.gens]
        masks.extend(1 << v for v in bits(xm))
        return MonomialIdeal.from_masks(self.universe, masks)

    def add(self, x: Monomial) -> "MonomialIdeal":
        """(I, x), minimally generated."""
        xm = self._check(x)
        return MonomialIdeal.from_masks(self.universe, [*self.gens, xm])

    def canonicalize(self) -> "MonomialIdeal":
        """Remove every variable appearing as a degree-1 generator.

        The associated simplicial complex is unchanged: a pure-variable
        generator only says that variable is not a vertex.  Idempotent.
        """
        drop = 0
        for g in self.gens:
            if popcount(g) == 1:
                drop |= g
        if not drop:
            return self
        universe = self.universe.drop(drop)
        keep_bits = [i for i in range(len(self.universe)) if not (drop >> i) & 1]
        remap = {old: new for new, old in enumerate(keep_bits)}

        def compress(mask: int) -> int:
            out = 0
            for b in bits(mask):
                out |= 1 << remap[b]
            return out

        gens = [compress(g) for g in self.gens if popcount(g) != 1]
        return MonomialIdeal.from_masks(universe, gens)

    def is_canonical(self) -> bool:
        return all(popcount(g) != 1 for g in self.gens)

    def translate(self, universe: VariableUniverse) -> "MonomialIdeal":
        """Same ideal re-encoded over a universe with the same names."""
        if set(universe.names) != set(self.universe.names):
            raise UniverseMismatchError("universes carry different variable names")
        return MonomialIdeal.from_masks(
            universe, (self.universe.translate_mask(g, universe) for g in self.gens)
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        parts = [str(g) for g in self.generators]
        return "(" + ", ".join(parts) + ")"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ``.ideal`` text format.

    First non-comment line is ``vars: v1 v2 ... vn``; each following
    non-comment line lists the variables of one square-free generator.
    Unknown variables and duplicate generator lines are rejected.
    """
    universe: VariableUniverse | None = None
    seen: set[int] = set()
    masks: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if universe is None:
            if not line.startswith("vars:"):
                raise ParseError(f"line {lineno}: expected 'vars:' header")
            names = line[len("vars:"):].split()
            if not names:
                raise ParseError(f"line {lineno}: empty variable list")
            try:
                universe = VariableUniverse(tuple(names))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            continue
        try:
            mask = universe.mask_of(line.split())
        except KeyError as exc:
            raise ParseError(f"line {lineno}: {exc.args[0]}") from None
        if mask in seen:
            raise ParseError(f"line {lineno}: duplicate generator")
        seen.add(mask)
        masks.append(mask)
    if universe is None:
        raise ParseError("missing 'vars:' header")
    return MonomialIdeal.from_masks(universe, masks)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(ideal.universe.names)]
    lines.extend(" ".join(ideal.universe.names_of(g)) for g in ideal.sorted_gens())
    return "\n".join(lines) + "\n"


class MultigradedPolynomial:
    """Integer polynomial graded by exponent vectors (exponents may exceed 1).

    Terms map exponent tuples to nonzero integer coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != nvars:
                    raise ValueError("exponent vector of wrong length")
                if coeff:
                    self.terms[tuple(exp)] = coeff

    @classmethod
    def constant(cls, nvars: int, value: int) -> "MultigradedPolynomial":
        return cls(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def from_mask(cls, nvars: int, mask: int, coeff: int = 1) -> "MultigradedPolynomial":
        return cls(nvars, {mask_to_exponents(mask, nvars): coeff})

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultigradedPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            val = out.get(exp, 0) + coeff
            if val:
                out[exp] = val
            else:
                out.pop(exp, None)
        return MultigradedPolynomial(self.nvars, out)

    def __neg__(self) -> "MultigradedPolynomial":
        return MultigradedPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        return self + (-other)

    def __mul__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                val = out.get(exp, 0) + c1 * c2
                if val:
                    out[exp] = val
                else:
                    out.pop(exp, None)
        return MultigradedPolynomial(self.nvars, out)

    def times_one_minus_var(self, s: int) -> "MultigradedPolynomial":
        """Multiply by (1 - x_s)."""
        out = dict(self.terms)
        for exp, coeff in self.terms.items():
            shifted = tuple(e + 1 if i == s else e for i, e in enumerate(exp))
            val = out.get(shifted, 0) - coeff
            if val:
                out[shifted] = val
            else:
                out.pop(shifted, None)
        return MultigradedPolynomial(self.nvars, out)

    def substitute_all(self, value: int) -> int:
        """Evaluate with every variable set to the same integer."""
        return sum(coeff * value ** sum(exp) for exp, coeff in self.terms.items())

    def __repr__(self) -> str:
        return f"MultigradedPolynomial({self.nvars}, {len(self.terms)} terms)"


def mask_to_exponents(mask: int, nvars: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(nvars))
