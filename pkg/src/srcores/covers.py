"""Covering polynomials and the Euler characteristic from generators.

A cover of a monomial p by a set M is a subset of M with lcm exactly p; the
covering polynomial totals (-1)^|S| over covers, per target monomial.  It
equals the star product of the (1 - m) factors, where the star multiplies
monomials by taking lcms.  Two consequences are implemented as checks: the
multigraded Hilbert series identity for Z[X]/J, and the reduced Euler
characteristic of R(I) read off the signed covers of x_1...x_n.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from .complexes import FACE_BUDGET, realize
from .errors import BudgetExceededError
from .ideals import MonomialIdeal, MultigradedPolynomial, mask_to_exponents

STAR_FACTOR_BUDGET = 24

ExpVec = tuple[int, ...]


def _lcm_exp(e1: ExpVec, e2: ExpVec) -> ExpVec:
    return tuple(a if a >= b else b for a, b in zip(e1, e2))


def _divides_exp(e1: ExpVec, e2: ExpVec) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def covering_polynomial(
    nvars: int,
    monomials: Sequence[ExpVec],
    *,
    max_factors: int = STAR_FACTOR_BUDGET,
    cap: int | None = None,
) -> MultigradedPolynomial:
    """Star product of (1 - m) over M, evaluated left to right.

    ``cap`` clamps exponents (2 suffices when only divisibility against the
    all-ones target and the implicit squares matter); None keeps them exact.
    """
    if len(monomials) > max_factors:
        raise BudgetExceededError(
            f"{len(monomials)} star factors exceed the budget of {max_factors}"
        )
    zero = (0,) * nvars
    terms: dict[ExpVec, int] = {zero: 1}
    for mono in monomials:
        m = tuple(mono)
        if len(m) != nvars:
            raise ValueError("monomial exponent vector of wrong length")
        if cap is not None:
            m = tuple(min(e, cap) for e in m)
        nxt = dict(terms)
        for exp, coeff in terms.items():
            merged = _lcm_exp(exp, m)
            if cap is not None:
                merged = tuple(min(e, cap) for e in merged)
            val = nxt.get(merged, 0) - coeff
            if val:
                nxt[merged] = val
            else:
                nxt.pop(merged, None)
        terms = nxt
    return MultigradedPolynomial(nvars, terms)


def cover_coefficient(nvars: int, monomials: Iterable[ExpVec], p: ExpVec) -> int:
    """Sum of (-1)^|S| over subsets S of M with lcm(S) = p, by direct search.

    Subsets whose lcm already exceeds p in some exponent are pruned; members
    not dividing p can never participate.
    """
    p = tuple(p)
    if len(p) != nvars:
        raise ValueError("target exponent vector of wrong length")
    gens = [tuple(m) for m in monomials if _divides_exp(tuple(m), p)]
    square_free = all(e <= 1 for e in p) and all(e <= 1 for g in gens for e in g)
    if square_free:
        def to_mask(e: ExpVec) -> int:
            mask = 0
            for i, v in enumerate(e):
                if v:
                    mask |= 1 << i
            return mask

        return kernels.signed_cover_count([to_mask(g) for g in gens], to_mask(p))

    suffix: list[ExpVec] = [(0,) * nvars] * (len(gens) + 1)
    for i in range(len(gens) - 1, -1, -1):
        suffix[i] = _lcm_exp(suffix[i + 1], gens[i])

    def walk(i: int, cur: ExpVec) -> int:
        if _lcm_exp(cur, suffix[i]) != p:
            return 0
        if cur == p:
            return 1 if i == len(gens) else 0
        return walk(i + 1, cur) - walk(i + 1, _lcm_exp(cur, gens[i]))

    return walk(0, (0,) * nvars)


def hilbert_identity_check(ideal: MonomialIdeal, *, max_faces: int = FACE_BUDGET) -> bool:
    """Exact check of C_{B + squares} = F_Delta * prod(1 - x_s).

    The quotient by B plus all squares has the faces of R(I) as monomial
    basis, so its Hilbert series is the multigraded face polynomial; clearing
    denominators gives a polynomial identity over the integers.
    """
    n = len(ideal.universe)
    monomials = [mask_to_exponents(g, n) for g in ideal.sorted_gens()]
    monomials.extend(tuple(2 if i == s else 0 for i in range(n)) for s in range(n))
    lhs = covering_polynomial(n, monomials, max_factors=max(STAR_FACTOR_BUDGET, len(monomials)))
    rhs = realize(ideal, max_faces=max_faces).face_polynomial()
    for s in range(n):
        rhs = rhs.times_one_minus_var(s)
    return lhs == rhs


def euler_via_covers(ideal: MonomialIdeal) -> int:
    """Reduced Euler characteristic of R(I) as the signed cover count of the
    product of all variables by B, up to the sign (-1)^(n-1)."""
    n = len(ideal.universe)
    if ideal.is_unit:
        return 0  # R(unit) is the empty complex
    sign = 1 if (n - 1) % 2 == 0 else -1
    return sign * kernels.signed_cover_count(ideal.sorted_gens(), ideal.universe.full_mask)
