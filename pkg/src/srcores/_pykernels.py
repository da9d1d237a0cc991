"""Pure-Python reference implementations of the enumeration kernels.

Same contracts as the compiled module ``srcores._kernels``; selected at
import time by :mod:`srcores.kernels` when the extension is unavailable or
disabled.  All masks are plain ints with at most 64 bits.
"""

from __future__ import annotations

from .errors import BudgetExceededError


def enumerate_faces(gen_masks, n, max_faces):
    """All subsets of an n-variable universe divisible by no generator.

    Depth-first by ascending variable index, so each face is reached once
    from its lexicographic prefix; children of non-faces are never visited
    because the face set is downward closed.  Raises when the face count
    would exceed ``max_faces``.
    """
    gens = list(gen_masks)
    if any(g == 0 for g in gens):
        return []
    if max_faces < 1:
        raise BudgetExceededError("face budget exhausted before the empty face")
    # Only generators containing v can start dividing when v is added.
    gens_by_var = [[] for _ in range(n)]
    for g in gens:
        m = g
        while m:
            low = m & -m
            gens_by_var[low.bit_length() - 1].append(g)
            m ^= low
    faces = [0]
    stack = [(0, 0)]
    while stack:
        mask, start = stack.pop()
        for v in range(start, n):
            cand = mask | (1 << v)
            if any(g & cand == g for g in gens_by_var[v]):
                continue
            if len(faces) >= max_faces:
                raise BudgetExceededError(f"more than {max_faces} faces")
            faces.append(cand)
            stack.append((cand, v + 1))
    return faces


def signed_cover_count(gen_masks, target):
    """Sum of (-1)^|S| over subsets S of the generators with OR(S) == target."""
    gens = [g for g in gen_masks if g & target == g]
    r = len(gens)
    suffix = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] | gens[i]

    def walk(i, cur):
        if cur | suffix[i] != target:
            return 0
        if cur == target:
            # Every remaining generator divides target, so all extensions
            # still cover it and their signs cancel pairwise.
            return 1 if i == r else 0
        return walk(i + 1, cur) - walk(i + 1, cur | gens[i])

    return walk(0, 0)


def edge_cover_counts(edge_masks, full_mask):
    """Number of edge subsets of each size whose endpoints cover full_mask.

    Returns a list c with c[k] = number of covering subsets of size k.
    """
    edges = list(edge_masks)
    r = len(edges)
    suffix = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] | edges[i]
    counts = [0] * (r + 1)

    def walk(i, cur, size):
        if cur | suffix[i] != full_mask:
            return
        if i == r:
            counts[size] += 1
            return
        walk(i + 1, cur, size)
        walk(i + 1, cur | edges[i], size + 1)

    walk(0, 0, 0)
    return counts


def dominating_sign_sum(closed_masks):
    """Sum of (-1)^|D| over all dominating vertex sets D.

    ``closed_masks[v]`` is the closed neighborhood of vertex v; D dominates
    when every closed neighborhood meets D.
    """
    n = len(closed_masks)
    if n > 30:
        raise BudgetExceededError("dominating-set sign sum limited to 30 vertices")
    total = 0
    for d in range(1 << n):
        for nb in closed_masks:
            if not nb & d:
                break
        else:
            total += -1 if bin(d).count("1") & 1 else 1
    return total
