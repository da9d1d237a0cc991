# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: bitset loops over 64-bit masks.

Mirrors srcores._pykernels; the dispatcher srcores.kernels picks whichever
is available.  Masks fit in an unsigned 64-bit word (universe cap).
"""

from libc.stdlib cimport free, malloc

from .errors import BudgetExceededError

ctypedef unsigned long long u64


cdef int _popcount(u64 x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def enumerate_faces(gen_masks, int n, long max_faces):
    """All subsets of an n-variable universe divisible by no generator."""
    cdef list gens_list = list(gen_masks)
    cdef int ngens = len(gens_list)
    cdef int i, v, k, nv
    cdef u64 g, mask, cand
    cdef long total_refs = 0, pos = 0, nfaces = 1, top = 1
    cdef bint blocked
    cdef u64 *gens = NULL
    cdef int *var_start = NULL
    cdef u64 *var_gens = NULL
    cdef u64 *stack_mask = NULL
    cdef int *stack_next = NULL
    cdef u64 *out = NULL

    for i in range(ngens):
        if gens_list[i] == 0:
            return []
    if max_faces < 1:
        raise BudgetExceededError("face budget exhausted before the empty face")

    try:
        gens = <u64 *> malloc((ngens if ngens else 1) * sizeof(u64))
        var_start = <int *> malloc((n + 1) * sizeof(int))
        if gens == NULL or var_start == NULL:
            raise MemoryError()
        for i in range(ngens):
            gens[i] = <u64> gens_list[i]
            total_refs += _popcount(gens[i])
        # generators grouped by variable: only those containing v can start
        # dividing when v is added to a face
        var_gens = <u64 *> malloc((total_refs if total_refs else 1) * sizeof(u64))
        stack_mask = <u64 *> malloc((max_faces + 1) * sizeof(u64))
        stack_next = <int *> malloc((max_faces + 1) * sizeof(int))
        out = <u64 *> malloc((max_faces + 1) * sizeof(u64))
        if var_gens == NULL or stack_mask == NULL or stack_next == NULL or out == NULL:
            raise MemoryError()
        for v in range(n):
            var_start[v] = <int> pos
            for i in range(ngens):
                if (gens[i] >> v) & 1:
                    var_gens[pos] = gens[i]
                    pos += 1
        var_start[n] = <int> pos

        out[0] = 0
        stack_mask[0] = 0
        stack_next[0] = 0
        while top:
            top -= 1
            mask = stack_mask[top]
            nv = stack_next[top]
            for v in range(nv, n):
                cand = mask | (<u64> 1 << v)
                blocked = False
                for k in range(var_start[v], var_start[v + 1]):
                    g = var_gens[k]
                    if g & cand == g:
                        blocked = True
                        break
                if blocked:
                    continue
                if nfaces >= max_faces:
                    raise BudgetExceededError(f"more than {max_faces} faces")
                out[nfaces] = cand
                stack_mask[top] = cand
                stack_next[top] = v + 1
                top += 1
                nfaces += 1
        return [out[i] for i in range(nfaces)]
    finally:
        free(gens)
        free(var_start)
        free(var_gens)
        free(stack_mask)
        free(stack_next)
        free(out)


cdef long long _cover_walk(u64 *gens, u64 *suffix, int r, int i, u64 cur, u64 target) noexcept:
    if (cur | suffix[i]) != target:
        return 0
    if cur == target:
        # every remaining generator divides target, so extension signs cancel
        return 1 if i == r else 0
    return _cover_walk(gens, suffix, r, i + 1, cur, target) - \
        _cover_walk(gens, suffix, r, i + 1, cur | gens[i], target)


def signed_cover_count(gen_masks, target):
    """Sum of (-1)^|S| over subsets S of the generators with OR(S) == target."""
    cdef u64 t = <u64> target
    cdef list kept = [g for g in gen_masks if (<u64> g) & t == <u64> g]
    cdef int r = len(kept)
    cdef int i
    cdef u64 *gens = NULL
    cdef u64 *suffix = NULL
    try:
        gens = <u64 *> malloc((r if r else 1) * sizeof(u64))
        suffix = <u64 *> malloc((r + 1) * sizeof(u64))
        if gens == NULL or suffix == NULL:
            raise MemoryError()
        for i in range(r):
            gens[i] = <u64> kept[i]
        suffix[r] = 0
        for i in range(r - 1, -1, -1):
            suffix[i] = suffix[i + 1] | gens[i]
        return _cover_walk(gens, suffix, r, 0, 0, t)
    finally:
        free(gens)
        free(suffix)


cdef void _ecov_walk(u64 *edges, u64 *suffix, long long *counts, int r, int i,
                     u64 cur, int size, u64 full) noexcept:
    if (cur | suffix[i]) != full:
        return
    if i == r:
        counts[size] += 1
        return
    _ecov_walk(edges, suffix, counts, r, i + 1, cur, size, full)
    _ecov_walk(edges, suffix, counts, r, i + 1, cur | edges[i], size + 1, full)


def edge_cover_counts(edge_masks, full_mask):
    """Number of edge subsets of each size whose endpoints cover full_mask."""
    cdef list es = list(edge_masks)
    cdef int r = len(es)
    cdef int i
    cdef u64 full = <u64> full_mask
    cdef u64 *edges = NULL
    cdef u64 *suffix = NULL
    cdef long long *counts = NULL
    try:
        edges = <u64 *> malloc((r if r else 1) * sizeof(u64))
        suffix = <u64 *> malloc((r + 1) * sizeof(u64))
        counts = <long long *> malloc((r + 1) * sizeof(long long))
        if edges == NULL or suffix == NULL or counts == NULL:
            raise MemoryError()
        for i in range(r):
            edges[i] = <u64> es[i]
            counts[i] = 0
        counts[r] = 0
        suffix[r] = 0
        for i in range(r - 1, -1, -1):
            suffix[i] = suffix[i + 1] | edges[i]
        _ecov_walk(edges, suffix, counts, r, 0, 0, 0, full)
        return [counts[i] for i in range(r + 1)]
    finally:
        free(edges)
        free(suffix)
        free(counts)


def dominating_sign_sum(closed_masks):
    """Sum of (-1)^|D| over all dominating vertex sets D."""
    cdef list ms = list(closed_masks)
    cdef int n = len(ms)
    cdef int i
    cdef u64 d, limit
    cdef long long total = 0
    cdef bint ok
    cdef u64 *nb = NULL
    if n > 30:
        raise BudgetExceededError("dominating-set sign sum limited to 30 vertices")
    try:
        nb = <u64 *> malloc((n if n else 1) * sizeof(u64))
        if nb == NULL:
            raise MemoryError()
        for i in range(n):
            nb[i] = <u64> ms[i]
        limit = <u64> 1 << n
        d = 0
        while d < limit:
            ok = True
            for i in range(n):
                if not (nb[i] & d):
                    ok = False
                    break
            if ok:
                total += -1 if _popcount(d) & 1 else 1
            d += 1
        return total
    finally:
        free(nb)
