"""Finite simple graphs, their edge and star ideals, and exact invariants.

Vertices are the variables of a universe (order = declaration order).  The
invariant searches are exact branch-and-bound over vertex and edge subsets;
nothing heuristic is ever reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .errors import BudgetExceededError, ParseError
from .ideals import MonomialIdeal, VariableUniverse, bits, popcount

INVARIANT_VERTEX_CAP = 20
EDGE_COVER_CAP = 24


class Graph:
    """Undirected graph without loops or multiple edges."""

    __slots__ = ("universe", "edges", "_adj")

    def __init__(self, universe: VariableUniverse, edges: frozenset[int]):
        self.universe = universe
        for e in edges:
            if popcount(e) != 2:
                raise ValueError("an edge joins exactly two distinct vertices")
            if e > universe.full_mask:
                raise ValueError("edge endpoint outside the vertex set")
        self.edges = edges
        adj = [0] * len(universe)
        for e in edges:
            u, v = bits(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = adj

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str]],
        vertices: Sequence[str] | None = None,
    ) -> "Graph":
        """Vertex order: declaration order when given, else first appearance."""
        edge_list = [(u, v) for u, v in edges]
        if vertices is None:
            seen: list[str] = []
            for u, v in edge_list:
                for w in (u, v):
                    if w not in seen:
                        seen.append(w)
            vertices = seen
        universe = VariableUniverse(tuple(vertices))
        masks = set()
        for u, v in edge_list:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            masks.add(universe.mask_of((u, v)))
        return cls(universe, frozenset(masks))

    @property
    def n_vertices(self) -> int:
        return len(self.universe)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_pairs(self) -> list[tuple[str, str]]:
        out = []
        for e in sorted(self.edges):
            u, v = bits(e)
            out.append((self.universe.names[u], self.universe.names[v]))
        return out

    def adjacency(self, v: int) -> int:
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def closed_neighborhood(self, names: Iterable[str]) -> tuple[str, ...]:
        """N[S] = S together with every neighbor of a member of S."""
        mask = self.universe.mask_of(names)
        out = mask
        for v in bits(mask):
            out |= self._adj[v]
        return self.universe.names_of(out)

    def delete(self, names: Iterable[str]) -> "Graph":
        """Induced subgraph on the complement of the given vertex set."""
        drop = self.universe.mask_of(names)
        universe = self.universe.drop(drop)
        keep = [i for i in range(len(self.universe)) if not (drop >> i) & 1]
        remap = {old: new for new, old in enumerate(keep)}
        masks = set()
        for e in self.edges:
            if e & drop:
                continue
            u, v = bits(e)
            masks.add((1 << remap[u]) | (1 << remap[v]))
        return Graph(universe, frozenset(masks))

    def isolated_mask(self) -> int:
        out = 0
        for v in range(len(self.universe)):
            if not self._adj[v]:
                out |= 1 << v
        return out

    def __repr__(self) -> str:
        return f"Graph({self.n_vertices} vertices, {self.n_edges} edges)"


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """Generated by the products of edge endpoints; R of it is the
    independence complex."""
    return MonomialIdeal.from_masks(graph.universe, graph.edges)


def star_ideal(graph: Graph) -> MonomialIdeal:
    """Generated by the closed-neighborhood products, minimalized; R of it is
    the dominance complex (faces = complements of dominating sets)."""
    masks = [graph.closed_mask(v) for v in range(graph.n_vertices)]
    return MonomialIdeal.from_masks(graph.universe, masks)


# ---------------------------------------------------------------------------
# Exact invariants


@dataclass(frozen=True)
class GraphInvariants:
    gamma: int
    i: int
    alpha0: int
    alpha1: int | None
    beta1: int

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "i": self.i,
            "alpha0": self.alpha0,
            "alpha1": self.alpha1,
            "beta1": self.beta1,
        }


def _max_independent(adj: Sequence[int], mask: int) -> int:
    @lru_cache(maxsize=None)
    def go(m: int) -> int:
        v = -1
        for u in bits(m):
            if adj[u] & m:
                v = u
                break
        if v < 0:
            return popcount(m)
        return max(go(m & ~(1 << v)), 1 + go(m & ~((adj[v] | (1 << v)) & m) & ~(1 << v)))

    result = go(mask)
    go.cache_clear()
    return result


def _min_dominating(graph: Graph) -> int:
    n = graph.n_vertices
    full = graph.universe.full_mask
    closed = [graph.closed_mask(v) for v in range(n)]
    best = n

    def walk(covered: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if covered == full:
            best = size
            return
        v = (~covered & full)
        v = (v & -v).bit_length() - 1  # first uncovered vertex
        for u in bits(closed[v]):
            walk(covered | closed[u], size + 1)

    walk(0, 0)
    return best


def _min_independent_dominating(graph: Graph) -> int:
    n = graph.n_vertices
    full = graph.universe.full_mask
    closed = [graph.closed_mask(v) for v in range(n)]
    best = n + 1

    def walk(chosen: int, covered: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if covered == full:
            best = size
            return
        v = (~covered & full)
        v = (v & -v).bit_length() - 1
        for u in bits(closed[v]):
            # u must stay independent from what was chosen
            if closed[u] & chosen:
                continue
            walk(chosen | (1 << u), covered | closed[u], size + 1)

    walk(0, 0, 0)
    if best > n:
        raise RuntimeError("no independent dominating set found")  # unreachable
    return best


def _max_matching(graph: Graph) -> int:
    adj = graph._adj

    @lru_cache(maxsize=None)
    def go(avail: int) -> int:
        v = -1
        for u in bits(avail):
            if adj[u] & avail:
                v = u
                break
        if v < 0:
            return 0
        rest = avail & ~(1 << v)
        best = go(rest)  # leave v unmatched
        for u in bits(adj[v] & avail):
            best = max(best, 1 + go(rest & ~(1 << u)))
        return best

    result = go(graph.universe.full_mask)
    go.cache_clear()
    return result


def _min_edge_cover(graph: Graph) -> int | None:
    if graph.isolated_mask() or graph.n_vertices == 0:
        return None if graph.n_vertices else 0
    full = graph.universe.full_mask
    edges = sorted(graph.edges)
    incident = [[e for e in edges if e & (1 << v)] for v in range(graph.n_vertices)]
    best = len(edges)

    def walk(covered: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if covered == full:
            best = size
            return
        v = (~covered & full)
        v = (v & -v).bit_length() - 1
        for e in incident[v]:
            walk(covered | e, size + 1)

    walk(0, 0)
    return best


def invariants(graph: Graph, *, vertex_cap: int = INVARIANT_VERTEX_CAP) -> GraphInvariants:
    """Domination, independent domination, vertex cover, edge cover and
    matching numbers by exact search; the edge cover number is None when an
    isolated vertex makes it undefined."""
    if graph.n_vertices > vertex_cap:
        raise BudgetExceededError(
            f"invariant search capped at {vertex_cap} vertices, got {graph.n_vertices}"
        )
    full = graph.universe.full_mask
    alpha = _max_independent(graph._adj, full)
    return GraphInvariants(
        gamma=_min_dominating(graph),
        i=_min_independent_dominating(graph),
        alpha0=graph.n_vertices - alpha,
        alpha1=_min_edge_cover(graph),
        beta1=_max_matching(graph),
    )


def edge_cover_polynomial(graph: Graph, *, edge_cap: int = EDGE_COVER_CAP) -> list[int]:
    """Coefficient k counts the edge covers of size k (all-zero when an
    isolated vertex rules covers out)."""
    if graph.n_edges > edge_cap:
        raise BudgetExceededError(
            f"edge cover enumeration capped at {edge_cap} edges, got {graph.n_edges}"
        )
    if graph.n_vertices == 0:
        return [1]  # the empty edge set covers the empty vertex set
    return kernels.edge_cover_counts(sorted(graph.edges), graph.universe.full_mask)


def dominating_sign_sum(graph: Graph) -> int:
    """Sum of (-1)^|D| over the dominating sets, by direct enumeration."""
    closed = [graph.closed_mask(v) for v in range(graph.n_vertices)]
    return kernels.dominating_sign_sum(closed)


def dominating_masks(graph: Graph) -> list[int]:
    """All dominating vertex sets, as masks (exhaustive; small graphs only)."""
    n = graph.n_vertices
    if n > 20:
        raise BudgetExceededError("exhaustive dominating-set listing capped at 20 vertices")
    closed = [graph.closed_mask(v) for v in range(n)]
    out = []
    for d in range(1 << n):
        if all(nb & d for nb in closed):
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# Structure


@dataclass(frozen=True)
class GraphStructure:
    components: int
    h1: int
    is_forest: bool
    cycle: tuple[str, ...] | None

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "h1": self.h1,
            "is_forest": self.is_forest,
            "cycle": list(self.cycle) if self.cycle else None,
        }


def structure(graph: Graph) -> GraphStructure:
    """Component count, first Betti number h1 = components + |E| - |V|, and
    the unique cycle when h1 = 1."""
    n = graph.n_vertices
    seen = 0
    components = 0
    for start in range(n):
        if (seen >> start) & 1:
            continue
        components += 1
        stack = [start]
        seen |= 1 << start
        while stack:
            v = stack.pop()
            for u in bits(graph._adj[v]):
                if not (seen >> u) & 1:
                    seen |= 1 << u
                    stack.append(u)
    h1 = components + graph.n_edges - n
    cycle = _unique_cycle(graph) if h1 == 1 else None
    return GraphStructure(components, h1, h1 == 0, cycle)


def _unique_cycle(graph: Graph) -> tuple[str, ...]:
    n = graph.n_vertices
    parent = [-1] * n
    state = [0] * n
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, -1)]
        while stack:
            v, par = stack.pop()
            if state[v]:
                continue
            state[v] = 1
            parent[v] = par
            for u in bits(graph._adj[v]):
                if u == par:
                    continue
                if state[u]:
                    # back edge closes the unique cycle: walk both ancestries
                    path_v = [v]
                    while path_v[-1] != -1:
                        path_v.append(parent[path_v[-1]])
                    anc = set(path_v)
                    w = u
                    path_u = [w]
                    while w not in anc:
                        w = parent[w]
                        path_u.append(w)
                    meet = path_u[-1]
                    cycle = path_u[:-1] + path_v[: path_v.index(meet) + 1]
                    names = graph.universe.names
                    return tuple(names[x] for x in cycle)
                stack.append((u, v))
    raise ValueError("graph has no cycle")


# ---------------------------------------------------------------------------
# Text format


def parse_graph(text: str) -> Graph:
    """Parse the ``.graph`` format: optional ``vertices:`` line (required to
    declare isolated vertices), then one ``u v`` edge per line."""
    vertices: list[str] | None = None
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first and line.startswith("vertices:"):
            vertices = line[len("vertices:"):].split()
            first = False
            continue
        first = False
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        u, v = parts
        if u == v:
            raise ParseError(f"line {lineno}: loop at {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge")
        seen.add(key)
        edges.append((u, v))
    try:
        graph = Graph.from_edges(edges, vertices)
    except (ValueError, KeyError) as exc:
        raise ParseError(exc.args[0] if exc.args else str(exc)) from None
    return graph


def format_graph(graph: Graph) -> str:
    lines = ["vertices: " + " ".join(graph.universe.names)]
    lines.extend(f"{u} {v}" for u, v in graph.edge_pairs())
    return "\n".join(lines) + "\n"
