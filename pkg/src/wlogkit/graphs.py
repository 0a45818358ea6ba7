"""Finite simplicial graphs, triangles, spanning trees and the favourable tree search.

Vertices are identifier strings compared lexicographically. An undirected
edge is stored canonically as ``(u, v)`` with ``u < v``; that is also the
canonical orientation (origin = smaller symbol).
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import BudgetExceeded, InvalidInput

DEFAULT_TREE_BUDGET = 10**6

Edge = tuple[str, str]


def canonical_edge(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


class OrientedEdge(NamedTuple):
    origin: str
    terminus: str

    @property
    def underlying(self) -> Edge:
        return canonical_edge(self.origin, self.terminus)

    def reversed(self) -> "OrientedEdge":
        return OrientedEdge(self.terminus, self.origin)


class Triangle(NamedTuple):
    a: str
    b: str
    c: str

    @classmethod
    def of(cls, *vertices: str) -> "Triangle":
        if len(set(vertices)) != 3:
            raise InvalidInput(f"a triangle needs three distinct vertices, got {vertices}")
        return cls(*sorted(vertices))

    @property
    def edges(self) -> tuple[Edge, Edge, Edge]:
        """Canonical edges in sorted order: ab, ac, bc."""
        return ((self.a, self.b), (self.a, self.c), (self.b, self.c))

    def opposite(self, edge: Edge) -> str:
        (x,) = set(self) - set(edge)
        return x

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class SimplicialGraph:
    vertices: tuple[str, ...]
    edges: frozenset  # of canonical Edge

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput("duplicate vertex")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise InvalidInput(f"loop at {u!r}")
            if u > v:
                raise InvalidInput(f"edge ({u!r}, {v!r}) not in canonical order")
            if u not in vs or v not in vs:
                raise InvalidInput(f"edge ({u!r}, {v!r}) uses an undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "SimplicialGraph":
        """Build from arbitrary vertex and edge lists; repeated edges are an error."""
        vertices = tuple(vertices)
        seen = set()
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"loop at {u!r}")
            e = canonical_edge(u, v)
            if e in seen:
                raise InvalidInput(f"multi-edge {e}")
            seen.add(e)
        return cls(vertices, frozenset(seen))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[str, frozenset]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: str) -> list[str]:
        return sorted(self.adjacency[v])

    def has_edge(self, u: str, v: str) -> bool:
        return canonical_edge(u, v) in self.edges

    def induced(self, keep: Iterable[str]) -> "SimplicialGraph":
        keep = set(keep)
        return SimplicialGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return len(_reachable(self.adjacency, self.vertices[0])) == len(self.vertices)


def _reachable(adj, start) -> set:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def triangles(g: SimplicialGraph) -> list[Triangle]:
    out = []
    adj = g.adjacency
    for a, b in g.edge_list:
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                out.append(Triangle(a, b, c))
    out.sort()
    return out


def _check_triangle(g: SimplicialGraph, t: Triangle) -> None:
    if not all(e in g.edges for e in t.edges):
        raise InvalidInput(f"{t} is not a triangle of the graph")


def edge_set_complement(g: SimplicialGraph, t: Triangle) -> SimplicialGraph:
    """Induced subgraph on the vertices not isolated once t's edges are removed."""
    _check_triangle(g, t)
    removed = set(t.edges)
    degree = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        if (u, v) not in removed:
            degree[u] += 1
            degree[v] += 1
    return g.induced(v for v in g.vertices if degree[v] > 0)


def is_internal(g: SimplicialGraph, t: Triangle) -> bool:
    comp = edge_set_complement(g, t)
    common = set(t) & set(comp.vertices)
    # complement is induced, so 2 common vertices means exactly one common edge
    return len(common) not in (1, 2)


def is_strictly_internal(g: SimplicialGraph, t: Triangle) -> bool:
    _check_triangle(g, t)
    adj = g.adjacency
    return bool((adj[t.a] & adj[t.b] & adj[t.c]) - set(t))


def apexes(g: SimplicialGraph, t: Triangle) -> list[str]:
    """Vertices outside t adjacent to all three of its vertices."""
    adj = g.adjacency
    return sorted((adj[t.a] & adj[t.b] & adj[t.c]) - set(t))


@dataclass(frozen=True)
class TriangleClassification:
    tree_edge_count: int
    strictly_internal: bool
    internal: bool

    @property
    def favourable(self) -> bool:
        return self.tree_edge_count == 2 or self.strictly_internal


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree; ``edges`` keeps the caller's order, which names generators."""

    host: SimplicialGraph
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(canonical_edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        g = self.host
        if len(set(edges)) != len(edges):
            raise InvalidInput("repeated tree edge")
        for e in edges:
            if e not in g.edges:
                raise InvalidInput(f"tree edge {e} is not an edge of the graph")
        if len(edges) != len(g.vertices) - 1:
            raise InvalidInput(
                f"a spanning tree of a {len(g.vertices)}-vertex graph needs "
                f"{len(g.vertices) - 1} edges, got {len(edges)}"
            )
        if g.vertices and len(_reachable(self.adjacency, g.vertices[0])) != len(g.vertices):
            raise InvalidInput("tree edges do not span the graph")

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict[str, set]:
        adj = {v: set() for v in self.host.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


def tree_path(tree: SpanningTree, u: str, v: str) -> list[tuple[Edge, int]]:
    """Unique tree path from u to v as (canonical edge, +1 / -1) steps."""
    adj = tree.adjacency
    for x in (u, v):
        if x not in adj:
            raise InvalidInput(f"unknown vertex {x!r}")
    if u == v:
        return []
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    steps = []
    x = v
    while parent[x] is not None:
        p = parent[x]
        steps.append((canonical_edge(p, x), 1 if p < x else -1))
        x = p
    steps.reverse()
    return steps


def classify_triangle(g: SimplicialGraph, tree: SpanningTree, t: Triangle) -> TriangleClassification:
    if tree.host != g:
        raise InvalidInput("tree does not span this graph")
    _check_triangle(g, t)
    count = sum(e in tree.edge_set for e in t.edges)
    return TriangleClassification(count, is_strictly_internal(g, t), is_internal(g, t))


class FlagSkeleton(NamedTuple):
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    triangles: tuple[Triangle, ...]


def flag_two_skeleton(g: SimplicialGraph) -> FlagSkeleton:
    return FlagSkeleton(tuple(g.vertices), g.edge_list, tuple(triangles(g)))


# --- favourable spanning tree search ---------------------------------------


def _unfavourable_counter(g: SimplicialGraph):
    tris = triangles(g)
    index = {e: i for i, e in enumerate(g.edge_list)}
    # only triangles that are not strictly internal can be unfavourable
    masks = [
        [index[e] for e in t.edges] for t in tris if not is_strictly_internal(g, t)
    ]

    def count(chosen: set[int]) -> int:
        return sum(1 for m in masks if sum(i in chosen for i in m) != 2)

    return count


def unfavourable_count(g: SimplicialGraph, tree: SpanningTree) -> int:
    return sum(not classify_triangle(g, tree, t).favourable for t in triangles(g))


def default_tree_budget() -> int:
    raw = os.environ.get("WLOGKIT_TREE_BUDGET")
    if raw is None:
        return DEFAULT_TREE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"WLOGKIT_TREE_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InvalidInput("WLOGKIT_TREE_BUDGET must be positive")
    return value


def spanning_trees(g: SimplicialGraph) -> Iterable[tuple[Edge, ...]]:
    """All spanning trees as sorted edge tuples, in lexicographic order."""
    edges = g.edge_list
    n = len(g.vertices)
    if n == 0:
        return
    index = {v: i for i, v in enumerate(g.vertices)}
    need = n - 1

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def connectable(k, parent):
        # can the forest plus edges[k:] still connect every vertex?
        p = list(parent)
        roots = len({find(p, i) for i in range(n)})
        for u, v in edges[k:]:
            a, b = find(p, index[u]), find(p, index[v])
            if a != b:
                p[a] = b
                roots -= 1
                if roots == 1:
                    return True
        return roots == 1

    def rec(k, chosen, parent):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(edges) - k < need - len(chosen) or not connectable(k, parent):
            return
        u, v = edges[k]
        a, b = find(parent, index[u]), find(parent, index[v])
        if a != b:
            p = list(parent)
            p[a] = b
            chosen.append(edges[k])
            yield from rec(k + 1, chosen, p)
            chosen.pop()
        yield from rec(k + 1, chosen, parent)

    yield from rec(0, [], list(range(n)))


def _exact_tree(g: SimplicialGraph, budget: int) -> tuple[tuple[Edge, ...], int]:
    count = _unfavourable_counter(g)
    index = {e: i for i, e in enumerate(g.edge_list)}
    best = None
    best_count = None
    for seen, tree in enumerate(spanning_trees(g), start=1):
        if seen > budget:
            raise BudgetExceeded(f"more than {budget} spanning trees enumerated")
        c = count({index[e] for e in tree})
        # trees arrive in lexicographic order, so strict < keeps the smallest minimizer
        if best_count is None or c < best_count:
            best, best_count = tree, c
            if c == 0:
                break
    return best, best_count


def bfs_tree(g: SimplicialGraph) -> tuple[Edge, ...]:
    root = min(g.vertices)
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                edges.append(canonical_edge(x, y))
                queue.append(y)
    return tuple(sorted(edges))


def _greedy_tree(g: SimplicialGraph) -> tuple[tuple[Edge, ...], int]:
    count = _unfavourable_counter(g)
    index = {e: i for i, e in enumerate(g.edge_list)}
    tree = set(bfs_tree(g))
    current = count({index[e] for e in tree})
    improved = True
    while improved and current > 0:
        improved = False
        for e in g.edge_list:
            if e in tree:
                continue
            host = SpanningTree(g, tuple(sorted(tree)))
            cycle = [edge for edge, _ in tree_path(host, e[0], e[1])]
            for f in sorted(cycle):
                candidate = (tree - {f}) | {e}
                c = count({index[x] for x in candidate})
                if c < current:
                    tree, current, improved = candidate, c, True
                    break
            if improved:
                break
    return tuple(sorted(tree)), current


def favourable_spanning_tree(
    g: SimplicialGraph, mode: str = "exact", budget: int | None = None
) -> tuple[SpanningTree, int]:
    """A spanning tree minimizing the number of unfavourable triangles.

    ``exact`` enumerates every spanning tree and breaks ties by the smallest
    sorted edge list; ``greedy`` hill-climbs on single edge swaps from the
    breadth-first tree rooted at the least vertex.
    """
    if not g.vertices or not g.is_connected():
        raise InvalidInput("favourable spanning tree needs a non-empty connected graph")
    if budget is None:
        budget = default_tree_budget()
    if budget <= 0:
        raise InvalidInput("budget must be positive")
    if mode == "exact":
        edges, c = _exact_tree(g, budget)
    elif mode == "greedy":
        edges, c = _greedy_tree(g)
    else:
        raise InvalidInput(f"unknown tree mode {mode!r}")
    return SpanningTree(g, edges), c


def complete_graph(n: int, prefix: str = "a") -> SimplicialGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimplicialGraph.build(vs, itertools.combinations(vs, 2))
