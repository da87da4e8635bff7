"""Immutable simple and bipartite graphs with exact metric and neighborhood queries.

Vertex labels are opaque nonempty text; no numeric parsing anywhere. Every
construction path validates and normalizes, so a graph value in hand always
satisfies its invariants: no loops, no duplicate edges, declared endpoints,
and (for bipartite graphs) disjoint parts with every edge crossing them.
All set-valued results come back in lexicographic label order so output is
byte-stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union


class GraphError(ValueError):
    """Invalid graph input: unknown labels, malformed edges, broken invariants."""


class BipartiteError(GraphError):
    """Bipartite validation failure carrying every violation found."""

    def __init__(self, violations: Iterable[str]):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class _UnreachableType:
    """Distance between vertices in different components.

    A singleton that compares strictly greater than every int, so max/min
    over mixed eccentricity values behave like an honest infinity without
    smuggling in a sentinel integer.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "unreachable"

    def __lt__(self, other):
        if isinstance(other, (int, _UnreachableType)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, _UnreachableType):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _UnreachableType):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _UnreachableType)):
            return True
        return NotImplemented


UNREACHABLE = _UnreachableType()

Distance = Union[int, _UnreachableType]


def _label_problems(labels: Iterable[str], where: str) -> tuple[list[str], set[str]]:
    problems: list[str] = []
    seen: set[str] = set()
    for v in labels:
        if not isinstance(v, str) or not v:
            problems.append(f"{where} label must be nonempty text: {v!r}")
        elif v in seen:
            problems.append(f"duplicate label in {where}: {v!r}")
        else:
            seen.add(v)
    return problems, seen


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph.

    Vertices are stored sorted; edges as (a, b) pairs with a < b, sorted.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        problems, seen = _label_problems(self.vertices, "vertex set")
        norm: set[tuple[str, str]] = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2:
                problems.append(f"edge must be a pair of labels: {e!r}")
                continue
            a, b = pair
            if a == b:
                problems.append(f"loop edge not allowed: ({a!r}, {b!r})")
                continue
            for x in (a, b):
                if x not in seen:
                    problems.append(f"edge endpoint is not a declared vertex: {x!r}")
            key = (a, b) if a < b else (b, a)
            if key in norm:
                problems.append(f"duplicate edge: {key!r}")
            norm.add(key)
        if problems:
            raise GraphError("; ".join(problems))
        object.__setattr__(self, "vertices", tuple(sorted(seen)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        return self.vertices

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise GraphError(f"unknown vertex label: {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with named parts: points (part_u) and circles (part_w).

    Part sequences keep their construction order; edges are normalized to
    (u, w) orientation and stored sorted. Construction rejects, with the full
    violation list, any edge inside a part, labels shared across parts, and
    duplicated labels or edges.
    """

    part_u: tuple[str, ...]
    part_w: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        violations: list[str] = []
        u_problems, u_seen = _label_problems(self.part_u, "part U")
        w_problems, w_seen = _label_problems(self.part_w, "part W")
        violations.extend(u_problems)
        violations.extend(w_problems)
        for shared in sorted(u_seen & w_seen):
            violations.append(f"label in both parts: {shared!r}")
        norm: set[tuple[str, str]] = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2:
                violations.append(f"edge must be a pair of labels: {e!r}")
                continue
            a, b = pair
            if a in u_seen and b in w_seen:
                key = (a, b)
            elif a in w_seen and b in u_seen:
                key = (b, a)
            elif a in u_seen and b in u_seen:
                violations.append(f"edge inside part U: ({a!r}, {b!r})")
                continue
            elif a in w_seen and b in w_seen:
                violations.append(f"edge inside part W: ({a!r}, {b!r})")
                continue
            else:
                for x in (a, b):
                    if x not in u_seen and x not in w_seen:
                        violations.append(f"edge endpoint is not a declared vertex: {x!r}")
                continue
            if key in norm:
                violations.append(f"duplicate edge: {key!r}")
            norm.add(key)
        if violations:
            raise BipartiteError(violations)
        object.__setattr__(self, "part_u", tuple(self.part_u))
        object.__setattr__(self, "part_w", tuple(self.part_w))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        return self.part_u + self.part_w

    @cached_property
    def u_set(self) -> frozenset[str]:
        return frozenset(self.part_u)

    @cached_property
    def w_set(self) -> frozenset[str]:
        return frozenset(self.part_w)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertex_labels}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise GraphError(f"unknown vertex label: {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


Graph = Union[SimpleGraph, BipartiteGraph]


@dataclass(frozen=True)
class MetricSummary:
    """Eccentricity of every vertex plus graph diameter, radius, connectivity."""

    eccentricities: dict[str, Distance]
    diameter: Distance
    radius: Distance
    connected: bool


def validate_bipartite(
    part_u: Iterable[str],
    part_w: Iterable[str],
    edges: Iterable[tuple[str, str]],
) -> BipartiteGraph:
    """Build a checked BipartiteGraph or raise BipartiteError listing every violation."""
    return BipartiteGraph(tuple(part_u), tuple(part_w), tuple(tuple(e) for e in edges))


def as_simple(g: Graph) -> SimpleGraph:
    """Forget the bipartition; identity on SimpleGraph inputs."""
    if isinstance(g, SimpleGraph):
        return g
    return SimpleGraph(g.vertex_labels, g.edges)


def common_neighbors(g: Graph, s: Iterable[str]) -> tuple[str, ...]:
    """Vertices adjacent to every member of s, in lexicographic order.

    The count of the result is the cn value used throughout the axiom checks.
    """
    members = sorted(set(s))
    if not members:
        raise GraphError("common_neighbors requires at least one vertex")
    result: frozenset[str] | None = None
    for v in members:
        ns = g.neighbors(v)
        result = ns if result is None else result & ns
    return tuple(sorted(result))


def _bfs(adjacency: dict[str, frozenset[str]], start: str) -> dict[str, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        d = dist[v]
        for u in adjacency[v]:
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def distance(g: Graph, a: str, b: str) -> Distance:
    """Hop count of a shortest path, UNREACHABLE when none exists."""
    g.neighbors(a)
    g.neighbors(b)
    return _bfs(g.adjacency, a).get(b, UNREACHABLE)


def metric_summary(g: Graph) -> MetricSummary:
    """Eccentricities, diameter, radius, and connectivity by all-sources BFS."""
    labels = g.vertex_labels
    if not labels:
        raise GraphError("metric summary of an empty graph")
    adjacency = g.adjacency
    n = len(labels)
    ecc: dict[str, Distance] = {}
    for v in sorted(labels):
        dist = _bfs(adjacency, v)
        ecc[v] = max(dist.values()) if len(dist) == n else UNREACHABLE
    return MetricSummary(
        eccentricities=ecc,
        diameter=max(ecc.values()),
        radius=min(ecc.values()),
        connected=not isinstance(ecc[sorted(labels)[0]], _UnreachableType),
    )


def disjoint_union(g1: Graph, g2: Graph) -> SimpleGraph:
    """Tagged union of two graphs; colliding labels get a copy-index suffix."""
    used = set(g1.vertex_labels)
    rename: dict[str, str] = {}
    for v in g2.vertex_labels:
        name = v
        k = 2
        while name in used:
            name = f"{v}#{k}"
            k += 1
        rename[v] = name
        used.add(name)
    vertices = tuple(g1.vertex_labels) + tuple(rename[v] for v in g2.vertex_labels)
    edges = tuple(g1.edges) + tuple((rename[a], rename[b]) for a, b in g2.edges)
    return SimpleGraph(vertices, edges)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Restriction to `keep`; result kind matches the input kind."""
    keep_set = set(keep)
    unknown = sorted(keep_set - set(g.vertex_labels))
    if unknown:
        raise GraphError(
            "unknown vertex labels: " + ", ".join(repr(v) for v in unknown)
        )
    kept_edges = tuple(e for e in g.edges if e[0] in keep_set and e[1] in keep_set)
    if isinstance(g, BipartiteGraph):
        return BipartiteGraph(
            tuple(v for v in g.part_u if v in keep_set),
            tuple(v for v in g.part_w if v in keep_set),
            kept_edges,
        )
    return SimpleGraph(tuple(v for v in g.vertices if v in keep_set), kept_edges)


def connected_components(g: Graph) -> tuple[tuple[str, ...], ...]:
    """Components as sorted label tuples, ordered by their smallest label."""
    adjacency = g.adjacency
    remaining = set(g.vertex_labels)
    out: list[tuple[str, ...]] = []
    while remaining:
        start = min(remaining)
        reached = set(_bfs(adjacency, start))
        out.append(tuple(sorted(reached)))
        remaining -= reached
    return tuple(out)


def all_pairs_distances(g: Graph) -> dict[str, dict[str, int]]:
    """BFS distance maps from every vertex; missing entries mean unreachable."""
    adjacency = g.adjacency
    return {v: _bfs(adjacency, v) for v in g.vertex_labels}
