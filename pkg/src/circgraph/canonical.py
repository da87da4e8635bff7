"""Canonical labeling and isomorphism certificates at desk scale.

The labeling follows refinement-with-individualization: colors are refined
until stable by the signature (own color, sorted multiset of neighbor
colors); the smallest non-singleton color class is the branch target; each
branch individualizes one class member and refines again; a discrete
coloring is a candidate vertex order whose upper-triangular adjacency bit
string is the leaf value, and the lexicographically least leaf value wins.

Class renumbering is order-preserving throughout (a class's children occupy
its slot), so in part-respecting mode all point vertices come before all
circle vertices in the canonical order; two bipartite graphs are then
part-isomorphic exactly when (n, u_size, bits) coincide.

Branches are pruned with automorphisms discovered from equal-value leaves:
a candidate in the same orbit as an already explored sibling, under the
subgroup fixing the individualized prefix pointwise, contributes no new
leaf values. The pruning never changes the winning leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

from .graphs import BipartiteGraph, Graph, GraphError


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    """Relabeling-invariant encoding; equal keys decide isomorphism.

    `relabeling` maps each original label to its canonical position, and
    reading the input adjacency in that order reproduces `bits` exactly.
    `u_size` is the point-part size in part-respecting mode, else None.
    """

    n: int
    u_size: Optional[int]
    bits: str
    relabeling: Mapping[str, int]

    @property
    def key(self) -> tuple[int, Optional[int], str]:
        return (self.n, self.u_size, self.bits)


@dataclass(frozen=True, eq=False)
class IsoCertificate:
    """Isomorphism decision; the mapping is present iff isomorphic.

    Any returned mapping has been replayed edge-by-edge against both graphs
    before this object is handed out.
    """

    isomorphic: bool
    mapping: Optional[Mapping[str, str]] = None


def _refine(n: int, adj: list[set[int]], colors: list[int]) -> list[int]:
    # Stable point: every class is determined by (color, neighbor colors).
    # New ids follow signature order, whose first component is the old id,
    # so renumbering preserves the existing class order.
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    # v takes its class's slot; former classmates shift one slot down.
    c = colors[v]
    out = []
    for u, cu in enumerate(colors):
        if cu < c or (u == v and cu == c):
            out.append(cu)
        elif cu == c:
            out.append(c + 1)
        else:
            out.append(cu + 1)
    return out


class _SearchState:
    __slots__ = ("best_bits", "best_pos2v", "gens", "gen_seen", "identity")

    def __init__(self, n: int):
        self.best_bits: str | None = None
        self.best_pos2v: list[int] = []
        self.gens: list[tuple[int, ...]] = []
        self.gen_seen: set[tuple[int, ...]] = set()
        self.identity = tuple(range(n))


def _leaf_bits(n: int, adj: list[set[int]], pos2v: list[int]) -> str:
    parts = []
    for i in range(n):
        row = adj[pos2v[i]]
        parts.append("".join("1" if pos2v[j] in row else "0" for j in range(i + 1, n)))
    return "".join(parts)


def _in_explored_orbit(
    n: int,
    gens: list[tuple[int, ...]],
    prefix: tuple[int, ...],
    explored: list[int],
    v: int,
) -> bool:
    usable = [p for p in gens if all(p[x] == x for x in prefix)]
    if not usable:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for p in usable:
        for a in range(n):
            ra, rb = find(a), find(p[a])
            if ra != rb:
                parent[ra] = rb
    rv = find(v)
    return any(find(u) == rv for u in explored)


def _search(
    n: int,
    adj: list[set[int]],
    colors: list[int],
    prefix: tuple[int, ...],
    state: _SearchState,
) -> None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target: list[int] | None = None
    target_color = -1
    for c in sorted(cells):
        members = cells[c]
        if len(members) >= 2 and (
            target is None or (len(members), c) < (len(target), target_color)
        ):
            target, target_color = members, c
    if target is None:
        pos2v = [0] * n
        for v, c in enumerate(colors):
            pos2v[c] = v
        bits = _leaf_bits(n, adj, pos2v)
        if state.best_bits is None or bits < state.best_bits:
            state.best_bits = bits
            state.best_pos2v = pos2v
        elif bits == state.best_bits:
            perm = [0] * n
            for i in range(n):
                perm[state.best_pos2v[i]] = pos2v[i]
            t = tuple(perm)
            if t != state.identity and t not in state.gen_seen and len(state.gens) < 64:
                state.gens.append(t)
                state.gen_seen.add(t)
        return
    explored: list[int] = []
    for v in target:
        if explored and _in_explored_orbit(n, state.gens, prefix, explored, v):
            continue
        _search(n, adj, _refine(n, adj, _individualize(colors, v)), prefix + (v,), state)
        explored.append(v)


@lru_cache(maxsize=512)
def _canonical_cached(g: Graph, respect_parts: bool) -> CanonicalForm:
    labels = sorted(g.vertex_labels)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in g.edges:
        ia, ib = index[a], index[b]
        adj[ia].add(ib)
        adj[ib].add(ia)
    if respect_parts:
        u_set = set(g.part_u)
        init = [0 if lab in u_set else 1 for lab in labels]
        u_size: int | None = len(g.part_u)
    else:
        init = [0] * n
        u_size = None
    if n == 0:
        return CanonicalForm(0, u_size, "", {})
    state = _SearchState(n)
    _search(n, adj, _refine(n, adj, init), (), state)
    pos2v = state.best_pos2v
    relabeling = {labels[pos2v[i]]: i for i in range(n)}
    return CanonicalForm(n, u_size, state.best_bits or "", relabeling)


def canonical_form(g: Graph, respect_parts: bool = False) -> CanonicalForm:
    """Canonical form of a graph, invariant under relabeling.

    With respect_parts=True the input must be bipartite and only
    part-preserving relabelings are factored out; point vertices occupy the
    leading canonical positions.
    """
    if respect_parts and not isinstance(g, BipartiteGraph):
        raise GraphError("part-respecting canonical form requires a bipartite graph")
    return _canonical_cached(g, respect_parts)


def _verify_mapping(
    g1: Graph, g2: Graph, mapping: Mapping[str, str], respect_parts: bool
) -> None:
    if sorted(mapping) != sorted(g1.vertex_labels):
        raise RuntimeError("isomorphism mapping does not cover the first vertex set")
    if sorted(mapping.values()) != sorted(g2.vertex_labels):
        raise RuntimeError("isomorphism mapping is not onto the second vertex set")
    mapped = {frozenset((mapping[a], mapping[b])) for a, b in g1.edges}
    target = {frozenset(e) for e in g2.edges}
    if len(g1.edges) != len(g2.edges) or mapped != target:
        raise RuntimeError("isomorphism mapping does not transport the edge set exactly")
    if respect_parts:
        assert isinstance(g1, BipartiteGraph) and isinstance(g2, BipartiteGraph)
        if {mapping[u] for u in g1.part_u} != set(g2.part_u):
            raise RuntimeError("isomorphism mapping does not preserve the parts")


def are_isomorphic(g1: Graph, g2: Graph, respect_parts: bool = False) -> IsoCertificate:
    """Decide isomorphism by canonical form and return a replayable witness."""
    f1 = canonical_form(g1, respect_parts)
    f2 = canonical_form(g2, respect_parts)
    if f1.key != f2.key:
        return IsoCertificate(False, None)
    pos_to_label = {pos: lab for lab, pos in f2.relabeling.items()}
    mapping = {lab: pos_to_label[pos] for lab, pos in f1.relabeling.items()}
    _verify_mapping(g1, g2, mapping, respect_parts)
    return IsoCertificate(True, mapping)
