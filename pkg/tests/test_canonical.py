"""Canonical forms and isomorphism certificates."""

import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circgraph.canonical import are_isomorphic, canonical_form
from circgraph.constructions import neighborhood_graph, star, triangular
from circgraph.graphs import (
    BipartiteGraph,
    GraphError,
    SimpleGraph,
    as_simple,
    disjoint_union,
)

from helpers import oracle_isomorphic, oracle_part_isomorphic, random_bipartite, relabeled
from strategies import simple_graphs


def rebuild_bits(g, form):
    """Re-read the input adjacency in canonical order; must reproduce bits."""
    pos_to_label = {pos: lab for lab, pos in form.relabeling.items()}
    adj = g.adjacency
    out = []
    for i in range(form.n):
        for j in range(i + 1, form.n):
            out.append("1" if pos_to_label[j] in adj[pos_to_label[i]] else "0")
    return "".join(out)


class TestCanonicalForm:
    @pytest.mark.parametrize(
        "build",
        [
            lambda: as_simple(star(5)),
            lambda: as_simple(triangular(4)),
            lambda: as_simple(triangular(5)),
            lambda: SimpleGraph(("a", "b", "c", "d"), (("a", "b"), ("c", "d"))),
        ],
    )
    def test_invariant_under_random_relabelings(self, build):
        g = build()
        base = canonical_form(g)
        rng = random.Random(99)
        for _ in range(25):
            h, _ = relabeled(g, rng)
            assert canonical_form(h).key == base.key

    def test_relabeling_reproduces_bits(self):
        for g in (as_simple(triangular(4)), as_simple(star(6))):
            form = canonical_form(g)
            assert rebuild_bits(g, form) == form.bits

    def test_c4_and_p4_differ(self):
        c4 = SimpleGraph(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")))
        p4 = SimpleGraph(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("c", "d")))
        assert canonical_form(c4).key != canonical_form(p4).key

    def test_neighborhood_of_k4_matches_triangular4(self):
        k4 = SimpleGraph(("a", "b", "c", "d"), (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")))
        assert canonical_form(neighborhood_graph(k4)).key == canonical_form(triangular(4)).key

    def test_empty_graph(self):
        form = canonical_form(SimpleGraph((), ()))
        assert form.key == (0, None, "")

    def test_part_respecting_requires_bipartite(self):
        with pytest.raises(GraphError, match="bipartite"):
            canonical_form(SimpleGraph(("a",), ()), respect_parts=True)

    def test_part_respecting_separates_orientations(self):
        # Same abstract path, opposite point/circle roles.
        g1 = BipartiteGraph(("a", "c"), ("b",), (("a", "b"), ("c", "b")))
        g2 = BipartiteGraph(("b",), ("a", "c"), (("b", "a"), ("b", "c")))
        assert canonical_form(as_simple(g1)).key == canonical_form(as_simple(g2)).key
        assert canonical_form(g1, respect_parts=True).key != canonical_form(g2, respect_parts=True).key

    def test_part_respecting_invariant_under_part_preserving_relabeling(self):
        g = triangular(4)
        base = canonical_form(g, respect_parts=True)
        rng = random.Random(3)
        for _ in range(10):
            h, _ = relabeled(g, rng)
            assert canonical_form(h, respect_parts=True).key == base.key

    def test_desk_scale_bound(self):
        doubled = disjoint_union(triangular(6), triangular(6))
        started = time.perf_counter()
        canonical_form(doubled)
        assert time.perf_counter() - started < 5.0
        started = time.perf_counter()
        canonical_form(triangular(7))
        assert time.perf_counter() - started < 5.0

    def test_triangular8_relabelings(self):
        g = as_simple(triangular(8))
        base = canonical_form(g)
        rng = random.Random(17)
        for _ in range(5):
            h, _ = relabeled(g, rng)
            assert canonical_form(h).key == base.key


class TestAreIsomorphic:
    def test_neighborhood_doubling_instance(self):
        g = triangular(4)
        cert = are_isomorphic(neighborhood_graph(g), disjoint_union(g, g))
        assert cert.isomorphic
        ng, du = neighborhood_graph(g), disjoint_union(g, g)
        mapped = {frozenset((cert.mapping[a], cert.mapping[b])) for a, b in ng.edges}
        assert mapped == {frozenset(e) for e in du.edges}

    def test_same_size_different_degrees(self):
        assert not are_isomorphic(triangular(4), star(8)).isomorphic

    def test_reflexive_with_replayable_mapping(self):
        g = triangular(4)
        cert = are_isomorphic(g, g)
        assert cert.isomorphic
        assert sorted(cert.mapping) == sorted(cert.mapping.values())

    @settings(max_examples=50, deadline=None)
    @given(simple_graphs(max_n=6), st.randoms(use_true_random=False))
    def test_matches_permutation_oracle_on_relabelings(self, g, rng):
        h, _ = relabeled(g, rng)
        assert are_isomorphic(g, h).isomorphic

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(max_n=5), simple_graphs(max_n=5))
    def test_matches_permutation_oracle_on_pairs(self, g1, g2):
        assert are_isomorphic(g1, g2).isomorphic == oracle_isomorphic(g1, g2)

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(max_n=6), simple_graphs(max_n=6))
    def test_symmetric(self, g1, g2):
        assert are_isomorphic(g1, g2).isomorphic == are_isomorphic(g2, g1).isomorphic

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(max_n=6), simple_graphs(max_n=6))
    def test_degree_multiset_discrimination(self, g1, g2):
        degs1 = sorted(g1.degree(v) for v in g1.vertices)
        degs2 = sorted(g2.degree(v) for v in g2.vertices)
        if degs1 != degs2:
            assert not are_isomorphic(g1, g2).isomorphic

    @settings(max_examples=50, deadline=None)
    @given(simple_graphs(max_n=6), st.randoms(use_true_random=False))
    def test_certificate_transports_edges(self, g, rng):
        h, _ = relabeled(g, rng)
        cert = are_isomorphic(g, h)
        assert cert.isomorphic
        mapped = {frozenset((cert.mapping[a], cert.mapping[b])) for a, b in g.edges}
        assert mapped == {frozenset(e) for e in h.edges}


class TestPruningNeutrality:
    def test_orbit_pruning_never_changes_the_winner(self, monkeypatch):
        # Ground truth: exhaustive branch exploration with pruning disabled.
        import circgraph.canonical as canonical_module
        from circgraph.census import free_trees

        graphs = [as_simple(star(n)) for n in (4, 6)]
        graphs += [as_simple(triangular(n)) for n in (4, 5)]
        graphs += [t for n in (6, 7) for t in free_trees(n)]
        rng = random.Random(31)
        for _ in range(15):
            n = rng.randint(2, 7)
            labels = [f"a{i}" for i in range(n)]
            edges = [
                (labels[i], labels[j])
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            graphs.append(SimpleGraph(tuple(labels), tuple(edges)))

        pruned = [canonical_form(g).key for g in graphs]
        canonical_module._canonical_cached.cache_clear()
        monkeypatch.setattr(
            canonical_module, "_in_explored_orbit", lambda *args: False
        )
        try:
            exhaustive = [canonical_form(g).key for g in graphs]
        finally:
            canonical_module._canonical_cached.cache_clear()
        assert pruned == exhaustive


class TestPartRespectingSoundness:
    def test_points_occupy_leading_positions(self):
        rng = random.Random(555)
        for _ in range(200):
            g = random_bipartite(rng, max_part=5)
            form = canonical_form(g, respect_parts=True)
            u_positions = sorted(form.relabeling[u] for u in g.part_u)
            assert u_positions == list(range(len(g.part_u)))

    def test_matches_part_permutation_oracle(self):
        rng = random.Random(777)
        for _ in range(150):
            g1 = random_bipartite(rng, max_part=3)
            g2 = random_bipartite(rng, max_part=3)
            lib = canonical_form(g1, True).key == canonical_form(g2, True).key
            assert lib == oracle_part_isomorphic(g1, g2)

    def test_part_preserving_relabelings_always_match(self):
        rng = random.Random(888)
        for _ in range(150):
            g = random_bipartite(rng, max_part=5)
            h, _ = relabeled(g, rng)
            cert = are_isomorphic(g, h, respect_parts=True)
            assert cert.isomorphic
            assert {cert.mapping[u] for u in g.part_u} == set(h.part_u)
