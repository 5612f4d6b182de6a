#!/usr/bin/env python3
"""
Unit tests for d_l: the non-degeneracy test, the naive scan and the index
"""
import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultratree.core.tree import LabeledTree
from ultratree.errors import UnknownVertexError
from ultratree.metric import (
    DegenerateEdge,
    NonDegenerate,
    build_index,
    dist_indexed,
    dist_many,
    dist_naive,
    validate_labeling,
)
from ultratree.oracle import LabelingMode, RandomTreeSpec, brute_dist, random_tree

seeds = st.integers(min_value=0, max_value=2**32)


class TestValidateLabeling:
    """An edge with both ends labeled 0 is the only obstruction"""

    def test_non_degenerate(self, path3):
        verdict = validate_labeling(path3)
        assert verdict == NonDegenerate()
        assert verdict.is_ultrametric

    def test_first_degenerate_edge_in_sorted_order(self):
        t = LabeledTree({"a": 0, "b": 0, "c": 0, "d": 1}, [("c", "b"), ("b", "a"), ("c", "d")])
        verdict = validate_labeling(t)
        assert verdict == DegenerateEdge("a", "b")
        assert not verdict.is_ultrametric

    def test_zero_labels_without_adjacent_zeros(self, caterpillar):
        assert isinstance(validate_labeling(caterpillar), NonDegenerate)

    @given(seed=seeds, n=st.integers(min_value=2, max_value=40))
    @settings(max_examples=100, deadline=None)
    def test_degenerate_edge_has_distance_zero(self, seed, n):
        t = random_tree(RandomTreeSpec(n, LabelingMode.WITH_ZEROS, seed, zero_probability=0.6))
        verdict = validate_labeling(t)
        if isinstance(verdict, DegenerateEdge):
            assert verdict.u != verdict.v
            assert dist_naive(t, verdict.u, verdict.v) == 0
            assert dist_indexed(build_index(t), verdict.u, verdict.v) == 0

    @given(seed=seeds, n=st.integers(min_value=1, max_value=64))
    @settings(max_examples=50, deadline=None)
    def test_injective_ordinal_is_non_degenerate(self, seed, n):
        t = random_tree(RandomTreeSpec(n, LabelingMode.INJECTIVE_ORDINAL, seed))
        assert validate_labeling(t) == NonDegenerate()


class TestDistance:
    """Values of d_l on hand-checked trees"""

    def test_path_ends(self, path3):
        assert dist_naive(path3, "a", "c") == 3
        assert dist_naive(path3, "b", "c") == 2
        assert dist_naive(path3, "b", "b") == 0

    def test_index_agrees_on_caterpillar(self, caterpillar):
        ix = build_index(caterpillar)
        for u, v in itertools.product(caterpillar.vertices, repeat=2):
            assert dist_indexed(ix, u, v) == dist_naive(caterpillar, u, v)

    def test_unknown_vertex(self, path3):
        with pytest.raises(UnknownVertexError):
            dist_naive(path3, "a", "z")
        with pytest.raises(UnknownVertexError):
            dist_indexed(build_index(path3), "z", "a")

    def test_single_vertex_index(self):
        ix = build_index(LabeledTree({"x": 4}, []))
        assert dist_indexed(ix, "x", "x") == 0


class TestUltrametricAxioms:
    """Symmetry, identity of indiscernibles, strong triangle inequality"""

    @given(seed=seeds, n=st.integers(min_value=1, max_value=24))
    @settings(max_examples=100, deadline=None)
    def test_axioms_exhaustively(self, seed, n):
        t = random_tree(RandomTreeSpec(n, seed=seed))
        ix = build_index(t)
        vs = t.vertices
        d = {(u, v): dist_indexed(ix, u, v) for u in vs for v in vs}
        for u, v in itertools.product(vs, repeat=2):
            assert d[u, v] == d[v, u]
            assert (d[u, v] == 0) == (u == v)
        for x, y, z in itertools.product(vs, repeat=3):
            assert d[x, y] <= max(d[x, z], d[z, y])

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(5))
    def test_axioms_on_sampled_triples(self, seed):
        t = random_tree(RandomTreeSpec(512, seed=seed))
        ix = build_index(t)
        rng = np.random.default_rng(seed)
        triples = rng.integers(0, t.size, size=(10_000, 3))
        x, y, z = triples[:, 0], triples[:, 1], triples[:, 2]
        dxy = ix.query_positions(x, y)
        dxz = ix.query_positions(x, z)
        dzy = ix.query_positions(z, y)
        assert np.all(dxy <= np.maximum(dxz, dzy))
        assert np.array_equal(dxy, ix.query_positions(y, x))


class TestIndexEquivalence:
    """Indexed, naive and brute-force distances are bit-identical"""

    @given(seed=seeds, n=st.integers(min_value=1, max_value=48))
    @settings(max_examples=60, deadline=None)
    def test_all_pairs(self, seed, n):
        t = random_tree(RandomTreeSpec(n, seed=seed))
        ix = build_index(t)
        for u, v in itertools.combinations_with_replacement(t.vertices, 2):
            expected = brute_dist(t, u, v)
            assert dist_naive(t, u, v) == expected
            assert dist_indexed(ix, u, v) == expected

    @given(seed=seeds, n=st.integers(min_value=1, max_value=100))
    @settings(max_examples=40, deadline=None)
    def test_batch_matches_scalar(self, seed, n):
        t = random_tree(RandomTreeSpec(n, seed=seed))
        ix = build_index(t)
        pairs = list(itertools.product(t.vertices[:10], t.vertices[-10:]))
        us, vs = zip(*pairs)
        batch = dist_many(ix, us, vs)
        assert batch.tolist() == [dist_indexed(ix, u, v) for u, v in pairs]

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(100))
    def test_all_pairs_up_to_256(self, seed):
        n = 1 + seed * 255 // 99
        t = random_tree(RandomTreeSpec(n, seed=seed))
        ix = build_index(t)
        for u, v in itertools.combinations(t.vertices, 2):
            assert dist_indexed(ix, u, v) == dist_naive(t, u, v)


@pytest.mark.slow
class TestPerformance:
    """Index build and a million batched queries on 10^5 vertices"""

    def test_million_queries(self):
        t = random_tree(RandomTreeSpec(100_000, seed=7))
        started = time.perf_counter()
        ix = build_index(t)
        assert time.perf_counter() - started <= 1.0

        rng = np.random.default_rng(7)
        us = rng.integers(0, t.size, size=1_000_000)
        vs = rng.integers(0, t.size, size=1_000_000)
        started = time.perf_counter()
        d = ix.query_positions(us, vs)
        assert time.perf_counter() - started <= 2.0

        for k in range(1_000):
            u, v = t.vertices[us[k]], t.vertices[vs[k]]
            assert d[k] == dist_naive(t, u, v)
