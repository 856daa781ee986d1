"""Counting engine tests: frozen values, engine agreement, and invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan_graphs.counting import (
    brute_force_is,
    count_cliques,
    count_is,
    count_is_banded,
    count_maximum_is,
    independence_number,
    list_maximal_is,
)
from riordan_graphs.graphs import (
    BitGraph,
    build_riordan,
    build_toeplitz,
    pascal_spec,
)


def subset_oracle_count(graph):
    """Micro-oracle: per-subset independence test straight from the edges."""
    edges = graph.edges()
    count = 0
    for mask in range(1 << graph.n):
        if all(not (mask >> (i - 1)) & 1 or not (mask >> (j - 1)) & 1 for i, j in edges):
            count += 1
    return count


def random_graph(n, seed, p=0.4):
    import random

    rng = random.Random(seed)
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return BitGraph.from_edges(n, edges)


small_graphs = st.builds(random_graph, st.integers(1, 10), st.integers(0, 10**6))


class TestCountIS:
    def test_pascal_4(self):
        assert count_is(build_riordan(pascal_spec(4))) == 6

    def test_edgeless(self):
        assert count_is(BitGraph.from_edges(3, [])) == 8

    def test_catalan_7(self):
        from riordan_graphs.graphs import catalan_spec

        assert count_is(build_riordan(catalan_spec(7))) == 21

    @settings(deadline=None)
    @given(graph=small_graphs)
    def test_matches_subset_oracle(self, graph):
        assert count_is(graph) == subset_oracle_count(graph)

    @given(graph=small_graphs)
    def test_at_least_n_plus_one(self, graph):
        assert count_is(graph) >= graph.n + 1

    @given(graph=small_graphs, seed=st.integers(0, 10**6))
    def test_adding_an_edge_never_increases(self, graph, seed):
        import random

        rng = random.Random(seed)
        non_edges = [
            (i, j)
            for i in range(1, graph.n + 1)
            for j in range(i + 1, graph.n + 1)
            if not graph.has_edge(i, j)
        ]
        if not non_edges:
            return
        extra = rng.choice(non_edges)
        denser = BitGraph.from_edges(graph.n, graph.edges() + [extra])
        assert count_is(denser) <= count_is(graph)


class TestBandedEngine:
    def test_path_5(self):
        assert count_is_banded(build_toeplitz(5, (1,)), 1) == 13

    def test_toeplitz_6(self):
        assert count_is_banded(build_toeplitz(6, (1, 2, 4)), 4) == 11

    def test_matches_branch_on_wide_toeplitz(self):
        graph = build_toeplitz(20, (1, 2))
        assert count_is_banded(graph, 2) == count_is(graph)

    def test_rejects_edge_outside_band(self):
        with pytest.raises(ValueError):
            count_is_banded(build_toeplitz(6, (1, 4)), 2)

    def test_rejects_huge_bandwidth(self):
        with pytest.raises(ValueError):
            count_is_banded(build_toeplitz(4, (1,)), 21)

    def test_bandwidth_wider_than_graph(self):
        assert count_is_banded(build_toeplitz(2, (1,)), 5) == 3
        assert count_is_banded(build_toeplitz(4, (1, 2)), 9) == 6

    @given(graph=small_graphs)
    def test_matches_branch_at_full_bandwidth(self, graph):
        if graph.n < 2:
            return
        assert count_is_banded(graph, min(graph.n - 1, 20)) == count_is(graph)


class TestBruteForce:
    def test_pascal_12(self):
        assert brute_force_is(build_riordan(pascal_spec(12))) == 98

    def test_motzkin_10(self):
        from riordan_graphs.graphs import motzkin_spec

        assert brute_force_is(build_riordan(motzkin_spec(10))) == 48

    def test_triangle(self):
        assert brute_force_is(build_toeplitz(3, (1, 2))) == 4

    def test_size_cap(self):
        with pytest.raises(ValueError):
            brute_force_is(BitGraph.from_edges(25, []))

    @given(graph=small_graphs)
    def test_matches_subset_oracle(self, graph):
        assert brute_force_is(graph) == subset_oracle_count(graph)


class TestCliques:
    def test_single_edge_triangle_free(self):
        assert count_cliques(build_toeplitz(3, (1,))) == 6

    def test_toeplitz_5(self):
        assert count_cliques(build_toeplitz(5, (1, 2))) == 16

    def test_edgeless_pair(self):
        assert count_cliques(BitGraph.from_edges(2, [])) == 3

    @given(graph=small_graphs)
    def test_equals_complement_subset_count(self, graph):
        assert count_cliques(graph) == subset_oracle_count(graph.complement())


class TestIndependenceNumber:
    def test_pascal_12(self):
        assert independence_number(build_riordan(pascal_spec(12))) == 6

    def test_complete_graph(self):
        assert independence_number(build_toeplitz(4, (1, 2, 3))) == 1

    def test_edgeless(self):
        assert independence_number(BitGraph.from_edges(5, [])) == 5

    @given(graph=small_graphs)
    def test_matches_enumeration(self, graph):
        best = max(len(s) for s in list_maximal_is(graph))
        assert independence_number(graph) == best


class TestMaximumIS:
    def test_pascal_4_unique(self):
        result = count_maximum_is(build_riordan(pascal_spec(4)))
        assert result.count == 1
        assert result.witnesses == [(2, 4)]

    def test_pascal_5_unique(self):
        result = count_maximum_is(build_riordan(pascal_spec(5)))
        assert result.count == 1
        assert result.witnesses == [(2, 4)]

    def test_edgeless_pair(self):
        result = count_maximum_is(BitGraph.from_edges(2, []))
        assert result.count == 1
        assert result.witnesses == [(1, 2)]

    def test_no_witnesses_beyond_oracle_scale(self):
        # path on 30 vertices: DP oracle for the number of maximum sets,
        # state = (set size so far, whether the previous vertex was taken)
        counts = {(0, False): 1}
        for _ in range(30):
            nxt = {}
            for (size, taken), ways in counts.items():
                key = (size, False)
                nxt[key] = nxt.get(key, 0) + ways
                if not taken:
                    key = (size + 1, True)
                    nxt[key] = nxt.get(key, 0) + ways
            counts = nxt
        alpha = max(size for size, _ in counts)
        expected = sum(w for (size, _), w in counts.items() if size == alpha)
        path = build_toeplitz(30, (1,))
        result = count_maximum_is(path)
        assert result.witnesses is None
        assert (independence_number(path), result.count) == (alpha, expected)

    @given(graph=small_graphs)
    def test_count_matches_enumeration(self, graph):
        alpha = independence_number(graph)
        maximal = list_maximal_is(graph)
        expected = sum(1 for s in maximal if len(s) == alpha)
        result = count_maximum_is(graph)
        assert result.count == expected
        assert result.witnesses == [s for s in maximal if len(s) == alpha]
        for witness in result.witnesses:
            assert len(witness) == alpha
            assert all(not graph.has_edge(u, v) for u in witness for v in witness if u < v)


class TestMaximalIS:
    def test_pascal_4(self):
        assert list_maximal_is(build_riordan(pascal_spec(4))) == [(1,), (2, 4), (3,)]

    def test_path_3(self):
        assert list_maximal_is(build_toeplitz(3, (1,))) == [(1, 3), (2,)]

    def test_triangle(self):
        assert list_maximal_is(build_toeplitz(3, (1, 2))) == [(1,), (2,), (3,)]

    def test_size_cap(self):
        with pytest.raises(ValueError):
            list_maximal_is(BitGraph.from_edges(65, []))

    @settings(max_examples=60, deadline=None)
    @given(graph=small_graphs)
    def test_sets_are_maximal_and_exhaustive(self, graph):
        found = list_maximal_is(graph)
        assert found == sorted(found)
        seen = set()
        for s in found:
            assert s not in seen
            seen.add(s)
            mask = 0
            for v in s:
                mask |= 1 << (v - 1)
            assert all(not graph.has_edge(u, v) for u in s for v in s if u < v)
            for v in range(1, graph.n + 1):
                if v not in s:
                    assert any(graph.has_edge(v, u) for u in s)
        # every maximal independent subset shows up: check by brute force
        for mask in range(1 << graph.n):
            members = [v + 1 for v in range(graph.n) if (mask >> v) & 1]
            independent = all(
                not graph.has_edge(u, v) for u in members for v in members if u < v
            )
            if not independent:
                continue
            maximal = all(
                any(graph.has_edge(v, u) for u in members)
                for v in range(1, graph.n + 1)
                if v not in members
            )
            if maximal and members:
                assert tuple(members) in seen
