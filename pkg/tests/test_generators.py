import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopbound.convolution import is_normalized, normalize_instance
from hopbound.fileio import save_graph
from hopbound.generators import (
    DegenerateParameterWarning,
    ParamPoint,
    gen_common_instance,
    gen_param_instance,
    gen_random_graph,
    gen_sequence_triple,
    gen_triangle_instance,
)
from hopbound.graph import BudgetError


class TestRandomGraph:
    def test_smallest(self):
        inst = gen_random_graph(2, 1, 0, 0)
        assert inst.graph.edges == [(0, 1, 0)]
        assert (inst.s, inst.t, inst.h) == (0, 1, 0)

    def test_complete_graph(self):
        inst = gen_random_graph(10, 45, 5, 3)
        assert sorted((u, v) for u, v, _ in inst.graph.edges) == [(u, v) for u in range(10) for v in range(u + 1, 10)]

    def test_deterministic(self):
        assert save_graph(gen_random_graph(30, 100, 50, 9)) == save_graph(gen_random_graph(30, 100, 50, 9))
        assert save_graph(gen_random_graph(30, 100, 50, 9)) != save_graph(gen_random_graph(30, 100, 50, 10))

    @settings(max_examples=100)
    @given(st.integers(2, 30), st.integers(0, 1000), st.integers(0, 2**32), st.data())
    def test_simple_sorted_in_range(self, n, wmax, seed, data):
        m = data.draw(st.integers(0, n * (n - 1) // 2))
        edges = gen_random_graph(n, m, wmax, seed).graph.edges
        pairs = [(u, v) for u, v, _ in edges]
        assert len(edges) == m
        assert all(u < v < n for u, v in pairs)
        assert pairs == sorted(set(pairs))
        assert all(0 <= w <= wmax for *_, w in edges)

    @pytest.mark.parametrize("n, m", [(1, 0), (3, 4), (5, -1)])
    def test_bad_sizes(self, n, m):
        with pytest.raises(ValueError):
            gen_random_graph(n, m, 1, 0)

    def test_weight_budget(self):
        with pytest.raises(BudgetError):
            gen_random_graph(3, 1, 2**41, 0)


class TestParamPoint:
    def test_balanced(self):
        p = ParamPoint(10_000, 0.5, 0.5)
        assert (p.n, p.h, p.degenerate) == (100, 100, False)

    def test_sparse(self):
        p = ParamPoint(10_000, 1.0, 0.5)
        assert (p.n, p.h, p.degenerate) == (10_000, 100, False)
        gen = gen_param_instance(p)
        assert not gen.multigraph and gen.instance.m == 10_000 and gen.instance.h == 100

    def test_degenerate(self):
        p = ParamPoint(10_000, 0.5, 0.75)
        assert p.h == 1000 and p.degenerate
        with pytest.warns(DegenerateParameterWarning):
            gen = gen_param_instance(p)
        assert gen.degenerate and gen.instance is None

    def test_dense_corner_is_multigraph(self):
        gen = gen_param_instance(ParamPoint(10_000, 0.5, 0.5))
        assert gen.multigraph
        assert gen.instance.m == 10_000 and gen.instance.n == 100
        pairs = {(u, v) for u, v, _ in gen.instance.graph.edges}
        assert len(pairs) == 4950

    def test_no_warning_when_not_degenerate(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            gen_param_instance(ParamPoint(400, 1.0, 0.5))


class TestOtherGenerators:
    def test_triangle_zero_range(self):
        inst = gen_triangle_instance(3, 4, 0, 1)
        assert inst.max_abs() == 0
        assert inst.wAB.shape == (3, 4) and inst.wBC.shape == (4, 4) and inst.wCA.shape == (4, 3)

    def test_triangle_range(self):
        inst = gen_triangle_instance(5, 5, 3, 1)
        assert -3 <= min(inst.wAB.min(), inst.wBC.min(), inst.wCA.min())
        assert inst.max_abs() <= 3

    @given(st.integers(1, 8), st.integers(1, 4), st.integers(0, 50), st.integers(0, 2**32))
    def test_common_normalizes(self, N, M, wmax, seed):
        inst = gen_common_instance(N, M, wmax, seed)
        assert (inst.N, inst.M) == (N, M)
        assert min(inst.values()) >= 0
        assert is_normalized(normalize_instance(inst)[0])

    def test_triple(self):
        t = gen_sequence_triple(6, 9, 2)
        assert t.N == 6 and all(0 <= x <= 9 for x in t.a + t.b + t.c)
        assert t == gen_sequence_triple(6, 9, 2)
        assert np.array_equal(t.a, gen_sequence_triple(6, 9, 2).a)
