import pytest

import bruteforce as bf
from conftest import graphs
from hypothesis import given, settings
from stablehit.counterexample import build_counterexample
from stablehit.errors import CapExceeded, PreconditionError
from stablehit.generators import hole_product
from stablehit.graph import complete_graph, cycle_graph, path_graph, strong_product
from stablehit.oracle import oracle_hitting_max, oracle_hitting_maximal


@pytest.mark.parametrize("k,m", [(5, 3), (7, 2), (5, 1), (9, 1)])
def test_odd_hole_products_have_no_hitting_set(k, m):
    assert oracle_hitting_max(hole_product(k, m)) is None


def test_c4_k2_has_a_hitting_set():
    s = oracle_hitting_max(hole_product(4, 2))
    assert s == (0, 4)


def test_p4_k2():
    g = strong_product(path_graph(4), complete_graph(2))
    assert oracle_hitting_max(g) == (0, 4)


def test_maximal_k4():
    assert oracle_hitting_maximal(complete_graph(4), 4) == (0,)


def test_maximal_counterexample():
    inst = build_counterexample(3, 4, "3/5")
    assert oracle_hitting_maximal(inst.graph, 11) is None


def test_maximal_nothing_above_threshold():
    assert oracle_hitting_maximal(cycle_graph(5), 3) == ()


def test_caps_and_arguments():
    with pytest.raises(CapExceeded):
        oracle_hitting_max(cycle_graph(12), max_n=10)
    with pytest.raises(PreconditionError):
        oracle_hitting_maximal(cycle_graph(5), 0)


@settings(max_examples=120)
@given(graphs(min_n=1, max_n=8))
def test_oracle_matches_subset_enumeration(g):
    _, family = bf.maximum_cliques(g)
    s = oracle_hitting_max(g)
    assert (s is not None) == bf.hitting_stable_set_exists(g, family)
    if s is not None:
        assert bf.is_stable(bf.adjacency(g), s)
        assert all(c & set(s) for c in family)
