import random

import networkx as nx
import pytest

from stablehit.cliques import clique_graph, maximum_cliques
from stablehit.errors import PreconditionError
from stablehit.generators import (
    all_graphs,
    hole_product,
    random_clique_path_graph,
    random_clique_union,
)
from stablehit.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    relabel,
    strong_product,
)
from stablehit.structure import (
    HoleProductWitness,
    Shape,
    analyze_component,
    meets_two_thirds_bound,
    recognize_hole_product,
)


def analyses(g):
    fam = maximum_cliques(g)[1]
    cg = clique_graph(fam)
    return fam, cg, [analyze_component(g, cg, c) for c in range(len(cg.components))]


def test_bound_is_exact():
    assert meets_two_thirds_bound(6, 8)
    assert not meets_two_thirds_bound(5, 8)
    assert meets_two_thirds_bound(2, 2)
    assert not meets_two_thirds_bound(2, 3)


def test_c5_k3_is_a_hole_cycle():
    fam, cg, [a] = analyses(hole_product(5, 3))
    assert a.shape is Shape.HOLE_CYCLE
    assert a.hole_length == 5 and a.intersection_size == 0
    order = a.order
    for x, y in zip(order, order[1:] + order[:1]):
        assert (fam.masks[x] & fam.masks[y]).bit_count() == 3


def test_p4_k2_is_a_clique_path():
    fam, cg, [a] = analyses(strong_product(path_graph(4), complete_graph(2)))
    assert a.shape is Shape.CLIQUE_PATH
    assert a.order == (0, 1, 2)
    for x, y in zip(a.order, a.order[1:]):
        assert (fam.masks[x] & fam.masks[y]).bit_count() == 2


def test_k4_has_large_intersection():
    _, _, [a] = analyses(complete_graph(4))
    assert a.shape is Shape.LARGE_INTERSECTION
    assert a.intersection_size == 4
    assert a.hole_length is None


def test_analyze_preconditions():
    g = petersen_graph()  # omega 2 < 2/3 * 4
    cg = clique_graph(maximum_cliques(g)[1])
    with pytest.raises(PreconditionError):
        analyze_component(g, cg, 0)
    g = disjoint_union(complete_graph(3), complete_graph(3))
    cg = clique_graph(maximum_cliques(g)[1])
    with pytest.raises(PreconditionError):
        analyze_component(g, cg, 0)
    g = complete_graph(3)
    cg = clique_graph(maximum_cliques(g)[1])
    with pytest.raises(PreconditionError):
        analyze_component(g, cg, 3)


def test_recognize_c5_k3():
    w = recognize_hole_product(hole_product(5, 3))
    assert (w.hole_length, w.clique_size, w.is_odd) == (5, 3, True)
    assert w.copy_map == tuple(v // 3 for v in range(15))


def test_recognize_c4_k2():
    w = recognize_hole_product(hole_product(4, 2))
    assert (w.hole_length, w.clique_size, w.is_odd) == (4, 2, False)


def test_petersen_is_not_a_product():
    g = petersen_graph()
    # a product C_k x K_m on 10 vertices is (3m-1)-regular with k*m = 10 and k >= 4
    candidates = [(k, 10 // k) for k in range(4, 11) if 10 % k == 0]
    assert all(3 * m - 1 != 3 for _, m in candidates)
    assert recognize_hole_product(g) is None


@pytest.mark.parametrize("k", range(4, 10))
@pytest.mark.parametrize("m", range(1, 4))
def test_round_trip(k, m):
    w = recognize_hole_product(hole_product(k, m))
    assert (w.hole_length, w.clique_size) == (k, m)
    assert w.is_valid(hole_product(k, m))


def test_round_trip_after_shuffling_labels():
    rng = random.Random(5)
    for k, m in [(5, 3), (6, 2), (9, 1)]:
        order = list(range(k * m))
        rng.shuffle(order)
        g = relabel(hole_product(k, m), order)
        w = recognize_hole_product(g)
        assert (w.hole_length, w.clique_size) == (k, m) and w.is_valid(g)


def test_non_products():
    assert recognize_hole_product(cycle_graph(3)) is None
    assert recognize_hole_product(complete_graph(6)) is None
    assert recognize_hole_product(strong_product(path_graph(5), complete_graph(2))) is None
    assert recognize_hole_product(disjoint_union(hole_product(4, 1), hole_product(4, 1))) is None


def test_recognition_agrees_with_isomorphism_on_small_graphs():
    products = {}
    for k in range(4, 8):
        for m in range(1, 8 // k + 1):
            products[k * m] = products.get(k * m, []) + [(k, m, nx.cycle_graph(k))]
    for n in range(4, 8):
        for g in all_graphs(n):
            h = nx.Graph(g.edges())
            h.add_nodes_from(range(n))
            expected = None
            for k, m, c in products.get(n, []):
                if nx.is_isomorphic(h, nx.strong_product(c, nx.complete_graph(m))):
                    expected = (k, m)
            w = recognize_hole_product(g)
            assert (None if w is None else (w.hole_length, w.clique_size)) == expected


def test_witness_problems():
    g = hole_product(5, 2)
    w = recognize_hole_product(g)
    assert w.problems(g) == []
    swapped = list(w.copy_map)
    swapped[0], swapped[4] = swapped[4], swapped[0]
    assert HoleProductWitness(5, 2, tuple(swapped)).problems(g)
    assert HoleProductWitness(5, 2, w.copy_map[:-1]).problems(g)
    assert HoleProductWitness(3, 2, w.copy_map).problems(g)
    assert HoleProductWitness(5, 2, tuple([9] * 10)).problems(g)


def _check_lemma_conclusions(g, fam, cg, a):
    omega = fam.omega
    masks = fam.masks
    order = list(a.order)
    pairs = list(zip(order, order[1:]))
    if a.shape is Shape.HOLE_CYCLE:
        pairs.append((order[-1], order[0]))
    for x, y in pairs:
        assert (masks[x] & masks[y]).bit_count() == omega // 2
    adjacent = {frozenset(p) for p in pairs}
    for i in order:
        for j in order:
            if i < j and frozenset((i, j)) not in adjacent:
                assert not masks[i] & masks[j]
    listed = set(order)
    for other in range(len(masks)):
        if other not in listed:
            assert not any(masks[other] & masks[i] for i in listed)


def test_lemma_conclusions_on_clique_path_graphs():
    rng = random.Random(11)
    seen = set()
    for _ in range(150):
        g = random_clique_path_graph(rng, rng.randint(4, 7), rng.randint(1, 3))
        if not g.is_connected():
            continue
        fam, cg, result = analyses(g)
        for a in result:
            seen.add(a.shape)
            if a.shape is not Shape.LARGE_INTERSECTION:
                _check_lemma_conclusions(g, fam, cg, a)
    assert Shape.CLIQUE_PATH in seen


def test_strict_bound_never_gives_small_components():
    rng = random.Random(2)
    checked = 0
    for _ in range(3000):
        g = random_clique_union(rng.randint(4, 14), rng.randint(1, 5), 7, rng, p=0.05)
        if not g.is_connected():
            continue
        omega, fam = maximum_cliques(g)
        if 3 * omega <= 2 * (g.max_degree() + 1):
            continue
        checked += 1
        cg = clique_graph(fam)
        for c in range(len(cg.components)):
            assert analyze_component(g, cg, c).shape is Shape.LARGE_INTERSECTION
    assert checked > 100
