import random

import pytest

import bruteforce as bf
from stablehit.cliques import clique_graph, maximum_cliques
from stablehit.errors import InternalContradiction, PreconditionError
from stablehit.generators import hole_product, random_clique_path_graph, random_clique_union
from stablehit.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    strong_product,
)
from stablehit.oracle import oracle_hitting_max
from stablehit.solver import (
    OddHoleProduct,
    StableSetHit,
    hitting_set_problems,
    hitting_stable_set,
    lift_solution,
    prune_to_maximum_cliques,
    reduce_clique_path,
)
from stablehit.structure import Shape, analyze_component, meets_two_thirds_bound


def path_product(ell, m):
    return strong_product(path_graph(ell), complete_graph(m))


def product_path(ell, m):
    """Cliques C_1 .. C_{ell-1} of P_ell x K_m in path order."""
    return [tuple(range(i * m, (i + 2) * m)) for i in range(ell - 1)]


def test_k4():
    cert = hitting_stable_set(complete_graph(4))
    assert isinstance(cert, StableSetHit) and len(cert.vertices) == 1


def test_c5_k3_is_the_exception():
    cert = hitting_stable_set(hole_product(5, 3))
    assert isinstance(cert, OddHoleProduct)
    assert (cert.witness.hole_length, cert.witness.clique_size) == (5, 3)


def test_c4_k2_uses_opposite_copies():
    cert = hitting_stable_set(hole_product(4, 2))
    assert isinstance(cert, StableSetHit)
    copies = sorted(v // 2 for v in cert.vertices)
    assert len(copies) == 2 and copies[1] - copies[0] == 2


def test_p4_k2():
    g = path_product(4, 2)
    cert = hitting_stable_set(g)
    assert isinstance(cert, StableSetHit) and len(cert.vertices) == 2
    assert hitting_set_problems(g, cert.vertices) == []


def test_preconditions():
    with pytest.raises(PreconditionError):
        hitting_stable_set(petersen_graph())
    with pytest.raises(PreconditionError):
        hitting_stable_set(build_graph(0, []))


def test_disconnected_inputs():
    cert = hitting_stable_set(disjoint_union(complete_graph(3), complete_graph(3)))
    assert isinstance(cert, StableSetHit) and len(cert.vertices) == 2

    g = disjoint_union(complete_graph(6), hole_product(5, 3))
    cert = hitting_stable_set(g)
    assert isinstance(cert, OddHoleProduct)
    assert cert.witness.copy_map[:6] == (None,) * 6
    assert cert.witness.is_valid(g)

    # the 5-cycle has smaller clique number, so only K_6 must be hit
    cert = hitting_stable_set(disjoint_union(complete_graph(6), cycle_graph(5)))
    assert isinstance(cert, StableSetHit) and len(cert.vertices) == 1


def test_prune():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    pruned, labels = prune_to_maximum_cliques(g)
    assert labels == (0, 1, 2) and pruned == complete_graph(3)


def test_reduce_p5_k2():
    g = path_product(5, 2)
    red = reduce_clique_path(g, product_path(5, 2))
    h = red.graph
    assert h.n == 4 and h == complete_graph(4)
    assert [red.label_map[v] for v in red.x1] == [0, 1]
    assert [red.label_map[v] for v in red.x2] == [8, 9]
    assert bf.maximum_cliques(h)[0] == 4
    assert h.max_degree() <= g.max_degree()


def test_reduce_p4_k2_deletes_every_middle_vertex():
    red = reduce_clique_path(path_product(4, 2), product_path(4, 2))
    assert red.graph == complete_graph(4)
    assert red.label_map == (0, 1, 6, 7)


def test_reduce_with_surroundings():
    # P5 x K2 with a K4 hanging off vertex 0 by one edge
    base = path_product(5, 2)
    g = build_graph(14, base.edges() + [(10, 11), (10, 12), (10, 13), (11, 12), (11, 13), (12, 13), (0, 10)])
    red = reduce_clique_path(g, product_path(5, 2))
    h = red.graph
    assert bf.maximum_cliques(h)[0] == 4
    assert h.max_degree() <= g.max_degree()
    x = red.x1 + red.x2
    assert all(h.has_edge(a, b) for a in x for b in x if a < b)


def test_reduce_rejects_malformed_paths():
    g = path_product(4, 2)
    with pytest.raises(PreconditionError):
        reduce_clique_path(g, product_path(4, 2)[:1])
    with pytest.raises(PreconditionError):
        reduce_clique_path(g, [(0, 1, 2, 3), (4, 5, 6, 7)])
    with pytest.raises(PreconditionError):
        reduce_clique_path(g, [(0, 1, 2, 3), (2, 3, 4, 5), (0, 1, 2, 3)])
    with pytest.raises(PreconditionError):
        reduce_clique_path(g, [(0, 1, 2, 5), (2, 3, 4, 5)])


def test_lift_even_length():
    g = path_product(4, 2)
    path = product_path(4, 2)
    red = reduce_clique_path(g, path)
    s = lift_solution(g, [0], path, red.label_map)  # vertex 0 of G' is original vertex 0 in X1
    assert s == (0, 4)
    assert hitting_set_problems(g, s) == []


def test_lift_even_length_from_x2_side():
    g = path_product(4, 2)
    path = product_path(4, 2)
    red = reduce_clique_path(g, path)
    s = lift_solution(g, [3], path, red.label_map)  # original vertex 7 in X2
    assert hitting_set_problems(g, s) == []
    assert 7 in s


def test_lift_odd_length():
    g = path_product(5, 2)
    path = product_path(5, 2)
    red = reduce_clique_path(g, path)
    s = lift_solution(g, [0], path, red.label_map)
    # vertex 0 dropped, one vertex from C1∩C2 = {2,3} and from C3∩C4 = {6,7}
    assert 0 not in s
    assert len(s) == 2 and s[0] in (2, 3) and s[1] in (6, 7)
    assert hitting_set_problems(g, s) == []


def test_lift_trivial_path():
    g = complete_graph(4)
    assert lift_solution(g, [2], [(0, 1, 2, 3)]) == (2,)


def test_lift_preconditions():
    g = path_product(4, 2)
    path = product_path(4, 2)
    with pytest.raises(PreconditionError):
        lift_solution(g, [2], path)  # misses X1 ∪ X2
    with pytest.raises(PreconditionError):
        lift_solution(g, [0, 7], path)  # meets it twice


def test_lift_detects_bad_input():
    # a set that is fine on the ends but leaves an outside clique unhit
    g = disjoint_union(path_product(4, 2), complete_graph(4))
    with pytest.raises(InternalContradiction):
        lift_solution(g, [0], product_path(4, 2))


def _path_component(g):
    fam = maximum_cliques(g)[1]
    cg = clique_graph(fam)
    for c in range(len(cg.components)):
        a = analyze_component(g, cg, c)
        if a.shape is Shape.CLIQUE_PATH:
            return fam, [fam.cliques[i] for i in a.order]
    return fam, None


def test_reduction_invariants_random():
    rng = random.Random(99)
    done = {0: 0, 1: 0}
    for _ in range(200):
        ell, m = rng.randint(4, 7), rng.randint(1, 3)
        g0 = random_clique_path_graph(rng, ell, m)
        g, labels = prune_to_maximum_cliques(g0)
        comps = g.components()
        sub, sub_labels = g.induced_subgraph(comps[0])
        fam, path = _path_component(sub)
        assert path is not None
        red = reduce_clique_path(sub, path)
        omega = fam.omega
        assert maximum_cliques(red.graph)[0] == omega
        assert red.graph.max_degree() <= sub.max_degree()
        cert = hitting_stable_set(red.graph)
        assert isinstance(cert, StableSetHit)
        lifted = lift_solution(sub, cert.vertices, path, red.label_map, fam)
        assert hitting_set_problems(sub, lifted) == []
        done[(len(path) + 1) % 2] += 1
    assert done[0] and done[1]


def test_dichotomy_on_random_graphs():
    rng = random.Random(17)
    tested = 0
    for _ in range(600):
        g = random_clique_union(rng.randint(3, 12), rng.randint(1, 5), 6, rng, p=rng.random() * 0.15)
        omega, _ = maximum_cliques(g)
        if not meets_two_thirds_bound(omega, g.max_degree()):
            continue
        tested += 1
        cert = hitting_stable_set(g)
        assert isinstance(cert, OddHoleProduct) == (oracle_hitting_max(g) is None)
    assert tested > 100
