"""Graph families and seeded random corpora used by the CLI and the tests.

Randomness always comes from ``random.Random(seed)`` (Mersenne Twister),
so a seed reproduces a corpus exactly.
"""

from __future__ import annotations

import itertools
import random
import re
from collections.abc import Iterator

from .errors import PreconditionError
from .graph import (
    Graph,
    bits,
    build_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    strong_product,
)
from .transversal import PartitionedInstance


def named_graph(token: str) -> Graph:
    """Parse ``C5``, ``P4``, ``K3`` or ``petersen``."""
    token = token.strip()
    if token.lower() == "petersen":
        return petersen_graph()
    m = re.fullmatch(r"([CPK])(\d+)", token, flags=re.IGNORECASE)
    if not m:
        raise PreconditionError(f"unknown graph name {token!r}; use C<k>, P<l>, K<m> or petersen")
    kind, size = m.group(1).upper(), int(m.group(2))
    return {"C": cycle_graph, "P": path_graph, "K": complete_graph}[kind](size)


def hole_product(k: int, m: int) -> Graph:
    return strong_product(cycle_graph(k), complete_graph(m))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p)."""
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) overlaid on a random spanning tree."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges.update((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p)
    return build_graph(n, sorted(edges))


def random_clique_union(n: int, cliques: int, max_size: int, rng: random.Random, p: float = 0.0) -> Graph:
    """Union of random cliques plus sparse noise; rich in overlapping maximum cliques."""
    edges = set()
    for _ in range(cliques):
        lo = min(2, n)
        size = rng.randint(lo, max(lo, min(max_size, n)))
        members = rng.sample(range(n), size)
        edges.update(tuple(sorted(e)) for e in itertools.combinations(members, 2))
    edges.update((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p)
    return build_graph(n, sorted(edges))


# -- exhaustive small graphs -------------------------------------------------

def _canonical_buckets():
    import networkx as nx

    buckets: dict[tuple, list] = {}

    def add(g: Graph) -> bool:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges())
        key = (g.n, g.num_edges(), tuple(sorted(g.degrees())), nx.weisfeiler_lehman_graph_hash(nxg, iterations=3))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nxg, other) for other in bucket):
            return False
        bucket.append(nxg)
        return True

    return add


def _atlas(n: int) -> list[Graph]:
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g():
        if h.number_of_nodes() == n:
            out.append(build_graph(n, h.edges()))
    return out


def all_graphs(n: int) -> list[Graph]:
    """One graph from every isomorphism class on ``n`` vertices (``n <= 8``).

    Classes up to 7 vertices come from the networkx graph atlas; 8-vertex
    classes are generated by adding a vertex to every 7-vertex class and
    discarding isomorphic copies.
    """
    if n <= 7:
        return _atlas(n)
    if n == 8:
        return list(one_vertex_extensions(_atlas(7)))
    raise PreconditionError("exhaustive generation is limited to n <= 8")


def one_vertex_extensions(graphs: list[Graph], keep=None) -> Iterator[Graph]:
    """Isomorphism-free graphs obtained by adding one vertex to each of ``graphs``.

    ``keep`` filters candidates before the (expensive) isomorphism check.
    """
    add = _canonical_buckets()
    for g in graphs:
        n = g.n
        for nbrs in range(1 << n):
            rows = list(g.rows) + [nbrs]
            for v in bits(nbrs):
                rows[v] |= 1 << n
            h = Graph(n + 1, rows)
            if keep is not None and not keep(h):
                continue
            if add(h):
                yield h


def connected_graphs(n: int, keep=None) -> list[Graph]:
    """Connected graphs on ``n`` vertices up to isomorphism, optionally filtered."""
    if n <= 7:
        return [g for g in _atlas(n) if g.is_connected() and (keep is None or keep(g))]
    if n == 8:
        def wanted(h: Graph) -> bool:
            return h.is_connected() and (keep is None or keep(h))
        return list(one_vertex_extensions(_atlas(7), keep=wanted))
    raise PreconditionError("exhaustive generation is limited to n <= 8")


# -- structured random instances ---------------------------------------------

def random_partitioned_instance(rng: random.Random, max_parts: int = 6, max_k: int = 3) -> PartitionedInstance:
    """A random clique partition meeting the transversal degree condition.

    Cross edges are sampled one at a time and kept only while both
    endpoints stay within their ``min(k, |V_i| - k)`` budget.
    """
    k = rng.randint(1, max_k)
    r = rng.randint(1, max_parts)
    sizes = [rng.randint(2 * k, 2 * k + 3) for _ in range(r)]
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    n = start
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    edges = set()
    for p in parts:
        edges.update(itertools.combinations(p, 2))
    budget = {v: min(k, len(parts[part_of[v]]) - k) for v in range(n)}
    candidates = [(u, v) for u, v in itertools.combinations(range(n), 2) if part_of[u] != part_of[v]]
    rng.shuffle(candidates)
    density = rng.random()
    for u, v in candidates:
        if budget[u] and budget[v] and rng.random() < density:
            edges.add((u, v))
            budget[u] -= 1
            budget[v] -= 1
    return PartitionedInstance(build_graph(n, sorted(edges)), tuple(parts), k)


def random_clique_path_graph(rng: random.Random, ell: int, m: int, extras: int = 3) -> Graph:
    """``P_ell ⊠ K_m`` with random attachments that keep it a valid solver input.

    Attachments only touch the two end copies of ``K_m`` (whose degree is
    ``2m - 1``) and never push a degree above ``3m - 1``: pendant vertices,
    and cliques of size ``2m`` hanging off an end vertex by a single edge.
    """
    g = strong_product(path_graph(ell), complete_graph(m))
    n = g.n
    edges = set(g.edges())
    deg = {v: g.degree(v) for v in range(n)}
    cap = 3 * m - 1
    ends = list(range(m)) + list(range((ell - 1) * m, ell * m))
    for _ in range(rng.randint(0, extras)):
        anchor = rng.choice(ends)
        if deg[anchor] >= cap:
            continue
        if rng.random() < 0.5:
            new = n
            n += 1
            edges.add((anchor, new))
            deg[new] = 1
        else:
            block = list(range(n, n + 2 * m))
            n += 2 * m
            edges.update(itertools.combinations(block, 2))
            for v in block:
                deg[v] = 2 * m - 1
            edges.add((anchor, block[0]))
            deg[block[0]] += 1
        deg[anchor] += 1
    return build_graph(n, sorted(edges))

