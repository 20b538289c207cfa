"""Brute-force oracles for hitting clique families with a stable set.

These deliberately avoid the bitset machinery in :mod:`stablehit.cliques`
and work on plain Python sets, so they can be used to cross-check it.
"""

from __future__ import annotations

import os

from .errors import CapExceeded, PreconditionError
from .graph import Graph

DEFAULT_MAX_N = int(os.environ.get("STABLEHIT_MAX_N", 40))

# Size cap used when callers pass ``max_n=None``; the CLI rebinds it from --max-n.
max_n_cap = DEFAULT_MAX_N


def _adjacency(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def all_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Maximal cliques by plain Bron-Kerbosch without pivoting."""
    adj = _adjacency(g)
    out = []

    def bk(r: set, p: set, x: set) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        for v in sorted(p):
            bk(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(range(g.n)), set())
    return out


def all_maximum_cliques(g: Graph) -> list[frozenset[int]]:
    cliques = all_maximal_cliques(g)
    if not cliques or g.n == 0:
        return []
    omega = max(len(c) for c in cliques)
    return [c for c in cliques if len(c) == omega]


def hitting_stable_set_search(g: Graph, family: list[frozenset[int]]) -> tuple[int, ...] | None:
    """Exhaustive search for a stable set meeting every set in ``family``.

    A stable set meets a clique in at most one vertex, so the search
    repeatedly takes the unhit clique with fewest usable vertices and
    branches on which of them to pick. Chosen sets that already failed are
    memoised. Returns the found set sorted, or None.
    """
    adj = _adjacency(g)
    failed: set[frozenset[int]] = set()

    def rec(chosen: frozenset[int], blocked: frozenset[int]) -> frozenset[int] | None:
        unhit = [c for c in family if not (c & chosen)]
        if not unhit:
            return chosen
        if chosen in failed:
            return None
        target = min(unhit, key=lambda c: (len(c - blocked), sorted(c)))
        for v in sorted(target - blocked):
            found = rec(chosen | {v}, blocked | {v} | adj[v])
            if found is not None:
                return found
        failed.add(chosen)
        return None

    found = rec(frozenset(), frozenset())
    return None if found is None else tuple(sorted(found))


def _check_size(g: Graph, max_n: int | None) -> None:
    max_n = max_n_cap if max_n is None else max_n
    if g.n > max_n:
        raise CapExceeded(f"oracle limited to n <= {max_n}, got n = {g.n}")


def oracle_hitting_max(g: Graph, max_n: int | None = None) -> tuple[int, ...] | None:
    """A stable set meeting every maximum clique of ``g``, or None if none exists."""
    _check_size(g, max_n)
    return hitting_stable_set_search(g, all_maximum_cliques(g))


def oracle_hitting_maximal(g: Graph, threshold: int, max_n: int | None = None) -> tuple[int, ...] | None:
    """A stable set meeting every maximal clique with at least ``threshold`` vertices."""
    if threshold < 1:
        raise PreconditionError("threshold must be at least 1")
    _check_size(g, max_n)
    family = [c for c in all_maximal_cliques(g) if len(c) >= threshold]
    return hitting_stable_set_search(g, family)
