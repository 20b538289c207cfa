"""Graphs whose large maximal cliques cannot all be hit by one stable set.

For positive integers ``k`` and ``t`` the graph has a clique
``A = A_1 ∪ ... ∪ A_t`` with ``|A_i| = k`` and disjoint 5-cycles
``B_1 .. B_t``; a vertex of ``A_i`` sees all of ``B_j`` exactly when
``i != j``. Every maximal clique is large relative to ``Delta + 1`` once
``(1 - eps)(kt + 5t - 5) < kt + 2 - k``, yet a stable set meeting ``A``
inside ``A_i`` can only add vertices of ``B_i`` and must leave an edge of
that 5-cycle uncovered.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cliques import enumerate_maximal_cliques
from .errors import PreconditionError
from .graph import Graph, bits, build_graph, to_mask

CYCLE_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))


def _as_fraction(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise PreconditionError(f"epsilon must lie strictly between 0 and 1, got {eps}")
    return eps


def size_inequality_holds(k: int, t: int, epsilon) -> bool:
    """``(1 - eps)(kt + 5t - 5) < kt + 2 - k`` in exact arithmetic."""
    eps = Fraction(epsilon)
    return (1 - eps) * (k * t + 5 * t - 5) < k * t + 2 - k


@dataclass(frozen=True)
class Census:
    """Closed-form clique and degree data of the (k, t) construction."""

    k: int
    t: int

    @property
    def n(self) -> int:
        return self.k * self.t + 5 * self.t

    @property
    def a_degree(self) -> int:
        return self.k * self.t - 1 + 5 * (self.t - 1)

    @property
    def b_degree(self) -> int:
        return 2 + self.k * (self.t - 1)

    @property
    def delta(self) -> int:
        return max(self.a_degree, self.b_degree)

    @property
    def a_size(self) -> int:
        return self.k * self.t

    @property
    def other_size(self) -> int:
        return self.k * self.t + 2 - self.k

    @property
    def other_count(self) -> int:
        return 5 * self.t

    @property
    def min_clique_size(self) -> int:
        return min(self.a_size, self.other_size)

    @property
    def max_clique_size(self) -> int:
        return max(self.a_size, self.other_size)


def clique_threshold(census: Census, epsilon) -> Fraction:
    """``(1 - eps)(Delta + 1)``; every maximal clique must be strictly larger."""
    return (1 - Fraction(epsilon)) * (census.delta + 1)


def params_valid(k: int, t: int, epsilon) -> bool:
    """The size inequality holds and every maximal clique beats the threshold.

    The second condition matters only for tiny ``k`` or ``t``, where the
    largest degree sits in ``B`` or ``A`` is smaller than the other cliques.
    """
    census = Census(k, t)
    return size_inequality_holds(k, t, epsilon) and census.min_clique_size > clique_threshold(census, epsilon)


def feasible_params(epsilon) -> tuple[int, int]:
    """Lexicographically least ``(k, t)`` for which :func:`params_valid` holds."""
    eps = _as_fraction(epsilon)
    # beyond this k the slope in t is negative, so large t always works
    k_max = max(3, math.floor(5 * (1 - eps) / eps) + 1)
    for k in range(1, k_max + 1):
        slope = (1 - eps) * (k + 5) - k
        rhs = 2 - k + 5 * (1 - eps)
        if slope < 0:
            t_max = max(2, math.floor(rhs / slope) + 1) + 2
        elif slope == 0:
            t_max = 3
        else:
            t_max = max(1, math.floor(rhs / slope) + 1)
        for t in range(1, t_max + 1):
            if params_valid(k, t, eps):
                return k, t
    raise AssertionError(f"no parameters found up to k={k_max}")


@dataclass(frozen=True)
class CounterexampleInstance:
    k: int
    t: int
    epsilon: Fraction
    graph: Graph
    a_parts: tuple[tuple[int, ...], ...]
    b_parts: tuple[tuple[int, ...], ...]

    @property
    def census(self) -> Census:
        return Census(self.k, self.t)

    def a_mask(self) -> int:
        return to_mask(v for p in self.a_parts for v in p)

    def census_cliques(self) -> list[int]:
        """Maximal cliques predicted by the construction, as bitmasks."""
        a = self.a_mask()
        out = [a]
        for i, b in enumerate(self.b_parts):
            rest = a & ~to_mask(self.a_parts[i])
            for x, y in CYCLE_EDGES:
                out.append(rest | 1 << b[x] | 1 << b[y])
        return out


def build_counterexample(k: int, t: int, epsilon) -> CounterexampleInstance:
    """Build the (k, t) graph; ``A_i`` gets labels ``i*k ..`` and ``B_i`` follows ``A``."""
    if k < 1 or t < 1:
        raise PreconditionError("k and t must be positive")
    eps = _as_fraction(epsilon)
    if not size_inequality_holds(k, t, eps):
        raise PreconditionError(f"(1-eps)(kt+5t-5) < kt+2-k fails for k={k}, t={t}, eps={eps}")
    if not params_valid(k, t, eps):
        raise PreconditionError(
            f"k={k}, t={t}: some maximal clique is not larger than (1-eps)(Delta+1) for eps={eps}"
        )
    a_parts = tuple(tuple(range(i * k, (i + 1) * k)) for i in range(t))
    b_parts = tuple(tuple(range(k * t + 5 * i, k * t + 5 * i + 5)) for i in range(t))
    edges = list(itertools.combinations(range(k * t), 2))
    for b in b_parts:
        edges.extend((b[x], b[y]) for x, y in CYCLE_EDGES)
    for i, a in enumerate(a_parts):
        for j, b in enumerate(b_parts):
            if i != j:
                edges.extend((u, v) for u in a for v in b)
    g = build_graph(k * t + 5 * t, edges)
    return CounterexampleInstance(k, t, eps, g, a_parts, b_parts)


@dataclass
class VerificationReport:
    k: int
    t: int
    epsilon: Fraction
    n: int
    delta: int
    max_clique: int
    other_maximal_size: int
    maximal_clique_count: int
    threshold: Fraction
    all_cliques_exceed_threshold: bool
    census_matches_graph: bool
    census_enumerated: bool
    hitting_set_exists: bool
    connected: bool
    notes: list[str] = field(default_factory=list)

    @property
    def refuted(self) -> bool:
        return self.hitting_set_exists or not (self.all_cliques_exceed_threshold and self.census_matches_graph)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "t": self.t,
            "epsilon": str(self.epsilon),
            "n": self.n,
            "delta": self.delta,
            "max_clique": self.max_clique,
            "other_maximal_size": self.other_maximal_size,
            "maximal_clique_count": self.maximal_clique_count,
            "threshold": str(self.threshold),
            "all_cliques_exceed_threshold": self.all_cliques_exceed_threshold,
            "census_enumerated": self.census_enumerated,
            "census_matches_graph": self.census_matches_graph,
            "connected": self.connected,
            "hitting_set_exists": self.hitting_set_exists,
            "refuted": self.refuted,
            "notes": self.notes,
        }


def _stable_subsets(g: Graph, mask: int):
    verts = list(bits(mask))
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            sub = to_mask(combo)
            if g.is_stable(sub):
                yield sub


def structured_hitting_search(inst: CounterexampleInstance, cliques: list[int]) -> tuple[int, ...] | None:
    """Search every stable set that could meet all of ``cliques``.

    ``A`` is one of the cliques, so a solution contains exactly one
    vertex ``a`` of ``A``; the rest is a stable set among the non-neighbours
    of ``a``, which is only the 5-cycle ``B_i`` matching ``a``'s part.
    """
    g = inst.graph
    a_mask = inst.a_mask()
    for a in bits(a_mask):
        free = g.full_mask & ~g.rows[a] & ~(1 << a)
        for rest in _stable_subsets(g, free):
            s = rest | 1 << a
            if all(c & s for c in cliques):
                return tuple(bits(s))
    return None


def verify_counterexample(inst: CounterexampleInstance, enumerate_up_to: int = 40) -> VerificationReport:
    """Check clique sizes against the threshold and that no hitting stable set exists.

    For graphs with at most ``enumerate_up_to`` vertices the closed-form
    clique census is compared with a full maximal-clique enumeration.
    """
    g = inst.graph
    census = inst.census
    notes = []
    cliques = inst.census_cliques()
    matches = True
    delta = g.max_degree()
    if delta != census.delta:
        matches = False
        notes.append(f"graph Delta {delta} differs from census {census.delta}")
    enumerated = g.n <= enumerate_up_to
    if enumerated:
        listed = set(enumerate_maximal_cliques(g).masks)
        if listed != set(cliques):
            matches = False
            notes.append("maximal clique enumeration disagrees with the census")
    else:
        notes.append("census not cross-checked by enumeration (graph too large)")
    threshold = clique_threshold(census, inst.epsilon)
    exceed = all(c.bit_count() > threshold for c in cliques)
    found = structured_hitting_search(inst, cliques)
    connected = g.is_connected()
    if not connected:
        notes.append("t = 1: the graph is disconnected (no edges between A and B)")
    if census.a_size <= census.other_size:
        notes.append("A is not the unique maximum clique for k <= 2")
    return VerificationReport(
        k=inst.k,
        t=inst.t,
        epsilon=inst.epsilon,
        n=g.n,
        delta=delta,
        max_clique=max(c.bit_count() for c in cliques),
        other_maximal_size=census.other_size,
        maximal_clique_count=len(cliques),
        threshold=threshold,
        all_cliques_exceed_threshold=exceed,
        census_matches_graph=matches,
        census_enumerated=enumerated,
        hitting_set_exists=found is not None,
        connected=connected,
        notes=notes,
    )


def min_clique_size_threshold(inst: CounterexampleInstance) -> int:
    """Smallest integer strictly above ``(1 - eps)(Delta + 1)``."""
    return math.floor(clique_threshold(inst.census, inst.epsilon)) + 1
