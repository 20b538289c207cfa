"""Clique enumeration, clique families and their intersection graphs."""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import CapExceeded, PreconditionError
from .graph import Graph, bits, members, to_mask

DEFAULT_CLIQUE_CAP = int(os.environ.get("STABLEHIT_CLIQUE_CAP", 10**6))

# Cap used when callers pass ``cap=None``; the CLI rebinds it from --clique-cap.
clique_cap = DEFAULT_CLIQUE_CAP


def _family_order(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda m: (-m.bit_count(), members(m)))


@dataclass(frozen=True)
class CliqueFamily:
    """An ordered collection of distinct cliques of ``graph``.

    Cliques are stored as bitmasks; ``omega`` is set when the family is
    known to consist of maximum cliques.
    """

    graph: Graph
    masks: tuple[int, ...]
    omega: int | None = None

    def __post_init__(self):
        if len(set(self.masks)) != len(self.masks):
            raise PreconditionError("clique family contains a duplicate set")
        for m in self.masks:
            if m >> self.graph.n:
                raise PreconditionError("clique family member out of vertex range")
            if not self.graph.is_clique(m):
                raise PreconditionError(f"{members(m)} is not a clique")

    @classmethod
    def from_sets(cls, graph: Graph, sets: Iterable[Iterable[int]], omega: int | None = None) -> CliqueFamily:
        return cls(graph, tuple(to_mask(s) for s in sets), omega)

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def cliques(self) -> list[tuple[int, ...]]:
        return [members(m) for m in self.masks]

    def _check_indices(self, indices: Iterable[int]) -> list[int]:
        idx = list(indices)
        if not idx:
            raise PreconditionError("need at least one clique index")
        for i in idx:
            if not 0 <= i < len(self.masks):
                raise PreconditionError(f"clique index {i} out of range")
        return idx

    def intersection_mask(self, indices: Iterable[int] | None = None) -> int:
        idx = range(len(self.masks)) if indices is None else indices
        idx = self._check_indices(idx)
        out = self.masks[idx[0]]
        for i in idx[1:]:
            out &= self.masks[i]
        return out

    def union_mask(self, indices: Iterable[int] | None = None) -> int:
        idx = range(len(self.masks)) if indices is None else indices
        out = 0
        for i in self._check_indices(idx):
            out |= self.masks[i]
        return out


def family_intersection(family: CliqueFamily, indices: Iterable[int]) -> tuple[int, ...]:
    return members(family.intersection_mask(indices))


def family_union(family: CliqueFamily, indices: Iterable[int]) -> tuple[int, ...]:
    return members(family.union_mask(indices))


def _pivot(g: Graph, p: int, x: int) -> int:
    # candidate with most neighbours inside P; lowest index wins ties
    best, best_count = -1, -1
    for u in bits(p | x):
        c = (g.rows[u] & p).bit_count()
        if c > best_count:
            best, best_count = u, c
    return best


def enumerate_maximal_cliques(g: Graph, cap: int | None = None) -> CliqueFamily:
    """All inclusion-maximal cliques of ``g`` (Bron-Kerbosch with pivoting).

    The family is ordered by size descending, then lexicographically.
    Raises CapExceeded once more than ``cap`` cliques have been found.
    """
    cap = clique_cap if cap is None else cap
    found: list[int] = []
    rows = g.rows

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
                if len(found) > cap:
                    raise CapExceeded(f"more than {cap} maximal cliques")
            return
        u = _pivot(g, p, x)
        for v in bits(p & ~rows[u]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask, 0)
    return CliqueFamily(g, tuple(_family_order(found)))


def maximum_cliques(g: Graph, cap: int | None = None) -> tuple[int, CliqueFamily]:
    """Clique number of ``g`` together with the family of all maximum cliques."""
    if g.n == 0:
        raise PreconditionError("undefined omega: graph has no vertices")
    cap = clique_cap if cap is None else cap
    rows = g.rows
    best = [0]
    found: list[int] = []

    def expand(r: int, size: int, p: int, x: int) -> None:
        if size + p.bit_count() < best[0]:
            return
        if not p:
            if not x:
                if size > best[0]:
                    best[0] = size
                    found.clear()
                found.append(r)
                if len(found) > cap:
                    raise CapExceeded(f"more than {cap} maximum cliques")
            return
        u = _pivot(g, p, x)
        for v in bits(p & ~rows[u]):
            bit = 1 << v
            expand(r | bit, size + 1, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit
            if size + p.bit_count() < best[0]:
                return

    expand(0, 0, g.full_mask, 0)
    omega = best[0]
    return omega, CliqueFamily(g, tuple(_family_order(found)), omega)


def clique_number(g: Graph) -> int:
    return maximum_cliques(g)[0] if g.n else 0


@dataclass(frozen=True)
class CliqueGraph:
    """Intersection graph of a clique family plus its component partition."""

    family: CliqueFamily
    adjacency: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...] = field(default=())

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def component_of(self, i: int) -> int:
        for c, comp in enumerate(self.components):
            if i in comp:
                return c
        raise PreconditionError(f"clique index {i} out of range")


def clique_graph(family: CliqueFamily) -> CliqueGraph:
    if not len(family):
        raise PreconditionError("clique graph of an empty family")
    masks = family.masks
    k = len(masks)
    adjacency = tuple(
        tuple(j for j in range(k) if j != i and masks[i] & masks[j]) for i in range(k)
    )
    seen = [False] * k
    components = []
    for start in range(k):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adjacency[i]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        components.append(tuple(sorted(comp)))
    return CliqueGraph(family, adjacency, tuple(components))


@dataclass(frozen=True)
class HajnalResult:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def hajnal_check(family: CliqueFamily, indices: Sequence[int] | None = None) -> HajnalResult:
    """Compare ``|∩C| + |∪C|`` with ``2ω`` for a family of maximum cliques.

    ``indices`` selects a subfamily; by default the whole family is used.
    """
    omega = family.omega if family.omega is not None else clique_number(family.graph)
    idx = list(range(len(family))) if indices is None else list(indices)
    for i in family._check_indices(idx):
        if family.masks[i].bit_count() != omega:
            raise PreconditionError(
                f"clique {members(family.masks[i])} is not maximum (omega={omega})"
            )
    lhs = family.intersection_mask(idx).bit_count() + family.union_mask(idx).bit_count()
    return HajnalResult(lhs, 2 * omega)
