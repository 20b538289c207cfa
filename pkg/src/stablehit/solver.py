"""Stable sets meeting every maximum clique when omega >= 2/3 (Delta + 1).

The recursion follows the classical argument. Vertices in no maximum
clique are dropped. If every component of the maximum-clique graph has a
large common core, an independent transversal of those cores does the
job. Otherwise some component is a clique path; it is contracted to a
single clique, the smaller graph is solved, and the answer is lifted back
by picking alternate path intersections. A clique cycle means the graph is
``C_k ⊠ K_m``: even ``k`` is solved directly, odd ``k`` admits no solution.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cliques import CliqueFamily, clique_graph, maximum_cliques
from .errors import InternalContradiction, PreconditionError
from .graph import Graph, bits, members, to_mask
from .structure import (
    HoleProductWitness,
    Shape,
    analyze_component,
    meets_two_thirds_bound,
    recognize_hole_product,
)
from .transversal import DEFAULT_STEP_BUDGET, PartitionedInstance, independent_transversal


@dataclass(frozen=True)
class StableSetHit:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class OddHoleProduct:
    witness: HoleProductWitness


HittingCertificate = Union[StableSetHit, OddHoleProduct]


def hitting_set_problems(g: Graph, vertices: Sequence[int], family: CliqueFamily | None = None) -> list[str]:
    """Why ``vertices`` fails to be a stable set meeting every maximum clique of ``g``."""
    errs = []
    if any(not 0 <= v < g.n for v in vertices):
        return [f"vertex out of range 0..{g.n - 1}"]
    mask = to_mask(vertices)
    for v in bits(mask):
        if g.rows[v] & mask:
            w = next(bits(g.rows[v] & mask))
            errs.append(f"vertices {v} and {w} are adjacent")
            break
    if family is None:
        _, family = maximum_cliques(g)
    for clique in family.masks:
        if not clique & mask:
            errs.append(f"maximum clique {list(members(clique))} is not hit")
            break
    return errs


def prune_to_maximum_cliques(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Delete vertices lying in no maximum clique, repeating until nothing changes.

    Returns the pruned graph and its label map back into ``g``.
    """
    labels = tuple(range(g.n))
    while g.n:
        _, family = maximum_cliques(g)
        covered = family.union_mask()
        if covered == g.full_mask:
            break
        g, sub = g.induced_subgraph(bits(covered))
        labels = tuple(labels[v] for v in sub)
    return g, labels


@dataclass(frozen=True)
class ReducedGraph:
    graph: Graph
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    # label_map[new] = old vertex of the input graph
    label_map: tuple[int, ...]


def _check_path(g: Graph, path: Sequence[Sequence[int]]) -> list[int]:
    masks = [to_mask(c) for c in path]
    for i, m in enumerate(masks):
        if not m or m >> g.n:
            raise PreconditionError(f"path clique {i} is empty or out of range")
        if not g.is_clique(m):
            raise PreconditionError(f"path member {i} is not a clique")
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            meets = bool(masks[i] & masks[j])
            if meets != (j == i + 1):
                raise PreconditionError(f"path cliques {i} and {j} violate the path intersection pattern")
    return masks


def reduce_clique_path(g: Graph, path: Sequence[Sequence[int]]) -> ReducedGraph:
    """Delete the interior of a clique path and merge its two ends into one clique.

    ``path`` lists the cliques ``C_1 .. C_{l-1}`` in order. The vertices of
    every ``C_i ∩ C_{i+1}`` are removed and ``X1 = C_1 - C_2`` and
    ``X2 = C_{l-1} - C_{l-2}`` are joined completely.
    """
    if len(path) < 2:
        raise PreconditionError("a clique path to reduce needs at least two cliques")
    masks = _check_path(g, path)
    interior = 0
    for a, b in zip(masks, masks[1:]):
        interior |= a & b
    x1 = masks[0] & ~masks[1]
    x2 = masks[-1] & ~masks[-2]
    if not x1 or not x2:
        raise PreconditionError("end cliques of the path have no private vertices")
    keep = g.full_mask & ~interior
    rows = list(g.rows)
    ends = x1 | x2
    for v in bits(ends):
        rows[v] |= ends & ~(1 << v)
    joined = Graph(g.n, rows)
    sub, labels = joined.induced_subgraph(bits(keep))
    position = {old: new for new, old in enumerate(labels)}
    return ReducedGraph(
        sub,
        tuple(position[v] for v in bits(x1)),
        tuple(position[v] for v in bits(x2)),
        labels,
    )


def lift_solution(
    g: Graph,
    s_prime: Sequence[int],
    path: Sequence[Sequence[int]],
    label_map: Sequence[int] | None = None,
    family: CliqueFamily | None = None,
) -> tuple[int, ...]:
    """Turn a solution of the reduced graph into one of ``g``.

    ``s_prime`` is in the labels of the reduced graph (translated through
    ``label_map``) and must meet ``X1 ∪ X2`` exactly once. With ``l - 1``
    path cliques, even ``l`` keeps that vertex and adds one vertex from
    every second intersection starting at ``C_2 ∩ C_3``; odd ``l`` drops it
    and adds one vertex from ``C_1 ∩ C_2``, ``C_3 ∩ C_4``, and so on. The
    result is checked against the maximum cliques of ``g`` before return.
    """
    s = [label_map[v] for v in s_prime] if label_map is not None else list(s_prime)
    if len(path) == 1:
        result = tuple(sorted(s))
    else:
        masks = _check_path(g, path)
        x1 = masks[0] & ~masks[1]
        x2 = masks[-1] & ~masks[-2]
        s_mask = to_mask(s)
        hits = s_mask & (x1 | x2)
        if hits.bit_count() != 1:
            raise PreconditionError("reduced solution must meet X1 ∪ X2 exactly once")
        if hits & x2:
            masks = masks[::-1]
        v = hits.bit_length() - 1
        ell = len(masks) + 1
        crossings = [a & b for a, b in zip(masks, masks[1:])]  # crossings[j-1] = C_j ∩ C_{j+1}
        if ell % 2 == 0:
            picks = crossings[1::2]
        else:
            picks = crossings[0::2]
            s_mask &= ~(1 << v)
        for crossing in picks:
            free = crossing & ~s_mask
            for w in bits(s_mask):
                free &= ~g.rows[w]
            if not free:
                raise InternalContradiction("no vertex of a path intersection is free to add")
            s_mask |= free & -free
        result = members(s_mask)
    errs = hitting_set_problems(g, result, family)
    if errs:
        raise InternalContradiction("lifted set fails: " + "; ".join(errs))
    return result


class _OddHoleFound(Exception):
    def __init__(self, witness: HoleProductWitness, labels: tuple[int, ...]):
        super().__init__("odd hole product")
        self.witness = witness
        self.labels = labels


def _solve(g: Graph, step_budget: int, depth: int) -> list[int]:
    """Stable set of ``g`` meeting all its maximum cliques.

    Raises _OddHoleFound (with labels of ``g``) when ``g`` or one of its
    components carrying maximum cliques is an odd hole product.
    """
    omega, family = maximum_cliques(g)
    covered = family.union_mask()
    if covered != g.full_mask:
        sub, labels = g.induced_subgraph(bits(covered))
        return [labels[v] for v in _solve_lifted(sub, labels, step_budget, depth)]
    comps = g.component_masks()
    if len(comps) > 1:
        out = []
        for comp in comps:
            sub, labels = g.induced_subgraph(bits(comp))
            out.extend(labels[v] for v in _solve_lifted(sub, labels, step_budget, depth))
        return out
    return _solve_connected(g, omega, family, step_budget, depth)


def _solve_lifted(sub: Graph, labels: tuple[int, ...], step_budget: int, depth: int) -> list[int]:
    try:
        return _solve(sub, step_budget, depth)
    except _OddHoleFound as found:
        raise _OddHoleFound(found.witness, tuple(labels[v] for v in found.labels)) from None


def _solve_connected(g: Graph, omega: int, family: CliqueFamily, step_budget: int, depth: int) -> list[int]:
    if g.n <= omega:
        return [0]
    delta = g.max_degree()
    if not meets_two_thirds_bound(omega, delta):
        raise InternalContradiction(f"recursion reached omega={omega}, delta={delta}")
    cg = clique_graph(family)
    analyses = [analyze_component(g, cg, c) for c in range(len(cg.components))]
    small = [a for a in analyses if a.shape is not Shape.LARGE_INTERSECTION]

    if not small:
        parts = [members(family.intersection_mask(a.component)) for a in analyses]
        inst = PartitionedInstance(g, tuple(parts), Fraction(delta + 1, 3))
        return list(independent_transversal(inst, step_budget=step_budget))

    for a in small:
        if a.shape is Shape.HOLE_CYCLE:
            witness = recognize_hole_product(g)
            if witness is None:
                raise InternalContradiction("clique cycle in a graph that is not a hole product")
            if witness.is_odd:
                raise _OddHoleFound(witness, tuple(range(g.n)))
            classes = witness.classes()
            return [classes[pos][0] for pos in range(0, witness.hole_length, 2)]

    failures = []
    for a in small:
        path = [members(family.masks[i]) for i in a.order]
        reduced = reduce_clique_path(g, path)
        try:
            s_prime = _solve(reduced.graph, step_budget, depth + 1)
        except _OddHoleFound:
            failures.append(a.component)
            continue
        return list(lift_solution(g, s_prime, path, reduced.label_map, family))
    raise InternalContradiction(f"every clique-path reduction produced an odd hole product: {failures}")


def hitting_stable_set(g: Graph, *, step_budget: int = DEFAULT_STEP_BUDGET) -> HittingCertificate:
    """Stable set meeting every maximum clique of ``g``, or an odd-hole-product witness.

    Requires ``omega >= 2/3 (Delta + 1)``. Disconnected graphs are handled
    component by component; if a component carrying maximum cliques is an
    odd hole product, no solution exists and its witness is returned.
    """
    if g.n == 0:
        raise PreconditionError("graph has no vertices")
    omega, family = maximum_cliques(g)
    delta = g.max_degree()
    if not meets_two_thirds_bound(omega, delta):
        raise PreconditionError(f"omega={omega} is below 2/3 (delta+1) with delta={delta}")
    try:
        found = _solve(g, step_budget, 0)
    except _OddHoleFound as odd:
        copy_map: list[int | None] = [None] * g.n
        for local, pos in enumerate(odd.witness.copy_map):
            copy_map[odd.labels[local]] = pos
        witness = HoleProductWitness(odd.witness.hole_length, odd.witness.clique_size, tuple(copy_map))
        if not witness.is_valid(g):
            raise InternalContradiction("odd hole witness does not validate on the input graph")
        return OddHoleProduct(witness)
    result = tuple(sorted(found))
    errs = hitting_set_problems(g, result, family)
    if errs:
        raise InternalContradiction("solver produced an invalid set: " + "; ".join(errs))
    return StableSetHit(result)
