"""Independent transversals of a partition into cliques.

If every vertex of part ``V_i`` has at most ``min(k, |V_i| - k)`` neighbours
in the other parts, a stable set with one vertex per part exists. Nothing
constructive comes with that guarantee, so the solver runs a min-conflicts
exchange search first and falls back to complete backtracking.
"""

from __future__ import annotations

import os
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import PreconditionError
from .graph import Graph, bits, to_mask

DEFAULT_STEP_BUDGET = int(os.environ.get("STABLEHIT_STEP_BUDGET", 10**5))


@dataclass(frozen=True)
class PartitionedInstance:
    """Disjoint cliques ``parts`` of ``graph`` and the degree parameter ``k``.

    ``k`` may be a non-integral rational; all comparisons against it are
    exact. Only edges between parts count as external, vertices outside
    every part are ignored.
    """

    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    k: Rational

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))
        object.__setattr__(self, "k", Fraction(self.k))
        seen = 0
        for p in self.parts:
            if not p:
                raise PreconditionError("parts must be nonempty")
            mask = to_mask(p)
            if mask >> self.graph.n:
                raise PreconditionError("part contains an out-of-range vertex")
            if mask & seen:
                raise PreconditionError("parts must be pairwise disjoint")
            if not self.graph.is_clique(mask):
                raise PreconditionError(f"part {p} is not a clique")
            seen |= mask
        if self.k <= 0:
            raise PreconditionError("k must be positive")

    @property
    def part_masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]

    def external_degree(self, v: int, part: int) -> int:
        masks = self.part_masks
        others = 0
        for j, m in enumerate(masks):
            if j != part:
                others |= m
        return (self.graph.rows[v] & others).bit_count()

    def hypothesis_violations(self) -> list[tuple[int, int]]:
        """``(part, vertex)`` pairs breaking the degree condition.

        A part smaller than ``k`` counts as violating at every vertex.
        """
        masks = self.part_masks
        union = 0
        for m in masks:
            union |= m
        bad = []
        for i, p in enumerate(self.parts):
            others = union & ~masks[i]
            bound = min(self.k, len(p) - self.k)
            for v in p:
                if (self.graph.rows[v] & others).bit_count() > bound:
                    bad.append((i, v))
        return bad

    def hypothesis_holds(self) -> bool:
        return not self.hypothesis_violations()


def is_independent_transversal(inst: PartitionedInstance, chosen: Sequence[int]) -> bool:
    if len(chosen) != len(inst.parts):
        return False
    for v, p in zip(chosen, inst.parts):
        if v not in p:
            return False
    return inst.graph.is_stable(to_mask(chosen)) and len(set(chosen)) == len(chosen)


def _min_conflicts(rows, parts, budget: int, seed: int) -> list[int] | None:
    rng = random.Random(seed)
    r = len(parts)
    choice: list[int | None] = [None] * r
    chosen_mask = 0
    owner = {}
    for i, p in enumerate(parts):
        for v in p:
            owner[v] = i
    tabu: dict[int, int] = {}
    for step in range(budget):
        open_parts = [i for i in range(r) if choice[i] is None]
        if not open_parts:
            return [c for c in choice]
        i = open_parts[0]
        best_cost, best = None, []
        for v in parts[i]:
            cost = (rows[v] & chosen_mask).bit_count()
            if tabu.get(v, -1) > step:
                cost += r
            if best_cost is None or cost < best_cost:
                best_cost, best = cost, [v]
            elif cost == best_cost:
                best.append(v)
        v = best[0] if best_cost == 0 else rng.choice(best)
        for w in bits(rows[v] & chosen_mask):
            j = owner[w]
            choice[j] = None
            chosen_mask &= ~(1 << w)
            tabu[w] = step + 2
        choice[i] = v
        chosen_mask |= 1 << v
    return None


def _backtrack(rows, parts) -> list[int] | None:
    r = len(parts)
    part_masks = [to_mask(p) for p in parts]
    choice: list[int | None] = [None] * r

    def rec(blocked: int, remaining: frozenset) -> bool:
        if not remaining:
            return True
        best, best_avail = None, None
        for i in sorted(remaining):
            avail = part_masks[i] & ~blocked
            if not avail:
                return False
            if best is None or avail.bit_count() < best_avail.bit_count():
                best, best_avail = i, avail
        rest = remaining - {best}
        for v in bits(best_avail):
            choice[best] = v
            if rec(blocked | rows[v] | 1 << v, rest):
                return True
        choice[best] = None
        return False

    return [c for c in choice] if rec(0, frozenset(range(r))) else None


def independent_transversal(
    inst: PartitionedInstance,
    *,
    step_budget: int = DEFAULT_STEP_BUDGET,
    require_hypothesis: bool = True,
) -> tuple[int, ...] | None:
    """One vertex from each part, pairwise non-adjacent, in part order.

    With ``require_hypothesis`` (the default) an instance violating the
    degree condition raises PreconditionError. Otherwise the search runs
    anyway and returns None when no transversal exists.
    """
    if require_hypothesis:
        bad = inst.hypothesis_violations()
        if bad:
            i, v = bad[0]
            raise PreconditionError(
                f"vertex {v} of part {i} has too many neighbours in other parts for k={inst.k}"
            )
    if not inst.parts:
        return ()
    rows = inst.graph.rows
    parts = [list(p) for p in inst.parts]
    result = _min_conflicts(rows, parts, step_budget, seed=len(parts))
    if result is None:
        result = _backtrack(rows, parts)
    if result is None:
        return None
    if not is_independent_transversal(inst, result):
        raise AssertionError("transversal search returned an invalid selection")
    return tuple(result)

