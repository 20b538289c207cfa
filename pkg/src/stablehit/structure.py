"""Structure of clique-graph components when omega sits at two thirds of Delta + 1.

A component of the maximum-clique graph either has a large common
intersection, or its cliques form a path or a cycle in which consecutive
cliques share exactly omega/2 vertices. Cycles only occur when the whole
graph is a hole blown up by a clique, which :func:`recognize_hole_product`
detects and certifies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cliques import CliqueGraph, clique_number
from .errors import InternalContradiction, PreconditionError
from .graph import Graph, bits, members


def meets_two_thirds_bound(omega: int, delta: int) -> bool:
    """Exact test of ``omega >= 2/3 (delta + 1)``."""
    return 3 * omega >= 2 * (delta + 1)


class Shape(enum.Enum):
    LARGE_INTERSECTION = "large_intersection"
    CLIQUE_PATH = "clique_path"
    HOLE_CYCLE = "hole_cycle"


@dataclass(frozen=True)
class ComponentAnalysis:
    component: tuple[int, ...]
    intersection_size: int
    shape: Shape
    # clique indices along the path or around the cycle; empty for LARGE_INTERSECTION
    order: tuple[int, ...] = ()

    @property
    def hole_length(self) -> int | None:
        return len(self.order) if self.shape is Shape.HOLE_CYCLE else None


def analyze_component(g: Graph, cg: CliqueGraph, comp: int) -> ComponentAnalysis:
    """Classify component ``comp`` of the clique graph ``cg`` of maximum cliques of ``g``."""
    family = cg.family
    if not 0 <= comp < len(cg.components):
        raise PreconditionError(f"component index {comp} out of range")
    omega = family.omega if family.omega is not None else clique_number(g)
    if any(m.bit_count() != omega for m in family.masks):
        raise PreconditionError("clique graph must be built from maximum cliques")
    delta = g.max_degree()
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if not meets_two_thirds_bound(omega, delta):
        raise PreconditionError(f"omega={omega} is below 2/3 (delta+1) with delta={delta}")

    idx = cg.components[comp]
    common = family.intersection_mask(idx)
    size = common.bit_count()
    if 3 * size >= delta + 1:
        return ComponentAnalysis(idx, size, Shape.LARGE_INTERSECTION)

    if size:
        raise InternalContradiction(f"component {idx} has nonempty intersection of size {size} below (delta+1)/3")
    if omega % 2:
        raise InternalContradiction("small-intersection component with odd omega")
    if len(idx) < 3:
        raise InternalContradiction(f"small-intersection component with only {len(idx)} cliques")
    half = omega // 2
    masks = family.masks
    for i in idx:
        nbrs = cg.adjacency[i]
        if len(nbrs) > 2:
            raise InternalContradiction(f"clique {i} meets {len(nbrs)} other maximum cliques")
        for j in nbrs:
            if (masks[i] & masks[j]).bit_count() != half:
                raise InternalContradiction(f"cliques {i} and {j} share other than omega/2 vertices")
        if len(nbrs) == 2 and masks[nbrs[0]] & masks[nbrs[1]]:
            raise InternalContradiction(f"both neighbours of clique {i} intersect each other")

    ends = [i for i in idx if len(cg.adjacency[i]) == 1]
    if not ends:
        shape = Shape.HOLE_CYCLE
        start = idx[0]
    elif len(ends) == 2:
        shape = Shape.CLIQUE_PATH
        start = ends[0]
    else:
        raise InternalContradiction("clique graph component is neither a path nor a cycle")

    order = [start]
    prev = -1
    cur = start
    while True:
        nxt = [j for j in cg.adjacency[cur] if j != prev]
        if not nxt:
            break
        step = min(nxt)
        if step == start:
            break
        prev, cur = cur, step
        order.append(cur)
    if len(order) != len(idx):
        raise InternalContradiction("walk along the component missed cliques")
    if shape is Shape.HOLE_CYCLE and len(order) < 4:
        raise InternalContradiction(f"hole cycle of length {len(order)}")
    return ComponentAnalysis(idx, 0, shape, tuple(order))


@dataclass(frozen=True)
class HoleProductWitness:
    """Certificate that a graph (or one of its components) is ``C_k ⊠ K_m``.

    ``copy_map[v]`` is the cycle position of vertex ``v``, or ``None`` for
    vertices outside the certified component.
    """

    hole_length: int
    clique_size: int
    copy_map: tuple[int | None, ...]

    @property
    def is_odd(self) -> bool:
        return self.hole_length % 2 == 1

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.hole_length)]
        for v, pos in enumerate(self.copy_map):
            if pos is not None:
                out[pos].append(v)
        return [tuple(c) for c in out]

    def problems(self, g: Graph) -> list[str]:
        """Reasons the witness fails on ``g``; empty when valid."""
        k, m = self.hole_length, self.clique_size
        errs = []
        if k < 4:
            errs.append(f"hole length {k} < 4")
        if m < 1:
            errs.append(f"clique size {m} < 1")
        if len(self.copy_map) != g.n:
            return errs + [f"copy_map has {len(self.copy_map)} entries for {g.n} vertices"]
        if any(p is not None and not (isinstance(p, int) and 0 <= p < k) for p in self.copy_map):
            return errs + ["copy_map position out of range"]
        if errs:
            return errs
        classes = self.classes()
        if any(len(c) != m for c in classes):
            errs.append("position classes do not all have clique_size vertices")
            return errs
        class_mask = [0] * k
        for pos, c in enumerate(classes):
            for v in c:
                class_mask[pos] |= 1 << v
        for pos, c in enumerate(classes):
            expected = class_mask[(pos - 1) % k] | class_mask[pos] | class_mask[(pos + 1) % k]
            for v in c:
                if g.rows[v] != expected & ~(1 << v):
                    errs.append(f"neighbourhood of vertex {v} does not match C_{k} ⊠ K_{m}")
                    return errs
        return errs

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


def recognize_hole_product(g: Graph) -> HoleProductWitness | None:
    """Return a witness that ``g`` is ``C_k ⊠ K_m`` with ``k >= 4``, else None.

    In such a product the position classes are exactly the classes of
    vertices with equal closed neighbourhoods, so no isomorphism search
    is needed.
    """
    if g.n == 0 or not g.is_connected():
        return None
    twins: dict[int, list[int]] = {}
    for v in range(g.n):
        twins.setdefault(g.rows[v] | 1 << v, []).append(v)
    classes = list(twins.values())
    k = len(classes)
    m = len(classes[0])
    if k < 4 or any(len(c) != m for c in classes) or g.max_degree() != 3 * m - 1:
        return None
    cls_of = {}
    for c_idx, c in enumerate(classes):
        for v in c:
            cls_of[v] = c_idx
    # quotient graph on classes must be a k-cycle
    quotient = [sorted({cls_of[w] for w in bits(g.rows[c[0]])} - {c_idx}) for c_idx, c in enumerate(classes)]
    if any(len(q) != 2 for q in quotient):
        return None
    start = min(range(k), key=lambda c: classes[c][0])
    order = [start]
    prev = -1
    while len(order) < k:
        cur = order[-1]
        nxt = [c for c in quotient[cur] if c != prev]
        step = min(nxt, key=lambda c: classes[c][0])
        if step in order:
            return None
        prev = cur
        order.append(step)
    position = {c: pos for pos, c in enumerate(order)}
    copy_map = tuple(position[cls_of[v]] for v in range(g.n))
    witness = HoleProductWitness(k, m, copy_map)
    return witness if witness.is_valid(g) else None


def component_summary(analysis: ComponentAnalysis, cg: CliqueGraph) -> dict:
    """JSON-friendly description of a component analysis."""
    out = {
        "component": list(analysis.component),
        "intersection_size": analysis.intersection_size,
        "classification": analysis.shape.value,
    }
    if analysis.shape is not Shape.LARGE_INTERSECTION:
        out["order"] = list(analysis.order)
        masks = cg.family.masks
        out["consecutive_intersections"] = [
            list(members(masks[a] & masks[b])) for a, b in zip(analysis.order, analysis.order[1:])
        ]
    if analysis.shape is Shape.HOLE_CYCLE:
        out["hole_length"] = analysis.hole_length
    return out
