"""Simple undirected graphs stored as one adjacency bitmask per vertex.

Vertex sets are passed around either as Python ints used as bitmasks
(internally) or as sorted tuples of vertex labels (at API boundaries).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import PreconditionError

# Hard cap on the number of vertices a Graph may have.
MAX_VERTICES = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is the bitmask of neighbours of ``v``.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise PreconditionError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise PreconditionError("need exactly one adjacency row per vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_clique(self, mask: int) -> bool:
        return all((self.rows[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_stable(self, mask: int) -> bool:
        return all(not self.rows[v] & mask for v in bits(mask))

    def common_neighbors(self, mask: int) -> int:
        """Vertices outside ``mask`` adjacent to every vertex of ``mask``."""
        out = self.full_mask
        for v in bits(mask):
            out &= self.rows[v]
        return out & ~mask

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by lowest vertex."""
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def components(self) -> list[tuple[int, ...]]:
        return [members(c) for c in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in ascending order.

        Returns the subgraph and the label map ``new -> old``.
        """
        labels = tuple(sorted(set(vertices)))
        for v in labels:
            if not 0 <= v < self.n:
                raise PreconditionError(f"vertex {v} out of range for n={self.n}")
        position = {old: new for new, old in enumerate(labels)}
        keep = to_mask(labels)
        rows = [to_mask(position[w] for w in bits(self.rows[old] & keep)) for old in labels]
        return Graph(len(labels), rows), labels


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates are merged."""
    if n < 0 or n > MAX_VERTICES:
        raise PreconditionError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise PreconditionError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise PreconditionError("complete graph needs m >= 1")
    full = (1 << m) - 1
    return Graph(m, [full & ~(1 << v) for v in range(m)])


def path_graph(length: int) -> Graph:
    """Path on ``length`` vertices numbered along the path."""
    if length < 1:
        raise PreconditionError("path needs at least one vertex")
    return build_graph(length, [(i, i + 1) for i in range(length - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise PreconditionError("cycle needs k >= 3")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph(offset, rows)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product of ``g`` and ``h``.

    Vertex ``(u, a)`` gets label ``u * h.n + a``, so each copy of ``h`` is a
    contiguous block. ``(u, a) ~ (v, b)`` iff ``u`` and ``v`` are equal or
    adjacent, ``a`` and ``b`` are equal or adjacent, and the pairs differ.
    """
    m = h.n
    block = (1 << m) - 1
    rows = []
    for u in range(g.n):
        closed_u = g.rows[u] | 1 << u
        for a in range(m):
            closed_a = h.rows[a] | 1 << a
            row = 0
            for v in bits(closed_u):
                row |= (closed_a & block) << (v * m)
            rows.append(row & ~(1 << (u * m + a)))
    return Graph(g.n * m, rows)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph isomorphic to ``g`` in which old vertex ``order[i]`` becomes ``i``."""
    if sorted(order) != list(range(g.n)):
        raise PreconditionError("order must be a permutation of the vertices")
    position = {old: new for new, old in enumerate(order)}
    rows = [to_mask(position[w] for w in bits(g.rows[old])) for old in order]
    return Graph(g.n, rows)
