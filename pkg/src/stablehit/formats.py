"""Reading and writing graphs: edge-list text, graph6 and JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError, PreconditionError
from .graph import Graph, build_graph

FORMATS = ("edgelist", "graph6", "json")

_SUFFIXES = {
    ".txt": "edgelist",
    ".edges": "edgelist",
    ".col": "edgelist",
    ".dimacs": "edgelist",
    ".g6": "graph6",
    ".graph6": "graph6",
    ".json": "json",
}


def sniff_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    try:
        return _SUFFIXES[suffix]
    except KeyError:
        raise GraphFormatError(f"cannot infer graph format from {str(path)!r}; pass --format") from None


# -- edge list ---------------------------------------------------------------

def to_edgelist(g: Graph) -> str:
    lines = [f"p {g.n} {g.num_edges()}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by ``e <u> <v>`` lines (0-indexed).

    Lines starting with ``c`` are comments. A DIMACS-style ``p edge n m``
    header is accepted too, but vertices stay 0-indexed.
    """
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate header")
                nums = tokens[2:] if len(tokens) == 4 else tokens[1:]
                if len(nums) != 2:
                    raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
                n, m = int(nums[0]), int(nums[1])
            elif tokens[0] == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                if len(tokens) != 3:
                    raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
                edges.append((int(tokens[1]), int(tokens[2])))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line {line!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    try:
        g = build_graph(n, edges)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc)) from None
    if g.num_edges() != m:
        raise GraphFormatError(f"header announces {m} edges, found {g.num_edges()} distinct")
    return g


# -- graph6 ------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    bitstream = []
    for v in range(1, g.n):
        for u in range(v):
            bitstream.append(1 if g.has_edge(u, v) else 0)
    bitstream.extend([0] * (-len(bitstream) % 6))
    body = bytes(
        63 + int("".join(map(str, bitstream[i:i + 6])), 2) for i in range(0, len(bitstream), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if "\n" in data:
        raise GraphFormatError("graph6 input holds more than one graph")
    raw = data.encode("ascii", errors="replace")
    if not raw or any(not 63 <= c <= 126 for c in raw):
        raise GraphFormatError("invalid graph6 characters")
    if raw[0] != 126:
        n, pos = raw[0] - 63, 1
    elif len(raw) > 1 and raw[1] != 126:
        if len(raw) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = sum((raw[1 + i] - 63) << (6 * (2 - i)) for i in range(3))
        pos = 4
    else:
        if len(raw) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = sum((raw[2 + i] - 63) << (6 * (5 - i)) for i in range(6))
        pos = 8
    nbits = n * (n - 1) // 2
    body = raw[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    try:
        return build_graph(n, edges)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc)) from None


# -- JSON --------------------------------------------------------------------

def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        n = obj["n"]
        edges = obj["edges"]
        if not isinstance(n, int) or not isinstance(edges, list):
            raise TypeError("'n' must be an integer and 'edges' a list")
        pairs = []
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise TypeError(f"bad edge {e!r}")
            pairs.append((e[0], e[1]))
        return build_graph(n, pairs)
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"malformed JSON graph: {exc}") from None


_WRITERS = {"edgelist": to_edgelist, "graph6": lambda g: to_graph6(g) + "\n", "json": to_json}
_READERS = {"edgelist": from_edgelist, "graph6": from_graph6, "json": from_json}


def dumps(g: Graph, fmt: str) -> str:
    if fmt not in _WRITERS:
        raise GraphFormatError(f"unsupported format {fmt!r}")
    return _WRITERS[fmt](g)


def loads(text: str, fmt: str) -> Graph:
    if fmt not in _READERS:
        raise GraphFormatError(f"unsupported format {fmt!r}")
    return _READERS[fmt](text)


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(path)
    try:
        text = Path(path).read_text()
    except UnicodeDecodeError:
        raise GraphFormatError(f"{path} is not a text file") from None
    return loads(text, fmt)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    fmt = fmt or sniff_format(path)
    Path(path).write_text(dumps(g, fmt))
