"""graph6 and edge-list reading/writing."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 36-bit size field")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 18-bit size field")
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    return n, 4


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        x = 0
        for b in bits[p:p + 6]:
            x = x << 1 | b
        body.append(chr(x + 63))
    return _encode_size(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("graph6 must be printable ASCII") from exc
    if any(not 63 <= b <= 126 for b in data):
        raise FormatError(f"byte outside graph6 range in {s!r}")
    n, off = _decode_size(data)
    if n < 1:
        raise FormatError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise FormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    pos = 0
    i, j = 0, 1
    for b in body:
        x = b - 63
        for shift in range(5, -1, -1):
            bit = x >> shift & 1
            if pos >= nbits:
                if bit:
                    raise FormatError("nonzero padding bits")
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("edge list is empty")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must hold two vertices: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"non-integer vertex in {ln!r}") from exc
        if u == v:
            raise FormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {u} {v} out of range for n={n}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def emit_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n", *(f"{u} {v}\n" for u, v in g.edges())])


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)


def iter_edge_list_blocks(text: str) -> Iterator[Graph]:
    """Edge-list streams hold one graph per blank-line-separated block."""
    block: list[str] = []
    for line in text.splitlines() + [""]:
        if line.strip():
            block.append(line)
        elif block:
            yield parse_edge_list("\n".join(block))
            block = []


def sniff_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "g6"
    if suffix in (".edges", ".txt", ".el"):
        return "edges"
    raise FormatError(f"cannot infer graph format from {str(path)!r}; pass --format")


def read_graphs(path: str | Path, fmt: str | None = None) -> list[Graph]:
    fmt = fmt or sniff_format(path)
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "g6":
        return list(iter_graph6_lines(text))
    if fmt == "edges":
        return list(iter_edge_list_blocks(text))
    raise FormatError(f"unknown format {fmt!r}")


def write_graphs(graphs: Iterable[Graph], fmt: str = "g6") -> str:
    if fmt == "g6":
        return "".join(emit_graph6(g) + "\n" for g in graphs)
    if fmt == "edges":
        return "\n".join(emit_edge_list(g) for g in graphs)
    raise FormatError(f"unknown format {fmt!r}")
