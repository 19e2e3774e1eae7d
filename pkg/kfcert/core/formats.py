# kfcert/core/formats.py
"""
Graph interchange formats.

graph6 follows the public format description bit for bit: the order ``n``
is written as one byte (n ≤ 62), ``~`` plus three bytes (n ≤ 258047) or
``~~`` plus six bytes, followed by the upper triangle of the adjacency
matrix in column order, six bits per byte offset by 63, with the final
byte padded by zero bits.

The edge-list format is one ``u v`` pair per line, 0-indexed; blank lines
and ``#`` comments are ignored.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .exceptions import EdgeListParseError, Graph6ParseError
from .graph import Edge, Graph, from_edges

GRAPH6_HEADER = ">>graph6<<"
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
_LONG_LIMIT = 68719476735


def _encode_order(n: int) -> List[int]:
    if n <= _SHORT_LIMIT:
        return [n + 63]
    if n <= _MEDIUM_LIMIT:
        return [126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)]
    if n <= _LONG_LIMIT:
        return [126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph6 cannot encode n={n}")


def serialize_graph6(graph: Graph) -> str:
    out = _encode_order(graph.n)
    value = 0
    width = 0
    rows = graph.rows
    for j in range(1, graph.n):
        for i in range(j):
            value = (value << 1) | ((rows[i] >> j) & 1)
            width += 1
            if width == 6:
                out.append(value + 63)
                value = 0
                width = 0
    if width:
        out.append((value << (6 - width)) + 63)
    return bytes(out).decode("ascii")


def _decode_order(data: bytes, base: int) -> Tuple[int, int]:
    """Return ``(n, payload_start)``; offsets reported relative to the original text."""

    def sextet(pos: int) -> int:
        if pos >= len(data):
            raise Graph6ParseError("truncated order field", base + pos)
        byte = data[pos]
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"invalid graph6 byte {byte!r}", base + pos)
        return byte - 63

    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    if data[0] != 126:
        return sextet(0), 1
    if len(data) > 1 and data[1] == 126:
        n = 0
        for pos in range(2, 8):
            n = (n << 6) | sextet(pos)
        if n <= _MEDIUM_LIMIT:
            raise Graph6ParseError(f"non-canonical 8-byte order field for n={n}", base)
        return n, 8
    n = 0
    for pos in range(1, 4):
        n = (n << 6) | sextet(pos)
    if n <= _SHORT_LIMIT:
        raise Graph6ParseError(f"non-canonical 4-byte order field for n={n}", base)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    raw = text.rstrip("\r\n")
    base = 0
    if raw.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    try:
        data = raw[base:].encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6ParseError("non-ASCII character in graph6 input", base + exc.start) from exc

    n, start = _decode_order(data, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) < nbytes:
        raise Graph6ParseError(
            f"truncated payload: expected {nbytes} bytes, found {len(payload)}",
            base + len(data),
        )
    if len(payload) > nbytes:
        raise Graph6ParseError("unexpected trailing bytes", base + start + nbytes)

    rows = [0] * n
    bit_index = 0
    i, j = 0, 1
    for pos, byte in enumerate(payload):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"invalid graph6 byte {byte!r}", base + start + pos)
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", base + start + pos)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)


def parse_edge_list(text: str, n: Optional[int] = None) -> Graph:
    """Read ``u v`` lines; ``n`` defaults to one more than the largest vertex seen."""
    edges: List[Edge] = []
    largest = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        parts = content.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {content!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise EdgeListParseError(f"non-integer vertex in {content!r}", lineno) from exc
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative vertex in {content!r}", lineno)
        if u == v:
            raise EdgeListParseError(f"loop at vertex {u}", lineno)
        if n is not None and max(u, v) >= n:
            raise EdgeListParseError(f"vertex {max(u, v)} out of range for n={n}", lineno)
        edges.append((u, v))
        largest = max(largest, u, v)
    return from_edges(largest + 1 if n is None else n, edges)


def serialize_edge_list(graph: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in graph.edges())
