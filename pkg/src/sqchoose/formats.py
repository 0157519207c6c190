"""graph6 (abstract graphs) and planar_code (embedded graphs) readers and writers."""

from __future__ import annotations

import struct
from typing import BinaryIO, Iterable, Iterator

from .errors import ParseError
from .graph import Graph, PlaneGraph

GRAPH6_HEADER = b">>graph6<<"
PLANAR_CODE_HEADER = b">>planar_code<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: list[int]) -> tuple[int, list[int]]:
    if not data:
        raise ParseError("empty graph6 record")
    if data[0] != 63:
        return data[0], data[1:]
    if len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated vertex count")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        return n, data[8:]
    if len(data) < 4:
        raise ParseError("truncated vertex count")
    n = (data[1] << 12) | (data[2] << 6) | data[3]
    return n, data[4:]


def to_graph6(g: Graph, header: bool = False) -> bytes:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) for i in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else b"") + _encode_n(g.n) + body


def from_graph6(record: bytes | str, line: int | None = None) -> Graph:
    if isinstance(record, str):
        record = record.encode("ascii")
    record = record.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
    if record.startswith(b":") or record.startswith(b"&"):
        raise ParseError("sparse6/digraph6 records are not graph6", line)
    data = [c - 63 for c in record]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("byte outside the graph6 range 63..126", line)
    try:
        n, data = _decode_n(data)
    except ParseError as exc:
        raise ParseError(str(exc), line) from None
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}", line)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Yield graphs from graph6 lines, skipping blanks; errors carry 1-based line numbers."""
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        if not line.strip():
            continue
        yield from_graph6(line, lineno)


def write_planar_code(graphs: Iterable[PlaneGraph]) -> bytes:
    """Encode plane graphs; one-byte entries, or a `le` stream when some graph exceeds 255 vertices."""
    graphs = list(graphs)
    wide = any(pg.graph.n > 255 for pg in graphs)
    out = bytearray(b">>planar_code le<<" if wide else PLANAR_CODE_HEADER)
    for pg in graphs:
        entries = [pg.graph.n]
        for rot in pg.rotation:
            entries.extend(u + 1 for u in rot)
            entries.append(0)
        if wide:
            out += b"\x00" + b"".join(struct.pack("<H", e) for e in entries)
        else:
            out += bytes(entries)
    return bytes(out)


def read_planar_code(data: bytes | BinaryIO) -> list[PlaneGraph]:
    if not isinstance(data, (bytes, bytearray)):
        data = data.read()
    data = bytes(data)
    order = "<"
    pos = 0
    for header, endian in ((b">>planar_code<<", "<"), (b">>planar_code le<<", "<"), (b">>planar_code be<<", ">")):
        if data.startswith(header):
            pos, order = len(header), endian
            break
    graphs = []
    index = 0
    while pos < len(data):
        index += 1
        wide = data[pos] == 0
        if wide:
            pos += 1

        def take() -> int:
            nonlocal pos
            if wide:
                if pos + 2 > len(data):
                    raise ParseError("truncated planar_code stream", index)
                (val,) = struct.unpack_from(order + "H", data, pos)
                pos += 2
            else:
                if pos >= len(data):
                    raise ParseError("truncated planar_code stream", index)
                val = data[pos]
                pos += 1
            return val

        n = take()
        rotation = []
        for _ in range(n):
            rot = []
            while (u := take()) != 0:
                if u > n:
                    raise ParseError(f"neighbor {u} exceeds n={n}", index)
                rot.append(u - 1)
            rotation.append(rot)
        graphs.append(PlaneGraph.from_rotation(rotation))
    return graphs
