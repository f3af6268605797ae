"""graph6 encoding (as used by nauty's geng/showg).

Layout: N(n) followed by the upper triangle of the adjacency matrix read
column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
byte, big-endian, each byte offset by 63. Orders up to 62 take one length
byte; larger orders use the ``~`` prefixed 18-bit form.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative order {n}", 0)
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"order {n} too large for graph6", 0)


def emit_graph6(g: Graph) -> str:
    n = g.order
    out = bytearray(_encode_order(n))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for off, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside 63..126", base + off)
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated long-form order", base + len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte order form not supported", base + 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} data bytes for order {n}, got {len(data) - pos}",
                          base + min(len(data), pos + need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i + 1, j + 1))
            k += 1
    # Padding bits must be zero in a canonical encoding.
    if nbits % 6 and (data[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + len(data) - 1)
    return Graph.from_edges(n, edges)
