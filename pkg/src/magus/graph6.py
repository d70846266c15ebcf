"""Reading and writing the graph6 ASCII format for simple undirected graphs.

Format essentials: every byte is in 63..126 and carries six bits (value minus
63, most significant bit first). The vertex count is a single byte for
n <= 62, '~' plus three bytes (18 bits) for n <= 258047, and '~~' plus six
bytes (36 bits) beyond that. The body packs the upper triangle of the
adjacency matrix column by column; padding bits in the last byte must be
zero. Parse errors report the byte offset of the offending position.
"""

from __future__ import annotations

from magus.graphs import Graph

HEADER = ">>graph6<<"

# Guard against absurd allocations from corrupted headers.
MAX_VERTICES = 1 << 18


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _byte(data: str, i: int, base: int) -> int:
    b = ord(data[i])
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b} outside graph6 range 63..126", base + i)
    return b - 63


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header allowed)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)

    # Vertex count: 1, 4, or 8 bytes.
    b0 = _byte(s, 0, base)
    if b0 < 63:
        n, i = b0, 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated vertex count", base + len(s))
        b1 = _byte(s, 1, base)
        if b1 < 63:
            n = (b1 << 12) | (_byte(s, 2, base) << 6) | _byte(s, 3, base)
            if n < 63:
                raise Graph6Error("non-canonical long vertex count", base + 1)
            i = 4
        else:
            if len(s) < 8:
                raise Graph6Error("truncated vertex count", base + len(s))
            n = 0
            for j in range(2, 8):
                n = (n << 6) | _byte(s, j, base)
            if n < 258048:
                raise Graph6Error("non-canonical long vertex count", base + 2)
            i = 8
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported maximum", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = len(s) - i
    if body < nbytes:
        raise Graph6Error("truncated bit body", base + len(s))
    if body > nbytes:
        raise Graph6Error("trailing data after bit body", base + i + nbytes)

    adj = [0] * n
    col, row = 1, 0
    consumed = 0
    for j in range(nbytes):
        val = _byte(s, i + j, base)
        for shift in (5, 4, 3, 2, 1, 0):
            if consumed < nbits:
                if val >> shift & 1:
                    adj[row] |= 1 << col
                    adj[col] |= 1 << row
                consumed += 1
                row += 1
                if row == col:
                    col += 1
                    row = 0
            elif val >> shift & 1:
                raise Graph6Error("non-canonical padding bits", base + i + j)

    g = Graph.__new__(Graph)
    g.n = n
    g.adj = tuple(adj)
    return g


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    n = g.n
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds supported maximum")
    out = []
    if n <= 62:
        out.append(chr(n + 63))
    elif n <= 258047:
        out.append("~")
        out.extend(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        out.append("~~")
        out.extend(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))

    val, filled = 0, 0
    for col in range(1, n):
        col_mask = g.adj[col]
        for row in range(col):
            val = (val << 1) | (col_mask >> row & 1)
            filled += 1
            if filled == 6:
                out.append(chr(val + 63))
                val, filled = 0, 0
    if filled:
        out.append(chr((val << (6 - filled)) + 63))
    return "".join(out)
