"""graph6 reader and writer.

Layout: size field N(n) followed by ceil(n(n-1)/12) data bytes. The data bits
list the upper triangle column by column, x(0,1), x(0,2), x(1,2), x(0,3), ...,
six bits per byte, each byte offset by 63, final byte zero-padded.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
_SMALL_MAX = 62
_MEDIUM_MAX = 258047
_LARGE_MAX = 68719476735


def _size_field(n: int) -> bytes:
    if n <= _SMALL_MAX:
        return bytes([n + 63])
    if n <= _MEDIUM_MAX:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _LARGE_MAX:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = bytes(
        63 + int("".join(map(str, bits[p : p + 6])), 2) for p in range(0, len(bits), 6)
    )
    return (_size_field(g.n) + data).decode("ascii")


def _read_size(raw: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed by the size field)."""
    if not raw:
        raise Graph6Error("empty graph6 string", 0)
    if raw[0] != 126:
        return raw[0] - 63, 1
    if len(raw) >= 2 and raw[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(raw) < start + width:
        raise Graph6Error("truncated size field", len(raw))
    n = 0
    for c in raw[start : start + width]:
        n = (n << 6) | (c - 63)
    return n, start + width


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    try:
        raw = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 string", exc.start) from None
    for i, c in enumerate(raw):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the printable range 63-126", i)

    n, pos = _read_size(raw)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(raw) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, found {len(raw) - pos}", pos
        )

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = raw[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = nbytes * 6 - nbits
    if pad and (raw[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(raw) - 1)
    return Graph.from_edges(n, edges)
