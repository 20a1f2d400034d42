"""graph6 byte-level encoding and strict decoding.

The format packs the upper triangle of the adjacency matrix in column-major
order (bit for (i, j), i < j, ordered by j then i) into 6-bit groups, each
offset by 63 into the printable range. The vertex count is one byte n+63 for
n < 63, else b'~' followed by three 6-bit groups (orders up to 258047; the
package vertex cap is far below the 8-byte escape).
"""

from __future__ import annotations

from .errors import Graph6DecodeError
from .graphs import Graph, GraphBuilder


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    if n < 63:
        head = bytes([n + 63])
    elif n < 258048:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise ValueError(f"n={n} too large for the supported graph6 range")
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for p in range(0, len(bits), 6):
        group = 0
        for b in bits[p : p + 6]:
            group = (group << 1) | b
        body.append(group + 63)
    return head + bytes(body)


def decode_graph6(data: bytes) -> Graph:
    """Decode one graph6 record. Raises Graph6DecodeError with a byte offset
    on any malformed input, including nonzero padding bits.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise Graph6DecodeError("empty input", 0)
    pos = 0
    c = data[0]
    if c == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6DecodeError("8-byte order escape not supported", 1)
        if len(data) < 4:
            raise Graph6DecodeError("truncated order field", len(data))
        n = 0
        for pos in range(1, 4):
            c = data[pos]
            if not 63 <= c <= 126:
                raise Graph6DecodeError(f"byte {c} outside graph6 range", pos)
            n = (n << 6) | (c - 63)
        if n < 63:
            raise Graph6DecodeError(f"non-minimal long order field for n={n}", 1)
        pos = 4
    else:
        if not 63 <= c <= 125:
            raise Graph6DecodeError(f"byte {c} outside graph6 range", 0)
        n = c - 63
        pos = 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6DecodeError(
            f"need {nbytes} body bytes for n={n}, found {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6DecodeError("trailing bytes after graph body", pos + nbytes)

    b = GraphBuilder(n)
    bit_index = 0
    i, j = 0, 1
    for off in range(pos, pos + nbytes):
        c = data[off]
        if not 63 <= c <= 126:
            raise Graph6DecodeError(f"byte {c} outside graph6 range", off)
        group = c - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6DecodeError("nonzero padding bit", off)
            elif bit:
                b.add_edge(i, j)
            bit_index += 1
            if bit_index < nbits:
                i += 1
                if i == j:
                    i, j = 0, j + 1
    return b.build()
