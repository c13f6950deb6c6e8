"""graph6 short-form encoding (n <= 62).

Layout: one header byte ``n + 63`` followed by the upper triangle of the
adjacency matrix in column order (0,1), (0,2), (1,2), (0,3), ... packed six
bits per byte, most significant bit first, each byte offset by 63.  The
final group is zero padded.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import ParseError, SizeError
from .graph import Graph

MAX_N = 62


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character", exc.start) from None
    return bytes(text)


def parse_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text).rstrip(b"\r\n")
    if not data:
        raise ParseError("empty input", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b} outside [63, 126]", i)
    n = data[0] - 63
    if n > MAX_N:
        raise ParseError("long-form graph6 (n > 62) is not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated: expected {nbytes} adjacency byte(s), got {len(body)}", len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after adjacency data", 1 + nbytes)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> bytes:
    if g.n > MAX_N:
        raise SizeError(f"graph6 short form supports n <= {MAX_N} (got {g.n})")
    out = bytearray([g.n + 63])
    acc = 0
    count = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            count += 1
            if count == 6:
                out.append(acc + 63)
                acc = count = 0
    if count:
        out.append((acc << (6 - count)) + 63)
    return bytes(out)


def to_graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield one graph per non-blank line; errors carry file and line."""
    path = Path(path)
    with path.open("rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
