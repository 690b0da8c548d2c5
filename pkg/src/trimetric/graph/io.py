"""graph6 (short form) and plain edge-list serialisation."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from ..errors import Graph6ParseError, GraphInputError, UnsupportedFormError
from .core import Graph, from_edge_list

__all__ = [
    "parse_graph6",
    "to_graph6",
    "read_graph6_file",
    "write_graph6_file",
    "parse_edge_list",
    "to_edge_list",
    "read_graphs",
]

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedFormError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = []
    adj = g.adj
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word. Long forms and non-zero padding are rejected."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range 63..126", pos)
    if s[0] == "~":
        raise UnsupportedFormError("graph6 long form (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise Graph6ParseError("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        off = min(len(s), 1 + need)
        raise Graph6ParseError(
            f"expected {need} data bytes for n={n}, found {len(s) - 1}", off
        )
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for pos in range(1, len(s)):
        v = ord(s[pos]) - 63
        for shift in range(5, -1, -1):
            bit = v >> shift & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6ParseError("non-zero padding bit", pos)
            k += 1
    return Graph(n, tuple(adj))


def _strip_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if line:
            yield lineno, line


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [parse_graph6(line) for _, line in _strip_lines(fh)]


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [line.split() for _, line in _strip_lines(text.splitlines())]
    if not rows:
        raise GraphInputError("empty edge-list input")
    try:
        header = [int(x) for x in rows[0]]
        body = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise GraphInputError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphInputError("edge-list header must be 'n m'")
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphInputError("edge-list lines must hold exactly two vertices")
    n, m = header
    if len(body) != m:
        raise GraphInputError(f"header declares {m} edges, found {len(body)}")
    return from_edge_list(n, body)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _looks_like_edge_list(first: str) -> bool:
    parts = first.split()
    return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)


def read_graphs(path: str | Path) -> list[Graph]:
    """Read either an edge-list file (one graph) or a graph6 file (one per line)."""
    text = Path(path).read_text(encoding="ascii")
    lines = [line for _, line in _strip_lines(text.splitlines())]
    if not lines:
        raise GraphInputError(f"{path}: no graphs found")
    if _looks_like_edge_list(lines[0]):
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in lines]
