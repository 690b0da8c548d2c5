"""Immutable simple undirected graph on vertices ``0..n-1``.

Adjacency is held as one Python ``int`` bitmask per vertex, so adjacency tests
and neighbourhood unions are single integer operations at any order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import lru_cache

from ..errors import GraphInputError

__all__ = [
    "Graph",
    "from_edge_list",
    "from_mask",
    "complement",
    "cartesian_product",
    "is_connected",
    "components",
    "iter_bits",
    "pair_index",
    "MAX_PRODUCT_ORDER",
]

MAX_PRODUCT_ORDER = 1 << 16


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def pair_index(i: int, j: int) -> int:
    """Position of the pair ``{i, j}`` in column order (graph6 order)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


class Graph:
    """A simple undirected graph.

    ``adj[u]`` is a bitmask with bit ``v`` set iff ``u ~ v``. Instances are
    immutable and hashable; build them with :func:`from_edge_list`,
    :func:`from_mask` or the family generators rather than by hand.
    """

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: tuple[int, ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbours of ``u``."""
        return tuple(iter_bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, a in enumerate(self.adj):
            for v in iter_bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def to_mask(self) -> int:
        """Edge set as a bitmask over pairs in column order."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphInputError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        adj = [0] * self.n
        for u, a in enumerate(self.adj):
            b = 0
            for v in iter_bits(a):
                b |= 1 << perm[v]
            adj[perm[u]] = b
        return Graph(self.n, tuple(adj))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"vertex count must be a positive integer, got {n!r}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


_CHUNK = 7


@lru_cache(maxsize=None)
def _mask_tables(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # Per 7-bit slice of the pair mask, the adjacency contribution of every slice value.
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    tables = []
    for start in range(0, len(pairs), _CHUNK):
        chunk = pairs[start : start + _CHUNK]
        table = []
        for val in range(1 << len(chunk)):
            adj = [0] * n
            for k, (i, j) in enumerate(chunk):
                if val >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            table.append(tuple(adj))
        tables.append(tuple(table))
    return tuple(tables)


def adjacency_from_mask(n: int, mask: int) -> tuple[int, ...]:
    tables = _mask_tables(n)
    if not tables:
        return (0,) * n
    adj = tables[0][mask & 0x7F]
    for t in tables[1:]:
        mask >>= _CHUNK
        adj = tuple(a | b for a, b in zip(adj, t[mask & 0x7F]))
    return adj


def from_mask(n: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.to_mask`."""
    if n < 1:
        raise GraphInputError(f"vertex count must be positive, got {n}")
    if mask < 0 or mask >> (n * (n - 1) // 2):
        raise GraphInputError(f"mask {mask} out of range for n={n}")
    return Graph(n, adjacency_from_mask(n, mask))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~a & ~(1 << u) for u, a in enumerate(g.adj)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``; vertex ``(a, b)`` gets index ``a * h.n + b``."""
    order = g.n * h.n
    if order > MAX_PRODUCT_ORDER:
        raise GraphInputError(f"product order {order} exceeds {MAX_PRODUCT_ORDER}")
    hn = h.n
    adj = [0] * order
    for a in range(g.n):
        ga = list(iter_bits(g.adj[a]))
        for b in range(hn):
            x = 0
            for c in ga:
                x |= 1 << (c * hn + b)
            x |= h.adj[b] << (a * hn)
            adj[a * hn + b] = x
    return Graph(order, tuple(adj))


def _reach(adj: tuple[int, ...], start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _reach(g.adj, 0) == (1 << g.n) - 1


def components(g: Graph) -> list[int]:
    """Vertex sets of the connected components, as bitmasks ordered by least vertex."""
    left = (1 << g.n) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = _reach(g.adj, start)
        out.append(comp)
        left &= ~comp
    return out
