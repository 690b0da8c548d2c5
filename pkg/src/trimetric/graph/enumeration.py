"""Labeled-graph and labeled-tree streams for exhaustive scans.

Both streams can be split into independent partitions: connected graphs by the
high bits of the pair mask, trees by the leading entry of the Prüfer sequence.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from operator import or_

from ..errors import CapError, GraphInputError
from .core import Graph, _mask_tables, _reach

__all__ = [
    "MAX_CONNECTED_ORDER",
    "MAX_TREE_ORDER",
    "enumerate_labeled_connected",
    "enumerate_labeled_trees",
    "prufer_to_tree",
    "canonical_mask",
]

MAX_CONNECTED_ORDER = 7
MAX_TREE_ORDER = 9


def _check_prefix(nbits: int, prefix_bits: int, prefix: int) -> None:
    if not 0 <= prefix_bits <= nbits:
        raise GraphInputError(f"prefix_bits must lie in [0, {nbits}], got {prefix_bits}")
    if not 0 <= prefix < (1 << prefix_bits):
        raise GraphInputError(f"prefix {prefix} does not fit in {prefix_bits} bits")


def enumerate_labeled_connected(
    n: int, prefix_bits: int = 0, prefix: int = 0
) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, once each.

    Graphs are emitted in increasing pair-mask order. With ``prefix_bits > 0``
    only masks whose top ``prefix_bits`` bits equal ``prefix`` are visited, so
    the ``2**prefix_bits`` partitions cover the space disjointly.
    """
    if n < 1:
        raise GraphInputError(f"order must be >= 1, got {n}")
    if n > MAX_CONNECTED_ORDER:
        raise CapError(
            "labeled connected enumeration (ingest larger orders from graph6 files)",
            n,
            MAX_CONNECTED_ORDER,
        )
    nbits = n * (n - 1) // 2
    _check_prefix(nbits, prefix_bits, prefix)
    if n == 1:
        yield Graph(1, (0,))
        return
    full = (1 << n) - 1
    lo = prefix << (nbits - prefix_bits)
    hi = (prefix + 1) << (nbits - prefix_bits)
    tables = _mask_tables(n)
    low_table = tables[0]
    low_bits = min(7, nbits)
    up_lo, up_hi = lo >> low_bits, ((hi - 1) >> low_bits) + 1
    for up in range(up_lo, up_hi):
        base = (0,) * n
        rest = up
        for t in tables[1:]:
            base = tuple(map(or_, base, t[rest & 0x7F]))
            rest >>= 7
        start = max(lo, up << low_bits) - (up << low_bits)
        stop = min(hi, (up + 1) << low_bits) - (up << low_bits)
        for low in range(start, stop):
            adj = tuple(map(or_, base, low_table[low]))
            if _reach(adj, 0) == full:
                yield Graph(n, adj)


def prufer_to_tree(seq: tuple[int, ...] | list[int], n: int | None = None) -> Graph:
    """Decode a Prüfer sequence over ``0..n-1`` (length ``n-2``) into a tree."""
    if n is None:
        n = len(seq) + 2
    if len(seq) != n - 2 or n < 2:
        raise GraphInputError(f"Prüfer sequence length must be n-2 for n={n}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    adj = [0] * n
    for x in seq:
        leaf = degree.index(1)
        adj[leaf] |= 1 << x
        adj[x] |= 1 << leaf
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_labeled_trees(n: int, first: int | None = None) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, decoded from all ``n**(n-2)`` Prüfer sequences.

    ``first`` restricts to sequences starting with that vertex (a partition).
    """
    if n < 1:
        raise GraphInputError(f"order must be >= 1, got {n}")
    if n > MAX_TREE_ORDER:
        raise CapError("labeled tree enumeration", n, MAX_TREE_ORDER)
    if n == 1:
        if first is None:
            yield Graph(1, (0,))
        return
    if n == 2:
        if first is None:
            yield Graph(2, (2, 1))
        return
    heads = range(n) if first is None else (first,)
    for head in heads:
        for tail in itertools.product(range(n), repeat=n - 3):
            yield prufer_to_tree((head,) + tail, n)


def canonical_mask(g: Graph) -> int:
    """Smallest pair mask over all vertex relabelings (brute force, n <= 8)."""
    if g.n > 8:
        raise CapError("brute-force canonical form", g.n, 8)
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            mask |= 1 << (b * (b - 1) // 2 + a)
        if best is None or mask < best:
            best = mask
    return best
