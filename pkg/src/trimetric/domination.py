"""Exact domination numbers (plain, connected, total) by increasing-cardinality search."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CapError, GraphInputError, MetricsError, UndefinedParameterError
from .graph.core import Graph, _reach, is_connected
from .metrics import _reach_within

__all__ = [
    "Variant",
    "DominationNumbers",
    "DOMINATION_CAP",
    "MAX_LEAF_CAP",
    "domination_number",
    "domination_numbers",
    "is_dominating",
    "spanning_tree_max_leaves",
]

DOMINATION_CAP = 20
MAX_LEAF_CAP = 16


class Variant(str, Enum):
    PLAIN = "plain"
    CONNECTED = "connected"
    TOTAL = "total"


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def is_dominating(g: Graph, subset, variant: Variant | str = Variant.PLAIN) -> bool:
    """Check the variant's predicate for ``subset`` directly (no search)."""
    variant = Variant(variant)
    s = _mask(subset)
    if not s:
        return False
    full = (1 << g.n) - 1
    cover = 0
    for v in subset:
        cover |= g.adj[v] if variant is Variant.TOTAL else g.adj[v] | (1 << v)
    if cover != full:
        return False
    if variant is Variant.CONNECTED:
        start = (s & -s).bit_length() - 1
        return _reach_within(g.adj, start, s) == s
    return True


def domination_number(
    g: Graph, variant: Variant | str = Variant.PLAIN
) -> tuple[int, tuple[int, ...]]:
    """Minimum size of a (connected / total) dominating set and the first one found.

    Sets are tried by size, and within a size in lexicographic order, so the
    witness is deterministic. A branch is cut as soon as the vertices still
    available cannot cover what is left uncovered.
    """
    variant = Variant(variant)
    n = g.n
    if n > DOMINATION_CAP:
        raise CapError(f"{variant.value} domination number", n, DOMINATION_CAP)
    if not is_connected(g):
        raise MetricsError([f"gamma_{variant.value}"])
    if variant is Variant.TOTAL and n < 2:
        raise UndefinedParameterError("total domination is undefined on K_1")
    adj = g.adj
    full = (1 << n) - 1
    if variant is Variant.TOTAL:
        cover = list(adj)
    else:
        cover = [a | (1 << v) for v, a in enumerate(adj)]
    # suffix[i]: everything coverable using vertices i..n-1
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | cover[i]
    connected = variant is Variant.CONNECTED
    chosen: list[int] = []

    def search(start: int, left: int, covered: int, members: int) -> bool:
        if left == 0:
            if covered != full:
                return False
            if connected:
                first = (members & -members).bit_length() - 1
                return _reach_within(adj, first, members) == members
            return True
        if (covered | suffix[start]) != full:
            return False
        for v in range(start, n - left + 1):
            if (covered | suffix[v]) != full:
                return False
            chosen.append(v)
            if search(v + 1, left - 1, covered | cover[v], members | (1 << v)):
                return True
            chosen.pop()
        return False

    for size in range(1, n + 1):
        if search(0, size, 0, 0):
            return size, tuple(chosen)
    raise AssertionError("the whole vertex set always dominates")  # pragma: no cover


@dataclass(frozen=True)
class DominationNumbers:
    gamma: int
    gamma_c: int
    gamma_t: int | None
    witnesses: dict[str, tuple[int, ...]]


def domination_numbers(g: Graph) -> DominationNumbers:
    gamma, w_plain = domination_number(g, Variant.PLAIN)
    gamma_c, w_conn = domination_number(g, Variant.CONNECTED)
    witnesses = {"plain": w_plain, "connected": w_conn}
    gamma_t = None
    if g.n >= 2:
        gamma_t, w_total = domination_number(g, Variant.TOTAL)
        witnesses["total"] = w_total
    return DominationNumbers(gamma, gamma_c, gamma_t, witnesses)


def spanning_tree_max_leaves(g: Graph) -> int:
    """Most leaves over spanning trees of ``g``, as ``n - γ_c`` (``n >= 3``)."""
    n = g.n
    if n > MAX_LEAF_CAP:
        raise CapError("maximum-leaf spanning tree", n, MAX_LEAF_CAP)
    if _reach(g.adj, 0) != (1 << n) - 1:
        raise GraphInputError("spanning trees need a connected graph")
    if n <= 2:
        return n if n == 2 else 0
    gamma_c, _ = domination_number(g, Variant.CONNECTED)
    return n - gamma_c
