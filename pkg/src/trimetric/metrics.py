"""Distance and structural invariants of small graphs.

The exponential routines (chromatic number, vertex connectivity, Hamiltonicity,
vertex-transitivity) are exact and guarded by order caps; past the cap they
raise :class:`~trimetric.errors.CapError` (or return ``None`` where noted).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapError, GraphInputError, MetricsError
from .graph.core import Graph, is_connected, iter_bits

__all__ = [
    "UNREACHABLE",
    "ACYCLIC",
    "DistanceMatrix",
    "SrgParams",
    "MetricsSummary",
    "bfs_distances",
    "distance_matrix",
    "eccentricities",
    "girth",
    "wiener_index",
    "chromatic_number",
    "vertex_connectivity",
    "is_tree",
    "leaf_count",
    "is_bipartite",
    "has_triangle",
    "is_complete",
    "is_cycle",
    "is_star",
    "is_bistar",
    "is_hamiltonian",
    "is_vertex_transitive",
    "srg_parameters",
    "metrics_summary",
    "CHROMATIC_CAP",
    "CONNECTIVITY_CAP",
    "HAMILTONIAN_CAP",
    "TRANSITIVITY_CAP",
]

UNREACHABLE = 0xFFFF
ACYCLIC = None

CHROMATIC_CAP = 20
CONNECTIVITY_CAP = 16
HAMILTONIAN_CAP = 18
TRANSITIVITY_CAP = 10


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; ``UNREACHABLE`` where no path exists."""
    if not 0 <= source < g.n:
        raise GraphInputError(f"source {source} outside [0, {g.n})")
    adj = g.adj
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        f = frontier
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = d
            f ^= low
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts. ``rows[u][v]`` is ``d(u, v)`` or ``UNREACHABLE``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]

    @property
    def connected(self) -> bool:
        return UNREACHABLE not in self.rows[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint16).reshape(self.n, self.n)


def distance_matrix(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def eccentricities(dm: DistanceMatrix) -> list[int]:
    """Per-vertex eccentricity; ``UNREACHABLE`` everywhere if the graph is disconnected."""
    return [max(row) for row in dm.rows]


def wiener_index(dm: DistanceMatrix) -> int:
    if not dm.connected:
        raise MetricsError(["wiener"])
    return sum(map(sum, dm.rows)) // 2


# ---------------------------------------------------------------------------
# Cycles and simple recognisers
# ---------------------------------------------------------------------------


def has_triangle(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        au = adj[u]
        for v in iter_bits(au >> (u + 1)):
            if au & adj[u + 1 + v]:
                return True
    return False


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``ACYCLIC`` (``None``) for forests."""
    if has_triangle(g):
        return 3
    n = g.n
    adj = g.adj
    best = None
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        for x in queue:
            dx = dist[x]
            if best is not None and 2 * dx + 1 >= best:
                break
            for y in iter_bits(adj[x]):
                if dist[y] < 0:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    length = dx + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def leaf_count(g: Graph) -> int:
    return sum(1 for a in g.adj if a.bit_count() == 1)


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = [s]
        for x in queue:
            for y in iter_bits(g.adj[x]):
                if colour[y] < 0:
                    colour[y] = colour[x] ^ 1
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(a.bit_count() == 2 for a in g.adj) and is_connected(g)


def is_star(g: Graph) -> bool:
    """``K_{1,k}`` for some ``k >= 1``."""
    return g.n >= 2 and is_tree(g) and max(g.degrees()) == g.n - 1


def is_bistar(g: Graph) -> bool:
    """Two adjacent roots carrying all leaves (``P_4`` included, ``n >= 4``)."""
    if g.n < 4 or not is_tree(g):
        return False
    inner = [u for u in range(g.n) if g.degree(u) >= 2]
    return len(inner) == 2 and g.has_edge(*inner)


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------


def _greedy_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for start in range(g.n):
        clique = 1 << start
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda x: (g.adj[x] & cand).bit_count())
            clique |= 1 << v
            cand &= g.adj[v]
        best = max(best, clique.bit_count())
    return best


def _dsatur_order_colouring(g: Graph) -> int:
    n, adj = g.n, g.adj
    classes: list[int] = []
    coloured = 0
    for _ in range(n):
        v = _most_saturated(n, adj, classes, coloured)
        for c, cls in enumerate(classes):
            if not adj[v] & cls:
                classes[c] |= 1 << v
                break
        else:
            classes.append(1 << v)
        coloured |= 1 << v
    return len(classes)


def _most_saturated(n: int, adj: tuple[int, ...], classes: list[int], coloured: int) -> int:
    best_v, best_key = -1, (-1, -1)
    for v in range(n):
        if coloured >> v & 1:
            continue
        sat = sum(1 for cls in classes if adj[v] & cls)
        key = (sat, (adj[v] & ~coloured).bit_count())
        if key > best_key:
            best_v, best_key = v, key
    return best_v


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: DSATUR upper bound, then DSATUR branch-and-bound."""
    n = g.n
    if n > CHROMATIC_CAP:
        raise CapError("chromatic number", n, CHROMATIC_CAP)
    if g.m == 0:
        return 1
    upper = _dsatur_order_colouring(g)
    lower = _greedy_clique(g)
    if upper == lower:
        return upper
    adj = g.adj
    best = upper
    classes: list[int] = []

    def search(coloured: int, count: int) -> None:
        nonlocal best
        if count == n:
            best = len(classes)
            return
        v = _most_saturated(n, adj, classes, coloured)
        bit = 1 << v
        for c in range(len(classes)):
            if not adj[v] & classes[c]:
                classes[c] |= bit
                search(coloured | bit, count + 1)
                classes[c] ^= bit
                if best == lower:
                    return
        if len(classes) + 1 < best:
            classes.append(bit)
            search(coloured | bit, count + 1)
            classes.pop()

    search(0, 0)
    return best


# ---------------------------------------------------------------------------
# Vertex connectivity
# ---------------------------------------------------------------------------


def _reach_within(adj: tuple[int, ...], start: int, allowed: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; ``n - 1`` for complete graphs."""
    n = g.n
    if n > CONNECTIVITY_CAP:
        raise CapError("vertex connectivity", n, CONNECTIVITY_CAP)
    if not is_connected(g):
        raise MetricsError(["kappa"])
    if is_complete(g):
        return n - 1
    full = (1 << n) - 1
    delta = min(g.degrees())
    for k in range(1, delta + 1):
        for cut in combinations(range(n), k):
            cut_mask = 0
            for v in cut:
                cut_mask |= 1 << v
            rest = full & ~cut_mask
            start = (rest & -rest).bit_length() - 1
            if _reach_within(g.adj, start, rest) != rest:
                return k
    return delta


# ---------------------------------------------------------------------------
# Hamiltonicity and automorphisms
# ---------------------------------------------------------------------------


def is_hamiltonian(g: Graph) -> bool:
    n = g.n
    if n > HAMILTONIAN_CAP:
        raise CapError("Hamiltonian cycle search", n, HAMILTONIAN_CAP)
    if n < 3 or any(a.bit_count() < 2 for a in g.adj) or not is_connected(g):
        return False
    adj = g.adj
    full = (1 << n) - 1

    def extend(last: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[last] & 1)
        free = full & ~visited
        # An unvisited vertex left with fewer than one free neighbour (plus the
        # path ends) can never be threaded into the cycle.
        for w in iter_bits(free):
            ends = (adj[w] & (free | 1 | (1 << last))).bit_count()
            if ends < 2:
                return False
        for v in iter_bits(adj[last] & free):
            if extend(v, visited | (1 << v)):
                return True
        return False

    return extend(0, 1)


def _find_automorphism(adj: tuple[int, ...], order: list[int], target: int) -> bool:
    n = len(adj)
    image = [-1] * n
    degrees = [a.bit_count() for a in adj]

    def place(i: int, used: int, mapped: int) -> bool:
        if i == n:
            return True
        v = order[i]
        want = 0
        for u in iter_bits(adj[v] & mapped):
            want |= 1 << image[u]
        image_mask = 0
        for u in iter_bits(mapped):
            image_mask |= 1 << image[u]
        cands = [target] if i == 0 else range(n)
        for c in cands:
            if used >> c & 1 or degrees[c] != degrees[v]:
                continue
            if adj[c] & image_mask != want:
                continue
            image[v] = c
            if place(i + 1, used | (1 << c), mapped | (1 << v)):
                return True
        image[v] = -1
        return False

    return place(0, 0, 0)


def is_vertex_transitive(g: Graph) -> bool | None:
    """Whether ``Aut(g)`` is transitive; ``None`` (unknown) above the order cap."""
    n = g.n
    if n > TRANSITIVITY_CAP:
        return None
    if len(set(g.degrees())) > 1:
        return False
    # Place vertex 0 first, then grow along BFS layers so adjacency constraints bite early.
    order, seen = [], 0
    for s in range(n):
        if seen >> s & 1:
            continue
        queue = [s]
        seen |= 1 << s
        for x in queue:
            order.append(x)
            for y in iter_bits(g.adj[x] & ~seen):
                seen |= 1 << y
                queue.append(y)
    orbit = 1
    for t in range(1, n):
        if orbit >> t & 1:
            continue
        if not _find_automorphism(g.adj, order, t):
            return False
        orbit |= 1 << t
    return True


# ---------------------------------------------------------------------------
# Strongly regular graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def srg_parameters(g: Graph) -> SrgParams | None:
    """``(n, k, λ, μ)`` if ``g`` is strongly regular, else ``None``.

    Complete and edgeless graphs are not counted as strongly regular: one of the
    two common-neighbour counts would be vacuous.
    """
    n = g.n
    if n < 3:
        return None
    degs = g.degrees()
    k = degs[0]
    if any(d != k for d in degs) or k == 0 or k == n - 1:
        return None
    adj = g.adj
    lam = mu = None
    for u in range(n):
        for v in range(u + 1, n):
            common = (adj[u] & adj[v]).bit_count()
            if adj[u] >> v & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    return None
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return None
    return SrgParams(n, k, lam, mu)


# ---------------------------------------------------------------------------
# Summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MetricsSummary:
    n: int
    m: int
    ecc: tuple[int, ...]
    rad: int
    diam: int
    center: tuple[int, ...]
    girth: int | None
    wiener: int
    min_degree: int
    max_degree: int
    leaf_count: int
    chromatic: int | None
    kappa: int | None
    is_tree: bool
    is_bipartite: bool
    has_triangle: bool
    is_bistar: bool
    is_hamiltonian: bool | None
    is_vertex_transitive: bool | None
    srg: SrgParams | None

    def as_dict(self) -> dict:
        out = {}
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if isinstance(value, SrgParams):
                value = list(value.as_tuple())
            elif isinstance(value, tuple):
                value = list(value)
            out[name] = value
        return out


def _capped(fn, g):
    try:
        return fn(g)
    except CapError:
        return None


def metrics_summary(g: Graph, dm: DistanceMatrix | None = None) -> MetricsSummary:
    """Every invariant at once. Fields past their solver's cap are ``None``."""
    dm = dm or distance_matrix(g)
    if not dm.connected:
        raise MetricsError(["ecc", "rad", "diam", "center", "wiener", "kappa"])
    ecc = eccentricities(dm)
    rad, diam = min(ecc), max(ecc)
    degs = g.degrees()
    return MetricsSummary(
        n=g.n,
        m=g.m,
        ecc=tuple(ecc),
        rad=rad,
        diam=diam,
        center=tuple(v for v in range(g.n) if ecc[v] == rad),
        girth=girth(g),
        wiener=wiener_index(dm),
        min_degree=min(degs),
        max_degree=max(degs),
        leaf_count=leaf_count(g),
        chromatic=_capped(chromatic_number, g),
        kappa=_capped(vertex_connectivity, g),
        is_tree=g.m == g.n - 1,
        is_bipartite=is_bipartite(g),
        has_triangle=has_triangle(g),
        is_bistar=is_bistar(g),
        is_hamiltonian=_capped(is_hamiltonian, g),
        is_vertex_transitive=is_vertex_transitive(g),
        srg=srg_parameters(g),
    )
