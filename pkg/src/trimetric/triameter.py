"""Triameter: the largest value of ``d(u,v) + d(v,w) + d(u,w)`` over vertex triples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphInputError, UndefinedParameterError
from .graph.core import Graph
from .metrics import DistanceMatrix, bfs_distances, distance_matrix, eccentricities, is_tree

__all__ = [
    "TriameterResult",
    "triameter",
    "triameter_naive",
    "triameter_pruned",
    "triameter_tree",
    "triple_sum",
]


@dataclass(frozen=True)
class TriameterResult:
    value: int
    witness: tuple[int, int, int]

    def __str__(self) -> str:
        return f"tr={self.value} witness={','.join(map(str, self.witness))}"


def triple_sum(dm: DistanceMatrix, u: int, v: int, w: int) -> int:
    rows = dm.rows
    return rows[u][v] + rows[v][w] + rows[u][w]


def _require(g: Graph, dm: DistanceMatrix) -> None:
    if g.n < 3:
        raise UndefinedParameterError(f"triameter needs at least 3 vertices, got {g.n}")
    if not dm.connected:
        raise UndefinedParameterError("triameter is undefined for disconnected graphs")


def triameter_naive(g: Graph, dm: DistanceMatrix | None = None) -> TriameterResult:
    """Scan all ``C(n, 3)`` triples; the witness is the lexicographically smallest maximiser."""
    dm = dm or distance_matrix(g)
    _require(g, dm)
    n = g.n
    d = dm.as_array().astype(np.int64)
    idx = np.arange(n)
    upper = idx[:, None] < idx[None, :]
    best, witness = -1, None
    for u in range(n - 2):
        sums = d[u][:, None] + d[u][None, :] + d
        valid = upper & (idx[:, None] > u)
        sums = np.where(valid, sums, -1)
        flat = int(np.argmax(sums))
        top = int(sums.flat[flat])
        if top > best:
            best = top
            witness = (u, flat // n, flat % n)
    return TriameterResult(best, witness)


def triameter_pruned(g: Graph, dm: DistanceMatrix | None = None) -> TriameterResult:
    """Exact triameter with eccentricity-sum pruning.

    Vertices are visited in decreasing eccentricity; a triple is skipped when
    its eccentricity sum cannot beat the best value found so far.
    """
    dm = dm or distance_matrix(g)
    _require(g, dm)
    rows = dm.rows
    ecc = eccentricities(dm)
    order = sorted(range(g.n), key=lambda x: -ecc[x])
    # Seed with a diametral pair plus any third vertex.
    a = order[0]
    b = rows[a].index(ecc[a])
    c = next(x for x in range(g.n) if x != a and x != b)
    best = rows[a][b] + rows[b][c] + rows[a][c]
    witness = (a, b, c)
    n = g.n
    for i in range(n - 2):
        u = order[i]
        eu = ecc[u]
        if 3 * eu <= best:
            break
        ru = rows[u]
        for j in range(i + 1, n - 1):
            v = order[j]
            ev = ecc[v]
            if eu + 2 * ev <= best:
                break
            rv = rows[v]
            duv = ru[v]
            if duv + eu + ev <= best:
                continue
            for k in range(j + 1, n):
                w = order[k]
                ew = ecc[w]
                # d(u,w) and d(v,w) are both bounded by ecc(w) <= ecc(v) <= ecc(u).
                if eu + ev + ew <= best or duv + 2 * ew <= best:
                    break
                s = duv + ru[w] + rv[w]
                if s > best:
                    best = s
                    witness = (u, v, w)
    return TriameterResult(best, tuple(sorted(witness)))


def triameter_tree(t: Graph) -> TriameterResult:
    """Triameter of a tree, scanning only triples of leaves."""
    if t.n < 3:
        raise UndefinedParameterError(f"triameter needs at least 3 vertices, got {t.n}")
    if not is_tree(t):
        raise GraphInputError("triameter_tree expects a tree")
    leaves = [v for v in range(t.n) if t.adj[v].bit_count() == 1]
    if len(leaves) == 2:
        a, b = leaves
        mid = next(x for x in range(t.n) if x not in (a, b))
        return TriameterResult(2 * (t.n - 1), tuple(sorted((a, b, mid))))
    dist = {v: bfs_distances(t, v) for v in leaves}
    best, witness = -1, None
    nl = len(leaves)
    for i in range(nl - 2):
        u = leaves[i]
        du = dist[u]
        for j in range(i + 1, nl - 1):
            v = leaves[j]
            dv = dist[v]
            duv = du[v]
            for k in range(j + 1, nl):
                w = leaves[k]
                s = duv + du[w] + dv[w]
                if s > best:
                    best, witness = s, (u, v, w)
    return TriameterResult(best, witness)


def triameter(g: Graph, dm: DistanceMatrix | None = None) -> TriameterResult:
    """Triameter via the cheapest exact route: leaf scan for trees, pruned scan otherwise."""
    if g.n >= 3 and g.m == g.n - 1 and is_tree(g):
        return triameter_tree(g)
    return triameter_pruned(g, dm)
