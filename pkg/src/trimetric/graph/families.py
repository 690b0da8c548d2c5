"""Parametric graph families with fixed, documented labelings.

Labelings:

* ``path:n``      -- vertices ``0..n-1`` in order.
* ``cycle:n``     -- ``0..n-1`` around the cycle.
* ``complete:n``  -- ``K_n``.
* ``star:k``      -- ``K_{1,k}``; centre ``0``, leaves ``1..k``.
* ``bistar:a,b``  -- roots ``0`` and ``1``; leaves of ``0`` are ``2..a+1``,
  leaves of ``1`` are ``a+2..a+b+1``.
* ``spider:a,b,c`` -- root ``0``; each leg is labelled consecutively outward.
* ``grid:m,n``    -- ``P_m □ P_n``, row-major (cell ``(i, j)`` is ``i*n + j``).
* ``petersen``    -- outer 5-cycle ``0..4``, inner pentagram ``5..9``, spoke ``i ~ i+5``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GraphInputError
from .core import Graph, cartesian_product, from_edge_list

__all__ = ["FamilySpec", "parse_family_spec", "generate_family", "FAMILY_ARITY"]

FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "bistar": 2,
    "spider": 3,
    "grid": 2,
    "petersen": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the ``kind:p1[,p2[,p3]]`` mini-grammar, e.g. ``grid:4,7``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind not in FAMILY_ARITY:
        raise GraphInputError(f"unknown family {kind!r}; expected one of {sorted(FAMILY_ARITY)}")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise GraphInputError(f"family parameters must be integers: {text!r}") from None
    return FamilySpec(kind, params)


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for j in range(n) for i in range(j)])


def star(k: int) -> Graph:
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def bistar(a: int, b: int) -> Graph:
    edges = [(0, 1)]
    edges += [(0, i) for i in range(2, a + 2)]
    edges += [(1, i) for i in range(a + 2, a + b + 2)]
    return from_edge_list(a + b + 2, edges)


def spider(*legs: int) -> Graph:
    edges = []
    nxt = 1
    for k in legs:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def grid(m: int, n: int) -> Graph:
    return cartesian_product(path(m), path(n))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, edges)


_MINIMUM = {"path": 1, "cycle": 3, "complete": 1, "star": 1, "bistar": 1, "spider": 1, "grid": 1}


def generate_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    kind, params = spec.kind, spec.params
    if kind not in FAMILY_ARITY:
        raise GraphInputError(f"unknown family {kind!r}")
    if len(params) != FAMILY_ARITY[kind]:
        raise GraphInputError(
            f"{kind} takes {FAMILY_ARITY[kind]} parameter(s), got {len(params)}"
        )
    low = _MINIMUM.get(kind, 0)
    for p in params:
        if p < low:
            raise GraphInputError(f"{kind} parameters must be >= {low}, got {params}")
    if kind == "path":
        return path(*params)
    if kind == "cycle":
        return cycle(*params)
    if kind == "complete":
        return complete(*params)
    if kind == "star":
        return star(*params)
    if kind == "bistar":
        return bistar(*params)
    if kind == "spider":
        return spider(*params)
    if kind == "grid":
        return grid(*params)
    return petersen()
