"""Lazily computed invariant bundle shared by every theorem check on one graph."""

from __future__ import annotations

from functools import cached_property

from .domination import Variant, domination_number
from .errors import CapError
from .graph.core import Graph, _reach, cartesian_product, complement
from .graph.families import path
from .graph.io import to_graph6
from .metrics import (
    TRANSITIVITY_CAP,
    DistanceMatrix,
    SrgParams,
    chromatic_number,
    distance_matrix,
    eccentricities,
    girth,
    has_triangle,
    is_bipartite,
    is_bistar,
    is_hamiltonian,
    is_vertex_transitive,
    srg_parameters,
    vertex_connectivity,
    wiener_index,
)
from .triameter import TriameterResult, triameter, triameter_pruned, triameter_tree

__all__ = ["Invariants", "in_family_f"]


def in_family_f(n: int, diam: int, co_diam: int, tr: int, co_tr: int) -> bool:
    """Membership in the exceptional family for the multiplicative bound."""
    return (
        n in (5, 6, 7)
        and diam == 3
        and co_diam == 3
        and tr in (7, 8, 9)
        and co_tr in (7, 8, 9)
    )


class Invariants:
    """Everything a theorem might ask about a connected graph, computed on demand.

    Attributes that need an exponential solver raise ``CapError`` past its cap.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)

    @cached_property
    def m(self) -> int:
        return self.g.m

    @cached_property
    def dm(self) -> DistanceMatrix:
        return distance_matrix(self.g)

    @cached_property
    def ecc(self) -> list[int]:
        return eccentricities(self.dm)

    @cached_property
    def rad(self) -> int:
        return min(self.ecc)

    @cached_property
    def diam(self) -> int:
        return max(self.ecc)

    @cached_property
    def tr_result(self) -> TriameterResult:
        if self.is_tree:
            return triameter_tree(self.g)
        return triameter_pruned(self.g, self.dm)

    @cached_property
    def tr(self) -> int:
        return self.tr_result.value

    @cached_property
    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.g.adj]

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees)

    @cached_property
    def leaves(self) -> int:
        return self.degrees.count(1)

    @cached_property
    def is_tree(self) -> bool:
        return self.m == self.n - 1

    @cached_property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def is_cycle(self) -> bool:
        return self.n >= 3 and self.m == self.n and self.max_degree == 2 and self.min_degree == 2

    @cached_property
    def is_odd_cycle(self) -> bool:
        return self.is_cycle and self.n % 2 == 1

    @cached_property
    def is_path(self) -> bool:
        return self.is_tree and self.max_degree <= 2

    @cached_property
    def is_star(self) -> bool:
        return self.is_tree and self.max_degree == self.n - 1

    @cached_property
    def is_bistar(self) -> bool:
        return is_bistar(self.g)

    @cached_property
    def girth(self) -> int | None:
        return None if self.is_tree else girth(self.g)

    @cached_property
    def wiener(self) -> int:
        return wiener_index(self.dm)

    @cached_property
    def is_bipartite(self) -> bool:
        return is_bipartite(self.g)

    @cached_property
    def chromatic(self) -> int:
        return chromatic_number(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def gamma(self) -> int:
        return domination_number(self.g, Variant.PLAIN)[0]

    @cached_property
    def gamma_c(self) -> int:
        return domination_number(self.g, Variant.CONNECTED)[0]

    @cached_property
    def gamma_t(self) -> int:
        return domination_number(self.g, Variant.TOTAL)[0]

    @cached_property
    def is_hamiltonian(self) -> bool:
        return is_hamiltonian(self.g)

    @cached_property
    def is_vertex_transitive(self) -> bool:
        vt = is_vertex_transitive(self.g)
        if vt is None:
            raise CapError("vertex-transitivity", self.n, TRANSITIVITY_CAP)
        return vt

    @cached_property
    def srg(self) -> SrgParams | None:
        return srg_parameters(self.g)

    @cached_property
    def co_graph(self) -> Graph:
        return complement(self.g)

    @cached_property
    def co_connected(self) -> bool:
        return _reach(self.co_graph.adj, 0) == (1 << self.n) - 1

    @cached_property
    def co_has_triangle(self) -> bool:
        return has_triangle(self.co_graph)

    @cached_property
    def co_inv(self) -> Invariants:
        return Invariants(self.co_graph)

    @cached_property
    def co_tr(self) -> int:
        return self.co_inv.tr

    @cached_property
    def co_diam(self) -> int:
        return self.co_inv.diam

    @cached_property
    def in_family_f(self) -> bool:
        return in_family_f(self.n, self.diam, self.co_diam, self.tr, self.co_tr)

    @cached_property
    def tr_times_p3(self) -> int:
        return triameter(cartesian_product(self.g, path(3))).value

    @cached_property
    def grid_trs(self) -> tuple[int, ...]:
        return tuple(
            triameter(cartesian_product(self.g, path(k))).value for k in GRID_FACTORS
        )


GRID_FACTORS = (2, 3)
