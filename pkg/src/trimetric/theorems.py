"""Machine-checkable registry of the triameter bounds, plus exhaustive scanners.

Each :class:`TheoremCheck` pairs an applicability predicate (the statement's
hypotheses) with an assertion (its conclusion). Both read a shared
:class:`~trimetric.invariants.Invariants` bundle, so a graph's invariants are
computed at most once however many checks run. A failed hypothesis is
reported as ``inapplicable``, never as ``holds``.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import CapError, GraphInputError, RegistryError, UndefinedParameterError
from .graph.core import Graph, is_connected
from .graph.enumeration import (
    MAX_CONNECTED_ORDER,
    MAX_TREE_ORDER,
    enumerate_labeled_connected,
    enumerate_labeled_trees,
)
from .graph.families import FamilySpec, generate_family
from .invariants import GRID_FACTORS, Invariants
from .metrics import SrgParams
from .triameter import triameter

__all__ = [
    "Status",
    "TheoremCheck",
    "TheoremReport",
    "ScanSummary",
    "NgRow",
    "NgScanResult",
    "FamilyRow",
    "REGISTRY",
    "THEOREM_IDS",
    "TREE_IDS",
    "resolve_ids",
    "check",
    "check_all",
    "run_checks",
    "exhaustive_scan",
    "ng_scan",
    "verify_family_formula",
    "family_formula",
]


class Status(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"
    INAPPLICABLE_CAP = "inapplicable_cap"


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    citation: str
    needs: tuple[str, ...]
    applies: Callable[[Invariants], bool]
    holds: Callable[[Invariants], bool]


@dataclass(frozen=True)
class TheoremReport:
    id: str
    status: Status
    graph6: str
    values: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status.value, "graph6": self.graph6, "values": self.values}


def _always(inv: Invariants) -> bool:
    return True


def _t12(inv: Invariants) -> bool:
    n, tr, chi, delta = inv.n, inv.tr, inv.chromatic, inv.max_degree
    if inv.is_odd_cycle or inv.is_complete:
        return delta < chi and tr + chi <= 2 * n
    if not (chi <= delta and tr + delta <= 2 * n + 1):
        return False
    return tr + delta < 2 * n + 1 or (inv.is_tree and inv.leaves == 3)


def _t18(inv: Invariants) -> bool:
    return all(t == 2 * (inv.n + k - 2) for t, k in zip(inv.grid_trs, GRID_FACTORS))


_CHECKS = [
    TheoremCheck(
        "T01_DIAMETER", "2*diam <= tr <= 3*diam", "diameter-bound theorem",
        ("diam", "tr"), _always,
        lambda i: 2 * i.diam <= i.tr <= 3 * i.diam,
    ),
    TheoremCheck(
        "T02_DENSE", "min degree >= n/2 implies tr <= 6", "minimum-degree corollary",
        ("n", "min_degree", "tr"), lambda i: 2 * i.min_degree >= i.n,
        lambda i: i.tr <= 6,
    ),
    TheoremCheck(
        "T03_RADIUS", "2*rad <= tr <= 6*rad", "radius-bound corollary",
        ("rad", "tr"), _always,
        lambda i: 2 * i.rad <= i.tr <= 6 * i.rad,
    ),
    TheoremCheck(
        "T04_TREE_RADIUS", "trees: 4*rad - 2 <= tr <= 6*rad", "tree-radius corollary",
        ("rad", "tr"), lambda i: i.is_tree,
        lambda i: 4 * i.rad - 2 <= i.tr <= 6 * i.rad,
    ),
    TheoremCheck(
        "T05_ORDER_EQUALITY",
        "tr <= 2n - 2, with equality iff tree with 2 or 3 leaves",
        "order-bound and order-equality theorems",
        ("n", "tr", "is_tree", "leaves"), _always,
        lambda i: i.tr <= 2 * i.n - 2
        and (i.tr == 2 * i.n - 2) == (i.is_tree and i.leaves in (2, 3)),
    ),
    TheoremCheck(
        "T06_TREE_LEAF_BOUND", "trees with l >= 4: tr <= 2n - 2l + 4", "leaf-count upper bound",
        ("n", "leaves", "tr"), lambda i: i.is_tree and i.leaves >= 4,
        lambda i: i.tr <= 2 * i.n - 2 * i.leaves + 4,
    ),
    TheoremCheck(
        "T07_FOUR_LEAVES", "trees with tr = 2n - 4 have exactly 4 leaves", "l = 4 corollary",
        ("n", "tr", "leaves"), lambda i: i.is_tree and i.tr == 2 * i.n - 4,
        lambda i: i.leaves == 4,
    ),
    TheoremCheck(
        "T08_CONNECTED_DOMINATION", "tr <= 2*gamma_c + 4", "connected-domination corollary",
        ("gamma_c", "tr"), _always,
        lambda i: i.tr <= 2 * i.gamma_c + 4,
    ),
    TheoremCheck(
        "T09_DOMINATION", "tr <= 6*gamma", "domination corollary",
        ("gamma", "tr"), _always,
        lambda i: i.tr <= 6 * i.gamma,
    ),
    TheoremCheck(
        "T10_TOTAL_DOMINATION", "tr <= 4*gamma_t", "total-domination corollary",
        ("gamma_t", "tr"), lambda i: i.n >= 2,
        lambda i: i.tr <= 4 * i.gamma_t,
    ),
    TheoremCheck(
        "T11_CONNECTIVITY", "tr <= 3(n-2)/kappa + 3", "vertex-connectivity proposition",
        ("n", "kappa", "tr"), _always,
        lambda i: i.kappa * (i.tr - 3) <= 3 * (i.n - 2),
    ),
    TheoremCheck(
        "T12_CHROMATIC",
        "tr + chi <= tr + Delta <= 2n + 1 (equality only for 3-leaf trees); "
        "odd cycles and complete graphs: tr + Delta < tr + chi <= 2n",
        "chromatic-number theorem",
        ("n", "tr", "chromatic", "max_degree", "is_tree", "leaves", "is_odd_cycle", "is_complete"),
        _always, _t12,
    ),
    TheoremCheck(
        "T13_GIRTH", "graphs with cycles: girth <= tr", "girth lower bound",
        ("girth", "tr"), lambda i: not i.is_tree,
        lambda i: i.girth <= i.tr,
    ),
    TheoremCheck(
        "T14_GIRTH_EQUALITY", "girth = tr iff complete graph or cycle", "girth characterisation",
        ("girth", "tr", "is_complete", "is_cycle"), lambda i: not i.is_tree,
        lambda i: (i.girth == i.tr) == (i.is_complete or i.is_cycle),
    ),
    TheoremCheck(
        "T15_TREE_LOWER", "trees with l >= 3: tr >= ceil(4(n-1)/(l-1))", "leaf-count lower bound",
        ("n", "leaves", "tr"), lambda i: i.is_tree and i.leaves >= 3,
        lambda i: i.tr * (i.leaves - 1) >= 4 * (i.n - 1),
    ),
    TheoremCheck(
        "T16_WIENER", "tr >= 6*sigma / (n(n-1))", "Wiener-index lower bound",
        ("n", "wiener", "tr"), _always,
        lambda i: i.n * (i.n - 1) * i.tr >= 6 * i.wiener,
    ),
    TheoremCheck(
        "T17_CARTESIAN", "tr(G □ P_3) = tr(G) + tr(P_3)", "Cartesian-product proposition",
        ("tr", "tr_times_p3"), _always,
        lambda i: i.tr_times_p3 == i.tr + 4,
    ),
    TheoremCheck(
        "T18_GRID", "tr(P_m □ P_k) = 2(m + k - 2)", "grid corollary",
        ("n", "grid_trs"), lambda i: i.is_path,
        _t18,
    ),
    TheoremCheck(
        "T19_BIPARTITE_PARITY", "bipartite implies tr even", "bipartite theorem",
        ("tr",), lambda i: i.is_bipartite,
        lambda i: i.tr % 2 == 0,
    ),
    TheoremCheck(
        "T20_TREE_COMPLEMENT", "non-star tree, n >= 4: tr(complement) = 6 if bistar else 5",
        "tree-complement theorem",
        ("n", "is_bistar", "co_tr"), lambda i: i.is_tree and i.n >= 4 and not i.is_star,
        lambda i: i.co_tr == (6 if i.is_bistar else 5),
    ),
    TheoremCheck(
        "T21_HAMILTONIAN", "Hamiltonian implies tr <= n", "Hamiltonian proposition",
        ("n", "tr"), lambda i: i.is_hamiltonian,
        lambda i: i.tr <= i.n,
    ),
    TheoremCheck(
        "T22_VERTEX_TRANSITIVE", "vertex-transitive: 2*rad <= tr <= 3*rad",
        "vertex-transitive theorem",
        ("rad", "tr"), lambda i: i.is_vertex_transitive,
        lambda i: 2 * i.rad <= i.tr <= 3 * i.rad,
    ),
    TheoremCheck(
        "T23_STRONGLY_REGULAR",
        "connected strongly regular: tr = 5 if complement triangle-free, else 6",
        "strongly-regular theorem",
        ("srg", "co_has_triangle", "tr"), lambda i: i.srg is not None,
        lambda i: i.tr == (6 if i.co_has_triangle else 5),
    ),
    TheoremCheck(
        "T24_NG_LEMMA_GE7", "G and complement connected, tr >= 7: tr(complement) <= 12",
        "first Nordhaus-Gaddum lemma",
        ("tr", "co_tr"), lambda i: i.co_connected and i.tr >= 7,
        lambda i: i.co_tr <= 12,
    ),
    TheoremCheck(
        "T25_NG_LEMMA_GT9", "G and complement connected, tr > 9: tr(complement) <= 6",
        "second Nordhaus-Gaddum lemma",
        ("tr", "co_tr"), lambda i: i.co_connected and i.tr > 9,
        lambda i: i.co_tr <= 6,
    ),
    TheoremCheck(
        "T26_NG_ADDITIVE", "n >= 4, both connected: 10 <= tr + tr(complement) <= 2n + 4",
        "Nordhaus-Gaddum theorem (sum)",
        ("n", "tr", "co_tr"), lambda i: i.n >= 4 and i.co_connected,
        lambda i: 10 <= i.tr + i.co_tr <= 2 * i.n + 4,
    ),
    TheoremCheck(
        "T27_NG_MULTIPLICATIVE",
        "n >= 4, both connected, outside family F: 25 <= tr * tr(complement) <= 12(n - 1)",
        "Nordhaus-Gaddum theorem (product)",
        ("n", "tr", "co_tr"),
        lambda i: i.n >= 4 and i.co_connected and not i.in_family_f,
        lambda i: 25 <= i.tr * i.co_tr <= 12 * (i.n - 1),
    ),
]

REGISTRY: dict[str, TheoremCheck] = {c.id: c for c in _CHECKS}
THEOREM_IDS: tuple[str, ...] = tuple(REGISTRY)
TREE_IDS: tuple[str, ...] = tuple(
    i for i in THEOREM_IDS if i[:3] in ("T04", "T05", "T06", "T07", "T15", "T19", "T20")
)


def resolve_ids(ids: Iterable[str] | None) -> tuple[str, ...]:
    """Expand short ids (``"T05"``, ``"5"``) to registry ids, keeping registry order."""
    if ids is None:
        return THEOREM_IDS
    out = set()
    for raw in ids:
        key = raw.strip().upper()
        if not key:
            continue
        if key.isdigit():
            key = f"T{int(key):02d}"
        matches = [t for t in THEOREM_IDS if t == key or t.split("_", 1)[0] == key]
        if not matches:
            raise RegistryError(f"unknown theorem id {raw!r}")
        out.update(matches)
    return tuple(t for t in THEOREM_IDS if t in out)


def _jsonable(value):
    if isinstance(value, SrgParams):
        return list(value.as_tuple())
    if isinstance(value, tuple):
        return list(value)
    return value


def _evaluate(inv: Invariants, chk: TheoremCheck) -> Status:
    try:
        if not chk.applies(inv):
            return Status.INAPPLICABLE
        return Status.HOLDS if chk.holds(inv) else Status.VIOLATED
    except CapError:
        return Status.INAPPLICABLE_CAP


def _report(inv: Invariants, chk: TheoremCheck, status: Status) -> TheoremReport:
    values = {}
    if status in (Status.HOLDS, Status.VIOLATED):
        values = {name: _jsonable(getattr(inv, name)) for name in chk.needs}
    return TheoremReport(chk.id, status, inv.graph6, values)


def _require_connected(g: Graph) -> None:
    if g.n < 3:
        raise UndefinedParameterError(f"theorem checks need n >= 3, got {g.n}")
    if not is_connected(g):
        raise UndefinedParameterError("theorem checks need a connected graph")


def check(g: Graph, theorem_id: str) -> TheoremReport:
    """Evaluate one registry entry on ``g``."""
    resolved = resolve_ids([theorem_id])
    if len(resolved) != 1:
        raise RegistryError(f"theorem id {theorem_id!r} is ambiguous or empty")
    tid = resolved[0]
    _require_connected(g)
    inv = Invariants(g)
    chk = REGISTRY[tid]
    return _report(inv, chk, _evaluate(inv, chk))


def check_all(g: Graph, ids: Iterable[str] | None = None) -> list[TheoremReport]:
    _require_connected(g)
    inv = Invariants(g)
    out = []
    for tid in resolve_ids(ids):
        chk = REGISTRY[tid]
        out.append(_report(inv, chk, _evaluate(inv, chk)))
    return out


def run_checks(g: Graph, checks: Sequence[TheoremCheck]) -> tuple[list[Status], Invariants]:
    inv = Invariants(g)
    return [_evaluate(inv, chk) for chk in checks], inv


# ---------------------------------------------------------------------------
# Exhaustive scan
# ---------------------------------------------------------------------------


@dataclass
class ScanSummary:
    orders: tuple[int, ...]
    ids: tuple[str, ...]
    stream: str
    graphs_scanned: int = 0
    per_order: dict[int, int] = field(default_factory=dict)
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[TheoremReport] = field(default_factory=list)
    elapsed_ms: float | None = None

    @property
    def total_violations(self) -> int:
        return sum(c[Status.VIOLATED.value] for c in self.counts.values())

    def violated_ids(self) -> list[str]:
        return [t for t in self.ids if self.counts[t][Status.VIOLATED.value]]

    def as_dict(self, timing: bool = False) -> dict:
        results = []
        for tid in self.ids:
            c = self.counts[tid]
            results.append(
                {
                    "id": tid,
                    **{s.value: c[s.value] for s in Status},
                    "witnesses": [v.as_dict() for v in self.violations if v.id == tid],
                }
            )
        out = {
            "scan": {
                "orders": list(self.orders),
                "ids": list(self.ids),
                "stream": self.stream,
                "graphs_scanned": self.graphs_scanned,
                "per_order": {str(k): v for k, v in sorted(self.per_order.items())},
            },
            "results": results,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


_STREAMS = ("connected", "trees")


def _partitions(stream: str, n: int) -> list[tuple]:
    if stream == "trees":
        if n <= 2:
            return [(stream, n, None)]
        return [(stream, n, first) for first in range(n)]
    nbits = n * (n - 1) // 2
    prefix_bits = min(nbits, 6 if n >= 7 else 3 if n == 6 else 0)
    return [(stream, n, prefix_bits, p) for p in range(1 << prefix_bits)]


def _stream(task: tuple) -> Iterable[Graph]:
    if task[0] == "trees":
        _, n, first = task
        return enumerate_labeled_trees(n, first)
    _, n, prefix_bits, prefix = task
    return enumerate_labeled_connected(n, prefix_bits, prefix)


def _scan_task(args: tuple) -> tuple[int, int, dict[str, list[int]], list[TheoremReport]]:
    task, ids = args
    checks = [REGISTRY[t] for t in ids]
    status_index = {s: k for k, s in enumerate(Status)}
    counts = {t: [0, 0, 0, 0] for t in ids}
    rows = [counts[t] for t in ids]
    violations = []
    scanned = 0
    for g in _stream(task):
        scanned += 1
        inv = Invariants(g)
        for chk, row in zip(checks, rows):
            st = _evaluate(inv, chk)
            row[status_index[st]] += 1
            if st is Status.VIOLATED:
                violations.append(_report(inv, chk, st))
    return task[1], scanned, counts, violations


def _run_tasks(fn, tasks: list, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    import multiprocessing as mp

    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    with ctx.Pool(workers) as pool:
        return pool.map(fn, tasks, chunksize=1)


def _check_orders(orders: Sequence[int], stream: str) -> None:
    cap = MAX_TREE_ORDER if stream == "trees" else MAX_CONNECTED_ORDER
    for n in orders:
        if n > cap:
            raise CapError(f"{stream} scan", n, cap)
        if n < 3:
            raise GraphInputError(f"theorem scans need order >= 3, got {n}")


def exhaustive_scan(
    orders: Iterable[int],
    ids: Iterable[str] | None = None,
    workers: int = 1,
    stream: str = "connected",
) -> ScanSummary:
    """Run the selected checks over every labeled graph (or tree) of each order.

    The summary is identical for any ``workers`` value: counts are summed and
    violations are sorted by theorem id then graph6.
    """
    if stream not in _STREAMS:
        raise GraphInputError(f"stream must be one of {_STREAMS}, got {stream!r}")
    if workers < 1:
        raise GraphInputError("workers must be >= 1")
    orders = tuple(sorted(set(orders)))
    _check_orders(orders, stream)
    ids = resolve_ids(ids)
    start = time.perf_counter()
    tasks = [(task, ids) for n in orders for task in _partitions(stream, n)]
    summary = ScanSummary(orders, ids, stream)
    summary.counts = {t: {s.value: 0 for s in Status} for t in ids}
    for n, scanned, counts, violations in _run_tasks(_scan_task, tasks, workers):
        summary.graphs_scanned += scanned
        summary.per_order[n] = summary.per_order.get(n, 0) + scanned
        for t, row in counts.items():
            for s, c in zip(Status, row):
                summary.counts[t][s.value] += c
        summary.violations.extend(violations)
    summary.violations.sort(key=lambda r: (r.id, r.graph6))
    summary.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 1)
    return summary


# ---------------------------------------------------------------------------
# Nordhaus-Gaddum scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NgRow:
    graph6: str
    n: int
    tr: int
    co_tr: int
    diam: int
    co_diam: int
    in_family: bool

    @property
    def sum(self) -> int:
        return self.tr + self.co_tr

    @property
    def product(self) -> int:
        return self.tr * self.co_tr

    @property
    def exceeds_product_bound(self) -> bool:
        return self.product > 12 * (self.n - 1)

    @property
    def exceeds_sum_bound(self) -> bool:
        return self.sum > 2 * self.n + 4


@dataclass
class NgScanResult:
    """Family members plus extremal values over all self-complementary-connected pairs."""

    n: int
    graphs_scanned: int
    both_connected: int
    members: list[NgRow]
    min_sum: int
    max_sum: int
    min_product: int
    max_product: int
    max_product_outside_family: int

    @property
    def exceptions(self) -> list[NgRow]:
        return [r for r in self.members if r.exceeds_product_bound]

    @property
    def sum_bound(self) -> int:
        return 2 * self.n + 4

    @property
    def product_bound(self) -> int:
        return 12 * (self.n - 1)


def _ng_task(task: tuple) -> tuple:
    scanned = both = 0
    members = []
    lo_s = lo_p = None
    hi_s = hi_p = hi_p_out = 0
    for g in _stream(task):
        scanned += 1
        inv = Invariants(g)
        if not inv.co_connected:
            continue
        both += 1
        tr, co_tr = inv.tr, inv.co_tr
        s, p = tr + co_tr, tr * co_tr
        lo_s = s if lo_s is None else min(lo_s, s)
        lo_p = p if lo_p is None else min(lo_p, p)
        hi_s, hi_p = max(hi_s, s), max(hi_p, p)
        if inv.in_family_f:
            members.append(NgRow(inv.graph6, inv.n, tr, co_tr, inv.diam, inv.co_diam, True))
        else:
            hi_p_out = max(hi_p_out, p)
    return scanned, both, members, lo_s, hi_s, lo_p, hi_p, hi_p_out


def ng_scan(n: int, workers: int = 1) -> NgScanResult:
    """Scan every connected labeled graph on ``n`` vertices whose complement is connected."""
    if n not in (5, 6, 7):
        raise GraphInputError(f"ng_scan covers n in {{5, 6, 7}}, got {n}")
    parts = _run_tasks(_ng_task, _partitions("connected", n), workers)
    members = sorted((m for part in parts for m in part[2]), key=lambda r: r.graph6)
    return NgScanResult(
        n=n,
        graphs_scanned=sum(p[0] for p in parts),
        both_connected=sum(p[1] for p in parts),
        members=members,
        min_sum=min(p[3] for p in parts if p[3] is not None),
        max_sum=max(p[4] for p in parts),
        min_product=min(p[5] for p in parts if p[5] is not None),
        max_product=max(p[6] for p in parts),
        max_product_outside_family=max(p[7] for p in parts),
    )


# ---------------------------------------------------------------------------
# Family formulas
# ---------------------------------------------------------------------------


def family_formula(spec: FamilySpec) -> int:
    """Closed-form triameter for the families that have one."""
    p = spec.params
    formulas = {
        "path": lambda: 2 * (p[0] - 1),
        "cycle": lambda: p[0],
        "complete": lambda: 3,
        "grid": lambda: 2 * (p[0] + p[1] - 2),
        "spider": lambda: 2 * sum(p),
        "petersen": lambda: 6,
    }
    if spec.kind not in formulas:
        raise GraphInputError(f"no closed-form triameter for family {spec.kind!r}")
    return formulas[spec.kind]()


@dataclass(frozen=True)
class FamilyRow:
    spec: str
    computed: int
    expected: int

    @property
    def match(self) -> bool:
        return self.computed == self.expected


def verify_family_formula(kind: str, params: Iterable[Sequence[int] | int]) -> list[FamilyRow]:
    """Computed triameter versus closed form for each parameter tuple."""
    rows = []
    for p in params:
        p = (p,) if isinstance(p, int) else tuple(p)
        spec = FamilySpec(kind, p)
        g = generate_family(spec)
        rows.append(FamilyRow(str(spec), triameter(g).value, family_formula(spec)))
    return rows
