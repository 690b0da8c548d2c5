import itertools
import random

import networkx as nx
import pytest

from conftest import random_connected_graph
from oracles import to_nx
from trimetric.errors import CapError, GraphInputError, RegistryError, UndefinedParameterError
from trimetric.graph import (
    canonical_mask,
    cartesian_product,
    complement,
    enumerate_labeled_connected,
    enumerate_labeled_trees,
    from_edge_list,
    generate_family,
    parse_graph6,
)
from trimetric.invariants import in_family_f
from trimetric.metrics import leaf_count
from trimetric.theorems import (
    REGISTRY,
    THEOREM_IDS,
    TREE_IDS,
    Status,
    check,
    check_all,
    exhaustive_scan,
    ng_scan,
    resolve_ids,
    verify_family_formula,
)
from trimetric.triameter import triameter

fam = generate_family


def _status(g, tid):
    return check(g, tid).status


class TestRegistry:
    def test_ids(self):
        assert len(THEOREM_IDS) == 27
        assert [t[:3] for t in THEOREM_IDS] == [f"T{k:02d}" for k in range(1, 28)]
        assert [t[:3] for t in TREE_IDS] == ["T04", "T05", "T06", "T07", "T15", "T19", "T20"]

    def test_resolve(self):
        assert resolve_ids(["T05"]) == ("T05_ORDER_EQUALITY",)
        assert resolve_ids(["5", "t01", "T01_DIAMETER"]) == ("T01_DIAMETER", "T05_ORDER_EQUALITY")
        assert resolve_ids(None) == THEOREM_IDS

    @pytest.mark.parametrize("bad", ["T28", "T5X", "nope"])
    def test_unknown(self, bad):
        with pytest.raises(RegistryError):
            resolve_ids([bad])
        with pytest.raises(RegistryError):
            check(fam("path:4"), bad)

    def test_every_check_has_statement_and_needs(self):
        for chk in REGISTRY.values():
            assert chk.statement and chk.citation and chk.needs


class TestPointChecks:
    def test_path_order_equality(self):
        r = check(fam("path:7"), "T05")
        assert r.status is Status.HOLDS
        assert r.values == {"n": 7, "tr": 12, "is_tree": True, "leaves": 2}

    def test_petersen_vertex_transitive(self):
        r = check(fam("petersen"), "T22")
        assert r.status is Status.HOLDS
        assert r.values == {"rad": 2, "tr": 6}

    def test_c5_strongly_regular(self):
        r = check(fam("cycle:5"), "T23")
        assert r.status is Status.HOLDS
        assert r.values == {"srg": [5, 2, 0, 1], "co_has_triangle": False, "tr": 5}

    def test_petersen_strongly_regular(self):
        r = check(fam("petersen"), "T23")
        assert r.status is Status.HOLDS and r.values["co_has_triangle"] is True

    def test_star_radius_tight(self):
        by_id = {r.id[:3]: r for r in check_all(fam("star:3"))}
        assert by_id["T03"].values == {"rad": 1, "tr": 6}

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_even_cycle_radius_tight(self, k):
        r = check(fam(f"cycle:{2 * k}"), "T03")
        assert r.status is Status.HOLDS
        assert r.values["tr"] == 2 * r.values["rad"] == 2 * k

    def test_p4_additive_tight(self):
        r = check(fam("path:4"), "T26")
        assert r.status is Status.HOLDS
        assert r.values["tr"] + r.values["co_tr"] == 12 == 2 * 4 + 4

    def test_four_leaf_corollary_is_one_way(self):
        r = check(fam("bistar:2,2"), "T07")
        assert r.status is Status.HOLDS and r.values == {"n": 6, "tr": 8, "leaves": 4}
        # four legs of length 2: four leaves but tr = 12 < 2n - 4 = 14
        legs = from_edge_list(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)])
        assert triameter(legs).value == 12
        assert _status(legs, "T07") is Status.INAPPLICABLE


class TestApplicability:
    def test_tree_only_checks_skip_cyclic_graphs(self):
        reports = {r.id[:3]: r.status for r in check_all(fam("cycle:6"))}
        for tid in ("T04", "T06", "T07", "T15", "T20"):
            assert reports[tid] is Status.INAPPLICABLE

    def test_girth_checks_skip_trees(self):
        assert _status(fam("path:5"), "T13") is Status.INAPPLICABLE
        assert _status(fam("path:5"), "T14") is Status.INAPPLICABLE

    def test_tree_complement_skips_stars(self):
        assert _status(fam("star:4"), "T20") is Status.INAPPLICABLE
        assert _status(fam("bistar:2,3"), "T20") is Status.HOLDS
        assert _status(fam("spider:1,2,2"), "T20") is Status.HOLDS

    def test_inapplicable_reports_have_no_values(self):
        assert check(fam("star:4"), "T20").values == {}

    def test_caps(self):
        assert _status(fam("cycle:11"), "T22") is Status.INAPPLICABLE_CAP
        assert _status(fam("grid:5,5"), "T11") is Status.INAPPLICABLE_CAP
        assert _status(fam("grid:5,5"), "T01") is Status.HOLDS

    def test_ng_checks_need_connected_complement(self):
        assert _status(fam("star:4"), "T26") is Status.INAPPLICABLE
        assert _status(fam("path:5"), "T26") is Status.HOLDS

    @pytest.mark.parametrize("g", [from_edge_list(4, [(0, 1), (2, 3)]), fam("path:2")])
    def test_rejects_undefined_inputs(self, g):
        with pytest.raises(UndefinedParameterError):
            check_all(g)


def test_family_f_membership_predicate():
    assert in_family_f(6, 3, 3, 8, 8)
    assert not in_family_f(8, 3, 3, 8, 8)
    assert not in_family_f(6, 2, 3, 8, 8)
    assert not in_family_f(6, 3, 3, 6, 8)


class TestStronglyRegularDefect:
    """The strongly-regular statement fails on cocktail-party graphs (k = mu)."""

    def test_c4(self):
        r = check(fam("cycle:4"), "T23")
        assert r.status is Status.VIOLATED
        assert r.values == {"srg": [4, 2, 0, 2], "co_has_triangle": False, "tr": 4}

    def test_octahedron(self):
        k222 = complement(from_edge_list(6, [(0, 1), (2, 3), (4, 5)]))
        r = check(k222, "T23")
        assert r.status is Status.VIOLATED
        assert r.values == {"srg": [6, 4, 2, 4], "co_has_triangle": False, "tr": 4}

    def test_violations_are_exactly_cocktail_party_graphs(self):
        s = exhaustive_scan([4, 5, 6], ["T23"])
        assert s.counts["T23_STRONGLY_REGULAR"]["violated"] == 3 + 15
        c4 = to_nx(fam("cycle:4"))
        k222 = nx.complete_multipartite_graph(2, 2, 2)
        for v in s.violations:
            g = to_nx(parse_graph6(v.graph6))
            assert nx.is_isomorphic(g, c4) or nx.is_isomorphic(g, k222)
            p = v.values["srg"]
            assert p[1] == p[3]  # k = mu


class TestScan:
    def test_counts_partition_graphs(self):
        s = exhaustive_scan([4, 5])
        assert s.graphs_scanned == 38 + 728
        assert s.per_order == {4: 38, 5: 728}
        for counts in s.counts.values():
            assert sum(counts.values()) == s.graphs_scanned

    def test_workers_do_not_change_the_summary(self):
        a = exhaustive_scan([5], workers=1).as_dict()
        b = exhaustive_scan([5], workers=2).as_dict()
        assert a == b

    def test_elapsed_only_on_request(self):
        s = exhaustive_scan([3], ["T01"])
        assert "elapsed_ms" not in s.as_dict()
        assert s.as_dict(timing=True)["elapsed_ms"] >= 0

    def test_witnesses_retrigger(self):
        s = exhaustive_scan([4], ["T23"])
        assert len(s.violations) == 3
        for v in s.violations:
            again = check(parse_graph6(v.graph6), v.id)
            assert again.status is Status.VIOLATED
            assert again.values == v.values
        assert s.violations == sorted(s.violations, key=lambda r: (r.id, r.graph6))

    def test_guards(self):
        with pytest.raises(CapError):
            exhaustive_scan([8])
        with pytest.raises(CapError):
            exhaustive_scan([10], stream="trees")
        with pytest.raises(GraphInputError):
            exhaustive_scan([2])
        with pytest.raises(GraphInputError):
            exhaustive_scan([4], stream="forests")

    def test_tree_stream(self):
        s = exhaustive_scan([3, 4, 5, 6], TREE_IDS, stream="trees")
        assert s.per_order == {3: 3, 4: 16, 5: 125, 6: 1296}
        assert s.total_violations == 0

    def test_p4_only_order_four_graph_with_connected_complement(self):
        s = exhaustive_scan([4], ["T26"])
        holds = s.counts["T26_NG_ADDITIVE"]["holds"]
        assert holds == 12  # 4!/2 labelings of P_4
        for g in enumerate_labeled_connected(4):
            r = check(g, "T26")
            if r.status is Status.HOLDS:
                assert nx.is_isomorphic(to_nx(g), to_nx(fam("path:4")))
                assert r.values["tr"] + r.values["co_tr"] == 12

    def test_five_classes_at_order_five(self):
        classes, pairs = set(), set()
        for g in enumerate_labeled_connected(5):
            if check(g, "T26").status is Status.HOLDS:
                key = canonical_mask(g)
                classes.add(key)
                pairs.add(min(key, canonical_mask(complement(g))))
        # 8 classes: C_5, the bull, and three complementary pairs
        assert len(classes) == 8
        assert len(pairs) == 5


def test_order_equality_both_directions():
    for n in range(3, 7):
        for g in enumerate_labeled_connected(n):
            tr = triameter(g).value
            is_tree = g.m == n - 1
            assert (tr == 2 * n - 2) == (is_tree and leaf_count(g) in (2, 3))
    for n in range(3, 9):
        for t in enumerate_labeled_trees(n):
            if leaf_count(t) <= 3:
                assert triameter(t).value == 2 * n - 2


def _factor_pool():
    rng = random.Random(5)
    pool = []
    for n in range(3, 6):
        pool += [fam(f"path:{n}"), fam(f"cycle:{n}"), fam(f"star:{n - 1}")]
        pool += [random_connected_graph(rng, n, 0.4) for _ in range(2)]
    return pool


def test_cartesian_additivity_on_small_factors():
    pool = _factor_pool()
    trs = [triameter(g).value for g in pool]
    for (g, tg), (h, th) in itertools.product(zip(pool, trs), repeat=2):
        assert triameter(cartesian_product(g, h)).value == tg + th


class TestNgScan:
    def test_order_five(self):
        r = ng_scan(5)
        assert r.graphs_scanned == 728
        assert r.max_sum <= r.sum_bound
        assert r.min_sum >= 10 and r.min_product >= 25
        assert r.max_product_outside_family <= r.product_bound

    def test_order_six_exception(self):
        r = ng_scan(6)
        assert r.max_sum <= 16
        exc = r.exceptions
        assert exc and all(e.tr == e.co_tr == 8 and e.product == 64 > 60 for e in exc)
        assert all(m.diam == m.co_diam == 3 and m.in_family for m in r.members)
        g = parse_graph6(exc[0].graph6)
        assert triameter(g).value == triameter(complement(g)).value == 8

    def test_bad_order(self):
        with pytest.raises(GraphInputError):
            ng_scan(4)


class TestFamilyFormulas:
    def test_paths_cycles(self):
        rows = verify_family_formula("path", range(3, 30)) + verify_family_formula("cycle", range(3, 30))
        assert all(r.match for r in rows)

    def test_grid_spider_petersen(self):
        rows = verify_family_formula("grid", [(m, n) for m in range(2, 6) for n in range(2, 6)])
        rows += verify_family_formula("spider", [(1, 2, 3), (4, 4, 4)])
        rows += verify_family_formula("petersen", [()])
        assert all(r.match for r in rows)
        assert rows[0].spec == "grid:2,2"

    def test_no_formula(self):
        with pytest.raises(GraphInputError):
            verify_family_formula("star", [4])
