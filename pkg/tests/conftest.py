from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from trimetric.graph import Graph, from_edge_list

ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_connected_graph(rng: random.Random, n: int, extra_p: float) -> Graph:
    """Random labeled spanning tree plus each remaining pair with probability ``extra_p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for j in range(n):
        for i in range(j):
            if rng.random() < extra_p:
                edges.add((i, j))
    return from_edge_list(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n: int = 3, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, 1)}
    pairs = [(i, j) for j in range(n) for i in range(j)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1)) if nbits else 0
    edges = [(i, j) for k, (i, j) in enumerate((i, j) for j in range(n) for i in range(j)) if mask >> k & 1]
    return from_edge_list(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)
