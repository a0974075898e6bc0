"""Shared fixtures: the worked examples transcribed from their figures, plus
seeded corpus builders used by the property suites."""

from __future__ import annotations

import random
from itertools import combinations, product as iproduct

import pytest

from colorgroups.graphs import EdgeColoredGraph
from colorgroups.indposet import Dag


# -- worked examples -----------------------------------------------------------

@pytest.fixture(scope="session")
def ex_gl32():
    """7-vertex tree whose coloring group is GL(3,2), order 168."""
    return EdgeColoredGraph(
        7, [(0, 1, 3), (2, 1, 1), (2, 3, 2), (3, 4, 1), (2, 5, 3), (5, 6, 2)],
        canonicalize=False)


@pytest.fixture(scope="session")
def ex_p15_imprimitive():
    """P15 with the 6-color pattern whose group preserves 5 classes of 3."""
    word = [3, 2, 1, 4, 5, 4, 1, 2, 3, 6, 3, 2, 1, 4]
    return EdgeColoredGraph(15, [(i, i + 1, c) for i, c in enumerate(word)],
                            canonicalize=False)


@pytest.fixture(scope="session")
def ex_three_lines_tree():
    """12-vertex tree drawn on three lines of four vertices; order 6912."""
    return EdgeColoredGraph(
        12, [(0, 4, 1), (1, 5, 1), (2, 6, 1), (3, 7, 1),
             (0, 11, 2), (1, 10, 2), (2, 9, 2), (3, 8, 2),
             (1, 2, 3), (4, 6, 3), (8, 10, 3)],
        canonicalize=False)


@pytest.fixture(scope="session")
def ex_mirror_tree():
    """12-vertex tree with the horizontal reflection; order 1536, embeds in
    the signed permutations on 6 letters."""
    return EdgeColoredGraph(
        12, [(1, 5, 1), (2, 4, 1), (7, 9, 1), (6, 10, 1),
             (2, 3, 2), (8, 9, 2), (0, 1, 2), (10, 11, 2),
             (1, 2, 3), (9, 10, 3), (5, 6, 3)],
        canonicalize=False)


@pytest.fixture(scope="session")
def ex_648_tree():
    """9-vertex tree of order 648."""
    return EdgeColoredGraph(
        9, [(0, 1, 1), (2, 1, 2), (2, 3, 1), (4, 3, 2), (4, 5, 3),
            (0, 6, 2), (0, 7, 3), (1, 8, 3)],
        canonicalize=False)


@pytest.fixture(scope="session")
def ex_toggle_family_subsets():
    """Ground set [4] with the 8-member family of the toggle example."""
    return [set(), {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4},
            {4}, {3, 4}, {2, 3, 4}]


@pytest.fixture(scope="session")
def ex_toggle_tree_family_subsets():
    """Ground set [5], 11 subsets; its toggle poset is a tree."""
    return [{2, 3}, {1, 2, 3}, {1, 2}, {1}, set(), {4}, {3, 4},
            {3, 4, 5}, {3, 5}, {2, 4}, {2, 4, 5}]


# -- corpus builders -------------------------------------------------------------

def random_proper_coloring(rng, n_min=2, n_max=7, edge_prob=0.45):
    """Seeded random valid coloring on <= n_max vertices (possibly
    disconnected, possibly with cycles): greedy smallest-free-color over a
    random edge order, which is proper and surjective by construction."""
    while True:
        n = rng.randint(n_min, n_max)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [p for p in pairs if rng.random() < edge_prob]
        if not edges:
            continue
        rng.shuffle(edges)
        used = [set() for _ in range(n)]
        colored = []
        for (u, v) in edges:
            c = 1
            while c in used[u] or c in used[v]:
                c += 1
            used[u].add(c)
            used[v].add(c)
            colored.append((u, v, c))
        graph = EdgeColoredGraph(n, colored)
        assert graph.validate() == []
        return graph


def random_forest_coloring(rng, n_max=12):
    """Seeded random proper coloring of a forest on <= n_max vertices."""
    n = rng.randint(2, n_max)
    parent = [None] * n
    for v in range(1, n):
        parent[v] = rng.randint(0, v - 1) if rng.random() < 0.8 else None
    edges = [(parent[v], v) for v in range(1, n) if parent[v] is not None]
    if not edges:
        edges = [(0, 1)]
    used = [set() for _ in range(n)]
    colored = []
    for (u, v) in edges:
        c = 1
        while c in used[u] or c in used[v]:
            c += 1
        used[u].add(c)
        used[v].add(c)
        colored.append((u, v, c))
    graph = EdgeColoredGraph(n, colored)
    assert graph.validate() == []
    return graph


def all_dags(m):
    """Every orientation of every graph on m vertices that is acyclic."""
    pairs = list(combinations(range(1, m + 1), 2))
    for orient in iproduct([0, 1, 2], repeat=len(pairs)):
        edges = []
        for (a, b), o in zip(pairs, orient):
            if o == 1:
                edges.append((a, b))
            elif o == 2:
                edges.append((b, a))
        try:
            yield Dag(m, edges)
        except ValueError:
            continue


def random_dag(rng, m_min=2, m_max=7, edge_prob=0.45):
    """Random dag (edges oriented along a random vertex order)."""
    m = rng.randint(m_min, m_max)
    order = list(range(1, m + 1))
    rng.shuffle(order)
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            if rng.random() < edge_prob:
                edges.append((order[i], order[j]))
    return Dag(m, edges)


def brute_force_tops(dag, order=None):
    """All tight orthogonal pairs by exhaustive scan (ground truth)."""
    from colorgroups.indposet import GOrder, Top, is_orthogonal_pair, is_tight
    order = order or GOrder(dag)
    tops = set()
    for assign in iproduct([0, 1, 2], repeat=dag.m):
        d = frozenset(v for v in dag.vertices() if assign[v - 1] == 1)
        u = frozenset(v for v in dag.vertices() if assign[v - 1] == 2)
        if not is_orthogonal_pair(dag, d, u):
            continue
        if is_tight(dag, d, u, order):
            tops.add(Top(d, u))
    return tops
