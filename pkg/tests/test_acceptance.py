"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they
complete.  Criterion 3 is asserted exactly as specified; the degree-9 and
degree-10 order sets are known to be incomplete in the source data (the
enumerated counterexamples are verified here by explicit element closure,
independently of the stabilizer-chain engine), so those two subchecks fail
honestly.  See notes/decisions.md at the repository root for the analysis.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

import pytest

from colorgroups.analysis import (aba_witness, coloring_group, construction,
                                  generators, imprimitive_vertex_coloring,
                                  long_cycle_check, size_bound_check,
                                  symmetric_edge_theorem_check)
from colorgroups.graphs import (EdgeColoredGraph, all_tree_paths_toggle,
                                cayley_coloring, colored_automorphisms,
                                components, find_symmetric_edges, is_tree,
                                path_graph)
from colorgroups.group import (PermutationGroup, brute_force_elements,
                               centralizer_in_symmetric)
from colorgroups.indposet import (Dag, GOrder, complete_to_top, flip,
                                  hasse_coloring, independence_poset,
                                  independent_sets, verify_structure_theorem)
from colorgroups.perm import Perm, parse_cycles
from colorgroups.survey import check_table, load_reference_rows
from colorgroups.toggles import (ToggleFamily, poset_as_coloring,
                                 toggle_group, toggle_poset)
from colorgroups.trees import free_trees, proper_colorings, tree_with_coloring
from conftest import (all_dags, brute_force_tops, random_dag,
                      random_forest_coloring, random_proper_coloring)


def report(criterion, passed, detail):
    marker = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {criterion} {marker}: {detail}")


@pytest.fixture(scope="module", autouse=True)
def _warm_backend():
    # pay the one-time JIT compilation/cache-load before any timed criterion
    coloring_group(path_graph([1, 2])).order()


# -- shared deep scan over the full survey space --------------------------------

@dataclass
class DegreeScan:
    degree: int
    colorings: int = 0
    orders: set = field(default_factory=set)
    size_bound_checked: int = 0
    imprimitive_checked: int = 0
    aba_found: int = 0
    symmetric_detections: int = 0
    elapsed: float = 0.0


def _scan_degree(n, run_symmetric_theorem):
    scan = DegreeScan(degree=n)
    t0 = time.perf_counter()
    for tree in free_trees(n):
        for coloring in proper_colorings(tree):
            graph = tree_with_coloring(tree, coloring)
            group = coloring_group(graph)
            scan.colorings += 1
            scan.orders.add(group.order())

            # criterion 7: exact integer size bound for >= 3 colors
            if graph.k >= 3:
                (_, _), holds = size_bound_check(graph, group)
                assert holds, (n, coloring)
                scan.size_bound_checked += 1

            # criterion 8: block system <-> vertex coloring equivalence
            primitive = group.is_primitive()
            witness = imprimitive_vertex_coloring(graph, group)
            assert (witness is None) == primitive, (n, coloring)
            if witness is not None:
                scan.imprimitive_checked += 1
                found = aba_witness(graph, witness.assignment)
                assert found is not None, (n, coloring)
                (path, word) = found
                assert word[0] == word[2] != word[1]
                scan.aba_found += 1

            # criterion 6: symmetric edge forces the full symmetric group
            if run_symmetric_theorem:
                detections = find_symmetric_edges(graph)
                if detections:
                    scan.symmetric_detections += 1
                    assert symmetric_edge_theorem_check(graph, group) \
                        is not None, (n, coloring)
    scan.elapsed = time.perf_counter() - t0
    return scan


@pytest.fixture(scope="module")
def scans():
    return {n: _scan_degree(n, run_symmetric_theorem=n <= 9)
            for n in range(2, 11)}


# -- criteria -------------------------------------------------------------------

def test_criterion_1_example_tree_order(ex_gl32):
    t0 = time.perf_counter()
    group = coloring_group(ex_gl32)
    order = group.order()
    primitive = group.is_primitive()
    elapsed = time.perf_counter() - t0
    ok = order == 168 and primitive and elapsed < 1.0
    report("C1", ok, f"7-vertex 3-coloring: order={order} "
           f"primitive={primitive} in {elapsed:.3f}s")
    assert ok


def test_criterion_2_table_spot_checks():
    t0 = time.perf_counter()
    slowest = 0.0
    for entry in load_reference_rows():
        t1 = time.perf_counter()
        from colorgroups.survey import check_table_row
        order, primitive, passed = check_table_row(entry)
        dt = time.perf_counter() - t1
        slowest = max(slowest, dt)
        assert passed, (entry["name"], order, primitive)
        assert dt < 5.0, entry["name"]
    report("C2", True, f"{len(load_reference_rows())} known rows reproduced "
           f"exactly (slowest {slowest:.2f}s, total "
           f"{time.perf_counter() - t0:.2f}s)")


def test_criterion_3_survey_seven(scans):
    got = sorted(scans[7].orders)
    ok = got == [14, 168, 2520, 5040]
    report("C3(n=7)", ok, f"distinct orders {got} in {scans[7].elapsed:.1f}s")
    assert ok
    assert scans[7].elapsed < 600


def test_criterion_3_survey_nine(scans):
    expected = [18, 648, 181440, 362880]
    got = sorted(scans[9].orders)
    ok = got == expected
    extras = sorted(set(got) - set(expected))
    report("C3(n=9)", ok,
           f"distinct orders {got}; stated set {expected}; extra orders "
           f"{extras} are genuine (see notes/decisions.md; the order-1296 "
           f"group below is re-verified by explicit closure)")
    assert scans[9].elapsed < 600
    # the counterexample, verified without the stabilizer-chain engine:
    word = [1, 2, 1, 2, 1, 3, 1, 2]
    closure = brute_force_elements(coloring_group(path_graph(word)))
    assert len(closure) == 1296
    assert ok, ("survey(9) contains the verified extra order 1296 "
                "(path word 1,2,1,2,1,3,1,2); the stated set is incomplete")


def test_criterion_3_survey_ten(scans):
    expected = [20, 200, 240, 3840, 14400, 3628800]
    got = sorted(scans[10].orders)
    ok = got == expected
    extras = sorted(set(got) - set(expected))
    report("C3(n=10)", ok,
           f"distinct orders {got}; stated set {expected}; extra orders "
           f"{extras} are genuine (see notes/decisions.md; the order-320 "
           f"group below is re-verified by explicit closure)")
    assert scans[10].elapsed < 7200
    # the counterexample, verified without the stabilizer-chain engine:
    word = [1, 2, 1, 2, 3, 2, 1, 2, 1]
    closure = brute_force_elements(coloring_group(path_graph(word)))
    assert len(closure) == 320
    assert ok, ("survey(10) contains the verified extra orders 320 and 28800 "
                "(e.g. path word 1,2,1,2,3,2,1,2,1); the stated set is "
                "incomplete")


def test_criterion_4_centralizer_corpus():
    t0 = time.perf_counter()
    rng = random.Random(20240401)
    corpus = []
    seen = set()
    while len(corpus) < 450:
        g = random_proper_coloring(rng)
        if g not in seen:
            seen.add(g)
            corpus.append(g)
    # make sure small trees are represented alongside the random graphs
    for n in range(2, 8):
        for tree in free_trees(n):
            for coloring in list(proper_colorings(tree))[:6]:
                g = tree_with_coloring(tree, coloring)
                if g not in seen:
                    seen.add(g)
                    corpus.append(g)
    assert len(corpus) >= 500
    non_trees = sum(1 for g in corpus if not is_tree(g))
    assert non_trees >= 100
    trees = 0
    for g in corpus:
        group = coloring_group(g)
        aut = colored_automorphisms(g)
        cent = centralizer_in_symmetric(group)
        assert brute_force_elements(aut) == brute_force_elements(cent), \
            g.edges
        if is_tree(g):
            trees += 1
            assert aut.order() in (1, 2), g.edges
    report("C4", True,
           f"{len(corpus)} colorings ({non_trees} non-trees, {trees} trees): "
           f"centralizer equals the color-preserving automorphisms "
           f"element-for-element in {time.perf_counter() - t0:.1f}s")


def test_criterion_5_long_cycle_lemma():
    rng = random.Random(20240402)
    passes = 0
    for _ in range(100):
        g = random_forest_coloring(rng, n_max=12)
        expected = tuple(sorted((len(c) for c in
                                 components(g).components), reverse=True))
        for _ in range(10):
            order = list(range(1, g.k + 1))
            rng.shuffle(order)
            assert long_cycle_check(g, order) == expected
            passes += 1
    report("C5", passes == 1000,
           f"{passes}/1000 random forest products had the component "
           f"cycle type")
    assert passes == 1000


def test_criterion_6_symmetric_edges(scans):
    total = sum(scans[n].symmetric_detections for n in range(2, 10))
    report("C6", total > 0,
           f"{total} symmetric-edge colorings at degrees 2..9: order n!, "
           f"pi^m transposition, sigma n-cycle verified for each")
    assert total > 1000


def test_criterion_7_size_bound(scans):
    total = sum(scans[n].size_bound_checked for n in range(2, 11))
    report("C7", total > 0,
           f"order*(n-phi(n)) >= n^2 held for all {total} three-plus-color "
           f"tree colorings at degrees up to 10")
    assert total > 10000


def test_criterion_8_primitivity_equivalence(scans):
    checked = sum(scans[n].colorings for n in range(2, 11))
    imprimitive = sum(scans[n].imprimitive_checked for n in range(2, 11))
    aba = sum(scans[n].aba_found for n in range(2, 11))
    report("C8", imprimitive == aba,
           f"{checked} colorings: vertex-coloring witness present iff "
           f"imprimitive ({imprimitive} witnesses, all passing conditions "
           f"(i)+(ii), {aba} with an aba path)")
    assert imprimitive == aba
    assert imprimitive > 100


def test_criterion_9_toggle_machinery(ex_toggle_family_subsets,
                                      ex_toggle_tree_family_subsets):
    t0 = time.perf_counter()
    fam = ToggleFamily(4, ex_toggle_family_subsets)
    order = len(brute_force_elements(toggle_group(fam)))
    assert order == 192
    covers = {(tuple(sorted(x)), tuple(sorted(y)), e)
              for (x, y, e) in toggle_poset(fam).covers}
    assert covers == {
        ((), (1,), 1), ((), (4,), 4),
        ((1,), (1, 2), 2), ((4,), (3, 4), 3),
        ((1, 2), (1, 2, 3), 3), ((3, 4), (2, 3, 4), 2),
        ((1, 2, 3), (1, 2, 3, 4), 4), ((2, 3, 4), (1, 2, 3, 4), 1),
    }

    families = [ToggleFamily(5, ex_toggle_tree_family_subsets)]
    universe3 = [frozenset(s) for r in range(4)
                 for s in combinations([1, 2, 3], r)]
    for mask in range(1, 1 << 8):
        subsets = [universe3[i] for i in range(8) if mask & (1 << i)]
        families.append(ToggleFamily(3, subsets))
    rng = random.Random(20240403)
    universe4 = [frozenset(s) for r in range(5)
                 for s in combinations([1, 2, 3, 4], r)]
    for _ in range(200):
        size = rng.randint(3, 14)
        families.append(ToggleFamily(4, rng.sample(universe4, size)))

    tree_posets = 0
    for family in families:
        coloring = poset_as_coloring(toggle_poset(family))
        if len(family) < 3 or not is_tree(coloring):
            continue
        tree_posets += 1
        assert toggle_group(family).is_primitive()
        ok, _ = all_tree_paths_toggle(coloring)
        assert ok
    report("C9", True,
           f"toggle group order 192 with the 8 labeled covers; "
           f"{tree_posets} tree posets all primitive with toggle-word paths "
           f"({time.perf_counter() - t0:.1f}s)")
    assert tree_posets >= 20


def test_criterion_10_independence_posets():
    t0 = time.perf_counter()
    chain3 = Dag(3, [(1, 2), (2, 3)])
    poset = independence_poset(chain3)
    assert len(poset.tops) == 5
    assert sorted(g for (_, _, g) in poset.covers) == [1, 1, 2, 3, 3]

    corpus = list(all_dags(4)) + list(all_dags(3)) + list(all_dags(2)) \
        + list(all_dags(1))
    rng = random.Random(20240404)
    randoms = []
    while len(randoms) < 100:
        dag = random_dag(rng, m_max=7)
        if len(independent_sets(dag)) <= 10:
            randoms.append(dag)
    flips_checked = 0
    for dag in corpus + randoms:
        order = GOrder(dag)
        p = independence_poset(dag)
        for t in p.tops:
            for g in dag.vertices():
                assert flip(dag, flip(dag, t, g, order), g, order) == t
                flips_checked += 1
            for g in dag.vertices():
                for h in dag.vertices():
                    if g < h and not order.gt(g, h) and not order.gt(h, g):
                        assert flip(dag, flip(dag, t, g, order), h, order) \
                            == flip(dag, flip(dag, t, h, order), g, order)
        verify_structure_theorem(dag)
        if dag.m <= 5:
            assert brute_force_tops(dag, order) == set(p.tops)
            for ind in independent_sets(dag):
                assert complete_to_top(dag, ind, "as_D", order).d == ind
                assert complete_to_top(dag, ind, "as_U", order).u == ind
    elapsed = time.perf_counter() - t0
    ok = elapsed < 300
    report("C10", ok,
           f"worked 5-element poset matched; {len(corpus)} exhaustive + "
           f"{len(randoms)} random dags: involutions/commutation "
           f"({flips_checked} flips), structure statement, and completion "
           f"uniqueness all hold in {elapsed:.1f}s")
    assert ok


def test_criterion_11_cayley_round_trip():
    cases = {
        "S3": [parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)],
        "D4": [parse_cycles("(0 1)(2 3)", 4), parse_cycles("(1 3)", 4)],
        "deg7_order168": [parse_cycles("(1 2)(3 4)", 7),
                          parse_cycles("(2 3)(5 6)", 7),
                          parse_cycles("(0 1)(2 5)", 7)],
    }
    details = []
    for name, gens in cases.items():
        source_order = PermutationGroup(gens[0].degree, gens).order()
        graph = cayley_coloring(gens, verify=False)
        group = coloring_group(graph)
        assert graph.n == source_order
        assert group.order() == source_order       # regular: order == degree
        assert group.is_transitive()
        details.append(f"{name}:{source_order}")
    report("C11", True, "regular round trips " + ", ".join(details))
