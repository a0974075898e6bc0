import math
import random

import pytest

from colorgroups.analysis import (analyze, check_vertex_coloring_conditions,
                                  coloring_group, construction,
                                  euler_totient, generators,
                                  imprimitive_vertex_coloring,
                                  long_cycle_check, restricted_tree_report,
                                  size_bound_check,
                                  symmetric_edge_theorem_check,
                                  tree_centralizer_check)
from colorgroups.graphs import EdgeColoredGraph, path_graph
from colorgroups.perm import Perm, parse_cycles
from conftest import random_forest_coloring


def test_generators_examples(ex_gl32):
    taus = generators(ex_gl32)
    assert taus[0] == parse_cycles("(1 2)(3 4)", 7)
    assert taus[1] == parse_cycles("(2 3)(5 6)", 7)
    assert taus[2] == parse_cycles("(0 1)(2 5)", 7)
    assert generators(EdgeColoredGraph(2, [(0, 1, 1)])) == \
        [parse_cycles("(0 1)", 2)]
    assert generators(path_graph([1, 2, 1])) == \
        [parse_cycles("(0 1)(2 3)", 4), parse_cycles("(1 2)", 4)]
    for tau in taus:
        assert (tau * tau).is_identity()


def test_analyze_gl32(ex_gl32):
    report = analyze(ex_gl32)
    assert report.order == 168
    assert report.primitive and report.transitive
    assert report.aut_order == 1
    assert not report.contains_alternating
    assert report.vertex_coloring is None
    assert report.size_bound == (49, 1) and report.size_bound_holds
    payload = report.to_json_dict()
    assert payload["order"] == 168 and payload["vertex_coloring"] is None


def test_analyze_p15(ex_p15_imprimitive):
    report = analyze(ex_p15_imprimitive)
    assert not report.primitive
    assert report.vertex_coloring is not None
    assert report.vertex_coloring.class_sizes() == (3, 3, 3, 3, 3)


def test_analyze_three_lines_tree(ex_three_lines_tree):
    report = analyze(ex_three_lines_tree)
    assert report.order == 6912
    assert not report.primitive
    assert report.vertex_coloring.class_sizes() == (4, 4, 4)
    # the drawn row partition is itself an invariant vertex coloring
    rows = [1] * 4 + [2] * 4 + [3] * 4
    assert check_vertex_coloring_conditions(ex_three_lines_tree, rows) == []


def test_two_colored_paths_are_dihedral():
    for n in range(3, 11):
        g = construction("dihedral", n)
        assert coloring_group(g).order() == 2 * n


def test_imprimitive_vertex_coloring_p4():
    g = path_graph([1, 2, 1])
    nu = imprimitive_vertex_coloring(g)
    classes = {frozenset(c) for c in nu.classes()}
    assert classes == {frozenset({0, 3}), frozenset({1, 2})}
    assert check_vertex_coloring_conditions(g, nu.assignment) == []


def test_imprimitive_vertex_coloring_absent_when_primitive(ex_gl32):
    assert imprimitive_vertex_coloring(ex_gl32) is None


def test_imprimitive_vertex_coloring_rejects_intransitive():
    g = EdgeColoredGraph(4, [(0, 1, 1), (2, 3, 1)])
    with pytest.raises(ValueError):
        imprimitive_vertex_coloring(g)


def test_long_cycle_on_trees_and_forests():
    rng = random.Random(101)
    g = random_forest_coloring(rng, n_max=10)
    # disjoint pair of edges: the one-color product has type (2,2)
    pair = EdgeColoredGraph(4, [(0, 1, 1), (2, 3, 1)])
    assert long_cycle_check(pair) == (2, 2)
    # components of orders 3 and 2
    mixed = EdgeColoredGraph(5, [(0, 1, 1), (1, 2, 2), (3, 4, 1)])
    assert long_cycle_check(mixed) == (3, 2)
    # any 10-vertex tree coloring in any order gives a 10-cycle
    tree = path_graph([1, 2, 3, 1, 2, 3, 1, 2, 3])
    for _ in range(20):
        order = list(range(1, 4))
        rng.shuffle(order)
        assert long_cycle_check(tree, order) == (10,)


def test_long_cycle_rejects_non_forest():
    g = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    with pytest.raises(ValueError):
        long_cycle_check(g)


def test_euler_totient():
    assert euler_totient(1) == 1
    assert euler_totient(7) == 6
    assert euler_totient(9) == 6
    assert euler_totient(10) == 4
    assert euler_totient(12) == 4


def test_size_bound_examples(ex_gl32, ex_648_tree):
    (num, den), holds = size_bound_check(ex_gl32)
    assert (num, den) == (49, 1) and holds          # 168 >= 49
    (num, den), holds = size_bound_check(ex_648_tree)
    assert (num, den) == (81, 3) and holds          # 648 >= 27
    with pytest.raises(ValueError):
        size_bound_check(path_graph([1, 2, 1, 2]))  # two colors only


def test_tree_centralizer_check(ex_mirror_tree):
    aut_order, signed = tree_centralizer_check(ex_mirror_tree)
    assert aut_order == 2
    m, divides, exact = signed
    assert (m, divides, exact) == (6, True, False)
    # ten-vertex joined stars: the full signed group on five letters
    stars = construction("signed", 5)
    aut_order, signed = tree_centralizer_check(stars)
    assert aut_order == 2
    assert signed == (5, True, True)
    assert coloring_group(stars).order() == 2**5 * math.factorial(5)
    # odd trees have trivial color-preserving automorphisms
    rng = random.Random(55)
    checked = 0
    while checked < 20:
        g = random_forest_coloring(rng, n_max=11)
        from colorgroups.graphs import is_tree
        if not is_tree(g) or g.n % 2 == 0:
            continue
        assert tree_centralizer_check(g)[0] == 1
        checked += 1


def test_symmetric_edge_theorem_check():
    g = EdgeColoredGraph(10, [(i, i + 1, c) for i, c in
                              enumerate([4, 3, 1, 2, 1, 3, 2, 4, 3])],
                         canonicalize=False)
    witness = symmetric_edge_theorem_check(g)
    assert witness is not None
    assert coloring_group(g).order() == math.factorial(10)
    (u, v, c) = witness.edge
    assert witness.transposition == Perm.transposition(10, u, v)
    assert witness.long_cycle(u) == v
    assert witness.m % 2 == 1
    # construction with the alternating 1,2 pattern plus a fresh color
    s10 = construction("symmetric", 10)
    assert symmetric_edge_theorem_check(s10) is not None
    # all-distinct coloring: any leaf edge is symmetric
    distinct = path_graph([1, 2, 3, 4])
    assert symmetric_edge_theorem_check(distinct) is not None
    assert coloring_group(distinct).order() == math.factorial(5)
    # no symmetric edge -> absent
    assert symmetric_edge_theorem_check(path_graph([1, 2, 1, 2])) is None


def test_restricted_tree_report(ex_gl32):
    records = restricted_tree_report(ex_gl32)
    full = frozenset({1, 2, 3})
    assert (full, 7, 0) in records
    # on any tree the full color set always yields (n, 0)
    g = path_graph([1, 2, 3, 1])
    assert (frozenset({1, 2, 3}), 5, 0) in restricted_tree_report(g)
    # the {1,2} edges of this coloring are disconnected: no record
    g2 = path_graph([1, 2, 1, 3, 1, 2, 1, 3, 1])
    assert all(s != frozenset({1, 2}) for (s, _, _) in
               restricted_tree_report(g2))


def test_constructions():
    assert coloring_group(construction("alternating", 9)).order() == \
        math.factorial(9) // 2
    assert coloring_group(construction("alternating", 7)).order() == \
        math.factorial(7) // 2
    assert coloring_group(construction("symmetric", 10)).order() == \
        math.factorial(10)
    assert coloring_group(construction("dihedral", 10)).order() == 20
    assert coloring_group(construction("signed", 4)).order() == 384
    with pytest.raises(ValueError):
        construction("alternating", 5)
    with pytest.raises(ValueError):
        construction("alternating", 8)
    with pytest.raises(ValueError):
        construction("unknown", 3)


def test_alternating_construction_word():
    g = construction("alternating", 9)
    assert [c for (_, _, c) in g.edges] == [1, 2, 3, 4, 1, 2, 3, 4]


def test_commuting_containment(ex_gl32, ex_mirror_tree):
    # coloring-group generators commute with color-preserving automorphisms
    from colorgroups.graphs import colored_automorphisms
    for g in (ex_gl32, ex_mirror_tree):
        taus = generators(g)
        for sigma in colored_automorphisms(g).generators:
            for tau in taus:
                assert sigma * tau == tau * sigma


def test_analyze_skips_tree_fields_on_non_trees():
    g = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    report = analyze(g)
    assert report.long_cycle_type is None
    assert report.toggle_clean is None
    assert report.symmetric_edges == []
    assert report.size_bound is None
    g2 = EdgeColoredGraph(4, [(0, 1, 1), (2, 3, 1)])
    report2 = analyze(g2)
    assert not report2.transitive and report2.orbits is not None
    assert report2.long_cycle_type == (2, 2)
