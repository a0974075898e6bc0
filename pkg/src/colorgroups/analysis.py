"""From edge colorings to groups: generator construction, full analysis
reports, the structural theorems as executable checks, and the named
constructions (symmetric / alternating / dihedral / signed) on trees.

All group-facing arithmetic is exact; the size bound is compared as
order * (n - phi(n)) >= n^2 in integers, never in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import (EdgeColoredGraph, all_tree_paths_toggle, components,
                     find_symmetric_edges, colored_automorphisms, is_forest,
                     is_tree, path_graph)
from .group import BlockSystem, Fingerprint, PermutationGroup
from .perm import Perm, product


def generators(graph):
    """One involution per color: the product of that color class's
    transpositions."""
    graph.require_valid()
    taus = []
    for color in range(1, graph.k + 1):
        images = list(range(graph.n))
        for (u, v, c) in graph.edges:
            if c == color:
                images[u], images[v] = v, u
        taus.append(Perm(images))
    return taus


def coloring_group(graph):
    return PermutationGroup(graph.n, generators(graph))


def euler_totient(n):
    """Count of 1 <= m <= n coprime to n."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class ImprimitiveVertexColoring:
    """Vertex coloring whose classes form a block system: every class is
    uniformly joined to other classes color-by-color (condition i) and some
    class has size strictly between 1 and n (condition ii)."""

    assignment: tuple[int, ...]

    @property
    def num_classes(self):
        return max(self.assignment)

    def classes(self):
        out = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return [tuple(cls) for cls in out]

    def class_sizes(self):
        return tuple(sorted((len(c) for c in self.classes()), reverse=True))


def check_vertex_coloring_conditions(graph, nu):
    """Verify both defining conditions of an imprimitive vertex coloring;
    returns a list of violations (empty when it qualifies)."""
    violations = []
    classes = {}
    for v, c in enumerate(nu):
        classes.setdefault(c, set()).add(v)
    for (u, v, b) in graph.edges:
        for (x, y) in ((u, v), (v, u)):
            a, c = nu[x], nu[y]
            if a == c:
                continue
            for x2 in classes[a]:
                if graph.neighbor_by_color[x2].get(b) is None or \
                        nu[graph.neighbor_by_color[x2][b]] != c:
                    violations.append(
                        f"condition (i): vertex {x2} (class {a}) has no "
                        f"{b}-colored edge to class {c}")
                    break
    if not any(1 < len(cls) < graph.n for cls in classes.values()):
        violations.append("condition (ii): no class size strictly between "
                          "1 and n")
    return violations


def imprimitive_vertex_coloring(graph, group=None):
    """Convert a block system of the coloring group into a vertex coloring
    witnessing imprimitivity; None when the group is primitive.

    Requires a transitive coloring group (connected graph); intransitive
    input is rejected because the orbit partition already witnesses the
    imprimitivity of the action.
    """
    graph.require_valid()
    if group is None:
        group = coloring_group(graph)
    if not group.is_transitive():
        raise ValueError("imprimitive vertex colorings require a transitive "
                         "coloring group; the orbit partition is the witness")
    systems = group.block_systems()
    if not systems:
        return None
    blocks = systems[0].blocks
    nu = [0] * graph.n
    for ci, block in enumerate(blocks, start=1):
        for v in block:
            nu[v] = ci
    witness = ImprimitiveVertexColoring(tuple(nu))
    violations = check_vertex_coloring_conditions(graph, witness.assignment)
    if violations:
        raise AssertionError(f"block system failed vertex-coloring "
                             f"conditions: {violations}")
    return witness


def aba_witness(graph, nu):
    """A 4-vertex path i', i, j, j' reading the word b,a,b, where the inner
    edge joins two vertices of one nu-class and the outer edges leave it.
    Every imprimitive tree coloring admits one; None when no such path
    exists."""
    for (i, j, a) in graph.edges:
        for (x, y) in ((i, j), (j, i)):
            if nu[x] != nu[y]:
                continue
            for (xp, b, _) in graph.adjacency[x]:
                if nu[xp] == nu[x]:
                    continue
                yp = graph.neighbor_by_color[y].get(b)
                if yp is not None and nu[yp] == nu[xp]:
                    return ((xp, x, y, yp), (b, a, b))
    return None


def long_cycle_check(graph, color_order=None):
    """Product of all color generators in the given order; its cycle type
    must equal the sorted component orders of the forest."""
    graph.require_valid()
    if not is_forest(graph):
        raise ValueError("long-cycle products are only predictable on forests")
    if color_order is None:
        color_order = list(range(1, graph.k + 1))
    if sorted(color_order) != list(range(1, graph.k + 1)):
        raise ValueError(f"color order must be a permutation of 1..{graph.k}")
    taus = generators(graph)
    prod = product([taus[c - 1] for c in color_order], n=graph.n)
    ctype = prod.cycle_type()
    expected = tuple(sorted((len(c) for c in components(graph).components),
                            reverse=True))
    if ctype != expected:
        raise AssertionError(
            f"cycle type {ctype} != component orders {expected}")
    return ctype


def size_bound_check(graph, group=None):
    """order * (n - phi(n)) >= n^2 for tree colorings with >= 3 colors.

    Returns ((n^2, n - phi(n)), holds) with the bound kept as an exact
    fraction numerator/denominator pair.
    """
    graph.require_valid()
    if not is_tree(graph):
        raise ValueError("size bound applies to tree colorings")
    if graph.k < 3:
        raise ValueError("size bound requires at least 3 colors")
    n = graph.n
    denom = n - euler_totient(n)
    order = (group or coloring_group(graph)).order()
    holds = order * denom >= n * n
    return ((n * n, denom), holds)


def tree_centralizer_check(graph, group=None):
    """Aut order (1 or 2 on trees); when 2, n = 2m is even and the group
    order divides 2^m * m!.

    Returns (aut_order, None) or (aut_order, (m, divides, quotient_exact))
    where quotient_exact is True when the order equals 2^m * m!.
    """
    graph.require_valid()
    if not is_tree(graph):
        raise ValueError("tree centralizer check requires a tree")
    aut = colored_automorphisms(graph)
    aut_order = aut.order()
    if aut_order not in (1, 2):
        raise AssertionError(f"tree coloring with |Aut| = {aut_order}")
    if aut_order == 1:
        return (1, None)
    if graph.n % 2 != 0:
        raise AssertionError("order-2 Aut on an odd tree")
    m = graph.n // 2
    signed_order = (2 ** m) * math.factorial(m)
    order = (group or coloring_group(graph)).order()
    return (2, (m, signed_order % order == 0, order == signed_order))


@dataclass(frozen=True)
class SymmetricEdgeWitness:
    edge: tuple[int, int, int]
    colors: frozenset
    m: int
    transposition: Perm
    long_cycle: Perm


def symmetric_edge_theorem_check(graph, group=None):
    """Construct and verify the witness pair forcing the full symmetric
    group on a tree with a symmetric edge: pi^m is the transposition of the
    edge's endpoints, and sigma = s1 * tau_e * s2 is an n-cycle sending one
    endpoint to the other.  Returns None when no symmetric edge exists.
    """
    graph.require_valid()
    if not is_tree(graph):
        raise ValueError("symmetric-edge theorem applies to trees")
    detections = find_symmetric_edges(graph)
    if not detections:
        return None
    (u, v, c), s = detections[0]
    taus = generators(graph)
    all_colors = set(range(1, graph.k + 1))

    remaining = components(graph, all_colors - s)
    odd_orders = [len(comp) for comp in remaining.components
                  if len(comp) % 2 == 1]
    m = math.lcm(*odd_orders) if odd_orders else 1
    pi = product([taus[a - 1] for a in sorted(all_colors - s)], n=graph.n)
    if pi ** m != Perm.transposition(graph.n, u, v):
        raise AssertionError("pi^m is not the expected transposition")

    k_i = {cc for (_, cc, _) in graph.adjacency[u]}
    sigma1 = product([taus[a - 1] for a in sorted(k_i - {c})], n=graph.n)
    sigma2 = product([taus[a - 1] for a in sorted(all_colors - k_i)],
                     n=graph.n)
    sigma = sigma1 * taus[c - 1] * sigma2
    if sigma.cycle_type() != (graph.n,):
        raise AssertionError("sigma is not an n-cycle")
    if sigma(u) != v:
        raise AssertionError("sigma does not map i to j")

    order = (group or coloring_group(graph)).order()
    if order != math.factorial(graph.n):
        raise AssertionError(
            f"symmetric edge present but order {order} != {graph.n}!")
    return SymmetricEdgeWitness((u, v, c), s, m, pi ** m, sigma)


def restricted_tree_report(graph):
    """For every color subset S whose edges plus incident vertices form a
    tree of order m, record (S, m, n - m)."""
    graph.require_valid()
    if graph.k > 12:
        raise ValueError(f"subset scan capped at 12 colors, got {graph.k}")
    records = []
    for mask in range(1, 1 << graph.k):
        s = frozenset(c for c in range(1, graph.k + 1) if mask & (1 << (c - 1)))
        kept = [(u, v, c) for (u, v, c) in graph.edges if c in s]
        if not kept:
            continue
        verts = sorted({x for (u, v, _) in kept for x in (u, v)})
        index = {x: i for i, x in enumerate(verts)}
        m = len(verts)
        if len(kept) != m - 1:
            continue
        seen = [False] * m
        stack = [0]
        seen[0] = True
        count = 1
        adj = [[] for _ in range(m)]
        for (u, v, _) in kept:
            adj[index[u]].append(index[v])
            adj[index[v]].append(index[u])
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        if count == m:
            records.append((s, m, graph.n - m))
    return records


# -- analysis report -----------------------------------------------------------

@dataclass
class AnalysisReport:
    """Per-coloring summary; tree-only fields are None on non-trees."""

    degree: int
    color_count: int
    order: int
    transitive: bool
    primitive: bool
    orbits: tuple | None
    block_system: BlockSystem | None
    vertex_coloring: ImprimitiveVertexColoring | None
    aut_order: int
    contains_alternating: bool
    fingerprint: Fingerprint
    size_bound: tuple | None = None
    size_bound_holds: bool | None = None
    symmetric_edges: list = field(default_factory=list)
    long_cycle_type: tuple | None = None
    toggle_clean: bool | None = None
    toggle_witness: tuple | None = None
    restricted_trees: list = field(default_factory=list)
    signed_embedding: tuple | None = None

    def to_json_dict(self):
        return {
            "degree": self.degree,
            "color_count": self.color_count,
            "order": self.order,
            "transitive": self.transitive,
            "primitive": self.primitive,
            "orbits": [list(o) for o in self.orbits] if self.orbits else None,
            "block_system": (self.block_system.as_lists()
                             if self.block_system else None),
            "vertex_coloring": (list(self.vertex_coloring.assignment)
                                if self.vertex_coloring else None),
            "aut_order": self.aut_order,
            "contains_alternating": self.contains_alternating,
            "fingerprint": self.fingerprint.to_json_dict(),
            "size_bound": ([self.size_bound[0], self.size_bound[1]]
                           if self.size_bound else None),
            "size_bound_holds": self.size_bound_holds,
            "symmetric_edges": [
                {"edge": list(edge), "colors": sorted(s)}
                for (edge, s) in self.symmetric_edges
            ],
            "long_cycle_type": (list(self.long_cycle_type)
                                if self.long_cycle_type else None),
            "toggle_clean": self.toggle_clean,
            "toggle_witness": ([list(self.toggle_witness[0]),
                                list(self.toggle_witness[1].word)]
                               if self.toggle_witness else None),
            "restricted_trees": [
                {"colors": sorted(s), "m": m, "n_minus_m": d}
                for (s, m, d) in self.restricted_trees
            ],
            "signed_embedding": (list(self.signed_embedding)
                                 if self.signed_embedding else None),
        }


def analyze(graph):
    """Full structural report for a valid coloring."""
    graph.require_valid()
    group = coloring_group(graph)
    transitive = group.is_transitive()
    primitive = group.is_primitive()
    tree = is_tree(graph)
    forest = is_forest(graph)

    block_system = None
    vertex_coloring = None
    orbits = None
    if transitive:
        systems = group.block_systems()
        if systems:
            block_system = systems[0]
            vertex_coloring = imprimitive_vertex_coloring(graph, group)
    else:
        orbits = group.orbits()

    aut = colored_automorphisms(graph)

    report = AnalysisReport(
        degree=graph.n,
        color_count=graph.k,
        order=group.order(),
        transitive=transitive,
        primitive=primitive,
        orbits=orbits,
        block_system=block_system,
        vertex_coloring=vertex_coloring,
        aut_order=aut.order(),
        contains_alternating=group.contains_alternating(),
        fingerprint=group.fingerprint(),
        restricted_trees=restricted_tree_report(graph) if graph.k <= 12 else [],
    )

    if forest:
        report.long_cycle_type = long_cycle_check(graph)
    if tree:
        if graph.k >= 3:
            report.size_bound, report.size_bound_holds = \
                size_bound_check(graph, group)
        report.symmetric_edges = find_symmetric_edges(graph)
        clean, witness = all_tree_paths_toggle(graph)
        report.toggle_clean = clean
        report.toggle_witness = witness
        aut_order, signed = tree_centralizer_check(graph, group)
        report.signed_embedding = signed
    return report


# -- named constructions ---------------------------------------------------------

def construction(kind, size):
    """Tree colorings realizing the classical families.

    symmetric(n):   path alternating 1,2 with the last edge recolored 3.
    alternating(n): path colored 1..(n-1)/2 twice; odd n >= 7 (n = 5 yields
                    the dihedral coloring instead, so it is rejected).
    dihedral(n):    path 2-colored.
    signed(m):      two order-m stars with matching leaf colors joined at
                    their centers by a fresh color; 2m vertices.
    """
    if kind == "symmetric":
        n = size
        if n < 2:
            raise ValueError("symmetric construction needs n >= 2")
        word = [1 if i % 2 == 0 else 2 for i in range(n - 1)]
        word[-1] = 3
        return path_graph(word)
    if kind == "alternating":
        n = size
        if n == 5:
            raise ValueError("the alternating construction fails for n = 5 "
                             "(the 2-coloring of P5 is dihedral)")
        if n < 7 or n % 2 == 0:
            raise ValueError("alternating construction needs odd n >= 7")
        k = (n - 1) // 2
        return path_graph(list(range(1, k + 1)) * 2)
    if kind == "dihedral":
        n = size
        if n < 3:
            raise ValueError("dihedral construction needs n >= 3")
        return path_graph([1 if i % 2 == 0 else 2 for i in range(n - 1)])
    if kind == "signed":
        m = size
        if m < 2:
            raise ValueError("signed construction needs star order m >= 2")
        edges = []
        for leaf in range(1, m):
            edges.append((0, leaf, leaf))
            edges.append((m, m + leaf, leaf))
        edges.append((0, m, m))
        return EdgeColoredGraph(2 * m, edges)
    raise ValueError(f"unknown construction kind {kind!r}")
