"""Independence posets of directed acyclic graphs: tight orthogonal pairs,
flips, labeled Hasse diagrams, and the structural checks connecting their
coloring groups to alternating groups.

Conventions (see also the tightness oracle in the tests, which is the
ground truth for small graphs):

* An orthogonal pair (D, U) consists of two disjoint independent sets with
  no directed edge from an element of D to an element of U.  Edges from U
  to D are allowed.
* Increasing an element of D (or decreasing one of U) replaces it by a
  strictly larger (smaller) element of the reachability order that is not
  already present in the modified set.
* The linear extension ell lists vertices minimal-side first (sinks before
  sources); ell_prime is its reverse.  U-completions scan ell, D-completions
  scan ell_prime, and a flip at g only considers new D-elements below g and
  new U-elements above g.  This reproduces the worked five-element poset of
  the increasing three-chain and keeps flips involutive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .analysis import coloring_group
from .graphs import EdgeColoredGraph, ParseError, components, is_connected
from .group import PermutationGroup

DEFAULT_TOP_CAP = 1 << 16
STRUCTURE_DEGREE_CAP = 20


class Dag:
    """Directed acyclic simple graph on vertices 1..m."""

    def __init__(self, m, edges):
        self.m = int(m)
        seen = set()
        for (a, b) in edges:
            a, b = int(a), int(b)
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                raise ValueError(f"vertex out of range in edge ({a}, {b})")
            if a == b:
                raise ValueError(f"loop at {a}")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a}, {b})")
            if (b, a) in seen:
                raise ValueError(f"antiparallel pair ({a}, {b}) makes a cycle")
            seen.add((a, b))
        self.edges = tuple(sorted(seen))
        self.out = {v: set() for v in self.vertices()}
        self.adj = {v: set() for v in self.vertices()}
        for (a, b) in self.edges:
            self.out[a].add(b)
            self.adj[a].add(b)
            self.adj[b].add(a)
        self._topo = self._toposort()

    def vertices(self):
        return range(1, self.m + 1)

    def _toposort(self):
        indeg = {v: 0 for v in self.vertices()}
        for (_, b) in self.edges:
            indeg[b] += 1
        order = []
        ready = sorted(v for v in self.vertices() if indeg[v] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            changed = False
            for w in sorted(self.out[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
                    changed = True
            if changed:
                ready.sort()
        if len(order) != self.m:
            raise ValueError("directed cycle detected")
        return tuple(order)

    def is_independent(self, s):
        s = list(s)
        for i, a in enumerate(s):
            for b in s[i + 1:]:
                if b in self.adj[a]:
                    return False
        return True

    def to_text(self):
        lines = [str(self.m)]
        lines.extend(f"{a} {b}" for (a, b) in self.edges)
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Dag(m={self.m}, edges={len(self.edges)})"


def parse_dag(text):
    """Dag text format: first line the vertex count, then "a b" per edge."""
    lines = text.splitlines()
    m = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m is None:
            try:
                m = int(line)
            except ValueError:
                raise ParseError("expected vertex count", lineno) from None
            if m < 1:
                raise ParseError(f"vertex count must be >= 1, got {m}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected edge line 'a b'", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected integer edge line 'a b'", lineno) from None
        edges.append((a, b))
    if m is None:
        raise ParseError("empty dag file", 1)
    return Dag(m, edges)


class GOrder:
    """Reachability order: a > b when a directed path runs from a to b."""

    def __init__(self, dag):
        self.dag = dag
        self.above = {v: set() for v in dag.vertices()}  # strictly greater
        below = {v: set(dag.out[v]) for v in dag.vertices()}
        for v in reversed(dag._topo):
            for w in dag.out[v]:
                below[v] |= below[w]
        self.below = below
        for v in dag.vertices():
            for w in below[v]:
                self.above[w].add(v)
        self.ell_prime = dag._topo            # maximal side first
        self.ell = tuple(reversed(dag._topo))  # minimal side first

    def gt(self, a, b):
        return b in self.below[a]

    def minimal_elements(self):
        return [v for v in self.dag.vertices() if not self.below[v]]

    def maximal_elements(self):
        return [v for v in self.dag.vertices() if not self.above[v]]


def g_order(dag):
    return GOrder(dag)


@dataclass(frozen=True)
class Top:
    """Tight orthogonal pair of independent sets."""

    d: frozenset
    u: frozenset

    def key(self):
        return (tuple(sorted(self.d)), tuple(sorted(self.u)))

    def __repr__(self):
        ds = "".join(str(x) for x in sorted(self.d)) or "-"
        us = "".join(str(x) for x in sorted(self.u)) or "-"
        return f"({ds},{us})"


def _pair_ok(dag, d, u):
    if d & u:
        return False
    if not dag.is_independent(d) or not dag.is_independent(u):
        return False
    for a in d:
        if dag.out[a] & u:
            return False
    return True


def is_orthogonal_pair(dag, d, u):
    return _pair_ok(dag, frozenset(d), frozenset(u))


def is_tight(dag, d, u, order=None):
    """Definitional tightness: every single increase of a D-element,
    decrease of a U-element, or insertion into either side breaks the
    orthogonal-pair property."""
    d, u = frozenset(d), frozenset(u)
    if not _pair_ok(dag, d, u):
        raise ValueError("not an orthogonal pair of independent sets")
    order = order or GOrder(dag)
    for x in dag.vertices():
        if x in d or x in u:
            continue
        if _pair_ok(dag, d | {x}, u) or _pair_ok(dag, d, u | {x}):
            return False
    for a in d:
        for y in order.above[a]:
            if y not in d and _pair_ok(dag, (d - {a}) | {y}, u):
                return False
    for b in u:
        for y in order.below[b]:
            if y not in u and _pair_ok(dag, d, (u - {b}) | {y}):
                return False
    return True


def complete_to_top(dag, independent_set, side, order=None):
    """The unique tight orthogonal pair having the given independent set as
    its D half (side="as_D") or U half (side="as_U")."""
    i = frozenset(int(x) for x in independent_set)
    if not dag.is_independent(i):
        raise ValueError(f"{sorted(i)} is not independent")
    order = order or GOrder(dag)
    if side == "as_D":
        d = i
        u = frozenset()
        for x in order.ell:
            if x not in d and x not in u and _pair_ok(dag, d, u | {x}):
                u = u | {x}
    elif side == "as_U":
        u = i
        d = frozenset()
        for x in order.ell_prime:
            if x not in d and x not in u and _pair_ok(dag, d | {x}, u):
                d = d | {x}
    else:
        raise ValueError(f"side must be 'as_D' or 'as_U', got {side!r}")
    top = Top(d, u)
    if not is_tight(dag, d, u, order):
        raise AssertionError(f"greedy completion produced a non-tight pair "
                             f"{top} for {sorted(i)} {side}")
    return top


def flip(dag, top, g, order=None):
    """Flip of a tight orthogonal pair at the vertex g.

    Does nothing when g lies in neither set; otherwise keeps D-elements not
    below g and U-elements not above g, switches g's side, and greedily
    recompletes (new D-elements strictly below g in ell_prime order, new
    U-elements strictly above g in ell order).
    """
    order = order or GOrder(dag)
    g = int(g)
    if g not in top.d and g not in top.u:
        return top
    keep_d = frozenset(x for x in top.d if not order.gt(g, x))
    keep_u = frozenset(x for x in top.u if not order.gt(x, g))
    if g in top.d:
        d = keep_d - {g}
        u = keep_u | {g}
    else:
        d = keep_d | {g}
        u = keep_u - {g}
    for x in order.ell_prime:
        if order.gt(g, x) and x not in d and x not in u \
                and _pair_ok(dag, d | {x}, u):
            d = d | {x}
    for x in order.ell:
        if order.gt(x, g) and x not in d and x not in u \
                and _pair_ok(dag, d, u | {x}):
            u = u | {x}
    result = Top(d, u)
    if not is_tight(dag, d, u, order):
        raise AssertionError(f"flip at {g} produced a non-tight pair {result}")
    return result


def independent_sets(dag, cap=DEFAULT_TOP_CAP):
    """All independent sets, sorted by (size, elements)."""
    verts = list(dag.vertices())
    out = []

    def extend(idx, current):
        if len(out) > cap:
            raise ValueError(f"independent-set count exceeds cap {cap}")
        out.append(frozenset(current))
        for j in range(idx, len(verts)):
            v = verts[j]
            if all(v not in dag.adj[w] for w in current):
                current.append(v)
                extend(j + 1, current)
                current.pop()

    extend(0, [])
    if len(out) > cap:
        raise ValueError(f"independent-set count exceeds cap {cap}")
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass
class IndependencePoset:
    """All tops of a dag with flip-labeled covers and reachability order."""

    dag: Dag
    tops: tuple
    covers: tuple     # (i, j, g): tops[i] -> tops[j] by flipping g in U
    order: GOrder

    def index(self, top):
        return self._index[top]

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.tops)}
        n = len(self.tops)
        leq = [set() for _ in range(n)]
        for i in range(n):
            leq[i].add(i)
        changed = True
        while changed:
            changed = False
            for (i, j, _) in self.covers:
                for a in range(n):
                    if i in leq[a] and j not in leq[a]:
                        leq[a].add(j)
                        changed = True
        # leq[a] = everything reachable upward from a
        self._up = leq

    def le(self, i, j):
        return j in self._up[i]

    def bottom(self):
        for i, t in enumerate(self.tops):
            if not t.d:
                return i
        raise AssertionError("no bottom element")

    def top_element(self):
        for i, t in enumerate(self.tops):
            if not t.u:
                return i
        raise AssertionError("no top element")

    def interval(self, lo, hi):
        return [i for i in range(len(self.tops))
                if self.le(lo, i) and self.le(i, hi)]


def independence_poset(dag, cap=DEFAULT_TOP_CAP):
    order = GOrder(dag)
    tops = tuple(complete_to_top(dag, i, "as_D", order)
                 for i in independent_sets(dag, cap))
    index = {t: i for i, t in enumerate(tops)}
    covers = []
    for i, t in enumerate(tops):
        for g in sorted(t.u):
            t2 = flip(dag, t, g, order)
            j = index.get(t2)
            if j is None:
                raise AssertionError(f"flip left the top set: {t} --{g}--> {t2}")
            covers.append((i, j, g))
    poset = IndependencePoset(dag, tops, tuple(covers), order)
    # sanity: covers must be acyclic (they increase the D side)
    for (i, j, _) in covers:
        if poset.le(j, i) and i != j:
            raise AssertionError("cover relation has a cycle")
    return poset


def hasse_coloring(poset):
    """Labeled Hasse diagram as an edge-colored graph; flip labels at one
    top are distinct, so the coloring is proper."""
    graph = EdgeColoredGraph(len(poset.tops),
                             [(i, j, g) for (i, j, g) in poset.covers])
    violations = graph.validate()
    if violations:
        raise AssertionError(f"hasse coloring invalid: {violations}")
    return graph


def verify_structure_theorem(dag, cap=STRUCTURE_DEGREE_CAP):
    """Connected dag: the Hasse coloring group contains the alternating
    group on the tops.  Disconnected: its order is the product of the
    component orders (flips of different components commute).

    Returns a record dict; raises AssertionError when a check fails.
    """
    poset = independence_poset(dag)
    degree = len(poset.tops)
    if degree > cap:
        raise ValueError(f"top count {degree} exceeds group-degree cap {cap}")
    graph = hasse_coloring(poset)
    group = coloring_group(graph)
    order = group.order()
    record = {"tops": degree, "order": order,
              "connected": None, "component_orders": None}

    comp_sets = _undirected_components(dag)
    if len(comp_sets) == 1:
        record["connected"] = True
        if 2 * order < math.factorial(degree):
            raise AssertionError(
                f"connected dag: order {order} < {degree}!/2")
    else:
        record["connected"] = False
        comp_orders = []
        for comp in comp_sets:
            sub, _ = induced_subdag(dag, comp)
            sub_poset = independence_poset(sub)
            comp_orders.append(coloring_group(hasse_coloring(sub_poset)).order())
        record["component_orders"] = comp_orders
        if order != math.prod(comp_orders):
            raise AssertionError(
                f"disconnected dag: order {order} != product "
                f"{math.prod(comp_orders)} of component orders")
    return record


def _undirected_components(dag):
    seen = set()
    comps = []
    for start in dag.vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        head = 0
        while head < len(comp):
            v = comp[head]
            head += 1
            for w in dag.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subdag(dag, keep):
    """Sub-dag on the kept vertices, relabeled 1..m'; returns (dag, old_to_new)."""
    keep = sorted(set(keep))
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    edges = [(relabel[a], relabel[b]) for (a, b) in dag.edges
             if a in relabel and b in relabel]
    return Dag(len(keep), edges), relabel


def extremal_decomposition_check(dag, g):
    """For an extremal vertex g, verify the interval partition of the tops,
    the membership criteria, invariance under other flips, the flip-at-g
    containment, and the deletion bijections.  Returns a record dict."""
    order = GOrder(dag)
    g = int(g)
    minimal = not order.below[g]
    maximal = not order.above[g]
    if not (minimal or maximal):
        raise ValueError(f"vertex {g} is not extremal in the reachability order")

    poset = independence_poset(dag)
    m_g = poset.index(complete_to_top(dag, {g}, "as_U", order))
    j_g = poset.index(complete_to_top(dag, {g}, "as_D", order))
    lower = set(poset.interval(poset.bottom(), m_g))
    upper = set(poset.interval(j_g, poset.top_element()))

    n = len(poset.tops)
    if lower | upper != set(range(n)) or lower & upper:
        raise AssertionError("intervals do not partition the tops")

    if minimal:
        expected_lower = {i for i, t in enumerate(poset.tops) if g in t.u}
        if lower != expected_lower:
            raise AssertionError("membership criterion failed: lower interval "
                                 "is not {tops with g in U}")
    if maximal:
        expected_upper = {i for i, t in enumerate(poset.tops) if g in t.d}
        if upper != expected_upper:
            raise AssertionError("membership criterion failed: upper interval "
                                 "is not {tops with g in D}")

    for gp in dag.vertices():
        if gp == g:
            continue
        for part in (lower, upper):
            for i in part:
                j = poset.index(flip(dag, poset.tops[i], gp, order))
                if j not in part:
                    raise AssertionError(
                        f"flip at {gp} moved a top across the partition")

    # flip at g: containment statements
    if minimal:
        for i in lower:
            t = poset.tops[i]
            ft = flip(dag, t, g, order)
            if ft.d != t.d | {g}:
                raise AssertionError("flip at minimal g must add g to D "
                                     "and keep the rest of D")
    if maximal:
        for i in upper:
            t = poset.tops[i]
            ft = flip(dag, t, g, order)
            if ft.u != t.u | {g}:
                raise AssertionError("flip at maximal g must add g to U "
                                     "and keep the rest of U")

    # deletion bijections
    closed = {g} | dag.adj[g]
    dag_g, rel_g = induced_subdag(dag, set(dag.vertices()) - {g})
    dag_go, rel_go = induced_subdag(dag, set(dag.vertices()) - closed)

    def mapped(tops_idx, drop_from):
        out = set()
        for i in tops_idx:
            t = poset.tops[i]
            d, u = set(t.d), set(t.u)
            if drop_from == "u":
                u.discard(g)
            else:
                d.discard(g)
            out.add((frozenset(d), frozenset(u)))
        if len(out) != len(tops_idx):
            raise AssertionError("deletion map is not injective")
        return out

    def tops_of(subdag, relabel):
        inverse = {new: old for old, new in relabel.items()}
        result = set()
        for t in independence_poset(subdag).tops:
            result.add((frozenset(inverse[x] for x in t.d),
                        frozenset(inverse[x] for x in t.u)))
        return result

    lower_mapped = mapped(lower, "u")
    upper_mapped = mapped(upper, "d")
    if minimal:
        if lower_mapped != tops_of(dag_go, rel_go):
            raise AssertionError("lower bijection to tops(G minus N[g]) failed")
        if upper_mapped != tops_of(dag_g, rel_g):
            raise AssertionError("upper bijection to tops(G minus g) failed")
    else:
        if lower_mapped != tops_of(dag_g, rel_g):
            raise AssertionError("lower bijection to tops(G minus g) failed")
        if upper_mapped != tops_of(dag_go, rel_go):
            raise AssertionError("upper bijection to tops(G minus N[g]) failed")

    return {"g": g, "minimal": minimal, "maximal": maximal,
            "lower_size": len(lower), "upper_size": len(upper),
            "tops": n}


# -- inductively color-alternating certificates --------------------------------

@dataclass(frozen=True)
class CertificateLeaf:
    degree: int
    colors: int
    order: int


@dataclass(frozen=True)
class CertificateSplit:
    color: int
    part: tuple
    sub: object


def _induced_colored_subgraph(graph, keep):
    keep = sorted(keep)
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v], c) for (u, v, c) in graph.edges
             if u in relabel and v in relabel]
    return EdgeColoredGraph(len(keep), edges)


def inductively_color_alternating_certificate(graph, _component_cap=16):
    """Certificate that the coloring group contains the alternating group,
    built by the split recursion: few colors (or four vertices) are checked
    directly, otherwise some color i splits the vertices into halves joined
    only by i-edges with tau_i overlapping and covering.  None when no
    certificate is found."""
    graph.require_valid()
    if not is_connected(graph):
        raise ValueError("certificate search requires a connected graph")
    n, k = graph.n, graph.k
    if k <= 4 or n <= 4:
        order = coloring_group(graph).order()
        if 2 * order >= math.factorial(n):
            return CertificateLeaf(degree=n, colors=k, order=order)
        return None
    all_vertices = frozenset(range(n))
    for color in range(1, k + 1):
        tau = {v: graph.neighbor_by_color[v].get(color, v)
               for v in range(n)}
        comps = components(graph, set(range(1, k + 1)) - {color}).components
        if not 2 <= len(comps) <= _component_cap:
            continue
        for take in range(1, len(comps)):
            for chosen in combinations(range(len(comps)), take):
                g1 = frozenset(v for ci in chosen for v in comps[ci])
                tau_g1 = frozenset(tau[v] for v in g1)
                if tau_g1 | g1 != all_vertices:
                    continue
                if not tau_g1 & g1:
                    continue
                sub = _induced_colored_subgraph(graph, g1)
                if not is_connected(sub):
                    continue
                cert = inductively_color_alternating_certificate(
                    sub, _component_cap)
                if cert is not None:
                    return CertificateSplit(color=color,
                                            part=tuple(sorted(g1)), sub=cert)
    return None
