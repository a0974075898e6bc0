"""Edge-colored graphs: the pair (graph, proper edge coloring).

Vertices are 0..n-1, colors 1..k.  Colors are canonicalized on ingest by
first appearance in edge-list order, so a stored graph is surjective by
construction; validation of raw data (loops, duplicates, improper or gappy
colorings) is available through canonicalize=False plus validate().
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .group import PermutationGroup
from .perm import Perm

SYMMETRIC_EDGE_COLOR_CAP = 12


class ParseError(ValueError):
    """Malformed graph/family/dag text; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidColoring(ValueError):
    """Raised when an operation requires a valid proper edge coloring."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class EdgeColoredGraph:
    """Immutable simple graph with colored edges."""

    def __init__(self, n, edges, canonicalize=True):
        self.n = int(n)
        norm = []
        for (u, v, c) in edges:
            u, v, c = int(u), int(v), int(c)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex out of range in edge ({u}, {v}, {c})")
            if u > v:
                u, v = v, u
            norm.append((u, v, c))
        if canonicalize:
            relabel = {}
            out = []
            for (u, v, c) in norm:
                if c not in relabel:
                    relabel[c] = len(relabel) + 1
                out.append((u, v, relabel[c]))
            norm = out
        self.edges = tuple(norm)
        self.k = max((c for (_, _, c) in self.edges), default=0)

    # -- derived structure (immutable after construction) ------------------

    @cached_property
    def adjacency(self):
        """adjacency[v] = list of (neighbor, color, edge_index)."""
        adj = [[] for _ in range(self.n)]
        for ei, (u, v, c) in enumerate(self.edges):
            adj[u].append((v, c, ei))
            adj[v].append((u, c, ei))
        return adj

    @cached_property
    def neighbor_by_color(self):
        """neighbor_by_color[v] = {color: neighbor}; assumes a proper coloring."""
        table = [dict() for _ in range(self.n)]
        for (u, v, c) in self.edges:
            table[u][c] = v
            table[v][c] = u
        return table

    @cached_property
    def colors(self):
        return tuple(sorted({c for (_, _, c) in self.edges}))

    def degree(self, v):
        return len(self.adjacency[v])

    def max_degree(self):
        return max((self.degree(v) for v in range(self.n)), default=0)

    def edge_color(self, u, v):
        if u > v:
            u, v = v, u
        for (a, b, c) in self.edges:
            if (a, b) == (u, v):
                return c
        raise KeyError(f"no edge ({u}, {v})")

    # -- validation ---------------------------------------------------------

    def validate(self):
        """List of invariant violations; empty iff the coloring is valid."""
        violations = []
        seen = set()
        for (u, v, c) in self.edges:
            if u == v:
                violations.append(f"loop at vertex {u} (color {c})")
            if (u, v) in seen:
                violations.append(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            if c < 1:
                violations.append(f"edge ({u}, {v}) has non-positive color {c}")
        incident = {}
        for (u, v, c) in self.edges:
            for x in (u, v):
                key = (x, c)
                if key in incident:
                    violations.append(
                        f"incident same color: edges ({incident[key][0]}, "
                        f"{incident[key][1]}) and ({u}, {v}) share vertex {x} "
                        f"with color {c}")
                else:
                    incident[key] = (u, v)
        present = {c for (_, _, c) in self.edges}
        for c in range(1, self.k + 1):
            if c not in present:
                violations.append(f"color {c} is unused (not surjective)")
        return violations

    def require_valid(self):
        violations = self.validate()
        if violations:
            raise InvalidColoring(violations)
        return self

    # -- text / JSON formats -------------------------------------------------

    def to_text(self):
        lines = [f"{self.n} {self.k}"]
        lines.extend(f"{u} {v} {c}" for (u, v, c) in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        return {"n": self.n, "k": self.k,
                "edges": [[u, v, c] for (u, v, c) in self.edges]}

    def __eq__(self, other):
        return (isinstance(other, EdgeColoredGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"EdgeColoredGraph(n={self.n}, k={self.k}, edges={len(self.edges)})"


def parse_graph(text, canonicalize=True):
    """Parse the graph text format: first line "n k", then "u v c" lines."""
    lines = text.splitlines()
    header = None
    edges = []
    declared_k = 0
    n = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("expected header 'n k'", lineno)
            try:
                n, declared_k = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("expected integer header 'n k'", lineno) from None
            if n < 1 or declared_k < 0:
                raise ParseError(f"bad header values n={n} k={declared_k}", lineno)
            header = (n, declared_k)
            continue
        if len(parts) != 3:
            raise ParseError("expected edge line 'u v c'", lineno)
        try:
            u, v, c = (int(x) for x in parts)
        except ValueError:
            raise ParseError("expected integer edge line 'u v c'", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if not (1 <= c <= declared_k):
            raise ParseError(f"color out of range 1..{declared_k}", lineno)
        edges.append((u, v, c))
    if header is None:
        raise ParseError("empty graph file", 1)
    return EdgeColoredGraph(n, edges, canonicalize=canonicalize)


def path_graph(word):
    """Path on len(word)+1 vertices whose edges read the given color word."""
    word = [int(c) for c in word]
    return EdgeColoredGraph(len(word) + 1,
                            [(i, i + 1, c) for i, c in enumerate(word)])


# -- structural queries ------------------------------------------------------

@dataclass(frozen=True)
class ColorSubgraph:
    """Components of the spanning subgraph keeping only some colors."""

    parent: EdgeColoredGraph
    kept_colors: frozenset
    components: tuple[tuple[int, ...], ...]

    def orders(self):
        return tuple(len(comp) for comp in self.components)


def components(graph, kept_colors=None):
    """Connected components keeping only kept_colors edges, all vertices
    retained (isolated vertices become order-1 components)."""
    if kept_colors is None:
        kept = frozenset(range(1, graph.k + 1))
    else:
        kept = frozenset(int(c) for c in kept_colors)
    seen = [False] * graph.n
    comps = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        head = 0
        while head < len(comp):
            v = comp[head]
            head += 1
            for (w, c, _) in graph.adjacency[v]:
                if c in kept and not seen[w]:
                    seen[w] = True
                    comp.append(w)
        comps.append(tuple(sorted(comp)))
    return ColorSubgraph(graph, kept, tuple(comps))


def is_connected(graph):
    return graph.n <= 1 or len(components(graph).components) == 1


def is_tree(graph):
    return is_connected(graph) and len(graph.edges) == graph.n - 1


def is_forest(graph):
    return all(len(comp) - 1 ==
               sum(1 for (u, v, _) in graph.edges if u in set(comp))
               for comp in components(graph).components)


# -- symmetric edges ---------------------------------------------------------

def find_symmetric_edges(graph):
    """Edges whose incident colors are pairwise distinct and deletable (via
    some color set S excluding the edge's own color) so that exactly one
    even-order component remains.  Tree colorings only.

    Returns [(edge, S)] with the first witness S found per edge (subsets
    scanned smallest first, then lexicographically).
    """
    graph.require_valid()
    if not is_tree(graph):
        raise ValueError("symmetric edges are defined for tree colorings")
    if graph.k > SYMMETRIC_EDGE_COLOR_CAP:
        raise ValueError(
            f"symmetric-edge search is exponential in k; k={graph.k} exceeds "
            f"cap {SYMMETRIC_EDGE_COLOR_CAP}")
    out = []
    all_colors = set(range(1, graph.k + 1))
    for (u, v, c) in graph.edges:
        incident = [cc for (w, cc, _) in graph.adjacency[u] if w != v]
        incident += [cc for (w, cc, _) in graph.adjacency[v] if w != u]
        if len(set(incident)) != len(incident):
            continue
        must = frozenset(incident)
        free = sorted(all_colors - must - {c})
        witness = None
        for extra_size in range(len(free) + 1):
            for extra in combinations(free, extra_size):
                s = must | frozenset(extra)
                sub = components(graph, all_colors - s)
                evens = [comp for comp in sub.components if len(comp) % 2 == 0]
                if len(evens) == 1:
                    # Condition (a) isolates the edge, so the even component
                    # is always the edge's own endpoints.
                    assert evens[0] == tuple(sorted((u, v)))
                    witness = s
                    break
            if witness is not None:
                break
        if witness is not None:
            out.append(((u, v, c), witness))
    return out


# -- path words / toggle words ------------------------------------------------

@dataclass(frozen=True)
class PathWord:
    """Colors read along a simple path; consecutive letters always differ."""

    word: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.word, self.word[1:]):
            if a == b:
                raise ValueError(f"consecutive letters equal in {self.word}")

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)


def path_word(graph, path):
    """Read the colors along a simple path given as a vertex sequence."""
    path = [int(v) for v in path]
    if len(set(path)) != len(path):
        raise ValueError(f"not a simple path (repeated vertex): {path}")
    word = []
    for a, b in zip(path, path[1:]):
        nbrs = {w: c for (w, c, _) in graph.adjacency[a]}
        if b not in nbrs:
            raise ValueError(f"not a path: no edge ({a}, {b})")
        word.append(nbrs[b])
    return PathWord(tuple(word))


def toggle_word_witness(word):
    """A contiguous subword of length >= 2 with fewer than two distinct
    odd-multiplicity letters, as (start, end) inclusive; None if the word
    is a toggle word.  Words shorter than 2 report (0, len-1)."""
    letters = list(word.word if isinstance(word, PathWord) else word)
    if len(letters) < 2:
        return (0, max(len(letters) - 1, 0))
    for i in range(len(letters)):
        odd = set()
        for j in range(i, len(letters)):
            odd.symmetric_difference_update({letters[j]})
            if j > i and len(odd) < 2:
                return (i, j)
    return None


def is_toggle_word(word):
    """Every contiguous subword of length >= 2 has at least two distinct
    letters of odd multiplicity; words of length < 2 fail."""
    return toggle_word_witness(word) is None


def tree_paths(graph, min_length=2):
    """All simple paths of the tree with at least min_length edges, one
    direction per unordered endpoint pair."""
    for u in range(graph.n):
        parent = {u: None}
        order = [u]
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for (w, _, _) in graph.adjacency[v]:
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        for v in sorted(parent):
            if v <= u:
                continue
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            path.reverse()
            if len(path) - 1 >= min_length:
                yield path


def all_tree_paths_toggle(graph):
    """(True, None) if every tree path of length >= 2 reads a toggle word,
    else (False, (path, word)) for the first failing path."""
    graph.require_valid()
    if not is_tree(graph):
        raise ValueError("path/toggle-word scan requires a tree coloring")
    for path in tree_paths(graph):
        word = path_word(graph, path)
        if not is_toggle_word(word):
            return (False, (tuple(path), word))
    return (True, None)


# -- color-preserving automorphisms -------------------------------------------

def _vertex_profile(graph, v):
    return (graph.degree(v),
            tuple(sorted(c for (_, c, _) in graph.adjacency[v])))


def colored_automorphisms(graph):
    """The full group of color-preserving graph automorphisms.

    Backtracks over component anchor images; inside a component the proper
    coloring makes the extension forced (a fixed vertex forces all its
    neighbors), so the search is near-linear per candidate on trees.
    """
    graph.require_valid()
    n = graph.n
    comps = [list(comp) for comp in components(graph).components]
    profiles = [_vertex_profile(graph, v) for v in range(n)]

    found = []
    sigma = [-1] * n
    used = [False] * n

    def propagate(component, anchor, target):
        assigned = []

        def assign(v, w):
            if sigma[v] != -1:
                return sigma[v] == w
            if used[w] or profiles[v] != profiles[w]:
                return False
            sigma[v] = w
            used[w] = True
            assigned.append(v)
            return True

        ok = assign(anchor, target)
        head = 0
        while ok and head < len(assigned):
            v = assigned[head]
            head += 1
            w = sigma[v]
            for (u, c, _) in graph.adjacency[v]:
                wu = graph.neighbor_by_color[w].get(c)
                if wu is None or not assign(u, wu):
                    ok = False
                    break
        if not ok:
            for v in assigned:
                used[sigma[v]] = False
                sigma[v] = -1
            return None
        return assigned

    def recurse(ci):
        if ci == len(comps):
            perm = Perm(sigma)
            for (u, v, c) in graph.edges:
                a, b = sigma[u], sigma[v]
                if graph.neighbor_by_color[a].get(c) != b:
                    return
            found.append(perm)
            return
        anchor = comps[ci][0]
        for target in range(n):
            if used[target] or profiles[target] != profiles[anchor]:
                continue
            assigned = propagate(comps[ci], anchor, target)
            if assigned is None:
                continue
            recurse(ci + 1)
            for v in assigned:
                used[sigma[v]] = False
                sigma[v] = -1

    recurse(0)
    result = PermutationGroup(n, found)
    result._order = len(found)
    return result


# -- Cayley-graph coloring -----------------------------------------------------

def cayley_coloring(generators, cap=10**6, verify=True):
    """Edge-colored Cayley graph of the group generated by nonidentity
    involutions; edge {a, a*g_i} gets color i.

    Vertices are group elements in breadth-first order from the identity
    (generators applied in input order), so the construction is
    deterministic.  With verify=True the round-trip is checked: the coloring
    group of the result has the same order and acts regularly.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    seen = set()
    for g in generators:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")
        if g.is_identity() or not (g * g).is_identity():
            raise ValueError(f"generator {g!r} is not a nonidentity involution")
        if g.images in seen:
            raise ValueError(f"duplicate generator {g!r}")
        seen.add(g.images)

    identity = Perm.identity(degree)
    index = {identity.images: 0}
    elements = [identity]
    head = 0
    edges = set()
    while head < len(elements):
        a = elements[head]
        ai = index[a.images]
        head += 1
        for gi, g in enumerate(generators, start=1):
            b = a * g
            bi = index.get(b.images)
            if bi is None:
                if len(elements) >= cap:
                    raise ValueError(f"group order exceeds cap {cap}")
                bi = len(elements)
                index[b.images] = bi
                elements.append(b)
            edges.add((min(ai, bi), max(ai, bi), gi))

    order = len(elements)
    ordered_edges = sorted(edges, key=lambda e: (min(e[0], e[1]) * order
                                                 + max(e[0], e[1]), e[2]))
    graph = EdgeColoredGraph(order, ordered_edges)
    violations = graph.validate()
    if violations:
        raise AssertionError(f"Cayley coloring invalid: {violations}")
    if verify:
        taus = []
        for color in range(1, graph.k + 1):
            images = list(range(order))
            for (u, v, c) in graph.edges:
                if c == color:
                    images[u], images[v] = v, u
            taus.append(Perm(images))
        cg = PermutationGroup(order, taus)
        if cg.order() != order or not cg.is_transitive():
            raise AssertionError(
                f"Cayley round-trip failed: coloring group order {cg.order()} "
                f"on {order} vertices")
    return graph
