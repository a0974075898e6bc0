"""Non-isomorphic free trees and their proper edge colorings up to symmetry.

Rooted trees come from the level-sequence successor algorithm; free trees
are the distinct centroid-canonical forms among them.  Proper colorings are
enumerated as partitions of the edge set into matchings in restricted-growth
form (which quotients out color relabeling) and then deduplicated across the
tree's automorphism orbit.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct

from .perm import Perm

FREE_TREE_MAX = 12


class Tree:
    """Unlabeled tree presented with a fixed vertex numbering 0..n-1."""

    def __init__(self, n, edges):
        self.n = int(n)
        self.edges = tuple(sorted((min(u, v), max(u, v)) for (u, v) in edges))
        if len(self.edges) != self.n - 1:
            raise ValueError("a tree on n vertices has n-1 edges")
        self.adj = [[] for _ in range(self.n)]
        for (u, v) in self.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)

    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    def is_path(self):
        return self.n <= 2 or all(len(a) <= 2 for a in self.adj)

    def path_order(self):
        """Vertices in path order (only meaningful when is_path())."""
        if self.n == 1:
            return [0]
        start = next(v for v in range(self.n) if len(self.adj[v]) == 1)
        order = [start]
        prev = -1
        while len(order) < self.n:
            nxt = next(w for w in self.adj[order[-1]] if w != prev)
            prev = order[-1]
            order.append(nxt)
        return order

    def __repr__(self):
        return f"Tree(n={self.n})"


def _rooted_level_sequences(n):
    """All level sequences of rooted trees on n nodes (root level 0),
    generated by the classic successor rule in decreasing lex order."""
    if n == 1:
        yield [0]
        return
    s = list(range(n))
    while True:
        yield list(s)
        p = -1
        for i in range(n - 1, 0, -1):
            if s[i] > 1:
                p = i
                break
        if p < 0:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if s[i] == s[p] - 1:
                q = i
                break
        for i in range(p, n):
            s[i] = s[i - (p - q)]


def _levels_to_edges(seq):
    parents = []
    stack = []
    for i, level in enumerate(seq):
        while len(stack) > level:
            stack.pop()
        if stack:
            parents.append((stack[-1], i))
        stack.append(i)
    return parents


def _centroids(tree):
    n = tree.n
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree.adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = None
    out = []
    for v in range(n):
        heaviest = max([n - size[v]] + [size[w] for w in tree.adj[v]
                                        if parent[w] == v], default=0)
        if best is None or heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return out


def _rooted_code(tree, root, parent):
    children = sorted(_rooted_code(tree, w, root)
                      for w in tree.adj[root] if w != parent)
    return "(" + "".join(children) + ")"


def canonical_form(tree):
    """Centroid-rooted canonical code; equal codes mean isomorphic trees."""
    cents = _centroids(tree)
    if len(cents) == 1:
        return _rooted_code(tree, cents[0], -1)
    a, b = cents
    ca = _rooted_code(tree, a, b)
    cb = _rooted_code(tree, b, a)
    return "[" + min(ca, cb) + max(ca, cb) + "]"


def free_trees(n):
    """All non-isomorphic trees on n vertices, 2 <= n <= 12, each once."""
    if not 2 <= n <= FREE_TREE_MAX:
        raise ValueError(f"free_trees supports 2 <= n <= {FREE_TREE_MAX}")
    seen = {}
    for seq in _rooted_level_sequences(n):
        tree = Tree(n, _levels_to_edges(seq))
        code = canonical_form(tree)
        if code not in seen:
            seen[code] = tree
    return [seen[code] for code in sorted(seen)]


# -- tree automorphisms ---------------------------------------------------------

def tree_automorphism_generators(tree):
    """Generators of Aut(tree) as vertex permutations: swaps of isomorphic
    sibling subtrees below the centroid, plus the half swap at a bicentroid.
    Avoids enumerating the (possibly huge) full group."""
    n = tree.n
    if n == 1:
        return []
    cents = _centroids(tree)

    def subtree_vertices(root, parent):
        out = [root]
        stack = [(root, parent)]
        while stack:
            v, par = stack.pop()
            for w in tree.adj[v]:
                if w != par:
                    out.append(w)
                    stack.append((w, v))
        return out

    def canonical_dfs(root, parent):
        """Vertices of the subtree in canonical order (children sorted by
        code, ties broken by vertex number for determinism)."""
        kids = sorted(((_rooted_code(tree, w, root), w)
                       for w in tree.adj[root] if w != parent))
        out = [root]
        for (_, w) in kids:
            out.extend(canonical_dfs(w, root))
        return out

    gens = []

    def collect(root, parent):
        kids = [(w, _rooted_code(tree, w, root))
                for w in tree.adj[root] if w != parent]
        kids.sort(key=lambda t: (t[1], t[0]))
        for (w1, c1), (w2, c2) in zip(kids, kids[1:]):
            if c1 == c2:
                images = list(range(n))
                for a, b in zip(canonical_dfs(w1, root),
                                canonical_dfs(w2, root)):
                    images[a], images[b] = b, a
                gens.append(Perm(images))
        for (w, _) in kids:
            collect(w, root)

    if len(cents) == 1:
        collect(cents[0], -1)
    else:
        a, b = cents
        collect(a, b)
        collect(b, a)
        if _rooted_code(tree, a, b) == _rooted_code(tree, b, a):
            images = list(range(n))
            for x, y in zip(canonical_dfs(a, b), canonical_dfs(b, a)):
                images[x], images[y] = y, x
            gens.append(Perm(images))
    return gens


# -- proper edge colorings up to symmetry ----------------------------------------

def _matching_partitions(tree):
    """Partitions of the edge list into matchings, as restricted-growth
    block-index tuples (first block 0); RGS form quotients out color
    relabeling."""
    edges = tree.edges
    m = len(edges)
    assignment = [0] * m
    block_mask = []
    results = []

    def place(i):
        if i == m:
            results.append(tuple(assignment))
            return
        u, v = edges[i]
        emask = (1 << u) | (1 << v)
        for b in range(len(block_mask)):
            if not block_mask[b] & emask:
                assignment[i] = b
                block_mask[b] |= emask
                place(i + 1)
                block_mask[b] &= ~emask
        assignment[i] = len(block_mask)
        block_mask.append(emask)
        place(i + 1)
        block_mask.pop()

    place(0)
    return results


def _rgs(blocks):
    """Restricted-growth normal form of a block-index tuple."""
    relabel = {}
    out = []
    for b in blocks:
        if b not in relabel:
            relabel[b] = len(relabel)
        out.append(relabel[b])
    return tuple(out)


def proper_colorings(tree, min_colors=None, max_colors=None):
    """Surjective proper edge colorings with color count in the given range,
    exactly one representative per orbit under color relabeling and tree
    automorphism (the lexicographically least restricted-growth string)."""
    edges = tree.edges
    edge_index = {e: i for i, e in enumerate(edges)}
    gens = tree_automorphism_generators(tree)
    edge_perms = []
    for g in gens:
        edge_perms.append(tuple(
            edge_index[(min(g(u), g(v)), max(g(u), g(v)))] for (u, v) in edges))

    lo = min_colors if min_colors is not None else tree.max_degree()
    hi = max_colors if max_colors is not None else max(len(edges), 1)

    raw = _matching_partitions(tree)
    raw_set = set(raw)
    seen = set()
    for part in raw:
        if part in seen:
            continue
        k = max(part) + 1
        # orbit closure under the automorphism generators
        orbit = {part}
        frontier = [part]
        while frontier:
            cur = frontier.pop()
            for ep in edge_perms:
                img = [0] * len(cur)
                for i, b in enumerate(cur):
                    img[ep[i]] = b
                img = _rgs(img)
                if img not in orbit:
                    assert img in raw_set
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        if lo <= k <= hi:
            rep = min(orbit)
            yield [b + 1 for b in rep]


def tree_with_coloring(tree, coloring):
    """EdgeColoredGraph from a tree and per-edge colors (edge-list order)."""
    from .graphs import EdgeColoredGraph
    return EdgeColoredGraph(tree.n, [(u, v, c) for (u, v), c
                                     in zip(tree.edges, coloring)])
