"""Generalized toggle groups over a family L of subsets of a ground set,
their labeled toggle posets, and the bridge to edge-colored graphs.

Points of the permutation representation are the members of L indexed in
length-then-lexicographic order, which keeps degrees stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import EdgeColoredGraph, ParseError
from .group import PermutationGroup
from .perm import Perm

DEFAULT_FAMILY_CAP = 1 << 20


class ToggleFamily:
    """Ground set 1..ground_size with a nonempty family of subsets."""

    def __init__(self, ground_size, subsets, cap=DEFAULT_FAMILY_CAP):
        self.ground_size = int(ground_size)
        canon = set()
        for s in subsets:
            fs = frozenset(int(e) for e in s)
            for e in fs:
                if not 1 <= e <= self.ground_size:
                    raise ValueError(f"element {e} outside 1..{self.ground_size}")
            canon.add(fs)
        if not canon:
            raise ValueError("family must be nonempty")
        if len(canon) > cap:
            raise ValueError(f"family size {len(canon)} exceeds cap {cap}")
        self.subsets = tuple(sorted(canon, key=lambda s: (len(s), sorted(s))))
        self.index = {s: i for i, s in enumerate(self.subsets)}

    def __len__(self):
        return len(self.subsets)

    def __contains__(self, s):
        return frozenset(s) in self.index

    def __repr__(self):
        return (f"ToggleFamily(ground={self.ground_size}, "
                f"size={len(self.subsets)})")


def toggle(family, e, x):
    """Add or remove e from x when the result stays in the family."""
    x = frozenset(x)
    if x not in family:
        raise ValueError(f"{sorted(x)} is not in the family")
    if e in x:
        candidate = x - {e}
    else:
        candidate = x | {e}
    return candidate if candidate in family else x


def toggle_permutation(family, e):
    images = []
    for s in family.subsets:
        images.append(family.index[toggle(family, e, s)])
    return Perm(images)


def toggle_group(family):
    """Subgroup of the symmetric group on L generated by all toggles."""
    gens = [toggle_permutation(family, e)
            for e in range(1, family.ground_size + 1)]
    return PermutationGroup(len(family), gens)


@dataclass(frozen=True)
class TogglePoset:
    """Cover edges (x, y, e) with y = x | {e}, both in the family."""

    family: ToggleFamily
    covers: tuple

    def cover_indices(self):
        return tuple((self.family.index[x], self.family.index[y], e)
                     for (x, y, e) in self.covers)


def toggle_poset(family):
    covers = []
    for s in family.subsets:
        for e in range(1, family.ground_size + 1):
            if e in s:
                continue
            bigger = s | {e}
            if bigger in family:
                covers.append((s, frozenset(bigger), e))
    return TogglePoset(family, tuple(covers))


def poset_as_coloring(tposet):
    """Hasse diagram as an edge-colored graph (labels become colors).

    Distinct elements toggled at one family member give distinct labels, so
    the coloring is proper; colors are canonicalized on ingest as usual.
    """
    edges = [(i, j, e) for (i, j, e) in tposet.cover_indices()]
    graph = EdgeColoredGraph(len(tposet.family), edges)
    violations = graph.validate()
    if violations:
        raise AssertionError(f"toggle poset coloring invalid: {violations}")
    return graph


def parse_family(text):
    """Family text format: first line the ground size, then one subset per
    line as space-separated elements, "-" for the empty set."""
    lines = text.splitlines()
    ground = None
    subsets = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ground is None:
            try:
                ground = int(line)
            except ValueError:
                raise ParseError("expected ground-set size", lineno) from None
            if ground < 1:
                raise ParseError(f"ground-set size must be >= 1, got {ground}",
                                 lineno)
            continue
        if line == "-":
            subsets.append(frozenset())
            continue
        try:
            elems = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError("expected subset elements or '-'", lineno) from None
        for e in elems:
            if not 1 <= e <= ground:
                raise ParseError(f"element {e} outside 1..{ground}", lineno)
        subsets.append(frozenset(elems))
    if ground is None:
        raise ParseError("empty family file", 1)
    if not subsets:
        raise ParseError("family has no subsets", 1)
    return ToggleFamily(ground, subsets)


def format_family(family):
    lines = [str(family.ground_size)]
    for s in family.subsets:
        lines.append(" ".join(str(e) for e in sorted(s)) if s else "-")
    return "\n".join(lines) + "\n"


def poset_dot(tposet):
    """Graphviz text for the labeled Hasse diagram."""
    def name(s):
        return "{" + ",".join(str(e) for e in sorted(s)) + "}"

    lines = ["graph toggle_poset {"]
    for s in tposet.family.subsets:
        lines.append(f'  "{name(s)}";')
    for (x, y, e) in tposet.covers:
        lines.append(f'  "{name(x)}" -- "{name(y)}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
