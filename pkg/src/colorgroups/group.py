"""Permutation-group engine: exact order, membership, orbits, block systems,
primitivity, fingerprints, and small brute-force oracles for testing.

Orders are exact Python integers (products of transversal sizes), so degrees
beyond 20 do not overflow.  The stabilizer-chain kernels live behind
:mod:`colorgroups.backend`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as _all_perms

import numpy as np

from . import backend
from .perm import Perm

DEFAULT_ELEMENT_CAP = 10**6
CENTRALIZER_DEGREE_CAP = 8
DERIVED_ORDER_CAP = 10**5


class CapExceeded(RuntimeError):
    """An enumeration exceeded its configured cap."""


@dataclass(frozen=True)
class BlockSystem:
    """A nontrivial G-invariant partition into blocks of equal size."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_size(self):
        return len(self.blocks[0])

    def block_of(self, point):
        for b in self.blocks:
            if point in b:
                return b
        raise KeyError(point)

    def as_lists(self):
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class Fingerprint:
    """Deterministic summary record standing in for an isomorphism type."""

    degree: int
    order: int
    transitive: bool
    primitive: bool
    abelian: bool
    generator_cycle_types: tuple[tuple[int, ...], ...]
    derived_order: int | None

    def key(self):
        # Dedup key: order + flags + cycle-type multiset (derived order is
        # informational only; it is unavailable for huge groups).
        return (self.degree, self.order, self.transitive, self.primitive,
                self.abelian, self.generator_cycle_types)

    def to_json_dict(self):
        return {
            "degree": self.degree,
            "order": self.order,
            "transitive": self.transitive,
            "primitive": self.primitive,
            "abelian": self.abelian,
            "generator_cycle_types": [list(t) for t in self.generator_cycle_types],
            "derived_order": self.derived_order,
        }


def _canonical_partition(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


class PermutationGroup:
    """Group generated by a list of Perms, with a lazily built BSGS."""

    def __init__(self, degree, generators):
        self.degree = int(degree)
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != self.degree:
                raise ValueError(f"generator degree {g.degree} != {self.degree}")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.generators = tuple(gens)
        self._chain = None
        self._order = None
        self._orbits = None

    # -- stabilizer chain ------------------------------------------------

    def _gen_matrix(self):
        if not self.generators:
            return np.zeros((0, self.degree), dtype=np.int64)
        return np.array([g.images for g in self.generators], dtype=np.int64)

    def chain(self):
        if self._chain is None:
            self._chain = backend.build_chain(self._gen_matrix(), self.degree)
        return self._chain

    def order(self):
        """Exact group order as an arbitrary-precision integer."""
        if self._order is None:
            osize = self.chain()[4]
            self._order = math.prod(int(s) for s in osize)
        return self._order

    def base(self):
        """Base points whose stabilizer-chain orbits are nontrivial."""
        osize = self.chain()[4]
        return tuple(i for i in range(self.degree) if int(osize[i]) > 1)

    def contains(self, perm):
        if isinstance(perm, Perm):
            if perm.degree != self.degree:
                return False
            arr = np.array(perm.images, dtype=np.int64)
        else:
            arr = np.asarray(perm, dtype=np.int64)
            if arr.shape != (self.degree,):
                return False
        residue = backend.sift(self.chain(), arr)
        return bool(np.array_equal(residue, np.arange(self.degree)))

    def __contains__(self, perm):
        return self.contains(perm)

    # -- orbits / transitivity -------------------------------------------

    def orbits(self):
        if self._orbits is None:
            n = self.degree
            seen = [False] * n
            orbits = []
            for start in range(n):
                if seen[start]:
                    continue
                orbit = [start]
                seen[start] = True
                head = 0
                while head < len(orbit):
                    p = orbit[head]
                    head += 1
                    for g in self.generators:
                        q = g(p)
                        if not seen[q]:
                            seen[q] = True
                            orbit.append(q)
                orbits.append(tuple(sorted(orbit)))
            self._orbits = tuple(orbits)
        return self._orbits

    def is_transitive(self):
        return len(self.orbits()) == 1

    # -- blocks / primitivity ----------------------------------------------

    def minimal_block(self, alpha, beta):
        """Finest G-invariant partition with alpha and beta in one class.

        Union-find refinement; requires a transitive group for the classes
        to form a genuine block system.
        """
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx
            return (rx, ry)

        queue = []
        merged = union(alpha, beta)
        if merged:
            queue.append(merged)
        while queue:
            u, v = queue.pop()
            for g in self.generators:
                merged = union(g(u), g(v))
                if merged:
                    queue.append(merged)
        classes = {}
        for x in range(n):
            classes.setdefault(find(x), []).append(x)
        return _canonical_partition(classes.values())

    def block_systems(self):
        """Distinct nontrivial minimal block systems (alpha fixed at 0)."""
        if not self.is_transitive() or self.degree < 2:
            return []
        systems = []
        seen = set()
        for beta in range(1, self.degree):
            part = self.minimal_block(0, beta)
            if len(part) == 1 or len(part) == self.degree:
                continue
            if part in seen:
                continue
            seen.add(part)
            bs = BlockSystem(part)
            _check_block_system(self, bs)
            systems.append(bs)
        return systems

    def is_primitive(self):
        """Transitive with no nontrivial invariant partition.

        Degree-1 groups are reported imprimitive, matching the fingerprint
        convention used by the survey.
        """
        if self.degree < 2 or not self.is_transitive():
            return False
        for beta in range(1, self.degree):
            part = self.minimal_block(0, beta)
            if 1 < len(part) < self.degree:
                return False
        return True

    # -- structure flags ---------------------------------------------------

    def contains_alternating(self):
        """True iff the group has index at most 2 in the symmetric group."""
        return 2 * self.order() >= math.factorial(self.degree)

    def is_abelian(self):
        for i, g in enumerate(self.generators):
            for h in self.generators[i + 1:]:
                if g * h != h * g:
                    return False
        return True

    def derived_subgroup_order(self):
        """Order of the commutator subgroup (normal closure of commutators)."""
        gens = list(self.generators)
        comm = []
        seen = set()
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                c = g * h * g.inverse() * h.inverse()
                if not c.is_identity() and c.images not in seen:
                    seen.add(c.images)
                    comm.append(c)
        derived = PermutationGroup(self.degree, comm)
        while True:
            new = []
            for d in derived.generators:
                for g in gens:
                    t = g.inverse() * d * g
                    if t.images not in seen and not derived.contains(t):
                        seen.add(t.images)
                        new.append(t)
            if not new:
                return derived.order()
            derived = PermutationGroup(self.degree,
                                       list(derived.generators) + new)

    def fingerprint(self):
        order = self.order()
        derived = self.derived_subgroup_order() if order <= DERIVED_ORDER_CAP else None
        return Fingerprint(
            degree=self.degree,
            order=order,
            transitive=self.is_transitive(),
            primitive=self.is_primitive(),
            abelian=self.is_abelian(),
            generator_cycle_types=tuple(sorted(g.cycle_type()
                                               for g in self.generators)),
            derived_order=derived,
        )

    # -- element enumeration ------------------------------------------------

    def elements(self, cap=DEFAULT_ELEMENT_CAP):
        """Full element set by closure; raises CapExceeded beyond cap."""
        return brute_force_elements(self, cap=cap)

    def random_element(self, rng, length=None):
        """Product of uniformly chosen generators (for membership tests)."""
        if not self.generators:
            return Perm.identity(self.degree)
        if length is None:
            length = 2 * self.degree + 3
        g = Perm.identity(self.degree)
        for _ in range(length):
            g = g * rng.choice(self.generators)
        return g

    def __repr__(self):
        return (f"PermutationGroup(degree={self.degree}, "
                f"ngens={len(self.generators)})")


def _check_block_system(group, system):
    blocks = system.blocks
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise AssertionError(f"unequal block sizes: {sorted(sizes)}")
    index = {}
    for bi, b in enumerate(blocks):
        for x in b:
            index[x] = bi
    for g in group.generators:
        for b in blocks:
            images = {index[g(x)] for x in b}
            if len(images) != 1:
                raise AssertionError(f"generator {g} splits block {b}")


def group_order(degree, generators):
    return PermutationGroup(degree, generators).order()


def brute_force_elements(group, cap=DEFAULT_ELEMENT_CAP):
    """Exact element set of <generators> by breadth-first closure."""
    n = group.degree
    identity = Perm.identity(n)
    elements = {identity.images: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in group.generators:
                p = g * h
                if p.images not in elements:
                    if len(elements) >= cap:
                        raise CapExceeded(f"element closure exceeded cap {cap}")
                    elements[p.images] = p
                    nxt.append(p)
        frontier = nxt
    return set(elements.values())


def centralizer_in_symmetric(group):
    """Brute-force centralizer of the group in S_n (degree <= 8)."""
    n = group.degree
    if n > CENTRALIZER_DEGREE_CAP:
        raise CapExceeded(
            f"centralizer oracle iterates n! candidates; degree {n} > "
            f"{CENTRALIZER_DEGREE_CAP}")
    perms = np.array(list(_all_perms(range(n))), dtype=np.int64)
    if group.generators:
        gens = np.array([g.images for g in group.generators], dtype=np.int64)
        mask = backend.centralizer_mask(perms, gens)
        perms = perms[mask]
    members = [Perm(row) for row in perms]
    result = PermutationGroup(n, members)
    result._order = len(members)
    return result


def invariant_partitions(group):
    """All nontrivial partitions fixed by the group (oracle, degree <= 7)."""
    n = group.degree
    if n > 7:
        raise CapExceeded("partition oracle limited to degree <= 7")
    out = []
    for part in _set_partitions(list(range(n))):
        if len(part) in (1, n):
            continue
        canon = _canonical_partition(part)
        index = {}
        for bi, b in enumerate(canon):
            for x in b:
                index[x] = bi
        ok = True
        for g in group.generators:
            for b in canon:
                if len({index[g(x)] for x in b}) != 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(canon)
    return out


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def groups_equal(g1, g2, element_cap=10**4):
    """Equality as permutation groups (same degree, same element set).

    Small groups are compared by literal element sets; larger ones by order
    equality plus cross-membership of the generators, which is equivalent.
    """
    if g1.degree != g2.degree:
        return False
    o1 = g1.order()
    if o1 != g2.order():
        return False
    if o1 <= element_cap:
        return brute_force_elements(g1) == brute_force_elements(g2)
    return (all(g1.contains(g) for g in g2.generators)
            and all(g2.contains(g) for g in g1.generators))
