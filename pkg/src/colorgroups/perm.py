"""Image-array permutations on 0..n-1.

Composition is right-to-left function composition: (p * q)(x) = p(q(x)),
so in a product written s1 * t * s2 the factor s2 acts first.
"""

from __future__ import annotations

from functools import reduce


class Perm:
    """A permutation of 0..n-1 stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity(n):
        return Perm(range(n))

    @staticmethod
    def from_cycles(n, cycles):
        images = list(range(n))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Perm(images)

    @staticmethod
    def transposition(n, a, b):
        return Perm.from_cycles(n, [(a, b)])

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        q = other.images
        return Perm(tuple(self.images[q[x]] for x in range(len(q))))

    def __pow__(self, k):
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self, include_fixed=False):
        """Cycle decomposition; each cycle starts at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cycle = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self):
        """Weakly decreasing cycle lengths, fixed points included."""
        lengths = sorted((len(c) for c in self.cycles(include_fixed=True)),
                         reverse=True)
        return tuple(lengths)

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({format_cycles(self)}, degree={self.degree})"

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")


def compose(p, q):
    """(compose(p, q))(x) = p(q(x))."""
    return p * q


def product(perms, n=None):
    """Product applied right to left; identity of degree n when empty."""
    perms = list(perms)
    if not perms:
        if n is None:
            raise ValueError("empty product needs an explicit degree")
        return Perm.identity(n)
    return reduce(lambda a, b: a * b, perms)


def inverse(p):
    return p.inverse()


def cycle_type(p):
    return p.cycle_type()


def format_cycles(p):
    """Cycle notation like "(0 1)(2 3)"; the identity prints as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse_cycles(text, n=None):
    """Parse cycle notation; degree defaults to 1 + the largest point seen."""
    text = text.strip()
    if text in ("", "()"):
        if n is None:
            raise ValueError("identity permutation needs an explicit degree")
        return Perm.identity(n)
    if text.count("(") != text.count(")") or not text.startswith("("):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for chunk in text.replace(")", ")\x00").split("\x00"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"malformed cycle notation: {text!r}")
        body = chunk[1:-1].replace(",", " ").split()
        try:
            cycle = [int(x) for x in body]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        if cycle:
            cycles.append(cycle)
    size = 1 + max((max(c) for c in cycles), default=-1)
    if n is not None:
        if n < size:
            raise ValueError(f"cycle notation {text!r} exceeds degree {n}")
        size = n
    return Perm.from_cycles(size, cycles)
