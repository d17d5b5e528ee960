"""Permutation-pair monodromy representations.

A representation of degree n is a pair (sigma1, sigma2) of permutations of
{1..n}, the images of the two free generators.  Composites are written
"apply sigma1 first, then sigma2"; only cycle counts are consumed
downstream and those are convention-invariant.
"""

import re
from dataclasses import dataclass

from .errors import (
    DomainError,
    NotTransitiveError,
    NotTreeError,
    ParseError,
    SizeLimitError,
)

_EQUIV_DEGREE_CAP = 10


@dataclass(frozen=True)
class Permutation:
    """One-line notation over {1..n}: images[i-1] is the image of i."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if n == 0:
            raise DomainError("permutation must act on at least one point")
        if sorted(images) != list(range(1, n + 1)):
            raise DomainError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def apply_then(self, other):
        """The composite 'self first, then other'."""
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def cycles(self):
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            p = start
            while not seen[p - 1]:
                seen[p - 1] = True
                cyc.append(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def to_cycle_string(self):
        parts = [
            "(" + " ".join(str(p) for p in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        ]
        return "".join(parts) if parts else "()"

    @staticmethod
    def identity(n):
        return Permutation(tuple(range(1, n + 1)))


def cycle_count(perm):
    """Number of cycles, fixed points included."""
    return len(perm.cycles())


def parse_permutation(text, n=None):
    """Parse "(1 2)(3 4)" cycle notation or "2 1 4 3" one-line notation.

    For cycle notation the degree is n when given, otherwise the largest
    point mentioned.  Out-of-range and duplicate entries are rejected with
    the offending position in the message.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text")
    if text.startswith("("):
        return _parse_cycles(text, n)
    return _parse_one_line(text, n)


def _parse_one_line(text, n):
    images = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        if not token.lstrip("+").isdigit():
            raise ParseError(f"expected integer, got {token!r}", match.start())
        images.append(int(token))
    if n is not None and len(images) != n:
        raise ParseError(f"one-line notation lists {len(images)} points, expected {n}")
    size = len(images)
    seen = set()
    for match, val in zip(re.finditer(r"\S+", text), images):
        if not 1 <= val <= size:
            raise ParseError(f"point {val} out of range 1..{size}", match.start())
        if val in seen:
            raise ParseError(f"duplicate point {val}", match.start())
        seen.add(val)
    return Permutation(tuple(images))


def _parse_cycles(text, n):
    points = []
    cycles = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(', got {ch!r}", pos)
        end = text.find(")", pos)
        if end < 0:
            raise ParseError("unclosed cycle", pos)
        body = text[pos + 1 : end]
        cyc = []
        for match in re.finditer(r"\S+", body):
            token = match.group()
            if not token.isdigit():
                raise ParseError(f"expected integer, got {token!r}", pos + 1 + match.start())
            val = int(token)
            if val < 1:
                raise ParseError(f"points are 1-based, got {val}", pos + 1 + match.start())
            if val in points:
                raise ParseError(f"duplicate point {val}", pos + 1 + match.start())
            points.append(val)
            cyc.append(val)
        cycles.append(cyc)
        pos = end + 1
    size = n if n is not None else (max(points) if points else 1)
    for val in points:
        if val > size:
            raise ParseError(f"point {val} out of range 1..{size}")
    images = list(range(1, size + 1))
    for cyc in cycles:
        for i, val in enumerate(cyc):
            images[val - 1] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(images))


@dataclass(frozen=True)
class MonodromyRep:
    """Degree plus the two generator images."""

    n: int
    sigma1: Permutation
    sigma2: Permutation

    def __post_init__(self):
        if self.sigma1.n != self.n or self.sigma2.n != self.n:
            raise DomainError(
                f"permutation degrees {self.sigma1.n}, {self.sigma2.n} "
                f"do not match n={self.n}"
            )


def is_transitive(rep):
    """Orbit of 1 under <sigma1, sigma2> covers all n points."""
    seen = {1}
    frontier = [1]
    while frontier:
        p = frontier.pop()
        for sigma in (rep.sigma1, rep.sigma2):
            q = sigma(p)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen) == rep.n


def is_tree(rep):
    """c1 + c2 = n + 1 (transitivity required)."""
    if not is_transitive(rep):
        raise NotTransitiveError("tree test requires a transitive representation")
    return cycle_count(rep.sigma1) + cycle_count(rep.sigma2) == rep.n + 1


def euler_characteristic_disk(rep):
    """chi of the covering surface over the disk: -n + c1 + c2."""
    if not is_transitive(rep):
        raise NotTransitiveError("Euler characteristic requires transitivity")
    return -rep.n + cycle_count(rep.sigma1) + cycle_count(rep.sigma2)


def face_cycles(rep):
    """Cycle count of (sigma2 o sigma1)^{-1}; counts the faces c3.

    Cycle counts are inversion-invariant, so the inverse is not formed.
    """
    return cycle_count(rep.sigma1.apply_then(rep.sigma2))


def sphere_disk_euler_difference(rep):
    """chi(sphere cover) - chi(disk cover); equals the face count c3."""
    return face_cycles(rep)


def are_equivalent(rep1, rep2):
    """Whether a relabeling iota with sigma_i o iota = iota o sigma_i' exists.

    Backtracking over candidate images, pruned by cycle length under both
    generators; degrees above 10 are refused.
    """
    if rep1.n != rep2.n:
        raise DomainError(f"degrees differ: {rep1.n} vs {rep2.n}")
    n = rep1.n
    if n > _EQUIV_DEGREE_CAP:
        raise SizeLimitError(f"equivalence search capped at n <= {_EQUIV_DEGREE_CAP}")
    if rep1.sigma1.cycle_type() != rep2.sigma1.cycle_type():
        return False
    if rep1.sigma2.cycle_type() != rep2.sigma2.cycle_type():
        return False

    def cycle_lengths(perm):
        length = [0] * (n + 1)
        for cyc in perm.cycles():
            for p in cyc:
                length[p] = len(cyc)
        return length

    len1a, len1b = cycle_lengths(rep1.sigma1), cycle_lengths(rep1.sigma2)
    len2a, len2b = cycle_lengths(rep2.sigma1), cycle_lengths(rep2.sigma2)

    iota = [0] * (n + 1)   # image under iota, rep2-point -> rep1-point
    used = [False] * (n + 1)

    def propagate(x, y, stack):
        """Force iota(x) = y and close under both generators."""
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            if iota[x]:
                if iota[x] != y:
                    return False
                continue
            if used[y] or len2a[x] != len1a[y] or len2b[x] != len1b[y]:
                return False
            iota[x] = y
            used[y] = True
            stack.append((x, y))
            queue.append((rep2.sigma1(x), rep1.sigma1(y)))
            queue.append((rep2.sigma2(x), rep1.sigma2(y)))
        return True

    def search():
        x = next((p for p in range(1, n + 1) if not iota[p]), None)
        if x is None:
            return True
        for y in range(1, n + 1):
            if used[y]:
                continue
            stack = []
            if propagate(x, y, stack) and search():
                return True
            for xx, yy in stack:
                iota[xx] = 0
                used[yy] = False
        return False

    return search()


def chebyshev_monodromy(n):
    """The chain representation: sigma1 = (1 2)(3 4)..., sigma2 = (2 3)(4 5)...

    This is the monodromy shared by the degree-n Chebyshev polynomial and
    the degree-n Chebyshev-Blaschke products; it is always a tree.
    """
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    img1 = list(range(1, n + 1))
    for start in range(1, n, 2):
        img1[start - 1], img1[start] = img1[start], img1[start - 1]
    img2 = list(range(1, n + 1))
    for start in range(2, n, 2):
        img2[start - 1], img2[start] = img2[start], img2[start - 1]
    return MonodromyRep(n, Permutation(tuple(img1)), Permutation(tuple(img2)))


@dataclass(frozen=True)
class DessinStats:
    vertices: int
    edges: int


def dessin_stats(rep):
    """Vertex and edge counts of the dessin of a tree representation."""
    if not is_tree(rep):
        raise NotTreeError("dessin statistics require a tree representation")
    return DessinStats(
        vertices=cycle_count(rep.sigma1) + cycle_count(rep.sigma2),
        edges=rep.n,
    )
