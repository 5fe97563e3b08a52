"""Permutations of the points {1, ..., n}.

A permutation is stored in one-line notation as the tuple of images of
1..n (1-based, to match the usual cycle symbols like ``(1 2)``).  The
composition convention is fixed once for the whole package:

    (p * q)(x) = p(q(x))        -- the right factor acts first.

Every representation-property check downstream depends on this single
declaration.
"""
from __future__ import annotations

from typing import Iterable


class Permutation:
    """A bijection of {1, ..., n} in one-line notation.

    >>> p = Permutation((2, 1, 3))
    >>> p(1), p(2), p(3)
    (2, 1, 3)
    >>> str(p)
    '(1 2)'
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a bijection of 1..{n}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self.images):
            raise ValueError(f"point {point} out of range 1..{len(self.images)}")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by it.

        >>> Permutation((2, 3, 1, 4)).cycles()
        [(1, 2, 3)]
        """
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cyc = []
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                cyc.append(x)
                x = self.images[x - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return cycle_string(self)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def identity(n: int) -> Permutation:
    """The identity permutation of degree n.

    >>> identity(3).images
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation(range(1, n + 1))


def transposition(i: int, j: int, n: int) -> Permutation:
    """The 2-cycle (i j) inside S_n; i and j may be given in either order.

    >>> transposition(1, 3, 3).images
    (3, 2, 1)
    """
    if i == j:
        raise ValueError(f"transposition needs two distinct points, got ({i} {j})")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"points ({i} {j}) out of range 1..{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p∘q with q applied first: (p∘q)(x) = p(q(x)).

    >>> compose(transposition(1, 2, 3), transposition(2, 3, 3)).images
    (2, 3, 1)
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    pim = p.images
    return Permutation(pim[x - 1] for x in q.images)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def subgroup_transpositions(k: int, n: int) -> list[Permutation]:
    """All transpositions (i j) with i < j <= k, embedded in S_n.

    These are the terms of the class-sum operator of the subgroup S_k in
    the chain S_2 < S_3 < ... < S_n; the list has k(k-1)/2 elements.
    """
    if k < 2:
        raise ValueError(f"subgroup degree must be at least 2, got {k}")
    if k > n:
        raise ValueError(f"subgroup degree {k} exceeds ambient degree {n}")
    return [
        transposition(i, j, n)
        for i in range(1, k)
        for j in range(i + 1, k + 1)
    ]


def cycle_string(p: Permutation) -> str:
    """Cycle notation with fixed points omitted; identity prints as "()".

    >>> cycle_string(Permutation((2, 1, 4, 3)))
    '(1 2)(3 4)'
    """
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation like "(1 2)(3 4)" into a permutation of degree n.

    Cycles are parenthesized, points whitespace-separated, juxtaposed cycles
    must be disjoint, fixed points may be omitted, and "()" is the identity.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty cycle expression")
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise ValueError(f"unbalanced '(' in {text!r}")
        body = text[pos + 1 : end].split()
        try:
            points = [int(tok) for tok in body]
        except ValueError:
            raise ValueError(f"non-integer point in cycle {text[pos:end + 1]!r}") from None
        cycles.append(points)
        pos = end + 1
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for points in cycles:
        for x in points:
            if not 1 <= x <= n:
                raise ValueError(f"point {x} out of range 1..{n}")
            if x in seen:
                raise ValueError(f"point {x} repeated; cycles must be disjoint")
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    return Permutation(images)


def random_permutation(n: int, rng) -> Permutation:
    """A pseudorandom element of S_n drawn from the given ``random.Random``."""
    points = list(range(1, n + 1))
    rng.shuffle(points)
    return Permutation(points)


__all__ = [
    "Permutation",
    "identity",
    "transposition",
    "compose",
    "inverse",
    "subgroup_transpositions",
    "cycle_string",
    "parse_cycles",
    "random_permutation",
]
