"""Partitions, box contents, and standard Young tableaux.

The content of the box in (1-based) row r, column c is c - r.  A standard
tableau is recovered from an eigenvalue chain by reading off the content
of each successive box: the addable corners of a Young diagram all have
distinct contents, so a content sequence determines at most one growth
path.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse-lexicographic order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def grow(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            grow(remaining - part, part, prefix)
            prefix.pop()

    grow(n, n, [])
    return tuple(out)


def content_sum(shape: Sequence[int]) -> int:
    """Sum of box contents over the diagram of ``shape``.

    >>> content_sum((3,))
    3
    >>> content_sum((2, 1))
    0
    """
    return sum(c - r for r, rowlen in enumerate(shape) for c in range(rowlen))


@dataclass(frozen=True)
class StandardTableau:
    """A filling of a partition shape with 1..n, increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = tuple(len(r) for r in self.rows)
        if not shape or any(a < b for a, b in zip(shape, shape[1:])) or shape[-1] == 0:
            raise ValueError(f"row lengths {shape} do not form a partition")
        entries = [x for row in self.rows for x in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be exactly 1..{len(entries)}")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("columns must increase downwards")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def content_of(self, entry: int) -> int:
        for r, row in enumerate(self.rows):
            if entry in row:
                return row.index(entry) - r
        raise ValueError(f"entry {entry} not in tableau")

    def bracket_lines(self) -> list[str]:
        """Rows rendered one per line: ["[1 2]", "[3]"]."""
        return ["[" + " ".join(str(x) for x in row) + "]" for row in self.rows]

    def __str__(self) -> str:
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)


def addable_corners(shape: Sequence[int]) -> list[tuple[int, int]]:
    """(row, content) for every cell that may be appended to ``shape``.

    Contents of distinct corners are distinct, which is what makes
    content chains unambiguous.
    """
    corners = []
    for r in range(len(shape) + 1):
        rowlen = shape[r] if r < len(shape) else 0
        above = shape[r - 1] if r > 0 else None
        if above is not None and above <= rowlen:
            continue
        corners.append((r, rowlen - r))
    return corners


def tableau_from_chain(nu: Sequence[int]) -> StandardTableau:
    """The unique standard tableau whose box contents follow a chain.

    ``nu`` is the eigenvalue chain (nu_n, ..., nu_2) of the class-sum
    operators C(n), ..., C(2); box j then has content nu_j - nu_{j-1}
    with nu_1 = 0, and box j is placed at the unique addable corner with
    that content.  Raises ValueError when no such corner exists, i.e.
    the chain is not realizable.

    >>> tableau_from_chain((3, 1)).rows
    ((1, 2, 3),)
    >>> tableau_from_chain((0, -1)).rows
    ((1, 3), (2,))
    """
    nus_asc = list(reversed(tuple(nu)))  # nu_2, nu_3, ..., nu_n
    contents = []
    prev = 0
    for v in nus_asc:
        contents.append(v - prev)
        prev = v
    rows: list[list[int]] = [[1]]
    for entry, want in enumerate(contents, start=2):
        shape = [len(r) for r in rows]
        for r, content in addable_corners(shape):
            if content == want:
                if r == len(rows):
                    rows.append([entry])
                else:
                    rows[r].append(entry)
                break
        else:
            raise ValueError(
                f"chain {tuple(nu)} is not realizable: no addable corner has "
                f"content {want} for box {entry}"
            )
    return StandardTableau(tuple(tuple(r) for r in rows))


__all__ = [
    "partitions",
    "content_sum",
    "StandardTableau",
    "addable_corners",
    "tableau_from_chain",
]
