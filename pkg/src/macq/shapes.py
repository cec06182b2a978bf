"""Partitions, compositions, and diagram cell statistics.

The diagram dg(lambda) of a partition is drawn as bottom-justified columns:
column i holds lambda_i cells, columns are numbered from the left and rows
from the bottom, both 1-based.  A cell is the pair (row, col).  Row r of the
diagram is then the contiguous run of columns 1..lambda'_r, where lambda' is
the conjugate partition.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .qtalg import QTPoly, t_factorial, t_integer


class CellOutOfShape(ValueError):
    """Cell does not lie in the diagram of the partition."""


class RowOneHasNoRarm(ValueError):
    """rarm looks at the row below, which row 1 does not have."""


def check_partition(lam) -> tuple:
    lam = tuple(lam)
    for i, part in enumerate(lam):
        if part <= 0:
            raise ValueError("partition parts must be positive: %r" % (lam,))
        if i and lam[i - 1] < part:
            raise ValueError("parts must weakly decrease: %r" % (lam,))
    return lam


def conjugate(lam) -> tuple:
    """Column counts of the transposed diagram: lambda'_r = #{i : lambda_i >= r}."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= r) for r in range(1, lam[0] + 1))


def rearrange(alpha, order: str = "decreasing") -> tuple:
    """Sort the parts of a composition; the part multiset is preserved."""
    if order == "decreasing":
        return tuple(sorted(alpha, reverse=True))
    if order == "increasing":
        return tuple(sorted(alpha))
    raise ValueError("order must be 'decreasing' or 'increasing'")


def lam_of(alpha) -> tuple:
    """The partition obtained by sorting a weak composition and dropping zeros."""
    return tuple(p for p in sorted(alpha, reverse=True) if p)


def nonzero_count(alpha) -> int:
    return sum(1 for p in alpha if p)


def cells(lam):
    """All cells of dg(lambda), row-major from the bottom row, left to right."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    for r, width in enumerate(conj, start=1):
        for c in range(1, width + 1):
            yield (r, c)


def contains_cell(lam, cell) -> bool:
    r, c = cell
    lam = tuple(lam)
    return 1 <= c <= len(lam) and 1 <= r <= lam[c - 1]


def leg(lam, cell) -> int:
    """Number of cells above the given cell in its column."""
    if not contains_cell(lam, cell):
        raise CellOutOfShape("cell %r not in dg(%r)" % (cell, tuple(lam)))
    r, c = cell
    return lam[c - 1] - r


def rarm(lam, cell) -> int:
    """Number of cells strictly to the right of the cell in the row below."""
    if not contains_cell(lam, cell):
        raise CellOutOfShape("cell %r not in dg(%r)" % (cell, tuple(lam)))
    r, c = cell
    if r < 2:
        raise RowOneHasNoRarm("cell %r is in row 1" % (cell,))
    return sum(1 for j in range(c + 1, len(lam) + 1) if lam[j - 1] >= r - 1)


def n_stat(lam) -> int:
    """sum_i binom(lambda'_i, 2); the total number of same-row cell pairs."""
    return sum(comb(k, 2) for k in conjugate(lam))


def part_multiplicities(lam) -> dict:
    counts = {}
    for part in check_partition(lam):
        counts[part] = counts.get(part, 0) + 1
    return counts


def t_multinomial(parts) -> QTPoly:
    """t-multinomial [m1 + ... + mk choose m1, ..., mk]_t.

    Computed as [m]_t! divided by the product of [mi]_t!, by exact polynomial
    division; the quotient is always a polynomial."""
    parts = [m for m in parts if m]
    total = sum(parts)
    num = t_factorial(total)
    for m in parts:
        quotient = num.exact_div(t_factorial(m))
        if quotient is None:
            raise ArithmeticError("t-multinomial division left a remainder")
        num = quotient
    return num


def perm_lambda(lam) -> QTPoly:
    """prod over part sizes of [multiplicity]_t!, the t-analog of the number
    of ways to permute equal-height columns of dg(lambda)."""
    p = QTPoly.one()
    for mult in part_multiplicities(lam).values():
        p = p * t_factorial(mult)
    return p


def t_integer_value(k: int, t) -> Fraction:
    """[k]_t evaluated at an exact rational t."""
    return sum((t**i for i in range(k)), Fraction(0))


def partitions_of(size: int, max_part: int | None = None):
    """All partitions of the given size, largest part first, lex order."""
    if size == 0:
        yield ()
        return
    if max_part is None or max_part > size:
        max_part = size
    for first in range(max_part, 0, -1):
        for rest in partitions_of(size - first, first):
            yield (first,) + rest


def parse_partition(text: str) -> tuple:
    """Parse '2,2,1' or frequency notation '1^1 2^2' into a partition."""
    text = text.strip()
    if not text:
        return ()
    if "^" in text:
        parts = []
        for chunk in text.replace(",", " ").split():
            if "^" in chunk:
                base, _, mult = chunk.partition("^")
                parts.extend([int(base)] * int(mult))
            else:
                parts.append(int(chunk))
        return check_partition(sorted(parts, reverse=True))
    return check_partition(
        sorted((int(p) for p in text.split(",")), reverse=True)
    )


def parse_composition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    alpha = tuple(int(p) for p in text.split(","))
    if any(p < 0 for p in alpha):
        raise ValueError("composition parts must be nonnegative: %r" % (alpha,))
    return alpha


__all__ = [
    "CellOutOfShape",
    "RowOneHasNoRarm",
    "check_partition",
    "conjugate",
    "rearrange",
    "lam_of",
    "nonzero_count",
    "cells",
    "contains_cell",
    "leg",
    "rarm",
    "n_stat",
    "part_multiplicities",
    "t_multinomial",
    "perm_lambda",
    "t_integer",
    "t_integer_value",
    "partitions_of",
    "parse_partition",
    "parse_composition",
]
