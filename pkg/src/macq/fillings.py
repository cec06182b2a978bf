"""Fillings of bottom-justified column diagrams and their statistics.

A filling assigns an entry from {1..n} to every cell of dg(lambda).  Rows are
stored bottom to top, so ``rows[r-1][c-1]`` is the entry in row r, column c.
The statistics implemented here:

  * maj: sum of (leg + 1) over descent cells, a descent being a cell whose
    entry exceeds the entry directly below it.  Cells in row 1 have no cell
    below and never count.
  * quinv: the number of L-triples (a cell x, the cell y below it, and a cell
    z to the right of y) whose entries wind counterclockwise when read in
    increasing order, i.e. a <= b < c, b < c < a, or c < a <= b for
    (a, b, c) = (x, y, z) entries.  A pair y, z in the same row with nothing
    above y forms a degenerate triple, counted when b < c.
  * inv: the row-analog inversion statistic (triples of a cell, its right
    neighbors, and the cell below it), kept as an independent check against
    quinv since both produce the same symmetric polynomial.
  * perm: the product over heights of t-multinomials of repeated-column
    multiplicities.

Superfillings carry barred entries, encoded as negative integers, ordered
0 < 1 < -1 < 2 < -2 < ...; the comparison I(a, b) extends "greater than" so
that equal barred entries compare as 1 and equal unbarred entries as 0.
"""

from __future__ import annotations

from itertools import product

from .qtalg import QTPoly
from .shapes import check_partition, conjugate, n_stat, t_multinomial


class NegativeCoquinv(ArithmeticError):
    """quinv exceeded the total triple count; indicates a statistic bug."""


class UnequalColumnHeights(ValueError):
    """The column-swap operator needs two adjacent columns of equal height."""


class HeightMismatch(ValueError):
    """Column comparison needs equal heights."""


def quinv_triple(a: int, b: int, c: int) -> bool:
    """Counterclockwise test for the L-triple with entries a (top), b (below
    a), c (right of b).  a = 0 marks the missing top cell of a degenerate
    triple, reducing the test to b < c."""
    if a == 0:
        return b < c
    return (a <= b < c) or (b < c < a) or (c < a <= b)


def _inv_triple(a: int, c: int, b: int) -> int:
    # a top-left, c top-right, b directly below a; counts 0 or 1
    return int(a > c) + int(c > b) - int(a > b)


def compare_columns_quinv(col_a, col_b) -> int:
    """Total preorder on equal-height columns (entries bottom to top).

    Scanning from the top, at the highest differing row r the pair is ordered
    by whether the shared entry above together with the two differing entries
    forms a quinv triple: returns 1 when col_a > col_b, -1 when col_a < col_b,
    0 only for identical columns."""
    col_a = tuple(col_a)
    col_b = tuple(col_b)
    if len(col_a) != len(col_b):
        raise HeightMismatch("columns have heights %d and %d" % (len(col_a), len(col_b)))
    if col_a == col_b:
        return 0
    height = len(col_a)
    r = max(i + 1 for i in range(height) if col_a[i] != col_b[i])
    above = 0 if r == height else col_a[r]
    return 1 if quinv_triple(above, col_a[r - 1], col_b[r - 1]) else -1


def _order_key(v: int) -> int:
    # 0 < 1 < barred 1 < 2 < barred 2 < ...
    if v == 0:
        return 0
    return 2 * abs(v) - (1 if v > 0 else 0)


def greater_i(a: int, b: int) -> int:
    """I(a, b): 1 when a is strictly greater than b in the barred order; for
    equal entries, 1 when barred and 0 when unbarred."""
    ka = _order_key(a)
    kb = _order_key(b)
    if ka != kb:
        return 1 if ka > kb else 0
    return 1 if a < 0 else 0


def _super_quinv_triple(a: int, b: int, c: int) -> bool:
    # exactly one of the three conditions; a = 0 marks a degenerate triple
    hits = (
        (greater_i(a, b) == 1)
        + (greater_i(c, b) == 0)
        + (greater_i(a, c) == 0)
    )
    return hits == 1


class Filling:
    """A filling of dg(shape) with entries in {1..n}."""

    __slots__ = ("shape", "n", "rows", "widths")

    def __init__(self, shape, rows, n: int):
        shape = check_partition(shape)
        widths = conjugate(shape)
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != len(widths) or any(
            len(row) != w for row, w in zip(rows, widths)
        ):
            raise ValueError("rows %r do not fill dg(%r)" % (rows, shape))
        for row in rows:
            for e in row:
                if not 1 <= e <= n:
                    raise ValueError("entry %r outside 1..%d" % (e, n))
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "widths", widths)

    def __setattr__(self, name, value):
        raise AttributeError("Filling is immutable")

    @classmethod
    def from_columns(cls, shape, columns, n: int) -> "Filling":
        shape = check_partition(shape)
        widths = conjugate(shape)
        rows = [
            tuple(columns[c][r] for c in range(w))
            for r, w in enumerate(widths)
        ]
        return cls(shape, rows, n)

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def column(self, j: int) -> tuple:
        """Entries of column j, bottom to top."""
        return tuple(self.rows[r][j - 1] for r in range(self.shape[j - 1]))

    def __eq__(self, other):
        return (
            isinstance(other, Filling)
            and self.shape == other.shape
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.n, self.rows))

    def __repr__(self):
        body = " / ".join(
            ",".join(map(str, row)) for row in reversed(self.rows)
        )
        return "Filling(%r: %s)" % (self.shape, body)

    # -- statistics ---------------------------------------------------------

    def content(self) -> tuple:
        counts = [0] * self.n
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def maj(self) -> int:
        total = 0
        for r in range(2, len(self.rows) + 1):
            upper = self.rows[r - 1]
            lower = self.rows[r - 2]
            for c in range(1, len(upper) + 1):
                if upper[c - 1] > lower[c - 1]:
                    total += self.shape[c - 1] - r + 1
        return total

    def quinv(self) -> int:
        total = 0
        for r in range(1, len(self.rows) + 1):
            row = self.rows[r - 1]
            width = len(row)
            for i in range(1, width + 1):
                if self.shape[i - 1] == r:
                    above = 0
                else:
                    above = self.rows[r][i - 1]
                b = row[i - 1]
                for j in range(i + 1, width + 1):
                    if quinv_triple(above, b, row[j - 1]):
                        total += 1
        return total

    def coquinv(self) -> int:
        total = n_stat(self.shape)
        quinv = self.quinv()
        if quinv > total:
            raise NegativeCoquinv(
                "quinv %d exceeds triple count %d" % (quinv, total)
            )
        return total - quinv

    def inv(self) -> int:
        total = 0
        bottom = self.rows[0]
        for i in range(len(bottom)):
            for j in range(i + 1, len(bottom)):
                if bottom[i] > bottom[j]:
                    total += 1
        for r in range(2, len(self.rows) + 1):
            row = self.rows[r - 1]
            below = self.rows[r - 2]
            for i in range(len(row)):
                for j in range(i + 1, len(row)):
                    total += _inv_triple(row[i], row[j], below[i])
        return total

    def is_quinv_nonattacking(self) -> bool:
        """No equal entries in a row, nor between a cell and any cell strictly
        to its right one row lower."""
        for row in self.rows:
            if len(set(row)) != len(row):
                return False
        for r in range(2, len(self.rows) + 1):
            row = self.rows[r - 1]
            below = self.rows[r - 2]
            for i in range(len(row)):
                for j in range(i + 1, len(below)):
                    if row[i] == below[j]:
                        return False
        return True

    def _height_blocks(self):
        blocks = []
        start = 0
        k = len(self.shape)
        while start < k:
            stop = start
            while stop < k and self.shape[stop] == self.shape[start]:
                stop += 1
            blocks.append((start + 1, stop))
            start = stop
        return blocks

    def is_quinv_sorted(self) -> bool:
        """Within every block of equal-height columns, columns weakly increase
        left to right under the column preorder."""
        for lo, hi in self._height_blocks():
            cols = [self.column(j) for j in range(lo, hi + 1)]
            for i in range(len(cols)):
                for j in range(i + 1, len(cols)):
                    if compare_columns_quinv(cols[i], cols[j]) > 0:
                        return False
        return True

    def perm_stat(self) -> QTPoly:
        """Product over heights of the t-multinomial of repeated-column
        multiplicities."""
        p = QTPoly.one()
        for lo, hi in self._height_blocks():
            counts = {}
            for j in range(lo, hi + 1):
                col = self.column(j)
                counts[col] = counts.get(col, 0) + 1
            p = p * t_multinomial(counts.values())
        return p

    def tau(self, j: int) -> "Filling":
        """Swap entries between equal-height columns j and j+1, from the top
        differing row downward, stopping once a swap stops changing whether
        the triple into the row below is a quinv triple."""
        if j < 1 or j >= len(self.shape) or self.shape[j - 1] != self.shape[j]:
            raise UnequalColumnHeights(
                "columns %d, %d of %r" % (j, j + 1, self.shape)
            )
        a = self.column(j)
        b = self.column(j + 1)
        if a == b:
            return self
        height = len(a)
        ell = max(r + 1 for r in range(height) if a[r] != b[r])
        swapped = {ell}
        i = ell
        while i >= 2:
            before = quinv_triple(a[i - 1], a[i - 2], b[i - 2])
            after = quinv_triple(b[i - 1], a[i - 2], b[i - 2])
            if before == after:
                break
            swapped.add(i - 1)
            i -= 1
        new_a = tuple(
            b[r] if (r + 1) in swapped else a[r] for r in range(height)
        )
        new_b = tuple(
            a[r] if (r + 1) in swapped else b[r] for r in range(height)
        )
        columns = [self.column(c) for c in range(1, len(self.shape) + 1)]
        columns[j - 1] = new_a
        columns[j] = new_b
        return Filling.from_columns(self.shape, columns, self.n)

    # -- projections ----------------------------------------------------------

    def proj_tazrp(self) -> tuple:
        """Site contents of the zero-range state: site j collects the heights
        of the columns whose bottom entry is j, as a sorted multiset."""
        sites = [[] for _ in range(self.n)]
        for s, e in enumerate(self.rows[0]):
            sites[e - 1].append(self.shape[s])
        return tuple(tuple(sorted(site, reverse=True)) for site in sites)

    def to_json_obj(self):
        return {
            "shape": list(self.shape),
            "n": self.n,
            "rows": [list(row) for row in self.rows],
        }


class SuperFilling:
    """A filling over the barred alphabet; entry -v means barred v."""

    __slots__ = ("shape", "n", "rows", "widths")

    def __init__(self, shape, rows, n: int):
        shape = check_partition(shape)
        widths = conjugate(shape)
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != len(widths) or any(
            len(row) != w for row, w in zip(rows, widths)
        ):
            raise ValueError("rows %r do not fill dg(%r)" % (rows, shape))
        for row in rows:
            for e in row:
                if e == 0 or not 1 <= abs(e) <= n:
                    raise ValueError("entry %r outside the barred alphabet" % e)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "widths", widths)

    def __setattr__(self, name, value):
        raise AttributeError("SuperFilling is immutable")

    def forget_bars(self) -> Filling:
        return Filling(
            self.shape, [[abs(e) for e in row] for row in self.rows], self.n
        )

    def maj(self) -> int:
        total = 0
        for r in range(2, len(self.rows) + 1):
            upper = self.rows[r - 1]
            lower = self.rows[r - 2]
            for c in range(1, len(upper) + 1):
                if greater_i(upper[c - 1], lower[c - 1]) == 1:
                    total += self.shape[c - 1] - r + 1
        return total

    def quinv(self) -> int:
        total = 0
        for r in range(1, len(self.rows) + 1):
            row = self.rows[r - 1]
            width = len(row)
            for i in range(1, width + 1):
                if self.shape[i - 1] == r:
                    above = 0
                else:
                    above = self.rows[r][i - 1]
                b = row[i - 1]
                for j in range(i + 1, width + 1):
                    if _super_quinv_triple(above, b, row[j - 1]):
                        total += 1
        return total

    def stats(self) -> tuple:
        """(maj, quinv, positives, negatives)."""
        pos = sum(1 for row in self.rows for e in row if e > 0)
        neg = sum(1 for row in self.rows for e in row if e < 0)
        return (self.maj(), self.quinv(), pos, neg)

    def to_json_obj(self):
        return {
            "shape": list(self.shape),
            "n": self.n,
            "rows": [list(row) for row in self.rows],
        }

    def __repr__(self):
        body = " / ".join(
            ",".join(map(str, row)) for row in reversed(self.rows)
        )
        return "SuperFilling(%r: %s)" % (self.shape, body)


def enumerate_fillings(lam, n: int, predicate=None):
    """All n^|lambda| fillings of dg(lambda), entries chosen cell by cell in
    row-major order (bottom row first, left to right), in lexicographic
    order of that reading word.  An optional predicate filters the stream."""
    lam = check_partition(lam)
    if n < 1:
        raise ValueError("need at least one entry value")
    widths = conjugate(lam)
    size = sum(widths)
    for word in product(range(1, n + 1), repeat=size):
        rows = []
        pos = 0
        for w in widths:
            rows.append(word[pos : pos + w])
            pos += w
        filling = Filling(lam, rows, n)
        if predicate is None or predicate(filling):
            yield filling


def enumerate_superfillings(lam, n: int, predicate=None):
    """All (2n)^|lambda| superfillings, same ordering as enumerate_fillings
    with the alphabet 1, -1, 2, -2, ..., n, -n."""
    lam = check_partition(lam)
    alphabet = []
    for v in range(1, n + 1):
        alphabet.extend([v, -v])
    widths = conjugate(lam)
    size = sum(widths)
    for word in product(alphabet, repeat=size):
        rows = []
        pos = 0
        for w in widths:
            rows.append(word[pos : pos + w])
            pos += w
        sf = SuperFilling(lam, rows, n)
        if predicate is None or predicate(sf):
            yield sf
