"""Multiline queues: ball systems on a cylinder, pairings, and weights.

A ball system for (lambda, n) has rows 1..lambda_1 (bottom to top) on n
cyclic columns; row r holds exactly lambda'_r balls.  A pairing matches every
ball in row r to a distinct ball in row r-1, drawn as a strand that walks
weakly rightward around the cylinder.  Each maximal chain of matched balls is
a strand; a strand whose top ball sits in row r gives all its balls the label
r.  Two constraints cut down the admissible matchings: vertically adjacent
balls with equal labels must be matched to each other (a trivial pairing),
and vertically adjacent balls with distinct labels must increase downward.

The q,t-weight multiplies one factor per nontrivial pairing, computed against
a pairing order: all of a row's pairings precede the next row down, higher
labels go first within a row, and trivial pairings lead their label class.
Ties are broken by departure column, which makes the order a function of the
labeling alone.  For a pairing p with label ell departing row r:

    weight(p) = t^Skip(p) q^(wrap * (ell - r + 1)) (1 - t)
                / (1 - q^(ell - r + 1) t^Free(p))

where Skip counts balls passed over whose own arrival comes later in the
order, Free counts balls in the arrival row still unmatched just before p is
drawn (including p's own arrival), and wrap records whether the strand
crosses the cylinder seam.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .fillings import Filling
from .qtalg import QTPoly, QTRational
from .shapes import check_partition, conjugate


class ShapeTooWide(ValueError):
    """The partition has more parts than there are columns."""


_INF = float("inf")


class BallSystem:
    """Occupied-column sets per row; rows[r-1] is row r, sorted ascending."""

    __slots__ = ("lam", "n", "rows")

    def __init__(self, lam, n: int, rows):
        lam = check_partition(lam)
        if len(lam) > n:
            raise ShapeTooWide("%d parts on %d columns" % (len(lam), n))
        widths = conjugate(lam)
        rows = tuple(tuple(sorted(row)) for row in rows)
        if len(rows) != len(widths):
            raise ValueError("expected %d rows" % len(widths))
        for row, w in zip(rows, widths):
            if len(set(row)) != w:
                raise ValueError("row %r should hold %d balls" % (row, w))
            if any(not 1 <= c <= n for c in row):
                raise ValueError("column out of range in %r" % (row,))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BallSystem is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BallSystem)
            and self.lam == other.lam
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.lam, self.n, self.rows))

    def __repr__(self):
        return "BallSystem(%r, n=%d, rows=%r)" % (self.lam, self.n, self.rows)


def enumerate_ball_systems(lam, n: int):
    """All prod_r C(n, lambda'_r) ball systems, in lexicographic row order."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise ShapeTooWide("%d parts on %d columns" % (len(lam), n))
    widths = conjugate(lam)
    from itertools import combinations

    pools = [list(combinations(range(1, n + 1), w)) for w in widths]
    for rows in product(*pools):
        yield BallSystem(lam, n, rows)


@dataclass(frozen=True)
class PairingStep:
    """One strand-drawing step: departure ball (row, dep_col) pairing to
    (row-1, arr_col)."""

    row: int
    dep_col: int
    arr_col: int
    label: int
    trivial: bool
    wrap: int
    skip: int
    free: int

    @property
    def leg(self) -> int:
        return self.label - self.row

    def weight(self) -> QTRational:
        if self.trivial:
            return QTRational.one()
        num = QTPoly.term(1, self.wrap * (self.leg + 1), self.skip) * (
            QTPoly.one() - QTPoly.term(1, 0, 1)
        )
        return QTRational(num, [((self.leg + 1, self.free), 1)])


class MultilineQueue:
    """A pairing on a ball system, with derived strand labels.

    ``match`` maps each departure ball (r, col) with r >= 2 to the column of
    its arrival ball in row r-1.  Construction validates injectivity per row
    and the two vertical-adjacency label constraints.
    """

    __slots__ = ("base", "match", "labels")

    def __init__(self, base: BallSystem, match: dict):
        labels = _derive_labels(base, match)
        if labels is None:
            raise ValueError("matching violates the pairing constraints")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "match", dict(match))
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("MultilineQueue is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MultilineQueue)
            and self.base == other.base
            and self.match == other.match
        )

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.match.items()))))

    def __repr__(self):
        return "MultilineQueue(%r, match=%r)" % (self.base, self.match)

    # -- projections -------------------------------------------------------

    def proj(self) -> tuple:
        """Bottom-row labels with vacancies read as 0."""
        out = [0] * self.base.n
        for c in self.base.rows[0]:
            out[c - 1] = self.labels[(1, c)]
        return tuple(out)

    def content(self) -> tuple:
        """Ball count per column."""
        out = [0] * self.base.n
        for row in self.base.rows:
            for c in row:
                out[c - 1] += 1
        return tuple(out)

    # -- pairing order and weight -------------------------------------------

    def departure_balls(self):
        """Departure balls in geometric reading order: rows top to bottom,
        columns left to right."""
        balls = []
        for r in range(len(self.base.rows), 1, -1):
            for c in self.base.rows[r - 1]:
                balls.append((r, c))
        return balls

    def is_trivial(self, ball) -> bool:
        r, c = ball
        return self.match[ball] == c

    def canonical_order(self):
        """Departure balls sorted by row (top first), then label (largest
        first), trivial pairings leading their class, ties left to right."""
        return sorted(
            self.departure_balls(),
            key=lambda ball: (
                -ball[0],
                -self.labels[ball],
                not self.is_trivial(ball),
                ball[1],
            ),
        )

    def order_classes(self):
        """Blocks of departure balls sharing (row, label, triviality), in
        canonical block order; any order permuting only within blocks is an
        admissible pairing order."""
        blocks = []
        for ball in self.canonical_order():
            key = (ball[0], self.labels[ball], self.is_trivial(ball))
            if blocks and blocks[-1][0] == key:
                blocks[-1][1].append(ball)
            else:
                blocks.append((key, [ball]))
        return [tuple(balls) for _, balls in blocks]

    def pairing_steps(self, order=None):
        """PairingStep records for a pairing order (canonical by default)."""
        if order is None:
            order = self.canonical_order()
        dep_time = {ball: k + 1 for k, ball in enumerate(order)}
        arr_time = {}
        for ball, when in dep_time.items():
            arr_time[(ball[0] - 1, self.match[ball])] = when
        n = self.base.n
        steps = []
        for ball in order:
            r, i = ball
            j = self.match[ball]
            when = dep_time[ball]
            label = self.labels[ball]
            trivial = i == j
            wrap = 1 if i > j else 0
            skip = 0
            if not trivial:
                k = i % n + 1
                while k != j:
                    if (
                        k in self.base.rows[r - 2]
                        and arr_time.get((r - 1, k), _INF) > when
                    ):
                        skip += 1
                    k = k % n + 1
            free = sum(
                1
                for c in self.base.rows[r - 2]
                if arr_time.get((r - 1, c), _INF) >= when
            )
            steps.append(
                PairingStep(r, i, j, label, trivial, wrap, skip, free)
            )
        return steps

    def dep_list(self, order=None) -> tuple:
        """Departure times read over departure balls in geometric order."""
        if order is None:
            order = self.canonical_order()
        dep_time = {ball: k + 1 for k, ball in enumerate(order)}
        return tuple(dep_time[ball] for ball in self.departure_balls())

    def weight(self, order=None) -> QTRational:
        w = QTRational.one()
        for step in self.pairing_steps(order):
            w = w * step.weight()
        return w

    def maj(self) -> int:
        return sum(
            step.wrap * (step.leg + 1) for step in self.pairing_steps()
        )

    def skip_total(self) -> int:
        return sum(
            step.skip for step in self.pairing_steps() if not step.trivial
        )

    # -- queue-tableau map ---------------------------------------------------

    def strands(self):
        """Column-index chains of each strand, bottom to top, ordered by
        decreasing length with ties by increasing bottom column."""
        arrived_by = {
            (ball[0] - 1, col): ball for ball, col in self.match.items()
        }
        chains = []
        for c in self.base.rows[0]:
            chain = [c]
            cur = (1, c)
            while cur in arrived_by:
                cur = arrived_by[cur]
                chain.append(cur[1])
            chains.append(tuple(chain))
        chains.sort(key=lambda ch: (-len(ch), ch[0]))
        return chains

    def queue_tableau(self) -> Filling:
        """Each strand of length ell fills a height-ell column with the
        column indices of its balls, bottom to top; equal heights are ordered
        by increasing bottom entry."""
        return Filling.from_columns(self.base.lam, self.strands(), self.base.n)

    def to_json_obj(self):
        return {
            "lambda": list(self.base.lam),
            "n": self.base.n,
            "rows": [list(row) for row in self.base.rows],
            "match": [
                [r, i, self.match[(r, i)]]
                for r, i in sorted(self.match)
            ],
        }


def _derive_labels(base: BallSystem, match: dict):
    """Strand labels from a row-injective matching, or None when the trivial
    pairing rule or the vertical monotonicity rule fails."""
    rows = base.rows
    top = len(rows)
    expected = {
        (r, c) for r in range(2, top + 1) for c in rows[r - 1]
    }
    if set(match) != expected:
        raise ValueError("matching keys must be the balls of rows 2..top")
    labels = {}
    for c in rows[top - 1]:
        labels[(top, c)] = top
    for r in range(top - 1, 0, -1):
        arrivals = {}
        for c in rows[r]:
            dest = match[(r + 1, c)]
            if dest not in rows[r - 1]:
                raise ValueError("arrival (%d, %d) is not a ball" % (r, dest))
            if dest in arrivals:
                return None  # not injective
            arrivals[dest] = labels[(r + 1, c)]
        for c in rows[r - 1]:
            labels[(r, c)] = arrivals.get(c, r)
    for r in range(2, top + 1):
        for c in rows[r - 1]:
            if c not in rows[r - 2]:
                continue
            upper = labels[(r, c)]
            lower = labels[(r - 1, c)]
            if upper == lower:
                if match[(r, c)] != c:
                    return None
            elif upper > lower:
                return None
    return labels


def enumerate_mlqs(base: BallSystem):
    """All multiline queues over one ball system: the row-wise injective
    matchings that survive the label constraints, in a fixed order."""
    rows = base.rows
    top = len(rows)
    if top <= 1:
        yield MultilineQueue(base, {})
        return
    pools = []
    keys = []
    for r in range(2, top + 1):
        departures = rows[r - 1]
        arrivals = rows[r - 2]
        keys.append([(r, c) for c in departures])
        pools.append(list(permutations(arrivals, len(departures))))
    for choice in product(*pools):
        match = {}
        for balls, arrival_cols in zip(keys, choice):
            for ball, col in zip(balls, arrival_cols):
                match[ball] = col
        labels = _derive_labels(base, match)
        if labels is not None:
            yield MultilineQueue(base, match)


def enumerate_all_mlqs(lam, n: int):
    """All multiline queues of the given size."""
    for base in enumerate_ball_systems(lam, n):
        yield from enumerate_mlqs(base)


def admissible_orders(mlq: MultilineQueue):
    """Every pairing order compatible with the row / label / triviality
    rules: the canonical block sequence with free permutation inside each
    block."""
    blocks = mlq.order_classes()
    pools = [list(permutations(block)) for block in blocks]
    for choice in product(*pools):
        order = []
        for block in choice:
            order.extend(block)
        yield order
