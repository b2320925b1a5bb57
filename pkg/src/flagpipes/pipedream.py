"""Pipe dreams on a k x n grid: construction, tracing, and rotation.

A (partial) pipe dream is a grid of six tile kinds, one row per chosen pivot
column.  Rows are numbered 1..k from the top, columns 1..n from the left, and
``pivots[i-1]`` is the column of row i's pivot elbow.  Tiles:

    "P"  pivot elbow   quarter arc, top edge -> right edge
    "X"  cross         two pipes, top->bottom and left->right
    "E"  elbow         two arcs, top->right and left->bottom
    "H"  horizontal    one pipe, left->right
    "V"  vertical      one pipe, top->bottom
    "."  empty         no pipe

Which kind may appear where is forced by the pivots (the "structural" tiles),
except on the Rothe boxes — cells right of their row's pivot and above their
column's pivot (or in a pivot-free column) — which carry either a cross or an
elbow.  Pipes enter at the top edge of every column, numbered by column, only
ever move down or right, and leave through the right or bottom edge.

A dream is a flag positroid pipe dream (FPP) when it avoids the blocking
pattern: a cross at (i, j), an elbow or pivot elbow below it at (r, j), an
elbow to its right in row i, such that the pipe passing horizontally through
the cross exits at a row >= r (bottom exits count as below every row).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations as _raw_permutations, product
from typing import Iterator, Mapping

from .config import current_limits
from .exceptions import (
    DomainError,
    GuardExceededError,
    MalformedDreamError,
    NotComparableError,
    SizeMismatchError,
)
from .perm import (
    Box,
    Permutation,
    Word,
    all_permutations,
    ascents,
    bruhat_leq,
    inverse,
    validate_permutation,
)

__all__ = [
    "PIVOT",
    "CROSS",
    "ELBOW",
    "HLINE",
    "VLINE",
    "EMPTY",
    "TILES",
    "Tile",
    "PipeDream",
    "LeDream",
    "PipeTrace",
    "dream_from_fill",
    "construct_fpp",
    "exit_permutation",
    "trace_pipes",
    "right_exit_labels",
    "bottom_exit_labels",
    "is_gamma_free",
    "is_fpp",
    "box_order",
    "word_x_of_boxes",
    "word_y_of_crosses",
    "cross_positions",
    "elbow_count",
    "restrict",
    "trivial_completion",
    "rotate_le",
    "unrotate_le",
    "enumerate_fpps",
    "enumerate_partial_fpps",
    "enumerate_le_dreams",
]

PIVOT = "P"
CROSS = "X"
ELBOW = "E"
HLINE = "H"
VLINE = "V"
EMPTY = "."
TILES = PIVOT + CROSS + ELBOW + HLINE + VLINE + EMPTY

Tile = str  # one of TILES


def _structural_tile(pivots: tuple[int, ...], i: int, j: int) -> Tile | None:
    """The forced tile at (i, j), or None when (i, j) is a Rothe box."""
    ui = pivots[i - 1]
    if j == ui:
        return PIVOT
    try:
        pivot_row: int | None = pivots.index(j) + 1
    except ValueError:
        pivot_row = None
    below_or_absent = pivot_row is None or pivot_row > i
    if j > ui:
        return None if below_or_absent else HLINE
    return VLINE if below_or_absent else EMPTY


@dataclass(frozen=True)
class PipeDream:
    """A structurally validated tile grid.

    ``grid`` holds one string of tile letters per row.  Construction checks
    every cell against the pivot layout; Rothe boxes must hold "X" or "E".
    Gamma-freeness is *not* enforced here — see :func:`is_fpp`.

    >>> d = construct_fpp((1, 2, 3), (3, 1, 2))
    >>> d.grid
    ('PEE', '.PX', '..P')
    >>> d.tile(2, 3)
    'X'
    """

    cols: int
    pivots: tuple[int, ...]
    grid: tuple[str, ...]

    def __post_init__(self) -> None:
        n, k = self.cols, len(self.pivots)
        if len(self.grid) != k:
            raise MalformedDreamError("one grid row per pivot required")
        if k > n:
            raise MalformedDreamError(f"more rows ({k}) than columns ({n})")
        if len(set(self.pivots)) != k or not all(1 <= c <= n for c in self.pivots):
            raise MalformedDreamError(f"pivots must be distinct in 1..{n}: "
                                      f"{self.pivots!r}")
        for i in range(1, k + 1):
            row = self.grid[i - 1]
            if len(row) != n:
                raise MalformedDreamError(f"row {i} has length {len(row)}, "
                                          f"expected {n}")
            for j in range(1, n + 1):
                actual = row[j - 1]
                if actual not in TILES:
                    raise MalformedDreamError(f"unknown tile {actual!r} at "
                                              f"({i}, {j})")
                forced = _structural_tile(self.pivots, i, j)
                if forced is None:
                    if actual not in (CROSS, ELBOW):
                        raise MalformedDreamError(
                            f"box ({i}, {j}) must be cross or elbow, "
                            f"got {actual!r}")
                elif actual != forced:
                    raise MalformedDreamError(
                        f"tile at ({i}, {j}) must be {forced!r}, got {actual!r}")

    @property
    def rows(self) -> int:
        return len(self.pivots)

    @property
    def is_complete(self) -> bool:
        return self.rows == self.cols

    def tile(self, i: int, j: int) -> Tile:
        """Tile at row i, column j (both 1-indexed)."""
        return self.grid[i - 1][j - 1]

    def box_columns(self, i: int) -> tuple[int, ...]:
        """Columns of row i's Rothe boxes, ascending."""
        row = self.grid[i - 1]
        return tuple(j for j in range(1, self.cols + 1)
                     if row[j - 1] in (CROSS, ELBOW))

    def boxes(self) -> Iterator[Box]:
        """All Rothe boxes in reading order (top to bottom, left to right)."""
        for i in range(1, self.rows + 1):
            for j in self.box_columns(i):
                yield (i, j)


def dream_from_fill(n: int, pivots: tuple[int, ...],
                    fill: Mapping[Box, Tile]) -> PipeDream:
    """Assemble a dream from its pivots and a cross/elbow value per box.

    >>> dream_from_fill(3, (1,), {(1, 2): "E", (1, 3): "X"}).grid
    ('PEX',)
    """
    pivots = tuple(pivots)
    k = len(pivots)
    rows = []
    used = 0
    for i in range(1, k + 1):
        chars = []
        for j in range(1, n + 1):
            forced = _structural_tile(pivots, i, j)
            if forced is not None:
                chars.append(forced)
            else:
                try:
                    chars.append(fill[(i, j)])
                except KeyError:
                    raise MalformedDreamError(f"no fill for box ({i}, {j})")
                used += 1
        rows.append("".join(chars))
    if used != len(fill):
        raise MalformedDreamError("fill mentions cells that are not boxes")
    return PipeDream(cols=n, pivots=pivots, grid=tuple(rows))


def construct_fpp(u: Permutation, v: Permutation) -> PipeDream:
    """The canonical FPP of a Bruhat interval u <= v.

    Rows are filled bottom to top, right to left.  The front ``col[j]`` holds
    the pipe label currently at the working edge of column j; the row's own
    pipe starts as v(i).  A box becomes a cross exactly when its two labels
    (x, col[j]) satisfy x < col[j] with x before col[j] in v; otherwise it is
    an elbow and the labels swap.  The number of elbows is length(v) -
    length(u).

    >>> construct_fpp((1, 2, 3), (3, 1, 2)).grid
    ('PEE', '.PX', '..P')
    >>> construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)).grid
    ('VPXE', 'V.VP', 'PHEH', '..PH')
    """
    u = validate_permutation(u)
    v = validate_permutation(v)
    if len(u) != len(v):
        raise SizeMismatchError(f"construct_fpp: sizes {len(u)} != {len(v)}")
    if not bruhat_leq(u, v):
        raise NotComparableError(f"{u!r} is not below {v!r} in Bruhat order")
    n = len(u)
    vpos = inverse(v)
    boxes_by_row: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(u[i - 1] + 1, n + 1):
            if _structural_tile(u, i, j) is None:
                boxes_by_row[i].append(j)
    fill: dict[Box, Tile] = {}
    col = [0] * (n + 1)
    for i in range(n, 0, -1):
        x = v[i - 1]
        for j in sorted(boxes_by_row[i], reverse=True):
            c = col[j]
            if x < c and vpos[x - 1] < vpos[c - 1]:
                fill[(i, j)] = CROSS
            else:
                fill[(i, j)] = ELBOW
                x, col[j] = c, x
        col[u[i - 1]] = x
    if col[1:] != list(range(1, n + 1)):
        raise MalformedDreamError("internal: construction front corrupted")
    return dream_from_fill(n, u, fill)


@dataclass(frozen=True)
class PipeTrace:
    """The journey of one pipe through a dream.

    ``cells`` records (row, col, heading) at each entered tile, heading being
    the direction of travel on entry ("down" or "right").
    ``horizontal_crosses`` are the cross tiles passed left-to-right.
    ``exit_side`` is "right" (then ``exit_index`` is a row) or "bottom"
    (then it is a column).
    """

    label: int
    cells: tuple[tuple[int, int, str], ...]
    horizontal_crosses: tuple[Box, ...]
    exit_side: str
    exit_index: int


def _trace_one(D: PipeDream, start_col: int) -> PipeTrace:
    k, n = D.rows, D.cols
    row, col, heading = 1, start_col, "down"
    cells: list[tuple[int, int, str]] = []
    horiz: list[Box] = []
    while row <= k and col <= n:
        t = D.tile(row, col)
        cells.append((row, col, heading))
        if heading == "down":
            if t in (VLINE, CROSS):
                row += 1
            elif t in (ELBOW, PIVOT):
                heading = "right"
                col += 1
            else:
                raise MalformedDreamError(
                    f"pipe {start_col} entered {t!r} at ({row}, {col}) from the top")
        else:
            if t == CROSS:
                horiz.append((row, col))
                col += 1
            elif t == HLINE:
                col += 1
            elif t == ELBOW:
                heading = "down"
                row += 1
            else:
                raise MalformedDreamError(
                    f"pipe {start_col} entered {t!r} at ({row}, {col}) from the left")
    if col > n:
        side, index = "right", row
    else:
        side, index = "bottom", col
    return PipeTrace(label=start_col, cells=tuple(cells),
                     horizontal_crosses=tuple(horiz),
                     exit_side=side, exit_index=index)


def trace_pipes(D: PipeDream) -> tuple[PipeTrace, ...]:
    """Trace every pipe; entry r is the pipe entering the top of column r+1.

    >>> [t.exit_side for t in trace_pipes(construct_fpp((1, 2, 3), (3, 1, 2)))]
    ['right', 'right', 'right']
    """
    return tuple(_trace_one(D, j) for j in range(1, D.cols + 1))


def right_exit_labels(D: PipeDream) -> dict[int, int]:
    """Map each row to the label of the pipe leaving through its right edge.

    >>> right_exit_labels(construct_fpp((1, 2, 3), (3, 1, 2)))
    {2: 1, 3: 2, 1: 3}
    """
    out: dict[int, int] = {}
    for t in trace_pipes(D):
        if t.exit_side == "right":
            out[t.exit_index] = t.label
    return out


def bottom_exit_labels(D: PipeDream) -> dict[int, int]:
    """Map each bottom-exit column to the label of the pipe leaving there.

    >>> bottom_exit_labels(restrict(construct_fpp((1, 2, 3), (3, 1, 2)), 1))
    {2: 1, 3: 2}
    """
    out: dict[int, int] = {}
    for t in trace_pipes(D):
        if t.exit_side == "bottom":
            out[t.exit_index] = t.label
    return out


def exit_permutation(D: PipeDream) -> Permutation:
    """The permutation v with v(i) = label of the pipe exiting right at row i.

    Only complete dreams (rows == cols) have one; partial dreams raise.

    >>> exit_permutation(construct_fpp((1, 2, 3), (3, 1, 2)))
    (3, 1, 2)
    """
    if not D.is_complete:
        raise DomainError("exit_permutation needs a complete dream; "
                          "use right_exit_labels for partial ones")
    rights = right_exit_labels(D)
    return tuple(rights[i] for i in range(1, D.rows + 1))


def is_gamma_free(D: PipeDream) -> bool:
    """Blocking-pattern freeness via the subarea criterion.

    For each pipe, look below every cross it passes through horizontally: an
    elbow or pivot elbow in that column, strictly below the cross and weakly
    above the pipe's exit row (bottom exits bound nothing), is a violation.

    >>> is_gamma_free(construct_fpp((1, 2, 3), (3, 1, 2)))
    True
    >>> is_gamma_free(dream_from_fill(3, (1, 2, 3),
    ...     {(1, 2): "X", (1, 3): "E", (2, 3): "E"}))
    False
    """
    k = D.rows
    for t in trace_pipes(D):
        cap = k if t.exit_side == "bottom" else min(t.exit_index, k)
        for (i, j) in t.horizontal_crosses:
            for r in range(i + 1, cap + 1):
                if D.tile(r, j) in (ELBOW, PIVOT):
                    return False
    return True


def _gamma_free_by_pattern_search(D: PipeDream) -> bool:
    """Literal hunt for the blocking pattern; independent cross-check route."""
    k, n = D.rows, D.cols
    cross_pipe: dict[Box, PipeTrace] = {}
    for t in trace_pipes(D):
        for cell in t.horizontal_crosses:
            cross_pipe[cell] = t
    for (i, j), t in cross_pipe.items():
        # A pivot elbow right of a cross in the same row is impossible
        # (the row pivot sits left of every box), so only "E" can occur.
        if not any(D.tile(i, jp) == ELBOW for jp in range(j + 1, n + 1)):
            continue
        cap = k if t.exit_side == "bottom" else min(t.exit_index, k)
        if any(D.tile(r, j) in (ELBOW, PIVOT) for r in range(i + 1, cap + 1)):
            return False
    return True


def is_fpp(D: PipeDream) -> bool:
    """True iff the (structurally valid) dream avoids the blocking pattern.

    >>> is_fpp(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)))
    True
    """
    return is_gamma_free(D)


def box_order(D: PipeDream) -> tuple[tuple[Box, int], ...]:
    """Boxes read bottom-to-top, right-to-left, with their word letters.

    The h-th box from the right in row i carries the letter i + h - 1.

    >>> box_order(construct_fpp((1, 2, 3), (3, 1, 2)))
    (((2, 3), 2), ((1, 3), 1), ((1, 2), 2))
    """
    out: list[tuple[Box, int]] = []
    for i in range(D.rows, 0, -1):
        cols = sorted(D.box_columns(i), reverse=True)
        for h, j in enumerate(cols, start=1):
            out.append(((i, j), i + h - 1))
    return tuple(out)


def word_x_of_boxes(D: PipeDream) -> Word:
    """All box letters in reading order; equals word_x_of_rothe(pivots) when
    the dream is complete.

    >>> word_x_of_boxes(construct_fpp((1, 2, 3), (3, 1, 2)))
    (2, 1, 2)
    """
    return tuple(letter for _, letter in box_order(D))


def word_y_of_crosses(D: PipeDream) -> Word:
    """The subword of box letters supported on the cross tiles.

    >>> word_y_of_crosses(construct_fpp((1, 2, 3), (3, 1, 2)))
    (2,)
    """
    return tuple(letter for (box, letter) in box_order(D)
                 if D.tile(*box) == CROSS)


def cross_positions(D: PipeDream) -> tuple[int, ...]:
    """1-based positions of the crosses within the box reading order.

    >>> cross_positions(construct_fpp((1, 2, 3), (3, 1, 2)))
    (1,)
    """
    return tuple(pos for pos, (box, _) in enumerate(box_order(D), start=1)
                 if D.tile(*box) == CROSS)


def elbow_count(D: PipeDream) -> int:
    """Number of elbow tiles (pivot elbows not counted).

    >>> elbow_count(construct_fpp((1, 2, 3), (3, 1, 2)))
    2
    """
    return sum(row.count(ELBOW) for row in D.grid)


def restrict(D: PipeDream, k: int) -> PipeDream:
    """The partial dream of the first k rows (gamma-freeness is inherited).

    >>> restrict(construct_fpp((1, 2, 3), (3, 1, 2)), 1).grid
    ('PEE',)
    """
    if not 0 <= k <= D.rows:
        raise DomainError(f"cannot restrict {D.rows} rows to {k}")
    return PipeDream(cols=D.cols, pivots=D.pivots[:k], grid=D.grid[:k])


def trivial_completion(D: PipeDream) -> PipeDream:
    """Extend to a complete dream: remaining pivots descend, new boxes cross.

    >>> trivial_completion(restrict(construct_fpp((1, 2, 3), (3, 1, 2)), 1)).pivots
    (1, 3, 2)
    """
    if D.is_complete:
        return D
    n = D.cols
    rest = sorted(set(range(1, n + 1)) - set(D.pivots), reverse=True)
    pivots = D.pivots + tuple(rest)
    fill: dict[Box, Tile] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if _structural_tile(pivots, i, j) is None:
                fill[(i, j)] = D.tile(i, j) if i <= D.rows else CROSS
    return dream_from_fill(n, pivots, fill)


@dataclass(frozen=True)
class LeDream:
    """A rotated dream: ragged rows of crosses/elbows in partition shape.

    Row r of the rotation lists the boxes of dream row k+1-r from right to
    left, so the shape is a partition (weakly decreasing row lengths) exactly
    because the pivots decrease.  ``cols`` is the ambient ground-set size and
    ``pivots`` the decreasing pivot columns; both are kept so the rotation
    inverts exactly.
    """

    cols: int
    pivots: tuple[int, ...]
    rows: tuple[str, ...]

    def __post_init__(self) -> None:
        k, n = len(self.pivots), self.cols
        if any(a <= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise MalformedDreamError(f"pivots must strictly decrease: "
                                      f"{self.pivots!r}")
        if len(self.rows) != k:
            raise MalformedDreamError("one rotated row per pivot required")
        for r in range(1, k + 1):
            expect = n - self.pivots[k - r] - (k - r)
            row = self.rows[r - 1]
            if len(row) != expect:
                raise MalformedDreamError(
                    f"rotated row {r} has length {len(row)}, expected {expect}")
            if any(c not in (CROSS, ELBOW) for c in row):
                raise MalformedDreamError(f"rotated rows hold only cross/elbow "
                                          f"tiles: {row!r}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)


def rotate_le(D: PipeDream) -> LeDream:
    """Rotate a decreasing-pivot dream into partition shape.

    Accepts either a partial dream whose pivots strictly decrease, or a
    complete dream whose pivot permutation has at most one ascent (then the
    rows up to the ascent are rotated; the rest is the trivial completion).

    >>> rotate_le(construct_fpp((2, 1, 3), (3, 2, 1))).rows
    ('E', 'E')
    """
    if D.is_complete:
        asc = ascents(D.pivots)
        if len(asc) > 1:
            raise DomainError(f"complete dream pivots have {len(asc)} ascents; "
                              "at most one allowed")
        k = asc[0] if asc else D.rows
        D = restrict(D, k)
    if any(a <= b for a, b in zip(D.pivots, D.pivots[1:])):
        raise DomainError(f"pivots must strictly decrease: {D.pivots!r}")
    k = D.rows
    rows = []
    for r in range(1, k + 1):
        i = k + 1 - r
        cols = sorted(D.box_columns(i), reverse=True)
        rows.append("".join(D.tile(i, j) for j in cols))
    return LeDream(cols=D.cols, pivots=D.pivots, rows=tuple(rows))


def unrotate_le(le: LeDream) -> PipeDream:
    """Invert :func:`rotate_le`, returning the trivially completed dream.

    >>> d = construct_fpp((2, 1, 3), (3, 2, 1))
    >>> unrotate_le(rotate_le(d)) == d
    True
    """
    k, n = len(le.pivots), le.cols
    fill: dict[Box, Tile] = {}
    for r in range(1, k + 1):
        i = k + 1 - r
        row_i = r  # rotated row r came from dream row k+1-r
        boxes = sorted(
            (j for j in range(le.pivots[i - 1] + 1, n + 1)
             if _structural_tile(le.pivots, i, j) is None),
            reverse=True)
        for c, j in enumerate(boxes, start=1):
            fill[(i, j)] = le.rows[row_i - 1][c - 1]
    partial = dream_from_fill(n, le.pivots, fill)
    return trivial_completion(partial)


def enumerate_fpps(n: int) -> Iterator[PipeDream]:
    """One FPP per Bruhat pair u <= v, pairs in lexicographic (u, v) order.

    Guarded to n <= 6 (override with POSITROID_MAX_N).

    >>> sum(1 for _ in enumerate_fpps(3))
    19
    """
    cap = current_limits().enumerate_max_n
    if n > cap:
        raise GuardExceededError(f"enumerate_fpps guarded to n <= {cap}, got {n}")
    for u in all_permutations(n):
        for v in all_permutations(n):
            if bruhat_leq(u, v):
                yield construct_fpp(u, v)


def _fillings(n: int, pivots: tuple[int, ...]) -> Iterator[PipeDream]:
    boxes = [(i, j)
             for i in range(1, len(pivots) + 1)
             for j in range(1, n + 1)
             if _structural_tile(pivots, i, j) is None]
    for choice in product((CROSS, ELBOW), repeat=len(boxes)):
        yield dream_from_fill(n, pivots, dict(zip(boxes, choice)))


def enumerate_partial_fpps(n: int, k: int) -> Iterator[PipeDream]:
    """All gamma-free k-row dreams on n columns, any pivot order.

    Guarded to n <= 6 (override with POSITROID_MAX_N).

    >>> sum(1 for _ in enumerate_partial_fpps(3, 2))
    19
    """
    cap = current_limits().enumerate_max_n
    if n > cap:
        raise GuardExceededError(f"enumerate_partial_fpps guarded to n <= {cap},"
                                 f" got {n}")
    for pivots in _raw_permutations(range(1, n + 1), k):
        for D in _fillings(n, pivots):
            if is_gamma_free(D):
                yield D


def enumerate_le_dreams(n: int, k: int) -> Iterator[PipeDream]:
    """All gamma-free k-row dreams with strictly decreasing pivots.

    >>> sum(1 for _ in enumerate_le_dreams(3, 1))
    7
    """
    cap = current_limits().enumerate_max_n
    if n > cap:
        raise GuardExceededError(f"enumerate_le_dreams guarded to n <= {cap},"
                                 f" got {n}")
    for chosen in combinations(range(1, n + 1), k):
        pivots = tuple(sorted(chosen, reverse=True))
        for D in _fillings(n, pivots):
            if is_gamma_free(D):
                yield D
