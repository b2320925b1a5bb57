"""Exact rational matrices: flag minors, sign rule, zero-column embedding.

Everything here is exact Fraction arithmetic — nonnegativity of a minor is
a sign question, so floating point is refused at the door.  Determinants
use fraction-free (Bareiss) elimination after clearing denominators.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .config import current_limits
from .exceptions import (
    DomainError,
    GuardExceededError,
    NotGeneralizedPermutationError,
    RankDeficientError,
    SizeMismatchError,
)
from .pathgraph import BasisSet, basis_set

__all__ = [
    "RationalMatrix",
    "rational_matrix",
    "matrix_from_json",
    "matrix_to_json",
    "matrix_from_csv",
    "det",
    "flag_minors",
    "pivot_columns",
    "pivot_signs",
    "nep_values",
    "check_sign_rule",
    "embed_append",
    "matroid_of_matrix",
    "is_lower_reduced",
    "is_reverse_echelon",
    "is_complete_nonneg_representation",
]


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError("floating point entries are not allowed; "
                          "pass ints, Fractions, or strings like '3/2'")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise DomainError(f"cannot read {value!r} as an exact rational")


@dataclass(frozen=True)
class RationalMatrix:
    """A k-by-n grid of exact rationals; with ``offset_zero`` the columns
    are labeled 0..n-1 instead of 1..n (ground sets through 0).

    >>> rational_matrix([[1, 0], [0, "1/2"]]).entry(2, 2)
    Fraction(1, 2)
    """

    rows: tuple[tuple[Fraction, ...], ...]
    offset_zero: bool = False

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise DomainError("matrix dimensions must be positive")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise SizeMismatchError("ragged matrix rows")
            for x in row:
                if not isinstance(x, Fraction):
                    raise DomainError("entries must be Fractions")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def column_labels(self) -> tuple[int, ...]:
        lo = 0 if self.offset_zero else 1
        return tuple(range(lo, lo + self.n))

    def _col_index(self, label: int) -> int:
        idx = label if self.offset_zero else label - 1
        if not 0 <= idx < self.n:
            raise DomainError(f"no column labeled {label}")
        return idx

    def entry(self, i: int, label: int) -> Fraction:
        return self.rows[i - 1][self._col_index(label)]

    def submatrix(self, row_count: int, labels) -> "RationalMatrix":
        """First ``row_count`` rows restricted to the labeled columns."""
        cols = [self._col_index(l) for l in labels]
        return RationalMatrix(
            rows=tuple(tuple(row[c] for c in cols)
                       for row in self.rows[:row_count]),
            offset_zero=False)


def rational_matrix(rows, offset_zero: bool = False) -> RationalMatrix:
    """Build a matrix from ints, Fractions, or strings such as "-1", "3/2".

    >>> rational_matrix([["-1", "3/2"]]).rows
    ((Fraction(-1, 1), Fraction(3, 2)),)
    """
    return RationalMatrix(
        rows=tuple(tuple(_exact(x) for x in row) for row in rows),
        offset_zero=offset_zero)


def matrix_from_json(data, offset_zero: bool = False) -> RationalMatrix:
    """Array-of-arrays of rational strings or ints.

    >>> matrix_from_json([[0, "1"], ["-2", "1/3"]]).entry(2, 1)
    Fraction(-2, 1)
    """
    return rational_matrix(data, offset_zero=offset_zero)


def matrix_to_json(A: RationalMatrix) -> list[list[str]]:
    """String form that parses back exactly.

    >>> matrix_to_json(rational_matrix([[1, "-1/2"]]))
    [['1', '-1/2']]
    """
    return [[str(x) for x in row] for row in A.rows]


def matrix_from_csv(text: str, offset_zero: bool = False) -> RationalMatrix:
    """One row per line, comma-separated exact rationals.

    >>> matrix_from_csv("1,0\\n-1,3/2").entry(2, 2)
    Fraction(3, 2)
    """
    reader = csv.reader(io.StringIO(text.strip()))
    return rational_matrix([[cell.strip() for cell in row]
                            for row in reader if row],
                           offset_zero=offset_zero)


def det(A: RationalMatrix) -> Fraction:
    """Exact determinant by integer fraction-free elimination.

    >>> det(rational_matrix([[1, 2], [3, 4]]))
    Fraction(-2, 1)
    >>> det(rational_matrix([["1/2", 0], [0, "1/3"]]))
    Fraction(1, 6)
    """
    if A.k != A.n:
        raise SizeMismatchError("determinant needs a square matrix")
    size = A.k
    scale = Fraction(1)
    m: list[list[int]] = []
    for row in A.rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scale /= lcm
        m.append([int(x * lcm) for x in row])
    sign = 1
    prev = 1
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, size):
            for c in range(col + 1, size):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * scale * m[size - 1][size - 1]


def flag_minors(A: RationalMatrix, ranks) -> dict[tuple[int, tuple[int, ...]], Fraction]:
    """Exact minors of the first r rows for each r in ranks, keyed by
    (r, column-label subset).

    >>> mm = flag_minors(rational_matrix([[1, 0], [0, 1]]), (1, 2))
    >>> mm[(1, (1,))], mm[(2, (1, 2))]
    (Fraction(1, 1), Fraction(1, 1))
    """
    ranks = tuple(ranks)
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise DomainError("ranks must increase")
    if ranks and not 1 <= ranks[-1] <= A.k:
        raise DomainError("ranks must lie in 1..k")
    if A.n > current_limits().minors_max_n:
        raise GuardExceededError(
            f"flag minors are capped at {current_limits().minors_max_n} columns")
    out: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for r in ranks:
        for S in combinations(A.column_labels, r):
            out[(r, S)] = det(A.submatrix(r, S))
    return out


def pivot_columns(A: RationalMatrix) -> tuple[int, ...]:
    """Label of the first nonzero entry in each row.

    >>> pivot_columns(rational_matrix([[0, 1], [1, 0]]))
    (2, 1)
    """
    pivots = []
    for i, row in enumerate(A.rows, 1):
        j = next((c for c, x in enumerate(row) if x != 0), None)
        if j is None:
            raise DomainError(f"row {i} is zero and has no pivot")
        pivots.append(A.column_labels[j])
    return tuple(pivots)


def pivot_signs(A: RationalMatrix) -> tuple[int, ...]:
    """+1 or -1 per row, the sign of its pivot entry."""
    return tuple(1 if A.entry(i, u) > 0 else -1
                 for i, u in enumerate(pivot_columns(A), 1))


def nep_values(A: RationalMatrix) -> tuple[int, ...]:
    """Per row, how many earlier pivots sit in strictly larger columns.

    >>> nep_values(rational_matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]]))
    (0, 1, 2)
    """
    u = pivot_columns(A)
    return tuple(sum(1 for j in range(i) if u[j] > u[i])
                 for i in range(len(u)))


def check_sign_rule(A: RationalMatrix) -> bool:
    """For a generalized permutation matrix: do all leading-column minors
    come out nonnegative?  Equivalent to every pivot sign being (-1) to its
    northeast-pivot count; both routes are computed and compared.

    >>> check_sign_rule(rational_matrix([[0, 1], [1, 0]]))
    False
    >>> check_sign_rule(rational_matrix([[0, 1], [-1, 0]]))
    True
    """
    for i, row in enumerate(A.rows, 1):
        if sum(1 for x in row if x != 0) != 1:
            raise NotGeneralizedPermutationError(f"row {i} needs exactly one nonzero")
    for label in A.column_labels:
        if sum(1 for i in range(1, A.k + 1) if A.entry(i, label) != 0) != 1:
            raise NotGeneralizedPermutationError(
                f"column {label} needs exactly one nonzero")
    u = pivot_columns(A)
    rule = all(s == (-1) ** e
               for s, e in zip(pivot_signs(A), nep_values(A)))
    minors = all(det(A.submatrix(i, sorted(u[:i]))) >= 0
                 for i in range(1, A.k + 1))
    assert rule == minors, "sign rule and minor nonnegativity disagree"
    return rule


def embed_append(A: RationalMatrix) -> RationalMatrix:
    """Prepend the column (0, ..., 0, (-1)^k) to a (k+1)-row matrix; the
    result's columns are labeled from 0.  Minors avoiding 0 equal those of
    A; minors through 0 equal the first-k-row minors of A.

    >>> B = embed_append(rational_matrix([[1, 0], [0, 1]]))
    >>> B.rows
    ((Fraction(0, 1), Fraction(1, 1), Fraction(0, 1)), (Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1)))
    """
    k = A.k - 1
    new_col = [Fraction(0)] * k + [Fraction((-1) ** k)]
    return RationalMatrix(
        rows=tuple((c,) + row for c, row in zip(new_col, A.rows)),
        offset_zero=True)


def matroid_of_matrix(A: RationalMatrix, r: int) -> BasisSet:
    """Column sets whose first-r-row minor is nonzero.

    >>> matroid_of_matrix(rational_matrix([[1, 1, 0], [0, 0, 1]]), 2).bases
    ((1, 3), (2, 3))
    """
    if not 1 <= r <= A.k:
        raise DomainError(f"rank {r} out of range for {A.k} rows")
    if A.n > current_limits().minors_max_n:
        raise GuardExceededError(
            f"matroids of matrices are capped at {current_limits().minors_max_n} columns")
    bases = [S for S in combinations(A.column_labels, r)
             if det(A.submatrix(r, S)) != 0]
    if not bases:
        raise RankDeficientError(f"first {r} rows have rank below {r}")
    n = A.n - 1 if A.offset_zero else A.n
    return basis_set(n, bases, offset_zero=A.offset_zero)


def is_lower_reduced(A: RationalMatrix) -> bool:
    """Below every row's pivot entry, only zeros.

    >>> is_lower_reduced(rational_matrix([[0, 1], [1, 0]]))
    True
    >>> is_lower_reduced(rational_matrix([[1, 0], [1, 1]]))
    False
    """
    for i, u in enumerate(pivot_columns(A), 1):
        if any(A.entry(ip, u) != 0 for ip in range(i + 1, A.k + 1)):
            return False
    return True


def is_reverse_echelon(A: RationalMatrix, ranks=None) -> bool:
    """Within each rank block, pivot columns move strictly left going down.

    >>> is_reverse_echelon(rational_matrix([[0, 1], [1, 1]]))
    True
    >>> is_reverse_echelon(rational_matrix([[0, 1], [1, 1]]), ranks=(1, 2))
    True
    """
    ranks = tuple(ranks) if ranks is not None else (A.k,)
    if ranks[-1] != A.k:
        raise DomainError("last rank must equal the row count")
    u = pivot_columns(A)
    lo = 0
    for r in ranks:
        block = u[lo:r]
        if any(a <= b for a, b in zip(block, block[1:])):
            return False
        lo = r
    return True


def is_complete_nonneg_representation(A: RationalMatrix, ranks=None) -> bool:
    """Reduced shape (reverse echelon per rank block, lower reduced) with
    every pivot entry exactly (-1) to its northeast-pivot count.

    >>> M = rational_matrix([[0, 0, 0, 0, 1, 1, 0],
    ...                      [0, 0, -1, -1, 0, 1, 1],
    ...                      [1, 1, 0, 0, 0, 0, 0],
    ...                      [0, 0, 0, 0, 0, 1, 2]])
    >>> is_complete_nonneg_representation(M, ranks=(3, 4))
    True
    """
    try:
        u = pivot_columns(A)
    except DomainError:
        return False
    if not is_reverse_echelon(A, ranks) or not is_lower_reduced(A):
        return False
    return all(A.entry(i, u[i - 1]) == (-1) ** e
               for i, e in enumerate(nep_values(A), 1))
