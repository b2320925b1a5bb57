"""Positroids as decreasing-pivot dreams: quotients, standardization, duality.

A positroid of rank k on [n] is canonically represented by a k-row partial
dream whose pivot columns strictly decrease; identity, equality and hashing
all key on that canonical grid.  ``standardize`` turns any partial dream into
the canonical one without changing its bases, its unblocked columns, its
pivot-column set, or its right-exit pipe set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exceptions import DomainError, SizeMismatchError
from .pathgraph import BasisSet, bases_of, basis_set
from .pipedream import (
    CROSS,
    ELBOW,
    EMPTY,
    HLINE,
    PIVOT,
    VLINE,
    PipeDream,
    enumerate_le_dreams,
    is_gamma_free,
    rotate_le,
    trace_pipes,
)

__all__ = [
    "Positroid",
    "is_matroid",
    "dual",
    "subset_rank",
    "closure",
    "is_quotient",
    "unblocked_columns",
    "standardize_step",
    "standardize",
    "is_lpm",
    "enumerate_positroids",
]


def is_matroid(B: BasisSet) -> bool:
    """Basis exchange: for b in B1-B2 some c in B2-B1 re-completes B1.

    >>> is_matroid(basis_set(3, [{1, 2}, {2, 3}]))
    True
    >>> is_matroid(basis_set(4, [{1, 2}, {3, 4}]))
    False
    """
    members = set(B.bases)
    for b1 in members:
        s1 = set(b1)
        for b2 in members:
            s2 = set(b2)
            for x in s1 - s2:
                if not any(tuple(sorted((s1 - {x}) | {y})) in members
                           for y in s2 - s1):
                    return False
    return True


def dual(B: BasisSet) -> BasisSet:
    """Complement every basis within its ground set.

    >>> dual(basis_set(4, [{2, 4}])).bases
    ((1, 3),)
    """
    ground = set(B.ground)
    return basis_set(B.n, (ground - set(b) for b in B.bases),
                     offset_zero=B.offset_zero)


def subset_rank(B: BasisSet, S) -> int:
    """Rank of a subset of the ground set: the largest overlap with a basis.

    >>> subset_rank(basis_set(3, [{1, 2}, {2, 3}]), {1, 3})
    1
    """
    S = set(S)
    return max(len(S.intersection(b)) for b in B.bases)


def closure(B: BasisSet, S) -> frozenset:
    """All ground elements whose addition leaves the rank of S unchanged.

    >>> sorted(closure(basis_set(3, [{1}, {3}]), {1}))
    [1, 2, 3]
    """
    S = set(S)
    r = subset_rank(B, S)
    return frozenset(e for e in B.ground
                     if e in S or subset_rank(B, S | {e}) == r)


def is_quotient(M: BasisSet, Mp: BasisSet) -> bool:
    """Is M a quotient of Mp?  Tested as closure domination: on every subset
    the closure in Mp must sit inside the closure in M.  This implies (and
    is stronger than) the containment facts that every basis of M lies in a
    basis of Mp and every basis of Mp contains a basis of M.

    >>> is_quotient(basis_set(3, [{1}, {3}]), basis_set(3, [{1, 2}, {2, 3}]))
    True
    >>> is_quotient(basis_set(3, [{2}, {3}]), basis_set(3, [{1, 3}, {2, 3}]))
    False
    """
    if (M.n, M.offset_zero) != (Mp.n, Mp.offset_zero):
        raise SizeMismatchError("is_quotient: ground sets differ")
    ground = M.ground
    for bits in range(2 ** len(ground)):
        S = {e for i, e in enumerate(ground) if bits >> i & 1}
        if not closure(Mp, S) <= closure(M, S):
            return False
    return True


def unblocked_columns(D: PipeDream) -> tuple[int, ...]:
    """Columns that may receive the pivot or an elbow of an appended row.

    A column is blocked when it is a pivot column or contains a cross whose
    horizontal pipe exits through the bottom boundary.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> d = restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2)
    >>> unblocked_columns(d)
    (1, 3)
    """
    blocked = set(D.pivots)
    for t in trace_pipes(D):
        if t.exit_side == "bottom":
            blocked.update(j for (_, j) in t.horizontal_crosses)
    return tuple(sorted(set(range(1, D.cols + 1)) - blocked))


def _unblocked_le(D: PipeDream) -> tuple[int, ...]:
    """Le-form route, valid when pivots strictly decrease: a non-pivot column
    is blocked iff it contains a cross with an elbow somewhere to its right
    in the same row."""
    if any(a <= b for a, b in zip(D.pivots, D.pivots[1:])):
        raise DomainError("Le-form blocking needs strictly decreasing pivots")
    n = D.cols
    blocked = set(D.pivots)
    for i in range(1, D.rows + 1):
        row = D.grid[i - 1]
        for j in range(1, n + 1):
            if row[j - 1] == CROSS and ELBOW in row[j:]:
                blocked.add(j)
    return tuple(sorted(set(range(1, n + 1)) - blocked))


def standardize_step(D: PipeDream, i: int) -> PipeDream:
    """Exchange pivot rows i and i+1 when their pivots ascend.

    With pivots a = pivots[i-1] < b = pivots[i], the rewrite moves row i+1's
    pivot up to column a and row i's pivot to column b, swaps the tiles
    strictly between the pivot columns, and handles the exchange column j*:
    the first column >= b carrying a cross over an elbow (or over the pivot
    at b itself).  Tiles between b and j* stay put; at j* the top row adopts
    the bottom tile and the bottom row gets an elbow; past j* the rows swap.
    Without an exchange column nothing right of b moves.  Descending pivots
    are a no-op.

    >>> from flagpipes.pipedream import dream_from_fill
    >>> d = dream_from_fill(3, (1, 2), {(1, 2): "X", (1, 3): "X", (2, 3): "X"})
    >>> standardize_step(d, 1).grid
    ('VPX', 'PHX')
    """
    k, n = D.rows, D.cols
    if not 1 <= i <= k - 1:
        raise DomainError(f"row index {i} out of range for {k} rows")
    a, b = D.pivots[i - 1], D.pivots[i]
    if a > b:
        return D
    jstar = None
    for j in range(b, n + 1):
        if D.tile(i, j) == CROSS and D.tile(i + 1, j) in (ELBOW, PIVOT):
            jstar = j
            break
    top, bottom = list(D.grid[i - 1]), list(D.grid[i])
    new_top, new_bottom = top[:], bottom[:]
    new_top[a - 1], new_bottom[a - 1] = VLINE, PIVOT
    for j in range(a + 1, b):
        new_top[j - 1], new_bottom[j - 1] = bottom[j - 1], top[j - 1]
    new_top[b - 1], new_bottom[b - 1] = PIVOT, HLINE
    if jstar is None:
        pass  # nothing right of b moves
    elif jstar == b:
        for j in range(b + 1, n + 1):
            new_top[j - 1], new_bottom[j - 1] = bottom[j - 1], top[j - 1]
    else:
        new_top[jstar - 1], new_bottom[jstar - 1] = bottom[jstar - 1], ELBOW
        for j in range(jstar + 1, n + 1):
            new_top[j - 1], new_bottom[j - 1] = bottom[j - 1], top[j - 1]
    pivots = list(D.pivots)
    pivots[i - 1], pivots[i] = b, a
    grid = list(D.grid)
    grid[i - 1], grid[i] = "".join(new_top), "".join(new_bottom)
    return PipeDream(cols=n, pivots=tuple(pivots), grid=tuple(grid))


def exchange_column(D: PipeDream, i: int) -> int | None:
    """The column j* used by :func:`standardize_step`, or None.

    The exit labels of rows i and i+1 swap exactly when this is not None.
    """
    k, n = D.rows, D.cols
    if not 1 <= i <= k - 1:
        raise DomainError(f"row index {i} out of range for {k} rows")
    b = D.pivots[i]
    if D.pivots[i - 1] > b:
        return None
    for j in range(b, n + 1):
        if D.tile(i, j) == CROSS and D.tile(i + 1, j) in (ELBOW, PIVOT):
            return j
    return None


def standardize(D: PipeDream) -> PipeDream:
    """Apply :func:`standardize_step` at the least ascent until pivots descend.

    >>> from flagpipes.pipedream import dream_from_fill
    >>> standardize(dream_from_fill(3, (1, 2),
    ...     {(1, 2): "X", (1, 3): "X", (2, 3): "X"})).pivots
    (2, 1)
    """
    while True:
        rising = [i for i in range(1, D.rows)
                  if D.pivots[i - 1] < D.pivots[i]]
        if not rising:
            return D
        D = standardize_step(D, rising[0])


@dataclass(frozen=True)
class Positroid:
    """A positroid: canonical decreasing-pivot dream plus its basis set."""

    dream: PipeDream
    bases: BasisSet

    @classmethod
    def from_dream(cls, D: PipeDream) -> "Positroid":
        """Canonicalize any gamma-free partial dream.

        >>> from flagpipes.pipedream import construct_fpp, restrict
        >>> p = Positroid.from_dream(
        ...     restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2))
        >>> p.rank, p.bases.bases
        (2, ((2, 4),))
        """
        if not is_gamma_free(D):
            raise DomainError("dream is not gamma-free")
        S = standardize(D)
        return cls(dream=S, bases=bases_of(S))

    def __post_init__(self) -> None:
        if any(a <= b for a, b in zip(self.dream.pivots, self.dream.pivots[1:])):
            raise DomainError("canonical dream needs strictly decreasing pivots"
                              "; use Positroid.from_dream")

    @property
    def n(self) -> int:
        return self.dream.cols

    @property
    def rank(self) -> int:
        return self.dream.rows

    @property
    def key(self) -> tuple:
        """Canonical identity: the pivot tuple and grid of the dream."""
        return (self.dream.pivots, self.dream.grid)

    @property
    def unblocked(self) -> tuple[int, ...]:
        return unblocked_columns(self.dream)


def is_lpm(P: Positroid) -> bool:
    """Lattice-path matroid test: the basis family is a full componentwise
    interval exactly when, in the rotated dream, every row's elbows form a
    suffix and the cross-prefix lengths weakly decrease down the rows.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> is_lpm(Positroid.from_dream(
    ...     restrict(construct_fpp((2, 1, 3), (3, 2, 1)), 2)))
    True
    """
    le = rotate_le(P.dream)
    mu = []
    for row in le.rows:
        first = row.find(ELBOW)
        if first == -1:
            mu.append(len(row))
        else:
            if CROSS in row[first:]:
                return False
            mu.append(first)
    return all(mu[r] >= mu[r + 1] for r in range(len(mu) - 1))


def enumerate_positroids(n: int) -> Iterator[Positroid]:
    """All positroids on [n], ranks ascending, canonical dreams in grid order.

    >>> sum(1 for _ in enumerate_positroids(3))
    16
    """
    for k in range(0, n + 1):
        dreams = sorted(enumerate_le_dreams(n, k),
                        key=lambda d: (d.pivots, d.grid))
        for D in dreams:
            yield Positroid.from_dream(D)
