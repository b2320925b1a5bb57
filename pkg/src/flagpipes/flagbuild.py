"""Flags of positroids: row appending, rank-raising covers, 0-embeddings.

A flag positroid is a chain of positroids on the same ground set, each a
quotient of the next.  Covers of a rank-k positroid are produced by
appending a row to its canonical dream along a nonempty choice of
unblocked columns; the pair of a positroid and such a cover embeds as a
single matroid on the ground set extended by a new element 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exceptions import (
    DomainError,
    EmbeddingDomainError,
    EmptyChoiceError,
    NotACoverError,
    NotUnblockedError,
    SizeMismatchError,
)
from .pathgraph import BasisSet, bases_of, basis_set
from .pipedream import CROSS, ELBOW, EMPTY, HLINE, PIVOT, VLINE, PipeDream, restrict
from .positroid import Positroid, is_matroid, is_quotient, unblocked_columns

__all__ = [
    "append_row",
    "quotient_covers",
    "cover_choice",
    "FlagPositroid",
    "flag_of_fpp",
    "extended_cover_dream",
    "phi",
    "psi",
]


def append_row(D: PipeDream, C) -> PipeDream:
    """Append row k+1 with pivot at min(C) and elbows at the rest of C.

    C must be a nonempty set of unblocked columns of D; the retained rows
    are untouched.

    >>> from flagpipes.pipedream import dream_from_fill
    >>> d = dream_from_fill(4, (4, 2), {(2, 3): "X"})
    >>> append_row(d, {1, 3}).grid
    ('VVVP', 'VPXH', 'PHEH')
    """
    C = sorted(set(C))
    if not C:
        raise EmptyChoiceError("choice set is empty")
    allowed = set(unblocked_columns(D))
    for j in C:
        if j not in allowed:
            raise NotUnblockedError(j)
    p = C[0]
    pivot_cols = set(D.pivots)
    row = []
    for j in range(1, D.cols + 1):
        if j < p:
            row.append(EMPTY if j in pivot_cols else VLINE)
        elif j == p:
            row.append(PIVOT)
        elif j in pivot_cols:
            row.append(HLINE)
        elif j in C:
            row.append(ELBOW)
        else:
            row.append(CROSS)
    return PipeDream(cols=D.cols, pivots=D.pivots + (p,),
                     grid=D.grid + ("".join(row),))


def quotient_covers(P: Positroid) -> tuple[Positroid, ...]:
    """All rank-(k+1) positroids covering P: one per nonempty choice of
    unblocked columns of its canonical dream; requires rank < n.

    >>> from flagpipes.pipedream import PipeDream
    >>> bottom = Positroid.from_dream(PipeDream(cols=2, pivots=(), grid=()))
    >>> [q.bases.bases for q in quotient_covers(bottom)]
    [((1,),), ((2,),), ((1,), (2,))]
    """
    from .decperm import decperm_of

    if P.rank >= P.n:
        raise DomainError("a full-rank positroid has no covers")
    U = P.unblocked
    seen: dict[str, Positroid] = {}
    for r in range(1, len(U) + 1):
        for C in combinations(U, r):
            Q = Positroid.from_dream(append_row(P.dream, C))
            key = decperm_of(Q.dream).to_string()
            assert key not in seen, f"duplicate cover from choice {C}"
            seen[key] = Q
    assert len(seen) == 2 ** len(U) - 1
    return tuple(seen[k] for k in sorted(seen))


def cover_choice(P: Positroid, Q: Positroid) -> tuple[int, ...]:
    """The unique unblocked choice C with append_row(P, C) giving Q.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> d = construct_fpp((2, 4, 1, 3), (4, 2, 3, 1))
    >>> p2 = Positroid.from_dream(restrict(d, 2))
    >>> p3 = Positroid.from_dream(restrict(d, 3))
    >>> cover_choice(p2, p3)
    (1, 3)
    """
    if P.n != Q.n:
        raise SizeMismatchError("cover_choice: ground sets differ")
    U = P.unblocked
    for r in range(1, len(U) + 1):
        for C in combinations(U, r):
            if Positroid.from_dream(append_row(P.dream, C)).key == Q.key:
                return C
    raise NotACoverError("no unblocked choice produces the given positroid")


@dataclass(frozen=True)
class FlagPositroid:
    """A chain of positroids on [n] with strictly increasing ranks, each a
    quotient of the next; partial flags carry an explicit rank list."""

    n: int
    ranks: tuple[int, ...]
    constituents: tuple[Positroid, ...]

    def __post_init__(self) -> None:
        if not self.constituents:
            raise DomainError("a flag needs at least one constituent")
        if any(p.n != self.n for p in self.constituents):
            raise SizeMismatchError("constituents live on different ground sets")
        if self.ranks != tuple(p.rank for p in self.constituents):
            raise DomainError("rank list disagrees with constituent ranks")
        if any(a >= b for a, b in zip(self.ranks, self.ranks[1:])):
            raise DomainError("ranks must strictly increase")
        for p, q in zip(self.constituents, self.constituents[1:]):
            if not is_quotient(p.bases, q.bases):
                raise DomainError(
                    f"rank-{p.rank} constituent is not a quotient of rank-{q.rank}")


def flag_of_fpp(D: PipeDream) -> FlagPositroid:
    """The flag of row-restrictions of a dream, ranks 1 through D.rows.

    >>> from flagpipes.pipedream import construct_fpp
    >>> f = flag_of_fpp(construct_fpp((1, 2, 3), (3, 1, 2)))
    >>> [p.bases.bases for p in f.constituents]
    [((1,), (2,), (3,)), ((1, 2), (1, 3)), ((1, 2, 3),)]
    """
    constituents = tuple(Positroid.from_dream(restrict(D, k))
                         for k in range(1, D.rows + 1))
    return FlagPositroid(n=D.cols,
                         ranks=tuple(range(1, D.rows + 1)),
                         constituents=constituents)


def extended_cover_dream(P: Positroid, C) -> PipeDream:
    """Dream on n+1 columns for the 0-embedding of the cover along C:
    column 1 stands for the new ground element 0, retained pivots shift
    right by one, and the appended row pivots at column 1 with elbows on
    the shifted choice.

    >>> from flagpipes.pipedream import dream_from_fill
    >>> p = Positroid.from_dream(dream_from_fill(4, (4, 2), {(2, 3): "X"}))
    >>> extended_cover_dream(p, (1, 3)).grid
    ('VVVVP', 'VVPXH', 'PEHEH')
    """
    C = sorted(set(C))
    if not C:
        raise EmptyChoiceError("choice set is empty")
    allowed = set(unblocked_columns(P.dream))
    for j in C:
        if j not in allowed:
            raise NotUnblockedError(j)
    n = P.n
    pivot_cols = set(P.dream.pivots)
    chosen = set(C)
    rows = tuple(VLINE + row for row in P.dream.grid)
    last = [PIVOT]
    for j in range(1, n + 1):
        if j in pivot_cols:
            last.append(HLINE)
        elif j in chosen:
            last.append(ELBOW)
        else:
            last.append(CROSS)
    return PipeDream(cols=n + 1,
                     pivots=tuple(p + 1 for p in P.dream.pivots) + (1,),
                     grid=rows + ("".join(last),))


def phi(P: Positroid, Q: Positroid) -> BasisSet:
    """Embed a cover pair as one matroid on {0} + [n]: bases of P gain the
    element 0, bases of Q stay; requires Q to be a quotient cover of P.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> d = construct_fpp((2, 4, 1, 3), (4, 2, 3, 1))
    >>> p2 = Positroid.from_dream(restrict(d, 2))
    >>> p3 = Positroid.from_dream(restrict(d, 3))
    >>> phi(p2, p3).bases
    ((0, 2, 4), (1, 2, 4), (2, 3, 4))
    """
    if P.n != Q.n:
        raise SizeMismatchError("phi: ground sets differ")
    if Q.rank != P.rank + 1 or not is_quotient(P.bases, Q.bases):
        raise NotACoverError("phi needs a quotient cover pair of adjacent ranks")
    cover_choice(P, Q)  # raises NotACoverError when unrepresentable
    zero_side = ((0,) + b for b in P.bases.bases)
    R = basis_set(P.n, list(zero_side) + list(Q.bases.bases), offset_zero=True)
    assert is_matroid(R)
    return R


def psi(R: BasisSet) -> tuple[BasisSet, BasisSet]:
    """Split a matroid on {0} + [n] back into the pair phi joined: bases
    through 0 lose it, bases avoiding 0 stay.

    >>> r = basis_set(4, [(0, 2, 4), (1, 2, 4), (2, 3, 4)], offset_zero=True)
    >>> p, q = psi(r)
    >>> p.bases, q.bases
    (((2, 4),), ((1, 2, 4), (2, 3, 4)))
    """
    if not R.offset_zero:
        raise DomainError("psi expects a ground set containing 0")
    if not is_matroid(R):
        raise DomainError("psi expects a matroid")
    if 0 not in R.bases[0]:
        raise EmbeddingDomainError("zero-not-in-lexmin")
    zero_free = [b for b in R.bases if 0 not in b]
    if not zero_free:
        raise EmbeddingDomainError("no-zero-free-basis")
    through_zero = [b[1:] for b in R.bases if b[0] == 0]
    return (basis_set(R.n, through_zero), basis_set(R.n, zero_free))
