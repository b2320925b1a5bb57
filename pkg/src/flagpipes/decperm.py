"""Decorated permutations: boundary data of positroids and cyclic-shift covers.

A decorated permutation on [n] is a permutation with every fixed point
colored 1 or 2; non-fixed points carry a forced color (2 when the value
exceeds the position, 1 otherwise).  The number of 2-colored positions is
the rank of the corresponding positroid.  Rank-increasing covers are
realized by right cyclic shifts on a choice of unblocked positions plus a
forced top-completion set; the mirrored left shifts realize covered
elements, and the two are exchanged by inversion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .exceptions import (
    DomainError,
    EmptyChoiceError,
    NotUnblockedError,
)
from .perm import (
    Permutation,
    all_permutations,
    bruhat_leq,
    compose,
    inverse,
    validate_permutation,
)
from .pipedream import PipeDream, construct_fpp, restrict, trivial_completion
from . import positroid as _positroid
from .positroid import Positroid, standardize

__all__ = [
    "DecoratedPermutation",
    "decperm_of",
    "dle_of",
    "positroid_of",
    "unblocked_positions",
    "tc_set",
    "right_cyclic_shift",
    "covers_by_shift",
    "left_unblocked_positions",
    "or_set",
    "left_cyclic_shift",
    "covered_by_shift",
    "inverse_decperm",
    "dual_positroid",
    "all_decperms",
    "parse_decperm",
]

OVER = 2   # value sits above its position, or a 2-colored fixed point
UNDER = 1  # value sits below its position, or a 1-colored fixed point


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] with a 1/2 color at every position.

    >>> DecoratedPermutation((2, 1), (2, 1)).rank
    1
    >>> DecoratedPermutation((1, 2), (1, 2)).to_string()
    '1u2o'
    """

    perm: Permutation
    color: tuple[int, ...]

    def __post_init__(self) -> None:
        validate_permutation(self.perm)
        n = len(self.perm)
        if len(self.color) != n:
            raise DomainError("color tuple length differs from permutation")
        for j, (v, c) in enumerate(zip(self.perm, self.color), start=1):
            if c not in (UNDER, OVER):
                raise DomainError(f"color at position {j} must be 1 or 2")
            if v > j and c != OVER:
                raise DomainError(f"position {j}: value {v} forces color 2")
            if v < j and c != UNDER:
                raise DomainError(f"position {j}: value {v} forces color 1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def rank(self) -> int:
        return sum(1 for c in self.color if c == OVER)

    def to_string(self) -> str:
        """Compact text form: each value followed by ``o`` (color 2) or
        ``u`` (color 1); comma-separated beyond single digits.

        >>> DecoratedPermutation((3, 1, 2), (2, 1, 1)).to_string()
        '3o1u2u'
        """
        parts = [f"{v}{'o' if c == OVER else 'u'}"
                 for v, c in zip(self.perm, self.color)]
        return ",".join(parts) if self.n > 9 else "".join(parts)

    def to_unicode(self) -> str:
        """Display form with combining overline/underline marks.

        >>> DecoratedPermutation((2, 1), (2, 1)).to_unicode() == "2\\u03051\\u0332"
        True
        """
        marks = {OVER: "̅", UNDER: "̲"}
        parts = [f"{v}{marks[c]}" for v, c in zip(self.perm, self.color)]
        return ",".join(parts) if self.n > 9 else "".join(parts)


def parse_decperm(s: str) -> DecoratedPermutation:
    """Inverse of :meth:`DecoratedPermutation.to_string`.

    >>> parse_decperm("3o1u2u").perm
    (3, 1, 2)
    >>> parse_decperm("1u2o").color
    (1, 2)
    """
    compact = s.replace(",", "").strip()
    if not re.fullmatch(r"(?:\d+[ou])+", compact):
        raise DomainError(f"cannot parse decorated permutation: {s!r}")
    pairs = re.findall(r"(\d+)([ou])", compact)
    perm = tuple(int(v) for v, _ in pairs)
    color = tuple(OVER if m == "o" else UNDER for _, m in pairs)
    return DecoratedPermutation(perm, color)


def decperm_of(D: PipeDream) -> DecoratedPermutation:
    """Boundary data of a partial dream: standardize, trivially complete,
    then compose the exit permutation with the inverse pivot permutation;
    color 2 exactly at the pivot columns of the k retained rows.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> d = restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2)
    >>> decperm_of(d).to_string()
    '1u2o3u4o'
    """
    from .pipedream import exit_permutation

    S = standardize(D)
    T = trivial_completion(S)
    u = T.pivots
    v = exit_permutation(T)
    pi = compose(v, inverse(u))
    pivot_cols = set(S.pivots)
    color = tuple(OVER if j in pivot_cols else UNDER
                  for j in range(1, S.cols + 1))
    return DecoratedPermutation(pi, color)


def dle_of(dp: DecoratedPermutation) -> PipeDream:
    """The canonical decreasing-pivot dream with the given boundary data:
    pivot rows list the 2-colored positions in decreasing order, the tail of
    the completion lists the 1-colored ones, and the exit permutation is the
    permutation composed with that pivot order.

    >>> dle_of(parse_decperm("2o1u4o3u")).pivots
    (3, 1)
    """
    over = sorted((j for j, c in enumerate(dp.color, 1) if c == OVER),
                  reverse=True)
    under = sorted((j for j, c in enumerate(dp.color, 1) if c == UNDER),
                   reverse=True)
    u = tuple(over + under)
    v = tuple(dp.perm[j - 1] for j in u)
    if not bruhat_leq(u, v):
        raise DomainError("decorated permutation has no gamma-free dream")
    return restrict(construct_fpp(u, v), len(over))


def positroid_of(dp: DecoratedPermutation) -> Positroid:
    """Positroid with the given boundary data.

    >>> positroid_of(parse_decperm("1u2o")).bases.bases
    ((2,),)
    """
    return Positroid.from_dream(dle_of(dp))


def unblocked_positions(dp: DecoratedPermutation) -> tuple[int, ...]:
    """1-colored positions whose value is below every later 1-colored value.

    Coincides with the unblocked columns of the canonical dream.

    >>> unblocked_positions(parse_decperm("5o1u3u9o2u7o6u4u8u"))
    (2, 5, 8, 9)
    """
    under = [j for j, c in enumerate(dp.color, 1) if c == UNDER]
    out = []
    for idx, j in enumerate(under):
        if all(dp.perm[jp - 1] > dp.perm[j - 1] for jp in under[idx + 1:]):
            out.append(j)
    return tuple(out)


def tc_set(dp: DecoratedPermutation, C) -> tuple[int, ...]:
    """Top-completion set of a choice C of unblocked positions: greedily walk
    left of min(C) picking ever-lower 2-colored positions whose values climb
    from the value at max(C).

    >>> pi = parse_decperm("5o1u3u9o2u7o6u4u8u")
    >>> tc_set(pi, {8})
    (1, 4)
    >>> tc_set(pi, {2, 5, 8, 9})
    ()
    """
    C = sorted(set(C))
    if not C:
        raise EmptyChoiceError("choice set is empty")
    allowed = set(unblocked_positions(dp))
    for j in C:
        if j not in allowed:
            raise NotUnblockedError(j)
    over = [j for j, c in enumerate(dp.color, 1) if c == OVER]
    out: list[int] = []
    z, m = 0, dp.perm[C[-1] - 1]
    while True:
        t = next((t for t in over
                  if z < t < C[0] and dp.perm[t - 1] > m), None)
        if t is None:
            return tuple(out)
        out.append(t)
        z, m = t, dp.perm[t - 1]


def _recolor(perm: Permutation, old: DecoratedPermutation,
             moved: set[int], fixed_color: int) -> tuple[int, ...]:
    color = []
    for j, v in enumerate(perm, 1):
        if v > j:
            color.append(OVER)
        elif v < j:
            color.append(UNDER)
        elif j in moved:
            color.append(fixed_color)
        else:
            color.append(old.color[j - 1])
    return tuple(color)


def right_cyclic_shift(dp: DecoratedPermutation, C) -> DecoratedPermutation:
    """Rank-raising cover move: cycle the values on C plus its top-completion
    set one step toward smaller positions; fixed points created by the cycle
    take color 2.

    >>> right_cyclic_shift(parse_decperm("1u2u"), {2}).to_string()
    '1u2o'
    >>> right_cyclic_shift(parse_decperm("5o1u3u9o2u7o6u4u8u"),
    ...                    {5, 9}).to_string()
    '5o1u3u8o9o7o6u4u2u'
    """
    moved = sorted(set(C) | set(tc_set(dp, C)))
    sigma = {b: moved[l - 1] for l, b in enumerate(moved)}
    sigma[moved[0]] = moved[-1]
    perm = tuple(dp.perm[sigma.get(j, j) - 1] for j in range(1, dp.n + 1))
    return DecoratedPermutation(perm, _recolor(perm, dp, set(moved), OVER))


def covers_by_shift(dp: DecoratedPermutation) -> tuple[DecoratedPermutation, ...]:
    """One shift per nonempty choice of unblocked positions, sorted by text
    form; all results are distinct.

    >>> len(covers_by_shift(parse_decperm("1u2u3u")))
    7
    """
    U = unblocked_positions(dp)
    seen = {}
    for r in range(1, len(U) + 1):
        for C in combinations(U, r):
            q = right_cyclic_shift(dp, C)
            key = q.to_string()
            assert key not in seen, f"duplicate cover from choice {C}"
            seen[key] = q
    return tuple(seen[k] for k in sorted(seen))


def left_unblocked_positions(dp: DecoratedPermutation) -> tuple[int, ...]:
    """2-colored positions whose value is above every earlier 2-colored value.

    >>> left_unblocked_positions(parse_decperm("2o5o3o8o1u7o6u9o4u"))
    (1, 2, 4, 8)
    """
    over = [j for j, c in enumerate(dp.color, 1) if c == OVER]
    out = []
    for idx, j in enumerate(over):
        if all(dp.perm[jp - 1] < dp.perm[j - 1] for jp in over[:idx]):
            out.append(j)
    return tuple(out)


def or_set(dp: DecoratedPermutation, R) -> tuple[int, ...]:
    """Mirror of :func:`tc_set`: greedily walk right of max(R) picking
    ever-higher 1-colored positions whose values descend from the value at
    min(R).

    >>> or_set(parse_decperm("2o5o3o8o1u7o6u9o4u"), {2, 8})
    (9,)
    """
    R = sorted(set(R))
    if not R:
        raise EmptyChoiceError("choice set is empty")
    allowed = set(left_unblocked_positions(dp))
    for j in R:
        if j not in allowed:
            raise NotUnblockedError(j)
    under = [j for j, c in enumerate(dp.color, 1) if c == UNDER]
    out: list[int] = []
    z, m = dp.n + 1, dp.perm[R[0] - 1]
    while True:
        o = next((o for o in reversed(under)
                  if R[-1] < o < z and dp.perm[o - 1] < m), None)
        if o is None:
            return tuple(sorted(out))
        out.append(o)
        z, m = o, dp.perm[o - 1]


def left_cyclic_shift(dp: DecoratedPermutation, R) -> DecoratedPermutation:
    """Rank-lowering move: cycle the values on R plus its completion one step
    toward larger positions; fixed points created by the cycle take color 1.

    >>> left_cyclic_shift(parse_decperm("2o5o3o8o1u7o6u9o4u"),
    ...                   {2, 8}).to_string()
    '2o9o3o8o1u7o6u4u5u'
    """
    moved = sorted(set(R) | set(or_set(dp, R)))
    tau = {b: moved[(l + 1) % len(moved)] for l, b in enumerate(moved)}
    perm = tuple(dp.perm[tau.get(j, j) - 1] for j in range(1, dp.n + 1))
    return DecoratedPermutation(perm, _recolor(perm, dp, set(moved), UNDER))


def covered_by_shift(dp: DecoratedPermutation) -> tuple[DecoratedPermutation, ...]:
    """One left shift per nonempty choice of left-unblocked positions.

    >>> len(covered_by_shift(parse_decperm("1o2o3o")))
    7
    """
    S = left_unblocked_positions(dp)
    seen = {}
    for r in range(1, len(S) + 1):
        for R in combinations(S, r):
            q = left_cyclic_shift(dp, R)
            key = q.to_string()
            assert key not in seen, f"duplicate covered element from choice {R}"
            seen[key] = q
    return tuple(seen[k] for k in sorted(seen))


def inverse_decperm(dp: DecoratedPermutation) -> DecoratedPermutation:
    """Invert the permutation and flip the color across each value's arc.

    >>> inverse_decperm(parse_decperm("5o1u3u9o2u7o6u4u8u")).to_string()
    '2o5o3o8o1u7o6u9o4u'
    """
    inv = inverse(dp.perm)
    color = [0] * dp.n
    for j, v in enumerate(dp.perm, 1):
        color[v - 1] = OVER + UNDER - dp.color[j - 1]
    return DecoratedPermutation(inv, tuple(color))


def dual_positroid(P: Positroid) -> Positroid:
    """Positroid whose bases are the set complements of P's bases.

    >>> from flagpipes.pathgraph import basis_set
    >>> P = positroid_of(parse_decperm("1u2o"))
    >>> dual_positroid(P).bases.bases
    ((1,),)
    """
    Q = positroid_of(inverse_decperm(decperm_of(P.dream)))
    assert Q.bases == _positroid.dual(P.bases)
    return Q


def all_decperms(n: int) -> list[DecoratedPermutation]:
    """Every decorated permutation on [n]: each permutation with each choice
    of fixed-point colors.

    >>> len(all_decperms(3))
    16
    """
    out = []
    for w in all_permutations(n):
        fixed = [j for j in range(1, n + 1) if w[j - 1] == j]
        for r in range(len(fixed) + 1):
            for two_colored in combinations(fixed, r):
                chosen = set(two_colored)
                color = tuple(
                    OVER if (v > j or (v == j and j in chosen)) else UNDER
                    for j, v in enumerate(w, 1))
                out.append(DecoratedPermutation(w, color))
    return out
