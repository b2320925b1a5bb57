"""Self-contained verification suite: ten published-fact checks.

Each check recomputes a documented fact by at least two independent routes
(fast implementation vs. brute-force re-derivation) and returns a verdict
plus a short report.  The command line exposes these as ``verify``; the
test suite asserts each one.  Checks with a stated time budget fail if
they run over it.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .decperm import (
    covers_by_shift,
    decperm_of,
    inverse_decperm,
    left_cyclic_shift,
    left_unblocked_positions,
    or_set,
    parse_decperm,
    positroid_of,
    right_cyclic_shift,
    tc_set,
    unblocked_positions,
)
from .flagbuild import append_row, flag_of_fpp, quotient_covers
from .pathgraph import bases_of, lex_max_basis, lex_min_basis
from .perm import (
    all_permutations,
    bruhat_leq,
    bruhat_leq_subword_oracle,
    length,
)
from .pipedream import (
    construct_fpp,
    cross_positions,
    elbow_count,
    enumerate_fpps,
    enumerate_partial_fpps,
    restrict,
    right_exit_labels,
    rotate_le,
    word_y_of_crosses,
)
from .positroid import (
    enumerate_positroids,
    is_quotient,
    standardize,
    standardize_step,
    unblocked_columns,
)
from .poset import (
    build_poset,
    chain_to_fpp,
    check_self_dual,
    fpp_to_chain,
    iter_maximal_chains,
    maximal_chain_count,
    missing_covers,
)
from .ratmat import (
    RationalMatrix,
    check_sign_rule,
    det,
    embed_append,
    flag_minors,
    nep_values,
    pivot_signs,
    rational_matrix,
)

__all__ = ["CheckResult", "CHECK_NAMES", "run_check", "run_all"]

DEFAULT_SEED = 20250825


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    @property
    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"{mark} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def check_interval_fpp_count() -> tuple[bool, str]:
    """Dream enumeration counts intervals: 19 at n=3, oracle-matched at n=4."""
    three = sum(1 for _ in enumerate_fpps(3))
    four = sum(1 for _ in enumerate_fpps(4))
    oracle = sum(1 for u in all_permutations(4) for v in all_permutations(4)
                 if bruhat_leq_subword_oracle(u, v))
    ok = three == 19 and four == oracle
    return ok, f"n=3: {three} (want 19); n=4: {four} vs subword oracle {oracle}"


def check_elbow_length_law() -> tuple[bool, str]:
    """Elbow count equals the length difference on every interval of S5."""
    perms = list(all_permutations(5))
    pairs = bad = 0
    for u in perms:
        for v in perms:
            if not bruhat_leq(u, v):
                continue
            pairs += 1
            if elbow_count(construct_fpp(u, v)) != length(v) - length(u):
                bad += 1
    return bad == 0, f"{pairs} intervals in S5, {bad} violations"


def check_golden_grids() -> tuple[bool, str]:
    """Three published grids reproduced tile-for-tile."""
    D = construct_fpp((5, 3, 1, 6, 2, 7, 4), (6, 7, 3, 5, 1, 4, 2))
    big = (elbow_count(D) == 7
           and cross_positions(D) == (1, 2, 4, 5, 11)
           and word_y_of_crosses(D) == (5, 6, 3, 4, 1))
    small = construct_fpp((1, 2, 3), (3, 1, 2)).grid == ("PEE", ".PX", "..P")
    L = rotate_le(construct_fpp((3, 1, 6, 5, 4, 2), (6, 3, 4, 5, 2, 1)))
    rot = L.rows == ("XXEE", "EXE") and L.pivots == (3, 1)
    ok = big and small and rot
    return ok, f"7-elbow grid {big}, 3x3 grid {small}, rotated shape (4,3) {rot}"


def check_bases_engine() -> tuple[bool, str]:
    """Path-family bases: published lex extremes and constituent bases."""
    P = positroid_of(parse_decperm("5o1u3u9o2u7o6u4u8u"))
    extremes = (lex_min_basis(P.dream) == (1, 4, 6)
                and lex_max_basis(P.dream) == (5, 7, 9))
    F = flag_of_fpp(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)))
    want = (((2,), (4,)), ((2, 4),), ((1, 2, 4), (2, 3, 4)))
    cons = tuple(F.constituents[k].bases.bases for k in range(3)) == want
    ok = extremes and cons
    return ok, f"lex extremes {extremes}, constituent bases {cons}"


def check_quotient_covers() -> tuple[bool, str]:
    """Cover counts 2^|U|-1, quotient law, and shift agreement for n <= 4."""
    positroids = covers = 0
    for n in range(1, 5):
        for P in enumerate_positroids(n):
            positroids += 1
            if P.rank == n:
                if P.unblocked:
                    return False, f"full-rank positroid with unblocked columns at n={n}"
                continue
            up = quotient_covers(P)
            covers += len(up)
            if len(up) != 2 ** len(P.unblocked) - 1:
                return False, f"cover count off at {decperm_of(P.dream).to_string()}"
            for Q in up:
                if not is_quotient(P.bases, Q.bases):
                    return False, f"non-quotient cover above {decperm_of(P.dream).to_string()}"
            via_dreams = {decperm_of(Q.dream).to_string() for Q in up}
            via_shifts = {w.to_string()
                          for w in covers_by_shift(decperm_of(P.dream))}
            if via_dreams != via_shifts:
                return False, f"shift mismatch at {decperm_of(P.dream).to_string()}"
    return True, f"{positroids} positroids, {covers} covers, both routes agree"


def check_standardization() -> tuple[bool, str]:
    """Swapping adjacent pivot rows never changes bases, unblocked columns,
    or right-exit labels; checked on every partial dream with n <= 4."""
    steps = fulls = 0
    for n in range(1, 5):
        for k in range(1, n + 1):
            for D in enumerate_partial_fpps(n, k):
                for i in range(1, k):
                    if D.pivots[i - 1] > D.pivots[i]:
                        continue
                    steps += 1
                    if bases_of(standardize_step(D, i)) != bases_of(D):
                        return False, f"bases changed by step {i} on {D.grid}"
                S = standardize(D)
                fulls += 1
                if (set(unblocked_columns(S)) != set(unblocked_columns(D))
                        or set(right_exit_labels(S)) != set(right_exit_labels(D))
                        or bases_of(S) != bases_of(D)):
                    return False, f"standardize changed invariants on {D.grid}"
    return True, f"{steps} single steps, {fulls} full standardizations invariant"


def check_poset_facts() -> tuple[bool, str]:
    """Published n=3 poset numbers, missing covers, self-duality, and the
    chain/dream bijection for n <= 4."""
    rep3 = build_poset(3)
    mat3 = build_poset(3, flavor="matroidal")
    counts = (len(rep3.elements) == 16
              and maximal_chain_count(rep3) == 19
              and maximal_chain_count(mat3) == 22)
    if not counts:
        return False, "n=3 element/chain counts off"
    missing = missing_covers(3)
    by_bases = []
    for a, b in missing:
        pa = positroid_of(parse_decperm(a)).bases.bases
        pb = positroid_of(parse_decperm(b)).bases.bases
        by_bases.append((pa, pb))
    wanted_pair = (((1,), (3,)), ((1, 2), (2, 3))) in by_bases
    if len(missing) != 3 or not wanted_pair:
        return False, f"missing covers {missing}"
    for n in (3, 4):
        for flavor in ("representable", "matroidal"):
            if not check_self_dual(build_poset(n, flavor=flavor)):
                return False, f"not self-dual at n={n} {flavor}"
    for n in range(1, 5):
        poset = build_poset(n) if n != 3 else rep3
        chains = list(iter_maximal_chains(poset))
        dreams = list(enumerate_fpps(n))
        if len(chains) != len(dreams):
            return False, f"chain/dream counts differ at n={n}"
        for chain in chains:
            if fpp_to_chain(chain_to_fpp(chain)) != chain:
                return False, f"chain round-trip failed at n={n}"
        for D in dreams:
            if chain_to_fpp(fpp_to_chain(D)) != D:
                return False, f"dream round-trip failed at n={n}"
    return True, "16 elements, 19/22 chains, 3 missing, self-dual, bijection holds"


def check_richardson_shadow() -> tuple[bool, str]:
    """Constituent bases equal sorted k-prefixes over the interval, n <= 4."""
    intervals = 0
    for n in range(1, 5):
        perms = list(all_permutations(n))
        for u in perms:
            for v in perms:
                if not bruhat_leq(u, v):
                    continue
                intervals += 1
                D = construct_fpp(u, v)
                inside = [z for z in perms
                          if bruhat_leq(u, z) and bruhat_leq(z, v)]
                for k in range(1, n + 1):
                    want = {tuple(sorted(z[:k])) for z in inside}
                    got = set(bases_of(restrict(D, k)).bases)
                    if got != want:
                        return False, f"prefix mismatch at u={u} v={v} k={k}"
    return True, f"{intervals} intervals, all constituent bases match prefixes"


def _random_matrix(rng: random.Random, rows: int, cols: int) -> RationalMatrix:
    return rational_matrix(
        [[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
          for _ in range(cols)] for _ in range(rows)])


def check_exact_linear_algebra(seed: int = DEFAULT_SEED) -> tuple[bool, str]:
    """Golden matrix minors, the zero-column embedding identity on 500
    random matrices, and the sign rule on every +-1 pattern up to 5x5."""
    M = rational_matrix([[0, 0, 0, 0, 1, 1, 0],
                         [0, 0, -1, -1, 0, 1, 1],
                         [1, 1, 0, 0, 0, 0, 0],
                         [0, 0, 0, 0, 0, 1, 2]])
    mm = flag_minors(M, (3, 4))
    golden = (all(v >= 0 for v in mm.values())
              and all(any(v > 0 for (r, S), v in mm.items() if r == rank)
                      for rank in (3, 4)))
    if not golden:
        return False, "golden matrix minors not nonnegative"
    rng = random.Random(seed)
    for _ in range(500):
        rows = rng.randint(2, 4)
        cols = rng.randint(rows, 6)
        A = _random_matrix(rng, rows, cols)
        B = embed_append(A)
        for (r, S), v in flag_minors(B, (rows,)).items():
            if 0 in S:
                want = det(A.submatrix(rows - 1, [c for c in S if c != 0]))
            else:
                want = det(A.submatrix(rows, S))
            if v != want:
                return False, "embedding minor identity failed"
    patterns = 0
    for k in range(1, 6):
        for perm in all_permutations(k):
            for signs in product((1, -1), repeat=k):
                rows = [[Fraction(0)] * k for _ in range(k)]
                for i in range(k):
                    rows[i][perm[i] - 1] = Fraction(signs[i])
                A = rational_matrix(rows)
                patterns += 1
                rule = check_sign_rule(A)
                minors = all(
                    det(A.submatrix(i, sorted(perm[:i]))) >= 0
                    for i in range(1, k + 1))
                if rule != minors:
                    return False, f"sign rule disagreement on {perm} {signs}"
    return True, f"golden + 500 embeddings + {patterns} sign patterns"


def check_decperm_table() -> tuple[bool, str]:
    """The four-row shift table, the append/standardize pipeline, and the
    inverse duality square, all on the running 9-column example."""
    pi = parse_decperm("5o1u3u9o2u7o6u4u8u")
    if unblocked_positions(pi) != (2, 5, 8, 9):
        return False, "unblocked positions wrong"
    table = (
        ((2, 5, 8, 9), (), (1, 3, 4, 6, 7), "5o8o3u9o1u7o6u2u4u"),
        ((2, 5, 8), (1,), (3, 4, 6, 7, 9), "4o5o3u9o1u7o6u2u8u"),
        ((5, 9), (4,), (1, 2, 3, 6, 7, 8), "5o1u3u8o9o7o6u4u2u"),
        ((8,), (1, 4), (2, 3, 5, 6, 7, 9), "4o1u3u5o2u7o6u9o8u"),
    )
    for C, T, A, out in table:
        if tc_set(pi, C) != T:
            return False, f"tail set wrong for C={C}"
        fixed = tuple(sorted(set(range(1, 10)) - set(C) - set(T)))
        if fixed != A:
            return False, f"fixed set wrong for C={C}"
        if right_cyclic_shift(pi, C).to_string() != out:
            return False, f"shift wrong for C={C}"
    P = positroid_of(pi)
    piped = decperm_of(standardize(append_row(P.dream, (5, 9))))
    if piped.to_string() != "5o1u3u8o9o7o6u4u2u":
        return False, "append/standardize pipeline wrong"
    omega = inverse_decperm(pi)
    if omega.to_string() != "2o5o3o8o1u7o6u9o4u":
        return False, "inverse decoration wrong"
    if left_unblocked_positions(omega) != (1, 2, 4, 8):
        return False, "left-unblocked positions wrong"
    if or_set(omega, (2, 8)) != (9,):
        return False, "head set wrong"
    omega2 = left_cyclic_shift(omega, (2, 8))
    if omega2.to_string() != "2o9o3o8o1u7o6u4u5u":
        return False, "left shift wrong"
    square = inverse_decperm(right_cyclic_shift(pi, (5, 9))) == omega2
    if not square:
        return False, "duality square does not commute"
    return True, "table rows, pipeline, and duality square all reproduce"


_CHECKS = {
    "interval-fpp-count": (check_interval_fpp_count, 10.0),
    "elbow-length-law": (check_elbow_length_law, 60.0),
    "golden-grids": (check_golden_grids, None),
    "bases-engine": (check_bases_engine, None),
    "quotient-covers": (check_quotient_covers, 120.0),
    "standardization": (check_standardization, None),
    "poset-facts": (check_poset_facts, None),
    "richardson-shadow": (check_richardson_shadow, None),
    "exact-linear-algebra": (check_exact_linear_algebra, 30.0),
    "decperm-table": (check_decperm_table, None),
}

CHECK_NAMES = tuple(_CHECKS)
_SEEDED = frozenset({"exact-linear-algebra"})


def run_check(name: str, seed: int = DEFAULT_SEED) -> CheckResult:
    """Run one named check; unknown names raise KeyError."""
    func, budget = _CHECKS[name]
    start = time.perf_counter()
    ok, detail = func(seed) if name in _SEEDED else func()
    seconds = time.perf_counter() - start
    if budget is not None and seconds > budget:
        ok = False
        detail += f"; over the {budget:.0f}s budget"
    return CheckResult(name, ok, detail, seconds)


def run_all(names=None, jobs: int = 1,
            seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run the named checks (all by default), optionally across processes.

    >>> run_all(["golden-grids"])[0].ok
    True
    """
    names = list(names) if names is not None else list(CHECK_NAMES)
    for name in names:
        if name not in _CHECKS:
            raise KeyError(f"unknown check {name!r}")
    seeds = [seed] * len(names)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_check, names, seeds))
    return [run_check(name, seed) for name in names]
