"""The graded poset of positroids on [n] under the quotient order.

Two flavors share one container: "representable" edges come from the
row-append cover construction, "matroidal" edges from the bare quotient
test on adjacent ranks.  Every representable cover is matroidal; the
difference is reported by :func:`missing_covers`.  Maximal chains of the
representable flavor biject with complete flag positroid pipe dreams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .config import current_limits
from .decperm import decperm_of, inverse_decperm, parse_decperm
from .exceptions import DomainError, GuardExceededError, SizeMismatchError
from .flagbuild import quotient_covers
from .pathgraph import lex_max_basis, lex_min_basis
from .perm import bruhat_leq
from .pipedream import PipeDream, construct_fpp, restrict
from .positroid import Positroid, enumerate_positroids, is_quotient

__all__ = [
    "QuotientPoset",
    "build_poset",
    "maximal_chain_count",
    "iter_maximal_chains",
    "missing_covers",
    "check_self_dual",
    "chain_to_fpp",
    "fpp_to_chain",
    "export_dot",
    "export_json",
]

FLAVORS = ("representable", "matroidal")


@dataclass(frozen=True)
class QuotientPoset:
    """Positroids on [n] with rank-adjacent cover edges (index pairs into
    ``elements``, which is sorted by rank then boundary text)."""

    n: int
    flavor: str
    elements: tuple[Positroid, ...]
    names: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]

    def rank_indices(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.elements) if p.rank == k)

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    @property
    def bottom(self) -> int:
        return self.rank_indices(0)[0]

    @property
    def top(self) -> int:
        return self.rank_indices(self.n)[0]


def build_poset(n: int, flavor: str = "representable") -> QuotientPoset:
    """Assemble the poset of all positroids on [n] for one edge flavor.

    >>> p = build_poset(3)
    >>> len(p.elements), len(p.covers)
    (16, 33)
    """
    if flavor not in FLAVORS:
        raise DomainError(f"unknown flavor {flavor!r}; pick one of {FLAVORS}")
    limits = current_limits()
    cap = (limits.poset_representable_max_n if flavor == "representable"
           else limits.poset_matroidal_max_n)
    if n > cap:
        raise GuardExceededError(
            f"poset flavor {flavor!r} is capped at n <= {cap}")
    pairs = sorted(((p, decperm_of(p.dream).to_string())
                    for p in enumerate_positroids(n)),
                   key=lambda t: (t[0].rank, t[1]))
    elements = tuple(p for p, _ in pairs)
    names = tuple(s for _, s in pairs)
    index = {p.key: i for i, p in enumerate(elements)}
    edges = []
    if flavor == "representable":
        for i, p in enumerate(elements):
            if p.rank == n:
                continue
            for q in quotient_covers(p):
                edges.append((i, index[q.key]))
    else:
        for i, p in enumerate(elements):
            for j, q in enumerate(elements):
                if q.rank == p.rank + 1 and is_quotient(p.bases, q.bases):
                    edges.append((i, j))
    return QuotientPoset(n=n, flavor=flavor, elements=elements, names=names,
                         covers=tuple(sorted(set(edges))))


def maximal_chain_count(poset: QuotientPoset) -> int:
    """Number of bottom-to-top cover paths, by rank-layer dynamic counting.

    >>> maximal_chain_count(build_poset(3))
    19
    >>> maximal_chain_count(build_poset(3, "matroidal"))
    22
    """
    up: dict[int, list[int]] = {}
    for a, b in poset.covers:
        up.setdefault(a, []).append(b)
    paths = {poset.top: 1}
    for k in range(poset.n - 1, -1, -1):
        for i in poset.rank_indices(k):
            paths[i] = sum(paths.get(j, 0) for j in up.get(i, ()))
    return paths[poset.bottom]


def iter_maximal_chains(poset: QuotientPoset) -> Iterator[tuple[Positroid, ...]]:
    """Yield every bottom-to-top chain as a tuple of elements.

    >>> sum(1 for _ in iter_maximal_chains(build_poset(3)))
    19
    """
    up: dict[int, list[int]] = {}
    for a, b in poset.covers:
        up.setdefault(a, []).append(b)
    chain = [poset.bottom]

    def walk() -> Iterator[tuple[Positroid, ...]]:
        i = chain[-1]
        if i == poset.top:
            yield tuple(poset.elements[j] for j in chain)
            return
        for j in sorted(up.get(i, ())):
            chain.append(j)
            yield from walk()
            chain.pop()

    yield from walk()


def missing_covers(n: int) -> tuple[tuple[str, str], ...]:
    """Matroidal cover pairs that no row-append realizes, as boundary-text
    pairs (lower, upper), sorted.

    >>> missing_covers(3)
    (('3o1u2u', '3o2o1u'), ('3o2u1u', '2o3o1u'), ('3o2u1u', '3o2o1u'))
    """
    rep = build_poset(n, "representable")
    mat = build_poset(n, "matroidal")
    rep_edges = {(rep.names[a], rep.names[b]) for a, b in rep.covers}
    mat_edges = {(mat.names[a], mat.names[b]) for a, b in mat.covers}
    assert rep_edges <= mat_edges, "a dream cover failed the quotient test"
    return tuple(sorted(mat_edges - rep_edges))


def check_self_dual(poset: QuotientPoset) -> bool:
    """Does inverting every boundary permutation reverse all cover edges?

    >>> check_self_dual(build_poset(3))
    True
    """
    lookup = {name: i for i, name in enumerate(poset.names)}
    image = []
    for name in poset.names:
        mirrored = inverse_decperm(parse_decperm(name)).to_string()
        if mirrored not in lookup:
            return False
        image.append(lookup[mirrored])
    edge_set = set(poset.covers)
    return all((image[b], image[a]) in edge_set for a, b in poset.covers)


def fpp_to_chain(D: PipeDream) -> tuple[Positroid, ...]:
    """The maximal chain of row-restriction positroids, ranks 0 through n.

    >>> d = construct_fpp((1, 2, 3), (3, 1, 2))
    >>> [p.rank for p in fpp_to_chain(d)]
    [0, 1, 2, 3]
    """
    if not D.is_complete:
        raise DomainError("chains need a complete dream")
    return tuple(Positroid.from_dream(restrict(D, k))
                 for k in range(0, D.rows + 1))


def chain_to_fpp(chain) -> PipeDream:
    """Rebuild the unique complete dream whose restrictions give the chain:
    pivot columns come from successive lex-min basis differences, exit
    labels from lex-max differences.

    >>> d = construct_fpp((1, 2, 3), (3, 1, 2))
    >>> chain_to_fpp(fpp_to_chain(d)) == d
    True
    """
    chain = tuple(chain)
    if not chain:
        raise DomainError("empty chain")
    n = chain[0].n
    if [p.rank for p in chain] != list(range(0, n + 1)):
        raise DomainError("chain must step through ranks 0..n")
    if any(p.n != n for p in chain):
        raise SizeMismatchError("chain elements live on different ground sets")
    u, v = [], []
    for prev, cur in zip(chain, chain[1:]):
        du = set(lex_min_basis(cur.dream)) - set(lex_min_basis(prev.dream))
        dv = set(lex_max_basis(cur.dream)) - set(lex_max_basis(prev.dream))
        if len(du) != 1 or len(dv) != 1:
            raise DomainError("chain is not the flag of any dream")
        u.append(du.pop())
        v.append(dv.pop())
    u, v = tuple(u), tuple(v)
    if not bruhat_leq(u, v):
        raise DomainError("chain is not the flag of any dream")
    D = construct_fpp(u, v)
    for k, p in enumerate(chain):
        if Positroid.from_dream(restrict(D, k)).key != p.key:
            raise DomainError("chain is not the flag of any dream")
    return D


def export_json(poset: QuotientPoset) -> dict:
    """Plain-data form: nodes carry boundary text and rank, edges index them.

    >>> export_json(build_poset(3))["nodes"][0]
    {'decperm': '1u2u3u', 'rank': 0}
    """
    return {
        "n": poset.n,
        "flavor": poset.flavor,
        "nodes": [{"decperm": name, "rank": p.rank}
                  for name, p in zip(poset.names, poset.elements)],
        "covers": [[a, b] for a, b in poset.covers],
    }


def export_dot(poset: QuotientPoset, dashed=()) -> str:
    """Graphviz text, ranks on shared levels; edges in ``dashed`` (pairs of
    boundary texts) render dashed.

    >>> print(export_dot(build_poset(2)).splitlines()[0])
    digraph quotient_poset {
    """
    dashed_set = {tuple(e) for e in dashed}
    lines = ["digraph quotient_poset {", "  rankdir=BT;"]
    for k in range(poset.n + 1):
        names = [poset.names[i] for i in poset.rank_indices(k)]
        row = " ".join(f'"{s}";' for s in names)
        lines.append(f"  {{ rank=same; {row} }}")
    for a, b in poset.covers:
        pair = (poset.names[a], poset.names[b])
        style = " [style=dashed]" if pair in dashed_set else ""
        lines.append(f'  "{pair[0]}" -> "{pair[1]}"{style};')
    for a, b in sorted(dashed_set):
        if (poset.index_of(a), poset.index_of(b)) not in set(poset.covers):
            lines.append(f'  "{a}" -> "{b}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines)
