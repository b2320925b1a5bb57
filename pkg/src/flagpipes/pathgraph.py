"""Non-intersecting path families on a dream and the basis sets they cut out.

The graph of a partial dream has a source at every pivot elbow, an internal
vertex at every elbow tile, and a sink above the top edge of every column
(virtual row 0).  Every non-sink vertex has an up-edge to the next vertex
above it in its column (the sink if none); every internal vertex has an
in-edge from the nearest vertex to its left in its row.  Paths therefore move
up and to the right, from a source to a sink.

An admissible family chooses one path per source such that all paths are
pairwise vertex-disjoint.  The set of sink columns of a family is a basis;
the collection of all bases of a dream is its basis set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .config import current_limits
from .exceptions import DomainError, GuardExceededError
from .pipedream import ELBOW, PipeDream, right_exit_labels

__all__ = [
    "Vertex",
    "Path",
    "PathGraph",
    "BasisSet",
    "basis_set",
    "build_graph",
    "admissible_collections",
    "bases_of",
    "lex_min_basis",
    "lex_max_basis",
]

Vertex = tuple[int, int]  # (row, column); row 0 is the sink row
Path = tuple[Vertex, ...]


@dataclass(frozen=True)
class PathGraph:
    """The up/right routing graph of a partial dream.

    ``up_edges`` and ``row_edges`` are (tail, head) pairs; row edges point
    rightward into internal vertices, up edges point toward row 0.
    """

    cols: int
    sources: tuple[Vertex, ...]
    sinks: tuple[Vertex, ...]
    vertices: tuple[Vertex, ...]
    up_edges: tuple[tuple[Vertex, Vertex], ...]
    row_edges: tuple[tuple[Vertex, Vertex], ...]

    def out_neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        ups = tuple(h for (t, h) in self.up_edges if t == v)
        rights = tuple(h for (t, h) in self.row_edges if t == v)
        return ups + rights


def build_graph(D: PipeDream) -> PathGraph:
    """The routing graph of ``D``.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> g = build_graph(restrict(construct_fpp((1, 2, 3), (3, 1, 2)), 1))
    >>> g.sources, sorted(g.row_edges)
    (((1, 1),), [((1, 1), (1, 2)), ((1, 2), (1, 3))])
    """
    n, k = D.cols, D.rows
    sources = tuple((i, D.pivots[i - 1]) for i in range(1, k + 1))
    internal = tuple((i, j) for i in range(1, k + 1)
                     for j in range(1, n + 1) if D.tile(i, j) == ELBOW)
    sinks = tuple((0, j) for j in range(1, n + 1))
    grid_vertices = sorted(set(sources) | set(internal))
    by_col: dict[int, list[int]] = {}
    by_row: dict[int, list[int]] = {}
    for (r, c) in grid_vertices:
        by_col.setdefault(c, []).append(r)
        by_row.setdefault(r, []).append(c)
    up_edges = []
    for (r, c) in grid_vertices:
        above = [rr for rr in by_col[c] if rr < r]
        up_edges.append(((r, c), (max(above), c) if above else (0, c)))
    row_edges = []
    for (r, c) in internal:
        left = [cc for cc in by_row[r] if cc < c]
        if left:
            row_edges.append(((r, max(left)), (r, c)))
    return PathGraph(cols=n, sources=sources, sinks=sinks,
                     vertices=tuple(grid_vertices) + sinks,
                     up_edges=tuple(sorted(up_edges)),
                     row_edges=tuple(sorted(row_edges)))


def _paths_from(g: PathGraph, start: Vertex) -> Iterator[Path]:
    """All source-to-sink paths from ``start``, up-moves tried first."""
    stack: list[tuple[Vertex, tuple[Vertex, ...]]] = [(start, (start,))]
    while stack:
        v, walk = stack.pop()
        if v[0] == 0:
            yield walk
            continue
        for w in reversed(g.out_neighbors(v)):
            stack.append((w, walk + (w,)))


def admissible_collections(g: PathGraph,
                           max_cols: int | None = None) -> list[tuple[Path, ...]]:
    """All vertex-disjoint families, one path per source, in canonical order.

    Families are tuples of paths ordered by source row (top row first) and
    listed sorted by their vertex sequences.  Guarded to ground sets of size
    12 (override with POSITROID_MAX_N or pass ``max_cols``).

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> g = build_graph(restrict(construct_fpp((1, 2, 3), (3, 1, 2)), 1))
    >>> [fam[0][-1] for fam in admissible_collections(g)]
    [(0, 1), (0, 2), (0, 3)]
    """
    cap = max_cols if max_cols is not None else current_limits().pathgraph_max_n
    if g.cols > cap:
        raise GuardExceededError(f"path enumeration guarded to n <= {cap}, "
                                 f"got {g.cols}")
    per_source = [list(_paths_from(g, s)) for s in g.sources]
    families: list[tuple[Path, ...]] = []

    def extend(idx: int, used: set[Vertex], chosen: list[Path]) -> None:
        if idx == len(per_source):
            families.append(tuple(chosen))
            return
        for path in per_source[idx]:
            if used.isdisjoint(path):
                chosen.append(path)
                extend(idx + 1, used | set(path), chosen)
                chosen.pop()

    extend(0, set(), [])
    families.sort()
    return families


@dataclass(frozen=True)
class BasisSet:
    """The bases of a matroid on [1..n], or on [0..n] when ``offset_zero``.

    ``bases`` holds each basis as a sorted tuple, the tuples themselves in
    lexicographic order.  Use :func:`basis_set` to normalize raw data.
    """

    n: int
    k: int
    offset_zero: bool
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lo = 0 if self.offset_zero else 1
        seen = set()
        for b in self.bases:
            if len(b) != self.k:
                raise DomainError(f"basis {b!r} does not have rank {self.k}")
            if list(b) != sorted(set(b)):
                raise DomainError(f"basis {b!r} is not strictly increasing")
            if b and (b[0] < lo or b[-1] > self.n):
                raise DomainError(f"basis {b!r} leaves ground [{lo}..{self.n}]")
            seen.add(b)
        if len(seen) != len(self.bases):
            raise DomainError("duplicate bases")
        if list(self.bases) != sorted(self.bases):
            raise DomainError("bases must be listed in lexicographic order")
        if not self.bases:
            raise DomainError("a matroid has at least one basis")

    @property
    def ground(self) -> tuple[int, ...]:
        lo = 0 if self.offset_zero else 1
        return tuple(range(lo, self.n + 1))


def basis_set(n: int, bases: Iterable[Iterable[int]],
              offset_zero: bool = False) -> BasisSet:
    """Normalize raw bases into a :class:`BasisSet`.

    >>> basis_set(3, [{2}, {1}]).bases
    ((1,), (2,))
    """
    normalized = sorted({tuple(sorted(b)) for b in bases})
    if not normalized:
        raise DomainError("a matroid has at least one basis")
    k = len(normalized[0])
    return BasisSet(n=n, k=k, offset_zero=offset_zero, bases=tuple(normalized))


def bases_of(D: PipeDream, max_cols: int | None = None) -> BasisSet:
    """Sink-column sets of all admissible families of ``D``.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> bases_of(restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2)).bases
    ((2, 4),)
    """
    g = build_graph(D)
    sinks = {tuple(sorted(path[-1][1] for path in fam))
             for fam in admissible_collections(g, max_cols=max_cols)}
    if not sinks:
        raise DomainError("no admissible family; dream is not gamma-free")
    return basis_set(D.cols, sinks)


def lex_min_basis(D: PipeDream) -> tuple[int, ...]:
    """The lexicographically least basis: the sorted pivot columns.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> lex_min_basis(restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2))
    (2, 4)
    """
    return tuple(sorted(D.pivots))


def lex_max_basis(D: PipeDream) -> tuple[int, ...]:
    """The lexicographically greatest basis: the sorted right-exit labels.

    >>> from flagpipes.pipedream import construct_fpp, restrict
    >>> lex_max_basis(restrict(construct_fpp((2, 4, 1, 3), (4, 2, 3, 1)), 2))
    (2, 4)
    """
    return tuple(sorted(right_exit_labels(D).values()))
