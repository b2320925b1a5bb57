"""JSON forms for every value the command line reads or writes.

Each ``*_to_json`` emits plain dicts/lists; the matching ``*_from_json``
rebuilds an equal value, and ``parse_any`` sniffs which kind a JSON
document holds so ``convert`` can round-trip without a type tag.
"""

from __future__ import annotations

from .decperm import DecoratedPermutation, parse_decperm
from .exceptions import DomainError
from .flagbuild import FlagPositroid
from .pathgraph import BasisSet, basis_set
from .pipedream import PipeDream
from .positroid import Positroid
from .ratmat import RationalMatrix, matrix_from_json, matrix_to_json

__all__ = [
    "dream_to_json",
    "dream_from_json",
    "basis_set_to_json",
    "basis_set_from_json",
    "positroid_to_json",
    "positroid_from_json",
    "decperm_to_json",
    "decperm_from_json",
    "flag_to_json",
    "flag_from_json",
    "parse_any",
    "to_json",
]


def dream_to_json(D: PipeDream) -> dict:
    """Grid as rows of single tile letters.

    >>> from .pipedream import construct_fpp
    >>> dream_to_json(construct_fpp((1, 2), (2, 1)))
    {'rows': 2, 'cols': 2, 'pivots': [1, 2], 'tiles': [['P', 'E'], ['.', 'P']]}
    """
    return {
        "rows": len(D.pivots),
        "cols": D.cols,
        "pivots": list(D.pivots),
        "tiles": [list(row) for row in D.grid],
    }


def dream_from_json(data: dict) -> PipeDream:
    """Inverse of :func:`dream_to_json`.

    >>> from .pipedream import construct_fpp
    >>> D = construct_fpp((1, 2, 3), (3, 1, 2))
    >>> dream_from_json(dream_to_json(D)) == D
    True
    """
    rows = data["tiles"]
    if data.get("rows") not in (None, len(rows)):
        raise DomainError("row count does not match the tile grid")
    return PipeDream(cols=int(data["cols"]),
                     pivots=tuple(int(p) for p in data["pivots"]),
                     grid=tuple("".join(row) for row in rows))


def basis_set_to_json(B: BasisSet) -> dict:
    """
    >>> basis_set_to_json(basis_set(2, [(1,), (2,)]))
    {'n': 2, 'k': 1, 'offsetZero': False, 'bases': [[1], [2]]}
    """
    return {"n": B.n, "k": B.k, "offsetZero": B.offset_zero,
            "bases": [list(b) for b in B.bases]}


def basis_set_from_json(data: dict) -> BasisSet:
    """
    >>> B = basis_set(3, [(1, 3), (2, 3)])
    >>> basis_set_from_json(basis_set_to_json(B)) == B
    True
    """
    B = basis_set(int(data["n"]),
                  [tuple(int(e) for e in b) for b in data["bases"]],
                  offset_zero=bool(data.get("offsetZero", False)))
    if data.get("k") not in (None, B.k):
        raise DomainError("stated rank does not match the bases")
    return B


def positroid_to_json(P: Positroid) -> dict:
    """The canonical dream plus an explicit rank field."""
    return dream_to_json(P.dream) | {"rank": P.rank}


def positroid_from_json(data: dict) -> Positroid:
    """
    >>> from .decperm import positroid_of, parse_decperm
    >>> P = positroid_of(parse_decperm("2o1u"))
    >>> positroid_from_json(positroid_to_json(P)) == P
    True
    """
    P = Positroid.from_dream(dream_from_json(data))
    if data.get("rank") not in (None, P.rank):
        raise DomainError("stated rank does not match the dream")
    return P


def decperm_to_json(w: DecoratedPermutation) -> dict:
    """
    >>> decperm_to_json(parse_decperm("2o1u"))
    {'perm': [2, 1], 'color': [2, 1]}
    """
    return {"perm": list(w.perm), "color": list(w.color)}


def decperm_from_json(data: dict) -> DecoratedPermutation:
    """
    >>> decperm_from_json({"perm": [2, 1], "color": [2, 1]}).to_string()
    '2o1u'
    """
    return DecoratedPermutation(tuple(int(x) for x in data["perm"]),
                                tuple(int(c) for c in data["color"]))


def flag_to_json(F: FlagPositroid) -> dict:
    """Rank list plus one positroid document per constituent."""
    return {"n": F.n, "ranks": list(F.ranks),
            "constituents": [positroid_to_json(P) for P in F.constituents]}


def flag_from_json(data: dict) -> FlagPositroid:
    """
    >>> from .pipedream import construct_fpp
    >>> from .flagbuild import flag_of_fpp
    >>> F = flag_of_fpp(construct_fpp((1, 2, 3), (3, 1, 2)))
    >>> flag_from_json(flag_to_json(F)) == F
    True
    """
    F = FlagPositroid(
        n=int(data["n"]),
        ranks=tuple(int(r) for r in data["ranks"]),
        constituents=tuple(positroid_from_json(p)
                           for p in data["constituents"]))
    return F


def parse_any(data):
    """Sniff which kind of value a JSON document holds.

    Returns a (kind, value) pair; kind is one of "positroid", "dream",
    "basis-set", "decperm", "flag", "poset", "matrix", "permutation".

    >>> parse_any({"perm": [1], "color": [2]})[0]
    'decperm'
    >>> parse_any([["1", "-1/2"]])[0]
    'matrix'
    """
    if isinstance(data, dict):
        if "constituents" in data:
            return "flag", flag_from_json(data)
        if "tiles" in data and "rank" in data:
            return "positroid", positroid_from_json(data)
        if "tiles" in data:
            return "dream", dream_from_json(data)
        if "bases" in data:
            return "basis-set", basis_set_from_json(data)
        if "perm" in data and "color" in data:
            return "decperm", decperm_from_json(data)
        if "nodes" in data and "covers" in data:
            return "poset", data
        if "elements" in data and "maxChains" in data:
            return "stats", data
        raise DomainError("unrecognized JSON document shape")
    if isinstance(data, str):
        return "decperm", parse_decperm(data)
    if isinstance(data, list):
        if data and all(isinstance(x, dict) and "perm" in x for x in data):
            return "decperm-list", tuple(decperm_from_json(x) for x in data)
        if data and all(isinstance(x, dict) and "ok" in x for x in data):
            return "report", data
        if data and all(isinstance(x, list) for x in data):
            return "matrix", matrix_from_json(data)
        if all(isinstance(x, int) for x in data):
            return "permutation", tuple(data)
    raise DomainError("unrecognized JSON document shape")


def to_json(value):
    """Serialize any library value parse_any can name.

    >>> to_json(parse_decperm("1o"))
    {'perm': [1], 'color': [2]}
    """
    if isinstance(value, Positroid):
        return positroid_to_json(value)
    if isinstance(value, PipeDream):
        return dream_to_json(value)
    if isinstance(value, BasisSet):
        return basis_set_to_json(value)
    if isinstance(value, DecoratedPermutation):
        return decperm_to_json(value)
    if isinstance(value, FlagPositroid):
        return flag_to_json(value)
    if isinstance(value, RationalMatrix):
        return matrix_to_json(value)
    if isinstance(value, dict):
        return value
    if isinstance(value, (tuple, list)):
        return [x if isinstance(x, (int, str, dict)) else to_json(x)
                for x in value]
    raise DomainError(f"cannot serialize {type(value).__name__}")
