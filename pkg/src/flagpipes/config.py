"""Enumeration guards and their environment override.

Exhaustive routines (full pipe-dream enumeration, poset construction, minor
tables) are guarded by size limits so a typo cannot start a week-long loop.
Setting the environment variable ``POSITROID_MAX_N`` to an integer raises every
guard to at least that value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

__all__ = ["Limits", "ENV_MAX_N", "current_limits"]

ENV_MAX_N = "POSITROID_MAX_N"


@dataclass(frozen=True)
class Limits:
    """Per-routine ground-set size caps.

    >>> current_limits().enumerate_max_n >= 6
    True
    """

    subword_max_n: int = 6
    enumerate_max_n: int = 6
    pathgraph_max_n: int = 12
    poset_representable_max_n: int = 5
    poset_matroidal_max_n: int = 4
    minors_max_n: int = 12


def current_limits() -> Limits:
    """Return the active limits, honouring ``POSITROID_MAX_N``.

    A non-integer value in the environment is ignored.
    """
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return Limits()
    try:
        override = int(raw)
    except ValueError:
        return Limits()
    base = Limits()
    bumped = {f.name: max(getattr(base, f.name), override) for f in fields(base)}
    return Limits(**bumped)
