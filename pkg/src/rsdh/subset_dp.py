"""Which (e1, e2) profiles do t-element subsets of a point set realise?

The table is a suffix dynamic program over the points sorted by encoding:
``reach[i, t]`` is a boolean vector over states ``e1 * q + e2`` (or just
``e1`` in sum-only mode) marking the profiles of t-subsets of
``points[i:]``.  Adding a point y maps (e1, e2) to (e1 + y, e2 + e1*y),
which for fixed y is a permutation of the state space, so each layer is
one fancy-indexing step in numpy.  Witnesses are read back greedily,
giving the lexicographically smallest ascending subset.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

import numpy as np

from .errors import TooLarge
from .field import Field

TABLE_CELL_CAP = 1 << 27


class ProfileTable:
    def __init__(self, field: Field, points: Sequence[int], t_max: int, with_e2: bool):
        self.field = field
        self.points = tuple(sorted(set(points)))
        if len(self.points) != len(points):
            raise ValueError("points must be distinct")
        self.t_max = min(t_max, len(self.points))
        self.with_e2 = with_e2
        q = field.q
        width = q * q if with_e2 else q
        n = len(self.points)
        if (n + 1) * (self.t_max + 1) * width > TABLE_CELL_CAP:
            raise TooLarge(f"profile table for q={q}, n={n}, t<={self.t_max} exceeds the cap")
        self.width = width

        add, mul = field.add_table, field.mul_table
        reach = np.zeros((n + 1, self.t_max + 1, width), dtype=bool)
        reach[n, 0, 0] = True
        self._perms = {}
        for i in range(n - 1, -1, -1):
            perm = self._perm(self.points[i], add, mul)
            reach[i] = reach[i + 1]
            shifted = np.zeros((self.t_max, width), dtype=bool)
            shifted[:, perm] = reach[i + 1, :-1]
            reach[i, 1:] |= shifted
        self.reach = reach

    def _perm(self, y, add, mul):
        q = self.field.q
        if not self.with_e2:
            return add[:, y]
        e1 = np.repeat(np.arange(q), q)
        e2 = np.tile(np.arange(q), q)
        return add[e1, y] * q + add[e2, mul[e1, y]]

    def index(self, e1: int, e2: int | None = None) -> int:
        if self.with_e2:
            return e1 * self.field.q + e2
        return e1

    def exists(self, t: int, e1: int, e2: int | None = None) -> bool:
        if not 0 <= t <= self.t_max:
            return False
        return bool(self.reach[0, t, self.index(e1, e2)])

    def layer(self, t: int) -> np.ndarray:
        """Boolean vector of reachable states for subsets of size t."""
        return self.reach[0, t]

    def witness(self, t: int, e1: int, e2: int | None = None) -> list[int] | None:
        if not self.exists(t, e1, e2):
            return None
        F = self.field
        chosen = []
        i = 0
        while t > 0:
            for j in range(i, len(self.points)):
                y = self.points[j]
                rest_e1 = F.sub(e1, y)
                rest_e2 = F.sub(e2, F.mul(rest_e1, y)) if self.with_e2 else None
                if self.reach[j + 1, t - 1, self.index(rest_e1, rest_e2)]:
                    chosen.append(y)
                    e1, e2 = rest_e1, rest_e2
                    t -= 1
                    i = j + 1
                    break
            else:
                raise AssertionError("profile table inconsistent during backtracking")
        return chosen


@functools.lru_cache(maxsize=256)
def profile_table(field: Field, points: tuple[int, ...], t_max: int, with_e2: bool) -> ProfileTable:
    return ProfileTable(field, points, t_max, with_e2)


def subset_symmetric_dp(field: Field, D: Iterable[int], t: int, e1: int,
                        e2: int | None = None) -> tuple[bool, list[int] | None]:
    """Decide whether t distinct points of D have sum e1 (and pair-product sum e2).

    Returns (exists, witness) with the witness in ascending encoding order.
    """
    points = tuple(sorted(field.coerce(x) for x in D))
    if not 0 <= t <= len(points):
        raise ValueError(f"t={t} outside [0, {len(points)}]")
    table = profile_table(field, points, t, e2 is not None)
    w = table.witness(t, field.coerce(e1), None if e2 is None else field.coerce(e2))
    return w is not None, w
