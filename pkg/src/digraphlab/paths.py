"""Oriented paths, their level functions, and bounded-reversal path families.

The text format for an oriented path is a string over ``{+,-}``: symbol i
gives the direction of the arc between vertices i and i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from itertools import combinations

from .core import ConstructionError, Digraph, make_digraph

FORWARD = "+"
BACKWARD = "-"

# Unicode minus variants accepted on input for convenience.
_MINUS_ALIASES = {"-", "−", "–"}


@dataclass(frozen=True)
class OrientedPath:
    """A path on m+1 vertices whose arc i points forward ('+') or backward ('-')."""

    dirs: str

    def __post_init__(self):
        if any(c not in (FORWARD, BACKWARD) for c in self.dirs):
            raise ConstructionError(f"path directions must be over +/-, got {self.dirs!r}")

    @staticmethod
    def parse(text: str) -> "OrientedPath":
        normal = "".join(BACKWARD if c in _MINUS_ALIASES else c for c in text.strip())
        return OrientedPath(normal)

    @property
    def n_arcs(self) -> int:
        return len(self.dirs)

    @property
    def n_vertices(self) -> int:
        return len(self.dirs) + 1

    def levels(self) -> tuple[int, ...]:
        """Cumulative level function: starts at 0, +1 per forward arc, -1 per backward."""
        lv = [0]
        for c in self.dirs:
            lv.append(lv[-1] + (1 if c == FORWARD else -1))
        return tuple(lv)

    def algebraic_length(self) -> int:
        lv = self.levels()
        return max(lv) - min(lv)

    def as_digraph(self) -> Digraph:
        arcs = []
        for i, c in enumerate(self.dirs):
            arcs.append((i, i + 1) if c == FORWARD else ((i + 1, i)))
        return make_digraph(self.n_vertices, arcs, name=f"path({self.dirs})")

    def __str__(self) -> str:
        return self.dirs


def algebraic_length(p: OrientedPath) -> int:
    """Span of the level function; equals the least n such that p maps to the
    all-forward path with n arcs."""
    return p.algebraic_length()


def standard_path(n: int) -> OrientedPath:
    if n < 0:
        raise ConstructionError("path length must be >= 0")
    return OrientedPath(FORWARD * n)


@dataclass(frozen=True)
class PathFamily:
    """All paths obtained from the all-forward n-arc path by reversing at most
    k arcs, ordered by (reversal count, reversal set)."""

    n: int
    k: int
    members: tuple[OrientedPath, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def path_family(n: int, k: int) -> PathFamily:
    if not (0 <= k <= n):
        raise ConstructionError(f"need 0 <= k <= n, got n={n} k={k}")
    members = []
    for size in range(k + 1):
        for rev in combinations(range(n), size):
            rev_set = set(rev)
            dirs = "".join(BACKWARD if i in rev_set else FORWARD for i in range(n))
            members.append(OrientedPath(dirs))
    assert len(members) == sum(comb(n, i) for i in range(k + 1))
    return PathFamily(n, k, tuple(members))
