"""Layered walk search over an implicit (node, level) state space.

A walk that starts at level 0, stays within 0..ell and first leaves through
level ell spells out an oriented path whose level span is exactly ell and
which maps into the walked graph vertex by vertex.  The search is a
multi-source BFS; among shortest walks it returns the lexicographically
least direction pattern ('+' before '-') and, within that pattern, the
minimal concrete walk.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Optional

_UNSEEN = -1


@dataclass(frozen=True)
class LevelWalk:
    """Shortest walk achieving the requested level span."""

    dirs: str
    nodes: tuple[int, ...]


def find_level_walk(num_nodes: int, arcs: Iterable[tuple[int, int]], ell: int) -> Optional[LevelWalk]:
    """Shortest walk from level 0 to level ell with levels confined to 0..ell.

    ``arcs`` is consumed once; num_nodes * (ell + 1) states are explored.
    Returns None when no such walk exists.
    """
    if ell < 0:
        raise ValueError("level span must be >= 0")
    if num_nodes == 0:
        return None
    if ell == 0:
        return LevelWalk("", (0,))

    empty: tuple[int, ...] = ()
    heads: dict[int, list[int]] = {}  # out-neighbours, absent key = none
    tails: dict[int, list[int]] = {}  # in-neighbours
    for u, v in arcs:
        heads.setdefault(u, []).append(v)
        tails.setdefault(v, []).append(u)

    width = ell + 1
    n_states = num_nodes * width
    dist = array("i", [_UNSEEN]) * n_states

    # backward BFS from every (node, ell): dist = steps still needed to reach
    # level ell.  Predecessors of (z, j) sit at (x, j-1) with arc x->z, or at
    # (x, j+1) with arc z->x.
    frontier = []
    for node in range(num_nodes):
        s = node * width + ell
        dist[s] = 0
        frontier.append(s)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for s in frontier:
            node, j = divmod(s, width)
            if j >= 1:
                for x in tails.get(node, empty):  # arrive via '+': (x, j-1)
                    t = x * width + j - 1
                    if dist[t] == _UNSEEN:
                        dist[t] = d
                        nxt.append(t)
            if j + 1 <= ell:
                for x in heads.get(node, empty):  # arrive via '-': (x, j+1)
                    t = x * width + j + 1
                    if dist[t] == _UNSEEN:
                        dist[t] = d
                        nxt.append(t)
        frontier = nxt

    starts = [node * width for node in range(num_nodes) if dist[node * width] != _UNSEEN]
    if not starts:
        return None
    total = min(dist[s] for s in starts)

    # forward greedy over the set of optimal states, preferring '+' at each
    # step; parents are unambiguous because a state occurs in one layer only.
    parent = array("i", [_UNSEEN]) * n_states
    layer = {s for s in starts if dist[s] == total}
    dirs = []
    for step in range(total):
        want = total - step - 1
        for symbol in "+-":
            nxt = set()
            for s in layer:
                node, j = divmod(s, width)
                if symbol == "+":
                    if j + 1 > ell:
                        continue
                    candidates = ((y, j + 1) for y in heads.get(node, empty))
                else:
                    if j - 1 < 0:
                        continue
                    candidates = ((y, j - 1) for y in tails.get(node, empty))
                for y, jj in candidates:
                    t = y * width + jj
                    if dist[t] == want:
                        if t not in nxt:
                            nxt.add(t)
                            parent[t] = s
                        elif s < parent[t]:
                            parent[t] = s
            if nxt:
                dirs.append(symbol)
                layer = nxt
                break
        else:
            raise AssertionError("optimal layer lost during reconstruction")

    end = min(layer)
    walk = [end]
    while parent[walk[-1]] != _UNSEEN:
        walk.append(parent[walk[-1]])
    if len(walk) != total + 1:
        raise AssertionError("walk reconstruction out of sync")
    walk.reverse()
    return LevelWalk("".join(dirs), tuple(s // width for s in walk))
