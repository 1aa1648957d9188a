"""Homomorphism decision engine.

Arc-consistency filtering (a worklist fixpoint over the source's arcs)
followed by backtracking search with smallest-domain-first variable order.
For targets whose obstruction sets are trees, arc consistency alone decides;
the backtracking layer then never actually backtracks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Optional, Union

from .core import Digraph, Hom, SizeLimitExceeded, validate_hom
from .product import ProductHom, ProductSpec

#: Default node-expansion limit for one search.
DEFAULT_BUDGET = 10_000_000

#: Maximum |V(H)|^|V(G)| that brute_force_hom will enumerate.
BRUTE_FORCE_LIMIT = 10_000_000


class _BudgetExhausted(Exception):
    pass


class _BudgetExceededType:
    """Singleton returned when a search ran out of budget (no claim made)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BUDGET_EXCEEDED"

    def __bool__(self) -> bool:
        return False


BUDGET_EXCEEDED = _BudgetExceededType()

HomResult = Union[Hom, ProductHom, None, _BudgetExceededType]


@dataclass
class HomProblem:
    """A hom-search instance with per-source-vertex candidate sets.

    For a plain digraph target, ``domains[u]`` is a set of target vertices.
    For a product target, ``domains[i][u]`` is the domain of u in factor i.
    """

    source: Digraph
    target: Union[Digraph, ProductSpec]
    domains: Optional[list] = None
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.domains is None:
            self.domains = self._full_domains()

    def _full_domains(self):
        if isinstance(self.target, ProductSpec):
            return [
                [set(range(f.n)) for _ in range(self.source.n)]
                for f in self.target.factors
            ]
        return [set(range(self.target.n)) for _ in range(self.source.n)]


def arc_consistency(problem: HomProblem) -> Optional[HomProblem]:
    """Largest domain-filtering fixpoint; None means provably no hom.

    A value x survives for u iff every arc at u can still be matched by some
    surviving value at the other endpoint.  For product targets the filter
    runs factor by factor.
    """
    g = problem.source
    if isinstance(problem.target, ProductSpec):
        reduced = []
        for f, doms in zip(problem.target.factors, problem.domains):
            new = _ac_fixpoint(g, f, [set(d) for d in doms])
            if new is None:
                return None
            reduced.append(new)
        return HomProblem(g, problem.target, reduced, problem.budget)
    new = _ac_fixpoint(g, problem.target, [set(d) for d in problem.domains])
    if new is None:
        return None
    return HomProblem(g, problem.target, new, problem.budget)


def _loop_vertices(h: Digraph) -> frozenset[int]:
    return frozenset(u for u, v in h.arcs if u == v)


def _ac_fixpoint(g: Digraph, h: Digraph, doms: list[set[int]], touched=None):
    """Run AC-3 over the binary constraints of g in place; None on a wipeout.

    ``touched`` optionally seeds the worklist with the vertices whose domains
    just changed (incremental re-propagation during search).
    """
    if g.n == 0:
        return doms
    loops_h = _loop_vertices(h)
    cons = []  # (u, v) source arcs, loops handled as unary filters
    for u, v in g.arcs:
        if u == v:
            doms[u] &= loops_h
        else:
            cons.append((u, v))
    at: list[list[int]] = [[] for _ in range(g.n)]
    for ci, (u, v) in enumerate(cons):
        at[u].append(ci)
        at[v].append(ci)
    out_sets, in_sets = h.out_sets, h.in_sets

    queue = set(range(len(cons))) if touched is None else {ci for t in touched for ci in at[t]}
    while queue:
        ci = queue.pop()
        u, v = cons[ci]
        du, dv = doms[u], doms[v]
        keep_u = {x for x in du if not out_sets[x].isdisjoint(dv)}
        if len(keep_u) != len(du):
            if not keep_u:
                return None
            doms[u] = keep_u
            queue.update(at[u])
        keep_v = {y for y in dv if not in_sets[y].isdisjoint(doms[u])}
        if len(keep_v) != len(dv):
            if not keep_v:
                return None
            doms[v] = keep_v
            queue.update(at[v])
    if any(not d for d in doms):
        return None
    return doms


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def spend(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted


def _sym_degrees(g: Digraph) -> list[int]:
    return [len((g.out_sets[u] | g.in_sets[u]) - {u}) for u in range(g.n)]


def _search(g: Digraph, h: Digraph, doms: list[set[int]], counter: _Counter, degs: list[int]):
    """MAC backtracking: smallest domain first (big source degree breaks
    ties), values ascending."""
    unassigned = [u for u in range(g.n) if len(doms[u]) != 1]
    if not unassigned:
        return tuple(next(iter(d)) for d in doms)
    u = min(unassigned, key=lambda x: (len(doms[x]), -degs[x], x))
    for val in sorted(doms[u]):
        counter.spend()
        trial = [set(d) for d in doms]
        trial[u] = {val}
        if _ac_fixpoint(g, h, trial, touched=[u]) is not None:
            found = _search(g, h, trial, counter, degs)
            if found is not None:
                return found
    return None


def _is_complete_symmetric(h: Digraph) -> bool:
    # n(n-1) distinct loopless arcs can only be all ordered pairs
    return len(h.arcs) == h.n * (h.n - 1) and not h.has_loop()


def _greedy_conflict_clique(g: Digraph, degs: list[int]) -> list[int]:
    """Vertices pairwise joined by an arc in some direction, grown greedily."""
    adj = [(g.out_sets[u] | g.in_sets[u]) - {u} for u in range(g.n)]
    best: list[int] = []
    for start in sorted(range(g.n), key=lambda u: (-degs[u], u))[:8]:
        clique = [start]
        common = set(adj[start])
        while common:
            nxt = max(common, key=lambda v: (len(adj[v] & common), -v))
            clique.append(nxt)
            common &= adj[nxt]
        if len(clique) > len(best):
            best = clique
    return best


def _hom_exists_digraph(g: Digraph, h: Digraph, budget: int) -> HomResult:
    if g.n == 0:
        return Hom((), g.name, h.name)
    if h.n == 0:
        return None
    doms = [set(range(h.n)) for _ in range(g.n)]
    degs = _sym_degrees(g)
    if _is_complete_symmetric(h):
        # all target vertices are interchangeable: along any fixed source
        # order, a hom can be relabelled so the i-th vertex uses a colour
        # index <= i.  Putting a greedy conflict clique first makes an
        # oversized clique wipe out by arc consistency alone; the rest is
        # clamped along descending degree.
        clique = _greedy_conflict_clique(g, degs)
        rest = sorted(set(range(g.n)) - set(clique), key=lambda u: (-degs[u], u))
        for pos, u in enumerate(clique + rest):
            doms[u] = set(range(min(pos, h.n - 1) + 1))
    if _ac_fixpoint(g, h, doms) is None:
        return None
    counter = _Counter(budget)
    try:
        assignment = _search(g, h, doms, counter, degs)
    except _BudgetExhausted:
        return BUDGET_EXCEEDED
    if assignment is None:
        return None
    witness = Hom(assignment, g.name, h.name)
    assert validate_hom(witness, g, h)
    return witness


def hom_exists(g: Digraph, target: Union[Digraph, ProductSpec], budget: int = DEFAULT_BUDGET) -> HomResult:
    """Search for a hom of g into the target.

    Returns a validated witness, None when the exhaustive search proves there
    is none, or BUDGET_EXCEEDED when the node limit was hit (no claim).
    Product targets are solved one factor at a time; the tuple witness is
    assembled from the factor homs and never materialized.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if isinstance(target, ProductSpec):
        homs = []
        exceeded = False
        for f in target.factors:
            r = _hom_exists_digraph(g, f, budget)
            if r is None:
                return None
            if r is BUDGET_EXCEEDED:
                exceeded = True
                continue
            homs.append(r)
        if exceeded:
            return BUDGET_EXCEEDED
        witness = ProductHom(tuple(homs))
        assert witness.validate(g, target)
        return witness
    return _hom_exists_digraph(g, target, budget)


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a two-way hom check; equivalent is None when indeterminate."""

    equivalent: Optional[bool]
    forward: Optional[Hom] = None
    backward: Optional[Hom] = None


def hom_equivalent(g: Digraph, h: Digraph, budget: int = DEFAULT_BUDGET) -> EquivalenceResult:
    """Check for homomorphisms both ways between g and h."""
    fwd = hom_exists(g, h, budget)
    if fwd is BUDGET_EXCEEDED:
        return EquivalenceResult(None)
    if fwd is None:
        return EquivalenceResult(False)
    bwd = hom_exists(h, g, budget)
    if bwd is BUDGET_EXCEEDED:
        return EquivalenceResult(None, forward=fwd)
    if bwd is None:
        return EquivalenceResult(False, forward=fwd)
    return EquivalenceResult(True, forward=fwd, backward=bwd)


def brute_force_hom(g: Digraph, h: Digraph, limit: int = BRUTE_FORCE_LIMIT) -> Optional[Hom]:
    """Exhaustive enumeration of all |V(H)|^|V(G)| maps; ground truth oracle."""
    space = h.n**g.n if g.n else 1
    if space > limit:
        raise SizeLimitExceeded("brute_force_hom", space, limit)
    target = h.arc_set
    for assignment in iter_product(range(h.n), repeat=g.n):
        if all((assignment[u], assignment[v]) in target for u, v in g.arcs):
            return Hom(assignment, g.name, h.name)
    return None
