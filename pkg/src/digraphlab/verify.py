"""Machine checks for the library's structural claims.

Each verifier returns a VerifyReport whose witnesses (homomorphisms,
colourings, paths, counterexamples) revalidate through the core modules
independently of the verifier that produced them.  Random sweeps use a
seeded generator recorded in the report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from itertools import permutations, product as iter_product
from math import ceil
from typing import Iterable, Iterator, Optional, Sequence

from .coloring import check_colouring, chromatic_number
from .constructions import (
    arc_graph,
    arc_graph_iter,
    b_graph,
    circular_complete,
    complete,
    interleaved_adjoint,
    inverse_interleaved_adjoint,
    path,
    tournament,
    tree_dual,
)
from .core import (
    Digraph,
    Hom,
    SizeLimitExceeded,
    induced,
    make_digraph,
    to_json_dict,
    validate_hom,
)
from .homs import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    HomProblem,
    arc_consistency,
    brute_force_hom,
    hom_equivalent,
    hom_exists,
)
from .level_search import find_level_walk
from .paths import OrientedPath, path_family, standard_path
from .product import categorical_product

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"

#: Steep-path searches beyond this span are out of desk scale.
MAX_STEEP_SPAN = 4

#: Largest k accepted by h_function (dual sizes stay <= 2^(3k-1)).
MAX_H_K = 3


@dataclass
class VerifyReport:
    claim: str
    params: dict
    verdict: str
    witnesses: dict
    seed: Optional[int] = None
    timing_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json_dict(self, include_timing: bool = True) -> dict:
        d = {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "seed": self.seed,
        }
        if include_timing:
            d["timing_ms"] = self.timing_ms
        return d


def _finish(claim, params, verdict, witnesses, seed, t0) -> VerifyReport:
    ms = (time.perf_counter() - t0) * 1000.0
    return VerifyReport(claim, params, verdict, witnesses, seed, round(ms, 3))


def _hom_json(h: Hom) -> list[int]:
    return list(h.map)


# --- instance generators ------------------------------------------------------


def random_digraph(rng: random.Random, n: int, p: float, loop_p: float = 0.0) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(n):
            if u == v:
                if loop_p and rng.random() < loop_p:
                    arcs.append((u, u))
            elif rng.random() < p:
                arcs.append((u, v))
    return make_digraph(n, arcs, name=f"random({n})")


def all_digraphs(max_vertices: int, loops: bool = True) -> Iterator[Digraph]:
    """Every digraph with at most max_vertices vertices, by arc-set rank."""
    for n in range(max_vertices + 1):
        pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
        for mask in range(1 << len(pairs)):
            arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            yield make_digraph(n, arcs)


def _canonical(g: Digraph) -> tuple:
    """Minimum relabelled arc tuple over all vertex permutations (tiny n only)."""
    best = None
    for perm in permutations(range(g.n)):
        arcs = tuple(sorted((perm[u], perm[v]) for u, v in g.arcs))
        if best is None or arcs < best:
            best = arcs
    return (g.n, best)


def _prufer_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of all labelled trees on n vertices."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in iter_product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        avail = sorted(range(n))
        seq_list = list(seq)
        for x in seq_list:
            leaf = next(v for v in avail if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
            avail.remove(leaf)
        last = [v for v in range(n) if degree[v] == 1]
        edges.append((last[0], last[1]))
        yield edges


def oriented_trees(max_arcs: int) -> list[Digraph]:
    """All oriented trees with at most max_arcs arcs, up to isomorphism."""
    seen = set()
    out = []
    for m in range(max_arcs + 1):
        for edges in _prufer_trees(m + 1):
            for mask in range(1 << m):
                arcs = [
                    (u, v) if not mask >> i & 1 else (v, u)
                    for i, (u, v) in enumerate(edges)
                ]
                t = make_digraph(m + 1, arcs)
                key = _canonical(t)
                if key not in seen:
                    seen.add(key)
                    out.append(t)
    return out


# --- interleaving bounds ------------------------------------------------------


def verify_gencol(g: Digraph, k: int = 2) -> VerifyReport:
    """Chromatic sandwich for the k-tuple adjoint, with both witness maps.

    Checks chi(iterated arc graph, 2k-2 times) <= chi(k-tuple adjoint)
    <= chi(g), validating the even-coordinate projection into the adjoint and
    the first-coordinate projection out of it.
    """
    t0 = time.perf_counter()
    params = {"graph": to_json_dict(g), "k": k}
    m = 2 * k - 2
    if m == 0:
        delta = g
        chains: Sequence[tuple[int, ...]] = [(v,) for v in range(g.n)]
    else:
        delta = arc_graph_iter(g, m)
        chains = delta.labels or []
    iota = interleaved_adjoint(g, k)
    chi_delta = chromatic_number(delta).chi
    chi_iota = chromatic_number(iota).chi
    chi_g = chromatic_number(g).chi
    sandwich = chi_delta <= chi_iota <= chi_g

    rank = {lab: i for i, lab in enumerate(iota.labels)}
    phi = Hom(tuple(rank[chain[0::2]] for chain in chains))
    phi_ok = validate_hom(phi, delta, iota)
    psi = Hom(tuple(lab[0] for lab in iota.labels))
    psi_ok = validate_hom(psi, iota, g)

    verdict = PASS if sandwich and phi_ok and psi_ok else FAIL
    witnesses = {
        "chi_delta_iter": chi_delta,
        "chi_adjoint": chi_iota,
        "chi_g": chi_g,
        "sandwich": sandwich,
        "even_projection_map": _hom_json(phi),
        "even_projection_valid": phi_ok,
        "first_coordinate_map": _hom_json(psi),
        "first_coordinate_valid": psi_ok,
        "lower_tight": chi_delta == chi_iota,
        "upper_tight": chi_iota == chi_g,
    }
    return _finish("gencol", params, verdict, witnesses, None, t0)


def verify_gencol_sweep(
    samples: int = 100,
    max_vertices: int = 5,
    k: int = 2,
    seed: int = 20103,
) -> VerifyReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        n = rng.randint(1, max_vertices)
        g = random_digraph(rng, n, rng.uniform(0.15, 0.6))
        rep = verify_gencol(g, k)
        if not rep.passed:
            failures.append({"index": i, "graph": to_json_dict(g), "witnesses": rep.witnesses})
    params = {"samples": samples, "max_vertices": max_vertices, "k": k}
    witnesses = {"checked": samples, "failures": failures}
    return _finish("gencol-sweep", params, PASS if not failures else FAIL, witnesses, seed, t0)


def verify_gencol_tightness() -> VerifyReport:
    """Both ends of the sandwich are attained: symmetric graphs upstairs,
    arc graphs downstairs."""
    t0 = time.perf_counter()
    sym_case = verify_gencol(complete(3), k=2)
    upper_ok = sym_case.passed and sym_case.witnesses["upper_tight"]
    diag = Hom(tuple(u * 3 + u for u in range(3)))
    diag_ok = validate_hom(diag, complete(3), interleaved_adjoint(complete(3), 2))

    low_graph = arc_graph(complete(4))
    low_case = verify_gencol(low_graph, k=2)
    lower_ok = low_case.passed and low_case.witnesses["lower_tight"]

    verdict = PASS if upper_ok and diag_ok and lower_ok else FAIL
    witnesses = {
        "symmetric_case": sym_case.witnesses,
        "diagonal_hom_valid": diag_ok,
        "arc_graph_case": low_case.witnesses,
    }
    return _finish("gencol-tightness", {"k": 2}, verdict, witnesses, None, t0)


# --- adjoint pair -------------------------------------------------------------


def verify_adjunction(g: Digraph, h: Digraph, k: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Hom into the k-tuple adjoint of h agrees with hom out of the k-copy
    expansion of g, and each witness converts to the other side."""
    t0 = time.perf_counter()
    params = {"source": to_json_dict(g), "target": to_json_dict(h), "k": k}
    iota_h = interleaved_adjoint(h, k)
    istar_g = inverse_interleaved_adjoint(g, k)
    r1 = hom_exists(g, iota_h, budget)
    r2 = hom_exists(istar_g, h, budget)
    if r1 is BUDGET_EXCEEDED or r2 is BUDGET_EXCEEDED:
        return _finish("adjunction", params, INDETERMINATE, {"budget": budget}, None, t0)

    agree = (r1 is not None) == (r2 is not None)
    witnesses: dict = {"into_adjoint": r1 is not None, "out_of_expansion": r2 is not None}
    ok = agree
    if r1 is not None:
        converted = [0] * istar_g.n
        for u in range(g.n):
            coords = iota_h.labels[r1.map[u]]
            for i in range(k):
                converted[u * k + i] = coords[i]
        conv1 = Hom(tuple(converted))
        witnesses["split_witness_valid"] = validate_hom(conv1, istar_g, h)
        witnesses["hom_into_adjoint"] = _hom_json(r1)
        ok = ok and witnesses["split_witness_valid"]
    if r2 is not None:
        rank = {lab: i for i, lab in enumerate(iota_h.labels)}
        conv2 = Hom(tuple(rank[tuple(r2.map[u * k + i] for i in range(k))] for u in range(g.n)))
        witnesses["bundle_witness_valid"] = validate_hom(conv2, g, iota_h)
        witnesses["hom_out_of_expansion"] = _hom_json(r2)
        ok = ok and witnesses["bundle_witness_valid"]
    return _finish("adjunction", params, PASS if ok else FAIL, witnesses, None, t0)


def verify_adjunction_sweep(
    samples: int = 200,
    max_vertices: int = 4,
    max_k: int = 3,
    seed: int = 20104,
    budget: int = DEFAULT_BUDGET,
) -> VerifyReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    indeterminate = 0
    for i in range(samples):
        g = random_digraph(rng, rng.randint(1, max_vertices), rng.uniform(0.15, 0.7))
        h = random_digraph(rng, rng.randint(1, max_vertices), rng.uniform(0.15, 0.7))
        k = rng.randint(1, max_k)
        rep = verify_adjunction(g, h, k, budget)
        if rep.verdict == INDETERMINATE:
            indeterminate += 1
        elif not rep.passed:
            failures.append({"index": i, "params": rep.params, "witnesses": rep.witnesses})
    params = {"samples": samples, "max_vertices": max_vertices, "max_k": max_k}
    witnesses = {"checked": samples, "failures": failures, "indeterminate": indeterminate}
    verdict = FAIL if failures else (INDETERMINATE if indeterminate else PASS)
    return _finish("adjunction-sweep", params, verdict, witnesses, seed, t0)


# --- finite obstruction sets --------------------------------------------------


def _finobs_lift(p: OrientedPath, phi: Hom, g: Digraph, k: int) -> bool:
    """Rebuild the copy-level lift: vertex i of the standard path goes to copy
    f(i) of phi(i), where f starts at 1 and steps up on each backward arc."""
    levels = [1]
    for c in p.dirs:
        levels.append(levels[-1] + (0 if c == "+" else 1))
    if max(levels) > k:
        return False
    istar = inverse_interleaved_adjoint(g, k)
    lift = Hom(tuple(phi.map[i] * k + (levels[i] - 1) for i in range(p.n_vertices)))
    return validate_hom(lift, path(p.n_arcs), istar)


def verify_finobs(g: Digraph, n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """No-hom into the adjoint of the n-tournament iff some path with < k
    reversals maps into g; a found path is lifted back as a sanity check."""
    t0 = time.perf_counter()
    params = {"graph": to_json_dict(g), "n": n, "k": k}
    target = interleaved_adjoint(tournament(n), k)
    r = hom_exists(g, target, budget)
    if r is BUDGET_EXCEEDED:
        return _finish("finobs", params, INDETERMINATE, {"budget": budget}, None, t0)
    no_hom_to_adjoint = r is None

    family = path_family(n, k - 1)
    found = None
    for idx, p in enumerate(family.members):
        w = hom_exists(p.as_digraph(), g, budget)
        if w is BUDGET_EXCEEDED:
            return _finish("finobs", params, INDETERMINATE, {"budget": budget}, None, t0)
        if w is not None:
            found = (idx, p, w)
            break
    some_path_maps = found is not None

    witnesses: dict = {
        "no_hom_to_adjoint": no_hom_to_adjoint,
        "obstruction_found": some_path_maps,
    }
    ok = no_hom_to_adjoint == some_path_maps
    if found is not None:
        idx, p, w = found
        witnesses["path"] = p.dirs
        witnesses["path_hom"] = _hom_json(w)
        witnesses["lift_valid"] = _finobs_lift(p, w, g, k)
        ok = ok and witnesses["lift_valid"]
    if r is not None:
        witnesses["hom_to_adjoint"] = _hom_json(r)
    return _finish("finobs", params, PASS if ok else FAIL, witnesses, None, t0)


def verify_finobs_exhaustive(
    n: int, k: int, max_vertices: int = 3, budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for g in all_digraphs(max_vertices, loops=True):
        rep = verify_finobs(g, n, k, budget)
        checked += 1
        if not rep.passed:
            failures.append({"graph": to_json_dict(g), "witnesses": rep.witnesses})
    params = {"n": n, "k": k, "max_vertices": max_vertices}
    witnesses = {"checked": checked, "failures": failures}
    return _finish("finobs-exhaustive", params, PASS if not failures else FAIL, witnesses, None, t0)


def verify_minty(g: Digraph, c: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Any digraph needing more than c colours receives a path with at most
    k-1 reversals out of the ck-arc family."""
    t0 = time.perf_counter()
    chi = chromatic_number(g).chi
    if chi is None or chi <= c:
        raise ValueError(f"hypothesis needs chi(g) > c, got chi={chi}, c={c}")
    params = {"graph": to_json_dict(g), "c": c, "k": k, "chi": chi}
    family = path_family(c * k, k - 1)
    for p in family.members:
        w = hom_exists(p.as_digraph(), g, budget)
        if w is BUDGET_EXCEEDED:
            return _finish("minty", params, INDETERMINATE, {"budget": budget}, None, t0)
        if w is not None:
            witnesses = {"path": p.dirs, "path_hom": _hom_json(w)}
            return _finish("minty", params, PASS, witnesses, None, t0)
    return _finish("minty", params, FAIL, {"family_size": len(family)}, None, t0)


# --- tree duality -------------------------------------------------------------


def verify_duality_tree(
    t: Digraph, sources: Iterable[Digraph], budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """hom(G, dual(T)) iff not hom(T, G), over the given source sample."""
    t0 = time.perf_counter()
    dual = tree_dual(t)
    params = {"tree": to_json_dict(t), "dual_vertices": dual.n}
    failures = []
    checked = 0
    for g in sources:
        a = hom_exists(g, dual, budget)
        b = hom_exists(t, g, budget)
        if a is BUDGET_EXCEEDED or b is BUDGET_EXCEEDED:
            return _finish("duality-tree", params, INDETERMINATE, {"budget": budget}, None, t0)
        checked += 1
        if (a is not None) != (b is None):
            failures.append(
                {
                    "graph": to_json_dict(g),
                    "hom_to_dual": a is not None,
                    "tree_maps_in": b is not None,
                }
            )
    witnesses = {"checked": checked, "failures": failures}
    return _finish("duality-tree", params, PASS if not failures else FAIL, witnesses, None, t0)


def verify_duality_tree_exhaustive(
    max_tree_arcs: int = 4, max_source_vertices: int = 3, budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """Duality over every oriented tree (up to isomorphism) and every source
    digraph within the given sizes."""
    t0 = time.perf_counter()
    sources = list(all_digraphs(max_source_vertices, loops=True))
    failures = []
    trees = oriented_trees(max_tree_arcs)
    for t in trees:
        rep = verify_duality_tree(t, sources, budget)
        if rep.verdict == INDETERMINATE:
            return _finish(
                "duality-tree-exhaustive",
                {"max_tree_arcs": max_tree_arcs},
                INDETERMINATE,
                {"budget": budget},
                None,
                t0,
            )
        if not rep.passed:
            failures.append({"tree": to_json_dict(t), "witnesses": rep.witnesses})
    params = {
        "max_tree_arcs": max_tree_arcs,
        "max_source_vertices": max_source_vertices,
        "trees": len(trees),
        "sources": len(sources),
    }
    witnesses = {"failures": failures}
    return _finish(
        "duality-tree-exhaustive", params, PASS if not failures else FAIL, witnesses, None, t0
    )


def verify_inadprod(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """The adjoint of the n-tournament is hom-equivalent to the product of the
    duals of its obstruction paths.

    Direction into the product is checked factor by factor; the converse is
    certified by exhibiting, for every family member Q, a member P mapping
    into Q (so no obstruction embeds in the product, which forces the hom).
    The product itself is never materialized.
    """
    t0 = time.perf_counter()
    params = {"n": n, "k": k}
    iota = interleaved_adjoint(tournament(n), k)
    family = path_family(n, k - 1)
    duals = [tree_dual(p.as_digraph()) for p in family.members]

    into = []
    for p, dual in zip(family.members, duals):
        w = hom_exists(iota, dual, budget)
        if w is BUDGET_EXCEEDED:
            return _finish("inadprod", params, INDETERMINATE, {"budget": budget}, None, t0)
        if w is None:
            witnesses = {"missing_factor": p.dirs}
            return _finish("inadprod", params, FAIL, witnesses, None, t0)
        into.append({"factor": p.dirs, "hom": _hom_json(w)})

    covers = []
    for q in family.members:
        qd = q.as_digraph()
        hit = None
        for p in family.members:
            w = hom_exists(p.as_digraph(), qd, budget)
            if w is BUDGET_EXCEEDED:
                return _finish("inadprod", params, INDETERMINATE, {"budget": budget}, None, t0)
            if w is not None:
                hit = {"obstruction": q.dirs, "mapped_path": p.dirs, "hom": _hom_json(w)}
                break
        if hit is None:
            return _finish("inadprod", params, FAIL, {"uncovered": q.dirs}, None, t0)
        covers.append(hit)
    witnesses = {"into_factors": into, "obstruction_covers": covers}
    return _finish("inadprod", params, PASS, witnesses, None, t0)


# --- paths, products, algebraic length ----------------------------------------


def verify_mulpath(factors: Sequence[Digraph], n: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """A product maps to the n-arc forward path iff one factor does."""
    t0 = time.perf_counter()
    params = {"factors": [to_json_dict(f) for f in factors], "n": n}
    spec = categorical_product(factors)
    try:
        prod = spec.materialize()
    except SizeLimitExceeded as e:
        return _finish("mulpath", params, INDETERMINATE, {"guard": str(e)}, None, t0)
    target = path(n)
    lhs = hom_exists(prod, target, budget)
    rhs = [hom_exists(f, target, budget) for f in factors]
    if lhs is BUDGET_EXCEEDED or any(r is BUDGET_EXCEEDED for r in rhs):
        return _finish("mulpath", params, INDETERMINATE, {"budget": budget}, None, t0)
    product_maps = lhs is not None
    factor_maps = [r is not None for r in rhs]
    verdict = PASS if product_maps == any(factor_maps) else FAIL
    witnesses = {"product_maps": product_maps, "factor_maps": factor_maps}
    if lhs is not None:
        witnesses["product_hom"] = _hom_json(lhs)
    return _finish("mulpath", params, verdict, witnesses, None, t0)


def verify_mulpath_sweep(
    samples: int = 50,
    max_vertices: int = 4,
    max_n: int = 3,
    seed: int = 20108,
    budget: int = DEFAULT_BUDGET,
) -> VerifyReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        g1 = random_digraph(rng, rng.randint(1, max_vertices), rng.uniform(0.2, 0.7))
        g2 = random_digraph(rng, rng.randint(1, max_vertices), rng.uniform(0.2, 0.7))
        n = rng.randint(1, max_n)
        rep = verify_mulpath([g1, g2], n, budget)
        if not rep.passed:
            failures.append({"index": i, "params": rep.params, "witnesses": rep.witnesses})
    params = {"samples": samples, "max_vertices": max_vertices, "max_n": max_n}
    witnesses = {"checked": samples, "failures": failures}
    return _finish("mulpath-sweep", params, PASS if not failures else FAIL, witnesses, seed, t0)


def verify_hompath(g: Digraph, n: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """g maps to the n-arc forward path iff no oriented path of span n+1 maps
    into g; the path side runs as a layered walk search, which never needs
    more than |V|*(n+2) arcs."""
    t0 = time.perf_counter()
    params = {"graph": to_json_dict(g), "n": n}
    r = hom_exists(g, path(n), budget)
    if r is BUDGET_EXCEEDED:
        return _finish("hompath", params, INDETERMINATE, {"budget": budget}, None, t0)
    walk = find_level_walk(g.n, g.arcs, n + 1)
    witnesses: dict = {"maps_to_path": r is not None, "steep_path_found": walk is not None}
    ok = (r is not None) == (walk is None)
    if walk is not None:
        p = OrientedPath(walk.dirs)
        witnesses["witness_path"] = walk.dirs
        witnesses["witness_hom"] = list(walk.nodes)
        witnesses["witness_valid"] = (
            p.algebraic_length() == n + 1
            and p.n_arcs <= g.n * (n + 2)
            and validate_hom(Hom(walk.nodes), p.as_digraph(), g)
        )
        ok = ok and witnesses["witness_valid"]
    if r is not None:
        witnesses["hom_to_path"] = _hom_json(r)
    return _finish("hompath", params, PASS if ok else FAIL, witnesses, None, t0)


def verify_hompath_sweep(
    samples: int = 50,
    max_vertices: int = 4,
    max_n: int = 3,
    seed: int = 20109,
    budget: int = DEFAULT_BUDGET,
) -> VerifyReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        g = random_digraph(rng, rng.randint(1, max_vertices), rng.uniform(0.2, 0.7))
        n = rng.randint(1, max_n)
        rep = verify_hompath(g, n, budget)
        if not rep.passed:
            failures.append({"index": i, "params": rep.params, "witnesses": rep.witnesses})
    params = {"samples": samples, "max_vertices": max_vertices, "max_n": max_n}
    witnesses = {"checked": samples, "failures": failures}
    return _finish("hompath-sweep", params, PASS if not failures else FAIL, witnesses, seed, t0)


# --- steep paths ---------------------------------------------------------------


@dataclass
class SteepPathResult:
    """A path of prescribed level span mapping into every member of the
    bounded-reversal family it was searched against."""

    ell: int
    path: OrientedPath
    family: tuple[OrientedPath, ...]
    factor_homs: tuple[Hom, ...]
    walk_tuples: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def n_arcs(self) -> int:
        return self.path.n_arcs


def find_steep_path(ell: int) -> SteepPathResult:
    """Construct a path of span ell mapping into every path of the
    (3k, k-1)-reversal family, k = ell - 2.

    For ell <= 3 the all-forward path works.  ell = 4 runs a BFS over the
    implicit product of the 7 family members; ell >= 5 is refused (state
    space too large).  An empty search would contradict the duality analysis
    and raises loudly.
    """
    if ell < 1:
        raise ValueError("span must be >= 1")
    if ell > MAX_STEEP_SPAN:
        raise SizeLimitExceeded("find_steep_path", ell, MAX_STEEP_SPAN)
    if ell <= 2:
        return SteepPathResult(ell, standard_path(ell), (), ())
    k = ell - 2
    family = path_family(3 * k, k - 1)
    factors = [p.as_digraph() for p in family.members]
    q: OrientedPath
    if ell == 3:
        q = standard_path(3)
        homs = []
        for f in factors:
            w = hom_exists(q.as_digraph(), f)
            assert isinstance(w, Hom)
            homs.append(w)
        return SteepPathResult(ell, q, tuple(family.members), tuple(homs))

    spec = categorical_product(factors)
    arcs = ((spec.index_of(u), spec.index_of(v)) for u, v in spec.arcs_iter())
    walk = find_level_walk(spec.num_vertices, arcs, ell)
    if walk is None:
        raise RuntimeError(
            "no steep walk found in the obstruction-family product; "
            "this contradicts the duality analysis"
        )
    q = OrientedPath(walk.dirs)
    assert q.algebraic_length() == ell
    tuples = tuple(spec.tuple_of(s) for s in walk.nodes)
    homs = []
    for c, f in enumerate(factors):
        h = Hom(tuple(t[c] for t in tuples))
        assert validate_hom(h, q.as_digraph(), f)
        homs.append(h)
    return SteepPathResult(ell, q, tuple(family.members), tuple(homs), tuples)


def verify_steep_path(
    ell: int = 4,
    consequence_samples: int = 20,
    seed: int = 20107,
    budget: int = DEFAULT_BUDGET,
) -> VerifyReport:
    """Find the steep path, validate its family homs and span, and check it
    maps into sample digraphs of chromatic number >= 4."""
    t0 = time.perf_counter()
    params = {"ell": ell, "consequence_samples": consequence_samples}
    result = find_steep_path(ell)
    q = result.path
    qd = q.as_digraph()
    checks = {
        "span": q.algebraic_length() == ell,
        "family_homs": len(result.factor_homs) == len(result.family)
        and all(
            validate_hom(h, qd, p.as_digraph())
            for h, p in zip(result.factor_homs, result.family)
        ),
        "no_hom_to_shorter_path": hom_exists(qd, path(ell - 1), budget) is None,
    }
    witnesses: dict = {
        "path": q.dirs,
        "n_arcs": result.n_arcs,
        "checks": checks,
    }
    ok = all(checks.values())

    if consequence_samples > 0:
        targets = [("K_4", complete(4)), ("T_4", tournament(4))]
        rng = random.Random(seed)
        found = 0
        while found < consequence_samples:
            g = random_digraph(rng, 8, 0.55)
            chi = chromatic_number(g).chi
            if chi is not None and chi >= 4:
                targets.append((f"random[{found}]", g))
                found += 1
        outcomes = []
        for name, g in targets:
            w = hom_exists(qd, g, budget)
            if w is BUDGET_EXCEEDED:
                return _finish("steep-path", params, INDETERMINATE, {"budget": budget}, seed, t0)
            outcomes.append({"target": name, "hom_found": w is not None})
            ok = ok and w is not None
        witnesses["consequence"] = outcomes
    return _finish("steep-path", params, PASS if ok else FAIL, witnesses, seed, t0)


def verify_steep_consequence(
    result: SteepPathResult, graphs: Sequence[Digraph], budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """The steep path maps into every supplied digraph of chromatic number
    >= 4 (lower-chromatic inputs are skipped: the claim says nothing there)."""
    t0 = time.perf_counter()
    qd = result.path.as_digraph()
    params = {"ell": result.ell, "graphs": len(graphs)}
    outcomes = []
    ok = True
    for g in graphs:
        chi = chromatic_number(g).chi
        if chi is None or chi < 4:
            outcomes.append({"graph": to_json_dict(g), "skipped": True, "chi": chi})
            continue
        w = hom_exists(qd, g, budget)
        if w is BUDGET_EXCEEDED:
            return _finish("steep-consequence", params, INDETERMINATE, {"budget": budget}, None, t0)
        outcomes.append({"graph": to_json_dict(g), "chi": chi, "hom_found": w is not None})
        ok = ok and w is not None
    return _finish("steep-consequence", params, PASS if ok else FAIL, {"outcomes": outcomes}, None, t0)


# --- multifactor probe ---------------------------------------------------------


@dataclass
class HFunctionResult:
    k: int
    value: int
    argmin: OrientedPath
    rows: tuple[dict, ...] = field(repr=False)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "value": self.value,
            "argmin": self.argmin.dirs,
            "table": list(self.rows),
        }


def h_function(k: int, budget: int = DEFAULT_BUDGET) -> HFunctionResult:
    """Minimum dual chromatic number over the (3k, k-1)-reversal family.

    Every row's chromatic number is cross-checked by a hom decision into the
    complete graph of that order and a refusal one order below.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_H_K:
        raise SizeLimitExceeded("h_function", k, MAX_H_K)
    family = path_family(3 * k, k - 1)
    rows = []
    best: Optional[tuple[int, OrientedPath]] = None
    for p in family.members:
        dual = tree_dual(p.as_digraph())
        res = chromatic_number(dual)
        assert res.chi is not None
        up = hom_exists(dual, complete(res.chi), budget)
        down = (
            hom_exists(dual, complete(res.chi - 1), budget) if res.chi >= 1 else None
        )
        cross = isinstance(up, Hom) and down is None
        rows.append(
            {
                "path": p.dirs,
                "dual_vertices": dual.n,
                "chi": res.chi,
                "cross_checked": cross,
            }
        )
        if not cross:
            raise AssertionError(f"chromatic cross-check failed for {p.dirs}")
        if best is None or res.chi < best[0]:
            best = (res.chi, p)
    assert best is not None
    return HFunctionResult(k, best[0], best[1], tuple(rows))


def verify_h_function(k: int, expected: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    t0 = time.perf_counter()
    params = {"k": k, "expected": expected}
    result = h_function(k, budget)
    ok = all(row["cross_checked"] for row in result.rows)
    ok = ok and result.value <= 3 * k
    if expected is not None:
        ok = ok and result.value == expected
    witnesses = result.to_json_dict()
    return _finish("h-function", params, PASS if ok else FAIL, witnesses, None, t0)


# --- tournament adjoint chromatic table ----------------------------------------


def verify_chick_table(max_k: int = 3, max_n: int = 8) -> VerifyReport:
    """chi of the k-tuple adjoint of the n-tournament equals ceil(n/k)."""
    t0 = time.perf_counter()
    rows = []
    failures = []
    for k in range(1, max_k + 1):
        for n in range(2 * k, max_n + 1):
            res = chromatic_number(interleaved_adjoint(tournament(n), k))
            expected = ceil(n / k)
            rows.append({"n": n, "k": k, "chi": res.chi, "expected": expected})
            if res.chi != expected:
                failures.append(rows[-1])
    params = {"max_k": max_k, "max_n": max_n}
    witnesses = {"table": rows, "failures": failures}
    return _finish("chick-table", params, PASS if not failures else FAIL, witnesses, None, t0)


def floor_sum_colouring(iota: Digraph, k: int) -> tuple[int, ...]:
    """The tuple-average colouring on the adjoint of the 3k-tournament,
    evaluated on 1-based tournament labels."""
    assert iota.labels is not None
    return tuple(sum(c + 1 for c in lab) // k % 3 for lab in iota.labels)


def verify_chi3k(k: int) -> VerifyReport:
    """The 3k-tournament adjoint: embedded 3-tournament, explicit 3-colouring,
    and exact chromatic number 3."""
    t0 = time.perf_counter()
    params = {"k": k}
    iota = interleaved_adjoint(tournament(3 * k), k)
    colours = floor_sum_colouring(iota, k)
    colouring_ok = check_colouring(iota, colours)

    rank = {lab: i for i, lab in enumerate(iota.labels)}
    triple = [rank[tuple(i - 1 + 3 * j for j in range(k))] for i in (1, 2, 3)]
    embedded = induced(iota, triple) == tournament(3)

    chi = chromatic_number(iota).chi
    verdict = PASS if colouring_ok and embedded and chi == 3 else FAIL
    witnesses = {
        "colouring": list(colours),
        "colouring_proper": colouring_ok,
        "triple": triple,
        "triple_induces_t3": embedded,
        "chi": chi,
    }
    return _finish("chi3k", params, verdict, witnesses, None, t0)


def verify_yz(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Homomorphisms both ways between the symmetrized adjoint of the
    n-tournament and the n/k circular complete graph."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k}
    b = b_graph(n, k)
    circ = circular_complete(n, k)
    r = hom_equivalent(b, circ, budget)
    if r.equivalent is None:
        return _finish("yz-both-ways", params, INDETERMINATE, {"budget": budget}, None, t0)
    witnesses = {"equivalent": r.equivalent}
    if r.forward is not None:
        witnesses["forward"] = _hom_json(r.forward)
    if r.backward is not None:
        witnesses["backward"] = _hom_json(r.backward)
    return _finish("yz-both-ways", params, PASS if r.equivalent else FAIL, witnesses, None, t0)


# --- engine self-checks ---------------------------------------------------------


def verify_oracle_equivalence(
    samples: int = 500, max_vertices: int = 4, seed: int = 20110, budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """Search engine agrees with exhaustive enumeration on random pairs."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        g = random_digraph(rng, rng.randint(0, max_vertices), rng.uniform(0.15, 0.8), loop_p=0.1)
        h = random_digraph(rng, rng.randint(0, max_vertices), rng.uniform(0.15, 0.8), loop_p=0.1)
        fast = hom_exists(g, h, budget)
        slow = brute_force_hom(g, h)
        if fast is BUDGET_EXCEEDED or (fast is not None) != (slow is not None):
            failures.append({"index": i, "g": to_json_dict(g), "h": to_json_dict(h)})
        elif fast is not None and not validate_hom(fast, g, h):
            failures.append({"index": i, "g": to_json_dict(g), "h": to_json_dict(h), "bad_witness": True})
    params = {"samples": samples, "max_vertices": max_vertices}
    witnesses = {"checked": samples, "failures": failures}
    return _finish("oracle-equivalence", params, PASS if not failures else FAIL, witnesses, seed, t0)


def verify_width1_completeness(
    max_target_n: int = 6,
    max_target_k: int = 2,
    random_sources: int = 150,
    max_source_vertices: int = 6,
    seed: int = 20111,
    budget: int = DEFAULT_BUDGET,
    brute_cap: int = 50_000,
) -> VerifyReport:
    """Arc consistency alone decides hom existence into tournament adjoints.

    Sources: every digraph with <= 2 vertices plus a seeded random sample up
    to max_source_vertices.  Ground truth is the complete backtracking search,
    re-confirmed by plain enumeration on instances small enough (brute_cap).
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    sources = list(all_digraphs(2, loops=True))
    for _ in range(random_sources):
        n = rng.randint(3, max_source_vertices)
        sources.append(random_digraph(rng, n, rng.uniform(0.1, 0.6), loop_p=0.05))
    targets = [
        interleaved_adjoint(tournament(n), k)
        for k in range(1, max_target_k + 1)
        for n in range(1, max_target_n + 1)
    ]
    failures = []
    checked = 0
    for target in targets:
        for g in sources:
            problem = HomProblem(g, target, budget=budget)
            reduced = arc_consistency(problem)
            ac_says_yes = reduced is not None
            truth = hom_exists(g, target, budget)
            if truth is BUDGET_EXCEEDED:
                return _finish(
                    "width1-completeness", {}, INDETERMINATE, {"budget": budget}, seed, t0
                )
            checked += 1
            agree = ac_says_yes == (truth is not None)
            if agree and g.n > 0 and target.n > 0 and target.n**g.n <= brute_cap:
                slow = brute_force_hom(g, target)
                agree = ac_says_yes == (slow is not None)
            if not agree:
                failures.append({"g": to_json_dict(g), "target": target.name})
    params = {
        "max_target_n": max_target_n,
        "max_target_k": max_target_k,
        "random_sources": random_sources,
        "max_source_vertices": max_source_vertices,
    }
    witnesses = {"checked": checked, "failures": failures}
    return _finish(
        "width1-completeness", params, PASS if not failures else FAIL, witnesses, seed, t0
    )


# --- batch runner ---------------------------------------------------------------

#: (job id, verifier function name, kwargs).  Job ids are unique; reports are
#: re-tagged with them so batch output is mergeable by claim.
QUICK_PROFILE: list[tuple[str, str, dict]] = [
    ("chick-table", "verify_chick_table", {"max_k": 2, "max_n": 6}),
    ("chi3k[k=1]", "verify_chi3k", {"k": 1}),
    ("chi3k[k=2]", "verify_chi3k", {"k": 2}),
    ("gencol-sweep", "verify_gencol_sweep", {"samples": 20}),
    ("gencol-tightness", "verify_gencol_tightness", {}),
    ("adjunction-sweep", "verify_adjunction_sweep", {"samples": 40}),
    ("finobs-exhaustive[n=3,k=2]", "verify_finobs_exhaustive", {"n": 3, "k": 2, "max_vertices": 2}),
    ("duality-tree-exhaustive", "verify_duality_tree_exhaustive", {"max_tree_arcs": 3, "max_source_vertices": 2}),
    ("inadprod[n=3,k=1]", "verify_inadprod", {"n": 3, "k": 1}),
    ("inadprod[n=4,k=2]", "verify_inadprod", {"n": 4, "k": 2}),
    ("mulpath-sweep", "verify_mulpath_sweep", {"samples": 20}),
    ("hompath-sweep", "verify_hompath_sweep", {"samples": 20}),
    ("yz[n=4,k=2]", "verify_yz", {"n": 4, "k": 2}),
    ("yz[n=5,k=2]", "verify_yz", {"n": 5, "k": 2}),
    ("steep-path[ell=3]", "verify_steep_path", {"ell": 3, "consequence_samples": 3}),
    ("h-function[k=1]", "verify_h_function", {"k": 1, "expected": 3}),
    ("oracle-equivalence", "verify_oracle_equivalence", {"samples": 100}),
    ("width1-completeness", "verify_width1_completeness", {"random_sources": 30, "max_source_vertices": 4}),
]

FULL_PROFILE: list[tuple[str, str, dict]] = [
    ("chick-table", "verify_chick_table", {"max_k": 3, "max_n": 8}),
    ("chi3k[k=1]", "verify_chi3k", {"k": 1}),
    ("chi3k[k=2]", "verify_chi3k", {"k": 2}),
    ("chi3k[k=3]", "verify_chi3k", {"k": 3}),
    ("gencol-sweep", "verify_gencol_sweep", {"samples": 100}),
    ("gencol-tightness", "verify_gencol_tightness", {}),
    ("adjunction-sweep", "verify_adjunction_sweep", {"samples": 200}),
    ("finobs-exhaustive[n=3,k=2]", "verify_finobs_exhaustive", {"n": 3, "k": 2}),
    ("finobs-exhaustive[n=4,k=2]", "verify_finobs_exhaustive", {"n": 4, "k": 2}),
    ("duality-tree-exhaustive", "verify_duality_tree_exhaustive", {}),
    ("inadprod[n=3,k=1]", "verify_inadprod", {"n": 3, "k": 1}),
    ("inadprod[n=4,k=2]", "verify_inadprod", {"n": 4, "k": 2}),
    ("mulpath-sweep", "verify_mulpath_sweep", {"samples": 50}),
    ("hompath-sweep", "verify_hompath_sweep", {"samples": 50}),
    ("yz[n=4,k=2]", "verify_yz", {"n": 4, "k": 2}),
    ("yz[n=5,k=2]", "verify_yz", {"n": 5, "k": 2}),
    ("yz[n=6,k=2]", "verify_yz", {"n": 6, "k": 2}),
    ("yz[n=6,k=3]", "verify_yz", {"n": 6, "k": 3}),
    ("steep-path[ell=4]", "verify_steep_path", {"ell": 4, "consequence_samples": 20}),
    ("h-function[k=1]", "verify_h_function", {"k": 1, "expected": 3}),
    ("h-function[k=2]", "verify_h_function", {"k": 2}),
    ("oracle-equivalence", "verify_oracle_equivalence", {"samples": 500}),
    ("width1-completeness", "verify_width1_completeness", {}),
]

PROFILES = {"quick": QUICK_PROFILE, "full": FULL_PROFILE}


def run_job(spec: tuple[str, str, dict]) -> VerifyReport:
    """Run one registry job; the report is re-tagged with the job id."""
    job_id, func_name, kwargs = spec
    fn = globals()[func_name]
    try:
        report = fn(**kwargs)
    except SizeLimitExceeded as e:
        return VerifyReport(job_id, dict(kwargs), INDETERMINATE, {"guard": str(e)})
    return replace(report, claim=job_id)


def run_profile(profile: str, workers: Optional[int] = None) -> list[VerifyReport]:
    """Run a whole profile, fanning out to a process pool when workers > 1.

    Reports come back in registry order regardless of completion order.
    """
    jobs = PROFILES[profile]
    if workers is None:
        import os

        workers = min(len(jobs), os.cpu_count() or 1)
    if workers <= 1:
        return [run_job(spec) for spec in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_job, jobs))
