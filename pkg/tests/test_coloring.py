import random

import pytest

from digraphlab import (
    Hom,
    arc_graph,
    check_colouring,
    chi_bounds_arc_graph,
    chromatic_number,
    complete,
    hom_exists,
    interleaved_adjoint,
    make_digraph,
    path,
    symmetrize,
    tournament,
    tree_dual,
)
from digraphlab.verify import floor_sum_colouring, random_digraph


def test_chi_complete():
    for n in range(1, 9):
        res = chromatic_number(complete(n))
        assert res.chi == n
        assert res.lower_bound_cert is not None and len(res.lower_bound_cert) == n


def test_chi_degenerate_conventions():
    assert chromatic_number(make_digraph(0, [])).chi == 0
    assert chromatic_number(make_digraph(5, [])).chi == 1


def test_chi_rejects_loops():
    with pytest.raises(ValueError):
        chromatic_number(make_digraph(1, [(0, 0)]))


def test_chi_limit():
    res = chromatic_number(complete(5), limit=3)
    assert res.chi is None and res.exceeded_limit


def test_colouring_witness_is_proper_and_tight():
    rng = random.Random(41)
    for _ in range(25):
        g = random_digraph(rng, rng.randint(1, 6), 0.5)
        res = chromatic_number(g)
        assert check_colouring(g, res.colouring)
        assert len(set(res.colouring)) == res.chi


def test_check_colouring_constant_on_arcless():
    assert check_colouring(make_digraph(4, []), [0, 0, 0, 0])


def test_check_colouring_fails_on_loop():
    assert not check_colouring(make_digraph(1, [(0, 0)]), [0])


def test_check_colouring_length_mismatch():
    with pytest.raises(ValueError):
        check_colouring(path(1), [0])


def test_floor_sum_colouring_all_k():
    for k in (1, 2, 3):
        iota = interleaved_adjoint(tournament(3 * k), k)
        assert check_colouring(iota, floor_sum_colouring(iota, k))


def test_two_colours_never_enough_for_adjoint_of_t6():
    iota = interleaved_adjoint(tournament(6), 2)
    rng = random.Random(43)
    for _ in range(50):
        colours = [rng.randint(0, 1) for _ in range(iota.n)]
        assert not check_colouring(iota, colours)
    assert chromatic_number(iota).chi == 3


def test_chi_equals_min_hom_into_complete():
    rng = random.Random(47)
    graphs = [tournament(5), symmetrize(path(4)), tree_dual(path(3)), arc_graph(complete(3))]
    graphs += [random_digraph(rng, rng.randint(1, 6), 0.5) for _ in range(10)]
    for g in graphs:
        chi = chromatic_number(g).chi
        sym = symmetrize(g)
        by_hom = next(n for n in range(1, g.n + 1) if isinstance(hom_exists(sym, complete(n)), Hom))
        assert chi == by_hom


def test_chi_bounds_arc_graph_k2():
    rep = chi_bounds_arc_graph(complete(2))
    assert (rep.lower, rep.upper) == (1.0, 2.0)
    assert rep.actual == 2 and rep.within_bounds


def test_chi_bounds_arc_graph_k4():
    rep = chi_bounds_arc_graph(complete(4))
    assert (rep.lower, rep.upper) == (2.0, 4.0)
    assert rep.within_bounds


def test_chi_bounds_arcless():
    rep = chi_bounds_arc_graph(make_digraph(3, []))
    assert rep.actual == 0 and rep.within_bounds


def test_sandwich_on_random_graphs():
    from digraphlab import arc_graph_iter

    rng = random.Random(53)
    for _ in range(15):
        g = random_digraph(rng, rng.randint(1, 5), 0.4)
        lo = chromatic_number(arc_graph_iter(g, 2)).chi
        mid = chromatic_number(interleaved_adjoint(g, 2)).chi
        hi = chromatic_number(g).chi
        assert lo <= mid <= hi


def test_symmetric_graphs_keep_chi_under_adjoint():
    rng = random.Random(59)
    for _ in range(10):
        g = symmetrize(random_digraph(rng, rng.randint(1, 4), 0.5))
        for k in (1, 2, 3):
            assert chromatic_number(interleaved_adjoint(g, k)).chi == chromatic_number(g).chi


def test_odd_cycle_needs_three():
    c5 = symmetrize(make_digraph(5, [(i, (i + 1) % 5) for i in range(5)]))
    res = chromatic_number(c5)
    assert res.chi == 3 and res.lower_bound_cert is None
