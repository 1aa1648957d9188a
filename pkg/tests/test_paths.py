from itertools import product
from math import comb

import pytest

from digraphlab import (
    ConstructionError,
    Hom,
    OrientedPath,
    algebraic_length,
    hom_exists,
    path,
    path_family,
    standard_path,
)
from digraphlab.homs import brute_force_hom


def test_parse_accepts_unicode_minus():
    p = OrientedPath.parse("++−+++")
    assert p.dirs == "++-+++"


def test_bad_symbol_rejected():
    with pytest.raises(ConstructionError):
        OrientedPath("+*")


def test_as_digraph_shape():
    p = OrientedPath("+-+")
    g = p.as_digraph()
    assert g.n == 4 and g.arcs == ((0, 1), (2, 1), (2, 3))


def test_standard_path_matches_builder():
    for n in range(5):
        assert standard_path(n).as_digraph() == path(n)


def test_levels():
    assert OrientedPath("+-+").levels() == (0, 1, 0, 1)
    assert OrientedPath("").levels() == (0,)


def test_algebraic_length_forward_paths():
    for n in range(8):
        assert algebraic_length(standard_path(n)) == n


def test_algebraic_length_zigzag():
    assert algebraic_length(OrientedPath("+-+")) == 1


def _oracle_min_target(p: OrientedPath) -> int:
    # independent route: search for an actual hom into each forward path
    for n in range(p.n_arcs + 1):
        if isinstance(hom_exists(p.as_digraph(), path(n)), Hom):
            return n
    raise AssertionError("a path always maps to the forward path of its own length")


def test_algebraic_length_agrees_with_hom_search_up_to_7_arcs():
    for m in range(8):
        for dirs in product("+-", repeat=m):
            p = OrientedPath("".join(dirs))
            assert p.algebraic_length() == _oracle_min_target(p)


def test_algebraic_length_agrees_with_enumeration_up_to_4_arcs():
    for m in range(5):
        for dirs in product("+-", repeat=m):
            p = OrientedPath("".join(dirs))
            by_enum = next(
                n for n in range(m + 1) if brute_force_hom(p.as_digraph(), path(n)) is not None
            )
            assert p.algebraic_length() == by_enum


def test_path_family_zero_reversals():
    fam = path_family(4, 0)
    assert [p.dirs for p in fam] == ["++++"]


def test_path_family_6_1():
    fam = path_family(6, 1)
    assert len(fam) == 7
    assert fam.members[0].dirs == "++++++"
    assert {p.dirs.count("-") for p in fam} == {0, 1}


def test_path_family_cardinality_formula():
    for n in range(9):
        for k in range(min(n, 3) + 1):
            fam = path_family(n, k)
            assert len(fam) == sum(comb(n, i) for i in range(k + 1))
            assert len({p.dirs for p in fam}) == len(fam)


def test_path_family_bad_params():
    with pytest.raises(ConstructionError):
        path_family(3, 4)
    with pytest.raises(ConstructionError):
        path_family(3, -1)


def test_family_members_have_large_span():
    # reversing at most k-1 arcs of the 3k-arc path keeps the span >= k+2
    for k in (1, 2, 3):
        fam = path_family(3 * k, k - 1)
        assert all(p.algebraic_length() >= k + 2 for p in fam)
