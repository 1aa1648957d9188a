from digraphlab import OrientedPath, Hom, make_digraph, path, validate_hom
from digraphlab.level_search import find_level_walk


def test_single_arc():
    w = find_level_walk(2, [(0, 1)], 1)
    assert w.dirs == "+" and w.nodes == (0, 1)


def test_needs_levels_beyond_graph():
    assert find_level_walk(4, path(3).arcs, 4) is None


def test_forward_path_exact():
    w = find_level_walk(4, path(3).arcs, 3)
    assert w.dirs == "+++" and w.nodes == (0, 1, 2, 3)


def test_directed_triangle_wraps():
    w = find_level_walk(3, [(0, 1), (1, 2), (2, 0)], 2)
    assert w.dirs == "++"
    assert w.nodes in {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def test_zigzag_has_span_one_only():
    zz = OrientedPath("+-+").as_digraph()
    assert find_level_walk(zz.n, zz.arcs, 1).dirs == "+"
    assert find_level_walk(zz.n, zz.arcs, 2) is None


def test_walk_is_a_valid_hom():
    g = make_digraph(5, [(0, 1), (1, 2), (3, 2), (3, 4), (2, 0)])
    for ell in (1, 2, 3):
        w = find_level_walk(g.n, g.arcs, ell)
        if w is None:
            continue
        p = OrientedPath(w.dirs)
        assert p.algebraic_length() == ell
        assert validate_hom(Hom(w.nodes), p.as_digraph(), g)


def test_span_zero():
    w = find_level_walk(3, [], 0)
    assert w.dirs == "" and len(w.nodes) == 1


def test_empty_graph():
    assert find_level_walk(0, [], 1) is None
    assert find_level_walk(3, [], 2) is None


def test_deterministic():
    g = make_digraph(6, [(0, 1), (1, 2), (2, 3), (4, 1), (2, 5), (5, 0)])
    runs = [find_level_walk(g.n, g.arcs, 3) for _ in range(3)]
    assert all(r == runs[0] for r in runs)


def test_prefers_plus_on_ties():
    # two shortest walks of span 1 exist; '+' must win the first symbol
    g = make_digraph(4, [(0, 1), (2, 1), (1, 3)])
    w = find_level_walk(g.n, g.arcs, 2)
    assert w.dirs == "++"
    assert w.nodes == (0, 1, 3)
