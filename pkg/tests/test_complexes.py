import itertools
from fractions import Fraction

import pytest

from monodromy.complexes import (CubicalComplex, SimplicialComplex,
                                 build_complex, full_simplex, h1, is_flag,
                                 load_complex_file, parse_complex_spec,
                                 zero_complex)
from monodromy.fibre import betti_one, build_fibre_graph, rank_formula
from monodromy.groups import SizeLimitError, make_cyclic, make_symmetric


def cyclic(*orders):
    return tuple(make_cyclic(m) for m in orders)


def rational_rank(mat):
    """Independent rank computation with exact fractions."""
    a = [[Fraction(v) for v in row] for row in mat.entries]
    rank = 0
    for col in range(mat.cols):
        piv = next((r for r in range(rank, mat.rows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [v * inv for v in a[rank]]
        for r in range(mat.rows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * p for v, p in zip(a[r], a[rank])]
        rank += 1
    return rank


def test_simplicial_complex_faces_and_flag():
    tri = parse_complex_spec("K={1,2;2,3;1,3}")
    assert tri.n == 3
    assert tri.edges() == {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})}
    assert not tri.has_face({1, 2, 3})
    assert not is_flag(tri)
    assert is_flag(full_simplex(3))
    assert is_flag(zero_complex(4))


def test_complex_requires_all_singletons():
    with pytest.raises(ValueError):
        SimplicialComplex(3, (frozenset({1, 2}),))
    with pytest.raises(ValueError):
        SimplicialComplex(2, (frozenset({1}), frozenset({3})))


def test_parse_complex_spec_variants():
    k = parse_complex_spec("{1;2}")
    assert k.n == 2 and not k.edges()
    k = parse_complex_spec("K={1,2,3}", n=3)
    assert k.has_face({1, 2, 3})
    with pytest.raises(ValueError):
        parse_complex_spec("1,2;3")
    with pytest.raises(ValueError):
        parse_complex_spec("K={1,4}", n=3)


def test_load_complex_file(tmp_path):
    p = tmp_path / "k.txt"
    p.write_text("1,2\n2,3\n1,3\n")
    k = load_complex_file(str(p))
    assert k.edges() == parse_complex_spec("K={1,2;2,3;1,3}").edges()


def test_cell_counts_cube():
    cx = build_complex(cyclic(2, 2, 2), full_simplex(3))
    assert cx.counts == (8, 12, 6)
    cx = build_complex(cyclic(2, 3), full_simplex(2))
    assert cx.counts == (6, 7, 2)


def test_boundary_composition_zero():
    for orders, K in [((2, 3), full_simplex(2)),
                      ((2, 2, 3), parse_complex_spec("K={1,2;3}")),
                      ((3, 3, 2), full_simplex(3))]:
        cx = build_complex(cyclic(*orders), K)
        prod = cx.boundary_one() * cx.boundary_two()
        assert all(v == 0 for row in prod.entries for v in row)


def test_no_edges_reduces_to_fibre_graph():
    for orders in [(2, 3), (2, 2, 2), (3, 4), (2, 3, 4)]:
        cx = build_complex(cyclic(*orders), zero_complex(len(orders)))
        betti, torsion = h1(cx)
        assert torsion == []
        assert betti == rank_formula(orders)
        assert betti == betti_one(build_fibre_graph(cyclic(*orders)))


def test_full_simplex_is_acyclic():
    for orders in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 4)]:
        cx = build_complex(cyclic(*orders), full_simplex(len(orders)))
        assert h1(cx) == (0, [])


def test_triangle_boundary_with_involutions_is_sphere():
    # boundary of the 3-cube: second homology only
    cx = build_complex(cyclic(2, 2, 2), parse_complex_spec("K={1,2;2,3;1,3}"))
    assert h1(cx) == (0, [])


def test_one_edge_three_vertices():
    cx = build_complex(cyclic(2, 2, 2), parse_complex_spec("K={1,2;3}"))
    assert h1(cx) == (3, [])


def test_monotone_under_adding_faces():
    # filling in faces can only kill homology classes
    orders = (2, 3, 2)
    complexes = [
        zero_complex(3),
        parse_complex_spec("K={1,2;3}"),
        parse_complex_spec("K={1,2;2,3}"),
        parse_complex_spec("K={1,2;2,3;1,3}"),
        full_simplex(3),
    ]
    bettis = [h1(build_complex(cyclic(*orders), K))[0] for K in complexes]
    assert bettis == sorted(bettis, reverse=True)
    assert bettis[0] == rank_formula(orders)
    assert bettis[-1] == 0


def test_rank_agrees_with_fraction_oracle():
    for orders, K in [((2, 3), full_simplex(2)),
                      ((2, 2, 2), parse_complex_spec("K={1,2;2,3}")),
                      ((3, 3), full_simplex(2))]:
        cx = build_complex(cyclic(*orders), K)
        d1, d2 = cx.boundary_one(), cx.boundary_two()
        assert d1.rank() == rational_rank(d1)
        assert d2.rank() == rational_rank(d2)


def test_symmetric_group_factor():
    groups = (make_cyclic(2), make_symmetric(3))
    cx = build_complex(groups, full_simplex(2))
    assert h1(cx) == (0, [])
    cx = build_complex(groups, zero_complex(2))
    assert h1(cx)[0] == rank_formula([2, 6])


def test_vertex_count_mismatch_and_cap():
    with pytest.raises(ValueError):
        build_complex(cyclic(2, 2), full_simplex(3))
    with pytest.raises(SizeLimitError):
        build_complex(cyclic(30, 30, 30), full_simplex(3), cap=100)


def test_cell_cap_env_override(monkeypatch):
    monkeypatch.setenv("MONODROMY_CELL_CAP", "10")
    with pytest.raises(SizeLimitError):
        build_complex(cyclic(4, 4), full_simplex(2))
    monkeypatch.setenv("MONODROMY_CELL_CAP", "1000000")
    build_complex(cyclic(4, 4), full_simplex(2))
