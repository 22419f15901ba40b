import random
from itertools import combinations

import pytest

from oracles import components, count_complexes_brute, count_complexes_dedekind
from shadowcalc.compat import IntSeq
from shadowcalc.oracle import (
    SimplicialComplex,
    boundary_matrix,
    count_complexes,
    cycle_space_dim,
    enumerate_complexes,
    f_vector,
    from_facets,
    parse_facets,
    realize,
    reduced_betti,
    survey,
)


def boundary_of_simplex(d):
    return from_facets(d + 1, combinations(range(d + 1), d))


def test_parse_facets():
    assert parse_facets("0 1 2; 2 3") == [[0, 1, 2], [2, 3]]
    assert parse_facets(" 0 ;; 1 ") == [[0], [1]]
    with pytest.raises(ValueError, match="'x'"):
        parse_facets("0 x")


def test_from_facets_closure():
    c = from_facets(4, [[0, 1, 2], [2, 3]])
    assert f_vector(c) == IntSeq([4, 4, 1])
    assert c.dimension == 2
    assert sorted(c.facets()) == [(0, 1, 2), (2, 3)]


def test_invalid_complexes_rejected():
    with pytest.raises(ValueError):
        from_facets(3, [[0, 3]])
    with pytest.raises(ValueError):
        from_facets(3, [[]])
    with pytest.raises(ValueError):
        SimplicialComplex(3, frozenset({(0,), (0, 1)}))


@pytest.mark.parametrize(
    "complex_, betti",
    [
        (from_facets(2, [[0], [1]]), (1,)),
        (from_facets(1, [[0]]), ()),
        (from_facets(3, [[0, 1], [1, 2], [0, 2]]), (0, 1)),
        (from_facets(3, [[0, 1, 2]]), ()),
        (boundary_of_simplex(3), (0, 0, 1)),
        (boundary_of_simplex(4), (0, 0, 0, 1)),
        (from_facets(4, [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]]), (0, 2)),
    ],
)
def test_betti_examples(complex_, betti):
    assert reduced_betti(complex_).betti == IntSeq(betti)


def test_boundary_squares_to_zero():
    c = boundary_of_simplex(4)
    for k in range(1, c.dimension + 1):
        a, b = boundary_matrix(c, k - 1), boundary_matrix(c, k)
        for i in range(len(a)):
            for j in range(len(b[0])):
                assert sum(a[i][t] * b[t][j] for t in range(len(b))) == 0


def test_cycle_space_examples():
    hollow = from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert cycle_space_dim(hollow, 0) == 2
    assert cycle_space_dim(hollow, 1) == 1
    assert cycle_space_dim(hollow, 2) == 0
    assert reduced_betti(hollow).cycle_dims == (2, 1)


def test_real_projective_plane_depends_on_field():
    # six-vertex triangulation of RP^2
    rp2 = from_facets(
        6,
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
         [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5]],
    )
    assert f_vector(rp2) == IntSeq([6, 15, 10])
    assert reduced_betti(rp2, "Q").betti == IntSeq()
    assert reduced_betti(rp2, 2).betti == IntSeq([0, 1, 1])
    assert reduced_betti(rp2, "F3").betti == IntSeq()


def test_field_names():
    c = from_facets(2, [[0], [1]])
    assert reduced_betti(c, "Q").field_tag == "Q"
    assert reduced_betti(c, 2).field_tag == "F2"
    with pytest.raises(ValueError):
        reduced_betti(c, 4)


@pytest.mark.parametrize("n", range(1, 5))
def test_counts_match_brute_force(n):
    assert count_complexes(n) == count_complexes_brute(n)


def test_count_five_matches_dedekind():
    assert count_complexes(5) == count_complexes_dedekind(5) == 6894


def test_enumeration_yields_distinct_complexes():
    seen = [c.faces for c in enumerate_complexes(4)]
    assert len(seen) == len(set(seen)) == 114
    assert count_complexes(0) == 0
    with pytest.raises(ValueError):
        count_complexes(7)


def test_beta_zero_counts_components():
    for entry in survey(4):
        edges = [face for face in entry.complex.faces if len(face) == 2]
        assert entry.betti[0] == components(4, edges) - 1


def test_rational_and_mod_two_agree_on_few_vertices():
    # torsion needs at least six vertices
    rng = random.Random(3)
    entries = survey(5)
    for entry in rng.sample(entries, 300):
        assert reduced_betti(entry.complex, 2).betti == entry.betti


def test_realize():
    c = realize((3, 3), (0, 1))
    assert c is not None and reduced_betti(c).betti == IntSeq([0, 1])
    assert realize((3, 3), (1, 1)) is None
    assert realize((7,), (6,), max_vertices=5) is None
