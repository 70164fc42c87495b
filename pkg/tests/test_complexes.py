import math
from collections import Counter
from itertools import chain, combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import THREE_FACETS
from facetflag.complexes import (
    FacetList,
    facets_to_poset,
    format_facets,
    gen_complete_complex,
    gen_cross_polytope_solid,
    gen_cubical_grid,
    gen_hypercube_solid,
    gen_random_pure,
    gen_simplex,
    parse_facets,
)
from facetflag.flagdeg import f_vector
from facetflag.poset import (
    PosetParseError,
    PreconditionError,
    is_pure,
    is_simple_facet,
    is_simplicial_poset,
    truncate,
)


def faces_by_brute_force(facets):
    """Nonempty subsets of the vertex universe that sit inside some facet."""
    universe = sorted(set().union(*facets))
    subsets = chain.from_iterable(combinations(universe, r) for r in range(1, len(universe) + 1))
    faces = [frozenset(s) for s in subsets if any(set(s) <= set(f) for f in facets)]
    return Counter(len(f) for f in faces)


def test_normalize_drops_contained_and_duplicates():
    f = FacetList.normalize([{1, 2}, {1, 2, 3}, {3, 2, 1}, {4}])
    assert set(f.facets) == {frozenset({1, 2, 3}), frozenset({4})}
    assert f.vertices == {1, 2, 3, 4}
    with pytest.raises(ValueError):
        FacetList.normalize([set()])


def test_facets_to_poset_three_facets():
    p = facets_to_poset(THREE_FACETS)
    counts = faces_by_brute_force(THREE_FACETS)
    assert f_vector(p).as_tuple() == tuple(counts[r] for r in range(1, 5))
    assert f_vector(p).as_tuple() == (6, 12, 10, 3)


def test_facets_to_poset_small_cases():
    assert f_vector(facets_to_poset([{1, 2, 3}])).as_tuple() == (3, 3, 1)
    assert f_vector(facets_to_poset([{1, 2}, {2, 3}])).as_tuple() == (3, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.frozensets(st.integers(1, 7), min_size=1, max_size=4), min_size=1, max_size=6))
def test_facets_to_poset_matches_brute_force(facets):
    p = facets_to_poset(facets)
    counts = faces_by_brute_force(facets)
    assert f_vector(p).as_tuple() == tuple(counts[r] for r in range(1, max(counts) + 1))
    assert is_pure(p) == (len({len(f) for f in FacetList.normalize(facets)}) == 1)


def test_complete_complex():
    assert len(gen_complete_complex(5, 3)) == 10
    assert len(gen_complete_complex(4, 4)) == 1
    assert len(gen_complete_complex(4, 1)) == 4
    with pytest.raises(PreconditionError):
        gen_complete_complex(3, 4)
    assert gen_simplex(3).facets == (frozenset({1, 2, 3}),)


def cross_polytope_counts(d):
    # j-element faces: choose j axes and a sign for each
    return tuple(math.comb(d, j) * 2 ** j for j in range(1, d + 1)) + (1,)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_cross_polytope(d):
    p = gen_cross_polytope_solid(d)
    assert f_vector(p).as_tuple() == cross_polytope_counts(d)


def test_cross_polytope_small():
    assert f_vector(gen_cross_polytope_solid(3)).as_tuple() == (6, 12, 8, 1)
    assert f_vector(gen_cross_polytope_solid(1)).as_tuple() == (2, 1)
    assert f_vector(gen_cross_polytope_solid(2)).as_tuple() == (4, 4, 1)


def test_octahedron_structure():
    p = gen_cross_polytope_solid(3)
    assert is_simplicial_poset(truncate(p, 3))
    assert not is_simple_facet(p, "top")


def cube_counts_by_words(d):
    words = product("01*", repeat=d)
    c = Counter(w.count("*") + 1 for w in words)
    return tuple(c[r] for r in range(1, d + 2))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_hypercube(d):
    p = gen_hypercube_solid(d)
    expected = tuple(math.comb(d, j) * 2 ** (d - j) for j in range(d + 1))
    assert f_vector(p).as_tuple() == expected == cube_counts_by_words(d)
    # the words include the top; adding the implicit bottom gives 3**d + 1
    assert len(p) == 3 ** d


def test_hypercube_small():
    assert f_vector(gen_hypercube_solid(3)).as_tuple() == (8, 12, 6, 1)
    assert f_vector(gen_hypercube_solid(1)).as_tuple() == (2, 1)
    assert f_vector(gen_hypercube_solid(2)).as_tuple() == (4, 4, 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hypercube_top_is_simple(d):
    assert is_simple_facet(gen_hypercube_solid(d), "*" * d)


def test_cubical_grid_two_cubes():
    p = gen_cubical_grid((2, 1, 1))
    # 3*2*2 vertices; 20 edges; 11 squares; 2 cubes
    assert f_vector(p).as_tuple() == (12, 20, 11, 2)
    assert all(is_simple_facet(p, x) for x in p.maximal_elements())


def test_cubical_grid_single_cell_matches_cube():
    assert f_vector(gen_cubical_grid((1, 1, 1))).as_tuple() == f_vector(gen_hypercube_solid(3)).as_tuple()


def test_random_pure():
    a = gen_random_pure(6, 3, 4, seed=1)
    assert a == gen_random_pure(6, 3, 4, seed=1)
    assert len(a) == 4 and all(len(f) == 3 for f in a)
    assert set(gen_random_pure(5, 3, 10, seed=7).facets) == set(gen_complete_complex(5, 3).facets)
    single = gen_random_pure(4, 2, 1, seed=3)
    assert len(single) == 1 and len(single.facets[0]) == 2
    with pytest.raises(PreconditionError):
        gen_random_pure(4, 2, 7, seed=0)
    with pytest.raises(PreconditionError):
        gen_random_pure(4, 2, 0, seed=0)


def test_facet_text_roundtrip():
    f = parse_facets("# ex 3.3\n1 2 3 4\n1 2 4 6\n1 2 5 6  # trailing\n\n")
    assert set(f.facets) == {frozenset(x) for x in THREE_FACETS}
    assert parse_facets(format_facets(f)) == f
    assert len(parse_facets("")) == 0
    with pytest.raises(PosetParseError) as e:
        parse_facets("1 2\n3 3\n")
    assert e.value.line == 2
