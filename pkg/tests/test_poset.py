import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import canonical_corpus, random_corpus
from facetflag.complexes import (
    facets_to_poset,
    gen_complete_complex,
    gen_cross_polytope_solid,
    gen_cubical_grid,
    gen_hypercube_solid,
    gen_simplex,
)
from facetflag.poset import (
    BOTTOM,
    PosetError,
    PosetParseError,
    PreconditionError,
    disjoint_union,
    facets_isomorphic_as_lattices,
    format_poset,
    from_covers,
    interval,
    is_boolean_interval,
    is_pure,
    is_simple_facet,
    is_simplicial_complex,
    is_simplicial_poset,
    parse_poset,
    truncate,
)


def doubled_edge():
    return from_covers([("a", 1), ("b", 1), ("e", 2), ("f", 2)], [("a", "e"), ("b", "e"), ("a", "f"), ("b", "f")])


# construction

def test_from_covers_single_edge():
    p = from_covers([("a", 1), ("b", 1), ("e", 2)], [("a", "e"), ("b", "e")])
    assert p.max_rank == 2 and len(p) == 3
    assert p.leq("a", "e") and not p.leq("e", "a")
    assert p.leq(BOTTOM, "e")


@pytest.mark.parametrize("elements, covers", [
    ([("a", 1), ("e", 2)], [("e", "a")]),
    ([("a", 1), ("e", 3)], [("a", "e")]),
    ([("a", 1), ("a", 2)], []),
    ([("a", 1)], [("a", "zz")]),
    ([("a", 1), ("e", 2)], []),
    ([("a", 0)], []),
])
def test_from_covers_rejects(elements, covers):
    with pytest.raises(PosetError):
        from_covers(elements, covers)


def test_empty_poset():
    p = from_covers([], [])
    assert p.max_rank == 0 and len(p) == 0
    assert is_pure(p)
    assert is_simplicial_poset(p)


# closure

def _all_posets():
    return [p for _, p in canonical_corpus(120)] + [p for _, p in random_corpus(30)]


def test_closure_composition_matches_dfs():
    for p in _all_posets():
        for lo in range(1, p.max_rank + 1):
            for hi in range(lo + 1, p.max_rank + 1):
                rel = p.relation(lo, hi)
                for x in p.of_rank(lo):
                    assert rel[x] == frozenset(y for y in p.up_set(x) if p.rank(y) == hi)


def test_down_set_is_inverse_of_up_set():
    for p in _all_posets()[:20]:
        for x in p:
            for y in p.down_set(x):
                assert x in p.up_set(y)


def test_closure_transitive():
    p = gen_hypercube_solid(3)
    for x in p:
        for y in p.up_set(x):
            assert p.up_set(y) <= p.up_set(x)


# purity

def test_is_pure(complete53):
    assert is_pure(complete53)
    assert not is_pure(facets_to_poset([{1, 2}, {3}]))


# boolean intervals

def test_simplex_ideal_is_boolean():
    p = facets_to_poset(gen_simplex(3))
    top = frozenset({1, 2, 3})
    assert is_boolean_interval(p, BOTTOM, top)
    assert is_boolean_interval(p, top, top)
    assert is_boolean_interval(p, frozenset({1}), top)


def test_octahedron_vertex_upper_interval(octahedron):
    # faces of the octahedron containing +1: four edges, four triangles, plus the solid
    v = frozenset({1})
    edges = [frozenset({1, s * a}) for a in (2, 3) for s in (1, -1)]
    triangles = [frozenset({1, s * 2, t * 3}) for s in (1, -1) for t in (1, -1)]
    iv = interval(octahedron, v, "top")
    assert iv.members == frozenset([v, *edges, *triangles, "top"])
    assert len(iv.members) == 10
    assert not is_boolean_interval(octahedron, v, "top")


def test_boolean_interval_precondition(octahedron):
    with pytest.raises(PreconditionError):
        is_boolean_interval(octahedron, "top", frozenset({1}))


def test_boolean_ideals_have_expected_size():
    for p in _all_posets():
        for x in p:
            if is_boolean_interval(p, BOTTOM, x):
                iv = interval(p, BOTTOM, x)
                assert len(iv.members) == 2 ** p.rank(x)
                atoms = [z for z in iv.members if z is not BOTTOM and p.rank(z) == 1]
                assert len(atoms) == p.rank(x)


def test_diamond_with_extra_atom_not_boolean():
    # rank-2 element over three atoms
    p = from_covers([("a", 1), ("b", 1), ("c", 1), ("t", 2)], [("a", "t"), ("b", "t"), ("c", "t")])
    assert not is_boolean_interval(p, BOTTOM, "t")


# simplicial posets

def test_simplicial_classification(octahedron, cube3):
    assert is_simplicial_poset(facets_to_poset(gen_complete_complex(5, 3)))
    assert not is_simplicial_poset(cube3)
    # 8 + 12 + 6 + 1 elements below and at the top
    assert len(interval(cube3, BOTTOM, "***").members) - 1 == 27
    assert not is_simplicial_poset(octahedron)
    assert is_simplicial_poset(truncate(octahedron, 3))


def test_doubled_edge_is_simplicial_poset_not_complex():
    p = doubled_edge()
    assert is_simplicial_poset(p)
    assert not is_simplicial_complex(p)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.frozensets(st.integers(1, 7), min_size=1, max_size=4), min_size=1, max_size=6))
def test_facet_lists_give_simplicial_complexes(facets):
    p = facets_to_poset(facets)
    assert is_simplicial_poset(p)
    assert is_simplicial_complex(p)


# simple facets

def test_simple_facets(octahedron):
    for d in range(1, 5):
        assert is_simple_facet(gen_hypercube_solid(d), "*" * d)
    assert not is_simple_facet(octahedron, "top")
    simplex = facets_to_poset(gen_simplex(4))
    assert is_simple_facet(simplex, frozenset({1, 2, 3, 4}))


def test_cross_polygons_are_simple():
    # every polygon is simple; the square is also the 2-cube
    assert is_simple_facet(gen_cross_polytope_solid(2), "top")


def test_simple_facet_precondition(cube3):
    with pytest.raises(PreconditionError):
        is_simple_facet(cube3, "0**")


# facet isomorphism

def test_facets_isomorphic():
    assert facets_isomorphic_as_lattices(gen_cubical_grid((2, 1, 1)))
    assert facets_isomorphic_as_lattices(gen_hypercube_solid(3))
    mixed = disjoint_union(gen_hypercube_solid(3), facets_to_poset(gen_simplex(4)))
    assert mixed.max_rank == 4 and is_pure(mixed)
    assert not facets_isomorphic_as_lattices(mixed)


def test_isomorphism_ignores_labels():
    # the square built as a 2-cube and as a 2-cross-polytope
    p = disjoint_union(gen_hypercube_solid(2), gen_cross_polytope_solid(2))
    assert facets_isomorphic_as_lattices(p)
    q = disjoint_union(gen_hypercube_solid(2), facets_to_poset(gen_simplex(3)))
    assert not facets_isomorphic_as_lattices(q)


# text format

def test_poset_roundtrip(octahedron):
    text = format_poset(octahedron)
    again = parse_poset(text)
    assert format_poset(again) == text
    assert len(again) == len(octahedron)


def test_parse_poset_errors():
    with pytest.raises(PosetParseError) as e:
        parse_poset("elem a 1\nelem t 3\ncover a t\n")
    assert e.value.line == 3
    with pytest.raises(PosetParseError) as e:
        parse_poset("# hi\nelem a x\n")
    assert e.value.line == 2
    with pytest.raises(PosetParseError):
        parse_poset("vertex a\n")
    with pytest.raises(PosetParseError):
        parse_poset("elem a 1\nelem a 1\n")


def test_parse_poset_comments_and_blank():
    p = parse_poset("# edge\n\nelem a 1\nelem b 1\nelem e 2\ncover a e\ncover b e\n")
    assert p.max_rank == 2
    assert parse_poset("").max_rank == 0
