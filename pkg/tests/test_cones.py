from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from vpf.cones import Cone, dd_pair


def test_positive_orthant():
    cone = Cone.from_inequalities([(1, 0), (0, 1)], 2)
    assert cone.dim == 2
    assert sorted(cone.generators()) == [(0, 1), (1, 0)]
    assert cone.contains((3, 5))
    assert cone.contains((0, 0))
    assert not cone.contains((-1, 2))
    assert cone.contains_strictly((1, 1))
    assert not cone.contains_strictly((0, 1))


def test_redundant_inequalities_removed():
    cone = Cone.from_inequalities([(1, 0), (0, 1), (1, 1), (2, 3)], 2)
    assert len(cone.normals) == 2
    same = Cone.from_inequalities([(0, 1), (1, 0)], 2)
    assert cone == same
    assert cone.key() == same.key()


def test_halfplane_has_lineality():
    cone = Cone.from_inequalities([(1, 0, 0)], 3)
    assert cone.dim == 3
    assert len(cone.lineality) == 2
    assert cone.contains((0, -7, 9))
    assert not cone.contains((-1, 0, 0))


def test_low_dimensional_cone():
    # the ray through (1, 1) as an intersection of halfplanes
    cone = Cone.from_inequalities([(1, -1), (-1, 1), (1, 0)], 2)
    assert cone.dim == 1
    assert cone.generators() == [(1, 1)]
    assert cone.contains((2, 2))
    assert not cone.contains((1, 2))


def test_generators_roundtrip():
    gens = [(1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 1)]
    cone = Cone.from_generators(gens, 3)
    for g in gens:
        assert cone.contains(g)
    back = Cone.from_generators(cone.generators(), 3)
    assert back == cone


def test_intersection():
    a = Cone.from_inequalities([(1, 0), (0, 1)], 2)
    b = Cone.from_inequalities([(1, -1), (0, 1)], 2)
    c = a.intersect(b)
    assert c.contains((2, 1))
    assert not c.contains((1, 2))
    assert c.dim == 2


def test_facets_of_orthant():
    cone = Cone.from_inequalities([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    facets = cone.facets()
    assert len(facets) == 3
    for facet in facets:
        assert facet.dim == 2
    for nv in cone.normals:
        rays = cone.facet_rays(nv)
        assert len(rays) == 2


def test_dd_pair_simplicial():
    lineality, rays = dd_pair([(1, 0), (1, 2)], 2)
    assert not lineality
    assert len(rays) == 2
    for r in rays:
        assert Fraction(r[0]) * 1 + Fraction(r[1]) * 0 >= 0
        assert Fraction(r[0]) * 1 + Fraction(r[1]) * 2 >= 0


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4),
                          st.integers(-4, 4)),
                min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_generators_satisfy_inequalities(normals):
    cone = Cone.from_inequalities(normals, 3)
    for g in cone.generators():
        assert cone.contains(g)
    for v in cone.lineality:
        assert cone.contains(v)
        assert cone.contains(tuple(-x for x in v))
    if cone.dim == 3 and cone.generators():
        assert cone.contains_strictly(cone.interior_point())


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3),
                          st.integers(-3, 3)),
                min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_canonical_form_is_stable(normals):
    cone = Cone.from_inequalities(normals, 3)
    rebuilt = Cone.from_inequalities(list(cone.normals), 3,
                                     equations=list(cone.equations))
    assert rebuilt == cone
    assert rebuilt.key() == cone.key()
