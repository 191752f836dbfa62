import pytest

from doublepoints.algebra.poly_core import PolyRing
from doublepoints.curves.rational_curves import PlaneParameterization
from doublepoints.curves.xk_schemes import (build_Mk, classify_all_singularities, cusp_conic, x2_census,
                                            x2_point_to_image, xk_ideal, xk_is_empty, xk_variables)
from doublepoints.errors import InputError

CUSPIDAL_CUBIC = 's^2*t; s^3; t^3'
NODAL_CUBIC = 's^2*t - t^3; s^3 - s*t^2; t^3'
# y^4 = x^3 z: a triple point at [0:0:1]
TRIPLE_POINT_QUARTIC = 's^4; s^3*t; t^4'


def parameterization(text):
    return PlaneParameterization.parse(text)


def test_xk_variables():
    assert xk_variables(2) == ('x', 'y', 'z')
    assert xk_variables(3) == ('x0', 'x1', 'x2', 'x3')


def test_cusp_conic(plane):
    assert cusp_conic(plane) == plane.parse('y^2 - 4*x*z')


def test_build_m2_shape():
    mk = build_Mk(parameterization(NODAL_CUBIC), 2)
    assert (mk.matrix.rows, mk.matrix.cols) == (5, 4)
    assert mk.minor_size == 4
    x, y, z = mk.ring.gens()
    assert mk.matrix.row(0) == [x, y, z, mk.ring.zero()]
    assert [entry.constant_value() for entry in mk.matrix.row(2)] == [0, 1, 0, -1]
    with pytest.raises(InputError):
        build_Mk(parameterization('s^2; s*t; t^2'), 2)
    with pytest.raises(InputError):
        build_Mk(parameterization(NODAL_CUBIC), 3)


def test_x2_of_nodal_cubic_is_the_node(plane):
    ideal = xk_ideal(parameterization(NODAL_CUBIC), 2)
    assert ideal.contains(plane.parse('y'))
    assert ideal.contains(plane.parse('x + z'))


def test_x2_point_to_image():
    p = parameterization(NODAL_CUBIC)
    assert x2_point_to_image(p, [1, 0, -1]) == [0, 0, 1]
    with pytest.raises(InputError):
        x2_point_to_image(p, [1, 1, 0])
    with pytest.raises(InputError):
        x2_point_to_image(p, [0, 0, 0])


def test_x3_detects_triple_points():
    assert not xk_is_empty(parameterization(TRIPLE_POINT_QUARTIC), 3)
    assert not xk_is_empty(parameterization(NODAL_CUBIC), 2)


def test_census_of_cuspidal_cubic(rng):
    census = x2_census(parameterization(CUSPIDAL_CUBIC), rng)
    assert census.x2_length == 1
    assert census.length_law_holds
    assert census.support_size == 1
    assert not census.cusp_free
    point = census.points[0]
    assert point.cusp
    assert point.coordinates == [1, 0, 0]
    assert point.image == [0, 0, 1]


def test_census_of_nodal_cubic(rng):
    census = classify_all_singularities(parameterization(NODAL_CUBIC), rng=rng)
    assert census.cusp_free
    assert census.labels() == {'A1': 1}
    point = census.points[0]
    assert point.coordinates == [1, 0, -1]
    assert point.consistent
    frame = census.to_frame()
    assert list(frame['label']) == ['A1']


def test_classified_cusp(rng):
    census = classify_all_singularities(parameterization(CUSPIDAL_CUBIC), rng=rng)
    assert census.labels() == {'A2': 1}
    assert census.points[0].s == 2
    assert census.equation == PolyRing(('x', 'y', 'z')).parse('x^3 - y^2*z')
    document = census.to_dict()
    assert document['length_law_holds']
    assert document['points'][0]['image'] == ['0', '0', '1']


def test_triple_point_is_left_unclassified(rng):
    census = classify_all_singularities(parameterization(TRIPLE_POINT_QUARTIC), rng=rng)
    assert census.x2_length == 3
    assert census.support_size == 1
    assert census.points[0].length == 3
    assert census.labels() == {'unclassified': 1}


def test_census_needs_degree_three():
    with pytest.raises(InputError):
        x2_census(parameterization('s^2; s*t; t^2'))


def test_census_of_tacnodal_quartic(rng):
    # the parameters (1:0) and (0:1) both map to [0:0:1] with one tangent
    p = parameterization('s^3*t + 2*s*t^3; s^2*t^2; s^4 + t^4')
    census = classify_all_singularities(p, rng=rng)
    assert census.x2_length == 3
    labels = census.labels()
    assert labels.pop('A3') == 1
    assert sum(labels.values()) == 1
    assert set(labels) <= {'A1', 'A2'}
    tacnode, = [point for point in census.points if point.label == 'A3']
    assert tacnode.coordinates == [0, 1, 0]
    assert tacnode.image == [0, 0, 1]
    assert tacnode.length == 2
