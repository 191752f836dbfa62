import pytest

from doublepoints.algebra.groebner import IdealPresentation, scheme_length
from doublepoints.algebra.poly_core import PolyRing
from doublepoints.curves.rational_curves import (LinearCenter, PlaneParameterization, RationalNormalCurve,
                                                 cone_fiber_ideal, contains_linear_form, fat_line_scheme,
                                                 fiber_form, image_point, implicit_curve, implicitize,
                                                 is_curvilinear, linear_section_dimension, moment_point,
                                                 normalize_point, osculating_space_ideal, parameterization_from_center,
                                                 point_ideal, project_scheme, properness_check,
                                                 random_proper_parameterization, rnc_ideal)
from doublepoints.errors import BasePointError, InputError, ProjectionUndefined

CUSPIDAL_CUBIC = 's^2*t; s^3; t^3'
NODAL_CUBIC = 's^2*t - t^3; s^3 - s*t^2; t^3'


@pytest.fixture
def space():
    return PolyRing(tuple('abcd'))


@pytest.fixture
def point_center(space):
    # V(a, c, d) = [0:1:0:0], off the twisted cubic
    return LinearCenter.parse('a; c; d', space)


def test_rational_normal_curve(space):
    curve = RationalNormalCurve(3)
    assert curve.ring == space
    assert moment_point(3, (1, 2)) == [1, 2, 4, 8]
    assert curve.ideal() == IdealPresentation.parse(space, ['a*c - b^2', 'a*d - b*c', 'b*d - c^2'])
    params = PolyRing(('s', 't'))
    images = dict(zip(space.variables, curve.moment_forms(params)))
    assert all(g.substitute(images, params).is_zero() for g in rnc_ideal(3).generators)
    with pytest.raises(InputError):
        RationalNormalCurve(1)


def test_osculating_spaces(space):
    assert osculating_space_ideal(3, (1, 0), 1) == IdealPresentation.parse(space, ['c', 'd'])
    assert osculating_space_ideal(3, (0, 1), 0) == IdealPresentation.parse(space, ['a', 'b', 'c'])
    sextic = PolyRing(tuple('abcdefg'))
    assert osculating_space_ideal(6, (1, 0), 2) == IdealPresentation.parse(sextic, ['d', 'e', 'f', 'g'])
    with pytest.raises(InputError):
        osculating_space_ideal(3, (1, 0), 3)


def test_fat_line_scheme_lengths():
    assert scheme_length(fat_line_scheme(3, 1)) == 2
    assert scheme_length(fat_line_scheme(3, 2)) == 4


def test_linear_center_validation(space):
    a, b = space.gen('a'), space.gen('b')
    with pytest.raises(InputError):
        LinearCenter([a, a * 2])
    with pytest.raises(InputError):
        LinearCenter([a * b])
    assert LinearCenter([a, b]).codimension == 2


def test_linear_section_dimension(space, point_center):
    assert linear_section_dimension(point_center, IdealPresentation.parse(space, ['c', 'd'])) == 0
    assert linear_section_dimension(point_center, IdealPresentation.parse(space, ['b'])) == -1


@pytest.mark.parametrize('method', ['kernel', 'elimination'])
def test_project_point(space, point_center, method):
    scheme = rnc_ideal(3, space) + point_ideal([1, 1, 1, 1], space)
    image = project_scheme(scheme, point_center, method=method)
    assert image.ring.variables == ('u', 'v', 'w')
    assert image == point_ideal([1, 1, 1], image.ring)


def test_project_refuses_center_on_scheme(space):
    center = LinearCenter.parse('b; c; d', space)
    with pytest.raises(ProjectionUndefined):
        project_scheme(rnc_ideal(3, space) + point_ideal([1, 0, 0, 0], space), center)
    with pytest.raises(InputError):
        project_scheme(rnc_ideal(3, space), LinearCenter.parse('a; c; d', space), targets=('a', 'v', 'w'))


def test_parameterization_from_center(point_center):
    p = parameterization_from_center(3, point_center)
    s, t = p.ring.gens()
    assert p.forms == [s ** 3, s * t * t, t ** 3]
    assert p.coefficient_rows() == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(BasePointError):
        parameterization_from_center(3, LinearCenter.parse('b; c; d', point_center.ring))


def test_parameterization_validation():
    with pytest.raises(BasePointError):
        PlaneParameterization.parse('s^2; s*t; s*t')
    with pytest.raises(InputError):
        PlaneParameterization.parse('s^2; s*t')
    with pytest.raises(InputError):
        PlaneParameterization.parse('s^2; s; t^2')


def test_implicitize_conic_and_cubics():
    plane = PolyRing(('x', 'y', 'z'))
    conic = implicit_curve(PlaneParameterization.parse('s^2; s*t; t^2'))
    assert conic.equation == plane.parse('x*z - y^2')
    assert (conic.map_degree, conic.minimal) == (1, True)
    assert implicitize(PlaneParameterization.parse('s^3; s^2*t; t^3')) == plane.parse('x^2*z - y^3')
    assert implicitize(PlaneParameterization.parse(CUSPIDAL_CUBIC)) == plane.parse('x^3 - y^2*z')
    assert implicitize(PlaneParameterization.parse(NODAL_CUBIC)) == plane.parse('x^3 + x^2*z - y^2*z')


def test_improper_parameterization():
    p = PlaneParameterization.parse('s^4; s^2*t^2; t^4')
    curve = implicit_curve(p)
    assert curve.equation == PolyRing(('x', 'y', 'z')).parse('x*z - y^2')
    assert curve.map_degree == 2
    assert properness_check(p) == (False, 2)


def test_properness_and_fibers():
    p = PlaneParameterization.parse(NODAL_CUBIC)
    assert properness_check(p) == (True, 1)
    assert image_point(p, (1, 1)) == [0, 0, 1]
    assert fiber_form(p, [0, 0, 1]).total_degree() == 2
    assert properness_check(p, [0, 0, 1]) == (False, 1)
    assert properness_check(p, image_point(p, (2, 1))) == (True, 1)
    with pytest.raises(BasePointError):
        normalize_point([0, 0, 0])


def test_cone_fiber_ideal(space, point_center):
    assert cone_fiber_ideal(3, point_center, [1, 1, 1]) == point_ideal([1, 1, 1, 1], space)


def test_curvilinear_schemes(plane):
    assert is_curvilinear(IdealPresentation.parse(plane, ['y', 'x^2']), [0, 0, 1])
    assert not is_curvilinear(IdealPresentation.parse(plane, ['x^2', 'x*y', 'y^2']), [0, 0, 1])
    affine = PolyRing(('x', 'y'))
    assert contains_linear_form(IdealPresentation.parse(affine, ['y - x^2', 'x^2']))
    assert not contains_linear_form(IdealPresentation.parse(affine, ['x^2', 'x*y', 'y^2']))


def test_random_proper_parameterization(rng):
    p = random_proper_parameterization(4, rng)
    assert p.n == 4
    assert p.proper
    assert p.center is not None
