import pytest
import sympy

from doublepoints.algebra.groebner import (LEX, IdealPresentation, TermOrder, colon, eliminate, hilbert_function,
                                           ideal_power, intersect, irrelevant_ideal, krull_dimension,
                                           minimal_polynomial, projective_dimension, saturate,
                                           saturate_by_element, scheme_length, zero_dim_radical)
from doublepoints.algebra.poly_core import PolyRing, from_sympy
from doublepoints.curves.rational_curves import rnc_ideal
from doublepoints.errors import InputError, PositiveDimensionalError


def ideal(ring, *texts):
    return IdealPresentation.parse(ring, texts)


def test_membership(affine_plane):
    i = ideal(affine_plane, 'x*y - 1', 'y^2 - x')
    assert i.contains(affine_plane.parse('y^3 - 1'))
    assert not i.contains(affine_plane.parse('y - 1'))


def test_reduced_lex_basis(affine_plane):
    i = ideal(affine_plane, 'x^2 + y^2 - 1', 'x - y')
    assert i.reduced_generators(LEX) == [affine_plane.parse('x - y'), affine_plane.parse('y^2 - 1/2')]


def test_ideal_equality_ignores_presentation(plane):
    assert ideal(plane, 'x + y', 'x - y') == ideal(plane, 'x', 'y')
    assert ideal(plane, 'x') != ideal(plane, 'y')


def test_unknown_term_order():
    with pytest.raises(InputError):
        TermOrder('revlex')


def test_eliminate():
    ring = PolyRing(('t', 'x', 'y'))
    result = eliminate(ideal(ring, 'x - t^2', 'y - t^3'), ['t'])
    assert result.ring.variables == ('x', 'y')
    assert result == ideal(result.ring, 'x^3 - y^2')


def test_intersection_colon_and_power(plane):
    assert intersect(ideal(plane, 'x'), ideal(plane, 'y')) == ideal(plane, 'x*y')
    assert colon(ideal(plane, 'x*y'), ideal(plane, 'x')) == ideal(plane, 'y')
    assert ideal_power(ideal(plane, 'x', 'y'), 2) == ideal(plane, 'x^2', 'x*y', 'y^2')


def test_hilbert_function_of_a_point(plane):
    data = hilbert_function(ideal(plane, 'x', 'y'))
    assert data.values[:3] == [1, 1, 1]
    assert data.stabilized
    assert (data.stable_value, data.stable_from) == (1, 0)


def test_hilbert_function_of_the_twisted_cubic():
    twisted = rnc_ideal(3)
    data = hilbert_function(twisted, upto=4)
    assert data.values[:5] == [1, 4, 7, 10, 13]
    assert not data.stabilized
    assert krull_dimension(twisted) == 2
    assert projective_dimension(twisted) == 1


def test_hilbert_function_needs_homogeneous_ideal(affine_plane):
    with pytest.raises(InputError):
        hilbert_function(ideal(affine_plane, 'x - 1'))


def test_scheme_length(plane):
    assert scheme_length(ideal(plane, 'y', 'x^2 - x*z')) == 2
    assert scheme_length(ideal(plane, 'x^2', 'x*y', 'y^2')) == 3
    with pytest.raises(PositiveDimensionalError):
        scheme_length(ideal(plane, 'x'))


def test_krull_dimension_of_unit_ideal(plane):
    assert krull_dimension(ideal(plane, 'x', 'y', 'z - 1')) == -1


def test_saturation(plane, affine_plane):
    embedded = ideal(plane, 'x^2', 'x*y', 'y^2', 'x*z', 'y*z')
    assert saturate(embedded, irrelevant_ideal(plane)) == ideal(plane, 'x', 'y')
    assert saturate_by_element(ideal(plane, 'x*z', 'y*z'), plane.gen('z')) == ideal(plane, 'x', 'y')
    assert saturate_by_element(ideal(affine_plane, 'x*y - x'), affine_plane.parse('y - 1')) == ideal(affine_plane, 'x')


def test_saturation_of_positive_dimensional_ideal(plane):
    line_with_embedded_point = ideal(plane, 'x^2', 'x*y', 'x*z')
    assert saturate(line_with_embedded_point, irrelevant_ideal(plane)) == ideal(plane, 'x')


def test_zero_dim_radical(plane, rng):
    radical = zero_dim_radical(ideal(plane, 'x', 'y^2'), rng)
    assert radical == ideal(plane, 'x', 'y')
    two_points = zero_dim_radical(ideal(plane, 'y^2', 'x^2 - z^2'), rng)
    assert scheme_length(two_points) == 2
    with pytest.raises(PositiveDimensionalError):
        zero_dim_radical(ideal(plane, 'x'), rng)


def test_minimal_polynomial(affine_plane):
    basis = ideal(affine_plane, 'x^2 - 2', 'y - x').groebner_basis()
    line = PolyRing(('x',))
    assert minimal_polynomial(affine_plane.gen('x'), basis, line) == line.parse('x^2 - 2')


def test_groebner_basis_matches_sympy(plane):
    ours = ideal(plane, 'x^2 - y*z', 'x*y - z^2', 'y^3 - x*z^2')
    x, y, z = sympy.symbols('x y z')
    theirs = sympy.groebner([g.to_sympy() for g in ours.generators], x, y, z, order='grevlex')
    assert ours == IdealPresentation(plane, [from_sympy(g, plane) for g in theirs.exprs])
