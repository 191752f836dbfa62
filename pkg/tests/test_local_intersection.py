import math

import pytest

from doublepoints.algebra.exact_arith import QuadExtElement
from doublepoints.curves.local_intersection import (GraphCurve, MultiplicityValue, branch_separation,
                                                    graph_intersection_multiplicity,
                                                    intersection_multiplicity_with_graph_oracle,
                                                    truncated_local_multiplicity)
from doublepoints.errors import InputError


def test_graph_curve_basics():
    parabola = GraphCurve((0, 1))
    assert parabola.degree == 2
    assert str(parabola) == 'y = x^2'
    assert parabola.to_dict() == {'coeffs': ['0', '1'], 'field': 'base'}
    conjugate = GraphCurve((0, 0, QuadExtElement.sqrt(-1)))
    assert conjugate.to_dict()['field'] == {'quadext': -1}


def test_graph_multiplicity(affine_plane):
    f = affine_plane.parse('y - x^2')
    assert graph_intersection_multiplicity(f, GraphCurve((0,))) == 2
    assert graph_intersection_multiplicity(f, GraphCurve((0, 1))).is_infinite
    cusp = affine_plane.parse('y^2 - x^3')
    assert graph_intersection_multiplicity(cusp, GraphCurve((0,))) == 3
    with pytest.raises(InputError):
        graph_intersection_multiplicity(affine_plane.parse('y - 1'), GraphCurve((0,)))


def test_truncated_local_multiplicity(affine_plane):
    y = affine_plane.gen('y')
    assert truncated_local_multiplicity(affine_plane.parse('y - x^2'), y) == 2
    assert truncated_local_multiplicity(affine_plane.parse('y^2 - x^3'), affine_plane.parse('x')) == 2
    assert truncated_local_multiplicity(affine_plane.parse('y^2 - x^3'), y) == 3


def test_truncated_multiplicity_without_plateau(affine_plane):
    f = affine_plane.parse('y*x')
    result = truncated_local_multiplicity(f, affine_plane.parse('y'), cap=5)
    assert result.is_infinite
    assert result.cap_reached


def test_branch_separation():
    assert branch_separation(GraphCurve((0, 1)), GraphCurve((0, 2))) == 2
    assert branch_separation(GraphCurve((1, 0, 1)), GraphCurve((1, 0, 1))).is_infinite


def test_multiplicity_value_ordering():
    three = MultiplicityValue(3)
    assert three == 3
    assert three < 4
    assert three < MultiplicityValue(math.inf)
    assert (three + 1).value == 4
    assert MultiplicityValue(math.inf).to_json() == 'inf'
    assert str(three) == '3'


def test_oracle_agrees_with_substitution(affine_plane):
    f = affine_plane.parse('y^2 - 2*x^2*y + x^4 + x^2*y^2')
    graph = GraphCurve((0, 1, QuadExtElement.sqrt(-1)))
    assert graph_intersection_multiplicity(f.change_ring(affine_plane.with_domain(-1)), graph) == 7
    assert intersection_multiplicity_with_graph_oracle(f, graph) == 7
