from fractions import Fraction

import pytest

from doublepoints.algebra.exact_arith import (QuadExtElement, field_div, field_sqrt, format_field_element,
                                              from_sympy_scalar, join_domains, mat_mul, mat_vec, matrix_rank,
                                              normalize_discriminant, null_space, parse_field_element,
                                              parse_rational, row_echelon, scalar_determinant, scalar_inverse,
                                              squarefree_decomposition, to_sympy_scalar)
from doublepoints.errors import DomainMismatchError, ExtensionUnsupported, InputError, ParseError


def test_parse_rational_reduces():
    assert parse_rational('3/6') == Fraction(1, 2)
    value = parse_rational('4/2')
    assert value == 2 and isinstance(value, int)
    assert parse_rational(' -7 ') == -7


@pytest.mark.parametrize('text', ['', '1.5', 'x', '2/', '3/0'])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_field_div_keeps_integers():
    assert field_div(6, 3) == 2
    assert isinstance(field_div(6, 3), int)
    assert field_div(1, 2) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        field_div(1, 0)


def test_squarefree_decomposition():
    assert squarefree_decomposition(72) == (6, 2)
    assert squarefree_decomposition(-4) == (2, -1)
    assert squarefree_decomposition(2 * 10007 ** 2 * 10009) == (10007, 2 * 10009)
    assert normalize_discriminant(Fraction(1, 2)) == (Fraction(1, 2), 2)


def test_quadext_normalizes_discriminant():
    element = QuadExtElement(1, 2, 8)
    assert (element.a, element.b, element.d) == (1, 4, 2)
    assert str(element) == '1 + 4*sqrt(2)'


def test_quadext_arithmetic():
    i = QuadExtElement.sqrt(-1)
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (1 + i).inverse() * (1 + i) == 1
    assert (1 + i) ** 2 == 2 * i
    assert str(-i) == '-sqrt(-1)'
    assert str(3 - 2 * i) == '3 - 2*sqrt(-1)'


def test_quadext_equality_and_hash_with_rationals():
    i = QuadExtElement.sqrt(-1)
    real = i * i
    assert real == -1
    assert hash(real) == hash(-1)
    assert {i, -i, i} == {-i, i}


def test_mixed_discriminants_refused():
    with pytest.raises(DomainMismatchError):
        QuadExtElement.sqrt(2) + QuadExtElement.sqrt(3)
    with pytest.raises(DomainMismatchError):
        join_domains(2, 3)
    assert join_domains(None, 5) == 5


def test_field_sqrt():
    assert field_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert field_sqrt(-4) == QuadExtElement(0, 2, -1)
    assert field_sqrt(QuadExtElement(3, 2, 2)) == QuadExtElement(1, 1, 2)
    with pytest.raises(ExtensionUnsupported):
        field_sqrt(3, domain=2)
    with pytest.raises(ExtensionUnsupported):
        field_sqrt(QuadExtElement(0, 1, 2))


def test_parse_and_format_field_elements():
    assert parse_field_element('1 - 2*sqrt(3)') == QuadExtElement(1, -2, 3)
    assert parse_field_element('sqrt(-1)') == QuadExtElement.sqrt(-1)
    assert parse_field_element('-1/2') == Fraction(-1, 2)
    assert format_field_element(Fraction(-1, 2)) == '-1/2'
    with pytest.raises(InputError):
        QuadExtElement(0, 1, 4)


def test_linear_algebra():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert null_space([[1, 2]], 2) == [[-2, 1]]
    assert scalar_determinant([[1, 2], [3, 4]]) == -2
    inverse = scalar_inverse([[1, 2], [3, 4]])
    assert inverse == [[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]]
    with pytest.raises(InputError):
        scalar_inverse([[1, 2], [2, 4]])


def test_large_square_factors_give_canonical_tags():
    big = QuadExtElement.sqrt(2 * 10007 ** 2 * 10009)
    assert big.d == 2 * 10009
    assert big == QuadExtElement(0, 10007, 2 * 10009)
    assert join_domains(big.d, QuadExtElement.sqrt(2 * 10009).d) == 2 * 10009
    assert big * big == 2 * 10007 ** 2 * 10009


def test_linear_algebra_over_quadratic_extension():
    i = QuadExtElement.sqrt(-1)
    assert matrix_rank([[1, i], [i, -1]]) == 1
    assert null_space([[1, i]], 2) == [[-i, 1]]
    assert scalar_determinant([[1, i], [-i, 1]]) == 0
    assert scalar_inverse([[i, 0], [0, 2]]) == [[-i, 0], [0, Fraction(1, 2)]]
    reduced, pivots = row_echelon([[2, 2 * i], [0, 0], [1, 1]])
    assert pivots == [0, 1]
    assert reduced == [[1, 0], [0, 1]]
    assert mat_mul([[1, i], [0, 1]], [[1, -i], [0, 1]]) == [[1, 0], [0, 1]]
    assert mat_vec([[i, 0], [0, 1]], [i, 3]) == [-1, 3]


def test_sympy_scalar_bridge():
    for value, tag in [(Fraction(-3, 4), None), (QuadExtElement(1, 2, -3), -3), (QuadExtElement(0, -1, 2), 2)]:
        assert from_sympy_scalar(to_sympy_scalar(value), tag) == value
    with pytest.raises(ExtensionUnsupported):
        from_sympy_scalar(to_sympy_scalar(QuadExtElement.sqrt(5)), 2)


def random_element(rng, d):
    return QuadExtElement(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                          Fraction(rng.randint(-9, 9), rng.randint(1, 5)), d)


@pytest.mark.parametrize('d', [-1, 2, -3, 5])
def test_field_laws_and_norm_on_random_elements(rng, d):
    for _ in range(50):
        a, b, c = (random_element(rng, d) for _ in range(3))
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * a.inverse() == 1
            assert (b / a) * a == b
