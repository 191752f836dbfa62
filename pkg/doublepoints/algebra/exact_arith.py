"""
Exact scalar arithmetic.

Rationals are ``fractions.Fraction`` (plain ``int`` is accepted wherever a
rational is expected). Quadratic extensions Q(sqrt(d)) are QuadExtElement
values. Integer factorization and the dense linear algebra over these
fields (rank, null space, determinants, inverses) go through sympy.
"""

import math
import re
from fractions import Fraction

import sympy
from sympy.polys.matrices import DomainMatrix

from doublepoints.errors import DomainMismatchError, ExtensionUnsupported, InputError, ParseError

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def is_scalar(value):
    """
    True for the scalar types the package computes with.
    """
    return isinstance(value, (int, Fraction, QuadExtElement)) and not isinstance(value, bool)


def as_rational(value):
    """
    Returns value as an int or a Fraction; rejects floats and other types.
    :param value: int, Fraction or a rational QuadExtElement
    :return: int or Fraction
    """
    if isinstance(value, bool):
        raise InputError('booleans are not rationals')
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, QuadExtElement) and value.b == 0:
        return as_rational(value.a)
    raise InputError('not an exact rational: %r' % (value,))


def parse_rational(text):
    """
    Parses "p/q" or "p".
    :param text: string
    :return: int or Fraction, reduced
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError('not a rational literal: %r' % text, text, 0)
    num = int(match.group(1))
    if match.group(2) is None:
        return num
    den = int(match.group(2))
    if den == 0:
        raise ParseError('zero denominator in %r' % text, text, match.start(2))
    return as_rational(Fraction(num, den))


def format_rational(value):
    """
    Textual form "p/q" or "p".
    """
    value = as_rational(value)
    return str(value)


def field_div(lhs, rhs):
    """
    Exact division that keeps integers integral when the quotient is integral.
    """
    if isinstance(lhs, int) and isinstance(rhs, int):
        if rhs == 0:
            raise ZeroDivisionError('division by zero')
        quotient, remainder = divmod(lhs, rhs)
        if remainder == 0:
            return quotient
        return Fraction(lhs, rhs)
    result = lhs / rhs
    if isinstance(result, Fraction) and result.denominator == 1:
        return result.numerator
    return result


def rational_arith(lhs, rhs, op):
    """
    One field operation on two rationals.
    :param lhs: rational
    :param rhs: rational
    :param op: 'add', 'sub', 'mul' or 'div'
    :return: reduced rational
    """
    lhs, rhs = as_rational(lhs), as_rational(rhs)
    if op == 'add':
        return as_rational(Fraction(lhs) + rhs)
    if op == 'sub':
        return as_rational(Fraction(lhs) - rhs)
    if op == 'mul':
        return as_rational(Fraction(lhs) * rhs)
    if op == 'div':
        if rhs == 0:
            raise ZeroDivisionError('rational division by zero')
        return as_rational(Fraction(lhs) / rhs)
    raise InputError('unknown operation %r' % op)


def squarefree_decomposition(n):
    """
    Writes a nonzero integer as n = k^2 * m with m square-free.
    :param n: nonzero int
    :return: (k, m)
    """
    if n == 0:
        raise InputError('zero has no square-free part')
    k, core = 1, -1 if n < 0 else 1
    for prime, exponent in sympy.factorint(abs(n)).items():
        prime, exponent = int(prime), int(exponent)
        k *= prime ** (exponent // 2)
        if exponent % 2:
            core *= prime
    return k, core


def normalize_discriminant(d):
    """
    Normalizes a rational d to a square-free integer tag.
    :param d: nonzero rational
    :return: (scale, tag) with sqrt(d) = scale * sqrt(tag)
    """
    d = Fraction(as_rational(d))
    if d == 0:
        raise InputError('zero discriminant')
    k, core = squarefree_decomposition(d.numerator * d.denominator)
    return as_rational(Fraction(k, d.denominator)), core


def rational_sqrt(value):
    """
    Square root of a rational when it is rational, else None.
    """
    value = Fraction(as_rational(value))
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return as_rational(Fraction(num_root, den_root))
    return None


class QuadExtElement(object):
    """
    An element a + b*sqrt(d) of Q(sqrt(d)).

    d is stored as a square-free integer tag different from 1; elements with
    different tags never combine.
    """
    __slots__ = ('a', 'b', 'd')

    def __init__(self, a, b, d):
        """
        :param a: rational part
        :param b: coefficient of sqrt(d)
        :param d: rational discriminant, not a rational square
        """
        scale, tag = normalize_discriminant(d)
        if tag == 1:
            raise InputError('%s is a rational square; no extension needed' % format_rational(d))
        object.__setattr__(self, 'a', as_rational(a))
        object.__setattr__(self, 'b', as_rational(as_rational(b) * Fraction(scale)))
        object.__setattr__(self, 'd', tag)

    def __setattr__(self, name, value):
        raise AttributeError('QuadExtElement is immutable')

    @classmethod
    def _raw(cls, a, b, d):
        element = object.__new__(cls)
        object.__setattr__(element, 'a', a)
        object.__setattr__(element, 'b', b)
        object.__setattr__(element, 'd', d)
        return element

    @classmethod
    def sqrt(cls, d):
        """
        The element sqrt(d).
        """
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExtElement):
            if other.d != self.d:
                if other.b == 0:
                    return QuadExtElement._raw(other.a, 0, self.d)
                if self.b == 0:
                    return None
                raise DomainMismatchError('cannot combine elements of Q(sqrt(%d)) and Q(sqrt(%d))'
                                          % (self.d, other.d))
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtElement._raw(as_rational(other), 0, self.d)
        return NotImplemented

    def _rebase(self, other):
        """
        Handles the case where self is rational and other lives in another extension.
        """
        return QuadExtElement._raw(self.a, 0, other.d)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if rhs is None:
            return self._rebase(other) + other
        return QuadExtElement._raw(as_rational(Fraction(self.a) + rhs.a),
                                   as_rational(Fraction(self.b) + rhs.b), self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if rhs is None:
            return self._rebase(other) - other
        return QuadExtElement._raw(as_rational(Fraction(self.a) - rhs.a),
                                   as_rational(Fraction(self.b) - rhs.b), self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if rhs is None:
            return self._rebase(other) * other
        a = Fraction(self.a) * rhs.a + Fraction(self.b) * rhs.b * self.d
        b = Fraction(self.a) * rhs.b + Fraction(self.b) * rhs.a
        return QuadExtElement._raw(as_rational(a), as_rational(b), self.d)

    __rmul__ = __mul__

    def conjugate(self):
        """
        a - b*sqrt(d).
        """
        return QuadExtElement._raw(self.a, -self.b, self.d)

    def norm(self):
        """
        N(a + b*sqrt(d)) = a^2 - d*b^2, a rational.
        """
        return as_rational(Fraction(self.a) ** 2 - self.d * Fraction(self.b) ** 2)

    def inverse(self):
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError('division by zero in Q(sqrt(%d))' % self.d)
        return QuadExtElement._raw(as_rational(Fraction(self.a) / norm),
                                   as_rational(-Fraction(self.b) / norm), self.d)

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if rhs is None:
            return self._rebase(other) / other
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadExtElement._raw(1, 0, self.d)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtElement):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self):
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        root = 'sqrt(%d)' % self.d
        if self.b == 1:
            irrational = root
        elif self.b == -1:
            irrational = '-' + root
        else:
            irrational = '%s*%s' % (format_rational(self.b), root)
        if self.a == 0:
            return irrational
        if irrational.startswith('-'):
            return '%s - %s' % (format_rational(self.a), irrational[1:])
        return '%s + %s' % (format_rational(self.a), irrational)

    def __repr__(self):
        return 'QuadExtElement(%s)' % self


def quadext_arith(lhs, rhs, op):
    """
    One field operation in Q(sqrt(d)).
    :param lhs: QuadExtElement
    :param rhs: QuadExtElement with the same tag
    :param op: 'add', 'sub', 'mul' or 'div'
    :return: QuadExtElement
    """
    if isinstance(lhs, QuadExtElement) and isinstance(rhs, QuadExtElement) and lhs.d != rhs.d:
        raise DomainMismatchError('mismatched discriminants %d and %d' % (lhs.d, rhs.d))
    if op == 'add':
        return lhs + rhs
    if op == 'sub':
        return lhs - rhs
    if op == 'mul':
        return lhs * rhs
    if op == 'div':
        return lhs / rhs
    raise InputError('unknown operation %r' % op)


def domain_of(value):
    """
    The discriminant tag of a scalar, or None for rationals.
    """
    if isinstance(value, QuadExtElement) and value.b != 0:
        return value.d
    return None


def join_domains(first, second):
    """
    Smallest common coefficient domain of two tags (None means Q).
    """
    if first is None:
        return second
    if second is None or second == first:
        return first
    raise DomainMismatchError('cannot combine Q(sqrt(%d)) and Q(sqrt(%d))' % (first, second))


def field_sqrt(value, domain=None):
    """
    A square root of value inside Q or Q(sqrt(domain)).

    For a rational non-square with domain None the result lives in the
    extension it generates. Anything that would need a second radical raises
    ExtensionUnsupported.
    :param value: rational or QuadExtElement
    :param domain: tag of the extension already in use, or None
    :return: rational or QuadExtElement
    """
    if isinstance(value, QuadExtElement):
        domain = join_domains(domain, value.d)
        if value.b == 0:
            value = value.a
    if not isinstance(value, QuadExtElement):
        root = rational_sqrt(value)
        if root is not None:
            return root
        scale, tag = normalize_discriminant(value)
        if domain is not None and tag != domain:
            raise ExtensionUnsupported('sqrt(%s) is not in Q(sqrt(%d))' % (format_rational(value), domain))
        return QuadExtElement(0, scale, tag)
    # (x + y*sqrt(d))^2 = a + b*sqrt(d)  <=>  x^2 + d*y^2 = a, 2*x*y = b
    norm_root = rational_sqrt(value.norm())
    if norm_root is not None:
        for candidate in (Fraction(value.a) + norm_root, Fraction(value.a) - norm_root):
            x = rational_sqrt(candidate / 2)
            if x:
                y = Fraction(value.b) / (2 * x)
                return QuadExtElement._raw(as_rational(x), as_rational(y), value.d)
    raise ExtensionUnsupported('%s has no square root in Q(sqrt(%d))' % (value, value.d))


_FIELD_ELEMENT_RE = re.compile(
    r'^\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*|(?P<lead>[+-])\s*)?'
    r'(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?'
    r'sqrt\(\s*(?P<d>[+-]?\d+(?:/\d+)?)\s*\)\s*$')


def parse_field_element(text):
    """
    Parses "p/q", "sqrt(d)", "b*sqrt(d)", "a + b*sqrt(d)" or "a - sqrt(d)".
    """
    if 'sqrt' not in text:
        return parse_rational(text)
    match = _FIELD_ELEMENT_RE.match(text)
    if match is None:
        raise ParseError('not a field element: %r' % text, text, 0)
    a = parse_rational(match.group('a')) if match.group('a') else 0
    b = parse_rational(match.group('b')) if match.group('b') else 1
    if (match.group('sign') or match.group('lead')) == '-':
        b = -b
    return QuadExtElement(a, b, parse_rational(match.group('d')))


def format_field_element(value):
    if isinstance(value, QuadExtElement):
        return str(value)
    return format_rational(value)


# sympy bridge and dense linear algebra over Q or Q(sqrt(d)).

def _sympy_rational(value):
    q = Fraction(as_rational(value))
    return sympy.Rational(q.numerator, q.denominator)


def _rational_from_sympy(expr, tag):
    if not expr.is_Rational:
        raise ExtensionUnsupported('%s does not lie in %s' % (expr, 'Q' if tag is None else 'Q(sqrt(%d))' % tag))
    return as_rational(Fraction(int(expr.p), int(expr.q)))


def to_sympy_scalar(value):
    """
    A rational or QuadExtElement as a sympy number.
    """
    if isinstance(value, QuadExtElement):
        return _sympy_rational(value.a) + _sympy_rational(value.b) * sympy.sqrt(value.d)
    return _sympy_rational(value)


def from_sympy_scalar(expr, tag=None):
    """
    A sympy number of Q or Q(sqrt(tag)) back as a rational or QuadExtElement.
    :param expr: sympy expression
    :param tag: square-free discriminant tag, None for Q
    :return: int, Fraction or QuadExtElement
    """
    expr = sympy.expand(expr)
    b = 0
    if tag is not None:
        root = sympy.sqrt(tag)
        coefficient = expr.coeff(root)
        expr = sympy.expand(expr - coefficient * root)
        b = _rational_from_sympy(coefficient, tag)
    a = _rational_from_sympy(expr, tag)
    return a if b == 0 else QuadExtElement(a, b, tag)


def _common_tag(*matrices):
    tag = None
    for rows in matrices:
        for row in rows:
            for entry in row:
                tag = join_domains(tag, domain_of(entry))
    return tag


def _to_domain_matrix(rows, tag, ncols=None):
    domain = sympy.QQ if tag is None else sympy.QQ.algebraic_field(sympy.sqrt(tag))
    ncols = len(rows[0]) if rows else ncols
    elements = [[domain.from_sympy(to_sympy_scalar(entry)) for entry in row] for row in rows]
    return DomainMatrix(elements, (len(rows), ncols), domain)


def _from_domain_matrix(matrix, tag):
    return [[from_sympy_scalar(entry, tag) for entry in row] for row in matrix.to_Matrix().tolist()]


def _from_domain_element(matrix, value, tag):
    return from_sympy_scalar(matrix.domain.to_sympy(value), tag)


def row_echelon(rows):
    """
    Reduced row echelon form (sympy DomainMatrix over Q or Q(sqrt(d))).
    :param rows: list of lists of field elements
    :return: (nonzero reduced rows, pivot column indices)
    """
    if not rows:
        return [], []
    tag = _common_tag(rows)
    reduced, pivots = _to_domain_matrix(rows, tag).rref()
    return _from_domain_matrix(reduced, tag)[:len(pivots)], list(pivots)


def matrix_rank(rows):
    """
    Rank of a matrix given as a list of rows.
    """
    if not rows:
        return 0
    return _to_domain_matrix(rows, _common_tag(rows)).rank()


def null_space(rows, ncols=None):
    """
    Basis of {v : rows * v = 0}, one vector per free column, read off the
    reduced echelon form: 1 at the free column, 0 at the other free columns.
    :param rows: list of rows
    :param ncols: number of columns (needed when rows is empty)
    :return: list of vectors
    """
    if ncols is None:
        ncols = len(rows[0])
    reduced, pivots = row_echelon(rows)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vector = [0] * ncols
        vector[free] = 1
        for row, p in zip(reduced, pivots):
            vector[p] = -row[free]
        basis.append(vector)
    return basis


def scalar_determinant(matrix):
    """
    Determinant of a square scalar matrix.
    """
    tag = _common_tag(matrix)
    dm = _to_domain_matrix(matrix, tag)
    return _from_domain_element(dm, dm.det(), tag)


def scalar_inverse(matrix):
    """
    Inverse of a square scalar matrix; InputError when singular.
    """
    tag = _common_tag(matrix)
    dm = _to_domain_matrix(matrix, tag)
    if dm.det() == dm.domain.zero:
        raise InputError('matrix is singular')
    return _from_domain_matrix(dm.inv(), tag)


def mat_mul(left, right):
    tag = _common_tag(left, right)
    product = _to_domain_matrix(left, tag).matmul(_to_domain_matrix(right, tag))
    return _from_domain_matrix(product, tag)


def mat_vec(matrix, vector):
    return [row[0] for row in mat_mul(matrix, [[entry] for entry in vector])]
