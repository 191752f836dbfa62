"""
Sparse multivariate polynomials over Q or Q(sqrt(d)).

A Polynomial maps exponent tuples to nonzero coefficients and carries the
PolyRing it lives in. Rings with the same variable list but different
coefficient domains combine into the larger domain; rings with different
variable lists never combine implicitly (use ``change_ring``).
"""

import itertools
import logging
import math
import operator
import re
from fractions import Fraction
from functools import reduce

import sympy
from tqdm import tqdm

from doublepoints.algebra.exact_arith import (QuadExtElement, as_rational, domain_of, field_div, field_sqrt,
                                              format_rational, is_scalar, join_domains, parse_rational,
                                              scalar_determinant, to_sympy_scalar)
from doublepoints.errors import InputError, ParseError, RingMismatchError

LOGGER = logging.getLogger(__name__)

_VARIABLE_RE = re.compile(r'^[a-zA-Z][a-zA-Z0-9]*$')


class PolyRing(object):
    """
    A polynomial ring K[x_1, ..., x_k] with K = Q (domain None) or Q(sqrt(domain)).
    """

    def __init__(self, variables, domain=None):
        """
        :param variables: iterable of distinct variable names
        :param domain: None for Q, or a square-free integer tag d for Q(sqrt(d))
        """
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(',') if v.strip()]
        variables = tuple(variables)
        if not variables:
            raise InputError('a polynomial ring needs at least one variable')
        if len(set(variables)) != len(variables):
            raise InputError('duplicate variable names in %s' % (variables,))
        for name in variables:
            if not _VARIABLE_RE.match(name):
                raise InputError('invalid variable name %r' % name)
        self.variables = variables
        self.domain = domain
        self._index = {name: i for i, name in enumerate(variables)}
        self.zero_exponent = (0,) * len(variables)

    @property
    def ngens(self):
        return len(self.variables)

    @property
    def domain_name(self):
        return 'QQ' if self.domain is None else 'QQ[sqrt(%d)]' % self.domain

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError('unknown variable %r in ring %r' % (name, self))

    def unit_exponent(self, name):
        exps = [0] * self.ngens
        exps[self.index(name)] = 1
        return tuple(exps)

    def gen(self, name):
        if isinstance(name, int):
            name = self.variables[name]
        return Polynomial._make(self, {self.unit_exponent(name): 1})

    def gens(self):
        return [self.gen(name) for name in self.variables]

    def zero(self):
        return Polynomial._make(self, {})

    def one(self):
        return Polynomial._make(self, {self.zero_exponent: 1})

    def constant(self, value):
        ring = self
        tag = domain_of(value)
        if tag is not None and tag != self.domain:
            ring = self.with_domain(join_domains(self.domain, tag))
        if value == 0:
            return Polynomial._make(ring, {})
        return Polynomial._make(ring, {ring.zero_exponent: value})

    def monomial(self, exponents, coeff=1):
        return Polynomial(self, {tuple(exponents): coeff})

    def with_domain(self, domain):
        if domain == self.domain:
            return self
        return PolyRing(self.variables, domain)

    def extend(self, names):
        """
        The ring with extra variables appended after the existing ones.
        """
        return PolyRing(self.variables + tuple(names), self.domain)

    def drop(self, names):
        kept = [v for v in self.variables if v not in set(names)]
        return PolyRing(kept, self.domain)

    def parse(self, text):
        return parse_poly(text, self)

    def __eq__(self, other):
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.variables == other.variables and self.domain == other.domain

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.variables, self.domain))

    def __repr__(self):
        return '%s[%s]' % (self.domain_name, ','.join(self.variables))


def _iadd_terms(acc, terms, scale=1):
    """
    acc += scale * terms, in place on the dict acc.
    """
    for exps, coeff in terms.items():
        if scale != 1:
            coeff = coeff * scale
        current = acc.get(exps)
        if current is None:
            acc[exps] = coeff
        else:
            total = current + coeff
            if total == 0:
                del acc[exps]
            else:
                acc[exps] = total
    return acc


def _mul_terms(left, right):
    result = {}
    add = operator.add
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            exps = tuple(map(add, e1, e2))
            coeff = c1 * c2
            current = result.get(exps)
            result[exps] = coeff if current is None else current + coeff
    return {e: c for e, c in result.items() if c != 0}


def _format_monomial(exps, variables):
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append('%s^%d' % (name, e))
    return '*'.join(parts)


def _format_term(coeff, exps, variables):
    monomial = _format_monomial(exps, variables)
    if isinstance(coeff, QuadExtElement) and coeff.b != 0:
        body = '(%s)' % coeff
        return '+', body + '*' + monomial if monomial else body
    coeff = as_rational(coeff)
    sign = '-' if coeff < 0 else '+'
    magnitude = abs(coeff)
    if not monomial:
        return sign, format_rational(magnitude)
    if magnitude == 1:
        return sign, monomial
    return sign, '%s*%s' % (format_rational(magnitude), monomial)


def grlex_key(exps):
    return sum(exps), exps


class Polynomial(object):
    """
    Immutable sparse polynomial.
    """
    __slots__ = ('ring', 'terms', '_hash')

    def __init__(self, ring, terms=None):
        """
        :param ring: PolyRing
        :param terms: mapping exponent tuple -> coefficient; zero coefficients are dropped
        """
        self.ring = ring
        clean = {}
        tag = ring.domain
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.ngens:
                raise InputError('exponent %s does not fit ring %r' % (exps, ring))
            if not is_scalar(coeff):
                raise InputError('unsupported coefficient %r' % (coeff,))
            if coeff != 0:
                clean[exps] = coeff
                tag = join_domains(tag, domain_of(coeff))
        if tag != ring.domain:
            self.ring = ring.with_domain(tag)
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        poly = object.__new__(cls)
        poly.ring = ring
        poly.terms = terms
        poly._hash = None
        return poly

    # ring bookkeeping

    def _common_ring(self, other_ring):
        ring = self.ring
        if other_ring is ring:
            return ring
        if other_ring.variables != ring.variables:
            raise RingMismatchError('cannot combine polynomials over %r and %r' % (ring, other_ring))
        return ring.with_domain(join_domains(ring.domain, other_ring.domain))

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return self._common_ring(other.ring), other.terms
        if is_scalar(other):
            ring = self.ring
            tag = domain_of(other)
            if tag is not None and tag != ring.domain:
                ring = ring.with_domain(join_domains(ring.domain, tag))
            return ring, ({ring.zero_exponent: other} if other != 0 else {})
        return None, None

    # arithmetic

    def __add__(self, other):
        ring, terms = self._lift(other)
        if ring is None:
            return NotImplemented
        return Polynomial._make(ring, _iadd_terms(dict(self.terms), terms))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        ring, terms = self._lift(other)
        if ring is None:
            return NotImplemented
        return Polynomial._make(ring, _iadd_terms(dict(self.terms), terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            ring, _ = self._lift(other)
            if other == 0:
                return Polynomial._make(ring, {})
            return Polynomial._make(ring, {e: c * other for e, c in self.terms.items()})
        ring, terms = self._lift(other)
        if ring is None:
            return NotImplemented
        return Polynomial._make(ring, _mul_terms(self.terms, terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError('polynomial division by zero')
        ring, _ = self._lift(other)
        return Polynomial._make(ring, {e: field_div(c, other) for e, c in self.terms.items()})

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError('polynomial powers need a natural exponent, got %r' % (exponent,))
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.variables == other.ring.variables and self.terms == other.terms
        if is_scalar(other):
            if other == 0:
                return not self.terms
            return self.terms == {self.ring.zero_exponent: other}
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exps in sorted(self.terms, key=grlex_key, reverse=True):
            sign, body = _format_term(self.terms[exps], exps, self.ring.variables)
            if not pieces:
                pieces.append('-' + body if sign == '-' else body)
            else:
                pieces.append(('- ' if sign == '-' else '+ ') + body)
        return ' '.join(pieces)

    def __repr__(self):
        return 'Polynomial(%r, %s)' % (self.ring, self)

    # structure

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or list(self.terms) == [self.ring.zero_exponent]

    def constant_value(self):
        """
        The coefficient of the constant monomial.
        """
        return self.terms.get(self.ring.zero_exponent, 0)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    def total_degree(self):
        """
        Total degree; -1 for the zero polynomial.
        """
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def lowest_degree(self):
        """
        Order of vanishing at the origin; math.inf for the zero polynomial.
        """
        if not self.terms:
            return math.inf
        return min(sum(e) for e in self.terms)

    def degree(self, name):
        if not self.terms:
            return -1
        i = self.ring.index(name)
        return max(e[i] for e in self.terms)

    def degree_index(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, degree):
        return Polynomial._make(self.ring, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def homogeneous_components(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._make(self.ring, terms) for d, terms in sorted(parts.items())}

    def used_indices(self):
        used = set()
        for exps in self.terms:
            used.update(i for i, e in enumerate(exps) if e)
        return sorted(used)

    def variables_used(self):
        return tuple(self.ring.variables[i] for i in self.used_indices())

    def leading(self, key=grlex_key):
        """
        (exponents, coefficient) of the largest term under key.
        """
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def coefficients_in(self, name):
        """
        Coefficients in one variable, as polynomials of the same ring free of it.
        :return: dict power -> Polynomial
        """
        i = self.ring.index(name) if isinstance(name, str) else name
        pieces = {}
        for exps, coeff in self.terms.items():
            stripped = exps[:i] + (0,) + exps[i + 1:]
            pieces.setdefault(exps[i], {})[stripped] = coeff
        return {k: Polynomial._make(self.ring, terms) for k, terms in pieces.items()}

    def univariate_coefficients(self, name=None):
        """
        Dense coefficient list, lowest power first, for a polynomial in one variable.
        """
        used = self.variables_used()
        if name is None:
            if len(used) > 1:
                raise InputError('%s is not univariate' % self)
            name = used[0] if used else self.ring.variables[0]
        elif any(v != name for v in used):
            raise InputError('%s involves variables other than %s' % (self, name))
        i = self.ring.index(name)
        coeffs = [0] * (self.degree_index(i) + 1)
        for exps, coeff in self.terms.items():
            coeffs[exps[i]] = coeff
        return coeffs

    # evaluation and substitution

    def evaluate(self, point):
        """
        Value at a point given as a sequence (ring order) or a mapping name -> value.
        """
        if isinstance(point, dict):
            point = [point[name] for name in self.ring.variables]
        if len(point) != self.ring.ngens:
            raise InputError('point %s has the wrong number of coordinates for %r' % (point, self.ring))
        total = 0
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                if e:
                    value = value * x ** e
            total = total + value
        return total

    def substitute(self, assignments, ring=None):
        return substitute(self, assignments, ring)

    def derivative(self, name):
        i = self.ring.index(name) if isinstance(name, str) else name
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
                terms[lowered] = coeff * exps[i]
        return Polynomial._make(self.ring, terms)

    def change_ring(self, ring):
        """
        The same polynomial viewed in another ring, matching variables by name.
        """
        if ring.variables == self.ring.variables:
            return Polynomial._make(self._common_ring(ring), dict(self.terms))
        positions = []
        for i in self.used_indices():
            name = self.ring.variables[i]
            if name not in ring:
                raise RingMismatchError('variable %s of %s is missing from %r' % (name, self, ring))
            positions.append((i, ring.index(name)))
        target = ring.with_domain(join_domains(ring.domain, self.ring.domain))
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * target.ngens
            for src, dst in positions:
                new[dst] = exps[src]
            terms[tuple(new)] = coeff
        return Polynomial._make(target, terms)

    def homogenize(self, name, ring=None):
        """
        Homogenizes with the variable name, appended to the ring when absent.
        """
        if ring is None:
            ring = self.ring if name in self.ring else self.ring.extend([name])
        lifted = self.change_ring(ring)
        j = lifted.ring.index(name)
        top = self.total_degree()
        terms = {}
        for exps, coeff in lifted.terms.items():
            raised = list(exps)
            raised[j] += top - sum(exps)
            terms[tuple(raised)] = coeff
        return Polynomial._make(lifted.ring, terms)

    def dehomogenize(self, name, ring=None):
        """
        Sets name = 1 and drops it from the ring (or maps into ring when given).
        """
        i = self.ring.index(name)
        target = ring if ring is not None else self.ring.drop([name])
        source = PolyRing(self.ring.variables[:i] + self.ring.variables[i + 1:], self.ring.domain)
        terms = {}
        for exps, coeff in self.terms.items():
            key = exps[:i] + exps[i + 1:]
            _iadd_terms(terms, {key: coeff})
        return Polynomial._make(source, terms).change_ring(target)

    # normalization

    def primitive(self):
        """
        Integer-coefficient primitive form with positive leading coefficient
        (graded-lex). Over an extension the polynomial is made monic instead.
        """
        if not self.terms:
            return self
        coeffs = list(self.terms.values())
        if any(isinstance(c, QuadExtElement) and c.b != 0 for c in coeffs):
            return self.monic()
        rationals = [Fraction(as_rational(c)) for c in coeffs]
        denominator = reduce(math.lcm, (c.denominator for c in rationals), 1)
        numerators = [int(c * denominator) for c in rationals]
        divisor = reduce(math.gcd, numerators, 0)
        _, lead = self.leading()
        if as_rational(lead) < 0:
            divisor = -divisor
        return Polynomial._make(self.ring, {e: n // divisor for e, n in zip(self.terms, numerators)})

    def monic(self, key=grlex_key):
        if not self.terms:
            return self
        _, lead = self.leading(key)
        if lead == 1:
            return self
        return Polynomial._make(self.ring, {e: field_div(c, lead) for e, c in self.terms.items()})

    normalized = primitive

    def to_sympy(self, symbols=None):
        return to_sympy(self, symbols)


def parse_poly(text, ring):
    """
    Parses a polynomial over ring.

    Grammar: variables of the ring, literals "p" or "p/q", "sqrt(d)" for a
    quadratic irrationality, + - * ^ and parentheses. Implicit
    multiplication is rejected.
    :param text: string
    :param ring: PolyRing
    :return: Polynomial
    """
    return _Parser(text, ring).parse()


_TOKEN_RE = re.compile(r'(?P<number>\d+(?:/\d+)?)|(?P<name>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*^()])')


class _Parser(object):

    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        tokens = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            match = _TOKEN_RE.match(text, i)
            if match is None:
                raise ParseError('malformed token %r' % text[i], text, i)
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), i))
            i = match.end()
        return tokens

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None, None, len(self.text)

    def _take(self, value=None):
        kind, token, position = self._peek()
        if kind is None:
            raise ParseError('unexpected end of input', self.text, position)
        if value is not None and token != value:
            raise ParseError('expected %r, found %r' % (value, token), self.text, position)
        self.pos += 1
        return kind, token, position

    def parse(self):
        if not self.tokens:
            raise ParseError('empty polynomial', self.text, 0)
        result = self._expr()
        kind, token, position = self._peek()
        if kind is not None:
            raise ParseError('unexpected %r' % token, self.text, position)
        return result

    def _expr(self):
        kind, token, _ = self._peek()
        negate = False
        if token in ('+', '-') and kind == 'op':
            self._take()
            negate = token == '-'
        result = self._term()
        if negate:
            result = -result
        while True:
            kind, token, _ = self._peek()
            if kind == 'op' and token in ('+', '-'):
                self._take()
                rhs = self._term()
                result = result + rhs if token == '+' else result - rhs
            else:
                return result

    def _term(self):
        result = self._factor()
        while True:
            kind, token, position = self._peek()
            if kind == 'op' and token == '*':
                self._take()
                result = result * self._factor()
            elif kind in ('number', 'name') or (kind == 'op' and token == '('):
                raise ParseError('implicit multiplication is not allowed', self.text, position)
            else:
                return result

    def _factor(self):
        base = self._atom()
        kind, token, _ = self._peek()
        if kind == 'op' and token == '^':
            self._take()
            kind, token, position = self._take()
            if kind != 'number' or '/' in token:
                raise ParseError('exponent must be a natural number', self.text, position)
            return base ** int(token)
        return base

    def _atom(self):
        kind, token, position = self._take()
        if kind == 'number':
            try:
                return self.ring.constant(parse_rational(token))
            except ZeroDivisionError:
                raise ParseError('zero denominator', self.text, position)
        if kind == 'name':
            if token == 'sqrt' and token not in self.ring and self._peek()[1] == '(':
                return self._sqrt()
            if token not in self.ring:
                raise ParseError('unknown variable %r' % token, self.text, position)
            return self.ring.gen(token)
        if token == '(':
            inner = self._expr()
            self._take(')')
            return inner
        raise ParseError('unexpected %r' % token, self.text, position)

    def _sqrt(self):
        self._take('(')
        sign = 1
        if self._peek()[1] == '-':
            self._take()
            sign = -1
        kind, token, position = self._take()
        if kind != 'number':
            raise ParseError('sqrt expects a rational literal', self.text, position)
        self._take(')')
        return self.ring.constant(field_sqrt(sign * parse_rational(token), self.ring.domain))


def format_poly(poly):
    """
    Canonical text: terms by graded-lex descending.
    """
    return str(poly)


def poly_arith(lhs, rhs, op):
    """
    :param op: 'add', 'sub' or 'mul'
    """
    if isinstance(lhs, Polynomial) and isinstance(rhs, Polynomial):
        lhs._common_ring(rhs.ring)
    if op == 'add':
        return lhs + rhs
    if op == 'sub':
        return lhs - rhs
    if op == 'mul':
        return lhs * rhs
    raise InputError('unknown operation %r' % op)


def poly_pow(poly, exponent):
    return poly ** exponent


def substitute(f, assignments, ring=None):
    """
    Replaces variables of f by polynomials (or scalars) of a common ring.
    :param f: Polynomial
    :param assignments: mapping variable name -> Polynomial or scalar
    :param ring: target ring; defaults to the ring of the images, else f's ring.
                 Variables without an assignment map to the same-named variable
                 of the target ring.
    :return: Polynomial over the target ring
    """
    images = {}
    for name, value in assignments.items():
        images[f.ring.index(name)] = value
    if ring is None:
        rings = [v.ring for v in images.values() if isinstance(v, Polynomial)]
        ring = rings[0] if rings else f.ring
    tag = join_domains(ring.domain, f.ring.domain)
    for value in images.values():
        if isinstance(value, Polynomial):
            if value.ring.variables != ring.variables:
                raise RingMismatchError('substitution images must share one ring, got %r and %r'
                                        % (value.ring, ring))
            tag = join_domains(tag, value.ring.domain)
        else:
            tag = join_domains(tag, domain_of(value))
    target = ring.with_domain(tag)
    zero = target.zero_exponent
    columns = []
    for i, name in enumerate(f.ring.variables):
        if i in images:
            value = images[i]
            if isinstance(value, Polynomial):
                columns.append(value.terms)
            else:
                columns.append({zero: value} if value != 0 else {})
        elif name in target:
            columns.append({target.unit_exponent(name): 1})
        else:
            columns.append(None)
    powers = [[{zero: 1}] for _ in columns]

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(_mul_terms(cache[-1], columns[i]))
        return cache[e]

    result = {}
    for exps, coeff in f.terms.items():
        term = {zero: coeff}
        for i, e in enumerate(exps):
            if not e:
                continue
            if columns[i] is None:
                raise InputError('variable %s has no image in %r' % (f.ring.variables[i], target))
            term = _mul_terms(term, power(i, e))
            if not term:
                break
        _iadd_terms(result, term)
    return Polynomial._make(target, result)


def linear_change(f, matrix):
    """
    f(M x): old variable i becomes sum_j M[i][j] * x_j.
    :param f: Polynomial in k variables
    :param matrix: k x k invertible matrix of field elements
    :return: Polynomial in the same variables
    """
    ring = f.ring
    if len(matrix) != ring.ngens or any(len(row) != ring.ngens for row in matrix):
        raise InputError('matrix shape does not match %r' % ring)
    if scalar_determinant(matrix) == 0:
        raise InputError('coordinate change matrix is singular')
    gens = ring.gens()
    images = {}
    for name, row in zip(ring.variables, matrix):
        images[name] = reduce(operator.add, (g * entry for g, entry in zip(gens, row) if entry != 0), ring.zero())
    return substitute(f, images, ring)


def order_at_zero(u):
    """
    Lowest exponent with a nonzero coefficient of a univariate polynomial;
    math.inf for zero.
    """
    if len(u.variables_used()) > 1:
        raise InputError('order_at_zero expects a univariate polynomial, got %s' % u)
    return u.lowest_degree()


# gcd machinery

def _first_used_index(*polys):
    used = set()
    for poly in polys:
        used.update(poly.used_indices())
    return min(used) if used else None


def exact_divide(a, b):
    """
    a / b for polynomials when b divides a; ArithmeticError otherwise.
    """
    if b.is_zero():
        raise ZeroDivisionError('polynomial division by zero')
    ring = a._common_ring(b.ring)
    lead_b = max(b.terms)
    lc_b = b.terms[lead_b]
    if len(b.terms) == 1:
        sub = operator.sub
        quotient = {}
        for exps, coeff in a.terms.items():
            shift = tuple(map(sub, exps, lead_b))
            if min(shift) < 0:
                raise ArithmeticError('%s does not divide %s' % (b, a))
            quotient[shift] = field_div(coeff, lc_b)
        return Polynomial._make(ring, quotient)
    remainder = dict(a.terms)
    quotient = {}
    add, sub = operator.add, operator.sub
    while remainder:
        lead = max(remainder)
        shift = tuple(map(sub, lead, lead_b))
        if min(shift) < 0:
            raise ArithmeticError('%s does not divide %s' % (b, a))
        coeff = field_div(remainder[lead], lc_b)
        quotient[shift] = coeff
        for exps, c in b.terms.items():
            key = tuple(map(add, exps, shift))
            value = remainder.get(key, 0) - coeff * c
            if value == 0:
                remainder.pop(key, None)
            else:
                remainder[key] = value
    return Polynomial._make(ring, quotient)


def pseudo_remainder(a, b, index):
    """
    Sparse pseudo-remainder of a by b in the variable with the given index.
    """
    db = b.degree_index(index)
    lc_b = b.coefficients_in(index)[db]
    ring = a.ring
    r = a
    while r.terms and r.degree_index(index) >= db:
        dr = r.degree_index(index)
        lc_r = r.coefficients_in(index)[dr]
        exps = [0] * ring.ngens
        exps[index] = dr - db
        shift = Polynomial._make(b.ring, {tuple(exps): 1})
        r = r * lc_b - b * lc_r * shift
    return r


def _content_and_primitive(f, index):
    coeffs = list(f.coefficients_in(index).values())
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.is_constant():
            break
        content = _gcd(content, c)
    if content.is_constant():
        return f.ring.one(), f.primitive()
    return content, exact_divide(f, content).primitive()


def _gcd(f, g):
    index = _first_used_index(f, g)
    if index is None:
        return f.ring.one()
    cf, pf = _content_and_primitive(f, index)
    cg, pg = _content_and_primitive(g, index)
    content = _gcd(cf, cg)
    a, b = (pf, pg) if pf.degree_index(index) >= pg.degree_index(index) else (pg, pf)
    while True:
        if b.degree_index(index) <= 0:
            gcd = f.ring.one()
            break
        r = pseudo_remainder(a, b, index)
        if r.is_zero():
            gcd = b
            break
        a, b = b, _content_and_primitive(r, index)[1]
    return content * gcd


def poly_gcd(f, g):
    """
    Greatest common divisor by primitive pseudo-remainder sequences,
    recursing on contents. Normalized with ``primitive``.
    """
    ring = f._common_ring(g.ring)
    if f.is_zero() and g.is_zero():
        return ring.zero()
    if f.is_zero():
        return g.change_ring(ring).primitive()
    if g.is_zero():
        return f.change_ring(ring).primitive()
    return _gcd(f.change_ring(ring).primitive(), g.change_ring(ring).primitive()).primitive()


def univariate_gcd(a, b):
    for poly in (a, b):
        if len(poly.variables_used()) > 1:
            raise InputError('%s is not univariate' % poly)
    return poly_gcd(a, b)


def squarefree_part(u):
    """
    u / gcd(u, all partial derivatives), made primitive.
    """
    if u.is_zero():
        raise InputError('the zero polynomial has no square-free part')
    g = u
    for name in u.variables_used():
        g = poly_gcd(g, u.derivative(name))
        if g.is_constant():
            return u.primitive()
    return exact_divide(u, g).primitive()


def repeated_factor(u):
    """
    gcd(u, all partials): a nonconstant result is the product of the
    repeated factors, each with multiplicity lowered by one.
    """
    g = u
    for name in u.variables_used():
        g = poly_gcd(g, u.derivative(name))
        if g.is_constant():
            break
    return g


# matrices, determinants and resultants

class PolyMatrix(object):
    """
    A dense matrix of polynomials over one ring.
    """

    def __init__(self, rows, cols, entries, ring=None):
        """
        :param rows: number of rows
        :param cols: number of columns
        :param entries: row-major list of Polynomials or scalars
        :param ring: ring for scalar entries; defaults to the first polynomial entry's ring
        """
        if rows <= 0 or cols <= 0 or len(entries) != rows * cols:
            raise InputError('matrix of %d x %d needs %d entries, got %d' % (rows, cols, rows * cols, len(entries)))
        if ring is None:
            ring = next((e.ring for e in entries if isinstance(e, Polynomial)), None)
            if ring is None:
                raise InputError('cannot infer the ring of a matrix of scalars')
        lifted = []
        for entry in entries:
            if isinstance(entry, Polynomial):
                ring = entry._common_ring(ring)
                lifted.append(entry)
            else:
                lifted.append(ring.constant(entry))
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = lifted

    @classmethod
    def from_rows(cls, rows, ring=None):
        rows = [list(row) for row in rows]
        return cls(len(rows), len(rows[0]), [e for row in rows for e in row], ring)

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows, cols):
        return PolyMatrix(len(rows), len(cols), [self.entry(i, j) for i in rows for j in cols], self.ring)

    def determinant(self):
        if self.rows != self.cols:
            raise InputError('determinant of a non-square %d x %d matrix' % (self.rows, self.cols))
        return determinant(self)

    def minors(self, size, progress=False):
        return minors(self, size, progress)

    def __str__(self):
        return '\n'.join('[' + ', '.join(str(e) for e in self.row(i)) + ']' for i in range(self.rows))


class _MinorExpander(object):
    """
    Laplace expansion along the first row with memoized sub-minors, so
    overlapping minors of one matrix share work.
    """

    def __init__(self, matrix):
        self.matrix = matrix
        self.memo = {}

    def det(self, rows, cols):
        key = (rows, cols)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if len(rows) == 1:
            value = self.matrix.entry(rows[0], cols[0])
        else:
            value = self.matrix.ring.zero()
            first, rest = rows[0], rows[1:]
            for j, col in enumerate(cols):
                entry = self.matrix.entry(first, col)
                if entry.is_zero():
                    continue
                sub = self.det(rest, cols[:j] + cols[j + 1:])
                if sub.is_zero():
                    continue
                value = value + entry * sub if j % 2 == 0 else value - entry * sub
        self.memo[key] = value
        return value


def bareiss_determinant(matrix):
    """
    Fraction-free Gaussian elimination (Bareiss) over the polynomial ring.
    """
    n = matrix.rows
    work = [list(matrix.row(i)) for i in range(n)]
    sign = 1
    previous = None
    for k in range(n - 1):
        if work[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not work[r][k].is_zero()), None)
            if swap is None:
                return matrix.ring.zero()
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = value if previous is None else exact_divide(value, previous)
        previous = pivot
    result = work[n - 1][n - 1]
    return -result if sign < 0 else result


def determinant(matrix):
    """
    Determinant of a square PolyMatrix. Sparse or small matrices use memoized
    Laplace expansion, dense ones Bareiss elimination.
    """
    n = matrix.rows
    if n != matrix.cols:
        raise InputError('determinant of a non-square matrix')
    nonzero = sum(1 for e in matrix.entries if not e.is_zero())
    if n <= 4 or nonzero <= n * n // 2:
        return _MinorExpander(matrix).det(tuple(range(n)), tuple(range(n)))
    return bareiss_determinant(matrix)


def minors(matrix, size, progress=False):
    """
    All size x size minors, ordered lexicographically by (row subset, column subset).
    """
    if size < 1 or size > min(matrix.rows, matrix.cols):
        raise InputError('minor size %d does not fit a %d x %d matrix' % (size, matrix.rows, matrix.cols))
    expander = _MinorExpander(matrix)
    row_sets = list(itertools.combinations(range(matrix.rows), size))
    col_sets = list(itertools.combinations(range(matrix.cols), size))
    result = []
    for rows in tqdm(row_sets, desc='minors', disable=not progress):
        for cols in col_sets:
            result.append(expander.det(rows, cols))
    LOGGER.debug('computed %d minors of size %d', len(result), size)
    return result


def sylvester_matrix(a, b, name, degrees=None):
    """
    Sylvester matrix of a and b in the variable name.
    :param degrees: formal degrees (m, n) to use instead of the actual ones; a
        form of lower actual degree gets zero leading coefficients, which gives
        the resultant of the corresponding binary forms
    """
    ring = a._common_ring(b.ring)
    i = ring.index(name)
    m, n = a.degree_index(i), b.degree_index(i)
    if degrees is not None:
        if degrees[0] < m or degrees[1] < n:
            raise InputError('formal degrees %r below the actual ones (%d, %d)' % (tuple(degrees), m, n))
        m, n = degrees
    if m <= 0 or n <= 0:
        raise InputError('Sylvester matrix needs positive degree in %s' % name)
    ca, cb = a.coefficients_in(i), b.coefficients_in(i)
    size = m + n
    zero = ring.zero()
    rows = []
    for shift in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[shift + m - k] = ca.get(k, zero)
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[shift + n - k] = cb.get(k, zero)
        rows.append(row)
    return PolyMatrix.from_rows(rows, ring)


def sylvester_resultant(a, b, name, degrees=None):
    """
    Res_name(a, b) as the determinant of the Sylvester matrix; the result
    is free of name.
    """
    if a.is_zero() or b.is_zero():
        raise InputError('resultant of a zero polynomial')
    matrix = sylvester_matrix(a, b, name, degrees)
    return bareiss_determinant(matrix) if matrix.rows > 4 else determinant(matrix)


def monomial_exponents(nvars, degree):
    """
    All exponent tuples of the given total degree, lexicographically descending.
    """
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomial_exponents(nvars - 1, degree - first):
            yield (first,) + rest


# sympy bridge

def to_sympy(poly, symbols=None):
    """
    The polynomial as a sympy expression.
    """
    if symbols is None:
        symbols = sympy.symbols(poly.ring.variables)
        if poly.ring.ngens == 1:
            symbols = (symbols,) if not isinstance(symbols, tuple) else symbols
    expr = sympy.Integer(0)
    for exps, coeff in poly.terms.items():
        value = to_sympy_scalar(coeff)
        monomial = sympy.Integer(1)
        for sym, e in zip(symbols, exps):
            if e:
                monomial *= sym ** e
        expr += value * monomial
    return expr


def from_sympy(expr, ring):
    """
    A rational sympy polynomial expression as a Polynomial of ring.
    """
    symbols = sympy.symbols(ring.variables)
    if ring.ngens == 1 and not isinstance(symbols, tuple):
        symbols = (symbols,)
    sp = sympy.Poly(sympy.expand(expr), *symbols)
    terms = {}
    for monom, coeff in sp.terms():
        if not coeff.is_Rational:
            raise InputError('coefficient %s is not rational' % coeff)
        terms[tuple(int(e) for e in monom)] = as_rational(Fraction(int(coeff.p), int(coeff.q)))
    return Polynomial(ring, terms)
