"""
Intersection multiplicities at the origin of the affine plane.

Two independent routes: substitution of a graph y = c_1 x + ... + c_t x^t
into the curve (what the classifier uses), and dimension counts of the
truncated local algebra K[x,y]/((f,g) + (x,y)^N), used to cross-check it.
"""

import functools
import logging
import math
from dataclasses import dataclass

from doublepoints.algebra.exact_arith import domain_of, format_field_element, join_domains, matrix_rank
from doublepoints.algebra.poly_core import PolyRing, monomial_exponents, order_at_zero, substitute
from doublepoints.core_validations import default_oracle_cap
from doublepoints.errors import InputError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphCurve(object):
    """
    The smooth curve y = c_1 x + ... + c_t x^t through the origin.
    """
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(self.coefficients))

    @property
    def degree(self):
        return len(self.coefficients)

    @property
    def domain(self):
        tag = None
        for c in self.coefficients:
            tag = join_domains(tag, domain_of(c))
        return tag

    def series(self, ring, name=None):
        """
        c_1 x + ... + c_t x^t as a polynomial of ring in the variable name.
        """
        x = ring.gen(name or ring.variables[0])
        result = ring.zero()
        power = ring.one()
        for c in self.coefficients:
            power = power * x
            if c != 0:
                result = result + power * c
        return result

    def equation(self, ring):
        """
        y - g(x) in a ring whose first two variables play x and y.
        """
        return ring.gen(1) - self.series(ring, ring.variables[0])

    def difference(self, other):
        size = max(self.degree, other.degree)
        mine = self.coefficients + (0,) * (size - self.degree)
        theirs = other.coefficients + (0,) * (size - other.degree)
        return GraphCurve(tuple(a - b for a, b in zip(mine, theirs)))

    def to_dict(self):
        tag = self.domain
        return {'coeffs': [format_field_element(c) for c in self.coefficients],
                'field': 'base' if tag is None else {'quadext': tag}}

    def __str__(self):
        ring = PolyRing(['x'], self.domain)
        return 'y = %s' % self.series(ring)


@functools.total_ordering
@dataclass(frozen=True)
class MultiplicityValue(object):
    """
    A natural number or math.inf; cap_reached marks an infinity that only
    means "no stabilization within the cap".
    """
    value: object
    cap_reached: bool = False

    @property
    def is_infinite(self):
        return self.value == math.inf

    def _other(self, other):
        if isinstance(other, MultiplicityValue):
            return other.value
        if isinstance(other, (int, float)):
            return other
        return NotImplemented

    def __eq__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return self.value == value

    def __lt__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return self.value < value

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        return MultiplicityValue(self.value + self._other(other), self.cap_reached)

    def __str__(self):
        return 'inf' if self.is_infinite else str(self.value)

    def to_json(self):
        return 'inf' if self.is_infinite else self.value


def _check_vanishes(poly, label):
    if poly.ring.ngens != 2:
        raise InputError('%s must be a polynomial in two variables, got %r' % (label, poly.ring))
    if poly.constant_value() != 0:
        raise InputError('%s = %s does not vanish at the origin' % (label, poly))


def graph_intersection_multiplicity(f, graph):
    """
    i(f, graph, O) as the order at x = 0 of f(x, g(x)).
    :param f: Polynomial in two variables (x, y) with f(0,0) = 0
    :param graph: GraphCurve
    :return: MultiplicityValue, infinite iff y - g(x) divides f
    """
    _check_vanishes(f, 'f')
    x_name, y_name = f.ring.variables
    line = PolyRing([x_name], join_domains(f.ring.domain, graph.domain))
    restricted = substitute(f, {x_name: line.gen(x_name), y_name: graph.series(line)}, line)
    return MultiplicityValue(order_at_zero(restricted))


def _truncated_codimension(f, g, bound):
    """
    dim K[x,y] / ((f, g) + (x,y)^bound).
    """
    columns = [e for d in range(bound) for e in monomial_exponents(2, d)]
    position = {e: i for i, e in enumerate(columns)}
    rows = []
    for poly in (f, g):
        low = poly.lowest_degree()
        for d in range(max(0, bound - low)):
            for shift in monomial_exponents(2, d):
                row = [0] * len(columns)
                for exps, coeff in poly.terms.items():
                    moved = (exps[0] + shift[0], exps[1] + shift[1])
                    if moved[0] + moved[1] < bound:
                        row[position[moved]] = coeff
                if any(row):
                    rows.append(row)
    rank = matrix_rank(rows) if rows else 0
    return len(columns) - rank


def truncated_local_multiplicity(f, g, cap=None):
    """
    Local intersection multiplicity at the origin from the truncated local algebra.

    d_N = dim K[x,y]/((f,g) + m^N) is computed for N = 1, 2, ... and the first
    N with d_N = d_{N+1} gives the answer.
    :param f: Polynomial in two variables, vanishing at the origin
    :param g: Polynomial in the same ring, vanishing at the origin
    :param cap: largest N tried; defaults to default_oracle_cap
    :return: MultiplicityValue (infinite with cap_reached when no plateau shows up)
    """
    _check_vanishes(f, 'f')
    _check_vanishes(g, 'g')
    ring = f._common_ring(g.ring)
    f, g = f.change_ring(ring), g.change_ring(ring)
    if cap is None:
        cap = default_oracle_cap(max(f.total_degree(), 1), max(g.total_degree(), 1))
    previous = _truncated_codimension(f, g, 1)
    for bound in range(2, cap + 2):
        current = _truncated_codimension(f, g, bound)
        if current == previous:
            LOGGER.debug('oracle stabilized at N=%d with value %d', bound - 1, current)
            return MultiplicityValue(current)
        previous = current
    LOGGER.debug('oracle reached cap %d without stabilizing', cap)
    return MultiplicityValue(math.inf, cap_reached=True)


def branch_separation(first, second):
    """
    i(D_1, D_2, O) for two graphs: the order of g_1 - g_2.
    """
    difference = first.difference(second)
    ring = PolyRing(['x'], difference.domain)
    return MultiplicityValue(order_at_zero(difference.series(ring)))


def intersection_multiplicity_with_graph_oracle(f, graph):
    """
    The oracle run against the graph's own equation, for cross-checks.
    """
    ring = f.ring.with_domain(join_domains(f.ring.domain, graph.domain))
    return truncated_local_multiplicity(f.change_ring(ring), graph.equation(ring))
