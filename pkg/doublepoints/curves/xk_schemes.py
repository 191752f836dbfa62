"""
The schemes X_k of a parameterized plane curve and the singularity census.

For f = (f0, f1, f2) of degree n, M_k stacks n-k+1 shifted bands of
x_0..x_k over the three coefficient rows of f. A point R of X_2 is a binary
quadratic R0 s^2 + R1 st + R2 t^2 whose two roots map to one point of the
curve; the local length of X_2 at R is the delta invariant there and R lies
on the conic y^2 - 4xz exactly when the point is cuspidal.
"""

import logging
import math
import random
from dataclasses import dataclass, field

import pandas as pd
import sympy

from doublepoints.algebra.exact_arith import (field_div, field_sqrt, format_field_element, mat_vec,
                                              null_space, scalar_determinant, scalar_inverse)
from doublepoints.algebra.groebner import (GREVLEX, IdealPresentation, hilbert_function, minimal_polynomial,
                                           saturate_by_element, scheme_length, zero_dim_radical)
from doublepoints.algebra.poly_core import PolyMatrix, PolyRing, Polynomial, from_sympy, linear_change, minors
from doublepoints.core_validations import default_plane_variables, max_radical_attempts
from doublepoints.curves.classifier import DOUBLE_POINT, MULTIPLICITY_AT_LEAST_3, classify_double_point
from doublepoints.curves.rational_curves import implicit_curve, normalize_point
from doublepoints.errors import ExtensionUnsupported, InputError, MathematicalRefusal, StepCapExceeded

LOGGER = logging.getLogger(__name__)


def xk_variables(k):
    """
    Coordinates of P^k: x, y, z for k = 2, else x0..xk.
    """
    if k == 2:
        return default_plane_variables()
    return tuple('x%d' % i for i in range(k + 1))


def cusp_conic(ring):
    """
    y^2 - 4xz: the quadratics with a double root.
    """
    x, y, z = ring.gens()
    return y * y - x * z * 4


@dataclass
class MkMatrix(object):
    k: int
    n: int
    matrix: PolyMatrix

    @property
    def ring(self):
        return self.matrix.ring

    @property
    def minor_size(self):
        return self.n - self.k + 3


def build_Mk(p, k):
    """
    The (n-k+4) x (n+1) matrix M_k of a parameterization.
    :param p: PlaneParameterization of degree n
    :param k: 2 <= k <= n - 1
    :return: MkMatrix
    """
    n = p.n
    if not 2 <= k <= n - 1:
        raise InputError('k = %d out of range 2..%d' % (k, n - 1))
    ring = PolyRing(xk_variables(k), p.ring.domain)
    gens = ring.gens()
    zero = ring.zero()
    rows = []
    for shift in range(n - k + 1):
        row = [zero] * (n + 1)
        for j, x in enumerate(gens):
            row[shift + j] = x
        rows.append(row)
    for coefficients in p.coefficient_rows():
        rows.append([ring.constant(c) for c in coefficients])
    return MkMatrix(k, n, PolyMatrix.from_rows(rows, ring))


def xk_ideal(p, k, progress=False):
    """
    Ideal of X_k: the (n-k+3)-minors of M_k.
    """
    mk = build_Mk(p, k)
    generators = [g for g in minors(mk.matrix, mk.minor_size, progress) if not g.is_zero()]
    LOGGER.debug('X_%d: %d nonzero minors of size %d', k, len(generators), mk.minor_size)
    return IdealPresentation(mk.ring, [g.primitive() for g in generators])


def xk_is_empty(p, k):
    """
    X_k is empty iff the curve has no point of multiplicity >= k.
    """
    data = hilbert_function(xk_ideal(p, k))
    return data.stable_value == 0


def _quadratic_roots(R):
    r0, r1, r2 = R
    if r0 != 0:
        discriminant = r1 * r1 - r0 * r2 * 4
        root = field_sqrt(discriminant)
        return [(field_div(-r1 + root, r0 * 2), 1), (field_div(-r1 - root, r0 * 2), 1)]
    if r1 != 0:
        return [(1, 0), (-r2, r1)]
    return [(1, 0), (1, 0)]


def x2_point_to_image(p, R):
    """
    The point of the curve over which the quadratic R0 s^2 + R1 st + R2 t^2 sits.
    :raises InputError: the two roots map to different points (R is not on X_2)
    :raises ExtensionUnsupported: the roots need a second quadratic extension
    """
    if len(R) != 3 or all(c == 0 for c in R):
        raise InputError('%s is not a point of P^2' % (R,))
    first, second = [p.image_point(tau) for tau in _quadratic_roots(R)]
    if first != second:
        raise InputError('the roots of %s map to %s and %s' % (R, first, second))
    return first


@dataclass
class SupportPoint(object):
    """
    A support point of X_2, or a Galois orbit of them when coordinates is None.
    degree counts the geometric points represented; length is per point.
    """
    coordinates: object
    degree: int
    length: int
    cusp: bool
    eliminant: object = None
    ideal: object = field(default=None, repr=False)
    image: object = None
    s: object = None
    label: object = None
    consistent: object = None
    note: object = None

    def to_dict(self):
        result = {'delta': self.length, 'cusp': self.cusp, 'degree': self.degree}
        if self.coordinates is not None:
            result['coords'] = [format_field_element(c) for c in self.coordinates]
        else:
            result['cluster_eliminant'] = str(self.eliminant)
        if self.image is not None:
            result['image'] = [format_field_element(c) for c in self.image]
        if self.s is not None:
            result['s'] = self.s
        if self.label is not None:
            result['label'] = self.label
        if self.note:
            result['note'] = self.note
        return result


@dataclass
class SingularityCensus(object):
    n: int
    x2_length: int
    hilbert: list
    radical_length: int
    radical_hilbert: list
    conic_hilbert: list
    points: list
    equation: object = None

    @property
    def expected_length(self):
        return math.comb(self.n - 1, 2)

    @property
    def length_law_holds(self):
        return self.x2_length == self.expected_length

    @property
    def support_size(self):
        return sum(point.degree for point in self.points)

    @property
    def cusp_free(self):
        return not any(point.cusp for point in self.points)

    def labels(self):
        """
        Counts of A_s labels over all geometric points, e.g. {'A5': 1, 'A1': 7}.
        """
        counts = {}
        for point in self.points:
            if point.label is not None:
                counts[point.label] = counts.get(point.label, 0) + point.degree
        return counts

    def to_dict(self):
        return {'n': self.n, 'x2_length': self.x2_length, 'hilbert': self.hilbert,
                'radical_length': self.radical_length, 'radical_hilbert': self.radical_hilbert,
                'conic_hilbert': self.conic_hilbert,
                'length_law_holds': self.length_law_holds,
                'equation': None if self.equation is None else str(self.equation),
                'points': [point.to_dict() for point in self.points]}

    def to_frame(self):
        return pd.DataFrame([point.to_dict() for point in self.points])


def _random_change(rng, size=3, bound=3):
    while True:
        matrix = [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
        if scalar_determinant(matrix) != 0:
            return matrix


def _factor_rational(poly):
    """
    Irreducible factors over Q of a univariate Polynomial (sympy).
    """
    _, factors = sympy.factor_list(poly.to_sympy())
    return [from_sympy(factor, poly.ring).monic() for factor, _ in factors]


def _quadratic_factor_roots(factor):
    c0, c1, c2 = [factor.coefficient((i,)) for i in range(3)]
    root = field_sqrt(c1 * c1 - c0 * c2 * 4)
    return [field_div(-c1 + root, c2 * 2), field_div(-c1 - root, c2 * 2)]


def _shape_position(radical, count, rng, attempts):
    """
    A random coordinate change after which no support point lies on z = 0
    and x separates the support points.
    :return: (matrix, affine Gröbner basis, minimal polynomial of x, y as a polynomial in x)
    """
    ring = radical.ring
    x_name, y_name, z_name = ring.variables
    chart = ring.drop([z_name])
    line = PolyRing([x_name], ring.domain)
    for attempt in range(attempts):
        matrix = _random_change(rng)
        moved = IdealPresentation(ring, [linear_change(g, matrix) for g in radical.generators])
        if hilbert_function(moved + IdealPresentation(ring, [ring.gen(z_name)])).stable_value != 0:
            continue
        affine = IdealPresentation(chart, [g.dehomogenize(z_name, chart) for g in moved.generators])
        basis = affine.groebner_basis(GREVLEX)
        eliminant = minimal_polynomial(chart.gen(x_name), basis, line)
        if eliminant.total_degree() != count:
            LOGGER.debug('x does not separate the support after change %s', matrix)
            continue
        # y = q(x) on the support: solve NF(y) = sum c_i NF(x^i)
        x = chart.gen(x_name)
        powers = [basis.reduce_terms((x ** i).terms) for i in range(count)]
        target = basis.reduce_terms(chart.gen(y_name).terms)
        support = sorted(set().union(target.keys(), *[f.keys() for f in powers]))
        rows = [[f.get(m, 0) for f in powers] + [-target.get(m, 0)] for m in support]
        relation = next(v for v in null_space(rows, count + 1) if v[count] != 0)
        terms = {(i,): field_div(c, relation[count]) for i, c in enumerate(relation[:count]) if c != 0}
        y_of_x = Polynomial(line, terms)
        LOGGER.debug('shape position after %d attempt(s)', attempt + 1)
        return matrix, eliminant, y_of_x
    raise MathematicalRefusal('no coordinates in shape position found in %d attempts' % attempts)


def support_clusters(radical, rng=None, attempts=None):
    """
    Splits the support of a reduced 0-dimensional scheme in P^2 into Galois
    orbits over Q.

    After a random coordinate change the support is {x = root of e(x), y = q(x)};
    e is factored over Q (sympy) and each factor gives one orbit, with
    explicit coordinates when the factor has degree <= 2.
    :param radical: radical IdealPresentation over Q in three variables
    :return: list of dicts with keys factor, points, ideal, separator
    """
    ring = radical.ring
    count = scheme_length(radical)
    if count == 0:
        return []
    rng = rng or random.Random(0)
    matrix, eliminant, y_of_x = _shape_position(radical, count, rng, attempts or max_radical_attempts())
    inverse = scalar_inverse(matrix)
    x_name, y_name, z_name = ring.variables
    chart = ring.drop([z_name])
    clusters = []
    for factor in _factor_rational(eliminant):
        roots = None
        if factor.total_degree() == 1:
            roots = [field_div(-factor.coefficient((0,)), factor.coefficient((1,)))]
        elif factor.total_degree() == 2:
            roots = _quadratic_factor_roots(factor)
        points = None
        if roots is not None:
            points = [normalize_point(mat_vec(matrix, [xi, y_of_x.evaluate([xi]), 1])) for xi in roots]
        in_chart = factor.change_ring(chart)
        affine = IdealPresentation(chart, [in_chart, chart.gen(y_name) - y_of_x.change_ring(chart)])
        closure = [g.homogenize(z_name, ring) for g in affine.groebner_basis(GREVLEX).polynomials]
        ideal = IdealPresentation(ring, [linear_change(g, inverse).primitive() for g in closure])
        separator = linear_change(in_chart.homogenize(z_name, ring), inverse)
        clusters.append({'factor': factor, 'points': points, 'ideal': ideal, 'separator': separator})
    return clusters


def x2_census(p, rng=None, progress=False):
    """
    Singularity census of a proper parameterization from its scheme X_2.

    Total length from the Hilbert function, support from the radical, the
    length at an orbit as x2_length - length(IX2 : h^oo) where h vanishes on
    that orbit and on no other support point, cusps from membership of
    y^2 - 4xz in the orbit's ideal.
    :param p: PlaneParameterization with n >= 3
    :return: SingularityCensus
    """
    if p.n < 3:
        raise InputError('the census needs n >= 3, got %d' % p.n)
    rng = rng or random.Random(0)
    ideal = xk_ideal(p, 2, progress)
    data = hilbert_function(ideal)
    if not data.stabilized:
        raise MathematicalRefusal('X_2 is not 0-dimensional; the parameterization is not proper')
    total = data.stable_value
    conic = cusp_conic(ideal.ring)
    conic_data = hilbert_function(ideal + IdealPresentation(ideal.ring, [conic]))
    if total != math.comb(p.n - 1, 2):
        LOGGER.warning('length of X_2 is %d, expected %d', total, math.comb(p.n - 1, 2))
    radical = zero_dim_radical(ideal, rng)
    radical_data = hilbert_function(radical)
    if not radical_data.stabilized:
        raise MathematicalRefusal('the radical of X_2 is not 0-dimensional')
    radical_length = radical_data.stable_value
    points = []
    for cluster in support_clusters(radical, rng):
        rest = scheme_length(saturate_by_element(ideal, cluster['separator']))
        degree = cluster['factor'].total_degree()
        aggregate = total - rest
        if aggregate % degree:
            raise MathematicalRefusal('orbit of %d points has length %d' % (degree, aggregate))
        cusp = cluster['ideal'].contains(conic)
        length = aggregate // degree
        if cluster['points'] is None:
            points.append(SupportPoint(None, degree, length, cusp, eliminant=cluster['factor'],
                                       ideal=cluster['ideal']))
            continue
        for coordinates in cluster['points']:
            point = SupportPoint(coordinates, 1, length, cusp, eliminant=cluster['factor'], ideal=cluster['ideal'])
            try:
                point.image = x2_point_to_image(p, coordinates)
            except ExtensionUnsupported as error:
                point.note = str(error)
            points.append(point)
    census = SingularityCensus(p.n, total, data.values, radical_length, radical_data.values, conic_data.values,
                               points)
    LOGGER.info('census: length %d over %d support points', total, census.support_size)
    return census


def _label_by_length(point):
    # delta 1 double points: A1 off the conic, A2 on it
    if point.length == 1:
        point.s = 2 if point.cusp else 1
        point.label = 'A%d' % point.s


def classify_all_singularities(p, census=None, rng=None):
    """
    Runs the classifier at the image of every support point of X_2 and checks
    that delta = ceil(s/2) matches the local length of X_2.
    :return: SingularityCensus with s and label filled in where possible
    """
    census = census or x2_census(p, rng)
    curve = implicit_curve(p)
    if curve.map_degree != 1:
        raise MathematicalRefusal('the parameterization is not proper (map degree %s)' % curve.map_degree)
    census.equation = curve.equation
    for point in census.points:
        if point.image is None:
            _label_by_length(point)
            continue
        try:
            verdict, _ = classify_double_point(curve.equation, point.image)
        except (ExtensionUnsupported, StepCapExceeded) as error:
            point.note = str(error)
            _label_by_length(point)
            continue
        if verdict.kind == MULTIPLICITY_AT_LEAST_3:
            point.label = 'unclassified'
            point.note = 'multiplicity %d' % verdict.multiplicity
        elif verdict.kind == DOUBLE_POINT:
            point.s = verdict.s
            point.label = verdict.name
            point.consistent = verdict.delta == point.length
            if not point.consistent:
                LOGGER.warning('delta %d of %s disagrees with the X_2 length %d', verdict.delta, verdict.name,
                               point.length)
        else:
            point.note = 'image point is smooth'
            point.consistent = False
    LOGGER.info('singularities: %s', census.labels())
    return census
