"""
Rational normal curves and their plane projections.

C_n in P^n is the image of the moment map (s^n, s^(n-1) t, ..., t^n). A
rational plane curve of degree n is the projection of C_n from a center of
codimension 3; this module builds the pieces needed to go back and forth:
ideals of C_n and of its osculating spaces, projections of schemes on it,
parameterizations read off a center, implicit equations and the 1:1 tests.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field

from doublepoints.algebra.exact_arith import QuadExtElement, field_div, matrix_rank, null_space
from doublepoints.algebra.groebner import (GREVLEX, IdealPresentation, eliminate, hilbert_function, ideal_power,
                                           irrelevant_ideal, projective_dimension, ring_map_kernel, saturate,
                                           scheme_length)
from doublepoints.algebra.poly_core import (Polynomial, PolyRing, poly_gcd, squarefree_part, substitute,
                                            sylvester_resultant)
from doublepoints.core_validations import (default_coefficient_bound, default_parameter_variables,
                                           default_plane_variables, default_target_variables,
                                           default_variable_names, split_forms)
from doublepoints.errors import (BasePointError, InputError, MathematicalRefusal, PositiveDimensionalError,
                                 ProjectionUndefined)

LOGGER = logging.getLogger(__name__)


class RationalNormalCurve(object):
    """
    The degree-n rational normal curve C_n in P^n.
    """

    def __init__(self, n, variables=None):
        if n < 2:
            raise InputError('a rational normal curve needs n >= 2, got %d' % n)
        self.n = n
        self.ring = PolyRing(variables or default_variable_names(n + 1))
        if self.ring.ngens != n + 1:
            raise InputError('C_%d lives in a ring with %d variables, got %r' % (n, n + 1, self.ring))

    def ideal(self):
        return rnc_ideal(self.n, self.ring)

    def moment_point(self, tau):
        """
        The point of C_n with parameter tau = (s, t).
        """
        return moment_point(self.n, tau)

    def moment_forms(self, parameter_ring=None):
        parameter_ring = parameter_ring or PolyRing(default_parameter_variables())
        s, t = parameter_ring.gens()
        return [s ** (self.n - i) * t ** i for i in range(self.n + 1)]

    def __repr__(self):
        return 'RationalNormalCurve(%d, %r)' % (self.n, self.ring)


def moment_point(n, tau):
    s, t = tau
    return [s ** (n - i) * t ** i for i in range(n + 1)]


def rnc_ideal(n, ring=None):
    """
    Ideal of C_n: the 2x2 minors of [[z0 .. z_{n-1}], [z1 .. zn]].
    :param n: degree, at least 2
    :param ring: PolyRing with n + 1 variables; a..g (or z0..zn) by default
    :return: IdealPresentation
    """
    if n < 2:
        raise InputError('rnc_ideal needs n >= 2, got %d' % n)
    ring = ring or PolyRing(default_variable_names(n + 1))
    z = ring.gens()
    minors = []
    for i, j in itertools.combinations(range(n), 2):
        minors.append(z[i] * z[j + 1] - z[i + 1] * z[j])
    return IdealPresentation(ring, minors)


def _derivative_rows(n, q, r):
    """
    Rows spanning the osculating space of order r of C_n at q: every partial
    derivative of order <= r of the moment map, evaluated at q.
    """
    parameters = PolyRing(default_parameter_variables())
    curve = RationalNormalCurve(n)
    columns = curve.moment_forms(parameters)
    s_name, t_name = parameters.variables
    rows = []
    for order in range(r + 1):
        for k in range(order + 1):
            row = []
            for form in columns:
                for _ in range(k):
                    form = form.derivative(s_name)
                for _ in range(order - k):
                    form = form.derivative(t_name)
                row.append(form.evaluate(q))
            rows.append(row)
    return rows


def osculating_space_ideal(n, q, r, ring=None):
    """
    Linear forms cutting out O^r_q(C_n), the span of the curvilinear scheme (r+1)q.
    :param n: degree of the rational normal curve
    :param q: point (s, t) of P^1
    :param r: order, 0 <= r <= n - 1
    :return: IdealPresentation generated by n - r linear forms
    """
    if not 0 <= r <= n - 1:
        raise InputError('osculating order %d out of range 0..%d' % (r, n - 1))
    if all(c == 0 for c in q):
        raise InputError('(0:0) is not a point of P^1')
    ring = ring or PolyRing(default_variable_names(n + 1))
    rows = _derivative_rows(n, q, r)
    gens = ring.gens()
    forms = []
    for vector in null_space(rows, n + 1):
        form = sum((g * c for g, c in zip(gens, vector) if c != 0), ring.zero())
        forms.append(form.primitive())
    LOGGER.debug('O^%d at %s of C_%d cut by %d forms', r, q, n, len(forms))
    return IdealPresentation(ring, forms)


def point_ideal(point, ring):
    """
    Ideal of a projective point: the 2x2 minors p_i z_j - p_j z_i.
    """
    if len(point) != ring.ngens:
        raise InputError('point %s does not fit %r' % (point, ring))
    if all(c == 0 for c in point):
        raise InputError('[0:...:0] is not a projective point')
    gens = ring.gens()
    forms = []
    for i, j in itertools.combinations(range(ring.ngens), 2):
        form = gens[j] * point[i] - gens[i] * point[j]
        if not form.is_zero():
            forms.append(form)
    return IdealPresentation(ring, forms)


def fat_line_scheme(n, m, ring=None):
    """
    The scheme mA + mB on C_n, A = [1:0:...:0] and B = [0:...:0:1], cut by
    the m-th power of the ideal of the line AB.
    """
    if m < 1:
        raise InputError('fat_line_scheme needs m >= 1, got %d' % m)
    curve = rnc_ideal(n, ring)
    line = IdealPresentation(curve.ring, curve.ring.gens()[1:n])
    return ideal_power(line, m) + curve


class LinearCenter(object):
    """
    A linear space given by independent linear forms.
    """

    def __init__(self, forms):
        forms = list(forms)
        if not forms:
            raise InputError('a center needs at least one linear form')
        ring = forms[0].ring
        for form in forms:
            if form.ring.variables != ring.variables:
                raise InputError('center forms live in different rings')
            if form.is_zero() or not form.is_homogeneous() or form.total_degree() != 1:
                raise InputError('%s is not a linear form' % form)
        self.ring = ring
        self.forms = forms
        if matrix_rank(self.coefficient_rows()) != len(forms):
            raise InputError('center forms are linearly dependent')

    @classmethod
    def parse(cls, text, ring):
        """
        "a+g; 3f-b-d; 9e+c-d" -> LinearCenter over ring.
        """
        return cls([ring.parse(part) for part in split_forms(text)])

    @property
    def codimension(self):
        return len(self.forms)

    def coefficient_rows(self):
        return [[form.coefficient(self.ring.unit_exponent(v)) for v in self.ring.variables] for form in self.forms]

    def ideal(self):
        return IdealPresentation(self.ring, self.forms)

    def evaluate(self, point):
        return [form.evaluate(point) for form in self.forms]

    def __str__(self):
        return '; '.join(str(form) for form in self.forms)


def linear_section_dimension(first, second):
    """
    Projective dimension of V(first) ∩ V(second); -1 when the intersection is empty.
    :param first: LinearCenter or IdealPresentation
    :param second: LinearCenter or IdealPresentation
    """
    first = first.ideal() if isinstance(first, LinearCenter) else first
    second = second.ideal() if isinstance(second, LinearCenter) else second
    return projective_dimension(first + second)


def _check_center_misses(scheme, center):
    meet = hilbert_function(scheme + center.ideal())
    if meet.stable_value != 0:
        raise ProjectionUndefined('the center %s meets the scheme' % center)


def project_scheme(scheme, center, targets=None, method='kernel'):
    """
    Image of a projective scheme under the linear projection from center.

    The kernel method computes the graded kernel of K[targets] -> K[z]/I up to
    a degree past the regularity bound and saturates it; it needs a
    0-dimensional scheme. The elimination method adds u_i - l_i, saturates
    and eliminates the ambient variables.
    :param scheme: homogeneous IdealPresentation in the ambient ring
    :param center: LinearCenter over the same ring
    :param targets: names of the plane coordinates, u, v, w by default
    :param method: 'kernel' or 'elimination'
    :return: IdealPresentation over PolyRing(targets)
    """
    if scheme.ring.variables != center.ring.variables:
        raise InputError('scheme in %r, center in %r' % (scheme.ring, center.ring))
    targets = tuple(targets or default_target_variables()[:center.codimension])
    if len(targets) != center.codimension:
        raise InputError('%d target names for %d center forms' % (len(targets), center.codimension))
    clash = [name for name in targets if name in scheme.ring]
    if clash:
        raise InputError('target names %s clash with the ambient variables' % ','.join(clash))
    _check_center_misses(scheme, center)
    target = PolyRing(targets, scheme.ring.domain)
    if method == 'kernel':
        data = hilbert_function(scheme)
        if not data.stabilized:
            LOGGER.info('scheme is not 0-dimensional, projecting by elimination')
            method = 'elimination'
        else:
            bound = max(data.stable_value, data.stable_from) + 2
            kernel = IdealPresentation(target, ring_map_kernel(scheme, center.forms, target, bound))
            result = saturate(kernel, irrelevant_ideal(target))
    if method == 'elimination':
        ambient = scheme.ring
        big = PolyRing(ambient.variables + targets, ambient.domain)
        gens = [g.change_ring(big) for g in scheme.generators]
        gens += [big.gen(name) - form.change_ring(big) for name, form in zip(targets, center.forms)]
        # the ambient variables and all variables share a radical over this ideal
        saturated = saturate(IdealPresentation(big, gens), irrelevant_ideal(big))
        result = eliminate(saturated, ambient.variables).change_ring(target)
    elif method != 'kernel':
        raise InputError('unknown projection method %r' % method)
    if result.is_unit():
        raise ProjectionUndefined('projection collapsed to the unit ideal')
    LOGGER.info('projected scheme: %s', result)
    return IdealPresentation(target, result.reduced_generators())


class PlaneParameterization(object):
    """
    Three binary forms (f0, f1, f2) of the same degree without a common zero.
    """

    def __init__(self, forms, proper=None, center=None):
        forms = list(forms)
        if len(forms) != 3:
            raise InputError('a plane parameterization needs 3 forms, got %d' % len(forms))
        ring = forms[0].ring
        for form in forms[1:]:
            ring = form._common_ring(ring)
        if ring.ngens != 2:
            raise InputError('parameterization forms must be binary, got %r' % ring)
        forms = [form.change_ring(ring) for form in forms]
        degrees = {form.total_degree() for form in forms if not form.is_zero()}
        if len(degrees) != 1 or not all(form.is_homogeneous() for form in forms):
            raise InputError('parameterization forms must be homogeneous of one degree')
        self.ring = ring
        self.forms = forms
        self.n = degrees.pop()
        if self.n < 1:
            raise InputError('parameterization forms must have positive degree')
        common = poly_gcd(poly_gcd(forms[0], forms[1]), forms[2])
        if not common.is_constant():
            raise BasePointError('the forms share the factor %s (center meets the curve)' % common)
        self.proper = proper
        self.center = center

    @classmethod
    def parse(cls, text, ring=None):
        """
        "f0; f1; f2" over (s, t) by default.
        """
        ring = ring or PolyRing(default_parameter_variables())
        parts = split_forms(text)
        if len(parts) != 3:
            raise InputError('expected three forms separated by ";", got %d' % len(parts))
        return cls([ring.parse(part) for part in parts])

    @property
    def degree(self):
        return self.n

    def coefficient_rows(self):
        """
        a_{j,i} with f_j = sum_i a_{j,i} s^(n-i) t^i.
        """
        return [[form.coefficient((self.n - i, i)) for i in range(self.n + 1)] for form in self.forms]

    def image_point(self, tau):
        return image_point(self, tau)

    def __str__(self):
        return '; '.join(str(form) for form in self.forms)

    def __repr__(self):
        return 'PlaneParameterization(%s)' % self


def parameterization_from_center(n, center, parameter_ring=None):
    """
    f_j = l_j(s^n, s^(n-1) t, ..., t^n) for the three forms of center.
    :raises BasePointError: the center meets C_n
    """
    if center.codimension != 3:
        raise InputError('a plane projection needs 3 center forms, got %d' % center.codimension)
    if center.ring.ngens != n + 1:
        raise InputError('center of %r does not live in P^%d' % (center.ring, n))
    parameter_ring = parameter_ring or PolyRing(default_parameter_variables(), center.ring.domain)
    curve = RationalNormalCurve(n, center.ring.variables)
    columns = curve.moment_forms(parameter_ring)
    images = dict(zip(center.ring.variables, columns))
    forms = [substitute(form, images, parameter_ring) for form in center.forms]
    for form in forms:
        if form.is_zero():
            raise BasePointError('center form vanishes on all of C_%d' % n)
    return PlaneParameterization(forms, center=center)


def image_point(p, tau):
    """
    [f0(tau) : f1(tau) : f2(tau)], scaled so the first nonzero coordinate is 1.
    """
    values = [form.evaluate(list(tau)) for form in p.forms]
    return normalize_point(values)


def normalize_point(values):
    pivot = next((c for c in values if c != 0), None)
    if pivot is None:
        raise BasePointError('parameter %s is a base point' % (values,))
    scaled = [field_div(c, pivot) for c in values]
    return [c.a if isinstance(c, QuadExtElement) and c.b == 0 else c for c in scaled]


def fiber_form(p, point):
    """
    gcd of the cross products Q_i f_j - Q_j f_i: the binary form whose roots
    are the parameters mapping to Q, with multiplicity.
    """
    if len(point) != 3:
        raise InputError('plane point needs 3 coordinates, got %s' % (point,))
    result = p.ring.zero()
    for i, j in itertools.combinations(range(3), 2):
        cross = p.forms[j] * point[i] - p.forms[i] * point[j]
        result = poly_gcd(result, cross)
    return result


@dataclass
class ImplicitCurve(object):
    """
    Square-free implicit equation of the image, with the degree of the map.
    minimal is False when deg F does not divide the degree of the forms.
    """
    equation: Polynomial
    map_degree: int
    minimal: bool = True
    extraneous: list = field(default_factory=list)


def _strip_monomial_factor(poly):
    if poly.is_zero():
        return poly
    low = tuple(min(e[i] for e in poly.terms) for i in range(poly.ring.ngens))
    if not any(low):
        return poly
    return Polynomial(poly.ring, {tuple(a - b for a, b in zip(e, low)): c for e, c in poly.terms.items()})


def implicit_curve(p, variables=None):
    """
    Implicit equation of the image of p.

    Res_t(X_j f_b - X_b f_j, X_k f_b - X_b f_k) is taken with the forms read as
    binary forms of formal degree n, so it equals X_b^n F^deg(map) up to a
    constant. Monomial factors are stripped and the square-free part kept;
    the base coordinate b is rotated when the resultant vanishes.
    :param p: PlaneParameterization
    :param variables: names of the plane coordinates, x, y, z by default
    :return: ImplicitCurve
    """
    plane = PolyRing(variables or default_plane_variables(), p.ring.domain)
    s_name, t_name = p.ring.variables
    if t_name in plane:
        raise InputError('parameter %s clashes with the plane coordinates' % t_name)
    work = PolyRing((t_name,) + plane.variables, p.ring.domain)
    affine = [form.dehomogenize(s_name, work) for form in p.forms]
    coords = [work.gen(name) for name in plane.variables]
    for base in range(3):
        others = [j for j in range(3) if j != base]
        first, second = [coords[j] * affine[base] - coords[base] * affine[j] for j in others]
        resultant = sylvester_resultant(first, second, t_name, degrees=(p.n, p.n))
        if resultant.is_zero():
            LOGGER.debug('resultant vanishes with base coordinate %d', base)
            continue
        resultant = resultant.change_ring(plane)
        equation = squarefree_part(_strip_monomial_factor(resultant)).primitive()
        images = dict(zip(plane.variables, p.forms))
        if not substitute(equation, images, p.ring).is_zero():
            raise MathematicalRefusal('resultant factor %s does not vanish on the parameterization' % equation)
        degree = equation.total_degree()
        minimal = degree > 0 and p.n % degree == 0
        map_degree = p.n // degree if minimal else None
        LOGGER.info('implicit equation of degree %d, map degree %s', degree, map_degree)
        return ImplicitCurve(equation, map_degree, minimal)
    raise MathematicalRefusal('parameterization not birational onto a curve of that presentation')


def implicitize(p, variables=None):
    return implicit_curve(p, variables).equation


def properness_check(p, point=None):
    """
    (proper, map degree) from the degree of the implicit equation; when a
    plane point is given its fiber must also be a single reduced parameter.
    """
    curve = implicit_curve(p)
    proper = curve.map_degree == 1
    if point is not None and proper:
        fiber = fiber_form(p, point)
        proper = fiber.total_degree() == 1
        LOGGER.debug('fiber over %s: %s', point, fiber)
    return proper, curve.map_degree


def cone_fiber_ideal(n, center, vertex):
    """
    C_n intersected with the cone over V(center) with the given vertex of the
    plane, saturated: the fiber of the projection over the vertex.
    :param center: LinearCenter with 3 forms in the ring of C_n
    :param vertex: plane point [Q0, Q1, Q2]
    :return: IdealPresentation, a single reduced point iff its stable Hilbert value is 1
    """
    if len(vertex) != center.codimension:
        raise InputError('vertex %s does not match a center of codimension %d' % (vertex, center.codimension))
    forms = center.forms
    cone = []
    for i, j in itertools.combinations(range(len(forms)), 2):
        form = forms[j] * vertex[i] - forms[i] * vertex[j]
        if not form.is_zero():
            cone.append(form)
    scheme = rnc_ideal(n, center.ring) + IdealPresentation(center.ring, cone)
    return saturate(scheme, irrelevant_ideal(center.ring))


def contains_linear_form(ideal):
    """
    Whether the ideal has a nonzero element of degree <= 1 (for an affine ideal,
    whether its scheme lies on a line).
    """
    basis = ideal.groebner_basis(GREVLEX)
    return any(sum(lead) <= 1 for lead in basis.leading_monomials())


def is_curvilinear(ideal, point):
    """
    A 0-dimensional scheme is curvilinear at P iff I + I_P^2 has length <= 2,
    i.e. its tangent space at P has dimension <= 1.
    """
    square = ideal_power(point_ideal(point, ideal.ring), 2)
    try:
        return scheme_length(ideal + square) <= 2
    except PositiveDimensionalError:
        return False


def random_proper_parameterization(n, rng=None, bound=None, attempts=100):
    """
    Projection of C_n from a random center with small integer coefficients,
    rejecting centers meeting C_n and maps that are not 1:1.

    Properness is certified by the fiber over the image of a random
    parameter: a degree-k map has fibers of degree >= k.
    """
    rng = rng or random.Random(0)
    bound = bound or default_coefficient_bound()
    ring = PolyRing(default_variable_names(n + 1))
    gens = ring.gens()
    for _ in range(attempts):
        forms = [sum((g * rng.randint(-bound, bound) for g in gens), ring.zero()) for _ in range(3)]
        try:
            center = LinearCenter(forms)
            p = parameterization_from_center(n, center)
        except (InputError, BasePointError):
            continue
        tau = (rng.randint(1, bound), rng.randint(-bound, bound))
        fiber = fiber_form(p, image_point(p, tau))
        if fiber.total_degree() == 1:
            p.proper = True
            LOGGER.debug('random proper parameterization of degree %d: %s', n, p)
            return p
    raise MathematicalRefusal('no proper parameterization found in %d attempts' % attempts)
