"""
Classification of a point of a reduced plane curve: smooth, of multiplicity
at least three, or an A_s double point.

The point is moved to [0,0,1], the affine equation is arranged so that its
y^2 coefficient a02 is nonzero, and then osculating graphs
y = l_1 x + ... + l_r x^r are built one degree at a time. At step r the
coefficient of x^(2r) in f(x, l_1 x + ... + l_(r-1) x^(r-1) + L x^r) is a
quadratic A L^2 + B L + C with A = a02:

  * nonzero discriminant: two osculating graphs, the point is A_(2r-1);
  * zero discriminant: one candidate l_r = -B/(2A); if it meets the curve
    with multiplicity exactly 2r+1 the point is A_(2r), otherwise the next
    step starts.
"""

import logging
from dataclasses import dataclass, field, replace

from doublepoints.algebra.exact_arith import (domain_of, field_div, field_sqrt, format_field_element,
                                              join_domains, mat_mul, scalar_inverse)
from doublepoints.algebra.poly_core import PolyRing, linear_change, repeated_factor, substitute
from doublepoints.core_validations import default_step_cap, is_homogeneous_curve
from doublepoints.curves.local_intersection import GraphCurve, graph_intersection_multiplicity
from doublepoints.errors import InputError, MathematicalRefusal, NonReducedCurveError, StepCapExceeded

LOGGER = logging.getLogger(__name__)

SMOOTH = 'smooth'
MULTIPLICITY_AT_LEAST_3 = 'multiplicity_at_least_3'
DOUBLE_POINT = 'double_point'


@dataclass
class NormalizedCurve(object):
    """
    original(transform * X) dehomogenized at X_2 = 1 is affine; transform
    sends [0,0,1] to the query point.
    """
    original: object
    point: list
    transform: list
    affine: object
    a02_fixed: bool
    change: str = 'none'

    def coefficient(self, i, j):
        return self.affine.coefficient((i, j))


@dataclass
class StepRecord(object):
    r: int
    quadratic: tuple
    discriminant: object
    branch: str
    root: object = None
    roots: tuple = ()
    multiplicity: object = None

    def to_dict(self):
        return {'r': self.r,
                'quad': [format_field_element(c) for c in self.quadratic],
                'delta': format_field_element(self.discriminant),
                'branch': self.branch,
                'root': None if self.root is None else format_field_element(self.root),
                'roots': [format_field_element(c) for c in self.roots],
                'i': None if self.multiplicity is None else self.multiplicity.to_json()}


@dataclass
class StepTrace(object):
    steps: list = field(default_factory=list)

    def append(self, record):
        self.steps.append(record)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_dict(self):
        return [step.to_dict() for step in self.steps]


@dataclass
class Verdict(object):
    """
    Outcome of a classification. For double points s is the A_s index and
    witnesses holds the osculating graphs in normalized coordinates;
    original_witnesses holds the same curves as plane curves in the caller's
    coordinates.
    """
    kind: str
    multiplicity: int
    s: object = None
    tangent: object = None
    witnesses: list = field(default_factory=list)
    original_witnesses: list = field(default_factory=list)
    original_tangent: object = None
    trace: StepTrace = field(default_factory=StepTrace)

    @property
    def name(self):
        if self.kind == DOUBLE_POINT:
            return 'A%d' % self.s
        return self.kind

    @property
    def delta(self):
        """
        delta invariant: ceil(s/2) for A_s, 0 at a smooth point.
        """
        if self.kind == SMOOTH:
            return 0
        if self.kind == DOUBLE_POINT:
            return (self.s + 1) // 2
        return None

    @property
    def branches(self):
        if self.kind == DOUBLE_POINT:
            return 2 if self.s % 2 else 1
        return 1 if self.kind == SMOOTH else None

    def to_dict(self, include_trace=True):
        result = {'kind': self.kind, 's': self.s, 'multiplicity': self.multiplicity,
                  'tangent': None if self.original_tangent is None else str(self.original_tangent),
                  'delta': self.delta, 'branches': self.branches,
                  'witnesses': [w.to_dict() for w in self.witnesses],
                  'original_witnesses': [str(w) for w in self.original_witnesses]}
        if include_trace:
            result['trace'] = self.trace.to_dict()
        return result


def _point_transform(point):
    """
    Invertible matrix with columns e_i, e_j, point, so that [0,0,1] maps to point.
    """
    pivot = max(k for k, c in enumerate(point) if c != 0)
    others = [k for k in range(3) if k != pivot]
    matrix = [[0, 0, 0] for _ in range(3)]
    matrix[others[0]][0] = 1
    matrix[others[1]][1] = 1
    for k in range(3):
        matrix[k][2] = point[k]
    return matrix


def _affine_chart(form):
    """
    form(x, y, 1) in the ring (x, y).
    """
    plane = PolyRing(['x', 'y'], form.ring.domain)
    last = form.ring.variables[2]
    chart = form.dehomogenize(last)
    renamed = {chart.ring.variables[0]: plane.gen('x'), chart.ring.variables[1]: plane.gen('y')}
    return substitute(chart, renamed, plane)


def normalize_at_point(form, point):
    """
    Moves point to [0,0,1] and, at a singular point with a nonzero quadratic
    part, makes the y^2 coefficient nonzero (swap x and y when a20 != 0,
    else the shear x -> x + y when only a11 != 0).
    :param form: homogeneous Polynomial in three variables
    :param point: three field elements, not all zero, with form(point) = 0
    :return: NormalizedCurve
    """
    if not is_homogeneous_curve(form):
        raise InputError('%s is not a nonzero ternary form' % form)
    point = list(point)
    if len(point) != 3 or all(c == 0 for c in point):
        raise InputError('%s is not a point of P^2' % (point,))
    if form.evaluate(point) != 0:
        raise InputError('the curve %s does not pass through [%s]'
                         % (form, ':'.join(format_field_element(c) for c in point)))
    transform = _point_transform(point)
    moved = linear_change(form, transform)
    affine = _affine_chart(moved)
    change = 'none'
    linear = affine.homogeneous_part(1)
    quadratic = affine.homogeneous_part(2)
    if linear.is_zero() and not quadratic.is_zero() and affine.coefficient((0, 2)) == 0:
        if affine.coefficient((2, 0)) != 0:
            step = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
            change = 'swap'
        else:
            step = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
            change = 'shear'
        transform = mat_mul(transform, step)
        moved = linear_change(form, transform)
        affine = _affine_chart(moved)
        LOGGER.debug('applied %s so that a02 != 0', change)
    return NormalizedCurve(original=form, point=point, transform=transform, affine=affine,
                           a02_fixed=affine.coefficient((0, 2)) != 0, change=change)


def multiplicity_at_origin(f):
    """
    Degree of the lowest nonzero homogeneous part of f.
    """
    if f.is_zero():
        raise NonReducedCurveError('the zero polynomial is not a reduced curve')
    if f.constant_value() != 0:
        raise InputError('%s does not vanish at the origin' % f)
    return f.lowest_degree()


def tangent_line(f):
    """
    a10 x + a01 y for a curve smooth at the origin.
    """
    return f.homogeneous_part(1)


def _step_quadratic(f, fixed, r):
    """
    (A, B, C) with A L^2 + B L + C the coefficient of x^(2r) in
    f(x, fixed(x) + L x^r).
    """
    x_name, y_name = f.ring.variables
    ring = PolyRing([x_name, 'L'], f.ring.domain)
    x, unknown = ring.gen(0), ring.gen(1)
    graph = GraphCurve(tuple(fixed)).series(ring, x_name) + unknown * x ** r
    restricted = substitute(f, {x_name: x, y_name: graph}, ring)
    quadratic = [0, 0, 0]
    for (ex, el), coeff in restricted.terms.items():
        if ex < 2 * r:
            if el != 0:
                raise MathematicalRefusal('coefficient of x^%d depends on the step unknown' % ex)
        elif ex == 2 * r:
            if el > 2:
                raise MathematicalRefusal('step quadratic has degree %d' % el)
            quadratic[el] = coeff
    return quadratic[2], quadratic[1], quadratic[0]


def classify_double_point(form, point, cap=None):
    """
    Classifies point on the reduced curve form = 0.
    :param form: homogeneous Polynomial in three variables, without repeated factors
    :param point: projective point on the curve
    :param cap: maximal number of steps; defaults to deg^2 + 2
    :return: (Verdict, StepTrace)
    """
    if not is_homogeneous_curve(form):
        raise InputError('%s is not a nonzero ternary form' % form)
    repeated = repeated_factor(form)
    if not repeated.is_constant():
        raise NonReducedCurveError('the curve has the repeated factor %s' % repeated, repeated)
    normalized = normalize_at_point(form, point)
    f = normalized.affine
    multiplicity = multiplicity_at_origin(f)
    trace = StepTrace()
    if multiplicity == 1:
        verdict = Verdict(kind=SMOOTH, multiplicity=1, tangent=tangent_line(f), trace=trace)
        return witnesses_in_original_coordinates(verdict, normalized), trace
    if multiplicity >= 3:
        verdict = Verdict(kind=MULTIPLICITY_AT_LEAST_3, multiplicity=multiplicity, trace=trace)
        return witnesses_in_original_coordinates(verdict, normalized), trace
    if cap is None:
        cap = default_step_cap(form.total_degree())
    a02 = f.coefficient((0, 2))
    fixed = []
    for r in range(1, cap + 1):
        a, b, c = _step_quadratic(f, fixed, r)
        if a != a02:
            raise MathematicalRefusal('step quadratic leads with %s instead of a02 = %s' % (a, a02))
        discriminant = b * b - 4 * a * c
        if discriminant != 0:
            root = field_sqrt(discriminant, join_domains(f.ring.domain, domain_of(discriminant)))
            roots = (field_div(-b + root, 2 * a), field_div(-b - root, 2 * a))
            trace.append(StepRecord(r, (a, b, c), discriminant, '%d-a' % r, roots=roots))
            witnesses = [GraphCurve(tuple(fixed) + (lam,)) for lam in roots]
            LOGGER.debug('step %d: discriminant %s, two branches', r, format_field_element(discriminant))
            verdict = Verdict(kind=DOUBLE_POINT, multiplicity=2, s=2 * r - 1, witnesses=witnesses, trace=trace)
            return witnesses_in_original_coordinates(verdict, normalized), trace
        root = field_div(-b, 2 * a)
        candidate = GraphCurve(tuple(fixed) + (root,))
        meeting = graph_intersection_multiplicity(f, candidate)
        if meeting == 2 * r + 1:
            trace.append(StepRecord(r, (a, b, c), discriminant, '%d-b1' % r, root=root, multiplicity=meeting))
            LOGGER.debug('step %d: unique root %s meets with multiplicity %s', r, root, meeting)
            verdict = Verdict(kind=DOUBLE_POINT, multiplicity=2, s=2 * r, witnesses=[candidate], trace=trace)
            return witnesses_in_original_coordinates(verdict, normalized), trace
        if meeting < 2 * r + 2:
            raise MathematicalRefusal('multiplicity %s below 2r+2 at step %d' % (meeting, r))
        trace.append(StepRecord(r, (a, b, c), discriminant, '%d-b2' % r, root=root, multiplicity=meeting))
        LOGGER.debug('step %d: unique root %s meets with multiplicity %s, continuing', r, root, meeting)
        fixed.append(root)
    raise StepCapExceeded('no verdict within %d steps' % cap, trace)


def _to_original(curve, normalized):
    """
    A plane curve given in normalized coordinates, as a form in the caller's coordinates.
    """
    ring = normalized.original.ring.with_domain(join_domains(normalized.original.ring.domain, curve.ring.domain))
    names = ring.variables
    plane = curve.ring
    homogeneous = substitute(curve.homogenize('Z'),
                             {plane.variables[0]: ring.gen(0), plane.variables[1]: ring.gen(1), 'Z': ring.gen(2)},
                             ring)
    inverse = scalar_inverse(normalized.transform)
    result = linear_change(homogeneous, inverse)
    if result.ring.variables != names:
        raise MathematicalRefusal('witness landed in %s, expected %s' % (result.ring.variables, names))
    return result.primitive()


def witnesses_in_original_coordinates(verdict, normalized):
    """
    Fills original_witnesses (and original_tangent) by pulling the
    normalized-coordinate curves back through the coordinate change.
    """
    f = normalized.affine
    plane = f.ring
    originals = []
    for witness in verdict.witnesses:
        ring = plane.with_domain(join_domains(plane.domain, witness.domain))
        originals.append(_to_original(witness.equation(ring), normalized))
    tangent = None
    if verdict.tangent is not None:
        tangent = _to_original(verdict.tangent, normalized)
    return replace(verdict, original_witnesses=originals, original_tangent=tangent)


def normal_form_curve(s, ring=None):
    """
    y^2 z^(s-1) - x^(s+1), whose point [0,0,1] is an A_s double point.
    """
    if s < 1:
        raise InputError('A_s needs s >= 1')
    ring = ring or PolyRing(['x', 'y', 'z'])
    x, y, z = ring.gens()
    return y ** 2 * z ** (s - 1) - x ** (s + 1)


def classify_affine(f, cap=None):
    """
    Classifies the origin of an affine curve f(x, y) = 0.
    """
    if f.ring.ngens != 2:
        raise InputError('classify_affine needs a polynomial in two variables')
    return classify_double_point(f.homogenize('z'), [0, 0, 1], cap)
