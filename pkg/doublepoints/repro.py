"""
Named reproduction cases with their expected exact outputs.

Each case runs the engines on a fixed input and returns a list of checks
(expected value, observed value); a case passes when every check is an
exact equality.
"""

import logging
import time
from dataclasses import dataclass, field

from doublepoints.algebra.exact_arith import QuadExtElement, format_field_element
from doublepoints.algebra.groebner import IdealPresentation, hilbert_function, scheme_length
from doublepoints.algebra.poly_core import PolyRing
from doublepoints.curves.classifier import classify_double_point, normal_form_curve
from doublepoints.curves.local_intersection import branch_separation, graph_intersection_multiplicity
from doublepoints.curves.rational_curves import (LinearCenter, PlaneParameterization, cone_fiber_ideal,
                                                 fat_line_scheme, is_curvilinear, linear_section_dimension,
                                                 osculating_space_ideal, parameterization_from_center,
                                                 point_ideal, project_scheme, properness_check, rnc_ideal)
from doublepoints.curves.xk_schemes import build_Mk, classify_all_singularities
from doublepoints.errors import InputError

LOGGER = logging.getLogger(__name__)

SEXTIC_CENTER = 'a+g; 3*f-b-d; 9*e+c-d'
SEXTIC_PARAMETERIZATION = 's^6+t^6; -s^5*t+3*s*t^5-s^3*t^3; 9*s^2*t^4+s^4*t^2-s^3*t^3'
OSCNODE_QUARTIC = 'y^2*z^2 - 2*x^2*y*z + x^4 + x^2*y^2'


def _display(value):
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (list, tuple)):
        return '[%s]' % ', '.join(_display(v) for v in value)
    if isinstance(value, dict):
        return '{%s}' % ', '.join('%s: %s' % (k, _display(v)) for k, v in sorted(value.items()))
    if isinstance(value, (set, frozenset)):
        return '{%s}' % ', '.join(sorted(_display(v) for v in value))
    return format_field_element(value) if isinstance(value, (int, QuadExtElement)) else str(value)


@dataclass
class Check(object):
    name: str
    expected: object
    observed: object

    @property
    def passed(self):
        return self.expected == self.observed

    def to_dict(self):
        return {'check': self.name, 'expected': _display(self.expected), 'observed': _display(self.observed),
                'passed': self.passed}


@dataclass
class ReproCase(object):
    name: str
    anchor: str
    description: str
    runner: object = field(repr=False)
    slow: bool = False

    def run(self):
        start = time.time()
        checks = self.runner()
        result = ReproResult(self, checks, time.time() - start)
        LOGGER.info('%s: %s in %.2fs', self.name, 'pass' if result.passed else 'FAIL', result.elapsed)
        return result


@dataclass
class ReproResult(object):
    case: ReproCase
    checks: list
    elapsed: float

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def to_dict(self):
        return {'case': self.case.name, 'anchor': self.case.anchor, 'passed': self.passed,
                'elapsed': round(self.elapsed, 3), 'checks': [check.to_dict() for check in self.checks]}

    def records(self):
        return [dict(case=self.case.name, **check.to_dict()) for check in self.checks]


def _plane_ring():
    return PolyRing(('x', 'y', 'z'))


def _classify_text(text, point=(0, 0, 1)):
    return classify_double_point(_plane_ring().parse(text), list(point))


def _oscnode_quartic():
    verdict, trace = _classify_text(OSCNODE_QUARTIC)
    i = QuadExtElement.sqrt(-1)
    f = _plane_ring().parse(OSCNODE_QUARTIC).dehomogenize('z')
    return [
        Check('type', 'A5', verdict.name),
        Check('tangent slope', 0, trace.steps[0].root),
        Check('osculating conic coefficient', 1, trace.steps[1].root),
        Check('third-order coefficients', {i, -i}, {w.coefficients[2] for w in verdict.witnesses}),
        Check('contact with each branch', [7, 7], [graph_intersection_multiplicity(f, w).value
                                                    for w in verdict.witnesses]),
        Check('branch separation', 3, branch_separation(*verdict.witnesses).value),
    ]


def _remark_case(text, expected, infinite_branch=False):
    def run():
        verdict, trace = _classify_text(text)
        checks = [Check('type', expected, verdict.name)]
        if infinite_branch:
            observed = any(step.multiplicity is not None and step.multiplicity.is_infinite for step in trace)
            checks.append(Check('branch contained in the curve', True, observed))
        return checks
    return run


def _normal_form_case(s):
    def run():
        verdict, trace = classify_double_point(normal_form_curve(s), [0, 0, 1])
        return [Check('type', 'A%d' % s, verdict.name), Check('steps', (s + 2) // 2, len(trace))]
    return run


def sextic_center():
    ring = PolyRing(tuple('abcdefg'))
    return LinearCenter.parse(SEXTIC_CENTER, ring)


def _sextic_projection():
    center = sextic_center()
    ring = center.ring
    a, b, c, d, e, f, g = ring.gens()
    target = PolyRing(('u', 'v', 'w'))
    u, v, w = target.gens()
    line = IdealPresentation(ring, [b, c, d, e, f])
    checks = [
        Check('center meets the line AB in a point', 0, linear_section_dimension(center, line)),
        Check('center misses O2 at A', -1, linear_section_dimension(center, osculating_space_ideal(6, (1, 0), 2))),
        Check('center misses O2 at B', -1, linear_section_dimension(center, osculating_space_ideal(6, (0, 1), 2))),
        Check('O2 at B', IdealPresentation(ring, [a, b, c, d]), osculating_space_ideal(6, (0, 1), 2)),
    ]
    three = project_scheme(fat_line_scheme(6, 3), center)
    checks.append(Check('image of 3A+3B', IdealPresentation(target, [w * w, v * w, v * v - u * w]), three))
    checks.append(Check('Hilbert function of the image of 3A+3B', [1, 3, 3, 3], hilbert_function(three).values[:4]))
    checks.append(Check('image of 3A+3B is curvilinear', True, is_curvilinear(three, [1, 0, 0])))
    four = project_scheme(fat_line_scheme(6, 4), center)
    checks.append(Check('image of 4A+4B', IdealPresentation(target, [w * w, v * v * w, v ** 3 - u * v * w]), four))
    checks.append(Check('Hilbert function of the image of 4A+4B', [1, 3, 5, 5], hilbert_function(four).values[:4]))
    checks.append(Check('length of the image of 4A+4B', 5, scheme_length(four)))
    checks.append(Check('image of 4A+4B is curvilinear', False, is_curvilinear(four, [1, 0, 0])))
    point = project_scheme(rnc_ideal(6, ring) + point_ideal([1] * 7, ring), center)
    checks.append(Check('image of R', IdealPresentation(target, [v - w / 9, u - w * 2 / 9]), point))
    fiber = cone_fiber_ideal(6, center, [2, 1, 9])
    checks.append(Check('fiber over the image of R', point_ideal([1] * 7, ring), fiber))
    return checks


def _sextic_census():
    center = sextic_center()
    p = parameterization_from_center(6, center)
    expected = PlaneParameterization.parse(SEXTIC_PARAMETERIZATION)
    mk = build_Mk(p, 2)
    constant_rows = [[entry.constant_value() for entry in mk.matrix.row(i)] for i in range(5, 8)]
    census = classify_all_singularities(p)
    return [
        Check('parameterization', [str(form) for form in expected.forms], [str(form) for form in p.forms]),
        Check('coefficient rows of M_2', [[1, 0, 0, 0, 0, 0, 1], [0, -1, 0, -1, 0, 3, 0], [0, 0, 1, -1, 9, 0, 0]],
              constant_rows),
        Check('proper with a reduced fiber over [2:1:9]', (True, 1), properness_check(p, [2, 1, 9])),
        Check('Hilbert function of X_2', [1, 3, 6, 10, 10], census.hilbert[:5]),
        Check('Hilbert function of the radical of X_2', [1, 3, 6, 8, 8], census.radical_hilbert[:5]),
        Check('support size', 8, census.radical_length),
        Check('Hilbert function of X_2 on the cusp conic', [1, 3, 5, 7, 4, 0], census.conic_hilbert[:6]),
        Check('length of X_2', 10, census.x2_length),
        Check('singularities', {'A5': 1, 'A1': 7}, census.labels()),
    ]


def repro_manifest():
    """
    All reproduction cases, in a fixed order.
    :return: list of ReproCase
    """
    cases = [
        ReproCase('example-4.1', 'oscnode-quartic',
                  'y^2 - 2x^2 y + x^4 + x^2 y^2 at the origin is A5 with two conjugate cubic branches',
                  _oscnode_quartic),
        ReproCase('example-6.1-part1', 'sextic-projection',
                  '3A+3B on C_6 projects to a curvilinear scheme, 4A+4B does not', _sextic_projection),
        ReproCase('example-6.1-part2', 'sextic-census',
                  'X_2 of the projected sextic gives one A5 and seven nodes', _sextic_census, slow=True),
        ReproCase('remark-3.2', 'ramphoid-cusp', 'y^2 - x^5 at the origin is A4',
                  _remark_case('y^2*z^3 - x^5', 'A4')),
        ReproCase('remark-3.3', 'tacnode-with-line', 'y(y - x^2) is A3; the branch y = 0 lies on the curve',
                  _remark_case('y^2*z - x^2*y', 'A3', infinite_branch=True)),
        ReproCase('ordinary-cusp', 'cuspidal-cubic', 'x1^2 x2 - x0^3 at [0:0:1] is A2',
                  _remark_case('y^2*z - x^3', 'A2')),
    ]
    for s in range(1, 13):
        cases.append(ReproCase('normal-forms-%d' % s, 'normal-form y^2 z^(s-1) - x^(s+1)',
                               'normal form of A%d, verdict at step %d' % (s, (s + 2) // 2), _normal_form_case(s)))
    return cases


def find_cases(names=None, include_slow=True):
    """
    Cases by name; a name that prefixes whole cases (example-6.1, normal-forms)
    selects all of them.
    :param names: list of case names, all cases when empty
    :param include_slow: keep slow cases when no names are given
    :return: list of ReproCase
    """
    cases = repro_manifest()
    if not names:
        return [case for case in cases if include_slow or not case.slow]
    known = {case.name: case for case in cases}
    selected = []
    for name in names:
        if name in known:
            selected.append(known[name])
            continue
        group = [case for case in cases if case.name.startswith(name + '-')]
        if not group:
            raise InputError('unknown reproduction case %r' % name)
        selected.extend(group)
    return selected
