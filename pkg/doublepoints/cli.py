"""
Command-line surface.

    doublepoints classify --curve "x1^2*x2 - x0^3" --point "0,0,1" --trace
    doublepoints implicitize --param "s^2; s*t; t^2"
    doublepoints analyze-param --param "<f0; f1; f2>" --classify --json
    doublepoints project --n 6 --center "a+g; 3*f-b-d; 9*e+c-d" --fat 3
    doublepoints gb --ideal ideal.txt --order lex
    doublepoints repro example-6.1

Exit status: 0 on success, 1 when the request is mathematically refused,
2 on malformed input.
"""

import argparse
import json
import logging
import random
import sys

from tqdm import tqdm

from doublepoints import __version__
from doublepoints.algebra.exact_arith import format_field_element
from doublepoints.algebra.groebner import (GREVLEX, LEX, IdealPresentation, eliminate, hilbert_function,
                                           irrelevant_ideal, saturate, zero_dim_radical)
from doublepoints.algebra.poly_core import PolyRing
from doublepoints.core_validations import (curve_variables_for, default_random_seed, default_variable_names,
                                           parse_point)
from doublepoints.curves.classifier import classify_double_point
from doublepoints.curves.rational_curves import (LinearCenter, PlaneParameterization, fat_line_scheme,
                                                 implicit_curve, point_ideal, project_scheme, rnc_ideal)
from doublepoints.curves.xk_schemes import classify_all_singularities, x2_census
from doublepoints.data_loader import parse_ring, process_ideal_source
from doublepoints.errors import InputError, MathematicalRefusal
from doublepoints.repro import find_cases, repro_manifest
from doublepoints.reporting import Report, Sheet

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2


def _ideal_document(ideal):
    return {'ring': list(ideal.ring.variables), 'generators': [str(g) for g in ideal.reduced_generators()]}


def _load_ideal(args, source=None):
    ring = parse_ring(args.ring) if getattr(args, 'ring', None) else None
    return process_ideal_source(source or args.ideal, ring)


def run_classify(args):
    ring = PolyRing(curve_variables_for(args.curve))
    form = ring.parse(args.curve)
    point = parse_point(args.point)
    verdict, trace = classify_double_point(form, point, args.cap)
    document = verdict.to_dict(include_trace=args.trace)
    lines = ['%s at [%s]' % (verdict.name, ':'.join(format_field_element(c) for c in point))]
    if verdict.delta is not None:
        lines.append('delta %d, %s branch(es)' % (verdict.delta, verdict.branches))
    lines.extend('witness: %s' % w for w in verdict.original_witnesses)
    sheets = [Sheet.from_records('trace', [step.to_dict() for step in trace])] if args.trace else []
    return document, '\n'.join(lines), sheets


def run_implicitize(args):
    p = PlaneParameterization.parse(args.param)
    curve = implicit_curve(p)
    document = {'equation': str(curve.equation), 'degree': curve.equation.total_degree(),
                'map_degree': curve.map_degree, 'minimal': curve.minimal}
    text = '%s\nmap degree %s' % (curve.equation, curve.map_degree)
    return document, text, []


def run_analyze(args):
    p = PlaneParameterization.parse(args.param)
    rng = random.Random(args.seed)
    census = x2_census(p, rng, progress=args.progress)
    if args.classify:
        census = classify_all_singularities(p, census, rng)
    text = 'X_2 length %d (expected %d), %d support point(s)\n%s' % (
        census.x2_length, census.expected_length, census.support_size, census.to_frame().to_string(index=False))
    return census.to_dict(), text, [Sheet('census', census.to_frame())]


def run_project(args):
    ring = PolyRing(default_variable_names(args.n + 1))
    center = LinearCenter.parse(args.center, ring)
    if args.fat:
        scheme = fat_line_scheme(args.n, args.fat, ring)
    elif args.point:
        scheme = rnc_ideal(args.n, ring) + point_ideal(parse_point(args.point, args.n + 1), ring)
    elif args.scheme:
        scheme = process_ideal_source(args.scheme, ring)
    else:
        raise InputError('project needs one of --scheme, --fat or --point')
    targets = tuple(args.targets.split(',')) if args.targets else None
    image = project_scheme(scheme, center, targets, args.method)
    data = hilbert_function(image)
    document = _ideal_document(image)
    document['hilbert'] = data.values
    document['length'] = data.stable_value
    return document, '%s\nHilbert function %s' % (image, data.values), []


def run_gb(args):
    ideal = _load_ideal(args)
    order = LEX if args.order == 'lex' else GREVLEX
    basis = ideal.groebner_basis(order)
    document = {'ring': list(ideal.ring.variables), 'order': args.order,
                'basis': [str(g) for g in basis.polynomials]}
    return document, '\n'.join(document['basis']), []


def run_hilbert(args):
    data = hilbert_function(_load_ideal(args), upto=args.upto)
    document = {'values': data.values, 'stable_value': data.stable_value, 'stable_from': data.stable_from}
    text = ', '.join(str(v) for v in data.values)
    if data.stabilized:
        text += '\nstable value %d from degree %d' % (data.stable_value, data.stable_from)
    return document, text, []


def run_eliminate(args):
    result = eliminate(_load_ideal(args), [name.strip() for name in args.drop.split(',') if name.strip()])
    return _ideal_document(result), str(result), []


def run_saturate(args):
    ideal = _load_ideal(args)
    if args.by == 'irrelevant':
        by = irrelevant_ideal(ideal.ring)
    else:
        by = process_ideal_source(args.by, ideal.ring)
    result = IdealPresentation(ideal.ring, saturate(ideal, by).reduced_generators())
    return _ideal_document(result), str(result), []


def run_radical(args):
    result = zero_dim_radical(_load_ideal(args), random.Random(args.seed))
    result = IdealPresentation(result.ring, result.reduced_generators())
    return _ideal_document(result), str(result), []


def run_repro(args):
    if args.list:
        cases = repro_manifest()
        document = [{'case': case.name, 'anchor': case.anchor, 'description': case.description, 'slow': case.slow}
                    for case in cases]
        return document, '\n'.join('%-20s %s' % (case.name, case.description) for case in cases), []
    cases = find_cases(args.cases, include_slow=not args.skip_slow)
    results = [case.run() for case in tqdm(cases, disable=not args.progress)]
    records = [record for result in results for record in result.records()]
    lines = ['%-20s %s (%.2fs)' % (r.case.name, 'pass' if r.passed else 'FAIL', r.elapsed) for r in results]
    document = {'passed': all(r.passed for r in results), 'cases': [r.to_dict() for r in results]}
    if not document['passed']:
        raise ReproFailure(document, '\n'.join(lines))
    return document, '\n'.join(lines), [Sheet.from_records('repro', records)]


class ReproFailure(MathematicalRefusal):
    def __init__(self, document, text):
        super().__init__('reproduction mismatch')
        self.document = document
        self.text = text


COMMANDS = {
    'classify': run_classify,
    'implicitize': run_implicitize,
    'analyze-param': run_analyze,
    'project': run_project,
    'gb': run_gb,
    'hilbert': run_hilbert,
    'eliminate': run_eliminate,
    'saturate': run_saturate,
    'radical': run_radical,
    'repro': run_repro,
}


def _add_ideal_arguments(parser):
    parser.add_argument('--ideal', required=True, help='ideal file, or inline generators separated by ";"')
    parser.add_argument('--ring', help='ring for inline generators, e.g. "x,y,z" or "ring: QQ[x,y,z]"')


def build_parser():
    parser = argparse.ArgumentParser(prog='doublepoints', description='Exact double point classification')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--json', action='store_true', help='print one JSON document')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging')
    parser.add_argument('--progress', action='store_true', help='show progress bars')
    parser.add_argument('--report', metavar='DIR', help='also write CSV reports to DIR')
    sub = parser.add_subparsers(dest='command', required=True)

    classify = sub.add_parser('classify', help='classify a point of a plane curve')
    classify.add_argument('--curve', required=True)
    classify.add_argument('--point', required=True, help='"x0,x1,x2"; coordinates may use sqrt(d)')
    classify.add_argument('--cap', type=int, help='maximal number of steps')
    classify.add_argument('--trace', action='store_true', help='include the step trace')

    implicitize = sub.add_parser('implicitize', help='implicit equation of a parameterization')
    implicitize.add_argument('--param', required=True, help='"f0; f1; f2" in s, t')

    analyze = sub.add_parser('analyze-param', help='singularity census from X_2')
    analyze.add_argument('--param', required=True)
    analyze.add_argument('--classify', action='store_true', help='run the classifier at every support point')
    analyze.add_argument('--seed', type=int, default=default_random_seed())

    project = sub.add_parser('project', help='project a scheme on C_n from a linear center')
    project.add_argument('--n', type=int, required=True)
    project.add_argument('--center', required=True, help='linear forms separated by ";"')
    project.add_argument('--scheme', help='ideal file or inline generators')
    project.add_argument('--fat', type=int, help='use the scheme mA + mB on C_n')
    project.add_argument('--point', help='use a point of C_n given by its coordinates')
    project.add_argument('--targets', help='names of the plane coordinates, default u,v,w')
    project.add_argument('--method', choices=('kernel', 'elimination'), default='kernel')

    gb = sub.add_parser('gb', help='reduced Groebner basis')
    _add_ideal_arguments(gb)
    gb.add_argument('--order', choices=('grevlex', 'lex'), default='grevlex')

    hilbert = sub.add_parser('hilbert', help='Hilbert function of a homogeneous ideal')
    _add_ideal_arguments(hilbert)
    hilbert.add_argument('--upto', type=int)

    elim = sub.add_parser('eliminate', help='elimination ideal')
    _add_ideal_arguments(elim)
    elim.add_argument('--drop', required=True, help='variables to eliminate, comma separated')

    sat = sub.add_parser('saturate', help='saturation I : J^oo')
    _add_ideal_arguments(sat)
    sat.add_argument('--by', required=True, help='ideal J, or "irrelevant"')

    radical = sub.add_parser('radical', help='radical of a 0-dimensional homogeneous ideal')
    _add_ideal_arguments(radical)
    radical.add_argument('--seed', type=int, default=default_random_seed())

    repro = sub.add_parser('repro', help='run reproduction cases')
    repro.add_argument('cases', nargs='*', help='case names; all cases when omitted')
    repro.add_argument('--list', action='store_true', help='list the cases')
    repro.add_argument('--skip-slow', action='store_true')
    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(asctime)s %(name)s %(message)s')


def _emit(args, document, text):
    if args.json:
        print(json.dumps(document, sort_keys=True))
    else:
        print(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        document, text, sheets = COMMANDS[args.command](args)
    except ReproFailure as failure:
        _emit(args, failure.document, failure.text)
        return EXIT_REFUSED
    except InputError as error:
        print('input error: %s' % error, file=sys.stderr)
        return EXIT_INPUT
    except MathematicalRefusal as error:
        print('refused: %s' % error, file=sys.stderr)
        return EXIT_REFUSED
    _emit(args, document, text)
    if args.report and sheets:
        report = Report(args.command, args.report)
        for sheet in sheets:
            report.add_to_report(sheet)
        report.save_report()
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
