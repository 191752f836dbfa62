"""
Responsible for loading ideals from files or inline text.

An ideal file starts with a ring line and lists one or more generators per
line, separated by ';'. Blank lines and lines starting with '#' are skipped:

    ring: QQ[a,b,c,d,e,f,g]
    a*c - b^2; a*d - b*c
    e*g - f^2
"""

import logging
import os
import re

from doublepoints.algebra.exact_arith import parse_rational
from doublepoints.algebra.groebner import IdealPresentation
from doublepoints.algebra.poly_core import PolyRing
from doublepoints.core_validations import is_variable_name, split_forms
from doublepoints.errors import InputError, ParseError

LOGGER = logging.getLogger(__name__)

_RING_RE = re.compile(r'^\s*ring\s*:\s*QQ(?:\[\s*sqrt\(\s*(?P<d>[+-]?\d+)\s*\)\s*\])?\s*\[(?P<names>[^\]]*)\]\s*$')


def parse_ring(text):
    """
    "ring: QQ[x,y,z]" or "ring: QQ[sqrt(-1)][x,y]" -> PolyRing; a bare "x,y,z" is accepted too.
    """
    match = _RING_RE.match(text)
    if match is None:
        if 'ring' in text or '[' in text:
            raise ParseError('not a ring declaration: %r' % text, text, 0)
        names, domain = text, None
    else:
        names = match.group('names')
        domain = parse_rational(match.group('d')) if match.group('d') else None
    variables = [name.strip() for name in names.split(',') if name.strip()]
    if not variables or not all(is_variable_name(name) for name in variables):
        raise InputError('bad variable list %r' % names)
    return PolyRing(variables, domain)


def parse_ideal_text(text, ring=None):
    """
    Parses the ideal file format; ring overrides or replaces the ring line.
    :param text: file contents
    :param ring: PolyRing used when the text has no ring line
    :return: IdealPresentation
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if lines and lines[0].startswith('ring'):
        declared = parse_ring(lines.pop(0))
        ring = ring or declared
    if ring is None:
        raise InputError('no ring given: start the ideal with a line "ring: QQ[...]"')
    generators = []
    for line in lines:
        generators.extend(ring.parse(part) for part in split_forms(line))
    LOGGER.debug('loaded %d generators over %r', len(generators), ring)
    return IdealPresentation(ring, generators)


def load_ideal(file, ring=None):
    """
    Loads an ideal file.
    :param file: path
    :return: IdealPresentation
    """
    if not os.path.isfile(file):
        raise InputError('no such ideal file: %s' % file)
    with open(file, 'r') as fh:
        return parse_ideal_text(fh.read(), ring)


def process_ideal_source(source, ring=None):
    """
    Detects whether source is a file or inline text ("f1; f2" with ring, or
    the full file format) and loads it.
    """
    if os.path.isfile(source):
        return load_ideal(source, ring)
    return parse_ideal_text(source.replace('\\n', '\n'), ring)
