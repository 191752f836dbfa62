"""
Manages core defaults and input validations of the package
"""

import re
from datetime import datetime

from doublepoints.algebra.exact_arith import parse_field_element
from doublepoints.errors import InputError


def default_step_cap(degree):
    """
    Returns the default number of classifier steps for a curve of the given degree
    :param degree: degree n of the curve
    :return: n^2 + 2
    """
    return degree * degree + 2


def default_oracle_cap(degree_f, degree_g):
    """
    Returns the truncation bound of the local-algebra multiplicity oracle
    :param degree_f: total degree of the first curve
    :param degree_g: total degree of the second curve
    :return: 2 * deg f * deg g + 4
    """
    return 2 * degree_f * degree_g + 4


def max_radical_attempts():
    """
    Returns how many random charts zero_dim_radical tries before giving up
    """
    return 5


def default_random_seed():
    return 0


def default_coefficient_bound():
    """
    Returns the bound on |coefficients| of random linear forms (projection centers, charts)
    """
    return 5


def default_curve_variables():
    return ('x0', 'x1', 'x2')


def default_plane_variables():
    """
    Returns the coordinates used for implicit equations of parameterized curves
    """
    return ('x', 'y', 'z')


def default_parameter_variables():
    return ('s', 't')


def default_target_variables():
    """
    Returns the fresh coordinates of the projection plane
    """
    return ('u', 'v', 'w')


def default_variable_names(count):
    """
    Returns names for the coordinates z_0..z_n of P^n: a, b, c, ... while they
    fit before the parameter and target letters, else z0, z1, ...
    :param count: number of variables (n + 1)
    :return: tuple of names
    """
    if count <= 7:
        return tuple('abcdefg'[:count])
    return tuple('z%d' % i for i in range(count))


def is_variable_name(name):
    return bool(re.match(r'^[a-zA-Z][a-zA-Z0-9]*$', name))


def curve_variables_for(text):
    """
    Picks the ring variables of a plane curve given as text: x0,x1,x2 when
    the text mentions them, else x,y,z.
    :param text: polynomial text
    :return: tuple of three names
    """
    if re.search(r'\bx[012]\b', text):
        return default_curve_variables()
    return default_plane_variables()


def is_homogeneous_curve(poly):
    """
    Validates that poly is a nonzero homogeneous form in three variables.
    :param poly: Polynomial
    :return: validation flag
    """
    return poly.ring.ngens == 3 and not poly.is_zero() and poly.is_homogeneous()


def parse_point(text, size=3):
    """
    Parses "a,b,c" into a projective point with exact coordinates.
    Coordinates may be rationals or a + b*sqrt(d).
    :param text: comma separated coordinates
    :param size: expected number of coordinates
    :return: list of field elements
    """
    parts = [part for part in text.replace(';', ',').split(',')]
    if len(parts) != size:
        raise InputError('expected %d coordinates, got %r' % (size, text))
    point = [parse_field_element(part) for part in parts]
    if all(c == 0 for c in point):
        raise InputError('[0:...:0] is not a projective point')
    return point


def split_forms(text):
    """
    Splits "f0; f1; f2" into its non-empty parts.
    """
    return [part.strip() for part in text.split(';') if part.strip()]


def get_today_date():
    """
    Returns the date as a string
    :return: string(date)
    """
    today = datetime.today()
    return today.strftime('%d-%m-%y')
