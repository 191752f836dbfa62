import pytest

from doublepoints.algebra.groebner import IdealPresentation
from doublepoints.algebra.poly_core import PolyRing
from doublepoints.data_loader import load_ideal, parse_ideal_text, parse_ring, process_ideal_source
from doublepoints.errors import InputError, ParseError


def test_parse_ring():
    assert parse_ring('ring: QQ[x,y,z]') == PolyRing(('x', 'y', 'z'))
    assert parse_ring('ring: QQ[sqrt(-1)][x, y]') == PolyRing(('x', 'y'), -1)
    assert parse_ring('a,b') == PolyRing(('a', 'b'))
    with pytest.raises(ParseError):
        parse_ring('ring: ZZ[x]')
    with pytest.raises(InputError):
        parse_ring('1x, y')


def test_parse_ideal_text():
    ideal = parse_ideal_text('ring: QQ[x,y,z]\n# the point [0:0:1]\nx\n\ny; x + y\n')
    assert ideal.ring.variables == ('x', 'y', 'z')
    assert len(ideal.generators) == 3
    assert ideal == IdealPresentation.parse(ideal.ring, ['x', 'y'])
    with pytest.raises(InputError):
        parse_ideal_text('x; y')


def test_load_ideal(tmp_path):
    path = tmp_path / 'conic.txt'
    path.write_text('ring: QQ[x,y,z]\nx*z - y^2\n')
    ideal = load_ideal(str(path))
    assert ideal.generators == [ideal.ring.parse('x*z - y^2')]
    assert process_ideal_source(str(path)) == ideal
    with pytest.raises(InputError):
        load_ideal(str(tmp_path / 'missing.txt'))


def test_inline_source_with_escaped_newlines():
    ideal = process_ideal_source('ring: QQ[x,y]\\nx^2; y')
    assert ideal == IdealPresentation.parse(PolyRing(('x', 'y')), ['x^2', 'y'])
    ring = PolyRing(('x', 'y'))
    assert process_ideal_source('x; y', ring).generators == ring.gens()
