import pytest

from janet.backends.input_syntax import parse_ideal, parse_complex
from janet.backends.input_syntax import parse_complex_document
from janet.backends.input_syntax import parse_document
from janet.backends.input_syntax import render_ideal, render_complex
from janet.backends.input_syntax import format_face
from janet.backends.input_syntax import IDEAL_KIND, COMPLEX_KIND
from janet.backends.input_syntax import DIGITS, LIST
from janet.components.complex    import from_facets
from janet.components.monomial   import Monomial, MonomialIdeal
from janet.utils.errors          import ParseError

RP2_TEXT = '''\
# six-vertex projective plane
vertices 6
{124}, {126}, {135}, {134}, {156},
{245}, {236}, {235}, {346}, {456}   # last row
'''

#-------------------------------------------------------------------------
# Ideals
#-------------------------------------------------------------------------

def test_parse_ideal():
  ideal = parse_ideal( 'vars 3\nx1*x2, x2*x3^2\n' )
  assert ideal == MonomialIdeal( [ (1,1,0), (0,1,2) ] )

def test_parse_ideal_exponents():
  assert parse_ideal( 'vars 2\nx1^2*x2' ).generators == \
    ( Monomial( (2,1) ), )

def test_parse_ideal_minimalizes():
  assert parse_ideal( 'vars 2\nx1, x1*x2' ) == MonomialIdeal( [ (1,0) ] )

def test_parse_ideal_whitespace_and_comments():
  text = '# header comment\n  vars 3  \n x1 * x2 ,\n\n x3^2 # tail\n'
  assert parse_ideal( text ) == MonomialIdeal( [ (1,1,0), (0,0,2) ] )

def test_parse_zero_and_unit_ideals():
  assert parse_ideal( 'vars 2\n' ).is_zero()
  assert parse_ideal( 'vars 2\n1' ).is_unit()

def test_parse_ideal_bad_index():
  with pytest.raises( ParseError ) as e:
    parse_ideal( 'vars 2\nx1*x3' )
  assert ( e.value.line, e.value.column ) == ( 2, 4 )
  assert 'out of range' in e.value.msg

def test_parse_ideal_malformed_factor():
  with pytest.raises( ParseError ) as e:
    parse_ideal( 'vars 2\nx1, y2' )
  assert ( e.value.line, e.value.column ) == ( 2, 5 )

def test_parse_ideal_empty_entry():
  with pytest.raises( ParseError ):
    parse_ideal( 'vars 2\nx1,,x2' )

def test_missing_header():
  with pytest.raises( ParseError ) as e:
    parse_ideal( 'x1*x2' )
  assert ( e.value.line, e.value.column ) == ( 1, 1 )
  with pytest.raises( ParseError ):
    parse_ideal( '' )

def test_bad_count():
  with pytest.raises( ParseError ):
    parse_ideal( 'vars -1\n' )

def test_wrong_kind():
  with pytest.raises( ParseError ):
    parse_ideal( 'vertices 2\n{1}' )
  with pytest.raises( ParseError ):
    parse_complex( 'vars 2\nx1' )

#-------------------------------------------------------------------------
# Complexes
#-------------------------------------------------------------------------

def test_parse_complex_digit_runs():
  c, style = parse_complex_document( RP2_TEXT )
  assert style == DIGITS
  assert c.n == 6
  assert len( c.facets ) == 10
  assert frozenset( {1,3,4} ) in c.facets

def test_parse_complex_list_style():
  c, style = parse_complex_document( 'vertices 10\n{1,10}, {2,3,9}\n' )
  assert style == LIST
  assert c == from_facets( 10, [ (1,10), (2,3,9) ] )

def test_parse_complex_wide_digit_run_rejected():
  with pytest.raises( ParseError ) as e:
    parse_complex( 'vertices 10\n{124}' )
  assert 'list style' in e.value.msg

def test_parse_complex_empty_face_and_void():
  assert parse_complex( 'vertices 3\n{}' ) == from_facets( 3, [ () ] )
  assert parse_complex( 'vertices 3\n' ).is_void()

def test_parse_complex_vertex_out_of_range():
  with pytest.raises( ParseError ) as e:
    parse_complex( 'vertices 3\n{12}, {14}' )
  assert ( e.value.line, e.value.column ) == ( 2, 7 )

def test_parse_complex_unbalanced():
  with pytest.raises( ParseError ):
    parse_complex( 'vertices 3\n{12, {3}' )

def test_parse_complex_missing_braces():
  with pytest.raises( ParseError ):
    parse_complex( 'vertices 3\n12' )

#-------------------------------------------------------------------------
# Documents and writers
#-------------------------------------------------------------------------

def test_parse_document_kinds():
  doc = parse_document( 'vars 2\nx1*x2' )
  assert doc.kind == IDEAL_KIND and doc.arity == 2 and doc.style is None
  doc = parse_document( RP2_TEXT )
  assert doc.kind == COMPLEX_KIND and doc.arity == 6 and doc.style == DIGITS

def test_format_face():
  assert format_face( frozenset( {4,2,1} ) )       == '{124}'
  assert format_face( frozenset( {10,1} ), LIST )  == '{1,10}'
  assert format_face( frozenset() )                == '{}'

def test_render_reparses():
  ideal = MonomialIdeal( [ (2,1,0), (0,0,3), (1,0,1) ] )
  assert parse_ideal( render_ideal( ideal ) ) == ideal
  assert parse_ideal( render_ideal( MonomialIdeal.zero( 2 ) ) ).is_zero()
  c = parse_complex( RP2_TEXT )
  assert parse_complex( render_complex( c ) ) == c
  wide = from_facets( 12, [ (1,12), (3,) ] )
  assert parse_complex( render_complex( wide ) ) == wide
  assert render_complex( from_facets( 3, [ () ] ) ) == 'vertices 3\n{}\n'

def test_parse_complex_wide_comma_free_facet_is_one_vertex():
  c = parse_complex( 'vertices 20\n{19}, {1,9}' )
  assert frozenset( {19} ) in c.facets
  assert frozenset( {1,9} ) in c.facets
