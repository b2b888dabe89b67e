#=========================================================================
# input_syntax.py
#=========================================================================
# Parsers and writers for the two input document kinds
#
# Ideal documents:
#
#     # comment
#     vars 3
#     x1*x2, x2*x3^2
#     x1^4
#
# Complex documents, in digit-run style (vertices 1..9 only) or list
# style:
#
#     vertices 6
#     {124}, {126}, {135}, {134}, {156}, {245}, {236}, {235}, {346}, {456}
#
#     vertices 10
#     {1,10}, {2,3,9}
#
# Everything after "#" on a line is ignored, and whitespace is
# insignificant inside the body. A header without a body is the zero
# ideal, or the void complex. The complex {emptyset} is written "{}".
#
# With more than nine vertices a facet without commas is read as a single
# vertex, so "{124}" there is vertex 124 and fails the range check.
#

import re

from collections import namedtuple

from janet.components.complex  import SimplicialComplex, face_key
from janet.components.monomial import Monomial, minimalize
from janet.utils.errors        import ParseError

IDEAL_KIND   = 'ideal'
COMPLEX_KIND = 'complex'

DIGITS = 'digits'
LIST   = 'list'

InputDocument = namedtuple( 'InputDocument', [
  'kind',    # IDEAL_KIND or COMPLEX_KIND
  'arity',   # number of variables or vertices
  'body',    # MonomialIdeal or SimplicialComplex
  'style',   # facet style for complexes (DIGITS or LIST), None for ideals
] )

_HEADER = re.compile( r'^\s*(vars|vertices)\s+(\S+)\s*$' )
_FACTOR = re.compile( r'x(\d+)(?:\^(\d+))?' )
_NUMBER = re.compile( r'\d+' )

#-------------------------------------------------------------------------
# Scanning helpers
#-------------------------------------------------------------------------

# _strip_comments
#
# Returns [ ( line number, text ) ] with comments removed, 1-based
#

def _strip_comments( text ):
  lines = []
  for lineno, line in enumerate( text.splitlines(), start=1 ):
    hash_at = line.find( '#' )
    if hash_at >= 0:
      line = line[ :hash_at ]
    lines.append( ( lineno, line ) )
  return lines

# _split_header
#
# Finds the header line and returns ( keyword, n, body lines )
#

def _split_header( text ):
  lines = _strip_comments( text )
  for idx, ( lineno, line ) in enumerate( lines ):
    if not line.strip():
      continue
    m = _HEADER.match( line )
    if not m:
      col = len( line ) - len( line.lstrip() ) + 1
      raise ParseError( 'Expected header "vars <n>" or "vertices <n>"',
                        lineno, col )
    if not m.group( 2 ).isdigit():
      raise ParseError( 'Count must be a non-negative integer, got '
                        '"{}"'.format( m.group( 2 ) ), lineno,
                        m.start( 2 ) + 1 )
    return m.group( 1 ), int( m.group( 2 ) ), lines[ idx+1: ]
  raise ParseError( 'Empty document', 1, 1 )

# _items
#
# Splits body lines at commas, yielding ( line, column, item ) for
# every item, with the column of its first non-blank character
#

def _items( lines ):
  for lineno, line in lines:
    if not line.strip():
      continue
    start  = 0
    pieces = line.split( ',' )
    for idx, piece in enumerate( pieces ):
      col = start + len( piece ) - len( piece.lstrip() ) + 1
      start += len( piece ) + 1
      if not piece.strip() and idx > 0 and idx == len( pieces ) - 1:
        continue # trailing comma
      yield lineno, col, piece

#-------------------------------------------------------------------------
# Ideals
#-------------------------------------------------------------------------

def _parse_monomial( lineno, col, item, n ):
  if not item.strip():
    raise ParseError( 'Empty monomial', lineno, col )
  if item.strip() == '1':
    return Monomial.one( n )
  exps   = [ 0 ] * n
  offset = col - 1
  for factor in item.strip().split( '*' ):
    fcol = offset + len( factor ) - len( factor.lstrip() ) + 1
    token = re.sub( r'\s+', '', factor )
    m = _FACTOR.fullmatch( token )
    if not m:
      raise ParseError( 'Malformed factor "{}"'.format( factor.strip() ),
                        lineno, fcol )
    i = int( m.group( 1 ) )
    e = int( m.group( 2 ) ) if m.group( 2 ) is not None else 1
    if not 1 <= i <= n:
      raise ParseError( 'Variable index {} out of range 1..{}'.format(
        i, n ), lineno, fcol )
    if e < 1:
      raise ParseError( 'Exponent must be >= 1', lineno, fcol )
    exps[ i-1 ] += e
    offset += len( factor ) + 1
  return Monomial( exps )

def parse_ideal( text ):
  """Parses an ideal document into a minimalized MonomialIdeal."""
  keyword, n, lines = _split_header( text )
  if keyword != 'vars':
    raise ParseError( 'Expected an ideal document ("vars <n>")', 1, 1 )
  gens = [ _parse_monomial( lineno, col, item, n )
           for lineno, col, item in _items( lines ) ]
  return minimalize( gens, n )

#-------------------------------------------------------------------------
# Complexes
#-------------------------------------------------------------------------

def _parse_facet( lineno, col, item, n ):
  token = item.strip()
  if not ( token.startswith( '{' ) and token.endswith( '}' ) ):
    raise ParseError( 'Expected a facet in braces, got "{}"'.format( token ),
                      lineno, col )
  inner = token[ 1:-1 ].strip()
  if not inner:
    return frozenset(), None
  if not _NUMBER.fullmatch( inner ):
    raise ParseError( 'Malformed facet "{}"'.format( token ), lineno, col )
  if n <= 9:
    vertices = [ int( c ) for c in inner ]
  else:
    vertices = [ int( inner ) ]
  for v in vertices:
    if not 1 <= v <= n:
      hint = '' if n <= 9 else \
        ' (facets without commas need n <= 9, use list style {1,2,4})'
      raise ParseError( 'Vertex {} out of range 1..{}{}'.format( v, n, hint ),
                        lineno, col )
  return frozenset( vertices ), DIGITS

def _facet_items( lines ):
  # Like _items, but commas inside braces belong to list-style facets
  for lineno, line in lines:
    depth, start = 0, 0
    for pos, c in enumerate( line + ',' ):
      if c == '{':
        depth += 1
      elif c == '}':
        depth -= 1
      elif c == ',' and depth == 0:
        piece = line[ start:pos ]
        if piece.strip():
          yield lineno, start + len( piece ) - len( piece.lstrip() ) + 1, piece
        elif line.strip() and not ( start > 0 and pos == len( line ) ):
          raise ParseError( 'Empty facet entry', lineno, start + 1 )
        start = pos + 1
    if depth != 0:
      raise ParseError( 'Unbalanced braces', lineno, len( line ) + 1 )

def _parse_list_facet( lineno, col, item, n ):
  inner = item.strip()[ 1:-1 ]
  vertices = []
  for piece in inner.split( ',' ):
    if not _NUMBER.fullmatch( piece.strip() ):
      raise ParseError( 'Malformed vertex "{}"'.format( piece.strip() ),
                        lineno, col )
    v = int( piece )
    if not 1 <= v <= n:
      raise ParseError( 'Vertex {} out of range 1..{}'.format( v, n ),
                        lineno, col )
    vertices.append( v )
  return frozenset( vertices )

def parse_complex_document( text ):
  """Parses a complex document, returning ( complex, style )."""
  keyword, n, lines = _split_header( text )
  if keyword != 'vertices':
    raise ParseError( 'Expected a complex document ("vertices <n>")', 1, 1 )
  facets = []
  styles = set()
  for lineno, col, item in _facet_items( lines ):
    token = item.strip()
    if token.startswith( '{' ) and ',' in token:
      if not token.endswith( '}' ):
        raise ParseError( 'Expected a facet in braces, got "{}"'.format(
          token ), lineno, col )
      facets.append( _parse_list_facet( lineno, col, item, n ) )
      styles.add( LIST )
    else:
      face, style = _parse_facet( lineno, col, item, n )
      facets.append( face )
      if style:
        styles.add( style )
  if LIST in styles or n > 9:
    style = LIST
  else:
    style = DIGITS
  return SimplicialComplex( n, facets ), style

def parse_complex( text ):
  return parse_complex_document( text )[0]

#-------------------------------------------------------------------------
# Documents
#-------------------------------------------------------------------------

def parse_document( text ):
  """Parses either document kind, telling them apart by the header."""
  keyword, n, _ = _split_header( text )
  if keyword == 'vars':
    return InputDocument( IDEAL_KIND, n, parse_ideal( text ), None )
  complex_, style = parse_complex_document( text )
  return InputDocument( COMPLEX_KIND, n, complex_, style )

#-------------------------------------------------------------------------
# Writers
#-------------------------------------------------------------------------

def format_face( face, style=DIGITS ):
  vertices = face_key( face )
  if style == DIGITS:
    return '{' + ''.join( str( v ) for v in vertices ) + '}'
  return '{' + ','.join( str( v ) for v in vertices ) + '}'

def default_style( n ):
  return DIGITS if n <= 9 else LIST

def render_ideal( ideal ):
  out = 'vars {}\n'.format( ideal.arity )
  if not ideal.is_zero():
    out += ', '.join( str( g ) for g in ideal.generators ) + '\n'
  return out

def render_complex( complex_, style=None ):
  style = style or default_style( complex_.n )
  if style == DIGITS and complex_.n > 9:
    style = LIST
  out = 'vertices {}\n'.format( complex_.n )
  if not complex_.is_void():
    out += ', '.join( format_face( f, style ) for f in complex_.facets ) + '\n'
  return out
