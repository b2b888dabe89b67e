#=========================================================================
# complex.py
#=========================================================================
# Simplicial complexes on the vertex set 1..n, stored by their facets
#
# Faces are frozensets of vertices and are derived from the facets,
# never stored. Two degenerate complexes are kept apart:
#
#     SimplicialComplex( n, [] )      # void complex, no faces at all
#     SimplicialComplex( n, [ () ] )  # the complex {emptyset}
#

from itertools import combinations

from janet.utils.errors import ArityError, VertexError

def face_key( face ):
  return tuple( sorted( face ) )

class SimplicialComplex:

  def __init__( s, n, facets ):
    if type( n ) != int or n < 0:
      raise ValueError(
        'from_facets -- Vertex count must be a non-negative integer' )
    candidates = set()
    for f in facets:
      f = frozenset( f )
      for v in f:
        if type( v ) != int or not 1 <= v <= n:
          raise VertexError( 'from_facets -- Vertex {} outside 1..{}'.format(
            v, n ) )
      candidates.add( f )
    # Keep maximal candidates only
    maximal = [ f for f in candidates
                if not any( f < g for g in candidates ) ]
    s._n      = n
    s._facets = tuple( sorted( maximal, key=face_key ) )
    s._faces  = None

  @property
  def n( s ):
    return s._n

  @property
  def facets( s ):
    return s._facets

  def is_void( s ):
    return not s._facets

  def is_full_simplex( s ):
    return s._facets == ( frozenset( range( 1, s._n+1 ) ), )

  def dimension( s ):
    """Largest face cardinality minus one (-1 for {emptyset})."""
    if s.is_void():
      return None
    return max( len( f ) for f in s._facets ) - 1

  # Faces

  def has_face( s, face ):
    face = frozenset( face )
    return any( face <= f for f in s._facets )

  def all_faces( s ):
    if s._faces is None:
      faces = set()
      for f in s._facets:
        for r in range( len( f ) + 1 ):
          faces.update( frozenset( c ) for c in combinations( f, r ) )
      s._faces = frozenset( faces )
    return s._faces

  def f_vector( s ):
    """Face counts by cardinality; entry 0 counts the empty face."""
    if s.is_void():
      return ()
    counts = [ 0 ] * ( s.dimension() + 2 )
    for face in s.all_faces():
      counts[ len( face ) ] += 1
    return tuple( counts )

  # Splitting along the last vertex
  #
  #     restriction : faces of the complex that avoid vertex n
  #     shift_link  : faces F of [n-1] with F + {n} in the complex
  #
  # so that the complex is restriction  disjoint-union  n * shift_link.
  #

  def _check_splittable( s, where ):
    if s._n == 0:
      raise ArityError( '{} -- Needs at least one vertex'.format( where ) )

  def restriction( s ):
    s._check_splittable( 'restriction' )
    return SimplicialComplex( s._n - 1, [ f - { s._n } for f in s._facets ] )

  def shift_link( s ):
    s._check_splittable( 'shift_link' )
    return SimplicialComplex( s._n - 1,
      [ f - { s._n } for f in s._facets if s._n in f ] )

  # Vertex permutation: vertex order[i] becomes vertex i+1

  def relabelled( s, order ):
    position = { v: i+1 for i, v in enumerate( order ) }
    return SimplicialComplex( s._n,
      [ { position[ v ] for v in f } for f in s._facets ] )

  def __eq__( s, other ):
    return isinstance( other, SimplicialComplex ) and \
      s._n == other._n and s._facets == other._facets

  def __hash__( s ):
    return hash( ( s._n, s._facets ) )

  def __str__( s ):
    return '<' + ', '.join( '{' + ','.join( str( v ) for v in face_key( f ) )
                            + '}' for f in s._facets ) + '>'

  def __repr__( s ):
    return 'SimplicialComplex( {}, {} )'.format(
      s._n, [ face_key( f ) for f in s._facets ] )

#-------------------------------------------------------------------------
# Operation-style aliases
#-------------------------------------------------------------------------

def from_facets( n, facets ):
  return SimplicialComplex( n, facets )

def full_simplex( n ):
  return SimplicialComplex( n, [ range( 1, n+1 ) ] )

def has_face( complex_, face ):
  return complex_.has_face( face )

def all_faces( complex_ ):
  return complex_.all_faces()

def restriction( complex_ ):
  return complex_.restriction()

def shift_link( complex_ ):
  return complex_.shift_link()
