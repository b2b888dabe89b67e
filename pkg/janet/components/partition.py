#=========================================================================
# partition.py
#=========================================================================
# Intervals [F, G] = { H : F <= H <= G } of a simplicial complex and
# partitions of a complex into disjoint intervals.
#

from itertools import combinations

from janet.components.complex import face_key

#-------------------------------------------------------------------------
# Interval
#-------------------------------------------------------------------------

class Interval:

  __slots__ = ( '_lower', '_upper' )

  def __init__( s, lower, upper ):
    s._lower = frozenset( lower )
    s._upper = frozenset( upper )
    if not s._lower <= s._upper:
      raise ValueError( 'Interval -- Lower end {} is not contained in '
                        'upper end {}'.format( face_key( s._lower ),
                                               face_key( s._upper ) ) )

  @property
  def lower( s ):
    return s._lower

  @property
  def upper( s ):
    return s._upper

  def rank( s ):
    return len( s._upper ) - len( s._lower )

  def contains( s, face ):
    face = frozenset( face )
    return s._lower <= face <= s._upper

  def __contains__( s, face ):
    return s.contains( face )

  def faces( s ):
    free = sorted( s._upper - s._lower )
    for r in range( len( free ) + 1 ):
      for c in combinations( free, r ):
        yield s._lower | frozenset( c )

  # shifted
  #
  # Adjoins vertex v to the upper end, and to the lower end as well when
  # "lower" is set.
  #

  def shifted( s, v, lower=True ):
    return Interval( s._lower | { v } if lower else s._lower,
                     s._upper | { v } )

  def relabelled( s, order ):
    position = { v: i+1 for i, v in enumerate( order ) }
    return Interval( { position[ v ] for v in s._lower },
                     { position[ v ] for v in s._upper } )

  def sort_key( s ):
    return ( face_key( s._lower ), face_key( s._upper ) )

  def __lt__( s, other ):
    return s.sort_key() < other.sort_key()

  def __eq__( s, other ):
    return isinstance( other, Interval ) and \
      s._lower == other._lower and s._upper == other._upper

  def __hash__( s ):
    return hash( ( s._lower, s._upper ) )

  def __repr__( s ):
    return 'Interval( {}, {} )'.format(
      face_key( s._lower ), face_key( s._upper ) )

#-------------------------------------------------------------------------
# Partition
#-------------------------------------------------------------------------

class Partition:
  """Canonically ordered intervals that partition a complex."""

  def __init__( s, complex_, intervals ):
    s.complex   = complex_
    s.intervals = tuple( sorted( intervals ) )

  @property
  def n( s ):
    return s.complex.n

  def __len__( s ):
    return len( s.intervals )

  def __iter__( s ):
    return iter( s.intervals )

  def r_vector( s ):
    if not s.intervals:
      return ()
    counts = [ 0 ] * ( max( i.rank() for i in s.intervals ) + 1 )
    for i in s.intervals:
      counts[ i.rank() ] += 1
    return tuple( counts )

  # nice_report
  #
  # Returns ( non_facet_uppers, missing_facets ): upper ends that are not
  # facets, and facets that are no upper end. A partition is nice when
  # both are empty.
  #

  def nice_report( s, complex_=None ):
    complex_ = complex_ if complex_ is not None else s.complex
    facets   = set( complex_.facets )
    uppers   = { i.upper for i in s.intervals }
    non_facet_uppers = sorted( uppers - facets, key=face_key )
    missing_facets   = sorted( facets - uppers, key=face_key )
    return non_facet_uppers, missing_facets

  def is_nice( s, complex_=None ):
    non_facet_uppers, missing_facets = s.nice_report( complex_ )
    return not non_facet_uppers and not missing_facets

  def __eq__( s, other ):
    return isinstance( other, Partition ) and \
      s.complex == other.complex and s.intervals == other.intervals

  def __repr__( s ):
    return 'Partition( {}, {} )'.format( s.complex, list( s.intervals ) )

#-------------------------------------------------------------------------
# Operation-style aliases
#-------------------------------------------------------------------------

def r_vector( partition ):
  return partition.r_vector()

def is_nice( partition, complex_=None ):
  return partition.is_nice( complex_ )
