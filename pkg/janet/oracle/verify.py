#=========================================================================
# verify.py
#=========================================================================
# Brute-force certification of decompositions and partitions
#
# Nothing here calls into the recursive engines' internals. The checks
# only use monomial divisibility, ideal membership, the Stanley space and
# interval definitions, and face enumeration:
#
# - every monomial of total degree <= max_degree must lie in exactly one
#   space if it belongs to the target (I or I^c), and in none otherwise
# - every face of a complex must lie in exactly one interval, and no
#   interval may reach outside the complex
#
# Every mismatch is recorded as ( witness, observed, expected ).
#

import logging

from collections import Counter
from itertools   import combinations_with_replacement

from janet.components.complex  import face_key
from janet.components.monomial import Monomial
from janet.components.stanley  import IDEAL, COMPLEMENT
from janet.utils.errors        import ArityError, TargetError

logger = logging.getLogger( __name__ )

#-------------------------------------------------------------------------
# VerificationReport
#-------------------------------------------------------------------------

class VerificationReport:

  def __init__( s, kind, checked_count, failures ):
    s.kind          = kind
    s.checked_count = checked_count
    s.failures      = list( failures )

  @property
  def ok( s ):
    return not s.failures

  def __bool__( s ):
    return s.ok

  def __repr__( s ):
    return 'VerificationReport( {}, ok={}, checked={}, failures={} )'.format(
      s.kind, s.ok, s.checked_count, len( s.failures ) )

#-------------------------------------------------------------------------
# Monomial enumeration
#-------------------------------------------------------------------------

# monomials_up_to
#
# All monomials in the variables "indices" (1-based) at the given arity
# with total degree <= max_degree, graded and in a fixed order.
#

def monomials_up_to( arity, max_degree, indices=None ):
  indices = list( range( 1, arity+1 ) ) if indices is None \
            else sorted( indices )
  if not indices:
    yield Monomial.one( arity )
    return
  for d in range( max_degree + 1 ):
    for combo in combinations_with_replacement( indices, d ):
      exps = [ 0 ] * arity
      for i in combo:
        exps[ i-1 ] += 1
      yield Monomial( exps )

def default_bound( ideal ):
  """Largest generator degree plus the arity plus one."""
  return ideal.max_degree() + ideal.arity + 1

def _space_members( space, max_degree ):
  room = max_degree - space.u.degree()
  if room < 0:
    return
  for v in monomials_up_to( space.arity, room, space.z ):
    yield space.u * v

#-------------------------------------------------------------------------
# Covers
#-------------------------------------------------------------------------

def _verify_cover( kind, target, ideal, decomposition, max_degree ):

  if decomposition.target != target:
    raise TargetError( '{} -- Decomposition has target "{}", expected '
                       '"{}"'.format( kind, decomposition.target, target ) )
  if decomposition.source != ideal:
    raise TargetError( '{} -- Decomposition is of {}, not of {}'.format(
      kind, decomposition.source, ideal ) )
  if max_degree is None:
    max_degree = default_bound( ideal )
  if max_degree < 0:
    raise ValueError( '{} -- max_degree must be >= 0'.format( kind ) )

  multiplicity = Counter()
  for space in decomposition.spaces:
    multiplicity.update( _space_members( space, max_degree ) )

  failures = []
  checked  = 0
  for m in monomials_up_to( ideal.arity, max_degree ):
    checked += 1
    inside   = ideal.contains( m )
    expected = int( inside if target == IDEAL else not inside )
    observed = multiplicity[ m ]
    if observed != expected:
      failures.append( ( m, observed, expected ) )

  logger.debug( '%s: %s, %d monomials up to degree %d, %d failures',
                kind, ideal, checked, max_degree, len( failures ) )

  return VerificationReport( kind, checked, failures )

def verify_ideal_cover( ideal, decomposition, max_degree=None ):
  """Checks that the spaces cover the monomials of I exactly once."""
  return _verify_cover( 'verify_ideal_cover', IDEAL, ideal, decomposition,
                        max_degree )

def verify_complement_cover( ideal, decomposition, max_degree=None ):
  """Checks that the spaces cover the monomials outside I exactly once."""
  return _verify_cover( 'verify_complement_cover', COMPLEMENT, ideal,
                        decomposition, max_degree )

#-------------------------------------------------------------------------
# Partitions
#-------------------------------------------------------------------------

def verify_partition( complex_, partition ):
  """Checks that every face lies in exactly one interval of the partition
  and that every interval consists of faces."""

  if complex_.n != partition.n:
    raise ArityError( 'verify_partition -- Complex on [{}], partition on '
                      '[{}]'.format( complex_.n, partition.n ) )

  faces = complex_.all_faces()

  multiplicity = Counter()
  for interval in partition.intervals:
    multiplicity.update( interval.faces() )

  failures = []
  for h in sorted( faces, key=face_key ):
    if multiplicity[ h ] != 1:
      failures.append( ( h, multiplicity[ h ], 1 ) )
  for h in sorted( set( multiplicity ) - faces, key=face_key ):
    failures.append( ( h, multiplicity[ h ], 0 ) )

  logger.debug( 'verify_partition: %d faces, %d failures',
                len( faces ), len( failures ) )

  return VerificationReport( 'verify_partition', len( faces ), failures )

#-------------------------------------------------------------------------
# Correspondence
#-------------------------------------------------------------------------

def verify_correspondence( complex_, max_degree=None, merge=True ):
  """Compares the partition engine with the complement engine.

  The intervals of janet_partition( complex_ ), read as squarefree
  spaces, must equal janet_complement( stanley_reisner( complex_ ) ).
  The complement decomposition is then certified with
  verify_complement_cover. Failures list each space found on one side
  only as ( space, count in complement engine, count in partition ).
  """

  # Engines are imported here so the cover checks above stay free of them
  from janet.core import janet_partition, janet_complement
  from janet.core import partition_to_spaces, stanley_reisner

  ideal = stanley_reisner( complex_ )
  a = partition_to_spaces( janet_partition( complex_, merge=merge ) )
  b = janet_complement( ideal, merge=merge )

  count_a  = Counter( a.spaces )
  count_b  = Counter( b.spaces )
  failures = [ ( sp, count_b[ sp ], count_a[ sp ] )
               for sp in sorted( set( count_a ) | set( count_b ) )
               if count_a[ sp ] != count_b[ sp ] ]

  cover = verify_complement_cover( ideal, b, max_degree )
  failures.extend( cover.failures )

  return VerificationReport( 'verify_correspondence',
    len( set( count_a ) | set( count_b ) ) + cover.checked_count, failures )
