#=========================================================================
# partition.py
#=========================================================================
# Janet's algorithm for partitions of a simplicial complex
#
# Splitting on the last vertex n writes the complex as
#
#     D  =  D_0  disjoint-union  n * D_1
#
# with D_0 = restriction (faces avoiding n) and D_1 = shift_link (faces F
# with F + {n} in D), both on [n-1]. From partitions P_0 and P_1:
#
#   C2  D_0 = D_1              [F, G+n]            for [F, G] in P_0
#   C3  D_0 full simplex       [{}, [n-1]]  and  [F+n, G+n] for P_1
#   C1  otherwise              P_0          and  [F+n, G+n] for P_1
#
# and P_0 alone when no face contains n. With merge=True (the default)
# every interval common to P_0 and P_1 becomes [F, G+n] and the rest
# follow C1, which contains all three cases and yields the coarser
# partitions of the worked projective-plane example.
#

import logging

from collections import namedtuple

from janet.components.partition import Interval, Partition
from janet.utils.errors         import UndefinedError

logger = logging.getLogger( __name__ )

PartitionTrace = namedtuple( 'PartitionTrace', [
  'case',                    # 'C1', 'C2', 'C3', 'merge', 'void-link', 'base'
  'restriction',             # D_0
  'link',                    # D_1
  'restriction_partition',   # P_0 (None at the base case)
  'link_partition',          # P_1 (None when D_1 is void)
  'partition',               # result
] )

#-------------------------------------------------------------------------
# One split
#-------------------------------------------------------------------------

def _case( d0, d1, p0, p1 ):
  if d1.is_void()         : return 'void-link'
  if d0 == d1             : return 'C2'
  if d0.is_full_simplex() : return 'C3'
  if set( p0 ) & set( p1 ): return 'merge'
  return 'C1'

def _combine( n, d0, d1, p0, p1, merge ):

  case = _case( d0, d1, p0, p1 )

  if case == 'void-link':
    return case, list( p0 )

  if merge:
    shared = set( p0 ) & set( p1 )
    out  = [ i.shifted( n, lower=False ) for i in p0 if i in shared ]
    out += [ i for i in p0 if i not in shared ]
    out += [ i.shifted( n ) for i in p1 if i not in shared ]
    return case, out

  if case == 'C2':
    return case, [ i.shifted( n, lower=False ) for i in p0 ]
  if case == 'C3':
    return case, [ Interval( (), range( 1, n ) ) ] + \
                 [ i.shifted( n ) for i in p1 ]
  return 'C1', list( p0 ) + [ i.shifted( n ) for i in p1 ]

#-------------------------------------------------------------------------
# Recursion
#-------------------------------------------------------------------------

def _intervals( complex_, merge, memo ):

  try:
    return memo[ complex_ ]
  except KeyError:
    pass

  n = complex_.n

  if n == 0:
    out = [ Interval( (), () ) ]
  else:
    d0 = complex_.restriction()
    d1 = complex_.shift_link()
    p0 = _intervals( d0, merge, memo )
    p1 = [] if d1.is_void() else _intervals( d1, merge, memo )
    case, out = _combine( n, d0, d1, p0, p1, merge )
    logger.debug( 'janet_partition: n %d %s -> %d intervals',
                  n, case, len( out ) )

  memo[ complex_ ] = out
  return out

def _check_not_void( complex_ ):
  if complex_.is_void():
    raise UndefinedError(
      'janet_partition -- The void complex has no partition' )

def janet_partition( complex_, merge=True ):
  """Partition of a simplicial complex into intervals.

  Args:
    complex_: A non-void SimplicialComplex
    merge: Merge intervals shared by the two halves (default); False runs
      the plain three-case recursion

  Returns:
    A Partition in canonical order
  """
  _check_not_void( complex_ )
  return Partition( complex_, _intervals( complex_, merge, {} ) )

def janet_partition_trace( complex_, merge=True ):
  """Top-level split of janet_partition with its intermediate values."""
  _check_not_void( complex_ )
  memo = {}
  if complex_.n == 0:
    result = Partition( complex_, _intervals( complex_, merge, memo ) )
    return PartitionTrace( 'base', None, None, None, None, result )
  d0 = complex_.restriction()
  d1 = complex_.shift_link()
  p0 = _intervals( d0, merge, memo )
  p1 = [] if d1.is_void() else _intervals( d1, merge, memo )
  case, out = _combine( complex_.n, d0, d1, p0, p1, merge )
  return PartitionTrace(
    case                  = case,
    restriction           = d0,
    link                  = d1,
    restriction_partition = Partition( d0, p0 ),
    link_partition        = None if d1.is_void() else Partition( d1, p1 ),
    partition             = Partition( complex_, out ),
  )
