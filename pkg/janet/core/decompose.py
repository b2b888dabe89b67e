#=========================================================================
# decompose.py
#=========================================================================
# Janet's algorithm for Stanley decompositions of I and of I^c
#
# Both engines split on the last variable xn. With I_k = I.slice( k ),
#
#     I   = (+)_{alpha <= k < beta} xn^k I_k    (+)  xn^beta I_beta [xn]
#     I^c = (+)_{0     <= k < beta} xn^k I_k^c  (+)  xn^beta I_beta^c [xn]
#
# where "[xn]" means xn is adjoined to Z of every space. Each I_k lives
# in one variable less, so the recursion bottoms out at arity 0 where
# the only ideals are (0) and (1).
#
# With merge=True a space u K[Z] found in the top level and in the
# levels j..beta-1 directly below it is emitted once as
# u xn^j K[Z, xn]. For a squarefree I this is the interval merging of
# the partition engine read through the Stanley-Reisner ideal.
#

import logging

from janet.components.monomial import Monomial
from janet.components.stanley  import StanleySpace, StanleyDecomposition
from janet.components.stanley  import IDEAL, COMPLEMENT

logger = logging.getLogger( __name__ )

#-------------------------------------------------------------------------
# Level assembly
#-------------------------------------------------------------------------

# assemble_levels
#
# - levels : dict level k -> spaces of the slice at level k (first <= k <
#            top_level), at arity n-1
# - top    : spaces of the slice at top_level, to be adjoined with xn
#

def assemble_levels( levels, top, first, top_level, merge=False ):

  levels = { k: list( v ) for k, v in levels.items() }
  out    = []

  if merge:
    members = { k: set( v ) for k, v in levels.items() }
    for sp in top:
      j = top_level
      while j - 1 >= first and sp in members[ j-1 ]:
        j -= 1
      for k in range( j, top_level ):
        levels[ k ].remove( sp )
      out.append( sp.lifted( j, adjoin=True ) )
  else:
    out.extend( sp.lifted( top_level, adjoin=True ) for sp in top )

  for k in range( first, top_level ):
    out.extend( sp.lifted( k ) for sp in levels[ k ] )

  return out

def _case_label( ideal, a, b ):
  if not ideal.is_squarefree():
    return 'general'
  if a != b : return 'C1'
  if b == 0 : return 'C2'
  return 'C3'

#-------------------------------------------------------------------------
# Decomposition of I
#-------------------------------------------------------------------------

def _ideal_spaces( ideal, merge, memo ):

  try:
    return memo[ ideal ]
  except KeyError:
    pass

  if ideal.is_zero():
    spaces = []
  elif ideal.arity == 0:
    spaces = [ StanleySpace( Monomial.one( 0 ), () ) ]
  else:
    a, b   = ideal.alpha(), ideal.beta()
    levels = { k: _ideal_spaces( ideal.slice( k ), merge, memo )
               for k in range( a, b ) }
    top    = _ideal_spaces( ideal.slice( b ), merge, memo )
    spaces = assemble_levels( levels, top, a, b, merge )
    logger.debug( 'janet_ideal: arity %d alpha %d beta %d %s -> %d spaces',
                  ideal.arity, a, b, _case_label( ideal, a, b ),
                  len( spaces ) )

  memo[ ideal ] = spaces
  return spaces

def janet_ideal( ideal, merge=False ):
  """Stanley decomposition of a monomial ideal by Janet's algorithm.

  Args:
    ideal: A MonomialIdeal
    merge: Coalesce spaces repeated across consecutive levels

  Returns:
    A StanleyDecomposition with target IDEAL. The zero ideal gives the
    empty decomposition.
  """
  spaces = _ideal_spaces( ideal, merge, {} )
  return StanleyDecomposition( ideal, IDEAL, spaces )

#-------------------------------------------------------------------------
# Decomposition of I^c
#-------------------------------------------------------------------------

def _complement_spaces( ideal, merge, memo ):

  try:
    return memo[ ideal ]
  except KeyError:
    pass

  n = ideal.arity

  if ideal.is_unit():
    spaces = []
  elif ideal.is_zero():
    spaces = [ StanleySpace( Monomial.one( n ), range( 1, n+1 ) ) ]
  else:
    b      = ideal.beta()
    levels = { k: _complement_spaces( ideal.slice( k ), merge, memo )
               for k in range( 0, b ) }
    top    = _complement_spaces( ideal.slice( b ), merge, memo )
    spaces = assemble_levels( levels, top, 0, b, merge )
    logger.debug( 'janet_complement: arity %d alpha %d beta %d %s -> '
                  '%d spaces', n, ideal.alpha(), b,
                  _case_label( ideal, ideal.alpha(), b ), len( spaces ) )

  memo[ ideal ] = spaces
  return spaces

def janet_complement( ideal, merge=False ):
  """Stanley decomposition of I^c by Janet's algorithm.

  For a squarefree ideal the three shapes of the recursion are

    - alpha != beta   : I_0^c  (+)  xn I_1^c [xn]
    - alpha = beta = 0: I_0^c [xn]
    - alpha = beta = 1: K[x1..x(n-1)]  (+)  xn I_1^c [xn]

  and every space is squarefree. General ideals run the same loop over
  the levels 0..beta.

  Args:
    ideal: A MonomialIdeal
    merge: Coalesce spaces repeated across consecutive levels

  Returns:
    A StanleyDecomposition with target COMPLEMENT. The unit ideal gives
    the empty decomposition.
  """
  spaces = _complement_spaces( ideal, merge, {} )
  return StanleyDecomposition( ideal, COMPLEMENT, spaces )
