#=========================================================================
# stanley.py
#=========================================================================
# Stanley spaces and Stanley decompositions
#
# A Stanley space u K[Z] is the span of all monomials u*v where v only
# involves the variables indexed by Z. A Stanley decomposition writes
# either an ideal I (target IDEAL) or the span I^c of the monomials
# outside I (target COMPLEMENT) as a disjoint union of Stanley spaces.
#

from janet.components.monomial import Monomial, MonomialIdeal
from janet.utils.errors        import ArityError, UndefinedError

IDEAL      = 'ideal'
COMPLEMENT = 'complement'
TARGETS    = ( IDEAL, COMPLEMENT )

#-------------------------------------------------------------------------
# StanleySpace
#-------------------------------------------------------------------------

class StanleySpace:

  __slots__ = ( '_u', '_z' )

  def __init__( s, u, z ):
    s._u = u if isinstance( u, Monomial ) else Monomial( u )
    s._z = frozenset( z )
    for i in s._z:
      if not 1 <= i <= s._u.arity:
        raise ArityError( 'StanleySpace -- Variable {} outside 1..{}'.format(
          i, s._u.arity ) )

  @property
  def u( s ):
    return s._u

  @property
  def z( s ):
    return s._z

  @property
  def arity( s ):
    return s._u.arity

  def dimension( s ):
    return len( s._z )

  def is_squarefree( s ):
    return s._u.is_squarefree() and s._u.support() <= s._z

  def contains( s, m ):
    if m.arity != s.arity:
      raise ArityError( 'space_contains -- Arity mismatch: space {} vs '
                        'monomial {}'.format( s.arity, m.arity ) )
    if not s._u.divides( m ):
      return False
    return m.quotient( s._u ).support() <= s._z

  def __contains__( s, m ):
    return s.contains( m )

  # lifted
  #
  # Moves the space from K[x1..x(n-1)] to K[x1..xn] by multiplying u
  # with xn^k, and adjoins xn to Z when "adjoin" is set.
  #

  def lifted( s, k, adjoin=False ):
    n = s.arity + 1
    z = s._z | { n } if adjoin else s._z
    return StanleySpace( s._u.extended( k ), z )

  def permuted( s, order ):
    position = { v: i+1 for i, v in enumerate( order ) }
    return StanleySpace( s._u.permuted( order ),
                         { position[ j ] for j in s._z } )

  def sort_key( s ):
    return ( s._u.sort_key(), tuple( sorted( s._z ) ) )

  def __lt__( s, other ):
    return s.sort_key() < other.sort_key()

  def __eq__( s, other ):
    return isinstance( other, StanleySpace ) and \
      s._u == other._u and s._z == other._z

  def __hash__( s ):
    return hash( ( s._u, s._z ) )

  def __str__( s ):
    return '{} * K[{}]'.format( s._u, ', '.join(
      'x{}'.format( i ) for i in sorted( s._z ) ) )

  def __repr__( s ):
    return 'StanleySpace( {}, {} )'.format(
      s._u.exponents, sorted( s._z ) )

def space_contains( space, m ):
  return space.contains( m )

#-------------------------------------------------------------------------
# StanleyDecomposition
#-------------------------------------------------------------------------

class StanleyDecomposition:
  """Canonically ordered list of Stanley spaces for I or I^c."""

  def __init__( s, source, target, spaces ):
    assert target in TARGETS, \
      'StanleyDecomposition -- Unknown target "{}"'.format( target )
    assert isinstance( source, MonomialIdeal ), \
      'StanleyDecomposition -- Source must be a MonomialIdeal'
    s.source = source
    s.target = target
    s.spaces = tuple( sorted( spaces ) )
    for sp in s.spaces:
      if sp.arity != source.arity:
        raise ArityError( 'StanleyDecomposition -- Space {} has arity {}, '
                          'ideal has {}'.format( sp, sp.arity, source.arity ) )

  @property
  def arity( s ):
    return s.source.arity

  def __len__( s ):
    return len( s.spaces )

  def __iter__( s ):
    return iter( s.spaces )

  def is_squarefree( s ):
    return all( sp.is_squarefree() for sp in s.spaces )

  def sdepth( s ):
    if not s.spaces:
      raise UndefinedError(
        'sdepth -- Stanley depth of an empty decomposition is undefined' )
    return min( sp.dimension() for sp in s.spaces )

  def count_containing( s, m ):
    return sum( 1 for sp in s.spaces if sp.contains( m ) )

  def __eq__( s, other ):
    return isinstance( other, StanleyDecomposition ) and \
      s.target == other.target and s.source == other.source and \
      s.spaces == other.spaces

  def __str__( s ):
    return '\n'.join( str( sp ) for sp in s.spaces )

  def __repr__( s ):
    return 'StanleyDecomposition( {}, {}, {} spaces )'.format(
      s.target, s.source, len( s.spaces ) )

def is_squarefree_decomposition( decomposition ):
  return decomposition.is_squarefree()

def sdepth( decomposition ):
  return decomposition.sdepth()
