#=========================================================================
# monomial.py
#=========================================================================
# Monomials and monomial ideals
#
# A monomial of S = K[x1, ..., xn] is stored as its exponent vector, so
# x1*x3^2 at arity 3 is ( 1, 0, 2 ). The field K never carries data.
#
# A monomial ideal is stored as its minimal generating set, sorted in the
# canonical order (graded, then lexicographically largest first), so
# that equal ideals have identical representations:
#
#     >>> I = MonomialIdeal( [ (0,1,2), (1,1,0), (1,1,1) ], arity=3 )
#     >>> I.generators
#     ( Monomial( (1,1,0) ), Monomial( (0,1,2) ) )
#
# The splitting variable for slices, alpha and beta is always the last
# one (xn). Reordering is done up front with "permuted".
#

from janet.utils.errors import ArityError, UndefinedError

#-------------------------------------------------------------------------
# Monomial
#-------------------------------------------------------------------------

class Monomial:

  __slots__ = ( '_exps', )

  def __init__( s, exponents ):
    exps = tuple( exponents )
    for e in exps:
      if type( e ) != int or e < 0:
        raise ValueError(
          'Monomial -- Exponents must be non-negative integers: {}'.format(
            exps ) )
    s._exps = exps

  # Constructors

  @classmethod
  def one( cls, arity ):
    return cls( ( 0, ) * arity )

  @classmethod
  def from_support( cls, indices, arity ):
    """Squarefree monomial with the given 1-based support."""
    indices = set( indices )
    for i in indices:
      if not 1 <= i <= arity:
        raise ArityError(
          'Monomial.from_support -- Index {} outside 1..{}'.format(
            i, arity ) )
    return cls( tuple( 1 if j in indices else 0
                       for j in range( 1, arity+1 ) ) )

  # Accessors

  @property
  def exponents( s ):
    return s._exps

  @property
  def arity( s ):
    return len( s._exps )

  def degree( s ):
    return sum( s._exps )

  def last( s ):
    """Exponent of the last variable."""
    return s._exps[-1]

  def head( s ):
    """The monomial with the last variable deleted (arity n-1)."""
    return Monomial( s._exps[:-1] )

  def support( s ):
    return frozenset( i+1 for i, e in enumerate( s._exps ) if e > 0 )

  def is_one( s ):
    return not any( s._exps )

  def is_squarefree( s ):
    return all( e <= 1 for e in s._exps )

  # Arithmetic

  def _check_arity( s, other, where ):
    if s.arity != other.arity:
      raise ArityError( '{} -- Arity mismatch: {} vs {}'.format(
        where, s.arity, other.arity ) )

  def divides( s, other ):
    s._check_arity( other, 'divides' )
    return all( a <= b for a, b in zip( s._exps, other._exps ) )

  def __mul__( s, other ):
    s._check_arity( other, 'multiply' )
    return Monomial( a + b for a, b in zip( s._exps, other._exps ) )

  def quotient( s, divisor ):
    """Returns s / divisor, which must divide s."""
    s._check_arity( divisor, 'quotient' )
    if not divisor.divides( s ):
      raise ValueError( 'quotient -- {} does not divide {}'.format(
        divisor, s ) )
    return Monomial( a - b for a, b in zip( s._exps, divisor._exps ) )

  def extended( s, k ):
    """Appends a new last variable with exponent k (arity n+1)."""
    return Monomial( s._exps + ( k, ) )

  def permuted( s, order ):
    """Position i of the result takes variable order[i] (both 1-based)."""
    return Monomial( s._exps[ j-1 ] for j in order )

  # Canonical order: total degree first, then lexicographically largest
  # first, so x1*x2 comes before x2*x3

  def sort_key( s ):
    return ( sum( s._exps ), tuple( -e for e in s._exps ) )

  def __lt__( s, other ):
    return s.sort_key() < other.sort_key()

  def __eq__( s, other ):
    return isinstance( other, Monomial ) and s._exps == other._exps

  def __hash__( s ):
    return hash( s._exps )

  def __str__( s ):
    factors = []
    for i, e in enumerate( s._exps ):
      if   e == 1 : factors.append( 'x{}'.format( i+1 ) )
      elif e  > 1 : factors.append( 'x{}^{}'.format( i+1, e ) )
    return '*'.join( factors ) if factors else '1'

  def __repr__( s ):
    return 'Monomial( {} )'.format( s._exps )

#-------------------------------------------------------------------------
# Free functions
#-------------------------------------------------------------------------

def divides( a, b ):
  return a.divides( b )

def support( m ):
  return m.support()

def _as_monomial( m ):
  return m if isinstance( m, Monomial ) else Monomial( m )

# minimalize
#
# Drops every generator divisible by another one and sorts the rest in
# canonical order. The arity must be given when gens may be empty.
#

def minimalize( gens, arity=None ):
  gens = { _as_monomial( g ) for g in gens }
  arities = { g.arity for g in gens }
  if arity is not None:
    arities.add( arity )
  if len( arities ) > 1:
    raise ArityError( 'minimalize -- Mixed arities: {}'.format(
      sorted( arities ) ) )
  if not arities:
    raise ArityError( 'minimalize -- Arity of an empty generator set '
                      'must be given' )
  kept = []
  for g in sorted( gens ):
    if not any( k.divides( g ) for k in kept ):
      kept.append( g )
  return MonomialIdeal._from_minimal( tuple( kept ), arities.pop() )

#-------------------------------------------------------------------------
# MonomialIdeal
#-------------------------------------------------------------------------

class MonomialIdeal:
  """Monomial ideal held as its sorted minimal generating set."""

  __slots__ = ( '_gens', '_arity' )

  def __new__( cls, generators=(), arity=None ):
    return minimalize( generators, arity )

  @classmethod
  def _from_minimal( cls, gens, arity ):
    obj = object.__new__( cls )
    obj._gens  = gens
    obj._arity = arity
    return obj

  @classmethod
  def zero( cls, arity ):
    return cls._from_minimal( (), arity )

  @classmethod
  def unit( cls, arity ):
    return cls._from_minimal( ( Monomial.one( arity ), ), arity )

  # Accessors

  @property
  def arity( s ):
    return s._arity

  @property
  def generators( s ):
    return s._gens

  def __len__( s ):
    return len( s._gens )

  def __iter__( s ):
    return iter( s._gens )

  def is_zero( s ):
    return not s._gens

  def is_unit( s ):
    return len( s._gens ) == 1 and s._gens[0].is_one()

  def is_squarefree( s ):
    return all( g.is_squarefree() for g in s._gens )

  def max_degree( s ):
    return max( ( g.degree() for g in s._gens ), default=0 )

  # Membership

  def contains( s, m ):
    if m.arity != s._arity:
      raise ArityError( 'contains -- Arity mismatch: ideal {} vs '
                        'monomial {}'.format( s._arity, m.arity ) )
    return any( g.divides( m ) for g in s._gens )

  def __contains__( s, m ):
    return s.contains( m )

  def contains_ideal( s, other ):
    return all( s.contains( g ) for g in other.generators )

  # Slices along the last variable
  #
  # slice( k ) is the ideal I_k of K[x1..x(n-1)] with
  #
  #     I  intersect  xn^k K[x1..x(n-1)]  =  xn^k I_k
  #
  # and I_0 <= I_1 <= ... stabilizes at k = beta.
  #

  def _check_splittable( s, where ):
    if s._arity == 0:
      raise ArityError( '{} -- Needs arity >= 1'.format( where ) )

  def slice( s, k ):
    s._check_splittable( 'slice' )
    if k < 0:
      raise ValueError( 'slice -- Level must be non-negative: {}'.format( k ) )
    return minimalize( [ g.head() for g in s._gens if g.last() <= k ],
                       s._arity - 1 )

  def alpha( s ):
    s._check_splittable( 'alpha' )
    if s.is_zero():
      raise UndefinedError( 'alpha -- alpha undefined for the zero ideal' )
    return min( g.last() for g in s._gens )

  def beta( s ):
    s._check_splittable( 'beta' )
    if s.is_zero():
      raise UndefinedError( 'beta -- beta undefined for the zero ideal' )
    return max( g.last() for g in s._gens )

  # Variable permutation

  def permuted( s, order ):
    return minimalize( [ g.permuted( order ) for g in s._gens ], s._arity )

  # Identity

  def __eq__( s, other ):
    return isinstance( other, MonomialIdeal ) and \
      s._arity == other._arity and s._gens == other._gens

  def __hash__( s ):
    return hash( ( s._arity, s._gens ) )

  def __str__( s ):
    if s.is_zero():
      return '(0)'
    return '(' + ', '.join( str( g ) for g in s._gens ) + ')'

  def __repr__( s ):
    return 'MonomialIdeal( {}, arity={} )'.format(
      [ g.exponents for g in s._gens ], s._arity )

#-------------------------------------------------------------------------
# Operation-style aliases
#-------------------------------------------------------------------------

def contains( ideal, m ):
  return ideal.contains( m )

def slice_ideal( ideal, k ):
  return ideal.slice( k )

def alpha( ideal ):
  return ideal.alpha()

def beta( ideal ):
  return ideal.beta()

def is_squarefree( ideal ):
  return ideal.is_squarefree()
