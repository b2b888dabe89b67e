import pytest

from janet.components.monomial import Monomial, MonomialIdeal
from janet.components.stanley  import StanleySpace, StanleyDecomposition
from janet.components.stanley  import IDEAL, COMPLEMENT
from janet.components.stanley  import space_contains, sdepth
from janet.components.stanley  import is_squarefree_decomposition
from janet.utils.errors        import ArityError, UndefinedError

def M( *exps ):
  return Monomial( exps )

def D( spaces, arity ):
  return StanleyDecomposition( MonomialIdeal.zero( arity ), COMPLEMENT,
                               spaces )

def test_space_contains():
  s = StanleySpace( M(1,1,0), { 1, 2 } )
  assert space_contains( s, M(2,1,0) )
  assert not space_contains( s, M(1,1,1) )
  one = StanleySpace( M(0,0,0), () )
  assert space_contains( one, M(0,0,0) )
  assert not space_contains( one, M(1,0,0) )

def test_space_contains_arity_mismatch():
  with pytest.raises( ArityError ):
    space_contains( StanleySpace( M(1,0), {1} ), M(1,0,0) )

def test_space_rejects_out_of_range_variable():
  with pytest.raises( ArityError ):
    StanleySpace( M(1,0), { 3 } )

def test_str():
  assert str( StanleySpace( M(0,1,0), { 2 } ) )    == 'x2 * K[x2]'
  assert str( StanleySpace( M(0,0,0), { 1, 3 } ) ) == '1 * K[x1, x3]'
  assert str( StanleySpace( M(0,0), () ) )         == '1 * K[]'

def test_is_squarefree_decomposition():
  assert is_squarefree_decomposition(
    D( [ StanleySpace( M(1,1), { 1, 2 } ) ], 2 ) )
  assert not is_squarefree_decomposition(
    D( [ StanleySpace( M(2,0), { 1 } ) ], 2 ) )
  assert not is_squarefree_decomposition(
    D( [ StanleySpace( M(0,1), { 1 } ) ], 2 ) )

def test_sdepth():
  assert sdepth( D( [ StanleySpace( M(0,0), { 1 } ),
                      StanleySpace( M(0,1), { 2 } ) ], 2 ) ) == 1
  assert sdepth( D( [ StanleySpace( M(0,0,0), { 1, 2, 3 } ) ], 3 ) ) == 3

def test_sdepth_of_empty_decomposition():
  with pytest.raises( UndefinedError ):
    sdepth( D( [], 2 ) )

def test_spaces_are_sorted():
  a = StanleySpace( M(0,1), { 2 } )
  b = StanleySpace( M(0,0), { 1 } )
  d = D( [ a, b ], 2 )
  assert d.spaces == ( b, a )
  assert d == D( [ b, a ], 2 )

def test_lifted():
  s = StanleySpace( M(1,0), { 1 } )
  assert s.lifted( 2 ) == StanleySpace( M(1,0,2), { 1 } )
  assert s.lifted( 1, adjoin=True ) == StanleySpace( M(1,0,1), { 1, 3 } )

def test_permuted():
  s = StanleySpace( M(1,0,2), { 1, 3 } )
  assert s.permuted( [3,2,1] ) == StanleySpace( M(2,0,1), { 1, 3 } )
  s = StanleySpace( M(0,1,0), { 2, 3 } )
  assert s.permuted( [3,2,1] ) == StanleySpace( M(0,1,0), { 1, 2 } )

def test_count_containing():
  d = StanleyDecomposition( MonomialIdeal( [ (1,1) ] ), IDEAL,
    [ StanleySpace( M(1,1), { 1, 2 } ) ] )
  assert d.count_containing( M(3,1) ) == 1
  assert d.count_containing( M(3,0) ) == 0
