import pytest

from janet.components.complex   import from_facets, full_simplex
from janet.components.monomial  import Monomial, MonomialIdeal
from janet.components.partition import Interval, Partition
from janet.components.stanley   import StanleySpace, COMPLEMENT
from janet.core                 import janet_partition, janet_complement
from janet.core.stanley_reisner import stanley_reisner, partition_to_spaces
from janet.core.stanley_reisner import minimal_nonfaces
from janet.utils.errors         import UndefinedError

RP2 = [ (1,2,4), (1,2,6), (1,3,5), (1,3,4), (1,5,6),
        (2,4,5), (2,3,6), (2,3,5), (3,4,6), (4,5,6) ]

def test_two_points():
  ideal = stanley_reisner( from_facets( 2, [ (1,), (2,) ] ) )
  assert ideal == MonomialIdeal( [ (1,1) ] )

def test_full_simplex_gives_zero_ideal():
  assert stanley_reisner( full_simplex( 3 ) ).is_zero()

def test_projective_plane():
  ideal = stanley_reisner( from_facets( 6, RP2 ) )
  assert len( ideal ) == 10
  assert all( g.degree() == 3 for g in ideal )
  assert ideal.is_squarefree()
  facets = { frozenset( f ) for f in RP2 }
  assert all( g.support() not in facets for g in ideal )

def test_unused_vertex_is_a_generator():
  ideal = stanley_reisner( from_facets( 3, [ (1,2) ] ) )
  assert ideal == MonomialIdeal( [ (0,0,1) ] )

def test_nonface_membership():
  c = from_facets( 4, [ (1,2,3), (3,4) ] )
  ideal = stanley_reisner( c )
  for bits in range( 16 ):
    m = Monomial( [ ( bits >> i ) & 1 for i in range( 4 ) ] )
    assert ideal.contains( m ) == ( not c.has_face( m.support() ) )
  assert minimal_nonfaces( c ) == { frozenset( {1,4} ), frozenset( {2,4} ) }

def test_void_complex():
  with pytest.raises( UndefinedError ):
    stanley_reisner( from_facets( 2, [] ) )

def test_partition_to_spaces():
  c = full_simplex( 3 )
  d = partition_to_spaces( Partition( c, [ Interval( (), (1,2,3) ) ] ) )
  assert d.target == COMPLEMENT
  assert d.spaces == ( StanleySpace( Monomial( (0,0,0) ), {1,2,3} ), )

def test_partition_to_spaces_shifted_interval():
  c = from_facets( 6, RP2 )
  d = partition_to_spaces( Partition( c, [ Interval( (4,5), (2,4,5) ),
                                           Interval( (2,3), (2,3) ) ] ) )
  assert StanleySpace( Monomial( (0,0,0,1,1,0) ), {2,4,5} ) in d.spaces
  assert StanleySpace( Monomial( (0,1,1,0,0,0) ), {2,3} ) in d.spaces

def test_correspondence_on_projective_plane():
  c = from_facets( 6, RP2 )
  for merge in ( False, True ):
    a = partition_to_spaces( janet_partition( c, merge=merge ) )
    b = janet_complement( stanley_reisner( c ), merge=merge )
    assert a.spaces == b.spaces
