import pytest

from janet.components.complex   import from_facets, full_simplex
from janet.components.partition import Interval
from janet.core.partition       import janet_partition, janet_partition_trace
from janet.oracle.verify        import verify_partition
from janet.utils.errors         import UndefinedError

RP2 = [ (1,2,4), (1,2,6), (1,3,5), (1,3,4), (1,5,6),
        (2,4,5), (2,3,6), (2,3,5), (3,4,6), (4,5,6) ]

def iv( lower, upper ):
  return Interval( lower, upper )

def intervals( *pairs ):
  return { iv( f, g ) for f, g in pairs }

RP2_PARTITION = intervals(
  ( (),      (1,2,4) ), ( (3,),    (1,3,4) ), ( (2,3),   (2,3)   ),
  ( (5,),    (1,3,5) ), ( (4,5),   (2,4,5) ), ( (2,5),   (2,3,5) ),
  ( (6,),    (1,2,6) ), ( (3,6),   (2,3,6) ), ( (4,6),   (3,4,6) ),
  ( (5,6),   (1,5,6) ), ( (4,5,6), (4,5,6) ),
)

#-------------------------------------------------------------------------
# Projective plane
#-------------------------------------------------------------------------

def test_projective_plane_partition():
  p = janet_partition( from_facets( 6, RP2 ) )
  assert set( p.intervals ) == RP2_PARTITION
  assert len( p ) == 11

def test_projective_plane_counts():
  c = from_facets( 6, RP2 )
  p = janet_partition( c )
  assert p.r_vector() == ( 2, 5, 3, 1 )
  assert sum( 2 ** i.rank() for i in p ) == len( c.all_faces() ) == 32
  assert verify_partition( c, p ).ok

def test_projective_plane_not_nice():
  p = janet_partition( from_facets( 6, RP2 ) )
  assert not p.is_nice()
  non_facet_uppers, missing_facets = p.nice_report()
  assert non_facet_uppers == [ frozenset( {2,3} ) ]
  assert missing_facets   == []

def test_projective_plane_top_split():
  t = janet_partition_trace( from_facets( 6, RP2 ) )
  assert t.case == 'C1'
  assert t.restriction == from_facets( 5, [ (1,2,4), (1,3,5), (1,3,4),
                                            (2,4,5), (2,3,5) ] )
  assert t.link == from_facets( 5, [ (1,2), (1,5), (2,3), (3,4), (4,5) ] )
  assert set( t.restriction_partition.intervals ) == intervals(
    ( (), (1,2,4) ), ( (3,), (1,3,4) ), ( (2,3), (2,3) ),
    ( (5,), (1,3,5) ), ( (4,5), (2,4,5) ), ( (2,5), (2,3,5) ) )
  assert set( t.link_partition.intervals ) == intervals(
    ( (), (1,2) ), ( (3,), (2,3) ), ( (4,), (3,4) ),
    ( (5,), (1,5) ), ( (4,5), (4,5) ) )
  assert set( t.partition.intervals ) == RP2_PARTITION

def test_second_level_splits():
  d0 = janet_partition_trace( from_facets( 5, [ (1,2,4), (1,3,5), (1,3,4),
                                                (2,4,5), (2,3,5) ] ) )
  assert d0.restriction == from_facets( 4, [ (1,2,4), (1,3,4), (2,3) ] )
  assert d0.link        == from_facets( 4, [ (1,3), (2,4), (2,3) ] )
  assert set( d0.restriction_partition.intervals ) == intervals(
    ( (), (1,2,4) ), ( (3,), (1,3,4) ), ( (2,3), (2,3) ) )
  assert set( d0.link_partition.intervals ) == intervals(
    ( (), (1,3) ), ( (4,), (2,4) ), ( (2,), (2,3) ) )

  d1 = janet_partition_trace( from_facets( 5, [ (1,2), (1,5), (2,3),
                                                (3,4), (4,5) ] ) )
  assert set( d1.restriction_partition.intervals ) == intervals(
    ( (), (1,2) ), ( (3,), (2,3) ), ( (4,), (3,4) ) )
  assert set( d1.link_partition.intervals ) == intervals(
    ( (), (1,) ), ( (4,), (4,) ) )

#-------------------------------------------------------------------------
# Merging against the plain three-case recursion
#-------------------------------------------------------------------------

def test_merge_coarsens_shared_intervals():
  c = from_facets( 4, [ (1,2,4), (1,3,4), (2,3) ] )
  merged = janet_partition( c )
  plain  = janet_partition( c, merge=False )
  assert set( merged.intervals ) == intervals(
    ( (), (1,2,4) ), ( (3,), (1,3,4) ), ( (2,3), (2,3) ) )
  assert set( plain.intervals ) == intervals(
    ( (), (1,2) ), ( (3,), (1,3) ), ( (2,3), (2,3) ),
    ( (4,), (1,2,4) ), ( (3,4), (1,3,4) ) )
  assert verify_partition( c, merged ).ok
  assert verify_partition( c, plain ).ok

def test_plain_recursion_is_a_partition():
  c = from_facets( 6, RP2 )
  p = janet_partition( c, merge=False )
  assert verify_partition( c, p ).ok
  assert len( p ) > 11

#-------------------------------------------------------------------------
# Small cases
#-------------------------------------------------------------------------

def test_full_simplex():
  for merge in ( False, True ):
    p = janet_partition( full_simplex( 3 ), merge=merge )
    assert p.intervals == ( iv( (), (1,2,3) ), )
    assert p.is_nice()

def test_two_points():
  c = from_facets( 2, [ (1,), (2,) ] )
  for merge in ( False, True ):
    t = janet_partition_trace( c, merge=merge )
    assert set( t.partition.intervals ) == intervals( ( (), (1,) ),
                                                      ( (2,), (2,) ) )
    assert t.partition.r_vector() == ( 1, 1 )
    assert t.partition.is_nice()
  assert janet_partition_trace( c, merge=False ).case == 'C3'

def test_empty_face_only():
  c = from_facets( 3, [ () ] )
  assert janet_partition( c ).intervals == ( iv( (), () ), )
  assert janet_partition_trace( c ).case == 'void-link'

def test_base_case():
  t = janet_partition_trace( from_facets( 0, [ () ] ) )
  assert t.case == 'base'
  assert t.partition.intervals == ( iv( (), () ), )

def test_void_complex():
  with pytest.raises( UndefinedError ):
    janet_partition( from_facets( 3, [] ) )
  with pytest.raises( UndefinedError ):
    janet_partition_trace( from_facets( 3, [] ) )

def test_unused_vertices():
  c = from_facets( 5, [ (1,3) ] )
  p = janet_partition( c )
  assert p.intervals == ( iv( (), (1,3) ), )
  assert verify_partition( c, p ).ok
