#=========================================================================
# data_backend.py
#=========================================================================
# Machine-readable rendering (JSON or YAML) of results
#
# Every result is one top-level mapping with a "kind" and an "arity"
# key. Only integers, booleans, strings and lists appear, so outputs
# compare byte-for-byte across platforms:
#
#     { "kind": "decomposition", "arity": 2, "target": "complement",
#       "spaces": [ { "coeff": [0, 0], "vars": [1] },
#                   { "coeff": [0, 1], "vars": [2] } ], ... }
#

import json

from janet.components.complex  import face_key
from janet.components.monomial import Monomial
from janet.components.stanley  import StanleySpace
from janet.utils.helpers       import dump_yaml

def space_data( space ):
  return { 'coeff': list( space.u.exponents ),
           'vars' : sorted( space.z ) }

def interval_data( interval ):
  return { 'lower': list( face_key( interval.lower ) ),
           'upper': list( face_key( interval.upper ) ) }

def witness_data( witness ):
  if isinstance( witness, Monomial ):
    return list( witness.exponents )
  if isinstance( witness, StanleySpace ):
    return space_data( witness )
  return list( face_key( witness ) )

class DataWriter:
  """Builds plain data objects and serializes them as JSON or YAML."""

  def __init__( s, fmt='json' ):
    assert fmt in ( 'json', 'yaml' ), \
      'DataWriter -- Unknown format "{}"'.format( fmt )
    s.fmt = fmt

  def dumps( s, data ):
    if s.fmt == 'json':
      return json.dumps( data, indent=2 ) + '\n'
    return dump_yaml( data )

  # Data objects

  def decomposition_data( s, decomposition ):
    return {
      'kind'      : 'decomposition',
      'arity'     : decomposition.arity,
      'target'    : decomposition.target,
      'ideal'     : [ list( g.exponents )
                      for g in decomposition.source.generators ],
      'spaces'    : [ space_data( sp ) for sp in decomposition.spaces ],
      'sdepth'    : decomposition.sdepth() if decomposition.spaces else None,
      'squarefree': decomposition.is_squarefree(),
    }

  def partition_data( s, partition ):
    non_facet_uppers, missing_facets = partition.nice_report()
    return {
      'kind'            : 'partition',
      'arity'           : partition.n,
      'intervals'       : [ interval_data( i ) for i in partition.intervals ],
      'r_vector'        : list( partition.r_vector() ),
      'nice'            : partition.is_nice(),
      'non_facet_uppers': [ list( face_key( f ) ) for f in non_facet_uppers ],
      'missing_facets'  : [ list( face_key( f ) ) for f in missing_facets ],
    }

  def trace_data( s, trace ):
    def facets( c ):
      return [ list( face_key( f ) ) for f in c.facets ]
    def intervals( p ):
      if p is None:
        return None
      return [ interval_data( i ) for i in p.intervals ]
    if trace.case == 'base':
      return { 'case': 'base' }
    return {
      'case'                  : trace.case,
      'restriction'           : facets( trace.restriction ),
      'link'                  : facets( trace.link ),
      'restriction_partition' : intervals( trace.restriction_partition ),
      'link_partition'        : intervals( trace.link_partition ),
    }

  def report_data( s, report, arity=None ):
    return {
      'kind'         : 'verification',
      'arity'        : arity,
      'mode'         : report.kind,
      'ok'           : report.ok,
      'checked_count': report.checked_count,
      'failures'     : [ { 'witness' : witness_data( w ),
                           'observed': observed,
                           'expected': expected }
                         for w, observed, expected in report.failures ],
    }

  # Serialized forms, same interface as TextWriter

  def decomposition( s, decomposition ):
    return s.dumps( s.decomposition_data( decomposition ) )

  def partition( s, partition, r_vector=False, check_nice=False, trace=None ):
    data = s.partition_data( partition )
    if trace is not None:
      data[ 'trace' ] = s.trace_data( trace )
    return s.dumps( data )

  def report( s, report, arity=None, style=None ):
    return s.dumps( s.report_data( report, arity ) )

  def info( s, info ):
    return s.dumps( info )
