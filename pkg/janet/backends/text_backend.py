#=========================================================================
# text_backend.py
#=========================================================================
# Human-readable rendering of results. Every writer returns a string with
# one item per line in canonical order, so output files are diff-stable.
#
#     1 * K[x1]
#     x2 * K[x2]
#
#     [{}, {124}]
#     [{3}, {134}]
#

from janet.backends.input_syntax import format_face, default_style
from janet.components.monomial   import Monomial
from janet.components.stanley    import StanleySpace

def format_interval( interval, style ):
  return '[{}, {}]'.format( format_face( interval.lower, style ),
                            format_face( interval.upper, style ) )

def format_witness( witness, style=None ):
  if isinstance( witness, ( Monomial, StanleySpace ) ):
    return str( witness )
  return format_face( witness, style or default_style( max( witness,
                                                             default=0 ) ) )

class TextWriter:

  def __init__( s, style=None ):
    s.style = style

  def _style( s, n ):
    return s.style or default_style( n )

  # decomposition

  def decomposition( s, decomposition ):
    lines = [ str( sp ) for sp in decomposition.spaces ]
    lines.append( '# target: {}'.format( decomposition.target ) )
    lines.append( '# spaces: {}'.format( len( decomposition ) ) )
    if decomposition.spaces:
      lines.append( '# sdepth: {}'.format( decomposition.sdepth() ) )
    lines.append( '# squarefree: {}'.format(
      str( decomposition.is_squarefree() ).lower() ) )
    return '\n'.join( lines ) + '\n'

  # partition
  #
  # r_vector and nice lines are only added on request
  #

  def partition( s, partition, r_vector=False, check_nice=False,
                 trace=None ):
    style = s._style( partition.n )
    lines = []
    if trace is not None:
      lines += [ '# ' + l for l in s.trace( trace ).splitlines() ]
    lines += [ format_interval( i, style ) for i in partition.intervals ]
    if r_vector:
      lines.append( 'r_vector: ({})'.format(
        ', '.join( str( r ) for r in partition.r_vector() ) ) )
    if check_nice:
      non_facet_uppers, missing_facets = partition.nice_report()
      lines.append( 'nice: {}'.format(
        str( partition.is_nice() ).lower() ) )
      for f in non_facet_uppers:
        lines.append( 'not a facet: {}'.format( format_face( f, style ) ) )
      for f in missing_facets:
        lines.append( 'facet not an upper end: {}'.format(
          format_face( f, style ) ) )
    return '\n'.join( lines ) + '\n'

  # trace

  def trace( s, trace ):
    if trace.case == 'base':
      return 'case: base\n'
    style = s._style( trace.restriction.n )
    def facets( c ):
      return '<' + ', '.join( format_face( f, style )
                              for f in c.facets ) + '>'
    def intervals( p ):
      if p is None:
        return '(void)'
      return ' '.join( format_interval( i, style ) for i in p.intervals )
    lines = [
      'case: {}'.format( trace.case ),
      'restriction: {}'.format( facets( trace.restriction ) ),
      'link: {}'.format( facets( trace.link ) ),
      'restriction partition: {}'.format(
        intervals( trace.restriction_partition ) ),
      'link partition: {}'.format( intervals( trace.link_partition ) ),
    ]
    return '\n'.join( lines ) + '\n'

  # report

  def report( s, report, arity=None, style=None ):
    style  = style or ( s._style( arity ) if arity else s.style )
    status = 'ok' if report.ok else 'FAIL'
    lines  = [ '{}: {}, {} checked, {} failures'.format(
      status, report.kind, report.checked_count, len( report.failures ) ) ]
    for witness, observed, expected in report.failures:
      lines.append( '  {}  observed {}  expected {}'.format(
        format_witness( witness, style ), observed, expected ) )
    return '\n'.join( lines ) + '\n'

  # info

  def info( s, info ):
    lines = []
    for k, v in info.items():
      if type( v ) == bool:
        v = str( v ).lower()
      elif type( v ) in ( list, tuple ):
        v = '(' + ', '.join( str( x ) for x in v ) + ')'
      elif v is None:
        v = 'undefined'
      lines.append( '{}: {}'.format( k, v ) )
    return '\n'.join( lines ) + '\n'
