#=========================================================================
# verify_handler.py
#=========================================================================
# Handler for "janet verify"
#
# Runs the brute-force oracles on the engines' outputs. Without --mode,
# ideal documents are checked in modes "ideal" and "complement", complex
# documents in modes "partition" and "correspondence". The exit status is
# 1 as soon as one report has a failure.
#

from janet.backends                    import IDEAL_KIND, COMPLEX_KIND
from janet.components.stanley          import IDEAL, COMPLEMENT
from janet.handlers.common             import load_document, writer_for, emit
from janet.handlers.common             import reversed_order
from janet.handlers.decompose_handler  import decompose
from janet.handlers.partition_handler  import partition
from janet.oracle                      import verify_ideal_cover
from janet.oracle                      import verify_complement_cover
from janet.oracle                      import verify_partition
from janet.oracle                      import verify_correspondence
from janet.utils                       import JanetError, eprint, red, green

IDEAL_MODES   = [ 'ideal', 'complement' ]
COMPLEX_MODES = [ 'partition', 'correspondence' ]

class VerifyHandler:

  def __init__( s ):
    pass

  def run_mode( s, mode, doc, config ):

    max_degree   = config[ 'max_degree' ]
    reverse_vars = config[ 'reverse_vars' ]
    merge        = config[ 'merge' ]

    if mode in IDEAL_MODES:
      if doc.kind != IDEAL_KIND:
        raise JanetError( 'verify -- Mode "{}" needs an ideal '
                          'document'.format( mode ) )
      ideal = doc.body
      if mode == 'ideal':
        d = decompose( ideal, IDEAL, bool( merge ), reverse_vars )
        return verify_ideal_cover( ideal, d, max_degree )
      d = decompose( ideal, COMPLEMENT, bool( merge ), reverse_vars )
      return verify_complement_cover( ideal, d, max_degree )

    if doc.kind != COMPLEX_KIND:
      raise JanetError( 'verify -- Mode "{}" needs a complex '
                        'document'.format( mode ) )
    complex_ = doc.body
    merge    = True if merge is None else merge
    if mode == 'partition':
      p = partition( complex_, merge, reverse_vars )
      return verify_partition( complex_, p )
    if reverse_vars:
      complex_ = complex_.relabelled( reversed_order( complex_.n ) )
    return verify_correspondence( complex_, max_degree, merge )

  def launch( s, path, mode, config ):

    doc = load_document( path, command='verify' )

    if mode is None:
      modes = IDEAL_MODES if doc.kind == IDEAL_KIND else COMPLEX_MODES
    else:
      modes = [ mode ]

    writer = writer_for( config[ 'format' ], doc.style )
    status = 0

    for m in modes:
      report = s.run_mode( m, doc, config )
      emit( writer.report( report, arity=doc.arity ) )
      if report.ok:
        eprint( green( 'verify:' ), m, 'ok' )
      else:
        eprint( red( 'verify:' ), m, 'failed with',
                len( report.failures ), 'witnesses' )
        status = 1

    return status
