#=========================================================================
# decompose_handler.py
#=========================================================================
# Handler for "janet decompose"
#

from janet.backends              import IDEAL_KIND
from janet.components.stanley    import StanleyDecomposition
from janet.components.stanley    import IDEAL, COMPLEMENT
from janet.core                  import janet_ideal, janet_complement
from janet.handlers.common       import load_document, writer_for, emit
from janet.handlers.common       import reversed_order

# decompose
#
# Runs the requested engine. With reverse_vars the variables are
# reversed before splitting and the spaces are mapped back afterwards,
# so the result is a decomposition of the ideal as given.
#

def decompose( ideal, target, merge=False, reverse_vars=False ):
  engine = janet_ideal if target == IDEAL else janet_complement
  if not reverse_vars:
    return engine( ideal, merge=merge )
  order   = reversed_order( ideal.arity )
  flipped = engine( ideal.permuted( order ), merge=merge )
  return StanleyDecomposition( ideal, target,
    [ sp.permuted( order ) for sp in flipped.spaces ] )

class DecomposeHandler:

  def __init__( s ):
    pass

  def launch( s, path, target, config ):
    target = target or COMPLEMENT
    doc = load_document( path, kinds=( IDEAL_KIND, ), command='decompose' )
    merge = bool( config[ 'merge' ] )
    result = decompose( doc.body, target, merge, config[ 'reverse_vars' ] )
    emit( writer_for( config[ 'format' ] ).decomposition( result ) )
    return 0
