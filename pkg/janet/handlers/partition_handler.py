#=========================================================================
# partition_handler.py
#=========================================================================
# Handler for "janet partition"
#

from janet.backends              import COMPLEX_KIND
from janet.components.partition  import Partition
from janet.core                  import janet_partition, janet_partition_trace
from janet.handlers.common       import load_document, writer_for, emit
from janet.handlers.common       import reversed_order
from janet.utils                 import JanetError

# partition
#
# Runs the partition engine, optionally on the complex with its vertex
# order reversed. Intervals are mapped back to the original labels.
#

def partition( complex_, merge=True, reverse_vars=False ):
  if not reverse_vars:
    return janet_partition( complex_, merge=merge )
  order   = reversed_order( complex_.n )
  flipped = janet_partition( complex_.relabelled( order ), merge=merge )
  return Partition( complex_,
    [ i.relabelled( order ) for i in flipped.intervals ] )

class PartitionHandler:

  def __init__( s ):
    pass

  def launch( s, path, config, check_nice=False, r_vector=False,
              trace=False ):

    doc = load_document( path, kinds=( COMPLEX_KIND, ),
                         command='partition' )

    merge = True if config[ 'merge' ] is None else config[ 'merge' ]

    if trace and config[ 'reverse_vars' ]:
      raise JanetError(
        'partition -- --trace cannot be combined with --reverse-vars' )

    result = partition( doc.body, merge, config[ 'reverse_vars' ] )
    steps  = janet_partition_trace( doc.body, merge ) if trace else None

    writer = writer_for( config[ 'format' ], doc.style )
    emit( writer.partition( result, r_vector=r_vector,
                            check_nice=check_nice, trace=steps ) )
    return 0
