#=========================================================================
# info_handler.py
#=========================================================================
# Handler for "janet info"
#

from janet.backends        import IDEAL_KIND
from janet.handlers.common import load_document, writer_for, emit

def ideal_info( ideal ):
  nonzero = ideal.arity > 0 and not ideal.is_zero()
  return {
    'kind'       : 'ideal',
    'arity'      : ideal.arity,
    'generators' : len( ideal ),
    'squarefree' : ideal.is_squarefree(),
    'max_degree' : ideal.max_degree(),
    'alpha'      : ideal.alpha() if nonzero else None,
    'beta'       : ideal.beta()  if nonzero else None,
  }

def complex_info( complex_ ):
  return {
    'kind'      : 'complex',
    'arity'     : complex_.n,
    'facets'    : len( complex_.facets ),
    'void'      : complex_.is_void(),
    'dimension' : complex_.dimension(),
    'faces'     : len( complex_.all_faces() ),
    'f_vector'  : list( complex_.f_vector() ),
  }

class InfoHandler:

  def __init__( s ):
    pass

  def launch( s, path, config ):
    doc = load_document( path, command='info' )
    if doc.kind == IDEAL_KIND:
      info = ideal_info( doc.body )
    else:
      info = complex_info( doc.body )
    emit( writer_for( config[ 'format' ] ).info( info ) )
    return 0
