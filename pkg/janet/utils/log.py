#=========================================================================
# log.py
#=========================================================================
# Logging setup for the command line. Library modules only create
# module-level loggers; handlers are attached here.
#

import logging
import sys

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

def setup_logging( verbose=False ):
  root = logging.getLogger( 'janet' )
  for h in list( root.handlers ):
    root.removeHandler( h )
  handler = logging.StreamHandler( sys.stderr )
  handler.setFormatter( logging.Formatter( LOG_FORMAT ) )
  root.addHandler( handler )
  root.setLevel( logging.DEBUG if verbose else logging.WARNING )
  root.propagate = False
  return root
