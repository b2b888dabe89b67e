#=========================================================================
# helpers.py
#=========================================================================
# Small utilities shared by the handlers and writers
#

import os
import sys
import yaml

#-------------------------------------------------------------------------
# Utility functions
#-------------------------------------------------------------------------

# get_top_dir
#
# Returns the path to the top directory of the janet install (the one
# holding the "designs" directory with the example inputs)
#

def get_top_dir():
  try:
    return os.environ[ 'JANET_HOME' ]
  except KeyError:
    return os.path.abspath( os.path.dirname( os.path.dirname(
      os.path.dirname( __file__ ) ) ) )

# read_text
#
# Reads a whole input document, "-" means stdin
#

def read_text( path ):
  if path == '-':
    return sys.stdin.read()
  with open( path, encoding="utf-8" ) as f:
    return f.read()

#-------------------------------------------------------------------------
# YAML helper functions
#-------------------------------------------------------------------------

# read_yaml
#
# Takes a path to a yaml file and returns the data
#

def read_yaml( path ):
  with open( path ) as f:
    data = yaml.safe_load( f )
  return data

# dump_yaml
#
# Serializes data to a YAML string with a stable key order
#

def dump_yaml( data ):
  return yaml.safe_dump( data, default_flow_style=None, sort_keys=False )

#-------------------------------------------------------------------------
# Colors
#-------------------------------------------------------------------------
# Diagnostics only ever go to stderr, so colors are decided by whether
# stderr is a terminal. set_color( False ) turns them off globally.

RED    = '\033[31m'
GREEN  = '\033[92m'
BOLD   = '\033[1m'
END    = '\033[0m'

_use_color = sys.stderr.isatty()

def set_color( enable ):
  global _use_color
  _use_color = bool( enable ) and sys.stderr.isatty()

def _wrap( code, text ):
  return code + text + END if _use_color else text

def bold( text ):
  return _wrap( BOLD, text )

def red( text ):
  return _wrap( RED, text )

def green( text ):
  return _wrap( GREEN, text )

# eprint
#
# print() to stderr
#

def eprint( *args, **kwargs ):
  print( *args, file=sys.stderr, **kwargs )
