#=========================================================================
# common.py
#=========================================================================
# Pieces shared by the command handlers
#

import sys

from janet.backends     import parse_document, TextWriter, DataWriter
from janet.backends     import IDEAL_KIND, COMPLEX_KIND
from janet.utils        import read_text, JanetError
from janet.utils.errors import ParseError

# load_document
#
# Reads and parses an input file ("-" for stdin). "kinds" restricts the
# accepted document kinds.
#

def load_document( path, kinds=( IDEAL_KIND, COMPLEX_KIND ), command='' ):
  if not path:
    raise JanetError( '{} -- Argument --input is required'.format( command ) )
  try:
    text = read_text( path )
  except OSError as e:
    raise JanetError( '{} -- Could not read "{}": {}'.format(
      command, path, e.strerror ) )
  except UnicodeDecodeError:
    raise JanetError( '{} -- "{}" is not UTF-8 text'.format( command, path ) )
  try:
    doc = parse_document( text )
  except ParseError as e:
    raise ParseError( '{}: {}'.format( path, e.msg ), e.line, e.column )
  if doc.kind not in kinds:
    raise JanetError( '{} -- Expected {} document, got {}'.format(
      command, ' or '.join( kinds ), doc.kind ) )
  return doc

def writer_for( fmt, style=None ):
  if fmt == 'text':
    return TextWriter( style )
  return DataWriter( fmt )

def reversed_order( n ):
  """Variable order x_n, ..., x_1 (its own inverse)."""
  return list( range( n, 0, -1 ) )

def emit( text ):
  sys.stdout.write( text )
