#=========================================================================
# janet
#=========================================================================
#
#  -h --help     Display this message
#  -v --version  Version info
#     --demo     Copy example inputs into "janet-demo"
#
# janet decompose (Stanley decomposition of an ideal or its complement)
#
#  -i --input    file   --  Ideal document ("-" for stdin)
#     --target   string --  ideal, complement (default: complement)
#
# janet partition (Partition of a simplicial complex)
#
#  -i --input    file   --  Complex document ("-" for stdin)
#     --check-nice      --  Report whether the partition is nice
#     --r-vector        --  Print the r-vector
#     --trace           --  Print the top-level split
#
# janet verify (Brute-force check of the engines' outputs)
#
#  -i --input    file   --  Ideal or complex document
#     --mode     string --  ideal, complement, partition, correspondence
#     --max-degree int  --  Degree bound for monomial checks
#
# janet info (Arity, generator/facet counts, face counts)
#
#  -i --input    file   --  Ideal or complex document
#
# janet selftest (Run the shipped test suite)
#
# Common options
#
#     --format   string --  text, json, yaml
#     --merge / --no-merge  Merge repeated spaces and intervals
#     --reverse-vars    --  Split on x1 first instead of xn
#     --config   file   --  YAML defaults (else .janet.yml if present)
#     --no-color        --  Plain diagnostics
#     --verbose         --  Debug logging on stderr
#
# Exit status: 0 success, 1 verification failure, 2 usage or input error
#

import argparse
import sys

from janet              import __version__
from janet.handlers     import DecomposeHandler, PartitionHandler
from janet.handlers     import VerifyHandler, InfoHandler
from janet.handlers     import DemoHandler, SelftestHandler
from janet.utils        import bold, eprint, set_color, setup_logging
from janet.utils        import JanetError
from janet.utils.config import load as load_config, FORMATS

COMMANDS = [ 'decompose', 'partition', 'verify', 'info', 'selftest' ]

#-------------------------------------------------------------------------
# Command line processing
#-------------------------------------------------------------------------

def print_usage( out ):
  with open( __file__ ) as f:
    for ( lineno, line ) in enumerate( f ):
      if ( line[0] != '#' ): return
      if ( (lineno == 1) or (lineno >= 3) ):
        print( line[1:].rstrip( "\n" ), file=out )

class ArgumentParserWithCustomError( argparse.ArgumentParser ):
  def error( s, msg = "" ):
    if ( msg ): eprint( "\n ERROR: %s" % msg )
    out = sys.stderr if msg else sys.stdout
    print( "", file=out )
    print_usage( out )
    sys.exit( 2 if msg else 0 )

def parse_cmdline( argv=None ):
  p = ArgumentParserWithCustomError( add_help=False )
  p.add_argument( "-v", "--version", action="store_true"            )
  p.add_argument( "-h", "--help",    action="store_true"            )
  p.add_argument(       "--demo",    action="store_true"            )
  p.add_argument(       "args",      type=str, nargs='*'            )

  # Input and command-specific arguments
  p.add_argument( "-i", "--input"                                   )
  p.add_argument(       "--target",  choices=( "ideal", "complement" ) )
  p.add_argument(       "--check-nice", action="store_true"         )
  p.add_argument(       "--r-vector",   action="store_true"         )
  p.add_argument(       "--trace",      action="store_true"         )
  p.add_argument(       "--mode",    choices=( "ideal", "complement",
                                               "partition",
                                               "correspondence" )   )
  p.add_argument(       "--max-degree", type=int                    )

  # Common arguments (None means: take it from the config)
  p.add_argument(       "--format",  choices=FORMATS                )
  p.add_argument(       "--merge",   dest="merge", action="store_const",
                                     const=True                     )
  p.add_argument(       "--no-merge", dest="merge", action="store_const",
                                     const=False                    )
  p.add_argument(       "--reverse-vars", action="store_const", const=True )
  p.add_argument(       "--config"                                  )
  p.add_argument(       "--no-color", dest="color", action="store_const",
                                     const=False                    )
  p.add_argument(       "--verbose", action="store_const", const=True )

  opts = p.parse_args( argv )
  if opts.help: p.error() # print help
  if opts.max_degree is not None and opts.max_degree < 0:
    p.error( "--max-degree must be non-negative" )
  return opts

#-------------------------------------------------------------------------
# Main
#-------------------------------------------------------------------------

def dispatch( command, opts, config ):

  if command == 'decompose':
    return DecomposeHandler().launch(
      path   = opts.input,
      target = opts.target,
      config = config,
    )

  if command == 'partition':
    return PartitionHandler().launch(
      path       = opts.input,
      config     = config,
      check_nice = opts.check_nice,
      r_vector   = opts.r_vector,
      trace      = opts.trace,
    )

  if command == 'verify':
    return VerifyHandler().launch(
      path   = opts.input,
      mode   = opts.mode,
      config = config,
    )

  if command == 'info':
    return InfoHandler().launch( path = opts.input, config = config )

  return SelftestHandler().launch( verbose = config[ 'verbose' ] )

def main( argv=None ):

  try:
    opts = parse_cmdline( argv )
  except SystemExit as e:
    return e.code

  # Version

  if opts.version:
    print( __version__ )
    return 0

  # Create a demo if the option was given

  if opts.demo:
    return DemoHandler().launch()

  # Need a known command

  if not opts.args or opts.args[0] not in COMMANDS or len( opts.args ) > 1:
    try:
      ArgumentParserWithCustomError().error(
        'Command can be "janet ' + '" or "janet '.join( COMMANDS ) + '"' )
    except SystemExit as e:
      return e.code

  # Configuration: flags override the config file, which overrides the
  # built-in defaults

  try:
    config = load_config( opts.config ).merged_with( {
      'format'       : opts.format,
      'merge'        : opts.merge,
      'max_degree'   : opts.max_degree,
      'reverse_vars' : opts.reverse_vars,
      'color'        : opts.color,
      'verbose'      : opts.verbose,
    } )
  except JanetError as e:
    eprint( bold( 'Error:' ), e )
    return 2

  set_color( config[ 'color' ] )
  setup_logging( config[ 'verbose' ] )

  try:
    return dispatch( opts.args[0], opts, config )
  except JanetError as e:
    eprint( bold( 'Error:' ), e )
    return 2
