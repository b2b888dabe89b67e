#=========================================================================
# selftest_handler.py
#=========================================================================
# Runs the test suite shipped inside the janet package with pytest
#

import os

import pytest

from janet.utils import eprint, green, red

class SelftestHandler:

  def __init__( s ):
    s.package_dir = os.path.dirname( os.path.dirname(
      os.path.abspath( __file__ ) ) )

  def launch( s, verbose=False ):

    # Options for short clean printout:
    #
    # - q         : quiet and short
    # - rA        : one line per pass/fail test in the short summary
    # - tb=short  : shorter traceback printout
    #

    pytest_args = [ '-q', '-rA', '--disable-warnings', '--tb=short',
                    '-p', 'no:cacheprovider', s.package_dir ]
    if verbose:
      pytest_args[0] = '-v'

    eprint( 'pytest ' + ' '.join( pytest_args ) )
    status = pytest.main( pytest_args )

    if status != 0:
      eprint( red( 'selftest:' ), 'failed' )
      return 1

    eprint( green( 'selftest:' ), 'passed' )
    return 0
