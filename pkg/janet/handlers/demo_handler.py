#=========================================================================
# demo_handler.py
#=========================================================================
# Copies the example inputs and prints instructions to get started
#

import os
import shutil

from janet.utils import bold, eprint, get_top_dir

class DemoHandler:

  def __init__( s ):
    s.demo_src_path = os.path.join( get_top_dir(), 'designs' )
    s.demo_dst_path = 'janet-demo'

  # Launch

  def launch( s ):

    try:
      shutil.copytree( src      = s.demo_src_path,
                       dst      = s.demo_dst_path,
                       symlinks = False )
    except FileExistsError:
      pass
    except Exception:
      eprint( bold( 'Error:' ), 'Could not copy demo from install' )
      raise

    print()
    print( bold( 'Demo inputs for janet' ) )
    print()
    print( 'Example ideals and complexes have been copied into'  )
    print( '"janet-demo". To get started, run:'                  )
    print()
    print( bold( '  %' ), 'cd janet-demo' )
    print( bold( '  %' ), 'janet partition --input rp2.cplx --check-nice --r-vector' )
    print( bold( '  %' ), 'janet decompose --input edges.ideal --target complement' )
    print( bold( '  %' ), 'janet verify    --input rp2.cplx' )
    print( bold( '  %' ), 'janet info      --input rp2.cplx' )
    print()
    return 0
