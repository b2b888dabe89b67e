#=========================================================================
# __main__.py
#=========================================================================

import sys

from janet.cli import main

if __name__ == '__main__':
  sys.exit( main() )
