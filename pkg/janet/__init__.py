from janet.version import __version__
