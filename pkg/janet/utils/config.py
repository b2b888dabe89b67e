#=========================================================================
# config.py
#=========================================================================
# Optional YAML configuration
#
# A config file provides defaults for command-line flags:
#
#     format: json
#     merge: true        # unset: partitions merge, decompositions do not
#     max_degree: 8
#     reverse_vars: false
#     color: true
#     verbose: false
#
# Explicit flags win over the file, the file wins over DEFAULTS. Without
# --config, ".janet.yml" in the working directory is used if present.
#

import os

import yaml

from janet.utils.errors  import JanetError
from janet.utils.helpers import read_yaml

DEFAULT_CONFIG_PATH = '.janet.yml'

DEFAULTS = {
  'format'       : 'text',
  'merge'        : None,
  'max_degree'   : None,
  'reverse_vars' : False,
  'color'        : True,
  'verbose'      : False,
}

FORMATS = ( 'text', 'json', 'yaml' )

class Config:

  def __init__( s, data=None ):
    s._data = dict( DEFAULTS )
    if data:
      s.update( data )

  def update( s, data ):
    for k, v in data.items():
      if k not in DEFAULTS:
        raise JanetError(
          'Config -- Unknown configuration key "{}"'.format( k ) )
      s._data[ k ] = v
    if s._data[ 'format' ] not in FORMATS:
      raise JanetError( 'Config -- "format" must be one of {}'.format(
        ', '.join( FORMATS ) ) )
    if s._data[ 'merge' ] is not None and type( s._data[ 'merge' ] ) != bool:
      raise JanetError( 'Config -- "merge" must be true or false' )
    md = s._data[ 'max_degree' ]
    if md is not None and ( type( md ) != int or md < 0 ):
      raise JanetError(
        'Config -- "max_degree" must be a non-negative integer' )

  # merged_with
  #
  # Returns a new Config with the non-None overrides applied
  #

  def merged_with( s, overrides ):
    new = Config( s._data )
    new.update( { k: v for k, v in overrides.items() if v is not None } )
    return new

  def __getitem__( s, key ):
    return s._data[ key ]

# load
#
# Loads a config file. Passing None looks for DEFAULT_CONFIG_PATH and
# falls back to the defaults if it does not exist.
#

def load( path=None ):
  if path is None:
    if not os.path.exists( DEFAULT_CONFIG_PATH ):
      return Config()
    path = DEFAULT_CONFIG_PATH
  try:
    data = read_yaml( path )
  except FileNotFoundError:
    raise JanetError( 'load -- Config file not found: "{}"'.format( path ) )
  except OSError as e:
    raise JanetError( 'load -- Could not read config "{}": {}'.format(
      path, e.strerror ) )
  except yaml.YAMLError as e:
    raise JanetError( 'load -- Config file is not valid YAML: "{}"\n{}'.format(
      path, e ) )
  if data is None:
    data = {}
  if type( data ) != dict:
    raise JanetError(
      'load -- Config file must hold a mapping: "{}"'.format( path ) )
  return Config( data )
