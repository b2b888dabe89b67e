#=========================================================================
# generators.py
#=========================================================================
# Seed-deterministic random ideals and complexes for property tests
#
# Both generators draw from random.Random( seed ) (Mersenne Twister) in a
# fixed sequence, so a failing seed reproduces on every machine:
#
# random_ideal
#   1. g = randint( 1, max_gens )  (no draw and g = 0 if max_gens = 0)
#   2. per generator: degree d = randint( min( 1, max_deg ), max_deg )
#      - squarefree: support = sample( 1..n, min( d, n ) )
#      - otherwise : d times randint( 1, n ), each adds one to that
#                    exponent
#   3. minimalize
#
# random_complex
#   1. f = randint( 1, max_facets )
#   2. per candidate facet: size = randint( 0, n ), then
#      sample( 1..n, size )
#   3. from_facets keeps the maximal candidates
#

import random

from janet.components.complex  import SimplicialComplex
from janet.components.monomial import Monomial, minimalize

def random_ideal( seed, n, max_deg, max_gens, squarefree=False ):
  if n < 1:
    raise ValueError( 'random_ideal -- Needs n >= 1' )
  rng  = random.Random( seed )
  gens = []
  count = rng.randint( 1, max_gens ) if max_gens > 0 else 0
  for _ in range( count ):
    d = rng.randint( min( 1, max_deg ), max_deg )
    if squarefree:
      gens.append( Monomial.from_support(
        rng.sample( range( 1, n+1 ), min( d, n ) ), n ) )
    else:
      exps = [ 0 ] * n
      for _ in range( d ):
        exps[ rng.randint( 1, n ) - 1 ] += 1
      gens.append( Monomial( exps ) )
  return minimalize( gens, n )

def random_complex( seed, n, max_facets ):
  if n < 1:
    raise ValueError( 'random_complex -- Needs n >= 1' )
  rng = random.Random( seed )
  candidates = []
  for _ in range( rng.randint( 1, max( 1, max_facets ) ) ):
    size = rng.randint( 0, n )
    candidates.append( rng.sample( range( 1, n+1 ), size ) )
  return SimplicialComplex( n, candidates )
