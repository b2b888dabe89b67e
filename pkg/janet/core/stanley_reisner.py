#=========================================================================
# stanley_reisner.py
#=========================================================================
# The Stanley-Reisner bridge between complexes and squarefree ideals
#
# I_D is generated by the minimal non-faces of D, so a squarefree
# monomial lies outside I_D exactly when its support is a face. An
# interval [F, G] of D corresponds to the squarefree Stanley space
# x_F K[G] of I_D^c.
#

from janet.components.monomial import Monomial, MonomialIdeal
from janet.components.stanley  import StanleySpace, StanleyDecomposition
from janet.components.stanley  import COMPLEMENT
from janet.utils.errors        import UndefinedError

# minimal_nonfaces
#
# A minimal non-face H has every H - {v} as a face, so it is a face F
# plus one vertex outside F. Those candidates are enough to search.
#

def minimal_nonfaces( complex_ ):
  found = set()
  for face in complex_.all_faces():
    for v in range( 1, complex_.n + 1 ):
      if v in face:
        continue
      h = face | { v }
      if h in found or complex_.has_face( h ):
        continue
      if all( complex_.has_face( h - { w } ) for w in h ):
        found.add( h )
  return found

def stanley_reisner( complex_ ):
  """Squarefree ideal generated by the minimal non-faces of a complex."""
  if complex_.is_void():
    raise UndefinedError(
      'stanley_reisner -- The void complex has no Stanley-Reisner ideal' )
  n = complex_.n
  return MonomialIdeal( [ Monomial.from_support( h, n )
                          for h in minimal_nonfaces( complex_ ) ], arity=n )

def partition_to_spaces( partition ):
  """Maps every interval [F, G] to the space x_F K[G] of I_D^c."""
  n = partition.n
  spaces = [ StanleySpace( Monomial.from_support( i.lower, n ), i.upper )
             for i in partition.intervals ]
  return StanleyDecomposition(
    stanley_reisner( partition.complex ), COMPLEMENT, spaces )
