from janet.components.monomial  import Monomial, MonomialIdeal
from janet.components.monomial  import divides, support, minimalize
from janet.components.monomial  import contains, slice_ideal, alpha, beta
from janet.components.monomial  import is_squarefree
from janet.components.stanley   import StanleySpace, StanleyDecomposition
from janet.components.stanley   import IDEAL, COMPLEMENT, TARGETS
from janet.components.stanley   import space_contains
from janet.components.stanley   import is_squarefree_decomposition, sdepth
from janet.components.complex   import SimplicialComplex, face_key
from janet.components.complex   import from_facets, full_simplex
from janet.components.complex   import has_face, all_faces
from janet.components.complex   import restriction, shift_link
from janet.components.partition import Interval, Partition
from janet.components.partition import r_vector, is_nice
