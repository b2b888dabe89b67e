from janet.oracle.verify     import VerificationReport
from janet.oracle.verify     import verify_ideal_cover, verify_complement_cover
from janet.oracle.verify     import verify_partition, verify_correspondence
from janet.oracle.verify     import monomials_up_to, default_bound
from janet.oracle.generators import random_ideal, random_complex
