"""Slope certification and SU(2) representation tools for Dehn surgery.

Exact invariants (Alexander polynomials, branched-cover orders, graded
Euler characteristics, abelianizations) feed a certifier that decides, for
a rational surgery slope p/q, whether p/q-surgery on every nontrivial knot
in the 3-sphere is known to admit an irreducible SU(2) representation.  A
numerical module searches for irreducible representations of the relevant
finitely presented groups as a desk-scale oracle.
"""

__version__ = "0.1.0"

from .certify import Certificate, certify, enumerate_certified, is_prime_power
from .covers import cyclic_reps, fox_branched_order, nondegeneracy_check
from .knots import (
    binary_dihedral_count,
    determinant,
    enumerate_lspace_alexander,
    framed_instanton_dim,
    torus_alexander,
)
from .laurent import IntPoly, LaurentPoly, cyclotomic, divides, root_of_unity_product
from .presentations import (
    GroupPresentation,
    abelianization_smith,
    lens_presentation,
    surgery_presentation,
)
from .simple_knots import (
    GradedEuler,
    SimpleKnotInvariants,
    branched_cover_order,
    check_property_star,
    graded_euler,
    homologous_difference_divisible,
    simple_knot_alexander,
    simple_knot_d,
    simple_knot_genus,
    simple_knot_invariants,
)
from .slopes import Slope
from .su2search import (
    QuaternionAssignment,
    RepSearchResult,
    defect,
    defect_gradient,
    is_irreducible,
    search_irreducible,
)

__all__ = [
    "Certificate",
    "GradedEuler",
    "GroupPresentation",
    "IntPoly",
    "LaurentPoly",
    "QuaternionAssignment",
    "RepSearchResult",
    "SimpleKnotInvariants",
    "Slope",
    "abelianization_smith",
    "binary_dihedral_count",
    "branched_cover_order",
    "certify",
    "check_property_star",
    "cyclic_reps",
    "cyclotomic",
    "defect",
    "defect_gradient",
    "determinant",
    "divides",
    "enumerate_certified",
    "enumerate_lspace_alexander",
    "fox_branched_order",
    "framed_instanton_dim",
    "graded_euler",
    "homologous_difference_divisible",
    "is_irreducible",
    "is_prime_power",
    "lens_presentation",
    "nondegeneracy_check",
    "root_of_unity_product",
    "search_irreducible",
    "simple_knot_alexander",
    "simple_knot_d",
    "simple_knot_genus",
    "simple_knot_invariants",
    "surgery_presentation",
    "torus_alexander",
]
