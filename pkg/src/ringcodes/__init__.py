"""Exact arithmetic for linear and cyclic codes over R = Z4 + uZ4 + vZ4 + uvZ4 with u^2 = u, v^2 = v."""

from .cyclic import (RCyclicSpec, Z4CyclicSpec, cyclic_code_z4, dual_cyclic_z4, is_cyclic,
                     is_cyclic_r, is_quasi_cyclic, parse_r_generator, quasi_shift)
from .enumerators import (character_sum_table, clwe_of, hadamard_check, lee_enumerator,
                          lee_of, macwilliams_lee, macwilliams_slwe, slwe_of, symmetrize,
                          verify_clwe_macwilliams)
from .exceptions import (BudgetExceeded, DivisibilityError, IdentityViolation, ParseError,
                         UndefinedDistance)
from .linear import (CodeParams, RCode, Z4Code, decompose_rcode, dual_z4, gray_image,
                     standard_form)
from .mds import classify_z4_mds, singleton_r, singleton_z4, verify_mds_structure
from .reports import example_23, reproduce_table1
from .ring import RElement, chi, from_coeff, from_crt, lee_weight_r
from .z4 import Z4Poly

__version__ = "0.1.0"
