"""Exact spectral and index data for deformations of complex cones in C^4."""

from .deformations import (
    ConicalReport,
    conical_cayley_dimension,
    conical_complex_dimension,
    coupling_parameters,
    twisted_cubic_coupled,
)
from .eta import (
    IndexQuery,
    MultiplicityProfile,
    eta_at_zero,
    eta_report,
    expected_index,
    fit_multiplicity_profile,
    index_correction,
)
from .exact import QSqrt3, QuadraticWeight, hurwitz_nonpositive, sqrt_exact, zeta_nonpositive
from .frames import ExteriorForm, MatrixForm, exterior_d, second_fundamental_form, verify_structure_equations, wedge
from .profiles import BUILTINS, C1, C2, C3, ConeProfile, DegreeFamily, load_profile, parse_profile
from .riemann_roch import BundleSum, LineBundle, euler_characteristic, genus_complete_intersection, h0, h0_sum
from .spectrum import SpectrumQuery, eigenvalue_membership, eigenspace_dimension_crosscheck, enumerate_spectrum
from .weights import WeightEntry, enumerate_weights, mode_range, weight_multiplicity

__version__ = "0.1.0"
