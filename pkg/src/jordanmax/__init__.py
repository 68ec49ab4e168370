"""Exact counts of maximal-size Jordan blocks of local monodromy.

Input is a combinatorial model of a degeneration with simple normal crossing
special fiber (components, multiplicities, intersection strata, horizontal
divisors) plus trivialization data for the nearby-cycle local systems.
All arithmetic is exact, over Q(zeta_d).
"""

__version__ = "0.1.0"

from .cyclotomic import (
    CochainComplex,
    CycNum,
    ExactMatrix,
    cohomology_dims,
    cyc_arith,
    cyclotomic_polynomial,
    kernel_dim_on_cohomology,
    matrix_rank,
)
from .criteria import (
    HyperresolutionInput,
    branches_nu_lambda1,
    curve_nu_03,
    singular_nu_c,
    singular_nu_c_upper,
    smooth_hyperresolution,
    theorem3_nu,
    theorem4_check,
)
from .eigen import (
    EigenvalueSpec,
    JordanReport,
    TrivializationAtlas,
    build_b_complex,
    build_c_complex,
    canonical_atlas,
    extend_by_duality,
    jordan_report,
    nu,
    load_atlas,
    nu_c,
    parse_atlas,
    restriction_morphism,
)
from .errors import InconsistencyError, InputError, JordanMaxError
from .model import (
    DegenerationModel,
    FiniteAbelianGroup,
    j_set,
    lambda_orders,
    lambda_strata,
    load_model,
    parse_model,
    serialize_model,
)
from .spectrum import SpectrumPoly, alpha_dprime, alpha_prime, spectrum_homogeneous, spectrum_yomdin
