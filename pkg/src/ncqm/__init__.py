"""Exact kinematics of two-dimensional noncommutative quantum mechanics.

Sector labels and commutator matrices, the generalized Bopp-shift family,
Darboux canonicalization, the step-two nilpotent group ``G_NC`` with its
quotient onto the Weyl-Heisenberg group, coadjoint orbits, and Moyal star
products for constant commutator matrices.
"""

from .bopp import (
    BoppParams,
    BoppRealization,
    a_coefficient,
    bopp_matrix,
    realization_transfer,
    verify_sector_invariance,
)
from .darboux import (
    DarbouxMap,
    QuadraticForm,
    ReductionVerdict,
    SpectrumResult,
    canonicalize,
    intrinsic_canonicalization,
    is_darboux_map,
    quadratic_spectrum,
    reduction_verdict,
    transform_quadratic,
    williamson_frequencies,
)
from .errors import *  # noqa: F401,F403
from .group import (
    EquivalenceStatus,
    EquivalenceVerdict,
    Functional,
    GroupElement,
    LieElement,
    OrbitData,
    WeylHeisenbergElement,
    bch_multiply,
    bracket,
    coadjoint_act,
    connecting_element,
    decide_equivalence,
    factors_through_quotient,
    kirillov_form,
    orbit_data,
    quotient_project,
)
from .rational import format_rational, parse_rational
from .sector import (
    CentralCharacterVector,
    CommutatorMatrix,
    RealizationMatrix,
    SectorLabel,
    central_character,
    conjugation_compatible,
    omega_ccr,
    omega_nc,
    pfaffian,
    push_commutators,
)
from .starprod import (
    GaussianRational,
    PolySymbol,
    moyal_star,
    poisson_bracket,
    pullback_linear,
    shadow_report,
    star_commutator,
)

__version__ = "0.1.0"
