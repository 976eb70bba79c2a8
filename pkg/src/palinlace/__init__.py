"""Interlace and circle numbers of palindromic / self-inversive polynomials.

The number pair (il, cn) measures the least strength alpha at which the
family alpha (x^n + 1) + p angle-interlaces the n-th roots of unity,
respectively becomes (and stays) circle rooted.  This package computes
both, certifies the attaining roots of unity, classifies polynomials by
the fan of interlace certs, decides exactness, sweeps the alpha line, and
generates the named polynomial families those quantities are known for.
"""

__version__ = "0.1.0"

from .errors import (
    DargaMismatch,
    EmptyPolynomial,
    InternalInconsistency,
    InvalidParameter,
    NotApplicable,
    NotFull,
    NotSelfInversive,
    NotSupported,
    NotTrim,
    OracleFailure,
    PalinlaceError,
    TooLarge,
)
from .polycore import (
    AlphaPolynomial,
    Polynomial,
    SigmaRep,
    eval_unity,
    exact_gcd,
    instantiate,
    make_polynomial,
    p_alpha,
    poly_of,
    sigma_of,
    trim_part,
    zero_polynomial,
)
from .interlace import (
    BoundLadder,
    InterlaceResult,
    angle_interlaces,
    bound_ladder,
    interlace_number,
    is_interlace_rational,
    monotonic_lower,
    ramanujan_lower,
    shift_geometric,
)
from .foic import (
    ConeMembership,
    FoicFunctional,
    IsometryGraph,
    cone_halfspaces,
    cone_membership,
    count_colored_automorphisms,
    functional,
    isometry_graph,
    isometry_group,
    membership_shortcuts,
    polar_vertices,
)
from .circle import (
    CircleResult,
    ExactnessVerdict,
    R_polynomial,
    be_upper_bound,
    bounding_error,
    cayley,
    chen_bound,
    choose_omega,
    circle_number,
    circle_number_palindromic,
    cn_lower_bounds,
    gcd_xn1,
    hecke,
    is_exact,
    numeric_oracle_circle_rooted,
    self_interlace_upper,
)
from .dynamics import AlphaProfile, alpha_profile, root_trajectories, subdiscriminant_sequence
from . import families
