"""Exact computer algebra for pi-typical Witt vectors.

The library covers plain Witt rings W_n(B) with their ghost calculus and
operator suite (T, F, V, Teichmuller, the (pi) map, exp_delta), shifted
Witt rings W_[m]n(B) with the lateral Frobenius and the head-dropping
shift, formal group laws with logarithms, kernel points of the jet-space
projections, and a seeded law harness that verifies every identity in the
suite numerically and (where budgeted) symbolically.
"""

from .errors import InternalError, WittlabError
from .fgl import FormalGroupLaw, formal_inverse, formal_log, load_fgl
from .kernel import (
    KernelPoint,
    difference_character,
    kernel_add,
    kernel_embed,
    kernel_lateral_f,
    kernel_neg,
    kernel_phi,
    kernel_project_u,
    kernel_section_sigma,
    kernel_witt_point,
    kernel_zero,
    psi_map,
)
from .laws import (
    REGISTRY,
    REPORT_SCHEMA,
    default_matrix,
    run_law,
    run_suite,
    symbolic_verify,
)
from .rings import Frac, RingConfig, RingElement, make_ring_config
from .shifted import (
    ShiftedWittVector,
    include_I,
    lateral_frobenius,
    restrict_T,
    scalar_shifted,
    shift_E,
    shifted_add,
    shifted_ghost,
    shifted_ghost_solve,
    shifted_mul,
    shifted_neg,
    shifted_zero,
)
from .witt import (
    GhostVector,
    WittVector,
    delta,
    exp_delta,
    frobenius,
    frobenius_iter,
    ghost,
    ghost_solve,
    mult_pi,
    scalar_mul,
    teichmuller,
    truncate,
    universal_polynomials,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
    witt_sub,
    witt_zero,
)

__version__ = "0.1.0"
