"""Exact characteristic-class calculus in formal Chern roots.

Checks the series identities giving ``A-hat(F) = 1`` for the fixed locus of
an antisymplectic involution, and tabulates the fixed-surface invariants of
such involutions on symplectic fourfolds with ``b_2 = 23``.
"""

from .catalog import CatalogEntry, Family, trace_coverage
from .fourfold import (
    FourfoldFixedInvariants,
    admissible_traces,
    corollary_table,
    invariants_from_trace,
)
from .genera import (
    SurfaceInvariants,
    ahat_integrand,
    ahat_surface,
    ch_exterior,
    complete_invariants,
    todd_class,
)
from .identity import VerificationReport, verify_per_root, verify_product, verify_top_degree
from .lefschetz import InvolutionTrace, eigen_split, euler_fixed, sym2_trace
from .symseries import ChernPolynomial, SymSeries

__version__ = "0.1.0"
