"""Both sides of the Lefschetz formulas for an antisymplectic involution.

The source side of the holomorphic formula is the alternating trace on
``H^*(X, O_X)``; the target side integrates ``Td(F) / ch(wedge T_F)`` over the
fixed surface, using the Lagrangian identification of the conormal bundle
with ``T_F``.  The topological formula gives ``e(F)`` from traces on
``H^2`` and ``H^4 = Sym^2 H^2``, which is only valid for ``b_2 = 23``.

On ``H^2 = H^{2,0} + H^{1,1} + H^{0,2}`` the involution negates the
symplectic form and its conjugate, so ``Tr H^2 = t - 2`` where ``t`` is the
trace on ``H^{1,1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TraceParityError, TraceRangeError
from .genera import ch_exterior, todd_class
from .symseries import evaluate_surface

B2 = 23
MIN_TRACE = -19
MAX_TRACE = 21


@dataclass(frozen=True)
class InvolutionTrace:
    t: int
    a: int
    b: int

    def __post_init__(self):
        if self.a + self.b != B2 or self.a - self.b != self.t - 2:
            raise ValueError(f"inconsistent eigenvalue split {self}")


def holomorphic_source_sum(dim_x: int) -> int:
    """sum_i (-1)^i Tr sigma^* on H^i(X, O_X) for irreducible symplectic X.

    Only even degrees contribute and sigma^* acts on H^{2j} by (-1)^j.
    """
    if dim_x <= 0 or dim_x % 2:
        raise ValueError(f"symplectic manifolds have even positive dimension, got {dim_x}")
    return sum((-1) ** j for j in range(dim_x // 2 + 1))


def holomorphic_target_surface(k2: int, euler: int) -> Fraction:
    integrand = todd_class(2, 2) * ch_exterior(2, 2).reciprocal()
    return evaluate_surface(integrand, k2, euler)


def sym2_trace(a: int, b: int) -> int:
    """Trace of the induced involution on Sym^2 of a space split as (a, b)."""
    if a < 0 or b < 0:
        raise ValueError("eigenspace dimensions must be non-negative")
    return a * (a + 1) // 2 + b * (b + 1) // 2 - a * b


def check_trace(t: int) -> None:
    if t % 2 == 0:
        raise TraceParityError(f"t = {t} is even; the trace on H^(1,1) must be odd")
    if t < MIN_TRACE:
        raise TraceRangeError(
            f"t = {t} < {MIN_TRACE}: the +1 eigenspace on H^2 must contain a Kahler class (a >= 1)"
        )
    if t > MAX_TRACE:
        raise TraceRangeError(
            f"t = {t} > {MAX_TRACE}: the -1 eigenspace on H^2 must contain the symplectic form and its conjugate (b >= 2)"
        )


def eigen_split(t: int) -> InvolutionTrace:
    check_trace(t)
    return InvolutionTrace(t=t, a=(t + 21) // 2, b=(25 - t) // 2)


def euler_fixed(t: int) -> int:
    """Euler number of the fixed surface via the topological Lefschetz formula."""
    split = eigen_split(t)
    return 2 + 2 * (t - 2) + sym2_trace(split.a, split.b)
