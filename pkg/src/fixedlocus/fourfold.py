"""Fixed surfaces of antisymplectic involutions on fourfolds with b_2 = 23.

Everything is a function of the trace ``t`` of the involution on
``H^{1,1}(X)``, an odd integer in ``[-19, 21]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .genera import SurfaceInvariants, ahat_surface, complete_invariants
from .lefschetz import MAX_TRACE, MIN_TRACE, check_trace, euler_fixed


@dataclass(frozen=True)
class FourfoldFixedInvariants:
    t: int
    surface: SurfaceInvariants
    moduli_dim: int

    def as_row(self) -> dict:
        s = self.surface
        return {
            "t": self.t,
            "k2": s.k2,
            "chi": s.chi,
            "euler": s.euler,
            "signature": s.signature,
            "ahat": s.ahat,
            "moduli_dim": self.moduli_dim,
        }


@dataclass(frozen=True)
class CorollaryRow:
    k2: int
    chi: int
    traces: tuple[int, ...]


def invariants_from_trace(t: int) -> FourfoldFixedInvariants:
    check_trace(t)
    k2 = t * t - 1
    chi = (t * t + 7) // 8
    surface = complete_invariants(k2=k2, chi=chi)
    # the closed forms must agree with the Lefschetz and Noether routes
    if surface.euler != (t * t + 23) // 2 or surface.euler != euler_fixed(t):
        raise ArithmeticError(f"Euler number routes disagree at t={t}")
    if ahat_surface(surface.k2, surface.euler) != surface.ahat:
        raise ArithmeticError(f"series A-hat disagrees with -signature/8 at t={t}")
    return FourfoldFixedInvariants(t=t, surface=surface, moduli_dim=(21 - t) // 2)


def admissible_traces() -> tuple[int, ...]:
    return tuple(range(MIN_TRACE, MAX_TRACE + 1, 2))


def corollary_rows() -> list[CorollaryRow]:
    """Distinct ``(K^2, chi)`` pairs with the traces realizing each, by K^2."""
    groups: dict[tuple[int, int], list[int]] = {}
    for t in admissible_traces():
        s = invariants_from_trace(t).surface
        groups.setdefault((s.k2, s.chi), []).append(t)
    return [CorollaryRow(k2, chi, tuple(ts)) for (k2, chi), ts in sorted(groups.items())]


def corollary_table() -> list[tuple[int, int]]:
    return [(row.k2, row.chi) for row in corollary_rows()]
