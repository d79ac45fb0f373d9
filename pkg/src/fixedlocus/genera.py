"""Named characteristic classes and genus formulas for surfaces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InconsistentSurface
from .symseries import (
    SymSeries,
    evaluate_surface,
    exp_c1_multiple,
    exp_series,
    inverse_series,
    per_root_product,
)


def todd_factor(d: int) -> list[Fraction]:
    """Coefficients of ``x/(1-e^{-x})`` to degree ``d``.

    Obtained by inverting the unit series ``(1-e^{-x})/x``.
    """
    unit = [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(d + 1)]
    return inverse_series(unit, d)


@lru_cache(maxsize=None)
def todd_class(m: int, d: int) -> SymSeries:
    return per_root_product(todd_factor(d), m, d)


@lru_cache(maxsize=None)
def ch_exterior(m: int, d: int) -> SymSeries:
    """Chern character of the full exterior algebra, ``prod_i (1 + e^{x_i})``."""
    factor = exp_series(1, d)
    factor[0] += 1
    return per_root_product(factor, m, d)


@lru_cache(maxsize=None)
def ahat_integrand(m: int, d: int) -> SymSeries:
    """``Td * e^{-c_1/2}``; its top-degree integral is the A-hat genus."""
    return todd_class(m, d) * exp_c1_multiple(Fraction(-1, 2), m, d)


def ahat_surface(k2: int, euler: int) -> Fraction:
    """A-hat genus of a surface from K^2 and e, by series evaluation.

    Agrees with the closed form ``(2e - K^2)/24``.
    """
    return evaluate_surface(ahat_integrand(2, 2), k2, euler)


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of a (possibly disconnected) compact complex surface.

    All fields are totals over connected components.
    """

    k2: int
    chi: int
    euler: int
    signature: int
    ahat: Fraction

    def __post_init__(self):
        if self.euler != 12 * self.chi - self.k2:
            raise InconsistentSurface(
                f"Noether fails: 12*{self.chi} - {self.k2} != {self.euler}"
            )
        if self.signature != self.k2 - 8 * self.chi or 3 * self.signature != self.k2 - 2 * self.euler:
            raise InconsistentSurface(f"signature {self.signature} inconsistent")
        if self.ahat != Fraction(-self.signature, 8):
            raise InconsistentSurface(f"A-hat {self.ahat} != -signature/8")


def complete_invariants(
    *, k2: int | None = None, chi: int | None = None, euler: int | None = None
) -> SurfaceInvariants:
    """Fill in the full record from any two of ``k2``, ``chi``, ``euler``."""
    given = sum(v is not None for v in (k2, chi, euler))
    if given != 2:
        raise ValueError("exactly two of k2, chi, euler must be given")
    if chi is None:
        q, r = divmod(k2 + euler, 12)
        if r:
            raise InconsistentSurface(
                f"chi = ({k2} + {euler})/12 is not an integer"
            )
        chi = q
    elif euler is None:
        euler = 12 * chi - k2
    else:
        k2 = 12 * chi - euler
    signature = k2 - 8 * chi
    return SurfaceInvariants(
        k2=k2, chi=chi, euler=euler, signature=signature, ahat=Fraction(-signature, 8)
    )
