"""Exact verification of the series identities behind ``A-hat(F) = 1``.

The central identity, over the ``m`` Chern roots of ``T_F``::

    Td(F) / ch(wedge T_F) = 2^{-m} e^{-c_1} prod_i 2x_i / (1 - e^{-2x_i})

and, in top degree, the right-hand side integrates to ``Td(F) e^{-c_1/2}``.
Each verifier compares both sides exactly at a finite truncation and reports
the first discrepancy found.  The keyword arguments perturb the right-hand
side; they exist so the checks can be shown to detect a wrong formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .genera import ahat_integrand, ch_exterior, todd_class, todd_factor
from .symseries import (
    ChernPolynomial,
    SymSeries,
    exp_c1_multiple,
    exp_series,
    inverse_series,
    mul_series,
    scale_series,
)

MUTATIONS = {
    "drop-exp-c1": {"include_exp_c1": False},
    "normalizer-2m": {"exponent_per_root": 2},
    "root-scale-3": {"root_scale": 3},
}


@dataclass(frozen=True)
class Discrepancy:
    degree: int
    monomial: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def monomial_str(self) -> str:
        return ChernPolynomial.monomial_str(self.monomial) or "1"


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    num_roots: int
    trunc_degree: int
    passed: bool
    first_discrepancy: Discrepancy | None = None

    def __post_init__(self):
        if self.passed != (self.first_discrepancy is None):
            raise ValueError("passed must be true exactly when there is no discrepancy")


def _first_discrepancy(lhs: SymSeries, rhs: SymSeries) -> Discrepancy | None:
    diff = lhs - rhs
    if diff.is_zero():
        return None
    k = diff.degrees()[0]
    left = lhs.homogeneous_part(k).to_chern_basis()
    right = rhs.homogeneous_part(k).to_chern_basis()
    delta = diff.homogeneous_part(k).to_chern_basis()
    mono = delta.sorted_terms()[0][0]
    return Discrepancy(k, mono, left.coefficient(mono), right.coefficient(mono))


def _report(name: str, lhs: SymSeries, rhs: SymSeries) -> VerificationReport:
    found = _first_discrepancy(lhs, rhs)
    return VerificationReport(
        check_name=name,
        num_roots=lhs.num_roots,
        trunc_degree=min(lhs.trunc_degree, rhs.trunc_degree),
        passed=found is None,
        first_discrepancy=found,
    )


def _rhs(
    m: int, d: int, *, include_exp_c1: bool, exponent_per_root: int, root_scale: int
) -> SymSeries:
    out = todd_class(m, d).scale_roots(root_scale) * Fraction(1, 2 ** (exponent_per_root * m))
    if include_exp_c1:
        out = out * exp_c1_multiple(-1, m, d)
    return out


def verify_per_root(
    d: int,
    *,
    include_exp_c1: bool = True,
    exponent_per_root: int = 1,
    root_scale: int = 2,
) -> VerificationReport:
    """One root: ``x/((1-e^{-x})(1+e^x)) = 1/2 e^{-x} 2x/(1-e^{-2x})``.

    Works on plain univariate coefficient lists, independent of the
    symmetric-series kernel.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    todd = todd_factor(d)
    ch = exp_series(1, d)
    ch[0] += 1
    lhs = mul_series(todd, inverse_series(ch, d), d)
    rhs = scale_series(todd, root_scale)
    rhs = [c / 2**exponent_per_root for c in rhs]
    if include_exp_c1:
        rhs = mul_series(rhs, exp_series(-1, d), d)
    for k, (x, y) in enumerate(zip(lhs, rhs)):
        if x != y:
            return VerificationReport("per_root", 1, d, False, Discrepancy(k, (k,), x, y))
    return VerificationReport("per_root", 1, d, True)


def verify_product(
    m: int,
    d: int,
    *,
    include_exp_c1: bool = True,
    exponent_per_root: int = 1,
    root_scale: int = 2,
) -> VerificationReport:
    """``Td / ch(wedge T)`` against its rescaled-Todd form, to degree ``d``.

    The normalizer is ``2^{-m}`` with ``m`` the number of roots of ``T_F``.
    """
    if m < 1 or d < 0:
        raise ValueError("need m >= 1 and d >= 0")
    lhs = todd_class(m, d) * ch_exterior(m, d).reciprocal()
    rhs = _rhs(
        m, d,
        include_exp_c1=include_exp_c1,
        exponent_per_root=exponent_per_root,
        root_scale=root_scale,
    )
    return _report("product", lhs, rhs)


def verify_top_degree(
    m: int,
    *,
    include_exp_c1: bool = True,
    exponent_per_root: int = 1,
    root_scale: int = 2,
) -> VerificationReport:
    """Degree-m part of the rescaled-Todd form equals that of ``Td e^{-c_1/2}``."""
    if m < 1:
        raise ValueError("need m >= 1")
    rhs = _rhs(
        m, m,
        include_exp_c1=include_exp_c1,
        exponent_per_root=exponent_per_root,
        root_scale=root_scale,
    ).homogeneous_part(m)
    target = ahat_integrand(m, m).homogeneous_part(m)
    return _report("top_degree", rhs, target)
