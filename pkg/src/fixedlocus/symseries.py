"""Truncated symmetric power series in formal Chern roots.

A :class:`SymSeries` in ``m`` roots stores one coefficient per monomial
symmetric function ``m_lambda``, keyed by the weakly decreasing exponent
vector ``lambda`` (padded with zeros to length ``m``).  All coefficients are
:class:`fractions.Fraction`; nothing here ever touches floating point.

Univariate series (used for per-root factors such as ``x/(1-e^{-x})``) are
plain lists of Fractions, index = degree.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import InsufficientDegree, NotAUnit, RootCountMismatch

Key = tuple[int, ...]
Rational = Union[int, Fraction]

__all__ = [
    "SymSeries",
    "ChernPolynomial",
    "per_root_product",
    "mul",
    "add",
    "scalar_mul",
    "reciprocal",
    "exp_c1_multiple",
    "scale_roots",
    "homogeneous_part",
    "to_chern_basis",
    "evaluate_surface",
    "constant",
    "elementary",
    "exp_series",
    "mul_series",
    "inverse_series",
    "scale_series",
]


# ---------------------------------------------------------------------------
# univariate helpers


def exp_series(c: Rational, d: int) -> list[Fraction]:
    """Coefficients of ``e^{c x}`` up to degree ``d``."""
    c = Fraction(c)
    return [c**k / math.factorial(k) for k in range(d + 1)]


def mul_series(a: Sequence[Fraction], b: Sequence[Fraction], d: int) -> list[Fraction]:
    out = [Fraction(0)] * (d + 1)
    for i, x in enumerate(a[: d + 1]):
        if x:
            for j, y in enumerate(b[: d + 1 - i]):
                out[i + j] += x * y
    return out


def inverse_series(a: Sequence[Fraction], d: int) -> list[Fraction]:
    if len(a) < d + 1:
        raise InsufficientDegree(f"series known to degree {len(a) - 1}, need {d}")
    if not a[0]:
        raise NotAUnit("univariate series with zero constant term has no inverse")
    inv0 = 1 / Fraction(a[0])
    out = [inv0]
    for n in range(1, d + 1):
        s = sum((a[j] * out[n - j] for j in range(1, n + 1)), Fraction(0))
        out.append(-inv0 * s)
    return out


def scale_series(a: Sequence[Fraction], c: Rational) -> list[Fraction]:
    """Substitute ``x -> c x``."""
    c = Fraction(c)
    return [Fraction(x) * c**k for k, x in enumerate(a)]


# ---------------------------------------------------------------------------
# combinatorics of monomial symmetric functions


@lru_cache(maxsize=None)
def _partitions(m: int, d: int) -> tuple[Key, ...]:
    """All weakly decreasing length-m vectors with entries >= 0 and sum <= d."""

    def rec(slots: int, cap: int, budget: int) -> Iterable[Key]:
        if slots == 0:
            yield ()
            return
        for first in range(min(cap, budget), -1, -1):
            for rest in rec(slots - 1, first, budget - first):
                yield (first,) + rest

    return tuple(sorted(rec(m, d, d), key=lambda k: (sum(k), k)))


@lru_cache(maxsize=None)
def _orbit(key: Key) -> tuple[Key, ...]:
    return tuple(sorted(set(itertools.permutations(key))))


@lru_cache(maxsize=None)
def _orbit_size(key: Key) -> int:
    size = math.factorial(len(key))
    for mult in Counter(key).values():
        size //= math.factorial(mult)
    return size


@lru_cache(maxsize=None)
def _monomial_product(lam: Key, mu: Key) -> tuple[tuple[Key, int], ...]:
    # Fix mu as the representative of its orbit and count how the orbit of lam
    # lands; every other element of O(mu) sees the same distribution.
    counts: Counter[Key] = Counter()
    for alpha in _orbit(lam):
        nu = tuple(sorted((x + y for x, y in zip(alpha, mu)), reverse=True))
        counts[nu] += 1
    size_mu = _orbit_size(mu)
    return tuple((nu, c * size_mu // _orbit_size(nu)) for nu, c in counts.items())


def _mul_terms(
    a: Mapping[Key, Fraction], b: Mapping[Key, Fraction], cap: int
) -> dict[Key, Fraction]:
    out: dict[Key, Fraction] = defaultdict(Fraction)
    for lam, x in a.items():
        dl = sum(lam)
        for mu, y in b.items():
            if dl + sum(mu) > cap:
                continue
            pair = (lam, mu) if lam <= mu else (mu, lam)
            xy = x * y
            for nu, c in _monomial_product(*pair):
                out[nu] += c * xy
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _elementary_monomial(exps: Key) -> MappingProxyType:
    """Root expansion of prod_k e_k^{exps[k-1]} (homogeneous)."""
    m = len(exps)
    degree = sum((k + 1) * a for k, a in enumerate(exps))
    terms: dict[Key, Fraction] = {(0,) * m: Fraction(1)}
    for k, power in enumerate(exps, start=1):
        ek = {(1,) * k + (0,) * (m - k): Fraction(1)}
        for _ in range(power):
            terms = _mul_terms(terms, ek, degree)
    return MappingProxyType(terms)


def _canonical(key: Iterable[int]) -> Key:
    return tuple(sorted(key, reverse=True))


# ---------------------------------------------------------------------------
# the series type


class SymSeries:
    """Symmetric power series in ``num_roots`` roots, truncated above ``trunc_degree``.

    Instances are immutable.  Supports ``+``, ``-``, ``*`` (with series or
    rationals) and equality.
    """

    __slots__ = ("num_roots", "trunc_degree", "_terms")

    def __init__(
        self,
        num_roots: int,
        trunc_degree: int,
        terms: Mapping[Key, Rational] | Iterable[tuple[Key, Rational]] = (),
    ):
        if num_roots < 1:
            raise ValueError("num_roots must be positive")
        if trunc_degree < 0:
            raise ValueError("trunc_degree must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = defaultdict(Fraction)
        for key, coeff in items:
            key = _canonical(key)
            if len(key) != num_roots or any(e < 0 for e in key):
                raise ValueError(f"bad exponent vector {key} for {num_roots} roots")
            if sum(key) <= trunc_degree:
                acc[key] += Fraction(coeff)
        object.__setattr__(self, "num_roots", num_roots)
        object.__setattr__(self, "trunc_degree", trunc_degree)
        object.__setattr__(
            self, "_terms", MappingProxyType({k: v for k, v in acc.items() if v})
        )

    def __setattr__(self, name, value):
        raise AttributeError("SymSeries is immutable")

    @classmethod
    def _raw(cls, num_roots: int, trunc_degree: int, terms: dict[Key, Fraction]) -> "SymSeries":
        # trusted constructor: keys canonical, degrees capped, zeros dropped
        obj = object.__new__(cls)
        object.__setattr__(obj, "num_roots", num_roots)
        object.__setattr__(obj, "trunc_degree", trunc_degree)
        object.__setattr__(obj, "_terms", MappingProxyType(terms))
        return obj

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def coefficient(self, key: Iterable[int]) -> Fraction:
        return self._terms.get(_canonical(key), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.num_roots)

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self._terms})

    def is_zero(self) -> bool:
        return not self._terms

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "SymSeries") -> None:
        if self.num_roots != other.num_roots:
            raise RootCountMismatch(
                f"cannot combine series in {self.num_roots} and {other.num_roots} roots"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.num_roots, self.trunc_degree)
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check(other)
        d = min(self.trunc_degree, other.trunc_degree)
        acc: dict[Key, Fraction] = defaultdict(Fraction)
        for src in (self._terms, other._terms):
            for k, v in src.items():
                if sum(k) <= d:
                    acc[k] += v
        return SymSeries._raw(self.num_roots, d, {k: v for k, v in acc.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return SymSeries._raw(
            self.num_roots, self.trunc_degree, {k: -v for k, v in self._terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.num_roots, self.trunc_degree)
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return SymSeries._raw(self.num_roots, self.trunc_degree, {})
            return SymSeries._raw(
                self.num_roots, self.trunc_degree, {k: c * v for k, v in self._terms.items()}
            )
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check(other)
        d = min(self.trunc_degree, other.trunc_degree)
        return SymSeries._raw(self.num_roots, d, _mul_terms(self._terms, other._terms, d))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return (
            self.num_roots == other.num_roots
            and self.trunc_degree == other.trunc_degree
            and dict(self._terms) == dict(other._terms)
        )

    def __hash__(self):
        return hash((self.num_roots, self.trunc_degree, frozenset(self._terms.items())))

    # -- graded structure ---------------------------------------------------

    def homogeneous_part(self, k: int) -> "SymSeries":
        if not 0 <= k <= self.trunc_degree:
            raise ValueError(f"degree {k} outside 0..{self.trunc_degree}")
        return SymSeries._raw(
            self.num_roots,
            self.trunc_degree,
            {key: v for key, v in self._terms.items() if sum(key) == k},
        )

    def truncate(self, d: int) -> "SymSeries":
        d = min(d, self.trunc_degree)
        return SymSeries._raw(
            self.num_roots, d, {k: v for k, v in self._terms.items() if sum(k) <= d}
        )

    def scale_roots(self, c: Rational) -> "SymSeries":
        c = Fraction(c)
        out = {k: v * c ** sum(k) for k, v in self._terms.items()}
        return SymSeries._raw(self.num_roots, self.trunc_degree, {k: v for k, v in out.items() if v})

    def reciprocal(self) -> "SymSeries":
        """Inverse up to ``trunc_degree``, built degree by degree."""
        a0 = self.constant_term
        if not a0:
            raise NotAUnit("series with zero constant term is not invertible")
        m, d = self.num_roots, self.trunc_degree
        graded: dict[int, dict[Key, Fraction]] = defaultdict(dict)
        for k, v in self._terms.items():
            graded[sum(k)][k] = v
        inv0 = 1 / a0
        parts: list[dict[Key, Fraction]] = [{(0,) * m: inv0}]
        for n in range(1, d + 1):
            acc: dict[Key, Fraction] = defaultdict(Fraction)
            for j in range(1, n + 1):
                if not graded.get(j) or not parts[n - j]:
                    continue
                for k, v in _mul_terms(graded[j], parts[n - j], n).items():
                    acc[k] += v
            parts.append({k: -inv0 * v for k, v in acc.items() if v})
        out: dict[Key, Fraction] = {}
        for p in parts:
            out.update(p)
        return SymSeries._raw(m, d, out)

    def to_chern_basis(self) -> "ChernPolynomial":
        m = self.num_roots
        remaining: dict[Key, Fraction] = dict(self._terms)
        result: dict[Key, Fraction] = {}
        while remaining:
            lam = max(remaining, key=lambda k: (sum(k), k))
            c = remaining[lam]
            exps = tuple(lam[i] - (lam[i + 1] if i + 1 < m else 0) for i in range(m))
            result[exps] = c
            for key, v in _elementary_monomial(exps).items():
                new = remaining.get(key, Fraction(0)) - c * v
                if new:
                    remaining[key] = new
                else:
                    remaining.pop(key, None)
        return ChernPolynomial(m, result)

    def __repr__(self):
        return (
            f"SymSeries(num_roots={self.num_roots}, trunc_degree={self.trunc_degree}, "
            f"chern={self.to_chern_basis()})"
        )


# ---------------------------------------------------------------------------
# Chern-class basis


def _format_coeff_monomial(coeff: Fraction, mono: str) -> str:
    if not mono:
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    return f"{coeff}*{mono}"


@dataclass(frozen=True)
class ChernPolynomial:
    """Polynomial in the elementary symmetric classes ``e_1..e_m``.

    Keys are exponent vectors ``(a_1, ..., a_m)`` for ``e_1^a_1 ... e_m^a_m``.
    """

    num_roots: int
    terms: Mapping[Key, Fraction]

    def __post_init__(self):
        clean = {}
        for key, v in dict(self.terms).items():
            key = tuple(key)
            if len(key) != self.num_roots:
                raise ValueError(f"monomial {key} does not have {self.num_roots} exponents")
            if v:
                clean[key] = Fraction(v)
        object.__setattr__(self, "terms", MappingProxyType(clean))

    @staticmethod
    def weighted_degree(key: Key) -> int:
        return sum(k * a for k, a in enumerate(key, start=1))

    def coefficient(self, key: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        """Terms by weighted degree, then lexicographically descending in e_1, e_2, ..."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (self.weighted_degree(kv[0]), tuple(-a for a in kv[0])),
        )

    @staticmethod
    def monomial_str(key: Key) -> str:
        parts = []
        for k, a in enumerate(key, start=1):
            if a == 1:
                parts.append(f"e{k}")
            elif a > 1:
                parts.append(f"e{k}^{a}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for key, v in self.sorted_terms():
            piece = _format_coeff_monomial(abs(v), self.monomial_str(key))
            if not out:
                out = piece if v > 0 else "-" + piece
            else:
                out += (" + " if v > 0 else " - ") + piece
        return out

    def to_sym_series(self, trunc_degree: int | None = None) -> SymSeries:
        if trunc_degree is None:
            trunc_degree = max((self.weighted_degree(k) for k in self.terms), default=0)
        acc: dict[Key, Fraction] = defaultdict(Fraction)
        for exps, c in self.terms.items():
            if self.weighted_degree(exps) > trunc_degree:
                continue
            for key, v in _elementary_monomial(exps).items():
                acc[key] += c * v
        return SymSeries(self.num_roots, trunc_degree, acc)


# ---------------------------------------------------------------------------
# module-level operations


def constant(c: Rational, m: int, d: int) -> SymSeries:
    return SymSeries(m, d, {(0,) * m: c})


def elementary(k: int, m: int, d: int) -> SymSeries:
    """The k-th elementary symmetric polynomial e_k in m roots."""
    if not 0 <= k <= m:
        raise ValueError(f"e_{k} undefined for {m} roots")
    return SymSeries(m, d, {(1,) * k + (0,) * (m - k): 1})


def per_root_product(f: Sequence[Rational], m: int, d: int) -> SymSeries:
    """``prod_i f(x_i)`` for a univariate series ``f`` given to degree >= d."""
    if m < 1:
        raise ValueError("need at least one root")
    if len(f) < d + 1:
        raise InsufficientDegree(f"factor known to degree {len(f) - 1}, need {d}")
    coeffs = [Fraction(c) for c in f[: d + 1]]
    terms = {}
    for lam in _partitions(m, d):
        v = Fraction(1)
        for e in lam:
            v *= coeffs[e]
            if not v:
                break
        if v:
            terms[lam] = v
    return SymSeries._raw(m, d, terms)


def mul(a: SymSeries, b: SymSeries) -> SymSeries:
    return a * b


def add(a: SymSeries, b: SymSeries) -> SymSeries:
    return a + b


def scalar_mul(c: Rational, a: SymSeries) -> SymSeries:
    return a * Fraction(c)


def reciprocal(a: SymSeries) -> SymSeries:
    return a.reciprocal()


def exp_c1_multiple(c: Rational, m: int, d: int) -> SymSeries:
    """``e^{c e_1}`` as the product of ``e^{c x_i}``."""
    return per_root_product(exp_series(c, d), m, d)


def scale_roots(a: SymSeries, c: Rational) -> SymSeries:
    return a.scale_roots(c)


def homogeneous_part(a: SymSeries, k: int) -> SymSeries:
    return a.homogeneous_part(k)


def to_chern_basis(a: SymSeries) -> ChernPolynomial:
    return a.to_chern_basis()


def evaluate_surface(a: SymSeries, k2: Rational, c2: Rational) -> Fraction:
    """Integrate over a surface: e_1^2 -> K^2 and e_2 -> e."""
    if a.num_roots != 2:
        raise RootCountMismatch(f"surface evaluation needs 2 roots, got {a.num_roots}")
    if a.trunc_degree < 2:
        raise InsufficientDegree("surface evaluation needs the degree-2 part")
    top = a.homogeneous_part(2).to_chern_basis()
    return top.coefficient((2, 0)) * k2 + top.coefficient((0, 1)) * c2
