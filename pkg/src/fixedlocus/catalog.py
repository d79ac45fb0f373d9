"""Known constructions of antisymplectic involutions, with their traces.

Each constructor returns a :class:`CatalogEntry` whose invariants come from
:func:`fixedlocus.fourfold.invariants_from_trace`.  Component splits are
recorded only where the values are known; unknown component invariants are
left as ``None`` rather than derived.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ParameterRangeError
from .fourfold import FourfoldFixedInvariants, admissible_traces, invariants_from_trace


class Family(str, enum.Enum):
    HILBERT_SQUARE = "hilbert_square"
    SEXTIC_DOUBLE_PLANE = "sextic_double_plane"
    NIKULIN_CURVES = "nikulin_curves"
    EPW_DOUBLE_SEXTIC = "epw_double_sextic"
    BITANGENT_SURFACE = "bitangent_surface"
    CUBIC_FOURFOLD_FANO = "cubic_fourfold_fano"


@dataclass(frozen=True)
class Component:
    label: str
    k2: int | None = None
    chi: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    family: Family
    parameters: Mapping[str, int]
    t: int
    invariants: FourfoldFixedInvariants
    components: tuple[Component, ...] = field(default=())

    def __post_init__(self):
        if self.invariants.t != self.t:
            raise ValueError("entry trace and invariants trace differ")
        known = [c for c in self.components if c.k2 is not None and c.chi is not None]
        if known and len(known) == len(self.components):
            s = self.invariants.surface
            if sum(c.k2 for c in known) != s.k2 or sum(c.chi for c in known) != s.chi:
                raise ValueError(f"component invariants of {self.family.value} do not sum to totals")


# labels for the two components Gamma^(2) and S/sigma of the fixed surface of sigma^[2]
_HILBERT_COMPONENTS = (Component("sym2_fixed_curve"), Component("k3_quotient"))


def _entry(family, parameters, t, components=()) -> CatalogEntry:
    return CatalogEntry(family, dict(parameters), t, invariants_from_trace(t), tuple(components))


def hilbert_square(euler_gamma: int) -> CatalogEntry:
    """Involution on S^[2] induced from a K3 involution fixing a curve with Euler number ``euler_gamma``."""
    return _entry(
        Family.HILBERT_SQUARE, {"euler_gamma": euler_gamma}, euler_gamma + 1, _HILBERT_COMPONENTS
    )


def sextic_double_plane(s: int) -> CatalogEntry:
    """Double plane branched along a sextic with ``s`` ordinary nodes, 0 <= s <= 10."""
    if not 0 <= s <= 10:
        raise ParameterRangeError(f"node count s = {s} outside 0..10")
    base = hilbert_square(-18 + 2 * s)
    return _entry(
        Family.SEXTIC_DOUBLE_PLANE, {"s": s}, base.t, base.components
    )


def nikulin_curves(r: int) -> CatalogEntry:
    """K3 involution fixing ``r`` disjoint rational curves, 1 <= r <= 10."""
    if not 1 <= r <= 10:
        raise ParameterRangeError(f"rational curve count r = {r} outside 1..10")
    base = hilbert_square(2 * r)
    return _entry(Family.NIKULIN_CURVES, {"r": r}, base.t, base.components)


def epw_double_sextic() -> CatalogEntry:
    return _entry(Family.EPW_DOUBLE_SEXTIC, {}, -19, [Component("F", 360, 46)])


def bitangent_surface() -> CatalogEntry:
    """Specialization of the EPW case to S^[2] of a quartic with no line."""
    return _entry(Family.BITANGENT_SURFACE, {}, -19, [Component("B", 360, 46)])


def cubic_fourfold_fano() -> CatalogEntry:
    """Fano variety of lines on a cubic invariant under one sign change."""
    return _entry(
        Family.CUBIC_FOURFOLD_FANO,
        {},
        -7,
        [Component("cubic_surface_S", 3, 1), Component("fano_surface_T", 45, 6)],
    )


def family_entries(family: Family | str) -> list[CatalogEntry]:
    """Full parameter sweep of one family.

    ``hilbert_square`` is swept over the curve Euler numbers realized by the
    sextic and Nikulin constructions, -18, -16, ..., 20.
    """
    family = Family(family)
    if family is Family.HILBERT_SQUARE:
        return [hilbert_square(e) for e in range(-18, 21, 2)]
    if family is Family.SEXTIC_DOUBLE_PLANE:
        return [sextic_double_plane(s) for s in range(11)]
    if family is Family.NIKULIN_CURVES:
        return [nikulin_curves(r) for r in range(1, 11)]
    if family is Family.EPW_DOUBLE_SEXTIC:
        return [epw_double_sextic()]
    if family is Family.BITANGENT_SURFACE:
        return [bitangent_surface()]
    return [cubic_fourfold_fano()]


def all_entries() -> list[CatalogEntry]:
    """Every concrete construction: 11 sextic + 10 Nikulin + EPW + bitangent + cubic = 24.

    The generic Hilbert-square family is omitted since the sextic and Nikulin
    entries are its concrete instances.
    """
    out: list[CatalogEntry] = []
    for fam in (
        Family.SEXTIC_DOUBLE_PLANE,
        Family.NIKULIN_CURVES,
        Family.EPW_DOUBLE_SEXTIC,
        Family.BITANGENT_SURFACE,
        Family.CUBIC_FOURFOLD_FANO,
    ):
        out.extend(family_entries(fam))
    return out


@dataclass(frozen=True)
class CoverageReport:
    realized: tuple[int, ...]
    missing: tuple[int, ...]
    surplus: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.missing and not self.surplus


def trace_coverage(*, sextic: bool = True, nikulin: bool = True, epw: bool = True) -> CoverageReport:
    """Compare the traces realized by the constructions with the admissible set."""
    realized: set[int] = set()
    if sextic:
        realized |= {e.t for e in family_entries(Family.SEXTIC_DOUBLE_PLANE)}
    if nikulin:
        realized |= {e.t for e in family_entries(Family.NIKULIN_CURVES)}
    if epw:
        realized.add(epw_double_sextic().t)
    admissible = set(admissible_traces())
    return CoverageReport(
        realized=tuple(sorted(realized)),
        missing=tuple(sorted(admissible - realized)),
        surplus=tuple(sorted(realized - admissible)),
    )
