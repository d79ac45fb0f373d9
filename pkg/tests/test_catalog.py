import pytest

from fixedlocus import catalog
from fixedlocus.catalog import Family
from fixedlocus.errors import ParameterRangeError, TraceError
from fixedlocus.fourfold import invariants_from_trace


@pytest.mark.parametrize("e, t", [(-18, -17), (0, 1), (20, 21)])
def test_hilbert_square(e, t):
    entry = catalog.hilbert_square(e)
    assert entry.t == t
    assert all(c.k2 is None and c.chi is None for c in entry.components)


def test_hilbert_square_inadmissible():
    with pytest.raises(TraceError):
        catalog.hilbert_square(-21)


@pytest.mark.parametrize("s, t", [(0, -17), (10, 3)])
def test_sextic(s, t):
    assert catalog.sextic_double_plane(s).t == t


@pytest.mark.parametrize("r, t", [(1, 3), (10, 21)])
def test_nikulin(r, t):
    assert catalog.nikulin_curves(r).t == t


@pytest.mark.parametrize("bad", [(catalog.sextic_double_plane, 11), (catalog.sextic_double_plane, -1),
                                 (catalog.nikulin_curves, 0), (catalog.nikulin_curves, 11)])
def test_parameter_ranges(bad):
    fn, value = bad
    with pytest.raises(ParameterRangeError):
        fn(value)


def test_epw_and_bitangent():
    for entry in (catalog.epw_double_sextic(), catalog.bitangent_surface()):
        s = entry.invariants.surface
        assert entry.t == -19
        assert (s.k2, s.chi, s.euler) == (360, 46, 192)
        assert entry.invariants.moduli_dim == 20
        assert len(entry.components) == 1


def test_cubic_fourfold_fano():
    entry = catalog.cubic_fourfold_fano()
    s = entry.invariants.surface
    assert entry.t == -7 and (s.k2, s.chi) == (48, 7)
    comps = {c.label: (c.k2, c.chi) for c in entry.components}
    assert comps == {"cubic_surface_S": (3, 1), "fano_surface_T": (45, 6)}
    assert sum(c.k2 for c in entry.components) == 48
    assert sum(c.chi for c in entry.components) == 7


def test_entries_match_fourfold():
    entries = catalog.all_entries() + catalog.family_entries(Family.HILBERT_SQUARE)
    for entry in entries:
        assert entry.invariants == invariants_from_trace(entry.t)


def test_entry_counts():
    assert len(catalog.all_entries()) == 24
    assert len(catalog.family_entries("hilbert_square")) == 20


def test_coverage():
    full = catalog.trace_coverage()
    assert full.complete and full.realized == tuple(range(-19, 22, 2))
    assert catalog.trace_coverage(epw=False).missing == (-19,)
    assert catalog.trace_coverage(nikulin=False).missing == (5, 7, 9, 11, 13, 15, 17, 19, 21)
