import pytest

from fixedlocus.errors import TraceParityError, TraceRangeError
from fixedlocus.fourfold import (
    admissible_traces,
    corollary_rows,
    corollary_table,
    invariants_from_trace,
)
from fixedlocus.lefschetz import euler_fixed

COROLLARY = [(0, 1), (8, 2), (24, 4), (48, 7), (80, 11), (120, 16),
             (168, 22), (224, 29), (288, 37), (360, 46), (440, 56)]


@pytest.mark.parametrize(
    "t, k2, chi, euler, moduli",
    [(-19, 360, 46, 192, 20), (1, 0, 1, 12, 10), (-7, 48, 7, 36, 14)],
)
def test_invariants_from_trace(t, k2, chi, euler, moduli):
    inv = invariants_from_trace(t)
    s = inv.surface
    assert (s.k2, s.chi, s.euler, inv.moduli_dim) == (k2, chi, euler, moduli)


def test_errors_are_distinct():
    with pytest.raises(TraceParityError):
        invariants_from_trace(2)
    with pytest.raises(TraceRangeError):
        invariants_from_trace(23)
    with pytest.raises(TraceRangeError):
        invariants_from_trace(-21)


def test_admissible():
    ts = admissible_traces()
    assert len(ts) == 21 and ts[0] == -19 and ts[-1] == 21
    assert list(ts) == sorted(ts)


@pytest.mark.parametrize("t", range(-19, 22, 2))
def test_relations(t):
    inv = invariants_from_trace(t)
    s = inv.surface
    assert s.k2 - 8 * s.chi == -8
    assert s.k2 - 2 * s.euler == -24
    assert s.signature == -8 and s.ahat == 1
    assert s.euler == euler_fixed(t)
    assert 0 <= inv.moduli_dim <= 20


def test_corollary():
    assert corollary_table() == COROLLARY
    fibers = {(r.k2, r.chi): r.traces for r in corollary_rows()}
    assert fibers[(440, 56)] == (21,)
    for pair, ts in fibers.items():
        if pair != (440, 56):
            assert sorted(ts) == sorted({ts[0], -ts[0]}) and len(ts) == 2


def test_maximal_moduli_unique():
    dims = {t: invariants_from_trace(t).moduli_dim for t in admissible_traces()}
    assert max(dims.values()) == 20
    assert [t for t, d in dims.items() if d == 20] == [-19]
