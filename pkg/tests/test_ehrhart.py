"""Lattice-point counts, delta-vectors, and the geometric property checks.

Oracles: dilate counts are compared against a pure-Python box scan, and the
non-normality fixture compares the engine verdict with a sumset computed
independently in the test.
"""

import itertools
from types import SimpleNamespace

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

import twinpoly.ehrhart
from strategies import poset_pairs
from twinpoly.catalog import chain_antichain_pair
from twinpoly.ehrhart import (
    DeltaVector,
    EhrhartCounts,
    EhrhartError,
    check_fano,
    check_normal,
    check_reflexive,
    count_dilate,
    delta_vector,
    ehrhart_counts,
    ehrhart_from_delta,
    is_symmetric_unimodal,
)
from twinpoly.geometry import HalfSpace, build_omega, hull_halfspaces
from twinpoly.posets import antichain, chain


# -- oracles -----------------------------------------------------------------


def brute_count(hrep, t):
    """Box scan in pure Python, straight from the definition."""
    d = len(hrep[0].normal)
    total = 0
    for pt in itertools.product(range(-t, t + 1), repeat=d):
        if all(
            sum(a * x for a, x in zip(h.normal, pt)) <= t * h.offset
            for h in hrep
        ):
            total += 1
    return total


SEGMENT = (
    HalfSpace(normal=(1,), offset=1),
    HalfSpace(normal=(-1,), offset=1),
)


def pair_hrep(d):
    p, q = chain_antichain_pair(d)
    cfg = build_omega(p, q)
    return cfg, tuple(hull_halfspaces(cfg.nonzero_points()))


# -- counting -------------------------------------------------------------------


def test_count_segment():
    for t in range(5):
        assert count_dilate(SEGMENT, t) == 2 * t + 1


def test_count_rejects_negative_dilate():
    with pytest.raises(EhrhartError, match="nonnegative"):
        count_dilate(SEGMENT, -1)


def test_count_zero_dilate_needs_origin():
    shifted = (
        HalfSpace(normal=(1,), offset=2),
        HalfSpace(normal=(-1,), offset=-1),
    )
    assert count_dilate(shifted, 0) == 0
    assert count_dilate(SEGMENT, 0) == 1


def test_count_first_dilate_is_omega_size():
    cfg, hrep = pair_hrep(2)
    assert count_dilate(hrep, 1) == len(cfg.points) == 6


@settings(max_examples=25)
@given(poset_pairs(max_d=3), st.integers(min_value=0, max_value=3))
def test_count_matches_brute_force(pair, t):
    cfg = build_omega(*pair)
    hrep = tuple(hull_halfspaces(cfg.nonzero_points()))
    assert count_dilate(hrep, t) == brute_count(hrep, t)


@given(poset_pairs(max_d=4))
def test_first_dilate_counts_exactly_the_configuration(pair):
    """The twinned configuration is all of the polytope's lattice points."""
    cfg = build_omega(*pair)
    hrep = tuple(hull_halfspaces(cfg.nonzero_points()))
    assert count_dilate(hrep, 1) == len(cfg.points)


def test_count_chunked_path_agrees(monkeypatch):
    cfg, hrep = pair_hrep(3)
    want = count_dilate(hrep, 2)
    monkeypatch.setattr(twinpoly.ehrhart, "_CHUNK_TARGET", 4)
    assert count_dilate(hrep, 2) == want


def test_count_overflow_guard_trips():
    with pytest.raises(AssertionError):
        count_dilate(SEGMENT, 1 << 41)


# -- count sequences ---------------------------------------------------------------


def test_counts_wrapper():
    counts = ehrhart_counts(SEGMENT, 3)
    assert counts.values == (1, 3, 5, 7)
    assert counts[2] == 5
    assert len(counts) == 4


def test_counts_validation():
    with pytest.raises(EhrhartError, match="L\\(0\\)"):
        EhrhartCounts(values=(2, 3))
    with pytest.raises(EhrhartError, match="nondecreasing"):
        EhrhartCounts(values=(1, 3, 2))
    with pytest.raises(EhrhartError, match="L\\(0\\)"):
        EhrhartCounts(values=())


# -- delta-vectors --------------------------------------------------------------------


def test_delta_segment():
    dv = delta_vector(ehrhart_counts(SEGMENT, 1), 1)
    assert dv.entries == (1, 1)
    assert dv.normalized_volume == 2


def test_delta_chain_antichain_small():
    for d, expected in [(2, (1, 3, 1)), (3, (1, 7, 7, 1))]:
        _, hrep = pair_hrep(d)
        dv = delta_vector(ehrhart_counts(hrep, d), d)
        assert dv.entries == expected


def test_delta_needs_enough_counts():
    with pytest.raises(EhrhartError, match="counts up to"):
        delta_vector(ehrhart_counts(SEGMENT, 1), 2)


def test_delta_rejects_inconsistent_counts():
    # constant sequence is no Ehrhart polynomial of a 2-polytope
    with pytest.raises(EhrhartError, match="negative delta entry"):
        delta_vector(EhrhartCounts(values=(1, 1, 1)), 2)


def test_delta_vector_validation():
    with pytest.raises(EhrhartError, match="start with 1"):
        DeltaVector(entries=(2, 1))
    with pytest.raises(EhrhartError, match="negative"):
        DeltaVector(entries=(1, -1))
    dv = DeltaVector(entries=(1, 4, 1))
    assert list(dv) == [1, 4, 1]
    assert len(dv) == 3


@settings(max_examples=20)
@given(poset_pairs(max_d=3))
def test_delta_round_trip(pair):
    """L(t) is recovered from the delta-vector at every sampled t."""
    cfg = build_omega(*pair)
    d = cfg.d
    hrep = tuple(hull_halfspaces(cfg.nonzero_points()))
    counts = ehrhart_counts(hrep, d + 3)
    dv = delta_vector(counts, d)
    for t in range(d + 4):
        assert ehrhart_from_delta(dv, d, t) == counts[t]


def test_is_symmetric_unimodal_cases():
    assert is_symmetric_unimodal(DeltaVector(entries=(1, 3, 1))) == (True, True)
    assert is_symmetric_unimodal(DeltaVector(entries=(1, 2, 2, 1))) == (True, True)
    assert is_symmetric_unimodal(DeltaVector(entries=(1, 0, 2))) == (False, False)
    assert is_symmetric_unimodal(DeltaVector(entries=(1, 4, 2, 4, 1))) == (
        True,
        False,
    )
    assert is_symmetric_unimodal(DeltaVector(entries=(1,))) == (True, True)


# -- property checks ---------------------------------------------------------------------


def test_reflexive_segment_true_shifted_false():
    assert check_reflexive(SEGMENT)
    shifted = (
        HalfSpace(normal=(1,), offset=2),
        HalfSpace(normal=(-1,), offset=1),
    )
    assert not check_reflexive(shifted)


def test_reflexive_division_form_for_raw_rows():
    assert check_reflexive([SimpleNamespace(normal=(2, 4), offset=2)])
    assert not check_reflexive([SimpleNamespace(normal=(3, 2), offset=2)])
    assert not check_reflexive([SimpleNamespace(normal=(1, 0), offset=0)])


def test_reflexive_chain_antichain():
    for d in (2, 3, 4):
        _, hrep = pair_hrep(d)
        assert check_reflexive(hrep)


def test_fano_segment_and_scaled_segment():
    assert check_fano(SEGMENT, 1)
    doubled = (
        HalfSpace(normal=(1,), offset=2),
        HalfSpace(normal=(-1,), offset=2),
    )
    assert not check_fano(doubled, 1)


def test_fano_needs_origin_interior():
    # [0, 2] has one interior lattice point, but it is not the origin
    halfopen = (
        HalfSpace(normal=(1,), offset=2),
        HalfSpace(normal=(-1,), offset=0),
    )
    assert not check_fano(halfopen, 1)


def test_fano_chain_antichain():
    for d in (2, 3):
        _, hrep = pair_hrep(d)
        assert check_fano(hrep, d)


def test_normal_chain_antichain():
    for d in (1, 2, 3):
        cfg, hrep = pair_hrep(d)
        assert check_normal(cfg, hrep, d + 1)


def test_normal_rejects_bad_t_max():
    cfg, hrep = pair_hrep(1)
    with pytest.raises(EhrhartError, match="t_max"):
        check_normal(cfg, hrep, 0)


def test_normal_asserts_containment():
    cfg, hrep = pair_hrep(1)
    outside = SimpleNamespace(points=((3,),))
    with pytest.raises(AssertionError):
        check_normal(outside, hrep, 2)


def test_normal_detects_the_classic_gap():
    """Simplex with vertices 0, e1, e2, (1,1,2), translated to fit the
    [-t,t]^d counting box: its second dilate has a lattice point that is
    not a sum of two lattice points.  The engine verdict must match a
    sumset computed here from scratch."""
    verts = ((0, 0, -1), (1, 0, -1), (0, 1, -1), (1, 1, 1))
    hrep = tuple(hull_halfspaces(verts))
    assert count_dilate(hrep, 1) == 4  # vertices are the only lattice points
    sums = {
        tuple(a + b for a, b in zip(u, v))
        for u, v in itertools.product(verts, repeat=2)
    }
    gap = count_dilate(hrep, 2) - len(sums)
    assert gap > 0
    cfg = SimpleNamespace(points=verts)
    assert check_normal(cfg, hrep, 2) is False
