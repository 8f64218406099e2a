"""Exact signatures, ratio series, and convergence diagnostics."""

import math
from fractions import Fraction

import pytest

from symsig import (
    AbelianGroup,
    Character,
    CyclicType,
    DiagonalRepresentation,
    RatioEntry,
    RatioSeries,
    convergence_report,
    exact_signature,
    general_signature,
    ratio_series,
    syzygy_weights,
)


def test_exact_signature_frozen_examples():
    assert exact_signature(CyclicType(5, 2), 0) == Fraction(1, 5)
    assert exact_signature(CyclicType(2, 1), 0) == Fraction(1, 2)
    assert exact_signature(CyclicType(12, 5), 0) == Fraction(1, 12)


def test_exact_signature_chi_independent():
    for n in range(2, 20):
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                t = CyclicType(n, a)
                values = {exact_signature(t, chi) for chi in range(n)}
                assert values == {Fraction(1, n)}


def test_exact_signature_rejects_bad_chi():
    with pytest.raises(ValueError):
        exact_signature(CyclicType(5, 2), 5)
    with pytest.raises(ValueError):
        exact_signature(CyclicType(5, 2), -1)


def test_ratio_series_small_case():
    s = ratio_series(CyclicType(2, 1), 0, 4)
    last = s.entries[-1]
    assert (last.numerator, last.denominator) == (9, 15)
    assert last.ratio == Fraction(3, 5)
    assert s.entries[0].ratio == Fraction(1, 1)
    assert s.target == Fraction(1, 2)


def test_ratio_series_invariants():
    s = ratio_series(CyclicType(7, 3), 0, 40)
    dens = [e.denominator for e in s.entries]
    assert dens == sorted(dens) and len(set(dens)) == len(dens)
    for e in s.entries:
        assert 0 <= e.numerator <= e.denominator
        assert Fraction(0) <= e.ratio <= Fraction(1)


def test_ratio_series_grid_selection():
    s = ratio_series(CyclicType(5, 2), 0, 100, grid=[10, 50, 100])
    assert [e.bound for e in s.entries] == [10, 50, 100]
    with pytest.raises(ValueError):
        ratio_series(CyclicType(5, 2), 0, 10, grid=[11])
    with pytest.raises(ValueError):
        ratio_series(CyclicType(5, 2), 0, 10, grid=[])


def test_ratio_series_golden_value():
    # frozen output of this pipeline at N=1000; guards against regressions
    s = ratio_series(CyclicType(5, 2), 0, 1000, grid=[1000])
    e = s.entries[-1]
    assert (e.numerator, e.denominator) == (33533901, 167668501)
    assert abs(e.ratio - Fraction(1, 5)) <= Fraction(1, 100)


def test_partition_identity_on_partial_sums():
    for (n, a, n_max) in [(5, 2, 50), (12, 7, 30), (6, 1, 25)]:
        t = CyclicType(n, a)
        per_chi = [ratio_series(t, chi, n_max, grid=[n_max]) for chi in range(n)]
        denominator = per_chi[0].entries[-1].denominator
        assert all(s.entries[-1].denominator == denominator for s in per_chi)
        assert sum(s.entries[-1].numerator for s in per_chi) == denominator


def test_gaps_shrink_for_balanced_types():
    # strict decrease holds when the weights generate with mixed residues;
    # types whose weights are all equal oscillate with N mod n instead
    for (n, a) in [(2, 1), (5, 2)]:
        s = ratio_series(CyclicType(n, a), 0, 400, grid=[50, 100, 200, 400])
        gaps = [abs(e.ratio - s.target) for e in s.entries]
        assert all(b < a_ for a_, b in zip(gaps, gaps[1:])), (n, a, gaps)


def test_engineering_gap_bound():
    # calibrated envelope: the exact gap never exceeds 2*nu*n/N on this grid,
    # oscillation included
    for (n, a) in [(2, 1), (3, 1), (5, 2), (7, 3), (12, 5)]:
        t = CyclicType(n, a)
        nu = syzygy_weights(t).nu
        s = ratio_series(t, 0, 800, grid=[50, 100, 200, 400, 800])
        for e in s.entries:
            assert abs(e.ratio - s.target) <= Fraction(2 * nu * n, e.bound), (n, a, e.bound)


def test_gap_vanishes_along_full_period_bounds():
    # sampling at multiples of n removes the phase oscillation
    for (n, a) in [(3, 1), (7, 3), (12, 5)]:
        t = CyclicType(n, a)
        grid = [20 * n, 40 * n, 80 * n]
        s = ratio_series(t, 0, grid[-1], grid=grid)
        gaps = [abs(e.ratio - s.target) for e in s.entries]
        assert all(b < a_ for a_, b in zip(gaps, gaps[1:])), (n, a, gaps)
        assert gaps[-1] <= Fraction(1, 100)


def test_general_signature_examples():
    three = AbelianGroup((3,))
    rep = DiagonalRepresentation(three, (Character((1,)),))
    value, series = general_signature(rep, Character((0,)), 10)
    assert value == Fraction(1, 3)
    assert series.target == value

    klein = AbelianGroup((2, 2))
    rep4 = DiagonalRepresentation(klein, (Character((1, 0)), Character((0, 1))))
    value4, _ = general_signature(rep4, Character((0, 0)), 5)
    assert value4 == Fraction(1, 4)


def test_general_signature_rejects_non_faithful():
    four = AbelianGroup((4,))
    rep = DiagonalRepresentation(four, (Character((2,)),))
    with pytest.raises(ValueError, match=r"\(2\)"):
        general_signature(rep, Character((0,)), 3)


def test_general_matches_cyclic_pipeline():
    for n in range(2, 13):
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                t = CyclicType(n, a)
                rep = syzygy_weights(t).as_diagonal_representation()
                value, _ = general_signature(rep, Character((0,)), 0)
                assert value == exact_signature(t, 0)


def test_convergence_report_definitions():
    target = Fraction(1, 2)
    entries = tuple(
        RatioEntry(n, 1, 2, Fraction(1, 2)) for n in (1, 2, 3, 4)
    )
    report = convergence_report(RatioSeries(entries, target))
    assert report.final_gap == 0
    assert report.monotone_tail
    assert all(g == 0 for g in report.scaled_gaps)

    s = ratio_series(CyclicType(2, 1), 0, 1000, grid=[10, 100, 1000])
    report = convergence_report(s)
    assert report.final_gap == abs(s.entries[-1].ratio - s.target)
    # empirical O(1/N) decay keeps the scaled gaps below 1 for this type
    assert all(g <= 1 for g in report.scaled_gaps)
    assert report.monotone_tail


def test_convergence_report_rejects_empty():
    with pytest.raises(ValueError):
        convergence_report(RatioSeries((), Fraction(1, 2)))


def test_ratio_entry_validation():
    with pytest.raises(ValueError):
        RatioEntry(1, 5, 3, Fraction(5, 3))
