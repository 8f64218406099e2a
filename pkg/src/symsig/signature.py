"""Exact generalized symmetric signatures and their convergent ratio series.

The limit value is always reported exactly through the lattice-index
identity; the partial-sum series exists to demonstrate and test convergence,
never to extrapolate the limit numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .abelian import Character, DiagonalRepresentation, multiplicity_by_degree, sym_dim
from .cyclic import CyclicType
from .lattice import kernel_lattice
from .syzygy import syzygy_weights

__all__ = [
    "RatioEntry",
    "RatioSeries",
    "ConvergenceReport",
    "exact_signature",
    "ratio_series",
    "general_signature",
    "convergence_report",
]


@dataclass(frozen=True)
class RatioEntry:
    """Partial sums up to degree `bound` and their exact quotient."""

    bound: int
    numerator: int
    denominator: int
    ratio: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError("partial multiplicity sum must lie in [0, dimension sum]")


@dataclass(frozen=True)
class RatioSeries:
    entries: tuple[RatioEntry, ...]
    target: Fraction


@dataclass(frozen=True)
class ConvergenceReport:
    """Exact gap diagnostics for a ratio series against its target."""

    final_gap: Fraction
    scaled_gaps: tuple[Fraction, ...]
    monotone_tail: bool


def exact_signature(sing: CyclicType, chi: int = 0) -> Fraction:
    """Exact limit ratio for the indecomposable module indexed by the
    character chi of Z/n; equal to 1/n for every chi.

    Computed as 1 / [Z^nu : L] for the kernel lattice L of the syzygy weight
    map, never by evaluating the series.
    """
    n = sing.n
    if not 0 <= chi < n:
        raise ValueError(f"chi must be a residue in [0, {n - 1}], got {chi}")
    rep = syzygy_weights(sing)
    if not rep.is_faithful():
        # impossible for a valid type; a failure here means the staircase or
        # weight computation is broken
        raise RuntimeError(f"syzygy representation of 1/{n}(1,{sing.a}) lost faithfulness")
    lat = kernel_lattice(rep.as_diagonal_representation())
    return Fraction(1, lat.index)


def ratio_series(
    sing: CyclicType,
    chi: int = 0,
    n_max: int = 0,
    grid: Optional[Sequence[int]] = None,
) -> RatioSeries:
    """Exact partial-sum series sum(mult)/sum(dim) for degrees up to n_max,
    sampled at the given grid bounds (default: every bound 0..n_max)."""
    target = exact_signature(sing, chi)
    rep = syzygy_weights(sing).as_diagonal_representation()
    return _partial_sum_series(rep, Character((chi,)), n_max, grid, target)


def general_signature(
    rep: DiagonalRepresentation,
    chi: Character,
    n_max: int = 0,
    grid: Optional[Sequence[int]] = None,
) -> tuple[Fraction, RatioSeries]:
    """Exact signature 1/|G| plus the empirical series for any faithful
    diagonal representation of a finite abelian group.

    Raises ValueError for a non-faithful representation, naming a nonzero
    group element that acts trivially.
    """
    group = rep.group
    group.validate(chi)
    lat = kernel_lattice(rep)
    if lat.index != group.order:
        culprit = _trivially_acting_element(rep)
        raise ValueError(
            f"representation is not faithful: group element ({culprit}) acts trivially"
        )
    value = Fraction(1, lat.index)
    return value, _partial_sum_series(rep, chi, n_max, grid, value)


def convergence_report(series: RatioSeries) -> ConvergenceReport:
    """Exact gaps |r_N - target|, their N-scaled values, and whether the gap
    is non-increasing over the last half of the grid."""
    if not series.entries:
        raise ValueError("series has no entries")
    gaps = [abs(e.ratio - series.target) for e in series.entries]
    scaled = tuple(e.bound * gap for e, gap in zip(series.entries, gaps))
    tail = gaps[len(gaps) // 2 :]
    monotone = all(b <= a for a, b in zip(tail, tail[1:]))
    return ConvergenceReport(gaps[-1], scaled, monotone)


def _partial_sum_series(
    rep: DiagonalRepresentation,
    chi: Character,
    n_max: int,
    grid: Optional[Sequence[int]],
    target: Fraction,
) -> RatioSeries:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    bounds = sorted(set(grid)) if grid is not None else list(range(n_max + 1))
    if not bounds:
        raise ValueError("grid must contain at least one bound")
    if bounds[0] < 0 or bounds[-1] > n_max:
        raise ValueError(f"grid bounds must lie in [0, {n_max}], got {bounds}")
    mult = multiplicity_by_degree(rep, chi, n_max)
    wanted = set(bounds)
    entries = []
    num = 0
    den = 0
    for q in range(n_max + 1):
        num += mult[q]
        den += sym_dim(rep.nu, q)
        if q in wanted:
            entries.append(RatioEntry(q, num, den, Fraction(num, den)))
    return RatioSeries(tuple(entries), target)


def _trivially_acting_element(rep: DiagonalRepresentation) -> Character:
    """First nonzero group element on which every weight pairs to zero in Q/Z."""
    group = rep.group
    mods = group.moduli
    lcm_mod = math.lcm(*mods)
    for idx in range(1, group.order):
        g = group.element(idx)
        if all(
            sum(w * c * (lcm_mod // n) for w, c, n in zip(wt.components, g.components, mods))
            % lcm_mod == 0
            for wt in rep.weights
        ):
            return g
    raise RuntimeError("index mismatch without a trivially acting element")
