"""Exact symmetric signatures of two-dimensional cyclic quotient singularities.

The pipeline: invariant monomial staircase -> syzygy representation weights
-> kernel lattice and Smith normal form -> exact character multiplicities in
symmetric powers -> ratio series converging to 1/|G|, with the limit itself
computed exactly as the reciprocal lattice index.
"""

from .abelian import (
    AbelianGroup,
    Character,
    DiagonalRepresentation,
    multiplicity,
    multiplicity_by_degree,
    multiplicity_oracle,
    multiplicity_oracle_by_degree,
    subgroup_order,
    sym_dim,
)
from .cyclic import (
    CyclicType,
    Monomial,
    Staircase,
    is_invariant,
    minimal_generators,
    monomial_weight,
)
from .intmat import IntegerMatrix, SnfDecomposition, abs_det, binomial, snf
from .lattice import (
    CosetPoint,
    WeightLattice,
    coset_representative,
    count_coset_points,
    index_of_lattice,
    kernel_lattice,
    lattice_contains,
)
from .selfcheck import run_selfcheck
from .signature import (
    ConvergenceReport,
    RatioEntry,
    RatioSeries,
    convergence_report,
    exact_signature,
    general_signature,
    ratio_series,
)
from .syzygy import SyzygyRepresentation, syzygy_weights

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Character",
    "ConvergenceReport",
    "CosetPoint",
    "CyclicType",
    "DiagonalRepresentation",
    "IntegerMatrix",
    "Monomial",
    "RatioEntry",
    "RatioSeries",
    "SnfDecomposition",
    "Staircase",
    "SyzygyRepresentation",
    "WeightLattice",
    "abs_det",
    "binomial",
    "convergence_report",
    "coset_representative",
    "count_coset_points",
    "exact_signature",
    "general_signature",
    "index_of_lattice",
    "is_invariant",
    "kernel_lattice",
    "lattice_contains",
    "minimal_generators",
    "monomial_weight",
    "multiplicity",
    "multiplicity_by_degree",
    "multiplicity_oracle",
    "multiplicity_oracle_by_degree",
    "ratio_series",
    "run_selfcheck",
    "snf",
    "subgroup_order",
    "sym_dim",
    "syzygy_weights",
]
