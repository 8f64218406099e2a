"""Cyclic quotient singularity data and the invariant monomial staircase."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "CyclicType",
    "Monomial",
    "Staircase",
    "monomial_weight",
    "is_invariant",
    "minimal_generators",
]


@dataclass(frozen=True)
class CyclicType:
    """Singularity of type 1/n(1, a): the order-n cyclic group scaling u by a
    primitive n-th root of unity and v by its a-th power."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"group order must be at least 2, got {self.n}")
        if not 1 <= self.a < self.n:
            raise ValueError(
                f"action exponent must lie in [1, {self.n - 1}], got {self.a}"
            )
        g = math.gcd(self.a, self.n)
        if g != 1:
            raise ValueError(
                f"gcd(a, n) = gcd({self.a}, {self.n}) = {g}: the group is not small, "
                "it contains pseudo-reflections"
            )


@dataclass(frozen=True)
class Monomial:
    """Exponent pair (i, j) standing for u^i v^j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0:
            raise ValueError(f"exponents must be nonnegative, got ({self.i}, {self.j})")

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.i, other.i), max(self.j, other.j))


@dataclass(frozen=True)
class Staircase:
    """Minimal monomial generators of the invariant maximal ideal, ordered by
    strictly decreasing u-exponent (equivalently increasing v-exponent)."""

    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("staircase must be nonempty")
        gens = self.generators
        if any(p.i <= q.i or p.j >= q.j for p, q in zip(gens, gens[1:])):
            raise ValueError("generators must have strictly decreasing i and increasing j")

    @property
    def mu(self) -> int:
        return len(self.generators)


def monomial_weight(sing: CyclicType, mono: Monomial) -> int:
    """Residue (i + a*j) mod n by which the group generator scales u^i v^j."""
    return (mono.i + sing.a * mono.j) % sing.n


def is_invariant(sing: CyclicType, mono: Monomial) -> bool:
    return monomial_weight(sing, mono) == 0


@lru_cache(maxsize=None)
def minimal_generators(sing: CyclicType) -> Staircase:
    """Compute the staircase of minimal invariant monomials in O(n).

    For each i in [0, n] the least admissible j is j(i) = -i * a^{-1} mod n
    (and j(0) = n, the least positive solution).  The pair (i, j(i)) is
    irreducible exactly when j(i) is smaller than j(i') for every i' < i,
    because differences of invariant exponent pairs are again invariant.
    A single upward sweep tracking the running minimum of j finds all corners.
    """
    n, a = sing.n, sing.a
    a_inv = pow(a, -1, n)
    corners: list[Monomial] = []
    best_j: int | None = None
    for i in range(n + 1):
        j = n if i == 0 else (-i * a_inv) % n
        if best_j is None or j < best_j:
            corners.append(Monomial(i, j))
            best_j = j
    corners.reverse()
    return Staircase(tuple(corners))
