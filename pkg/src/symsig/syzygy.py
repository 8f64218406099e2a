"""Group weights on the minimal first syzygies of the staircase ideal."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .abelian import AbelianGroup, Character, DiagonalRepresentation
from .cyclic import CyclicType, minimal_generators, monomial_weight

__all__ = ["SyzygyRepresentation", "syzygy_weights"]


@dataclass(frozen=True)
class SyzygyRepresentation:
    """Character weights of the group action on the relation module between
    the staircase generators, one residue mod n per consecutive pair."""

    singularity: CyclicType
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.singularity.n
        if not self.weights:
            raise ValueError("representation needs at least one weight")
        if any(not 0 <= w < n for w in self.weights):
            raise ValueError(f"weights must be residues mod {n}, got {self.weights}")

    @property
    def nu(self) -> int:
        return len(self.weights)

    def is_faithful(self) -> bool:
        """True iff the weights generate the full character group of Z/n,
        i.e. gcd(n, w_1, ..., w_nu) = 1."""
        return math.gcd(self.singularity.n, *self.weights) == 1

    def as_diagonal_representation(self) -> DiagonalRepresentation:
        group = AbelianGroup((self.singularity.n,))
        return DiagonalRepresentation(group, tuple(Character((w,)) for w in self.weights))


@lru_cache(maxsize=None)
def syzygy_weights(sing: CyclicType) -> SyzygyRepresentation:
    """Weights of the relations between consecutive staircase generators.

    For a monomial ideal in two variables the minimal first syzygies are
    exactly the pairwise relations of staircase neighbours,
    v^(j_{k+1}-j_k) p_k - u^(i_k-i_{k+1}) p_{k+1} = 0, and each relation
    scales by the character of lcm(p_k, p_{k+1}) = u^{i_k} v^{j_{k+1}}.
    The result has length mu - 1.
    """
    stairs = minimal_generators(sing).generators
    ws = tuple(monomial_weight(sing, p.lcm(q)) for p, q in zip(stairs, stairs[1:]))
    return SyzygyRepresentation(sing, ws)
