"""Finite abelian groups given by cyclic factors, and exact character
multiplicities inside symmetric powers of a diagonal representation.

Characters are encoded as residue vectors, one residue per cyclic factor;
the same encoding serves for group elements, which silently fixes one
isomorphism between the group and its character group.  Every quantity
computed here (multiplicities, subgroup orders) is independent of that
choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .intmat import binomial

__all__ = [
    "AbelianGroup",
    "Character",
    "DiagonalRepresentation",
    "sym_dim",
    "multiplicity",
    "multiplicity_by_degree",
    "multiplicity_oracle",
    "multiplicity_oracle_by_degree",
    "subgroup_order",
]


@dataclass(frozen=True)
class Character:
    """Residue vector, component j taken modulo the j-th group modulus."""

    components: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components)


@dataclass(frozen=True)
class AbelianGroup:
    """The product Z/n1 x ... x Z/nk."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli:
            raise ValueError("group needs at least one cyclic factor")
        if any(n < 1 for n in self.moduli):
            raise ValueError(f"moduli must be positive, got {self.moduli}")

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def zero(self) -> Character:
        return Character((0,) * len(self.moduli))

    def reduce(self, components: Sequence[int]) -> Character:
        if len(components) != len(self.moduli):
            raise ValueError(
                f"expected {len(self.moduli)} components, got {len(components)}"
            )
        return Character(tuple(c % n for c, n in zip(components, self.moduli)))

    def validate(self, chi: Character) -> None:
        if len(chi.components) != len(self.moduli):
            raise ValueError(
                f"character has {len(chi.components)} components, group has "
                f"{len(self.moduli)} factors"
            )
        if any(not 0 <= c < n for c, n in zip(chi.components, self.moduli)):
            raise ValueError(f"character {chi} is not reduced modulo {self.moduli}")

    def add(self, x: Character, y: Character) -> Character:
        return Character(
            tuple((a + b) % n for a, b, n in zip(x.components, y.components, self.moduli))
        )

    def sub(self, x: Character, y: Character) -> Character:
        return Character(
            tuple((a - b) % n for a, b, n in zip(x.components, y.components, self.moduli))
        )

    def scale(self, c: int, x: Character) -> Character:
        return Character(tuple((c * a) % n for a, n in zip(x.components, self.moduli)))

    def element_order(self, x: Character) -> int:
        return math.lcm(*(n // math.gcd(a, n) for a, n in zip(x.components, self.moduli)))

    def index_of(self, x: Character) -> int:
        """Mixed-radix position of x in the canonical element enumeration."""
        self.validate(x)
        idx = 0
        for c, n in zip(x.components, self.moduli):
            idx = idx * n + c
        return idx

    def element(self, idx: int) -> Character:
        comps = []
        for n in reversed(self.moduli):
            comps.append(idx % n)
            idx //= n
        return Character(tuple(reversed(comps)))

    def elements(self) -> Iterator[Character]:
        return (self.element(i) for i in range(self.order))


@dataclass(frozen=True)
class DiagonalRepresentation:
    """A diagonal action on a vector space, recorded as one character per
    coordinate line."""

    group: AbelianGroup
    weights: tuple[Character, ...]

    def __post_init__(self) -> None:
        if not self.weights:
            raise ValueError("representation needs at least one weight")
        for w in self.weights:
            self.group.validate(w)

    @property
    def nu(self) -> int:
        return len(self.weights)


def sym_dim(nu: int, q: int) -> int:
    """Dimension of the q-th symmetric power of a nu-dimensional space: the
    number of degree-q monomials in nu variables."""
    return binomial(q + nu - 1, nu - 1)


def multiplicity_by_degree(rep: DiagonalRepresentation, chi: Character, q_max: int) -> list[int]:
    """Count monomials of weight chi in each degree q = 0..q_max.

    Unbounded-knapsack dynamic program over (degree, group element): after
    admitting a variable of weight w, table[d][g] grows by table[d-1][g - w],
    where the d-1 row already allows further copies of the same variable.
    Runs in O(nu * q_max * |G|) exact integer operations.
    """
    group = rep.group
    group.validate(chi)
    size = group.order
    if q_max < 0:
        raise ValueError("degree bound must be nonnegative")
    table = [[0] * size for _ in range(q_max + 1)]
    table[0][group.index_of(group.zero())] = 1
    for w in rep.weights:
        shifted = [group.index_of(group.sub(group.element(g), w)) for g in range(size)]
        for d in range(1, q_max + 1):
            cur = table[d]
            prev = table[d - 1]
            for g in range(size):
                c = prev[shifted[g]]
                if c:
                    cur[g] += c
    target = group.index_of(chi)
    return [table[q][target] for q in range(q_max + 1)]


def multiplicity(rep: DiagonalRepresentation, chi: Character, q: int) -> int:
    """Multiplicity of the character chi in the q-th symmetric power."""
    return multiplicity_by_degree(rep, chi, q)[q]


def multiplicity_oracle_by_degree(
    rep: DiagonalRepresentation, chi: Character, q_max: int
) -> list[int]:
    """Same counts by a second route: expand the truncated series
    prod_i (sum_{d<=q_max} t^d z^{d w_i}) over the integral group algebra,
    with z-exponents reduced in the group, and read off the coefficients
    of t^q at the group element chi.
    """
    group = rep.group
    group.validate(chi)
    size = group.order
    if q_max < 0:
        raise ValueError("degree bound must be nonnegative")
    add_idx = [
        [group.index_of(group.add(group.element(g), group.element(h))) for h in range(size)]
        for g in range(size)
    ]
    one = [0] * size
    one[group.index_of(group.zero())] = 1
    poly = [list(one)] + [[0] * size for _ in range(q_max)]
    for w in rep.weights:
        factor = []
        for d in range(q_max + 1):
            vec = [0] * size
            vec[group.index_of(group.scale(d, w))] = 1
            factor.append(vec)
        product = [[0] * size for _ in range(q_max + 1)]
        for d1, coeff in enumerate(poly):
            for d2 in range(q_max + 1 - d1):
                fvec = factor[d2]
                out = product[d1 + d2]
                for g1, c1 in enumerate(coeff):
                    if c1:
                        row = add_idx[g1]
                        for g2, c2 in enumerate(fvec):
                            if c2:
                                out[row[g2]] += c1 * c2
        poly = product
    target = group.index_of(chi)
    return [poly[q][target] for q in range(q_max + 1)]


def multiplicity_oracle(rep: DiagonalRepresentation, chi: Character, q: int) -> int:
    return multiplicity_oracle_by_degree(rep, chi, q)[q]


def subgroup_order(generators: Sequence[Character], group: AbelianGroup) -> int:
    """Order of the generated subgroup, by breadth-first closure.

    Enumeration scale: fine for group orders up to about 1e4; used to
    cross-check lattice indices, not in the production signature path.
    """
    gens = [group.reduce(g.components) for g in generators]
    zero = group.zero()
    seen = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.add(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen)
