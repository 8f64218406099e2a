"""Kernel lattice of a weight map, lattice indices, and coset point counts
inside dilated standard simplices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .abelian import Character, DiagonalRepresentation
from .intmat import IntegerMatrix, SnfDecomposition, abs_det, snf

__all__ = [
    "WeightLattice",
    "CosetPoint",
    "kernel_lattice",
    "lattice_contains",
    "coset_representative",
    "count_coset_points",
    "index_of_lattice",
]


@dataclass(frozen=True)
class WeightLattice:
    """Full-rank sublattice of Z^nu; the columns of `basis` span it.

    `basis_snf` is kept so membership queries can solve basis * y = x
    over the integers without refactoring.
    """

    ambient_dim: int
    basis: IntegerMatrix
    index: int
    basis_snf: SnfDecomposition

    @classmethod
    def from_basis(cls, basis: IntegerMatrix) -> "WeightLattice":
        if basis.rows != basis.cols:
            raise ValueError("lattice basis must be square")
        dec = snf(basis)
        return cls(basis.rows, basis, abs_det(dec), dec)


@dataclass(frozen=True)
class CosetPoint:
    """Integer vector marking the coset a0 + L inside Z^nu."""

    coordinates: tuple[int, ...]


@lru_cache(maxsize=None)
def kernel_lattice(rep: DiagonalRepresentation) -> WeightLattice:
    """Basis and index of {x in Z^nu : sum_i x_i w_i = 0 in the character group}.

    Stack the weight map with the moduli relations into the integer matrix
    B = [W | -diag(moduli)]; the kernel of B projects isomorphically onto the
    weight-map kernel (the moduli block is injective), so the trailing columns
    of the SNF right transform restrict to a basis.  The index equals the
    order of the subgroup generated by the weights, computed here as |det|
    of the basis.
    """
    group = rep.group
    mods = group.moduli
    nu, k = rep.nu, len(mods)
    rows = []
    for j, n_j in enumerate(mods):
        row = [w.components[j] for w in rep.weights]
        row += [-n_j if c == j else 0 for c in range(k)]
        rows.append(row)
    dec = snf(IntegerMatrix.from_rows(rows))
    rank = dec.rank()
    if nu + k - rank != nu:
        raise RuntimeError("moduli block lost rank; kernel extraction is invalid")
    basis = IntegerMatrix.from_rows(
        [[dec.v.at(i, rank + c) for c in range(nu)] for i in range(nu)]
    )
    for c in range(nu):
        col = basis.column(c)
        if any(sum(x * w.components[j] for x, w in zip(col, rep.weights)) % n_j
               for j, n_j in enumerate(mods)):
            raise RuntimeError("kernel basis column does not map to the trivial character")
    bdec = snf(basis)
    return WeightLattice(nu, basis, abs_det(bdec), bdec)


def lattice_contains(lat: WeightLattice, vector: Sequence[int]) -> bool:
    """Whether `vector` lies in the lattice: integral solvability of
    basis * y = vector via the stored decomposition u*basis*v = d, which
    reduces to d_i dividing (u*vector)_i."""
    dec = lat.basis_snf
    z = dec.u.mat_vec(vector)
    for zi, di in zip(z, dec.diagonal()):
        if di == 0:
            if zi:
                return False
        elif zi % di:
            return False
    return True


def index_of_lattice(lat: WeightLattice) -> int:
    """|det(basis)| as the product of its invariant factors; raises on a
    rank-deficient basis."""
    return abs_det(snf(lat.basis))


def coset_representative(rep: DiagonalRepresentation, chi: Character) -> Optional[CosetPoint]:
    """A nonnegative exponent vector with weight chi, or None when chi lies
    outside the subgroup generated by the weights.

    Deterministic normalization: minimal total degree first, then
    lexicographically smallest.  dist[t][g] holds the least total degree
    writing g with weights w_t..w_nu only; a greedy left-to-right sweep then
    picks each coordinate as small as the remaining table allows.
    """
    group = rep.group
    group.validate(chi)
    size = group.order
    nu = rep.nu
    dist: list[list[Optional[int]]] = [[None] * size for _ in range(nu + 1)]
    dist[nu][group.index_of(group.zero())] = 0
    for t in range(nu - 1, -1, -1):
        w = rep.weights[t]
        ord_w = group.element_order(w)
        nxt = dist[t + 1]
        cur = dist[t]
        for g in range(size):
            elem = group.element(g)
            best: Optional[int] = None
            for c in range(ord_w):
                rest = nxt[group.index_of(group.sub(elem, group.scale(c, w)))]
                if rest is not None and (best is None or c + rest < best):
                    best = c + rest
            cur[g] = best
    degree = dist[0][group.index_of(chi)]
    if degree is None:
        return None
    coords = []
    g = chi
    d = degree
    for t in range(nu - 1):
        w = rep.weights[t]
        for c in range(d + 1):
            rest = group.sub(g, group.scale(c, w))
            tail = dist[t + 1][group.index_of(rest)]
            if tail is not None and tail == d - c:
                coords.append(c)
                g = rest
                d -= c
                break
        else:
            raise RuntimeError("distance table is inconsistent")
    coords.append(d)
    return CosetPoint(tuple(coords))


def _simplex_points(dim: int, n_max: int) -> Iterator[tuple[int, ...]]:
    if dim == 0:
        yield ()
        return
    for first in range(n_max + 1):
        for rest in _simplex_points(dim - 1, n_max - first):
            yield (first,) + rest


def count_coset_points(lat: WeightLattice, point: CosetPoint, n_max: int) -> int:
    """#{x in N^nu : |x| <= n_max, x - a0 in L} by direct simplex enumeration
    with one exact membership solve per lattice point.

    Exponential in nu; meant for cross-checks against the dynamic-programming
    multiplicity counts, not for production-size runs.
    """
    if len(point.coordinates) != lat.ambient_dim:
        raise ValueError("coset point dimension does not match the lattice")
    a0 = point.coordinates
    total = 0
    for x in _simplex_points(lat.ambient_dim, n_max):
        if lattice_contains(lat, [xi - ai for xi, ai in zip(x, a0)]):
            total += 1
    return total
