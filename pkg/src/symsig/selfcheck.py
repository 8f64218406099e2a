"""Cross-verification grid: every pipeline stage recomputed by an
independent route and compared exactly.  Backs the `verify` subcommand."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable

from .abelian import (
    AbelianGroup,
    Character,
    DiagonalRepresentation,
    multiplicity_by_degree,
    multiplicity_oracle_by_degree,
    subgroup_order,
    sym_dim,
)
from .cyclic import CyclicType, minimal_generators, monomial_weight
from .lattice import coset_representative, count_coset_points, kernel_lattice
from .signature import exact_signature
from .syzygy import syzygy_weights

__all__ = ["run_selfcheck"]


def _staircase_by_box_enumeration(sing: CyclicType) -> list[tuple[int, int]]:
    """All invariant exponents in [0, n]^2, minimal under componentwise order."""
    n = sing.n
    invariant = [
        (i, j)
        for i in range(n + 1)
        for j in range(n + 1)
        if (i, j) != (0, 0) and (i + sing.a * j) % n == 0
    ]
    minimal = [
        p
        for p in invariant
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in invariant)
    ]
    return sorted(minimal, key=lambda p: -p[0])


def _valid_types(n_max: int) -> list[CyclicType]:
    return [
        CyclicType(n, a)
        for n in range(2, n_max + 1)
        for a in range(1, n)
        if math.gcd(a, n) == 1
    ]


def _enumerate_multiplicity(rep: DiagonalRepresentation, chi: Character, q: int) -> int:
    group = rep.group
    count = 0
    for x in _compositions(rep.nu, q):
        total = group.zero()
        for c, w in zip(x, rep.weights):
            total = group.add(total, group.scale(c, w))
        if total == chi:
            count += 1
    return count


def _compositions(parts: int, total: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(parts - 1, total - head):
            yield (head,) + rest


def run_selfcheck(n_max: int = 12, seed: int = 20240, emit: Callable[[str], None] = print) -> bool:
    """Run the full cross-check grid; emit one line per check group.

    Returns True when every check passes.  All comparisons are exact.
    """
    ok = True

    def report(passed: bool, label: str, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        tag = "ok  " if passed else "FAIL"
        emit(f"{tag} {label}" + (f" ({detail})" if detail else ""))

    types = _valid_types(n_max)

    bad = []
    for t in types:
        got = [(p.i, p.j) for p in minimal_generators(t).generators]
        if got != _staircase_by_box_enumeration(t):
            bad.append(t)
    report(not bad, "staircase matches box-enumeration oracle", f"{len(types)} types")

    bad = []
    for t in types:
        gens = minimal_generators(t).generators
        if (gens[0].i, gens[0].j) != (t.n, 0) or (gens[1].i, gens[1].j) != (t.n - t.a, 1):
            bad.append(t)
        if any(monomial_weight(t, p) != 0 for p in gens):
            bad.append(t)
    report(not bad, "staircase anchors u^n, u^(n-a)v and zero weights")

    bad = []
    for t in types:
        rep = syzygy_weights(t)
        if not rep.is_faithful() or rep.weights[0] != t.a % t.n:
            bad.append(t)
        if rep.nu != minimal_generators(t).mu - 1:
            bad.append(t)
    report(not bad, "syzygy weights faithful with leading weight a")

    bad = []
    for t in types:
        for chi in range(t.n):
            if exact_signature(t, chi) != Fraction(1, t.n):
                bad.append((t, chi))
    report(not bad, "exact signature equals 1/n for every character", f"{len(types)} types")

    rng = random.Random(seed)
    bad_count = 0
    for _ in range(50):
        n = rng.randint(2, 8)
        k = rng.randint(1, 3)
        nu = rng.randint(1, 4)
        group = AbelianGroup((n,) * k)
        weights = tuple(
            group.reduce([rng.randrange(n) for _ in range(k)]) for _ in range(nu)
        )
        rep = DiagonalRepresentation(group, weights)
        if kernel_lattice(rep).index != subgroup_order(weights, group):
            bad_count += 1
    report(bad_count == 0, "lattice index equals subgroup order", "50 random weight lists")

    bad_count = 0
    for _ in range(25):
        k = rng.randint(1, 2)
        mods = []
        while not mods or math.prod(mods) > 12:
            mods = [rng.randint(2, 6) for _ in range(k)]
        group = AbelianGroup(tuple(mods))
        nu = rng.randint(1, 3)
        rep = DiagonalRepresentation(
            group,
            tuple(group.reduce([rng.randrange(m) for m in mods]) for _ in range(nu)),
        )
        chi = group.element(rng.randrange(group.order))
        q_max = 6
        dp = multiplicity_by_degree(rep, chi, q_max)
        series = multiplicity_oracle_by_degree(rep, chi, q_max)
        direct = [_enumerate_multiplicity(rep, chi, q) for q in range(q_max + 1)]
        if dp != series or dp != direct:
            bad_count += 1
        if any(
            sum(multiplicity_by_degree(rep, c, q_max)[q] for c in group.elements())
            != sym_dim(rep.nu, q)
            for q in range(q_max + 1)
        ):
            bad_count += 1
    report(
        bad_count == 0,
        "multiplicity DP = series oracle = enumeration, partition identity",
        "25 random representations",
    )

    t = CyclicType(5, 2)
    rep = syzygy_weights(t).as_diagonal_representation()
    lat = kernel_lattice(rep)
    bad_count = 0
    for chi_val in range(5):
        chi = Character((chi_val,))
        a0 = coset_representative(rep, chi)
        geometric = count_coset_points(lat, a0, 10)
        dp_sum = sum(multiplicity_by_degree(rep, chi, 10))
        if geometric != dp_sum:
            bad_count += 1
    report(bad_count == 0, "simplex enumeration matches DP partial sums", "type 1/5(1,2)")

    return ok
