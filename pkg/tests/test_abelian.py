"""Multiplicity counts cross-checked three ways: dynamic program,
group-algebra series oracle, and direct monomial enumeration."""

import math
import random
from itertools import product

import pytest

from symsig import (
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


def enumerate_histogram(rep, q):
    """Count degree-q monomials per character, by listing every exponent
    vector of total degree q."""
    group = rep.group
    counts = {chi: 0 for chi in group.elements()}

    def compositions(parts, total):
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in compositions(parts - 1, total - head):
                yield (head,) + rest

    for x in compositions(rep.nu, q):
        total = group.zero()
        for c, w in zip(x, rep.weights):
            total = group.add(total, group.scale(c, w))
        counts[total] += 1
    return counts


def seeded_representations(count, seed, max_order=12, max_nu=4):
    rng = random.Random(seed)
    reps = []
    while len(reps) < count:
        k = rng.randint(1, 2)
        mods = tuple(rng.randint(2, max_order) for _ in range(k))
        if math.prod(mods) > max_order:
            continue
        group = AbelianGroup(mods)
        nu = rng.randint(1, max_nu)
        weights = tuple(
            group.reduce([rng.randrange(m) for m in mods]) for _ in range(nu)
        )
        reps.append(DiagonalRepresentation(group, weights))
    return reps


def test_sym_dim():
    assert sym_dim(3, 0) == 1
    assert sym_dim(3, 3) == 10
    assert sym_dim(1, 7) == 1
    assert sym_dim(2, 4) == 5


def test_multiplicity_frozen_examples():
    two = AbelianGroup((2,))
    rep = DiagonalRepresentation(two, (Character((1,)), Character((1,))))
    assert multiplicity(rep, Character((0,)), 4) == 5

    five = AbelianGroup((5,))
    rep5 = DiagonalRepresentation(
        five, (Character((2,)), Character((2,)), Character((1,)))
    )
    assert multiplicity(rep5, Character((1,)), 1) == 1
    assert multiplicity(rep5, Character((0,)), 0) == 1


def test_oracle_frozen_examples():
    three = AbelianGroup((3,))
    rep = DiagonalRepresentation(three, (Character((1,)),))
    assert multiplicity_oracle(rep, Character((2,)), 2) == 1
    assert multiplicity_oracle(rep, Character((0,)), 2) == 0


def test_sym0_is_trivial():
    for rep in seeded_representations(10, 99):
        for chi in rep.group.elements():
            expected = 1 if chi == rep.group.zero() else 0
            assert multiplicity(rep, chi, 0) == expected


def test_three_routes_agree():
    for rep in seeded_representations(40, 2024):
        group = rep.group
        for chi in group.elements():
            dp = multiplicity_by_degree(rep, chi, 10)
            series = multiplicity_oracle_by_degree(rep, chi, 10)
            assert dp == series, (rep, chi)
        if rep.nu <= 3:
            for q in range(9):
                hist = enumerate_histogram(rep, q)
                for chi in group.elements():
                    assert multiplicity(rep, chi, q) == hist[chi], (rep, chi, q)


def test_partition_identity():
    for rep in seeded_representations(25, 515):
        tables = {
            chi: multiplicity_by_degree(rep, chi, 10) for chi in rep.group.elements()
        }
        for q in range(11):
            assert sum(t[q] for t in tables.values()) == sym_dim(rep.nu, q)


def test_multiplicity_vanishes_outside_generated_subgroup():
    four = AbelianGroup((4,))
    rep = DiagonalRepresentation(four, (Character((2,)),))
    for q in range(12):
        assert multiplicity(rep, Character((1,)), q) == 0
        assert multiplicity(rep, Character((3,)), q) == 0


def test_group_mismatch_rejected():
    rep = DiagonalRepresentation(AbelianGroup((2,)), (Character((1,)),))
    with pytest.raises(ValueError):
        multiplicity(rep, Character((0, 0)), 1)
    with pytest.raises(ValueError):
        multiplicity(rep, Character((7,)), 1)


def test_subgroup_order_examples():
    g44 = AbelianGroup((4, 4))
    assert subgroup_order([Character((2, 0))], g44) == 2
    assert subgroup_order([], g44) == 1
    assert subgroup_order([Character((1, 2)), Character((0, 2))], g44) == 8


def count_homs_by_enumeration(generators, group, n):
    """Number of homomorphisms from the generated subgroup to Z/n: try every
    assignment of generator images and keep the ones that extend consistently
    over the closure."""
    count = 0
    for images in product(range(n), repeat=len(generators)):
        values = {group.zero(): 0}
        frontier = [group.zero()]
        consistent = True
        while frontier and consistent:
            x = frontier.pop()
            for g, im in zip(generators, images):
                y = group.add(x, g)
                w = (values[x] + im) % n
                if y in values:
                    if values[y] != w:
                        consistent = False
                        break
                else:
                    values[y] = w
                    frontier.append(y)
        if consistent:
            count += 1
    return count


def test_hom_order_identity():
    rng = random.Random(77)
    for _ in range(12):
        n = rng.randint(2, 8)
        nu = rng.randint(1, 3)
        group = AbelianGroup((n,) * nu)
        gens = [
            group.reduce([rng.randrange(n) for _ in range(nu)])
            for _ in range(rng.randint(1, 3))
        ]
        assert count_homs_by_enumeration(gens, group, n) == subgroup_order(gens, group)


def test_group_element_encoding():
    group = AbelianGroup((3, 4))
    assert group.order == 12
    seen = {group.index_of(chi) for chi in group.elements()}
    assert seen == set(range(12))
    for chi in group.elements():
        assert group.element(group.index_of(chi)) == chi
    assert group.element_order(Character((0, 2))) == 2
    assert group.element_order(Character((1, 1))) == 12
