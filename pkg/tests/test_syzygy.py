"""Syzygy weight lists, recomputed here from scratch for small types."""

import math

import pytest

from symsig import CyclicType, SyzygyRepresentation, syzygy_weights


def weights_oracle(n, a):
    """Box-enumerated staircase, then the weight of each consecutive lcm."""
    invariant = [
        (i, j)
        for i in range(n + 1)
        for j in range(n + 1)
        if (i, j) != (0, 0) and (i + a * j) % n == 0
    ]
    stairs = sorted(
        (
            p for p in invariant
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in invariant)
        ),
        key=lambda p: -p[0],
    )
    out = []
    for (i1, j1), (i2, j2) in zip(stairs, stairs[1:]):
        li, lj = max(i1, i2), max(j1, j2)
        out.append((li + a * lj) % n)
    return out


def valid_types(n_max):
    return [
        CyclicType(n, a)
        for n in range(2, n_max + 1)
        for a in range(1, n)
        if math.gcd(a, n) == 1
    ]


def test_frozen_examples():
    assert syzygy_weights(CyclicType(5, 2)).weights == (2, 2, 1)
    assert syzygy_weights(CyclicType(2, 1)).weights == (1, 1)
    assert weights_oracle(5, 2) == [2, 2, 1]
    assert weights_oracle(2, 1) == [1, 1]


def test_against_oracle():
    for sing in valid_types(25):
        assert list(syzygy_weights(sing).weights) == weights_oracle(sing.n, sing.a), sing


def test_first_weight_is_action_exponent():
    for sing in valid_types(60):
        assert syzygy_weights(sing).weights[0] == sing.a


def test_length_is_mu_minus_one():
    from symsig import minimal_generators

    for sing in valid_types(40):
        assert syzygy_weights(sing).nu == minimal_generators(sing).mu - 1


def test_faithfulness_on_grid():
    for sing in valid_types(60):
        assert syzygy_weights(sing).is_faithful(), sing


def test_gorenstein_natural_representation():
    # staircase (n,0),(1,1),(0,n): lcm weights are 2n-1 = n-1 and 1 + n(n-1) = 1,
    # the natural two-dimensional representation of the cyclic SL2 subgroup
    for n in range(2, 40):
        rep = syzygy_weights(CyclicType(n, n - 1))
        assert rep.nu == 2
        assert rep.weights == (n - 1, 1)


def test_is_faithful_synthetic():
    assert SyzygyRepresentation(CyclicType(3, 1), (1,)).is_faithful()
    assert not SyzygyRepresentation(CyclicType(4, 1), (2,)).is_faithful()
    assert not SyzygyRepresentation(CyclicType(6, 1), (2, 4)).is_faithful()


def test_weight_validation():
    with pytest.raises(ValueError):
        SyzygyRepresentation(CyclicType(4, 1), (5,))
    with pytest.raises(ValueError):
        SyzygyRepresentation(CyclicType(4, 1), ())


def test_as_diagonal_representation():
    rep = syzygy_weights(CyclicType(5, 2)).as_diagonal_representation()
    assert rep.group.moduli == (5,)
    assert [w.components for w in rep.weights] == [(2,), (2,), (1,)]
