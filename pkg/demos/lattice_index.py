"""The kernel lattice of a weight map and its index.

Exponent vectors whose weights cancel form a full-rank sublattice L of Z^nu.
Its index [Z^nu : L] equals the order of the subgroup the weights generate,
computed two ways: |det| of a kernel basis via Smith normal form, and
breadth-first closure in the group.
"""

from symsig import (
    CyclicType,
    count_coset_points,
    coset_representative,
    kernel_lattice,
    lattice_contains,
    snf,
    subgroup_order,
    syzygy_weights,
)

if __name__ == "__main__":
    t = CyclicType(5, 2)
    rep = syzygy_weights(t).as_diagonal_representation()
    print(f"syzygy weights of 1/5(1,2): {[w.components[0] for w in rep.weights]}")

    lat = kernel_lattice(rep)
    print(f"kernel lattice basis (columns), ambient dimension {lat.ambient_dim}:")
    for row in lat.basis.to_rows():
        print(f"  {row}")
    dec = snf(lat.basis)
    print(f"invariant factors: {dec.diagonal()}")
    print(f"index [Z^3 : L] = {lat.index}")
    print(f"subgroup order by closure = {subgroup_order(rep.weights, rep.group)}")

    print("\nmembership tests (x in L iff the weight sum vanishes mod 5):")
    for x in [(5, 0, 0), (1, 1, 1), (0, 0, 5), (2, 0, 1), (1, 0, 3)]:
        weight = sum(c * w.components[0] for c, w in zip(x, rep.weights)) % 5
        print(f"  {x}: weight {weight}, in lattice: {lattice_contains(lat, x)}")

    # counting coset points in dilated simplices, coset by coset
    print("\npoints of each coset inside the simplex |x| <= 10:")
    total = 0
    for chi in rep.group.elements():
        a0 = coset_representative(rep, chi)
        c = count_coset_points(lat, a0, 10)
        total += c
        print(f"  chi={chi.components[0]}: a0={a0.coordinates}, count={c}")
    print(f"  total = {total} (all lattice points of the dilated simplex)")
