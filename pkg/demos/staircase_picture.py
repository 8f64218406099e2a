"""Draw the invariant-monomial staircase of a cyclic quotient singularity.

The monomials u^i v^j fixed by the group of order n acting with weights
(1, a) form a staircase region in the (i, j) plane; its inner corners are
the minimal generators of the invariant maximal ideal.
"""

from symsig import CyclicType, Monomial, is_invariant, minimal_generators


def draw(n, a, box=None):
    t = CyclicType(n, a)
    stairs = minimal_generators(t)
    corners = {(p.i, p.j) for p in stairs.generators}
    box = box if box is not None else n + 2

    print(f"type 1/{n}(1,{a}):  mu = {stairs.mu} generators")
    print("  " + " ".join(f"u^{p.i}v^{p.j}" for p in stairs.generators))
    print()
    for j in range(box, -1, -1):
        row = []
        for i in range(box + 1):
            if (i, j) in corners:
                row.append("G")
            elif is_invariant(t, Monomial(i, j)) and (i, j) != (0, 0):
                row.append("*")
            else:
                row.append(".")
        print(f"  j={j:2d} " + " ".join(row))
    print("       " + " ".join(f"{i%10}" for i in range(box + 1)) + "   (i)")
    print()


if __name__ == "__main__":
    # G marks a minimal generator, * any other invariant monomial
    draw(5, 2)
    draw(7, 3)
    # the a = n-1 case always has exactly three generators
    draw(6, 5)
