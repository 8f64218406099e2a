"""Signatures over arbitrary finite abelian groups.

Any faithful diagonal representation works, not just the cyclic case: the
limit is 1/|G|, obtained exactly from the kernel-lattice index.  A
representation with a kernel is rejected with a witness element.
"""

from symsig import AbelianGroup, Character, DiagonalRepresentation, general_signature

if __name__ == "__main__":
    # Klein four-group acting by its two coordinate characters
    klein = AbelianGroup((2, 2))
    rep = DiagonalRepresentation(klein, (Character((1, 0)), Character((0, 1))))
    value, series = general_signature(rep, klein.zero(), 60, grid=[15, 30, 60])
    print(f"Z/2 x Z/2 with weights (1,0), (0,1): signature = {value}")
    for e in series.entries:
        print(f"  N={e.bound:>3}: {e.numerator}/{e.denominator} = {float(e.ratio):.6f}")

    # a mixed group, still faithful
    mixed = AbelianGroup((2, 3))
    rep6 = DiagonalRepresentation(mixed, (Character((1, 1)), Character((0, 2))))
    value6, _ = general_signature(rep6, mixed.zero(), 0)
    print(f"Z/2 x Z/3 with weights (1,1), (0,2): signature = {value6}")

    # weight 2 mod 4 generates only the even residues: not faithful
    four = AbelianGroup((4,))
    broken = DiagonalRepresentation(four, (Character((2,)),))
    try:
        general_signature(broken, four.zero(), 0)
    except ValueError as exc:
        print(f"rejected as expected: {exc}")
