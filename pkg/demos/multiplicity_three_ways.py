"""Count character multiplicities in symmetric powers by three routes.

The number of degree-q monomials whose total weight hits a target character
is computed by a dynamic program, by a truncated generating series over the
group algebra, and by listing every exponent vector.  All three agree
exactly; only their costs differ.
"""

from itertools import product

from symsig import (
    AbelianGroup,
    Character,
    DiagonalRepresentation,
    multiplicity_by_degree,
    multiplicity_oracle_by_degree,
    sym_dim,
)


def enumerate_route(rep, chi, q):
    count = 0
    for x in product(range(q + 1), repeat=rep.nu):
        if sum(x) != q:
            continue
        total = rep.group.zero()
        for c, w in zip(x, rep.weights):
            total = rep.group.add(total, rep.group.scale(c, w))
        if total == chi:
            count += 1
    return count


if __name__ == "__main__":
    group = AbelianGroup((5,))
    rep = DiagonalRepresentation(
        group, (Character((2,)), Character((2,)), Character((1,)))
    )
    chi = Character((0,))
    q_max = 8

    dp = multiplicity_by_degree(rep, chi, q_max)
    series = multiplicity_oracle_by_degree(rep, chi, q_max)
    direct = [enumerate_route(rep, chi, q) for q in range(q_max + 1)]

    print("weights (2,2,1) mod 5, chi = 0")
    print(f"{'q':>3} {'dim':>5} {'DP':>4} {'series':>7} {'direct':>7}")
    for q in range(q_max + 1):
        print(f"{q:>3} {sym_dim(rep.nu, q):>5} {dp[q]:>4} {series[q]:>7} {direct[q]:>7}")
    assert dp == series == direct

    # the multiplicities of all characters in each degree partition the
    # dimension of the symmetric power
    print("\npartition of dim Sym^q across the five characters:")
    tables = {c: multiplicity_by_degree(rep, c, q_max) for c in group.elements()}
    for q in range(q_max + 1):
        parts = [tables[c][q] for c in group.elements()]
        assert sum(parts) == sym_dim(rep.nu, q)
        print(f"  q={q}: {parts} -> {sym_dim(rep.nu, q)}")
