"""Counting expansions: the partition formula against the closed product.

The basic function's coefficients can be computed two independent ways:

* expand the closed rational product over the cone (basic_asymptotics),
* count weighted decompositions of each weight into the members of a
  fixed multiset psi, one q per part (li_partition).

For the group case the two agree after multiplying the product side by
the standard L-series.  This script prints the counting data for GL2,
does one count by hand, and then runs the full comparison.
"""

from satake import (
    l_series,
    li_coefficient,
    li_datum,
    li_equivalence_check,
    li_partition,
    lowest_weight_rep,
    preset,
    qmonomial,
)


def main():
    datum = preset("group", "gl2")
    d = li_datum(datum, (0, 1))

    print("== the counting datum for group:gl2, standard rep ==")
    print(f"  rank {d.rank}")
    print(f"  det functional {d.det_functional}")
    print(f"  rho_b {d.rho_b}")
    print("  psi members (vector, multiplicity):")
    for vec, mult in d.psi:
        print(f"    {vec} x{mult}")
    print()

    # Count decompositions of -mu = (1, 1) by hand.  Members available:
    # (0,1), (1,-1), (1,0).  The sums giving (1,1):
    #   (0,1) + (1,0)          two parts, contributes q^2
    #   (0,1) + (1,-1) + (0,1) three parts, contributes q^3
    mu = (-1, -1)
    value = li_partition(d, mu)
    assert value == qmonomial(2) + qmonomial(3)
    print(f"li_partition at mu = {mu}: {value.render()}  (matches the hand count)")
    print()

    # The normalized coefficients at a few weights of the extended cone:
    print("li_coefficient samples:")
    for mu in [(0, 0), (0, 1), (1, 1), (-1, 0)]:
        print(f"  {mu}: {li_coefficient(d, mu).render()}")
    print()

    # The product side it must match: L-series times basic asymptotics.
    rho = (0, 1)
    ls = l_series(datum, lowest_weight_rep(datum.dual_datum(), rho), rho, 3)
    print("L-series coefficients through degree 3:")
    for k in ls.support():
        print(f"  {k}: {ls.coefficient(k).render()}")
    print()

    report = li_equivalence_check(d, datum, (0, 1), 8)
    assert report.ok
    print(f"gl2 comparison: {report}")

    gl3 = preset("group", "gl3")
    report3 = li_equivalence_check(li_datum(gl3, (0, 0, 1)), gl3, (0, 0, 1), 6)
    assert report3.ok
    print(f"gl3 comparison: {report3}")


if __name__ == "__main__":
    main()
