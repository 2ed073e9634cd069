"""Tour of the inverse Satake tables for the standard L-factor.

Builds the Hecke-side expansion of 1/det(1 - q^{-s} A) for GL2 and GL3,
prints the rows, and points out the two patterns worth knowing:

* the series column is a plain geometric progression along each cone ray,
* the Hecke column rescales it by the q-power coming from rho.

Run with:  python3 demos/satake_table_tour.py
"""

from fractions import Fraction

from satake import inverse_satake_lfun, preset, qmonomial


def show(kind, parameter, rep, truncate):
    datum = preset(kind, parameter)
    table = inverse_satake_lfun(datum, rep, truncate)
    print(f"== {kind}:{parameter}, rep {rep}, truncated at degree {truncate} ==")
    print(table.to_tsv(), end="")
    print()
    return table


gl2 = show("group", "gl2", (0, 1), 6)

# Each row is a cocharacter (i, j) with i <= j.  The series coefficient
# only remembers i, the depth into the cone interior:
for (i, j), (series, hecke) in gl2.row_map().items():
    assert series == qmonomial(-i)
    assert hecke == qmonomial(Fraction(-(i + j), 2))
print("GL2 checks: series = q^-i and hecke = q^-(i+j)/2 on every row")
print()

gl3 = show("group", "gl3", (0, 0, 1), 5)
for (a, b, c), (_, hecke) in gl3.row_map().items():
    assert hecke == qmonomial(-(a + b + c))
print("GL3 check: hecke value = q^-(sum of coordinates) on every row")
print()

# The same table is what the command line prints:
print("CLI equivalent:  satake inverse-satake --preset group:gl2 \\")
print("                  --lowest-weight 0,1 --truncate 6")
