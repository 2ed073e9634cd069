"""Macdonald polynomials, the pairing, and the asymptotics of the basic function.

Three experiments on the group case of GL2:

1. print a few P polynomials and the Weyl-invariance of their supports,
2. check orthogonality of distinct P's under the pairing,
3. recover the coefficients of the basic function from pairings with P_0.

Everything is exact arithmetic; the asserts are equalities of Laurent
polynomials in q^(1/2).
"""

from satake import (
    QLaurent,
    antidominant_weights,
    basic_asymptotics,
    lattice_points,
    macdonald_p,
    pairing,
    preset,
)

datum = preset("group", "gl2")

print("== a few Macdonald polynomials on GL2 ==")
for lam in [(0, 0), (-1, 1), (-2, 2), (0, 1)]:
    p = macdonald_p(datum, lam)
    parts = [f"e^{k}*({c.render()})" for k, c in sorted(p.terms.items())]
    print(f"P_{lam} = " + "  +  ".join(parts))
print()

# -- orthogonality ---------------------------------------------------------

weights = antidominant_weights(datum.dual_datum(), 3)
polys = {w: macdonald_p(datum, w) for w in weights}
pairs = 0
for i, a in enumerate(weights):
    for b in weights[i + 1 :]:
        value = pairing(polys[a], polys[b], datum)
        assert value.is_zero(), (a, b, value.render())
        pairs += 1
print(f"orthogonality: all {pairs} distinct pairs up to degree 3 pair to zero")

p0 = polys[(0, 0)]
norm = pairing(p0, p0, datum)
print(f"[P_0, P_0] = {norm.render()}")
print()

# -- pairing against P_0 reads off the basic function ----------------------

spec = datum.cone_spec()
series = basic_asymptotics(datum, 4)
print("== basic function coefficients vs pairings ==")
for lam in lattice_points(spec, 4):
    coeff = series.coefficient(lam)
    lhs = pairing(macdonald_p(datum, lam), p0, datum)
    assert lhs == coeff * norm
    print(f"  {lam}: coefficient {coeff.render()}")
print("every pairing [P_lam, P_0] equals coefficient(lam) * [P_0, P_0]")

# Weights outside the cone pair to zero with P_0:
outside = (-1, 1)
assert not spec.contains(outside)
assert pairing(macdonald_p(datum, outside), p0, datum) == QLaurent()
print(f"and the off-cone weight {outside} pairs to zero, as it should")
