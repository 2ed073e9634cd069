"""Truncated series on cones and why the truncation is sound.

A ConeSpec fixes a strictly convex rational cone plus a witness
functional that is positive on it.  Series are stored as finitely many
terms of degree at most some bound, and every operation promises
agreement with the untruncated answer through that bound.

This script spot checks the promise: expand a random rational product
with the library, then redo it by brute-force convolution at a higher
bound and compare coefficient by coefficient.
"""

import random
from fractions import Fraction

from satake import (
    ONE,
    QLaurent,
    expand_product,
    geometric_inverse,
    lattice_points,
    make_spec,
    qmonomial,
)
from satake.root_weyl import vadd

quadrant = make_spec([(1, 0), (0, 1)])

print("== geometric series along one ray of the quadrant ==")
geo = geometric_inverse(qmonomial(-1), (1, 0), quadrant, 3)
for p in lattice_points(quadrant, 3):
    c = geo.coefficient(p)
    if not c.is_zero():
        print(f"  {p}: {c.render()}")
print()


def brute(numer, denom, spec, bound):
    """Same product, computed the slow way inside the degree-`bound` slice."""
    zero = (0,) * spec.rank
    inside = set(lattice_points(spec, bound))
    acc = {zero: ONE}

    def mul(acc, poly):
        out = {}
        for k, c in acc.items():
            for k2, c2 in poly.items():
                k3 = vadd(k, k2)
                if k3 in inside:
                    prev = out.get(k3)
                    out[k3] = c * c2 if prev is None else prev + c * c2
        return {k: v for k, v in out.items() if not v.is_zero()}

    for c, d in numer:
        acc = mul(acc, {zero: ONE, tuple(d): -c})
    for c, d in denom:
        geo = {}
        pt, power = zero, ONE
        while pt in inside:
            geo[pt] = power
            pt, power = vadd(pt, tuple(d)), power * c
        acc = mul(acc, geo)
    return acc


rng = random.Random(7)
trials = 25
for trial in range(trials):
    gens = quadrant.generators
    bound = rng.randint(2, 5)

    def coeff():
        return qmonomial(rng.randint(-2, 2)) * Fraction(rng.randint(1, 3))

    def direction():
        g = gens[rng.randrange(len(gens))]
        scale = rng.randint(1, 2)
        return tuple(scale * x for x in g)

    numer = [(coeff(), direction()) for _ in range(rng.randint(0, 2))]
    denom = [(coeff(), direction()) for _ in range(rng.randint(1, 2))]
    fast = expand_product(numer, denom, quadrant, bound)
    slow = brute(numer, denom, quadrant, bound + 5)
    for p in lattice_points(quadrant, bound):
        assert fast.coefficient(p) == slow.get(p, QLaurent()), (trial, p)

print(f"{trials} random products agree with brute force through the bound")
print("(the brute force ran 5 degrees deeper, so nothing leaked past the cut)")
