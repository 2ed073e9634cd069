"""End-to-end acceptance checks, one test per published criterion.

Every equality below is exact: the coefficients are Laurent polynomials
over the rationals and the comparisons are structural, with zero
tolerance.  Each test prints a single PASS line so a verbose run reads
as a checklist.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from satake import (
    QLaurent,
    ONE,
    adjoint_a1_datum,
    antidominant_weights,
    b2_datum,
    basic_asymptotics,
    expand_product,
    gl_datum,
    inverse_satake_lfun,
    lattice_points,
    li_datum,
    li_equivalence_check,
    lowest_weight_rep,
    macdonald_p,
    make_spec,
    pairing,
    preset,
    qmonomial,
    sl2_datum,
    weyl_denominator,
)
from satake.root_weyl import pair, vadd

ALL_PRESETS = [
    ("group", "gl2"),
    ("group", "gl3"),
    ("whittaker", "gl2"),
    ("whittaker", "gl3"),
    ("sp2n_gl2n", 1),
    ("sp2n_gl2n", 2),
]


def test_criterion_1_gl2_matrix_l_factor():
    start = time.monotonic()
    table = inverse_satake_lfun(preset("group", "gl2"), (0, 1), 10)
    rows = table.row_map()
    expected = {
        (i, j)
        for j in range(11)
        for i in range(j + 1)
        if 2 * i + j <= 10
    }
    assert set(rows) == expected
    for (i, j), (series, hecke) in rows.items():
        assert series == qmonomial(-i)
        assert hecke == qmonomial(Fraction(-(i + j), 2))
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    print(f"PASS criterion 1: GL2 table, {len(rows)} rows, {elapsed:.3f}s")


def test_criterion_2_gl3_matrix_l_factor():
    start = time.monotonic()
    table = inverse_satake_lfun(preset("group", "gl3"), (0, 0, 1), 9)
    rows = table.row_map()
    expected = set()
    for a in range(10):
        for b in range(a, 10):
            for c in range(b, 10):
                if 3 * a + 2 * b + c <= 9:
                    expected.add((a, b, c))
    assert set(rows) == expected
    for (a, b, c), (_, hecke) in rows.items():
        assert hecke == qmonomial(-(a + b + c))
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"PASS criterion 2: GL3 table, {len(rows)} rows, {elapsed:.3f}s")


def test_criterion_3_partition_formula_equivalence():
    start = time.monotonic()
    gl2 = preset("group", "gl2")
    report2 = li_equivalence_check(li_datum(gl2, (0, 1)), gl2, (0, 1), 8)
    assert report2.ok and report2.checked == 45
    gl3 = preset("group", "gl3")
    report3 = li_equivalence_check(li_datum(gl3, (0, 0, 1)), gl3, (0, 0, 1), 8)
    assert report3.ok and report3.checked == 165
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(
        "PASS criterion 3: partition formula agrees on "
        f"{report2.checked}+{report3.checked} coefficients, {elapsed:.3f}s"
    )


def test_criterion_4_denominator_identity():
    def product_side(datum):
        acc = {(0,) * datum.rank: 1}
        for d in datum.positive:
            out = {}
            for k, c in acc.items():
                out[k] = out.get(k, 0) + c
                s = vadd(k, d.coroot)
                out[s] = out.get(s, 0) - c
            acc = {k: c for k, c in out.items() if c}
        return {k: QLaurent({0: c}) for k, c in acc.items()}

    cases = [
        ("A1", sl2_datum()),
        ("A1adj", adjoint_a1_datum()),
        ("A2", gl_datum(3)),
        ("A3", gl_datum(4)),
        ("B2", b2_datum()),
    ]
    for _, datum in cases:
        assert weyl_denominator(datum) == product_side(datum)
    print(f"PASS criterion 4: denominator identity on {len(cases)} root data")


def test_criterion_5_polynomiality_and_orthogonality():
    start = time.monotonic()
    total_pairs = 0
    for kind, parameter in [("group", "gl2"), ("group", "gl3"), ("sp2n_gl2n", 2)]:
        datum = preset(kind, parameter)
        weights = antidominant_weights(datum.dual_datum(), 4)
        polys = {w: macdonald_p(datum, w) for w in weights}
        for i, a in enumerate(weights):
            for b in weights[i + 1 :]:
                assert pairing(polys[a], polys[b], datum).is_zero(), (a, b)
                total_pairs += 1
    assert total_pairs == 300 + 1485 + 300
    elapsed = time.monotonic() - start
    print(f"PASS criterion 5: {total_pairs} distinct pairs vanish, {elapsed:.3f}s")


def test_criterion_6_pairing_reproduces_asymptotics():
    start = time.monotonic()
    total = 0
    for kind, parameter in ALL_PRESETS:
        datum = preset(kind, parameter)
        spec = datum.cone_spec()
        sweep = list(lattice_points(spec, 4))
        seen = set(sweep)
        for w in antidominant_weights(datum.dual_datum(), 4):
            if w not in seen:
                sweep.append(w)
                seen.add(w)
        bound = 4
        for lam in sweep:
            bound = max(bound, int(pair(spec.witness, lam)))
        series = basic_asymptotics(datum, bound)
        p0 = macdonald_p(datum, (0,) * datum.rank)
        pp0 = pairing(p0, p0, datum)
        for lam in sweep:
            coeff = series.coefficient(lam) if spec.contains(lam) else QLaurent()
            lhs = pairing(macdonald_p(datum, lam), p0, datum)
            assert lhs == coeff * pp0, (kind, parameter, lam)
        total += len(sweep)
    assert total == 29 + 69 + 29 + 69 + 9 + 29
    elapsed = time.monotonic() - start
    print(f"PASS criterion 6: {total} weights across 6 presets, {elapsed:.3f}s")


def test_criterion_7_whittaker_matches_characters():
    checked = 0
    for name in ["gl2", "gl3"]:
        datum = preset("whittaker", name)
        dual = datum.dual_datum()
        for lam in antidominant_weights(dual, 2)[:5]:
            p = macdonald_p(datum, lam)
            chi = lowest_weight_rep(dual, lam)
            assert p.terms == {k: QLaurent({0: m}) for k, m in chi.items()}
            checked += 1
    assert checked == 10
    print(f"PASS criterion 7: {checked} characters matched")


def test_criterion_8_truncation_soundness():
    rng = random.Random(20260819)
    spec_pool = [
        make_spec([(1,)]),
        make_spec([(1, 0), (0, 1)]),
        make_spec([(1, 0), (1, 1)]),
        make_spec([(2, 1), (1, 2)]),
    ]

    def brute(numer, denom, spec, bound):
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

    for trial in range(100):
        spec = spec_pool[rng.randrange(len(spec_pool))]
        gens = spec.generators
        bound = rng.randint(2, 5)

        def coeff():
            return qmonomial(rng.randint(-2, 2)) * Fraction(rng.randint(1, 3))

        def direction():
            g = gens[rng.randrange(len(gens))]
            scale = rng.randint(1, 2)
            return tuple(scale * x for x in g)

        numer = [(coeff(), direction()) for _ in range(rng.randint(0, 2))]
        denom = [(coeff(), direction()) for _ in range(rng.randint(1, 2))]
        got = expand_product(numer, denom, spec, bound)
        want = brute(numer, denom, spec, bound + 5)
        for p in lattice_points(spec, bound):
            assert got.coefficient(p) == want.get(p, QLaurent()), (trial, p)
    print("PASS criterion 8: 100 random truncations match brute force")
