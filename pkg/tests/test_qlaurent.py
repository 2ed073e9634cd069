"""Coefficient ring tests: rendering, arithmetic, parsing."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from satake import ONE, ZERO, QLaurent, parse_qlaurent, qmonomial
from satake.errors import FormatError


def random_qlaurent(rng: random.Random) -> QLaurent:
    terms = {}
    for _ in range(rng.randint(0, 5)):
        terms[rng.randint(-6, 6)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return QLaurent(terms)


# -- rendering ----------------------------------------------------------


def test_render_frozen_forms():
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert qmonomial(1).render() == "q"
    assert qmonomial(-1).render() == "q^-1"
    assert qmonomial(Fraction(-1, 2)).render() == "q^-1/2"
    assert qmonomial(Fraction(3, 2)).render() == "q^3/2"
    assert QLaurent({-2: 1, 0: 1}).render() == "q^-1 + 1"
    assert QLaurent({-3: 1, 0: 2, 2: -1}).render() == "q^-3/2 + 2 - q"
    assert QLaurent({-2: 2}).render() == "2*q^-1"
    assert QLaurent({0: Fraction(1, 2)}).render() == "1/2"
    assert QLaurent({0: 1, 2: -1}).render() == "1 - q"
    assert QLaurent({2: -1}).render() == "-q"
    assert QLaurent({4: Fraction(-3, 2)}).render() == "-3/2*q^2"


def test_render_ascending_exponent_order():
    p = QLaurent({4: 1, -4: 1, 0: 5})
    assert p.render() == "q^-2 + 5 + q^2"


def test_repr_matches_render():
    p = QLaurent({-2: 1, 0: 1})
    assert repr(p) == p.render()


# -- construction and equality ------------------------------------------


def test_zero_coefficients_dropped():
    assert QLaurent({3: 0, 1: Fraction(0)}) == ZERO
    assert QLaurent({1: 1, 2: 0}).terms == {1: Fraction(1)}


def test_constructor_rejects_bad_exponents():
    with pytest.raises(TypeError):
        QLaurent({Fraction(1, 2): 1})
    with pytest.raises(TypeError):
        QLaurent({"q": 1})


def test_constructor_rejects_inexact_coefficients():
    with pytest.raises(TypeError):
        QLaurent({0: 0.5})


def test_immutable():
    p = qmonomial(1)
    with pytest.raises(AttributeError):
        p.terms_field = {}
    before = p.terms
    before[99] = Fraction(1)
    assert p.terms == {2: Fraction(1)}


def test_equality_and_coercion():
    assert QLaurent({0: 3}) == 3
    assert QLaurent({0: Fraction(1, 2)}) == Fraction(1, 2)
    assert ONE != qmonomial(1)
    assert hash(QLaurent({2: 1})) == hash(qmonomial(1))


def test_constant_value():
    assert ZERO.constant_value() == 0
    assert QLaurent({0: Fraction(7, 3)}).constant_value() == Fraction(7, 3)
    with pytest.raises(ValueError):
        qmonomial(1).constant_value()


def test_qmonomial_rejects_thirds():
    with pytest.raises(ValueError):
        qmonomial(Fraction(1, 3))


# -- ring structure -----------------------------------------------------


def test_ring_axioms_seeded_random():
    rng = random.Random(11)
    for _ in range(200):
        a = random_qlaurent(rng)
        b = random_qlaurent(rng)
        c = random_qlaurent(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        assert a + (-a) == ZERO


def test_integer_and_fraction_operands():
    p = qmonomial(-1)
    assert p + 1 == QLaurent({-2: 1, 0: 1})
    assert 1 + p == p + 1
    assert 2 * p == QLaurent({-2: 2})
    assert p - Fraction(1, 2) == QLaurent({-2: 1, 0: Fraction(-1, 2)})
    assert 1 - p == QLaurent({0: 1, -2: -1})


def test_pow():
    p = ONE + qmonomial(1)
    assert p ** 0 == ONE
    assert p ** 2 == QLaurent({0: 1, 2: 2, 4: 1})
    with pytest.raises(ValueError):
        p ** -1


def test_invert_q_involution_and_homomorphism():
    rng = random.Random(12)
    for _ in range(100):
        a = random_qlaurent(rng)
        b = random_qlaurent(rng)
        assert a.invert_q().invert_q() == a
        assert (a + b).invert_q() == a.invert_q() + b.invert_q()
        assert (a * b).invert_q() == a.invert_q() * b.invert_q()
    assert qmonomial(1).invert_q() == qmonomial(-1)
    assert qmonomial(Fraction(1, 2)).invert_q() == qmonomial(Fraction(-1, 2))


# -- parsing ------------------------------------------------------------


def test_parse_frozen_forms():
    assert parse_qlaurent("0") == ZERO
    assert parse_qlaurent("1") == ONE
    assert parse_qlaurent("q^-1 + 1") == QLaurent({-2: 1, 0: 1})
    assert parse_qlaurent("q^-3/2 + 2 - q") == QLaurent({-3: 1, 0: 2, 2: -1})
    assert parse_qlaurent("-q") == QLaurent({2: -1})
    assert parse_qlaurent("2*q^-1") == QLaurent({-2: 2})
    assert parse_qlaurent("-3/2*q^2") == QLaurent({4: Fraction(-3, 2)})
    assert parse_qlaurent("  1/2 ") == QLaurent({0: Fraction(1, 2)})


def test_parse_render_round_trip_seeded_random():
    rng = random.Random(13)
    for _ in range(300):
        p = random_qlaurent(rng)
        assert parse_qlaurent(p.render()) == p


def test_parse_rejects_garbage():
    for bad in ["", "   ", "q^1/3", "q**2", "2,3", "q^", "1 +", "x + 1"]:
        with pytest.raises(FormatError):
            parse_qlaurent(bad)
