"""Round trips and diagnostics for the line-oriented datum format."""

from __future__ import annotations

from fractions import Fraction

import pytest

from satake import parse_datum, preset, render_datum
from satake.errors import DatumInvariantError, FormatError

ALL_PRESETS = [
    ("group", "gl2"),
    ("group", "gl3"),
    ("whittaker", "gl2"),
    ("whittaker", "gl3"),
    ("sp2n_gl2n", 1),
    ("sp2n_gl2n", 2),
]


@pytest.mark.parametrize("kind,parameter", ALL_PRESETS)
def test_round_trip(kind, parameter):
    datum = preset(kind, parameter)
    text = render_datum(datum)
    again = parse_datum(text)
    assert again == datum
    assert render_datum(again) == text


def test_render_shape():
    text = render_datum(preset("group", "gl2"))
    assert text == (
        "rank 2\n"
        "reflection 1,-1 | 1,-1\n"
        "theta 1,-1 | +1 | 1\n"
        "rho_px 1/2,-1/2\n"
        "cone 1,-1\n"
    )


def test_parse_ignores_comments_and_blanks():
    text = (
        "# a commented header\n"
        "\n"
        "rank 2\n"
        "   \n"
        "reflection 1,-1 | 1,-1\n"
        "# trailing note\n"
        "rho_px 0,0\n"
        "cone 1,-1\n"
    )
    datum = parse_datum(text)
    assert datum.rank == 2
    assert len(datum.positive) == 1


def test_parse_accepts_bare_plus_one_sign():
    text = "rank 2\nreflection 1,-1 | 1,-1\ntheta 1,-1 | 1 | 2\nrho_px 0,0\ncone 1,-1\n"
    datum = parse_datum(text)
    assert datum.theta_plus[0][1] == 1


def test_parse_minus_sign():
    text = "rank 2\nreflection 1,-1 | 1,-1\ntheta 1,-1 | -1 | 1/2\nrho_px 0,0\ncone 1,-1\n"
    datum = parse_datum(text)
    _, sigma, r = datum.theta_plus[0]
    assert sigma == -1
    assert r == Fraction(1, 2)


def parse_error(text):
    with pytest.raises(FormatError) as info:
        parse_datum(text)
    return str(info.value)


def test_error_messages_carry_line_numbers():
    msg = parse_error("rank 2\nreflection 1,0 | 1,-1\nrho_px 0,0\n")
    assert msg.startswith("line 2:")
    msg = parse_error("rank 2\nrho_px 0,x\n")
    assert msg.startswith("line 2:") and "x" in msg
    msg = parse_error("rank 1\nrank 1\nrho_px 0\n")
    assert "rank given twice" in msg and msg.startswith("line 2")
    msg = parse_error("rank 2\nrho_px 0,0\nrho_px 0,0\n")
    assert "rho_px given twice" in msg
    msg = parse_error("rank 2\nwibble 1,2\nrho_px 0,0\n")
    assert "unknown keyword" in msg and msg.startswith("line 2")


def test_error_missing_sections():
    assert "missing rank" in parse_error("rho_px 0,0\n")
    assert "missing rho_px" in parse_error("rank 2\n")


def test_error_rank_validation():
    assert "bad rank" in parse_error("rank two\nrho_px 0\n")
    assert "positive" in parse_error("rank 0\nrho_px \n")
    assert "does not have rank" in parse_error("rank 2\nrho_px 0,0\ncone 1,2,3\n")


def test_error_malformed_fields():
    assert "reflection needs" in parse_error("rank 2\nreflection 1,-1\nrho_px 0,0\n")
    assert "theta needs" in parse_error("rank 2\ntheta 1,-1 | +1\nrho_px 0,0\n")
    assert "sign must be" in parse_error(
        "rank 2\ntheta 1,-1 | 2 | 1\nrho_px 0,0\ncone 1,-1\n"
    )
    assert "empty vector" in parse_error("rank 2\nrho_px \n")


def test_error_fractional_coroot():
    msg = parse_error("rank 2\nreflection 1,-1 | 1/2,-1/2\nrho_px 0,0\n")
    assert msg.startswith("line 2")


def test_structural_failures_are_format_errors():
    flat = "rank 1\nrho_px 0\ncone 1\ncone -1\n"
    with pytest.raises(DatumInvariantError):
        parse_datum(flat)
    assert issubclass(DatumInvariantError, FormatError)
    outside = "rank 2\nreflection 1,-1 | 1,-1\ntheta 0,1 | +1 | 1\nrho_px 0,0\ncone 1,-1\n"
    with pytest.raises(FormatError):
        parse_datum(outside)


def test_parsed_datum_computes():
    from satake import basic_asymptotics

    text = render_datum(preset("sp2n_gl2n", 2))
    datum = parse_datum(text)
    series = basic_asymptotics(datum, 2)
    assert series.coefficient((1, -1)).render() == "q^-2 - 1"
