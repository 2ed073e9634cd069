"""Command line behavior: output shapes, exit codes, determinism."""

from __future__ import annotations

import pytest

from satake.cli import main

HYPERBOLIC = (
    "rank 2\n"
    "reflection 2,-3 | 1,0\n"
    "reflection -3,2 | 0,1\n"
    "rho_px 0,0\n"
    "cone 1,0\n"
    "cone 0,1\n"
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- table commands -------------------------------------------------------


def test_inverse_satake_gl2_table(capsys):
    code, out, err = run(
        capsys, "inverse-satake", "--preset", "group:gl2", "--rep", "std",
        "--truncate", "4",
    )
    assert code == 0 and err == ""
    assert out == (
        "0,0\t1\t1\n"
        "0,1\t1\tq^-1/2\n"
        "0,2\t1\tq^-1\n"
        "0,3\t1\tq^-3/2\n"
        "0,4\t1\tq^-2\n"
        "1,1\tq^-1\tq^-1\n"
        "1,2\tq^-1\tq^-3/2\n"
    )


def test_inverse_satake_truncate_zero(capsys):
    code, out, err = run(
        capsys, "inverse-satake", "--preset", "group:gl2", "--rep", "std",
        "--truncate", "0",
    )
    assert code == 0
    assert out == "0,0\t1\t1\n"


def test_records_format(capsys):
    code, out, _ = run(
        capsys, "inverse-satake", "--preset", "group:gl2", "--rep", "std",
        "--truncate", "1", "--format", "records",
    )
    assert code == 0
    assert out.splitlines() == [
        "lambda=0,0 series=1 hecke=1",
        "lambda=0,1 series=1 hecke=q^-1/2",
    ]


def test_out_file_and_determinism(tmp_path, capsys):
    target = tmp_path / "table.tsv"
    argv = [
        "inverse-satake", "--preset", "group:gl3", "--rep", "std",
        "--truncate", "5", "--out", str(target),
    ]
    assert main(argv) == 0
    first = target.read_bytes()
    assert main(argv) == 0
    assert target.read_bytes() == first
    assert first.endswith(b"\n")
    assert capsys.readouterr().out == ""


def test_basic_command(capsys):
    code, out, _ = run(capsys, "basic", "--preset", "sp2n_gl2n:2", "--truncate", "2")
    assert code == 0
    assert out == "0,0\t1\n1,-1\tq^-2 - 1\n2,-2\tq^-4 - q^-2\n"


def test_macdonald_command_allows_any_weight(capsys):
    code, out, _ = run(
        capsys, "macdonald", "--preset", "group:gl2", "--lowest-weight", "1,-1",
    )
    assert code == 0
    assert out == "-1,1\tq^-1\n0,0\tq^-1 - 1\n1,-1\tq^-1\n"
    code, out, _ = run(
        capsys, "macdonald", "--preset", "group:gl2", "--lowest-weight=-1,1",
        "--format", "records",
    )
    assert code == 0
    assert out == "term=-1,1 coeff=1\nterm=0,0 coeff=-q^-1 + 1\nterm=1,-1 coeff=1\n"


def test_char_command(capsys):
    code, out, _ = run(
        capsys, "char", "--preset", "group:gl3", "--rep", "std",
    )
    assert code == 0
    assert out == "0,0,1\t1\n0,1,0\t1\n1,0,0\t1\n"


def test_char_sym2(capsys):
    code, out, _ = run(capsys, "char", "--preset", "group:gl2", "--rep", "sym2")
    assert code == 0
    assert out == "0,2\t1\n1,1\t1\n2,0\t1\n"


def test_datum_file_input(tmp_path, capsys):
    from satake import preset, render_datum

    path = tmp_path / "sp4.datum"
    path.write_text(render_datum(preset("sp2n_gl2n", 2)), encoding="utf-8")
    code, out, _ = run(capsys, "basic", "--datum-file", str(path), "--truncate", "1")
    assert code == 0
    assert out == "0,0\t1\n1,-1\tq^-2 - 1\n"


# -- verify suites ---------------------------------------------------------


@pytest.mark.parametrize(
    "suite,preset_arg,extra",
    [
        ("denominator", "group:gl2", []),
        ("denominator", "group:gl3", []),
        ("orthogonality", "group:gl2", []),
        ("basic-pairing", "sp2n_gl2n:2", []),
        ("li", "group:gl2", ["--rep", "std", "--truncate", "5"]),
        ("whittaker-schur", "whittaker:gl2", []),
    ],
)
def test_verify_suites_pass(capsys, suite, preset_arg, extra):
    code, out, err = run(
        capsys, "verify", "--suite", suite, "--preset", preset_arg, *extra,
    )
    assert code == 0, err
    assert out.startswith(suite + ":")


def test_verify_reports_suite_preconditions(capsys):
    code, _, err = run(
        capsys, "verify", "--suite", "whittaker-schur", "--preset", "group:gl2",
    )
    assert code == 2
    assert "whittaker-schur" in err
    code, _, err = run(
        capsys, "verify", "--suite", "li", "--preset", "whittaker:gl2",
        "--rep", "std",
    )
    assert code == 2


# -- exit codes --------------------------------------------------------------


def test_exit_2_unknown_preset(capsys):
    code, _, err = run(capsys, "basic", "--preset", "group:foo", "--truncate", "2")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "basic", "--preset", "nope:gl2", "--truncate", "2")
    assert code == 2
    code, _, err = run(capsys, "basic", "--preset", "group", "--truncate", "2")
    assert code == 2 and "name:parameter" in err


def test_exit_2_non_antidominant_weight(capsys):
    code, _, err = run(
        capsys, "inverse-satake", "--preset", "group:gl2",
        "--lowest-weight", "1,0", "--truncate", "2",
    )
    assert code == 2
    assert "not antidominant" in err


def test_exit_2_missing_rep(capsys):
    code, _, err = run(capsys, "inverse-satake", "--preset", "group:gl2")
    assert code == 2
    assert "--rep or --lowest-weight" in err


def test_exit_2_weight_shape(capsys):
    code, _, err = run(
        capsys, "char", "--preset", "group:gl3", "--lowest-weight", "0,1",
    )
    assert code == 2 and "coordinates" in err
    code, _, err = run(
        capsys, "char", "--preset", "group:gl2", "--lowest-weight", "0,a",
    )
    assert code == 2 and "expected integers" in err


def test_exit_2_datum_source_required(capsys):
    code, _, err = run(capsys, "basic", "--truncate", "2")
    assert code == 2
    assert "--preset or --datum-file" in err


def test_exit_2_both_datum_sources(capsys, tmp_path):
    path = tmp_path / "x.datum"
    path.write_text("rank 1\nrho_px 0\n", encoding="utf-8")
    code, _, err = run(
        capsys, "basic", "--preset", "group:gl2", "--datum-file", str(path),
        "--truncate", "1",
    )
    assert code == 2
    assert "not both" in err


def test_exit_2_unreadable_datum_file(capsys, tmp_path):
    code, _, err = run(
        capsys, "basic", "--datum-file", str(tmp_path / "absent.datum"),
        "--truncate", "1",
    )
    assert code == 2
    assert "cannot read" in err


def test_exit_2_negative_truncate(capsys):
    code, _, err = run(
        capsys, "basic", "--preset", "group:gl2", "--truncate", "-3",
    )
    assert code == 2
    assert "--truncate" in err


def test_exit_3_math_failure(capsys, tmp_path):
    path = tmp_path / "hyperbolic.datum"
    path.write_text(HYPERBOLIC, encoding="utf-8")
    code, _, err = run(
        capsys, "macdonald", "--datum-file", str(path), "--lowest-weight", "0,0",
    )
    assert code == 3
    assert "Weyl" in err


def test_stdout_runs_are_byte_identical(capsys):
    argv = ["basic", "--preset", "group:gl3", "--truncate", "4"]
    code1 = main(argv)
    first = capsys.readouterr().out
    code2 = main(argv)
    second = capsys.readouterr().out
    assert code1 == code2 == 0
    assert first == second
