"""Command-line surface: spec grammar, output shapes, exit codes."""

import json

import pytest

from motivic_pairs import MotivicPolynomial, PairClass, catalog
from motivic_pairs.cli import main, parse_pair_spec

L = MotivicPolynomial.lefschetz()


def cells(line):
    return [c.strip() for c in line.split("|")]


# -- pair-spec grammar -------------------------------------------------------------


def test_parse_atoms():
    assert parse_pair_spec("point") == PairClass.one()
    assert parse_pair_spec("empty") == PairClass.zero()
    assert parse_pair_spec("finite:3,1") == PairClass(3, 2)
    assert parse_pair_spec(" pn:2 ") == catalog("pn", 2)


def test_parse_sum_with_numeric_parameters():
    # a numeric fragment after a comma belongs to the previous atom
    combined = parse_pair_spec("sum(finite:3,1,pn:2)")
    assert combined == catalog("finite", 3, 1) + catalog("pn", 2)


def test_parse_nested_combinators():
    value = parse_pair_spec("prod(p1-marked:1,sum(point,neg(finite:2,0)))")
    expected = catalog("p1-marked", 1) * (PairClass.one() - catalog("finite", 2, 0))
    assert value == expected
    assert parse_pair_spec("neg(neg(pn:1))") == catalog("pn", 1)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_pair_spec("mystery")
    with pytest.raises(ValueError):
        parse_pair_spec("finite:a,b")
    with pytest.raises(ValueError):
        parse_pair_spec("sum(point,)")
    with pytest.raises(ValueError):
        parse_pair_spec("neg(point,empty)")
    with pytest.raises(ValueError):
        parse_pair_spec("sum(point")
    with pytest.raises(ValueError):
        parse_pair_spec("finite")  # missing required sizes


# -- zeta and pow ------------------------------------------------------------------


def test_zeta_point_all_units(capsys):
    assert main(["zeta", "--pair", "point", "--order", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert cells(lines[0]) == ["deg", "ambient", "complement", "subvariety"]
    for line in lines[1:]:
        assert cells(line)[1:] == ["1", "1", "0"]


def test_zeta_finite_counts(capsys):
    assert main(["zeta", "--pair", "finite:3,1", "--order", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert cells(lines[3]) == ["t^2", "6", "3", "3"]


def test_zeta_json_shape(capsys):
    assert main(["zeta", "--pair", "p1-marked:1", "--order", "2", "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["order"] == 2
    assert len(blob["coeffs"]) == 3
    assert blob["coeffs"][1] == {"amb": {"0": "1", "1": "1"}, "comp": {"1": "1"}}


def test_pow_one_plus_t(capsys):
    assert main(["pow", "--base", "one-plus-t", "--pair", "finite:3,1", "--order", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert cells(lines[2]) == ["t^1", "3", "2", "1"]
    assert cells(lines[3]) == ["t^2", "3", "1", "2"]
    assert cells(lines[4]) == ["t^3", "1", "0", "1"]


def test_pow_geometric_matches_zeta(capsys):
    assert main(["pow", "--base", "geometric", "--pair", "pn:2", "--order", "4"]) == 0
    powed = capsys.readouterr().out
    assert main(["zeta", "--pair", "pn:2", "--order", "4"]) == 0
    assert capsys.readouterr().out == powed


def test_pow_explicit_coefficients(capsys):
    code = main(
        [
            "pow",
            "--base", "coeffs",
            "--coeff", "finite:2,1",
            "--pair", "finite:2,0",
            "--order", "2",
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    # (1 + (2,1)t)^(2,2): the linear term doubles the coefficient
    assert cells(lines[2]) == ["t^1", "4", "2", "2"]


def test_pow_coeff_flag_requires_coeffs_base(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["pow", "--base", "geometric", "--coeff", "point", "--pair", "point"])
    assert exc.value.code == 2


# -- example -----------------------------------------------------------------------


def test_example_matches_hand_counts(capsys):
    assert main(["example", "--n", "2", "--s", "2", "--q", "2,3"]) == 0
    out = capsys.readouterr().out
    assert "equal: yes" in out
    assert "q=2: union of marked hyperplanes has 5 points enumerated, 5 from the class (ok)" in out
    assert "q=3: union of marked hyperplanes has 7 points enumerated, 7 from the class (ok)" in out


def test_example_json(capsys):
    assert main(["example", "--n", "1", "--s", "1", "--q", "2", "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["equal"] is True
    assert blob["n"] == 1
    assert blob["counts"] == [{"q": 2, "union_enumerated": 1, "union_class": 1, "pass": True}]


def test_example_skips_fields_without_enough_points(capsys):
    assert main(["example", "--n", "2", "--s", "4", "--q", "2,3"]) == 0
    out = capsys.readouterr().out
    assert "q=2: skipped" in out
    assert "q=3:" in out and "skipped" not in out.splitlines()[-1]


def test_example_rejects_negative_inputs():
    with pytest.raises(SystemExit) as exc:
        main(["example", "--n", "-1", "--s", "0"])
    assert exc.value.code == 2


# -- verify ------------------------------------------------------------------------


def test_verify_single_suite_json(capsys):
    assert main(["verify", "--suite", "weil", "--q", "2"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["pass"] is True
    assert blob["fields"] == [2]
    assert [s["suite"] for s in blob["suites"]] == ["weil"]
    for row in blob["suites"][0]["rows"]:
        assert row["pass"] is True


def test_verify_text_mode(capsys):
    assert main(["verify", "--suite", "squarefree", "--q", "2,3", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "suite squarefree:" in out
    assert out.strip().endswith("overall: PASS")


def test_verify_runs_are_byte_identical(capsys):
    assert main(["verify", "--suite", "statement1", "--order", "6"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--suite", "statement1", "--order", "6"]) == 0
    assert capsys.readouterr().out == first


def test_verify_budget_exhaustion_exit_code(capsys):
    assert main(["verify", "--suite", "squarefree", "--budget", "5"]) == 3
    err = capsys.readouterr().err
    assert "budget exhausted" in err


def test_verify_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "everything"])
    assert exc.value.code == 2


# -- shared validation -------------------------------------------------------------


def test_bad_pair_spec_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["zeta", "--pair", "bogus:1"])
    assert exc.value.code == 2


def test_composite_field_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["example", "--n", "1", "--s", "1", "--q", "6"])
    assert exc.value.code == 2


def test_negative_order_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["zeta", "--pair", "point", "--order", "-2"])
    assert exc.value.code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
