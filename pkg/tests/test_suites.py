"""Verification suite registry: schemas, coverage, determinism."""

import pytest

from motivic_pairs import SUITES, catalog, catalog_samples, run_suite
from motivic_pairs.suites import CATALOG_SPECS

AXIOM_KEYS = {"axiom", "sample", "order", "pass", "first_mismatch_degree"}
CHECK_KEYS = {"check", "params", "expected", "actual", "pass"}


def test_registry_names():
    assert list(SUITES) == [
        "ring-axioms",
        "statement1",
        "statement2",
        "power-axioms",
        "identities",
        "example-p1",
        "eq3-finite",
        "weil",
        "squarefree",
    ]


def test_catalog_samples_cover_every_generator_family():
    samples = catalog_samples()
    assert len(samples) == len(CATALOG_SPECS)
    names = [name for name, _ in samples]
    assert names == list(CATALOG_SPECS)
    by_name = dict(samples)
    assert by_name["finite:3,1"] == catalog("finite", 3, 1)
    assert by_name["pn-hyp:2,2"] == catalog("pn-hyp", 2, 2)
    families = {name.split(":")[0] for name in names}
    assert families == {"point", "empty", "finite", "affine-marked", "p1-marked", "pn", "pn-hyp"}


def test_run_suite_report_shape():
    report = run_suite("weil", order=4, fields=(2,))
    assert set(report) == {"suite", "order", "rows", "pass"}
    assert report["suite"] == "weil"
    assert report["order"] == 4
    assert report["rows"]
    assert report["pass"] is True


def test_every_suite_passes_and_rows_follow_one_schema():
    for name in SUITES:
        report = run_suite(name, order=5, fields=(2, 3))
        assert report["pass"], name
        for row in report["rows"]:
            keys = set(row)
            assert keys == AXIOM_KEYS or keys == CHECK_KEYS, (name, keys)
            assert isinstance(row["pass"], bool)


def test_axiom_rows_report_no_mismatch_when_passing():
    report = run_suite("power-axioms", order=4, fields=(2,))
    for row in report["rows"]:
        if "first_mismatch_degree" in row and row["pass"]:
            assert row["first_mismatch_degree"] is None


def test_statement_suites_sample_enough_sums():
    report = run_suite("statement1", order=4, fields=(2,))
    multiplicative = [r for r in report["rows"] if r["axiom"] == "zeta-multiplicative"]
    assert len(multiplicative) >= 20
    report2 = run_suite("statement2", order=4, fields=(2,))
    assert len([r for r in report2["rows"] if r["axiom"] == "config-multiplicative"]) >= 20


def test_identities_cover_every_catalog_entry():
    report = run_suite("identities", order=4, fields=(2,))
    samples = {r["sample"] for r in report["rows"]}
    assert samples == set(CATALOG_SPECS)
    axioms = {r["axiom"] for r in report["rows"]}
    assert axioms == {"geometric-power-is-zeta", "binomial-power-is-config"}


def test_power_axioms_cover_difference_exponents():
    report = run_suite("power-axioms", order=4, fields=(2,))
    law_samples = {r["sample"] for r in report["rows"] if r["axiom"] == "exponent-additive"}
    assert len(law_samples) >= 10
    assert any("-" in s.split(";")[1] for s in law_samples)


def test_eq3_grid_is_complete():
    report = run_suite("eq3-finite", order=4, fields=(2,))
    # 15 (size, marked) shells x 6 options for each of the two label weights
    assert len(report["rows"]) == 15 * 6 * 6


def test_runs_are_deterministic():
    a = run_suite("ring-axioms", order=5, fields=(2, 3))
    b = run_suite("ring-axioms", order=5, fields=(2, 3))
    assert a == b


def test_run_suite_validation():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("weil", order=-1)
    with pytest.raises(ValueError):
        run_suite("weil", fields=(4,))
    with pytest.raises(ValueError):
        run_suite("weil", budget=0)
