"""Unit tests for run configuration, case enumeration and report assembly."""
import json

import pytest
from pydantic import ValidationError

from src.twistdeform.deformations import IndexConstraintError
from src.twistdeform.hopf import CheckOutcome
from src.twistdeform.runner import runner as runner_module
from src.twistdeform.runner import (
    ConfigurationError,
    Task,
    build_tasks,
    contraction_summary,
    emit_spacetime_tables,
    execute_task,
    load_config,
    merge_overrides,
    render_json,
    render_tables_text,
    render_text,
    run,
)
from src.twistdeform.schemas import CaseStatus, RunConfig


class TestRunConfig:
    """Tests for configuration validation and loading."""

    def test_defaults(self):
        """All eight deformations and every check at canonical indices."""
        config = RunConfig()
        assert len(config.deformations) == 8
        assert config.checks[0] == "cybe"
        assert config.indices == "canonical"
        assert config.order == 4

    def test_order_from_environment(self, monkeypatch):
        """TWISTDEFORM_ORDER sets the default order."""
        monkeypatch.setenv("TWISTDEFORM_ORDER", "3")
        assert RunConfig().order == 3

    def test_checks_in_canonical_order(self):
        """Selections are reordered and validated."""
        assert RunConfig(checks=["spacetime", "cybe"]).checks == ["cybe", "spacetime"]
        with pytest.raises(ValidationError):
            RunConfig(checks=["nope"])

    def test_deformations_are_canonicalised(self):
        """Unknown names are rejected, duplicates collapse."""
        assert RunConfig(deformations=["kappa", " kappa"]).deformations == ["kappa"]
        with pytest.raises(ValidationError):
            RunConfig(deformations=["bogus"])

    def test_load_config(self, tmp_path):
        """A JSON file becomes a validated config."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"deformations": ["kappa"], "checks": ["cybe"], "order": 3}))
        config = load_config(str(path))
        assert config.deformations == ["kappa"]
        assert config.order == 3

    def test_load_config_errors(self, tmp_path):
        """Missing files, bad JSON and unknown keys are configuration errors."""
        with pytest.raises(ConfigurationError, match="cannot read"):
            load_config(str(tmp_path / "missing.json"))
        broken = tmp_path / "broken.json"
        broken.write_text("{")
        with pytest.raises(ConfigurationError, match="invalid config"):
            load_config(str(broken))
        extra = tmp_path / "extra.json"
        extra.write_text(json.dumps({"colour": "red"}))
        with pytest.raises(ConfigurationError, match="colour"):
            load_config(str(extra))

    def test_merge_overrides(self):
        """Given flags win; None leaves the file value."""
        config = RunConfig(deformations=["kappa"], order=4, workers=2)
        merged = merge_overrides(config, order=3, workers=None)
        assert merged.order == 3
        assert merged.workers == 2
        with pytest.raises(ConfigurationError, match="checks"):
            merge_overrides(config, checks=["bogus"])


class TestTasks:
    """Tests for case enumeration."""

    def test_cybe_tasks(self):
        """One task per deformation plus the control."""
        tasks = build_tasks(RunConfig(checks=["cybe"]))
        assert len(tasks) == 9
        assert tasks[-1].check == "cybe-control"

    def test_all_indices(self):
        """indices='all' enumerates every admissible assignment."""
        tasks = build_tasks(RunConfig(deformations=["theta_0i"], checks=["cybe"], indices="all"))
        assert [t.indices for t in tasks[:3]] == [(("i", 1),), (("i", 2),), (("i", 3),)]

    def test_contraction_only_for_superpositions(self):
        """Single deformations have no Galilei catalog entry."""
        tasks = build_tasks(RunConfig(deformations=["kappa", "theta_kl+kappa"], checks=["contraction"]))
        assert [(t.check, t.deformation) for t in tasks] == [
            ("contraction", "theta_kl+kappa"),
            ("contraction-algebra", None),
            ("contraction-control", None),
        ]

    def test_index_violation_quotes_constraint(self):
        """Explicit indices are validated before anything runs."""
        config = RunConfig(deformations=["kappa"], indices={"i": 1, "k": 1}, checks=["cybe"])
        with pytest.raises(IndexConstraintError, match=r"\[i,k fixed, i != k\]"):
            build_tasks(config)

    def test_contraction_control(self):
        """The unscaled map diverges on Pi0, which is what the control expects."""
        (record,) = execute_task(Task("contraction-control", None, (), 4, 8, False))
        assert record.case_id == "contraction/control"
        assert record.status == CaseStatus.PASS
        assert record.control

    def test_errors_become_failed_records(self):
        """An exception inside a check is reported, not raised."""
        (record,) = execute_task(Task("cybe", "kappa", (("i", 1), ("k", 1)), 4, 8, False))
        assert record.status == CaseStatus.FAIL
        assert record.case_id.endswith("/error")
        assert "IndexConstraintError" in record.detail


class TestRun:
    """Tests for complete runs."""

    def test_cybe_run(self):
        """Every r-matrix passes and the control reports its residual."""
        report = run(RunConfig(checks=["cybe"]))
        assert len(report.cases) == 9
        assert report.summary == {"pass": 9, "fail": 0, "finding": 0}
        assert [r.case_id for r in report.cases if r.control] == ["cybe/control"]
        assert report.exit_code == 0

    def test_second_leg_cases(self):
        """Superposed twists add one cocycle case per component order."""
        report = run(RunConfig(deformations=["theta_kl+kappa"], checks=["cocycle"], order=3))
        ids = [r.case_id for r in report.cases]
        assert ids == [
            "cocycle/control",
            "cocycle/theta_kl+kappa/k=1,l=2,i=3",
            "cocycle/theta_kl+kappa/k=1,l=2,i=3/kappa-over-theta_kl",
            "cocycle/theta_kl+kappa/k=1,l=2,i=3/theta_kl-over-kappa",
        ]
        assert report.exit_code == 0

    def test_findings_do_not_fail_the_run(self):
        """The theta_0i table differs from the catalog in sign; that is a finding."""
        report = run(RunConfig(deformations=["theta_0i"], checks=["spacetime"]))
        by_id = {r.case_id: r for r in report.cases}
        table = by_id["spacetime/theta_0i/i=3/table"]
        assert table.status == CaseStatus.FINDING
        assert table.provenance == "st2"
        assert table.detail.startswith("spacetime/theta_0i")
        assert "cocycle and coassociativity hold" in table.detail
        assert "[x0,x3]" in table.residual
        assert by_id["spacetime/theta_0i/i=3/jacobi"].status == CaseStatus.PASS
        assert by_id["spacetime/representation"].status == CaseStatus.PASS
        assert report.exit_code == 0

    def test_reports_are_deterministic(self):
        """Two runs of one config render identically without timings."""
        config = RunConfig(deformations=["kappa"], checks=["cybe", "normalization"])
        assert render_json(run(config)) == render_json(run(config))

    def test_timings(self):
        """record_timings fills wall_time."""
        report = run(RunConfig(deformations=["kappa"], checks=["cybe"], record_timings=True))
        assert all(r.wall_time is not None for r in report.cases)

    def test_render_text(self):
        """The text report lists cases, flags controls and ends with the summary."""
        text = render_text(run(RunConfig(deformations=["kappa"], checks=["cybe"])))
        assert "PASS     cybe/kappa/k=1,i=3 (exact)" in text
        assert "[control]" in text
        assert text.rstrip().endswith("exit code 0")


class TestOutputs:
    """Tests for derived tables and contraction summaries."""

    def test_spacetime_tables(self):
        """One table per deformation and index set."""
        tables = emit_spacetime_tables(RunConfig(deformations=["theta_kl"]))
        assert len(tables) == 1
        assert tables[0].matched
        assert tables[0].commutators["[x1,x2]"] == "2*i*theta_kl"
        assert "matches the catalog" in render_tables_text(tables)

    def test_contraction_summary(self):
        """theta_kl+kappa contracts to xi_kl+lambda with undeformed antipodes."""
        summary = contraction_summary("theta_kl+kappa", order=3)
        assert summary.galilei == "xi_kl+lambda"
        assert summary.antipodes["V1"] == "-V1"
        assert set(summary.coproducts) == set(summary.antipodes)


class TestProvenance:
    """Tests for the equation tags carried by each record."""

    def test_cybe_cites_the_printed_rmatrix(self):
        """The r-matrix case names its printed formula; the catalog key moves to the detail."""
        report = run(RunConfig(deformations=["theta_kl+kappa"], checks=["cybe"]))
        by_id = {r.case_id: r for r in report.cases}
        record = by_id["cybe/theta_kl+kappa/k=1,l=2,i=3"]
        assert record.provenance == "rge1"
        assert record.detail.startswith("rmatrix/theta_kl+kappa")
        assert by_id["cybe/control"].provenance == "cybe"

    def test_coproducts_cite_their_entries(self):
        """Each generator carries the tag of the entry it was compared against."""
        records = execute_task(Task("coproducts", "kappa", (("i", 3), ("k", 1)), 3, 8, False))
        by_generator = {r.case_id.rsplit("/", 1)[1]: r for r in records}
        assert by_generator["P0"].provenance == "coppy1"
        assert by_generator["M12"].provenance == "coppy100"
        assert by_generator["M12"].detail.startswith("coproduct/kappa/M")


class TestFindingGate:
    """Tests for the rule that a catalog mismatch is a finding only on a consistent engine."""

    def test_findings_carry_the_consistency_result(self):
        """Every finding states that the cocycle and coassociativity checks passed."""
        records = execute_task(Task("coproducts", "kappa", (("i", 3), ("k", 1)), 3, 8, False))
        findings = [r for r in records if r.status == CaseStatus.FINDING]
        assert all("cocycle and coassociativity hold" in r.detail for r in findings)
        assert not [r for r in records if r.status == CaseStatus.FAIL]

    def test_inconsistent_engine_turns_findings_into_failures(self, monkeypatch):
        """With a broken cocycle the theta_0i sign disagreement fails the run."""
        broken = CheckOutcome(False, "F12 F(12)3 - F23 F1(23)", False, 4, detail="cocycle fails: forced")
        monkeypatch.setattr(runner_module, "_consistency", lambda *args: broken)
        report = run(RunConfig(deformations=["theta_0i"], checks=["spacetime"], workers=1))
        by_id = {r.case_id: r for r in report.cases}
        table = by_id["spacetime/theta_0i/i=3/table"]
        assert table.status == CaseStatus.FAIL
        assert "cocycle fails" in table.detail
        assert report.exit_code == 1

    def test_matching_cases_skip_the_consistency_check(self, monkeypatch):
        """A table that matches the catalog passes without consulting the gate."""
        def refuse(*args):
            raise AssertionError("consistency consulted for a matching table")

        monkeypatch.setattr(runner_module, "_consistency", refuse)
        report = run(RunConfig(deformations=["theta_kl"], checks=["spacetime"], workers=1))
        by_id = {r.case_id: r for r in report.cases}
        assert by_id["spacetime/theta_kl/k=1,l=2/table"].status == CaseStatus.PASS
