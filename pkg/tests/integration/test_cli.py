"""Integration tests for the twistdeform command line."""
import json

from src.twistdeform.cli import EXIT_CONFIG, EXIT_OK, main


class TestVerify:
    """Tests for twistdeform verify"""

    def test_verify_json(self, capsys):
        """A passing run prints a JSON report and exits 0."""
        code = main(["verify", "--deformation", "kappa", "--checks", "cybe,normalization"])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["exit_code"] == 0
        assert report["summary"]["fail"] == 0
        ids = [case["case_id"] for case in report["cases"]]
        assert "cybe/kappa/k=1,i=3" in ids
        assert "normalization/kappa/k=1,i=3" in ids
        assert "cybe/control" in ids

    def test_verify_text_to_file(self, tmp_path, capsys):
        """--out writes the report instead of printing it."""
        out = tmp_path / "report.txt"
        code = main(["verify", "--deformation", "theta_kl", "--checks", "cybe", "--format", "text",
                     "--out", str(out)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert "PASS     cybe/theta_kl/k=1,l=2 (exact)" in out.read_text()

    def test_config_file_with_overrides(self, tmp_path, capsys):
        """Flags override values read from --config."""
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"deformations": ["theta_0i"], "checks": ["cocycle"], "order": 2}))
        code = main(["verify", "--config", str(config), "--checks", "cybe"])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["order"] == 2
        assert {case["check"] for case in report["cases"]} == {"cybe"}

    def test_index_violation_exits_2(self, capsys):
        """Equal indices are a configuration error that quotes the constraint."""
        code = main(["verify", "--deformation", "kappa", "--indices", "i=1,k=1", "--checks", "cybe"])
        assert code == EXIT_CONFIG
        assert "[i,k fixed, i != k]" in capsys.readouterr().err

    def test_unknown_deformation_exits_2(self, capsys):
        """Unknown ids are rejected before anything runs."""
        code = main(["verify", "--deformation", "theta", "--checks", "cybe"])
        assert code == EXIT_CONFIG
        assert "error:" in capsys.readouterr().err

    def test_unknown_check_exits_2(self, capsys):
        """Unknown check names are configuration errors."""
        assert main(["verify", "--checks", "cybe,bogus"]) == EXIT_CONFIG
        assert "bogus" in capsys.readouterr().err

    def test_missing_config_exits_2(self, tmp_path, capsys):
        """An unreadable config file is a configuration error."""
        assert main(["verify", "--config", str(tmp_path / "nope.json")]) == EXIT_CONFIG
        assert "cannot read config" in capsys.readouterr().err

    def test_bad_environment_exits_2(self, monkeypatch, capsys):
        """TWISTDEFORM_ORDER must be a positive integer."""
        monkeypatch.setenv("TWISTDEFORM_ORDER", "zero")
        assert main(["verify", "--checks", "cybe"]) == EXIT_CONFIG
        assert "TWISTDEFORM_ORDER" in capsys.readouterr().err


class TestDeriveSpacetime:
    """Tests for twistdeform derive spacetime"""

    def test_json_tables(self, capsys):
        """One table per deformation, with the commutators as text."""
        code = main(["derive", "spacetime", "--deformation", "theta_kl"])
        assert code == EXIT_OK
        (table,) = json.loads(capsys.readouterr().out)
        assert table["matched"] is True
        assert table["commutators"]["[x1,x2]"] == "2*i*theta_kl"

    def test_text_reports_the_sign_finding(self, capsys):
        """theta_0i differs from the printed table in [x0,x3]."""
        code = main(["derive", "spacetime", "--deformation", "theta_0i", "--format", "text"])
        assert code == EXIT_OK
        text = capsys.readouterr().out
        assert "theta_0i (i=3): differs from the catalog" in text
        assert "mismatch [x0,x3]" in text


class TestContractAndCatalog:
    """Tests for twistdeform contract and twistdeform catalog dump"""

    def test_contract(self, capsys):
        """The contraction summary names the Galilei image."""
        code = main(["contract", "--deformation", "theta_kl+kappa", "--order", "3"])
        assert code == EXIT_OK
        summary = json.loads(capsys.readouterr().out)
        assert summary["galilei"] == "xi_kl+lambda"
        assert summary["antipodes"]["V1"] == "-V1"

    def test_contract_text(self, capsys):
        """--format text lists each contracted coproduct with its antipode."""
        code = main(["contract", "--deformation", "theta_kl+kappa", "--order", "3", "--format", "text"])
        assert code == EXIT_OK
        text = capsys.readouterr().out
        assert text.startswith("theta_kl+kappa -> xi_kl+lambda (k=1,l=2,i=3)")
        assert "  S(V1) = -V1" in text
        assert "  D(Pi0) = " in text

    def test_contract_bad_indices(self, capsys):
        """Indices outside 1..3 exit 2."""
        code = main(["contract", "--deformation", "theta_kl+kappa", "--indices", "k=1,l=2,i=4"])
        assert code == EXIT_CONFIG
        assert "spatial" in capsys.readouterr().err

    def test_catalog_dump(self, tmp_path):
        """The dump is a JSON list of keyed entries."""
        out = tmp_path / "catalog.json"
        assert main(["catalog", "dump", "--out", str(out)]) == EXIT_OK
        items = json.loads(out.read_text())
        keys = {item["key"] for item in items}
        assert "coproduct/kappa/M" in keys
        assert "galilei/xi_kl+lambda/Pi0" in keys
        assert "spacetime/theta_kl+kappa" in keys
