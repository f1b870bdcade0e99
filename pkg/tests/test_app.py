# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

import json
from pathlib import Path

import pytest
import yaml

from loewner_lab.app import build_parser, main
from loewner_lab.matrix_io import parse_matrices


@pytest.fixture
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _write(path: Path, text: str) -> str:
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_parser_lists_all_commands():
    help_text = build_parser().format_help()

    for command in ("template", "verify", "solve", "search", "gen", "surface"):
        assert command in help_text


def test_gen_prints_a_reproducible_pair(capsys: pytest.CaptureFixture[str]):
    assert main(["gen", "--dim", "3", "--seed", "5"]) == 0
    first = capsys.readouterr().out

    assert main(["gen", "--dim", "3", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    assert len(parse_matrices(first)) == 2


def test_gen_rejects_scalar_chaotic_pairs(capsys: pytest.CaptureFixture[str]):
    assert main(["gen", "--dim", "1", "--seed", "0", "--relation", "chaotic"]) == 2
    assert "dim >= 2" in capsys.readouterr().err


def test_gen_reports_exhausted_budget(capsys: pytest.CaptureFixture[str]):
    assert main(["gen", "--dim", "2", "--seed", "0", "--relation", "unordered", "--budget", "0"]) == 3
    assert "numeric failure" in capsys.readouterr().err


def test_solve_order_equation(workdir: Path, capsys: pytest.CaptureFixture[str]):
    a = _write(workdir / "A.txt", "1\n4\n")
    b = _write(workdir / "B.txt", "1\n1\n")

    assert main(["solve", "--family", "order_forward", "--A", a, "--B", b, "--params", "p=3,t=0,r=1,s=1"]) == 0
    captured = capsys.readouterr()
    payload = json.loads(captured.out)

    assert payload["params"]["n"] == 1
    assert payload["norm_S"] == pytest.approx(0.125)
    assert payload["contraction"] is True
    assert payload["S"] == [[pytest.approx(0.125)]]
    assert "Completed parameters" in captured.err


def test_solve_inequality_warns_on_invalid_parameters(workdir: Path, capsys: pytest.CaptureFixture[str]):
    a = _write(workdir / "A.txt", "1\n2\n")
    b = _write(workdir / "B.txt", "1\n1\n")

    assert main(["solve", "--family", "furuta_b", "--A", a, "--B", b, "--params", "p=5,q=1,r=0"]) == 0
    captured = capsys.readouterr()
    payload = json.loads(captured.out)

    assert payload["valid"] is False
    assert payload["holds"] is True
    assert "WARNING" in captured.err


@pytest.mark.parametrize(
    "params",
    ["p=3,t=0,r=1,s=1,n=2", "p=3,t=0,r=1", "p=three"],
)
def test_solve_rejects_bad_parameters(workdir: Path, params):
    a = _write(workdir / "A.txt", "1\n4\n")
    b = _write(workdir / "B.txt", "1\n1\n")

    assert main(["solve", "--family", "order_forward", "--A", a, "--B", b, "--params", params]) == 2


def test_solve_rejects_truncated_matrix_files(workdir: Path, capsys: pytest.CaptureFixture[str]):
    a = _write(workdir / "A.txt", "2\n2 1\n")
    b = _write(workdir / "B.txt", "2\n1 0\n0 1\n")

    assert main(["solve", "--family", "lowner_heinz", "--A", a, "--B", b, "--params", "alpha=1/2"]) == 2
    assert "ends after 1 of 2 rows" in capsys.readouterr().err


def test_solve_symmetrizes_matrix_files(workdir: Path, capsys: pytest.CaptureFixture[str]):
    a = _write(workdir / "A.txt", "2\n2 1\n1.0000001 2\n")
    b = _write(workdir / "B.txt", "2\n1 0\n0 1\n")

    assert main(["solve", "--family", "lowner_heinz", "--A", a, "--B", b, "--params", "alpha=1"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True


def test_solve_reports_domain_errors(workdir: Path):
    a = _write(workdir / "A.txt", "2\n1 0\n0 -1\n")
    b = _write(workdir / "B.txt", "2\n1 0\n0 1\n")

    assert main(["solve", "--family", "order_forward", "--A", a, "--B", b, "--params", "p=3,t=0,r=1,s=1,n=1"]) == 3


def test_template_then_verify(workdir: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["template"]) == 0
    assert (workdir / "campaign.yaml").exists()
    assert main(["template"]) == 2

    args = ["verify", "--trials", "2", "--dims", "1,2", "-o", "out.json", "--no-wall-time"]
    assert main(args) == 0
    report = json.loads((workdir / "out.json").read_text(encoding="utf-8"))

    assert report["violation_count"] == 0
    assert [f["family"] for f in report["families"]] == ["furuta_b", "furuta_a", "order_forward", "chaotic_forward"]
    assert "wall_time" not in report
    assert "Running campaign" in capsys.readouterr().err


def test_verify_writes_stdout_without_outfile(workdir: Path, capsys: pytest.CaptureFixture[str]):
    config = _write(workdir / "c.yaml", "families: [lowner_heinz]\ndims: [2]\ntrials: 2\n")

    assert main(["verify", "--config", config, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()

    assert lines[0].startswith("family,checked,held")
    assert lines[1].startswith("lowner_heinz,10,10,0,0,")


def test_verify_default_campaign_needs_no_config(workdir: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["verify", "--default-campaign", "--trials", "1", "--dims", "1", "--no-wall-time"]) == 0
    assert json.loads(capsys.readouterr().out)["violation_count"] == 0


def test_verify_without_config_is_a_usage_error(workdir: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["verify"]) == 2
    assert "template" in capsys.readouterr().err


def test_verify_ods_needs_an_output_file(workdir: Path):
    config = _write(workdir / "c.yaml", "families: [lowner_heinz]\nformat: ods\n")

    assert main(["verify", "-c", config]) == 2


def test_verify_refuses_to_overwrite(workdir: Path):
    config = _write(workdir / "c.yaml", "families: [lowner_heinz]\ndims: [1]\ntrials: 1\n")
    _write(workdir / "out.json", "{}")

    assert main(["verify", "-c", config, "-o", "out.json"]) == 2
    assert main(["verify", "-c", config, "-o", "out.json", "--force"]) == 0


def test_search_and_replay(workdir: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["search", "--family", "lowner_heinz", "--params", "alpha=2", "--budget", "500"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["found"] is True

    witness = workdir / "witness.yaml"
    witness.write_text(yaml.safe_dump(result), encoding="utf-8")

    assert main(["search", "--replay", str(witness)]) == 0
    replay = json.loads(capsys.readouterr().out)
    assert replay["held"] is False
    assert replay["digest_matches"] is True
    assert replay["margin"] == pytest.approx(result["witness"]["margin"], rel=1e-12)


def test_search_needs_family_and_params(workdir: Path):
    assert main(["search", "--family", "lowner_heinz"]) == 2
    assert main(["search", "--family", "no_such_family", "--params", "alpha=2"]) == 2


def test_search_rejects_undefined_exponents(workdir: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["search", "--family", "furuta_b", "--params", "p=1,q=0,r=0", "--budget", "3"]) == 2
    assert "q = 0" in capsys.readouterr().err


def test_replay_file_without_fingerprint(workdir: Path, capsys: pytest.CaptureFixture[str]):
    path = _write(workdir / "empty.yaml", "note: nothing to replay\n")

    assert main(["search", "--replay", path]) == 2
    assert "fingerprint" in capsys.readouterr().err


def test_surface_prints_csv(workdir: Path, capsys: pytest.CaptureFixture[str]):
    a = _write(workdir / "A.txt", "2\n2 0.5\n0.5 1\n")
    b = _write(workdir / "B.txt", "2\n1 0\n0 0.5\n")

    args = ["surface", "--family", "furuta_b", "--A", a, "--B", b, "--params", "r=1", "--row", "p=1:3:3", "--col", "q=1:2:2"]
    assert main(args) == 0
    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == "p,q,margin"
    assert len(lines) == 1 + 6
    assert lines[1].startswith("1.0,1.0,")


def test_surface_rejects_equations_and_bad_axes(workdir: Path):
    a = _write(workdir / "A.txt", "1\n2\n")
    b = _write(workdir / "B.txt", "1\n1\n")

    assert main(["surface", "--family", "order_forward", "--A", a, "--B", b, "--row", "p=1:2:2", "--col", "s=1:2:2"]) == 2
    assert main(["surface", "--family", "furuta_b", "--A", a, "--B", b, "--row", "p=1:2", "--col", "q=1:2:2"]) == 2
