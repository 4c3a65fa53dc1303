"""Command-line interface: envelopes, exit codes, determinism."""

import json

import pytest

from rslab.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _run_json(capsys, *argv):
    code, out = _run(capsys, *argv)
    return code, json.loads(out) if out.strip().startswith("{") else None


def test_ci_json_envelope(capsys):
    code, payload = _run_json(capsys, "ci", "-n", "4", "-d", "4", "--json")
    assert code == 0
    assert set(payload) == {"command", "inputs", "results", "citations"}
    assert payload["command"] == "ci"
    assert payload["citations"] == []
    assert payload["results"]["invariants"]["signature"] == 100
    assert payload["results"]["manifold"] == "X_4(4)"


def test_ci_kernel_and_both_methods(capsys):
    code, payload = _run_json(
        capsys, "ci", "-n", "2", "-d", "4", "--kernel", "--method", "both", "--json"
    )
    assert code == 0
    results = payload["results"]
    assert results["signature_by_series"] == -16
    assert results["kernel"]["kernel_dimension"] == 38


def test_ci_comma_separated_degrees(capsys):
    code, payload = _run_json(capsys, "ci", "-n", "3", "-d", "2,2", "--json")
    assert code == 0
    assert payload["results"]["manifold"] == "X_3(2,2)"
    assert payload["inputs"]["degrees"] == [2, 2]


def test_ci_series_needs_even_dimension(capsys):
    code, out = _run(capsys, "ci", "-n", "3", "-d", "5", "--method", "series")
    assert code == 2


def test_ci_usage_errors(capsys):
    assert _run(capsys, "ci", "-n", "2", "-d", "x")[0] == 2
    assert _run(capsys, "ci", "-n", "2")[0] == 2
    assert _run(capsys, "nonsense")[0] == 2


def test_holonomy_human_output(capsys):
    code, out = _run(capsys, "holonomy", "g2")
    assert code == 0
    assert "group: G2" in out
    assert "parallel_rs_fields: 0" in out


def test_holonomy_spin7_topology(capsys):
    code, payload = _run_json(
        capsys,
        "holonomy",
        "spin7",
        "--b2",
        "4",
        "--b3",
        "33",
        "--b4minus",
        "60",
        "--json",
    )
    assert code == 0
    assert payload["results"]["topology"]["kernel_dimension"] == 97
    assert payload["results"]["topology"]["rs_index"] == -31
    grades = payload["results"]["graded"]
    assert [t["dimension"] for t in grades["plus"]] == [8, 48]
    assert sorted(t["dimension"] for t in grades["minus"]) == [21, 35]


def test_holonomy_qk_analysis(capsys):
    code, payload = _run_json(capsys, "holonomy", "sp1sp", "2", "--b2", "3", "--json")
    assert code == 0
    results = payload["results"]
    assert results["kernel_formula"] == "b2 + 1"
    assert results["topology"]["kernel_dimension"] == 4
    assert len(results["survivors"]) == 2


def test_holonomy_missing_parameter(capsys):
    assert _run(capsys, "holonomy", "su")[0] == 2


def test_rep_queries(capsys):
    code, payload = _run_json(
        capsys, "rep", "b3", "--weight", "3/2,1/2,1/2", "--json"
    )
    assert code == 0
    assert payload["results"]["dimension"] == 48
    assert payload["results"]["casimir"] == "49/4"


def test_rep_tensor_and_point(capsys):
    code, payload = _run_json(
        capsys,
        "rep",
        "g2",
        "--weight",
        "0,-1,1",
        "--tensor",
        "0,-1,1",
        "--point",
        "1,2,3",
        "--json",
    )
    assert code == 0
    results = payload["results"]
    assert results["tensor_dimension"] == 49
    assert sorted(t["dimension"] for t in results["tensor_decomposition"]) == [
        1,
        7,
        14,
        27,
    ]
    assert len(results["character_moments"]) == 5


def test_rep_product_token(capsys):
    code, payload = _run_json(
        capsys, "rep", "c1xc2", "--weight", "1,1,0", "--json"
    )
    assert code == 0
    assert payload["results"]["dimension"] == 8


def test_rep_wrong_width(capsys):
    assert _run(capsys, "rep", "b3", "--weight", "1,0")[0] == 2
    assert _run(capsys, "rep", "q5", "--weight", "1,0")[0] == 2


def test_sphere_single_and_range(capsys):
    code, payload = _run_json(capsys, "sphere", "-n", "7", "--json")
    assert code == 0
    assert payload["results"]["checks"][0]["casimir"] == "49/4"
    code, payload = _run_json(capsys, "sphere", "--upto", "10", "--json")
    assert code == 0
    assert len(payload["results"]["checks"]) == 8
    assert _run(capsys, "sphere", "-n", "7", "--upto", "9")[0] == 2


def test_product_ci(capsys):
    code, payload = _run_json(capsys, "product", "ci", "2:4", "2:4", "--json")
    assert code == 0
    assert payload["results"]["product_rs_index"] == -156
    assert payload["results"]["left"]["rs_index"] == -38


def test_product_holonomy(capsys):
    code, payload = _run_json(capsys, "product", "holonomy", "sp:2", "sp:2", "--json")
    assert code == 0
    assert payload["results"]["parallel_rs_fields"] == 15
    assert payload["results"]["proven"] is True
    code, payload = _run_json(capsys, "product", "holonomy", "g2", "g2", "--json")
    assert code == 0
    assert payload["results"]["parallel_rs_fields"] == 1
    assert payload["results"]["proven"] is False


def test_product_bad_token(capsys):
    assert _run(capsys, "product", "ci", "2-4", "2:4")[0] == 2


def test_verify_paper_all_pass(capsys):
    code, out = _run(capsys, "verify-paper")
    assert code == 0
    assert "0 failures" in out
    assert "FAIL" not in out


def test_verify_paper_filter_and_json(capsys):
    code, payload = _run_json(capsys, "verify-paper", "--filter", "signature", "--json")
    assert code == 0
    assert payload["results"]["failures"] == 0
    assert all("signature" in e["id"] for e in payload["results"]["entries"])
    assert payload["citations"]
    assert _run(capsys, "verify-paper", "--filter", "zzz")[0] == 2


def test_verify_paper_reports_mismatch(tmp_path, monkeypatch, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            [
                {
                    "id": "broken",
                    "description": "wrong on purpose",
                    "check": "ci_ahat",
                    "args": {"n": 2, "degrees": [4]},
                    "expected": 5,
                    "source": "s",
                }
            ]
        ),
        encoding="utf-8",
    )
    monkeypatch.setenv("RSLAB_MANIFEST", str(bad))
    code, out = _run(capsys, "verify-paper")
    assert code == 1
    assert "FAIL" in out and "broken" in out


def test_json_output_is_reproducible(capsys):
    first = _run(capsys, "verify-paper", "--json")[1]
    second = _run(capsys, "verify-paper", "--json")[1]
    assert first == second
    third = _run(capsys, "holonomy", "sp1sp", "2", "--json")[1]
    fourth = _run(capsys, "holonomy", "sp1sp", "2", "--json")[1]
    assert third == fourth


def test_help_exits_zero(capsys):
    assert _run(capsys, "--help")[0] == 0
