"""Regression manifest: loading, running, overriding, failure capture."""

import json

import pytest

from rslab.errors import InputError
from rslab.manifest import ManifestEntry, RegressionManifest, _encode


def test_default_manifest_all_green():
    manifest = RegressionManifest.load()
    assert len(manifest.entries) >= 20
    outcomes = manifest.run()
    bad = [(r.entry.entry_id, r.error) for r in outcomes if not r.passed]
    assert bad == []


def test_every_entry_carries_a_source():
    manifest = RegressionManifest.load()
    assert all(entry.source for entry in manifest.entries)
    assert all(entry.description for entry in manifest.entries)


def test_id_filter():
    manifest = RegressionManifest.load()
    subset = manifest.run(id_filter="sphere")
    assert [r.entry.entry_id for r in subset] == [
        "sphere-casimir-7",
        "sphere-casimir-16",
    ]
    assert manifest.run(id_filter="zzz-no-such-entry") == []


def test_duplicate_ids_rejected():
    entry = ManifestEntry(
        entry_id="dup",
        description="",
        check="ci_ahat",
        args={"n": 2, "degrees": [4]},
        expected=2,
        source="x",
    )
    with pytest.raises(InputError):
        RegressionManifest([entry, entry], path=None)


def _write_manifest(path, entries):
    path.write_text(json.dumps(entries), encoding="utf-8")


def test_env_override_and_failure_reporting(tmp_path, monkeypatch):
    custom = tmp_path / "custom.json"
    _write_manifest(
        custom,
        [
            {
                "id": "good",
                "description": "quartic surface Ahat",
                "check": "ci_ahat",
                "args": {"n": 2, "degrees": [4]},
                "expected": 2,
                "source": "s",
            },
            {
                "id": "bad-value",
                "description": "wrong on purpose",
                "check": "ci_ahat",
                "args": {"n": 2, "degrees": [4]},
                "expected": 3,
                "source": "s",
            },
            {
                "id": "bad-args",
                "description": "check raises",
                "check": "ci_rs_kernel",
                "args": {"n": 2, "degrees": [6]},
                "expected": 0,
                "source": "s",
            },
        ],
    )
    monkeypatch.setenv("RSLAB_MANIFEST", str(custom))
    outcomes = RegressionManifest.load().run()
    by_id = {r.entry.entry_id: r for r in outcomes}
    assert by_id["good"].passed
    assert not by_id["bad-value"].passed and by_id["bad-value"].actual == 2
    assert not by_id["bad-args"].passed
    assert "ConsistencyError" in by_id["bad-args"].error


def test_explicit_path_beats_env(tmp_path, monkeypatch):
    chosen = tmp_path / "chosen.json"
    decoy = tmp_path / "decoy.json"
    entry = {
        "id": "only",
        "description": "d",
        "check": "dimension_identities",
        "args": {"real_dim": 4},
        "expected": True,
        "source": "s",
    }
    _write_manifest(chosen, [entry])
    _write_manifest(decoy, [dict(entry, id="decoy")])
    monkeypatch.setenv("RSLAB_MANIFEST", str(decoy))
    manifest = RegressionManifest.load(chosen)
    assert [e.entry_id for e in manifest.entries] == ["only"]


def test_unknown_check_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    _write_manifest(
        bad,
        [
            {
                "id": "x",
                "description": "d",
                "check": "no_such_check",
                "args": {},
                "expected": 1,
                "source": "s",
            }
        ],
    )
    with pytest.raises(InputError):
        RegressionManifest.load(bad)


def test_missing_field_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    _write_manifest(bad, [{"id": "x", "check": "ci_ahat"}])
    with pytest.raises(InputError):
        RegressionManifest.load(bad)


def test_encode_normalization():
    from fractions import Fraction

    assert _encode(Fraction(3)) == "3"
    assert _encode(Fraction(49, 4)) == "49/4"
    assert _encode((1, [Fraction(1, 2)])) == [1, ["1/2"]]
    assert _encode({"a": True, "b": None}) == {"a": True, "b": None}
    with pytest.raises(InputError):
        _encode(object())
