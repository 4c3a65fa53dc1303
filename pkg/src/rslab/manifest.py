"""Regression manifest: externally stated values, re-derived and compared.

The manifest is a JSON list of named checks.  Each entry records which
computation to run, its arguments, the expected value, and a plain
description of where the expectation comes from.  The library never
reads the expected values during computation; they exist only to be
compared against, so a drift in any engine shows up as a named failure.

The packaged file lives in ``data/regressions.json``; the environment
variable ``RSLAB_MANIFEST`` substitutes a different file, which is how
downstream users pin their own regression sets.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import charclass, holonomy, intersections
from .errors import ConsistencyError, InputError

ENV_VAR = "RSLAB_MANIFEST"
DEFAULT_PATH = Path(__file__).resolve().parent / "data" / "regressions.json"


def _encode(value):
    """Normalize a computed value into JSON-comparable form."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    raise InputError(f"cannot encode {type(value).__name__} for the manifest")


def _as_int(value: Fraction) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"expected an integer, got {value}")
    return int(value)


def _build(n: int, degrees: Sequence[int]) -> intersections.CIManifold:
    return intersections.build_ci(intersections.CISpec(n, tuple(degrees)))


# -- check implementations, one per manifest "check" key -----------------------


def _ci_signature(n: int, degrees: Sequence[int]) -> int:
    return _as_int(intersections.ci_invariants(_build(n, degrees)).signature)


def _ci_euler(n: int, degrees: Sequence[int]) -> int:
    return _as_int(intersections.ci_invariants(_build(n, degrees)).euler)


def _ci_ahat(n: int, degrees: Sequence[int]) -> int:
    return _as_int(intersections.ci_invariants(_build(n, degrees)).ahat)


def _ci_rs_index(n: int, degrees: Sequence[int]) -> int:
    return _as_int(intersections.ci_invariants(_build(n, degrees)).rs_index)


def _ci_rs_kernel(n: int, degrees: Sequence[int]) -> int:
    report = intersections.ci_rs_kernel(_build(n, degrees))
    if report.kernel_dim is None:
        raise ConsistencyError("kernel dimension is not determined for this input")
    return report.kernel_dim


def _ci_hodge_number(n: int, degrees: Sequence[int], p: int, q: int) -> int:
    return intersections.hodge_numbers(_build(n, degrees))[p][q]


def _dimension_identities(real_dim: int) -> bool:
    return charclass.verify_dimension_identities(real_dim).all_matched


def _summand_dims(kind: str, parameter: Optional[int] = None) -> List[int]:
    model = holonomy.holonomy_model(kind, parameter)
    rep = model.sigma_three_half().total
    dims: List[int] = []
    for w, mult in rep.terms.items():
        dims.extend([model.system.weyl_dimension(w)] * mult)
    return sorted(dims)


def _graded_dims(kind: str, parameter: Optional[int] = None) -> Dict[str, List[int]]:
    model = holonomy.holonomy_model(kind, parameter)
    graded = model.sigma_three_half()
    if not graded.graded:
        raise ConsistencyError(f"{model.group} has no graded spin-3/2 bundle")
    out = {}
    for name, rep in (("plus", graded.plus), ("minus", graded.minus)):
        dims: List[int] = []
        for w, mult in rep.terms.items():
            dims.extend([model.system.weyl_dimension(w)] * mult)
        out[name] = sorted(dims)
    return out


def _parallel_rs(kind: str, parameter: Optional[int] = None) -> int:
    return holonomy.holonomy_model(kind, parameter).parallel_rs_dimension()


def _parallel_spinors(kind: str, parameter: Optional[int] = None) -> int:
    return holonomy.holonomy_model(kind, parameter).parallel_spinor_dimension()


def _qk_survivors(m: int) -> List[str]:
    return sorted(holonomy.qk_kernel_analysis(m).survivor_labels)


def _qk_kernel_formula(m: int) -> Optional[str]:
    return holonomy.qk_kernel_analysis(m).kernel_formula


def _sphere_casimir(n: int) -> str:
    return str(holonomy.sphere_check(n).casimir_value)


def _topological(family: str, **kwargs) -> holonomy.TopologicalInput:
    return holonomy.TopologicalInput(
        family=family,
        n=kwargs.get("n"),
        hodge=tuple(kwargs.get("hodge", ())),
        b2=kwargs.get("b2"),
        b3=kwargs.get("b3"),
        b4_minus=kwargs.get("b4_minus"),
    )


def _topological_kernel(family: str, **kwargs) -> int:
    return holonomy.kernel_dimension(_topological(family, **kwargs))


def _topological_index(family: str, **kwargs) -> int:
    return holonomy.family_index(_topological(family, **kwargs))


def _symmetric_catalog() -> Dict[str, int]:
    return {
        e.name: e.kernel_dimension for e in holonomy.symmetric_space_catalog()
    }


def _spin7_identity() -> bool:
    return holonomy.spin7_betti_identity().consistent


def _hk_identity(n: int) -> bool:
    return holonomy.hyperkahler_kernel_identity(n).consistent


def _product_rs_index(
    left: Dict[str, object], right: Dict[str, object]
) -> int:
    lp = _build(left["n"], left["degrees"]).profile
    rp = _build(right["n"], right["degrees"]).profile
    return _as_int(charclass.product_rs_index(lp, rp))


def _product_parallel(left: Sequence[int], right: Sequence[int]) -> int:
    report = holonomy.product_parallel_rs(
        holonomy.ParallelCounts(*left), holonomy.ParallelCounts(*right)
    )
    return report.count


def _wang_cy4_b4minus(n: int, degrees: Sequence[int]) -> int:
    """Anti-self-dual middle Betti number of a Calabi-Yau fourfold, two ways.

    Route one: b4 from the Hodge table minus the signature, halved.
    Route two: the stated relation b2 + 2 h^{1,3} - 1.  They must agree
    before either is reported.
    """
    manifold = _build(n, degrees)
    if n != 4:
        raise InputError("this relation is specific to fourfolds")
    table = intersections.hodge_numbers(manifold)
    sigma = _as_int(intersections.ci_invariants(manifold).signature)
    b4 = sum(table[p][4 - p] for p in range(5))
    b2 = sum(table[p][2 - p] for p in range(3))
    via_signature = Fraction(b4 - sigma, 2)
    via_hodge = b2 + 2 * table[1][3] - 1
    if via_signature != via_hodge:
        raise ConsistencyError(
            f"b4- routes disagree: {via_signature} vs {via_hodge}"
        )
    return _as_int(via_signature)


CHECKS: Dict[str, Callable[..., object]] = {
    "ci_signature": _ci_signature,
    "ci_euler": _ci_euler,
    "ci_ahat": _ci_ahat,
    "ci_rs_index": _ci_rs_index,
    "ci_rs_kernel": _ci_rs_kernel,
    "ci_hodge_number": _ci_hodge_number,
    "dimension_identities": _dimension_identities,
    "holonomy_summand_dims": _summand_dims,
    "holonomy_graded_dims": _graded_dims,
    "parallel_rs": _parallel_rs,
    "parallel_spinors": _parallel_spinors,
    "qk_survivors": _qk_survivors,
    "qk_kernel_formula": _qk_kernel_formula,
    "sphere_casimir": _sphere_casimir,
    "topological_kernel": _topological_kernel,
    "topological_index": _topological_index,
    "symmetric_catalog": _symmetric_catalog,
    "spin7_identity": _spin7_identity,
    "hk_identity": _hk_identity,
    "product_rs_index": _product_rs_index,
    "product_parallel": _product_parallel,
    "wang_cy4_b4minus": _wang_cy4_b4minus,
}


@dataclass(frozen=True)
class ManifestEntry:
    entry_id: str
    description: str
    check: str
    args: Dict[str, object]
    expected: object
    source: str


@dataclass(frozen=True)
class ManifestResult:
    entry: ManifestEntry
    actual: object
    passed: bool
    error: Optional[str] = None


class RegressionManifest:
    """A loaded set of regression checks, runnable as a unit."""

    def __init__(self, entries: Sequence[ManifestEntry], path: Path) -> None:
        self.entries = tuple(entries)
        self.path = path
        ids = [e.entry_id for e in self.entries]
        if len(set(ids)) != len(ids):
            raise InputError(f"duplicate entry ids in manifest {path}")

    @classmethod
    def load(cls, path: Optional[str] = None) -> "RegressionManifest":
        chosen = Path(path or os.environ.get(ENV_VAR) or DEFAULT_PATH)
        try:
            raw = json.loads(chosen.read_text())
        except FileNotFoundError:
            raise InputError(f"manifest file not found: {chosen}")
        except json.JSONDecodeError as exc:
            raise InputError(f"manifest {chosen} is not valid JSON: {exc}")
        if not isinstance(raw, list):
            raise InputError("manifest must be a JSON list of entries")
        entries = []
        for item in raw:
            missing = {"id", "description", "check", "args", "expected", "source"} - set(item)
            if missing:
                raise InputError(f"manifest entry missing fields: {sorted(missing)}")
            if item["check"] not in CHECKS:
                raise InputError(f"unknown manifest check {item['check']!r}")
            entries.append(
                ManifestEntry(
                    entry_id=item["id"],
                    description=item["description"],
                    check=item["check"],
                    args=dict(item["args"]),
                    expected=item["expected"],
                    source=item["source"],
                )
            )
        return cls(entries, chosen)

    def run(self, id_filter: Optional[str] = None) -> List[ManifestResult]:
        results = []
        for entry in self.entries:
            if id_filter is not None and id_filter not in entry.entry_id:
                continue
            try:
                actual = _encode(CHECKS[entry.check](**entry.args))
            except Exception as exc:  # a failing check must not stop the run
                results.append(
                    ManifestResult(
                        entry=entry,
                        actual=None,
                        passed=False,
                        error=f"{type(exc).__name__}: {exc}",
                    )
                )
                continue
            results.append(
                ManifestResult(entry=entry, actual=actual, passed=actual == entry.expected)
            )
        return results
