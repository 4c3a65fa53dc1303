"""Command-line front end.

Subcommands
-----------
ci            complete-intersection invariants, Hodge tables, kernel reports
holonomy      spin-3/2 decomposition for a holonomy group, plus kernel data
rep           weight queries: dimension, Casimir, multiplicities, tensors
sphere        round-sphere Casimir positivity check
product       index and parallel-count bookkeeping for Riemannian products
verify-paper  run the checked-in regression manifest

Every run is deterministic: identical inputs produce byte-identical
output.  Exact rationals are rendered as integers when the denominator
is 1 and as "p/q" strings otherwise; floats never appear.

Exit codes: 0 success, 1 consistency or regression failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .charclass import product_rs_index
from .errors import ConsistencyError, InputError, NotApplicableError
from .holonomy import (
    HOLONOMY_KINDS,
    HolonomyModel,
    TopologicalInput,
    family_index,
    holonomy_model,
    kernel_dimension,
    product_parallel_from_models,
    qk_kernel_analysis,
    sphere_check,
)
from .intersections import (
    CIManifold,
    CISpec,
    build_ci,
    ci_invariants,
    ci_rs_kernel,
    fermat_signature,
    hodge_numbers,
)
from .lie import (
    RootSystem,
    casimir,
    character_oracle,
    g2,
    irreducible,
    product_system,
    tensor_decompose,
    type_a,
    type_b,
    type_c,
    type_d,
    weight_multiplicities,
    weyl_dim,
)
from .manifest import RegressionManifest


# ---------------------------------------------------------------------------
# serialization


def _scalar(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    raise InputError(f"cannot serialize a {type(value).__name__} into a report")


def _jsonify(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _jsonify(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(item) for item in value]
    return _scalar(value)


def _render(value: Any, indent: int = 0) -> List[str]:
    """Human-readable tree, one line per scalar, insertion order."""
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, dict) or (
                isinstance(item, list) and any(isinstance(x, (dict, list)) for x in item)
            ):
                lines.append(f"{pad}{key}:")
                lines.extend(_render(item, indent + 1))
            elif isinstance(item, list):
                lines.append(f"{pad}{key}: [{', '.join(str(x) for x in item)}]")
            else:
                lines.append(f"{pad}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            lines.append(f"{pad}-")
            lines.extend(_render(item, indent + 1))
    else:
        lines.append(f"{pad}{value}")
    return lines


def _emit(
    command: str,
    inputs: Dict[str, Any],
    results: Dict[str, Any],
    citations: Sequence[str],
    as_json: bool,
) -> None:
    envelope = {
        "command": command,
        "inputs": _jsonify(inputs),
        "results": _jsonify(results),
        "citations": list(citations),
    }
    if as_json:
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in _render(envelope["results"]):
            print(line)


# ---------------------------------------------------------------------------
# argument parsing helpers


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def _parse_fraction_list(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational list {text!r}") from exc


def _parse_system(token: str) -> RootSystem:
    factors = [part for part in token.lower().split("x") if part]
    if not factors:
        raise InputError(f"empty system token {token!r}")
    systems = [_parse_system_factor(part) for part in factors]
    if len(systems) == 1:
        return systems[0]
    return product_system(*systems)


def _parse_system_factor(tag: str) -> RootSystem:
    if tag == "g2":
        return g2()
    kind, rank_text = tag[:1], tag[1:]
    if kind not in "abcd" or not rank_text.isdigit():
        raise InputError(
            f"unknown system {tag!r}; use a<r>, b<r>, c<r>, d<r>, g2, "
            "or an x-joined product like c1xc2"
        )
    rank = int(rank_text)
    if kind == "a":
        # rank r in r+1 GL coordinates
        return type_a(rank + 1)
    if kind == "b":
        return type_b(rank)
    if kind == "c":
        return type_c(rank)
    return type_d(rank)


def _parse_ci_token(token: str) -> CIManifold:
    """``n:d1,d2,...`` such as ``2:4`` for the quartic surface."""
    head, sep, tail = token.partition(":")
    if not sep or not head.strip().isdigit():
        raise InputError(f"bad complete-intersection token {token!r}; use n:d1,d2,...")
    return build_ci(CISpec(int(head), tuple(_parse_int_list(tail))))


def _parse_holonomy_token(token: str) -> HolonomyModel:
    """``g2``, ``spin7``, or ``kind:parameter`` such as ``sp:2``."""
    head, sep, tail = token.partition(":")
    if not sep:
        return holonomy_model(head)
    if not tail.strip().isdigit():
        raise InputError(f"bad holonomy token {token!r}; use kind:parameter")
    return holonomy_model(head, int(tail))


def _weight_entry(system: RootSystem, w: Tuple[Fraction, ...], mult: int) -> Dict[str, Any]:
    return {
        "weight": [str(c) for c in w],
        "multiplicity": mult,
        "dimension": weyl_dim(system, w),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_ci(args: argparse.Namespace) -> int:
    degrees: List[int] = []
    for chunk in args.degree:
        degrees.extend(_parse_int_list(chunk))
    manifold = build_ci(CISpec(args.n, tuple(degrees)))
    inv = ci_invariants(manifold)
    results: Dict[str, Any] = {
        "manifold": manifold.name,
        "complex_dimension": args.n,
        "real_dimension": 2 * args.n,
        "codimension": len(degrees),
        "total_degree": manifold.total_degree,
        "spin": manifold.spin,
        "c1_sign": manifold.c1_sign,
        "invariants": {
            "euler": inv.euler,
            "signature": inv.signature,
            "ahat": inv.ahat,
            "dirac_index": inv.dirac_index,
            "dirac_tangent_index": inv.dirac_tangent_index,
            "rs_index": inv.rs_index,
        },
    }
    if args.method in ("series", "both"):
        if len(degrees) != 1:
            raise NotApplicableError(
                "the series signature route applies to hypersurfaces only"
            )
        series_value = fermat_signature(args.n, degrees[0])
        results["signature_by_series"] = series_value
        if args.method == "both" and series_value != inv.signature:
            raise ConsistencyError(
                f"signature routes disagree on {manifold.name}: "
                f"characteristic classes give {inv.signature}, "
                f"series extraction gives {series_value}"
            )
    if args.hodge:
        results["hodge_table"] = [list(row) for row in hodge_numbers(manifold)]
    if args.kernel:
        report = ci_rs_kernel(manifold)
        kernel_block: Dict[str, Any] = {
            "index": report.index,
            "note": report.note,
        }
        if report.kernel_dim is not None:
            kernel_block["kernel_dimension"] = report.kernel_dim
        if report.index_from_hodge is not None:
            kernel_block["index_from_hodge"] = report.index_from_hodge
        if report.kernel_lower_bound is not None:
            kernel_block["kernel_lower_bound"] = report.kernel_lower_bound
            kernel_block["nontrivial_on_spinor_image"] = report.nontrivial_on_im_p
        if report.index_differs_from_dirac is not None:
            kernel_block["index_differs_from_dirac"] = report.index_differs_from_dirac
        if report.ke_positive_window is not None:
            kernel_block["ke_positive_window"] = report.ke_positive_window
        results["kernel"] = kernel_block
    inputs = {
        "n": args.n,
        "degrees": degrees,
        "method": args.method,
        "hodge": bool(args.hodge),
        "kernel": bool(args.kernel),
    }
    _emit("ci", inputs, results, [], args.json)
    return 0


def _topological_data(args: argparse.Namespace) -> Optional[TopologicalInput]:
    hodge = _parse_int_list(args.hodge) if args.hodge else None
    supplied = [
        value
        for value in (hodge, args.b2, args.b3, args.b4minus)
        if value is not None
    ]
    if not supplied:
        return None
    kind = args.kind
    if kind == "su":
        if hodge is None:
            raise InputError("su takes --hodge h^{1,1},...,h^{1,n-1}")
        return TopologicalInput(family="CY", n=args.parameter, hodge=tuple(hodge))
    if kind == "sp":
        if hodge is None:
            raise InputError("sp takes --hodge h^{1,1},...,h^{n,1}")
        return TopologicalInput(family="HK", n=args.parameter, hodge=tuple(hodge))
    if kind == "g2":
        return TopologicalInput(family="G2", b2=args.b2, b3=args.b3)
    if kind == "spin7":
        return TopologicalInput(
            family="SPIN7", b2=args.b2, b3=args.b3, b4_minus=args.b4minus
        )
    if kind == "sp1sp":
        return TopologicalInput(family="QK", n=args.parameter, b2=args.b2)
    raise InputError(f"no kernel formula is wired up for holonomy kind {kind!r}")


def _cmd_holonomy(args: argparse.Namespace) -> int:
    model = holonomy_model(args.kind, args.parameter)
    sigma = model.sigma_three_half()
    results: Dict[str, Any] = {
        "group": model.group,
        "real_dimension": model.real_dimension,
        "spin32_dimension": sigma.total.dimension,
        "summands": [
            _weight_entry(model.system, w, mult) for w, mult in sigma.total.sorted_terms()
        ],
        "parallel_spinors": model.parallel_spinor_dimension(),
        "parallel_rs_fields": model.parallel_rs_dimension(),
    }
    if sigma.graded:
        results["graded"] = {
            "plus": [
                _weight_entry(model.system, w, mult)
                for w, mult in sigma.plus.sorted_terms()
            ],
            "minus": [
                _weight_entry(model.system, w, mult)
                for w, mult in sigma.minus.sorted_terms()
            ],
        }
    if args.kind == "sp1sp":
        qk = qk_kernel_analysis(args.parameter)
        results["curvature_bounds"] = [
            {
                "summand": entry.summand.label(),
                "dimension": entry.dimension,
                "bound": entry.bound,
            }
            for entry in qk.entries
        ]
        results["survivors"] = list(qk.survivor_labels)
        results["kernel_formula"] = qk.kernel_formula
    data = _topological_data(args)
    if data is not None:
        block: Dict[str, Any] = {"kernel_dimension": kernel_dimension(data)}
        try:
            block["rs_index"] = family_index(data)
        except NotApplicableError as exc:
            block["rs_index"] = None
            block["index_note"] = str(exc)
        results["topology"] = block
    inputs = {
        "kind": args.kind,
        "parameter": args.parameter,
        "b2": args.b2,
        "b3": args.b3,
        "b4minus": args.b4minus,
        "hodge": args.hodge,
    }
    _emit("holonomy", inputs, results, [], args.json)
    return 0


def _cmd_rep(args: argparse.Namespace) -> int:
    system = _parse_system(args.system)
    lam = _parse_fraction_list(args.weight)
    width = len(system.delta)
    if len(lam) != width:
        raise InputError(
            f"{system.name} weights take {width} coordinates, got {len(lam)}"
        )
    results: Dict[str, Any] = {
        "system": system.name,
        "weight": [str(c) for c in lam],
        "dimension": weyl_dim(system, lam),
        "casimir": casimir(system, lam),
    }
    if args.multiplicities:
        mults = weight_multiplicities(system, lam)
        results["weights"] = [
            {"weight": [str(c) for c in w], "multiplicity": m}
            for w, m in sorted(mults.items())
        ]
    if args.tensor:
        mu = _parse_fraction_list(args.tensor)
        if len(mu) != width:
            raise InputError(
                f"{system.name} weights take {width} coordinates, got {len(mu)}"
            )
        product = tensor_decompose(system, lam, mu)
        results["tensor_with"] = [str(c) for c in mu]
        results["tensor_decomposition"] = [
            _weight_entry(system, w, mult) for w, mult in product.sorted_terms()
        ]
        results["tensor_dimension"] = product.dimension
    if args.point:
        point = _parse_fraction_list(args.point)
        if len(point) != width:
            raise InputError(
                f"{system.name} points take {width} coordinates, got {len(point)}"
            )
        moments = character_oracle(system, irreducible(system, lam), point)
        results["character_moments"] = [str(m) for m in moments]
    inputs = {
        "system": args.system,
        "weight": args.weight,
        "tensor": args.tensor,
        "multiplicities": bool(args.multiplicities),
        "point": args.point,
    }
    _emit("rep", inputs, results, [], args.json)
    return 0


def _cmd_sphere(args: argparse.Namespace) -> int:
    if args.upto is not None:
        if args.upto < 3:
            raise InputError("--upto must be at least 3")
        dims = list(range(3, args.upto + 1))
    else:
        dims = [args.n]
    checks = []
    for n in dims:
        chk = sphere_check(n)
        checks.append(
            {
                "n": chk.n,
                "realization": chk.realization,
                "casimir": chk.casimir_value,
                "positivity_threshold": chk.positivity_threshold,
                "margin": chk.margin,
            }
        )
    results = {"checks": checks, "all_margins_positive": True}
    _emit("sphere", {"n": args.n, "upto": args.upto}, results, [], args.json)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    if args.mode == "ci":
        left = _parse_ci_token(args.left)
        right = _parse_ci_token(args.right)
        left_inv = ci_invariants(left)
        right_inv = ci_invariants(right)
        index = product_rs_index(left.profile, right.profile)
        results: Dict[str, Any] = {
            "left": {
                "manifold": left.name,
                "rs_index": left_inv.rs_index,
                "dirac_index": left_inv.dirac_index,
            },
            "right": {
                "manifold": right.name,
                "rs_index": right_inv.rs_index,
                "dirac_index": right_inv.dirac_index,
            },
            "product_rs_index": index,
        }
    else:
        left_model = _parse_holonomy_token(args.left)
        right_model = _parse_holonomy_token(args.right)
        report = product_parallel_from_models(left_model, right_model)
        results = {
            "left": {
                "group": left_model.group,
                "parallel_spinors": left_model.parallel_spinor_dimension(),
                "parallel_rs_fields": left_model.parallel_rs_dimension(),
            },
            "right": {
                "group": right_model.group,
                "parallel_spinors": right_model.parallel_spinor_dimension(),
                "parallel_rs_fields": right_model.parallel_rs_dimension(),
            },
            "parallel_rs_fields": report.count,
            "proven": report.proven,
            "note": report.note,
        }
    inputs = {"mode": args.mode, "left": args.left, "right": args.right}
    _emit("product", inputs, results, [], args.json)
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    manifest = RegressionManifest.load()
    outcomes = manifest.run(id_filter=args.filter)
    if not outcomes:
        raise InputError(f"no manifest entries match {args.filter!r}")
    rows: List[Dict[str, Any]] = []
    citations: List[str] = []
    seen = set()
    failures = 0
    for outcome in outcomes:
        entry = outcome.entry
        row: Dict[str, Any] = {
            "id": entry.entry_id,
            "description": entry.description,
            "passed": outcome.passed,
            "expected": entry.expected,
            "actual": outcome.actual,
        }
        if outcome.error is not None:
            row["error"] = outcome.error
        rows.append(row)
        if entry.source not in seen:
            seen.add(entry.source)
            citations.append(entry.source)
        if not outcome.passed:
            failures += 1
    results = {"entries": rows, "total": len(rows), "failures": failures}
    if args.json:
        _emit("verify-paper", {"filter": args.filter}, results, citations, True)
    else:
        width = max(len(row["id"]) for row in rows)
        for row in rows:
            status = "PASS" if row["passed"] else "FAIL"
            line = f"{status}  {row['id']:<{width}}  {row['description']}"
            if not row["passed"]:
                detail = row.get("error") or (
                    f"expected {row['expected']!r}, got {row['actual']!r}"
                )
                line += f"  [{detail}]"
            print(line)
        print(f"{len(rows)} entries, {failures} failures")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rslab",
        description="Exact index and kernel computations for the spin-3/2 operator.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    ci = sub.add_parser("ci", help="complete-intersection invariants")
    ci.add_argument("-n", type=int, required=True, help="complex dimension")
    ci.add_argument(
        "-d",
        "--degree",
        action="append",
        required=True,
        help="hypersurface degree; repeat or comma-separate for higher codimension",
    )
    ci.add_argument(
        "--method",
        choices=("chern", "series", "both"),
        default="chern",
        help="signature route: characteristic classes, series extraction, or both",
    )
    ci.add_argument("--hodge", action="store_true", help="include the Hodge table")
    ci.add_argument("--kernel", action="store_true", help="include the kernel report")
    ci.add_argument("--json", action="store_true")
    ci.set_defaults(handler=_cmd_ci)

    hol = sub.add_parser("holonomy", help="spin-3/2 bundle of a holonomy group")
    hol.add_argument("kind", choices=HOLONOMY_KINDS)
    hol.add_argument("parameter", nargs="?", type=int, default=None)
    hol.add_argument("--b2", type=int, default=None)
    hol.add_argument("--b3", type=int, default=None)
    hol.add_argument("--b4minus", type=int, default=None)
    hol.add_argument(
        "--hodge",
        default=None,
        help="comma-separated Hodge inputs for the CY and HK kernel formulas",
    )
    hol.add_argument("--json", action="store_true")
    hol.set_defaults(handler=_cmd_holonomy)

    rep = sub.add_parser("rep", help="weight queries for a root system")
    rep.add_argument(
        "system",
        help="a<r>, b<r>, c<r>, d<r>, g2, or an x-joined product such as c1xc2",
    )
    rep.add_argument(
        "--weight",
        required=True,
        help="highest weight, comma-separated Euclidean coordinates "
        "(type a<r> uses r+1 coordinates)",
    )
    rep.add_argument("--tensor", default=None, help="second highest weight")
    rep.add_argument(
        "--multiplicities", action="store_true", help="list the full weight system"
    )
    rep.add_argument(
        "--point", default=None, help="evaluation point for character moments"
    )
    rep.add_argument("--json", action="store_true")
    rep.set_defaults(handler=_cmd_rep)

    sph = sub.add_parser("sphere", help="round-sphere Casimir positivity check")
    group = sph.add_mutually_exclusive_group(required=True)
    group.add_argument("-n", type=int, help="single dimension")
    group.add_argument("--upto", type=int, help="check every dimension from 3 to N")
    sph.add_argument("--json", action="store_true")
    sph.set_defaults(handler=_cmd_sphere)

    prod = sub.add_parser("product", help="Riemannian product bookkeeping")
    prod.add_argument("mode", choices=("ci", "holonomy"))
    prod.add_argument("left", help="n:d1,d2,... or a holonomy token like sp:2")
    prod.add_argument("right")
    prod.add_argument("--json", action="store_true")
    prod.set_defaults(handler=_cmd_product)

    verify = sub.add_parser("verify-paper", help="run the regression manifest")
    verify.add_argument("--filter", default=None, help="substring filter on entry ids")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (InputError, NotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
