"""Command line front end.

Subcommands: build, verify, decompose, roots, rho-check, closure.
Every command prints a JSON manifest on stdout and exits with 0 when
all checks pass, 1 on a verification failure and 2 on a usage or input
error.  Algebra files written by ``build`` embed a timing-free copy of
the manifest so rebuilds are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import serialize
from .bracket import (
    bracket,
    check_conjugation_equivariance,
    close_under_bracket,
    jacobi_check,
)
from .errors import MalformedInputError, StructuralFailureError
from .matrices import apply_J, flatten, is_sigma_submodule
from .quaternify import (
    check_root_spaces,
    check_weight_additivity,
    k_structure,
    quaternify,
    sigma_grading_check,
    verify_relations,
    verify_serre,
    worker_count,
)
from .realizations import build_named, membership
from .rootsystem import cartan_matrix, positive_roots
from .freerep import verify_h_independence, verify_ideal_kernel

USAGE_ERROR = 2
CHECK_ERROR = 1

VERIFY_CHECKS = (
    "relations",
    "serre",
    "jacobi",
    "structure",
    "conjugations",
    "grading",
    "k-structure",
    "weights",
)


@dataclass
class Manifest:
    command: str
    inputs: dict
    checks: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, instances: int, failures=()):
        self.checks.append(
            {
                "name": name,
                "passed": bool(passed),
                "instances": int(instances),
                "failures": [str(f) for f in list(failures)[:10]],
            }
        )

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self, with_timings: bool = True) -> dict:
        doc = {
            "artifact_version": serialize.ARTIFACT_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "checks": self.checks,
            "ok": self.ok,
        }
        if with_timings:
            # integer milliseconds: manifests carry no floating point
            doc["timings_ms"] = {
                k: int(round(v)) for k, v in self.timings_ms.items()
            }
        return doc


def _emit(manifest: Manifest, extra: dict | None = None) -> int:
    doc = manifest.to_json()
    if extra:
        doc.update(extra)
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0 if manifest.ok else CHECK_ERROR


def _usage_fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def cmd_build(args) -> int:
    manifest = Manifest(
        command="build",
        inputs={"type": args.type, "rank": args.rank, "out": args.out},
    )
    t0 = time.perf_counter()
    try:
        algebra = quaternify(args.type, args.rank)
    except ValueError as exc:
        return _usage_fail(str(exc))
    except StructuralFailureError as exc:
        manifest.add("build", False, 1, [str(exc)])
        return _emit(manifest)
    manifest.timings_ms.update(algebra.timings_ms)
    manifest.timings_ms["total"] = (time.perf_counter() - t0) * 1000.0
    manifest.add("build", True, 1)
    manifest.add("dim", algebra.dim > 0, algebra.dim)
    for name in ("root-spaces", "k-structure"):
        report = algebra.reports[name]
        instances = getattr(report, "spaces_checked", len(report.failures) or 1)
        manifest.add(f"built.{name}", report.ok, instances, report.failures)
    manifest.inputs["threads"] = worker_count()
    # the embedded copy omits timings and invocation details (output path,
    # thread cap) so identical parameters rebuild byte-identical files
    embedded = Manifest(
        command="build", inputs={"type": args.type, "rank": args.rank}
    )
    embedded.checks = manifest.checks
    serialize.write_json(
        args.out, serialize.algebra_to_json(algebra, embedded.to_json(with_timings=False))
    )
    return _emit(manifest, {"dim": algebra.dim, "dim_k": len(algebra.k_indices)})


def _load_algebra(path: str):
    try:
        data = serialize.read_json(path)
        return serialize.algebra_from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, MalformedInputError) as exc:
        raise MalformedInputError(f"cannot load algebra from {path}: {exc}") from exc


def _run_check(name: str, algebra, manifest: Manifest) -> None:
    if name == "relations":
        for report in verify_relations(algebra):
            manifest.add(
                f"relations.{report.family}",
                report.ok,
                report.instances_checked,
                report.failures,
            )
    elif name == "serre":
        report = verify_serre(algebra)
        manifest.add("serre", report.ok, report.instances_checked, report.failures)
    elif name == "jacobi":
        report = jacobi_check(algebra.constants)
        manifest.add("jacobi", report.ok, report.triples_checked, report.failures)
    elif name == "structure":
        failures = []
        checked = 0
        for i in range(algebra.dim):
            for j in range(i + 1, algebra.dim):
                checked += 1
                prod = bracket(algebra.basis[i], algebra.basis[j])
                coeffs = algebra.solver.express(flatten(prod))
                table = dict(algebra.constants.get(i, j))
                if coeffs is None:
                    failures.append((i, j, "outside-span"))
                    continue
                derived = {k: c for k, c in enumerate(coeffs) if c}
                if derived != table:
                    failures.append((i, j, "table-mismatch"))
        manifest.add("structure", not failures, checked, failures)
    elif name == "conjugations":
        report = check_conjugation_equivariance(algebra.basis)
        manifest.add("conjugations", report.ok, report.pairs_checked, report.failures)
    elif name == "grading":
        report = sigma_grading_check(algebra)
        manifest.add("grading", report.ok, report.instances_checked, report.failures)
    elif name == "k-structure":
        report = k_structure(algebra)
        manifest.add("k-structure", report.ok, len(report.checks), report.failures)
        manifest.checks[-1]["dim_k"] = report.dim_k
        manifest.checks[-1]["dim_hr"] = report.dim_hr
        manifest.checks[-1]["dim_hr_perp"] = report.dim_hr_perp
    elif name == "weights":
        spaces = check_root_spaces(algebra)
        manifest.add("weights.spaces", spaces.ok, spaces.spaces_checked, spaces.failures)
        additive = check_weight_additivity(algebra)
        manifest.add(
            "weights.additivity",
            additive.ok,
            additive.entries_checked,
            additive.failures,
        )
    else:
        raise ValueError(f"unknown check {name!r}")


def cmd_verify(args) -> int:
    checks = VERIFY_CHECKS if args.checks is None else tuple(args.checks.split(","))
    for name in checks:
        if name not in VERIFY_CHECKS:
            return _usage_fail(
                f"unknown check {name!r}; choose from {', '.join(VERIFY_CHECKS)}"
            )
    manifest = Manifest(
        command="verify", inputs={"in": args.in_path, "checks": list(checks)}
    )
    try:
        algebra = _load_algebra(args.in_path)
    except MalformedInputError as exc:
        return _usage_fail(str(exc))
    for name in checks:
        t0 = time.perf_counter()
        _run_check(name, algebra, manifest)
        manifest.timings_ms[name] = (time.perf_counter() - t0) * 1000.0
    return _emit(manifest)


def cmd_decompose(args) -> int:
    manifest = Manifest(command="decompose", inputs={"in": args.in_path})
    try:
        algebra = _load_algebra(args.in_path)
    except MalformedInputError as exc:
        return _usage_fail(str(exc))
    table = []
    for values, indices in sorted(algebra.weight_indices.items()):
        table.append(
            {
                "weight": list(values),
                "dim": len(indices),
                "indices": list(indices),
                "zero": not any(values),
            }
        )
    covered = sum(row["dim"] for row in table)
    manifest.add("decomposition-complete", covered == algebra.dim, covered)
    return _emit(
        manifest,
        {
            "dim": algebra.dim,
            "weights": table,
            "k_indices": list(algebra.k_indices),
            "hr_indices": list(algebra.hr_indices),
            "hr_perp_indices": list(algebra.hr_perp_indices),
        },
    )


def cmd_roots(args) -> int:
    try:
        cm = cartan_matrix(args.type, args.rank)
        roots = positive_roots(cm)
    except ValueError as exc:
        return _usage_fail(str(exc))
    manifest = Manifest(command="roots", inputs={"type": args.type, "rank": args.rank})
    manifest.add("count", True, len(roots))
    return _emit(
        manifest,
        {
            "cartan": [list(row) for row in cm.entries],
            "positive_roots": [list(r.coeffs) for r in roots],
        },
    )


def cmd_rho_check(args) -> int:
    try:
        cm = cartan_matrix(args.type, args.rank)
    except ValueError as exc:
        return _usage_fail(str(exc))
    if args.degree < 2:
        return _usage_fail("degree must be at least 2")
    manifest = Manifest(
        command="rho-check",
        inputs={"type": args.type, "rank": args.rank, "degree": args.degree},
    )
    t0 = time.perf_counter()
    for report in verify_ideal_kernel(cm, args.degree):
        manifest.add(
            f"family.{report.family}",
            report.ok,
            report.instances_checked,
            report.failures,
        )
    indep = verify_h_independence(cm, args.degree)
    manifest.add(
        "h-independence",
        indep.ok,
        indep.words_used,
        [] if indep.ok else [f"rank_h={indep.rank_h}", f"rank_jh={indep.rank_jh}"],
    )
    manifest.timings_ms["total"] = (time.perf_counter() - t0) * 1000.0
    return _emit(manifest)


def cmd_closure(args) -> int:
    n = args.n
    manifest = Manifest(command="closure", inputs={"preset": args.preset, "n": n})
    try:
        if args.preset == "sl":
            seed = build_named("sl_n_C", n).basis
            generators = list(seed) + [apply_J(m) for m in seed]
            result = close_under_bracket(generators)
            expected = 4 * n * n - 1
            manifest.add("closure-dim", result.dim == expected, result.dim)
            inside = all(membership("sl_n_H", n, m) for m in result.matrices)
            target = build_named("sl_n_H", n)
            covers = all(
                result.span.contains(flatten(m)) for m in target.basis
            )
            manifest.add("equals-sl-n-H", inside and covers, target.dim)
        elif args.preset in ("so-star", "sp"):
            name = "so_star_2n" if args.preset == "so-star" else "sp_n"
            algebra = build_named(name, n)
            generators = algebra.basis
            result = close_under_bracket(generators)
            manifest.add("bracket-closed", result.dim == algebra.dim, algebra.dim)
            manifest.add(
                "sigma-tau-invariant", is_sigma_submodule(generators), len(generators)
            )
        else:
            return _usage_fail(f"unknown preset {args.preset!r}")
    except ValueError as exc:
        return _usage_fail(str(exc))
    extra = {"dim": result.dim}
    if args.preset == "sl":
        extra["summary"] = (
            f"closure dim {result.dim}, equals sl({n},H): {manifest.ok}"
        )
    return _emit(manifest, extra)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatlie",
        description="exact quaternion Lie algebra construction and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct and verify an algebra")
    p_build.add_argument("--type", required=True)
    p_build.add_argument("--rank", type=int, required=True)
    p_build.add_argument("--out", required=True)
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="re-run checks on a built algebra file")
    p_verify.add_argument("--in", dest="in_path", required=True)
    p_verify.add_argument("--checks", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_dec = sub.add_parser("decompose", help="print the weight decomposition")
    p_dec.add_argument("--in", dest="in_path", required=True)
    p_dec.set_defaults(func=cmd_decompose)

    p_roots = sub.add_parser("roots", help="print the positive root system")
    p_roots.add_argument("--type", required=True)
    p_roots.add_argument("--rank", type=int, required=True)
    p_roots.set_defaults(func=cmd_roots)

    p_rho = sub.add_parser("rho-check", help="word-space relation family checks")
    p_rho.add_argument("--type", required=True)
    p_rho.add_argument("--rank", type=int, required=True)
    p_rho.add_argument("--degree", type=int, required=True)
    p_rho.set_defaults(func=cmd_rho_check)

    p_clo = sub.add_parser("closure", help="named-algebra closure presets")
    p_clo.add_argument("--preset", required=True, choices=("sl", "so-star", "sp"))
    p_clo.add_argument("--n", type=int, required=True)
    p_clo.set_defaults(func=cmd_closure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if args.command == "build" and args.type not in ("A", "B", "C", "D"):
        return _usage_fail(f"unknown type {args.type!r}; expected A, B, C or D")
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
