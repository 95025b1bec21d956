"""Command-line interface.

Commands:
  parse     structure-notation summary (dimension, step, center, ...)
  analyze   class flags, theta vectors, Ricci matrices, torsion types
  verify    run a verification suite and write its report
  generate  write a random 2-step problem document

Exit codes: 0 success / suite passed, 1 suite failed, 2 usage or syntax
errors (including unknown suites and odd dimensions), 3 Jacobi failure,
4 structure validation failure.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .algebra import JacobiError
from .classify import class_predicates
from .connections import CanonicalFamily, NIJENHUIS_TERM_COEFF_EXACT, torsion, torsion_type_report
from .documents import (
    DocumentError,
    dumps_json,
    load_problem,
    problem_from_dict,
    problem_to_dict,
)
from .notation import NotationError, parse_notation
from .ricci import (
    CURVATURE_TRACE_KAPPA,
    codifferential_pairing,
    ricci_via_theta,
    theta_trace,
)
from .scalars import DEFAULT_EPS, format_scalar, rat
from .structures import StructureError, random_compatible_structure
from .verify import SUITES, SampleSpec, random_two_step, run_suite

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_USAGE = 2
EXIT_JACOBI = 3
EXIT_VALIDATION = 4


def _parse_t_list(text: str, mode: str) -> list:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        out.append(float(chunk) if mode == "float" else rat(chunk))
    if not out:
        raise ValueError("empty t list")
    return out


def _fmt(value) -> object:
    return value if isinstance(value, float) else format_scalar(value)


def _write_output(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_parse(args) -> int:
    try:
        algebra = parse_notation(args.notation)
    except NotationError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except JacobiError as exc:
        print("not a Lie algebra: %s" % exc, file=sys.stderr)
        return EXIT_JACOBI
    step = algebra.nilpotency_step()
    summary = {
        "dim": algebra.dim,
        "nilpotency_step": step if step is not None else "not nilpotent",
        "lower_central_series": algebra.lower_central_series(),
        "unimodular": algebra.is_unimodular(),
        "abelian": algebra.is_abelian(),
        "two_step": algebra.is_two_step(),
        "center_dim": len(algebra.center()),
        "derived_dim": len(algebra.derived_algebra()),
    }
    if args.format == "json":
        _write_output(args, dumps_json(summary))
    else:
        lines = ["%-21s %s" % (k + ":", v) for k, v in summary.items()]
        _write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _load_analysis_input(args):
    mode = args.mode
    if args.input and args.notation:
        raise DocumentError("give either --input or --notation, not both")
    if args.input:
        return load_problem(args.input, mode=mode, eps=args.eps)
    if args.notation:
        return problem_from_dict(
            {"dim": len(parse_notation(args.notation).c),
             "notation": args.notation},
            mode=mode,
            eps=args.eps,
        )
    raise DocumentError("one of --input or --notation is required")


def build_analysis_report(algebra, structure, t_values, mode, eps) -> dict:
    check_eps = None if mode == "exact" else eps
    flags = class_predicates(algebra, structure, check_eps)
    q = codifferential_pairing(algebra, structure)
    family = CanonicalFamily(algebra, structure)
    theta_block = {}
    ricci_block = {}
    torsion_block = {}
    for t in t_values:
        key = _fmt(t) if not isinstance(t, float) else repr(t)
        theta_block[key] = [
            _fmt(v) for v in theta_trace(algebra, structure, t, q=q).values()
        ]
        ricci_block[key] = [
            [_fmt(v) for v in row]
            for row in ricci_via_theta(
                algebra, structure, t, q=q, eps=check_eps
            ).matrix()
        ]
        types = torsion_type_report(
            structure, torsion(algebra, family.connection(t))
        )
        torsion_block[key] = {name: _fmt(value) for name, value in types.items()}
    return {
        "input": problem_to_dict(algebra, structure,
                                 prefer_notation=algebra.is_exact()),
        "classes": flags,
        "theta": theta_block,
        "ricci": ricci_block,
        "torsion_types": torsion_block,
        "provenance": {
            "version": __version__,
            "mode": mode,
            "eps": eps,
            "kappa": str(CURVATURE_TRACE_KAPPA),
            "nijenhuis_term_coeff": format_scalar(NIJENHUIS_TERM_COEFF_EXACT),
            "t_values": [_fmt(t) for t in t_values],
        },
    }


def cmd_analyze(args) -> int:
    if args.eps <= 0:
        print("--eps must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        t_values = _parse_t_list(args.t, args.mode)
    except (ValueError, TypeError) as exc:
        print("bad --t list: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        algebra, structure = _load_analysis_input(args)
    except NotationError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except JacobiError as exc:
        print("not a Lie algebra: %s" % exc, file=sys.stderr)
        return EXIT_JACOBI
    except (DocumentError, StructureError, OSError) as exc:
        print("invalid problem: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    report = build_analysis_report(
        algebra, structure, t_values, args.mode, args.eps
    )
    if args.format == "json":
        _write_output(args, dumps_json(report))
    else:
        _write_output(args, _analysis_text(report))
    return EXIT_OK


def _analysis_text(report: dict) -> str:
    lines = []
    lines.append("classes: " + ", ".join(
        name for name, on in sorted(report["classes"].items()) if on
    ))
    for t, vec in sorted(report["theta"].items()):
        lines.append("theta[t=%s] = %s" % (t, vec))
    for t, mat in sorted(report["ricci"].items()):
        lines.append("ricci[t=%s]:" % t)
        for row in mat:
            lines.append("  " + "  ".join(str(x) for x in row))
    for t, types in sorted(report["torsion_types"].items()):
        lines.append("torsion[t=%s]: %s" % (
            t, ", ".join("%s=%s" % kv for kv in sorted(types.items()))
        ))
    prov = report["provenance"]
    lines.append("mode=%s eps=%s kappa=%s version=%s" % (
        prov["mode"], prov["eps"], prov["kappa"], prov["version"]
    ))
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.eps <= 0:
        print("--eps must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.suite != "all" and args.suite not in SUITES:
        print(
            "unknown suite %r (choose from %s, all)"
            % (args.suite, ", ".join(sorted(SUITES))),
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        spec = SampleSpec(
            dim=args.dim, count=args.count, seed=args.seed,
            mode=args.mode, eps=args.eps,
        )
    except ValueError as exc:
        print("bad parameters: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    all_passed = True
    for name in names:
        report = run_suite(name, spec)
        reports.append(report.to_dict())
        all_passed = all_passed and report.passed
        print(
            "%-12s %s  (%d samples, max residual %.3g)"
            % (name, "PASS" if report.passed else "FAIL",
               len(report.verdicts), report.max_residual)
        )
    payload = reports[0] if len(reports) == 1 else {
        "suites": reports, "passed": all_passed,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps_json(payload))
    elif args.format == "json":
        sys.stdout.write(dumps_json(payload))
    return EXIT_OK if all_passed else EXIT_SUITE_FAILED


def cmd_generate(args) -> int:
    if args.dim % 2 or args.dim < 4:
        print("dimension must be an even integer >= 4", file=sys.stderr)
        return EXIT_USAGE
    algebra = random_two_step(args.dim, args.seed)
    structure = random_compatible_structure(algebra, args.seed + 1)
    doc = problem_to_dict(algebra, structure)
    text = dumps_json(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liericci",
        description="Canonical Hermitian connections and Ricci forms on "
                    "Lie algebras",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse structure notation")
    p.add_argument("notation")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("analyze", help="analyze an almost Hermitian structure")
    p.add_argument("--input", help="problem document (JSON)")
    p.add_argument("--notation", help="inline structure notation")
    p.add_argument("--t", default="-1,0,1,2",
                   help="comma-separated parameter list (rationals allowed)")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random 2-step problem")
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
