"""Command-line front end.

Subcommands: ``series`` (build a named q-expansion), ``analyze`` (validate a
representation file and report its weight constraints), ``verify`` (run a
named identity suite) and ``det`` (check a generators file against its
representation).

Exit codes: 0 pass, 1 check or validation failure, 2 usage error,
3 precision/singularity (raise the order and retry).
"""

from __future__ import annotations

import argparse
import json
import sys

from .detlab import (check_generator_determinant, det_zero,
                     exterior_product, generators_from_record,
                     weak_generating_set)
from .errors import PrecisionError, RepValidationError, VvmfError
from .replib import load_rep, multiplicities, t_is_semisimple, traces
from .scalarforms import named_form
from .suites import SUITE_NAMES, run_suite
from .weightcalc import enumerate_weight_multisets, weight_profile

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

MIN_ORDER = 8


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vvmf",
        description="Exact q-expansions and trace constraints for "
                    "vector-valued modular forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=128,
                       help="expansion order (trusted exponent bound), >= 8")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--output", metavar="PATH",
                       help="write the report here instead of stdout")

    p_series = sub.add_parser("series", help="emit a named scalar form")
    p_series.add_argument("name",
                          help="E4, E6, Delta, J, delta, or f:<n>")
    common(p_series)
    p_series.set_defaults(func=cmd_series)

    p_analyze = sub.add_parser("analyze", help="validate and analyze a representation file")
    p_analyze.add_argument("rep_path")
    common(p_analyze)
    p_analyze.add_argument("--enumerate", dest="enumerate_", action="store_true",
                           help="append trace-consistent weight multisets")
    p_analyze.add_argument("--kmin", type=int, default=0)
    p_analyze.add_argument("--kmax", type=int, default=11)
    p_analyze.add_argument("--sum", dest="sum_w", type=int, default=None,
                           help="restrict candidates to this total weight")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run a named identity suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    common(p_verify)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_det = sub.add_parser("det", help="check a generators file against a representation")
    p_det.add_argument("gens_path")
    p_det.add_argument("rep_path")
    common(p_det)
    p_det.set_defaults(func=cmd_det)

    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        body = text if text.endswith("\n") else text + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _check_order(order: int) -> None:
    if order < MIN_ORDER:
        raise UsageError(f"--order must be at least {MIN_ORDER}, got {order}")


class UsageError(Exception):
    pass


def cmd_series(args) -> int:
    _check_order(args.order)
    try:
        series = named_form(args.name, args.order)
    except KeyError:
        raise UsageError(
            f"unknown form name {args.name!r}; use E4, E6, Delta, J, delta "
            "or f:<n>") from None
    payload = {
        "schema_version": 1,
        "name": args.name,
        "order": args.order,
        "series": series.to_record(),
    }
    _emit(args, payload, str(series))
    return EXIT_OK


def cmd_analyze(args) -> int:
    _check_order(args.order)
    with open(args.rep_path, encoding="utf-8") as fh:
        record = json.load(fh)
    rep = load_rep(record)
    profile = weight_profile(rep)
    mult = multiplicities(rep)
    data = traces(rep)
    payload = {
        "schema_version": 1,
        "name": rep.name,
        "dimension": rep.dimension,
        "parity": rep.epsilon,
        "t_semisimple": t_is_semisimple(rep),
        "traces": {
            "S": data.s.to_record(),
            "U": data.u.to_record(),
            "U_inv": data.u_inv.to_record(),
        },
        "multiplicities": {
            "alpha": mult.alpha, "beta1": mult.beta1, "beta2": mult.beta2,
        },
        "weight_congruence_counts": {
            "k_odd": profile.count_k_odd,
            "k_mod3_1": profile.count_k_mod3_1,
            "k_mod3_2": profile.count_k_mod3_2,
        },
        "hilbert_values": {
            "at_minus_i": profile.at_minus_i.to_record(),
            "at_zeta": profile.at_zeta.to_record(),
            "at_zeta_inv": profile.at_zeta_inv.to_record(),
        },
    }
    lines = [
        f"representation {rep.name}: dimension {rep.dimension}, "
        f"parity {rep.epsilon}",
        f"traces: S = {data.s}, U = {data.u}, U^-1 = {data.u_inv}",
        f"multiplicities: alpha={mult.alpha} beta1={mult.beta1} "
        f"beta2={mult.beta2}",
        f"weight counts: odd={profile.count_k_odd} "
        f"mod3=1:{profile.count_k_mod3_1} mod3=2:{profile.count_k_mod3_2}",
        f"P(-i) = {profile.at_minus_i}, P(zeta) = {profile.at_zeta}, "
        f"P(zeta^-1) = {profile.at_zeta_inv}",
    ]
    if not payload["t_semisimple"]:
        lines.append("warning: rho(T) is not semisimple (logarithmic case); "
                     "the weight constraints may not apply")
    if args.enumerate_:
        candidates = enumerate_weight_multisets(
            rep.dimension, rep.epsilon, mult, args.kmin, args.kmax,
            sum_w=args.sum_w)
        payload["candidate_multisets"] = [
            {"epsilon": ws.epsilon, "ks": list(ws.ks),
             "weights": list(ws.weights)}
            for ws in candidates
        ]
        lines.append(f"candidate weight multisets "
                     f"(k in [{args.kmin}, {args.kmax}]"
                     + (f", total weight {args.sum_w}" if args.sum_w is not None else "")
                     + "):")
        for ws in candidates:
            lines.append(f"  k = {list(ws.ks)}  ->  weights {list(ws.weights)}")
        if not candidates:
            lines.append("  none")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_order(args.order)
    result = run_suite(args.suite, order=args.order, seed=args.seed)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.case_id}"
             + (f": {c.detail}" if not c.passed and c.detail else "")
             for c in result.cases]
    failed = [c for c in result.cases if not c.passed]
    lines.append(f"suite {result.suite}: {len(result.cases) - len(failed)}"
                 f"/{len(result.cases)} passed")
    if failed:
        first = failed[0]
        lines.append(f"first counterexample: {first.case_id} {first.detail}")
    _emit(args, result.to_record(), "\n".join(lines))
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_det(args) -> int:
    _check_order(args.order)
    with open(args.gens_path, encoding="utf-8") as fh:
        gens_record = json.load(fh)
    with open(args.rep_path, encoding="utf-8") as fh:
        rep_record = json.load(fh)
    rep = load_rep(rep_record)
    _, vectors = generators_from_record(gens_record)
    if len(vectors) != rep.dimension:
        raise UsageError(
            f"generators file has {len(vectors)} vectors but the "
            f"representation has dimension {rep.dimension}")
    weights = [v.weight for v in vectors]
    report = check_generator_determinant(vectors, weights, args.order)
    payload = {
        "schema_version": 1,
        "rep": rep.name,
        "dimension": rep.dimension,
        "generator_weights": weights,
        "determinant_identity": report.determinant_matches,
        "weight_sum": report.weight_sum,
        "weight_sum_nonneg": report.weight_sum_nonneg,
        "leading_coefficient": report.leading_coefficient.to_record(),
        "det_zero_match": None,
    }
    lines = [
        f"generators of {rep.name}: weights {weights}",
        f"exterior product = K * delta^{report.weight_sum} with "
        f"K = {report.leading_coefficient}: "
        f"{'ok' if report.determinant_matches else 'MISMATCH'}",
        f"weight sum {report.weight_sum} >= 0: "
        f"{'ok' if report.weight_sum_nonneg else 'VIOLATED'}",
    ]
    ok = report.passed
    if rep.epsilon == 0:
        if any((w - rep.epsilon) % 2 for w in weights):
            raise UsageError("generator weights must match the parity of the representation")
        ks = [(w - rep.epsilon) // 2 for w in weights]
        weak = weak_generating_set(vectors, ks, 0, args.order)
        ext = exterior_product(weak)
        match = det_zero(rep, args.order).agrees_with(ext.normalized)
        payload["det_zero_match"] = match
        lines.append(f"weight-0 determinant vs multiplicity formula: "
                     f"{'ok' if match else 'MISMATCH'}")
        ok = ok and match
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (RepValidationError, VvmfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
