"""Command-line front end.

    hecke-typer classify --spec D4 --e 3
    hecke-typer classify --spec B2 --q1 --char 2 --json
    hecke-typer poincare --spec A3 --form factored
    hecke-typer group-info --type F4 --primes 2,3
    hecke-typer verify sylow-oracle --max-order 200000

Exit codes: 0 success (and, for verify, every check passed), 1 internal
error or failed verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classifier as clf
from .coxeter import (
    CapExceeded,
    default_element_cap,
    generate_group,
    max_prime_power_orders,
    realize,
    sylow_is_cyclic,
)
from .polyring import q_integer
from .verify import SUITES, run_suite
from .weyl import SpecError, degrees, group_order, parse_type_spec, poincare_polynomial


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hecke-typer", description="Representation type of Hecke algebras of Weyl groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify a Hecke algebra or group algebra")
    p.add_argument("--spec", required=True, help='type string, e.g. "A4xB3" or "1"')
    p.add_argument("--char", type=int, default=0, help="characteristic l (0 or a prime)")
    q = p.add_mutually_exclusive_group(required=True)
    q.add_argument("--q1", action="store_true", help="q = 1 (group algebra)")
    q.add_argument("--e", type=int, help="multiplicative order of q")
    p.add_argument("--bq", choices=["equal-q", "one", "generic", "minus-power"],
                   help="second parameter Q for type-B factors")
    p.add_argument("--f", type=int, help="f with -Q = q^f (minus-power only)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("poincare", help="Poincare polynomial of a spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--form", choices=["text", "coeffs", "factored"], default="text")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("group-info", help="brute-force data for an irreducible type")
    p.add_argument("--type", required=True, dest="type_")
    p.add_argument("--primes", default="2,3,5,7", help="comma-separated primes")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a cross-check suite")
    p.add_argument("suite", help="one of: " + ", ".join([*SUITES, "all"]))
    p.add_argument("--max-order", type=int, help="skip enumerations of groups larger than this")
    p.add_argument("--include-e7", action="store_true", help="also enumerate W(E7) (slow)")
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--max-e", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def run_classify(args) -> int:
    spec = parse_type_spec(args.spec)
    param = clf.QIsOne() if args.q1 else clf.RootOfUnity(args.e)
    if args.f is not None and args.bq != "minus-power":
        raise clf.InvalidInput("--f requires --bq minus-power")
    bq = clf.parse_second_parameter(args.bq, args.f) if args.bq else None
    report = clf.classify(clf.ClassificationInput(spec, args.char, param, bq))
    if args.json:
        _emit_json(report.to_dict())
        return 0
    inp = report.input.to_dict()
    q = "q = 1" if args.q1 else f"e = {args.e}"
    extra = f", Q: {inp['B_Q']['kind']}" + (f" f={inp['B_Q']['f']}" if "f" in inp["B_Q"] else "") if "B_Q" in inp else ""
    print(f"spec {spec}, characteristic {args.char}, {q}{extra}")
    rows = [("factor", "status", "mult", "basis", "criterion")]
    for f in report.per_factor:
        mult = "-" if f.multiplicity is None else str(f.multiplicity)
        rows.append((str(f.factor), f.status.value, mult, f.basis.value, f.criterion))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[4])
    print(f"overall: {report.overall.value} ({report.overall_basis.value})")
    return 0


def run_poincare(args) -> int:
    spec = parse_type_spec(args.spec)
    p = poincare_polynomial(spec)
    degs = [d for t in spec for d in degrees(t)]
    if args.json:
        _emit_json({"spec": str(spec), "degrees": degs, "coefficients": p.to_json(), "order": group_order(spec)})
        return 0
    if args.form == "coeffs":
        print(" ".join(str(c) for c in p.coeffs))
    elif args.form == "factored":
        parts = [f"[{d}]" for d in degs if d > 1]
        print(" * ".join(parts) if parts else "1")
        for d in sorted(set(degs)):
            print(f"  [{d}] = {q_integer(d)}")
    else:
        print(p)
    return 0


def run_group_info(args) -> int:
    spec = parse_type_spec(args.type_)
    if len(spec) != 1:
        raise clf.InvalidInput("group-info takes a single irreducible type")
    (t,) = spec.factors
    try:
        primes = [int(x) for x in args.primes.split(",") if x.strip()]
    except ValueError:
        raise clf.InvalidInput(f"bad prime list {args.primes!r}") from None
    for l in primes:
        if not clf._is_prime(l):
            raise clf.InvalidInput(f"{l} is not prime")
    g = generate_group(realize(t))
    maxpow = max_prime_power_orders(g, primes)
    sylow = {}
    for l in primes:
        cyclic, w = sylow_is_cyclic(g, l)
        sylow[l] = {"cyclic": cyclic, "sylow_order": w.sylow_order, "max_element_order": w.element_order}
    info = {
        "type": str(t),
        "order": g.order,
        "length_histogram": [int(c) for c in g.layer_sizes],
        "max_element_order": int(g.orders.max()),
        "max_prime_power_order": {str(l): maxpow[l] for l in primes},
        "sylow": {str(l): sylow[l] for l in primes},
    }
    if args.json:
        _emit_json(info)
        return 0
    print(f"{t}: order {g.order}, max element order {info['max_element_order']}")
    print("lengths: " + " ".join(str(c) for c in info["length_histogram"]))
    for l in primes:
        s = sylow[l]
        verdict = "cyclic" if s["cyclic"] else "not cyclic"
        print(f"  l={l}: Sylow order {s['sylow_order']}, largest {l}-power element order "
              f"{s['max_element_order']} -> {verdict}")
    return 0


def run_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise clf.InvalidInput(f"unknown suite {args.suite!r}; choose from {', '.join([*SUITES, 'all'])}")
    limits = {"max_order": args.max_order if args.max_order is not None else default_element_cap(),
              "include_e7": args.include_e7, "max_rank": args.max_rank, "seed": args.seed}
    if args.max_e is not None:
        limits["max_e"] = args.max_e
    if args.max_n is not None:
        limits["max_n"] = args.max_n
    if args.samples is not None:
        limits["samples"] = args.samples
    checks = run_suite(args.suite, progress=lambda m: print(m, file=sys.stderr, flush=True), **limits)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if not failed else 1


COMMANDS = {
    "classify": run_classify,
    "poincare": run_poincare,
    "group-info": run_group_info,
    "verify": run_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, SpecError, clf.InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
