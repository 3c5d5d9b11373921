"""groupdet command line."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .census import CensusConfig, CensusConfigError, run_census
from .determinants import GROUPS, FormulaMismatch, cayley_table, checked_factored
from .group_ring import ElementParseError, format_element, parse_element
from .number_theory import factorize
from .number_theory import classify as classify_integer
from .selftest import DEFAULT_SEED, run_selftest
from .witness import NotAchievable, VerificationFailed, witness

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_INTERNAL, EXIT_UNKNOWN = 0, 1, 2, 3, 4


def _emit(args, human: str, data: dict):
    if args.json:
        print(json.dumps(data))
    else:
        print(human)


def _integer(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def cmd_det(args) -> int:
    spec = GROUPS[args.group]
    try:
        F = parse_element(args.element)
    except ElementParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if F.order != spec.order:
        print(f"error: {spec.name} needs {spec.order} coefficients, got {F.order}", file=sys.stderr)
        return EXIT_PARSE
    try:
        D, fac = checked_factored(F, spec)
    except FormulaMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    data = {"group": spec.name, "element": format_element(F), "determinant": D}
    lines = [str(D)]
    if args.factored and fac is not None:
        parts = {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(fac).items() if k != "product"}
        data["factored"] = parts
        lines = [f"D={D}"] + [f"{k}={v}" for k, v in parts.items()]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_factor(args) -> int:
    if args.n == 0:
        print("error: cannot factor 0", file=sys.stderr)
        return EXIT_PARSE
    fac = factorize(args.n, args.effort)
    _emit(args, f"{fac.n} = {fac}" + ("" if fac.complete else "  (incomplete)"),
          {"n": fac.n, "sign": fac.sign, "factors": [list(pe) for pe in fac.factors],
           "complete": fac.complete, "cofactor": fac.cofactor})
    return EXIT_OK if fac.complete else EXIT_UNKNOWN


def cmd_classify(args) -> int:
    v = classify_integer(args.n)
    _emit(args, f"{v.n}: {v.describe()}",
          {"n": v.n, "status": v.status, "achievable": v.achievable, "reason": v.reason.value, "p": v.p})
    if v.achievable is None:
        return EXIT_UNKNOWN
    return EXIT_OK if v.achievable else EXIT_NO


def cmd_witness(args) -> int:
    try:
        res = witness(args.n, verify=args.verify)
    except NotAchievable as exc:
        v = exc.verdict
        _emit(args, f"{v.n}: {v.describe()}",
              {"n": v.n, "status": v.status, "reason": v.reason.value})
        return EXIT_UNKNOWN if v.achievable is None else EXIT_NO
    except VerificationFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = format_element(res.element)
    human = f"{text}\nfamily: {res.family} " + " ".join(f"{k}={v}" for k, v in res.params)
    if args.verify:
        human += f"\nverified: SD16 determinant = {res.target}"
    _emit(args, human, {"n": res.target, "element": text, "family": res.family,
                        "params": dict(res.params), "verified": res.verified})
    return EXIT_OK


def cmd_census(args) -> int:
    random_mode = args.samples is not None
    config = CensusConfig(
        lo=args.lo, hi=args.hi,
        max_nonzero=None if random_mode else args.max_nonzero,
        samples=args.samples, seed=args.seed, value_bound=args.bound,
        workers=args.jobs, symmetry=args.symmetry,
    )
    try:
        report = run_census(config)
    except CensusConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FormulaMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    body = report.to_json() if args.json else report.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(f"# scanned {report.scanned}, {len(report.values)} values within bound, "
          f"{len(report.violations)} violations, {report.spot_checks} oracle spot checks, "
          f"{report.wall_time:.1f}s", file=sys.stderr)
    for v in report.violations[:10]:
        print(f"# VIOLATION {v.value}: {v.reason}", file=sys.stderr)
    return EXIT_INTERNAL if report.violations else EXIT_OK


def cmd_selftest(args) -> int:
    def show(res):
        if args.json:
            print(json.dumps({"suite": res.name, "ok": res.ok, "checked": res.checked,
                              "counterexample": res.counterexample}))
        else:
            print(f"{'PASS' if res.ok else 'FAIL'} {res.name} ({res.checked} checked)")
            if not res.ok:
                print(f"  counterexample: {res.counterexample}")
        sys.stdout.flush()

    results = run_selftest(args.seed, show)
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


def cmd_table(args) -> int:
    ct = cayley_table(GROUPS[args.group])
    half = ct.order // 2
    names = [("X^%d" % i if j == 0 else "YX^%d" % i) for j in range(2) for i in range(half)]
    if args.json:
        print(json.dumps({"group": args.group, "elements": names,
                          "table": [list(r) for r in ct.table], "inverse": list(ct.inv)}))
    else:
        for row in ct.table:
            print(" ".join(f"{x:2d}" for x in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="groupdet", description="Integer group determinants of SD16 and relatives.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", parents=[common], help="group determinant of an element")
    p.add_argument("--group", choices=sorted(GROUPS), default="sd16")
    p.add_argument("--factored", action="store_true", help="also print the factored form")
    p.add_argument("element", help='"a0,...,a7;b0,...,b7"')
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("factor", parents=[common], help="factor an integer")
    p.add_argument("n", type=_integer)
    p.add_argument("--effort", type=int, default=20)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("classify", parents=[common], help="is n an SD16 determinant?")
    p.add_argument("n", type=_integer)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[common], help="element with SD16 determinant n")
    p.add_argument("n", type=_integer)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("census", parents=[common], help="enumerate achieved determinants")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=1)
    p.add_argument("--max-nonzero", type=int, default=16)
    p.add_argument("--samples", type=int, help="random mode with this many samples")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bound", type=int, default=10**6, help="record values with |D| <= bound")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--symmetry", action="store_true", help="orbit reduction by validated symmetries")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("selftest", parents=[common], help="reduced-scale invariant sweeps")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("table", parents=[common], help="print a Cayley table")
    p.add_argument("--group", choices=sorted(GROUPS), default="sd16")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
