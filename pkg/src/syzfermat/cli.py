"""syzfermat command line.

Exit codes: 0 success, 1 fixture or recheck failure, 2 usage error,
3 the characteristic divides the curve degree.
"""

from __future__ import annotations

import argparse
import sys
import time

from .commands import RunConfig, cmd_check, cmd_delta, cmd_density, cmd_exceptional, cmd_scan, cmd_sophie
from .fermat import DEFAULT_COST_CEILING, NotSmoothError
from .fixtures import FIXTURES, run_fixtures
from .report import RunReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syzfermat", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the RunReport as JSON")
    common.add_argument("--quiet", action="store_true", help="suppress the text rendering")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common], help="minimal syzygy degree for X^a1, Y^a2, Z^a3")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--powers", type=_positive, nargs=3, required=True, metavar=("A1", "A2", "A3"))
    p.add_argument("--bound", type=_nonneg, help="multiplier-degree search bound")
    p.add_argument("--oracle-limit", type=_nonneg, default=40, help="run the brute-force oracle up to this exponent")
    p.add_argument("--recheck", action="store_true", help="re-verify witnesses after a JSON round trip")

    p = sub.add_parser("check", parents=[common], help="Frobenius pull-back scan for Syz(X^2,Y^2,Z^2)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--emax", type=_nonneg, default=3)
    p.add_argument("--cost-ceiling", type=_nonneg, default=DEFAULT_COST_CEILING, help="largest 2q computed directly")
    p.add_argument("--recheck", action="store_true")

    p = sub.add_parser("density", parents=[common], help="covered residues and density bound mod d")
    p.add_argument("--d", type=_positive, required=True)

    p = sub.add_parser("scan", parents=[common], help="primes per residue class mod d")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--p-max", type=_positive, default=10**6)

    p = sub.add_parser("sophie", parents=[common], help="Sophie Germain primes and their density bounds")
    p.add_argument("--limit", type=_positive, required=True)

    p = sub.add_parser("exceptional", parents=[common], help="degrees with no coprime residue in M")
    p.add_argument("--limit", type=_positive, required=True)

    p = sub.add_parser("verify-paper", parents=[common], help="run the worked-example regression fixtures")
    p.add_argument("--only", nargs="+", choices=sorted(FIXTURES), metavar="NAME")
    p.add_argument("--list", action="store_true", help="list fixture names and exit")
    return parser


def _fmt(value) -> str:
    if isinstance(value, dict) and "exact" in value:
        return f"{value['exact']} ({value['decimal']})"
    return str(value)


def render(report: RunReport) -> str:
    doc = report.to_dict()
    res = doc["results"]
    lines = [f"{doc['command']}: " + ", ".join(f"{k}={v}" for k, v in doc["inputs"].items())]
    if doc["command"] == "delta":
        w = res["witness"]["display"]
        lines.append(f"  delta = {res['degree']}  (k={res['split']['k']}, t={res['split']['t']}, branch {res['branch']})")
        lines.append(f"  twist degree = {res['twist_degree']}")
        lines.append(f"  witness F = {w['F']}, G = {w['G']}, H = {w['H']}")
        if "oracle_degree" in res:
            lines.append(f"  oracle = {res['oracle_degree']}  agreement = {res['agreement']}")
    elif doc["command"] == "check":
        lines.append(f"  status = {res['status']}  first e = {res['first_e']}")
        lines.append(f"  direct e = {res['direct_e']}  criterion e = {res['criterion_e']}")
        for lv in res["levels"]:
            extra = ""
            if lv["mode"] == "direct":
                extra = f" delta={lv['delta']} twist={lv['twist_degree']} destabilized={lv['destabilized']}"
            if "witness" in lv:
                w = lv["witness"]["display"]
                extra += f" witness=({w['F']}, {w['G']}, {w['H']})"
            lines.append(f"  e={lv['e']} q={lv['q']} q mod d={lv['q_mod_d']} criterion={lv['criterion']} [{lv['mode']}]{extra}")
        for m in res.get("remainder_one", []):
            lines.append(f"  remainder-one level ell={m['ell']} (q={m['q']}): det = {m['det']} mod p")
    elif doc["command"] == "density":
        lines.append(f"  M = {res['M']}")
        lines.append(f"  covered {res['covered_count']} of {res['phi_d']} (subgroup count {res['covered_count_via_subgroups']})")
        lines.append(f"  density bound = {_fmt(res['density_lower_bound'])}")
        for t in res["subgroups"]:
            lines.append(f"  <{t['generator']}> order {t['order']}: {t['generators']} generators, meets M at {t['in_M']}")
        lines.append(f"  uncovered = {res['uncovered']}")
    elif doc["command"] == "scan":
        lines.append(f"  primes counted = {res['total_primes']}, in covered classes = {res['covered_primes']}")
        lines.append(f"  empirical fraction = {res['empirical_fraction']}, bound = {_fmt(res['theoretical_bound'])}")
    elif doc["command"] == "sophie":
        lines.append(f"  h = {res['h']}")
        for ch in res["checks"]:
            lines.append(f"  h={ch['h']} d={ch['d']} covered={ch['covered_count']} density={_fmt(ch['density'])}")
    elif doc["command"] == "exceptional":
        lines.append(f"  exceptional degrees = {res['exceptional']}")
    elif doc["command"] == "verify-paper":
        for fx in res["fixtures"]:
            lines.append(f"  [{'PASS' if fx['ok'] else 'FAIL'}] {fx['name']}" + "".join(f"\n      {f}" for f in fx["failures"]))
        lines.append(f"  {res['passed']}/{res['total']} fixtures passed in {res['seconds']} s")
    if "recheck" in res:
        r = res["recheck"]
        lines.append(f"  recheck: {r['passed']}/{r['checked']} witnesses verified")
    for flag in doc["flags"]:
        lines.append(f"  ! {flag['marker']}: {flag['detail']}")
    return "\n".join(lines)


def _verify_paper(args) -> tuple[RunReport, int]:
    if args.list:
        print("\n".join(FIXTURES))
        return None, EXIT_OK
    start = time.perf_counter()
    results = run_fixtures(args.only)
    report = RunReport("verify-paper", {"only": args.only or []})
    report.results = {
        "fixtures": [{"name": r.name, "ok": r.ok, "failures": r.failures} for r in results],
        "passed": sum(r.ok for r in results),
        "total": len(results),
        "seconds": f"{time.perf_counter() - start:.2f}",
    }
    for r in results:
        for flag in r.flags:
            report.flag(flag["marker"], f"{r.name}: {flag['detail']}")
    return report, EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "delta":
            cfg = RunConfig(bound=args.bound, oracle_limit=args.oracle_limit, recheck=args.recheck)
            report = cmd_delta(args.d, args.p, tuple(args.powers), cfg)
        elif args.command == "check":
            cfg = RunConfig(cost_ceiling=args.cost_ceiling, recheck=args.recheck)
            report = cmd_check(args.d, args.p, args.emax, cfg)
        elif args.command == "density":
            report = cmd_density(args.d)
        elif args.command == "scan":
            report = cmd_scan(args.d, args.p_max)
        elif args.command == "sophie":
            report = cmd_sophie(args.limit)
        elif args.command == "exceptional":
            report = cmd_exceptional(args.limit)
        else:
            report, code = _verify_paper(args)
            if report is None:
                return code
    except NotSmoothError as exc:
        print(f"syzfermat: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ValueError as exc:
        print(f"syzfermat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report.results.get("recheck", {}).get("ok") is False:
        code = EXIT_FAIL
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    if not args.quiet:
        print(render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
