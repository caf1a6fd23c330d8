"""
Command-line front end.

    python -m drinfeld_open.cli.main charpoly --input mod.json [--place "2:z+1"]
    python -m drinfeld_open.cli.main certify --input family.json --out report.json
    python -m drinfeld_open.cli.main closure --q 11 --n 2 --m 2 --cap 10
    python -m drinfeld_open.cli.main rootsys-verify
    python -m drinfeld_open.cli.main selftest [--quick]

Exit codes: 0 success, 1 failure, 2 usage or parse error, 3 cap exceeded.
"""
import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Tuple

from ..algebra.fields import GF
from ..algebra.matrices import Mat
from ..algebra.trunc import TruncRing
from ..config import RunConfig, load_config
from ..drinfeld.family import BadReduction, specialize
from ..drinfeld.frobenius import DEFAULT_METHOD, charpoly_frobenius, newton_check
from ..drinfeld.io import parse_place, read_module
from ..errors import ClosureIncompleteError, ConfigError, DrinfeldOpenError, ModuleFileError
from ..logs import Fore, RunLog, Style, console
from ..matgroups.closure import closure, level_one, sl_generators
from ..matgroups.orders import sl_order
from ..metrics.tracker import SweepTracker
from ..rootsys.orbits import verify_main_theorem
from ..rootsys.systems import CATALOG
from ..surjcert.certify import CertifyOptions, certify
from ..surjcert.criteria import trad_of
from ..surjcert.report import report_to_json, write_report
from .selftest import SelftestSettings, run_selftest

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _emit(data: Dict, out_path: Optional[str]) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _run_log(cfg: RunConfig, verbose: bool) -> RunLog:
    return RunLog(cfg.section("run").get("log_path"), verbose=verbose)


def _charpoly_settings(cfg: RunConfig) -> Tuple[str, Optional[int]]:
    """(method, torsion cap) from the charpoly section; a null cap is sized per module."""
    section = cfg.section("charpoly")
    cap = section.get("torsion_cap")
    return section.get("method") or DEFAULT_METHOD, None if cap is None else int(cap)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_charpoly(cfg: RunConfig, args) -> int:
    phi = read_module(cfg.input_path)
    if phi.is_finite:
        reduced, label = phi, f"{phi.m}:base"
    else:
        if not args.place:
            raise ModuleFileError("a family over F_q(s) needs --place k:expr", field="place")
        place = parse_place(args.place, phi.q)
        reduced, label = specialize(phi, place), place.label
        if isinstance(reduced, BadReduction):
            _emit(reduced.to_dict(), cfg.out_path)
            return EXIT_OK
    method, cap = _charpoly_settings(cfg)
    fd = charpoly_frobenius(reduced, method, cap, place=label)
    newton = newton_check(fd, strict=False)
    out = fd.to_dict()
    out["newton"] = newton.to_dict()
    out["trad"] = trad_of(fd).format()
    _emit(out, cfg.out_path)
    return EXIT_OK if newton.ok else EXIT_FAIL


def cmd_certify(cfg: RunConfig, args) -> int:
    phi = read_module(cfg.input_path)
    sweep = cfg.section("sweep")
    log = _run_log(cfg, args.verbose)
    tracker = SweepTracker()
    method, cap = _charpoly_settings(cfg)
    options = CertifyOptions(
        mode=cfg.mode,
        exponent=int(sweep.get("exponent", 1)),
        exclusions=tuple(sweep.get("exclusions") or ()),
        method=method,
        cap=cap,
        seed=cfg.seed,
        progress=bool(cfg.section("run").get("progress", False)),
    )
    log.event("certify.start", cfg.to_dict())
    report = certify(phi, cfg.prime_deg, cfg.place_deg, options, tracker, log)
    if cfg.out_path:
        write_report(report, cfg.out_path, cfg.to_dict())
    else:
        sys.stdout.write(report_to_json(report, cfg.to_dict()))
    log.event("certify.done", {"certified": report.certified, "sweep": tracker.get_summary()})
    if args.verbose:
        console("certify", f"{len(report.certified)} certified of {len(report.primes)} primes", ok=True)
    return EXIT_OK


def cmd_closure(cfg: RunConfig, args) -> int:
    R = TruncRing(GF(args.q), args.m)
    gens = sl_generators(R, args.n)
    if args.m > 1 and not args.no_level1:
        k = R.k
        X = Mat.diag(k, [k.one] + [k.zero] * (args.n - 2) + [k.neg(k.one)])
        gens.append(level_one(R, X))
    log = _run_log(cfg, args.verbose)
    H = closure(gens, R, cfg.cap, progress=bool(cfg.section("run").get("progress", False)))
    expected = sl_order(args.n, args.q, args.m)
    out = H.to_dict()
    out.update({"q": args.q, "n": args.n, "m": args.m, "expected_sl_order": expected,
                "full": H.complete and H.order == expected})
    if not H.complete:
        out["status"] = "cap_exceeded"
        log.event("closure.cap", out)
        _emit(out, cfg.out_path)
        return EXIT_CAP
    out["status"] = "complete"
    log.event("closure.done", out)
    _emit(out, cfg.out_path)
    return EXIT_OK


def cmd_rootsys(cfg: RunConfig, args) -> int:
    section = cfg.section("rootsys")
    labels = args.systems.split(",") if args.systems else CATALOG
    table = verify_main_theorem(labels, int(section.get("radius", 3)), int(section.get("orbit_cap", 10000)))
    _emit(table.to_dict(), cfg.out_path)
    if args.verbose:
        console("rootsys", f"{len(table.rows)} systems, ok={table.ok}", ok=table.ok)
    return EXIT_OK if table.ok else EXIT_FAIL


def cmd_selftest(cfg: RunConfig, args) -> int:
    log = _run_log(cfg, args.verbose)
    settings = SelftestSettings(
        crossval_degree=int(cfg.section("charpoly").get("crossval_max_degree", 4)),
        eigenrel_budget=int(cfg.section("eigenrel").get("budget", 500)),
    )
    results = run_selftest(cfg.seed, quick=args.quick, settings=settings)
    print(f"\n{'=' * 60}")
    print("  Self-test")
    print(f"{'=' * 60}")
    for r in results:
        mark = f"{Fore.GREEN}PASS" if r.ok else f"{Fore.RED}FAIL"
        print(f"  {mark}{Style.RESET_ALL}  {r.name:<28} {r.seconds:7.2f}s  {r.detail}")
        log.event("selftest.check", r.to_dict())
    passed = sum(r.ok for r in results)
    print(f"{'=' * 60}")
    print(f"  {passed}/{len(results)} checks passed")
    if cfg.out_path:
        _emit({"checks": [r.to_dict() for r in results], "passed": passed}, cfg.out_path)
    return EXIT_OK if passed == len(results) else EXIT_FAIL


COMMANDS = {
    "charpoly": cmd_charpoly,
    "certify": cmd_certify,
    "closure": cmd_closure,
    "rootsys-verify": cmd_rootsys,
    "selftest": cmd_selftest,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="YAML config layered over the defaults")
    common.add_argument("--out", type=str, default=None, help="Output path (stdout if omitted)")
    common.add_argument("--seed", type=int, default=None, help="Seed for every randomized internal")
    common.add_argument("--cap", type=int, default=None, help="BFS element cap")
    common.add_argument("--verbose", action="store_true", help="Console progress messages")

    parser = argparse.ArgumentParser(prog="drinfeld_open", description="Drinfeld module toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="Frobenius polynomial at one place")
    p.add_argument("--input", type=str, required=True, help="Module definition file")
    p.add_argument("--place", type=str, default=None, help='Place "k:expr" for families over F_q(s)')

    p = sub.add_parser("certify", parents=[common], help="Trace-ring certification report")
    p.add_argument("--input", type=str, required=True, help="Family definition file")
    p.add_argument("--place-deg", type=int, default=None, help="Place degree bound")
    p.add_argument("--prime-deg", type=int, default=None, help="Prime degree bound")
    p.add_argument("--mode", choices=("full", "squares"), default=None, help="Depth-2 criterion")

    p = sub.add_parser("closure", parents=[common], help="Closure of standard SL_n generators")
    p.add_argument("--q", type=int, required=True, help="Residue field size")
    p.add_argument("--n", type=int, default=2, help="Matrix size")
    p.add_argument("--m", type=int, default=1, help="Truncation length")
    p.add_argument("--no-level1", action="store_true", help="Omit the non-scalar level-1 generator")

    p = sub.add_parser("rootsys-verify", parents=[common], help="Weyl orbit classification check")
    p.add_argument("--systems", type=str, default=None, help="Comma-separated labels (default: catalog)")

    p = sub.add_parser("selftest", parents=[common], help="Run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="Skip the slow checks")
    return parser


def config_from_args(args) -> RunConfig:
    overrides = {
        "command": args.command,
        "input_path": getattr(args, "input", None),
        "out_path": args.out,
        "seed": args.seed,
        "cap": args.cap,
        "place_deg": getattr(args, "place_deg", None),
        "prime_deg": getattr(args, "prime_deg", None),
        "mode": getattr(args, "mode", None),
    }
    return load_config(args.config, overrides)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](cfg, args)
    except (ModuleFileError, ConfigError) as exc:
        print(f"{Fore.RED}[{args.command}] {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClosureIncompleteError as exc:
        print(f"{Fore.YELLOW}[{args.command}] cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"{Fore.RED}[{args.command}] {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DrinfeldOpenError as exc:
        print(f"{Fore.RED}[{args.command}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
