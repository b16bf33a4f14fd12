"""
Command-line interface for nctorus.

Every subcommand prints a JSON document to stdout, or writes it to the
file given with ``--json``. The exit status is 0 iff every executed check
passed.
"""

import json
import logging
import sys
from typing import Any

import numpy as np

from nctorus.category import HolomorphicCategory, StdObject
from nctorus.config import RunConfig
from nctorus.equivalence import FunctorContext, f_object, forbidden_pattern_scan
from nctorus.exceptions import NCTorusError, ZeroRankTargetError
from nctorus.fourier import automorphy_check, extension_nonsplit_check, fm_class
from nctorus.sl2_arith import SL2Mat, TorusParams
from nctorus.theta_engine import structure_constants
from nctorus.tools.export import export_constants
from nctorus.verification.suites import SUITES, run_suite

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

__all__ = ["build_parser", "main"]


def _pair(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def _describe(E: StdObject) -> dict[str, Any]:
    return {"g": str(E.g), "theta": E.theta, "z": _pair(E.z), "shift": E.shift}


def build_parser():
    """The argument parser; global flags precede the subcommand."""
    import argparse

    defaults = RunConfig()
    parser = argparse.ArgumentParser(
        prog="nctorus",
        description="Verify identities of standard holomorphic bundles on noncommutative tori",
    )
    parser.add_argument("--tol", type=float, default=defaults.tol, help="Certified tolerance (default: 1e-12)")
    parser.add_argument("--window", type=int, default=defaults.window, help="Brute-force window (default: 50)")
    parser.add_argument(
        "--hermite-dim", type=int, default=defaults.hermite_dim, help="Hermite truncation size (default: 256)"
    )
    parser.add_argument("--tau-re", type=float, default=defaults.tau.real, help="Real part of tau (default: 0)")
    parser.add_argument("--tau-im", type=float, default=defaults.tau.imag, help="Imaginary part of tau (default: -1)")
    parser.add_argument("--theta", type=float, default=defaults.theta, help="theta (default: 0.2)")
    parser.add_argument(
        "--theta-prime", type=float, default=defaults.theta_prime, help="theta' (default: 0.3)"
    )
    parser.add_argument("--seed", type=int, default=defaults.seed, help="Seed of randomized suites (default: 0)")
    parser.add_argument("--json", metavar="PATH", help="Write the report to PATH instead of stdout")

    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=(*SUITES, "all"))
    constants = commands.add_parser("constants", help="Structure constants c(g1; g2)")
    constants.add_argument("g1", type=SL2Mat.parse, help='Label as "a,b;c,d"')
    constants.add_argument("g2", type=SL2Mat.parse, help='Label as "a,b;c,d"')
    cohomology = commands.add_parser("cohomology", help="Cohomology of E_{n,m}")
    cohomology.add_argument("n", type=int)
    cohomology.add_argument("m", type=int)
    equivalence = commands.add_parser("equivalence", help="Images under F_{theta,theta'}")
    equivalence.add_argument("theta", type=float)
    equivalence.add_argument("theta_prime", metavar="theta-prime", type=float)
    fourier = commands.add_parser("fourier", help="Fourier-Mukai invariants of E_{n,m}")
    fourier.add_argument("n", type=int)
    fourier.add_argument("m", type=int)
    return parser


def _cohomology_report(n: int, m: int, config: RunConfig) -> tuple[dict[str, Any], bool]:
    cat = HolomorphicCategory(TorusParams(config.theta, config.tau), config.tol)
    E = StdObject.from_nm(n, m, config.theta)
    h0, h1 = cat.cohomology_dims(E)
    euler = cat.euler_char(E)
    report = {
        "object": _describe(E),
        "degree": E.degree,
        "rank": E.rk,
        "h0": h0,
        "h1": h1,
        "euler": euler,
    }
    return report, euler == E.degree


def _equivalence_report(theta: float, theta_prime: float, config: RunConfig) -> tuple[dict[str, Any], bool]:
    ctx = FunctorContext(theta, theta_prime, config.tau)
    images = []
    for n, m in ((1, 0), (1, 1), (1, 2), (2, 1), (-1, -3), (2, -3)):
        try:
            E = StdObject.from_nm(n, m, theta)
            image = f_object(E, ctx)
        except ZeroRankTargetError:
            logger.info(f"E_{{{n},{m}}} has rank 0 at theta'={theta_prime}")
            continue
        except NCTorusError as exc:
            logger.debug(f"skipping E_{{{n},{m}}}: {exc}")
            continue
        images.append({"source": _describe(E), "image": _describe(image)})
    report: dict[str, Any] = {"theta": theta, "theta_prime": theta_prime, "images": images}
    passed = True
    if ctx.ordered:
        rng = np.random.default_rng(config.seed)
        checked, forbidden = forbidden_pattern_scan(200, rng, ctx)
        report.update(checked=checked, forbidden=forbidden, seed=config.seed)
        passed = forbidden == 0
    return report, passed


def _fourier_report(n: int, m: int, config: RunConfig) -> tuple[dict[str, Any], bool]:
    E = StdObject.from_nm(n, m, config.theta)
    image = fm_class(E, config.tau)
    report: dict[str, Any] = {
        "object": _describe(E),
        "kind": image.kind,
        "rank": image.rank,
        "degree": image.degree,
        "shift": image.shift,
        "k_class": list(image.k_class),
    }
    if image.point is not None:
        report["point"] = _pair(image.point)
    passed = True
    if E.degree > 0 and E.mu > 0:
        report["automorphy"] = automorphy_check(E, 0.3 + 0.1j, tau=config.tau)
        report["nonsplit"] = extension_nonsplit_check(E, tau=config.tau)
        passed = report["automorphy"] and report["nonsplit"]
    return report, passed


def _emit(report: dict[str, Any], path: str | None) -> None:
    text = json.dumps(report, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as output:
            output.write(text)
        logger.info(f"Report saved to {path}")
    else:
        print(text)


def main(argv: list[str] | None = None) -> None:
    """Command-line interface for nctorus."""
    args = build_parser().parse_args(argv)

    try:
        config = RunConfig.from_namespace(args)
        if args.command == "verify":
            report = run_suite(args.suite, config)
            passed = all(check["status"] == "pass" for check in report["checks"])
        elif args.command == "constants":
            if args.json:
                export_constants(args.g1, args.g2, config, args.json)
                return
            table = structure_constants(
                args.g1, args.g2, TorusParams(config.theta, config.tau), 0, 0, config.tol
            )
            report, passed = table.to_dict(), True
        elif args.command == "cohomology":
            report, passed = _cohomology_report(args.n, args.m, config)
        elif args.command == "equivalence":
            report, passed = _equivalence_report(args.theta, args.theta_prime, config)
        else:
            report, passed = _fourier_report(args.n, args.m, config)
    except NCTorusError as exc:
        logger.error(f"{args.command} failed: {exc}")
        sys.exit(1)

    _emit(report, args.json)
    if not passed:
        logger.error(f"{args.command}: at least one check failed")
        sys.exit(1)


# Command-line interface
if __name__ == "__main__":
    main()
