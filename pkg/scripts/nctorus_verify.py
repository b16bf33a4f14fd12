#!/usr/bin/env python
"""
Command-line script to run the nctorus verification suites.
Prints the JSON report and returns a nonzero status if a check fails.
"""

import argparse
import json
import logging
import sys

from nctorus.config import RunConfig
from nctorus.exceptions import NCTorusError
from nctorus.verification.suites import SUITES, run_suite

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def main():
    """Run one verification suite, or all of them."""
    parser = argparse.ArgumentParser(description="Run nctorus verification suites")
    parser.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=(*SUITES, "all"),
        help="Suite to run (default: all)",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed of randomized suites (default: 0)")
    parser.add_argument("--theta", type=float, default=0.2, help="theta (default: 0.2)")

    args = parser.parse_args()

    logger.info(f"Running suite {args.suite} with seed {args.seed}")
    try:
        report = run_suite(args.suite, RunConfig(theta=args.theta, seed=args.seed))
    except NCTorusError as exc:
        logger.error(f"Verification failed: {exc}")
        return 1

    print(json.dumps(report, indent=2))
    failed = [check["id"] for check in report["checks"] if check["status"] != "pass"]
    if failed:
        logger.error(f"Failed checks: {', '.join(failed)}")
        return 1
    logger.info(f"All {len(report['checks'])} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
