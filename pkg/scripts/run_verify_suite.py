"""Run the full built-in verification battery and report a verdict.

Sweeps the bundled ring suite (brute force against the prime route plus
the monotonicity and stabilization laws), the complex suite (depth and
connectivity, face counts against Hilbert data, regularity bounds), and
the random point-set bridge (distance values against generalized
Hamming weights).  Exits nonzero if any check fails.
"""

import argparse
import sys

from gmdkit import cli


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--suite", choices=["rings", "complexes", "bridge", "all"], default="all"
    )
    parser.add_argument("--t-max", type=int, default=4, dest="t_max")
    parser.add_argument("--ell-max", type=int, default=3, dest="ell_max")
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--format", choices=["json", "csv", "text"], default="text")
    args = parser.parse_args(argv)

    return cli.main(
        [
            "verify",
            "--suite",
            args.suite,
            "--t-max",
            str(args.t_max),
            "--ell-max",
            str(args.ell_max),
            "--seed",
            str(args.seed),
            "--jobs",
            str(args.jobs),
            "--format",
            args.format,
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
