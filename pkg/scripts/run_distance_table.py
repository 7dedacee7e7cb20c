"""Print the distance grid and the limit table for one input file.

Accepts any of the JSON input kinds understood by the command line tool
(graded ideal, simplicial complex, projective point set, generator
matrix) and runs the delta and stabilize commands back to back.
"""

import argparse
import sys

from gmdkit import cli


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", help="path to a JSON input document")
    parser.add_argument("--t-max", type=int, default=4, dest="t_max")
    parser.add_argument("--ell-max", type=int, default=3, dest="ell_max")
    parser.add_argument("--convention", default="fixed-dim")
    parser.add_argument("--method", default=None)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--witnesses", action="store_true")
    args = parser.parse_args(argv)

    common = [
        args.input,
        "--t-max",
        str(args.t_max),
        "--ell-max",
        str(args.ell_max),
        "--jobs",
        str(args.jobs),
        "--format",
        "text",
    ]
    delta_argv = ["delta"] + common + ["--convention", args.convention]
    if args.method is not None:
        delta_argv += ["--method", args.method]
    if args.witnesses:
        delta_argv.append("--witnesses")

    print("== distance table ==")
    status = cli.main(delta_argv)
    if status != 0:
        return status
    print()
    print("== limit values and least degrees ==")
    return cli.main(["stabilize"] + common)


if __name__ == "__main__":
    sys.exit(main())
