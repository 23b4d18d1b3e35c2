"""Print the three growth-report tables for a benchmark family size.

Usage: python scripts/run_reports.py [--n 1000]
"""

import argparse

from arp import cli


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1000, help="benchmark family size")
    args = parser.parse_args()
    for kind in ("counts", "bounds", "heuristic"):
        print("== %s ==" % kind)
        cli.main(["report", kind, "--n", str(args.n)])
        print()


if __name__ == "__main__":
    main()
