"""Write the bounds sweep as CSV: every d for the given (q, m) and range of n."""

import argparse
import sys

from subspacecodes import bounds


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--m", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("-o", "--output", default=None)
    args = parser.parse_args()

    reports = [
        bounds.bounds_report(args.q, m, n, d)
        for m in args.m
        for n in args.n
        for d in range(1, m * n + 1)
    ]
    text = bounds.bounds_table(reports)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"wrote {len(reports)} rows to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
