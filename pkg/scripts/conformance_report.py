"""Write the clause-table conformance report as JSON and print its summary."""

import argparse
import json

from ellsurf.conformance import build_report, summarize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=50)
    ap.add_argument("--sweep", type=int, default=200)
    ap.add_argument("--sweep-bound", type=int, default=30)
    ap.add_argument("--mode-bound", type=int, default=10**5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--output", default="conformance_report.json")
    args = ap.parse_args()
    rep = build_report(args.height, args.sweep, args.sweep_bound, args.mode_bound, args.seed)
    with open(args.output, "w") as fh:
        json.dump(rep, fh, indent=1, sort_keys=True)
    print(summarize(rep))
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
