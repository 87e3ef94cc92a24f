"""Random families: every Constant verdict scanned to one height, every Varies
verdict searched for both signs up to another."""

import argparse
import json
import random
import time

from ellsurf.scanner import random_j0_surfaces, random_j1728_surfaces, soundness_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200, help="families per j-invariant")
    ap.add_argument("--j0-bound", type=int, default=500)
    ap.add_argument("--j1728-bound", type=int, default=50)
    ap.add_argument("--constant-height", type=int, default=100)
    ap.add_argument("--varies-height", type=int, default=200)
    ap.add_argument("--method", choices=("local", "literal"), default="local")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    batches = {
        "j0": random_j0_surfaces(rng, args.count, args.j0_bound),
        "j1728": random_j1728_surfaces(rng, args.count, args.j1728_bound),
    }
    out = {}
    for name, surfaces in batches.items():
        t0 = time.perf_counter()
        res = soundness_sweep(surfaces, args.constant_height, args.varies_height, args.method, args.workers)
        out[name] = dict(res.to_dict(), seconds=round(time.perf_counter() - t0, 2))
        print(
            f"{name}: {res.constant} constant, {res.varies} varies, {len(res.violations)} violations, "
            f"completeness {res.completeness:.1%} ({out[name]['seconds']}s)"
        )
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
