"""Compare the exact local classifier with a full census of small fibers.

A violation is a Constant verdict contradicted by the census.  A miss is a
Varies verdict where the census only ever sees one sign; those are expected
when the other sign needs a fiber beyond the height (for instance a prime
p | n larger than H).
"""

import argparse
import math
import random

from ellsurf.classify import SurfaceJ0, SurfaceJ1728, classify
from ellsurf.scanner import family_id, scan


def families(rng: random.Random, count: int, bound: int):
    while count:
        A, B = rng.randint(1, bound), rng.randint(1, bound)
        C = rng.choice((-1, 1)) * rng.randint(1, bound)
        if math.gcd(A, B) != 1:
            continue
        count -= 1
        yield SurfaceJ0(3 * A * A * C, B * B * C) if rng.random() < 0.5 else SurfaceJ1728(A, B, C)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--bound", type=int, default=60)
    ap.add_argument("--height", type=int, default=40)
    ap.add_argument("--method", choices=("local", "literal"), default="local")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    violations = misses = 0
    for s in families(random.Random(args.seed), args.count, args.bound):
        v = classify(s, args.method)
        rep = scan(s, args.height, workers=1)
        if v.constant and rep.signs != {v.sign}:
            violations += 1
            print(f"violation {family_id(s)}: {v.label}, census +{rep.wplus}/-{rep.wminus}")
        elif not v.constant and rep.constant_observed:
            misses += 1
            print(f"miss {family_id(s)}: {v.reason}; census +{rep.wplus}/-{rep.wminus}")
    print(f"{args.count} families at H={args.height}: {violations} violations, {misses} misses")


if __name__ == "__main__":
    main()
