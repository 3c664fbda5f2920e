"""Run the half-degree check on a few power mean inequalities."""

import argparse
import time

from vandercell import copositivity, halfdegree
from vandercell.expr import parse_symmetric

EXAMPLES = [
    "p1*p3 - p2^2",
    "p2*p4 - p3^2",
    "p2",
    "p1^2 - p2",
    "p2^2 - p1*p3 + p4",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for src in EXAMPLES:
        f = parse_symmetric(src)
        start = time.perf_counter()
        v = halfdegree.check_power_mean_all_n(f, budget=args.budget, seed=args.seed)
        took = time.perf_counter() - start
        if isinstance(v, halfdegree.Counterexample):
            detail = f"n={v.realized_n[0]} point={tuple(str(x) for x in v.realized_point[0])} value={v.value}"
        else:
            detail = f"min found {v.min_found:.3g} in box radius {v.box_radius:g}"
        print(f"{src:<28} {v.kind.value:<24} {detail}  ({took:.1f}s)")

    # 2 p4 - 3 p3 p1 + p2 p1^2 passes every uniform test point but is negative at (4, 1, 1)
    r = copositivity.power_sum_testset_counterexample(max_k=1000)
    print(f"test values k <= 1000 nonnegative: {r.all_nonnegative}; value at {r.point}: {r.direct_value}")


if __name__ == "__main__":
    main()
