"""Write CSV data for the planar cell pictures (no plotting dependency).

fig1_boundary.csv     boundary of the (p2, p3) cell for n = 3, 4, 5
fig2_elementary.csv   the same boundaries in (e2, e3) coordinates
fig3_transition.csv   the n = 3 and n = 4 boundaries, with the new arc marked
fig4_subsimplex.csv   n = 4 cell, its sub-simplex extension and the flows of its vertices
"""

import argparse
import csv
from fractions import Fraction
from pathlib import Path

from vandercell import cell, cell2d


def arc_rows(n, samples):
    for arc in cell2d.boundary_arcs(n):
        lo, hi = arc.domain()
        for i in range(samples + 1):
            t = lo + (hi - lo) * Fraction(i, samples)
            a, b = cell2d.arc_eval(arc, t)
            yield arc.label, t, a, b


def to_elementary(a, b):
    # on the simplex: e2 = (1 - p2)/2, e3 = 1/6 - p2/2 + p3/3
    return (1 - a) / 2, Fraction(1, 6) - a / 2 + b / 3


def write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([str(v) if isinstance(v, Fraction) else v for v in row])
    print(f"wrote {path}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--samples", type=int, default=40)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    S = args.samples

    write(args.out / "fig1_boundary.csv", ["n", "arc_id", "t", "p2", "p3"],
          ((n, *row) for n in (3, 4, 5) for row in arc_rows(n, S)))
    write(args.out / "fig2_elementary.csv", ["n", "arc_id", "t", "e2", "e3"],
          ((n, arc, t, *to_elementary(a, b)) for n in (3, 4, 5) for arc, t, a, b in arc_rows(n, S)))
    write(args.out / "fig3_transition.csv", ["n", "arc_id", "t", "p2", "p3", "new"],
          ((n, arc, t, a, b, int(n == 4 and arc == "L3")) for n in (3, 4) for arc, t, a, b in arc_rows(n, S)))

    rows = []
    for patch in cell.enumerate_patches(4, 3, cell.Source.SUBSIMPLEX):
        for sample in cell.patch_sample(patch, S):
            rows.append(("patch", patch.label(), sample.weights[0], *sample.point))
    for k in range(1, 5):
        vertex = (Fraction(1, k), Fraction(1, k * k))
        for i in range(S + 1):
            t = Fraction(i, S)
            rows.append(("flow", f"k={k}", t, *cell.scale_flow(vertex, t)))
    write(args.out / "fig4_subsimplex.csv", ["kind", "id", "t", "p2", "p3"], rows)


if __name__ == "__main__":
    main()
