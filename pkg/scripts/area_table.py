"""Area of the planar cell by the closed form and by Green's theorem."""

import argparse

from vandercell import cell2d


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--nodes", type=int, default=16)
    args = ap.parse_args()
    print(f"{'n':>6} {'exact':>28} {'closed form':>14} {'green':>14} {'|diff|':>9}")
    for n in range(3, args.max_n + 1):
        exact = cell2d.area_closed_form(cell2d.FiniteN(n))
        green = cell2d.area_green(cell2d.FiniteN(n), quad_nodes=args.nodes)
        print(f"{n:>6} {str(exact):>28} {float(exact):>14.10f} {green:>14.10f} {abs(green - float(exact)):>9.1e}")
    closed = cell2d.area_closed_form(cell2d.LIMIT)
    green = cell2d.area_green(cell2d.LIMIT, quad_nodes=args.nodes)
    print(f"{'inf':>6} {'(zeta(2) - zeta(3))/10':>28} {closed:>14.10f} {green:>14.10f} {abs(green - closed):>9.1e}")


if __name__ == "__main__":
    main()
