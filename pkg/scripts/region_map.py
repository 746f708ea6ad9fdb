"""Map the (n, alpha) region where the uniqueness condition holds.

Writes one CSV row per grid cell and prints the critical exponent for
each n, so the boundary of the region is visible at a glance.

    python scripts/region_map.py --n-min 3 --n-max 20 --alpha-steps 60 \
        --csv region.csv
"""

import argparse
import sys

import numpy as np

from cocircular import NoBracket, alpha_star, condition_threshold, g_value, scan_region


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--alpha-min", type=float, default=0.1)
    ap.add_argument("--alpha-max", type=float, default=3.0)
    ap.add_argument("--alpha-steps", type=int, default=30)
    ap.add_argument("--csv", help="write grid cells here")
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args(argv)

    alphas = np.linspace(args.alpha_min, args.alpha_max, args.alpha_steps)
    cells = scan_region(range(args.n_min, args.n_max + 1), alphas,
                        max_workers=args.threads)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("n,alpha,g_value,threshold,holds\n")
            for c in cells:
                fh.write(f"{c.n},{c.alpha:.17g},{c.g_value:.17g},"
                         f"{c.threshold:.17g},{str(c.holds).lower()}\n")
        print(f"wrote {len(cells)} cells to {args.csv}")

    print(f"{'n':>3} {'alpha_star':>12} {'g(n,a*)':>10} {'holds up to':>12}")
    for n in range(args.n_min, args.n_max + 1):
        held = [c.alpha for c in cells if c.n == n and c.holds]
        edge = f"{max(held):.3f}" if held else "never"
        try:
            star = alpha_star(n)
            print(f"{n:>3} {star:>12.8f} {g_value(n, star):>10.6f} {edge:>12}")
        except NoBracket as exc:
            print(f"{n:>3} {'-':>12} {'-':>10} {edge:>12}  ({exc})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
