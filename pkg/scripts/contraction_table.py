"""Print the group-contraction sweep on both sides of x = 2.

    python scripts/contraction_table.py [--decades 8]

Shows eta growing like ln(2/eps)/2 while the angle shrinks and the
lower-left entry of the core settles at 2.
"""
import argparse
import math

from lorentz_optics.lens_system import ABOVE, BELOW, contraction_sweep

parser = argparse.ArgumentParser()
parser.add_argument("--decades", type=int, default=8)
args = parser.parse_args()

eps = [10.0**-k for k in range(1, args.decades + 1)]
print(f"{'side':>6} {'eps':>8} {'eta':>12} {'ln(2/eps)/2':>12} {'angle':>12} {'lower_left':>12}")
for side in (BELOW, ABOVE):
    for e, row in zip(eps, contraction_sweep(eps, side)):
        print(
            f"{side:>6} {e:8.0e} {row.eta:12.6f} {0.5 * math.log(2 / e):12.6f} "
            f"{row.angle:12.3e} {row.lower_left:12.8f}"
        )
