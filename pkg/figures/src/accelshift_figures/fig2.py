"""Overlaid boundary-shift curves for several accelerations (short range).

Usage: accelshift-fig2 --in a0.csv --in a1e22.csv --in a1e23.csv --out fig2.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .common import accel_label, load_sweep, run, save_atomic

STYLES = ("solid", "dotted", "dashed", "dashdot")


def draw(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", action="append", required=True,
                        help="sweep CSV (repeat for overlaid curves)")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(7, 5))
    for path, style in zip(args.inputs, STYLES * 4):
        rows = load_sweep(path)
        ax.plot([r["z_si"] for r in rows],
                [r["total_reduced"] for r in rows],
                linestyle=style, label=accel_label(rows))
    ax.set_xscale("log")
    ax.set_xlabel("z (m)")
    ax.set_ylabel(r"total shift (reduced, $\propto \alpha_0$)")
    ax.set_title("Boundary-induced shift vs distance")
    ax.legend()
    fig.tight_layout()
    save_atomic(fig, args.out)
    plt.close(fig)
    return 0


def main(argv=None):
    return run(draw, argv)


if __name__ == "__main__":
    raise SystemExit(main())
