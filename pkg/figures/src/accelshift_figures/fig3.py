"""Accelerated-to-static shift ratio as a function of distance.

Usage: accelshift-fig3 --in a1e23.csv --out fig3.png
(the sweep must have been run with --ratio)
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .common import accel_label, load_sweep, ratio_series, run, save_atomic


def draw(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", action="append", required=True)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(7, 5))
    for path in args.inputs:
        rows = load_sweep(path)
        pts = ratio_series(rows)
        ax.plot([z for z, _ in pts], [v for _, v in pts],
                label=accel_label(rows))
    ax.axhline(1.0, color="gray", linewidth=0.8, linestyle=":")
    ax.set_xscale("log")
    ax.set_xlabel("z (m)")
    ax.set_ylabel("accelerated / static shift ratio")
    ax.set_title("Ratio to the static atom")
    ax.legend()
    fig.tight_layout()
    save_atomic(fig, args.out)
    plt.close(fig)
    return 0


def main(argv=None):
    return run(draw, argv)


if __name__ == "__main__":
    raise SystemExit(main())
