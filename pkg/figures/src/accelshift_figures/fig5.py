"""Thermal-to-accelerated shift ratio for two (or more) accelerations.

For each input sweep, plots the ratio of the long-distance thermal-bath
reference at the Unruh temperature to the swept accelerated total.

Usage: accelshift-fig5 --in a1e22.csv --in a1e23.csv --out fig5.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .common import SchemaError, accel_label, load_sweep, run, save_atomic
from .fig4 import thermal_reference


def draw(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", action="append", required=True)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(7, 5))
    for path in args.inputs:
        rows = load_sweep(path)
        if rows[0]["a_si"] == 0.0:
            raise SchemaError(f"{path}: thermal comparison needs a > 0")
        pts = [(r["z_si"], thermal_reference(r) / r["total_reduced"])
               for r in rows if r["total_reduced"] != 0.0]
        ax.plot([z for z, _ in pts], [v for _, v in pts],
                label=accel_label(rows))
    ax.axhline(1.0, color="gray", linewidth=0.8, linestyle=":")
    ax.set_xscale("log")
    ax.set_xlabel("z (m)")
    ax.set_ylabel("thermal / accelerated shift ratio")
    ax.set_title("Thermal bath at $T_U$ vs acceleration")
    ax.legend()
    fig.tight_layout()
    save_atomic(fig, args.out)
    plt.close(fig)
    return 0


def main(argv=None):
    return run(draw, argv)


if __name__ == "__main__":
    raise SystemExit(main())
