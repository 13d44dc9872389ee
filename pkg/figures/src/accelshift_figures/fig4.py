"""Accelerated shift next to the Unruh-temperature thermal reference.

Overlays the swept total with the long-distance thermal-bath reference
line -(1/4 pi) T_U / (4 z^3), T_U = a/(2 pi) in natural units, computed
from the CSV's own a and z columns (a closed-form guide line, no library
evaluation).

Usage: accelshift-fig4 --in a1e23.csv --out fig4.png
"""

import argparse
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .common import C_SI, SchemaError, accel_label, load_sweep, run, save_atomic


def thermal_reference(row):
    a_nat = row["a_si"] / C_SI
    z_nat = row["z_si"] / C_SI
    t_unruh = a_nat / (2.0 * math.pi)
    return -(1.0 / (4.0 * math.pi)) * t_unruh / (4.0 * z_nat**3)


def draw(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", action="append", required=True)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(7, 5))
    for path in args.inputs:
        rows = load_sweep(path)
        if rows[0]["a_si"] == 0.0:
            raise SchemaError(f"{path}: thermal reference needs a > 0")
        zs = [r["z_si"] for r in rows]
        ax.plot(zs, [abs(r["total_reduced"]) for r in rows],
                label=f"accelerated, {accel_label(rows)}")
        ax.plot(zs, [abs(thermal_reference(r)) for r in rows],
                linestyle="dashed",
                label="thermal bath at $T_U = a/2\\pi$ (long-distance)")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("z (m)")
    ax.set_ylabel(r"|total shift| (reduced, $\propto \alpha_0$)")
    ax.set_title("Acceleration vs Unruh-temperature thermal bath")
    ax.legend()
    fig.tight_layout()
    save_atomic(fig, args.out)
    plt.close(fig)
    return 0


def main(argv=None):
    return run(draw, argv)


if __name__ == "__main__":
    raise SystemExit(main())
