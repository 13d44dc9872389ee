"""Shared CSV loading and validation for the figure recipes.

The sweep CSV schema is duplicated here on purpose: the figure package
must not import the library that produces the files, so the frozen
header string *is* the interface.
"""

import csv
import os
import sys
import tempfile

# frozen sweep CSV contract (matches the accelshift scan header)
SWEEP_COLUMNS = (
    "z_si", "a_si", "omega0", "az", "w0z",
    "total_reduced", "vf_reduced", "rr_reduced", "bracket",
    "regime", "ratio_to_static", "err_est", "error",
)

# exact SI speed of light, needed only to express the Unruh-temperature
# reference line in the same reduced units as the CSV values
C_SI = 299_792_458.0


class SchemaError(ValueError):
    """The input file does not follow the sweep CSV contract."""


def load_sweep(path):
    """Read a sweep CSV, returning a list of row dicts with parsed floats.

    Raises SchemaError when the header deviates from the frozen contract
    or the file has no usable data rows.  Rows with a non-empty error
    column are dropped (they carry no values to plot).
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: file is empty") from None
        if tuple(header) != SWEEP_COLUMNS:
            raise SchemaError(
                f"{path}: header {header!r} does not match the sweep contract"
            )
        rows = []
        for raw in reader:
            if len(raw) != len(SWEEP_COLUMNS):
                raise SchemaError(f"{path}: ragged row {raw!r}")
            row = dict(zip(SWEEP_COLUMNS, raw))
            if row["error"]:
                continue
            for key in ("z_si", "a_si", "omega0", "az", "w0z",
                        "total_reduced", "vf_reduced", "rr_reduced",
                        "bracket", "err_est"):
                row[key] = float(row[key])
            rows.append(row)
    if not rows:
        raise SchemaError(f"{path}: no usable data rows")
    return rows


def ratio_series(rows):
    """(z, ratio) pairs from the ratio_to_static column, NA rows dropped."""
    pts = [(r["z_si"], float(r["ratio_to_static"]))
           for r in rows if r["ratio_to_static"] != "NA"]
    if not pts:
        raise SchemaError("no ratio_to_static values present "
                          "(was the sweep run with --ratio?)")
    return pts


def accel_label(rows):
    a = rows[0]["a_si"]
    return "static" if a == 0.0 else f"a = {a:.0e} m/s$^2$"


def save_atomic(fig, out_path):
    """Write the figure via a temp file so failures leave no partial file."""
    directory = os.path.dirname(os.path.abspath(out_path)) or "."
    suffix = os.path.splitext(out_path)[1] or ".png"
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=suffix)
    os.close(fd)
    try:
        fig.savefig(tmp)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(recipe, argv=None):
    """Execute a recipe's draw function with uniform error handling."""
    try:
        return recipe(argv)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
