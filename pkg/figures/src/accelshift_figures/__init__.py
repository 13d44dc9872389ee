"""Presentational figure recipes for accelshift sweep CSVs.

Each recipe is a script with ``--in`` / ``--out`` flags that reads one
or more ``accelshift scan`` CSV files and writes one image.  The CSV
header is a frozen contract; anything else is rejected.  No code here
calls into the accelshift library.
"""

__version__ = "0.1.0"
