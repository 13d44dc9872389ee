"""Boundary-induced level shift of a uniformly accelerated atom.

Public surface:

* :mod:`accelshift.units` — natural-unit canonicalization (AtomSpec,
  Kinematics, conversions).
* :mod:`accelshift.structfun` — the f/g statistical-function amplitudes.
* :mod:`accelshift.shift` — vacuum-fluctuation / radiation-reaction
  assembly, static baseline, comparator ratios.
* :mod:`accelshift.asymptotic` — regime classification and closed-form
  asymptotes with deviation reporting.
* :mod:`accelshift.oracle` — slow independent cross-checks.
* :mod:`accelshift.cli` — the ``accelshift`` command-line entry point.
"""

__version__ = "0.1.0"

from .shift import shift_rr, shift_static, shift_total, shift_vf
from .structfun import QuadratureSettings, stat_functions
from .units import AtomSpec, Kinematics, to_natural, to_si

__all__ = [
    "__version__",
    "AtomSpec",
    "Kinematics",
    "QuadratureSettings",
    "shift_rr",
    "shift_static",
    "shift_total",
    "shift_vf",
    "stat_functions",
    "to_natural",
    "to_si",
]
