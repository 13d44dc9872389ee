"""Assembly of the boundary-induced ground-state level shift.

The shift splits into a vacuum-fluctuation part and a radiation-reaction
part,

    vf    = -(3 w0 / 128 pi) * sum_c W_c [ (1 + nbar2) f_c - g_c ]
    rr    = +(3 w0 / 128 pi) * sum_c W_c f_c
    total = -(3 w0 / 128 pi) * sum_c W_c [ nbar2 f_c - g_c ]

where c runs over the components xx, yy, zz, xz with contraction weights
W = (p_x, p_y, p_z, sqrt(p_x p_z)) (the cross term counted once), and
nbar2 = 2/(exp(2 pi w0 / a) - 1).  All values are reported "reduced":
per unit static polarizability alpha0, with the prefactor folded in.
vf + rr = total is an exact algebraic identity and is verified on every
total evaluation.
"""

import math
from dataclasses import dataclass, field

from .structfun import (
    COMPONENTS,
    QuadratureSettings,
    f_component,
    g_static_limit,
    stat_functions,
    thermal_factor,
)
from .units import AtomSpec, Kinematics

IDENTITY_RTOL = 1e-10

# margin factor used for the thermal-comparator validity flag
_THERMAL_MARGIN = 10.0


class InternalConsistencyError(RuntimeError):
    """vf + rr disagreed with the directly contracted total."""


def _prefactor(omega0):
    return 3.0 * omega0 / (128.0 * math.pi)


@dataclass(frozen=True)
class ShiftBreakdown:
    """Reduced (per-alpha0) shift values with per-component contributions.

    ``bracket`` is the raw contraction sum_c W_c [nbar2 f_c - g_c] in
    units of (time)^-3, before the -(3 w0 / 128 pi) prefactor; it is the
    unit-free quantity downstream consumers can rescale themselves.
    """

    vf_reduced: float
    rr_reduced: float
    total_reduced: float
    bracket: float
    per_component: dict = field(default_factory=dict)
    err_est: float = 0.0
    unit: str = "alpha0 * s^-4 (reduced)"


@dataclass(frozen=True)
class ComparatorResult:
    ratio_to_static: float          # nan when indeterminate
    ratio_indeterminate: bool
    ratio_thermal_to_accel: float   # nan when not applicable
    thermal_asymptote_value: float
    thermal_valid: bool


def shift_vf(atom, kin, settings=QuadratureSettings()):
    """Vacuum-fluctuation part of the reduced shift."""
    sf = stat_functions(atom.omega0, kin.z, kin.a, settings)
    return _assemble(atom, sf).vf_reduced


def shift_rr(atom, kin, settings=QuadratureSettings()):
    """Radiation-reaction part of the reduced shift (closed form)."""
    pref = _prefactor(atom.omega0)
    return pref * sum(
        w * f_component(c, atom.omega0, kin.z, kin.a)
        for c, w in atom.weights.items()
    )


def _assemble(atom, sf):
    pref = _prefactor(atom.omega0)
    weights = atom.weights
    vf = rr = total = bracket = err = 0.0
    per_component = {}
    for c in COMPONENTS:
        w = weights[c]
        fc, gc = sf.f(c), sf.g(c)
        vf_c = -pref * w * ((1.0 + sf.nbar2) * fc - gc)
        rr_c = pref * w * fc
        vf += vf_c
        rr += rr_c
        bracket += w * (sf.nbar2 * fc - gc)
        err += pref * w * sf.tol_achieved.get(c, 0.0)
        per_component[c] = (vf_c, rr_c)
    total = -pref * bracket
    if abs((vf + rr) - total) > IDENTITY_RTOL * max(abs(total), abs(vf), abs(rr)):
        raise InternalConsistencyError(
            f"vf + rr = {vf + rr!r} but direct total = {total!r}"
        )
    return ShiftBreakdown(
        vf_reduced=vf, rr_reduced=rr, total_reduced=total,
        bracket=bracket, per_component=per_component, err_est=err,
    )


def shift_total(atom, kin, settings=QuadratureSettings()):
    """Full breakdown at one parameter point.

    The total is computed both as vf + rr and by the direct contraction;
    disagreement beyond IDENTITY_RTOL raises InternalConsistencyError.
    """
    sf = stat_functions(atom.omega0, kin.z, kin.a, settings)
    return _assemble(atom, sf)


def shift_static(atom, z, settings=QuadratureSettings()):
    """Reduced total shift of a static atom (a = 0) at distance z.

    The thermal factor vanishes, the f terms drop from the total, and
    only the static g integrals survive; g_xz is identically zero so the
    result is independent of the cross weight.
    """
    pref = _prefactor(atom.omega0)
    return pref * sum(
        w * g_static_limit(c, atom.omega0, z, settings)
        for c, w in atom.weights.items()
        if c != "xz"
    )


def thermal_asymptote_longdist(atom, z, temperature):
    """Long-distance low-temperature thermal-bath comparator.

    Reduced value -(1/4 pi) * T / (4 z^3), valid only for T << omega0 and
    z >> 1/T; the returned flag records whether both margins hold (with
    factor 10), the value is returned regardless.
    """
    if temperature < 0:
        raise ValueError("temperature must be non-negative")
    if temperature == 0.0:
        return 0.0, False
    value = -(1.0 / (4.0 * math.pi)) * temperature / (4.0 * z**3)
    valid = (atom.omega0 / temperature >= _THERMAL_MARGIN
             and temperature * z >= _THERMAL_MARGIN)
    return value, valid


def ratios(atom, kin, settings=QuadratureSettings()):
    """Accelerated-to-static and thermal-to-accelerated shift ratios.

    The static denominator oscillates in z at large omega0*z and passes
    through zeros; near a zero (|denominator| below 1e3 times its error
    estimate) the ratio is reported as indeterminate rather than a
    blow-up.  The thermal comparator uses the Unruh temperature a/(2 pi)
    and is only meaningful where its long-distance asymptote is valid.
    """
    accel = shift_total(atom, kin, settings)
    static = shift_static(atom, kin.z, settings)
    static_err = _static_err(atom, kin.z, settings)

    indeterminate = abs(static) < 1e3 * static_err
    ratio = math.nan if indeterminate else accel.total_reduced / static

    t_unruh = kin.a / (2.0 * math.pi)
    thermal_value, thermal_valid = thermal_asymptote_longdist(atom, kin.z, t_unruh)
    if thermal_valid and abs(accel.total_reduced) > 1e3 * accel.err_est:
        thermal_ratio = thermal_value / accel.total_reduced
    else:
        thermal_ratio = math.nan
    return ComparatorResult(
        ratio_to_static=ratio,
        ratio_indeterminate=indeterminate,
        ratio_thermal_to_accel=thermal_ratio,
        thermal_asymptote_value=thermal_value,
        thermal_valid=thermal_valid,
    )


def _static_err(atom, z, settings):
    sf = stat_functions(atom.omega0, z, 0.0, settings)
    pref = _prefactor(atom.omega0)
    return pref * sum(
        w * sf.tol_achieved.get(c, 0.0) for c, w in atom.weights.items()
    )
