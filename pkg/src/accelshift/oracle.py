"""Independent brute-force cross-checks of the main numerical paths.

Three validators, deliberately slower and structurally different from the
production code:

* ``g_direct`` integrates the semi-infinite g kernels by plain truncated
  quadrature, period by period, with no geometric resummation;
* ``rr_epsilon_regulated`` evaluates the radiation-reaction contribution
  from the pre-residue time-domain integral, with the poles softened by
  an explicit +/- i*epsilon split of the hyperbolic kernel, and
  extrapolates epsilon -> 0; the result must match the closed-form
  amplitude that the residue evaluation produces;
* ``isotropic_reduction_check`` confirms that the general polarization
  contraction (cross term counted once) reproduces the known isotropic
  short-distance coefficients 1/(8 z^3) and a/(32 z^2).

Tolerances here are intentionally loose: these establish correctness of
form, not production accuracy.
"""

import cmath
import json
import math
import time
import warnings
from dataclasses import asdict, dataclass, field

from scipy import integrate

from .shift import shift_static, shift_total
from .structfun import (
    COMPONENTS,
    AccuracyError,
    QuadratureSettings,
    _kernel,
    f_component,
)
from .units import AtomSpec, Kinematics


class OracleInconclusive(RuntimeError):
    """The oracle could not produce a trustworthy verdict (never silent)."""


class DesignViolation(AssertionError):
    """A structural pre-build check failed; the build must not proceed."""


@dataclass(frozen=True)
class OracleConfig:
    epsilon: float = 4e-3        # regulator for the +/- i*eps kernels
    u_max: float = 0.0           # 0 = derive from rel_tol and omega0
    rel_tol: float = 1e-9
    max_periods: int = 20000     # budget guard for direct truncation
    deadline: float | None = None  # wall-clock limit in seconds, cooperative

    def started(self):
        return time.monotonic()

    def check_deadline(self, t0):
        if self.deadline is not None and time.monotonic() - t0 > self.deadline:
            raise TimeoutError("oracle evaluation exceeded its deadline")


@dataclass(frozen=True)
class OracleReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def as_json(self):
        return json.dumps({"name": self.name, "passed": self.passed,
                           "details": self.details}, indent=2, sort_keys=True)


def _u_max(config, omega0):
    if config.u_max > 0:
        return config.u_max
    # doubled horizon: the Laplace factor alone underestimates the tail
    # when the kernel is suppressed near u = 0 (the xz numerator)
    return 2.0 * math.log(1.0 / config.rel_tol) / omega0


def g_direct(comp, omega0, z, a, config=OracleConfig()):
    """g_comp by plain truncated quadrature, subdivided at period boundaries.

    No geometric resummation: every period up to u_max is integrated
    explicitly.  Refuses (AccuracyError) when the period count exceeds
    the budget, which happens for a/omega0 beyond ~1e3.
    """
    if a <= 0:
        raise ValueError("g_direct requires a > 0")
    t0 = config.started()
    u_max = _u_max(config, omega0)
    T = 2.0 * math.pi / a
    n_periods = int(math.ceil(u_max / T))
    if n_periods > config.max_periods:
        raise AccuracyError(
            f"direct truncation needs {n_periods} periods, budget is "
            f"{config.max_periods}", value=math.nan, err_est=math.inf,
            component=comp,
        )
    kern = _kernel(comp, z, a)

    def integrand(u):
        return kern(u) * math.exp(-omega0 * u)

    total = err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for k in range(n_periods):
            config.check_deadline(t0)
            lo = k * T
            hi = min((k + 1) * T, u_max) if k == n_periods - 1 else (k + 1) * T
            pts = [lo + s for s in (2 * z, 20 * z, T / 2, T - 20 * z, T - 2 * z)
                   if lo + s < hi]
            val, e = integrate.quad(integrand, lo, hi, points=pts or None,
                                    epsrel=config.rel_tol, limit=200)
            total += val
            err += e
    return (4.0 / math.pi) * total, (4.0 / math.pi) * err


# pre-residue numerators N(u) of the boundary two-point function in the
# atom's frame, per component (hyperbolic kernel, unregulated)
def _hyperbolic_numerator(comp, z, a):
    z2a2 = a * a * z * z
    if comp == "xx":
        return lambda u: math.sinh(0.5 * a * u) ** 2 + z2a2
    if comp == "yy":
        return lambda u: math.sinh(0.5 * a * u) ** 2 + z2a2 * math.cosh(a * u)
    if comp == "zz":
        return lambda u: -math.sinh(0.5 * a * u) ** 2 + z2a2 * math.cosh(a * u)
    if comp == "xz":
        return lambda u: 2.0 * a * z * math.sinh(0.5 * a * u) ** 2
    raise ValueError(f"unknown component {comp!r}")


def _rr_integral_at_eps(comp, omega0, z, a, eps, rel_tol):
    """The regulated time-domain rr integral at one regulator value."""
    num = _hyperbolic_numerator(comp, z, a)
    z2a2 = a * a * z * z

    def bracket(u):
        dm = cmath.sinh(0.5 * a * (u - 1j * eps)) ** 2 - z2a2
        dp = cmath.sinh(0.5 * a * (u + 1j * eps)) ** 2 - z2a2
        return num(u) * (1.0 / dm**3 - 1.0 / dp**3)

    def integrand(u):
        return 2.0 * math.cos(omega0 * u) * bracket(u)

    u_star = 2.0 * math.asinh(a * z) / a
    u_cut = u_star + max(30.0 / a, 5.0 / omega0)
    pts = sorted({max(p, 0.0) for p in
                  (u_star - 50 * eps, u_star - 5 * eps, u_star,
                   u_star + 5 * eps, u_star + 50 * eps)})
    pts = [p for p in pts if 0.0 < p < u_cut]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        re, re_err = integrate.quad(lambda u: integrand(u).real, 0.0, u_cut,
                                    points=pts, epsrel=rel_tol, limit=500)
        im, im_err = integrate.quad(lambda u: integrand(u).imag, 0.0, u_cut,
                                    points=pts, epsrel=rel_tol, limit=500)
    value = (1j * (3.0 * omega0 * a**4 / (128.0 * math.pi**2))
             * complex(re, im)).real
    err = (3.0 * omega0 * a**4 / (128.0 * math.pi**2)) * (re_err + im_err)
    return value, err


def rr_epsilon_regulated(comp, omega0, z, a, config=OracleConfig()):
    """Radiation-reaction amplitude from the pre-residue integral.

    Evaluates the regulated integral on a 3-point epsilon ladder
    (eps, eps/2, eps/4) and Richardson-extrapolates to epsilon -> 0 with
    a quadratic polynomial.  Returns (value, report) where the report
    records the ladder and convergence evidence; raises OracleInconclusive
    when the extrapolation does not demonstrably improve on the finest
    ladder point.
    """
    if a <= 0:
        raise ValueError("rr_epsilon_regulated requires a > 0")
    if config.epsilon * a >= 0.01:
        raise ValueError("epsilon too large: require epsilon * a < 0.01")
    t0 = config.started()
    ladder = [config.epsilon, config.epsilon / 2.0, config.epsilon / 4.0]
    values = []
    for eps in ladder:
        config.check_deadline(t0)
        v, _ = _rr_integral_at_eps(comp, omega0, z, a, eps, config.rel_tol)
        values.append(v)
    # Neville extrapolation of the quadratic through (eps_i, v_i) to eps=0
    e0, e1, e2 = ladder
    v0, v1, v2 = values
    p01 = (e0 * v1 - e1 * v0) / (e0 - e1)
    p12 = (e1 * v2 - e2 * v1) / (e1 - e2)
    extrap = (e0 * p12 - e2 * p01) / (e0 - e2)

    closed = (3.0 * omega0 / (128.0 * math.pi)) * f_component(comp, omega0, z, a)
    err_extrap = abs(extrap - closed)
    err_finest = abs(values[-1] - closed)
    report = {
        "component": comp,
        "epsilon_ladder": ladder,
        "ladder_values": values,
        "extrapolated": extrap,
        "closed_form": closed,
        "abs_err_extrapolated": err_extrap,
        "abs_err_finest": err_finest,
    }
    if not math.isfinite(extrap) or err_extrap > err_finest + 1e-30:
        raise OracleInconclusive(
            f"epsilon extrapolation did not converge for {comp}: {report}"
        )
    return extrap, report


def isotropic_reduction_check(omega0, z, a, settings=QuadratureSettings()):
    """Pin the cross-term multiplicity against the isotropic coefficients.

    In the low-acceleration short-distance regime the isotropic total is
    -(1/4 pi) (omega0/(8 z^3) - omega0 a/(32 z^2)) per alpha0.  The
    1/(8 z^3) piece is extracted from the static total and the a/(32 z^2)
    piece from the difference total(a) - total(0); with the xz cross term
    counted twice the second coefficient would come out a factor 2 off.
    Deviation beyond 2% fails the report; beyond 5% raises
    DesignViolation (build must stop).
    """
    atom = AtomSpec(omega0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
    total_a = shift_total(atom, Kinematics(a=a, z=z), settings).total_reduced
    total_0 = shift_static(atom, z, settings)
    four_pi = 4.0 * math.pi
    coef_static = -total_0 * four_pi / (omega0 / z**3)       # expect 1/8
    coef_accel = (total_a - total_0) * four_pi / (omega0 * a / z**2)  # 1/32
    dev_static = abs(coef_static - 0.125) / 0.125
    dev_accel = abs(coef_accel - 0.03125) / 0.03125
    details = {
        "omega0": omega0, "z": z, "a": a,
        "coef_static": coef_static, "expected_static": 0.125,
        "coef_accel": coef_accel, "expected_accel": 0.03125,
        "rel_dev_static": dev_static, "rel_dev_accel": dev_accel,
    }
    if dev_static > 0.05 or dev_accel > 0.05:
        raise DesignViolation(
            f"cross-term contraction check failed beyond 5%: {details}"
        )
    passed = dev_static <= 0.02 and dev_accel <= 0.02
    return OracleReport("isotropic_reduction_check", passed, details)


def analytic_limit_checks(settings=QuadratureSettings()):
    """Small-omega0*z pins of the static g integrals and the xz slope."""
    from .structfun import g_component, g_static_limit

    z = 1e-3
    w = 1.0
    checks = {}
    for comp, expect in (("xx", -1.0), ("yy", -1.0), ("zz", -2.0)):
        got = g_static_limit(comp, w, z, settings) * z**3
        checks[f"g_{comp}_static_z3"] = {"got": got, "expected": expect,
                                         "rel_dev": abs(got - expect) / abs(expect)}
    a = 1e-4 / z  # a*z = 1e-4
    gxz, _ = g_component("xz", w, z, a, settings)
    got = gxz / a * z**2
    checks["g_xz_over_a_z2"] = {"got": got, "expected": 1.0,
                                "rel_dev": abs(got - 1.0)}
    passed = all(c["rel_dev"] < 0.02 for c in checks.values())
    return OracleReport("analytic_limit_checks", passed, checks)


def dual_path_check(points=None, settings=QuadratureSettings(),
                    config=OracleConfig()):
    """Period-reduced vs direct-truncated g on a grid of (w, z, a) points."""
    from .structfun import g_component

    if points is None:
        points = [(1.0, 0.5, 2.0), (1.0, 0.05, 20.0), (1.0, 0.3, 2.0)]
    details = {}
    worst = 0.0
    for (w, z, a) in points:
        for comp in COMPONENTS:
            main, err_m = g_component(comp, w, z, a, settings)
            ref, err_r = g_direct(comp, w, z, a, config)
            rel = abs(main - ref) / max(abs(ref), 1e-300)
            worst = max(worst, rel)
            details[f"g_{comp}@w={w},z={z},a={a}"] = {
                "period_reduced": main, "direct": ref, "rel_dev": rel,
            }
    return OracleReport("dual_path_check", worst <= 1e-7,
                        {"worst_rel_dev": worst, "points": details})
