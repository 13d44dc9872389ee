"""Natural-unit canonicalization of the input parameters.

Everything downstream works in natural units with c = hbar = 1, so all
quantities carry dimensions of powers of seconds: the proper acceleration
becomes a frequency (a_SI / c, in rad/s) and the wall distance becomes a
time (z_SI / c, in s).  SI values only ever appear at the CLI boundary.
"""

import math
from dataclasses import dataclass

C_SI = 299_792_458.0  # speed of light, m/s (exact)

POLARIZATION_SUM_TOL = 1e-9


class DomainError(ValueError):
    """Raised when a physical input is non-finite or out of range."""


def _require_finite(name, value):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class AtomSpec:
    """Two-level atom: transition frequency and polarization weights.

    omega0 is the angular transition frequency in rad/s (natural units).
    p_x, p_y, p_z are the fractions of the static scalar polarizability
    along each axis (alpha_i = p_i * alpha0); they must sum to 1.  The
    cross weight sqrt(p_x * p_z) multiplies the off-diagonal xz term that
    only exists for accelerated motion.
    """

    omega0: float
    p_x: float
    p_y: float
    p_z: float

    def __post_init__(self):
        _require_finite("omega0", self.omega0)
        if self.omega0 <= 0:
            raise DomainError(f"omega0 must be positive, got {self.omega0!r}")
        validate_polarization(self.p_x, self.p_y, self.p_z)

    @property
    def w_xz(self):
        return math.sqrt(self.p_x * self.p_z)

    @property
    def weights(self):
        """Contraction weights keyed by component, xz counted once."""
        return {"xx": self.p_x, "yy": self.p_y, "zz": self.p_z, "xz": self.w_xz}


@dataclass(frozen=True)
class Kinematics:
    """Proper acceleration and wall distance in natural units.

    a is a_SI / c (rad/s), z is z_SI / c (seconds).  a = 0 selects the
    static-atom paths everywhere.
    """

    a: float
    z: float

    def __post_init__(self):
        _require_finite("a", self.a)
        _require_finite("z", self.z)
        if self.a < 0:
            raise DomainError(f"a must be non-negative, got {self.a!r}")
        if self.z <= 0:
            raise DomainError(f"z must be positive, got {self.z!r}")

    @property
    def az(self):
        return self.a * self.z


def validate_polarization(p_x, p_y, p_z):
    """Check polarization weights and return (p_x, p_y, p_z, w_xz).

    Weights must be in [0, 1] and sum to 1 within POLARIZATION_SUM_TOL.
    """
    for name, p in (("p_x", p_x), ("p_y", p_y), ("p_z", p_z)):
        _require_finite(name, p)
        if p < 0 or p > 1:
            raise DomainError(f"{name} must lie in [0, 1], got {p!r}")
    s = p_x + p_y + p_z
    if abs(s - 1.0) > POLARIZATION_SUM_TOL:
        raise DomainError(f"polarization weights must sum to 1, got {s!r}")
    return p_x, p_y, p_z, math.sqrt(p_x * p_z)


def to_natural(a_si, z_si, omega0):
    """Convert SI acceleration (m/s^2) and distance (m) to natural units.

    omega0 is already a frequency and passes through unchanged.  Returns
    a Kinematics; the dimensionless groups a*z and omega0*z then follow
    from its fields.
    """
    for name, v in (("a_si", a_si), ("z_si", z_si), ("omega0", omega0)):
        _require_finite(name, v)
    if a_si < 0:
        raise DomainError(f"a_si must be non-negative, got {a_si!r}")
    if z_si <= 0:
        raise DomainError(f"z_si must be positive, got {z_si!r}")
    if omega0 <= 0:
        raise DomainError(f"omega0 must be positive, got {omega0!r}")
    return Kinematics(a=a_si / C_SI, z=z_si / C_SI)


def to_si(kin):
    """Inverse of to_natural: recover (a_si, z_si)."""
    return kin.a * C_SI, kin.z * C_SI
