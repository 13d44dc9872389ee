import math

import pytest

from accelshift.structfun import (
    COMPONENTS,
    QuadratureSettings,
    f_component,
    g_component,
    g_static_limit,
    phase,
    stat_functions,
    thermal_factor,
)

# Reference values computed independently with mpmath at 50 digits from
# the defining expressions (closed forms for f, resummed Laplace
# integrals for g) and frozen here.
F_REF_111 = {
    "xx": -2.4878092754141290,
    "yy": -3.4170440369671979,
    "zz": -2.4878092754141290,   # equals xx identically when a*z = 1
    "xz": -0.9292347615530688,
}
F_XX_STATIC_11 = -3.0670353632927906    # 3 cos 2 - 2 sin 2
G_STATIC_11 = {"xx": -0.69520638778187217, "zz": -0.87613089352315170}

G_REF = {
    # (omega0, z, a) -> {comp: value}
    (1.0, 0.3, 2.0): {"xx": -38.197001518806177, "yy": -28.524205383945442,
                      "zz": -55.393083536336372, "xz": 16.121326891434558},
    (1.0, 0.5, 2.0): {"xx": -8.3479626667317188, "yy": -4.3307780533547172,
                      "zz": -8.3479626667317188, "xz": 4.0171846133770016},
    (1.0, 0.05, 20.0): {"xx": -63272.558757553122, "yy": -18314.759808653823,
                        "zz": -63272.558757553122, "xz": 44957.798948899299},
    (2.0, 0.4, 5.0): {"xx": -17.318992539281645, "yy": -4.0081657647076319,
                      "zz": -7.3358724583511351, "xz": 6.6554133872870065},
}


class TestClosedForms:
    @pytest.mark.parametrize("comp", COMPONENTS)
    def test_frozen_values(self, comp):
        assert f_component(comp, 1.0, 1.0, 1.0) == pytest.approx(
            F_REF_111[comp], rel=1e-13)

    def test_static_limit(self):
        assert f_component("xx", 1.0, 1.0, 0.0) == pytest.approx(
            F_XX_STATIC_11, rel=1e-13)

    @pytest.mark.parametrize("wz", [0.01, 1.0, 100.0])
    def test_xx_equals_yy_static(self, wz):
        fx = f_component("xx", 1.0, wz, 0.0)
        fy = f_component("yy", 1.0, wz, 0.0)
        assert fx == pytest.approx(fy, rel=1e-12)

    def test_xz_vanishes_static(self):
        assert f_component("xz", 1.0, 0.7, 0.0) == 0.0

    def test_unknown_component(self):
        with pytest.raises(ValueError):
            f_component("xy", 1.0, 1.0, 1.0)

    @pytest.mark.parametrize("a", [1e-3, 1e-6, 1e-9])
    def test_continuity_in_a(self, a):
        static = f_component("xx", 1.0, 1.0, 0.0)
        assert f_component("xx", 1.0, 1.0, a) == pytest.approx(
            static, rel=5e-3 if a > 1e-4 else 1e-8)


class TestPhase:
    def test_frozen_reference(self):
        # mpmath: 2*asinh(1) = 1.7627471740390861
        assert phase(1.0, 1.0, 1.0) == pytest.approx(
            1.7627471740390861, rel=1e-15)

    @pytest.mark.parametrize("az", [1e-8, 1e-9, 1e-11, 1e-13])
    def test_branch_consistency(self, az):
        # series branch vs the asinh evaluation around the switchover
        z, a = 1.0, az
        series = 2.0 * z * (1.0 - az * az / 6.0 + 3.0 * az**4 / 40.0)
        direct = 2.0 * math.asinh(az) / a
        assert phase(1.0, z, a) == pytest.approx(series, rel=1e-13)
        assert phase(1.0, z, a) == pytest.approx(direct, rel=1e-13)

    def test_static(self):
        assert phase(3.0, 2.0, 0.0) == pytest.approx(12.0, rel=1e-15)


class TestLaplaceIntegrals:
    @pytest.mark.parametrize("point", sorted(G_REF))
    @pytest.mark.parametrize("comp", COMPONENTS)
    def test_frozen_values(self, point, comp):
        w, z, a = point
        val, err = g_component(comp, w, z, a)
        assert val == pytest.approx(G_REF[point][comp], rel=1e-8)
        assert err < 1e-6 * abs(val)

    @pytest.mark.parametrize("comp,ref", sorted(G_STATIC_11.items()))
    def test_static_frozen(self, comp, ref):
        assert g_static_limit(comp, 1.0, 1.0) == pytest.approx(ref, rel=1e-9)

    def test_static_yy_equals_xx(self):
        # cos(a u) -> 1 makes the yy and xx kernels coincide at a = 0
        gx = g_static_limit("xx", 1.0, 0.7)
        gy = g_static_limit("yy", 1.0, 0.7)
        assert gx == pytest.approx(gy, rel=1e-9)

    def test_static_xz_zero(self):
        assert g_static_limit("xz", 1.0, 1.0) == 0.0

    @pytest.mark.parametrize("wz", [0.1, 1.0, 10.0])
    def test_continuity_to_static(self, wz):
        z, a = wz, 1e-6
        for comp in ("xx", "yy", "zz"):
            val, _ = g_component(comp, 1.0, z, a)
            ref = g_static_limit(comp, 1.0, z)
            assert val == pytest.approx(ref, rel=1e-4, abs=1e-6)

    def test_small_a_branch_continuity(self):
        """Values agree across the period-reduction/direct-truncation switch."""
        w, z, a = 1.0, 0.5, 1e-2   # 2*pi*w/a = 628 > default threshold 500
        loose = QuadratureSettings(small_a_threshold=1e4)  # forces reduction
        for comp in COMPONENTS:
            v_direct, _ = g_component(comp, w, z, a)
            v_reduced, _ = g_component(comp, w, z, a, loose)
            assert v_direct == pytest.approx(v_reduced, rel=1e-8)

    def test_no_singularity_at_small_z(self):
        # denominator (sin^2(au/2)/a^2 + z^2)^3 is strictly positive
        val, err = g_component("xx", 1.0, 1e-4, 50.0)
        assert math.isfinite(val) and err < 1e-6 * abs(val)

    def test_requires_positive_a(self):
        with pytest.raises(ValueError):
            g_component("xx", 1.0, 1.0, 0.0)


class TestThermalFactor:
    def test_frozen_value(self):
        # x = 2*pi*omega0/a = 1: 2/(e - 1)
        assert thermal_factor(1.0, 2.0 * math.pi) == pytest.approx(
            1.1639534137386528, rel=1e-15)

    def test_static(self):
        assert thermal_factor(1.0, 0.0) == 0.0

    def test_underflow_branch(self):
        val = thermal_factor(1.0, 2.0 * math.pi / 705.0)
        assert 0.0 < val < 1e-300


class TestSettings:
    def test_rejects_bad_tolerances(self):
        with pytest.raises(ValueError):
            QuadratureSettings(rel_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureSettings(abs_tol=-1.0)
        with pytest.raises(ValueError):
            QuadratureSettings(max_subdivisions=10)


def test_stat_functions_bundle():
    sf = stat_functions(1.0, 0.5, 2.0)
    assert sf.f("xx") == f_component("xx", 1.0, 0.5, 2.0)
    assert sf.g("yy") == pytest.approx(G_REF[(1.0, 0.5, 2.0)]["yy"], rel=1e-8)
    assert sf.nbar2 == pytest.approx(thermal_factor(1.0, 2.0))
    assert set(sf.tol_achieved) == set(COMPONENTS)


def test_stat_functions_static_bundle():
    sf = stat_functions(1.0, 1.0, 0.0)
    assert sf.g_xz == 0.0
    assert sf.nbar2 == 0.0
    assert sf.g_xx == pytest.approx(G_STATIC_11["xx"], rel=1e-9)
