import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from layered_rtm.errors import ConfigurationError
from layered_rtm.geometry import (
    PRESETS,
    Acquisition,
    InterfaceProfile,
    MediumConfig,
    ObstacleBoundary,
    SamplingGrid,
    Scene,
    build_region,
    chi,
    circle_points,
    cubic_bspline,
    preset_scene,
    smooth_cutoff,
)

SPLINE = preset_scene("ex1_spline_no_obstacle").profile


def test_bspline_values():
    assert cubic_bspline(0.0) == pytest.approx(2 / 3)
    assert cubic_bspline(1.0) == pytest.approx(1 / 6)
    assert cubic_bspline(2.0) == 0.0 and cubic_bspline(-2.0) == 0.0


def test_bspline_unit_mass():
    t = np.linspace(-2, 2, 40001)
    assert np.trapezoid(cubic_bspline(t), t) == pytest.approx(1.0, abs=1e-8)


def test_cutoff_values():
    assert smooth_cutoff(3.0) == 1.0
    assert smooth_cutoff(4.5) == pytest.approx(0.5, abs=1e-15)
    assert smooth_cutoff(6.0) == 0.0
    assert smooth_cutoff(-4.5) == pytest.approx(0.5)


def test_cutoff_monotone_on_blend():
    t = np.linspace(4.0, 5.0, 201)
    v = smooth_cutoff(t)
    assert np.all(np.diff(v) <= 0) and v[0] == 1.0 and v[-1] == 0.0


def test_medium_beta():
    m = MediumConfig(10.0, 5.0)
    assert m.beta == 75.0
    with pytest.raises(ConfigurationError):
        MediumConfig(0.0, 1.0)


def test_chi_flat_is_zero():
    pts = np.random.default_rng(0).uniform(-5, 5, (50, 2))
    assert np.all(chi(InterfaceProfile(), pts) == 0)


def test_chi_spline_examples():
    assert chi(SPLINE, (-2.0, 0.3)) == 1
    assert chi(SPLINE, (2.5, -0.2)) == -1
    assert SPLINE(-2.0) == pytest.approx(2 / 3)
    assert SPLINE(2.5) == pytest.approx(-0.4)


def test_chi_zero_on_boundaries():
    assert chi(SPLINE, (-2.0, 0.0)) == 0
    assert chi(SPLINE, (-2.0, 2 / 3)) == 0


@settings(max_examples=200, deadline=None)
@given(st.floats(-6, 6), st.floats(-1.5, 1.5))
def test_chi_odd_under_negation(x1, x2):
    assert chi(SPLINE.negated(), (x1, -x2)) == -chi(SPLINE, (x1, x2))


@pytest.mark.parametrize("name", ["ex1_spline_no_obstacle", "ex2_gauss_square", "ex3_piecewise_triangle"])
def test_profile_compact_support(name):
    prof = preset_scene(name).profile
    L = prof.support_radius
    t = np.concatenate([np.linspace(L + 1e-9, L + 10, 200), -np.linspace(L + 1e-9, L + 10, 200)])
    assert np.all(prof(t) == 0)


def test_preset_profiles_match_formulas():
    t = np.linspace(-6, 6, 97)
    assert np.allclose(SPLINE(t), cubic_bspline(2 * t + 4) - 0.6 * cubic_bspline(2 * t - 5), atol=1e-15)
    g = preset_scene("ex2_gauss_square").profile
    ref = (0.6 * np.exp(-6 * (t + 3) ** 2) + 0.5 * np.exp(-7 * t**2) + 0.5 * np.exp(-8 * (t - 3) ** 2)) * smooth_cutoff(t)
    assert np.allclose(g(t), ref, atol=1e-15)
    p = preset_scene("ex3_piecewise_triangle").profile
    ref = np.where(np.abs(t) <= 1, 0.2, np.where((np.abs(t) >= 3) & (np.abs(t) <= 4), 0.3, 0.0))
    assert np.array_equal(p(t), ref)


def test_preset_obstacles():
    c = preset_scene("ex1_flat_circle")
    assert c.profile.kind == "flat"
    th = np.linspace(0, 2 * np.pi, 13)
    assert np.allclose(c.obstacle.position(th), np.column_stack([0.5 * np.cos(th), -4 + 0.5 * np.sin(th)]))
    sq = preset_scene("ex2_gauss_square").obstacle
    ref = np.column_stack([3 + 0.3 * (np.cos(th) ** 3 + np.cos(th)), -6 + 0.3 * (np.sin(th) ** 3 + np.sin(th))])
    assert np.allclose(sq.position(th), ref)
    tri = preset_scene("ex3_piecewise_triangle").obstacle
    r = 0.5 + 0.1 * np.cos(3 * th)
    assert np.allclose(tri.position(th), np.column_stack([-3 + r * np.cos(th), -6 + r * np.sin(th)]))
    assert np.allclose(preset_scene("ex2_gauss_square_up4").obstacle.center, (3, -2))
    assert np.allclose(preset_scene("ex2_gauss_square_up5").obstacle.center, (3, -1))
    assert c.medium == MediumConfig(10.0, 5.0)


def test_unknown_preset():
    with pytest.raises(ConfigurationError):
        preset_scene("nope")


@pytest.mark.parametrize("name", PRESETS)
def test_preset_obstacle_below_interface(name):
    scene = preset_scene(name)
    scene.validate(build_region(scene.profile))
    if scene.obstacle is not None:
        pts = scene.obstacle.nodes()
        assert np.all(pts[:, 1] < np.minimum(scene.profile(pts[:, 0]), 0))


@pytest.mark.parametrize("kind,params", [("circle", (0, -4, 0.5)), ("rounded_square", (3, -6, 0.3)),
                                         ("rounded_triangle", (-3, -6, 0.5, 0.1))])
def test_obstacle_curve_derivatives(kind, params):
    ob = ObstacleBoundary(kind, params)
    th, h = np.linspace(0, 2 * np.pi, 17), 1e-5
    fd = (ob.position(th + h) - ob.position(th - h)) / (2 * h)
    assert np.allclose(fd, ob.derivative(th), atol=1e-8)
    fd2 = (ob.derivative(th + h) - ob.derivative(th - h)) / (2 * h)
    assert np.allclose(fd2, ob.second_derivative(th), atol=1e-7)
    assert np.allclose(ob.position(0.0), ob.position(2 * np.pi))
    # counterclockwise: positive signed area
    p = ob.nodes(256)
    area = 0.5 * np.sum(p[:, 0] * np.roll(p[:, 1], -1) - np.roll(p[:, 0], -1) * p[:, 1])
    assert area > 0
    assert ob.node_count % 2 == 0
    assert ob.contains(ob.center[None, :])[0]


def test_obstacle_touching_interface_rejected():
    scene = Scene(InterfaceProfile(), ObstacleBoundary("circle", (0, -0.2, 0.5)), MediumConfig())
    with pytest.raises(ConfigurationError):
        scene.validate()


def test_flat_region_is_empty():
    assert build_region(InterfaceProfile()).is_empty


def test_piecewise_region_exact():
    reg = build_region(preset_scene("ex3_piecewise_triangle").profile)
    assert np.all(reg.signs == 1)
    assert reg.signed_area == pytest.approx(1.0, abs=1e-12)
    x = reg.nodes
    inside = ((np.abs(x[:, 0]) <= 1) & (x[:, 1] < 0.2)) | ((np.abs(x[:, 0]) >= 3) & (np.abs(x[:, 0]) <= 4) & (x[:, 1] < 0.3))
    assert np.all(inside) and np.all(x[:, 1] > 0)


def test_spline_region_area():
    reg = build_region(SPLINE)
    assert reg.signed_area == pytest.approx(0.2, abs=2e-3)


def test_region_signs_match_chi():
    for name in ("ex1_spline_no_obstacle", "ex2_gauss_square", "ex3_piecewise_triangle"):
        reg = build_region(preset_scene(name).profile)
        assert np.array_equal(reg.signs, chi(preset_scene(name).profile, reg.nodes))


def test_region_area_converges_second_order():
    from scipy.integrate import quad

    prof = preset_scene("ex2_gauss_square").profile
    exact = quad(prof, -5, 5, points=[-4, -3, 0, 3, 4], epsabs=1e-14, limit=200)[0]
    errs = [abs(build_region(prof, res, subsegments=1).signed_area - exact) for res in (4, 8, 16)]
    assert errs[1] <= errs[0] / 3 and errs[2] <= errs[1] / 3


def test_spline_region_area_exact_with_knot_columns():
    assert build_region(SPLINE, 4).signed_area == pytest.approx(0.2, abs=1e-14)


def test_region_rejects_low_resolution():
    with pytest.raises(ConfigurationError):
        build_region(SPLINE, resolution=3)


def test_acquisition_points():
    acq = Acquisition(20.0, 16, 8)
    s = acq.source_points
    assert np.allclose(np.hypot(s[:, 0], s[:, 1]), 20.0)
    ang = np.unwrap(np.arctan2(s[:, 1], s[:, 0]))
    assert np.allclose(np.diff(ang), 2 * np.pi / 16)
    assert len(acq.receiver_points) == 8 and not acq.coincident
    assert np.allclose(circle_points(1.0, 4), [[1, 0], [0, 1], [-1, 0], [0, -1]])


def test_acquisition_contains_presets():
    acq = Acquisition(20.0, 8, 8)
    for name in PRESETS:
        scene = preset_scene(name)
        pts = scene.scatterer_points(region=build_region(scene.profile))
        assert np.max(np.hypot(pts[:, 0], pts[:, 1])) < acq.radius


def test_sampling_grid_layout():
    g = SamplingGrid()
    assert g.xs[0] == -5 and g.xs[-1] == 5 and g.ys[0] == -8.95 and g.ys[-1] == 1.05
    assert np.allclose(np.diff(g.xs), g.xs[1] - g.xs[0]) and np.allclose(np.diff(g.ys), g.ys[1] - g.ys[0])
    pts = g.points
    assert pts.shape == (10000, 2)
    assert np.allclose(pts[:100, 1], g.ys[0]) and np.allclose(pts[:100, 0], g.xs)
    assert not np.any(pts[:, 1] == 0)


def test_distance_to_scatterers():
    scene = preset_scene("ex1_flat_circle")
    d = scene.distance_to_scatterers([[0, -4], [0, -3.5], [0, -2.0], [3, -4]])
    assert d[0] == 0 and d[1] == pytest.approx(0, abs=1e-2)
    assert d[2] == pytest.approx(1.5, abs=1e-2) and d[3] == pytest.approx(2.5, abs=1e-2)
