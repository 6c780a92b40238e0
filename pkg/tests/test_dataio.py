import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from layered_rtm import dataio
from layered_rtm.errors import ConfigurationError, DegenerateRangeError, FormatError
from layered_rtm.forward import ScatteringDataset
from layered_rtm.geometry import Acquisition, MediumConfig, SamplingGrid


def test_empty_config_with_preset_gives_defaults():
    cfg = dataio.parse_config("", preset="ex1_flat_circle")
    assert cfg.scene.medium == MediumConfig(10.0, 5.0)
    assert (cfg.acquisition.radius, cfg.acquisition.n_sources, cfg.acquisition.n_receivers) == (100.0, 1024, 1024)
    assert cfg.grid == SamplingGrid()
    assert cfg.noise_tau == 0.0 and cfg.seed == 0


def test_desk_profile_and_explicit_override():
    cfg = dataio.parse_config("acquisition.ns = 64\n", preset="ex1_flat_circle", profile=dataio.DESK_PROFILE)
    assert cfg.acquisition.radius == 20.0
    assert cfg.acquisition.n_sources == 64 and cfg.acquisition.n_receivers == 128


def test_beta_from_wavenumbers():
    cfg = dataio.parse_config("medium.kappa1 = 10\nmedium.kappa2 = 5  # defaults\n", preset="ex3_piecewise_triangle")
    assert cfg.scene.medium.beta == 75.0


def test_config_errors():
    with pytest.raises(ConfigurationError, match="medium.kappa3"):
        dataio.parse_config("medium.kappa3 = 2\n", preset="ex1_flat_circle")
    with pytest.raises(ConfigurationError, match="line 3"):
        dataio.parse_config("# comment\nseed = 4\nmedium.kappa1 = ten\n", preset="ex1_flat_circle")
    with pytest.raises(ConfigurationError):
        dataio.parse_config("seed = 4\n")
    with pytest.raises(ConfigurationError):
        dataio.parse_config("garbage line\n", preset="ex1_flat_circle")
    with pytest.raises(ConfigurationError):
        dataio.parse_config("", preset="ex9")


def test_config_from_keys_only():
    text = "interface.kind = flat\nobstacle.kind = circle\nobstacle.params = 0, -4, 1\n"
    cfg = dataio.parse_config(text)
    assert cfg.scene.obstacle.kind == "circle"
    assert cfg.scene.obstacle.params == (0.0, -4.0, 1.0)


@pytest.mark.parametrize("name", ["ex1_flat_circle", "ex1_spline_no_obstacle", "ex2_gauss_square", "ex3_piecewise_triangle"])
def test_config_round_trip(name):
    cfg = dataio.parse_config("noise.tau = 0.1\nseed = 7\nmedium.kappa1 = 10.300000000000001\n", preset=name)
    again = dataio.parse_config(dataio.format_config(cfg))
    assert again == cfg


def _random_dataset(seed, nr=4, ns=4):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((nr, ns)) + 1j * rng.standard_normal((nr, ns))
    v *= 10.0 ** rng.uniform(-12, 3, (nr, ns))
    return ScatteringDataset(v, Acquisition(20.0, ns, nr), MediumConfig(10.0, 5.0), 0.1, 7)


def test_dataset_round_trip_exact(tmp_path):
    d = _random_dataset(0)
    p = tmp_path / "d.txt"
    dataio.write_dataset(p, d)
    back = dataio.read_dataset(p)
    assert np.array_equal(back.values, d.values)
    assert back.acquisition == d.acquisition and back.medium == d.medium
    assert (back.noise_tau, back.seed) == (0.1, 7)


def test_dataset_rectangular_round_trip():
    d = _random_dataset(1, nr=3, ns=5)
    back = dataio.parse_dataset(dataio.format_dataset(d))
    assert back.values.shape == (3, 5) and np.array_equal(back.values, d.values)


def test_dataset_format_errors():
    text = dataio.format_dataset(_random_dataset(2))
    with pytest.raises(FormatError):
        dataio.parse_dataset(text.replace("rtm-dataset 1", "rtm-dataset 2", 1))
    lines = text.splitlines()
    with pytest.raises(FormatError):
        dataio.parse_dataset("\n".join(lines[:-1]))
    swapped = lines[:2] + [lines[3], lines[2]] + lines[4:]
    with pytest.raises(FormatError):
        dataio.parse_dataset("\n".join(swapped))


def test_dataset_writer_deterministic():
    d = _random_dataset(3)
    assert dataio.format_dataset(d) == dataio.format_dataset(d)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(allow_nan=False, allow_infinity=False, width=64), min_size=12, max_size=12))
def test_indicator_round_trip(vals):
    grid = SamplingGrid((-1.0, 2.0), (-3.0, 0.5), 4, 3)
    v = np.array(vals).reshape(3, 4)
    back, g = dataio.parse_indicator(dataio.format_indicator(v, grid))
    assert np.array_equal(back, v) and g == grid


def test_indicator_shape_mismatch():
    with pytest.raises(FormatError):
        dataio.format_indicator(np.zeros((4, 3)), SamplingGrid((-1.0, 2.0), (-3.0, 0.5), 4, 3))


def test_pgm(tmp_path):
    with pytest.raises(DegenerateRangeError):
        dataio.pgm_bytes(np.full((3, 4), 2.0))
    v = np.arange(12.0).reshape(3, 4)
    p = tmp_path / "f.pgm"
    dataio.write_pgm(p, v)
    img = dataio.read_pgm(p)
    assert img.shape == (3, 4)
    # first stored row is the largest y
    assert img[0, -1] == 255 and img[-1, 0] == 0
    assert list(img[0]) == [int(round((8 + k) / 11 * 255)) for k in range(4)]


def test_seeded_normals_deterministic():
    assert np.array_equal(dataio.seeded_normals(7, 101), dataio.seeded_normals(7, 101))
    assert dataio.seeded_normals(7, 5).shape == (5,)
    with pytest.raises(ValueError):
        dataio.seeded_normals(7, 0)


def test_seeded_normals_moments():
    x = dataio.seeded_normals(2024, 10**6)
    assert abs(x.mean()) <= 0.005
    assert abs(x.var() - 1.0) <= 0.01


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 2**20))
def test_seeded_normals_seeds_differ(seed, shift):
    a, b = dataio.seeded_normals(seed, 10), dataio.seeded_normals(seed + shift, 10)
    assert np.all(a != b)


def test_format_report():
    rows = [
        dataio.CheckRow("wronskian", "200 pts", 3e-16, 1e-12, True),
        dataio.CheckRow("zeta ratio", "x=(0, 1)", 0.3, 0.65, False),
    ]
    text = dataio.format_report(rows)
    lines = text.splitlines()
    assert lines[0].split(" | ")[0].strip() == "check"
    assert [c.strip() for c in lines[0].split("|")] == ["check", "params", "residual", "threshold", "pass"]
    assert lines[2].rstrip().endswith("yes") and lines[3].rstrip().endswith("NO")
    assert "3.000e-16" in lines[2]
