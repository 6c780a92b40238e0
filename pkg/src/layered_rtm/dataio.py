"""Text formats for configurations, datasets, indicator fields and reports,
plus the seeded normal stream used by the noise model."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ConfigurationError, DegenerateRangeError, FormatError
from .geometry import (
    OBSTACLE_KINDS,
    PROFILE_KINDS,
    Acquisition,
    InterfaceProfile,
    MediumConfig,
    ObstacleBoundary,
    SamplingGrid,
    Scene,
    preset_scene,
)

DATASET_MAGIC = "# rtm-dataset 1"
INDICATOR_VERSION = 1


def seeded_normals(seed: int, n: int) -> np.ndarray:
    """``n`` standard normal draws by Box-Muller on a Philox counter stream."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gen = np.random.Generator(np.random.Philox(int(seed)))
    m = (n + 1) // 2
    u1 = gen.random(m)
    u2 = gen.random(m)
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    angle = 2.0 * np.pi * u2
    return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:n]


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------
@dataclass
class RunConfig:
    """Everything needed for one forward + imaging run."""

    scene: Scene
    acquisition: Acquisition = field(default_factory=Acquisition)
    grid: SamplingGrid = field(default_factory=SamplingGrid)
    noise_tau: float = 0.0
    seed: int = 0
    output_dir: str = "."
    resolution: float = 6.0
    boundary_nodes: Optional[int] = None


_REAL_KEYS = {
    "medium.kappa1", "medium.kappa2", "acquisition.R", "grid.x0", "grid.x1",
    "grid.y0", "grid.y1", "noise.tau", "discretization.resolution",
}
_INT_KEYS = {"acquisition.ns", "acquisition.nr", "grid.nx", "grid.ny", "seed", "discretization.boundary_nodes"}
_TEXT_KEYS = {"interface.kind", "obstacle.kind", "output.dir", "preset"}
_LIST_KEYS = {"interface.params", "obstacle.params"}
CONFIG_KEYS = _REAL_KEYS | _INT_KEYS | _TEXT_KEYS | _LIST_KEYS

FULL_PROFILE = {"acquisition.R": 100.0, "acquisition.ns": 1024, "acquisition.nr": 1024}
DESK_PROFILE = {"acquisition.R": 20.0, "acquisition.ns": 128, "acquisition.nr": 128}


def _parse_value(key, raw, lineno):
    try:
        if key in _REAL_KEYS:
            return float(raw)
        if key in _INT_KEYS:
            return int(raw)
        if key in _LIST_KEYS:
            return tuple(float(v) for v in raw.replace(",", " ").split()) if raw.strip() else ()
        return raw.strip()
    except ValueError:
        raise ConfigurationError(f"line {lineno}: cannot parse value {raw!r} for {key}") from None


def parse_config_values(text: str) -> dict:
    """Parse ``key = value`` lines into a dict of typed values.

    Raises
    ------
    ConfigurationError
        For unknown keys, malformed lines or unparsable values.
    """
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigurationError(f"line {lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in body.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigurationError(f"line {lineno}: unknown key {key!r}")
        out[key] = _parse_value(key, raw, lineno)
    return out


def parse_config(text: str, preset: Optional[str] = None, profile: Optional[dict] = None) -> RunConfig:
    """Build a :class:`RunConfig` from config text.

    The scene comes from ``preset`` (argument or ``preset`` key) and is
    overridden by any ``interface.*``, ``obstacle.*`` or ``medium.*`` keys.
    ``profile`` supplies defaults (for example the desk-scale acquisition)
    that explicit keys override.

    Raises
    ------
    ConfigurationError
        If no scene can be formed or a value is invalid.
    """
    values = dict(FULL_PROFILE)
    values.update(profile or {})
    values.update(parse_config_values(text))
    preset = values.get("preset", preset)
    medium = MediumConfig(values.get("medium.kappa1", 10.0), values.get("medium.kappa2", 5.0))
    if preset is not None:
        base = preset_scene(preset, medium)
        profile_obj, obstacle = base.profile, base.obstacle
    else:
        if "interface.kind" not in values and "obstacle.kind" not in values:
            raise ConfigurationError("configuration defines no scene: give a preset or interface/obstacle keys")
        profile_obj, obstacle = InterfaceProfile(), None
    if "interface.kind" in values:
        kind = values["interface.kind"]
        if kind not in PROFILE_KINDS:
            raise ConfigurationError(f"unknown interface kind {kind!r}")
        profile_obj = InterfaceProfile(kind, values.get("interface.params", ()))
    if "obstacle.kind" in values:
        kind = values["obstacle.kind"]
        if kind not in OBSTACLE_KINDS:
            raise ConfigurationError(f"unknown obstacle kind {kind!r}")
        obstacle = None if kind == "none" else ObstacleBoundary(kind, values.get("obstacle.params", ()))
    scene = Scene(profile_obj, obstacle, medium)
    acq = Acquisition(values["acquisition.R"], values["acquisition.ns"], values["acquisition.nr"])
    gdef = SamplingGrid()
    grid = SamplingGrid(
        (values.get("grid.x0", gdef.x_range[0]), values.get("grid.x1", gdef.x_range[1])),
        (values.get("grid.y0", gdef.y_range[0]), values.get("grid.y1", gdef.y_range[1])),
        values.get("grid.nx", gdef.nx),
        values.get("grid.ny", gdef.ny),
    )
    tau = values.get("noise.tau", 0.0)
    if tau < 0:
        raise ConfigurationError("noise.tau must be non-negative")
    return RunConfig(
        scene, acq, grid, tau, values.get("seed", 0), values.get("output.dir", "."),
        values.get("discretization.resolution", 6.0), values.get("discretization.boundary_nodes"),
    )


def format_config(config: RunConfig) -> str:
    """Inverse of :func:`parse_config` at 17 significant digits."""
    s = config.scene
    g = config.grid
    lines = [
        f"interface.kind = {s.profile.kind}",
        "interface.params = " + ", ".join(f"{v:.17g}" for v in s.profile.params),
        f"obstacle.kind = {'none' if s.obstacle is None else s.obstacle.kind}",
        "obstacle.params = " + ("" if s.obstacle is None else ", ".join(f"{v:.17g}" for v in s.obstacle.params)),
        f"medium.kappa1 = {s.medium.kappa1:.17g}",
        f"medium.kappa2 = {s.medium.kappa2:.17g}",
        f"acquisition.R = {config.acquisition.radius:.17g}",
        f"acquisition.ns = {config.acquisition.n_sources}",
        f"acquisition.nr = {config.acquisition.n_receivers}",
        f"grid.x0 = {g.x_range[0]:.17g}",
        f"grid.x1 = {g.x_range[1]:.17g}",
        f"grid.y0 = {g.y_range[0]:.17g}",
        f"grid.y1 = {g.y_range[1]:.17g}",
        f"grid.nx = {g.nx}",
        f"grid.ny = {g.ny}",
        f"noise.tau = {config.noise_tau:.17g}",
        f"seed = {config.seed}",
        f"discretization.resolution = {config.resolution:.17g}",
        f"output.dir = {config.output_dir}",
    ]
    if config.boundary_nodes is not None:
        lines.append(f"discretization.boundary_nodes = {config.boundary_nodes}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Datasets
# ---------------------------------------------------------------------------
def format_dataset(dataset) -> str:
    acq, med = dataset.acquisition, dataset.medium
    head = (
        f"# ns {acq.n_sources} nr {acq.n_receivers} R {acq.radius:.17g} "
        f"kappa1 {med.kappa1:.17g} kappa2 {med.kappa2:.17g} "
        f"tau {dataset.noise_tau:.17g} seed {dataset.seed}"
    )
    v = dataset.values
    r, s = np.meshgrid(np.arange(v.shape[0]), np.arange(v.shape[1]), indexing="ij")
    body = "\n".join(
        f"{ri} {si} {x.real:.17g} {x.imag:.17g}" for ri, si, x in zip(r.ravel(), s.ravel(), v.ravel())
    )
    return DATASET_MAGIC + "\n" + head + "\n" + body + ("\n" if body else "")


def write_dataset(path, dataset) -> None:
    Path(path).write_text(format_dataset(dataset))


def parse_dataset(text: str):
    """Inverse of :func:`format_dataset`.

    Raises
    ------
    FormatError
        For a wrong version line, malformed header or inconsistent body.
    """
    from .forward import ScatteringDataset

    lines = text.splitlines()
    if len(lines) < 2 or lines[0].strip() != DATASET_MAGIC:
        raise FormatError("missing or unsupported dataset version line")
    tokens = lines[1].lstrip("#").split()
    if len(tokens) != 14:
        raise FormatError("dataset header must hold 7 key/value pairs")
    head = dict(zip(tokens[0::2], tokens[1::2]))
    try:
        ns, nr = int(head["ns"]), int(head["nr"])
        acq = Acquisition(float(head["R"]), ns, nr)
        med = MediumConfig(float(head["kappa1"]), float(head["kappa2"]))
        tau, seed = float(head["tau"]), int(head["seed"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed dataset header: {exc}") from None
    body = [ln for ln in lines[2:] if ln.strip()]
    if len(body) != ns * nr:
        raise FormatError(f"expected {ns * nr} data lines, found {len(body)}")
    values = np.zeros((nr, ns), complex)
    for k, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 4:
            raise FormatError(f"data line {k + 3}: expected 'r s re im'")
        r, s = int(parts[0]), int(parts[1])
        if (r, s) != divmod(k, ns):
            raise FormatError(f"data line {k + 3}: entries must be row-major in r")
        values[r, s] = complex(float(parts[2]), float(parts[3]))
    return ScatteringDataset(values, acq, med, tau, seed)


def read_dataset(path):
    return parse_dataset(Path(path).read_text())


# ---------------------------------------------------------------------------
# Indicator fields
# ---------------------------------------------------------------------------
def format_indicator(values: np.ndarray, grid: SamplingGrid) -> str:
    """Header ``nx ny x0 x1 y0 y1`` then ``ny`` rows of ``nx`` values (row ``i`` = ``y_i``)."""
    vals = np.asarray(values, float)
    if vals.shape != (grid.ny, grid.nx):
        raise FormatError(f"field shape {vals.shape} does not match grid ({grid.ny}, {grid.nx})")
    (x0, x1), (y0, y1) = grid.x_range, grid.y_range
    lines = [f"{grid.nx} {grid.ny} {x0:.17g} {x1:.17g} {y0:.17g} {y1:.17g}"]
    lines += [" ".join(f"{v:.17g}" for v in row) for row in vals]
    return "\n".join(lines) + "\n"


def write_indicator(path, values, grid) -> None:
    Path(path).write_text(format_indicator(values, grid))


def parse_indicator(text: str):
    """Inverse of :func:`format_indicator`; returns ``(values, grid)``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty indicator file")
    head = lines[0].split()
    if len(head) != 6:
        raise FormatError("indicator header must be 'nx ny x0 x1 y0 y1'")
    try:
        nx, ny = int(head[0]), int(head[1])
        grid = SamplingGrid((float(head[2]), float(head[3])), (float(head[4]), float(head[5])), nx, ny)
        rows = [[float(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed indicator file: {exc}") from None
    if len(rows) != ny or any(len(r) != nx for r in rows):
        raise FormatError("indicator body does not match header dimensions")
    return np.array(rows), grid


def read_indicator(path):
    return parse_indicator(Path(path).read_text())


def pgm_bytes(values: np.ndarray) -> bytes:
    """8-bit binary PGM; min maps to 0, max to 255, first row = largest y.

    Raises
    ------
    DegenerateRangeError
        For a constant field.
    """
    vals = np.asarray(values, float)
    lo, hi = float(vals.min()), float(vals.max())
    if not hi > lo:
        raise DegenerateRangeError("cannot scale a constant field to gray levels")
    gray = np.rint((vals - lo) / (hi - lo) * 255.0).astype(np.uint8)[::-1]
    ny, nx = gray.shape
    return f"P5\n{nx} {ny}\n255\n".encode("ascii") + gray.tobytes()


def write_pgm(path, values) -> None:
    Path(path).write_bytes(pgm_bytes(values))


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if len(parts) < 4 or parts[0] != b"P5":
        raise FormatError("not a binary PGM file")
    nx, ny = (int(v) for v in parts[1].split())
    pix = np.frombuffer(parts[3], dtype=np.uint8)
    if pix.size != nx * ny:
        raise FormatError("PGM pixel count does not match header")
    return pix.reshape(ny, nx)


# ---------------------------------------------------------------------------
# Verification report
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class CheckRow:
    check: str
    params: str
    residual: float
    threshold: float
    passed: bool


def format_report(rows) -> str:
    """Plain-text table ``check | params | residual | threshold | pass``."""
    header = ("check", "params", "residual", "threshold", "pass")
    cells = [header] + [
        (r.check, r.params, f"{r.residual:.3e}", f"{r.threshold:.3e}", "yes" if r.passed else "NO")
        for r in rows
    ]
    widths = [max(len(c[i]) for c in cells) for i in range(5)]
    lines = [" | ".join(c[i].ljust(widths[i]) for i in range(5)).rstrip() for c in cells]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
