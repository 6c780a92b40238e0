"""Scene geometry: interface profiles, obstacles, perturbation regions and
acquisition layouts.

The interface is the graph ``x2 = f(x1)`` of a compactly supported profile.
Where it departs from the plane ``x2 = 0`` it leaves two kinds of region,
``B1`` (above the plane, below the graph) and ``B2`` (below the plane, above
the graph), which carry the signed indicator ``chi = +1`` and ``-1``.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .errors import ConfigurationError

PROFILE_KINDS = ("flat", "spline_bumps", "gaussian_bumps", "piecewise_constant")
OBSTACLE_KINDS = ("none", "circle", "rounded_square", "rounded_triangle")

PRESETS = (
    "ex1_flat_circle",
    "ex1_spline_no_obstacle",
    "ex2_gauss_square",
    "ex2_gauss_square_up4",
    "ex2_gauss_square_up5",
    "ex3_piecewise_triangle",
)


def cubic_bspline(t):
    """Centered cardinal cubic B-spline, supported on ``|t| < 2``."""
    a = np.abs(np.asarray(t, dtype=float))
    inner = 0.5 * a**3 - a**2 + 2.0 / 3.0
    outer = -a**3 / 6.0 + a**2 - 2.0 * a + 4.0 / 3.0
    out = np.where(a <= 1.0, inner, np.where(a < 2.0, outer, 0.0))
    return out.item() if out.ndim == 0 else out


def smooth_cutoff(t):
    """C-infinity cutoff: 1 on ``|t| <= 4``, 0 on ``|t| >= 5``."""
    a = np.abs(np.asarray(t, dtype=float))
    out = np.where(a <= 4.0, 1.0, 0.0)
    blend = (a > 4.0) & (a < 5.0)
    if np.any(blend):
        ab = a[blend]
        expo = 1.0 / (5.0 - ab) + 1.0 / (4.0 - ab)
        # expo -> -inf near 4 and +inf near 5; exp overflow is the intended limit
        with np.errstate(over="ignore"):
            out[blend] = 1.0 / (1.0 + np.exp(expo))
    return out.item() if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Medium
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class MediumConfig:
    """Wavenumbers above (``kappa1``) and below (``kappa2``) the plane."""

    kappa1: float = 10.0
    kappa2: float = 5.0

    def __post_init__(self):
        if not (self.kappa1 > 0 and self.kappa2 > 0):
            raise ConfigurationError("wavenumbers must be positive")

    @property
    def beta(self) -> float:
        return self.kappa1**2 - self.kappa2**2

    @property
    def kappa_max(self) -> float:
        return max(self.kappa1, self.kappa2)

    def kappa_at(self, points):
        """Background wavenumber ``kappa1`` for ``x2 > 0``, else ``kappa2``."""
        pts = np.asarray(points, dtype=float)
        return np.where(pts[..., 1] > 0, self.kappa1, self.kappa2)


# ---------------------------------------------------------------------------
# Interface profile
# ---------------------------------------------------------------------------
def _triples(params, kind):
    p = np.asarray(params, dtype=float).ravel()
    if p.size == 0 or p.size % 3:
        raise ConfigurationError(f"{kind} needs parameters in groups of three, got {p.size}")
    return p.reshape(-1, 3)


@dataclass(frozen=True)
class InterfaceProfile:
    """Compactly supported interface profile ``f``.

    Parameter layout per kind (groups of three reals):

    ``spline_bumps``        ``(a, s, c)``: ``f = sum a * B3(s*t + c)``
    ``gaussian_bumps``      ``(a, b, c)``: ``f = f0(t) * sum a * exp(-b (t-c)^2)``
    ``piecewise_constant``  ``(v, lo, hi)``: ``f = v`` on ``lo <= |t| <= hi``
    """

    kind: str = "flat"
    params: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ConfigurationError(f"unknown interface kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(float(v) for v in self.params))
        if self.kind != "flat":
            _triples(self.params, self.kind)

    @property
    def support_radius(self) -> float:
        if self.kind == "flat":
            return 0.0
        g = _triples(self.params, self.kind)
        if self.kind == "spline_bumps":
            # support of B3(s t + c) is |s t + c| < 2
            lo = (-2.0 - g[:, 2]) / g[:, 1]
            hi = (2.0 - g[:, 2]) / g[:, 1]
            return float(np.max(np.abs(np.concatenate([lo, hi]))))
        if self.kind == "gaussian_bumps":
            return 5.0
        return float(np.max(g[:, 2]))

    def breakpoints(self) -> np.ndarray:
        """Abscissae where ``f`` or a derivative is non-smooth."""
        if self.kind == "flat":
            return np.zeros(0)
        g = _triples(self.params, self.kind)
        if self.kind == "spline_bumps":
            knots = [(k - c) / s for _, s, c in g for k in (-2, -1, 0, 1, 2)]
            pts = np.array(knots)
        elif self.kind == "gaussian_bumps":
            pts = np.array([-5.0, -4.0, 4.0, 5.0])
        else:
            pts = np.concatenate([g[:, 1], g[:, 2], -g[:, 1], -g[:, 2]])
        return np.unique(pts)

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "flat":
            out = np.zeros_like(t)
        elif self.kind == "spline_bumps":
            out = np.zeros_like(t)
            for a, s, c in _triples(self.params, self.kind):
                out = out + a * cubic_bspline(s * t + c)
        elif self.kind == "gaussian_bumps":
            out = np.zeros_like(t)
            for a, b, c in _triples(self.params, self.kind):
                out = out + a * np.exp(-b * (t - c) ** 2)
            out = out * smooth_cutoff(t)
        else:
            out = np.zeros_like(t)
            at = np.abs(t)
            for v, lo, hi in _triples(self.params, self.kind):
                out = np.where((at >= lo) & (at <= hi), v, out)
        out = np.asarray(out, dtype=float)
        return out.item() if out.ndim == 0 else out

    __call__ = evaluate

    def negated(self) -> "InterfaceProfile":
        """Profile ``-f``."""
        if self.kind == "flat":
            return self
        g = _triples(self.params, self.kind).copy()
        g[:, 0] *= -1.0
        return InterfaceProfile(self.kind, tuple(g.ravel()))


def chi(profile: InterfaceProfile, x):
    """Signed indicator of the perturbation region.

    ``+1`` where ``0 < x2 < f(x1)``, ``-1`` where ``f(x1) < x2 < 0`` and
    ``0`` elsewhere, including on both boundaries.
    """
    pts = np.asarray(x, dtype=float)
    f = np.asarray(profile.evaluate(pts[..., 0]))
    x2 = pts[..., 1]
    out = np.where((x2 > 0) & (x2 < f), 1, np.where((x2 < 0) & (x2 > f), -1, 0))
    return int(out) if out.ndim == 0 else out.astype(int)


# ---------------------------------------------------------------------------
# Obstacle
# ---------------------------------------------------------------------------
def _star_curve(cx, cy, r, dr, d2r):
    def pos(th):
        rr = r(th)
        return np.stack([cx + rr * np.cos(th), cy + rr * np.sin(th)], axis=-1)

    def d1(th):
        rr, rp = r(th), dr(th)
        c, s = np.cos(th), np.sin(th)
        return np.stack([rp * c - rr * s, rp * s + rr * c], axis=-1)

    def d2(th):
        rr, rp, rpp = r(th), dr(th), d2r(th)
        c, s = np.cos(th), np.sin(th)
        return np.stack([rpp * c - 2 * rp * s - rr * c, rpp * s + 2 * rp * c - rr * s], axis=-1)

    return pos, d1, d2


@dataclass(frozen=True)
class ObstacleBoundary:
    """Smooth closed curve ``theta -> x(theta)``, counterclockwise.

    ``circle``            ``(cx, cy, r)``
    ``rounded_square``    ``(cx, cy, a)``: ``c + a (cos^3 + cos, sin^3 + sin)``
    ``rounded_triangle``  ``(cx, cy, r0, e)``: radius ``r0 + e cos(3 theta)``
    """

    kind: str
    params: Tuple[float, ...]
    node_count: int = 64

    def __post_init__(self):
        if self.kind not in OBSTACLE_KINDS or self.kind == "none":
            raise ConfigurationError(f"unknown obstacle kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(float(v) for v in self.params))
        expected = {"circle": 3, "rounded_square": 3, "rounded_triangle": 4}[self.kind]
        if len(self.params) != expected:
            raise ConfigurationError(f"{self.kind} needs {expected} parameters")
        if self.node_count < 4 or self.node_count % 2:
            raise ConfigurationError("obstacle node_count must be even and >= 4")

    def _curve(self):
        p = self.params
        if self.kind == "circle":
            cx, cy, rad = p
            return _star_curve(
                cx, cy, lambda th: np.full_like(th, rad), np.zeros_like, np.zeros_like
            )
        if self.kind == "rounded_triangle":
            cx, cy, r0, e = p
            return _star_curve(
                cx,
                cy,
                lambda th: r0 + e * np.cos(3 * th),
                lambda th: -3 * e * np.sin(3 * th),
                lambda th: -9 * e * np.cos(3 * th),
            )
        cx, cy, a = p

        def pos(th):
            c, s = np.cos(th), np.sin(th)
            return np.stack([cx + a * (c**3 + c), cy + a * (s**3 + s)], axis=-1)

        def d1(th):
            c, s = np.cos(th), np.sin(th)
            return np.stack([a * (-3 * c**2 * s - s), a * (3 * s**2 * c + c)], axis=-1)

        def d2(th):
            c, s = np.cos(th), np.sin(th)
            return np.stack(
                [a * (6 * c * s**2 - 3 * c**3 - c), a * (6 * s * c**2 - 3 * s**3 - s)], axis=-1
            )

        return pos, d1, d2

    def position(self, theta):
        th = np.asarray(theta, dtype=float)
        return self._curve()[0](th)

    def derivative(self, theta):
        return self._curve()[1](np.asarray(theta, dtype=float))

    def second_derivative(self, theta):
        return self._curve()[2](np.asarray(theta, dtype=float))

    def parameters(self, n: Optional[int] = None) -> np.ndarray:
        n = self.node_count if n is None else n
        return np.pi * np.arange(n) / (n // 2)

    def nodes(self, n: Optional[int] = None) -> np.ndarray:
        return self.position(self.parameters(n))

    @property
    def center(self) -> np.ndarray:
        return np.array(self.params[:2])

    def contains(self, points) -> np.ndarray:
        """Points strictly inside the curve (polygon test on a fine trace)."""
        poly = self.position(np.linspace(0, 2 * np.pi, 721)[:-1])
        return _points_in_polygon(np.asarray(points, dtype=float), poly)

    def with_nodes(self, n: int) -> "ObstacleBoundary":
        return ObstacleBoundary(self.kind, self.params, n)

    def distance(self, points) -> np.ndarray:
        """Distance from points to the curve: nearest trace sample, then
        Newton steps on ``(x(t) - p) . x'(t) = 0``."""
        grid = np.linspace(0, 2 * np.pi, 1025)[:-1]
        trace = self.position(grid)
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        d0 = np.linalg.norm(pts[:, None, :] - trace[None, :, :], axis=-1)
        k = np.argmin(d0, axis=1)
        t = grid[k]
        step = grid[1]
        for _ in range(8):
            r = self.position(t) - pts
            d1 = self.derivative(t)
            g = np.sum(r * d1, axis=1)
            gp = np.sum(d1 * d1, axis=1) + np.sum(r * self.second_derivative(t), axis=1)
            dt = np.where(gp > 0, -g / np.where(gp > 0, gp, 1.0), 0.0)
            t = t + np.clip(dt, -step, step)
        d = np.linalg.norm(self.position(t) - pts, axis=1)
        return np.minimum(d, d0[np.arange(len(pts)), k])


def _points_in_polygon(points, poly):
    x, y = points[..., 0], points[..., 1]
    inside = np.zeros(points.shape[:-1], dtype=bool)
    xv, yv = poly[:, 0], poly[:, 1]
    xw, yw = np.roll(xv, -1), np.roll(yv, -1)
    for x0, y0, x1, y1 in zip(xv, yv, xw, yw):
        crosses = (y0 > y) != (y1 > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xc = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
        inside ^= crosses & (x < xc)
    return inside


# ---------------------------------------------------------------------------
# Perturbation region
# ---------------------------------------------------------------------------
@dataclass
class PerturbationRegion:
    """Signed quadrature cells covering ``B = B1 u B2``.

    Attributes
    ----------
    nodes : ndarray, shape (M, 2)
        Cell centroids.
    weights : ndarray, shape (M,)
        Cell areas.
    signs : ndarray, shape (M,)
        ``+1`` for cells in ``B1``, ``-1`` for cells in ``B2``.
    polygons : list of ndarray
        Cell outlines, counterclockwise.
    cell_size : float
        Nominal edge length of the unclipped cells.
    """

    nodes: np.ndarray
    weights: np.ndarray
    signs: np.ndarray
    polygons: list = field(default_factory=list)
    cell_size: float = 0.0

    def __len__(self):
        return len(self.weights)

    @property
    def signed_area(self) -> float:
        return float(np.sum(self.signs * self.weights))

    @property
    def is_empty(self) -> bool:
        return len(self.weights) == 0


def _clip_halfplane(poly, axis, value, keep_above):
    """Sutherland-Hodgman clip of a polygon against ``x[axis] >=/<= value``."""
    if len(poly) == 0:
        return poly
    out = []
    n = len(poly)
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        dc = (cur[axis] - value) if keep_above else (value - cur[axis])
        dn = (nxt[axis] - value) if keep_above else (value - nxt[axis])
        if dc >= 0:
            out.append(cur)
        if (dc >= 0) != (dn >= 0):
            s = dc / (dc - dn)
            out.append(cur + s * (nxt - cur))
    return np.array(out) if out else np.zeros((0, 2))


def polygon_area_centroid(poly):
    """Signed area and centroid of a simple polygon."""
    if len(poly) < 3:
        return 0.0, np.zeros(2)
    x, y = poly[:, 0], poly[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    area = 0.5 * cross.sum()
    if abs(area) < 1e-300:
        return 0.0, poly.mean(axis=0)
    cx = ((x + xn) * cross).sum() / (6 * area)
    cy = ((y + yn) * cross).sum() / (6 * area)
    return area, np.array([cx, cy])


def _column_edges(profile, h):
    L = profile.support_radius
    brk = profile.breakpoints()
    brk = brk[(brk > -L) & (brk < L)]
    knots = np.unique(np.concatenate([[-L, L], brk]))
    edges = [knots[:1]]
    for a, b in zip(knots[:-1], knots[1:]):
        n = max(1, int(np.ceil((b - a) / h - 1e-9)))
        edges.append(np.linspace(a, b, n + 1)[1:])
    return np.concatenate(edges)


def _column_polyline(profile, a, b, n_sub):
    eps = 1e-12 * (b - a)
    s = np.linspace(0.0, 1.0, n_sub + 1)
    t = a + (b - a) * s
    te = t.copy()
    te[0] += eps
    te[-1] -= eps
    y = np.asarray(profile.evaluate(te), dtype=float)
    pts = [(t[0], y[0])]
    for i in range(n_sub):
        if y[i] * y[i + 1] < 0:
            tz = t[i] + (t[i + 1] - t[i]) * y[i] / (y[i] - y[i + 1])
            pts.append((tz, 0.0))
        pts.append((t[i + 1], y[i + 1]))
    return np.array(pts)


def build_region(
    profile: InterfaceProfile,
    resolution: float = 6.0,
    kappa_max: float = 10.0,
    subsegments: int = 4,
) -> PerturbationRegion:
    """Quadrature cells for the perturbation region of ``profile``.

    Axis-aligned cells of edge ``2 pi / kappa_max / resolution`` are clipped
    against the piecewise-linear interpolant of the graph (``subsegments``
    pieces per column); each clipped cell contributes its centroid with its
    area as weight. Profile breakpoints are column edges, so piecewise
    constant profiles are represented exactly.

    Raises
    ------
    ConfigurationError
        For ``resolution < 4`` or a profile without finite support.
    """
    if resolution < 4:
        raise ConfigurationError("resolution must be at least 4 points per wavelength")
    h = 2 * np.pi / kappa_max / resolution
    if profile.kind == "flat":
        return PerturbationRegion(np.zeros((0, 2)), np.zeros(0), np.zeros(0, dtype=int), [], h)
    L = profile.support_radius
    if not np.isfinite(L) or L <= 0:
        raise ConfigurationError("profile has no finite support radius")

    nodes, weights, signs, polys = [], [], [], []
    min_area = 1e-10 * h * h
    edges = _column_edges(profile, h)
    for a, b in zip(edges[:-1], edges[1:]):
        line = _column_polyline(profile, a, b, subsegments)
        for sign in (1, -1):
            top = np.maximum(line[:, 1], 0.0) if sign > 0 else np.minimum(line[:, 1], 0.0)
            extent = np.max(np.abs(top))
            if extent <= 0:
                continue
            outline = np.vstack([[[a, 0.0]], [[b, 0.0]], np.column_stack([line[::-1, 0], top[::-1]])])
            if sign < 0:
                outline = outline[::-1]
            n_strips = int(np.ceil(extent / h - 1e-9))
            for j in range(n_strips):
                lo, hi = (j * h, (j + 1) * h) if sign > 0 else (-(j + 1) * h, -j * h)
                cell = _clip_halfplane(outline, 1, lo, True)
                cell = _clip_halfplane(cell, 1, hi, False)
                area, cen = polygon_area_centroid(cell)
                if area < 0:
                    cell, area = cell[::-1], -area
                if area <= min_area:
                    continue
                nodes.append(cen)
                weights.append(area)
                signs.append(sign)
                polys.append(cell)
    if not nodes:
        return PerturbationRegion(np.zeros((0, 2)), np.zeros(0), np.zeros(0, dtype=int), [], h)
    return PerturbationRegion(
        np.array(nodes), np.array(weights), np.array(signs, dtype=int), polys, h
    )


# ---------------------------------------------------------------------------
# Acquisition and sampling grid
# ---------------------------------------------------------------------------
def circle_points(radius: float, n: int) -> np.ndarray:
    """``n`` equiangular points on the circle of given radius, starting at angle 0."""
    th = 2 * np.pi * np.arange(n) / n
    pts = radius * np.column_stack([np.cos(th), np.sin(th)])
    pts[np.abs(pts) < 1e-12 * radius] = 0.0
    return pts


@dataclass(frozen=True)
class Acquisition:
    """Sources and receivers equidistributed on the circle of radius ``radius``."""

    radius: float = 100.0
    n_sources: int = 1024
    n_receivers: int = 1024

    def __post_init__(self):
        if self.radius <= 0 or self.n_sources < 1 or self.n_receivers < 1:
            raise ConfigurationError("acquisition needs R > 0 and at least one source/receiver")

    @property
    def source_points(self) -> np.ndarray:
        return circle_points(self.radius, self.n_sources)

    @property
    def receiver_points(self) -> np.ndarray:
        return circle_points(self.radius, self.n_receivers)

    @property
    def coincident(self) -> bool:
        return self.n_sources == self.n_receivers


@dataclass(frozen=True)
class SamplingGrid:
    """Uniform grid on ``x_range x y_range`` including the end points.

    ``points`` is row-major: row ``i`` holds ``y_i``, column ``j`` holds ``x_j``.
    """

    x_range: Tuple[float, float] = (-5.0, 5.0)
    y_range: Tuple[float, float] = (-8.95, 1.05)
    nx: int = 100
    ny: int = 100

    def __post_init__(self):
        object.__setattr__(self, "x_range", tuple(float(v) for v in self.x_range))
        object.__setattr__(self, "y_range", tuple(float(v) for v in self.y_range))
        if self.nx < 2 or self.ny < 2:
            raise ConfigurationError("grid needs at least two points per axis")
        if not (self.x_range[1] > self.x_range[0] and self.y_range[1] > self.y_range[0]):
            raise ConfigurationError("grid ranges must be increasing")

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x_range[0], self.x_range[1], self.nx)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(self.y_range[0], self.y_range[1], self.ny)

    @property
    def points(self) -> np.ndarray:
        X, Y = np.meshgrid(self.xs, self.ys)
        return np.column_stack([X.ravel(), Y.ravel()])

    @property
    def corners(self) -> np.ndarray:
        (x0, x1), (y0, y1) = self.x_range, self.y_range
        return np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]])


# ---------------------------------------------------------------------------
# Scenes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Scene:
    """Interface, optional obstacle and background medium."""

    profile: InterfaceProfile
    obstacle: Optional[ObstacleBoundary]
    medium: MediumConfig

    def validate(self, region: Optional[PerturbationRegion] = None) -> None:
        """Check that the obstacle lies below the interface and the plane,
        and does not meet the perturbation region.

        Raises
        ------
        ConfigurationError
        """
        if self.obstacle is None:
            return
        pts = self.obstacle.position(np.linspace(0, 2 * np.pi, 1025)[:-1])
        f = np.asarray(self.profile.evaluate(pts[:, 0]))
        if np.any(pts[:, 1] >= np.minimum(f, 0.0)):
            raise ConfigurationError("obstacle must lie strictly below the interface and x2 = 0")
        if region is not None and not region.is_empty:
            if np.any(self.obstacle.contains(region.nodes)):
                raise ConfigurationError("obstacle intersects the perturbation region")

    def scatterer_points(self, n: int = 512, region: Optional[PerturbationRegion] = None):
        """Dense sample of ``boundary(D) u closure(B)`` for distance queries."""
        parts = []
        if self.obstacle is not None:
            parts.append(self.obstacle.position(np.linspace(0, 2 * np.pi, n + 1)[:-1]))
        if self.profile.kind != "flat":
            L = self.profile.support_radius
            t = np.linspace(-L, L, 40 * n + 1)
            f = np.asarray(self.profile.evaluate(t))
            nz = f != 0
            # vertical fill between the plane and the graph
            for frac in np.linspace(0.0, 1.0, 9):
                parts.append(np.column_stack([t[nz], frac * f[nz]]))
            # vertical edges of piecewise-constant steps
            if self.profile.kind == "piecewise_constant":
                for tb in self.profile.breakpoints():
                    hb = max(abs(self.profile.evaluate(tb - 1e-9)), abs(self.profile.evaluate(tb + 1e-9)))
                    ys = np.linspace(0.0, 1.0, 9) * hb
                    fb = self.profile.evaluate(tb - 1e-9) or self.profile.evaluate(tb + 1e-9)
                    parts.append(np.column_stack([np.full(9, tb), np.sign(fb) * ys]))
        if not parts:
            return np.zeros((0, 2))
        return np.vstack(parts)

    def distance_to_scatterers(self, points) -> np.ndarray:
        """Distance from points to ``boundary(D) u closure(B)``."""
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        targets = self.scatterer_points()
        if len(targets) == 0:
            return np.full(len(pts), np.inf)
        from scipy.spatial import cKDTree

        d, _ = cKDTree(targets).query(pts)
        if self.profile.kind != "flat":
            d = np.where(chi(self.profile, pts) != 0, 0.0, d)
        if self.obstacle is not None:
            d = np.where(self.obstacle.contains(pts), 0.0, d)
        return d


def preset_scene(name: str, medium: Optional[MediumConfig] = None, obstacle_nodes: int = 64) -> Scene:
    """Scenes of the three numerical examples.

    Raises
    ------
    ConfigurationError
        For an unknown preset name.
    """
    medium = medium or MediumConfig(10.0, 5.0)
    spline = InterfaceProfile("spline_bumps", (1.0, 2.0, 4.0, -0.6, 2.0, -5.0))
    gauss = InterfaceProfile("gaussian_bumps", (0.6, 6.0, -3.0, 0.5, 7.0, 0.0, 0.5, 8.0, 3.0))
    steps = InterfaceProfile("piecewise_constant", (0.2, 0.0, 1.0, 0.3, 3.0, 4.0))
    n = obstacle_nodes
    table = {
        "ex1_flat_circle": (InterfaceProfile(), ObstacleBoundary("circle", (0.0, -4.0, 0.5), n)),
        "ex1_spline_no_obstacle": (spline, None),
        "ex2_gauss_square": (gauss, ObstacleBoundary("rounded_square", (3.0, -6.0, 0.3), n)),
        "ex2_gauss_square_up4": (gauss, ObstacleBoundary("rounded_square", (3.0, -2.0, 0.3), n)),
        "ex2_gauss_square_up5": (gauss, ObstacleBoundary("rounded_square", (3.0, -1.0, 0.3), n)),
        "ex3_piecewise_triangle": (
            steps,
            ObstacleBoundary("rounded_triangle", (-3.0, -6.0, 0.5, 0.1), n),
        ),
    }
    if name not in table:
        raise ConfigurationError(f"unknown preset {name!r}; choose one of {', '.join(PRESETS)}")
    profile, obstacle = table[name]
    return Scene(profile, obstacle, medium)
