"""Forward solver for the difference field ``V = u - G``.

Unknowns are the total field ``u`` at the volume nodes of the perturbation
region ``B`` and a combined-field density ``phi`` on the obstacle boundary.
With ``nu`` the normal pointing into the obstacle and
``P[phi](x) = int (dG(x, y)/dnu(y) - i eta G(x, y)) phi(y) ds(y)``::

    u(x) + beta sum_k w_k chi_k G(x, xi_k) u_k - P[phi](x) = G(x, x_s)    x in B
    -phi/2 + P[phi](x) - beta sum_k w_k chi_k G(x, xi_k) u_k = -G(x, x_s)  x on dD

and ``V(x) = P[phi](x) - beta sum_k w_k chi_k G(x, xi_k) u_k`` elsewhere.
The matrix does not depend on the source, so it is factorized once.
"""

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .errors import ConfigurationError, ContractError, DomainError, SolverError
from .geometry import (
    Acquisition,
    MediumConfig,
    ObstacleBoundary,
    PerturbationRegion,
    Scene,
    build_region,
)
from .layered_green import GreenEvaluator, phi
from .specfun import EULER_GAMMA, cylinder_functions, hankel1_01

RESIDUAL_LIMIT = 1e-10
CONDITION_LIMIT = 1e13


# ---------------------------------------------------------------------------
# Discretization
# ---------------------------------------------------------------------------
def default_boundary_nodes(obstacle: ObstacleBoundary, kappa: float, per_wavelength: float = 16.0) -> int:
    """Even node count resolving the obstacle boundary, at least 64."""
    trace = obstacle.position(np.linspace(0, 2 * np.pi, 513))
    perimeter = np.sum(np.linalg.norm(np.diff(trace, axis=0), axis=1))
    n = int(np.ceil(per_wavelength * perimeter * kappa / (2 * np.pi)))
    n = max(64, n + (n % 2))
    return n


@dataclass
class Discretization:
    """Volume cells of ``B`` and Nystrom nodes on the obstacle boundary.

    Attributes
    ----------
    region : PerturbationRegion
    boundary : ObstacleBoundary or None
    coupling_parameter : float
        Combined-field parameter ``eta``.
    resolution : float
        Volume points per shortest wavelength.
    """

    region: PerturbationRegion
    boundary: Optional[ObstacleBoundary]
    coupling_parameter: float
    resolution: float = 6.0

    @classmethod
    def from_scene(
        cls, scene: Scene, resolution: float = 6.0, boundary_nodes: Optional[int] = None
    ) -> "Discretization":
        region = build_region(scene.profile, resolution, scene.medium.kappa_max)
        boundary = scene.obstacle
        if boundary is not None:
            n = boundary_nodes or default_boundary_nodes(boundary, scene.medium.kappa2)
            boundary = boundary.with_nodes(n)
        eta = max(scene.medium.kappa2, 1.0)
        return cls(region, boundary, eta, resolution)

    @property
    def n_volume(self) -> int:
        return len(self.region)

    @property
    def n_boundary(self) -> int:
        return 0 if self.boundary is None else self.boundary.node_count

    @property
    def size(self) -> int:
        return self.n_volume + self.n_boundary


@dataclass
class _BoundaryData:
    theta: np.ndarray
    points: np.ndarray
    tangent: np.ndarray
    second: np.ndarray
    speed: np.ndarray
    outward: np.ndarray  # unnormalized outward normal (x2', -x1')
    inward_unit: np.ndarray
    half_count: int

    @classmethod
    def from_curve(cls, curve: ObstacleBoundary, theta=None):
        th = curve.parameters() if theta is None else np.asarray(theta, float)
        pts = curve.position(th)
        d1 = curve.derivative(th)
        d2 = curve.second_derivative(th)
        speed = np.hypot(d1[:, 0], d1[:, 1])
        outward = np.column_stack([d1[:, 1], -d1[:, 0]])
        return cls(th, pts, d1, d2, speed, outward, -outward / speed[:, None], curve.node_count // 2)


# ---------------------------------------------------------------------------
# Boundary quadrature
# ---------------------------------------------------------------------------
def log_weights(t, nodes, n: int):
    """Weights ``R_j(t)`` integrating ``ln(4 sin^2((t - tau)/2)) f(tau)`` exactly
    for trigonometric polynomials of degree ``n`` sampled at ``2n`` nodes."""
    diff = np.subtract.outer(np.atleast_1d(t), nodes)
    m = np.arange(1, n)
    acc = np.zeros_like(diff)
    for k in m:
        acc += np.cos(k * diff) / k
    return -(2 * np.pi / n) * acc - (np.pi / n**2) * np.cos(n * diff)


def combined_field_matrix(kappa: float, eta: float, targets: _BoundaryData, sources: _BoundaryData, on_nodes: bool):
    """Free-space combined-field operator ``int (dPhi/dnu - i eta Phi) . ds`` on the
    boundary, discretized with logarithmic splitting.

    Rows are targets, columns source nodes; ``on_nodes`` signals that the
    targets coincide with the source nodes (diagonal limits apply).
    """
    n = sources.half_count
    diff = targets.points[:, None, :] - sources.points[None, :, :]
    r = np.hypot(diff[..., 0], diff[..., 1])
    dt = np.subtract.outer(targets.theta, sources.theta)
    logterm_arg = 4 * np.sin(0.5 * dt) ** 2
    diag = r == 0
    r_safe = np.where(diag, 1.0, r)
    j0, j1, y0, y1 = cylinder_functions(kappa * r_safe)
    h0, h1 = j0 + 1j * y0, j1 + 1j * y1
    proj = np.einsum("pjd,jd->pj", diff, sources.outward)
    speed = sources.speed[None, :]
    dbl = -0.25j * kappa * h1 * proj / r_safe
    dbl1 = kappa / (4 * np.pi) * j1 * proj / r_safe
    sgl = 0.25j * h0 * speed
    sgl1 = -j0 * speed / (4 * np.pi)
    with np.errstate(divide="ignore"):
        log = np.log(np.where(diag, 1.0, logterm_arg))
    dbl2 = dbl - dbl1 * log
    sgl2 = sgl - sgl1 * log
    if on_nodes and np.any(diag):
        i, j = np.nonzero(diag)
        curv = np.einsum("jd,jd->j", sources.outward, sources.second)
        dbl1[i, j] = 0.0
        dbl2[i, j] = -curv[j] / (4 * np.pi * sources.speed[j] ** 2)
        sgl1[i, j] = -sources.speed[j] / (4 * np.pi)
        sgl2[i, j] = (
            0.25j - (np.log(0.5 * kappa * sources.speed[j]) + EULER_GAMMA) / (2 * np.pi)
        ) * sources.speed[j]
    k1 = dbl1 - 1j * eta * sgl1
    k2 = dbl2 - 1j * eta * sgl2
    return log_weights(targets.theta, sources.theta, n) * k1 + (np.pi / n) * k2


def trig_interpolate(values, theta, t):
    """Trigonometric interpolant of equispaced periodic samples, evaluated at ``t``."""
    values = np.asarray(values)
    N = values.shape[0]
    coef = np.fft.fft(values, axis=0) / N
    k = np.fft.fftfreq(N, 1.0 / N)
    phase = np.exp(1j * np.outer(np.asarray(t) - theta[0], k))
    if N % 2 == 0:
        nyq = N // 2
        idx = np.nonzero(k == -nyq)[0][0]
        phase[:, idx] = np.cos(nyq * (np.asarray(t) - theta[0]))
    return phase @ coef


# ---------------------------------------------------------------------------
# Volume quadrature near the diagonal
# ---------------------------------------------------------------------------
def _disc_integral(kappa, rho):
    """``int_0^rho (i/4) H0(kappa r) r dr``."""
    _, h1 = hankel1_01(kappa * rho)
    return 0.25j * (rho * h1 / kappa + 2j / (np.pi * kappa**2))


def polygon_phi_integral(kappa: float, x, polygon, order: int = 16) -> complex:
    """Exact-geometry integral of ``Phi_kappa(x, y)`` over ``y`` in a polygon.

    The polygon is decomposed into signed triangles with apex ``x`` and each
    triangle is integrated in polar coordinates about ``x``, which absorbs
    the logarithmic singularity.
    """
    x = np.asarray(x, float)
    gx, gw = np.polynomial.legendre.leggauss(order)
    total = 0.0j
    pts = np.asarray(polygon, float)
    for p, q in zip(pts, np.roll(pts, -1, axis=0)):
        a, b = p - x, q - x
        cross = a[0] * b[1] - a[1] * b[0]
        edge = np.hypot(*(q - p))
        if edge == 0 or abs(cross) <= 1e-14 * edge * max(np.hypot(*a), np.hypot(*b)):
            continue
        d = abs(cross) / edge
        ta = np.arctan2(a[1], a[0])
        span = np.arctan2(cross, a @ b)
        # direction from x to the edge line: clockwise edge normal, signed by cross
        e = q - p
        tn = np.arctan2(-np.sign(cross) * e[0], np.sign(cross) * e[1])
        rel = np.angle(np.exp(1j * (tn - ta)))
        pieces = [(0.0, span)]
        if 0 < rel * np.sign(span) < abs(span):
            pieces = [(0.0, rel), (rel, span)]
        for lo, hi in pieces:
            th = ta + lo + 0.5 * (hi - lo) * (gx + 1)
            rho = d / np.cos(th - tn)
            total += 0.5 * (hi - lo) * np.sum(gw * _disc_integral(kappa, rho))
    return total


# ---------------------------------------------------------------------------
# System assembly
# ---------------------------------------------------------------------------
@dataclass
class ForwardSystem:
    """Assembled and factorized coupled system for one scene."""

    scene: Scene
    discretization: Discretization
    green: GreenEvaluator
    matrix: np.ndarray
    condition: float
    _lu: tuple = field(repr=False)
    _bdata: Optional[_BoundaryData] = field(default=None, repr=False)
    _rows_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_volume(self) -> int:
        return self.discretization.n_volume

    @property
    def n_boundary(self) -> int:
        return self.discretization.n_boundary

    @property
    def beta(self) -> float:
        return self.scene.medium.beta

    def volume_nodes(self) -> np.ndarray:
        return self.discretization.region.nodes

    def boundary_nodes(self) -> np.ndarray:
        return np.zeros((0, 2)) if self._bdata is None else self._bdata.points

    def collocation_points(self) -> np.ndarray:
        return np.vstack([self.volume_nodes(), self.boundary_nodes()])

    def right_hand_sides(self, sources) -> np.ndarray:
        """Columns ``[G(x_vol, x_s); -G(x_bnd, x_s)]`` for each source."""
        src = np.asarray(sources, float).reshape(-1, 2)
        pts = self.collocation_points()
        if len(pts) == 0:
            return np.zeros((0, len(src)), complex)
        g = self.green.matrix(pts, src)
        g[self.n_volume:] *= -1.0
        return g

    def evaluation_rows(self, points) -> np.ndarray:
        """Rows ``L`` with ``V(points) = L @ [u; phi]`` (cached per point set)."""
        pts = np.ascontiguousarray(np.asarray(points, float).reshape(-1, 2))
        key = pts.tobytes()
        if key in self._rows_cache:
            return self._rows_cache[key]
        rows = np.zeros((len(pts), self.discretization.size), complex)
        region = self.discretization.region
        if self.n_volume:
            g = self.green.matrix(pts, region.nodes)
            rows[:, : self.n_volume] = -self.beta * g * (region.weights * region.signs)[None, :]
        if self.n_boundary:
            rows[:, self.n_volume:] = _potential_rows(self.green, self._bdata, pts, self.discretization.coupling_parameter)
        self._rows_cache[key] = rows
        return rows


def _potential_rows(green, bdata, points, eta):
    """Trapezoid discretization of ``P[.](x)`` for points away from the boundary."""
    val, grad = green.matrix(bdata.points, points, gradient=True)
    dn = np.einsum("jpd,jd->jp", grad, bdata.inward_unit)
    w = (np.pi / bdata.half_count) * bdata.speed
    return ((dn - 1j * eta * val) * w[:, None]).T


def _volume_block(green, region, kappa1, kappa2, beta, near_radius):
    """``beta * w_k chi_k G(x_i, xi_k)`` with near-diagonal cells integrated exactly."""
    nodes, w, s = region.nodes, region.weights, region.signs
    m = len(w)
    g = green.matrix(nodes, nodes, direct=False)
    upper = nodes[:, 1] >= 0
    same = upper[:, None] == upper[None, :]
    kern = g * (w * s)[None, :]
    for side, kappa in ((True, kappa1), (False, kappa2)):
        rows = np.nonzero(upper == side)[0]
        cols = np.nonzero(upper == side)[0]
        if rows.size == 0:
            continue
        xi = nodes[rows][:, None, :]
        yk = nodes[cols][None, :, :]
        dist = np.linalg.norm(xi - yk, axis=-1)
        far = dist > near_radius
        block = np.zeros((rows.size, cols.size), complex)
        if np.any(far):
            ii, kk = np.nonzero(far)
            block[ii, kk] = phi(kappa, nodes[rows[ii]], nodes[cols[kk]]) * w[cols[kk]]
        for ii, kk in zip(*np.nonzero(~far)):
            block[ii, kk] = polygon_phi_integral(kappa, nodes[rows[ii]], region.polygons[cols[kk]])
        kern[np.ix_(rows, cols)] += block * s[cols][None, :]
    return beta * kern


def assemble(scene: Scene, discretization: Discretization, green: Optional[GreenEvaluator] = None) -> ForwardSystem:
    """Assemble and factorize the coupled volume/boundary system.

    Raises
    ------
    ConfigurationError
        If the obstacle meets the interface or the perturbation region.
    SolverError
        If the matrix is numerically singular.
    """
    green = green or GreenEvaluator(scene.medium)
    if green.medium != scene.medium:
        raise ContractError("Green evaluator medium differs from the scene medium")
    region = discretization.region
    scene.validate(region)
    if discretization.boundary is not None and region.nodes.size:
        gap = np.min(discretization.boundary.distance(region.nodes))
        if gap < region.cell_size:
            raise ConfigurationError("obstacle is too close to the perturbation region")
    mv, nb = discretization.n_volume, discretization.n_boundary
    n = mv + nb
    A = np.eye(n, dtype=complex)
    beta = scene.medium.beta
    eta = discretization.coupling_parameter
    bdata = None
    if mv:
        A[:mv, :mv] += _volume_block(
            green, region, scene.medium.kappa1, scene.medium.kappa2, beta, 2.5 * region.cell_size
        )
    if nb:
        bdata = _BoundaryData.from_curve(discretization.boundary)
        A[mv:, mv:] = -0.5 * np.eye(nb)
        A[mv:, mv:] += combined_field_matrix(scene.medium.kappa2, eta, bdata, bdata, True)
        # smooth layered remainder on the boundary
        if scene.medium.kappa1 != scene.medium.kappa2:
            A[mv:, mv:] += _potential_rows_remainder(green, bdata, eta)
        if mv:
            val, grad = green.matrix(bdata.points, region.nodes, gradient=True)
            dn = np.einsum("jpd,jd->jp", grad, bdata.inward_unit)
            w = (np.pi / bdata.half_count) * bdata.speed
            A[:mv, mv:] = -((dn - 1j * eta * val) * w[:, None]).T
            A[mv:, :mv] = -beta * val * (region.weights * region.signs)[None, :]
    if n == 0:
        return ForwardSystem(scene, discretization, green, A, 1.0, (A, np.zeros(0, int)), bdata)
    cond = float(np.linalg.cond(A))
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise SolverError(f"forward system is numerically singular (condition {cond:.3e})", cond)
    lu = lu_factor(A)
    return ForwardSystem(scene, discretization, green, A, cond, lu, bdata)


def _potential_rows_remainder(green, bdata, eta):
    val, grad = green.matrix(bdata.points, bdata.points, gradient=True, direct=False)
    dn = np.einsum("jpd,jd->jp", grad, bdata.inward_unit)
    w = (np.pi / bdata.half_count) * bdata.speed
    return ((dn - 1j * eta * val) * w[:, None]).T


# ---------------------------------------------------------------------------
# Solutions
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ForwardSolution:
    """Volume values of ``u`` and boundary density for one source."""

    u_on_B: np.ndarray
    density_on_D: np.ndarray
    source: np.ndarray
    system: ForwardSystem = field(repr=False, compare=False)
    residual: float = 0.0

    @property
    def unknowns(self) -> np.ndarray:
        return np.concatenate([self.u_on_B, self.density_on_D])


def _solve(system: ForwardSystem, rhs):
    if rhs.shape[0] == 0:
        return rhs, np.zeros(rhs.shape[1])
    sol = lu_solve(system._lu, rhs)
    res = np.linalg.norm(system.matrix @ sol - rhs, axis=0)
    scale = np.maximum(np.linalg.norm(rhs, axis=0), np.finfo(float).tiny)
    rel = res / scale
    rel = np.where(np.linalg.norm(rhs, axis=0) == 0, 0.0, rel)
    return sol, rel


def solve_source(system: ForwardSystem, x_s) -> ForwardSolution:
    """Solve for one point source.

    Raises
    ------
    SolverError
        If the relative linear residual exceeds ``1e-10``.
    """
    x_s = np.asarray(x_s, float)
    rhs = system.right_hand_sides(x_s[None, :])
    sol, rel = _solve(system, rhs)
    if rel.size and rel[0] > RESIDUAL_LIMIT:
        raise SolverError(f"linear residual {rel[0]:.2e} exceeds {RESIDUAL_LIMIT:g}", system.condition)
    mv = system.n_volume
    return ForwardSolution(sol[:mv, 0], sol[mv:, 0], x_s, system, float(rel[0]) if rel.size else 0.0)


def solve_sources(system: ForwardSystem, sources) -> list:
    """Solve for many sources with one batched back-substitution.

    Raises
    ------
    SolverError
        Naming the first source whose relative residual exceeds ``1e-10``.
    """
    sources = np.asarray(sources, float).reshape(-1, 2)
    rhs = system.right_hand_sides(sources)
    sol, rel = _solve(system, rhs)
    bad = np.nonzero(rel > RESIDUAL_LIMIT)[0]
    if bad.size:
        raise SolverError(
            f"source {bad[0]}: linear residual {rel[bad[0]]:.2e} exceeds {RESIDUAL_LIMIT:g}",
            system.condition,
        )
    mv = system.n_volume
    return [
        ForwardSolution(sol[:mv, s].copy(), sol[mv:, s].copy(), sources[s], system, float(rel[s]))
        for s in range(len(sources))
    ]


def evaluate_V(solution: ForwardSolution, x):
    """Difference field ``V(x, x_s)`` at points away from ``dD``.

    Raises
    ------
    DomainError
        For points on the obstacle boundary, where the trace formula applies.
    """
    pts = np.asarray(x, float)
    scalar = pts.ndim == 1
    pts = pts.reshape(-1, 2)
    system = solution.system
    if system.discretization.boundary is not None:
        if np.any(system.discretization.boundary.distance(pts) < 1e-9):
            raise DomainError("evaluate_V is not defined on the obstacle boundary; use boundary_trace")
    if system.discretization.size == 0:
        out = np.zeros(len(pts), complex)
    else:
        out = system.evaluation_rows(pts) @ solution.unknowns
    return out[0] if scalar else out


def boundary_trace(solution: ForwardSolution, theta) -> np.ndarray:
    """Exterior trace of ``V`` on the obstacle boundary at parameters ``theta``
    (arbitrary, not necessarily Nystrom nodes)."""
    system = solution.system
    curve = system.discretization.boundary
    if curve is None:
        raise DomainError("scene has no obstacle")
    bdata = system._bdata
    theta = np.asarray(theta, float)
    tgt = _BoundaryData.from_curve(curve, theta)
    on_nodes = False
    eta = system.discretization.coupling_parameter
    medium = system.scene.medium
    dens = solution.density_on_D
    op = combined_field_matrix(medium.kappa2, eta, tgt, bdata, on_nodes)
    if medium.kappa1 != medium.kappa2:
        val, grad = system.green.matrix(bdata.points, tgt.points, gradient=True, direct=False)
        dn = np.einsum("jpd,jd->jp", grad, bdata.inward_unit)
        w = (np.pi / bdata.half_count) * bdata.speed
        op = op + ((dn - 1j * eta * val) * w[:, None]).T
    trace = -0.5 * trig_interpolate(dens, bdata.theta, theta) + op @ dens
    region = system.discretization.region
    if len(region):
        g = system.green.matrix(tgt.points, region.nodes)
        trace -= medium.beta * g @ (region.weights * region.signs * solution.u_on_B)
    return trace


def dirichlet_residual(solution: ForwardSolution, n_probe: int = 64, offset: float = 0.5):
    """Sound-soft check: ``max |u|`` at off-node boundary points and the
    reference ``max |u|`` on the curve displaced ``offset`` outward.

    Returns
    -------
    tuple of float
        ``(max |u| on the boundary, reference magnitude)``.
    """
    system = solution.system
    curve = system.discretization.boundary
    if curve is None:
        raise DomainError("scene has no obstacle")
    n = curve.node_count
    theta = (np.arange(n_probe) + 0.5) * 2 * np.pi / n_probe + 0.37 * np.pi / n
    pts = curve.position(theta)
    u_b = system.green.matrix(pts, solution.source[None, :])[:, 0] + boundary_trace(solution, theta)
    d1 = curve.derivative(theta)
    outward = np.column_stack([d1[:, 1], -d1[:, 0]])
    outward /= np.linalg.norm(outward, axis=1)[:, None]
    far = pts + offset * outward
    u_far = system.green.matrix(far, solution.source[None, :])[:, 0] + evaluate_V(solution, far)
    return float(np.max(np.abs(u_b))), float(np.max(np.abs(u_far)))


# ---------------------------------------------------------------------------
# Datasets
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ScatteringDataset:
    """Data matrix ``V[r, s] = V(x_r, x_s)`` with acquisition metadata."""

    values: np.ndarray
    acquisition: Acquisition
    medium: MediumConfig
    noise_tau: float = 0.0
    seed: int = 0
    solver_residuals: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        shape = (self.acquisition.n_receivers, self.acquisition.n_sources)
        if v.shape != shape:
            raise ContractError(f"data matrix shape {v.shape} does not match acquisition {shape}")
        object.__setattr__(self, "values", v)


def generate_dataset(
    scene: Scene,
    acquisition: Acquisition,
    resolution: float = 6.0,
    boundary_nodes: Optional[int] = None,
    green: Optional[GreenEvaluator] = None,
    system: Optional[ForwardSystem] = None,
) -> ScatteringDataset:
    """Solve for every source and tabulate ``V`` at the receivers.

    Raises
    ------
    ConfigurationError
        If the scatterers are not inside the acquisition circle.
    SolverError
        Annotated with the offending source index.
    """
    if system is None:
        disc = Discretization.from_scene(scene, resolution, boundary_nodes)
        system = assemble(scene, disc, green)
    pts = system.collocation_points()
    if len(pts) and np.max(np.hypot(pts[:, 0], pts[:, 1])) >= acquisition.radius:
        raise ConfigurationError("scatterers must lie inside the acquisition circle")
    sources = acquisition.source_points
    receivers = acquisition.receiver_points
    values = np.zeros((len(receivers), len(sources)), complex)
    rel = np.zeros(len(sources))
    if system.discretization.size:
        solutions = solve_sources(system, sources)
        rel = np.array([sol.residual for sol in solutions])
        for s, sol in enumerate(solutions):
            values[:, s] = evaluate_V(sol, receivers)
    return ScatteringDataset(values, acquisition, scene.medium, 0.0, 0, rel)


def add_noise(dataset: ScatteringDataset, tau: float, seed: int) -> ScatteringDataset:
    """``V + tau * (lambda / ||lambda||_F) * ||V||_F`` with complex standard
    normal ``lambda`` drawn from the seeded stream.

    Raises
    ------
    DomainError
        If ``tau`` is negative.
    """
    from .dataio import seeded_normals

    if tau < 0 or not np.isfinite(tau):
        raise DomainError("noise level must be a finite non-negative number")
    v = dataset.values
    if tau == 0:
        return replace(dataset, values=v.copy(), noise_tau=0.0, seed=int(seed))
    draws = seeded_normals(seed, 2 * v.size)
    lam = (draws[: v.size] + 1j * draws[v.size:]).reshape(v.shape)
    noisy = v + tau * lam / np.linalg.norm(lam) * np.linalg.norm(v)
    return replace(dataset, values=noisy, noise_tau=float(tau), seed=int(seed))
