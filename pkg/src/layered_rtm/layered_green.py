"""Background Green's function of two half-planes joined along ``x2 = 0``.

``G(x, z)`` solves ``(Delta + kappa0^2) G = -delta_z`` with ``kappa0 = kappa1``
for ``x2 > 0`` and ``kappa2`` for ``x2 < 0``, outgoing at infinity, with ``G``
and ``dG/dx2`` continuous across the plane.

Writing ``a`` for the medium that contains the source ``z`` and ``b`` for the
other one, ``beta_j(xi) = sqrt(kappa_j^2 - xi^2)`` with ``Im beta_j >= 0``,
``dx = x1 - z1`` and heights ``hx = |x2|``, ``hz = |z2|``:

* same side::

      G = Phi_a(x, z) + i/(4 pi) int  F_R(xi) exp(i xi dx) dxi
      F_R = (ka^2 - kb^2) / (beta_a (beta_a + beta_b)^2) * exp(i beta_a (hx + hz))

* opposite sides::

      G = i/(4 pi) int  F_T(xi) exp(i xi dx) dxi
      F_T = 2 / (beta_a + beta_b) * exp(i beta_a hz + i beta_b hx)

The reflection numerator ``(beta_a - beta_b)(beta_a + beta_b) = ka^2 - kb^2``
is used in closed form so that no cancellation occurs near the branch points.

Quadrature
----------
The even integrand is folded onto ``[0, inf)``. The interval ``[0, kappa_m]``
(``kappa_m = tail_factor * max kappa``) is split at the branch points and each
piece mapped by ``xi = a + L (1 - cos theta) / 2``, which removes the square-root
behaviour at both ends; uniform Gauss-Legendre panels in ``theta`` are sized to
the phase variation. Beyond ``kappa_m`` the contour is turned onto the ray
``kappa_m + u exp(i phi)`` of steepest descent of ``exp(i xi |dx| - xi H)``.
Because every kernel is purely imaginary (cosine type) or real (sine type) on
the real tail, the mirrored ray is the complex conjugate and only one ray is
integrated.

On ``[0, kappa_m]`` both ``cos(xi dx)`` and the height factors separate into a
point part and a source part, so all-pairs evaluation reduces to matrix
products.
"""

from dataclasses import dataclass, field
import threading
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial.laguerre import laggauss
from numpy.polynomial.legendre import leggauss

from .errors import DomainError, NumericalAccuracyError, SingularityError
from .geometry import MediumConfig, circle_points
from .specfun import hankel1_0, hankel1_01

_PREFACTOR = 1j / (4.0 * np.pi)
# |tail| below exp(-_TAIL_SKIP) is dropped
_TAIL_SKIP = 40.0
_CHUNK_ELEMENTS = 2_000_000


# ---------------------------------------------------------------------------
# Free-space kernel
# ---------------------------------------------------------------------------
def _pair_arrays(x, z):
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    if x.shape[-1] != 2 or z.shape[-1] != 2:
        raise DomainError("points must have two coordinates")
    x, z = np.broadcast_arrays(x, z)
    return x, z


def phi(kappa: float, x, z):
    """Free-space fundamental solution ``(i/4) H0(kappa |x - z|)``.

    Raises
    ------
    SingularityError
        If ``x`` and ``z`` coincide.
    """
    x, z = _pair_arrays(x, z)
    r = np.hypot(x[..., 0] - z[..., 0], x[..., 1] - z[..., 1])
    if np.any(r == 0):
        raise SingularityError("phi is singular at x = z")
    out = 0.25j * np.asarray(hankel1_0(kappa * r))
    return out.item() if out.ndim == 0 else out


def phi_gradient(kappa: float, x, z):
    """Gradient in ``x`` of :func:`phi`: ``-(i kappa/4) H1(kappa r) (x - z)/r``."""
    x, z = _pair_arrays(x, z)
    d = x - z
    r = np.hypot(d[..., 0], d[..., 1])
    if np.any(r == 0):
        raise SingularityError("phi is singular at x = z")
    _, h1 = hankel1_01(kappa * r)
    return (-0.25j * kappa * h1 / r)[..., None] * d


@dataclass(frozen=True)
class FreeSpaceKernel:
    """Radially symmetric fundamental solution for a fixed wavenumber."""

    kappa: float

    def __call__(self, x, z):
        return phi(self.kappa, x, z)

    def gradient(self, x, z):
        return phi_gradient(self.kappa, x, z)


# ---------------------------------------------------------------------------
# Quadrature rules
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class QuadratureConfig:
    """Parameters of the Sommerfeld-integral quadrature.

    Attributes
    ----------
    gauss_order : int
        Gauss-Legendre nodes per real-axis panel.
    phase_per_panel : float
        Largest phase change (radians) allowed inside one real-axis panel.
    tail_factor : float
        The ray starts at ``tail_factor * max(kappa1, kappa2)``.
    ray_order : int
        Gauss-Legendre nodes per ray panel.
    laguerre_order : int
        Gauss-Laguerre nodes for the far end of the ray.
    max_ray_panels : int
        Cap on geometrically graded ray panels (near-coincident pairs).
    refine : int
        Multiplier of all panel counts; 2 is used for error estimates.
    tolerance : float
        Absolute accuracy target used by checked evaluations.
    """

    gauss_order: int = 16
    phase_per_panel: float = 12.0
    tail_factor: float = 1.5
    ray_order: int = 12
    laguerre_order: int = 24
    max_ray_panels: int = 48
    refine: int = 1
    tolerance: float = 1e-8

    def refined(self, factor: int = 2) -> "QuadratureConfig":
        return QuadratureConfig(
            self.gauss_order,
            self.phase_per_panel,
            self.tail_factor,
            self.ray_order + 4,
            self.laguerre_order + 8,
            self.max_ray_panels,
            self.refine * factor,
            self.tolerance,
        )


_RULES = {}


def _gauss(n):
    if ("gl", n) not in _RULES:
        _RULES[("gl", n)] = leggauss(n)
    return _RULES[("gl", n)]


def _laguerre(n):
    if ("lag", n) not in _RULES:
        t, w = laggauss(n)
        _RULES[("lag", n)] = (t, w * np.exp(t))
    return _RULES[("lag", n)]


def _panel_count(phase, q: QuadratureConfig):
    scalar = np.ndim(phase) == 0
    n = np.ceil(q.refine * 0.5 * np.pi * np.atleast_1d(phase) / q.phase_per_panel)
    n = np.maximum(n, 1).astype(int)
    # round up to at most four levels per octave to limit distinct node sets
    big = n > 8
    if np.any(big):
        step = 2 ** (np.floor(np.log2(n[big])).astype(int) - 2)
        n[big] = ((n[big] + step - 1) // step) * step
    return int(n[0]) if scalar else n


@dataclass
class _AxisRule:
    xi: np.ndarray
    weights: np.ndarray
    beta_a: np.ndarray
    beta_b: np.ndarray


def _beta_from_offset(offset, kappa, xi):
    """``sqrt(kappa^2 - xi^2)`` on the upper branch given ``offset = kappa - xi``."""
    prod = offset * (kappa + xi)
    return np.where(prod >= 0, np.sqrt(np.abs(prod)) + 0j, 1j * np.sqrt(np.abs(prod)))


def _axis_rule(ka, kb, kmax_tail, max_dx, max_h, q: QuadratureConfig) -> _AxisRule:
    """Nodes on ``[0, kappa_m]`` good for all pairs with ``|dx| <= max_dx`` and
    ``hx + hz <= max_h``."""
    knots = np.unique([0.0, ka, kb, kmax_tail])
    gx, gw = _gauss(q.gauss_order)
    kref = max(ka, kb)
    xs, ws, ba, bb = [], [], [], []
    for a, b in zip(knots[:-1], knots[1:]):
        length = b - a
        n = int(_panel_count(length * max_dx + kref * max_h, q))
        edges = np.linspace(0.0, np.pi, n + 1)
        theta = (0.5 * (edges[1:] - edges[:-1])[:, None] * (gx[None, :] + 1) + edges[:-1, None]).ravel()
        wt = (0.5 * (edges[1:] - edges[:-1])[:, None] * gw[None, :]).ravel()
        s2 = np.sin(0.5 * theta) ** 2
        c2 = np.cos(0.5 * theta) ** 2
        xi = a + length * s2
        jac = 0.5 * length * np.sin(theta)
        betas = []
        for kappa in (ka, kb):
            if kappa == a:
                off = -length * s2
            elif kappa == b:
                off = length * c2
            else:
                off = kappa - xi
            betas.append(_beta_from_offset(off, kappa, xi))
        xs.append(xi)
        ws.append(wt * jac)
        ba.append(betas[0])
        bb.append(betas[1])
    return _AxisRule(np.concatenate(xs), np.concatenate(ws), np.concatenate(ba), np.concatenate(bb))


def _ray_rule(n_geo, s_min, q: QuadratureConfig):
    """Nodes and weights in the scaled ray variable ``s`` on ``[0, inf)``."""
    gx, gw = _gauss(q.ray_order)
    if n_geo > 0:
        inner = s_min * 2.0 ** np.arange(n_geo)
        edges = np.concatenate([[0.0], inner, [1.0, 2.0, 3.0, 4.0]])
    else:
        edges = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    half = 0.5 * (edges[1:] - edges[:-1])
    s = (half[:, None] * (gx[None, :] + 1) + edges[:-1, None]).ravel()
    w = (half[:, None] * gw[None, :]).ravel()
    lt, lw = _laguerre(q.laguerre_order)
    return np.concatenate([s, 4.0 + lt]), np.concatenate([w, lw])


# ---------------------------------------------------------------------------
# Evaluator
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class _Block:
    """Pairs with a fixed source side and fixed same/opposite relation."""

    same: bool
    ka: float
    kb: float


def _kernel_coefficient(block, beta_a, beta_b):
    if block.same:
        return (block.ka**2 - block.kb**2) / (beta_a * (beta_a + beta_b) ** 2)
    return 2.0 / (beta_a + beta_b)


@dataclass(frozen=True)
class GreenEvaluator:
    """Configured evaluator of the two-layer Green's function.

    Immutable after construction; the optional memo of scalar evaluations
    is guarded by a lock so that one evaluator can be shared by threads.

    Parameters
    ----------
    medium : MediumConfig
        Upper and lower wavenumbers.
    quadrature : QuadratureConfig
        Sommerfeld quadrature parameters.
    cache : bool
        Memoize scalar ``value`` calls keyed by ``(x1 - z1, x2, z2)``.
    """

    medium: MediumConfig
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    cache: bool = False
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    @property
    def tail_start(self) -> float:
        return self.quadrature.tail_factor * self.medium.kappa_max

    def with_quadrature(self, quadrature: QuadratureConfig) -> "GreenEvaluator":
        return GreenEvaluator(self.medium, quadrature, False)

    # -- classification -------------------------------------------------
    def _blocks(self, x2, z2):
        k1, k2 = self.medium.kappa1, self.medium.kappa2
        xu = x2 >= 0
        zu = z2 >= 0
        out = []
        for z_up in (True, False):
            ka, kb = (k1, k2) if z_up else (k2, k1)
            for same in (True, False):
                out.append((_Block(same, ka, kb), z_up, z_up if same else not z_up))
        return xu, zu, out

    # -- tail along the steepest-descent ray ----------------------------
    def _tail(self, block, dx, hx, hz, sx, gradient):
        """Ray contribution for paired arrays; returns value and gradient parts."""
        q = self.quadrature
        km = self.tail_start
        n = dx.size
        val = np.zeros(n, complex)
        grad = np.zeros((n, 2), complex) if gradient else None
        adx = np.abs(dx)
        H = hx + hz
        rho = np.hypot(adx, H)
        # magnitude of the integrand at the start of the ray
        ga = np.sqrt(max(km**2 - block.ka**2, 0.0))
        gb = np.sqrt(max(km**2 - block.kb**2, 0.0))
        decay = ga * H if block.same else ga * hz + gb * hx
        active = decay < _TAIL_SKIP
        if not np.any(active):
            return val, grad
        idx = np.nonzero(active)[0]
        s_min = rho[idx] * km / 8.0
        n_geo = np.where(s_min < 1.0, np.ceil(np.log2(1.0 / np.maximum(s_min, 1e-300))), 0)
        n_geo = np.minimum(n_geo, q.max_ray_panels).astype(int)
        for ng in np.unique(n_geo):
            sel = idx[n_geo == ng]
            # shared s-grid; geometric start adapted to the smallest pair
            smin = float(np.min(rho[sel])) * km / 8.0 if ng > 0 else 1.0
            smin = max(smin, 2.0 ** (-ng))
            s, ws = _ray_rule(int(ng), smin, q)
            for chunk in np.array_split(sel, max(1, sel.size * s.size // _CHUNK_ELEMENTS + 1)):
                if chunk.size == 0:
                    continue
                r = rho[chunk][:, None]
                direction = (H[chunk][:, None] + 1j * adx[chunk][:, None]) / r
                zeta = km + (s[None, :] / r) * direction
                dzeta = direction / r * ws[None, :]
                zz = zeta * zeta
                beta_a = 1j * np.sqrt(zz - block.ka**2)
                beta_b = 1j * np.sqrt(zz - block.kb**2)
                coef = _kernel_coefficient(block, beta_a, beta_b)
                hxc, hzc = hx[chunk][:, None], hz[chunk][:, None]
                if block.same:
                    expo = 1j * beta_a * (hxc + hzc)
                    beta_x = beta_a
                else:
                    expo = 1j * (beta_a * hzc + beta_b * hxc)
                    beta_x = beta_b
                core = coef * np.exp(expo + 1j * zeta * adx[chunk][:, None]) * dzeta
                val[chunk] = 2j * np.sum(core, axis=1).imag
                if gradient:
                    gx = np.sum(1j * zeta * core, axis=1).imag
                    gz = np.sum(1j * beta_x * core, axis=1).imag
                    grad[chunk, 0] = 2j * np.sign(dx[chunk]) * gx
                    grad[chunk, 1] = 2j * sx[chunk] * gz
        return val, grad

    # -- real-axis factors ------------------------------------------------
    @staticmethod
    def _point_factors(block, rule, x1, hx):
        beta_x = rule.beta_a if block.same else rule.beta_b
        e = np.exp(1j * np.outer(hx, beta_x))
        arg = np.outer(x1, rule.xi)
        return e, np.cos(arg), np.sin(arg), beta_x

    @staticmethod
    def _source_factors(block, rule, z1, hz):
        coef = _kernel_coefficient(block, rule.beta_a, rule.beta_b) * rule.weights
        e = np.exp(1j * np.outer(hz, rule.beta_a)) * coef[None, :]
        arg = np.outer(z1, rule.xi)
        return e * np.cos(arg), e * np.sin(arg)

    # -- elementwise evaluation ------------------------------------------
    def _pairs(self, x, z, gradient, direct):
        x, z = _pair_arrays(x, z)
        shape = x.shape[:-1]
        X = x.reshape(-1, 2)
        Z = z.reshape(-1, 2)
        n = X.shape[0]
        coincide = (X[:, 0] == Z[:, 0]) & (X[:, 1] == Z[:, 1])
        # without the direct term only the interface itself is singular
        if np.any(coincide & (direct | (X[:, 1] == 0))):
            raise SingularityError("G(x, z) is singular at x = z")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(Z))):
            raise DomainError("points must be finite")
        val = np.zeros(n, complex)
        grad = np.zeros((n, 2), complex) if gradient else None
        xu, zu, blocks = self._blocks(X[:, 1], Z[:, 1])
        km = self.tail_start
        for block, z_up, x_up in blocks:
            sel = np.nonzero((zu == z_up) & (xu == x_up))[0]
            if sel.size == 0:
                continue
            if block.same and block.ka == block.kb:
                continue
            dx = X[sel, 0] - Z[sel, 0]
            hx, hz = np.abs(X[sel, 1]), np.abs(Z[sel, 1])
            sx = np.where(x_up, 1.0, -1.0) * np.ones(sel.size)
            kref = max(block.ka, block.kb)
            phase = km * np.abs(dx) + kref * (hx + hz)
            level = _panel_count(phase, self.quadrature)
            for lv in np.unique(level):
                grp = np.nonzero(level == lv)[0]
                rule = _axis_rule(
                    block.ka, block.kb, km, float(np.max(np.abs(dx[grp]))),
                    float(np.max(hx[grp] + hz[grp])), self.quadrature,
                )
                for chunk in np.array_split(grp, max(1, grp.size * rule.xi.size // _CHUNK_ELEMENTS + 1)):
                    if chunk.size == 0:
                        continue
                    ids = sel[chunk]
                    e, cx, sn, beta_x = self._point_factors(block, rule, X[ids, 0], hx[chunk])
                    bc, bs = self._source_factors(block, rule, Z[ids, 0], hz[chunk])
                    val[ids] += 2 * _PREFACTOR * np.sum(e * (cx * bc + sn * bs), axis=1)
                    if gradient:
                        d1 = np.sum(e * rule.xi * (-sn * bc + cx * bs), axis=1)
                        d2 = np.sum(e * 1j * beta_x * (cx * bc + sn * bs), axis=1)
                        grad[ids, 0] += 2 * _PREFACTOR * d1
                        grad[ids, 1] += 2 * _PREFACTOR * sx[chunk] * d2
            tv, tg = self._tail(block, dx, hx, hz, sx, gradient)
            val[sel] += _PREFACTOR * tv
            if gradient:
                grad[sel] += _PREFACTOR * tg
            if direct and block.same:
                val[sel] += phi(block.ka, X[sel], Z[sel])
                if gradient:
                    grad[sel] += phi_gradient(block.ka, X[sel], Z[sel])
        if direct:
            # same-side pairs with equal wavenumbers skip the loop body above
            for block, z_up, x_up in blocks:
                if block.same and block.ka == block.kb:
                    sel = np.nonzero((zu == z_up) & (xu == x_up))[0]
                    if sel.size:
                        val[sel] += phi(block.ka, X[sel], Z[sel])
                        if gradient:
                            grad[sel] += phi_gradient(block.ka, X[sel], Z[sel])
        val = val.reshape(shape)
        if gradient:
            grad = grad.reshape(shape + (2,))
        return val, grad

    def value(self, x, z):
        """``G(x, z)`` for broadcast-compatible point arrays."""
        if self.cache and np.ndim(x) == 1 and np.ndim(z) == 1:
            key = (float(x[0] - z[0]), float(x[1]), float(z[1]))
            with self._lock:
                hit = self._memo.get(key)
            if hit is not None:
                return hit
            out = complex(self._pairs(x, z, False, True)[0])
            with self._lock:
                self._memo[key] = out
            return out
        v, _ = self._pairs(x, z, False, True)
        return v.item() if v.ndim == 0 else v

    def scattered(self, x, z):
        """``G`` without the same-side free-space term."""
        v, _ = self._pairs(x, z, False, False)
        return v.item() if v.ndim == 0 else v

    def gradient(self, x, z):
        """``grad_x G(x, z)`` with shape ``(..., 2)``."""
        return self._pairs(x, z, True, True)[1]

    def value_and_gradient(self, x, z, direct: bool = True):
        return self._pairs(x, z, True, direct)

    # -- all-pairs evaluation --------------------------------------------
    def matrix(self, points, sources, gradient: bool = False, direct: bool = True):
        """All-pairs ``G(points[i], sources[k])``.

        Parameters
        ----------
        points : array_like, shape (P, 2)
        sources : array_like, shape (S, 2)
        gradient : bool
            Also return ``grad_x G`` with shape ``(P, S, 2)``.
        direct : bool
            Include the same-side free-space term. Coincident pairs are
            allowed only when ``direct`` is false; their remainder is finite.

        Returns
        -------
        ndarray or tuple of ndarray
        """
        X = np.asarray(points, dtype=float).reshape(-1, 2)
        Z = np.asarray(sources, dtype=float).reshape(-1, 2)
        P, S = X.shape[0], Z.shape[0]
        val = np.zeros((P, S), complex)
        grad = np.zeros((P, S, 2), complex) if gradient else None
        xu, zu, blocks = self._blocks(X[:, 1], Z[:, 1])
        km = self.tail_start
        for block, z_up, x_up in blocks:
            ip = np.nonzero(xu == x_up)[0]
            iz = np.nonzero(zu == z_up)[0]
            if ip.size == 0 or iz.size == 0:
                continue
            if not (block.same and block.ka == block.kb):
                self._matrix_block(block, X, Z, ip, iz, x_up, val, grad)
            if direct and block.same:
                xx = X[ip][:, None, :]
                zz = Z[iz][None, :, :]
                val[np.ix_(ip, iz)] += phi(block.ka, xx, zz)
                if gradient:
                    grad[np.ix_(ip, iz)] += phi_gradient(block.ka, xx, zz)
        return (val, grad) if gradient else val

    def _matrix_block(self, block, X, Z, ip, iz, x_up, val, grad):
        km = self.tail_start
        x1, hx = X[ip, 0], np.abs(X[ip, 1])
        z1, hz = Z[iz, 0], np.abs(Z[iz, 1])
        max_dx = max(abs(x1.max() - z1.min()), abs(z1.max() - x1.min()))
        rule = _axis_rule(block.ka, block.kb, km, max_dx, hx.max() + hz.max(), self.quadrature)
        bc, bs = self._source_factors(block, rule, z1, hz)
        sx = 1.0 if x_up else -1.0
        step = max(1, _CHUNK_ELEMENTS // max(rule.xi.size, 1))
        for start in range(0, ip.size, step):
            rows = slice(start, start + step)
            e, cx, sn, beta_x = self._point_factors(block, rule, x1[rows], hx[rows])
            ec, es = e * cx, e * sn
            part = 2 * _PREFACTOR * (ec @ bc.T + es @ bs.T)
            val[np.ix_(ip[rows], iz)] += part
            if grad is not None:
                d1 = (es * rule.xi) @ (-bc.T) + (ec * rule.xi) @ bs.T
                ib = 1j * beta_x
                d2 = (ec * ib) @ bc.T + (es * ib) @ bs.T
                grad[np.ix_(ip[rows], iz)] += 2 * _PREFACTOR * np.stack([d1, sx * d2], axis=-1)
        # ray tails, pairwise
        PP, ZZ = np.meshgrid(ip, iz, indexing="ij")
        PP, ZZ = PP.ravel(), ZZ.ravel()
        dx = X[PP, 0] - Z[ZZ, 0]
        hxp, hzp = np.abs(X[PP, 1]), np.abs(Z[ZZ, 1])
        if np.any((dx == 0) & (hxp + hzp == 0)):
            raise SingularityError("G(x, z) is singular at x = z on the interface")
        tv, tg = self._tail(block, dx, hxp, hzp, np.full(dx.size, sx), grad is not None)
        val[PP, ZZ] += _PREFACTOR * tv
        if grad is not None:
            grad[PP, ZZ] += _PREFACTOR * tg

    # -- accuracy control --------------------------------------------------
    def error_estimate(self, x, z):
        """Difference between the default and a refined quadrature."""
        fine = self.with_quadrature(self.quadrature.refined())
        return np.abs(np.asarray(self.scattered(x, z)) - np.asarray(fine.scattered(x, z)))

    def checked_value(self, x, z):
        """``G(x, z)`` with a refinement check.

        Raises
        ------
        NumericalAccuracyError
            If the refinement changes any value by more than the tolerance.
        """
        est = np.max(self.error_estimate(x, z))
        if est > self.quadrature.tolerance:
            raise NumericalAccuracyError(
                f"Sommerfeld quadrature error estimate {est:.2e} exceeds tolerance", est
            )
        return self.value(x, z)


# ---------------------------------------------------------------------------
# Functional interface
# ---------------------------------------------------------------------------
def green(evaluator: GreenEvaluator, x, z):
    """``G(x, z)``; see :class:`GreenEvaluator`."""
    return evaluator.value(x, z)


def green_scattered(evaluator: GreenEvaluator, x, z):
    """``G`` minus the same-side free-space term; ``G`` itself across the plane."""
    return evaluator.scattered(x, z)


def green_gradient(evaluator: GreenEvaluator, x, z):
    """``grad_x G(x, z)``."""
    return evaluator.gradient(x, z)


def _check_circle_points(x, z, R):
    for p in (x, z):
        p = np.asarray(p, dtype=float)
        if np.hypot(*p) >= R:
            raise DomainError("points must lie inside the integration circle")
        if p[1] == 0:
            raise DomainError("points must not lie on the interface")


def helmholtz_kirchhoff_integral(evaluator: GreenEvaluator, x, z, R: float, n_quad: int):
    """Trapezoid-rule value of the boundary integral on the circle of radius ``R``
    of ``conj(G(., x)) dG(., z)/dnu - conj(dG(., x)/dnu) G(., z)``."""
    _check_circle_points(x, z, R)
    xi = circle_points(R, n_quad)
    normal = xi / R
    val, grad = evaluator.matrix(xi, np.array([x, z], dtype=float), gradient=True)
    dn = np.einsum("pkd,pd->pk", grad, normal)
    integrand = np.conj(val[:, 0]) * dn[:, 1] - np.conj(dn[:, 0]) * val[:, 1]
    return (2 * np.pi * R / n_quad) * integrand.sum()


def verify_helmholtz_kirchhoff(evaluator: GreenEvaluator, x, z, R: float, n_quad: int) -> float:
    """Residual ``|integral - 2i Im G(x, z)|`` of the Helmholtz-Kirchhoff identity.

    Raises
    ------
    DomainError
        If a point lies on the interface or outside the circle.
    """
    integral = helmholtz_kirchhoff_integral(evaluator, x, z, R, n_quad)
    g = evaluator.value(np.asarray(x, float), np.asarray(z, float))
    return float(abs(integral - 2j * np.imag(g)))


def zeta_remainder(evaluator: GreenEvaluator, x, z, R: float, n_quad: int) -> complex:
    """``int kappa(xi) conj(G(x, xi)) G(xi, z) ds - Im G(x, z)`` on the circle of radius ``R``."""
    _check_circle_points(x, z, R)
    xi = circle_points(R, n_quad)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    g_x = evaluator.matrix(x[None, :], xi)[0]
    g_z = evaluator.matrix(xi, z[None, :])[:, 0]
    kap = evaluator.medium.kappa_at(xi)
    integral = (2 * np.pi * R / n_quad) * np.sum(kap * np.conj(g_x) * g_z)
    return complex(integral - np.imag(evaluator.value(x, z)))
