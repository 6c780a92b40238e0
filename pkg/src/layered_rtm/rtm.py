"""Reverse time migration indicator.

For a sampling point ``z``::

    Ind(z) = -Im{ c_s c_r sum_s sum_r k(x_r) k(x_s) G(z, x_s) G(z, x_r) conj(V[r, s]) }

with ``c = 2 pi R / N`` and ``k(x) = kappa1`` above the plane, ``kappa2``
otherwise (evaluated per source and per receiver). The back-propagated field
of each source has the closed form
``W(z, x_s) = -c_r sum_r G(z, x_r) conj(V[r, s])``, so the indicator is computed
as two matrix contractions.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
import os
from typing import Optional

import numpy as np

from .errors import ContractError, DegenerateRangeError
from .geometry import SamplingGrid, Scene
from .layered_green import GreenEvaluator


def worker_count() -> int:
    """Worker cap from ``RTM_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("RTM_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class IndicatorField:
    """Indicator values on a sampling grid; ``values[i, j]`` sits at ``(x_j, y_i)``."""

    grid: SamplingGrid
    values: np.ndarray
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.ny, self.grid.nx):
            raise ContractError(f"field shape {v.shape} does not match grid ({self.grid.ny}, {self.grid.nx})")
        if not np.all(np.isfinite(v)):
            raise ContractError("indicator values must be finite")
        object.__setattr__(self, "values", v)

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    def argmax_point(self) -> np.ndarray:
        """Grid point of largest ``|Ind|``."""
        i, j = np.unravel_index(np.argmax(self.magnitude), self.values.shape)
        return np.array([self.grid.xs[j], self.grid.ys[i]])


def _check_dataset(dataset, green: GreenEvaluator):
    acq = dataset.acquisition
    if dataset.values.shape != (acq.n_receivers, acq.n_sources):
        raise ContractError("dataset values do not match its acquisition")
    if dataset.medium != green.medium:
        raise ContractError("dataset medium differs from the Green evaluator medium")


@dataclass
class GreenTables:
    """``G(z, x_s)`` and ``G(z, x_r)`` on a point set, shared when the circles coincide."""

    sources: np.ndarray
    receivers: np.ndarray

    @classmethod
    def build(cls, green: GreenEvaluator, points, acquisition) -> "GreenTables":
        pts = np.asarray(points, float).reshape(-1, 2)
        src = acquisition.source_points
        gs = _parallel_matrix(green, pts, src)
        if acquisition.coincident:
            return cls(gs, gs)
        return cls(gs, _parallel_matrix(green, pts, acquisition.receiver_points))


def _parallel_matrix(green, points, circle):
    workers = worker_count()
    if workers == 1 or len(circle) < 2 * workers:
        return green.matrix(points, circle)
    parts = np.array_split(np.arange(len(circle)), workers)
    with ThreadPoolExecutor(workers) as pool:
        cols = list(pool.map(lambda idx: green.matrix(points, circle[idx]), parts))
    return np.concatenate(cols, axis=1)


def _weights(dataset):
    acq = dataset.acquisition
    med = dataset.medium
    ks = med.kappa_at(acq.source_points)
    kr = med.kappa_at(acq.receiver_points)
    cs = 2 * np.pi * acq.radius / acq.n_sources
    cr = 2 * np.pi * acq.radius / acq.n_receivers
    return ks, kr, cs, cr


def indicator_values(dataset, tables: GreenTables) -> np.ndarray:
    """Flat indicator values for the points behind ``tables``."""
    ks, kr, cs, cr = _weights(dataset)
    # a[z, s] = sum_r k_r G(z, x_r) conj(V[r, s])
    a = (tables.receivers * kr[None, :]) @ np.conj(dataset.values)
    return -cs * cr * np.sum(tables.sources * ks[None, :] * a, axis=1).imag


def indicator(dataset, grid: SamplingGrid, green: GreenEvaluator, tables: Optional[GreenTables] = None) -> IndicatorField:
    """RTM indicator on the sampling grid.

    Raises
    ------
    ContractError
        If the dataset is inconsistent with its acquisition or with ``green``,
        or the grid leaves the acquisition circle.
    """
    _check_dataset(dataset, green)
    if np.max(np.hypot(*grid.corners.T)) >= dataset.acquisition.radius:
        raise ContractError("sampling grid must lie inside the acquisition circle")
    if tables is None:
        tables = GreenTables.build(green, grid.points, dataset.acquisition)
    vals = indicator_values(dataset, tables).reshape(grid.ny, grid.nx)
    acq = dataset.acquisition
    meta = {
        "ns": acq.n_sources, "nr": acq.n_receivers, "R": acq.radius,
        "kappa1": dataset.medium.kappa1, "kappa2": dataset.medium.kappa2,
        "tau": dataset.noise_tau, "seed": dataset.seed,
    }
    return IndicatorField(grid, vals, meta)


def indicator_direct(dataset, points, green: GreenEvaluator) -> np.ndarray:
    """Literal double-sum evaluation, one point at a time (reference path)."""
    _check_dataset(dataset, green)
    tables = GreenTables.build(green, points, dataset.acquisition)
    ks, kr, cs, cr = _weights(dataset)
    V = dataset.values
    out = np.zeros(len(tables.sources))
    for z in range(len(out)):
        acc = 0.0j
        for s in range(V.shape[1]):
            for r in range(V.shape[0]):
                acc += kr[r] * ks[s] * tables.sources[z, s] * tables.receivers[z, r] * np.conj(V[r, s])
        out[z] = -(cs * cr * acc).imag
    return out


def back_propagate(
    dataset, s: int, green: GreenEvaluator, points, receiver_weighting: bool = False,
    tables: Optional[GreenTables] = None,
) -> np.ndarray:
    """Back-propagated field ``W(z, x_s) = -c_r sum_r G(z, x_r) conj(V[r, s])``.

    With ``receiver_weighting`` each receiver term also carries its ``k(x_r)``.

    Raises
    ------
    IndexError
        For an invalid source index.
    """
    _check_dataset(dataset, green)
    ns = dataset.acquisition.n_sources
    if not 0 <= s < ns:
        raise IndexError(f"source index {s} out of range 0..{ns - 1}")
    if tables is None:
        tables = GreenTables.build(green, points, dataset.acquisition)
    _, kr, _, cr = _weights(dataset)
    col = np.conj(dataset.values[:, s])
    if receiver_weighting:
        col = kr * col
    return -cr * (tables.receivers @ col)


def cross_correlate(dataset, fields: np.ndarray, tables: GreenTables) -> np.ndarray:
    """``Im{ c_s sum_s k(x_s) G(z, x_s) W(z, x_s) }`` for back-propagated fields
    stacked as columns of ``fields``."""
    ks, _, cs, _ = _weights(dataset)
    return (cs * np.sum(ks[None, :] * tables.sources * fields, axis=1)).imag


def normalize(field_: IndicatorField) -> IndicatorField:
    """Affine rescale to ``[0, 1]``.

    Raises
    ------
    DegenerateRangeError
        For a constant field.
    """
    v = field_.values
    lo, hi = float(v.min()), float(v.max())
    if not hi > lo:
        raise DegenerateRangeError("cannot normalize a constant field")
    return replace(field_, values=(v - lo) / (hi - lo))


@dataclass(frozen=True)
class PeakReport:
    """Location of the largest ``|Ind|`` relative to the true scatterers."""

    argmax: np.ndarray
    distance: float
    contrast: float

    def lines(self):
        return [
            f"argmax |Ind| at ({self.argmax[0]:.4f}, {self.argmax[1]:.4f})",
            f"distance to scatterers {self.distance:.4f}",
            f"contrast ratio {self.contrast:.3f}",
        ]


def peak_report(field_: IndicatorField, scene: Scene, near: float = 0.5, far: float = 1.5) -> PeakReport:
    """Argmax of ``|Ind|``, its distance to ``dD u closure(B)`` and the ratio of
    the largest ``|Ind|`` within ``near`` of the scatterers to the largest beyond ``far``."""
    pts = field_.grid.points
    mag = field_.magnitude.ravel()
    dist = scene.distance_to_scatterers(pts)
    k = int(np.argmax(mag))
    near_max = float(np.max(mag[dist <= near])) if np.any(dist <= near) else 0.0
    far_max = float(np.max(mag[dist > far])) if np.any(dist > far) else 0.0
    contrast = near_max / far_max if far_max > 0 else float("inf")
    return PeakReport(pts[k], float(dist[k]), contrast)
