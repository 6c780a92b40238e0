"""Bessel and Hankel functions of orders 0 and 1 for real positive arguments.

All routines are vectorized over numpy arrays and return python floats
(or complex) for scalar input. Three argument ranges are used:

    t <= 8        ascending power series (logarithmic term for Y)
    8 < t <= 25   Miller backward recurrence normalized by
                  J0 + 2*sum J_2k = 1, with Neumann series for Y0, Y1
    t > 25        Hankel asymptotic expansion

The asymptotic expansion alone is only good to about exp(-2t), which is
why the middle band exists.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError

EULER_GAMMA = 0.57721566490153286060651209
TWO_OVER_PI = 2.0 / np.pi

SERIES_LIMIT = 8.0
ASYMPTOTIC_LIMIT = 25.0

_N_SERIES = 30
_N_MILLER = 80
_N_ASYMPTOTIC = 24

# harmonic numbers H_0 .. H_{_N_SERIES+1}
_HARMONIC = np.concatenate([[0.0], np.cumsum(1.0 / np.arange(1, _N_SERIES + 2))])


@dataclass(frozen=True)
class CylinderValue:
    """Pair of first- and second-kind cylinder functions of one order."""

    j: float
    y: float

    @property
    def hankel1(self):
        return self.j + 1j * self.y


def _as_array(t):
    arr = np.asarray(t, dtype=float)
    return arr, arr.ndim == 0


def _series(t):
    q = 0.25 * t * t
    # order 0
    term = np.ones_like(t)
    j0 = np.ones_like(t)
    s0 = np.zeros_like(t)
    # order 1 (without the t/2 prefactor)
    term1 = np.ones_like(t)
    j1 = np.ones_like(t)
    s1 = (_HARMONIC[0] + _HARMONIC[1] - 2.0 * EULER_GAMMA) * term1
    for k in range(1, _N_SERIES):
        term = term * (-q) / (k * k)
        j0 = j0 + term
        s0 = s0 + _HARMONIC[k] * term
        term1 = term1 * (-q) / (k * (k + 1))
        j1 = j1 + term1
        s1 = s1 + (_HARMONIC[k] + _HARMONIC[k + 1] - 2.0 * EULER_GAMMA) * term1
    half = 0.5 * t
    j1 = half * j1
    log_half = np.log(half)
    y0 = TWO_OVER_PI * ((log_half + EULER_GAMMA) * j0 - s0)
    y1 = -TWO_OVER_PI / t + TWO_OVER_PI * log_half * j1 - half * s1 / np.pi
    return j0, j1, y0, y1


def _miller(t):
    n_top = _N_MILLER
    jp1 = np.zeros_like(t)
    jn = np.full_like(t, 1e-30)
    vals = np.empty((n_top + 2,) + t.shape)
    vals[n_top + 1] = jp1
    vals[n_top] = jn
    inv = 2.0 / t
    for n in range(n_top, 0, -1):
        jm1 = n * inv * jn - jp1
        vals[n - 1] = jm1
        jp1, jn = jn, jm1
    norm = vals[0] + 2.0 * vals[2:n_top + 1:2].sum(axis=0)
    vals /= norm
    j0 = vals[0]
    j1 = vals[1]
    k = np.arange(1, n_top // 2 + 1)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    coef = (sign / k).reshape((-1,) + (1,) * t.ndim)
    even = vals[2:n_top + 1:2]
    s0 = (coef * even).sum(axis=0)
    odd_diff = vals[1:n_top:2] - vals[3:n_top + 2:2]
    s1 = (coef * odd_diff).sum(axis=0)
    lg = np.log(0.5 * t) + EULER_GAMMA
    y0 = TWO_OVER_PI * lg * j0 - 2.0 * TWO_OVER_PI * s0
    y1 = TWO_OVER_PI * (lg * j1 - j0 / t) + TWO_OVER_PI * s1
    return j0, j1, y0, y1


def _asymptotic_pq(t, order):
    mu = 4.0 * order * order
    inv = 1.0 / t
    p = np.ones_like(t)
    q = np.zeros_like(t)
    a = np.ones_like(t)
    for k in range(1, _N_ASYMPTOTIC):
        a = a * (mu - (2 * k - 1) ** 2) / (8.0 * k) * inv
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q = q + sign * a
        else:
            p = p + sign * a
    return p, q


def _asymptotic(t):
    amp = np.sqrt(TWO_OVER_PI / t)
    c, s = np.cos(t), np.sin(t)
    r2 = np.sqrt(0.5)
    p0, q0 = _asymptotic_pq(t, 0)
    p1, q1 = _asymptotic_pq(t, 1)
    cos0, sin0 = r2 * (c + s), r2 * (s - c)
    cos1, sin1 = r2 * (s - c), -r2 * (s + c)
    j0 = amp * (p0 * cos0 - q0 * sin0)
    y0 = amp * (p0 * sin0 + q0 * cos0)
    j1 = amp * (p1 * cos1 - q1 * sin1)
    y1 = amp * (p1 * sin1 + q1 * cos1)
    return j0, j1, y0, y1


def cylinder_functions(t):
    """Return ``(J0, J1, Y0, Y1)`` evaluated at positive arguments.

    Parameters
    ----------
    t : array_like
        Strictly positive real arguments.

    Returns
    -------
    tuple of ndarray
        Arrays with the shape of ``t``.
    """
    t = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(t)):
        raise DomainError("cylinder functions need finite arguments")
    if np.any(t < 0):
        raise DomainError("cylinder functions are defined here for t >= 0 only")
    if np.any(t == 0):
        raise SingularityError("Y0 and Y1 diverge at t = 0")
    flat = t.ravel()
    out = [np.empty_like(flat) for _ in range(4)]
    bands = (
        (flat <= SERIES_LIMIT, _series),
        ((flat > SERIES_LIMIT) & (flat <= ASYMPTOTIC_LIMIT), _miller),
        (flat > ASYMPTOTIC_LIMIT, _asymptotic),
    )
    for mask, fn in bands:
        if np.any(mask):
            vals = fn(flat[mask])
            for o, v in zip(out, vals):
                o[mask] = v
    return tuple(o.reshape(t.shape) for o in out)


def _scalarize(arr, scalar):
    return arr.item() if scalar else arr


def bessel_j0(t):
    """Bessel function of the first kind of order zero, ``t >= 0``."""
    arr, scalar = _as_array(t)
    if np.any(arr < 0):
        raise DomainError("bessel_j0 requires t >= 0")
    out = np.ones_like(arr)
    pos = arr > 0
    if np.any(pos):
        out[pos] = cylinder_functions(arr[pos])[0]
    return _scalarize(out, scalar)


def bessel_j1(t):
    """Bessel function of the first kind of order one, ``t >= 0``."""
    arr, scalar = _as_array(t)
    if np.any(arr < 0):
        raise DomainError("bessel_j1 requires t >= 0")
    out = np.zeros_like(arr)
    pos = arr > 0
    if np.any(pos):
        out[pos] = cylinder_functions(arr[pos])[1]
    return _scalarize(out, scalar)


def bessel_y0(t):
    """Bessel function of the second kind of order zero, ``t > 0``."""
    arr, scalar = _as_array(t)
    return _scalarize(cylinder_functions(arr)[2], scalar)


def bessel_y1(t):
    """Bessel function of the second kind of order one, ``t > 0``."""
    arr, scalar = _as_array(t)
    return _scalarize(cylinder_functions(arr)[3], scalar)


def hankel1_0(t):
    """Hankel function ``H0^(1)(t) = J0(t) + i Y0(t)`` for ``t > 0``.

    Raises
    ------
    SingularityError
        If any argument is zero.
    """
    arr, scalar = _as_array(t)
    j0, _, y0, _ = cylinder_functions(arr)
    return _scalarize(j0 + 1j * y0, scalar)


def hankel1_1(t):
    """Hankel function ``H1^(1)(t) = J1(t) + i Y1(t)`` for ``t > 0``.

    Satisfies ``d/dt H0^(1)(t) = -H1^(1)(t)``.
    """
    arr, scalar = _as_array(t)
    _, j1, _, y1 = cylinder_functions(arr)
    return _scalarize(j1 + 1j * y1, scalar)


def hankel1_01(t):
    """Return ``(H0^(1)(t), H1^(1)(t))`` from a single evaluation."""
    arr = np.asarray(t, dtype=float)
    j0, j1, y0, y1 = cylinder_functions(arr)
    return j0 + 1j * y0, j1 + 1j * y1


def cylinder(order, t):
    """Return the :class:`CylinderValue` of the given order at scalar ``t``."""
    if order not in (0, 1):
        raise DomainError("only orders 0 and 1 are available")
    j0, j1, y0, y1 = (float(v) for v in cylinder_functions(float(t)))
    return CylinderValue(j0, y0) if order == 0 else CylinderValue(j1, y1)
