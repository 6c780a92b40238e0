"""Independent reference values used by the tests.

The layered Green's function oracle integrates the Sommerfeld representation
directly along the real axis with mpmath's tanh-sinh rule, written with the
reflection coefficient ``(b1 - b2)/(b1 + b2)`` rather than the factored form
used by the library, and with no contour deformation.
"""

import mpmath as mp
import numpy as np
from scipy import special


def sqrt_upper(k, xi):
    d = k * k - xi * xi
    return mp.sqrt(d) if d >= 0 else 1j * mp.sqrt(-d)


def layered_green_oracle(k1, k2, x, z, direct=True, dps=20):
    """Brute-force ``G(x, z)``; needs ``|x2| + |z2|`` not too small."""
    mp.mp.dps = dps
    x1, x2 = mp.mpf(x[0]), mp.mpf(x[1])
    z1, z2 = mp.mpf(z[0]), mp.mpf(z[1])
    if z2 < 0:
        k1, k2 = k2, k1
        x2, z2 = -x2, -z2
    dx = x1 - z1
    same = x2 >= 0
    H = abs(x2) + abs(z2)

    def f(xi):
        b1, b2 = sqrt_upper(k1, xi), sqrt_upper(k2, xi)
        if same:
            r = (b1 - b2) / (b1 + b2)
            return r / b1 * mp.exp(1j * b1 * (x2 + z2)) * mp.cos(xi * dx)
        return 2 / (b1 + b2) * mp.exp(1j * b1 * z2 - 1j * b2 * x2) * mp.cos(xi * dx)

    kmax = max(k1, k2)
    # decay beyond kmax is at least exp(-(xi - kmax) H) for the relevant factor
    xi_end = kmax + 45.0 / float(H)
    pts = sorted({0.0, float(k1), float(k2)})
    step = np.pi / max(abs(float(dx)), 1.0) * 2
    tail = list(np.arange(kmax, xi_end, max(step, 0.5)))[1:] + [xi_end]
    nodes = pts + tail
    total = mp.quad(f, nodes)
    val = complex(1j / (4 * mp.pi) * 2 * total)
    if same and direct:
        r = float(mp.sqrt((x1 - z1) ** 2 + (x2 - z2) ** 2))
        val += 0.25j * special.hankel1(0, k1 * r)
    return val


def circle_scattering_series(kappa, radius, center, source, points, n_terms=50):
    """Scattered field of a sound-soft disc hit by the point source
    ``(i/4) H0(kappa |x - source|)``, by separation of variables."""
    src = np.asarray(source, float) - center
    pts = np.asarray(points, float) - center
    rs, ts = np.hypot(*src), np.arctan2(src[1], src[0])
    r = np.hypot(pts[:, 0], pts[:, 1])
    t = np.arctan2(pts[:, 1], pts[:, 0])
    out = np.zeros(len(pts), complex)
    for n in range(-n_terms, n_terms + 1):
        c = special.jv(n, kappa * radius) / special.hankel1(n, kappa * radius)
        out += c * special.hankel1(n, kappa * rs) * special.hankel1(n, kappa * r) * np.exp(1j * n * (t - ts))
    return -0.25j * out
