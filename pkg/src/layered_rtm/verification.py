"""Residual suites behind ``layered-rtm verify``.

Each suite returns a list of :class:`~layered_rtm.dataio.CheckRow`; a suite
passes when every row passes.
"""

from decimal import Decimal, localcontext

import numpy as np

from .dataio import CheckRow
from .forward import Discretization, assemble, dirichlet_residual, generate_dataset, solve_source
from .geometry import Acquisition, InterfaceProfile, MediumConfig, ObstacleBoundary, Scene, preset_scene
from .layered_green import GreenEvaluator, phi, verify_helmholtz_kirchhoff, zeta_remainder
from .specfun import cylinder_functions

SUITES = ("specfun", "green", "hk", "zeta", "forward")

_PI = Decimal("3.14159265358979323846264338327950288419716939937510582097494")
_GAMMA = Decimal("0.57721566490153286060651209008240243104215933593992359880577")


def decimal_cylinder(t: float, digits: int = 60, terms: int = 90):
    """``(J0, J1, Y0, Y1)`` from the ascending series in ``digits``-digit decimal arithmetic."""
    with localcontext() as ctx:
        ctx.prec = digits
        x = Decimal(t)
        q = x * x / 4
        half = x / 2
        lg = (half).ln() + _GAMMA
        j0 = j1s = s0 = s1 = Decimal(0)
        term0 = Decimal(1)
        term1 = Decimal(1)
        harm = [Decimal(0)]
        for k in range(1, terms + 2):
            harm.append(harm[-1] + Decimal(1) / k)
        for k in range(terms):
            if k > 0:
                term0 = -term0 * q / (k * k)
                term1 = -term1 * q / (k * (k + 1))
            j0 += term0
            j1s += term1
            s0 += harm[k] * term0
            s1 += (harm[k] + harm[k + 1] - 2 * _GAMMA) * term1
        j1 = half * j1s
        y0 = 2 / _PI * (lg * j0 - s0)
        y1 = -2 / (_PI * x) + 2 / _PI * (half.ln()) * j1 - half * s1 / _PI
        return float(j0), float(j1), float(y0), float(y1)


def specfun_suite():
    t = np.logspace(-1, 2, 200)
    j0, j1, y0, y1 = cylinder_functions(t)
    wr = np.abs((j1 * y0 - j0 * y1) * (np.pi * t / 2) - 1.0)
    rows = [CheckRow("wronskian", "200 pts t in [0.1, 100]", float(wr.max()), 1e-12, bool(wr.max() <= 1e-12))]
    ts = np.linspace(0.5, 20.0, 40)
    ref = np.array([decimal_cylinder(v) for v in ts])
    got = np.column_stack(cylinder_functions(ts))
    err = float(np.max(np.abs(got - ref) / np.maximum(1.0, np.abs(ref))))
    rows.append(CheckRow("series oracle", "40 pts t in (0, 20]", err, 1e-11, err <= 1e-11))
    return rows


def random_pairs(rng, n, box=3.0, min_sep=0.05, max_sep=5.0, mode="any"):
    """Random point pairs off the interface; ``mode`` is ``any``, ``same`` or ``cross``."""
    out = []
    while len(out) < n:
        x = rng.uniform(-box, box, 2)
        z = rng.uniform(-box, box, 2)
        if min(abs(x[1]), abs(z[1])) < 0.05:
            continue
        sep = np.hypot(*(x - z))
        if not min_sep <= sep <= max_sep:
            continue
        same = np.sign(x[1]) == np.sign(z[1])
        if (mode == "same" and not same) or (mode == "cross" and same):
            continue
        out.append((x, z))
    return out


def _one_sided(ev, t, h, z, upper):
    s = 1.0 if upper else -1.0
    x1 = np.array([[t, s * h]])
    x2 = np.array([[t, 2 * s * h]])
    v1, g1 = ev.matrix(x1, z[None, :], gradient=True)
    v2, g2 = ev.matrix(x2, z[None, :], gradient=True)
    # linear extrapolation to the interface removes the O(h) one-sided slope
    return 2 * v1[0, 0] - v2[0, 0], 2 * g1[0, 0, 1] - g2[0, 0, 1]


def interface_jumps(ev: GreenEvaluator, z, abscissae, h=1e-4):
    """Relative mismatch of value and vertical derivative across the interface."""
    z = np.asarray(z, float)
    dv, dd = [], []
    for t in abscissae:
        vu, du = _one_sided(ev, t, h, z, True)
        vl, dl = _one_sided(ev, t, h, z, False)
        dv.append(abs(vu - vl) / abs(vu))
        dd.append(abs(du - dl) / abs(du))
    return float(max(dv)), float(max(dd))


def green_suite(seed: int = 1):
    rng = np.random.default_rng(seed)
    rows = []
    ev7 = GreenEvaluator(MediumConfig(7.0, 7.0))
    worst = 0.0
    for x, z in random_pairs(rng, 100):
        f = phi(7.0, x, z)
        worst = max(worst, abs(ev7.value(x, z) - f) / abs(f))
    rows.append(CheckRow("degenerate G = Phi", "kappa 7, 100 pairs", worst, 1e-8, worst <= 1e-8))
    ev = GreenEvaluator(MediumConfig(10.0, 5.0))
    pairs = random_pairs(rng, 25, mode="same") + random_pairs(rng, 25, mode="cross")
    worst = 0.0
    for x, z in pairs:
        a, b = ev.value(x, z), ev.value(z, x)
        worst = max(worst, abs(a - b) / abs(a))
    rows.append(CheckRow("reciprocity", "kappa 10/5, 50 pairs", worst, 1e-6, worst <= 1e-6))
    ts = np.linspace(-3.0, 3.0, 20)
    for z in ((0.3, 0.7), (-0.4, -0.9)):
        dv, dd = interface_jumps(ev, z, ts)
        rows.append(CheckRow("continuity value", f"z={z}, 20 abscissae", dv, 1e-5, dv <= 1e-5))
        rows.append(CheckRow("continuity d/dx2", f"z={z}, 20 abscissae", dd, 1e-5, dd <= 1e-5))
    return rows


def hk_pairs(seed: int = 2, n: int = 10):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        x = rng.uniform(-2, 2, 2)
        z = rng.uniform(-2, 2, 2)
        if np.hypot(*x) < 2 and np.hypot(*z) < 2 and min(abs(x[1]), abs(z[1])) > 0.05 and np.hypot(*(x - z)) > 0.05:
            out.append((x, z))
    return out


def hk_suite(seed: int = 2):
    ev = GreenEvaluator(MediumConfig(10.0, 5.0))
    rows = []
    for x, z in hk_pairs(seed):
        g = abs(ev.value(x, z))
        res = [verify_helmholtz_kirchhoff(ev, x, z, 10.0, n) for n in (256, 512, 1024, 2048)]
        params = f"x=({x[0]:.3f},{x[1]:.3f}) z=({z[0]:.3f},{z[1]:.3f})"
        rows.append(CheckRow("hk residual/|G|", params + " n=1024", res[2] / g, 1e-3, res[2] <= 1e-3 * g))
        # monotone up to a noise floor well below the tolerance
        floor = 1e-9 * g
        mono = all(b <= a or b <= floor for a, b in zip(res, res[1:]))
        growth = max(b / a for a, b in zip(res, res[1:]))
        rows.append(CheckRow("hk refinement ratio", params + " 256..2048", growth, 1.0, mono))
    return rows


def zeta_ratio(ev, x, z, n_per_radius: float = 100.0):
    """``|zeta(R=40)| / |zeta(R=20)|`` with trapezoid sizes proportional to ``R``."""
    a = abs(zeta_remainder(ev, x, z, 20.0, int(20 * n_per_radius)))
    b = abs(zeta_remainder(ev, x, z, 40.0, int(40 * n_per_radius)))
    return b / a


ZETA_PAIRS = (
    ((0.5, 0.8), (-0.3, -0.6)),
    ((1.0, 1.5), (-1.0, 0.5)),
    ((0.2, -1.0), (1.2, -0.4)),
    ((-1.5, 0.3), (0.7, -1.1)),
    ((0.0, 2.0), (0.5, -2.5)),
)


def zeta_suite():
    ev = GreenEvaluator(MediumConfig(10.0, 5.0))
    rows = []
    for x, z in ZETA_PAIRS:
        r = zeta_ratio(ev, np.array(x), np.array(z))
        rows.append(CheckRow("zeta R-doubling ratio", f"x={x} z={z}", r, 0.65, 0.35 <= r <= 0.65))
    return rows


def circle_series(kappa, radius, center, source, points, n_terms=50):
    """Sound-soft circle scattered field of ``Phi_kappa(., source)`` by separation of variables."""
    from scipy.special import hankel1, jv

    center = np.asarray(center, float)
    ds = np.asarray(source, float) - center
    rs, ts = np.hypot(*ds), np.arctan2(ds[1], ds[0])
    p = np.asarray(points, float) - center
    r, t = np.hypot(p[:, 0], p[:, 1]), np.arctan2(p[:, 1], p[:, 0])
    out = np.zeros(len(p), complex)
    for n in range(-n_terms, n_terms + 1):
        coef = -0.25j * hankel1(n, kappa * rs) * jv(n, kappa * radius) / hankel1(n, kappa * radius)
        out += coef * hankel1(n, kappa * r) * np.exp(1j * n * (t - ts))
    return out


def forward_suite():
    rows = []
    acq = Acquisition(20.0, 128, 128)
    flat = Scene(InterfaceProfile(), None, MediumConfig(10.0, 5.0))
    ds = generate_dataset(flat, acq)
    vmax = float(np.max(np.abs(ds.values))) if ds.values.size else 0.0
    rows.append(CheckRow("null scene |V|max", "flat, no obstacle", vmax, 1e-12, vmax <= 1e-12))

    med = MediumConfig(5.0, 5.0)
    scene = Scene(InterfaceProfile(), ObstacleBoundary("circle", (0.0, -3.0, 1.0)), med)
    system = assemble(scene, Discretization.from_scene(scene))
    src = np.array([20.0, 0.0])
    sol = solve_source(system, src)
    ang = np.linspace(0, 2 * np.pi, 16, endpoint=False) + 0.1
    probes = np.column_stack([3 * np.cos(ang), -3 + 3 * np.sin(ang)])
    got = system.evaluation_rows(probes) @ sol.unknowns
    ref = circle_series(5.0, 1.0, (0.0, -3.0), src, probes)
    err = float(np.max(np.abs(got - ref)) / np.max(np.abs(ref)))
    rows.append(CheckRow("circle series", "kappa 5, 16 probes", err, 1e-6, err <= 1e-6))

    ex1 = preset_scene("ex1_flat_circle")
    ev = GreenEvaluator(ex1.medium)
    system = assemble(ex1, Discretization.from_scene(ex1), ev)
    sol = solve_source(system, src)
    probe_max, near_max = dirichlet_residual(sol)
    rel = probe_max / near_max
    rows.append(CheckRow("sound-soft residual", "ex1_flat_circle", rel, 1e-3, rel <= 1e-3))
    data = generate_dataset(ex1, acq, green=ev, system=system)
    rec = float(np.linalg.norm(data.values - data.values.T) / np.linalg.norm(data.values))
    rows.append(CheckRow("data reciprocity", "ex1_flat_circle desk", rec, 1e-3, rec <= 1e-3))
    return rows


def run_suite(name: str):
    """Rows of the named suite.

    Raises
    ------
    ValueError
        For an unknown suite name.
    """
    table = {
        "specfun": specfun_suite,
        "green": green_suite,
        "hk": hk_suite,
        "zeta": zeta_suite,
        "forward": forward_suite,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return table[name]()
