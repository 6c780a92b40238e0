"""Command-line runner: ``forward``, ``image`` and ``verify`` subcommands.

Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
configuration error.
"""

import argparse
from pathlib import Path
import sys

import numpy as np

from . import dataio, rtm
from .errors import ConfigurationError, ContractError, DegenerateRangeError, FormatError, RTMError
from .forward import add_noise, generate_dataset
from .geometry import PRESETS, SamplingGrid
from .layered_green import GreenEvaluator
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message, shown=True)


class _UsageError(Exception):
    def __init__(self, message, shown=False):
        super().__init__(message)
        self.shown = shown


def _profile(args):
    if getattr(args, "full", False):
        return dataio.FULL_PROFILE
    if getattr(args, "desk", False):
        return dataio.DESK_PROFILE
    return None


def _load_config(args, require_scene=True):
    text = Path(args.config).read_text() if getattr(args, "config", None) else ""
    if not text and args.preset is None:
        if require_scene:
            raise _UsageError("give --preset or --config")
        return None
    return dataio.parse_config(text, preset=args.preset, profile=_profile(args))


def _parse_grid(spec):
    """``NXxNY`` shorthand over the default window, or a config file with ``grid.*`` keys."""
    if spec is None:
        return SamplingGrid()
    if "x" in spec and not Path(spec).exists():
        try:
            nx, ny = (int(v) for v in spec.lower().split("x"))
        except ValueError:
            raise ConfigurationError(f"cannot read grid size {spec!r}") from None
        return SamplingGrid(nx=nx, ny=ny)
    vals = dataio.parse_config_values(Path(spec).read_text())
    d = SamplingGrid()
    return SamplingGrid(
        (vals.get("grid.x0", d.x_range[0]), vals.get("grid.x1", d.x_range[1])),
        (vals.get("grid.y0", d.y_range[0]), vals.get("grid.y1", d.y_range[1])),
        vals.get("grid.nx", d.nx),
        vals.get("grid.ny", d.ny),
    )


def cmd_forward(args) -> int:
    cfg = _load_config(args)
    tau = args.tau if args.tau is not None else cfg.noise_tau
    seed = args.seed if args.seed is not None else cfg.seed
    data = generate_dataset(cfg.scene, cfg.acquisition, cfg.resolution, cfg.boundary_nodes)
    res = data.solver_residuals
    print(f"sources {cfg.acquisition.n_sources}  receivers {cfg.acquisition.n_receivers}  R {cfg.acquisition.radius:g}")
    if res is not None and res.size:
        print(f"linear residual: max {res.max():.3e}  median {np.median(res):.3e}")
    if tau > 0:
        clean = data
        data = add_noise(clean, tau, seed)
        ratio = np.linalg.norm(data.values - clean.values) / np.linalg.norm(clean.values)
        print(f"noise ratio ||V_tau - V|| / ||V|| = {ratio:.6f} (tau {tau:g}, seed {seed})")
    dataio.write_dataset(args.out, data)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_image(args) -> int:
    data = dataio.read_dataset(args.data)
    grid = _parse_grid(args.grid)
    green = GreenEvaluator(data.medium)
    field = rtm.indicator(data, grid, green)
    stem = Path(args.out)
    stem.parent.mkdir(parents=True, exist_ok=True)
    outputs = {"": field.values, "_abs": field.magnitude}
    status = EXIT_OK
    for tag, vals in outputs.items():
        txt = stem.with_name(stem.name + tag + ".txt")
        dataio.write_indicator(txt, vals, grid)
        print(f"wrote {txt}")
        pgm = stem.with_name(stem.name + tag + ".pgm")
        try:
            dataio.write_pgm(pgm, vals)
            print(f"wrote {pgm}")
        except DegenerateRangeError as exc:
            print(f"skipped {pgm}: degenerate range ({exc})", file=sys.stderr)
    cfg = _load_config(args, require_scene=False)
    if cfg is not None:
        for line in rtm.peak_report(field, cfg.scene).lines():
            print(line)
    return status


def cmd_verify(args) -> int:
    rows = run_suite(args.suite)
    print(dataio.format_report(rows), end="")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="layered-rtm", description="Layered-medium RTM imaging experiments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scene_flags(sp):
        sp.add_argument("--config", help="key = value configuration file")
        sp.add_argument("--preset", choices=PRESETS, help="named example scene")
        prof = sp.add_mutually_exclusive_group()
        prof.add_argument("--desk", action="store_true", help="Ns = Nr = 128, R = 20")
        prof.add_argument("--full", "--paper", dest="full", action="store_true", help="Ns = Nr = 1024, R = 100")

    f = sub.add_parser("forward", help="simulate a scattering dataset")
    scene_flags(f)
    f.add_argument("--tau", type=float, help="relative noise level")
    f.add_argument("--seed", type=int, help="noise seed")
    f.add_argument("--out", required=True, help="dataset file to write")
    f.set_defaults(func=cmd_forward)

    i = sub.add_parser("image", help="compute the RTM indicator from a dataset")
    i.add_argument("--data", required=True, help="dataset file")
    i.add_argument("--grid", help="NXxNY or a config file with grid.* keys")
    i.add_argument("--out", required=True, help="output stem; writes .txt and .pgm files")
    scene_flags(i)
    i.set_defaults(func=cmd_image)

    v = sub.add_parser("verify", help="run a residual suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        if not exc.shown:
            parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, ContractError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RTMError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
