"""Command-line surface: simulate, classify, preimage, verify, density.

Exit codes: 0 success, 1 check failure (verify), 2 usage or input error.
The commands are thin adapters over the library; all machine-readable output
is JSON or CSV.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import density, dynamics, kinks, oracles, preimage, wordclasses
from .dynamics import CyclicConfig, FiniteSupportConfig
from .errors import KinklabError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinklab",
        description="Rule-18 kink dynamics laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="iterate a word, cycle or finite support")
    src = sim.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help="finite word (shrinks by 2 per step)")
    src.add_argument("--cyclic", help="periodic configuration of fixed width")
    src.add_argument("--support", help="finite-support configuration")
    sim.add_argument("--offset", type=int, default=0, help="support offset")
    sim.add_argument("--steps", type=int, default=1)
    sim.add_argument("--rule", choices=[dynamics.R18, dynamics.R90], default=dynamics.R18)
    sim.add_argument("--render", choices=["ascii", "pbm"], help="emit the spacetime diagram")

    cls = sub.add_parser("classify", help="kink structure and class membership")
    cls.add_argument("word")

    pre = sub.add_parser("preimage", help="enumerate preimages or probe chain depth")
    pre.add_argument("word")
    pre.add_argument("--depth", type=int, default=1)

    ver = sub.add_parser("verify", help="run the oracle suite")
    ver.add_argument("--profile", choices=sorted(oracles.PROFILES), default="quick")

    den = sub.add_parser("density", help="Monte Carlo kink-density decay")
    den.add_argument("--width", type=int, required=True)
    den.add_argument("--steps", type=int, default=256)
    den.add_argument("--trials", type=int, default=32)
    den.add_argument("--seed", type=int, default=0)
    den.add_argument("--out", default="density", help="output path prefix")
    den.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"),
                     help="power-law fit window (default: auto)")
    return parser


def _cmd_simulate(args) -> int:
    if args.steps < 0:
        raise KinklabError("steps must be non-negative")
    if args.word is not None:
        diagram = dynamics.spacetime_word(args.word, args.steps, args.rule)
        final = diagram.rows[-1]
    elif args.cyclic is not None:
        diagram = dynamics.spacetime_cyclic(
            CyclicConfig(args.cyclic), args.steps, args.rule
        )
        final = diagram.rows[-1]
    else:
        cfg = FiniteSupportConfig(args.support, args.offset)
        diagram = dynamics.spacetime_support(cfg, args.steps, args.rule)
        for _ in range(args.steps):
            cfg = dynamics.step_support(cfg, args.rule)
        final = f"{cfg.support or '(empty)'} @ {cfg.offset}"
    if args.render:
        sys.stdout.buffer.write(dynamics.render_spacetime(diagram, args.render))
        sys.stdout.buffer.flush()
    print(final)
    return EXIT_OK


def _cmd_classify(args) -> int:
    w = dynamics.check_word(args.word)
    occ = kinks.find_kinks(w)
    payload = {
        "word": w,
        "kinks": len(occ),
        "occurrences": [[p, g] for p, g in occ],
        "stability": wordclasses.classify_stability(w).value,
        "leftKinkWord": wordclasses.is_left_kink_word(w),
        "inB": wordclasses.in_B(w),
    }
    if len(occ) == 2:
        d = kinks.two_kink_decompose(w)
        payload["inP"] = wordclasses.in_P(w)
        payload["b"] = d.b
        payload["delta"] = d.delta
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_preimage(args) -> int:
    w = dynamics.check_word(args.word)
    if args.depth < 1:
        raise KinklabError("depth must be >= 1")
    if args.depth == 1:
        print(json.dumps(list(preimage.preimages(w).members)))
    else:
        print(json.dumps(preimage.preimage_depth(w, args.depth)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = oracles.run_all(args.profile)
    failed = False
    for report in reports:
        print(report.to_json())
        if report.status is oracles.OracleStatus.FAIL:
            failed = True
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_density(args) -> int:
    series = density.density_trajectory(args.width, args.steps, args.trials, args.seed)
    window = tuple(args.window) if args.window else density.default_window(args.steps)
    try:
        fit = density.fit_power_law(series, window)
    except KinklabError:
        fit = None
    csv_path = args.out + ".csv"
    json_path = args.out + ".json"
    density.write_density_csv(series, csv_path)
    density.write_density_metadata(series, json_path, fit)
    print(f"wrote {csv_path} and {json_path}")
    print(f"d_0 = {series.values[0]:.6f} (expected 1/3 under Bernoulli(1/2))")
    if fit is not None:
        print(
            f"fit over n in [{fit.window[0]}, {fit.window[1]}]: "
            f"exponent {fit.exponent:.4f}, amplitude {fit.amplitude:.4f}, "
            f"D {fit.diffusion_coefficient:.4f}"
        )
    else:
        print(f"fit window {window} degenerate; no power-law fit")
    return EXIT_OK


_COMMANDS = {
    "simulate": _cmd_simulate,
    "classify": _cmd_classify,
    "preimage": _cmd_preimage,
    "verify": _cmd_verify,
    "density": _cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (KinklabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
