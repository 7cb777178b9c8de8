"""Command-line interface.

Subcommands: validate, ppt, cohinfo, sweep, reproduce. Exit codes are a
stable contract: 0 for success or a true verdict, 1 for a false verdict or a
failed reproduction, 2 for usage, parse, or I/O errors. Flags override config
file values, which override defaults.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import capacity, channels, dilations, sweeps
from .symplectic import PSD_TOL, SYMPLECTIC_TOL, CovarianceMatrix, ShapeError

DEFAULTS = {
    "tol_psd": PSD_TOL,
    "tol_symplectic": SYMPLECTIC_TOL,
    "format": "csv",
    "threads": 1,
    "out": None,
}


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _effective_config(args) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read config file: {exc}") from exc
        for key in cfg:
            if key in loaded:
                cfg[key] = loaded[key]
    for key, attr in (
        ("tol_psd", "tol_psd"),
        ("tol_symplectic", "tol_symplectic"),
        ("format", "format"),
        ("threads", "threads"),
        ("out", "out"),
    ):
        val = getattr(args, attr, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _load_channel(spec: str) -> channels.GaussianChannel:
    try:
        return channels.resolve_channel(spec)
    except KeyError:
        pass
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
        X = np.array(data["X"], dtype=float)
        Y = np.array(data["Y"], dtype=float)
        ch = channels.GaussianChannel(X, Y, name=data.get("name"))
        if ch.input_modes != int(data["input_modes"]) or ch.output_modes != int(data["output_modes"]):
            raise CliError(f"channel file {spec}: declared mode counts do not match matrix shapes")
        return ch
    except CliError:
        raise
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, ShapeError) as exc:
        raise CliError(f"cannot load channel {spec!r}: {exc}") from exc


def _load_covariance(path: str) -> CovarianceMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        gamma = np.array(data["gamma"], dtype=float)
        d = np.array(data["d"], dtype=float) if "d" in data and data["d"] is not None else None
        state = CovarianceMatrix(gamma, d)
        if state.modes != int(data["modes"]):
            raise CliError(f"covariance file {path}: declared mode count does not match the matrix")
        return state
    except CliError:
        raise
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, ShapeError) as exc:
        raise CliError(f"cannot load covariance {path!r}: {exc}") from exc


def _spectrum_str(spec: np.ndarray) -> str:
    return "[" + ", ".join(f"{v:.12g}" for v in spec) + "]"


def cmd_validate(args, cfg) -> int:
    ch = _load_channel(args.channel)
    spec = channels.physicality_spectrum(ch)
    ok = channels.validate_channel(ch, tol=cfg["tol_psd"])
    if cfg["format"] == "json":
        print(json.dumps({"channel": ch.name, "valid": ok, "spectrum": list(spec)}))
    else:
        print(f"channel: {ch.name or args.channel} ({ch.input_modes} -> {ch.output_modes} modes)")
        print(f"physicality spectrum: {_spectrum_str(spec)}")
        print(f"verdict: {'VALID' if ok else 'INVALID'}")
    return 0 if ok else 1


def cmd_ppt(args, cfg) -> int:
    ch = _load_channel(args.channel)
    if not channels.validate_channel(ch, tol=cfg["tol_psd"]):
        print("channel is not physical; PPT test not meaningful", file=sys.stderr)
        return 1
    verdict = channels.ppt_check(ch, tol=cfg["tol_psd"])
    if cfg["format"] == "json":
        print(
            json.dumps(
                {
                    "channel": ch.name,
                    "is_ppt": verdict.is_ppt,
                    "min_eigenvalue": verdict.min_eigenvalue,
                    "spectrum": list(verdict.spectrum),
                }
            )
        )
    else:
        print(f"channel: {ch.name or args.channel} ({ch.input_modes} -> {ch.output_modes} modes)")
        print(f"ppt spectrum: {_spectrum_str(verdict.spectrum)}")
        print(f"min eigenvalue: {verdict.min_eigenvalue:.12g}")
        print(f"verdict: {'PPT' if verdict.is_ppt else 'NOT PPT'}")
    return 0 if verdict.is_ppt else 1


def _family_input_for(ch: channels.GaussianChannel, c: float) -> tuple[CovarianceMatrix, str]:
    if ch.input_modes == 3:
        return capacity.wired_input(c), f"family c = {c:g} (joint wiring)"
    if ch.input_modes == 2:
        return capacity.constituent_inputs(c)[0], f"family c = {c:g} (pair-arm reduction)"
    if ch.input_modes == 1:
        return capacity.constituent_inputs(c)[1], f"family c = {c:g} (power-arm reduction)"
    raise CliError("the built-in family serves 1-, 2-, or 3-mode channels only")


def _resolve_complement(args, ch: channels.GaussianChannel, builtin_name: str | None):
    if args.complement:
        comp = _load_channel(args.complement)
        if comp.input_modes != ch.input_modes:
            raise CliError("complement input mode count does not match the channel")
        return comp
    if args.dilation:
        if not args.partition:
            raise CliError("--dilation needs --partition IN/ANC/OUT/ENV (comma-separated mode lists)")
        groups = args.partition.split("/")
        if len(groups) != 4:
            raise CliError("--partition must have four /-separated groups")
        try:
            part = [[int(x) for x in g.split(",") if x != ""] for g in groups]
        except ValueError as exc:
            raise CliError(f"bad partition: {exc}") from exc
        try:
            with open(args.dilation, encoding="utf-8") as fh:
                circuit = dilations.circuit_from_json(fh.read())
            derived, comp = dilations.channel_from_circuit(circuit, *part)
        except (OSError, ValueError, ShapeError) as exc:
            raise CliError(f"cannot build dilation: {exc}") from exc
        if derived.X.shape != ch.X.shape or np.abs(derived.X - ch.X).max() > 1e-8 or np.abs(derived.Y - ch.Y).max() > 1e-8:
            raise CliError("dilation circuit does not induce the given channel")
        return comp
    if builtin_name is not None:
        try:
            return capacity.builtin_complement(builtin_name)
        except KeyError:
            pass
    raise CliError(
        "no complement available: pass --complement CHANNEL_JSON or --dilation CIRCUIT_JSON with --partition"
    )


def cmd_cohinfo(args, cfg) -> int:
    ch = _load_channel(args.channel)
    builtin_name = args.channel if _is_builtin(args.channel) else None
    if args.input == "eq3":
        if args.c is None:
            raise CliError("built-in family input needs --c")
        state, input_desc = _family_input_for(ch, args.c)
    else:
        state = _load_covariance(args.input)
        input_desc = args.input
    if state.modes != ch.input_modes:
        raise CliError(f"input has {state.modes} modes, channel expects {ch.input_modes}")
    comp = _resolve_complement(args, ch, builtin_name)
    res = capacity.coherent_information(ch, comp, state)
    if cfg["format"] == "json":
        print(
            json.dumps(
                {
                    "channel": ch.name,
                    "input": input_desc,
                    "value_bits": res.value,
                    "output_entropy_bits": res.output_entropy,
                    "environment_entropy_bits": res.environment_entropy,
                    "photon_number": res.photon_number,
                }
            )
        )
    else:
        print(f"channel: {ch.name or args.channel} ({ch.input_modes} -> {ch.output_modes} modes)")
        print(f"input: {input_desc}")
        print(f"coherent information: {res.value:.12g} bits")
        print(f"output entropy: {res.output_entropy:.12g} bits")
        print(f"environment entropy: {res.environment_entropy:.12g} bits")
        print(f"photon number: {res.photon_number:.12g}")
    return 0


def _is_builtin(name: str) -> bool:
    try:
        channels.resolve_channel(name)
        return True
    except (KeyError, ValueError):
        return False


def cmd_sweep(args, cfg) -> int:
    try:
        with open(args.specfile, encoding="utf-8") as fh:
            spec = sweeps.sweep_spec_from_json(fh.read())
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise CliError(f"cannot load sweep spec: {exc}") from exc
    try:
        records = sweeps.run_sweep(spec, threads=int(cfg["threads"]))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    names = tuple(ax.name for ax in spec.parameters)
    fmt = cfg["format"]
    if cfg["out"]:
        try:
            sweeps.write_records(records, names, cfg["out"], fmt)
        except OSError as exc:
            raise CliError(f"cannot write output: {exc}") from exc
        summary = sweeps.summarize(records)
        print(f"wrote {len(records)} records to {cfg['out']}")
        print(
            f"max {summary.max_value:.12g} bits at {summary.argmax}; "
            f"positive fraction {summary.positive_fraction:.4f}"
        )
    else:
        text = sweeps.render_csv(records, names) if fmt == "csv" else sweeps.render_json(records, names)
        sys.stdout.write(text)
    return 0


def _report(label: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
    return ok


def _reproduce_boundary_spectrum(tol: float) -> bool:
    ch = channels.boundary_ppt_channel()
    expected = np.sort([0.0, 0.0, 2.0 * np.sqrt(2.0), 2.0 * np.sqrt(2.0)])
    ok = True
    for label, spec in (
        ("physicality", channels.physicality_spectrum(ch)),
        ("ppt-test", channels.ppt_spectrum(ch)),
    ):
        err = float(np.abs(np.sort(spec) - expected).max())
        ok &= _report(
            f"boundary-channel {label} spectrum",
            err <= tol,
            f"max deviation {err:.3e} from {{0, 0, 2*sqrt2, 2*sqrt2}} (tol {tol:g})",
        )
    return ok


def _reproduce_extension(sym_tol: float) -> bool:
    ch = channels.boundary_ppt_channel()
    d = dilations.boundary_ppt_extension()
    ok = dilations.verify_extension(ch, d.S, (2, 2, 2, 2), symplectic_tol=sym_tol)
    return _report(
        "closed-form extension",
        ok,
        f"symplectic within {sym_tol:g} and induces the boundary channel's (X, Y)",
    )


def _reproduce_equivalence(tol: float) -> bool:
    primed = channels.circuit_frame_ppt_channel()
    target = channels.boundary_ppt_channel()
    S = dilations.two_mode_squeezer_matrix(channels.BETA_MINUS)
    T = dilations.beamsplitter_matrix(0.5, reflect=channels.EQUIVALENCE_BS_REFLECT)
    moved = channels.compose_symplectic(primed, np.linalg.inv(S) @ T, S, negate=True)
    err = max(float(np.abs(moved.X - target.X).max()), float(np.abs(moved.Y - target.Y).max()))
    return _report(
        "frame equivalence",
        err <= tol,
        f"max entrywise deviation {err:.3e} (tol {tol:g}, reflection beamsplitter convention)",
    )


def _reproduce_activation_curve(cfg) -> bool:
    spec = sweeps.SweepSpec("eq3-c-sweep", (sweeps.AxisSpec("c", 0.0, 6.0, 61),))
    records = sweeps.run_sweep(spec, threads=int(cfg["threads"]))
    if cfg["out"]:
        sweeps.write_records(records, ("c",), cfg["out"], cfg["format"])
        print(f"wrote {len(records)} records to {cfg['out']}")
    by_c = {round(r.coordinates[0], 10): r.value for r in records if r.status == "ok"}
    ok = True
    v1 = by_c.get(3.2)
    ok &= _report(
        "activation near c = 3.2",
        v1 is not None and abs(v1 - 0.05) <= 0.005,
        f"value {v1 if v1 is not None else 'missing'} bits vs 0.05 +/- 0.005",
    )
    v2 = by_c.get(5.8)
    ok &= _report(
        "activation at c = 5.8",
        v2 is not None and abs(v2 - 0.06) <= 0.005,
        f"value {v2 if v2 is not None else 'missing'} bits vs 0.06 +/- 0.005",
    )
    summary = sweeps.summarize(records)
    ok &= _report(
        "positive activation region",
        summary.max_value >= 0.05,
        f"grid max {summary.max_value:.6g} bits at c = {summary.argmax[0]:g}",
    )
    return ok


def cmd_reproduce(args, cfg) -> int:
    targets = {
        "eq1-eigenvalues": lambda: _reproduce_boundary_spectrum(1e-9),
        "extension-check": lambda: _reproduce_extension(cfg["tol_symplectic"]),
        "eq45-equivalence": lambda: _reproduce_equivalence(1e-9),
        "appendix-plot": lambda: _reproduce_activation_curve(cfg),
    }
    if args.target not in targets:
        raise CliError(f"unknown reproduce target {args.target!r}; known: {', '.join(sorted(targets))}")
    return 0 if targets[args.target]() else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-psd", dest="tol_psd", type=float, default=None)
    common.add_argument("--tol-symplectic", dest="tol_symplectic", type=float, default=None)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--config", default=None)

    parser = argparse.ArgumentParser(
        prog="cvchan",
        description="Gaussian channel toolkit: physicality, PPT verdicts, coherent information, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="physicality verdict for a channel")
    p.add_argument("channel", help="built-in name or channel JSON path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ppt", parents=[common], help="PPT verdict for a channel")
    p.add_argument("channel")
    p.set_defaults(func=cmd_ppt)

    p = sub.add_parser("cohinfo", parents=[common], help="coherent information of a channel on an input")
    p.add_argument("channel")
    p.add_argument("--c", type=float, default=None, help="family parameter for the built-in input")
    p.add_argument("--input", default="eq3", help="'eq3' (default) or a covariance JSON path")
    p.add_argument("--complement", default=None, help="channel JSON path for the complement")
    p.add_argument("--dilation", default=None, help="circuit JSON path defining a dilation")
    p.add_argument("--partition", default=None, help="IN/ANC/OUT/ENV mode lists, e.g. 0,1/2,3/0,1/2,3")
    p.set_defaults(func=cmd_cohinfo)

    p = sub.add_parser("sweep", parents=[common], help="run a sweep spec and write CSV/JSON")
    p.add_argument("specfile")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", parents=[common], help="run a built-in verification recipe")
    p.add_argument(
        "target",
        help="appendix-plot | eq1-eigenvalues | eq45-equivalence | extension-check",
    )
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _effective_config(args)
        return args.func(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (OSError, ValueError, KeyError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
