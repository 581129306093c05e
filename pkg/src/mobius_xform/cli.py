"""Command-line front end.

Subcommands: aht-forward, aht-inverse, aft, weights, compare, bench.
Run ``mobius-xform <command> -h`` for the flags of each.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import numpy as np

from . import aft, aht, interp, oracle
from .errors import XformError
from .signal import ExactEvaluator, UniformGrid, random_coefficients

COMMANDS = ("aht-forward", "aht-inverse", "aft", "weights", "compare", "bench")
FIG5_N = 32


class InputError(Exception):
    """Malformed input file; message names file, line and column."""


@dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    out: Optional[Path] = None
    report: Optional[Path] = None
    signal: Optional[str] = None
    algorithm: str = aft.REED_SHIH
    resolver: str = interp.IDEAL
    kernel: str = interp.HARTLEY
    mode: str = interp.CLOSED
    selection: str = interp.LARGEST
    m: Optional[int] = None
    N: Optional[int] = None
    r: Optional[str] = None
    T: str = "1"
    grid_T0: Optional[str] = None
    rule: str = "zero-order"
    seed: int = 0
    compare_oracle: bool = False
    timing: bool = True
    bench_sizes: list[int] = field(default_factory=lambda: [8, 16, 32])

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise XformError(f"unknown command {self.command!r}", module="cli")
        if self.m is not None and self.resolver != interp.TOP_M and self.command != "compare":
            raise XformError("--m only applies with --resolver top-m", module="cli")
        if self.resolver == interp.TOP_M and self.m is None:
            raise XformError("--resolver top-m needs --m", module="cli")

    def make_resolver(self) -> interp.Resolver:
        return interp.Resolver(self.resolver, self.kernel, self.mode, self.m, self.selection)


# ---------------------------------------------------------------- I/O helpers

def fmt(x) -> str:
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return "null"
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def to_json(obj, indent=0) -> str:
    """JSON with floats at 17 significant digits; dict order is preserved."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}{_json_str(k)}: {to_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + to_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, str):
        return _json_str(obj)
    return fmt(obj)


def _json_str(s):
    import json
    return json.dumps(str(s))


def read_values(path: Path) -> np.ndarray:
    """One real per line, or ``k,value`` rows; optional ``# N=<int>`` header."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: cannot read: {e.strerror}") from None
    declared = None
    vals: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("N="):
                try:
                    declared = int(body[2:])
                except ValueError:
                    raise InputError(f"{path}:{lineno}:{col}: bad header {line!r}; expected '# N=<int>'") from None
                continue
            raise InputError(f"{path}:{lineno}:{col}: unexpected comment {line!r}")
        if line.replace(" ", "").lower() == "k,value":
            continue
        fields = raw.split(",")
        if len(fields) > 2:
            raise InputError(f"{path}:{lineno}:{col}: expected one value or 'k,value', got {len(fields)} fields")
        if len(fields) == 2:
            kcol = col
            vcol = len(fields[0]) + 2 + (len(fields[1]) - len(fields[1].lstrip()))
            try:
                k = int(fields[0])
            except ValueError:
                raise InputError(f"{path}:{lineno}:{kcol}: cannot parse index {fields[0].strip()!r}") from None
            if k != len(vals):
                raise InputError(f"{path}:{lineno}:{kcol}: index {k} out of order; expected {len(vals)}")
            token, tcol = fields[1].strip(), vcol
        else:
            token, tcol = line, col
        try:
            x = float(token)
        except ValueError:
            raise InputError(f"{path}:{lineno}:{tcol}: cannot parse {token!r} as a real number") from None
        if not math.isfinite(x):
            raise InputError(f"{path}:{lineno}:{tcol}: non-finite value {token!r}")
        vals.append(x)
    if declared is not None and declared != len(vals):
        raise InputError(f"{path}: header declares N={declared} but {len(vals)} values were read")
    if not vals:
        raise InputError(f"{path}: no values")
    return np.array(vals)


def write_text(path: Optional[Path], text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def spectrum_csv(values) -> str:
    return "k,value\n" + "".join(f"{k},{fmt(x)}\n" for k, x in enumerate(values))


def fig5_signal(N: int = FIG5_N) -> np.ndarray:
    t = np.arange(N) / N
    return np.cos(90 * np.pi * t) * (t - 0.5) ** 2


def _vector_input(cfg: RunConfig) -> np.ndarray:
    if cfg.input is not None:
        return read_values(cfg.input)
    if cfg.signal == "fig5":
        return fig5_signal(cfg.N or FIG5_N)
    if cfg.signal == "random":
        if cfg.N is None:
            raise XformError("--signal random needs --N", module="cli")
        return np.random.default_rng(cfg.seed).standard_normal(cfg.N)
    raise XformError("give --input or --signal {fig5,random}", module="cli")


def _report(cfg, algorithm, ops, errors, wall_ms, **extra):
    total = ops.total
    rep = {
        "algorithm": algorithm,
        "kernel": extra.pop("kernel", cfg.kernel),
        "resolver": extra.pop("resolver", cfg.make_resolver().describe()),
        "N": extra.pop("N"),
        "nontrivial_mults": total.nontrivial_mults,
        "trivial_mults": total.trivial_mults,
        "adds": total.adds,
        "scale_mults": total.scale_mults,
        "max_abs_err": errors.max_abs if errors else None,
        "rmse": errors.rmse if errors else None,
        "relative_rmse": errors.relative_rmse if errors else None,
        "wall_time_ms": wall_ms if cfg.timing else None,
        "stages": {k: v.as_dict() for k, v in sorted(ops.stages.items())},
    }
    rep.update(extra)
    return rep


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, (time.perf_counter() - t0) * 1e3


# ---------------------------------------------------------------- commands

def cmd_aht_forward(cfg: RunConfig):
    v = _vector_input(cfg)
    res, ms = _timed(aht.aht_forward, v, cfg.make_resolver())
    err = oracle.compare(res.values, oracle.dht_definition(v)) if cfg.compare_oracle else None
    if cfg.out:
        write_text(cfg.out, spectrum_csv(res.values))
    return _report(cfg, "aht-forward", res.ops, err, ms, N=len(v))


def cmd_aht_inverse(cfg: RunConfig):
    V = _vector_input(cfg)
    res, ms = _timed(aht.aht_inverse, V, cfg.make_resolver())
    err = oracle.compare(res.values, oracle.idht_definition(V)) if cfg.compare_oracle else None
    if cfg.out:
        write_text(cfg.out, "i,value\n" + "".join(f"{i},{fmt(x)}\n" for i, x in enumerate(res.values)))
    return _report(cfg, "aht-inverse", res.ops, err, ms, N=len(V))


def _parse_rational(s: str, what: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise XformError(f"cannot parse {what}={s!r} as a rational number", module="cli") from None


def cmd_aft(cfg: RunConfig):
    if cfg.N is None:
        raise XformError("aft needs --N (harmonic budget)", module="cli")
    T = _parse_rational(cfg.T, "T")
    truth = None
    if cfg.input is not None:
        src = UniformGrid.over_period(read_values(cfg.input), T, cfg.rule)
        source_desc = f"grid({cfg.rule},L={src.L})"
    else:
        if cfg.signal not in (None, "random"):
            raise XformError("aft supports --signal random or --input", module="cli")
        truth = random_coefficients(cfg.N, np.random.default_rng(cfg.seed), T=T)
        src = ExactEvaluator(truth)
        source_desc = "exact"
        if cfg.grid_T0 is not None:
            T0 = _parse_rational(cfg.grid_T0, "grid-T0")
            L = T / T0
            if L.denominator != 1:
                raise XformError(f"grid-T0={T0} does not divide T={T}", module="cli")
            src = UniformGrid(tuple(src.at_phase(Fraction(i, int(L))) for i in range(int(L))),
                              T0, T, cfg.rule)
            source_desc = f"grid({cfg.rule},L={src.L})"
    if cfg.algorithm == aft.TUFTS_SADASIV:
        raise XformError("tufts-sadasiv yields harmonics v_k(t), not coefficients; "
                         "use the library call aft.ts_harmonic", module="cli")
    fn = aft.reed_shih if cfg.algorithm == aft.REED_SHIH else aft.reed_tufts
    res, ms = _timed(fn, src, cfg.N)
    err = None
    if cfg.compare_oracle:
        # a known signal is projected exactly; a grid file only on its own samples
        ref_src = ExactEvaluator(truth) if truth is not None else src
        Q = src.L if truth is None else 4 * cfg.N + 1
        ref = oracle.fourier_series_numeric(ref_src, cfg.N, Q)
        err = oracle.compare(oracle.coefficient_vector(res.coeffs), oracle.coefficient_vector(ref))
    if cfg.out:
        c = res.coeffs
        rows = [f"0,{fmt(c.a0)},{fmt(0.0)}\n"] + [
            f"{n},{fmt(a)},{fmt(b)}\n" for n, (a, b) in enumerate(zip(c.a, c.b), start=1)]
        write_text(cfg.out, "n,a,b\n" + "".join(rows))
    rep = _report(cfg, cfg.algorithm, res.ops, err, ms, N=cfg.N, kernel=None, resolver=source_desc)
    rep["aux_ops"] = {k: v.as_dict() for k, v in sorted(res.ops.stages.items()) if k in ("a0", "interp")}
    return rep


def cmd_weights(cfg: RunConfig):
    if cfg.N is None or cfg.r is None:
        raise XformError("weights needs --N and --r", module="cli")
    r = _parse_rational(cfg.r, "r")
    spec = interp.WeightSpec(cfg.kernel, cfg.mode, cfg.N)
    w = interp.weights(spec, r)
    rows = "".join(f"{i},{fmt(float(r))},{fmt(x)}\n" for i, x in enumerate(w))
    write_text(cfg.out, "i,r,w\n" + rows)
    if cfg.out is None and cfg.report is None:
        return None  # stdout already carries the table
    return {"command": "weights", "kernel": cfg.kernel, "mode": cfg.mode, "N": cfg.N,
            "r": float(r), "sum_w": math.fsum(w)}


def cmd_compare(cfg: RunConfig):
    if cfg.signal is None and cfg.input is None:
        cfg.signal = "fig5"
    if cfg.resolver == interp.IDEAL and cfg.m is not None:
        cfg.resolver = interp.TOP_M
    v = _vector_input(cfg)
    res, ms = _timed(aht.aht_forward, v, cfg.make_resolver())
    ref = oracle.dht_definition(v)
    err = oracle.compare(res.values, ref)
    if cfg.out:
        write_text(cfg.out, "k,aht,dht\n" + "".join(
            f"{k},{fmt(a)},{fmt(b)}\n" for k, (a, b) in enumerate(zip(res.values, ref.values))))
    return _report(cfg, "aht-forward", res.ops, err, ms, N=len(v), signal=cfg.signal or "input")


def cmd_bench(cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    runs = []
    for N in cfg.bench_sizes:
        v = rng.standard_normal(N)
        res, ms = _timed(aht.aht_forward, v, cfg.make_resolver())
        err = oracle.compare(res.values, oracle.dht_definition(v))
        runs.append(_report(cfg, "aht-forward", res.ops, err, ms, N=N,
                            fractional_indexes=res.plan.fractional_count))
        H = max(1, N // 2)
        coeffs = random_coefficients(H, rng)
        src = ExactEvaluator(coeffs)
        for name, fn in ((aft.REED_SHIH, aft.reed_shih), (aft.REED_TUFTS, aft.reed_tufts)):
            res, ms = _timed(fn, src, H)
            err = oracle.compare(oracle.coefficient_vector(res.coeffs), oracle.coefficient_vector(coeffs))
            runs.append(_report(cfg, name, res.ops, err, ms, N=N, kernel=None, resolver="exact",
                                harmonics=H))
    return {"command": "bench", "seed": cfg.seed, "runs": runs}


HANDLERS = {
    "aht-forward": cmd_aht_forward,
    "aht-inverse": cmd_aht_inverse,
    "aft": cmd_aft,
    "weights": cmd_weights,
    "compare": cmd_compare,
    "bench": cmd_bench,
}


def run(cfg: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    try:
        report = HANDLERS[cfg.command](cfg)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except XformError as e:
        print(f"error {e}", file=sys.stderr)
        return 1
    if report is None:
        return 0
    text = to_json(report) + "\n"
    if cfg.report is not None:
        Path(cfg.report).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------- argv

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mobius-xform", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, resolver=True):
        sp.add_argument("--input", type=Path, help="CSV: one real per line (optional '# N=<int>')")
        sp.add_argument("--out", type=Path, help="CSV output path")
        sp.add_argument("--report", type=Path, help="JSON report path (default: stdout)")
        sp.add_argument("--no-timing", dest="timing", action="store_false",
                        help="write wall_time_ms as null for byte-identical reports")
        if resolver:
            sp.add_argument("--resolver", choices=interp.STRATEGIES, default=interp.IDEAL)
            sp.add_argument("--kernel", choices=interp.KERNELS, default=interp.HARTLEY)
            sp.add_argument("--mode", choices=interp.MODES, default=interp.CLOSED)
            sp.add_argument("--selection", choices=interp.SELECTIONS, default=interp.LARGEST)
            sp.add_argument("--m", type=int, help="weights kept by the top-m resolver")

    for name in ("aht-forward", "aht-inverse"):
        sp = sub.add_parser(name, help=f"{name.replace('-', ' ')} transform")
        common(sp)
        sp.add_argument("--signal", choices=("fig5", "random"))
        sp.add_argument("--N", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--compare-oracle", action="store_true")

    sp = sub.add_parser("aft", help="arithmetic Fourier transform of a grid or random signal")
    common(sp, resolver=False)
    sp.add_argument("--algorithm", choices=aft.ALGORITHMS, default=aft.REED_SHIH)
    sp.add_argument("--N", type=int, help="harmonic budget")
    sp.add_argument("--T", default="1", help="period in seconds (rational, e.g. 1 or 1/2)")
    sp.add_argument("--rule", choices=("zero-order", "first-order"), default="zero-order")
    sp.add_argument("--grid-T0", help="sample the random signal on a grid of this period")
    sp.add_argument("--signal", choices=("random",))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--compare-oracle", action="store_true")

    sp = sub.add_parser("weights", help="dump an interpolation weight profile")
    sp.add_argument("--kernel", choices=interp.KERNELS, default=interp.HARTLEY)
    sp.add_argument("--mode", choices=interp.MODES, default=interp.CLOSED)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--r", required=True, help="index, e.g. 10.5 or 16/3")
    sp.add_argument("--out", type=Path)
    sp.add_argument("--report", type=Path)

    sp = sub.add_parser("compare", help="AHT with a non-ideal resolver against the DHT definition")
    common(sp)
    sp.add_argument("--signal", choices=("fig5", "random"))
    sp.add_argument("--N", type=int)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("bench", help="operation counts and errors on random signals")
    common(sp)
    sp.add_argument("--sizes", default="8,16,32", help="comma-separated blocklengths")
    sp.add_argument("--seed", type=int, default=0)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    if "sizes" in kw:
        kw["bench_sizes"] = [int(x) for x in kw.pop("sizes").split(",") if x.strip()]
    kw.setdefault("timing", True)
    return RunConfig(**kw)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except XformError as e:
        print(f"error {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error [cli] {e}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
