"""Spectrum of f(t) = cos(90 pi t)(t - 1/2)^2 by the AHT with top-m interpolation.

Writes a plot-ready CSV (k, dht, aht_top_m, aht_ideal) and prints the error
against the DHT definition. ``--write-golden`` freezes the threshold the
acceptance suite checks against.
"""

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from mobius_xform.aht import aht_forward
from mobius_xform.cli import fig5_signal
from mobius_xform.interp import HARTLEY, TOP_M, Resolver
from mobius_xform.oracle import compare, dht_definition

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden" / "fig5.json"


def run(N=32, m=2):
    v = fig5_signal(N)
    ref = np.array(dht_definition(v).values)
    top = aht_forward(v, Resolver(TOP_M, kernel=HARTLEY, m=m)).values
    ideal = aht_forward(v).values
    return v, ref, top, ideal, compare(top, ref)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=32)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--out", type=Path, help="CSV path (default: stdout)")
    ap.add_argument("--write-golden", action="store_true")
    args = ap.parse_args(argv)

    _, ref, top, ideal, err = run(args.N, args.m)
    lines = ["k,dht,aht_top_m,aht_ideal"]
    lines += [f"{k},{ref[k]:.17g},{top[k]:.17g},{ideal[k]:.17g}" for k in range(args.N)]
    text = "\n".join(lines) + "\n"
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    print(f"# N={args.N} m={args.m} max_abs={err.max_abs:.3e} rmse={err.rmse:.3e} "
          f"relative_rmse={err.relative_rmse:.6f}", file=sys.stderr)

    if args.write_golden:
        if (args.N, args.m) != (32, 2):
            ap.error("the golden file describes N=32, m=2 only")
        golden = {
            "signal": "cos(90*pi*t)*(t-1/2)^2, t=i/32",
            "N": 32, "m": 2, "kernel": HARTLEY, "selection": "largest",
            "relative_rmse_measured": float(f"{err.relative_rmse:.17g}"),
            # two decimals, rounded up
            "threshold": math.ceil(err.relative_rmse * 100) / 100,
        }
        GOLDEN.parent.mkdir(parents=True, exist_ok=True)
        GOLDEN.write_text(json.dumps(golden, indent=2) + "\n")
        print(f"# wrote {GOLDEN}", file=sys.stderr)


if __name__ == "__main__":
    main()
