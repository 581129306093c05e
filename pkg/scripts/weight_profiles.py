"""Weight profiles w_i(r) over a fine r grid, one column per index i.

Plot-ready CSV: r, w_0, ..., w_{N-1}.
"""

import argparse

import numpy as np

from mobius_xform.interp import HARTLEY, KERNELS, MODES, CLOSED, WeightSpec, weights


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kernel", choices=KERNELS, default=HARTLEY)
    ap.add_argument("--mode", choices=MODES, default=CLOSED)
    ap.add_argument("--N", type=int, default=16)
    ap.add_argument("--steps", type=int, default=8, help="r samples per unit index")
    args = ap.parse_args(argv)

    spec = WeightSpec(args.kernel, args.mode, args.N)
    print("r," + ",".join(f"w_{i}" for i in range(args.N)))
    for r in np.arange(args.N * args.steps) / args.steps:
        print(f"{r:g}," + ",".join(f"{w:.17g}" for w in weights(spec, float(r))))


if __name__ == "__main__":
    main()
