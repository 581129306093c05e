"""Operation counts of the AFTs and the AHT against blocklength.

Emits CSV: transform, N, nontrivial_mults, scale_mults, trivial_mults, adds,
interp_mults, interp_adds. For the AFTs N is the blocklength 2H.
"""

import argparse

import numpy as np

from mobius_xform.aft import reed_shih, reed_tufts
from mobius_xform.aht import aht_forward
from mobius_xform.interp import TOP_M, Resolver
from mobius_xform.signal import ExactEvaluator, random_coefficients


def row(name, N, ops):
    t, i = ops.total, ops.interp
    return f"{name},{N},{t.nontrivial_mults},{t.scale_mults},{t.trivial_mults},{t.adds},{i.nontrivial_mults},{i.adds}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="4,8,16,32,64")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)

    print("transform,N,nontrivial_mults,scale_mults,trivial_mults,adds,interp_mults,interp_adds")
    for N in (int(s) for s in args.sizes.split(",")):
        src = ExactEvaluator(random_coefficients(N // 2, rng))
        print(row("reed-shih", N, reed_shih(src, N // 2).ops))
        print(row("reed-tufts", N, reed_tufts(src, N // 2).ops))
        v = rng.standard_normal(N)
        print(row("aht-ideal", N, aht_forward(v).ops))
        print(row("aht-top2", N, aht_forward(v, Resolver(TOP_M, m=2)).ops))


if __name__ == "__main__":
    main()
