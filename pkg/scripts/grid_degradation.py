"""Reed-Shih coefficient error on zero-order grids of shrinking spacing.

For each seed, samples a random bandlimited signal at L = mult * N points
and reports the rmse of the recovered a_n, b_n. CSV: seed, mult, rmse.
"""

import argparse
from fractions import Fraction

import numpy as np

from mobius_xform.aft import reed_shih
from mobius_xform.oracle import coefficient_vector, compare
from mobius_xform.signal import ExactEvaluator, UniformGrid, random_coefficients, sample_at


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=5)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--mults", default="2,4,8,16")
    args = ap.parse_args(argv)
    mults = [int(m) for m in args.mults.split(",")]

    print("seed,mult,rmse")
    for seed in range(args.seeds):
        c = random_coefficients(args.N, np.random.default_rng(seed))
        exact = ExactEvaluator(c)
        for mult in mults:
            L = mult * args.N
            grid = UniformGrid.over_period([sample_at(exact, Fraction(i, L)) for i in range(L)], 1)
            got = coefficient_vector(reed_shih(grid, args.N).coeffs)[1:]
            print(f"{seed},{mult},{compare(got, coefficient_vector(c)[1:]).rmse:.6g}")


if __name__ == "__main__":
    main()
