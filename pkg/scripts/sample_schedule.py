"""Sample times needed by every average of an AFT, as exact fractions of T."""

import argparse

from mobius_xform.aft import ALGORITHMS, REED_SHIH, distinct_sample_times, required_sample_times


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=5, help="harmonic budget")
    ap.add_argument("--algorithm", choices=ALGORITHMS[1:], default=REED_SHIH)
    args = ap.parse_args(argv)

    sched = required_sample_times(args.N, args.algorithm)
    print("average,times")
    for aid, times in sched:
        print(f"{aid},\"{' '.join(str(t) for t in times)}\"")
    print(f"# distinct times: {len(distinct_sample_times(sched))}")


if __name__ == "__main__":
    main()
