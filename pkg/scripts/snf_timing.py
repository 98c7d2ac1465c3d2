"""Smith normal form timings on random square matrices of growing size.

    python3 scripts/snf_timing.py --max-n 24 --reps 5 --seed 1
"""
import argparse
import random
import time

from engeltori.homology import smith_normal_form
from engeltori.sampling import random_matrix


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--step", type=int, default=4)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'n':>4} {'mean ms':>10} {'max entry digits':>18}")
    for n in range(args.step, args.max_n + 1, args.step):
        total, digits = 0.0, 0
        for _ in range(args.reps):
            A = random_matrix(rng, n, n)
            t0 = time.perf_counter()
            s = smith_normal_form(A)
            total += time.perf_counter() - t0
            digits = max(digits, max((len(str(abs(x))) for x in s.diagonal), default=0))
        print(f"{n:>4} {1000 * total / args.reps:>10.2f} {digits:>18}")


if __name__ == "__main__":
    main()
