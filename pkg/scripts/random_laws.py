"""Run the randomized law checks over several seeds and summarize.

    python3 scripts/random_laws.py --seeds 0 1 2 --samples 500
"""
import argparse
import time

from engeltori.verify import laws, lemma51


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    failed = 0
    for seed in args.seeds:
        for runner in (laws, lemma51):
            t0 = time.perf_counter()
            rep = runner(seed=seed, samples=args.samples)
            dt = time.perf_counter() - t0
            for label, ok, detail in rep.checks:
                failed += not ok
                print(f"seed {seed:>4}  {rep.name:<8} {'PASS' if ok else 'FAIL'}  {label}"
                      + (f"  ({detail})" if detail and not ok else ""))
            print(f"seed {seed:>4}  {rep.name:<8} {dt:.2f} s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
