"""Print the stabilization ladders for both torus families.

    python3 scripts/theorem_ladders.py --count 12
    python3 scripts/theorem_ladders.py --count 6 --base trefoil --json ladders.json
"""
import argparse
import json

from engeltori import catalog
from engeltori.cli import format_table
from engeltori.knots import rot_of_front, tb_of_front
from engeltori.tori import theorem_family


def transverse_rows(base, count):
    fam = theorem_family("transverse", catalog.knot_fixtures()[base], count)
    rows = [(n, fam.implemented_ladder[n], fam.unit_step_ladder[n], fam.divisibilities[n])
            for n in range(count + 1)]
    return fam, rows


def legendrian_rows(base, count):
    fam = theorem_family("legendrian", catalog.front_fixtures()[base], count)
    rows = [(n, tb_of_front(L.profile), rot_of_front(L.profile), fam.divisibilities[n])
            for n, L in enumerate(fam.members)]
    return fam, rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--base", default="unknot", choices=sorted(catalog.front_fixtures()))
    ap.add_argument("--json", help="also write the ladders here")
    args = ap.parse_args()

    tfam, trows = transverse_rows(args.base, args.count)
    lfam, lrows = legendrian_rows(args.base, args.count)
    print(f"transverse tori over the {args.base} profile")
    print(format_table(("n", "sl (step -2)", "sl (step -1)", "divisibility"), trows))
    print(f"pairs: {tfam.n_pairs}, all distinct: {tfam.all_distinct}, "
          f"distinct under the -1 ladder: {tfam.unit_step_distinct}\n")
    print(f"Legendrian tori S^1 x K_n in S^1 x S^3, K_0 = {args.base}")
    print(format_table(("n", "tb", "rot", "divisibility"), lrows))
    print(f"pairs: {lfam.n_pairs}, all distinct: {lfam.all_distinct}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"transverse": trows, "legendrian": lrows}, fh, indent=2)


if __name__ == "__main__":
    main()
