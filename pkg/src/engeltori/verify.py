"""Scenario runners behind ``engeltori verify``.

Each runner returns a :class:`CheckReport`: named boolean checks plus a
table of rows for display.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import catalog
from .homology import (Z, FgAbGroup, alexander_duality, det, divisibility, homology,
                       is_exact, is_primitive, kernel_basis, smith_normal_form, tensor)
from .knots import (legendrian_stabilize, markov_stabilize,
                    rot_of_front, sl_of_braid, tb_of_front, transverse_pushoff)
from .sampling import (random_knot_braid, random_knot_front, random_matrix,
                       random_unimodular)
from .tori import (ALPHA_BETA, build_dpv_torus, complement_h2_product,
                   complement_h2_transverse, self_linking_class, theorem_family)

@dataclass
class CheckReport:
    name: str
    checks: list = field(default_factory=list)  # (label, ok, detail)
    columns: tuple = ()
    rows: list = field(default_factory=list)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((label, bool(ok), detail))
        return ok

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [{"label": l, "ok": ok, "detail": d} for l, ok, d in self.checks],
            "columns": list(self.columns),
            "rows": [dict(zip(self.columns, r)) for r in self.rows],
        }


def thm11(count: int = 10) -> CheckReport:
    """Stabilized del Pino-Vogel tori over the unknot profile."""
    fam = theorem_family("transverse", catalog.knot_fixtures()["unknot"], count)
    rep = CheckReport("thm11", columns=(
        "n", "profile", "sl(K_n)", "sl(K_0)-n", "sl(T_n)", "divisibility"))
    for n, (T, c) in enumerate(zip(fam.members, fam.classes)):
        rep.rows.append((n, str(T.profile), fam.implemented_ladder[n],
                         fam.unit_step_ladder[n], str(c), fam.divisibilities[n]))
    expected = [2 * n + 1 for n in range(count + 1)]
    rep.check("divisibilities 1, 3, 5, ...", fam.divisibilities == expected,
              f"{fam.divisibilities}")
    rep.check("strictly increasing",
              all(a < b for a, b in zip(fam.divisibilities, fam.divisibilities[1:])))
    npairs = count * (count + 1) // 2
    rep.check(f"{npairs} pairwise Distinct verdicts",
              fam.n_pairs == npairs and fam.all_distinct,
              f"{sum(v.distinct for v in fam.verdicts.values())}/{fam.n_pairs}")
    rep.check("all tori smoothly isotopic", fam.smoothly_isotopic)
    rep.check("beta coordinate vanishes", all(c.coords[1] == 0 for c in fam.classes))
    rep.check("distinct also under the sl(K_0) - n ladder", fam.unit_step_distinct)
    return rep


def thm12(count: int = 10) -> CheckReport:
    """Product Legendrian tori ``S^1 x K_n`` in ``S^1 x S^3`` over the unknot."""
    base = catalog.front_fixtures()["unknot"]
    fam = theorem_family("legendrian", base, count)
    rep = CheckReport("thm12", columns=(
        "n", "tb(K_n)", "rot(K_n)", "tb(L_n)", "divisibility"))
    for n, (L, c) in enumerate(zip(fam.members, fam.classes)):
        rep.rows.append((n, tb_of_front(L.profile), rot_of_front(L.profile), str(c),
                         fam.divisibilities[n]))
    coeffs = [c.coords[0] for c in fam.classes]
    rep.check("tb(L_n) = (tb(K_0) - n) S^1 x mu",
              coeffs == [-1 - n for n in range(count + 1)], f"{coeffs}")
    rep.check("divisibilities n + 1",
              fam.divisibilities == [n + 1 for n in range(count + 1)])
    npairs = count * (count + 1) // 2
    rep.check(f"{npairs} pairwise Distinct verdicts",
              fam.n_pairs == npairs and fam.all_distinct)
    rep.check("all tori smoothly isotopic", fam.smoothly_isotopic)
    return rep


def lemma41() -> CheckReport:
    """Meridian tori alpha, beta span a free rank-2 group."""
    rep = CheckReport("lemma41", columns=("fixture", "exact", "f injective",
                                          "alpha primitive", "beta primitive"))
    for sid in catalog.mv_segment_ids():
        seg = catalog.mv_segment(sid)
        exact = is_exact(seg.maps)
        inj = not kernel_basis(seg.f)
        a, b = is_primitive(seg.image("alpha")), is_primitive(seg.image("beta"))
        rep.rows.append((sid, exact, inj, a, b))
        rep.check(f"{sid}: exact, f injective, alpha and beta primitive",
                  exact and inj and a and b)
    dual = alexander_duality(4, catalog.get("torus2").homology)
    rep.check("H_2(S^4 - T^2) = Z^2 by Alexander duality",
              dual[2] == FgAbGroup(2), f"reduced homology {dual}")
    grp = complement_h2_transverse(True, True)
    rep.check("meridian basis is free of rank 2",
              grp.group == FgAbGroup(2) and grp.basis == ALPHA_BETA)
    return rep


LEMMA42_PAIRS = (
    ("sphere3", "unknot"),
    ("sphere3", "trefoil"),
    ("sphere3", "cinquefoil"),
    ("s1xs2", "local_unknot"),
    ("lens5", "local_unknot"),
)


def _complement_complex(N: str, knot: str):
    if N == "sphere3":
        return catalog.wirtinger_spine(catalog.knot_fixtures()[knot])
    return catalog.get({"s1xs2": "s1xs2_local_unknot_complement",
                        "lens5": "l5_local_unknot_complement"}[N]).complex


def lemma42() -> CheckReport:
    """``H_2(S^1 x (N - K))`` against ``H_1(N) + H_2(N) + Z``."""
    rep = CheckReport("lemma42", columns=("N", "K", "direct H_2", "predicted H_2"))
    circle = catalog.get("circle").complex
    for N, K in LEMMA42_PAIRS:
        X = _complement_complex(N, K)
        direct = homology(tensor(circle, X))[2]
        predicted = complement_h2_product(catalog.get(N).homology).group
        rep.rows.append((N, K, str(direct), str(predicted)))
        rep.check(f"({N}, {K})", direct == predicted, f"{direct} vs {predicted}")
        if N == "sphere3":
            rep.check(f"({N}, {K}) prediction is Z", predicted == Z)
            dual = alexander_duality(3, catalog.get("circle").homology)
            hx = homology(X)
            rep.check(f"({N}, {K}) spine matches Alexander duality in degrees 1, 2",
                      hx[1] == dual[1] and hx[2] == dual[2])
    return rep


def lemma51(seed: int = 0, samples: int = 20) -> CheckReport:
    """``sl(T) = sl(K) alpha`` on random profiles and on front-backed fixtures."""
    rng = random.Random(seed)
    rep = CheckReport("lemma51", columns=("profile", "sl(K)", "sl(T)", "front sl+"))
    ok = True
    for _ in range(samples):
        b = random_knot_braid(rng)
        c = self_linking_class(build_dpv_torus("C", b))
        sl = b.exponent_sum - b.strands
        good = c.coords == (sl, 0) and sl_of_braid(b) == sl
        ok &= good
        rep.rows.append((str(b), sl, str(c), ""))
    rep.check(f"{samples} random profiles: class = (e - n, 0)", ok)
    braids = catalog.knot_fixtures()
    fronts = catalog.front_fixtures()
    pairs = [(k, braids[k], fronts[k]) for k in fronts]
    # k negative Markov moves on the braid side match k S+ zigzags on the front side
    b, f = braids["unknot"], fronts["unknot"]
    for k in range(1, 4):
        b = markov_stabilize(b, "-")
        f = legendrian_stabilize(f, "+")
        pairs.append((f"unknot, stabilized {k}x", b, f))
    for name, b, f in pairs:
        c = self_linking_class(build_dpv_torus("C", b))
        pushed = transverse_pushoff(tb_of_front(f), rot_of_front(f), "+")
        rep.rows.append((name, sl_of_braid(b), str(c), pushed))
        rep.check(f"{name}: braid sl = tb - rot of front", c.coords == (pushed, 0),
                  f"{c.coords[0]} vs {pushed}")
    return rep


def laws(seed: int = 0, samples: int = 200) -> CheckReport:
    """Randomized knot-calculus, Smith form and divisibility laws."""
    rng = random.Random(seed)
    rep = CheckReport("laws")
    bad = []
    for _ in range(samples):
        f = random_knot_front(rng)
        tb, rot = tb_of_front(f), rot_of_front(f)
        if (tb + rot) % 2 == 0:
            bad.append(f"tb + rot even: {f}")
        if rot_of_front(f, reverse=True) != -rot:
            bad.append(f"reversal does not negate rot: {f}")
        for s in (1, -1):
            g = legendrian_stabilize(f, s)
            if (tb_of_front(g), rot_of_front(g)) != (tb - 1, rot + s):
                bad.append(f"S{'+' if s > 0 else '-'} law fails: {f}")
        b = random_knot_braid(rng)
        sl = sl_of_braid(b)
        if sl % 2 == 0:
            bad.append(f"sl even: {b}")
        if sl_of_braid(markov_stabilize(b, "-")) != sl - 2:
            bad.append(f"negative Markov law fails: {b}")
        if sl_of_braid(markov_stabilize(b, "+")) != sl:
            bad.append(f"positive Markov law fails: {b}")
    rep.check(f"knot-calculus laws on {samples} fronts and braids", not bad,
              "; ".join(bad[:3]))
    bad = []
    for _ in range(samples):
        m, n = rng.randint(0, 12), rng.randint(0, 12)
        A = random_matrix(rng, m, n)
        s = smith_normal_form(A)
        d = s.diagonal
        r = s.rank
        ok = (s.U @ A @ s.V == s.D and abs(det(s.U)) == 1 and abs(det(s.V)) == 1
              and all(x == 0 for i, row in enumerate(s.D.data) for j, x in enumerate(row)
                      if i != j)
              and all(x >= 0 for x in d) and all(x != 0 for x in d[:r])
              and all(x == 0 for x in d[r:])
              and all(b % a == 0 for a, b in zip(d[:r], d[1:r])))
        if not ok:
            bad.append(f"{A.tolist()}")
    rep.check(f"Smith form postconditions on {samples} random matrices", not bad,
              "; ".join(bad[:1]))
    bad = 0
    for _ in range(samples):
        v = (rng.randint(-60, 60), rng.randint(-60, 60))
        P, _ = random_unimodular(rng, 2)
        if divisibility(P.apply(v)) != divisibility(v):
            bad += 1
    rep.check(f"divisibility invariant under {samples} unimodular maps", bad == 0)
    return rep


RUNNERS = {
    "laws": laws,
    "thm11": thm11,
    "thm12": thm12,
    "lemma41": lemma41,
    "lemma42": lemma42,
    "lemma51": lemma51,
}
