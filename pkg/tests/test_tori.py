import random

import pytest
from hypothesis import given, strategies as st

from engeltori import catalog
from engeltori.errors import (BasisMismatch, HypothesisViolated, MultiComponent,
                              NotClosed3Manifold, ShapeMismatch)
from engeltori.homology import FgAbGroup, GradedGroup, Z
from engeltori.knots import BraidWord, FrontWord, sl_of_braid
from engeltori.sampling import random_knot_braid, random_unimodular
from engeltori.tori import (ALPHA_BETA, DISTINCT, INCONCLUSIVE, S1_MU, HomClass,
                            build_dpv_torus, build_legendrian_torus, check_closed_3manifold,
                            complement_h2_product, complement_h2_transverse, distinguish,
                            self_linking_class, stabilize_legendrian_torus,
                            stabilize_torus, tb_class, theorem_family)

UNKNOT = BraidWord(1, ())
TREFOIL = BraidWord(2, (1, 1, 1))
FRONTS = catalog.front_fixtures()

seeds = st.integers(0, 2**32 - 1)


# ---------------------------------------------------------------- transverse

def test_build_dpv_torus():
    T = build_dpv_torus("C", UNKNOT)
    assert T.profile == UNKNOT and T.stabilizations == 0
    assert build_dpv_torus("C", TREFOIL).profile == TREFOIL
    with pytest.raises(MultiComponent):
        build_dpv_torus("C", BraidWord(2, (1, 1)))


@pytest.mark.parametrize("profile, coords", [
    (UNKNOT, (-1, 0)),
    (TREFOIL, (1, 0)),
    (BraidWord(2, (-1,)), (-3, 0)),
])
def test_self_linking_class(profile, coords):
    c = self_linking_class(build_dpv_torus("C", profile))
    assert c.basis == ALPHA_BETA and c.coords == coords


@pytest.mark.parametrize("n, sl", [(0, -1), (1, -3), (5, -11)])
def test_stabilize_torus(n, sl):
    T = stabilize_torus(build_dpv_torus("C", UNKNOT), n)
    assert sl_of_braid(T.profile) == sl and T.stabilizations == n
    if n == 0:
        assert T == build_dpv_torus("C", UNKNOT)


def test_stabilize_rejects_negative_count():
    with pytest.raises(ValueError):
        stabilize_torus(build_dpv_torus("C", UNKNOT), -1)


def test_complement_h2_transverse():
    g = complement_h2_transverse(True, True)
    assert g.group == FgAbGroup(2) and g.basis == ALPHA_BETA
    with pytest.raises(HypothesisViolated):
        complement_h2_transverse(False, True)
    with pytest.raises(HypothesisViolated):
        complement_h2_transverse(True, False)


@given(seeds, st.integers(0, 6))
def test_self_linking_is_pure_alpha(seed, n):
    T0 = build_dpv_torus("C", random_knot_braid(random.Random(seed)))
    T = stabilize_torus(T0, n)
    c = self_linking_class(T)
    assert c.coords[1] == 0
    assert c.coords[0] == sl_of_braid(T0.profile) - 2 * n
    assert T.smooth_class == T0.smooth_class


# ---------------------------------------------------------------- Legendrian

@pytest.mark.parametrize("cid, group", [
    ("sphere3", Z),
    ("s1xs2", FgAbGroup(3)),
    ("t3", FgAbGroup(7)),
    ("lens5", FgAbGroup(1, (5,))),
])
def test_complement_h2_product(cid, group):
    g = complement_h2_product(catalog.get(cid).homology)
    assert g.group == group and g.basis == S1_MU


@pytest.mark.parametrize("N", [
    GradedGroup.of(1, 1),                 # not closed
    GradedGroup.of(1, 0, 0, 1, 1),        # too high
    GradedGroup.of(2, 0, 0, 1),           # disconnected
    GradedGroup.of(1, 1, 0, 1),           # fails duality
    GradedGroup.of(1, 0, (0, [2]), 1),    # torsion in H_2
])
def test_closed_3manifold_gate(N):
    with pytest.raises(NotClosed3Manifold):
        check_closed_3manifold(N)
    with pytest.raises(HypothesisViolated):
        complement_h2_product(N)


@pytest.mark.parametrize("front, n, coeff", [
    ("unknot", 0, -1),
    ("unknot", 1, -2),
    ("trefoil", 0, 1),
])
def test_tb_class(front, n, coeff):
    L = stabilize_legendrian_torus(build_legendrian_torus(FRONTS[front]), n)
    c = tb_class(L)
    assert c.basis == S1_MU and c.coords == (coeff,)


def test_tb_class_needs_nullhomologous_profile():
    L = build_legendrian_torus(FRONTS["unknot"], nullhomologous=False)
    with pytest.raises(HypothesisViolated):
        tb_class(L)


def test_legendrian_torus_rejects_bad_input():
    with pytest.raises(MultiComponent):
        build_legendrian_torus(FrontWord((("L", 0), ("L", 2), ("R", 2), ("R", 0))))
    with pytest.raises(NotClosed3Manifold):
        build_legendrian_torus(FRONTS["unknot"], GradedGroup.of(1, 1))


@pytest.mark.parametrize("sign", ["+", "-"])
def test_legendrian_stabilization_sign_does_not_change_tb(sign):
    L = stabilize_legendrian_torus(build_legendrian_torus(FRONTS["unknot"]), 3, sign)
    assert tb_class(L).coords == (-4,)


# ---------------------------------------------------------------- verdicts

@pytest.mark.parametrize("a, b, outcome, cert", [
    ((-1, 0), (-3, 0), DISTINCT, (1, 3)),
    ((-1, 0), (1, 0), INCONCLUSIVE, (1, 1)),
    ((5, 0), (5, 0), INCONCLUSIVE, (5, 5)),
])
def test_distinguish(a, b, outcome, cert):
    v = distinguish(HomClass(ALPHA_BETA, a), HomClass(ALPHA_BETA, b))
    assert v.outcome == outcome and v.certificate == cert
    assert v.distinct == (outcome == DISTINCT)


def test_distinguish_basis_mismatch():
    with pytest.raises(BasisMismatch):
        distinguish(HomClass(ALPHA_BETA, (1, 0)), HomClass(S1_MU, (1,)))


def test_homclass_length_checked():
    with pytest.raises(ShapeMismatch):
        HomClass(ALPHA_BETA, (1,))


@given(seeds, st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40),
       st.integers(-40, 40))
def test_verdicts_invariant_under_basis_change(seed, a, b, c, d):
    P, _ = random_unimodular(random.Random(seed), 2)
    c1, c2 = HomClass(ALPHA_BETA, (a, b)), HomClass(ALPHA_BETA, (c, d))
    before = distinguish(c1, c2)
    after = distinguish(c1.change_basis(P), c2.change_basis(P))
    assert before == after


# ---------------------------------------------------------------- families

def test_transverse_family_of_five():
    fam = theorem_family("transverse", UNKNOT, 5)
    assert fam.divisibilities == [1, 3, 5, 7, 9, 11]
    assert fam.n_pairs == 15 and fam.all_distinct and fam.smoothly_isotopic
    assert fam.implemented_ladder == [-1, -3, -5, -7, -9, -11]
    assert fam.unit_step_ladder == [-1, -2, -3, -4, -5, -6] and fam.unit_step_distinct


def test_legendrian_family_of_five():
    fam = theorem_family("legendrian", FRONTS["unknot"], 5)
    assert fam.divisibilities == [1, 2, 3, 4, 5, 6]
    assert fam.all_distinct and fam.n_pairs == 15 and fam.smoothly_isotopic


def test_empty_family():
    fam = theorem_family("transverse", UNKNOT, 0)
    assert fam.n_pairs == 0 and fam.verdicts == {}


def test_family_in_other_ambient():
    fam = theorem_family("legendrian", FRONTS["trefoil"], 4, N=catalog.get("s1xs2").homology)
    # tb ladder 1, 0, -1, -2, -3: the collision |1| = |-1| is reported, not hidden
    assert [c.coords[0] for c in fam.classes] == [1, 0, -1, -2, -3]
    assert fam.verdicts[(0, 2)].outcome == INCONCLUSIVE
    assert not fam.all_distinct


def test_family_bad_kind():
    with pytest.raises(ValueError):
        theorem_family("klein", UNKNOT, 2)


@given(st.integers(0, 12))
def test_transverse_divisibilities_strictly_increase(count):
    fam = theorem_family("transverse", UNKNOT, count)
    d = fam.divisibilities
    assert all(x < y for x, y in zip(d, d[1:]))
    assert fam.n_pairs == count * (count + 1) // 2 and fam.all_distinct
