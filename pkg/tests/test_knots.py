import random

import pytest
from hypothesis import given, strategies as st

from engeltori.errors import InvalidBraid, InvalidFront, MultiComponent
from engeltori.knots import (L, R, X, BraidWord, FrontWord, bennequin_check, invariants,
                             iterate, legendrian_stabilize, markov_stabilize, orient_front,
                             parse_sign, rot_of_front, sl_of_braid, tb_of_front,
                             transverse_pushoff, validate_braid, validate_front)
from engeltori.sampling import (legendrian_closure, random_front_word, random_knot_braid,
                                random_knot_front)
from oracles import front_oracle

UNKNOT = FrontWord((L(0), R(0)))
TREFOIL = FrontWord((L(0), L(0), X(1), X(1), X(1), R(0), R(0)))

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _oracle(f):
    return front_oracle([(e.kind, e.pos) for e in f.events])


# ---------------------------------------------------------------- braids

@pytest.mark.parametrize("b, comps", [
    (BraidWord(1, ()), 1),
    (BraidWord(2, (1, 1, 1)), 1),
    (BraidWord(2, (1, 1)), 2),
    (BraidWord(3, (1, -2)), 1),
    (BraidWord(3, ()), 3),
])
def test_braid_components(b, comps):
    rep = validate_braid(b)
    assert rep.valid and rep.components == comps


@pytest.mark.parametrize("b", [BraidWord(0, ()), BraidWord(2, (2,)), BraidWord(3, (0,)),
                               BraidWord(2, (-2,))])
def test_braid_rejects_bad_letters(b):
    rep = validate_braid(b)
    assert not rep.valid and rep.problems
    with pytest.raises(InvalidBraid):
        sl_of_braid(b)


@pytest.mark.parametrize("b, sl", [
    (BraidWord(1, ()), -1),
    (BraidWord(2, (1, 1, 1)), 1),
    (BraidWord(2, (1,)), -1),
    (BraidWord(2, (1,) * 5), 3),
])
def test_sl_of_braid(b, sl):
    assert sl_of_braid(b) == sl


def test_sl_needs_a_knot():
    with pytest.raises(MultiComponent):
        sl_of_braid(BraidWord(2, (1, 1)))


def test_markov_examples():
    u = BraidWord(1, ())
    neg = markov_stabilize(u, "-")
    assert neg == BraidWord(2, (-1,)) and sl_of_braid(neg) == -3
    pos = markov_stabilize(u, "+")
    assert pos == BraidWord(2, (1,)) and sl_of_braid(pos) == -1
    twice = markov_stabilize(neg, "-")
    assert twice == BraidWord(3, (-1, -2)) and sl_of_braid(twice) == -5


def test_parse_sign():
    assert parse_sign("+") == 1 and parse_sign(-1) == -1
    with pytest.raises(ValueError):
        parse_sign("0")


@given(seeds)
def test_braid_parity_and_markov_laws(seed):
    rng = random.Random(seed)
    b = random_knot_braid(rng)
    sl = sl_of_braid(b)
    assert sl % 2 == 1
    for _ in range(rng.randint(1, 4)):
        s = rng.choice("+-")
        c = markov_stabilize(b, s)
        assert validate_braid(c).components == 1
        assert sl_of_braid(c) == sl - (2 if s == "-" else 0)
        b, sl = c, sl_of_braid(c)
        assert sl % 2 == 1


# ---------------------------------------------------------------- fronts

def test_front_validation_examples():
    assert validate_front(UNKNOT).components == 1
    two = FrontWord((L(0), L(0), X(1), R(0), R(0)))
    rep = validate_front(two)
    assert rep.valid and rep.components == _oracle(two)["components"]
    bad = validate_front(FrontWord((L(0),)))
    assert not bad.valid


@pytest.mark.parametrize("events", [
    (), (R(0),), (L(1),), (L(0), X(1), R(0)), (L(0), R(1)), (L(0), L(0), R(3), R(0)),
])
def test_front_rejects(events):
    f = FrontWord(events)
    assert not validate_front(f).valid
    with pytest.raises(InvalidFront):
        orient_front(f)


def test_front_multicomponent_rejected_for_invariants():
    f = FrontWord((L(0), L(2), R(2), R(0)))
    assert validate_front(f).components == 2
    with pytest.raises(MultiComponent):
        tb_of_front(f)


def test_unknot_front():
    o = orient_front(UNKNOT)
    assert (o.up, o.down, o.writhe) == (1, 1, 0)
    assert tb_of_front(UNKNOT) == -1 and rot_of_front(UNKNOT) == 0


def test_trefoil_front():
    o = orient_front(TREFOIL)
    assert o.crossing_signs == (1, 1, 1)
    assert tb_of_front(TREFOIL) == 1 and rot_of_front(TREFOIL) == 0
    assert _oracle(TREFOIL)["tb"] == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_two_cusp_fronts_have_only_negative_crossings(k):
    # one left and one right cusp: the two strands always run in opposite
    # directions, so every crossing is negative and tb = -1 - k
    f = FrontWord((L(0),) + (X(0),) * k + (R(0),))
    assert orient_front(f).crossing_signs == (-1,) * k
    assert tb_of_front(f) == -1 - k == _oracle(f)["tb"]


@pytest.mark.parametrize("sign, rot", [("+", 1), ("-", -1)])
def test_single_stabilization(sign, rot):
    g = legendrian_stabilize(UNKNOT, sign)
    o = orient_front(g)
    assert g.cusps == 4
    assert sorted((o.up, o.down)) == [1, 3]
    assert tb_of_front(g) == -2 and rot_of_front(g) == rot
    assert (_oracle(g)["tb"], _oracle(g)["rot"]) == (-2, rot)


def test_double_stabilization():
    g = legendrian_stabilize(legendrian_stabilize(UNKNOT, "+"), "+")
    assert rot_of_front(g) == 2 and tb_of_front(g) == -3


def test_iterated_tb_ladder():
    ladder = iterate(lambda f: legendrian_stabilize(f, "+"), UNKNOT, 6)
    assert [tb_of_front(f) for f in ladder] == [-1 - n for n in range(7)]


def test_stabilize_rejects_missing_strand():
    with pytest.raises(InvalidFront):
        legendrian_stabilize(UNKNOT, "+", at=(1, 5))


@pytest.mark.parametrize("tb, rot, sl", [(-1, 0, -1), (-2, 1, -3), (-2, -1, -1)])
def test_transverse_pushoff(tb, rot, sl):
    assert transverse_pushoff(tb, rot, "+") == sl
    assert transverse_pushoff(tb, rot, "-") == tb + rot


@pytest.mark.parametrize("sl, g, ok", [(-1, 0, True), (1, 1, True), (3, 1, False)])
def test_bennequin(sl, g, ok):
    assert bennequin_check(sl, g) is ok


def test_bennequin_negative_genus():
    with pytest.raises(ValueError):
        bennequin_check(1, -1)


def test_invariants_bundle():
    assert invariants(BraidWord(2, (1, 1, 1))).sl == 1
    inv = invariants(TREFOIL)
    assert (inv.tb, inv.rot, inv.sl) == (1, 0, None)


@given(seeds)
def test_front_matches_trace_oracle(seed):
    rng = random.Random(seed)
    f = random_knot_front(rng)
    o = orient_front(f)
    ref = _oracle(f)
    assert (o.up, o.down, o.writhe) == (ref["up"], ref["down"], ref["writhe"])
    assert (tb_of_front(f), rot_of_front(f)) == (ref["tb"], ref["rot"])


@given(seeds)
def test_front_component_count_matches_oracle(seed):
    f = random_front_word(random.Random(seed))
    assert validate_front(f).components == _oracle(f)["components"]


@given(seeds)
def test_front_laws(seed):
    rng = random.Random(seed)
    f = random_knot_front(rng)
    tb, rot = tb_of_front(f), rot_of_front(f)
    assert (tb + rot) % 2 == 1
    o, r = orient_front(f), orient_front(f, reverse=True)
    assert (r.up, r.down) == (o.down, o.up)
    assert rot_of_front(f, reverse=True) == -rot
    sl = transverse_pushoff(tb, rot, "+")
    gap = rng.randint(1, len(f.events) - 1)
    slot = rng.randint(0, len(o.directions[gap]) - 1)
    plus = legendrian_stabilize(f, "+", at=(gap, slot))
    minus = legendrian_stabilize(f, "-", at=(gap, slot))
    assert (tb_of_front(plus), rot_of_front(plus)) == (tb - 1, rot + 1)
    assert (tb_of_front(minus), rot_of_front(minus)) == (tb - 1, rot - 1)
    assert transverse_pushoff(tb_of_front(minus), rot_of_front(minus), "+") == sl
    assert transverse_pushoff(tb_of_front(plus), rot_of_front(plus), "+") == sl - 2


@given(seeds)
def test_positive_braid_closure_fronts(seed):
    # Legendrian closure of a positive braid: tb = letters - strands, rot = 0
    b = random_knot_braid(random.Random(seed), 4, 8)
    b = BraidWord(b.strands, tuple(abs(x) for x in b.letters))
    f = legendrian_closure(b)
    assert validate_front(f).components == 1
    assert tb_of_front(f) == len(b.letters) - b.strands
    assert rot_of_front(f) == 0
    assert transverse_pushoff(tb_of_front(f), 0, "+") == sl_of_braid(b)
