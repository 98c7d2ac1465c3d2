"""Seeded random corpora: knot braids, fronts, unimodular matrices, complexes.

Every generator takes a ``random.Random`` so runs are reproducible.
"""
from __future__ import annotations

import random
from typing import Optional

from .homology import ChainComplex, FgAbGroup, GradedGroup, IntMatrix
from .knots import (L, R, X, BraidWord, FrontWord, _permutation_cycles,
                    legendrian_stabilize, orient_front, validate_front)


def random_knot_braid(rng: random.Random, max_strands: int = 5,
                      max_len: int = 12) -> BraidWord:
    """Random braid whose closure is a knot.

    A random word is completed by letters that join two cycles of the
    permutation, each of which lowers the cycle count by one.
    """
    n = rng.randint(1, max_strands)
    letters = []
    if n > 1:
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1)
                   for _ in range(rng.randint(0, max_len))]
    while True:
        cycles = _permutation_cycles(n, letters)
        if len(cycles) == 1:
            return BraidWord(n, tuple(letters))
        owner = {p: k for k, cyc in enumerate(cycles) for p in cyc}
        joins = [i for i in range(1, n) if owner[i] != owner[i + 1]]
        letters.append(rng.choice((1, -1)) * rng.choice(joins))


def legendrian_closure(b: BraidWord) -> FrontWord:
    """Front of the Legendrian closure of a braid, read as a positive braid.

    Nested left cusps, every letter becomes a crossing among the top ``n``
    strands (all pointing right, so every crossing is positive), then nested
    right cusps. Letter signs are ignored.
    """
    n = b.strands
    events = [L(i) for i in range(n)]
    events += [X(abs(x) - 1) for x in b.letters]
    events += [R(i) for i in reversed(range(n))]
    return FrontWord(tuple(events))


def random_front_word(rng: random.Random, max_strands: int = 6,
                      max_len: int = 14) -> FrontWord:
    """Random valid front (any number of components)."""
    events, k = [], 0
    length = rng.randint(1, max_len)
    while True:
        closing = len(events) >= length
        choices = []
        if not closing and k + 2 <= max_strands:
            choices.append("L")
        if k >= 2:
            choices += ["R"] if closing else ["R", "X", "X"]
        if not choices:
            if k == 0:
                break
            choices = ["R"]
        kind = rng.choice(choices)
        if kind == "L":
            events.append(L(rng.randint(0, k)))
            k += 2
        elif kind == "R":
            events.append(R(rng.randint(0, k - 2)))
            k -= 2
            if k == 0 and closing:
                break
        else:
            events.append(X(rng.randint(0, k - 2)))
    return FrontWord(tuple(events))


def random_knot_front(rng: random.Random, max_strands: int = 6, max_len: int = 14,
                      max_zigzags: int = 3, tries: int = 200) -> FrontWord:
    """Random one-component front with a few randomly placed zigzags."""
    f: Optional[FrontWord] = None
    for _ in range(tries):
        cand = random_front_word(rng, max_strands, max_len)
        if validate_front(cand).components == 1:
            f = cand
            break
    if f is None:
        f = legendrian_closure(random_knot_braid(rng, 3, 6))
    for _ in range(rng.randint(0, max_zigzags)):
        o = orient_front(f)
        gap = rng.randint(1, len(f.events) - 1)
        slot = rng.randint(0, len(o.directions[gap]) - 1)
        f = legendrian_stabilize(f, rng.choice("+-"), at=(gap, slot))
    return f


def random_unimodular(rng: random.Random, n: int, steps: int = 12,
                      bound: int = 3) -> tuple:
    """``(P, P_inv)`` from a product of random elementary operations."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Pi = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return IntMatrix.zeros(0, 0), IntMatrix.zeros(0, 0)
    for _ in range(steps):
        op = rng.random()
        i = rng.randrange(n)
        if op < 0.2:
            # negate row i of P and column i of P_inv
            P[i] = [-x for x in P[i]]
            for r in Pi:
                r[i] = -r[i]
        elif n > 1:
            j = rng.choice([k for k in range(n) if k != i])
            if op < 0.4:
                P[i], P[j] = P[j], P[i]
                for r in Pi:
                    r[i], r[j] = r[j], r[i]
            else:
                c = rng.randint(-bound, bound)
                P[i] = [a + c * b for a, b in zip(P[i], P[j])]
                for r in Pi:
                    r[j] -= c * r[i]
    return IntMatrix.from_rows(P, n), IntMatrix.from_rows(Pi, n)


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -50,
                  hi: int = 50) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols)


def random_complex(rng: random.Random, max_degree: int = 3, max_pieces: int = 5,
                   orders=(1, 2, 3, 4, 6)) -> tuple:
    """A random complex together with its homology, known by construction.

    The complex is a sum of pieces ``Z`` (a free class in some degree) and
    ``Z --d--> Z`` (torsion ``Z/d`` below, nothing if ``d = 1``), written in
    random unimodular bases in each degree.
    """
    top = rng.randint(0, max_degree)
    pieces = []
    for _ in range(rng.randint(0, max_pieces)):
        if top > 0 and rng.random() < 0.6:
            pieces.append(("cone", rng.randint(1, top), rng.choice(orders)))
        else:
            pieces.append(("free", rng.randint(0, top), 0))
    dims = [0] * (top + 1)
    slots = []  # (piece, degree, index in that degree)
    for kind, deg, d in pieces:
        if kind == "free":
            slots.append(((deg, dims[deg]),))
            dims[deg] += 1
        else:
            slots.append(((deg, dims[deg]), (deg - 1, dims[deg - 1])))
            dims[deg] += 1
            dims[deg - 1] += 1
    bds = [[[0] * dims[k] for _ in range(dims[k - 1])] for k in range(1, top + 1)]
    free = [0] * (top + 1)
    tors = [[] for _ in range(top + 1)]
    for (kind, deg, d), s in zip(pieces, slots):
        if kind == "free":
            free[deg] += 1
        else:
            (k, i), (_, j) = s
            bds[k - 1][j][i] = d
            tors[k - 1].append(d)
    base = [IntMatrix.from_rows(B, dims[k + 1]) for k, B in enumerate(bds)]
    changes = [random_unimodular(rng, dims[k]) for k in range(top + 1)]
    out = []
    for k, B in enumerate(base, start=1):
        P_low, _ = changes[k - 1]
        _, P_high_inv = changes[k]
        out.append(P_low @ B @ P_high_inv)
    expected = GradedGroup(tuple(FgAbGroup.from_cyclic(free[k], tors[k])
                                 for k in range(top + 1)))
    return ChainComplex(tuple(dims), tuple(out)), expected
