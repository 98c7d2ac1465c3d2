"""Hand-checked chain complexes and Mayer-Vietoris fixtures.

Knot complements are replaced by presentation 2-complexes (spines). Only
their first and second homology is ever used, so homotopy type suffices.

Set ``ENGELTORI_CATALOG_DIR`` to a directory of ``<id>.json`` files in the
chain-complex format to override or extend the built-in entries.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Sequence, Union

from .errors import UnknownId
from .homology import (ChainComplex, GradedGroup, IntMatrix, homology, tensor,
                       zero_map)
from .knots import L, R, X, BraidWord, FrontWord, _require_braid_knot

CATALOG_ENV = "ENGELTORI_CATALOG_DIR"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    complex: Union[ChainComplex, GradedGroup]
    homology: GradedGroup
    note: str = ""

    @property
    def graded(self) -> GradedGroup:
        return self.homology


# --------------------------------------------------------------------------
# presentation complexes

def exponent_sums(relator: Sequence[int], ngens: int) -> list:
    """Exponent sum of each generator in a word; letters are +-(index+1)."""
    out = [0] * ngens
    for x in relator:
        out[abs(x) - 1] += 1 if x > 0 else -1
    return out


def presentation_complex(ngens: int, relators: Sequence[Sequence[int]]) -> ChainComplex:
    """One 0-cell, a 1-cell per generator and a 2-cell per relator.

    The boundary of a 2-cell is the abelianized relator, i.e. its Fox
    derivatives evaluated at the trivial representation.
    """
    cols = [exponent_sums(r, ngens) for r in relators]
    d2 = IntMatrix.from_rows([[c[i] for c in cols] for i in range(ngens)], len(cols))
    return ChainComplex((1, ngens, len(relators)), (zero_map(ngens, 1), d2))


def wirtinger_relators(b: BraidWord) -> tuple:
    """Arcs and Wirtinger relators of the closed braid diagram.

    At ``sigma_i`` the strand in slot ``i`` passes over; with ``sigma_i^-1``
    the strand in slot ``i+1`` does. Each undercrossing ends one arc and starts
    another, giving the relator ``new = over^e old over^-e``. Returns
    ``(n_arcs, relators)`` with one redundant relator dropped.
    """
    _require_braid_knot(b)
    n = b.strands
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    slot_arc = list(range(n))
    raw = []
    for x in b.letters:
        i = abs(x) - 1
        e = 1 if x > 0 else -1
        over_slot, under_slot = (i, i + 1) if e > 0 else (i + 1, i)
        over, old = slot_arc[over_slot], slot_arc[under_slot]
        new = len(parent)
        parent.append(new)
        raw.append((new, over, old, e))
        # over strand moves to the under strand's slot and vice versa
        slot_arc[under_slot], slot_arc[over_slot] = over, new
    for p in range(n):
        ra, rb = find(slot_arc[p]), find(p)
        if ra != rb:
            parent[ra] = rb
    roots = sorted({find(a) for a in range(len(parent))})
    index = {r: k + 1 for k, r in enumerate(roots)}
    relators = []
    for new, over, old, e in raw:
        g_new, g_over, g_old = index[find(new)], index[find(over)], index[find(old)]
        # new^-1 over^e old over^-e
        relators.append((-g_new, e * g_over, g_old, -e * g_over))
    return len(roots), tuple(relators[:-1])


def wirtinger_spine(b: BraidWord) -> ChainComplex:
    narcs, relators = wirtinger_relators(b)
    return presentation_complex(narcs, relators)


# --------------------------------------------------------------------------
# built-in entries

def _cx(dims, *bds) -> ChainComplex:
    return ChainComplex(tuple(dims), tuple(IntMatrix.from_rows(B, dims[k + 1])
                                           for k, B in enumerate(bds)))


def _builtin():
    point = _cx([1])
    circle = _cx([1, 1], [[0]])
    disk = _cx([1, 1, 1], [[0]], [[1]])
    sphere2 = _cx([1, 0, 1])
    sphere3 = _cx([1, 0, 0, 1])
    torus2 = _cx([1, 2, 1])
    moore_z2 = _cx([1, 1, 1], [[0]], [[2]])
    lens5 = _cx([1, 1, 1, 1], [[0]], [[5]], [[0]])
    # x y x y^-1 x^-1 y^-1, the relator of <x, y | xyx = yxy>
    trefoil = presentation_complex(2, [(1, 2, 1, -2, -1, -2)])
    cinquefoil = wirtinger_spine(BraidWord(2, (1, 1, 1, 1, 1)))
    # N minus a local unknot = (N - ball) glued to (ball - unknot) along S^2;
    # the sphere bounds on the N side and generates H_2 on the ball side, so these
    # are S^1 v S^1 v S^2 and (2-skeleton of L(5,1)) v S^1
    s1xs2_local = _cx([1, 2, 1])
    l5_local = _cx([1, 2, 1], [[0, 0]], [[5], [0]])

    G = GradedGroup.of
    entries = [
        ("point", point, G(1), "single 0-cell"),
        ("circle", circle, G(1, 1), "one 0-cell, one 1-cell"),
        ("disk", disk, G(1, 0, 0), "circle with a 2-cell attached by degree 1"),
        ("sphere2", sphere2, G(1, 0, 1), "0-cell plus 2-cell"),
        ("sphere3", sphere3, G(1, 0, 0, 1), "0-cell plus 3-cell"),
        ("torus2", torus2, G(1, 2, 1), "standard CW torus, all boundaries zero"),
        ("solid_torus", circle, G(1, 1), "deformation retracts to its core circle"),
        ("unknot_complement", circle, G(1, 1),
         "complement of the unknot in S^3 is a solid torus"),
        ("s1xs2", tensor(circle, sphere2), G(1, 1, 1, 1), "circle (x) sphere2"),
        ("t3", tensor(circle, torus2), G(1, 3, 3, 1), "circle (x) torus2"),
        ("lens5", lens5, G(1, (0, [5]), 0, 1),
         "lens space L(5,1), cells in degrees 0..3"),
        ("trefoil_spine", trefoil, G(1, 1, 0),
         "presentation complex of <x, y | xyx = yxy>"),
        ("cinquefoil_spine", cinquefoil, G(1, 1, 0),
         "Wirtinger spine of the closure of sigma_1^5"),
        ("moore_z2", moore_z2, G(1, (0, [2]), 0),
         "Moore space M(Z/2, 1)"),
        ("s1xs2_local_unknot_complement", s1xs2_local, G(1, 2, 1),
         "S^1 x S^2 minus a local unknot, up to homotopy S^1 v S^1 v S^2"),
        ("l5_local_unknot_complement", l5_local,
         G(1, (1, [5]), 0),
         "L(5,1) minus a local unknot, up to homotopy (2-skeleton of L(5,1)) v S^1"),
    ]
    return {i: CatalogEntry(i, cx, h, note) for i, cx, h, note in entries}


_BUILTIN = _builtin()


def builtin_ids() -> list:
    return sorted(_BUILTIN)


def _load_user(path: Path) -> CatalogEntry:
    obj = json.loads(path.read_text())
    cx = ChainComplex.from_json(obj)
    stated = GradedGroup.from_json(obj["homology"]) if "homology" in obj else homology(cx)
    return CatalogEntry(path.stem, cx, stated, obj.get("note", f"user entry {path}"))


def ids() -> list:
    out = set(_BUILTIN)
    d = os.environ.get(CATALOG_ENV)
    if d and Path(d).is_dir():
        out.update(p.stem for p in Path(d).glob("*.json"))
    return sorted(out)


def get(id: str) -> CatalogEntry:
    d = os.environ.get(CATALOG_ENV)
    if d:
        p = Path(d) / f"{id}.json"
        if p.is_file():
            return _load_user(p)
    try:
        return _BUILTIN[id]
    except KeyError:
        raise UnknownId(f"unknown catalog id {id!r}; known: {', '.join(ids())}") from None


# --------------------------------------------------------------------------
# Mayer-Vietoris fixtures

@dataclass(frozen=True)
class MVSegment:
    """``0 -> H_2(boundary nu T) -f-> H_2(nu T) + H_2(M - nu T) -g-> H_2(M)``."""
    id: str
    maps: tuple  # (0 -> Z^3, f, g)
    source_labels: tuple
    middle_labels: tuple
    note: str

    @property
    def f(self) -> IntMatrix:
        return self.maps[1]

    def image(self, label: str) -> tuple:
        """Image of a source generator, restricted to the complement summand."""
        j = self.source_labels.index(label)
        col = tuple(self.f[i, j] for i in range(self.f.rows))
        return col[1:]


def _mv_segments():
    src = ("TxPt", "alpha", "beta")
    f3 = IntMatrix.identity(3)
    s4 = MVSegment(
        "s4_unknotted_torus",
        (zero_map(0, 3), f3, zero_map(3, 0)),
        src, ("T", "alpha", "beta"),
        "unknotted torus in S^4; H_3 = H_2 = 0")
    f5 = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0]])
    g = IntMatrix.from_rows([[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    s2s2 = MVSegment(
        "s2xs2_local_torus",
        (zero_map(0, 3), f5, g),
        src, ("T", "alpha", "beta", "S2x1", "1xS2"),
        "torus in a ball of S^2 x S^2; H_3 = 0, H_2 = Z^2")
    return {s.id: s for s in (s4, s2s2)}


_MV = _mv_segments()


def mv_segment(id: str) -> MVSegment:
    try:
        return _MV[id]
    except KeyError:
        raise UnknownId(f"unknown Mayer-Vietoris fixture {id!r}") from None


def mv_segment_ids() -> list:
    return sorted(_MV)


@lru_cache(maxsize=None)
def knot_fixtures() -> dict:
    """Braid presentations of the catalog knots in S^3."""
    return {
        "unknot": BraidWord(1, ()),
        "trefoil": BraidWord(2, (1, 1, 1)),
        "cinquefoil": BraidWord(2, (1, 1, 1, 1, 1)),
    }


@lru_cache(maxsize=None)
def front_fixtures() -> dict:
    """Fronts of the same knots where a small one is known.

    The trefoil front is the usual max-tb right-handed trefoil: two stacked
    left cusps, three crossings on the middle strands, two right cusps.
    """
    return {
        "unknot": FrontWord((L(0), R(0))),
        "trefoil": FrontWord((L(0), L(0), X(1), X(1), X(1), R(0), R(0))),
    }
