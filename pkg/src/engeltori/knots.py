"""Transverse knots as braid closures, Legendrian knots as front event words.

Conventions
-----------
Braids: a letter ``+i`` is the generator sigma_i, ``-i`` its inverse. The
self-linking number of the closure is ``exponent_sum - strands``.

Fronts: a front is read left to right as a sequence of events. Strand slots
in each column are numbered from the top (slot 0 has the largest z).

* ``L(p)`` (left cusp) inserts two new strands at slots ``p, p+1``;
  valid for ``0 <= p <= k``.
* ``R(p)`` (right cusp) joins slots ``p, p+1``; valid for ``p <= k-2``.
* ``X(p)`` (crossing) swaps slots ``p, p+1``; valid for ``p <= k-2``.

At a crossing the strand running from the upper-left to the lower-right has
the smaller slope and passes over. Signing by the right-hand rule then makes
a crossing positive exactly when both strands point the same way in x.

The canonical orientation of a one-component front orients the upper branch
of the first left cusp rightward. A cusp is *down* when the oriented curve
passes through it moving downward, and ``rot = (down - up) / 2``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Union

from .errors import InvalidBraid, InvalidFront, MultiComponent

Sign = Union[int, str]


def parse_sign(sign: Sign) -> int:
    if sign in (1, "+", "+1", "plus", "pos"):
        return 1
    if sign in (-1, "-", "-1", "minus", "neg"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass
class ValidationReport:
    valid: bool
    problems: list = field(default_factory=list)
    components: Optional[int] = None
    # braid closures only: cycles of the underlying permutation, 1-based
    cycles: Optional[list] = None

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class ClassicalInvariants:
    components: int
    tb: Optional[int] = None
    rot: Optional[int] = None
    sl: Optional[int] = None


# --------------------------------------------------------------------------
# braids

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self):
        if not self.letters:
            return f"1 (n={self.strands})"
        parts = [f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.letters]
        return " ".join(parts) + f" (n={self.strands})"


def _permutation_cycles(n: int, letters: Sequence[int]) -> list:
    # perm[i] = bottom position reached by the strand starting at top position i
    pos = list(range(n))
    where = list(range(n))  # where[slot] = strand currently in slot
    for x in letters:
        i = abs(x) - 1
        where[i], where[i + 1] = where[i + 1], where[i]
    for slot, strand in enumerate(where):
        pos[strand] = slot
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = pos[j]
        cycles.append(cyc)
    return cycles


def validate_braid(b: BraidWord) -> ValidationReport:
    problems = []
    if b.strands < 1:
        problems.append(f"strand count must be positive, got {b.strands}")
        return ValidationReport(False, problems)
    for k, x in enumerate(b.letters):
        if x == 0 or abs(x) > b.strands - 1:
            problems.append(
                f"letter {k} = {x}: generator index must lie in [1, {b.strands - 1}]")
    if problems:
        return ValidationReport(False, problems)
    cycles = _permutation_cycles(b.strands, b.letters)
    return ValidationReport(True, [], len(cycles), cycles)


def _require_braid_knot(b: BraidWord) -> None:
    report = validate_braid(b)
    if not report.valid:
        raise InvalidBraid("; ".join(report.problems))
    if report.components != 1:
        raise MultiComponent(
            f"braid closure has {report.components} components, expected a knot")


def sl_of_braid(b: BraidWord) -> int:
    _require_braid_knot(b)
    return b.exponent_sum - b.strands


def markov_stabilize(b: BraidWord, sign: Sign) -> BraidWord:
    """Add a strand and the letter sigma_n^(+-1).

    The negative move is transverse stabilization (sl drops by 2); the
    positive move preserves the transverse isotopy class.
    """
    s = parse_sign(sign)
    return BraidWord(b.strands + 1, b.letters + (s * b.strands,))


# --------------------------------------------------------------------------
# fronts

class Event(NamedTuple):
    kind: str  # "L", "R" or "X"
    pos: int


def L(pos: int) -> Event:
    return Event("L", pos)


def R(pos: int) -> Event:
    return Event("R", pos)


def X(pos: int) -> Event:
    return Event("X", pos)


@dataclass(frozen=True)
class FrontWord:
    events: tuple = ()

    def __post_init__(self):
        evs = []
        for e in self.events:
            kind, pos = (e if isinstance(e, tuple) else (e["kind"], e["pos"]))
            evs.append(Event(str(kind), int(pos)))
        object.__setattr__(self, "events", tuple(evs))

    @property
    def cusps(self) -> int:
        return sum(1 for e in self.events if e.kind in "LR")

    def strand_counts(self) -> list:
        """Strand count in each gap; gap ``c`` lies just before event ``c``."""
        k = 0
        counts = [0]
        for e in self.events:
            k += {"L": 2, "R": -2, "X": 0}.get(e.kind, 0)
            counts.append(k)
        return counts

    def __str__(self):
        return " ".join(f"{e.kind}{e.pos}" for e in self.events) or "(empty front)"


@dataclass(frozen=True)
class OrientedFront:
    front: FrontWord
    # directions[c][s] is +1 if the strand in gap c, slot s points right
    directions: tuple
    # one entry per event: "up"/"down" for cusps, +1/-1 for crossings
    labels: tuple

    @property
    def up(self) -> int:
        return sum(1 for x in self.labels if x == "up")

    @property
    def down(self) -> int:
        return sum(1 for x in self.labels if x == "down")

    @property
    def crossing_signs(self) -> tuple:
        return tuple(x for x in self.labels if x in (1, -1))

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs)


def _front_graph(f: FrontWord):
    """Segments ``(gap, slot)`` with same/opposite direction constraints.

    Returns (counts, edges, problems). An edge ``(a, b, rel)`` links two
    segments; ``rel`` is +1 when they share an x-direction, -1 through a cusp.
    """
    problems = []
    counts = [0]
    edges = []
    k = 0
    for c, e in enumerate(f.events):
        if e.kind not in ("L", "R", "X"):
            problems.append(f"event {c}: unknown kind {e.kind!r}")
            return counts, edges, problems
        hi = k if e.kind == "L" else k - 2
        if not 0 <= e.pos <= hi:
            problems.append(
                f"event {c} = {e.kind}{e.pos}: position outside [0, {hi}] "
                f"with {k} strands")
            return counts, edges, problems
        p = e.pos
        if e.kind == "L":
            for s in range(k):
                t = s if s < p else s + 2
                edges.append(((c, s), (c + 1, t), 1))
            edges.append(((c + 1, p), (c + 1, p + 1), -1))
            k += 2
        elif e.kind == "R":
            edges.append(((c, p), (c, p + 1), -1))
            for s in range(k):
                if s in (p, p + 1):
                    continue
                t = s if s < p else s - 2
                edges.append(((c, s), (c + 1, t), 1))
            k -= 2
        else:
            for s in range(k):
                t = {p: p + 1, p + 1: p}.get(s, s)
                edges.append(((c, s), (c + 1, t), 1))
        counts.append(k)
    if k != 0:
        problems.append(f"strand count ends at {k}, expected 0")
    if not f.events:
        problems.append("empty front has no component")
    return counts, edges, problems


def _propagate(counts, edges):
    """Two-colour segments by x-direction; returns (colour, n_components)."""
    adj = {}
    for a, b, rel in edges:
        adj.setdefault(a, []).append((b, rel))
        adj.setdefault(b, []).append((a, rel))
    colour = {}
    ncomp = 0
    for c, k in enumerate(counts):
        for s in range(k):
            if (c, s) in colour:
                continue
            ncomp += 1
            colour[(c, s)] = 1
            queue = deque([(c, s)])
            while queue:
                u = queue.popleft()
                for v, rel in adj.get(u, ()):
                    want = colour[u] * rel
                    if v not in colour:
                        colour[v] = want
                        queue.append(v)
                    elif colour[v] != want:
                        raise InvalidFront("inconsistent orientation")  # pragma: no cover
    return colour, ncomp


def validate_front(f: FrontWord) -> ValidationReport:
    counts, edges, problems = _front_graph(f)
    if problems:
        return ValidationReport(False, problems)
    _, ncomp = _propagate(counts, edges)
    return ValidationReport(True, [], ncomp)


def orient_front(f: FrontWord, reverse: bool = False) -> OrientedFront:
    counts, edges, problems = _front_graph(f)
    if problems:
        raise InvalidFront("; ".join(problems))
    colour, ncomp = _propagate(counts, edges)
    if ncomp != 1:
        raise MultiComponent(f"front has {ncomp} components, expected a knot")
    # the BFS seeds gap 1, slot 0 (upper branch of the first left cusp) at +1
    flip = -1 if reverse else 1
    directions = tuple(
        tuple(flip * colour[(c, s)] for s in range(k)) for c, k in enumerate(counts))
    labels = []
    for c, e in enumerate(f.events):
        if e.kind == "L":
            labels.append("up" if directions[c + 1][e.pos] > 0 else "down")
        elif e.kind == "R":
            labels.append("down" if directions[c][e.pos] > 0 else "up")
        else:
            d = directions[c]
            labels.append(1 if d[e.pos] == d[e.pos + 1] else -1)
    return OrientedFront(f, directions, tuple(labels))


def tb_of_front(f: FrontWord) -> int:
    o = orient_front(f)
    return o.writhe - f.cusps // 2


def rot_of_front(f: FrontWord, reverse: bool = False) -> int:
    o = orient_front(f, reverse=reverse)
    return (o.down - o.up) // 2


def legendrian_stabilize(f: FrontWord, sign: Sign, at: Optional[tuple] = None) -> FrontWord:
    """Insert a zigzag; ``sign`` is the resulting change of rot.

    ``at = (gap, slot)`` picks the strand; the default is the upper branch of
    the first left cusp. On a rightward strand a downward zigzag adds two
    down cusps, on a leftward strand two up cusps.
    """
    s = parse_sign(sign)
    o = orient_front(f)
    gap, slot = (1, 0) if at is None else at
    if not (1 <= gap < len(o.directions) and 0 <= slot < len(o.directions[gap])):
        raise InvalidFront(f"no strand at gap {gap}, slot {slot}")
    downward = s * o.directions[gap][slot] > 0
    zig = (L(slot + 1), R(slot)) if downward else (L(slot), R(slot + 1))
    ev = f.events
    return FrontWord(ev[:gap] + zig + ev[gap:])


def transverse_pushoff(tb: int, rot: int, sign: Sign) -> int:
    """Self-linking number of the positive (``+``) or negative pushoff."""
    return tb - rot if parse_sign(sign) > 0 else tb + rot


def bennequin_check(sl: int, genus: int) -> bool:
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return sl <= 2 * genus - 1


def invariants(obj: Union[BraidWord, FrontWord]) -> ClassicalInvariants:
    if isinstance(obj, BraidWord):
        return ClassicalInvariants(components=1, sl=sl_of_braid(obj))
    o = orient_front(obj)
    return ClassicalInvariants(
        components=1, tb=o.writhe - obj.cusps // 2, rot=(o.down - o.up) // 2)


def iterate(step, obj, count: int) -> list:
    """``[obj, step(obj), step(step(obj)), ...]`` with ``count + 1`` entries."""
    out = [obj]
    for _ in range(count):
        out.append(step(out[-1]))
    return out
