"""Self-linking classes of del Pino-Vogel tori and Thurston-Bennequin classes
of product Legendrian tori, and the divisibility test that tells them apart.

A del Pino-Vogel torus is ``C x K`` for a transverse curve ``C`` (the core)
and a transverse knot ``K`` in the ``(x, y, w)`` slice of a standard
neighbourhood (the profile). Its W-pushoff is ``C x K'`` with ``K'`` the
w-pushoff of the profile, so the class only depends on ``sl(K)``. Cores are
kept as labels: smoothly isotopic transverse curves are transversely
isotopic, so nothing geometric about them enters.

Product Legendrian tori ``S^1 x K`` live in ``S^1 x N``; the ambient ``N``
enters only through its homology.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import NamedTuple, Optional, Union

from .errors import BasisMismatch, HypothesisViolated, NotClosed3Manifold, ShapeMismatch
from .homology import Z, FgAbGroup, GradedGroup, divisibility, IntMatrix
from .knots import (BraidWord, FrontWord, Sign, legendrian_stabilize,
                    markov_stabilize, orient_front, sl_of_braid, tb_of_front,
                    _require_braid_knot)

ALPHA_BETA = ("alpha", "beta")
S1_MU = ("S1 x mu_K",)

DISTINCT = "Distinct"
INCONCLUSIVE = "Inconclusive"

S3 = GradedGroup.of(1, 0, 0, 1)


@dataclass(frozen=True)
class TransverseTorusModel:
    core: str
    profile: BraidWord
    # smooth isotopy class: every stabilization keeps the base profile's knot type
    base_profile: Optional[BraidWord] = None
    stabilizations: int = 0
    ambient: str = "S^1 x D^3_R"
    nullhomologous: bool = True

    def __post_init__(self):
        if self.base_profile is None:
            object.__setattr__(self, "base_profile", self.profile)

    @property
    def smooth_class(self) -> tuple:
        return ("transverse", self.core, self.base_profile)


@dataclass(frozen=True)
class LegendrianTorusModel:
    profile: FrontWord
    ambient_N: GradedGroup = S3
    nullhomologous: bool = True
    base_profile: Optional[FrontWord] = None
    stabilizations: int = 0

    def __post_init__(self):
        if self.base_profile is None:
            object.__setattr__(self, "base_profile", self.profile)

    @property
    def smooth_class(self) -> tuple:
        return ("legendrian", self.ambient_N, self.base_profile)


@dataclass(frozen=True)
class HomClass:
    basis: tuple
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != len(self.basis):
            raise ShapeMismatch(
                f"{len(self.coords)} coordinates for a basis of size {len(self.basis)}")

    @property
    def divisibility(self) -> int:
        return divisibility(self.coords, FgAbGroup(len(self.basis)))

    def change_basis(self, P: IntMatrix) -> "HomClass":
        """Coordinates after the change of basis with matrix ``P``."""
        return HomClass(self.basis, P.apply(self.coords))

    def __str__(self):
        terms = [f"{c}*{b}" for c, b in zip(self.coords, self.basis)]
        return " + ".join(terms)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    certificate: Optional[tuple] = None

    def __post_init__(self):
        if self.outcome == DISTINCT:
            if self.certificate is None or self.certificate[0] == self.certificate[1]:
                raise ValueError("a Distinct verdict needs unequal divisibilities")

    @property
    def distinct(self) -> bool:
        return self.outcome == DISTINCT


class ComplementH2(NamedTuple):
    group: FgAbGroup
    basis: tuple
    # summands before canonicalization, for display
    summands: tuple = ()


# --------------------------------------------------------------------------
# transverse tori

def build_dpv_torus(core: str, profile: BraidWord) -> TransverseTorusModel:
    _require_braid_knot(profile)
    return TransverseTorusModel(core=core, profile=profile)


def self_linking_class(T: TransverseTorusModel) -> HomClass:
    """``sl(T) = sl(K) * alpha`` with ``K`` the profile."""
    return HomClass(ALPHA_BETA, (sl_of_braid(T.profile), 0))


def stabilize_torus(T: TransverseTorusModel, n: int = 1) -> TransverseTorusModel:
    if n < 0:
        raise ValueError("stabilization count must be nonnegative")
    profile = T.profile
    for _ in range(n):
        profile = markov_stabilize(profile, "-")
    return replace(T, profile=profile, stabilizations=T.stabilizations + n)


def complement_h2_transverse(H3_is_zero: bool = True,
                             torus_nullhomologous: bool = True) -> ComplementH2:
    """The rank-2 group spanned by the meridian tori alpha and beta.

    Only available when ``H_3(M) = 0`` and the torus is nullhomologous.
    """
    if not H3_is_zero:
        raise HypothesisViolated("meridian classes need H_3(M) = 0")
    if not torus_nullhomologous:
        raise HypothesisViolated("meridian classes need a nullhomologous torus")
    return ComplementH2(FgAbGroup(2), ALPHA_BETA, (Z, Z))


# --------------------------------------------------------------------------
# Legendrian tori

def check_closed_3manifold(N: GradedGroup) -> None:
    problems = []
    if N.top > 3:
        problems.append(f"homology in degree {N.top} > 3")
    if N[0] != Z:
        problems.append(f"H_0 = {N[0]}, expected Z")
    if N[3] != Z:
        problems.append(f"H_3 = {N[3]}, expected Z (closed, oriented)")
    if not N[2].is_free:
        problems.append(f"H_2 = {N[2]} has torsion")
    elif N[2].free_rank != N[1].free_rank:
        problems.append("rank H_2 != rank H_1, violating Poincare duality")
    if problems:
        raise NotClosed3Manifold("; ".join(problems))


def complement_h2_product(N: GradedGroup) -> ComplementH2:
    """``H_2(S^1 x N - S^1 x K) = H_1(N) + H_2(N) + Z``; the last Z is
    generated by ``S^1 x mu_K``."""
    check_closed_3manifold(N)
    return ComplementH2(N[1] + N[2] + Z, S1_MU, (N[1], N[2], Z))


def build_legendrian_torus(profile: FrontWord, N: GradedGroup = S3,
                           nullhomologous: bool = True) -> LegendrianTorusModel:
    orient_front(profile)
    check_closed_3manifold(N)
    return LegendrianTorusModel(profile=profile, ambient_N=N, nullhomologous=nullhomologous)


def stabilize_legendrian_torus(L: LegendrianTorusModel, n: int = 1,
                               sign: Sign = "+") -> LegendrianTorusModel:
    if n < 0:
        raise ValueError("stabilization count must be nonnegative")
    profile = L.profile
    for _ in range(n):
        profile = legendrian_stabilize(profile, sign)
    return replace(L, profile=profile, stabilizations=L.stabilizations + n)


def tb_class(L: LegendrianTorusModel) -> HomClass:
    """``tb(L) = tb(K) * (S^1 x mu_K)``; needs ``K`` nullhomologous in ``N``."""
    if not L.nullhomologous:
        raise HypothesisViolated("the Thurston-Bennequin class needs a nullhomologous profile")
    complement_h2_product(L.ambient_N)
    return HomClass(S1_MU, (tb_of_front(L.profile),))


# --------------------------------------------------------------------------
# distinguishing

def distinguish(c1: HomClass, c2: HomClass) -> Verdict:
    """Distinct when divisibilities differ. Equal divisibility proves nothing."""
    if c1.basis != c2.basis:
        raise BasisMismatch(f"classes in bases {c1.basis} and {c2.basis}")
    d1, d2 = c1.divisibility, c2.divisibility
    if d1 != d2:
        return Verdict(DISTINCT, (d1, d2))
    return Verdict(INCONCLUSIVE, (d1, d2))


@dataclass
class FamilyReport:
    kind: str
    members: list
    classes: list
    divisibilities: list
    verdicts: dict = field(default_factory=dict)
    smoothly_isotopic: bool = True
    # profile invariant of member n: as computed, and as sl(K_0) - n / tb(K_0) - n
    implemented_ladder: list = field(default_factory=list)
    unit_step_ladder: list = field(default_factory=list)
    unit_step_distinct: bool = True

    @property
    def all_distinct(self) -> bool:
        return all(v.distinct for v in self.verdicts.values())

    @property
    def n_pairs(self) -> int:
        return len(self.verdicts)


def theorem_family(kind: str, base: Union[BraidWord, FrontWord], count: int,
                   core: str = "C", N: GradedGroup = S3, sign: Sign = "+") -> FamilyReport:
    """Stabilize ``count`` times, compute every class, compare all pairs."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if kind == "transverse":
        T0 = build_dpv_torus(core, base)
        members = [stabilize_torus(T0, n) for n in range(count + 1)]
        classes = [self_linking_class(T) for T in members]
        ladder = [c.coords[0] for c in classes]
    elif kind == "legendrian":
        L0 = build_legendrian_torus(base, N)
        members = [L0]
        for _ in range(count):
            members.append(stabilize_legendrian_torus(members[-1], 1, sign))
        classes = [tb_class(L) for L in members]
        ladder = [c.coords[0] for c in classes]
    else:
        raise ValueError(f"kind must be 'transverse' or 'legendrian', got {kind!r}")
    unit = [ladder[0] - n for n in range(count + 1)]
    verdicts = {(i, j): distinguish(classes[i], classes[j])
                for i, j in combinations(range(count + 1), 2)}
    unit_divs = [abs(x) for x in unit]
    return FamilyReport(
        kind=kind,
        members=members,
        classes=classes,
        divisibilities=[c.divisibility for c in classes],
        verdicts=verdicts,
        smoothly_isotopic=len({m.smooth_class for m in members}) == 1,
        implemented_ladder=ladder,
        unit_step_ladder=unit,
        unit_step_distinct=len(set(unit_divs)) == len(unit_divs),
    )
