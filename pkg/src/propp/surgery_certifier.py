"""Turn twist censuses and invariants into surgery-slope intervals and a
Property P verdict.

Slopes are exact: ``Fraction`` endpoints, with ``math.inf`` standing in for
the symbolic infinities.  Every interval is open.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .band_calculus import SearchBudget, SearchBudgetExceeded, conjugacy_min
from .braid_core import BraidWord, as_band, as_standard, component_count, format_word, free_reduce
from .gabai_census import SEIFERT_SURFACE, TwistCensus, best_band_census, census_homogeneous, is_homogeneous
from .invariants import casson_from_alexander, alexander
from .laurent import LaurentPolynomial

Endpoint = Union[Fraction, float]

TREFOIL_ALEXANDER = LaurentPolynomial({1: 1, 0: -1, -1: 1})
FIVE_TWO_ALEXANDER = LaurentPolynomial({1: 2, 0: -3, -1: 2})

# rule tags -> the statement each one rests on
RULES = {
    "double-twist": "a positive (negative) double twist on a minimal Seifert surface gives taut "
                    "foliations in M(r) for r in (-inf, 1) (resp. (-1, inf))",
    "opposite-double-twists": "positive and negative double twists together give taut foliations "
                              "in M(r) for every r != inf",
    "disjoint-double-twists": "two disjoint positive (negative) double twists give taut foliations "
                              "for r in (-inf, 2) (resp. (-2, inf)); trefoil excluded",
    "triple-twist": "a positive (negative) triple twist on a non-trefoil knot gives taut "
                    "foliations for r in (-inf, 2) (resp. (-2, inf))",
    "two-gabai-disks": "two Gabai disks on a minimal spanning surface of a non-trivial, non-trefoil "
                       "knot give essential laminations in M(r) for r in (-2, 2)",
}

ROUTES = {
    "casson-nonzero": "v2 != 0; the Casson invariant of M(1/n) is n*v2, so no 1/n surgery is a "
                      "homotopy sphere",
    "three-braid-thm4": "closed 3-braid knot other than the trefoil with two Gabai disks on a minimal "
                        "band surface: essential laminations for r in (-2, 2)",
    "homogeneous-thm5": "non-trivial closed homogeneous braid: the Seifert-algorithm surface is "
                        "minimal and carries at least two Gabai disks",
    "twist-lemma": "the certified slope intervals cover both r = 1 and r = -1, the only slopes "
                   "that can give a homotopy sphere",
    "alternating-5_2-fallback": "5_2 is a non-torus alternating knot whose checkerboard surface is "
                                "the Seifert surface; every finite surgery is laminar (Delman-Roberts)",
    "trefoil-special": "the trefoil has Property P (v2 = 1) but +-1 surgery yields the Poincare "
                       "homology sphere, which has finite fundamental group",
    "inconclusive": "no rule applies; nothing is claimed",
}


@dataclass(frozen=True)
class SlopeInterval:
    lo: Endpoint
    hi: Endpoint
    rule: str

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty interval")

    def __contains__(self, r) -> bool:
        return self.lo < r < self.hi

    def mirrored(self) -> "SlopeInterval":
        return SlopeInterval(-self.hi, -self.lo, self.rule)

    def as_dict(self) -> dict:
        return {"lo": slope_str(self.lo), "hi": slope_str(self.hi), "rule": self.rule}


def slope_str(x: Endpoint) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def covers(intervals, r) -> bool:
    return any(r in iv for iv in intervals)


INF = math.inf


def intervals_from_census(c: TwistCensus, is_trefoil: bool) -> list[SlopeInterval]:
    """All rows of the rule table whose precondition the census meets."""
    out = []
    if c.pos_double >= 1:
        out.append(SlopeInterval(-INF, Fraction(1), "double-twist"))
    if c.neg_double >= 1:
        out.append(SlopeInterval(Fraction(-1), INF, "double-twist"))
    if c.pos_double >= 1 and c.neg_double >= 1:
        out.append(SlopeInterval(-INF, INF, "opposite-double-twists"))
    if not is_trefoil:
        if c.disjoint_pos_double_pairs:
            out.append(SlopeInterval(-INF, Fraction(2), "disjoint-double-twists"))
        if c.disjoint_neg_double_pairs:
            out.append(SlopeInterval(Fraction(-2), INF, "disjoint-double-twists"))
        if c.pos_triple >= 1:
            out.append(SlopeInterval(-INF, Fraction(2), "triple-twist"))
        if c.neg_triple >= 1:
            out.append(SlopeInterval(Fraction(-2), INF, "triple-twist"))
        if c.disjoint_disk_pair:
            out.append(SlopeInterval(Fraction(-2), Fraction(2), "two-gabai-disks"))
    return out


def homology_sphere_slopes() -> Callable[[Endpoint], bool]:
    """Predicate for non-trivial slopes whose surgery is a homology sphere: r = 1/n, n != 0."""

    def is_homology_sphere(r) -> bool:
        if r in (INF, -INF):
            return False
        return abs(Fraction(r).numerator) == 1

    return is_homology_sphere


@dataclass(frozen=True)
class CertificateRoute:
    kind: str
    witness: dict = field(default_factory=dict)

    @property
    def cite(self) -> str:
        return ROUTES[self.kind]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "cite": self.cite, "witness": self.witness}


@dataclass
class PropertyPReport:
    input: str
    strands: int
    conclusion: str
    alexander: LaurentPolynomial | None = None
    v2: int | None = None
    minimal_length: int | None = None
    genus: Fraction | None = None
    minimal_rep: BraidWord | None = None
    census: TwistCensus | None = None
    intervals: list[SlopeInterval] = field(default_factory=list)
    routes: list[CertificateRoute] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def route_kinds(self) -> list[str]:
        return [r.kind for r in self.routes]

    def as_dict(self) -> dict:
        genus = None
        if self.genus is not None:
            genus = int(self.genus) if self.genus.denominator == 1 else f"{self.genus.numerator}/{self.genus.denominator}"
        return {
            "input": self.input,
            "strands": self.strands,
            "conclusion": self.conclusion,
            "minimal_length": self.minimal_length,
            "minimal_rep": format_word(self.minimal_rep) if self.minimal_rep is not None else None,
            "genus": genus,
            "alexander": str(self.alexander) if self.alexander is not None else None,
            "v2": self.v2,
            "census": self.census.as_dict() if self.census is not None else None,
            "intervals": [iv.as_dict() for iv in self.intervals],
            "routes": [r.as_dict() for r in self.routes],
            "notes": list(self.notes),
        }


def _homogeneous_candidates(w: BraidWord, class_words: list[BraidWord]):
    yield free_reduce(as_standard(w))
    for rep in class_words:
        if all(g != 13 for g, _ in rep.letters):
            yield as_standard(rep)


def certify(w: BraidWord, budget: SearchBudget | None = None) -> PropertyPReport:
    report = PropertyPReport(format_word(w), w.strands, "inconclusive")
    if component_count(w) != 1:
        report.conclusion = "not-a-knot"
        return report
    delta = alexander(w)
    report.alexander = delta
    report.v2 = casson_from_alexander(delta)

    unknot = False
    trefoil = False
    five_two = False
    census: TwistCensus | None = None
    class_words: list[BraidWord] = []
    if w.strands == 3:
        try:
            g = conjugacy_min(as_band(w), budget)
        except SearchBudgetExceeded as exc:
            report.notes.append(f"3-braid search skipped: {exc}")
        else:
            report.minimal_length = g.minimal_length
            report.genus = g.genus
            class_words = [rep.rotate(r) for rep in g.representatives() for r in range(len(rep))]
            unknot = g.minimal_length == 2
            trefoil = g.minimal_length == 4 and delta == TREFOIL_ALEXANDER
            five_two = g.minimal_length == 4 and delta == FIVE_TWO_ALEXANDER
            if not unknot:
                census, report.minimal_rep = best_band_census(g)

    homogeneous = None
    for cand in _homogeneous_candidates(w, class_words):
        signs = is_homogeneous(cand)
        if signs is not None:
            homogeneous = (cand, signs)
            break
    homogeneous_genus = None
    if homogeneous is not None:
        cand, signs = homogeneous
        homogeneous_genus = (len(cand) - cand.strands + 1) // 2
        if homogeneous_genus == 0:
            unknot = True
        elif homogeneous_genus == 1 and delta == TREFOIL_ALEXANDER:
            trefoil = True

    if unknot:
        report.conclusion = "unknot"
        report.notes.append("trivial knot: Property P concerns non-trivial knots only")
        return report

    if census is None and homogeneous is not None:
        census = census_homogeneous(homogeneous[0])
    report.census = census
    if census is not None:
        report.intervals = intervals_from_census(census, trefoil)

    routes = report.routes
    if report.v2:
        routes.append(CertificateRoute("casson-nonzero", {"v2": report.v2}))
    if report.minimal_length is not None and not trefoil and census is not None \
            and census.surface_kind != SEIFERT_SURFACE and census.gabai_disks >= 2:
        routes.append(CertificateRoute("three-braid-thm4", {
            "minimal_length": report.minimal_length,
            "gabai_disks": census.gabai_disks,
            "witness": format_word(report.minimal_rep),
        }))
    if homogeneous is not None:
        cand, signs = homogeneous
        routes.append(CertificateRoute("homogeneous-thm5", {
            "word": format_word(cand),
            "signs": {f"s{g}": s for g, s in sorted(signs.items())},
            "genus": homogeneous_genus,
        }))
    if covers(report.intervals, 1) and covers(report.intervals, -1):
        used = sorted({iv.rule for iv in report.intervals if 1 in iv or -1 in iv})
        routes.append(CertificateRoute("twist-lemma", {"rules": used}))
    if five_two:
        routes.append(CertificateRoute("alternating-5_2-fallback", {
            "alexander": str(delta), "minimal_length": report.minimal_length}))
    if trefoil:
        routes.append(CertificateRoute("trefoil-special", {
            "v2": report.v2, "finite_pi1_slopes": ["1/1", "-1/1"]}))
        report.conclusion = "trefoil"
        report.notes.append("Property P holds, but +-1 surgery gives the Poincare homology sphere")
    elif routes:
        report.conclusion = "PropertyP-certified"
    else:
        routes.append(CertificateRoute("inconclusive"))
        report.conclusion = "inconclusive"
    return report
