"""Finite and randomized re-checks of the computable claims about 3-braids,
Scharlemann-Thompson triples and twist families.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .band_calculus import (
    SearchBudget,
    canonical_code,
    conjugacy_min,
    decode_code,
    delta_form,
)
from .braid_core import BraidWord, band_to_standard, component_count, cyclic_reduce, format_word, parse_word
from .gabai_census import best_band_census, census_3braid
from .invariants import (
    InconsistentFitError,
    TwistFamily,
    alexander,
    burau_reduced,
    casson_v2,
    fit_quadratic,
    linking_number,
    twist_member,
)
from .surgery_certifier import FIVE_TWO_ALEXANDER, TREFOIL_ALEXANDER

TREFOIL = "trefoil"
FIVE_TWO = "five-two"
OTHER_KNOT = "other-knot"
LINK = "link"

# Non-empty P up to conjugation; N runs over the mirror images.
SEVEN_P = (
    "a12", "a12^2", "a12 a23", "a12^2 a23", "a12 a23 a13", "a12^2 a23 a13", "a12 a23 a13 a12",
)

# Word identities from the hand case analysis; each pair must be one braid.
IDENTITIES = (
    ("a12^2 a23 a13^-1", "a12^2 a13^-1 a12"),
    ("a12^2 a13^-1 a23^-1", "a12 a23^-1 a12 a23^-1"),
    ("a12^2 a23 a13 a23^-1 a12^-1", "a12^2 a23 a12^-1 a13 a12^-1"),
    ("a12^2 a23 a13 a12^-1 a13^-1", "a12^2 a23 a12^-1 a23 a13^-1"),
    ("a12 a23 a13 a12 a13^-1 a23^-1", "a12 a23 a13 a23^-1 a12 a23^-1"),
    # the right side ends in a23^-1: with a23 the exponent sums would differ
    ("a12^2 a23 a12^-1 a13^-1 a23^-1", "a12^2 a13^-1 a23 a13^-1 a23^-1"),
    ("a12 a23 a13 a12^-1 a13^-1 a23^-1", "a12 a13^-1 a23^2 a13^-1 a23^-1"),
    ("a12 a23 a13 a23^-1 a12^-1 a13^-1", "a12 a23 a12^-2 a23 a13^-1"),
)

THREE_COMPONENT_LINKS = (
    "a12 a23 a13 a23^-1",
    "a12 a23 a12^-1 a13^-1",
    "a12 a23 a13^-1 a23^-1",
)

# Words named individually in the hand analysis; rows mark them as listed.
LISTED_WORDS = frozenset(
    [w for pair in IDENTITIES for w in pair] + list(THREE_COMPONENT_LINKS) + ["a12^2 a23 a13"]
)


def _band(text: str) -> BraidWord:
    return parse_word(text, 3)


# -- case enumeration --------------------------------------------------------

@dataclass(frozen=True)
class CaseRow:
    word: BraidWord
    k: int
    p_length: int
    n_length: int
    components: int
    min_length: int
    gabai_count: int
    identification: str
    # disks read off this exact word, before searching its class
    direct_count: int = 0
    witness: BraidWord | None = None
    listed: bool = False
    # equal-length P and N with a squared generator in N
    square_filtered: bool = False

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    def as_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "k": self.k,
            "p_length": self.p_length,
            "n_length": self.n_length,
            "components": self.components,
            "min_length": self.min_length,
            "gabai_count": self.gabai_count,
            "direct_count": self.direct_count,
            "identification": self.identification,
            "witness": format_word(self.witness) if self.witness is not None else None,
            "listed": self.listed,
            "square_filtered": self.square_filtered,
        }


def _delta_free_words(sign: int, max_len: int) -> list[BraidWord]:
    """Every word of one sign with no delta (or delta^-1) spelling, by length."""
    gens = (12, 23, 13)
    spell = {(23, 12), (13, 23), (12, 13)}
    out = [BraidWord.band()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g in gens:
                if w:
                    pair = (w[-1], g) if sign > 0 else (g, w[-1])
                    if pair in spell:
                        continue
                nxt.append(w + (g,))
        frontier = nxt
        out.extend(BraidWord.band((g, sign) for g in w) for w in frontier)
    return out


def _has_square(w: BraidWord) -> bool:
    return any(a == b for a, b in zip(w.letters, w.letters[1:]))


def identify(w: BraidWord, min_length: int, components: int) -> str:
    if components > 1:
        return LINK
    if min_length == 4:
        delta = alexander(w)
        if delta == TREFOIL_ALEXANDER:
            return TREFOIL
        if delta == FIVE_TWO_ALEXANDER:
            return FIVE_TWO
    return OTHER_KNOT


def case_row(w: BraidWord, budget: SearchBudget | None = None, *, k: int = 0,
             p_length: int = 0, n_length: int = 0, square_filtered: bool = False) -> CaseRow | None:
    """Row for a minimal word of length >= 4, else None."""
    if len(w) < 4:
        return None
    g = conjugacy_min(w, budget)
    if g.minimal_length != len(w):
        return None
    census, witness = best_band_census(g)
    df = delta_form(w)
    direct = census_3braid(df, minimal=True).gabai_disks if df.length == len(w) else 0
    return CaseRow(
        word=w,
        k=k,
        p_length=p_length,
        n_length=n_length,
        components=g.components,
        min_length=g.minimal_length,
        gabai_count=census.gabai_disks,
        identification=identify(w, g.minimal_length, g.components),
        direct_count=direct,
        witness=witness,
        listed=format_word(w) in LISTED_WORDS,
        square_filtered=square_filtered,
    )


def _candidates(max_p: int, max_n: int) -> Iterable[tuple[int, BraidWord, BraidWord]]:
    seven = [_band(s) for s in SEVEN_P if len(_band(s)) <= max_p]
    seven_n = [p.mirror() for p in seven if len(p) <= max_n]
    pos = _delta_free_words(1, max_p)
    neg = _delta_free_words(-1, max_n)
    for p in seven:
        for n in neg:
            yield 0, p, n
    for n in seven_n:
        for p in pos:
            yield 0, p, n
    for p in pos:
        yield 1, p, BraidWord.band()
    for n in neg:
        yield -1, BraidWord.band(), n
    # two or more deltas: a couple of short tails are enough to exercise the rule
    for p in pos:
        if len(p) <= 2:
            yield 2, p, BraidWord.band()
    for n in neg:
        if len(n) <= 2:
            yield -2, BraidWord.band(), n


def enumerate_cases(max_p: int = 4, max_n: int = 4, budget: SearchBudget | None = None) -> list[CaseRow]:
    """Rows for every minimal ``delta^k P N`` candidate, in canonical order.

    Links are kept.  Rows that the equal-length/no-square reduction would
    discard are kept too and marked, so both readings can be checked.
    """
    delta = BraidWord.band([(23, 1), (12, 1)])
    seen: dict[str, CaseRow] = {}
    for k, p, n in _candidates(max_p, max_n):
        w = delta ** k * p * n
        key = format_word(w)
        if key in seen:
            continue
        filtered = k == 0 and len(p) == len(n) and _has_square(n)
        row = case_row(w, budget, k=k, p_length=len(p), n_length=len(n), square_filtered=filtered)
        if row is not None:
            seen[key] = row
    return sorted(seen.values(), key=lambda r: (len(r.word), r.k, canonical_code(r.word), format_word(r.word)))


def brute_force_cases(max_length: int = 6, budget: SearchBudget | None = None) -> list[CaseRow]:
    """Rows for one representative of every cyclically reduced word class
    (rotation and delta relabeling) of even length 4..max_length, with no
    symmetry reductions from the hand analysis."""
    rows = []
    for n in range(4, max_length + 1, 2):
        for code in kernels.canonical_reduced_codes(n):
            row = case_row(decode_code(int(code), n), budget)
            if row is not None:
                rows.append(row)
    return rows


@dataclass
class Theorem4Verdict:
    holds: bool
    exceptions: list[str]
    failing_rows: list[CaseRow] = field(default_factory=list)
    knot_rows: int = 0
    link_rows: int = 0
    # exception sets with and without rows the no-square reduction drops
    filter_discrepancy: bool = False

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "exceptions": self.exceptions,
            "failing_rows": [r.as_dict() for r in self.failing_rows],
            "knot_rows": self.knot_rows,
            "link_rows": self.link_rows,
            "filter_discrepancy": self.filter_discrepancy,
        }


def _exceptions(rows: Sequence[CaseRow]) -> tuple[set[str], list[CaseRow]]:
    exc: set[str] = set()
    failing = []
    for r in rows:
        if not r.is_knot:
            continue
        if r.identification == TREFOIL:
            exc.add(TREFOIL)
        if r.gabai_count < 2:
            exc.add(r.identification)
            if r.identification not in (TREFOIL, FIVE_TWO):
                failing.append(r)
    return exc, failing


def verify_theorem4(rows: Sequence[CaseRow]) -> Theorem4Verdict:
    """Every knot row without two disks must be the trefoil or 5_2.

    The trefoil is listed as an exception whenever it appears, since the
    statement excludes it outright.
    """
    exc, failing = _exceptions(rows)
    exc_kept, _ = _exceptions([r for r in rows if not r.square_filtered])
    return Theorem4Verdict(
        holds=not failing,
        exceptions=sorted(exc),
        failing_rows=failing,
        knot_rows=sum(r.is_knot for r in rows),
        link_rows=sum(not r.is_knot for r in rows),
        filter_discrepancy=exc != exc_kept,
    )


@dataclass(frozen=True)
class IdentityCheck:
    left: str
    right: str
    same_element: bool
    same_class: bool
    left_components: int

    @property
    def holds(self) -> bool:
        return self.same_element and self.same_class


def class_signature(w: BraidWord, budget: SearchBudget | None = None) -> tuple[int, int]:
    """``(minimal length, least canonical code)``; equal exactly for conjugate words."""
    g = conjugacy_min(w, budget)
    return g.minimal_length, min(g.class_codes)


def check_identity(left: str, right: str, budget: SearchBudget | None = None) -> IdentityCheck:
    a, b = _band(left), _band(right)
    return IdentityCheck(
        left,
        right,
        same_element=burau_reduced(band_to_standard(a)) == burau_reduced(band_to_standard(b)),
        same_class=class_signature(a, budget) == class_signature(b, budget),
        left_components=component_count(a),
    )


def check_identities(budget: SearchBudget | None = None) -> list[IdentityCheck]:
    return [check_identity(a, b, budget) for a, b in IDENTITIES]


# -- Scharlemann-Thompson triples --------------------------------------------

@dataclass(frozen=True)
class STTriple:
    word: BraidWord
    position: int
    chi_plus: int
    chi_minus: int
    chi_zero: int

    @property
    def values(self) -> tuple[int, int, int]:
        """``(-chi(L+), -chi(L-), -chi(L0) + 1)``."""
        return self.chi_plus, self.chi_minus, self.chi_zero + 1

    @property
    def holds(self) -> bool:
        v = sorted(self.values)
        return v[1] == v[2]


def _neg_euler(w: BraidWord, budget: SearchBudget | None) -> int:
    return conjugacy_min(w, budget).neg_euler


def st_triple_check(w: BraidWord, position: int, budget: SearchBudget | None = None) -> STTriple:
    """Switch (L-) or smooth (L0) the positive letter at ``position``."""
    x = w.letters[position]
    if x.sign != 1:
        raise ValueError(f"letter {position} of {w} is not positive")
    minus = w._with(w.letters[:position] + (x.inverse(),) + w.letters[position + 1:])
    zero = w._with(w.letters[:position] + w.letters[position + 1:])
    return STTriple(w, position, _neg_euler(w, budget), _neg_euler(minus, budget), _neg_euler(zero, budget))


def minimal_band_words(max_length: int, budget: SearchBudget | None = None) -> list[BraidWord]:
    """One minimal word per rotation/relabeling class, lengths 1..max_length."""
    out = []
    for n in range(1, max_length + 1):
        for code in kernels.canonical_reduced_codes(n):
            w = decode_code(int(code), n)
            if conjugacy_min(w, budget).minimal_length == n:
                out.append(w)
    return out


def random_band_word(rng: random.Random, length: int) -> BraidWord:
    return BraidWord.band((rng.choice((12, 23, 13)), rng.choice((1, -1))) for _ in range(length))


@dataclass
class STSummary:
    checked: int
    violations: list[STTriple]

    @property
    def holds(self) -> bool:
        return not self.violations


def st_exhaustive(max_length: int = 6, budget: SearchBudget | None = None) -> STSummary:
    checked, bad = 0, []
    for w in minimal_band_words(max_length, budget):
        for i, x in enumerate(w.letters):
            if x.sign > 0:
                t = st_triple_check(w, i, budget)
                checked += 1
                if not t.holds:
                    bad.append(t)
    return STSummary(checked, bad)


def st_random(samples: int = 500, seed: int = 0, lengths: tuple[int, int] = (4, 10),
              budget: SearchBudget | None = None) -> STSummary:
    """Uniform random words, kept when minimal and holding a positive letter."""
    rng = random.Random(seed)
    checked, bad = 0, []
    while checked < samples:
        w = random_band_word(rng, rng.randint(*lengths))
        if len(cyclic_reduce(w)) != len(w) or conjugacy_min(w, budget).minimal_length != len(w):
            continue
        positive = [i for i, x in enumerate(w.letters) if x.sign > 0]
        if not positive:
            continue
        t = st_triple_check(w, rng.choice(positive), budget)
        checked += 1
        if not t.holds:
            bad.append(t)
    return STSummary(checked, bad)


# -- twist families ------------------------------------------------------------

@dataclass
class Theorem3Verdict:
    family: TwistFamily
    coefficients: tuple[Fraction, Fraction, Fraction] | None
    leading_ok: bool
    closed_form_ok: bool
    holdout_ok: bool
    roots: list[Fraction]
    sampled_zeros: list[int]
    message: str = ""

    @property
    def holds(self) -> bool:
        return self.leading_ok and self.closed_form_ok and self.holdout_ok \
            and len(self.roots) <= 2 and len(self.sampled_zeros) <= 2

    def as_dict(self) -> dict:
        return {
            "template": format_word(self.family.template),
            "strands": self.family.template.strands,
            "position": self.family.position,
            "generator": self.family.generator,
            "coefficients": [str(c) for c in self.coefficients] if self.coefficients else None,
            "leading_ok": self.leading_ok,
            "closed_form_ok": self.closed_form_ok,
            "holdout_ok": self.holdout_ok,
            "rational_roots": [str(r) for r in self.roots],
            "sampled_zeros": self.sampled_zeros,
            "holds": self.holds,
            "message": self.message,
        }


def _rational_roots(a2: Fraction, a1: Fraction, a0: Fraction) -> list[Fraction]:
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return []
    s = Fraction(rn, rd)
    return sorted({(-a1 + s) / (2 * a2), (-a1 - s) / (2 * a2)})


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def verify_theorem3(f: TwistFamily, fit: Sequence[int] = (1, 3, 5),
                    held_out: Sequence[int] = (-5, -3, -1, 7, 9)) -> Theorem3Verdict:
    """Fit v2 over odd n, then check it three ways.

    The leading coefficient must be 1/8.  The fit must agree with the closed
    form ``v2(T_1) + (n - 1)/2 * lk(T_0) + (n^2 - 1)/8``.  Held-out samples
    must land on the fitted curve exactly.
    """
    v = {n: casson_v2(twist_member(f, n)) for n in (*fit, *held_out)}
    try:
        a2, a1, a0 = fit_quadratic([(n, v[n]) for n in fit])
    except InconsistentFitError as exc:
        return Theorem3Verdict(f, None, False, False, False, [], [], str(exc))
    t0 = twist_member(f, 0)
    lk = linking_number(t0) if component_count(t0) == 2 else None
    v1 = casson_v2(twist_member(f, 1))
    closed = lk is not None and all(
        v[n] == v1 + Fraction(n - 1, 2) * lk + Fraction(n * n - 1, 8) for n in v)
    holdout = all(a2 * n * n + a1 * n + a0 == v[n] for n in held_out)
    return Theorem3Verdict(
        family=f,
        coefficients=(a2, a1, a0),
        leading_ok=a2 == Fraction(1, 8),
        closed_form_ok=closed,
        holdout_ok=holdout,
        roots=_rational_roots(a2, a1, a0),
        sampled_zeros=sorted(n for n, x in v.items() if x == 0),
    )


def default_families() -> list[TwistFamily]:
    return [
        TwistFamily(BraidWord.standard(2), 0, 1),
        TwistFamily(parse_word("s2^3", 3), 0, 1),
        TwistFamily(parse_word("s2 s1^-1 s2", 3), 0, 1),
        TwistFamily(parse_word("s2 s1^3 s2", 3), 0, 1),
        TwistFamily(parse_word("s2 s1 s3 s2", 4), 0, 1),
    ]
