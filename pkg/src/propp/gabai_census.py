"""Double and triple twists (Gabai-disk evidence) on minimal spanning surfaces.

Two surface families are handled: the band surface of a minimal 3-braid
representative, and the Seifert-algorithm surface of a homogeneous braid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Union

from .band_calculus import DeltaForm, GenusReport, decode_code, delta_form
from .braid_core import BAND_GENERATORS, STANDARD, BraidWord, component_count

DOUBLE = "double"
TRIPLE = "triple"
BAND_SURFACE = "band-B3"
SEIFERT_SURFACE = "seifert-homogeneous"

Generator = Union[int, str]


class MinimalityNotCertified(ValueError):
    pass


class NotHomogeneousError(ValueError):
    pass


class TrivialClosureError(ValueError):
    pass


@dataclass(frozen=True)
class TwistEvidence:
    kind: str
    sign: int
    generator: Generator
    positions: tuple[int, ...]

    def __post_init__(self):
        need = 2 if self.kind == DOUBLE else 3
        if len(self.positions) < need:
            raise ValueError(f"{self.kind} twist needs {need} witness positions")
        if list(self.positions) != sorted(set(self.positions)):
            raise ValueError("witness positions must be strictly increasing")

    @property
    def disks(self) -> int:
        return 1 if self.kind == DOUBLE else 2


@dataclass(frozen=True)
class TwistCensus:
    evidence: tuple[TwistEvidence, ...]
    surface_kind: str
    # disks the surface is known to admit, counted the way the source rule counts them
    gabai_disks: int
    # positions that come from a delta power rather than parallel bands
    delta_positions: frozenset[int] = field(default=frozenset(), repr=False)

    def _count(self, kind: str, sign: int) -> int:
        return sum(1 for e in self.evidence if e.kind == kind and e.sign == sign)

    @property
    def pos_double(self) -> int:
        return self._count(DOUBLE, 1)

    @property
    def neg_double(self) -> int:
        return self._count(DOUBLE, -1)

    @property
    def pos_triple(self) -> int:
        return self._count(TRIPLE, 1)

    @property
    def neg_triple(self) -> int:
        return self._count(TRIPLE, -1)

    def _disjoint_doubles(self, sign: int) -> bool:
        doubles = [e for e in self.evidence
                   if e.kind == DOUBLE and e.sign == sign and e.generator != "delta"]
        return any(not set(a.positions) & set(b.positions) for a, b in combinations(doubles, 2))

    @property
    def disjoint_pos_double_pairs(self) -> bool:
        return self._disjoint_doubles(1)

    @property
    def disjoint_neg_double_pairs(self) -> bool:
        return self._disjoint_doubles(-1)

    @property
    def disjoint_disk_pair(self) -> bool:
        """Two pieces of evidence, any sign, with no shared witness letter."""
        return any(not set(a.positions) & set(b.positions)
                   for a, b in combinations(self.evidence, 2))

    def mirrored(self) -> "TwistCensus":
        return TwistCensus(
            tuple(TwistEvidence(e.kind, -e.sign, e.generator, e.positions) for e in self.evidence),
            self.surface_kind,
            self.gabai_disks,
            self.delta_positions,
        )

    def as_dict(self) -> dict:
        return {
            "surface_kind": self.surface_kind,
            "gabai_disks": self.gabai_disks,
            "pos_double": self.pos_double,
            "neg_double": self.neg_double,
            "pos_triple": self.pos_triple,
            "neg_triple": self.neg_triple,
            "disjoint_pos_double_pairs": self.disjoint_pos_double_pairs,
            "disjoint_neg_double_pairs": self.disjoint_neg_double_pairs,
            "evidence": [
                {"kind": e.kind, "sign": e.sign, "generator": _gen_name(e.generator),
                 "positions": list(e.positions)}
                for e in self.evidence
            ],
        }


def _gen_name(g: Generator) -> str:
    return g if isinstance(g, str) else str(g)


def _band_rule(positions: list[int], sign: int, generator: int) -> tuple[list[TwistEvidence], int]:
    """Exponent-sum thresholds: 2 gives one double twist, 3 a triple twist,
    4 or more a second, disjoint, double twist."""
    s = len(positions)
    out = []
    if s >= 2:
        out.append(TwistEvidence(DOUBLE, sign, generator, tuple(positions[:2])))
    if s >= 3:
        out.append(TwistEvidence(TRIPLE, sign, generator, tuple(positions[:3])))
    if s >= 4:
        out.append(TwistEvidence(DOUBLE, sign, generator, tuple(positions[2:4])))
    disks = 0 if s < 2 else 1 if s == 2 else 2
    return out, disks


def _band_census(k: int, word: BraidWord, offset: int) -> TwistCensus:
    evidence: list[TwistEvidence] = []
    disks = 0
    delta_pos: frozenset[int] = frozenset()
    if abs(k) >= 2:
        sign = 1 if k > 0 else -1
        for d in range(2):
            evidence.append(TwistEvidence(DOUBLE, sign, "delta", (2 * d, 2 * d + 1)))
        delta_pos = frozenset(range(offset))
        disks += 2
    for sign in (1, -1):
        for g in BAND_GENERATORS:
            pos = [offset + i for i, x in enumerate(word.letters) if x == (g, sign)]
            ev, d = _band_rule(pos, sign, g)
            evidence.extend(ev)
            disks += d
    return TwistCensus(tuple(evidence), BAND_SURFACE, disks, delta_pos)


def census_3braid(df: DeltaForm, minimal: bool) -> TwistCensus:
    """Twist census of ``delta^k P N`` read on the band surface.

    Positions refer to ``df.word()``.  A generator occurring at least twice
    in P gives a positive double twist, three times a triple twist; N is
    read the same way with negative signs.  ``|k| >= 2`` gives two double
    twists of sign k; a single delta gives nothing.
    """
    if not minimal:
        raise MinimalityNotCertified("census needs a certified minimal conjugacy representative")
    return _band_census(df.k, df.P * df.N, 2 * abs(df.k))


def _score(c: TwistCensus) -> tuple:
    return (c.gabai_disks, c.disjoint_disk_pair, len(c.evidence))


def best_band_census(report: GenusReport) -> tuple[TwistCensus, BraidWord]:
    """Best census over every minimal representative in the class.

    Each rotation of each representative is read twice: letter by letter
    (positive letters play the role of P, negative ones of N) and after
    pulling delta powers to the front.
    """
    if not report.class_codes:
        return TwistCensus((), BAND_SURFACE, 0), report.witness
    return _best_for_class(report.minimal_length, report.class_codes)


@lru_cache(maxsize=50_000)
def _best_for_class(length: int, codes: tuple[int, ...]) -> tuple[TwistCensus, BraidWord]:
    best = None
    for rep in (decode_code(c, length) for c in codes):
        for r in range(max(len(rep), 1)):
            word = rep.rotate(r)
            readings = [(_band_census(0, word, 0), word)]
            df = delta_form(word)
            if df.length == len(word):
                readings.append((census_3braid(df, minimal=True), df.word()))
            for c, w in readings:
                key = _score(c) + (tuple(-x for x in _order_key(w)),)
                if best is None or key > best[0]:
                    best = (key, c, w)
    return best[1], best[2]


def _order_key(w: BraidWord) -> tuple[int, ...]:
    order = {12: 0, 23: 1, 13: 2}
    return tuple(order.get(g, g) + (0 if s > 0 else 3) for g, s in w.letters)


def is_homogeneous(w: BraidWord) -> dict[int, int] | None:
    """Sign of each generator that occurs, or None if some generator occurs
    with both signs."""
    signs: dict[int, int] = {}
    for g, s in w.letters:
        if signs.setdefault(g, s) != s:
            return None
    return signs


def census_homogeneous(w: BraidWord) -> TwistCensus:
    """Census on the Seifert-algorithm surface of a homogeneous knot braid.

    Consecutive occurrences of the same generator (other generators in
    between are ignored) cobound a Gabai disk; three occurrences give a
    triple twist.
    """
    if w.alphabet != STANDARD:
        raise ValueError("census_homogeneous needs a standard word")
    signs = is_homogeneous(w)
    if signs is None:
        raise NotHomogeneousError(f"{w} is not homogeneous")
    if component_count(w) != 1:
        raise ValueError("closure is not a knot")
    if len(w) <= w.strands - 1:
        raise TrivialClosureError("closure is the unknot")
    evidence: list[TwistEvidence] = []
    disks = 0
    for g in sorted(signs):
        pos = w.positions(g)
        s = signs[g]
        for a, b in zip(pos, pos[1:]):
            evidence.append(TwistEvidence(DOUBLE, s, g, (a, b)))
        if len(pos) >= 3:
            evidence.append(TwistEvidence(TRIPLE, s, g, tuple(pos[:3])))
        disks += max(len(pos) - 1, 0)
    return TwistCensus(tuple(evidence), SEIFERT_SURFACE, disks)
