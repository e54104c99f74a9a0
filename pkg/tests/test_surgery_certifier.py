import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, settings, strategies as st

from propp.band_calculus import SearchBudget
from propp.braid_core import BraidWord, as_standard, component_count, parse_word
from propp.gabai_census import DOUBLE, TRIPLE, TwistCensus, TwistEvidence
from propp.surgery_certifier import (
    ROUTES,
    RULES,
    SlopeInterval,
    certify,
    covers,
    homology_sphere_slopes,
    intervals_from_census,
    slope_str,
)

from strategies import band_words

GOLDEN = Path(__file__).parent / "golden"
INF = math.inf


def census(*evidence, disks=None):
    ev = tuple(TwistEvidence(*e) for e in evidence)
    return TwistCensus(ev, "band-B3", disks if disks is not None else len(ev))


def rows(ivs):
    return [(slope_str(i.lo), slope_str(i.hi), i.rule) for i in ivs]


def test_rule_table_single_double():
    c = census((DOUBLE, 1, 12, (0, 1)))
    assert rows(intervals_from_census(c, False)) == [("-inf", "1/1", "double-twist")]
    assert rows(intervals_from_census(c.mirrored(), False)) == [("-1/1", "inf", "double-twist")]


def test_rule_table_both_signs():
    c = census((DOUBLE, 1, 12, (0, 1)), (DOUBLE, -1, 23, (2, 3)))
    got = rows(intervals_from_census(c, False))
    assert ("-inf", "inf", "opposite-double-twists") in got
    assert ("-2/1", "2/1", "two-gabai-disks") in got


def test_rule_table_triple_and_trefoil_guard():
    c = census((DOUBLE, 1, 12, (0, 1)), (TRIPLE, 1, 12, (0, 1, 2)), (DOUBLE, 1, 23, (3, 4)), disks=3)
    got = rows(intervals_from_census(c, False))
    assert ("-inf", "2/1", "triple-twist") in got
    assert ("-inf", "2/1", "disjoint-double-twists") in got
    guarded = rows(intervals_from_census(c, True))
    assert guarded == [("-inf", "1/1", "double-twist")]


def test_delta_doubles_do_not_count_as_parallel():
    c = census((DOUBLE, 1, "delta", (0, 1)), (DOUBLE, 1, "delta", (2, 3)))
    got = rows(intervals_from_census(c, False))
    assert ("-inf", "2/1", "disjoint-double-twists") not in got
    assert ("-2/1", "2/1", "two-gabai-disks") in got


def test_interval_basics():
    iv = SlopeInterval(-INF, Fraction(1), "double-twist")
    assert Fraction(99, 100) in iv and 1 not in iv and -10 ** 9 in iv
    assert iv.mirrored() == SlopeInterval(Fraction(-1), INF, "double-twist")
    with pytest.raises(ValueError):
        SlopeInterval(Fraction(2), Fraction(2), "x")
    assert covers([SlopeInterval(-INF, INF, "opposite-double-twists")], 1)
    assert slope_str(Fraction(-2, 3)) == "-2/3"


def test_homology_sphere_predicate():
    hs = homology_sphere_slopes()
    assert hs(Fraction(1, 1)) and hs(Fraction(-1, 5)) and hs(-1)
    assert not hs(Fraction(2, 3)) and not hs(0) and not hs(INF) and not hs(Fraction(4))


def test_every_tag_has_a_statement():
    for name in ("figure_eight", "five_two", "trefoil"):
        d = json.loads((GOLDEN / f"{name}.json").read_text())
        assert all(i["rule"] in RULES for i in d["intervals"])
        assert all(r["kind"] in ROUTES and r["cite"] == ROUTES[r["kind"]] for r in d["routes"])


@pytest.mark.parametrize("name, word, strands", [
    ("figure_eight", "s1 s2^-1 s1 s2^-1", 3),
    ("five_two", "a12^2 a23 a13", 3),
    ("trefoil", "a23 a12 a23 a12", 3),
])
def test_golden_reports(name, word, strands):
    expected = json.loads((GOLDEN / f"{name}.json").read_text())
    assert certify(parse_word(word, strands)).as_dict() == expected


def test_five_two_routes():
    r = certify(parse_word("a12^2 a23 a13", 3))
    assert r.conclusion == "PropertyP-certified"
    assert r.route_kinds() == ["casson-nonzero", "alternating-5_2-fallback"]
    assert r.v2 == 2


def test_trefoil_never_certified_free_of_finite_surgery():
    for text, n in [("a23 a12 a23 a12", 3), ("s1^3", 2), ("s1^-3", 2), ("a12^3 a13", 3)]:
        r = certify(parse_word(text, n))
        assert r.conclusion == "trefoil"
        assert "trefoil-special" in r.route_kinds()
        assert all(i.rule not in ("two-gabai-disks", "triple-twist", "disjoint-double-twists") for i in r.intervals)


def test_early_conclusions():
    assert certify(parse_word("", 3)).conclusion == "not-a-knot"
    assert certify(parse_word("a12^2", 3)).conclusion == "not-a-knot"
    assert certify(parse_word("a12 a23", 3)).conclusion == "unknot"
    assert certify(parse_word("s1 s2 s3", 4)).conclusion == "unknot"


def test_inconclusive_outside_hypotheses():
    # non-homogeneous 4-braid knot with v2 = 0: no rule applies, so no guess
    w = parse_word("s3^-1 s1 s3^2 s2^-1", 4)
    assert component_count(w) == 1
    r = certify(w)
    assert r.v2 == 0
    assert r.conclusion == "inconclusive"
    assert r.route_kinds() == ["inconclusive"]
    assert r.intervals == []


def test_unreduced_input_is_reduced_before_homogeneity():
    assert certify(parse_word("s1 s1^-1 s1 s2 s3", 4)).conclusion == "unknot"


def test_budget_exhaustion_degrades():
    w = parse_word("a12 a23^-1 a12^3 a23^-1", 3)
    r = certify(w, SearchBudget(max_length=4))
    assert r.minimal_length is None and r.notes
    assert r.conclusion in ("PropertyP-certified", "inconclusive")


def test_json_schema_keys():
    d = certify(parse_word("a12^2 a23 a13", 3)).as_dict()
    assert {"input", "strands", "conclusion", "minimal_length", "genus", "alexander", "v2",
            "census", "intervals", "routes"} <= set(d)
    assert all(set(i) == {"lo", "hi", "rule"} for i in d["intervals"])
    assert all(set(r) == {"kind", "cite", "witness"} for r in d["routes"])


def _knot(w):
    return component_count(w) == 1


@settings(max_examples=40)
@given(band_words(min_size=2, max_size=8), st.integers(0, 7), band_words(max_size=2))
def test_certify_conjugation_invariant(w, k, u):
    assume(_knot(w))
    base = certify(w)
    assert certify(w.rotate(k)).conclusion == base.conclusion
    assert certify(u * w * u.inverse()).conclusion == base.conclusion
    assert certify(as_standard(w)).conclusion == base.conclusion


@settings(max_examples=40)
@given(band_words(min_size=2, max_size=8))
def test_certify_mirror_equivariant(w):
    assume(_knot(w))
    a, b = certify(w), certify(w.mirror())
    assert a.conclusion == b.conclusion
    assert sorted(rows(b.intervals)) == sorted(rows([i.mirrored() for i in a.intervals]))


def test_twist_lemma_route_implies_cover():
    for text in ("s1 s2^-1 s1 s2^-1", "a12 a23^-1 a12^3 a23^-1"):
        r = certify(parse_word(text, 3))
        if "twist-lemma" in r.route_kinds():
            assert covers(r.intervals, 1) and covers(r.intervals, -1)


def test_spec_style_interval_example_uses_a_knot():
    # s1^3 s2^2 closes to a link, so the knot s1^3 s2^3 stands in for it
    assert component_count(parse_word("s1^3 s2^2", 3)) == 2
    r = certify(parse_word("s1^3 s2^3", 3))
    assert ("-inf", "2/1", "triple-twist") in rows(r.intervals)
