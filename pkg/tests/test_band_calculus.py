import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from propp import kernels
from propp._jit import JIT_ENABLED
from propp.band_calculus import (
    DeltaForm,
    SearchBudget,
    SearchBudgetExceeded,
    _rule_table,
    apply_rule,
    canonical_code,
    conjugacy_min,
    decode_code,
    delta_form,
    encode,
    garside_min_length,
    is_min_conjugacy_rep,
    normal_form,
    pn_form,
    relation_rules,
)
from propp.braid_core import BraidWord, band_to_standard, component_count, cyclic_reduce, parse_word, permutation
from propp.invariants import burau_reduced

from strategies import band_words


def same_braid(u: BraidWord, v: BraidWord) -> bool:
    return burau_reduced(band_to_standard(u)) == burau_reduced(band_to_standard(v))


def test_rule_count():
    # the six mixed relations are closed under inversion: 12 directed rules;
    # three delta spellings per sign, ordered pairs: 12
    rules = relation_rules()
    assert len(rules) == 24
    assert sum(r.family == "delta-commutation" for r in rules) == 12


@pytest.mark.parametrize("rule", relation_rules())
def test_every_rule_is_a_braid_identity(rule):
    assert same_braid(BraidWord.band(rule.left), BraidWord.band(rule.right))


@given(band_words(min_size=2, max_size=10), st.data())
def test_rewriting_preserves_element(w, data):
    i = data.draw(st.integers(0, len(w) - 2))
    matching = [r for r in relation_rules() if r.left == tuple(w.letters[i:i + 2])]
    for r in matching:
        v = apply_rule(w, i, r)
        assert same_braid(v, w)
        assert permutation(v) == permutation(w)


def test_apply_rule_rejects_mismatch():
    rule = relation_rules()[0]
    w = BraidWord.band([(12, 1), (12, 1)])
    if tuple(w.letters) != rule.left:
        with pytest.raises(ValueError):
            apply_rule(w, 0, rule)


@given(band_words(max_size=10))
def test_pn_form(w):
    p, n = pn_form(w)
    assert all(x.sign > 0 for x in p) and all(x.sign < 0 for x in n)
    assert len(p) + len(n) <= len(w)
    assert same_braid(p * n, w)


def test_delta_form_example():
    df = delta_form(parse_word("a12 a13 a23^-1", 3))
    assert (df.k, len(df.P), df.N) == (1, 0, parse_word("a23^-1", 3))


@given(band_words(max_size=10))
def test_delta_form_is_the_same_braid(w):
    df = delta_form(w)
    assert same_braid(df.word(), w)
    assert df.length <= len(w)


def test_delta_form_validation():
    with pytest.raises(ValueError):
        DeltaForm(0, parse_word("a23 a12", 3), BraidWord.band())
    with pytest.raises(ValueError):
        DeltaForm(0, parse_word("a12^-1", 3), BraidWord.band())


def test_xu_genus_examples():
    delta2 = parse_word("a23 a12 a23 a12", 3)
    g = conjugacy_min(delta2)
    assert (g.minimal_length, g.neg_euler, g.genus) == (4, 1, Fraction(1))
    g = conjugacy_min(parse_word("a12^2 a23 a13", 3))
    assert (g.minimal_length, g.genus) == (4, Fraction(1))
    assert conjugacy_min(parse_word("a12 a23", 3)).minimal_length == 2
    assert conjugacy_min(BraidWord.band()).minimal_length == 0


def test_minimal_length_drops_through_relations():
    # a12 a23^-1 a13^-1 is conjugate to a shorter word
    w = parse_word("a13 a23 a12^-1 a12^-1", 3)
    assert conjugacy_min(w).minimal_length < len(w)
    assert not is_min_conjugacy_rep(w)


@settings(max_examples=60)
@given(band_words(max_size=9), band_words(max_size=3))
def test_conjugation_invariance(w, u):
    conj = u * w * u.inverse()
    assert conjugacy_min(conj).minimal_length == conjugacy_min(w).minimal_length


@settings(max_examples=150)
@given(band_words(max_size=11))
def test_search_matches_garside_oracle(w):
    assert conjugacy_min(w).minimal_length == garside_min_length(w)


def test_search_matches_garside_exhaustively_to_length_5():
    for n in range(1, 6):
        for code in kernels.canonical_reduced_codes(n):
            w = decode_code(int(code), n)
            assert conjugacy_min(w).minimal_length == garside_min_length(w), w


@given(band_words(max_size=8))
def test_normal_form_is_the_same_braid(w):
    k, p = normal_form(w)
    delta = parse_word("a23 a12", 3)
    assert same_braid(delta ** k * BraidWord.band((g, 1) for g in p), w)


def test_representatives_are_minimal_and_conjugate():
    g = conjugacy_min(parse_word("a12 a23^-1 a12 a23^-1", 3))
    reps = g.representatives()
    assert reps and all(len(r) == g.minimal_length for r in reps)
    assert all(component_count(r) == 1 for r in reps)


def test_budget_exceeded():
    w = parse_word("a12 a23^-1 " * 9, 3)
    with pytest.raises(SearchBudgetExceeded) as info:
        conjugacy_min(w, SearchBudget(max_length=10))
    assert info.value.best_bound == 18


@given(band_words(min_size=1, max_size=10), st.integers(0, 9), st.integers(0, 2))
def test_canonical_code_invariant_under_rotation_and_relabel(w, r, j):
    from propp.band_calculus import TAU
    v = w.rotate(r)
    for _ in range(j):
        v = BraidWord.band((TAU[g], s) for g, s in v.letters)
    assert canonical_code(v) == canonical_code(w)
    c = canonical_code(w)
    assert canonical_code(decode_code(c, len(w))) == c


# -- compiled vs interpreted kernels ---------------------------------------

@given(band_words(max_size=10))
def test_kernels_agree_with_python_fallback(w):
    arr = encode(w)
    rep, nrep = _rule_table()
    assert kernels.canonical_code(arr, len(w)) == kernels.canonical_code.py_func(arr, len(w))
    assert np.array_equal(kernels.cyclic_reduce(arr), kernels.cyclic_reduce.py_func(arr))
    a = kernels.conjugacy_class(arr, 100_000, rep, nrep)
    b = kernels.conjugacy_class.py_func(arr, 100_000, rep, nrep)
    assert a[0] == b[0] and a[1] == b[1] and np.array_equal(a[2], b[2])


def test_enumeration_kernel_agrees_with_fallback():
    for n in range(1, 5):
        assert np.array_equal(kernels.canonical_reduced_codes(n), kernels.canonical_reduced_codes.py_func(n))


def test_cyclic_reduce_kernel_matches_word_level():
    w = parse_word("a12 a23 a13 a13^-1 a12^-1", 3)
    assert len(kernels.cyclic_reduce(encode(w))) == len(cyclic_reduce(w)) == 1


def test_env_flag_disables_jit():
    code = ("from propp._jit import JIT_ENABLED; from propp.band_calculus import conjugacy_min; "
            "from propp.braid_core import parse_word; "
            "print(JIT_ENABLED, conjugacy_min(parse_word('a12^2 a23 a13', 3)).minimal_length)")
    env = dict(os.environ, PROPP_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "4"]


def test_jit_enabled_by_default():
    if os.environ.get("PROPP_DISABLE_JIT"):
        pytest.skip("fallback run requested")
    assert JIT_ENABLED
