import pytest
from hypothesis import given, strategies as st

from propp.braid_core import (
    BAND,
    STANDARD,
    BraidWord,
    Letter,
    Permutation,
    WordSyntaxError,
    as_band,
    band_to_standard,
    component_count,
    cyclic_reduce,
    exponent_sums,
    format_word,
    free_reduce,
    is_knot,
    parse_word,
    permutation,
    standard_to_band,
)
from propp.invariants import burau_reduced

from strategies import band_words, standard_words


def test_parse_expands_powers():
    w = parse_word("a12^2 a23 a13^-1", 3)
    assert w.alphabet == BAND
    assert w.letters == ((12, 1), (12, 1), (23, 1), (13, -1))


def test_parse_standard():
    w = parse_word("s1 s3^-2", 4)
    assert w.alphabet == STANDARD and w.strands == 4
    assert w.letters == ((1, 1), (3, -1), (3, -1))


def test_empty_text_is_empty_band_word_on_three_strands():
    w = parse_word("", 3)
    assert w.alphabet == BAND and len(w) == 0
    assert component_count(w) == 3


@pytest.mark.parametrize(
    "text, strands, pos",
    [("a14", 3, 0), ("a12 s1", 3, 4), ("s3", 3, 0), ("a12^0", 3, 0), ("a12 a12^x", 3, 4), ("a12", 4, 0)],
)
def test_parse_errors_carry_position(text, strands, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text, strands)
    assert info.value.position == pos


def test_format_groups_runs():
    assert format_word(parse_word("a12 a12 a13^-1 a13^-1 a23", 3)) == "a12^2 a13^-2 a23"
    assert format_word(parse_word("s2^-1", 3)) == "s2^-1"


@given(band_words())
def test_band_round_trip(w):
    assert parse_word(format_word(w), 3) == w


@given(standard_words())
def test_standard_round_trip(w):
    assert parse_word(format_word(w), w.strands).letters == w.letters


def test_invalid_letters_rejected():
    with pytest.raises(ValueError):
        BraidWord.standard(3, [(3, 1)])
    with pytest.raises(ValueError):
        BraidWord(4, BAND, ())
    with pytest.raises(ValueError):
        BraidWord.band([(12, 2)])


def test_permutation_composes_left_to_right():
    p = Permutation.transposition(3, 1, 2)
    q = Permutation.transposition(3, 2, 3)
    # 1 -> 2 under p, then 2 -> 3 under q
    assert (p * q)(1) == 3
    assert (p * q).cycles() == [(1, 3, 2)]


def test_component_counts():
    assert component_count(parse_word("a12^2", 3)) == 3
    assert component_count(parse_word("a12 a23", 3)) == 1
    assert component_count(parse_word("a12 a23 a13 a23^-1", 3)) == 3
    assert is_knot(parse_word("s1^3", 2))
    assert not is_knot(parse_word("s1^2", 2))


@given(band_words(max_size=8))
def test_band_and_standard_permutations_agree(w):
    assert permutation(w) == permutation(band_to_standard(w))


def test_band_to_standard_expansion():
    assert band_to_standard(parse_word("a13", 3)).letters == ((1, -1), (2, 1), (1, 1))
    assert standard_to_band(parse_word("s1 s2^-1", 3)) == parse_word("a12 a23^-1", 3)


def test_free_and_cyclic_reduction():
    w = parse_word("a23 a12 a12^-1 a13 a23^-1", 3)
    assert free_reduce(w) == parse_word("a23 a13 a23^-1", 3)
    assert cyclic_reduce(w) == parse_word("a13", 3)


def test_exponent_sums():
    assert exponent_sums(parse_word("a12^2 a13^-1", 3)) == {12: 2, 23: 0, 13: -1}


@given(band_words(max_size=6), band_words(max_size=6))
def test_inverse_is_antihomomorphism(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert len(free_reduce(u * u.inverse())) == 0


@given(band_words(max_size=6), band_words(max_size=6))
def test_band_mirror_is_a_homomorphism(u, v):
    # checked on the faithful Burau image, not on words
    assert burau_reduced(band_to_standard((u * v).mirror())) == burau_reduced(
        band_to_standard(u.mirror() * v.mirror()))


def test_mirror_of_relation_is_relation():
    # a23 a12 = a13 a23 must survive mirroring
    left = parse_word("a23 a12", 3).mirror()
    right = parse_word("a13 a23", 3).mirror()
    assert burau_reduced(band_to_standard(left)) == burau_reduced(band_to_standard(right))


@given(standard_words())
def test_as_band_requires_three_strands(w):
    if w.strands == 3:
        assert as_band(w).alphabet == BAND
    else:
        with pytest.raises(ValueError):
            as_band(w)


def test_letter_inverse():
    assert Letter(12, 1).inverse() == Letter(12, -1)


@given(st.integers(-5, 5), band_words(min_size=1, max_size=6))
def test_rotate_preserves_letters(k, w):
    assert sorted(w.rotate(k).letters) == sorted(w.letters)
    assert component_count(w.rotate(k)) == component_count(w)
