"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from propp.braid_core import BraidWord

band_letters = st.tuples(st.sampled_from((12, 23, 13)), st.sampled_from((1, -1)))


def band_words(min_size=0, max_size=10):
    return st.lists(band_letters, min_size=min_size, max_size=max_size).map(BraidWord.band)


@st.composite
def standard_words(draw, min_strands=2, max_strands=5, max_size=10):
    n = draw(st.integers(min_strands, max_strands))
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))), max_size=max_size))
    return BraidWord.standard(n, letters)
