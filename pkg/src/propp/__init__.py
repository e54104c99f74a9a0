"""Property P certificates for closed braids.

The public surface is re-exported here; see the README for a tour.
"""
from .braid_core import BraidWord, Letter, WordSyntaxError, format_word, parse_word
from .band_calculus import SearchBudget, SearchBudgetExceeded, conjugacy_min, delta_form
from .gabai_census import TwistCensus, best_band_census, census_homogeneous
from .invariants import alexander, casson_v2, knot_invariants
from .surgery_certifier import PropertyPReport, SlopeInterval, certify

__all__ = [
    "BraidWord", "Letter", "WordSyntaxError", "format_word", "parse_word",
    "SearchBudget", "SearchBudgetExceeded", "conjugacy_min", "delta_form",
    "TwistCensus", "best_band_census", "census_homogeneous",
    "alexander", "casson_v2", "knot_invariants",
    "PropertyPReport", "SlopeInterval", "certify",
]
