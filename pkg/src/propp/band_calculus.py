"""Rewriting in B3 with the band generators a12, a23, a13.

The presentation is ``a23 a12 = a13 a23 = a12 a13 (= delta)``.  Conjugation
by delta relabels generators: ``delta a23 = a12 delta``, ``delta a13 = a23
delta``, ``delta a12 = a13 delta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import kernels
from .braid_core import BAND, BraidWord, Letter, component_count, cyclic_reduce, free_reduce

# letter <-> kernel code
_GEN_INDEX = {12: 0, 23: 1, 13: 2}
_INDEX_GEN = (12, 23, 13)

# conjugation by delta: x -> delta x delta^-1
TAU = {23: 12, 13: 23, 12: 13}
TAU_INV = {v: k for k, v in TAU.items()}

DELTA_SPELLINGS = ((23, 12), (13, 23), (12, 13))
# delta = a . right_complement(a)
RIGHT_COMPLEMENT = {23: 12, 13: 23, 12: 13}

DEFAULT_MAX_LENGTH = 16
DEFAULT_MAX_STATES = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, message: str, best_bound: int):
        super().__init__(f"{message} (best bound so far: {best_bound})")
        self.best_bound = best_bound


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = DEFAULT_MAX_LENGTH
    max_states: int = DEFAULT_MAX_STATES


class RewriteRule(NamedTuple):
    left: tuple[Letter, Letter]
    right: tuple[Letter, Letter]
    family: str  # "relation-pair" or "delta-commutation"


def _l(g: int, s: int = 1) -> Letter:
    return Letter(g, s)


# the six mixed relations, read as written
_MIXED = (
    ((_l(12), _l(23, -1)), (_l(23, -1), _l(13))),
    ((_l(12), _l(13, -1)), (_l(23, -1), _l(12))),
    ((_l(23), _l(12, -1)), (_l(13, -1), _l(23))),
    ((_l(23), _l(13, -1)), (_l(13, -1), _l(12))),
    ((_l(13), _l(12, -1)), (_l(12, -1), _l(23))),
    ((_l(13), _l(23, -1)), (_l(12, -1), _l(13))),
)


def _pair_inverse(p: tuple[Letter, Letter]) -> tuple[Letter, Letter]:
    return (p[1].inverse(), p[0].inverse())


@lru_cache(maxsize=None)
def relation_rules() -> tuple[RewriteRule, ...]:
    """Every two-letter relation of B3 in the band alphabet, both directions.

    Mixed-sign pairs come from the six relations and their inverses; the
    delta spellings (and their inverses) give the delta-commutation family,
    from which ``delta a = tau(a) delta`` follows by choosing spellings.
    """
    rules: set[RewriteRule] = set()
    for left, right in _MIXED:
        for a, b in ((left, right), (_pair_inverse(left), _pair_inverse(right))):
            rules.add(RewriteRule(a, b, "relation-pair"))
            rules.add(RewriteRule(b, a, "relation-pair"))
    pos = [(_l(x), _l(y)) for x, y in DELTA_SPELLINGS]
    neg = [_pair_inverse(p) for p in pos]
    for group in (pos, neg):
        for a in group:
            for b in group:
                if a != b:
                    rules.add(RewriteRule(a, b, "delta-commutation"))
    return tuple(sorted(rules))


# -- kernel encoding -------------------------------------------------------

def encode(w: BraidWord) -> np.ndarray:
    if w.alphabet != BAND:
        raise ValueError("expected a band word")
    return np.array([_GEN_INDEX[g] + (0 if s > 0 else 3) for g, s in w.letters], dtype=np.int64)


def decode_letters(codes) -> BraidWord:
    return BraidWord.band((_INDEX_GEN[c % 3], 1 if c < 3 else -1) for c in codes)


def decode_code(code: int, n: int) -> BraidWord:
    digits = []
    for _ in range(n):
        digits.append(code % 6)
        code //= 6
    return decode_letters(reversed(digits))


def canonical_code(w: BraidWord) -> int:
    return int(kernels.canonical_code(encode(w), len(w)))


@lru_cache(maxsize=None)
def _rule_table() -> tuple[np.ndarray, np.ndarray]:
    rep = np.zeros((6, 6, 4, 2), dtype=np.int64)
    nrep = np.zeros((6, 6), dtype=np.int64)

    def code(x: Letter) -> int:
        return _GEN_INDEX[x.generator] + (0 if x.sign > 0 else 3)

    for rule in relation_rules():
        x, y = code(rule.left[0]), code(rule.left[1])
        k = nrep[x, y]
        rep[x, y, k] = (code(rule.right[0]), code(rule.right[1]))
        nrep[x, y] = k + 1
    return rep, nrep


def apply_rule(w: BraidWord, position: int, rule: RewriteRule) -> BraidWord:
    if tuple(w.letters[position : position + 2]) != rule.left:
        raise ValueError("rule does not match at this position")
    return w._with(w.letters[:position] + rule.right + w.letters[position + 2 :])


# -- PN form and delta form ------------------------------------------------

_NEG_POS = {r.left: r.right for r in relation_rules()
            if r.family == "relation-pair" and r.left[0].sign < 0 < r.left[1].sign}


def _free_reduce_list(letters: list[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for x in letters:
        if stack and stack[-1].generator == x.generator and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return stack


def pn_form(w: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Write ``w`` as (positive word)(negative word) without growing it."""
    letters = _free_reduce_list(list(w.letters))
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            a, b = letters[i], letters[i + 1]
            if a.sign < 0 < b.sign:
                if b.generator == a.generator:
                    del letters[i : i + 2]
                else:
                    letters[i : i + 2] = _NEG_POS[(a, b)]
                changed = True
                break
        if changed:
            letters = _free_reduce_list(letters)
    split = next((i for i, x in enumerate(letters) if x.sign < 0), len(letters))
    return w._with(letters[:split]), w._with(letters[split:])


def _relabel(letters, table) -> list[Letter]:
    return [Letter(table[x.generator], x.sign) for x in letters]


def _extract(letters: list[Letter], spellings: set[tuple[Letter, Letter]], pull) -> tuple[int, list[Letter]]:
    """Remove spellings left to right, moving each to the front through ``pull``."""
    count = 0
    i = 0
    while i < len(letters) - 1:
        if (letters[i], letters[i + 1]) in spellings:
            head = _relabel(letters[:i], pull)
            letters = head + letters[i + 2 :]
            count += 1
            i = max(i - 1, 0)
        else:
            i += 1
    return count, letters


_POS_SPELL = {(_l(x), _l(y)) for x, y in DELTA_SPELLINGS}
_NEG_SPELL = {_pair_inverse(p) for p in _POS_SPELL}


@dataclass(frozen=True)
class DeltaForm:
    """``delta^k P N`` with P positive, N negative, neither containing a
    delta spelling."""

    k: int
    P: BraidWord
    N: BraidWord

    def __post_init__(self):
        if any(x.sign < 0 for x in self.P) or any(x.sign > 0 for x in self.N):
            raise ValueError("P must be positive and N negative")
        for word, spell in ((self.P, _POS_SPELL), (self.N, _NEG_SPELL)):
            for a, b in zip(word.letters, word.letters[1:]):
                if (a, b) in spell:
                    raise ValueError(f"{word} contains a delta spelling")

    def delta_word(self) -> BraidWord:
        unit = BraidWord.band([(23, 1), (12, 1)])
        return unit ** self.k

    def word(self) -> BraidWord:
        return self.delta_word() * self.P * self.N

    @property
    def length(self) -> int:
        return 2 * abs(self.k) + len(self.P) + len(self.N)


def delta_form(w: BraidWord) -> DeltaForm:
    """Pull every delta spelling to the front.

    ``x delta = delta tau^-1(x)`` and ``x delta^-1 = delta^-1 tau(x)``; after
    extraction the delta^-1 block is moved past P the same way.
    """
    P, N = pn_form(w)
    kp, p = _extract(list(P.letters), _POS_SPELL, TAU_INV)
    kn, n = _extract(list(N.letters), _NEG_SPELL, TAU)
    # delta^kp p delta^-kn n = delta^(kp - kn) tau^kn(p) n
    for _ in range(kn % 3):
        p = _relabel(p, TAU)
    return DeltaForm(kp - kn, w._with(p), w._with(n))


# -- conjugacy minimization -----------------------------------------------

@dataclass(frozen=True)
class GenusReport:
    """Minimal band length in the conjugacy class and the band surface it gives.

    The band surface has three disks and one band per letter, so
    ``-chi = l - 3`` and ``genus = (l - 1 - components) / 2``.
    """

    minimal_length: int
    neg_euler: int
    genus: Fraction
    witness: BraidWord
    components: int
    # canonical codes of every minimal representative the search reached
    class_codes: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def representatives(self) -> list[BraidWord]:
        return [decode_code(c, self.minimal_length) for c in self.class_codes]


@lru_cache(maxsize=200_000)
def _search(code: int, n: int, max_states: int) -> tuple[int, tuple[int, ...]]:
    word = encode(decode_code(code, n))
    rep, nrep = _rule_table()
    status, length, codes = kernels.conjugacy_class(word, max_states, rep, nrep)
    if status:
        raise SearchBudgetExceeded(f"conjugacy search passed {max_states} states", int(length))
    return int(length), tuple(int(c) for c in codes)


def conjugacy_min(w: BraidWord, budget: SearchBudget | None = None) -> GenusReport:
    """Minimal length over the conjugacy class of a band word, by exhaustive search.

    The search closes the cyclic word under every two-letter relation,
    rotation and delta-relabeling, dropping to a shorter level whenever a
    cancellation appears.  The witness is the lexicographically least
    canonical representative.
    """
    budget = budget or SearchBudget()
    if w.alphabet != BAND:
        raise ValueError("conjugacy_min works on band words")
    r = cyclic_reduce(w)
    if len(r) > budget.max_length:
        raise SearchBudgetExceeded(f"word length {len(r)} exceeds search budget {budget.max_length}", len(r))
    length, codes = _search(canonical_code(r), len(r), budget.max_states)
    comps = component_count(w)
    return GenusReport(
        minimal_length=length,
        neg_euler=length - 3,
        genus=Fraction(length - 1 - comps, 2),
        witness=decode_code(codes[0], length),
        components=comps,
        class_codes=codes,
    )


def is_min_conjugacy_rep(w: BraidWord, budget: SearchBudget | None = None) -> bool:
    return len(w) == conjugacy_min(w, budget).minimal_length


# -- Garside oracle --------------------------------------------------------
# Left normal form in the band monoid of B3: delta^k times a positive word
# without delta spellings.  Independent of the search above; used to check it.

def _nf_append(k: int, p: list[int], g: int) -> tuple[int, list[int]]:
    if p and (p[-1], g) in DELTA_SPELLINGS:
        # p' delta = delta tau^-1(p')
        return k + 1, [TAU_INV[x] for x in p[:-1]]
    return k, p + [g]


def normal_form(w: BraidWord) -> tuple[int, tuple[int, ...]]:
    """``(inf, factors)`` with ``w = delta^inf * factors`` and factors delta-free."""
    if w.alphabet != BAND:
        raise ValueError("expected a band word")
    k, p = 0, []
    for g, s in w.letters:
        if s > 0:
            k, p = _nf_append(k, p, g)
        else:
            # g^-1 = delta^-1 tau(r(g))
            k, p = k - 1, [TAU[x] for x in p]
            k, p = _nf_append(k, p, TAU[RIGHT_COMPLEMENT[g]])
    return k, tuple(p)


def _renormalize(k: int, p) -> tuple[int, tuple[int, ...]]:
    return normal_form(BraidWord.band([(23, 1), (12, 1)] * k if k >= 0 else [(12, -1), (23, -1)] * -k)
                       * BraidWord.band((g, 1) for g in p))


def _tau_power(g: int, k: int) -> int:
    for _ in range(k % 3):
        g = TAU[g]
    return g


def _cycle(k: int, p: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return _renormalize(k, p[1:] + (_tau_power(p[0], k),))


def _decycle(k: int, p: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return _renormalize(k, (_tau_power(p[-1], -k),) + p[:-1])


def summit_inf_sup(w: BraidWord) -> tuple[int, int]:
    """Summit infimum and supremum over the conjugacy class (cycling, then decycling)."""
    state = normal_form(w)
    for step, better in ((_cycle, lambda a, b: a[0] > b[0]),
                         (_decycle, lambda a, b: a[0] + len(a[1]) < b[0] + len(b[1]))):
        seen = {state}
        while state[1]:
            nxt = step(*state)
            if better(nxt, state):
                seen = set()
            elif nxt in seen:
                break
            seen.add(nxt)
            state = nxt
    k, p = state
    return k, k + len(p)


def garside_min_length(w: BraidWord) -> int:
    """Minimal band length of the conjugacy class, ``|inf_s| + |sup_s|``."""
    inf, sup = summit_inf_sup(w)
    return abs(inf) + abs(sup)
