"""Braid words over the standard generators ``s_i`` of B_n and the band
generators ``a12, a23, a13`` of B_3.

Words are immutable.  Permutations compose left to right: the first letter
acts first, and ``p * q`` means "apply p, then q".
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

BAND = "band"
STANDARD = "standard"

BAND_GENERATORS = (12, 23, 13)
# strand pair swapped by each band generator
BAND_PAIRS = {12: (1, 2), 23: (2, 3), 13: (1, 3)}


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Letter(NamedTuple):
    """A generator with a sign.

    ``generator`` is ``i`` for ``s_i`` and ``ij`` (12, 23 or 13) for ``a_ij``.
    """

    generator: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[p - 1]`` is the image of ``p``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other(self(p)) for p in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = []
            p = start
            while p not in seen:
                seen.add(p)
                cycle.append(p)
                p = self(p)
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class BraidWord:
    strands: int
    alphabet: str
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        if self.alphabet == BAND:
            if self.strands != 3:
                raise ValueError("band generators need exactly 3 strands")
            valid = BAND_GENERATORS
        elif self.alphabet == STANDARD:
            valid = range(1, self.strands)
        else:
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        for g, s in self.letters:
            if g not in valid or s not in (1, -1):
                raise ValueError(f"letter ({g}, {s}) not valid for {self.alphabet} on {self.strands} strands")

    @classmethod
    def band(cls, letters: Iterable[tuple[int, int]] = ()) -> "BraidWord":
        return cls(3, BAND, tuple(letters))

    @classmethod
    def standard(cls, strands: int, letters: Iterable[tuple[int, int]] = ()) -> "BraidWord":
        return cls(strands, STANDARD, tuple(letters))

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return self._with(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if (other.strands, other.alphabet) != (self.strands, self.alphabet):
            raise ValueError("cannot multiply words over different alphabets")
        return self._with(self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return self._with(self.letters * k)

    def __str__(self) -> str:
        return format_word(self)

    def _with(self, letters: Iterable[Letter]) -> "BraidWord":
        return BraidWord(self.strands, self.alphabet, tuple(letters))

    def inverse(self) -> "BraidWord":
        return self._with(x.inverse() for x in reversed(self.letters))

    def mirror(self) -> "BraidWord":
        """A word whose closure is the mirror image of this closure.

        Standard words flip every sign.  For band words a bare sign flip is
        not a homomorphism of B3, so it is composed with the inner flip
        s1 <-> s2: ``a12 -> a23^-1``, ``a23 -> a12^-1``, ``a13 -> a13^-1``.
        Either way the length is unchanged.
        """
        if self.alphabet == BAND:
            swap = {12: 23, 23: 12, 13: 13}
            return self._with(Letter(swap[g], -s) for g, s in self.letters)
        return self._with(x.inverse() for x in self.letters)

    def rotate(self, k: int) -> "BraidWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return self._with(self.letters[k:] + self.letters[:k])

    def positions(self, generator: int) -> list[int]:
        return [i for i, x in enumerate(self.letters) if x.generator == generator]

    def generators(self) -> tuple[int, ...]:
        if self.alphabet == BAND:
            return BAND_GENERATORS
        return tuple(range(1, self.strands))


_TOKEN = re.compile(r"(a12|a13|a23|s(\d+))(?:\^(-?\d+))?$")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse ``"a12^2 a23 a13^-1"`` or ``"s1^2 s2 s1^-1"``.

    Exponents expand into repeated letters; the alphabet is fixed by the
    first token (an empty text gives a band word on 3 strands and a
    standard word otherwise).
    """
    if strands < 2:
        raise ValueError("need at least 2 strands")
    letters: list[Letter] = []
    alphabet = None
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        t = _TOKEN.match(tok)
        if t is None:
            raise WordSyntaxError(f"bad token {tok!r}", m.start())
        if t.group(2) is None:
            kind, gen = BAND, int(t.group(1)[1:])
            if strands != 3:
                raise WordSyntaxError(f"band letter {tok!r} needs 3 strands", m.start())
        else:
            kind, gen = STANDARD, int(t.group(2))
            if not 1 <= gen < strands:
                raise WordSyntaxError(f"generator {tok!r} out of range for {strands} strands", m.start())
        if alphabet is None:
            alphabet = kind
        elif alphabet != kind:
            raise WordSyntaxError("mixed band and standard letters", m.start())
        exp = int(t.group(3)) if t.group(3) is not None else 1
        if exp == 0:
            raise WordSyntaxError("zero exponent", m.start())
        sign = 1 if exp > 0 else -1
        letters.extend([Letter(gen, sign)] * abs(exp))
    if alphabet is None:
        alphabet = BAND if strands == 3 else STANDARD
    return BraidWord(strands, alphabet, tuple(letters))


def format_word(w: BraidWord) -> str:
    prefix = "a" if w.alphabet == BAND else "s"
    parts = []
    i = 0
    while i < len(w.letters):
        j = i
        while j < len(w.letters) and w.letters[j] == w.letters[i]:
            j += 1
        g, s = w.letters[i]
        exp = s * (j - i)
        parts.append(f"{prefix}{g}" if exp == 1 else f"{prefix}{g}^{exp}")
        i = j
    return " ".join(parts)


_A13 = ((1, -1), (2, 1), (1, 1))


def band_to_standard(w: BraidWord) -> BraidWord:
    """``a12 -> s1``, ``a23 -> s2``, ``a13 -> s1^-1 s2 s1``."""
    if w.alphabet != BAND:
        raise ValueError("expected a band word")
    out: list[tuple[int, int]] = []
    for g, s in w.letters:
        if g == 12:
            out.append((1, s))
        elif g == 23:
            out.append((2, s))
        else:
            out.extend([(1, -1), (2, s), (1, 1)])
    return BraidWord.standard(3, out)


def standard_to_band(w: BraidWord) -> BraidWord:
    if w.alphabet != STANDARD or w.strands != 3:
        raise ValueError("expected a standard word on 3 strands")
    return BraidWord.band((12 if g == 1 else 23, s) for g, s in w.letters)


def as_band(w: BraidWord) -> BraidWord:
    return w if w.alphabet == BAND else standard_to_band(w)


def as_standard(w: BraidWord) -> BraidWord:
    return w if w.alphabet == STANDARD else band_to_standard(w)


def letter_swap(w: BraidWord, letter: Letter) -> tuple[int, int]:
    """The pair of strand positions a letter exchanges."""
    if w.alphabet == BAND:
        return BAND_PAIRS[letter.generator]
    return letter.generator, letter.generator + 1


def permutation(w: BraidWord) -> Permutation:
    """Where the strand starting at each position ends up."""
    images = list(range(1, w.strands + 1))
    # position -> strand currently there
    at = list(range(w.strands + 1))
    for x in w.letters:
        i, j = letter_swap(w, x)
        at[i], at[j] = at[j], at[i]
    for pos in range(1, w.strands + 1):
        images[at[pos] - 1] = pos
    return Permutation(tuple(images))


def component_count(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def is_knot(w: BraidWord) -> bool:
    return component_count(w) == 1


def exponent_sums(w: BraidWord) -> dict[int, int]:
    sums = dict.fromkeys(w.generators(), 0)
    for g, s in w.letters:
        sums[g] += s
    return sums


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for x in w.letters:
        if stack and stack[-1] == x.inverse():
            stack.pop()
        else:
            stack.append(x)
    return w._with(stack)


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Free reduction followed by cancelling inverse letters at the two ends."""
    letters = free_reduce(w).letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[hi - 1] == letters[lo].inverse():
        lo += 1
        hi -= 1
    return w._with(letters[lo:hi])
