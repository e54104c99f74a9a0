"""Exact polynomial invariants of closed braids.

Two independent routes to the Alexander polynomial are kept side by side:
the reduced Burau representation (determinants over Laurent polynomials)
and a Seifert matrix read off the closed-braid diagram (integer matrices,
determinant by evaluation and interpolation over the rationals).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .braid_core import (
    STANDARD,
    BraidWord,
    Letter,
    as_standard,
    component_count,
    permutation,
)
from .laurent import ONE, T, ZERO, LaurentPolynomial, determinant, identity, matmul


class NotAKnotError(ValueError):
    """Raised when a knot-only invariant is asked of a link closure."""


class InconsistentFitError(ValueError):
    """A twist family whose Casson values are not a single quadratic."""


def _require_knot(w: BraidWord) -> None:
    c = component_count(w)
    if c != 1:
        raise NotAKnotError(f"closure of {w} has {c} components")


# -- Burau -----------------------------------------------------------------

def _burau_generator(n: int, i: int, sign: int) -> list[list[LaurentPolynomial]]:
    m = identity(n - 1)
    k = i - 1  # row of the generator in the reduced matrix
    if n == 2:
        m[0][0] = -T if sign > 0 else LaurentPolynomial.monomial(-1, -1)
        return m
    if sign > 0:
        m[k][k] = -T
        if k > 0:
            m[k][k - 1] = T
        if k < n - 2:
            m[k][k + 1] = ONE
    else:
        # inverse of the row operation above
        tinv = LaurentPolynomial.monomial(1, -1)
        m[k][k] = -tinv
        if k > 0:
            m[k][k - 1] = ONE
        if k < n - 2:
            m[k][k + 1] = tinv
    return m


def burau_reduced(w: BraidWord) -> list[list[LaurentPolynomial]]:
    """Reduced Burau matrix of a standard word; ``burau(w v) = burau(w) burau(v)``."""
    if w.alphabet != STANDARD:
        raise ValueError("burau_reduced needs a standard word; convert band words first")
    n = w.strands
    m = identity(n - 1)
    for g, s in w.letters:
        m = matmul(m, _burau_generator(n, g, s))
    return m


def _unit_normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    """Fix the unit ``±t^k`` so that p is symmetric with p(1) = 1."""
    if p.is_zero():
        raise ArithmeticError("zero Alexander polynomial")
    span = p.max_degree - p.min_degree
    if span % 2:
        raise ArithmeticError(f"odd span, cannot symmetrize {p}")
    q = p.shift(-(p.min_degree + span // 2))
    if q(1) < 0:
        q = -q
    if q(1) != 1 or not q.is_symmetric():
        raise ArithmeticError(f"normalization failed for {p}")
    return q


def alexander_raw(w: BraidWord) -> LaurentPolynomial:
    """``det(I - burau(w))``, defined for any closure, up to units."""
    w = as_standard(w)
    m = burau_reduced(w)
    n = w.strands - 1
    a = [[(ONE if i == j else ZERO) - m[i][j] for j in range(n)] for i in range(n)]
    return determinant(a)


def alexander(w: BraidWord) -> LaurentPolynomial:
    """Normalized Alexander polynomial of a knot closure via the Burau route."""
    _require_knot(w)
    w = as_standard(w)
    # det(I - burau) = Delta * (1 + t + ... + t^(n-1)) up to a unit
    cyclotomic = LaurentPolynomial({e: 1 for e in range(w.strands)})
    return _unit_normalize(alexander_raw(w).exact_div(cyclotomic))


# -- Seifert matrix oracle -------------------------------------------------

def seifert_matrix(w: BraidWord) -> list[list[int]]:
    """Seifert matrix of the surface built from one disk per strand and one
    half-twisted band per crossing.

    Homology generators are the loops through consecutive bands of the same
    column; entries follow Collins' rules for closed braid diagrams.
    """
    w = as_standard(w)
    columns: list[list[tuple[int, int]]] = [[] for _ in range(w.strands)]
    for pos, (g, s) in enumerate(w.letters):
        columns[g].append((pos, s))
    loops = []  # (column, start, end, first sign, second sign)
    for col in range(1, w.strands):
        bands = columns[col]
        for k in range(len(bands) - 1):
            loops.append((col, bands[k][0], bands[k + 1][0], bands[k][1], bands[k + 1][1]))
    index = {(x[0], x[1]): i for i, x in enumerate(loops)}
    size = len(loops)
    v = [[0] * size for _ in range(size)]
    for i, (col, a0, a1, s0, s1) in enumerate(loops):
        if s0 == s1:
            v[i][i] = -s0
        nxt = index.get((col, a1))
        if nxt is not None:
            if s1 > 0:
                v[nxt][i] = 1
            else:
                v[i][nxt] = -1
        for j, (col2, b0, b1, _, _) in enumerate(loops):
            if col2 != col + 1:
                continue
            if b0 < a0 < b1 < a1:
                v[j][i] = 1
            elif a0 < b0 < a1 < b1:
                v[j][i] = -1
    return v


def _rational_det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def alexander_seifert_oracle(w: BraidWord) -> LaurentPolynomial:
    """Alexander polynomial as ``det(V - t V^T)`` from :func:`seifert_matrix`."""
    _require_knot(w)
    v = seifert_matrix(w)
    size = len(v)
    if size == 0:
        return ONE
    xs = list(range(-size, size + 1))[: size + 1]
    ys = []
    for x in xs:
        m = [[Fraction(v[i][j] - x * v[j][i]) for j in range(size)] for i in range(size)]
        ys.append(_rational_det(m))
    coeffs = _interpolate(xs, ys)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral Seifert determinant")
    return _unit_normalize(LaurentPolynomial({e: int(c) for e, c in enumerate(coeffs)}))


# -- Casson / linking ------------------------------------------------------

def casson_from_alexander(delta: LaurentPolynomial) -> int:
    second = delta.derivative().derivative()(1)
    if second % 2:
        raise ArithmeticError(f"odd second derivative for {delta}")
    return second // 2


def casson_v2(w: BraidWord) -> int:
    """``v2 = Delta''(1) / 2`` of the normalized Alexander polynomial."""
    return casson_from_alexander(alexander(w))


def linking_number(w: BraidWord) -> int:
    """Linking number of a two-component closure.

    Each crossing between strands of different components contributes its
    sign; the total is halved.
    """
    if component_count(w) != 2:
        raise ValueError("linking number needs a 2-component closure")
    w = as_standard(w)
    comp = {}
    for label, cycle in enumerate(permutation(w).cycles()):
        for p in cycle:
            comp[p] = label
    at = list(range(w.strands + 1))  # position -> starting strand
    total = 0
    for g, s in w.letters:
        if comp[at[g]] != comp[at[g + 1]]:
            total += s
        at[g], at[g + 1] = at[g + 1], at[g]
    if total % 2:
        raise ArithmeticError("odd inter-component crossing count")
    return total // 2


# -- twist families --------------------------------------------------------

@dataclass(frozen=True)
class TwistFamily:
    """Insert ``n`` half-twists ``generator^sign(n)`` at ``position`` of ``template``."""

    template: BraidWord
    position: int
    generator: int

    def __post_init__(self):
        if not 0 <= self.position <= len(self.template):
            raise ValueError("insertion position outside the template")
        if self.generator not in self.template.generators():
            raise ValueError("generator not in the template's alphabet")


def twist_member(f: TwistFamily, n: int) -> BraidWord:
    s = 1 if n > 0 else -1
    letters = f.template.letters
    inserted = (Letter(f.generator, s),) * abs(n)
    return BraidWord(
        f.template.strands,
        f.template.alphabet,
        letters[: f.position] + inserted + letters[f.position :],
    )


def fit_quadratic(points: Sequence[tuple[int, int]]) -> tuple[Fraction, Fraction, Fraction]:
    """Exact quadratic through the first three points; the rest must lie on it."""
    if len(points) < 3:
        raise ValueError("need at least three samples")
    xs = [p[0] for p in points[:3]]
    if len(set(xs)) < 3:
        raise ValueError("samples must be distinct")
    c0, c1, c2 = _interpolate(xs, [Fraction(p[1]) for p in points[:3]])
    for x, y in points[3:]:
        if c2 * x * x + c1 * x + c0 != y:
            raise InconsistentFitError(f"sample n={x} (v2={y}) is off the quadratic")
    return c2, c1, c0


def twist_family_quadratic(f: TwistFamily, samples: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """Quadratic ``(a2, a1, a0)`` with ``v2(member(n)) = a2 n^2 + a1 n + a0``."""
    if any(n % 2 == 0 for n in samples):
        raise ValueError("samples must be odd")
    return fit_quadratic([(n, casson_v2(twist_member(f, n))) for n in samples])


@dataclass(frozen=True)
class KnotInvariants:
    alexander: LaurentPolynomial
    v2: int
    genus_bound: int


def knot_invariants(w: BraidWord) -> KnotInvariants:
    delta = alexander(w)
    return KnotInvariants(delta, casson_from_alexander(delta), delta.max_degree)
