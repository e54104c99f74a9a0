"""Integer Laurent polynomials in one variable ``t``."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Union

Number = Union[int, Fraction]


class LaurentPolynomial:
    """Finitely supported map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coefficients or {}).items():
            if int(v) != v:
                raise ValueError("coefficients must be integers")
            if v:
                c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPolynomial":
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        return NotImplemented

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_degree(self) -> int:
        return min(self._c)

    @property
    def max_degree(self) -> int:
        return max(self._c)

    def __eq__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            ((e, v),) = self._c.items()
            if abs(v) != 1:
                raise ValueError("only unit monomials are invertible")
            return LaurentPolynomial({-e * (-k): v ** (-k)})
        out = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """p(t^-1)."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def __call__(self, t: Number) -> Number:
        t = Fraction(t)
        total = sum(v * t**e for e, v in self._c.items())
        return int(total) if total.denominator == 1 else total

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e - 1: e * v for e, v in self._c.items() if e})

    def divmod(self, divisor: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Division with remainder, treating both sides as t-shifted polynomials.

        Exact when the divisor's lowest coefficient divides through; raises
        ``ArithmeticError`` if a non-integer quotient coefficient appears.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        rem = dict(self._c)
        q: dict[int, int] = {}
        dmax = divisor.max_degree
        lead = divisor[dmax]
        span = divisor.max_degree - divisor.min_degree
        while rem and max(rem) - min(rem) >= span:
            e = max(rem)
            coeff, r = divmod(rem[e], lead)
            if r:
                raise ArithmeticError("quotient has non-integer coefficients")
            shift = e - dmax
            q[shift] = coeff
            for de, dv in divisor._c.items():
                k = de + shift
                rem[k] = rem.get(k, 0) - coeff * dv
                if rem[k] == 0:
                    del rem[k]
        return LaurentPolynomial(q), LaurentPolynomial(rem)

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def is_symmetric(self) -> bool:
        return self == self.substitute_inverse()

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if v > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(out)

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Inverse of ``str``: ``"2*t - 3 + 2*t^-1"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        c: dict[int, int] = {}
        for m in re.finditer(r"([+-]?)(?:(\d+)\*?)?(t(?:\^(-?\d+))?)?", s):
            if not m.group(0):
                continue
            sign = -1 if m.group(1) == "-" else 1
            if m.group(3) is None:
                if m.group(2) is None:
                    raise ValueError(f"cannot parse {text!r}")
                e, v = 0, int(m.group(2))
            else:
                e = int(m.group(4)) if m.group(4) is not None else 1
                v = int(m.group(2)) if m.group(2) is not None else 1
            c[e] = c.get(e, 0) + sign * v
        return cls(c)


T = LaurentPolynomial.monomial(1, 1)
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


def determinant(matrix: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Fraction-free Bareiss elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [[LaurentPolynomial.coerce(x) for x in row] for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def matmul(x: list[list[LaurentPolynomial]], y: list[list[LaurentPolynomial]]) -> list[list[LaurentPolynomial]]:
    n, m, p = len(x), len(y), len(y[0]) if y else 0
    return [[sum((x[i][k] * y[k][j] for k in range(m)), ZERO) for j in range(p)] for i in range(n)]


def identity(n: int) -> list[list[LaurentPolynomial]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
