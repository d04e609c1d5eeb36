"""Monomial valuations on rational functions in x and y.

A :class:`Value` is the lattice point ``(m, n)`` standing for
``m*nu(x) + n*nu(y)``; the order those points carry is the job of a value
group.  Three groups are implemented: exact rational values for x and y,
a continued-fraction stream ratio (``nu(x)`` irrational, ``nu(y) = 1``),
and ``Z^2`` with lexicographic order.  A polynomial's value is the minimum
of its term values under the group order; the zero polynomial has no
finite value and evaluating it raises ``ZeroPolynomialError``, which keeps
:class:`Value` a pure group element.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import CFStream, GREATER, LESS, IndecisiveComparisonError
from .laurent import (
    LaurentPolynomial,
    Monomial,
    RationalFunction,
    ZeroPolynomialError,
)


@dataclass(frozen=True)
class Value:
    """The group element ``m*nu(x) + n*nu(y)``."""

    m: int
    n: int

    def __add__(self, other: "Value") -> "Value":
        return Value(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "Value") -> "Value":
        return Value(self.m - other.m, self.n - other.n)

    def __neg__(self) -> "Value":
        return Value(-self.m, -self.n)


ZERO = Value(0, 0)


def _int_sign(x) -> int:
    return (x > 0) - (x < 0)


class RationalRatioGroup:
    """Both ``nu(x)`` and ``nu(y)`` are exact positive rationals.

    Either orientation is accepted; the ``(a, b)`` view normalizes to
    ``a >= b`` and ``swapped`` records whether x and y traded roles.
    Comparison is the exact sign of a Fraction, never approximate.
    """

    def __init__(self, vx, vy):
        vx, vy = Fraction(vx), Fraction(vy)
        if vx <= 0 or vy <= 0:
            raise ValueError("nu(x) and nu(y) must both be positive")
        self.vx = vx
        self.vy = vy

    @property
    def swapped(self) -> bool:
        return self.vx < self.vy

    @property
    def a(self) -> Fraction:
        return max(self.vx, self.vy)

    @property
    def b(self) -> Fraction:
        return min(self.vx, self.vy)

    def realize(self, v: Value) -> Fraction:
        return v.m * self.vx + v.n * self.vy

    def compare(self, v1: Value, v2: Value) -> int:
        return _int_sign(self.realize(v1) - self.realize(v2))

    def sign(self, v: Value) -> int:
        return _int_sign(self.realize(v))

    def describe(self) -> str:
        return f"nu(x) = {self.vx}, nu(y) = {self.vy}"


class StreamRatioGroup:
    """``nu(x)`` is a continued-fraction stream, ``nu(y) = 1``.

    Fixing ``nu(y) = 1`` uses up the scaling freedom, so the stream alone
    determines the group.  Sign decisions bracket the stream between
    convergents; convergents are memoized behind a lock, which keeps
    shared use cheap without being observably stateful.
    """

    def __init__(self, stream: CFStream, max_iters: int = 256):
        if max_iters < 1:
            raise ValueError("max_iters must be positive")
        self.stream = stream
        self.max_iters = max_iters
        self._convergents: list[Fraction] = []
        self._h = (1, 0)  # last two convergent numerators
        self._k = (0, 1)
        self._lock = threading.Lock()

    def _convergent(self, i: int) -> Fraction:
        with self._lock:
            while len(self._convergents) <= i:
                idx = len(self._convergents)
                d = self.stream.digit(idx)
                h = d * self._h[0] + self._h[1]
                k = d * self._k[0] + self._k[1]
                self._h = (h, self._h[0])
                self._k = (k, self._k[0])
                self._convergents.append(Fraction(h, k))
        return self._convergents[i]

    def _compare_stream(self, t: Fraction) -> int:
        # Same bracket refinement as exactnum.stream_compare, from the cache.
        for i in range(self.max_iters):
            c = self._convergent(i)
            if i % 2 == 0:
                if t <= c:
                    return GREATER
            else:
                if t >= c:
                    return LESS
        raise IndecisiveComparisonError(t, self.max_iters)

    def compare(self, v1: Value, v2: Value) -> int:
        dm = v1.m - v2.m
        dn = v1.n - v2.n
        if dm == 0:
            return _int_sign(dn)
        s = self._compare_stream(Fraction(-dn, dm))
        return s if dm > 0 else -s

    def sign(self, v: Value) -> int:
        return self.compare(v, ZERO)

    def describe(self) -> str:
        return f"nu(x) = {self.stream}, nu(y) = 1"


class LexZ2Group:
    """``nu(x)`` and ``nu(y)`` live in Z^2 with lexicographic order."""

    def __init__(self, vx: tuple[int, int], vy: tuple[int, int]):
        self.vx = (int(vx[0]), int(vx[1]))
        self.vy = (int(vy[0]), int(vy[1]))

    def realize(self, v: Value) -> tuple[int, int]:
        return (
            v.m * self.vx[0] + v.n * self.vy[0],
            v.m * self.vx[1] + v.n * self.vy[1],
        )

    def compare(self, v1: Value, v2: Value) -> int:
        w1, w2 = self.realize(v1), self.realize(v2)
        return (w1 > w2) - (w1 < w2)

    def sign(self, v: Value) -> int:
        return self.compare(v, ZERO)

    def describe(self) -> str:
        return f"nu(x) = {self.vx}, nu(y) = {self.vy} in Z^2 (lex)"


class MonomialValuation:
    """Evaluate a monomial valuation on monomials, polynomials, quotients.

    The value of a monomial is its exponent pair; the value of a nonzero
    polynomial is the minimum term value under the group order; the value
    of a quotient is the difference, which is independent of the chosen
    representative.
    """

    def __init__(self, group):
        self.group = group

    @classmethod
    def rational(cls, vx, vy) -> "MonomialValuation":
        return cls(RationalRatioGroup(vx, vy))

    @classmethod
    def from_stream(cls, stream: CFStream, max_iters: int = 256) -> "MonomialValuation":
        return cls(StreamRatioGroup(stream, max_iters))

    @classmethod
    def lex(cls, vx: tuple[int, int], vy: tuple[int, int]) -> "MonomialValuation":
        return cls(LexZ2Group(vx, vy))

    def __call__(self, obj) -> Value:
        if isinstance(obj, Monomial):
            return Value(obj.ex, obj.ey)
        if isinstance(obj, LaurentPolynomial):
            if obj.is_zero:
                raise ZeroPolynomialError(
                    "the zero polynomial has value infinity, not a group element"
                )
            best: Value | None = None
            for mono, _ in obj.terms():
                v = Value(mono.ex, mono.ey)
                if best is None or self.group.compare(v, best) < 0:
                    best = v
            return best  # type: ignore[return-value]
        if isinstance(obj, RationalFunction):
            return self(obj.numerator) - self(obj.denominator)
        raise TypeError(f"cannot evaluate a valuation on {type(obj).__name__}")

    def compare(self, v1: Value, v2: Value) -> int:
        return self.group.compare(v1, v2)

    def sign(self, v: Value) -> int:
        return self.group.sign(v)

    def is_positive(self, obj) -> bool:
        return self.sign(self(obj)) > 0

    def describe(self) -> str:
        return self.group.describe()
