"""Sparse Laurent polynomials in two variables with exact coefficients.

Monomials are exponent pairs ``x^ex * y^ey`` (exponents may be negative),
polynomials are finite monomial-to-coefficient maps with ``Fraction``
coefficients, and a chart basis is a pair of monomials whose exponent
matrix is unimodular, giving a bijective change of lattice coordinates.
All values are immutable; term iteration is ordered so emitted artifacts
are bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial received zero."""


@dataclass(frozen=True)
class Monomial:
    """x^ex * y^ey as a point of the exponent lattice."""

    ex: int
    ey: int

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex + other.ex, self.ey + other.ey)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex - other.ex, self.ey - other.ey)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial(self.ex * n, self.ey * n)

    def inverse(self) -> "Monomial":
        return Monomial(-self.ex, -self.ey)

    @property
    def is_unit(self) -> bool:
        return self.ex == 0 and self.ey == 0

    def __str__(self) -> str:
        """Reduced fraction form, e.g. ``y^3/x^2``; exponent 1 suppressed."""
        num, den = [], []
        for name, e in (("x", self.ex), ("y", self.ey)):
            if e > 0:
                num.append(name if e == 1 else f"{name}^{e}")
            elif e < 0:
                den.append(name if e == -1 else f"{name}^{-e}")
        if not num and not den:
            return "1"
        num_s = "*".join(num) if num else "1"
        if not den:
            return num_s
        den_s = "*".join(den)
        if len(den) > 1:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"


UNIT = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)

TermMap = Union[Mapping, Iterable[Tuple]]


class LaurentPolynomial:
    """Finite map from monomials to nonzero rational coefficients.

    The empty map is the zero polynomial; zero coefficients are never
    stored.  Instances are immutable by convention and all arithmetic
    returns fresh values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermMap = ()):
        data: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(*mono)
            c = data.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                data[mono] = c
            elif mono in data:
                del data[mono]
        self._terms = data

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "LaurentPolynomial":
        return cls({UNIT: Fraction(c)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "LaurentPolynomial":
        return cls({mono: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted lexicographically on (ex, ey)."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].ex, kv[0].ey))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def min_exponents(self) -> tuple[int, int]:
        """Componentwise minimum of the exponents over all terms."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return (
            min(m.ex for m in self._terms),
            min(m.ey for m in self._terms),
        )

    def shift(self, mono: Monomial) -> "LaurentPolynomial":
        """Multiply by a single monomial."""
        return LaurentPolynomial({m * mono: c for m, c in self._terms.items()})

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        data = dict(self._terms)
        for m, c in other._terms.items():
            s = data.get(m, Fraction(0)) + c
            if s:
                data[m] = s
            elif m in data:
                del data[m]
        out = LaurentPolynomial()
        out._terms = data
        return out

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            data: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    s = data.get(m, Fraction(0)) + c1 * c2
                    if s:
                        data[m] = s
                    elif m in data:
                        del data[m]
            out = LaurentPolynomial()
            out._terms = data
            return out
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPolynomial()
            return LaurentPolynomial({m: c * other for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers live in RationalFunction")
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, c in self.terms():
            mag = abs(c)
            if mono.is_unit:
                piece = str(mag)
            elif mag == 1:
                piece = str(mono)
            else:
                piece = f"{mag}*{mono}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.terms())!r})"


@dataclass(frozen=True)
class ChartBasis:
    """Ordered pair of monomials whose exponent matrix has determinant +-1."""

    f: Monomial
    g: Monomial

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError(
                f"basis ({self.f}, {self.g}) has determinant {self.det}; need +-1"
            )

    @property
    def det(self) -> int:
        return self.f.ex * self.g.ey - self.g.ex * self.f.ey


IDENTITY_BASIS = ChartBasis(X, Y)


def lattice_solve(target: Monomial, basis: ChartBasis) -> tuple[int, int]:
    """Integer pair (alpha, beta) with ``basis.f**alpha * basis.g**beta == target``.

    Unimodularity makes the solution exist and be unique for every lattice
    point: the inverse of the exponent matrix is again integral.
    """
    d = basis.det  # +-1, so dividing by it is multiplying by it
    alpha = (basis.g.ey * target.ex - basis.g.ex * target.ey) * d
    beta = (basis.f.ex * target.ey - basis.f.ey * target.ex) * d
    return alpha, beta


def rewrite_in_chart(p: LaurentPolynomial, basis: ChartBasis) -> LaurentPolynomial:
    """Rewrite ``p`` so exponent pairs count powers of ``basis.f`` and ``basis.g``.

    Termwise lattice solve; the exponent map is a bijection, so this is a
    ring isomorphism on Laurent polynomials and substituting the basis
    monomials back recovers ``p`` exactly.
    """
    out: dict[Monomial, Fraction] = {}
    for mono, c in p._terms.items():
        alpha, beta = lattice_solve(mono, basis)
        out[Monomial(alpha, beta)] = c
    return LaurentPolynomial(out)


def expand_from_chart(p: LaurentPolynomial, basis: ChartBasis) -> LaurentPolynomial:
    """Inverse of :func:`rewrite_in_chart`: substitute the basis monomials back."""
    out: dict[Monomial, Fraction] = {}
    for mono, c in p._terms.items():
        target = basis.f ** mono.ex * basis.g ** mono.ey
        out[target] = out.get(target, Fraction(0)) + c
    return LaurentPolynomial(out)


def factor_monomial_content(p: LaurentPolynomial) -> tuple[Monomial, LaurentPolynomial]:
    """Split ``p`` into a monomial content and a primitive part.

    The primitive part has componentwise-minimal exponent 0 in each
    variable, and ``content * primitive == p`` exactly.
    """
    if p.is_zero:
        raise ZeroPolynomialError("zero polynomial has no monomial content")
    ex0, ey0 = p.min_exponents()
    content = Monomial(ex0, ey0)
    return content, p.shift(content.inverse())


class RationalFunction:
    """Quotient of two Laurent polynomials with nonzero denominator.

    Quotients stay unreduced (no gcd machinery); equality compares cross
    products, so the representative never matters.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPolynomial, denominator: LaurentPolynomial | None = None):
        if denominator is None:
            denominator = LaurentPolynomial.constant(1)
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(c))

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff=1) -> "RationalFunction":
        return cls(LaurentPolynomial.monomial(mono, coeff))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.numerator.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            if self.numerator.is_zero:
                raise ZeroDivisionError("cannot invert the zero rational function")
            return RationalFunction(self.denominator ** (-n), self.numerator ** (-n))
        return RationalFunction(self.numerator ** n, self.denominator ** n)

    def __str__(self) -> str:
        if self.denominator == LaurentPolynomial.constant(1):
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"
