"""Explicit valuation-ring computations for integer monomial valuations.

For coprime integers a > b >= 1 and nu(x) = a, nu(y) = b, the ring of
elements with nonnegative value is generated (after localizing at the
ideal of the value-1 generator) by the two monomials

    u = y^a / x^b   (value 0)        v = x^p / y^q   (value 1),

where (p, q) is the minimal positive solution of p*a - q*b = 1.  This
module computes that presentation and decides membership three ways:
structurally by factoring out v-powers after a chart rewrite, directly
by the sign of the value, and for monomials under irrational ratios by
searching the positive path for a vertex ring that contains them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import gcd
from typing import NamedTuple, Optional

from .laurent import (
    ChartBasis,
    Monomial,
    RationalFunction,
    ZeroPolynomialError,
    lattice_solve,
    rewrite_in_chart,
)
from .valuation import MonomialValuation
from .valtree import _walk


@dataclass(frozen=True)
class RingPresentation:
    """Generator pair (u, v) of the valuation ring for nu(x) = a, nu(y) = b.

    The localization prime is the principal ideal generated by v.
    """

    u: Monomial
    v: Monomial
    p: int
    q: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"({self.a}, {self.b}) are not coprime")
        if self.p * self.a - self.q * self.b != 1:
            raise ValueError(f"p*a - q*b = {self.p * self.a - self.q * self.b}, expected 1")
        if self.u != Monomial(-self.b, self.a) or self.v != Monomial(self.p, -self.q):
            raise ValueError("generators do not match the exponent data")
        # det(u, v) = q*b - p*a = -1, so (u, v) is automatically unimodular

    def basis(self) -> ChartBasis:
        return ChartBasis(self.u, self.v)


class StructuralMembership(NamedTuple):
    member: bool
    gap: int


def bezout(a: int, b: int) -> tuple[int, int]:
    """Minimal positive (p, q) with p*a - q*b = 1, for coprime a > b >= 1.

    Any other solution differs by a multiple of (b, a) and presents the
    same localized ring; minimality makes outputs canonical.
    """
    a, b = int(a), int(b)
    if not (a > b >= 1):
        raise ValueError("need a > b >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    if b == 1:
        return 1, a - 1
    p = pow(a, -1, b)  # smallest positive inverse of a modulo b
    q = (p * a - 1) // b
    return p, q


def ring_generators(a: int, b: int) -> RingPresentation:
    """The presentation u = y^a/x^b, v = x^p/y^q with (p, q) from bezout."""
    p, q = bezout(a, b)
    return RingPresentation(
        u=Monomial(-b, a), v=Monomial(p, -q), p=p, q=q, a=int(a), b=int(b)
    )


def membership_structural(r: RationalFunction, pres: RingPresentation) -> StructuralMembership:
    """Decide membership by factoring v-powers out of a chart rewrite.

    Rewrites numerator and denominator in (u, v) coordinates, reads off
    the maximal v-power dividing each, and compares: with n and m the two
    v-exponents, the quotient is v^(n-m) times a unit of the localization,
    so membership is n >= m and the gap n - m equals the value of r.
    """
    if r.numerator.is_zero:
        raise ZeroPolynomialError("numerator is zero; the value is infinite")
    basis = pres.basis()
    num = rewrite_in_chart(r.numerator, basis)
    den = rewrite_in_chart(r.denominator, basis)
    n = min(mono.ey for mono in num.monomials())
    m = min(mono.ey for mono in den.monomials())
    return StructuralMembership(member=n >= m, gap=n - m)


def membership_by_value(r: RationalFunction, nu: MonomialValuation) -> bool:
    """Membership straight from the definition: nu(r) >= 0.

    The zero function has value infinity and belongs to every valuation
    ring, so it is a member even though it has no finite value.
    """
    if r.numerator.is_zero:
        return True
    return nu.sign(nu(r)) >= 0


def membership_union(
    mono: Monomial, nu: MonomialValuation, max_steps: int = 64
) -> Optional[int]:
    """Index of the first positive-path vertex whose ring contains ``mono``.

    A monomial lies in the localized vertex ring exactly when its chart
    exponents there are both nonnegative (units of the localization carry
    a nonzero constant term, which forces the monomial itself into the
    ring).  Examines at most ``max_steps`` vertices and returns None when
    none of them works, which for a finite (rational-ratio) path may
    simply mean the monomial needs the localization of the terminal
    presentation instead.
    """
    for index, vertex in enumerate(islice(_walk(nu), max_steps)):
        alpha, beta = lattice_solve(mono, vertex.basis())
        if alpha >= 0 and beta >= 0:
            return index
    return None
