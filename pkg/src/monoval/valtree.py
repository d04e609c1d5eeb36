"""The tree of coordinate rings k[f, g] and its positive paths.

The tree is rooted at k[x, y]; a vertex k[f, g] has children k[f, g/f]
and k[g, f/g].  It is never materialized: children are generated on
demand.  Given a valuation with positive values on x and y, the vertices
all of whose generators have strictly positive value form a path.  The
walk down that path, its decomposition into monotone branches, and the
match between branch lengths and continued-fraction digits live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import gcd
from typing import Iterator, Optional

from .exactnum import CFExpansion, cf_expand
from .laurent import ChartBasis, Monomial, X, Y
from .valuation import LexZ2Group, MonomialValuation, Value


class TreeVertex:
    """Ring k[f, g], named by its two generators; identity ignores order."""

    __slots__ = ("f", "g")

    def __init__(self, f: Monomial, g: Monomial):
        det = f.ex * g.ey - g.ex * f.ey
        if abs(det) != 1:
            raise ValueError(f"generators ({f}, {g}) are not unimodular (det {det})")
        self.f = f
        self.g = g

    @property
    def generators(self) -> tuple[Monomial, Monomial]:
        return (self.f, self.g)

    def basis(self) -> ChartBasis:
        return ChartBasis(self.f, self.g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreeVertex):
            return NotImplemented
        return {self.f, self.g} == {other.f, other.g}

    def __hash__(self) -> int:
        return hash(frozenset((self.f, self.g)))

    def __str__(self) -> str:
        return f"k[{self.f}, {self.g}]"

    def __repr__(self) -> str:
        return f"TreeVertex({self.f!r}, {self.g!r})"


ROOT = TreeVertex(X, Y)


@dataclass(frozen=True)
class PositivePath:
    """Ordered vertices of the positive path, starting at k[x, y].

    ``complete`` is False when the walk stopped at the step budget with
    more path remaining; truncation is always explicit, never silent.
    """

    vertices: tuple[TreeVertex, ...]
    complete: bool

    @property
    def status(self) -> str:
        return "complete" if self.complete else "truncated"

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]


@dataclass(frozen=True)
class Branch:
    """Maximal run of path vertices of the form k[s, t/s^m], m = 1..length."""

    s: Monomial
    t: Monomial
    length: int


@dataclass(frozen=True)
class CorrespondenceReport:
    """Branch lengths versus continued-fraction digits for one ratio."""

    a: int
    b: int
    branch_lengths: tuple[int, ...]
    cf_digits: tuple[int, ...]
    expected_lengths: tuple[int, ...]
    match: bool


def children(v: TreeVertex) -> tuple[TreeVertex, TreeVertex]:
    """The two child rings k[f, g/f] and k[g, f/g]; both unimodular."""
    return (TreeVertex(v.f, v.g / v.f), TreeVertex(v.g, v.f / v.g))


def positive_child(nu: MonomialValuation, v: TreeVertex) -> Optional[TreeVertex]:
    """The unique positive child, or None when nu(f) = nu(g).

    At a positive vertex with nu(f) != nu(g) exactly one of the quotients
    f/g, g/f has positive value, so exactly one child is positive.  With
    equal values both quotients have value 0 and the path ends here.
    """
    vf, vg = nu(v.f), nu(v.g)
    if nu.sign(vf) <= 0 or nu.sign(vg) <= 0:
        raise ValueError(f"{v} is not positive for {nu.describe()}")
    c = nu.compare(vf, vg)
    if c == 0:
        return None
    if c > 0:
        return TreeVertex(v.g, v.f / v.g)
    return TreeVertex(v.f, v.g / v.f)


def _walk(nu: MonomialValuation) -> Iterator[TreeVertex]:
    """Yield the positive path from the root, never re-deriving signs.

    The generator values evolve by (max, min) -> (min, max - min), so one
    comparison per step both picks the child and maintains positivity.
    """
    vf, vg = nu(X), nu(Y)
    if nu.sign(vf) <= 0 or nu.sign(vg) <= 0:
        raise ValueError("k[x, y] is not positive: nu(x) and nu(y) must be positive")
    vertex = ROOT
    yield vertex
    while True:
        c = nu.compare(vf, vg)
        if c == 0:
            return
        if c > 0:
            vertex = TreeVertex(vertex.g, vertex.f / vertex.g)
            vf, vg = vg, vf - vg
        else:
            vertex = TreeVertex(vertex.f, vertex.g / vertex.f)
            vf, vg = vf, vg - vf
        yield vertex


def positive_path(nu: MonomialValuation, max_steps: int = 64) -> PositivePath:
    """Walk the positive path, visiting at most ``max_steps`` vertices.

    A rational ratio gives a finite path (walk until the two generator
    values coincide); an irrational one never terminates and the result
    is reported truncated.  Equal values on x and y are rejected up front:
    there is no path to build, only the bare root.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    if nu.compare(nu(X), nu(Y)) == 0:
        raise ValueError("nu(x) = nu(y) is degenerate for path construction")
    vertices: list[TreeVertex] = []
    walker = _walk(nu)
    for vertex in walker:
        vertices.append(vertex)
        if len(vertices) == max_steps:
            break
    else:
        return PositivePath(tuple(vertices), complete=True)
    try:
        next(walker)
        complete = False
    except StopIteration:
        complete = True
    return PositivePath(tuple(vertices), complete=complete)


def branch_decomposition(path: PositivePath) -> tuple[Branch, ...]:
    """Split a path into its monotone branches, in path order.

    Each vertex past the root shares exactly one generator with its
    predecessor; maximal runs with the same shared generator s form the
    branch B(s, t), where t is recovered from the run's first vertex
    {s, t/s}.  The root k[x, y] counts as the m = 0 member of the first
    branch and contributes no length.
    """
    verts = path.vertices
    if len(verts) < 2:
        raise ValueError("need at least two vertices to decompose")
    branches: list[Branch] = []
    pivot: Monomial | None = None
    t_mono: Monomial | None = None
    length = 0
    for prev, cur in zip(verts, verts[1:]):
        prev_gens = {prev.f, prev.g}
        if cur.f in prev_gens:
            shared, other = cur.f, cur.g
        elif cur.g in prev_gens:
            shared, other = cur.g, cur.f
        else:
            raise ValueError(f"{prev} and {cur} are not parent and child")
        if shared == pivot:
            length += 1
        else:
            if pivot is not None:
                branches.append(Branch(pivot, t_mono, length))
            pivot, t_mono, length = shared, shared * other, 1
    branches.append(Branch(pivot, t_mono, length))
    return tuple(branches)


def cf_correspondence_check(a: int, b: int) -> CorrespondenceReport:
    """Compare branch lengths from a direct walk with the digits of a/b.

    The expected lengths are the canonical digits with the last one
    decremented (equivalently, the longer expansion ending in 1, dropped);
    a trailing zero-length branch is dropped.
    """
    a, b = int(a), int(b)
    if not (a > b >= 1):
        raise ValueError("need a > b >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    nu = MonomialValuation.rational(a, b)
    path = positive_path(nu, max_steps=a + b)
    lengths = tuple(br.length for br in branch_decomposition(path))
    cf = cf_expand(Fraction(a, b))
    expected = list(cf.digits)
    expected[-1] -= 1
    if expected and expected[-1] == 0:
        expected.pop()
    expected_t = tuple(expected)
    return CorrespondenceReport(a, b, lengths, cf.digits, expected_t, lengths == expected_t)


def lex_valuation_from_tail(f: Monomial, g: Monomial) -> MonomialValuation:
    """Z^2-valued valuation whose positive path runs through every k[f, g/f^t].

    Solves for nu(x), nu(y) in Z^2 so that nu(f) = (0, 1) and
    nu(g) = (1, 0); then nu(g/f^t) = (1, -t) is lexicographically positive
    for every t, so the path never leaves the tail.
    """
    basis = ChartBasis(f, g)  # validates unimodularity
    d = basis.det
    # Rows of the inverse exponent matrix applied to ((0,1), (1,0)).
    vx = (-f.ey * d, g.ey * d)
    vy = (f.ex * d, -g.ex * d)
    nu = MonomialValuation.lex(vx, vy)
    assert nu.group.realize(Value(f.ex, f.ey)) == (0, 1)
    assert nu.group.realize(Value(g.ex, g.ey)) == (1, 0)
    return nu
