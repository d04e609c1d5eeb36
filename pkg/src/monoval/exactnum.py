"""Exact rationals and continued fractions.

Rationals are stdlib ``fractions.Fraction`` values, which already keep the
lowest-terms, positive-denominator normal form the rest of the package
relies on.  On top of that live finite continued-fraction expansions
(digit tuples), lazily evaluated digit streams standing in for irrational
numbers, convergents, and a bracketing oracle that decides the sign of
``stream - rational`` without ever touching floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

Rational = Fraction

LESS = -1
GREATER = 1


class IndecisiveComparisonError(Exception):
    """Convergent brackets failed to separate a stream from a rational.

    Raised instead of guessing: the stream may actually equal the rational
    (breaking the caller's irrationality promise) or merely be adversarially
    close within the iteration budget.
    """

    def __init__(self, target: Fraction, iterations: int):
        super().__init__(
            f"could not separate stream from {target} within {iterations} convergents"
        )
        self.target = target
        self.iterations = iterations


@dataclass(frozen=True)
class CFExpansion:
    """A finite continued fraction ``[d0; d1, ..., dk]``.

    The leading digit may be any integer; every later digit must be at
    least 1.  Canonical form additionally requires the last digit to be
    at least 2 unless the expansion is a single digit, which makes the
    expansion of a rational number unique.
    """

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.digits:
            raise ValueError("expansion needs at least one digit")
        for i, d in enumerate(self.digits):
            if i >= 1 and d < 1:
                raise ValueError(f"digit {i} is {d}; digits past the first must be >= 1")

    @property
    def is_canonical(self) -> bool:
        return len(self.digits) == 1 or self.digits[-1] >= 2

    def digit_sum(self) -> int:
        return sum(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        head, *tail = self.digits
        if not tail:
            return f"[{head}]"
        return f"[{head}; {', '.join(str(d) for d in tail)}]"


class CFStream:
    """Digit source for an infinite continued fraction.

    ``source`` must be a pure function of the index (no hidden mutable
    state), producing an integer ``d0`` at index 0 and positive digits
    afterwards.  ``periodic`` optionally records an eventually periodic
    pattern ``(preperiod, period)``; produced digits are cross-checked
    against it.  Streams never materialize their value; consumers work
    through convergents.
    """

    def __init__(
        self,
        source: Callable[[int], int],
        periodic: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
    ):
        if periodic is not None:
            pre, per = tuple(periodic[0]), tuple(periodic[1])
            if not per:
                raise ValueError("period must be nonempty")
            periodic = (pre, per)
        self._source = source
        self.periodic = periodic

    @classmethod
    def from_periodic(cls, preperiod, period) -> "CFStream":
        """Stream for an eventually periodic digit sequence.

        ``preperiod`` holds at least the integer digit d0; ``period``
        repeats forever after it.
        """
        pre = tuple(int(d) for d in preperiod)
        per = tuple(int(d) for d in period)
        if not pre:
            raise ValueError("preperiod needs at least the integer digit d0")
        if not per:
            raise ValueError("period must be nonempty")
        if any(d < 1 for d in pre[1:]) or any(d < 1 for d in per):
            raise ValueError("digits past the first must be >= 1")

        def source(i: int, _pre=pre, _per=per) -> int:
            if i < len(_pre):
                return _pre[i]
            return _per[(i - len(_pre)) % len(_per)]

        return cls(source, periodic=(pre, per))

    def digit(self, i: int) -> int:
        if i < 0:
            raise IndexError("digit index must be nonnegative")
        d = int(self._source(i))
        if i >= 1 and d < 1:
            raise ValueError(f"stream produced digit {d} at index {i}; must be >= 1")
        if self.periodic is not None:
            pre, per = self.periodic
            expected = pre[i] if i < len(pre) else per[(i - len(pre)) % len(per)]
            if d != expected:
                raise ValueError(
                    f"digit source produced {d} at index {i}, periodic metadata says {expected}"
                )
        return d

    def __str__(self) -> str:
        if self.periodic is not None:
            pre, per = self.periodic
            head = ", ".join(str(d) for d in pre)
            body = ", ".join(str(d) for d in per)
            return f"[{head}; ({body})...]"
        return "<digit stream>"


def sqrt2_stream() -> CFStream:
    """The stream [1; 2, 2, 2, ...], whose value is the square root of 2."""
    return CFStream.from_periodic((1,), (2,))


def cf_expand(r) -> CFExpansion:
    """Expand a rational into its canonical continued fraction.

    Runs the floor/reciprocal recursion, which on a fraction a/b is the
    Euclidean algorithm on (a, b); the quotients are the digits.  The
    result always has last digit >= 2 (or is a single digit), so expanding
    then evaluating is the identity on rationals.
    """
    r = Fraction(r)
    digits = []
    n, d = r.numerator, r.denominator
    while True:
        q, rem = divmod(n, d)
        digits.append(q)
        if rem == 0:
            break
        n, d = d, rem
    return CFExpansion(tuple(digits))


def cf_value(cf: CFExpansion) -> Fraction:
    """Exact value of a finite expansion, folding the nested fraction."""
    digits = cf.digits
    value = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        value = d + 1 / value  # value >= 1 here, so never zero
    return value


def cf_canonicalize(cf: CFExpansion) -> CFExpansion:
    """Merge a trailing digit 1 into its predecessor; the value is unchanged.

    One merge suffices: the new last digit is the old next-to-last plus
    one, hence at least 2.
    """
    digits = cf.digits
    if len(digits) > 1 and digits[-1] == 1:
        return CFExpansion(digits[:-2] + (digits[-2] + 1,))
    return cf


def cf_alternate(cf: CFExpansion) -> CFExpansion:
    """The other expansion of the same value.

    A canonical expansion ``[..., d]`` becomes ``[..., d - 1, 1]``; one
    already ending in 1 collapses back to canonical form.  Both forms have
    the same digit sum.
    """
    digits = cf.digits
    if len(digits) > 1 and digits[-1] == 1:
        return cf_canonicalize(cf)
    return CFExpansion(digits[:-1] + (digits[-1] - 1, 1))


def cf_convergents(cf: Union[CFExpansion, CFStream], count: int) -> tuple[Fraction, ...]:
    """First ``count`` convergents, via the standard two-term recurrence.

    Convergents alternate around the limit: even-indexed ones from below,
    odd-indexed from above.  For a finite expansion ``count`` may not
    exceed the digit supply.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if isinstance(cf, CFExpansion) and count > len(cf.digits):
        raise ValueError(f"asked for {count} convergents but only {len(cf.digits)} digits exist")
    out = []
    h_prev, h_prev2 = 1, 0
    k_prev, k_prev2 = 0, 1
    for i in range(count):
        d = cf.digits[i] if isinstance(cf, CFExpansion) else cf.digit(i)
        h = d * h_prev + h_prev2
        k = d * k_prev + k_prev2
        out.append(Fraction(h, k))
        h_prev, h_prev2 = h, h_prev
        k_prev, k_prev2 = k, k_prev
    return tuple(out)


def stream_compare(rho: CFStream, t, max_iters: int = 256) -> int:
    """Sign of ``rho - t`` for an (assumed irrational) stream and a rational.

    Refines the convergent bracket around the stream value until ``t``
    falls outside it.  For irrational ``rho`` each even convergent is
    strictly below the value and each odd one strictly above, so hitting
    a bracket endpoint still decides.  Raises IndecisiveComparisonError
    after ``max_iters`` convergents rather than ever guessing.
    """
    t = Fraction(t)
    if max_iters < 1:
        raise ValueError("max_iters must be positive")
    h_prev, h_prev2 = 1, 0
    k_prev, k_prev2 = 0, 1
    for i in range(max_iters):
        d = rho.digit(i)
        h = d * h_prev + h_prev2
        k = d * k_prev + k_prev2
        c = Fraction(h, k)
        if i % 2 == 0:
            if t <= c:
                return GREATER
        else:
            if t >= c:
                return LESS
        h_prev, h_prev2 = h, h_prev
        k_prev, k_prev2 = k, k_prev
    raise IndecisiveComparisonError(t, max_iters)
