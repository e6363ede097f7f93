"""Sequence parameters, tail monoids and exact term arithmetic.

The objects here describe sequences x_n = c*a**n - d (a >= 2, c, d >= 1)
and the submonoids of the naturals generated by their tails.  For a fixed
tail index n >= 1 the generators are

    s_j = c*a**(n+j) - d,   j = 0, 1, 2, ...

and they satisfy the recurrence s_{j+1} = a*s_j + (a-1)*d.  All arithmetic
is exact: terms grow geometrically and routinely exceed machine words.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BaseTooSmall, FirstTermNonPositive, NonPositive, NotCoprime


def repunit(a: int, n: int) -> int:
    """Base-a repunit 1 + a + ... + a**(n-1); zero for n == 0."""
    if a < 2:
        raise BaseTooSmall(f"repunit base must be >= 2, got {a}")
    if n < 0:
        raise NonPositive(f"repunit index must be >= 0, got {n}")
    return (a**n - 1) // (a - 1)


@dataclass(frozen=True)
class SequenceParams:
    """Validated triple (a, c, d) defining the sequence x_n = c*a**n - d.

    Constraints: a >= 2; c, d >= 1; d < c*a so the first term is positive;
    and d coprime to both a and c.  Triples where d shares a factor with a
    or c are rejected rather than reduced, so the caller always knows which
    sequence is being analyzed.
    """

    a: int
    c: int
    d: int

    def __post_init__(self):
        if self.a < 2:
            raise BaseTooSmall(f"base a must be >= 2, got {self.a}")
        if self.c < 1:
            raise NonPositive(f"c must be a positive integer, got {self.c}")
        if self.d < 1:
            raise NonPositive(f"d must be a positive integer, got {self.d}")
        if self.d >= self.c * self.a:
            raise FirstTermNonPositive(
                f"need d < c*a for a positive first term, got d={self.d} >= {self.c * self.a}"
            )
        if gcd(self.d, self.a) > 1:
            raise NotCoprime(f"gcd(d, a) = {gcd(self.d, self.a)} > 1")
        if gcd(self.d, self.c) > 1:
            raise NotCoprime(f"gcd(d, c) = {gcd(self.d, self.c)} > 1")


def validate_params(a: int, c: int, d: int) -> SequenceParams:
    """Check a raw (a, c, d) triple and return it as SequenceParams."""
    return SequenceParams(a, c, d)


@dataclass(frozen=True)
class TailMonoid:
    """The submonoid generated by the n-tail of a sequence c*a**n - d.

    Instances are immutable value objects; generators are produced on
    demand by term().
    """

    params: SequenceParams
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise NonPositive(f"tail index n must be >= 1, got {self.n}")

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def c(self) -> int:
        return self.params.c

    @property
    def d(self) -> int:
        return self.params.d

    def term(self, j: int) -> int:
        """Generator s_j = c*a**(n+j) - d, computed by fast exponentiation."""
        if j < 0:
            raise NonPositive(f"generator index must be >= 0, got {j}")
        return self.c * self.a ** (self.n + j) - self.d

    def terms(self, count: int) -> list[int]:
        """The first `count` generators s_0, ..., s_{count-1}."""
        return [self.term(j) for j in range(count)]

    @property
    def e(self) -> int:
        """gcd of the whole monoid, which equals gcd(s_0, a - 1)."""
        return gcd(self.term(0), self.a - 1)


def tail_monoid(a: int, c: int, d: int, n: int) -> TailMonoid:
    """Validate raw integers and build the tail monoid S_n."""
    return TailMonoid(validate_params(a, c, d), n)


def monoid_gcd(m: TailMonoid) -> int:
    """gcd(S_n); it divides every generator and equals gcd(s_0, a - 1)."""
    return m.e
