"""Residual tuples: a repunit-based numeration system for exponent vectors.

A residual r-tuple over base a is an integer vector (alpha_1, ..., alpha_r)
with 0 <= alpha_i <= a, where any coordinate equal to a (in position 2 or
higher) forces every lower coordinate to zero.  Writing R_j for the base-a
repunits, the map

    (alpha_1, ..., alpha_r)  ->  sum_j alpha_j * R_j

is a bijection onto {0, 1, ..., R_{r+1} - 1}, and the colexicographic
order on tuples agrees with the numeric order of the images.  The same
tuples, evaluated against tail-monoid generators instead of repunits,
describe Apery sets; that is done in the apery module.

Tuples are stored little-endian: coords[0] is alpha_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .core import TailMonoid, repunit
from .errors import LengthMismatch, NonPositive, OutOfRange


@dataclass(frozen=True)
class ResidualTuple:
    """A residual tuple together with the base it lives over."""

    base: int
    coords: tuple[int, ...]

    def __post_init__(self):
        a = self.base
        if a < 2:
            raise NonPositive(f"base must be >= 2, got {a}")
        saturated = None  # position (0-based) of a coordinate equal to a
        for i, x in enumerate(self.coords):
            if x < 0 or x > a:
                raise OutOfRange(f"coordinate {i + 1} is {x}, outside [0, {a}]")
            if x == a and i > 0:
                saturated = i
        if saturated is not None and any(self.coords[i] for i in range(saturated)):
            raise OutOfRange(
                f"coordinate {saturated + 1} equals the base, so all lower "
                "coordinates must be zero"
            )

    def __len__(self) -> int:
        return len(self.coords)

    def numeration_value(self) -> int:
        """sum_j alpha_j * R_j, the integer this tuple represents."""
        return sum(x * repunit(self.base, j + 1) for j, x in enumerate(self.coords))

    def _check_comparable(self, other: "ResidualTuple") -> None:
        if self.base != other.base:
            raise LengthMismatch(f"base mismatch: {self.base} vs {other.base}")
        if len(self.coords) != len(other.coords):
            raise LengthMismatch(
                f"length mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __lt__(self, other: "ResidualTuple") -> bool:
        self._check_comparable(other)
        return self.coords[::-1] < other.coords[::-1]

    def __le__(self, other: "ResidualTuple") -> bool:
        self._check_comparable(other)
        return self.coords[::-1] <= other.coords[::-1]


def colex_compare(t1: ResidualTuple, t2: ResidualTuple) -> int:
    """-1, 0 or 1 as t1 is below, equal to, or above t2 in colex order."""
    t1._check_comparable(t2)
    k1, k2 = t1.coords[::-1], t2.coords[::-1]
    return (k1 > k2) - (k1 < k2)


def count_all(a: int, r: int) -> int:
    """Number of residual r-tuples over base a, which is R_{r+1}."""
    return repunit(a, r + 1)


def decompose(t: int, a: int, r: int) -> ResidualTuple:
    """The unique residual r-tuple whose repunit expansion equals t.

    Greedy from the top coordinate: at index j the remainder is below
    R_{j+1} = a*R_j + 1, so floor(t / R_j) is at most a, and hitting a
    exactly leaves remainder zero, which makes the result residual
    without further checks.
    """
    if t < 0 or t >= count_all(a, r):
        raise OutOfRange(f"{t} is not in [0, R_{r + 1}) = [0, {count_all(a, r)})")
    coords = [0] * r
    for j in range(r, 0, -1):
        rj = repunit(a, j)
        q = t // rj
        coords[j - 1] = q
        t -= q * rj
    assert t == 0
    return ResidualTuple(a, tuple(coords))


def count_leq(bound: ResidualTuple) -> int:
    """How many residual tuples are <= bound in colex order: 1 + sum alpha_j R_j."""
    return 1 + bound.numeration_value()


def advance(coords: list[int], a: int) -> int:
    """Step `coords` to its colex successor in place.

    Returns the highest index whose value changed, or -1 if coords was
    already the maximum (0, ..., 0, a).  At most one coordinate can equal
    a; when one does, the block below it is saturated and the step is a
    carry, otherwise the step just bumps the lowest coordinate.
    """
    h = None
    for i, x in enumerate(coords):
        if x == a:
            h = i
            break
    if h is None:
        coords[0] += 1
        return 0
    if h == len(coords) - 1:
        return -1
    coords[h] = 0
    coords[h + 1] += 1
    return h + 1


def iter_tuples(a: int, r: int) -> Iterator[ResidualTuple]:
    """All residual r-tuples over base a, in increasing colex order."""
    if r == 0:
        yield ResidualTuple(a, ())
        return
    coords = [0] * r
    while True:
        yield ResidualTuple(a, tuple(coords))
        if advance(coords, a) < 0:
            return


def enumerate_leq(bound: ResidualTuple) -> Iterator[ResidualTuple]:
    """Residual tuples <= bound in colex order, lazily.

    Colex order coincides with numeration order, so the tuples below a
    bound are exactly the first count_leq(bound) of the full stream.
    """
    return islice(iter_tuples(bound.base, len(bound)), count_leq(bound))


def tuple_value(t: ResidualTuple, m: TailMonoid) -> int:
    """sum_j alpha_j * s_j against the generators of a tail monoid."""
    if t.base != m.a:
        raise LengthMismatch(f"tuple base {t.base} differs from monoid base {m.a}")
    return sum(x * m.term(j + 1) for j, x in enumerate(t.coords))
