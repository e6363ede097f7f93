"""Brute-force numerical-semigroup oracle.

Ground truth for membership, Apery sets, Frobenius numbers, genus and
minimal generating sets of an arbitrary list of positive generators.  The
engine is a shortest-path relaxation over residue classes modulo the
smallest generator: table[r] is the least monoid element congruent to r.
One relaxation pass per generator suffices when each cycle is walked
starting from its current minimum, so the whole build costs O(q) exact
integer operations per generator, where q is the smallest scaled
generator.  Only q must fit in memory; the other generators may be
arbitrarily large.

Everything here is deliberately independent of the residual-tuple
machinery so it can arbitrate disagreements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import DeskScaleExceeded, EmptyGenerators, NonPositive

INF = float("inf")

#: Refuse tables larger than this unless the caller raises the cap.
DEFAULT_CAP = 10_000_000


class ResidueTable:
    """Least element of a growing monoid in each residue class mod q.

    Starts as the table of <q> (only class 0 reachable) and absorbs one
    generator at a time.  Unreached classes hold float infinity, which
    compares correctly against exact ints of any size.
    """

    def __init__(self, q: int):
        if q < 1:
            raise NonPositive(f"modulus must be positive, got {q}")
        self.q = q
        self.table: list = [INF] * q
        self.table[0] = 0

    def add_generator(self, gen: int) -> None:
        """One relaxation pass with steps of `gen` over every residue cycle."""
        q, table = self.q, self.table
        step = gen % q
        if step == 0:
            return
        cycles = gcd(q, step)
        length = q // cycles
        for start in range(cycles):
            p = start
            best_p, best = p, table[p]
            for _ in range(length - 1):
                p = (p + step) % q
                if table[p] < best:
                    best_p, best = p, table[p]
            if best is INF:
                continue
            p, val = best_p, best
            for _ in range(length - 1):
                val += gen
                p = (p + step) % q
                if val < table[p]:
                    table[p] = val
                else:
                    val = table[p]

    def member(self, x: int) -> bool:
        """Is x in the monoid generated by q and the absorbed generators?"""
        if x < 0:
            return False
        return x >= self.table[x % self.q]


@dataclass(frozen=True)
class OracleMonoid:
    """A generator list with its gcd divided out and its Apery table built.

    apery_table[r] is the least element of the scaled monoid congruent to
    r modulo the smallest scaled generator q.  Because the scaled
    generators are coprime as a set, every class is reachable and the
    table is finite, so Frobenius number and genus of the scaled
    numerical semigroup read off directly.
    """

    generators: tuple[int, ...]
    g: int
    scaled: tuple[int, ...]
    apery_table: list[int] = field(compare=False)

    @classmethod
    def build(cls, generators, cap: int = DEFAULT_CAP) -> "OracleMonoid":
        gens = sorted(generators)
        if not gens:
            raise EmptyGenerators("need at least one generator")
        if gens[0] < 1:
            raise NonPositive(f"generators must be positive, got {gens[0]}")
        g = 0
        for x in gens:
            g = gcd(g, x)
        scaled = sorted({x // g for x in gens})
        q = scaled[0]
        if q > cap:
            raise DeskScaleExceeded(
                f"smallest scaled generator {q} exceeds the cap {cap}"
            )
        rt = ResidueTable(q)
        for x in scaled[1:]:
            rt.add_generator(x)
        assert all(w is not INF for w in rt.table), "scaled gcd must be 1"
        return cls(tuple(gens), g, tuple(scaled), rt.table)

    @property
    def q(self) -> int:
        """Smallest scaled generator; also the Apery table size."""
        return self.scaled[0]

    def membership(self, x: int) -> bool:
        """Is x an element of the original (unscaled) monoid?"""
        if x < 0:
            return False
        if x % self.g:
            return False
        y = x // self.g
        return y >= self.apery_table[y % self.q]

    def frobenius(self) -> int:
        """Frobenius number of the scaled numerical semigroup; -1 for N."""
        return max(self.apery_table) - self.q

    def genus(self) -> int:
        """Number of gaps of the scaled numerical semigroup."""
        total = sum(self.apery_table)
        num = total - self.q * (self.q - 1) // 2
        assert num % self.q == 0
        return num // self.q

    def minimal_generators(self) -> list[int]:
        """The unique minimal generating set of the original monoid.

        Ascending filter: a generator is redundant exactly when it lies in
        the monoid generated by the (kept) generators below it, since
        larger generators cannot take part in a representation.
        """
        rt = ResidueTable(self.q)
        kept = [self.q]
        for x in self.scaled[1:]:
            if not rt.member(x):
                kept.append(x)
                rt.add_generator(x)
        return [x * self.g for x in kept]
