"""Numerical semigroups given by generators.

A semigroup is stored as its generators plus a dense membership table up to
the conductor; everything at or beyond the conductor is a member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptyGenerators, GeneratorTooLarge, MNotInSemigroup, NotNumerical

DEFAULT_MAX_GENERATOR = 10**6


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    minimal_generators: tuple[int, ...]
    conductor: int
    membership: tuple[bool, ...] = field(repr=False)

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self.membership[n]

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.conductor) if not self.membership[n])

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def is_self_dual(self) -> bool:
        return 2 * self.genus == self.conductor

    def is_whole(self) -> bool:
        """True for the semigroup of all naturals."""
        return self.conductor == 0

    def elements(self, upto: int) -> list[int]:
        """Members of S in ``[0, upto]``."""
        return [n for n in range(upto + 1) if self.contains(n)]

    def apery_set(self, m: int | None = None) -> tuple[int, ...]:
        """Least member of each residue class mod ``m`` (default: multiplicity)."""
        if m is None:
            m = self.multiplicity
        if m < 1 or not self.contains(m):
            raise MNotInSemigroup(f"{m} is not a positive element of the semigroup")
        out = []
        for r in range(m):
            n = r
            while not self.contains(n):
                n += m
            out.append(n)
        return tuple(out)

    def frobenius_and_conductor(self) -> tuple[int, int]:
        return self.frobenius, self.conductor

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self):
        return hash(self.minimal_generators)

    def __str__(self):
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"


def _membership_table(gens: Sequence[int]) -> tuple[list[bool], int]:
    """Forward DP until ``min(gens)`` consecutive members are seen.

    Returns the table up to (excluding) the conductor and the conductor.
    """
    m = gens[0]
    table = [True]
    run = 1
    n = 0
    while run < m:
        n += 1
        member = any(table[n - g] for g in gens if g <= n)
        table.append(member)
        run = run + 1 if member else 0
    # table[n - m + 1 .. n] are the m consecutive members
    conductor = n - m + 1
    return table[:conductor], conductor


def from_generators(gens: Iterable[int], max_generator: int | None = DEFAULT_MAX_GENERATOR) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if max_generator is not None and gens[-1] > max_generator:
        raise GeneratorTooLarge(f"generator {gens[-1]} exceeds the cap {max_generator}")
    g = math.gcd(*gens)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}; the complement is infinite")

    table, conductor = _membership_table(gens)

    def member(n):
        return n >= conductor or (n >= 0 and table[n])

    # a generator is redundant iff it is a sum of two nonzero members
    minimal = []
    for gen in gens:
        if not any(member(s) and member(gen - s) for s in range(1, gen // 2 + 1)):
            minimal.append(gen)

    return NumericalSemigroup(
        generators=tuple(gens),
        minimal_generators=tuple(minimal),
        conductor=conductor,
        membership=tuple(table),
    )


def naturals() -> NumericalSemigroup:
    return from_generators([1])


def omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    count = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    if n > 1:
        count += 1
    return count


def in_generated(n: int, gens: Sequence[int]) -> bool:
    """Membership of ``n`` in the (not necessarily numerical) monoid ``<gens>``."""
    if n < 0:
        return False
    reach = [False] * (n + 1)
    reach[0] = True
    for k in range(1, n + 1):
        reach[k] = any(g <= k and reach[k - g] for g in gens)
    return reach[n]
