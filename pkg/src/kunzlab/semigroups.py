"""Numerical semigroups and their notable invariants.

A numerical semigroup is a subset of the nonnegative integers that
contains 0, is closed under addition, and misses only finitely many
integers.  It is stored here by its conductor c (the least x with
x + N contained in S) together with every element below c; membership
above the conductor is computed, never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, NotCofinite, ResourceBound

DEFAULT_SEARCH_CEILING = 10_000_000


@dataclass(frozen=True)
class AperyData:
    """Least elements of S per residue class modulo the multiplicity.

    values[i] is the least element congruent to i (mod m); values[0] is
    always 0.  kunz[i-1] is the coefficient k_i in values[i] = k_i*m + i,
    a positive integer for every 0 < i < m.
    """

    values: tuple[int, ...]
    kunz: tuple[int, ...]


@dataclass(frozen=True)
class NumericalSemigroup:
    small_elements: tuple[int, ...]
    conductor: int

    def __post_init__(self):
        small = self.small_elements
        if not small or small[0] != 0:
            raise DomainError("small_elements must start with 0")
        if list(small) != sorted(set(small)):
            raise DomainError("small_elements must be strictly ascending")
        if small[-1] != self.conductor:
            raise DomainError("conductor must be the last small element")
        members = set(small)
        for a in small:
            for b in small:
                if a + b <= self.conductor and a + b not in members:
                    raise DomainError(
                        f"not closed under addition: {a} + {b} = {a + b} missing"
                    )

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.small_elements)

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def contains(self, x: int) -> bool:
        """Membership test; true for every x >= conductor."""
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return x in self._member_set

    @property
    def multiplicity(self) -> int:
        """Least positive element; 1 when S is all of N."""
        if self.conductor == 0:
            return 1
        return self.small_elements[1]

    @property
    def frobenius(self) -> int:
        """Largest integer outside S; -1 when S is all of N."""
        return self.conductor - 1

    @property
    def depth(self) -> int:
        """ceil(conductor / multiplicity); 0 exactly for S = N."""
        return -(-self.conductor // self.multiplicity)

    @property
    def genus(self) -> int:
        """Number of gaps (positive integers outside S)."""
        return self.conductor - (len(self.small_elements) - 1)

    def gaps(self) -> list[int]:
        return [x for x in range(1, self.conductor) if x not in self._member_set]

    @cached_property
    def apery(self) -> AperyData:
        """Apery set with respect to the multiplicity, plus the Kunz
        coefficients read off from it."""
        m = self.multiplicity
        values: list[int | None] = [None] * m
        found = 0
        x = 0
        # every residue minimum lies at or below conductor + m - 1
        while found < m:
            r = x % m
            if values[r] is None and self.contains(x):
                values[r] = x
                found += 1
            x += 1
        out = tuple(v for v in values if v is not None)
        kunz = tuple((out[i] - i) // m for i in range(1, m))
        return AperyData(values=out, kunz=kunz)

    def to_json_dict(self) -> dict:
        """Wire form; field order is part of the interface."""
        ap = self.apery
        return {
            "small_elements": list(self.small_elements),
            "conductor": self.conductor,
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "depth": self.depth,
            "apery": list(ap.values),
            "kunz": list(ap.kunz),
            "genus": self.genus,
        }

    def __repr__(self) -> str:
        return f"NumericalSemigroup(small_elements={self.small_elements!r})"


NATURALS = NumericalSemigroup(small_elements=(0,), conductor=0)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Least submonoid of N containing ``gens``.

    Raises NotCofinite when gcd(gens) != 1 (the complement would be
    infinite) and DomainError on an empty or nonpositive generator set.
    """
    gen_list = sorted(set(gens))
    if not gen_list:
        raise DomainError("need at least one generator")
    if gen_list[0] < 1:
        raise DomainError("generators must be positive integers")
    if math.gcd(*gen_list) != 1:
        raise NotCofinite(f"gcd of {gen_list} is {math.gcd(*gen_list)}, not 1")

    m = gen_list[0]
    # Reachability by dynamic programming on [0, bound].  min*max already
    # exceeds the classical bound on the largest non-representable sum for
    # any coprime generating set; the window check below re-verifies that
    # and widens the table if it ever were too small.
    bound = max(m * gen_list[-1], 1)
    while True:
        reachable = bytearray(bound + 1)
        reachable[0] = 1
        for x in range(1, bound + 1):
            for g in gen_list:
                if g > x:
                    break
                if reachable[x - g]:
                    reachable[x] = 1
                    break
        last_gap = 0
        for x in range(bound, 0, -1):
            if not reachable[x]:
                last_gap = x
                break
        conductor = last_gap + 1 if last_gap else 0
        # m consecutive members starting at the conductor pin down
        # everything above it
        if conductor + m - 1 <= bound and all(
            reachable[conductor + t] for t in range(m)
        ):
            small = tuple(x for x in range(conductor + 1) if reachable[x])
            return NumericalSemigroup(small_elements=small, conductor=conductor)
        bound *= 2


def enumerate_semigroups(
    max_multiplicity: int,
    max_depth: int,
    *,
    search_ceiling: int = DEFAULT_SEARCH_CEILING,
) -> list[NumericalSemigroup]:
    """Every numerical semigroup with multiplicity <= max_multiplicity and
    depth <= max_depth, by brute force over gap sets.

    For each candidate multiplicity m the search decides membership of
    every integer in (m, m*max_depth) one position at a time, pruning a
    branch as soon as declaring x a gap would break additive closure
    (some a + b = x with a, b already members).  Nothing here knows about
    Kunz coordinates, so the word-side census can be checked against this
    one as an independent oracle.

    Output is sorted ascending-lexicographically by small_elements.
    Raises ResourceBound if the search tree exceeds ``search_ceiling``
    nodes.
    """
    if max_multiplicity < 1:
        raise DomainError("max_multiplicity must be >= 1")
    if max_depth < 0:
        raise DomainError("max_depth must be >= 0")

    results: list[NumericalSemigroup] = [NATURALS]
    nodes = 0

    def finalize(m: int, members: list[int], gap_max: int) -> None:
        # the conductor itself may sit at the search bound, one past the
        # last decided position
        conductor = gap_max + 1
        small = tuple(x for x in members if x < conductor) + (conductor,)
        results.append(NumericalSemigroup(small_elements=small, conductor=conductor))

    def extend(m: int, bound: int, members: list[int], member_set: set[int],
               x: int, gap_max: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > search_ceiling:
            raise ResourceBound(
                f"gap-set search exceeded {search_ceiling} nodes"
            )
        if x >= bound:
            finalize(m, members, gap_max)
            return
        # x joins S
        members.append(x)
        member_set.add(x)
        extend(m, bound, members, member_set, x + 1, gap_max)
        member_set.discard(x)
        members.pop()
        # x stays a gap, unless closure already forces it in
        for a in members:
            if a == 0:
                continue
            if a * 2 > x:
                break
            if (x - a) in member_set:
                return
        extend(m, bound, members, member_set, x + 1, x)

    for m in range(2, max_multiplicity + 1):
        if max_depth < 1:
            break  # every semigroup with a gap has depth >= 1
        bound = m * max_depth
        # 1 .. m-1 are gaps by definition of the multiplicity
        extend(m, bound, [0, m], {0, m}, m + 1, m - 1)

    results.sort(key=lambda s: s.small_elements)
    return results
