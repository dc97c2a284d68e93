"""Counting and constructing balanced symmetric functions over GF(p).

Multiset classes group into orbits under permutation of the symbol counts;
an orbit is described by its multiplicity vector (how many counts equal
each value l).  When gcd(n, p) = 1 every orbit size is divisible by p, so
each orbit splits into p equal groups of classes; assigning output value g
to group g balances every orbit and hence the function.  The number of
such splits is the product lower bound; brute-force counting provides the
oracle at desk scales.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import BudgetError, InternalCheckError, OrbitSplitError
from .exactnum import binom, exact_div, is_prime
from .symfun import MultisetClass, SymmetricFunction, enumerate_classes

BRUTE_MAX_BITS = 96


def count_symmetric(p: int, n: int) -> int:
    """p^C(p+n-1, n): one free output value per multiset class."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    return p ** binom(p + n - 1, n)


def count_balanced_all(p: int, n: int) -> int:
    """Balanced functions GF(p)^n -> GF(p), symmetric or not:
    (p^n)! / ((p^(n-1))!)^p."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 1:
        raise ValueError("balance needs n >= 1")
    return exact_div(math.factorial(p ** n), math.factorial(p ** (n - 1)) ** p)


@dataclass(frozen=True)
class MVector:
    """Multiplicities of count values within one class: m[l] counts the
    symbols appearing exactly l times."""

    p: int
    n: int
    m: tuple[int, ...]

    def __post_init__(self):
        if len(self.m) != self.n + 1:
            raise ValueError("m must have n + 1 entries")
        if any(q < 0 for q in self.m):
            raise ValueError("multiplicities must be non-negative")
        if sum(self.m) != self.p:
            raise ValueError("multiplicities must sum to p")
        if sum(l * q for l, q in enumerate(self.m)) != self.n:
            raise ValueError("weighted multiplicities must sum to n")


def mvector_of(cls: MultisetClass) -> MVector:
    """Multiplicity vector of a class's count multiset."""
    return MVector(cls.p, cls.n,
                   tuple(cls.counts.count(l) for l in range(cls.n + 1)))


def orbit_size(mv: MVector) -> int:
    """Number of classes sharing this count multiset: p! / prod m_l!."""
    denom = math.prod(math.factorial(q) for q in mv.m)
    return exact_div(math.factorial(mv.p), denom)


def check_divisibility(mv: MVector) -> bool:
    """Whether p divides the orbit size."""
    return orbit_size(mv) % mv.p == 0


def enumerate_mvectors(p: int, n: int) -> list[MVector]:
    """All multiplicity vectors with sum p and weighted sum n, by DFS with
    both constraints pruned incrementally; sorted for determinism."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    found: list[tuple[int, ...]] = []
    m = [0] * (n + 1)

    def descend(l: int, count_left: int, weight_left: int) -> None:
        if l == 0:
            if weight_left == 0:
                m[0] = count_left
                found.append(tuple(m))
                m[0] = 0
            return
        for q in range(min(count_left, weight_left // l) + 1):
            m[l] = q
            descend(l - 1, count_left - q, weight_left - q * l)
        m[l] = 0

    descend(n, p, n)
    return [MVector(p, n, t) for t in sorted(found)]


def all_orbits_divisible(p: int, n: int) -> bool:
    """Whether every orbit splits into p equal groups.  Decided two ways
    that must agree: gcd(n, p) = 1, and no multiplicity reaching p."""
    by_gcd = math.gcd(n, p) == 1
    by_scan = all(max(mv.m) < p for mv in enumerate_mvectors(p, n))
    if by_gcd != by_scan:
        raise InternalCheckError(f"orbit split criteria disagree at p={p}, n={n}")
    return by_gcd


def lower_bound_balanced(p: int, n: int) -> int:
    """Product over orbits of (orbit)! / ((orbit/p)!)^p: the number of ways
    to split every orbit into p labeled equal groups.  Each split yields a
    distinct balanced function, so this bounds their count from below.

    Requires gcd(n, p) = 1; when p divides n the all-equal class forms an
    orbit of size 1 that cannot be split, and the bound is not asserted.
    """
    if not all_orbits_divisible(p, n):
        raise OrbitSplitError(
            f"p={p} divides n={n}: some orbit cannot be split into p groups")
    out = 1
    for mv in enumerate_mvectors(p, n):
        size = orbit_size(mv)
        part = exact_div(size, p)
        out *= exact_div(math.factorial(size), math.factorial(part) ** p)
    return out


def _orbits(p: int, n: int) -> list[list[int]]:
    """Class indices grouped by count multiset, in canonical order."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for idx, cls in enumerate(enumerate_classes(p, n)):
        groups.setdefault(tuple(sorted(cls.counts)), []).append(idx)
    return [groups[key] for key in sorted(groups)]


def _equal_partitions(members: list[int], p: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All splits of members into p ordered groups of equal size, in
    lexicographic order; the first split is the consecutive runs."""
    share = len(members) // p

    def rec(pool: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if len(pool) == share:
            yield (tuple(pool),)
            return
        for picked in combinations(range(len(pool)), share):
            group = tuple(pool[i] for i in picked)
            chosen = set(picked)
            rest = [x for i, x in enumerate(pool) if i not in chosen]
            for tail in rec(rest):
                yield (group,) + tail

    return rec(members)


def generate_balanced(p: int, n: int, limit: Optional[int] = None) -> Iterator[SymmetricFunction]:
    """Yield distinct balanced symmetric functions: every orbit is split
    into p equal groups of classes and group g outputs value g.  Deterministic
    order; distinct splits differ on some class, so outputs never repeat.

    Varying all splits reaches lower_bound_balanced(p, n) functions.
    """
    if not all_orbits_divisible(p, n):
        raise OrbitSplitError(
            f"p={p} divides n={n}: some orbit cannot be split into p groups")
    orbits = _orbits(p, n)
    values = [0] * binom(p + n - 1, n)

    def assign(which: int) -> Iterator[SymmetricFunction]:
        if which == len(orbits):
            yield SymmetricFunction(p, n, tuple(values))
            return
        for split in _equal_partitions(orbits[which], p):
            for value, group in enumerate(split):
                for idx in group:
                    values[idx] = value
            yield from assign(which + 1)

    count = 0
    for fn in assign(0):
        if limit is not None and count >= limit:
            return
        yield fn
        count += 1


def brute_count_balanced_symmetric(p: int, n: int) -> int:
    """Exact count of balanced symmetric functions by exhaustive assignment
    of output values to classes, with branches pruned once a value's input
    count exceeds p^(n-1) and shared suffixes counted once (memoized on the
    remaining classes and the bucket profile)."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 1:
        raise ValueError("balance needs n >= 1")
    classes = binom(p + n - 1, n)
    if classes * math.log2(p) > BRUTE_MAX_BITS:
        raise BudgetError(
            f"assignment space p^{classes} exceeds the 2^{BRUTE_MAX_BITS} cap")
    sizes = sorted((cls.size() for cls in enumerate_classes(p, n)), reverse=True)
    target = p ** (n - 1)
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def count_from(idx: int, buckets: tuple[int, ...]) -> int:
        if idx == len(sizes):
            return 1
        key = (idx, buckets)
        cached = memo.get(key)
        if cached is not None:
            return cached
        size = sizes[idx]
        total = 0
        for b in range(p):
            if buckets[b] + size <= target:
                total += count_from(
                    idx + 1, buckets[:b] + (buckets[b] + size,) + buckets[b + 1:])
        memo[key] = total
        return total

    return count_from(0, (0,) * p)
