"""Signed bisections of a binomial row.

A solution is a vector of signs delta[0..n] with sum_i delta_i C(n, i) = 0;
its +1 side and -1 side then each carry 2^(n-1) of the total mass.  For
even n the only structured solutions are the two alternating vectors; for
odd n every antisymmetric vector (delta[n-i] = -delta[i]) works, giving
2^((n+1)/2) of them.  Everything else is a nontrivial solution, and the
search reproduces exactly where those exist.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import islice, product
from typing import Optional

from .errors import BudgetError, InternalCheckError
from .exactnum import binom

SEARCH_MAX_N = 32


@dataclass(frozen=True)
class SignVector:
    """Candidate signing delta[0..n] of row n, entries in {-1, +1}."""

    n: int
    delta: tuple[int, ...]

    def __post_init__(self):
        if len(self.delta) != self.n + 1:
            raise ValueError("delta must have n + 1 entries")
        if any(d not in (-1, 1) for d in self.delta):
            raise ValueError("delta entries must be -1 or +1")


@dataclass(frozen=True)
class SolutionReport:
    """Exact solution counts for one n, with optional witnesses."""

    n: int
    total: int
    trivial: int
    nontrivial: int
    witnesses: Optional[tuple[SignVector, ...]] = None


def signed_sum(sv: SignVector) -> int:
    """Exact sum of delta_i C(n, i)."""
    return sum(d * binom(sv.n, i) for i, d in enumerate(sv.delta))


def _alternating(n: int) -> tuple[int, ...]:
    return tuple((-1) ** i for i in range(n + 1))


def is_trivial(sv: SignVector) -> bool:
    """Classify a solution: alternating (even n) or antisymmetric (odd n)."""
    if signed_sum(sv) != 0:
        raise ValueError("not a solution")
    if sv.n % 2 == 0:
        alt = _alternating(sv.n)
        return sv.delta == alt or sv.delta == tuple(-d for d in alt)
    return all(sv.delta[sv.n - i] == -sv.delta[i] for i in range((sv.n + 1) // 2))


def count_trivial(n: int) -> int:
    """2 for even n, 2^((n+1)/2) for odd n (n >= 1)."""
    if n < 1:
        raise ValueError("no trivial solutions exist for n = 0")
    return 2 if n % 2 == 0 else 1 << ((n + 1) // 2)


def _partial_sums(weights: tuple[int, ...]) -> list[int]:
    """Signed sums of all 2^len sign choices over the given weights."""
    sums = [0]
    for w in weights:
        sums = [s + w for s in sums] + [s - w for s in sums]
    return sums


def find_all_solutions(n: int, enumerate_witnesses: bool = False,
                       witness_limit: Optional[int] = None) -> SolutionReport:
    """Count every solution for row n by meet-in-the-middle (n <= 32).

    The row splits at ceil(n/2); each half contributes 2^(half) partial
    sums, and the join accumulates multiplicities of negated sums.  With
    enumerate_witnesses, nontrivial solutions are materialized in
    lexicographic order (-1 before +1), optionally capped at witness_limit.
    """
    if n > SEARCH_MAX_N:
        raise BudgetError(f"solution search capped at n <= {SEARCH_MAX_N}")
    if n < 0:
        raise ValueError("n must be non-negative")
    row = tuple(binom(n, i) for i in range(n + 1))
    cut = -(-n // 2)
    lo_counts = Counter(_partial_sums(row[:cut]))
    total = sum(lo_counts[-s] for s in _partial_sums(row[cut:]))
    trivial = count_trivial(n) if n >= 1 else 0

    witnesses = None
    if enumerate_witnesses:
        stream = _nontrivial_in_lex_order(n, row, cut)
        witnesses = tuple(islice(stream, witness_limit))

    return SolutionReport(n=n, total=total, trivial=trivial,
                          nontrivial=total - trivial, witnesses=witnesses)


def _nontrivial_in_lex_order(n: int, row: tuple[int, ...], cut: int):
    """Yield nontrivial solutions lexicographically (-1 before +1): the low
    prefix runs in lex order and matching high suffixes are grouped by sum."""
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for hi in product((-1, 1), repeat=n + 1 - cut):
        s = sum(d * w for d, w in zip(hi, row[cut:]))
        by_sum.setdefault(s, []).append(hi)
    for lo in product((-1, 1), repeat=cut):
        s = sum(d * w for d, w in zip(lo, row[:cut]))
        for hi in by_sum.get(-s, ()):
            sv = SignVector(n, lo + hi)
            if not is_trivial(sv):
                yield sv


def bisection_from_solution(sv: SignVector) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Index sets (A, B) with A = positions signed +1; each side's binomial
    coefficients sum to 2^(n-1)."""
    if signed_sum(sv) != 0:
        raise ValueError("not a solution")
    plus = tuple(i for i, d in enumerate(sv.delta) if d == 1)
    minus = tuple(i for i, d in enumerate(sv.delta) if d == -1)
    if sv.n >= 1:
        half = 1 << (sv.n - 1)
        if sum(binom(sv.n, i) for i in plus) != half:
            raise InternalCheckError("signed halves do not carry equal mass")
    return plus, minus
