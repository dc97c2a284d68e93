"""Symmetric functions over GF(p) and elementary symmetric Boolean forms.

A symmetric function is constant on each permutation orbit of inputs, so it
is stored as one output value per multiset class (the count vector of input
symbols).  For p = 2 a class is just an input weight and the compact
WeightFunction form applies; the degree-d elementary symmetric form takes
the value C(j, d) mod 2 on inputs of weight j, since exactly C(j, d) of its
monomials are all-ones there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalCheckError
from .exactnum import binom, binom_mod_p, is_prime, multinomial


@dataclass(frozen=True)
class MultisetClass:
    """One permutation orbit of inputs: counts[l] coordinates equal l."""

    p: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.p:
            raise ValueError("counts must have one entry per symbol")
        if any(c < 0 for c in self.counts) or sum(self.counts) != self.n:
            raise ValueError("counts must be non-negative and sum to n")

    def size(self) -> int:
        """Number of input vectors in the class."""
        return multinomial(self.n, self.counts)


@dataclass(frozen=True)
class SymmetricFunction:
    """Output value per multiset class, in enumerate_classes order."""

    p: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != binom(self.p + self.n - 1, self.n):
            raise ValueError("one value per class is required")
        if any(not 0 <= v < self.p for v in self.values):
            raise ValueError(f"values must lie in [0, {self.p})")


@dataclass(frozen=True)
class WeightFunction:
    """Boolean symmetric function as output bits v[0..n] per input weight."""

    n: int
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.v) != self.n + 1:
            raise ValueError("v must have n + 1 entries")
        if any(b not in (0, 1) for b in self.v):
            raise ValueError("v entries must be bits")

    def to_symmetric(self) -> SymmetricFunction:
        """General form: the class with counts (n - j, j) has weight j."""
        return SymmetricFunction(2, self.n,
                                 tuple(self.v[self.n - c] for c in range(self.n + 1)))


@dataclass(frozen=True)
class AnfVector:
    """Coefficients lam[0..n]: the function is the XOR of the elementary
    symmetric forms of each degree d with lam[d] = 1."""

    n: int
    lam: tuple[int, ...]

    def __post_init__(self):
        if len(self.lam) != self.n + 1:
            raise ValueError("lam must have n + 1 entries")
        if any(b not in (0, 1) for b in self.lam):
            raise ValueError("lam entries must be bits")


@lru_cache(maxsize=None)
def _count_vectors(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    def rec(parts: int, total: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in rec(parts - 1, total - first):
                yield (first,) + rest

    return tuple(rec(p, n))


def enumerate_classes(p: int, n: int) -> list[MultisetClass]:
    """All multiset classes, lexicographically ascending on count vectors."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    return [MultisetClass(p, n, c) for c in _count_vectors(p, n)]


def dominated(j: int, i: int) -> bool:
    """True when every base-2 digit of j is at most the matching digit of i."""
    if j < 0 or i < 0:
        raise ValueError("arguments must be non-negative")
    return j & i == j


def balance_histogram(f: SymmetricFunction) -> tuple[int, ...]:
    """Exact input count per output value."""
    hist = [0] * f.p
    for cls, val in zip(enumerate_classes(f.p, f.n), f.values):
        hist[val] += cls.size()
    return tuple(hist)


def is_balanced(f: SymmetricFunction) -> bool:
    """True when every output value is hit by exactly p^(n-1) inputs.

    The full histogram is always computed (no early exit) so callers can
    reuse it for reporting.
    """
    if f.n < 1:
        raise ValueError("balance is undefined for n = 0")
    share = f.p ** (f.n - 1)
    return all(count == share for count in balance_histogram(f))


def elem_values(d: int, n: int) -> WeightFunction:
    """Weight-value vector of the degree-d elementary symmetric form:
    v(j) = C(j, d) mod 2."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return WeightFunction(n, tuple(binom_mod_p(j, d, 2) for j in range(n + 1)))


def weight_elem(d: int, n: int) -> int:
    """Hamming weight of the degree-d elementary symmetric form on n bits:
    the sum of C(n, i) over i whose binary digits dominate those of d."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return sum(binom(n, i) for i in range(d, n + 1) if dominated(d, i))


def is_balanced_elem(d: int, n: int) -> bool:
    """Balance of the elementary form, decided by two routes that must agree:
    weight = 2^(n-1), and the signed sum over weights
    sum_j C(n, j) (-1)^(C(j, d)) = 0."""
    w = weight_elem(d, n)
    signed = sum(binom(n, j) * (1 - 2 * binom_mod_p(j, d, 2)) for j in range(n + 1))
    by_weight = w == 1 << (n - 1)
    by_sign = signed == 0
    if by_weight != by_sign or signed != (1 << n) - 2 * w:
        raise InternalCheckError(f"balance routes disagree at d={d}, n={n}")
    return by_weight


def values_from_anf(anf: AnfVector) -> WeightFunction:
    """v(i) = XOR of lam(j) over all j dominated by i."""
    bits = []
    for i in range(anf.n + 1):
        acc = 0
        for j in range(i + 1):
            if j & i == j:
                acc ^= anf.lam[j]
        bits.append(acc)
    return WeightFunction(anf.n, tuple(bits))


def anf_from_values(wf: WeightFunction) -> AnfVector:
    """lam(i) = XOR of v(j) over all j dominated by i; the domination
    transform over GF(2) is its own inverse."""
    bits = []
    for i in range(wf.n + 1):
        acc = 0
        for j in range(i + 1):
            if j & i == j:
                acc ^= wf.v[j]
        bits.append(acc)
    return AnfVector(wf.n, tuple(bits))
