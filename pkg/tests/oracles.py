"""Independent oracles for the test suite.

Everything here is written from definitions using only the standard
library and numpy, with no imports from the package under test.  The
implementations favor transparency over speed; tests freeze their
outputs or compare them directly against the package at small sizes.
"""

import math
from collections import Counter
from itertools import combinations, combinations_with_replacement, product


def elem_poly_value(x_bits, d):
    """X(d, n) at one point, summed monomial by monomial over GF(2)."""
    ones = [i for i, b in enumerate(x_bits) if b]
    return sum(1 for _ in combinations(ones, d)) % 2


def elem_truth_table(d, n):
    """Truth table of X(d, n) over all 2^n inputs, monomial by monomial."""
    return [elem_poly_value(x, d) for x in product((0, 1), repeat=n)]


def elem_weight_comb(d, n):
    """Weight of X(d, n) via output values C(popcount, d) mod 2."""
    return sum(math.comb(bin(x).count("1"), d) % 2 for x in range(1 << n))


def walsh_direct(table, w):
    """Walsh value at mask w straight from the definition."""
    total = 0
    for x, fx in enumerate(table):
        total += (-1) ** (fx ^ (bin(x & w).count("1") & 1))
    return total


def sac_direct(table, n):
    """Definitional strict avalanche criterion: each single-bit flip changes
    the output on exactly half the inputs."""
    target = 1 << (n - 1)
    return all(
        sum(1 for x in range(1 << n) if table[x] != table[x ^ (1 << b)]) == target
        for b in range(n))


def krawtchouk_poly(k, y, n):
    """Krawtchouk value via the generating polynomial (1-z)^y (1+z)^(n-y)."""
    coeffs = [1]
    for _ in range(y):
        coeffs = [a - b for a, b in zip(coeffs + [0], [0] + coeffs)]
    for _ in range(n - y):
        coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs[k] if 0 <= k < len(coeffs) else 0


def bisection_count_literal(n):
    """Number of sign vectors with zero weighted sum, by full enumeration."""
    row = [math.comb(n, i) for i in range(n + 1)]
    return sum(1 for signs in product((-1, 1), repeat=n + 1)
               if sum(s * c for s, c in zip(signs, row)) == 0)


def bisection_count_dp(n):
    """Same count via a subset-sum table: solutions pick the subset of the
    binomial row carrying the plus sign, which must sum to 2^(n-1)."""
    import numpy as np

    table = np.zeros((1 << n) + 1, dtype=np.int64)
    table[0] = 1
    for i in range(n + 1):
        c = math.comb(n, i)
        shifted = np.zeros_like(table)
        shifted[c:] = table[: len(table) - c]
        table = table + shifted
    return int(table[1 << (n - 1)])


def symmetric_classes(p, n):
    """Multiset classes as sorted symbol tuples with their orbit sizes."""
    classes = []
    for combo in combinations_with_replacement(range(p), n):
        size = math.factorial(n)
        for mult in Counter(combo).values():
            size //= math.factorial(mult)
        classes.append((combo, size))
    return classes


def count_balanced_symmetric_enumerate(p, n):
    """Count balanced symmetric functions by trying every assignment of
    output values to multiset classes."""
    sizes = [size for _, size in symmetric_classes(p, n)]
    share = p ** (n - 1)
    total = 0
    for assignment in product(range(p), repeat=len(sizes)):
        buckets = [0] * p
        for value, size in zip(assignment, sizes):
            buckets[value] += size
        if all(b == share for b in buckets):
            total += 1
    return total


def count_balanced_all_enumerate(p, n):
    """Count balanced functions among all p^(p^n) functions."""
    inputs = p ** n
    share = p ** (n - 1)
    total = 0
    for table in product(range(p), repeat=inputs):
        counts = Counter(table)
        if all(counts[v] == share for v in range(p)):
            total += 1
    return total


def lacunary_sum_direct(n, power, i):
    """Sum of C(n, j) over j congruent to i mod 2^power."""
    step = 1 << power
    return sum(math.comb(n, j) for j in range(i, n + 1, step))
