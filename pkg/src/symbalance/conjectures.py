"""Numeric scans for two conjectures on elementary symmetric polynomials.

Conjecture 1 (balancedness): over GF(2), the balanced X(d, n) with d >= 2
are exactly the pairs d = 2^t, n = 2^(t+1) l - 1.  Conjecture 2 (weight):
once d has at least six binary ones and n >= 2(d - 1), the weight of
X(d, n) stays strictly below 2^(n-2).  Scans recompute every cell in a
range exactly and report the cells so callers can look for mismatches.

The closed-form weights for degrees 2^t + 1 and 1 + 2^s + 2^t evaluate
short cosine sums instead of binomial rows; they are exact in exact
arithmetic and are checked here in fixed precision against the integer
route, with the correction term's sign compared to the sign of a single
sine factor.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import repeat

import mpmath

from .errors import BudgetError
from .exactnum import (
    PRECISION_BITS,
    compensated_sum,
    cospi_frac,
    sign_sinpi,
    sinpi_frac,
)
from .symfun import is_balanced_elem, weight_elem

C1_MAX_N = 64
C2_DEFAULT_N = 160
C2_MAX_N = 512


@dataclass(frozen=True)
class ScanCell:
    """One (d, n) cell of a balancedness scan."""

    d: int
    n: int
    weight: int
    balanced: bool
    predicted: bool


@dataclass(frozen=True)
class BoundCell:
    """One (d, n) cell of a quarter-weight bound scan."""

    d: int
    n: int
    weight: int
    bound: int
    below: bool


def predicted_balanced(d: int, n: int) -> bool:
    """Conjectured balancedness of X(d, n): degree one, or a power of two
    2^t with n + 1 divisible by 2^(t+1)."""
    if d < 1 or n < d:
        raise ValueError("need 1 <= d <= n")
    if d == 1:
        return True
    return d & (d - 1) == 0 and (n + 1) % (2 * d) == 0


def _row_balance(n: int) -> tuple[ScanCell, ...]:
    return tuple(
        ScanCell(d, n, weight_elem(d, n), is_balanced_elem(d, n),
                 predicted_balanced(d, n))
        for d in range(2, n + 1))


def _row_bound(d: int, n_max: int) -> tuple[BoundCell, ...]:
    cells = []
    for n in range(2 * (d - 1), n_max + 1):
        weight = weight_elem(d, n)
        bound = 1 << (n - 2)
        cells.append(BoundCell(d, n, weight, bound, weight < bound))
    return tuple(cells)


def scan_conjecture1(n_max: int, workers: int = 1) -> list[ScanCell]:
    """Every cell 2 <= d <= n <= n_max with its exact weight, its exact
    balancedness, and the conjectured verdict, ordered by (n, d)."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > C1_MAX_N:
        raise BudgetError(f"n_max={n_max} exceeds the scan cap {C1_MAX_N}")
    if workers < 1:
        raise ValueError("workers must be positive")
    ns = range(2, n_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_balance, ns))
    else:
        rows = [_row_balance(n) for n in ns]
    return [cell for row in rows for cell in row]


def scan_conjecture2(n_max: int = C2_DEFAULT_N, workers: int = 1) -> list[BoundCell]:
    """Every cell with wt(d) >= 6 and 2(d - 1) <= n <= n_max, with the exact
    weight and the strict quarter bound 2^(n-2), ordered by (d, n)."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > C2_MAX_N:
        raise BudgetError(f"n_max={n_max} exceeds the scan cap {C2_MAX_N}")
    if workers < 1:
        raise ValueError("workers must be positive")
    ds = [d for d in range(63, n_max // 2 + 2) if d.bit_count() >= 6]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row_bound, ds, repeat(n_max)))
    else:
        rows = [_row_bound(d, n_max) for d in ds]
    return [cell for row in rows for cell in row]


def conjecture1_mismatches(cells: list[ScanCell]) -> list[ScanCell]:
    """Cells where exact balancedness and the conjectured set disagree."""
    return [cell for cell in cells if cell.balanced != cell.predicted]


def conjecture2_violations(cells: list[BoundCell]) -> list[BoundCell]:
    """Cells whose weight reaches the quarter bound."""
    return [cell for cell in cells if not cell.below]


def quarter_weight_holds(t: int, ell: int) -> bool:
    """Whether X(2^t + 1, 2^(t+1) l) has weight exactly 2^(n-2)."""
    if t < 1 or ell < 1:
        raise ValueError("need t >= 1 and l >= 1")
    n = (1 << (t + 1)) * ell
    return weight_elem((1 << t) + 1, n) == 1 << (n - 2)


def weight_trig_wt2(t: int, m: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Closed-form weight of X(2^t + 1, m) for m >= 2^(t+1), as the pair
    (S, T) with S = 2^(m-2) + T / 2^t; the weight is S rounded.  T collects
    (2 cos A)^(m-1) sin(rA)/sin(A) over odd a < 2^t with A = a pi / 2^(t+1)
    and r = m - 2^(t+1)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    half = 1 << (t + 1)
    r = m - half
    if r < 0:
        raise ValueError(f"m={m} must be at least 2^(t+1)={half}")
    with mpmath.workprec(PRECISION_BITS):
        terms = []
        for a in range(1, 1 << t, 2):
            base = 2 * cospi_frac(Fraction(a, half))
            ratio = sinpi_frac(Fraction(r * a, half)) / sinpi_frac(Fraction(a, half))
            terms.append(base ** (m - 1) * ratio)
        correction = compensated_sum(terms)
        series = mpmath.mpf(2) ** (m - 2) + correction / (1 << t)
    return series, correction


def weight_trig_wt3(s: int, t: int, n: int) -> mpmath.mpf:
    """Closed-form weight of X(1 + 2^s + 2^t, n) for 1 <= s < t and n at
    least the degree, as one value to round.  Two cosine sums: odd j up to
    2^t - 1 with A = j pi / 2^(t+1), and odd k up to 2^s - 1 with
    B = k pi / 2^(s+1)."""
    if not 1 <= s < t:
        raise ValueError("need 1 <= s < t")
    d = 1 + (1 << s) + (1 << t)
    if n < d:
        raise ValueError(f"n={n} must be at least the degree {d}")
    big = 1 << (t + 1)
    small = 1 << (s + 1)
    with mpmath.workprec(PRECISION_BITS):
        first = []
        for j in range(1, 1 << t, 2):
            base = 2 * cospi_frac(Fraction(j, big))
            num = (sinpi_frac(Fraction((n - (1 << s)) * j, big))
                   * sinpi_frac(Fraction((1 << s) * j, big)))
            den = (sinpi_frac(Fraction(j, big))
                   * sinpi_frac(Fraction((1 << (s + 1)) * j, big)))
            first.append(base ** (n - 1) * num / den)
        second = []
        for k in range(1, 1 << s, 2):
            base = 2 * cospi_frac(Fraction(k, small))
            ratio = sinpi_frac(Fraction(n * k, small)) / sinpi_frac(Fraction(k, small))
            second.append(base ** (n - 1) * ratio)
        total = (mpmath.mpf(2) ** (n - 3)
                 - compensated_sum(first) / (1 << t)
                 - compensated_sum(second) / (1 << (s + 1)))
    return total


def correction_sign_check(t: int, r: int) -> bool:
    """Whether the correction T for m = r + 2^(t+1) variables carries the
    sign of sin(r pi / 2^(t+1)).  T vanishes exactly when r is a multiple
    of 2^(t+1); magnitudes below 1e-6 * 2^m count as zero.

    The cutoff scale is coarse: T itself grows like (2 cos(pi/2^(t+1)))^m,
    so for t = 1 a genuinely nonzero T drops under the cutoff once m is
    near 40.  Intended for m within a few multiples of the period."""
    if t < 1 or r < 0:
        raise ValueError("need t >= 1 and r >= 0")
    half = 1 << (t + 1)
    _, correction = weight_trig_wt2(t, r + half)
    expected = sign_sinpi(Fraction(r, half))
    with mpmath.workprec(PRECISION_BITS):
        cutoff = mpmath.mpf(2) ** (r + half) * mpmath.mpf("1e-6")
        if abs(correction) < cutoff:
            actual = 0
        else:
            actual = 1 if correction > 0 else -1
    return actual == expected
