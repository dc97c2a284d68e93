import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symbalance.exactnum import (
    binom,
    binom_mod_p,
    compensated_sum,
    cospi_frac,
    exact_div,
    is_prime,
    lacunary_exact,
    lacunary_trig,
    multinomial,
    parity_period,
    parity_sequence,
    parity_word,
    pascal_row,
    round_real,
    sign_sinpi,
    sinpi_frac,
)

# One least period of j -> C(j, d) mod 2 per degree, written out by hand
# from the binary domination rule.
PARITY_WORDS = {
    2: "0011",
    3: "0001",
    4: "00001111",
    5: "00000101",
    6: "00000011",
    7: "00000001",
    8: "0000000011111111",
    9: "0000000001010101",
    10: "0000000000110011",
    11: "0000000000010001",
    12: "0000000000001111",
    13: "0000000000000101",
    14: "0000000000000011",
}


def test_pascal_row_small():
    assert pascal_row(0) == (1,)
    assert pascal_row(5) == (1, 5, 10, 10, 5, 1)


@given(st.integers(min_value=0, max_value=200))
def test_pascal_row_matches_comb(n):
    assert pascal_row(n) == tuple(math.comb(n, k) for k in range(n + 1))


def test_binom_outside_range_is_zero():
    assert binom(5, 7) == 0
    assert binom(5, -1) == 0
    assert binom(10, 3) == 120


def test_exact_div():
    assert exact_div(84, 7) == 12
    with pytest.raises(ValueError):
        exact_div(85, 7)


def test_multinomial():
    assert multinomial(6, (2, 2, 2)) == 90
    assert multinomial(4, (4,)) == 1
    assert multinomial(7, (3, 2, 1, 1)) == 420
    with pytest.raises(ValueError):
        multinomial(6, (2, 2, 1))
    with pytest.raises(ValueError):
        multinomial(4, (5, -1))


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for m in range(-3, 25):
        assert is_prime(m) == (m in primes)


@given(st.integers(min_value=0, max_value=300),
       st.integers(min_value=0, max_value=300),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_binom_mod_p_matches_comb(n, k, p):
    assert binom_mod_p(n, k, p) == math.comb(n, k) % p


def test_parity_words_frozen():
    for d, word in PARITY_WORDS.items():
        pw = parity_word(d)
        assert pw.period == len(word)
        assert "".join(map(str, pw.bits)) == word


def test_parity_period_value_and_minimality():
    for d in range(2, 65):
        assert parity_period(d) == 1 << d.bit_length()
    with pytest.raises(ValueError):
        parity_period(1)


@pytest.mark.parametrize("d", [2, 3, 7, 8, 15, 16, 31, 33, 64])
def test_parity_sequence_matches_definition(d):
    seq = parity_sequence(d, 129)
    for j in range(129):
        assert seq[j] == math.comb(j, d) % 2


def test_parity_sequence_length():
    assert parity_sequence(4, 0) == ()
    assert len(parity_sequence(5, 19)) == 19
    with pytest.raises(ValueError):
        parity_sequence(5, -1)


@given(st.integers(min_value=0, max_value=60),
       st.integers(min_value=1, max_value=5))
def test_lacunary_partitions_the_row(n, power):
    total = sum(lacunary_exact(n, power, i) for i in range(1 << power))
    assert total == 1 << n


@given(st.integers(min_value=0, max_value=40),
       st.integers(min_value=1, max_value=5),
       st.integers(min_value=0, max_value=31))
def test_lacunary_exact_matches_oracle(n, power, i):
    i %= 1 << power
    assert lacunary_exact(n, power, i) == oracles.lacunary_sum_direct(n, power, i)


@pytest.mark.parametrize("power", [1, 2, 3, 4, 5])
def test_lacunary_trig_rounds_to_exact(power):
    for n in range(1, 41):
        for i in range(1 << power):
            assert round_real(lacunary_trig(n, power, i)) == lacunary_exact(n, power, i)


def test_lacunary_trig_rejects_n_zero():
    assert lacunary_exact(0, 2, 0) == 1
    with pytest.raises(ValueError):
        lacunary_trig(0, 2, 0)


def test_lacunary_validation():
    with pytest.raises(ValueError):
        lacunary_exact(10, 0, 0)
    with pytest.raises(ValueError):
        lacunary_exact(10, 2, 4)
    with pytest.raises(ValueError):
        lacunary_exact(-1, 2, 0)


def test_trig_helpers_exact_points():
    assert cospi_frac(Fraction(1, 2)) == 0
    assert sinpi_frac(Fraction(1)) == 0
    assert cospi_frac(Fraction(7, 2)) == 0
    assert abs(sinpi_frac(Fraction(1, 2)) - 1) == 0
    assert cospi_frac(Fraction(2)) == 1


def test_sign_sinpi():
    assert sign_sinpi(Fraction(0)) == 0
    assert sign_sinpi(Fraction(5)) == 0
    assert sign_sinpi(Fraction(1, 4)) == 1
    assert sign_sinpi(Fraction(5, 4)) == -1
    assert sign_sinpi(Fraction(-1, 4)) == -1
    assert sign_sinpi(Fraction(9, 4)) == 1


def test_compensated_sum_cancellation():
    big = 10 ** 30
    terms = [big, 1, -big]
    assert compensated_sum(terms) == 1
    assert compensated_sum([]) == 0


def test_round_real():
    assert round_real(compensated_sum([0.5, 0.25, 0.25])) == 1
    assert round_real(lacunary_trig(10, 2, 1)) == 272
