from math import gcd, isqrt, prod

import pytest
from hypothesis import given, strategies as st

from diophantine.numtheory import (
    binom2,
    critical_power,
    factorize,
    find_sqrt_bracket,
    is_prime,
    is_prime_power,
    multiples_count,
    padic_valuation,
    prime_pi,
    primes_upto,
    reduced_label,
)
from diophantine import lemmas


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))


@pytest.mark.parametrize("n, factors", [(12, ((2, 2), (3, 1))), (1, ()), (97, ((97, 1),))])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(1, 10**7))
def test_factorization_invariants(n):
    f = factorize(n)
    primes = [p for p, _ in f.factors]
    assert primes == sorted(set(primes))
    assert all(e >= 1 and naive_is_prime(p) for p, e in f.factors)
    assert prod(p**e for p, e in f.factors) == n
    assert (f.factors == ()) == (n == 1)


@given(st.integers(10**7, 10**12))
def test_factorize_beyond_sieve(n):
    f = factorize(n)
    assert prod(p**e for p, e in f.factors) == n


@pytest.mark.parametrize("p, n, t", [(2, 20, 2), (5, 20, 1), (3, 20, 0)])
def test_padic_valuation_examples(p, n, t):
    assert padic_valuation(p, n) == t


def test_padic_valuation_rejects_composite():
    with pytest.raises(ValueError):
        padic_valuation(4, 20)


@given(st.sampled_from(primes_upto(200)), st.integers(1, 10**6))
def test_valuation_definition(p, n):
    t = padic_valuation(p, n)
    assert n % p**t == 0 and n % p ** (t + 1) != 0


@pytest.mark.parametrize("p, n, power", [(2, 20, 8), (7, 20, 7), (3, 8, 3)])
def test_critical_power_examples(p, n, power):
    assert critical_power(p, n).power == power


@given(st.sampled_from(primes_upto(100)), st.integers(1, 10**5))
def test_critical_power_invariants(p, n):
    c = critical_power(p, n)
    assert n % p**c.valuation == 0
    assert n % c.power != 0
    assert c.power == p**c.successor


def test_reduced_label_examples():
    assert reduced_label(14, 20) == 7
    # 16 / gcd(16, 20) = 4; the worked example prints 8, which has the same prime support
    assert reduced_label(16, 20) == 4
    assert reduced_label(20, 20) == 1


@pytest.mark.parametrize("a", [0, 21])
def test_reduced_label_range(a):
    with pytest.raises(ValueError):
        reduced_label(a, 20)


@pytest.mark.parametrize("a, n, m", [(8, 20, 2), (3, 8, 2), (21, 20, 0)])
def test_multiples_count(a, n, m):
    assert multiples_count(a, n) == m


@pytest.mark.parametrize("n, j", [(1, 1), (10, 3), (100, 10)])
def test_sqrt_bracket_examples(n, j):
    assert find_sqrt_bracket(n) == j


@given(st.integers(1, 10**15))
def test_sqrt_bracket_large(n):
    r, j = isqrt(n), find_sqrt_bracket(n)
    assert r <= j <= n
    assert n < r * (j + 1) and r * j <= n and n < j * (j + 1)


def test_prime_pi_examples():
    assert prime_pi(8) == 4
    assert prime_pi(1) == 0
    assert prime_pi(20) == 8
    assert primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]


def test_primes_match_trial_division():
    assert primes_upto(5000) == [n for n in range(5001) if naive_is_prime(n)]
    assert all(is_prime(n) == naive_is_prime(n) for n in range(-3, 3000))
    assert is_prime(10**9 + 7) and not is_prime(10**9 + 8) and not is_prime(10007 * 100003)


def test_prime_power():
    assert [n for n in range(1, 20) if is_prime_power(n)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]


def test_binom2_convention():
    assert [binom2(m) for m in range(-1, 5)] == [0, 0, 0, 1, 3, 6]


# The full windows run in the acceptance suite; these are quick versions plus random probes.

@pytest.mark.parametrize(
    "check", [
        lemmas.check_reduced_prime_divisibility,
        lemmas.check_reduced_divisibility_chain,
        lemmas.check_equal_floor_product,
        lemmas.check_floor_scaling,
    ],
)
def test_lemma_suites_small(check):
    res = check(60)
    assert res.checked > 0 and res.ok


def test_bracket_lemma_small():
    assert lemmas.check_two_prime_power_bracket(60).ok


@st.composite
def equal_floor_pair(draw):
    n = draw(st.integers(1, 10**9))
    a = draw(st.integers(1, n))
    j = n // a
    b = draw(st.integers(n // (j + 1) + 1, n // j))
    return a, b, n


@given(equal_floor_pair())
def test_equal_floors_product(case):
    a, b, n = case
    assert n // a == n // b
    if a != b:
        assert a * b > n


@given(equal_floor_pair(), st.integers(1, 10**4))
def test_equal_floors_scale(case, t):
    a, b, n = case
    assert n // (t * a) == n // (t * b)


@given(st.integers(1, 5000), st.integers(1, 50), st.data())
def test_reduced_label_chain(a, k, data):
    b = a * k
    n = data.draw(st.integers(b, 10 * b))
    assert (b // gcd(b, n)) % (a // gcd(a, n)) == 0


@given(st.sampled_from(primes_upto(100)), st.integers(1, 10**5), st.data())
def test_reduced_prime_iff_critical(p, n, data):
    a = data.draw(st.integers(1, n))
    assert (reduced_label(a, n) % p == 0) == (a % critical_power(p, n).power == 0)
