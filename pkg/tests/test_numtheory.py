import pytest

from egperm.numtheory import admissible_primes, is_prime, mod_tables, primes_upto


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}
    for k in range(45):
        assert is_prime(k) == (k in primes)


def test_primes_upto():
    assert primes_upto(41) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]


def test_admissible_primes_phi4():
    # calV = 2: all odd primes
    assert admissible_primes(2, 41) == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]
    # calV = 3: p = 3n + 1
    assert admissible_primes(3, 43) == [7, 13, 19, 31, 37, 43]
    # calV = 12: p = 12n + 1
    assert admissible_primes(12, 100) == [13, 37, 61, 73, 97]


def test_binom_out_of_range_is_zero():
    tb = mod_tables(13)
    assert tb.binom(5, -1) == 0
    assert tb.binom(5, 6) == 0
    assert tb.binom(5, 2) == 10
    assert tb.falling(5, 6) == 0
    assert tb.falling(5, 2) == 20 % 13


def test_wilson_complement_factorials():
    # for p = 2n+1: a! (p-1-a)! = (-1)^(a+1)  (mod p)
    for p in [3, 5, 7, 11, 13, 17, 101]:
        tb = mod_tables(p)
        for a in range(p):
            lhs = tb.fact[a] * tb.fact[p - 1 - a] % p
            assert lhs == (-1) ** (a + 1) % p


def test_wilson_central_square():
    # for p = 2n+1: (n!)^2 = (-1)^(n+1)  (mod p)
    for p in [3, 5, 7, 11, 13, 101]:
        n = (p - 1) // 2
        tb = mod_tables(p)
        assert tb.fact[n] ** 2 % p == (-1) ** (n + 1) % p


def test_mod_tables_requires_prime():
    with pytest.raises(ValueError):
        mod_tables(9)
