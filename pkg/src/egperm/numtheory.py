"""Primes, factorial tables modulo p, and small Wilson-style helpers."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "is_prime",
    "primes_upto",
    "admissible_primes",
    "ModTables",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def admissible_primes(calV: int, bound: int) -> list[int]:
    """Primes p <= bound of the form p = n*calV + 1 with n >= 1."""
    return [p for p in primes_upto(bound) if p > calV and (p - 1) % calV == 0]


class ModTables:
    """Factorials, inverse factorials, binomials, falling factorials mod p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        fact = [1] * p
        for i in range(1, p):
            fact[i] = fact[i - 1] * i % p
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
        for i in range(p - 1, 0, -1):
            inv_fact[i - 1] = inv_fact[i] * i % p
        self.fact = fact
        self.inv_fact = inv_fact

    def binom(self, a: int, b: int) -> int:
        """C(a, b) mod p for 0 <= a < p; zero outside the valid range."""
        if b < 0 or a < 0 or b > a:
            return 0
        return self.fact[a] * self.inv_fact[b] % self.p * self.inv_fact[a - b] % self.p

    def falling(self, a: int, b: int) -> int:
        """a! / (a-b)! mod p; zero when b < 0 or b > a or a < 0."""
        if b < 0 or a < 0 or b > a:
            return 0
        return self.fact[a] * self.inv_fact[a - b] % self.p


@lru_cache(maxsize=128)
def mod_tables(p: int) -> ModTables:
    return ModTables(p)
