"""Permanent computation kernels.

Three tiers:

* ``perm_leibniz`` -- definition sum over the symmetric group (test oracle);
* ``perm_exact`` / ``perm_mod`` -- Ryser inclusion-exclusion with Gray-code
  row-sum updates, for explicit square matrices;
* ``block_perm_exact`` / ``block_perm_mod`` -- Ryser specialised to block
  matrices ``1_{a x b} (x) B`` without materialising them.  Repeated columns
  collapse subsets into multiplicity vectors, so the cost is
  ``(b+1)^cols(B)`` instead of ``2^(b*cols(B))``.

On top of these sit the graph permanents ``gperm_direct`` and
``gperm_reduced`` and the unimodular row reduction used by the latter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .graphs import OrientedGraph, block_spec, reduced_incidence
from .numtheory import mod_tables

__all__ = [
    "BlockMatrix",
    "DimensionCapError",
    "RankDeficiencyError",
    "perm_leibniz",
    "perm_exact",
    "perm_mod",
    "block_perm_exact",
    "block_perm_mod",
    "blockwise_row_reduce",
    "gperm_direct",
    "gperm_reduced",
]

RYSER_CAP = 28          # max columns for the subset-walk Ryser
LATTICE_CAP = 40_000_000  # max lattice points for the block Ryser


class DimensionCapError(ValueError):
    """Requested permanent is beyond the configured size limit."""


class RankDeficiencyError(ValueError):
    """Matrix has deficient row rank (disconnected graph)."""


@dataclass(frozen=True)
class BlockMatrix:
    """``1_{row_reps x col_reps} (x) base`` without materialisation."""

    base: np.ndarray
    row_reps: int
    col_reps: int

    def __post_init__(self):
        object.__setattr__(self, "base", np.asarray(self.base, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        r, c = self.base.shape
        return (r * self.row_reps, c * self.col_reps)

    def materialize(self) -> np.ndarray:
        return np.kron(np.ones((self.row_reps, self.col_reps), dtype=np.int64), self.base)


def perm_leibniz(m) -> int:
    """Permanent by the definition sum; only for tiny matrices."""
    a = np.asarray(m, dtype=object)
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= a[i, sigma[i]]
            if prod == 0:
                break
        total += prod
    return int(total)


def _ryser(m, mod: int | None) -> int:
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    if n == 0:
        return 1 % mod if mod else 1
    if n > RYSER_CAP:
        raise DimensionCapError(f"Ryser cap is {RYSER_CAP} columns, got {n}")
    rows = [[int(x) for x in row] for row in a]
    sums = [0] * n
    total = 0
    prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        diff = gray ^ prev
        j = diff.bit_length() - 1
        sgn = 1 if gray & diff else -1
        for i in range(n):
            sums[i] += sgn * rows[i][j]
        prev = gray
        prod = 1
        for s in sums:
            prod *= s
            if prod == 0:
                break
            if mod:
                prod %= mod
        if prod:
            total += prod if gray.bit_count() % 2 == n % 2 else -prod
            if mod:
                total %= mod
    return total % mod if mod else total


def perm_exact(m) -> int:
    """Exact integer permanent via Gray-code Ryser (dimension <= 28)."""
    return _ryser(m, None)


def perm_mod(m, p: int) -> int:
    """Permanent residue mod p via Gray-code Ryser."""
    return _ryser(m, p)


def _check_block_square(base: np.ndarray, a: int, b: int) -> tuple[int, int]:
    r, c = base.shape
    if a * r != b * c:
        raise ValueError(f"block matrix {a}*{r} x {b}*{c} is not square")
    return r, c


def block_perm_exact(base, row_reps: int, col_reps: int) -> int:
    """Exact permanent of ``1_{a x b} (x) base`` via multiplicity Ryser."""
    base = np.asarray(base, dtype=np.int64)
    r, c = _check_block_square(base, row_reps, col_reps)
    if c == 0:
        return 1
    a, b = row_reps, col_reps
    n_total = a * r
    binom = [math.comb(b, s) for s in range(b + 1)]
    cols = [tuple(int(x) for x in base[:, j]) for j in range(c)]
    total = 0
    for s in product(range(b + 1), repeat=c):
        weight = 1
        for sj in s:
            weight *= binom[sj]
        sums = [0] * r
        for j, sj in enumerate(s):
            if sj:
                col = cols[j]
                for i in range(r):
                    sums[i] += sj * col[i]
        prod = weight
        for v in sums:
            if v == 0:
                prod = 0
                break
            prod *= v ** a
        if prod:
            total += -prod if sum(s) % 2 else prod
    return total if n_total % 2 == 0 else -total


def _mod_pow_array(arr: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(arr)
    base = arr % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def block_perm_mod(base, row_reps: int, col_reps: int, p: int) -> int:
    """Permanent of ``1_{a x b} (x) base`` mod p, vectorised over the
    column-multiplicity lattice {0..b}^c."""
    base = np.asarray(base, dtype=np.int64)
    r, c = _check_block_square(base, row_reps, col_reps)
    if c == 0:
        return 1 % p
    a, b = row_reps, col_reps
    if (b + 1) ** c > LATTICE_CAP:
        raise DimensionCapError(
            f"block Ryser lattice (b+1)^c = {b + 1}^{c} exceeds cap {LATTICE_CAP}")
    tb = mod_tables(p)
    binom = np.array([tb.binom(b, s) for s in range(b + 1)], dtype=np.int64)
    axes = np.arange(b + 1, dtype=np.int64)
    term = None
    sum_s = None
    row_sums = [None] * r
    for j in range(c):
        shape = [1] * c
        shape[j] = b + 1
        sj = axes.reshape(shape)
        wj = binom.reshape(shape)
        term = wj if term is None else term * wj % p
        sum_s = sj if sum_s is None else sum_s + sj
        for i in range(r):
            contrib = sj * int(base[i, j])
            row_sums[i] = contrib if row_sums[i] is None else row_sums[i] + contrib
    for i in range(r):
        term = term * _mod_pow_array(row_sums[i] % p, a, p) % p
    sign = np.where(sum_s % 2 == 0, 1, p - 1)
    total = int((term * sign % p).sum() % p)
    if (a * r) % 2:
        total = (-total) % p
    return total


def blockwise_row_reduce(m) -> tuple[np.ndarray, list[int]]:
    """Row reduce a totally unimodular matrix to ``[I_r | A]`` form.

    Only row swaps, +-1 scalings, and integer row additions are used, so
    the blockwise permanent residue is preserved.  Returns the reduced
    matrix with its columns permuted so the pivots come first, along with
    the column permutation applied.
    """
    r0 = np.array(m, dtype=np.int64)
    rows, cols = r0.shape
    pivots: list[int] = []
    pr = 0
    for j in range(cols):
        if pr >= rows:
            break
        nz = [i for i in range(pr, rows) if r0[i, j] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != pr:
            r0[[i, pr]] = r0[[pr, i]]
        if r0[pr, j] == -1:
            r0[pr] = -r0[pr]
        for i2 in range(rows):
            if i2 != pr and r0[i2, j] != 0:
                r0[i2] -= r0[i2, j] * r0[pr]
        pivots.append(j)
        pr += 1
    if pr < rows:
        raise RankDeficiencyError(
            "row rank deficiency: the graph is disconnected")
    if np.abs(r0).max(initial=0) > 1:
        raise ValueError("unimodular pivoting produced an entry outside {0,+-1}")
    col_perm = pivots + [j for j in range(cols) if j not in pivots]
    return r0[:, col_perm], col_perm


def _admissible_n(g: OrientedGraph, p: int) -> int:
    spec = block_spec(g)
    if (p - 1) % spec.calV != 0 or p <= spec.calV:
        raise ValueError(f"prime {p} is not admissible for calV={spec.calV}")
    return (p - 1) // spec.calV


def gperm_direct(g: OrientedGraph, p: int) -> int:
    """Graph permanent at p straight from the block incidence matrix."""
    spec = block_spec(g)
    n = _admissible_n(g, p)
    m = reduced_incidence(g).rows
    return block_perm_mod(m, n * spec.calV, n * spec.calE, p)


def gperm_reduced(g: OrientedGraph, p: int) -> int:
    """Graph permanent at p after unimodular reduction to [I_r | A].

    Cofactor expansion along the identity columns leaves the much smaller
    block permanent of A, scaled by a falling-factorial power.
    """
    spec = block_spec(g)
    n = _admissible_n(g, p)
    m = reduced_incidence(g).rows
    reduced, _ = blockwise_row_reduce(m)
    r = m.shape[0]
    a_block = reduced[:, r:]
    tb = mod_tables(p)
    factor = pow(tb.falling(n * spec.calV, n * spec.calE), r, p)
    rest = block_perm_mod(a_block, n * spec.calV - n * spec.calE, n * spec.calE, p)
    return factor * rest % p
