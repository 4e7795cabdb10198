import math

import pytest
import sympy

from egperm.cofactor import gperm_cofactor
from egperm.graphs import (
    GraphError, banana, block_spec, build_graph, wheel, zigzag,
)
from egperm.numtheory import admissible_primes
from egperm.permanent import gperm_direct, perm_exact
from egperm.pointcount import (
    coefficient_oracle,
    permanent_polynomial,
    point_count,
    reconcile,
)
import numpy as np

K4 = zigzag(4)
TRIANGLE = build_graph([(0, 1), (1, 2), (0, 2)], 3, 0)


def test_permanent_polynomial_shape():
    f = permanent_polynomial(TRIANGLE)  # calV = 3, calE = 2 -> L = 6
    assert f.num_vars == 6
    assert f.power == 3
    assert len(f.coeffs) == 2  # one factor per non-special vertex


def test_point_count_known_values():
    assert point_count(banana(2), 3) == 1
    assert point_count(banana(2), 5) == 9
    assert point_count(K4, 3) == 501
    assert point_count(TRIANGLE, 3) == 405


def test_coefficient_oracle_matches_gperm():
    cases = [(banana(2), (3, 5, 7)), (TRIANGLE, (7,)), (K4, (3, 5))]
    for g, primes in cases:
        for p in primes:
            assert coefficient_oracle(g, p) == gperm_direct(g, p)


def test_count_identity():
    # GPerm = (-1)^(L+1) * n!^L * N with N the number of zeros of the
    # vertex-form product over F_p^L; banana(3) has odd L and pins the sign
    for g, bound in ((banana(2), 7), (banana(3), 7), (TRIANGLE, 7), (K4, 5)):
        for p in admissible_primes(block_spec(g).calV, bound):
            report = reconcile(g, p)
            assert report["coefficient_ok"], (g, p, report)
            assert report["count_ok"], (g, p, report)


def test_reconcile_accepts_precomputed_residue():
    report = reconcile(banana(2), 5, gperm=gperm_cofactor(banana(2), 5))
    assert report["gperm"] == 4 and report["count_ok"]


def test_mod2_point_count_even_for_doubled_ratio_graphs():
    # graphs with |E| = 2(|V|-1) have an even number of zeros over F_2
    doubled_path = build_graph([(0, 1), (0, 1), (1, 2), (1, 2)], 3, 0)
    graphs = [banana(2), doubled_path, K4, wheel(4)]
    for g in graphs:
        assert 2 * (g.vertex_count - 1) == g.edge_count
        assert point_count(g, 2) % 2 == 0


def test_lattice_caps():
    with pytest.raises(GraphError):
        point_count(wheel(5), 11)  # 11^10 points
    with pytest.raises(GraphError):
        coefficient_oracle(wheel(5), 11)


def test_block_extension_coefficient_identity_sympy():
    # Perm(1_r (x) A) = r!^n * [x_1^r .. x_n^r] (prod_i sum_j a_ij x_j)^r
    rng = np.random.default_rng(17)
    xs = sympy.symbols("x0 x1 x2")
    for n, r in [(2, 2), (2, 3), (3, 2)]:
        a = rng.integers(-3, 4, size=(n, n))
        big = np.kron(np.ones((r, r), dtype=np.int64), a)
        lhs = perm_exact(big)
        poly = sympy.prod(
            sum(int(a[i, j]) * xs[j] for j in range(n)) for i in range(n))
        expanded = sympy.Poly((poly) ** r, *xs[:n])
        coeff = expanded.coeff_monomial(sympy.prod(x ** r for x in xs[:n]))
        assert lhs == math.factorial(r) ** n * int(coeff)
