import numpy as np
import pytest
import sympy as sp

import kac_typicality.scalars as sc
from kac_typicality.errors import PreconditionError


def test_parse_rational():
    assert sc.parse_rational("3/6") == sp.Rational(1, 2)
    assert sc.parse_rational(" -4 ") == sp.Integer(-4)
    assert sc.parse_rational("2/-4") == sp.Rational(-1, 2)


@pytest.mark.parametrize("text", ["1/0", "a", "1/2/3", ""])
def test_parse_rational_rejects_malformed_input(text):
    with pytest.raises(PreconditionError):
        sc.parse_rational(text)


def test_rational_to_string():
    assert sc.rational_to_string(0) == "0/1"
    assert sc.rational_to_string(sp.Rational(-1, 2)) == "-1/2"
    assert sc.rational_to_string(sp.Rational(6, 3)) == "2/1"
    assert sc.is_integral(sp.Rational(4, 2))
    assert not sc.is_integral(sp.Rational(1, 2))


@pytest.mark.parametrize("p,k", [(2, 1), (4, 1), (9, 1), (3, 0)])
def test_field_rejects_bad_parameters(p, k):
    with pytest.raises(PreconditionError):
        sc.FqField(p, k)


def test_fields_are_cached():
    assert sc.fq_make(3, 1) is sc.fq_make(3, 1)
    assert sc.fq_make(3, 3) is not sc.fq_make(3, 1)


def test_extension_field():
    fq = sc.fq_make(3, 3)
    assert fq.order == 27
    d = fq.to_json()
    assert d['p'] == 3 and d['k'] == 3 and d['order'] == 27
    assert len(d['modulus']) == 4
    assert d['modulus'][0] == 1

    x = fq.from_coeffs([1, 2, 0])
    assert int(x) == 1 + 2 * 3
    assert fq.coeffs(x) == [1, 2, 0]

    xs = fq.elements()
    assert np.all(fq.frobenius(xs, 3) == xs)
    assert sum(1 for x in xs if fq.is_in_prime_subfield(x)) == 3


def test_prime_field_uses_integer_representations():
    fq = sc.fq_make(5, 1)
    assert int(fq.from_int(-1)) == 4
    assert int(fq.from_int(7)) == 2
    assert fq.absolute_trace(fq(3)) == 3


def test_absolute_trace():
    fq = sc.fq_make(3, 3)
    assert fq.absolute_trace(fq(1)) == 0
    traces = [fq.absolute_trace(x) for x in fq.elements()]
    # the trace is onto the prime field with equal fibers.
    assert sorted(set(traces)) == [0, 1, 2]
    assert all(traces.count(t) == 9 for t in range(3))


def test_artin_schreier_over_extension():
    fq = sc.fq_make(3, 3)
    roots = sc.artin_schreier_solve(fq, 1)
    assert len(roots) == 3
    for x in roots:
        assert x**3 - x == fq(1)


def test_artin_schreier_over_prime_field():
    fq = sc.fq_make(3, 1)
    assert sc.artin_schreier_solve(fq, 1) == []
    assert sorted(int(x) for x in sc.artin_schreier_solve(fq, 0)) == [0, 1, 2]


@pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2)])
def test_artin_schreier_linear_solve_matches_enumeration(p, k):
    fq = sc.fq_make(p, k)
    for c in range(fq.order):
        expected = sorted(int(x) for x in sc.artin_schreier_solve(fq, c))
        got = sorted(
            int(x) for x in sc._artin_schreier_by_linear_algebra(fq, fq(c)))
        assert got == expected


def test_kernel_over_prime_field():
    fq = sc.fq_make(3, 1)
    K = sc.kernel(fq([[1, 2], [2, 1]]))
    assert K.shape == (1, 2)
    assert [int(x) for x in K[0]] == [1, 1]


def test_rank_and_empty_matrices():
    fq = sc.fq_make(5, 1)
    assert sc.rank(fq.identity(3)) == 3
    assert sc.rank(fq.zeros((0, 3))) == 0
    assert sc.kernel(fq.zeros((0, 3))).shape == (3, 3)


def test_reduce_modulo_and_in_span():
    fq = sc.fq_make(5, 1)
    B = sc.echelon_basis(fq([[1, 2, 3], [0, 1, 1]]))
    assert sc.pivot_columns(B) == [0, 1]
    v = fq([2, 0, 1])
    r = sc.reduce_modulo(v.reshape((1, 3)), B)
    assert int(r[0, 0]) == 0 and int(r[0, 1]) == 0
    assert sc.in_span(B, fq([1, 3, 4]))
    assert not sc.in_span(B, fq([0, 0, 1]))


def test_exact_matrix_over_rationals():
    M = sc.ExactMatrix([[1, 2], [2, 4]])
    assert M.rank() == 1
    assert M.nullity() == 1
    assert M.kernel().rows() == [[-2, 1]]
    assert M.contains([3, 6])
    assert not M.contains([1, 0])
    assert M.row_reduce() == sc.ExactMatrix([[1, 2], [0, 0]])


def test_exact_matrix_over_finite_field():
    fq = sc.fq_make(5, 1)
    M = sc.ExactMatrix([[1, 2, 3]], fq)
    assert M.shape == (1, 3)
    assert M.contains([2, 4, 1])
    assert not M.contains([1, 0, 0])
    assert M.kernel().shape == (2, 3)


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (3, 2), (5, 2), (3, 3)])
def test_frobenius_is_additive(p, k):
    fq = sc.fq_make(p, k)
    rng = np.random.RandomState(p * 10 + k)
    x = fq(rng.randint(0, fq.order, size=100))
    y = fq(rng.randint(0, fq.order, size=100))
    assert np.all(fq.frobenius(x + y) == fq.frobenius(x) + fq.frobenius(y))


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (3, 2)])
def test_rank_plus_nullity(p, k):
    fq = sc.fq_make(p, k)
    rng = np.random.RandomState(p + k)
    for _ in range(20):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        # sparse entries so that rank drops now and then.
        A = fq(rng.randint(0, fq.order, size=(rows, cols)) *
               (rng.rand(rows, cols) < 0.4))
        K = sc.kernel(A)
        assert sc.rank(A) + K.shape[0] == cols
        if K.shape[0] > 0:
            assert np.all(A @ K.T == 0)


def test_rational_sums_match_cross_multiplication():
    rng = np.random.RandomState(0)
    for _ in range(1000):
        a, c = [int(v) for v in rng.randint(-1000, 1001, size=2)]
        b, d = [int(v) for v in rng.randint(1, 1001, size=2)]
        x = sc.parse_rational("%d/%d" % (a, b)) + sc.parse_rational(
            "%d/%d" % (c, d))
        assert x.p * b * d == x.q * (a * d + c * b)
        assert sc.parse_rational(sc.rational_to_string(x)) == x
