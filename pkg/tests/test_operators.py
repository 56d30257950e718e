import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobweb import (
    FSequence,
    PolyOperator,
    PolySpec,
    check_graves_identity,
    commutator,
    f_derivative_op,
    poly_of_op,
    x_hat_op,
)
from cobweb.errors import DimensionMismatch, TruncationTooSmall

from conftest import BUILTINS
from oracles import apply_dF, apply_poly_of, apply_xhat, monomial

nat = FSequence.natural()
fib = FSequence.fibonacci()
g2 = FSequence.gaussian(2)


def fvals(F, N):
    return [F[n] for n in range(N + 2)]


def test_derivative_examples():
    D = f_derivative_op(nat, 5)
    for n in range(6):
        assert list(D.column(n)) == [n if i == n - 1 else 0 for i in range(6)]
    assert f_derivative_op(fib, 5).column(4) == (0, 0, 0, 3, 0, 0)
    assert f_derivative_op(g2, 5).column(3) == (0, 0, 7, 0, 0, 0)


def test_x_hat_examples():
    X = x_hat_op(nat, 5)
    assert X.matrix == tuple(tuple(int(i == j + 1) for j in range(6)) for i in range(6))
    assert x_hat_op(fib, 5).column(3)[4] == Fraction(4, 3)
    assert x_hat_op(g2, 5).column(2)[3] == Fraction(3, 7)
    assert not any(x_hat_op(g2, 5).column(5))


@pytest.mark.parametrize("key", sorted(BUILTINS))
def test_matrices_match_coefficient_oracle(key):
    F, N = BUILTINS[key], 9
    vals = fvals(F, N)
    D, X = f_derivative_op(F, N), x_hat_op(F, N)
    for j in range(N + 1):
        e = monomial(j, N)
        assert D.apply(e) == apply_dF(vals, e, N)
        assert X.apply(e) == apply_xhat(vals, e, N)


def test_commutator_examples():
    A = f_derivative_op(fib, 6)
    assert commutator(A, A).is_zero()
    C = commutator(f_derivative_op(nat, 5), x_hat_op(nat, 5))
    eye = PolyOperator.identity(5)
    assert all(C.column(j) == eye.column(j) for j in range(5))
    assert C.column(5) == (0, 0, 0, 0, 0, -5)
    C = commutator(f_derivative_op(fib, 8), x_hat_op(fib, 8))
    assert all(C.column(j) == PolyOperator.identity(8).column(j) for j in range(8))


@pytest.mark.parametrize("key", sorted(BUILTINS))
def test_heisenberg_pair_and_centrality(key):
    F = BUILTINS[key]
    for N in range(2, 17):
        D, X = f_derivative_op(F, N), x_hat_op(F, N)
        C = commutator(D, X)
        eye = PolyOperator.identity(N)
        assert all(C.column(j) == eye.column(j) for j in range(N))
        assert commutator(D, C).is_zero(range(N - 1))
        assert commutator(X, C).is_zero(range(N - 1))


def test_natural_is_classical():
    N = 7
    for j in range(N + 1):
        e = monomial(j, N)
        deriv = [(i + 1) * e[i + 1] for i in range(N)] + [Fraction(0)]
        assert f_derivative_op(nat, N).apply(e) == deriv
        times_x = [Fraction(0)] + e[:-1]
        assert x_hat_op(nat, N).apply(e) == times_x


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        commutator(f_derivative_op(nat, 3), x_hat_op(nat, 4))
    with pytest.raises(DimensionMismatch):
        poly_of_op(PolySpec((1,)), f_derivative_op(nat, 3)) @ PolyOperator.identity(2)
    with pytest.raises(DimensionMismatch):
        PolyOperator.from_rows([[1, 0], [0]])


def test_poly_of_op_examples():
    assert poly_of_op(PolySpec((1,)), f_derivative_op(g2, 4)) == PolyOperator.identity(4)
    D = f_derivative_op(nat, 5)
    assert poly_of_op(PolySpec((0, 0, 1)), D) == D @ D
    for j in range(6):
        assert list((D @ D).column(j)) == [j * (j - 1) if i == j - 2 else 0 for i in range(6)]
    M = poly_of_op(PolySpec((0, 2, 1)), f_derivative_op(fib, 6))
    assert M.column(4) == (0, 0, 6, 6, 0, 0, 0)


@given(st.lists(st.fractions(max_denominator=20).map(lambda x: x.limit_denominator(20)), min_size=1, max_size=5), st.sampled_from(sorted(BUILTINS)))
@settings(max_examples=40, deadline=None)
def test_poly_of_op_matches_oracle(coeffs, key):
    F, N = BUILTINS[key], 7
    vals = fvals(F, N)
    M = poly_of_op(PolySpec(tuple(coeffs)), f_derivative_op(F, N))
    for j in range(N + 1):
        e = monomial(j, N)
        assert M.apply(e) == apply_poly_of(coeffs, lambda v: apply_dF(vals, v, N), e)


@pytest.mark.parametrize(
    "coeffs,F,N,safe",
    [((0, 1), fib, 6, 5), ((0, 0, 1), nat, 8, 6), ((0, -1, 0, 1), g2, 10, 7), ((1,), g2, 4, 4)],
)
def test_graves_examples(coeffs, F, N, safe):
    rep = check_graves_identity(PolySpec(coeffs), F, N)
    assert rep.max_residual == 0 and rep.holds
    assert rep.safe_columns == safe


def test_graves_oracle_route():
    """Graves identity recomputed entirely on coefficient lists."""
    f = [Fraction(1, 3), -2, 0, Fraction(5, 2), 1]
    fprime = [i * c for i, c in enumerate(f)][1:]
    for key, F in BUILTINS.items():
        N = 10
        vals = fvals(F, N)
        dF = lambda v: apply_dF(vals, v, N)
        xh = lambda v: apply_xhat(vals, v, N)
        for j in range(N - 4):
            e = monomial(j, N)
            lhs = [a - b for a, b in zip(apply_poly_of(f, dF, xh(e)), xh(apply_poly_of(f, dF, e)))]
            assert lhs == apply_poly_of(fprime, dF, e), key


@given(st.lists(st.fractions(max_denominator=50).map(lambda x: x.limit_denominator(50)), min_size=1, max_size=5), st.sampled_from(sorted(BUILTINS)))
@settings(max_examples=60, deadline=None)
def test_graves_random(coeffs, key):
    f = PolySpec(tuple(coeffs))
    rep = check_graves_identity(f, BUILTINS[key], max(f.degree, 0) + 4)
    assert rep.max_residual == 0


def test_graves_detects_wrong_pair():
    """A raising operator without the 1/F scaling breaks the identity, and the residual sees it."""
    N = 6
    D = f_derivative_op(fib, N)
    plain_x = x_hat_op(nat, N)
    R = commutator(poly_of_op(PolySpec((0, 0, 1)), D), plain_x) - poly_of_op(PolySpec((0, 2)), D)
    assert not R.is_zero(range(N - 2))


def test_truncation_too_small():
    with pytest.raises(TruncationTooSmall):
        check_graves_identity(PolySpec((0, 0, 1)), nat, 3)


def test_polyspec():
    f = PolySpec.parse("1, 0, -1/2, 0")
    assert f.coeffs == (1, 0, Fraction(-1, 2)) and f.degree == 2
    assert f.derivative().coeffs == (0, -1)
    assert PolySpec(()).degree == -1 and str(PolySpec(())) == "0"
    with pytest.raises(ValueError):
        PolySpec.parse("1,,2")


def test_json_forms():
    d = x_hat_op(fib, 3).to_dict()
    assert d["N"] == 3 and d["rows"][2][1] == "2"
    assert json.loads(x_hat_op(g2, 3).to_json())["rows"][3][2] == "3/7"
    rep = check_graves_identity(PolySpec((0, 1)), fib, 6).to_dict()
    assert set(rep) == {"f", "F", "N", "safe_columns", "max_residual_numerator", "max_residual_denominator"}
    assert rep["max_residual_numerator"] == 0 and rep["max_residual_denominator"] == 1
