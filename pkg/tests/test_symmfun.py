from fractions import Fraction
from functools import lru_cache

import pytest

from flagcob.combinatorics import ExponentSeq, sequences_of_grading
from flagcob.symmfun import (
    SymExpr,
    complement_transform,
    expand_monomial_sym,
    lambda_matrix,
    lambda_row,
)

E = ExponentSeq


# ------------------------------------------------------------------ power-sum oracle

def _poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
    return out


def _power_sum(k, nvars):
    return {tuple(k if j == i else 0 for j in range(nvars)): 1 for i in range(nvars)}


def _invert(mat):
    size = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(mat)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def newton_lambda(grading):
    """lambda by way of power sums: m = R^-1 p, then p_k -> -p_k."""
    basis = sequences_of_grading(grading)
    nvars = grading // 2
    parts = [tuple(w.parts()) for w in basis]
    R = []
    for mu in parts:
        poly = {(0,) * nvars: 1}
        for k in mu:
            poly = _poly_mul(poly, _power_sum(k, nvars))
        R.append([poly.get(tuple(lam) + (0,) * (nvars - len(lam)), 0) for lam in parts])
    Rinv = _invert(R)
    size = len(basis)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append(sum(Rinv[i][k] * (-1) ** len(parts[k]) * R[k][j] for k in range(size)))
        rows.append(tuple(row))
    return basis, tuple(rows), R, Rinv


# ------------------------------------------------------------------ tests

def test_expand_monomial_examples():
    assert expand_monomial_sym(E.eps(1), ("z1", "z2")) == {(1, 0): 1, (0, 1): 1}
    assert expand_monomial_sym(E.eps(3), ("z",)) == {(3,): 1}
    assert expand_monomial_sym(E((2,)), ("z",)) == {}
    assert expand_monomial_sym(E((2,)), ("z1", "z2")) == {(1, 1): 1}


def test_complement_examples():
    assert complement_transform(E.eps(1)) == SymExpr({E.eps(1): -1})
    assert complement_transform(E.eps(2)) == SymExpr({E.eps(2): -1})
    assert complement_transform(E((2,))) == SymExpr({E((2,)): 1, E.eps(2): 1})
    assert lambda_row(E()) == {E(): 1}


def test_lambda_goldens():
    assert lambda_matrix(2)[1] == ((-1,),)
    basis, rows = lambda_matrix(4)
    assert basis == (E((2,)), E((0, 1)))
    assert rows == ((1, 1), (0, -1))
    basis, rows = lambda_matrix(6)
    assert basis == (E((3,)), E((1, 1)), E((0, 0, 1)))
    assert rows == ((-1, -1, -1), (0, 1, 2), (0, 0, -1))


@pytest.mark.parametrize("grading", range(2, 13, 2))
def test_lambda_matches_power_sum_oracle(grading):
    basis, rows = lambda_matrix(grading)
    obasis, orows, _, _ = newton_lambda(grading)
    assert basis == obasis
    assert rows == orows


@pytest.mark.parametrize("grading", range(2, 13, 2))
def test_m_to_p_and_back_is_identity(grading):
    _, _, R, Rinv = newton_lambda(grading)
    size = len(R)
    for i in range(size):
        for j in range(size):
            assert sum(Rinv[i][k] * R[k][j] for k in range(size)) == int(i == j)


@pytest.mark.parametrize("grading", range(2, 17, 2))
def test_lambda_is_involution(grading):
    _, rows = lambda_matrix(grading)
    size = len(rows)
    for i in range(size):
        for j in range(size):
            assert sum(rows[i][k] * rows[k][j] for k in range(size)) == int(i == j)


@pytest.mark.parametrize("grading", range(2, 13, 2))
def test_lambda_support_and_diagonal(grading):
    # nonzero only when omega has no more parts than psi; diagonal is (-1)^parts
    basis, rows = lambda_matrix(grading)
    for i, psi in enumerate(basis):
        assert rows[i][i] == (-1) ** psi.num_parts
        for j, omega in enumerate(basis):
            if rows[i][j]:
                assert omega.num_parts <= psi.num_parts
