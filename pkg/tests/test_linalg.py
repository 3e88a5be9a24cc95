from fractions import Fraction

from hypothesis import given, strategies as st

from griess_forge.exact import CycNum, zeta
from griess_forge import linalg as la
from griess_forge.intmat import hnf, snf_with_transform, int_matmul, int_det


F = Fraction


def test_solve_identity():
    a = la.identity(3)
    b = [F(1), F(-2), F(7, 3)]
    assert la.solve(a, b) == b


def test_solve_inconsistent():
    a = [[F(1), F(1)], [F(1), F(1)]]
    assert la.solve(a, [F(0), F(1)]) is None


def test_kernel_of_difference_row():
    k = la.kernel([[F(1), F(-1)]])
    assert len(k) == 1
    v = k[0]
    assert v[0] == v[1] != 0


def test_solve_over_cyclotomic():
    z = zeta(3)
    a = [[z, CycNum(1)], [CycNum(0), z * z]]
    x = la.solve(a, [CycNum(1), CycNum(1)])
    assert x is not None
    assert la.mat_vec(a, x) == [CycNum(1), CycNum(1)]


def test_inverse_and_det():
    a = [[F(2), F(1)], [F(1), F(1)]]
    inv = la.inverse(a)
    assert la.mat_eq(la.mat_mul(a, inv), la.identity(2))
    assert la.det(a) == 1


def test_solution_substitutes_back():
    a = [[F(2), F(0), F(1)], [F(0), F(1), F(1)]]
    b = [F(3), F(2)]
    x = la.solve(a, b)
    assert la.mat_vec(a, x) == b


def test_row_span_coords():
    rows = [[F(1), F(0), F(1)], [F(0), F(2), F(0)]]
    c = la.row_span_coords(rows, [F(1), F(4), F(1)])
    assert c == [F(1), F(2)]
    assert la.row_span_coords(rows, [F(0), F(0), F(1)]) is None


def test_hnf_basis():
    rows = [[2, 0], [0, 2], [1, 1]]
    basis = hnf(rows)
    assert len(basis) == 2
    assert abs(int_det(basis)) == 2  # index-2 sublattice of Z^2


def test_snf_transform_identity():
    a = [[2, 4], [6, 8]]
    diag, u, v = snf_with_transform(a)
    d = int_matmul(int_matmul(u, a), v)
    assert [d[i][i] for i in range(len(diag))] == diag
    assert abs(int_det(u)) == 1 and abs(int_det(v)) == 1
    assert diag == [2, 4] or diag[0] * diag[1] == 8 and diag[1] % diag[0] == 0


@given(st.lists(st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_snf_random(a):
    diag, u, v = snf_with_transform(a)
    d = int_matmul(int_matmul(u, a), v)
    n = len(diag)
    for i in range(3):
        for j in range(3):
            if i == j and i < n:
                assert d[i][j] == diag[i]
            else:
                assert d[i][j] == 0
    for i in range(n - 1):
        assert diag[i + 1] % diag[i] == 0
    assert abs(int_det(u)) == 1 and abs(int_det(v)) == 1
