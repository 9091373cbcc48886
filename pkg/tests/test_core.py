from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropical_iip import (
    EPS,
    GenPermMatrix,
    MpMatrix,
    ShapeError,
    UnsupportedEntryError,
    conjugate,
    frac_decompose,
    minplus_apply,
    minplus_matmul,
    mp_apply,
    mp_matmul,
    residual,
)
from tropical_iip.matrix import mp_add, mp_power
from tropical_iip.scalar import oplus, otimes, to_scalar

from conftest import F, finite_matrices, rationals, vectors

ext = st.one_of(st.just(EPS), rationals())


class TestScalars:
    def test_canonical_form(self):
        a = to_scalar(Fraction(6, -4))
        assert (a.numerator, a.denominator) == (-3, 2)

    def test_decimal_is_exact(self):
        assert to_scalar("0.1") == Fraction(1, 10)

    def test_float_refused(self):
        with pytest.raises(TypeError):
            to_scalar(0.5)

    def test_eps_order(self):
        assert EPS < Fraction(-10**9)
        assert not Fraction(3) < EPS
        assert max(EPS, Fraction(-1)) == -1
        assert min(EPS, Fraction(-1)) is EPS

    def test_eps_absorbing_and_neutral(self):
        assert EPS + Fraction(5) is EPS
        assert Fraction(5) + EPS is EPS
        assert oplus(EPS, Fraction(2)) == 2

    @given(ext, ext, ext)
    def test_semiring_laws(self, a, b, c):
        assert oplus(a, b) == oplus(b, a)
        assert otimes(a, b) == otimes(b, a)
        assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))
        assert otimes(otimes(a, b), c) == otimes(a, otimes(b, c))
        assert otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c))
        assert oplus(a, EPS) == a
        assert otimes(a, EPS) is EPS
        assert otimes(a, Fraction(0)) == a


class TestMatmul:
    def test_identity(self):
        A = MpMatrix([[0, 1], [2, 3]])
        assert mp_matmul(MpMatrix.identity(2), A) == A
        assert mp_matmul(A, MpMatrix.identity(2)) == A

    def test_matvec(self):
        assert mp_apply(MpMatrix([[0, 1], [2, 3]]), F(0, 0)) == F(1, 3)

    def test_all_eps(self):
        assert mp_apply(MpMatrix.eps(2, 2), F(0, 0)) == (EPS, EPS)

    def test_operator(self):
        A = MpMatrix([[0, 1], [2, 3]])
        assert A @ F(0, 0) == F(1, 3)
        assert A @ MpMatrix.identity(2) == A

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            mp_matmul(MpMatrix([[1, 2]]), MpMatrix([[1, 2]]))

    @given(finite_matrices(m=3, n=3), finite_matrices(m=3, n=2), finite_matrices(m=2, n=2))
    def test_associative(self, A, B, C):
        assert mp_matmul(mp_matmul(A, B), C) == mp_matmul(A, mp_matmul(B, C))

    @given(finite_matrices(m=2, n=3), finite_matrices(m=2, n=3, elements=st.integers(0, 5).map(Fraction)),
           finite_matrices(m=3, n=2))
    def test_isotonicity(self, B, delta, C):
        A = MpMatrix([[b + d for b, d in zip(rb, rd)] for rb, rd in zip(B.rows, delta.rows)])
        assert A >= B
        assert mp_matmul(A, C) >= mp_matmul(B, C)
        assert mp_matmul(C, A) >= mp_matmul(C, B)

    def test_power(self):
        A = MpMatrix([[-1, 0], [EPS, -2]])
        assert mp_power(A, 0) == MpMatrix.identity(2)
        assert mp_power(A, 2) == mp_matmul(A, A)

    def test_add(self):
        assert mp_add(MpMatrix([[1, EPS]]), MpMatrix([[0, 2]])) == MpMatrix([[1, 2]])


class TestMinPlus:
    def test_matvec(self):
        assert minplus_apply(MpMatrix([[0, 1], [2, 3]]), F(0, 0)) == F(0, 2)

    def test_scalar(self):
        assert minplus_matmul(MpMatrix([[5]]), MpMatrix([[7]])) == MpMatrix([[12]])

    def test_row(self):
        assert minplus_apply(MpMatrix([[1, 2]]), F(3, 3)) == F(4)

    def test_rejects_eps(self):
        with pytest.raises(UnsupportedEntryError):
            minplus_matmul(MpMatrix([[EPS]]), MpMatrix([[1]]))


class TestConjugate:
    def test_zero(self):
        assert conjugate(MpMatrix([[0]])) == MpMatrix([[0]])

    def test_two_by_two(self):
        assert conjugate(MpMatrix([[0, 1], [2, 3]])) == MpMatrix([[0, -2], [-1, -3]])

    @given(finite_matrices())
    def test_involution(self, A):
        assert conjugate(conjugate(A)) == A

    def test_rejects_eps(self):
        with pytest.raises(UnsupportedEntryError):
            conjugate(MpMatrix([[EPS, 1]]))


class TestResidual:
    def test_example(self):
        A = MpMatrix([[0, 1], [2, 3]])
        x = residual(A, F(1, 3))
        assert x == F(1, 0)
        assert mp_apply(A, x) == F(1, 3)

    def test_identity_like(self):
        # finite stand-in for I: off-diagonal entries far below the diagonal
        A = MpMatrix([[0, -100], [-100, 0]])
        assert residual(A, F(5, 7)) == F(5, 7)

    def test_single_column(self):
        assert residual(MpMatrix([["1/2"], ["3/5"]]), F(0, 0)) == F("-3/5")

    def test_is_conjugate_product(self):
        A = MpMatrix([["1/2", 3], [-1, "7/3"]])
        b = F(2, "1/3")
        assert residual(A, b) == minplus_apply(conjugate(A), b)

    def test_shape(self):
        with pytest.raises(ShapeError):
            residual(MpMatrix([[0, 1]]), F(1, 2))

    @given(finite_matrices(m=3, n=2), vectors(2), vectors(3))
    def test_galois_connection(self, A, x, y):
        xbar = residual(A, y)
        assert all(a <= b for a, b in zip(mp_apply(A, xbar), y))
        lhs = all(a <= b for a, b in zip(mp_apply(A, x), y))
        rhs = all(a <= b for a, b in zip(x, xbar))
        assert lhs == rhs


class TestFracDecompose:
    def test_entries(self):
        fl, fr, ce = frac_decompose(MpMatrix([["7/2", "-1/5", 4]]))
        assert fl == MpMatrix([[3, -1, 4]])
        assert fr == MpMatrix([["1/2", "4/5", 0]])
        assert ce == MpMatrix([[4, 0, 4]])

    @given(finite_matrices())
    def test_round_trip(self, A):
        fl, fr, ce = frac_decompose(A)
        for a, f, r, c in zip(A.entries(), fl.entries(), fr.entries(), ce.entries()):
            assert f + r == a
            assert 0 <= r < 1
            assert f.denominator == 1 and c.denominator == 1
            assert c == -((-a).__floor__())


class TestGenPerm:
    def test_identity_inverse(self):
        assert GenPermMatrix.identity(3).inverse() == GenPermMatrix.identity(3)

    def test_inverse_weights(self):
        Q = GenPermMatrix((1, 0), F("-1.7", "-1.2"))
        Qi = Q.inverse()
        assert Qi.perm == (1, 0)
        assert Qi.weights == F("1.2", "1.7")
        assert mp_matmul(Q.to_matrix(), Qi.to_matrix()) == MpMatrix.identity(2)
        assert mp_matmul(Qi.to_matrix(), Q.to_matrix()) == MpMatrix.identity(2)

    def test_column_permute_and_shift(self):
        A = MpMatrix([["0.5", "1.2"], ["1.7", "0.3"]])
        Q = GenPermMatrix((1, 0), F("-1.2", "-1.7"))
        expected = MpMatrix([[0, "-1.2"], ["-0.9", 0]])
        assert Q.right_multiply(A) == expected
        assert mp_matmul(A, Q.to_matrix()) == expected

    @given(st.permutations(range(4)), vectors(4), vectors(4))
    def test_apply_matches_matrix(self, perm, w, v):
        Q = GenPermMatrix(tuple(perm), w)
        assert Q.apply(v) == mp_apply(Q.to_matrix(), v)
        assert mp_matmul(Q.to_matrix(), Q.inverse().to_matrix()) == MpMatrix.identity(4)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            GenPermMatrix((0, 0), F(1, 2))
