"""Matrix core: validation, conjugate transpose, products, LU determinants
in log form, and the hermitian positive-definite solve.

Oracles live at the top and stay independent of the code paths they check:
a triple-loop product and a recursive cofactor determinant.
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gramdist import (
    DimensionMismatch,
    LogDet,
    NotPositiveDefinite,
    NotSquare,
    ShapeError,
    as_matrix,
    as_vector,
    conj_transpose,
    det_lu,
    matmul,
    solve_hermitian_psd,
)


def matmul_loops(a, b):
    """Naive triple-loop product."""
    a = np.asarray(a)
    b = np.asarray(b)
    out = np.zeros((a.shape[0], b.shape[1]), np.complex128)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0.0 + 0.0j
            for k in range(a.shape[1]):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def det_cofactor(a):
    """Recursive cofactor expansion along the first row; fine up to 5x5."""
    a = np.asarray(a, np.complex128)
    n = a.shape[0]
    if n == 1:
        return a[0, 0]
    total = 0.0 + 0.0j
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * a[0, j] * det_cofactor(minor)
    return total


def _elements(lo=-5.0, hi=5.0):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw, max_rows=4, max_cols=4, square=False):
    m = draw(st.integers(1, max_rows))
    n = m if square else draw(st.integers(1, max_cols))
    re = draw(arrays(np.float64, (m, n), elements=_elements()))
    im = draw(arrays(np.float64, (m, n), elements=_elements()))
    return re + 1j * im


@st.composite
def square_pairs(draw, max_size=4):
    k = draw(st.integers(1, max_size))
    mats = []
    for _ in range(2):
        re = draw(arrays(np.float64, (k, k), elements=_elements()))
        im = draw(arrays(np.float64, (k, k), elements=_elements()))
        mats.append(re + 1j * im)
    return mats


class TestValidation:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            as_matrix([[1.0, float("nan")]])

    def test_rejects_inf_vector(self):
        with pytest.raises(ValueError):
            as_vector([1.0, float("inf")])

    def test_rejects_wrong_ndim(self):
        with pytest.raises(ShapeError):
            as_matrix([1.0, 2.0])
        with pytest.raises(ShapeError):
            as_vector([[1.0], [2.0]])

    def test_rejects_empty(self):
        with pytest.raises(ShapeError):
            as_matrix(np.zeros((0, 3)))

    def test_returns_read_only_copy(self):
        src = np.array([[1.0, 2.0]])
        out = as_matrix(src)
        assert not out.flags.writeable
        src[0, 0] = 9.0
        assert out[0, 0] == 1.0

    def test_int_input_becomes_float(self):
        assert as_matrix([[1, 2]]).dtype == np.float64


class TestConjTranspose:
    def test_pure_imaginary_entry(self):
        out = conj_transpose([[1j]])
        assert out[0, 0] == -1j

    def test_real_matrix_is_plain_transpose(self):
        m = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        np.testing.assert_array_equal(conj_transpose(m), m.T)

    @given(complex_matrices(max_rows=3, max_cols=2))
    def test_involution(self, m):
        np.testing.assert_array_equal(conj_transpose(conj_transpose(m)), m)


class TestMatmul:
    def test_identity(self):
        m = np.arange(9.0).reshape(3, 3) + 1.0
        np.testing.assert_array_equal(matmul(np.eye(3), m), m)

    def test_permutation_swap(self):
        out = matmul([[0.0, 1.0], [1.0, 0.0]], [[3.0], [7.0]])
        np.testing.assert_array_equal(out, [[7.0], [3.0]])

    def test_against_triple_loop(self):
        rng = np.random.default_rng(11)
        a = rng.uniform(-1, 1, (2, 3)) + 1j * rng.uniform(-1, 1, (2, 3))
        b = rng.uniform(-1, 1, (3, 2)) + 1j * rng.uniform(-1, 1, (3, 2))
        np.testing.assert_allclose(matmul(a, b), matmul_loops(a, b), rtol=1e-14, atol=1e-14)

    def test_inner_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            matmul(np.ones((2, 3)), np.ones((2, 2)))


class TestLogDet:
    def test_zero_is_phase_zero_log_minus_inf(self):
        z = LogDet.zero()
        assert z.is_zero and z.phase == 0 and z.log_mag == -math.inf
        assert z.value() == 0

    def test_nonzero_needs_unit_phase(self):
        with pytest.raises(ValueError):
            LogDet(0.5 + 0j, 1.0)
        with pytest.raises(ValueError):
            LogDet(0j, 1.0)

    def test_from_value_round_trip(self):
        ld = LogDet.from_value(-3.5 + 1.25j)
        assert abs(ld.value() - (-3.5 + 1.25j)) < 1e-14

    def test_mul_adds_logs_and_multiplies_phases(self):
        a = LogDet.from_value(2.0)
        b = LogDet.from_value(-3.0)
        c = a * b
        assert abs(c.value() - (-6.0)) < 1e-14
        assert (a * LogDet.zero()).is_zero

    def test_value_overflow(self):
        big = LogDet(1.0 + 0j, 800.0)
        with pytest.raises(OverflowError):
            big.value()
        with pytest.raises(OverflowError):
            big.magnitude()


class TestDetLu:
    def test_identity(self):
        ld = det_lu(np.eye(4))
        assert abs(ld.phase - 1) < 1e-15 and ld.log_mag == 0.0

    def test_row_swap_sign(self):
        ld = det_lu([[0.0, 1.0], [1.0, 0.0]])
        assert abs(ld.phase + 1) < 1e-15 and ld.log_mag == 0.0

    def test_not_square(self):
        with pytest.raises(NotSquare):
            det_lu(np.ones((2, 3)))

    def test_exact_zero_column(self):
        ld = det_lu([[0.0, 1.0], [0.0, 2.0]])
        assert ld.is_zero

    def test_against_cofactor_oracle(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            m = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
            expected = det_cofactor(m)
            got = det_lu(m).value()
            assert abs(got - expected) <= 1e-12 * abs(expected)

    @given(square_pairs())
    def test_product_rule(self, mats):
        m, n = mats
        # determinants are only as accurate as their conditioning allows, so
        # restrict the property to draws where it is numerically well posed
        assume(np.linalg.cond(m) < 1e4)
        assume(np.linalg.cond(n) < 1e4)
        assume(np.linalg.cond(m @ n) < 1e4)
        lhs = det_lu(m) * det_lu(n)
        rhs = det_lu(m @ n)
        ratio = lhs.phase * rhs.phase.conjugate() * math.exp(lhs.log_mag - rhs.log_mag)
        assert abs(ratio - 1) <= 1e-10

    def test_product_rule_random_8x8(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            k = rng.integers(1, 9)
            m = rng.uniform(-1, 1, (k, k)) + 1j * rng.uniform(-1, 1, (k, k))
            n = rng.uniform(-1, 1, (k, k)) + 1j * rng.uniform(-1, 1, (k, k))
            lhs = det_lu(m) * det_lu(n)
            rhs = det_lu(m @ n)
            ratio = lhs.phase * rhs.phase.conjugate() * math.exp(lhs.log_mag - rhs.log_mag)
            assert abs(ratio - 1) <= 1e-10

    def test_conj_transpose_determinant(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            k = rng.integers(1, 7)
            m = rng.uniform(-1, 1, (k, k)) + 1j * rng.uniform(-1, 1, (k, k))
            a = det_lu(conj_transpose(m))
            b = det_lu(m).conjugate()
            ratio = a.phase * b.phase.conjugate() * math.exp(a.log_mag - b.log_mag)
            assert abs(ratio - 1) <= 1e-12


class TestSolveHermitianPsd:
    def test_identity_system(self):
        x = solve_hermitian_psd(np.eye(3), [0.0, 1.0, 0.0])
        np.testing.assert_allclose(x, [0.0, 1.0, 0.0], atol=1e-15)

    def test_diagonal_system(self):
        x = solve_hermitian_psd([[2.0, 0.0], [0.0, 5.0]], [2.0, 10.0])
        np.testing.assert_allclose(x, [1.0, 2.0], atol=1e-14)

    def test_regression_fixture_gram(self):
        # centered Gram of x = (1,2,3,4): [[5]], rhs = centered cross term 3
        x = solve_hermitian_psd([[5.0]], [3.0])
        np.testing.assert_allclose(x, [0.6], atol=1e-15)

    def test_rank_deficient_gram_rejected(self):
        a = np.array([[1.0, 1.0], [1.0, 1.0]])
        with pytest.raises(NotPositiveDefinite):
            solve_hermitian_psd(a.T @ a, [1.0, 1.0])

    def test_not_square_and_mismatch(self):
        with pytest.raises(NotSquare):
            solve_hermitian_psd(np.ones((2, 3)), [1.0, 1.0])
        with pytest.raises(DimensionMismatch):
            solve_hermitian_psd(np.eye(2), [1.0, 1.0, 1.0])

    def test_real_inputs_give_real_solution(self):
        x = solve_hermitian_psd([[4.0, 1.0], [1.0, 3.0]], [1.0, 2.0])
        assert x.dtype == np.float64

    def test_residual_on_random_shifted_grams(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            k = rng.integers(1, 11)
            g = rng.uniform(-1, 1, (k, k)) + 1j * rng.uniform(-1, 1, (k, k))
            h = g.conj().T @ g + np.eye(k)
            rhs = rng.uniform(-1, 1, k) + 1j * rng.uniform(-1, 1, k)
            x = solve_hermitian_psd(h, rhs)
            assert np.linalg.norm(h @ x - rhs) <= 1e-9 * np.linalg.norm(rhs)

    def test_gram_matrices_hermitian_psd(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            k = rng.integers(1, 8)
            g = rng.uniform(-1, 1, (k, k)) + 1j * rng.uniform(-1, 1, (k, k))
            gram = conj_transpose(g) @ np.asarray(g)
            assert np.max(np.abs(gram - gram.conj().T)) <= 1e-14
            x = rng.uniform(-1, 1, k) + 1j * rng.uniform(-1, 1, k)
            assert np.vdot(x, gram @ x).real >= -1e-12
