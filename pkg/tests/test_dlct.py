import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlctcrypt.dlct import (
    ChirpRates,
    dlct1_forward,
    dlct1_inverse,
    dlct2_forward,
    dlct2_forward_direct,
    dlct2_inverse,
    kernel_value,
)
from dlctcrypt.exceptions import ParameterError, SizeLimitError

from oracles import dft2


def rand_complex(rng, n, m):
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


@pytest.mark.parametrize(
    "n, k, size, beta, expected",
    [(0, 5, 8, 7.3, 1 + 0j), (1, 0, 4, 0.0, 1 + 0j), (1, 1, 4, 1.0, -1 + 0j)],
)
def test_kernel_value(n, k, size, beta, expected):
    assert kernel_value(n, k, size, beta) == pytest.approx(expected, abs=1e-15)


def test_kernel_unit_modulus():
    for n in range(6):
        for k in range(6):
            assert abs(kernel_value(n, k, 6, -2.7)) == pytest.approx(1.0, abs=1e-15)


def test_kernel_index_out_of_range():
    with pytest.raises(ParameterError):
        kernel_value(4, 0, 4, 0.0)


def test_dlct1_delta():
    np.testing.assert_allclose(dlct1_forward([1, 0, 0, 0], 3.7), [1, 1, 1, 1], atol=1e-15)


def test_dlct1_constant_is_dft():
    np.testing.assert_allclose(dlct1_forward([1, 1, 1, 1], 0.0), [4, 0, 0, 0], atol=1e-14)


def test_dlct1_two_point_hand_sum():
    # X[k] = 1 + i*exp(-i*pi*(k + 0.5)) -> [1 + i*(-i), 1 + i*(i)] = [2, 0]
    out = dlct1_forward([1, 1j], 0.5)
    direct = [sum(v * kernel_value(n, k, 2, 0.5) for n, v in enumerate([1, 1j])) for k in range(2)]
    np.testing.assert_allclose(out, [2, 0], atol=1e-15)
    np.testing.assert_allclose(out, direct, atol=1e-15)


def test_dlct1_inverse_round_trip():
    rng = np.random.default_rng(1)
    v = rng.standard_normal(37) + 1j * rng.standard_normal(37)
    np.testing.assert_allclose(dlct1_inverse(dlct1_forward(v, 2.2), 2.2), v, atol=1e-12)


@pytest.mark.parametrize("rates", [(0.0, 0.0), (1.5, -3.5), (-7.25, 0.3)])
def test_delta_image_gives_all_ones(rates):
    img = np.zeros((5, 7))
    img[0, 0] = 1
    np.testing.assert_allclose(dlct2_forward(img, rates), np.ones((5, 7)), atol=1e-14)
    np.testing.assert_allclose(dlct2_forward_direct(img, rates), np.ones((5, 7)), atol=1e-14)


def test_constant_image_zero_rates():
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = 16
    np.testing.assert_allclose(dlct2_forward(np.ones((4, 4)), (0, 0)), expected, atol=1e-13)


def test_fast_matches_direct_8x8():
    rng = np.random.default_rng(2)
    x = rand_complex(rng, 8, 8)
    fast = dlct2_forward(x, ChirpRates(1.5, -3.5))
    direct = dlct2_forward_direct(x, ChirpRates(1.5, -3.5))
    assert np.max(np.abs(fast - direct)) <= 1e-8


def test_direct_single_element():
    np.testing.assert_allclose(dlct2_forward_direct([[2 - 3j]], (4.1, -9.0)), [[2 - 3j]])


def test_direct_2x2_hand_expansion():
    # X(k,l) = 1 + (-1)^(k+l) * exp(-i*pi*(bx + by)); bx = by = 0.25 -> factor -i
    out = dlct2_forward_direct(np.eye(2), (0.25, 0.25))
    expected = np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]])
    np.testing.assert_allclose(out, expected, atol=1e-15)
    np.testing.assert_allclose(dlct2_forward(np.eye(2), (0.25, 0.25)), expected, atol=1e-15)


def test_direct_size_limit():
    with pytest.raises(SizeLimitError):
        dlct2_forward_direct(np.zeros((65, 64)), (0, 0))
    dlct2_forward_direct(np.zeros((2, 3)), (0, 0), max_elements=6)
    with pytest.raises(SizeLimitError):
        dlct2_forward_direct(np.zeros((2, 3)), (0, 0), max_elements=5)


def test_inverse_of_all_ones_is_delta():
    expected = np.zeros((6, 4), dtype=complex)
    expected[0, 0] = 1
    np.testing.assert_allclose(dlct2_inverse(np.ones((6, 4)), (2.5, -1.25)), expected, atol=1e-14)


def test_inverse_of_scaled_delta():
    X = np.zeros((4, 4), dtype=complex)
    X[0, 0] = 16
    np.testing.assert_allclose(dlct2_inverse(X, (0, 0)), np.ones((4, 4)), atol=1e-14)


def test_round_trip_16x16():
    rng = np.random.default_rng(3)
    x = rand_complex(rng, 16, 16)
    back = dlct2_inverse(dlct2_forward(x, (1.5, -3.5)), (1.5, -3.5))
    assert np.max(np.abs(back - x)) <= 1e-9


def test_round_trip_256x256():
    rng = np.random.default_rng(4)
    x = rng.integers(0, 256, (256, 256)).astype(float)
    back = dlct2_inverse(dlct2_forward(x, (123.4, -56.7)), (123.4, -56.7))
    assert np.max(np.abs(back - x)) <= 1e-9


@pytest.mark.parametrize("shape", [(1, 1), (3, 5), (8, 8), (13, 7)])
def test_zero_rates_match_independent_dft(shape):
    rng = np.random.default_rng(sum(shape))
    x = rand_complex(rng, *shape)
    np.testing.assert_allclose(dlct2_forward(x, (0, 0)), dft2(x), atol=1e-10)


def test_parseval_zero_rates():
    rng = np.random.default_rng(5)
    x = rand_complex(rng, 12, 20)
    X = dlct2_forward(x, (0, 0))
    assert np.sum(np.abs(X) ** 2) == pytest.approx(12 * 20 * np.sum(np.abs(x) ** 2), rel=1e-12)


def test_axis_order_commutes():
    rng = np.random.default_rng(6)
    x = rand_complex(rng, 24, 18)
    rows_first = dlct1_forward(dlct1_forward(x, -3.5, axis=1), 1.5, axis=0)
    cols_first = dlct1_forward(dlct1_forward(x, 1.5, axis=0), -3.5, axis=1)
    assert np.max(np.abs(rows_first - cols_first)) <= 1e-9
    np.testing.assert_array_equal(dlct2_forward(x, (1.5, -3.5)), rows_first)


def test_worker_count_does_not_change_bits():
    rng = np.random.default_rng(7)
    x = rand_complex(rng, 64, 48)
    one = dlct2_forward(x, (1.5, -3.5), workers=1)
    four = dlct2_forward(x, (1.5, -3.5), workers=4)
    assert one.tobytes() == four.tobytes()


def test_rates_must_be_finite():
    with pytest.raises(ParameterError):
        ChirpRates(float("inf"), 0)
    with pytest.raises(ParameterError):
        dlct2_forward(np.ones((2, 2)), (0, float("nan")))


def test_nan_input_rejected():
    with pytest.raises(ParameterError):
        dlct2_forward(np.array([[1, np.nan]]), (0, 0))


def test_integer_shift_of_rate_by_size_aliases():
    rng = np.random.default_rng(8)
    x = rand_complex(rng, 8, 8)
    a = dlct2_forward(x, (1.5, -3.5))
    b = dlct2_forward(x, (1.5 + 8, -3.5 - 8))
    np.testing.assert_allclose(a, b, atol=1e-9)


matrices = st.tuples(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1))


@settings(max_examples=60, deadline=None)
@given(matrices, st.floats(-10, 10), st.floats(-10, 10))
def test_fast_equals_direct_property(shape_seed, bx, by):
    n, m, seed = shape_seed
    x = rand_complex(np.random.default_rng(seed), n, m)
    fast = dlct2_forward(x, (bx, by))
    assert np.max(np.abs(fast - dlct2_forward_direct(x, (bx, by)))) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(matrices, st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
def test_round_trip_property(shape_seed, bx, by):
    n, m, seed = shape_seed
    x = rand_complex(np.random.default_rng(seed), n, m)
    assert np.max(np.abs(dlct2_inverse(dlct2_forward(x, (bx, by)), (bx, by)) - x)) <= 1e-9


def test_cmath_cross_check_of_kernel():
    assert kernel_value(3, 2, 7, 0.4) == pytest.approx(
        cmath.exp(-2j * cmath.pi / 7 * (2 * 3 + 0.4 * 9)), abs=1e-14
    )
