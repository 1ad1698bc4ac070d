import numpy as np
import pytest

from zipr import Transform, dequantize, forward_nd, inverse_nd, quantize
from zipr.errors import InvalidInputError

from conftest import assert_close


class TestQuantize:
    def test_zero_maps_to_zero(self):
        for step in (0.25, 1.0, 3.0):
            assert quantize(np.array([0.0]), step)[0] == 0

    def test_ties_round_away_from_zero(self):
        out = quantize(np.array([2.5, -2.5, 0.5, -0.5, 1.5]), 1.0)
        assert out.tolist() == [3, -3, 1, -1, 2]

    def test_dequantize_scales_by_step(self):
        assert dequantize(np.array([3]), 1.0)[0] == 3.0
        assert dequantize(np.array([3]), 0.5)[0] == 1.5

    def test_roundtrip_error_bounded_by_half_step(self, rng):
        for step in (0.5, 1.0, 2.0):
            c = rng.normal(size=1000) * 300
            err = np.abs(dequantize(quantize(c, step), step) - c)
            assert err.max() <= step / 2 + 1e-12

    def test_idempotent_on_lattice_values(self, rng):
        q = rng.integers(-1000, 1000, size=500)
        for step in (0.5, 1.0, 1.75):
            assert np.array_equal(quantize(dequantize(q, step), step), q)

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidInputError):
            quantize(np.array([1.0, np.inf]))

    def test_bad_step_rejected(self):
        for step in (0.0, -1.0, float("nan")):
            with pytest.raises(InvalidInputError):
                quantize(np.array([1.0]), step)
            with pytest.raises(InvalidInputError):
                dequantize(np.array([1]), step)

    def test_symbol_overflow_rejected(self):
        with pytest.raises(InvalidInputError):
            quantize(np.array([1.0e30]), 1e-300)


class TestNearLosslessBound:
    """Empirical confirmation of the error-propagation constant.

    With the unnormalized-forward / scaled-inverse convention, an
    elementwise coefficient error of step/2 can grow by at most a factor
    sqrt(2) per dimension on inversion, so a 2-D block reconstructed from
    step=1 quantized coefficients is within 1.0 of the original before
    pixel rounding, and within 2 gray levels after.
    """

    def test_pre_rounding_error_random_blocks(self, rng):
        worst = {t: 0.0 for t in Transform}
        for _ in range(200):
            block = rng.integers(0, 256, size=(8, 8)).astype(float)
            for transform in Transform:
                q = quantize(forward_nd(block, transform), 1.0)
                rec = inverse_nd(dequantize(q, 1.0), transform)
                worst[transform] = max(worst[transform], np.abs(rec - block).max())
        assert worst[Transform.ZIP_CONCAT] <= 1.0 + 1e-9
        assert worst[Transform.ZIP_INTERLACE] <= 1.0 + 1e-9
        # DCT and FWHT inverses have unit gain, so their bound is tighter
        assert worst[Transform.DCT] <= 0.5 + 1e-9
        assert worst[Transform.FWHT] <= 0.5 + 1e-9

    def test_fwht_on_integers_is_exactly_lossless(self, rng):
        # integer pixels give integer Walsh-Hadamard coefficients
        block = rng.integers(0, 256, size=(16, 16)).astype(float)
        q = quantize(forward_nd(block, Transform.FWHT), 1.0)
        rec = inverse_nd(dequantize(q, 1.0), Transform.FWHT)
        assert_close(rec, block)

    def test_rounded_pixels_within_two_gray_levels(self, rng):
        for transform in Transform:
            block = rng.integers(0, 256, size=(8, 8)).astype(float)
            q = quantize(forward_nd(block, transform), 1.0)
            rec = np.rint(inverse_nd(dequantize(q, 1.0), transform))
            assert np.abs(rec - block).max() <= 2
