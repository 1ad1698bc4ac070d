import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zipr import (
    Layout,
    dct_forward,
    dct_inverse,
    dft_forward,
    dft_inverse,
    fwht_forward,
    fwht_inverse,
    zipper_pack,
    zipper_unpack,
)
from zipr.errors import InvalidInputError, SymmetryError, UnsupportedCombinationError

from conftest import assert_close
from oracles import dct2_direct, dft_direct, hadamard_matrix, idft_direct

LAYOUTS = (Layout.CONCATENATING, Layout.INTERLACING)


class TestDft:
    def test_constant_signal_is_dc_only(self):
        assert_close(dft_forward([3.5] * 4), [14.0, 0.0, 0.0, 0.0])

    def test_known_vector(self):
        assert_close(dft_forward([1, 2, 3, 4]), [10, -2 + 2j, -2, -2 - 2j])

    def test_length_one_identity(self):
        assert_close(dft_forward([1.0]), [1.0])
        assert_close(dft_inverse([7.0 + 0j]), [7.0])

    def test_inverse_of_known_vector(self):
        assert_close(dft_inverse([10, -2 + 2j, -2, -2 - 2j]), [1, 2, 3, 4])

    def test_matches_direct_summation_all_lengths(self, rng):
        for n in range(1, 65):
            x = rng.normal(size=n) * 50
            spec = dft_forward(x)
            assert_close(spec, dft_direct(x))
            assert_close(dft_inverse(spec), np.real(idft_direct(spec)))

    def test_conjugate_symmetry(self, rng):
        for n in (2, 3, 8, 15, 64):
            spec = dft_forward(rng.normal(size=n))
            for k in range(1, n):
                assert_close(spec[n - k], np.conj(spec[k]))

    def test_parseval_energy(self, rng):
        for n in (1, 2, 7, 32, 257):
            x = rng.normal(size=n) * 10
            spec = dft_forward(x)
            assert_close(np.sum(x**2), np.sum(np.abs(spec) ** 2) / n)

    def test_non_symmetric_spectrum_rejected(self):
        with pytest.raises(SymmetryError):
            dft_inverse([1.0, 2.0 + 1j, 3.0, 4.0 + 1j])

    def test_empty_signal_rejected(self):
        with pytest.raises(InvalidInputError):
            dft_forward([])
        with pytest.raises(InvalidInputError):
            dft_inverse([])

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidInputError):
            dft_forward([1.0, np.nan])


class TestZipper:
    def test_known_vector_concatenating(self):
        assert_close(zipper_pack([1, 2, 3, 4], Layout.CONCATENATING), [10, -2, -2, 2])

    def test_known_vector_interlacing(self):
        assert_close(zipper_pack([1, 2, 3, 4], Layout.INTERLACING), [10, -2, 2, -2])

    def test_constant_signal(self):
        for layout in LAYOUTS:
            assert_close(zipper_pack([2.5] * 4, layout), [10, 0, 0, 0])

    def test_unpack_known_vector(self):
        assert_close(zipper_unpack([10, -2, -2, 2], Layout.CONCATENATING), [1, 2, 3, 4])

    def test_degenerate_lengths(self):
        for layout in LAYOUTS:
            assert_close(zipper_pack([5.0], layout), [5.0])
            # N=2: both bins real: [x0+x1, x0-x1]
            assert_close(zipper_pack([3.0, 1.0], layout), [4.0, 2.0])

    def test_pack_is_half_spectrum_rearranged(self, rng):
        # every packed value is a real or imaginary part of the direct DFT
        for n in (5, 6, 9, 16):
            x = rng.normal(size=n)
            spec = dft_direct(x)
            half = spec[: n // 2 + 1]
            expected = sorted(
                np.concatenate([half.real, half.imag[1 : (n + 1) // 2]]).round(9)
            )
            for layout in LAYOUTS:
                got = sorted(zipper_pack(x, layout).round(9))
                assert_close(got, expected)

    def test_layouts_are_permutations(self, rng):
        for n in range(1, 40):
            x = rng.normal(size=n) * 100
            con = np.sort(zipper_pack(x, Layout.CONCATENATING))
            inter = np.sort(zipper_pack(x, Layout.INTERLACING))
            assert_close(inter, con)

    def test_preserves_length(self, rng):
        for n in list(range(1, 66)) + [127, 128, 257]:
            x = rng.normal(size=n)
            for layout in LAYOUTS:
                assert zipper_pack(x, layout).shape == (n,)

    def test_roundtrip_lengths_1_to_257(self, rng):
        for n in list(range(1, 130)) + [192, 255, 256, 257]:
            x = rng.normal(size=n) * 200
            for layout in LAYOUTS:
                assert_close(zipper_unpack(zipper_pack(x, layout), layout), x)

    @given(
        st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=257),
        st.sampled_from(LAYOUTS),
    )
    @settings(max_examples=200, deadline=None)
    def test_roundtrip_property(self, samples, layout):
        x = np.array(samples)
        assert_close(zipper_unpack(zipper_pack(x, layout), layout), x)

    def test_axis_argument_batches(self, rng):
        x = rng.normal(size=(3, 8, 5))
        packed = zipper_pack(x, Layout.INTERLACING, axis=1)
        for i in range(3):
            for j in range(5):
                assert_close(
                    packed[i, :, j], zipper_pack(x[i, :, j], Layout.INTERLACING)
                )

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            zipper_pack([])
        with pytest.raises(InvalidInputError):
            zipper_unpack([])


class TestDct:
    def test_constant_is_dc_only(self):
        out = dct_forward([4.0] * 4)
        assert_close(out[0], 32.0)
        assert_close(out[1:], np.zeros(3))

    def test_known_vector_against_oracle_values(self):
        # frozen output of the direct-summation oracle for [1, 2, 3, 4]
        assert_close(
            dct_forward([1, 2, 3, 4]),
            [20.0, -6.308644059797899, 0.0, -0.4483415291679678],
        )

    def test_matches_direct_summation_all_lengths(self, rng):
        for n in range(1, 65):
            x = rng.normal(size=n) * 50
            assert_close(dct_forward(x), dct2_direct(x))

    def test_roundtrip(self, rng):
        for n in list(range(1, 40)) + [63, 64, 100, 257]:
            x = rng.normal(size=n) * 100
            assert_close(dct_inverse(dct_forward(x)), x)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            dct_forward([])


class TestFwht:
    def test_pair(self):
        assert_close(fwht_forward([7.0, 7.0]), [14.0, 0.0])

    def test_known_vector(self):
        assert_close(fwht_forward([1, 2, 3, 4]), [10, -2, -4, 0])

    def test_matches_hadamard_matrix(self, rng):
        for n in (1, 2, 4, 8, 16, 32, 64):
            x = rng.normal(size=n) * 20
            assert_close(fwht_forward(x), hadamard_matrix(n) @ x)

    def test_roundtrip(self, rng):
        for n in (1, 2, 4, 8, 16, 64, 256):
            x = rng.normal(size=n) * 100
            assert_close(fwht_inverse(fwht_forward(x)), x)

    def test_non_power_of_two_rejected(self):
        for n in (3, 5, 6, 12):
            with pytest.raises(UnsupportedCombinationError):
                fwht_forward(np.ones(n))
        with pytest.raises(UnsupportedCombinationError):
            fwht_inverse(np.ones(6))
