import numpy as np
import pytest

from zipr import CodecConfig, Transform, compress, decompress, parse, serialize
from zipr.errors import UnsupportedCombinationError

from test_blocking import random_volume

ALL_TRANSFORMS = tuple(Transform)


def max_pixel_error(a, b):
    return int(np.abs(a.pixels.astype(np.int64) - b.pixels.astype(np.int64)).max())


class TestRoundTrip:
    def test_near_lossless_all_transforms(self, rng):
        v = random_volume(rng, (24, 17))
        for transform in ALL_TRANSFORMS:
            config = CodecConfig(transform=transform, block_size=8)
            rec = decompress(compress(v, config))
            assert max_pixel_error(v, rec) <= 2, transform

    def test_through_serialized_bytes(self, rng):
        v = random_volume(rng, (16, 16))
        artifact = compress(v, CodecConfig())
        rec = decompress(parse(serialize(artifact)))
        assert max_pixel_error(v, rec) <= 2

    def test_three_channels(self, rng):
        v = random_volume(rng, (12, 12), channels=3)
        rec = decompress(compress(v, CodecConfig(block_size=4)))
        assert rec.channels == 3
        assert max_pixel_error(v, rec) <= 2

    def test_three_dimensional_volume(self, rng):
        v = random_volume(rng, (6, 10, 9))
        rec = decompress(compress(v, CodecConfig(block_size=4)))
        assert rec.extents == v.extents
        assert max_pixel_error(v, rec) <= 2

    def test_sixteen_bit(self, rng):
        v = random_volume(rng, (16, 16), bitdepth=16)
        rec = decompress(compress(v, CodecConfig()))
        assert rec.bitdepth == 16
        assert max_pixel_error(v, rec) <= 2

    def test_one_dimensional_signal(self, rng):
        v = random_volume(rng, (37,))
        rec = decompress(compress(v, CodecConfig(block_size=8)))
        assert max_pixel_error(v, rec) <= 1

    def test_block_larger_than_image(self, rng):
        v = random_volume(rng, (10, 10))
        rec = decompress(compress(v, CodecConfig(block_size=32)))
        assert max_pixel_error(v, rec) <= 2

    def test_fwht_is_lossless_on_pixels(self, rng):
        v = random_volume(rng, (32, 32))
        rec = decompress(compress(v, CodecConfig(transform=Transform.FWHT)))
        assert max_pixel_error(v, rec) == 0

    def test_coarser_step_stays_bounded(self, rng):
        v = random_volume(rng, (16, 16))
        rec = decompress(compress(v, CodecConfig(step=4.0)))
        assert max_pixel_error(v, rec) <= 5  # step * unit gain + rounding


class TestDeterminismAndConfig:
    def test_compress_is_deterministic(self, rng):
        v = random_volume(rng, (20, 20), channels=3)
        config = CodecConfig(transform=Transform.ZIP_INTERLACE, block_size=4)
        assert serialize(compress(v, config)) == serialize(compress(v, config))

    def test_threads_do_not_change_bytes(self, rng):
        v = random_volume(rng, (20, 20), channels=3)
        a = serialize(compress(v, CodecConfig(threads=1)))
        b = serialize(compress(v, CodecConfig(threads=4)))
        assert a == b

    def test_layout_payloads_identical_in_size(self, rng):
        v = random_volume(rng, (24, 24))
        con = compress(v, CodecConfig(transform=Transform.ZIP_CONCAT))
        inter = compress(v, CodecConfig(transform=Transform.ZIP_INTERLACE))
        assert [s.payload.bit_count for s in con.streams] == [
            s.payload.bit_count for s in inter.streams
        ]
        assert [s.code for s in con.streams] == [s.code for s in inter.streams]

    def test_fwht_with_non_power_of_two_block_rejected(self):
        with pytest.raises(UnsupportedCombinationError):
            CodecConfig(transform=Transform.FWHT, block_size=6)

    def test_header_reflects_config(self, rng):
        v = random_volume(rng, (11, 13))
        artifact = compress(v, CodecConfig(block_size=4, step=0.5))
        assert artifact.extents == (11, 13)
        assert artifact.block_size == 4 and artifact.step == 0.5
        assert artifact.padded_extents == (12, 16)

    def test_channelless_container_rejected(self, rng):
        from zipr.container import CompressedArtifact
        from zipr.errors import ContainerError

        empty = CompressedArtifact(
            transform=Transform.DCT,
            extents=(8, 8),
            bitdepth=8,
            block_size=8,
            step=1.0,
            streams=(),
        )
        with pytest.raises(ContainerError):
            decompress(empty)
