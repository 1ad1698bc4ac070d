"""zipr: a near-lossless block transform image codec.

The core transform packs the conjugate-symmetric half spectrum of the
real-input DFT back into N real values ("zipping" the imaginary parts in
with the real ones), either concatenated or interlaced.  On top of that sit
separable N-D block transforms (with DCT-II and Walsh-Hadamard baselines),
uniform quantization, canonical Huffman coding, a bit-exact ``.zipr``
container, and a benchmarking harness.
"""

from .blocking import BlockGrid, ImageVolume, Transform, forward_nd, inverse_nd, tile, untile
from .codec import CodecConfig, compress, decompress
from .container import CompressedArtifact, parse, serialize
from .huffman import (
    BitPayload,
    HuffmanCode,
    SymbolHistogram,
    avg_code_length,
    build_code,
    decode,
    encode,
    entropy,
    histogram,
)
from .image_io import load_image, save_image
from .metrics import (
    RunReport,
    analysis_stats,
    bench_matrix,
    compression_ratio,
    distortion,
    per_block_stats,
    time_roundtrip,
    write_csv,
)
from .quantize import dequantize, quantize
from .transforms import (
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

__version__ = "0.1.0"
