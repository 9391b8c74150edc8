# MIT License
#
# Copyright (c) 2019 macc contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import struct

import numpy as np
import pytest

from macc.codec.background import decode_index_lists
from macc.codec.container import (HEADER, MAGIC, CompressedStream, compress, compress_bytes, decompress,
                                  decompress_bytes, stats, verify)
from macc.errors import (BadMagicError, BitstreamExhaustedError, ForegroundCountError, SectionLengthError,
                         VersionMismatchError)
from macc.image import Image, gen_four_spot, gen_synthetic, microarray_layout


def random_image(rs, width, height, density):
    pixels = rs.randint(1, 256, size=width * height) * (rs.rand(width * height) < density)
    return Image(width, height, pixels)


def test_header_is_29_bytes():
    assert HEADER.size == 29


def test_zero_image_has_no_foreground():
    stream = compress(Image.zeros(4, 4))
    assert stream.fg_count == 0
    assert stream.foreground_bitstream == b""
    assert stream.huffman_table == bytes(256)
    assert stream.background_section == b"\x00" * 4
    assert decompress(stream) == Image.zeros(4, 4)


def test_four_spot_stream():
    stream = compress(gen_four_spot())
    assert stream.fg_count == 96
    rows = decode_index_lists(stream.background_section, 18, 18)
    assert [len(r) for r in rows].count(4) == 12
    assert [len(r) for r in rows].count(0) == 6


def test_serialized_layout():
    data = compress_bytes(Image(2, 1, [0, 9]))
    magic, version, width, height, fg_count, bg_len = HEADER.unpack_from(data)
    assert (magic, version, width, height, fg_count, bg_len) == (MAGIC, 1, 2, 1, 1, 2)
    assert data[29 + 256:29 + 256 + 2] == bytes([1, 1])
    assert len(data) == 29 + 256 + 2 + 1


@pytest.mark.parametrize("img", [
    Image.zeros(1, 1),
    Image(1, 1, [7]),
    Image(5, 3, [255] * 15),
    Image(1, 40, np.arange(40) % 3),
    Image(40, 1, np.arange(40) % 5),
    Image.zeros(256, 256),
])
def test_round_trip_edge_images(img):
    assert decompress_bytes(compress_bytes(img)) == img


def test_round_trip_random_corpus():
    rs = np.random.RandomState(seed=42)
    for _ in range(950):
        width, height = rs.randint(1, 65, size=2)
        assert verify(random_image(rs, width, height, rs.rand()))
    for seed in range(50):
        assert verify(gen_synthetic(microarray_layout(size=rs.randint(60, 200), seed=seed)))


def test_compress_is_deterministic():
    img = gen_synthetic(microarray_layout(seed=3))
    assert compress_bytes(img) == compress_bytes(img)


def test_bad_magic():
    with pytest.raises(BadMagicError) as e:
        decompress_bytes(b"P5\n1 1\n255\n\x00")
    assert str(e.value) == "not a MACC file"


def test_version_mismatch():
    data = bytearray(compress_bytes(Image(2, 2, [1, 0, 0, 1])))
    data[4] = 2
    with pytest.raises(VersionMismatchError):
        decompress_bytes(bytes(data))


def test_truncated_header_and_background():
    data = compress_bytes(Image(3, 3, [1, 0, 0, 0, 2, 0, 0, 0, 3]))
    with pytest.raises(SectionLengthError):
        CompressedStream.from_bytes(data[:20])
    with pytest.raises(SectionLengthError):
        CompressedStream.from_bytes(data[:29 + 256 + 2])


def test_truncated_foreground_section():
    img = gen_four_spot()
    data = compress_bytes(img)
    with pytest.raises(BitstreamExhaustedError):
        decompress_bytes(data[:-1])


def test_extra_foreground_bytes():
    data = compress_bytes(Image(2, 2, [1, 0, 0, 1]))
    with pytest.raises(SectionLengthError):
        decompress_bytes(data + b"\x00")


def test_foreground_count_mismatch():
    stream = compress(Image(2, 2, [1, 0, 0, 1]))
    stream.fg_count = 3
    with pytest.raises(ForegroundCountError):
        decompress(stream)


def test_stats_on_four_spot_image():
    report = stats(gen_four_spot())
    assert report.paper_model.total_bits == 1200
    assert report.paper_model.ratio == pytest.approx(2.16)
    assert report.fg_count == 96
    assert report.as_dict()["paper_model_ratio"] == pytest.approx(2.16)
    assert "paper-model ratio 2.1600" in report.summary()


def test_stats_on_zero_image():
    report = stats(Image.zeros(256, 256))
    # header, empty code table and a two-byte zero count per row
    assert report.container_bits == 8 * (29 + 256 + 512)
    assert report.container_ratio == pytest.approx(524288 / 6376)
    assert report.container_ratio > 80
    assert report.fg_ratio is None


def test_stats_on_noise_image_is_reported():
    rs = np.random.RandomState(seed=42)
    report = stats(Image(64, 64, rs.randint(1, 256, size=64 * 64)))
    assert report.container_ratio < 1.2
    assert report.fg_entropy_bits > 7.5


def test_synthetic_corpus_compresses():
    container_ratios = []
    fg_ratios = []
    for seed in range(10):
        report = stats(gen_synthetic(microarray_layout(seed=seed)))
        container_ratios.append(report.container_ratio)
        fg_ratios.append(report.fg_ratio)
    assert np.mean(container_ratios) > 1.5
    assert np.mean(fg_ratios) > 1.0


def test_header_fields_are_little_endian():
    data = compress_bytes(Image.zeros(300, 2))
    assert struct.unpack_from("<I", data, 5)[0] == 300
