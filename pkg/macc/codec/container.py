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

import logging
import struct

import numpy as np

from macc.codec.background import decode_bitmap_section, encode_bitmap_section, paper_cost_model
from macc.codec.foreground import (empirical_entropy, extract_image_foreground, residual_decode, residual_encode,
                                   residual_table)
from macc.codec.huffman import (ALPHABET_SIZE, deserialize_table, histogram, huffman_decode, huffman_encode,
                                serialize_table)
from macc.errors import (BadMagicError, ContainerError, ForegroundCountError, SectionLengthError,
                         VersionMismatchError)
from macc.hardware.row_scanner import bitmap_image, run_start_indices, transitions
from macc.image.image import Image

logger = logging.getLogger(__name__)

MAGIC = b"MACC"
VERSION = 1
HEADER = struct.Struct("<4sBIIQQ")
EXTENSION = ".macc"


class CompressedStream:
    """The MACC container: a fixed header, the 256-byte code-length table, the background section and the
    Huffman-coded foreground residuals.
    """

    def __init__(self, width, height, fg_count, huffman_table, background_section, foreground_bitstream,
                 version=VERSION):
        """
        Args:
            width (int): Image width.
            height (int): Image height.
            fg_count (int): Number of foreground pixels.
            huffman_table (bytes): 256 code lengths, all zero when there is no foreground.
            background_section (bytes): Row records of run-start indices.
            foreground_bitstream (bytes): Packed residual codes.
            version (int, optional): Format version. Defaults to VERSION.
        """
        self.version = version
        self.width = width
        self.height = height
        self.fg_count = fg_count
        self.huffman_table = bytes(huffman_table)
        self.background_section = bytes(background_section)
        self.foreground_bitstream = bytes(foreground_bitstream)

    @property
    def bg_section_len(self):
        return len(self.background_section)

    def to_bytes(self):
        header = HEADER.pack(MAGIC, self.version, self.width, self.height, self.fg_count, self.bg_section_len)
        return header + self.huffman_table + self.background_section + self.foreground_bitstream

    @classmethod
    def from_bytes(cls, data):
        """Splits a serialized container into its sections.

        Raises:
            BadMagicError: If the data does not start with the MACC magic.
            VersionMismatchError: If the format version is not supported.
            SectionLengthError: If the sections do not fit the data.
        """
        data = bytes(data)
        if data[:len(MAGIC)] != MAGIC:
            raise BadMagicError("not a MACC file")
        if len(data) < HEADER.size:
            raise SectionLengthError(f"Container is {len(data)} bytes, shorter than its {HEADER.size}-byte header")
        _, version, width, height, fg_count, bg_len = HEADER.unpack_from(data)
        if version != VERSION:
            raise VersionMismatchError(f"Unsupported MACC version {version}, expected {VERSION}")
        table_end = HEADER.size + ALPHABET_SIZE
        bg_end = table_end + bg_len
        if len(data) < bg_end:
            raise SectionLengthError(f"Container is {len(data)} bytes but its sections need at least {bg_end}")
        return cls(width, height, fg_count, data[HEADER.size:table_end], data[table_end:bg_end], data[bg_end:],
                   version=version)

    def section_sizes(self):
        return {"header_bytes": HEADER.size,
                "table_bytes": len(self.huffman_table),
                "background_bytes": self.bg_section_len,
                "foreground_bytes": len(self.foreground_bitstream)}

    def __len__(self):
        return HEADER.size + len(self.huffman_table) + self.bg_section_len + len(self.foreground_bitstream)


def compress(img):
    """Compresses an image.

    Args:
        img (Image): The image.

    Returns:
        CompressedStream: The container.
    """
    bitmaps = bitmap_image(img)
    indices = [run_start_indices(transitions(bitmap)) for bitmap in bitmaps]
    background = encode_bitmap_section(indices, img.width, img.height)
    residuals = residual_encode(extract_image_foreground(img, bitmaps))
    table = residual_table(residuals)
    if table is None:
        table_bytes = bytes(ALPHABET_SIZE)
        foreground = b""
    else:
        table_bytes = serialize_table(table)
        foreground = huffman_encode(residuals, table)
    stream = CompressedStream(img.width, img.height, len(residuals), table_bytes, background, foreground)
    logger.debug("Compressed %r into %d bytes %s", img, len(stream), stream.section_sizes())
    return stream


def decompress(stream):
    """Reconstructs the image from a container.

    Args:
        stream (CompressedStream or bytes): The container.

    Returns:
        Image: The image, identical to the one that was compressed.
    """
    if not isinstance(stream, CompressedStream):
        stream = CompressedStream.from_bytes(stream)
    if stream.width < 1 or stream.height < 1:
        raise ContainerError(f"Container holds an empty {stream.width}x{stream.height} image")
    bitmaps = decode_bitmap_section(stream.background_section, stream.width, stream.height)
    mask = np.stack([bitmap.bits for bitmap in bitmaps])
    popcount = int(np.count_nonzero(mask))
    if popcount != stream.fg_count:
        raise ForegroundCountError(f"Header promises {stream.fg_count} foreground pixels but the bitmaps hold "
                                   f"{popcount}")

    pixels = np.zeros((stream.height, stream.width), dtype=np.uint8)
    if stream.fg_count == 0:
        if stream.foreground_bitstream:
            raise SectionLengthError("Image has no foreground but the foreground section is not empty")
        return Image.from_array(pixels)

    table = deserialize_table(stream.huffman_table)
    residuals = huffman_decode(stream.foreground_bitstream, table, stream.fg_count)
    used_bits = int(table.code_lengths[residuals].astype(np.int64).sum())
    if (used_bits + 7) // 8 != len(stream.foreground_bitstream):
        raise SectionLengthError(f"Foreground section is {len(stream.foreground_bitstream)} bytes but its codes "
                                 f"fill {used_bits} bits")
    # raster order of the 1-bits matches the extraction order of the encoder
    pixels[mask] = residual_decode(residuals)
    return Image.from_array(pixels)


def compress_bytes(img):
    return compress(img).to_bytes()


def decompress_bytes(data):
    return decompress(CompressedStream.from_bytes(data))


def verify(img):
    """Returns True iff the image survives a compress/decompress round trip through bytes."""
    return decompress_bytes(compress_bytes(img)) == img


class StatsReport:
    """Measured sizes and ratios of one compression run alongside the idealized accounting.
    """

    def __init__(self, raw_bits, stream, paper_model, fg_entropy_bits):
        """
        Args:
            raw_bits (int): Size of the uncompressed pixels in bits.
            stream (CompressedStream): The compressed image.
            paper_model (PaperAccounting): The idealized accounting.
            fg_entropy_bits (float): Empirical entropy of the residuals in bits per symbol.
        """
        self.raw_bits = raw_bits
        self.container_bits = 8 * len(stream)
        self.paper_model = paper_model
        self.fg_count = stream.fg_count
        self.fg_raw_bits = 8 * stream.fg_count
        self.fg_coded_bits = 8 * len(stream.foreground_bitstream)
        self.fg_entropy_bits = fg_entropy_bits
        self.section_sizes = stream.section_sizes()

    @property
    def container_ratio(self):
        return self.raw_bits / self.container_bits

    @property
    def fg_ratio(self):
        """float: Raw over coded foreground bits, without the code table; None without foreground."""
        if self.fg_coded_bits == 0:
            return None
        return self.fg_raw_bits / self.fg_coded_bits

    def as_dict(self):
        row = {"raw_bits": self.raw_bits,
               "container_bits": self.container_bits,
               "container_ratio": self.container_ratio,
               "fg_ratio": self.fg_ratio,
               "fg_entropy_bits": self.fg_entropy_bits,
               "paper_model_bits": self.paper_model.total_bits,
               "paper_model_ratio": self.paper_model.ratio}
        row.update(self.section_sizes)
        return row

    def summary(self):
        fg_ratio = "n/a" if self.fg_ratio is None else f"{self.fg_ratio:.4f}"
        return (f"container ratio {self.container_ratio:.4f}, foreground ratio {fg_ratio}, "
                f"paper-model ratio {self.paper_model.ratio:.4f}")


def stats(img):
    """Compresses an image and reports sizes, ratios and the idealized accounting."""
    stream = compress(img)
    residuals = residual_encode(extract_image_foreground(img, bitmap_image(img)))
    return StatsReport(8 * img.width * img.height, stream, paper_cost_model(img),
                       empirical_entropy(histogram(residuals)))
