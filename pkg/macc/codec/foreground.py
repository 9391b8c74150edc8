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

import numpy as np
from scipy.stats import entropy

from macc.codec.huffman import histogram, huffman_build
from macc.errors import DimensionMismatchError, ResidualCorruptionError
from macc.hardware.compactor import MaskedVector, compact


def extract_foreground(row, bitmap):
    """Gathers the foreground pixels of a row through the Compression Unit.

    Args:
        row (numpy.ndarray): The pixels of the row.
        bitmap (BitmapRow): The bitmap of the row.

    Returns:
        numpy.ndarray: The non-zero pixels in column order, as uint8.
    """
    row = np.asarray(row).reshape(-1)
    if row.size != bitmap.width:
        raise DimensionMismatchError(f"Row has {row.size} pixels but the bitmap is {bitmap.width} bits wide")
    if not np.array_equal(row != 0, bitmap.bits):
        raise DimensionMismatchError("Bitmap does not match the foreground of the row")
    return compact(MaskedVector(row, bitmap.bits))[:bitmap.popcount()].astype(np.uint8)


def extract_image_foreground(img, bitmaps):
    """Concatenates the foreground of every row in raster order."""
    parts = [extract_foreground(row, bitmap) for row, bitmap in zip(img.rows(), bitmaps)]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint8)


def residual_encode(values, previous=0):
    """Replaces every foreground value by its difference, modulo 256, from the value before it.

    Args:
        values (iterable): Foreground values.
        previous (int, optional): The value preceding the stream. Defaults to 0.

    Returns:
        numpy.ndarray: The residual symbols as uint8.
    """
    values = np.asarray(values, dtype=np.int64).reshape(-1)
    if values.size == 0:
        return np.zeros(0, dtype=np.uint8)
    return (np.diff(values, prepend=previous) % 256).astype(np.uint8)


def residual_decode(symbols, previous=0):
    """Inverts residual_encode.

    Raises:
        ResidualCorruptionError: If a decoded value is 0.
    """
    symbols = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if symbols.size == 0:
        return np.zeros(0, dtype=np.uint8)
    values = (np.cumsum(symbols) + previous) % 256
    zeros = np.flatnonzero(values == 0)
    if zeros.size:
        raise ResidualCorruptionError(f"Decoded foreground value 0 at position {zeros[0]}")
    return values.astype(np.uint8)


def empirical_entropy(hist):
    """Returns the empirical entropy of a histogram in bits per symbol, 0 for an empty one."""
    hist = np.asarray(hist, dtype=np.float64)
    if hist.sum() == 0:
        return 0.0
    return float(entropy(hist, base=2))


def residual_table(symbols):
    """Builds the Huffman table of a residual stream; None when the stream is empty."""
    if len(symbols) == 0:
        return None
    return huffman_build(histogram(symbols))
