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

import numpy as np

from macc.errors import CountOverflowError, IndexOrderError, IndexRangeError, TruncatedSectionError
from macc.hardware.row_scanner import BitmapRow, scan_row
from macc.utils import bytes_for

logger = logging.getLogger(__name__)


def field_widths(width):
    """Returns the byte widths (B_cnt, B_idx) of the count and index fields for rows of the given width.

    B_idx holds width - 1 and B_cnt holds width, since a fully alternating row has one run start per column.
    """
    return bytes_for(width), bytes_for(width - 1)


def _check_indices(indices, width):
    indices = np.asarray(indices, dtype=np.int64).reshape(-1)
    if indices.size and (indices.min() < 0 or indices.max() >= width):
        raise IndexRangeError(f"Run-start indices must lie in [0, {width - 1}], got {indices.tolist()}")
    if indices.size > 1 and not np.all(np.diff(indices) > 0):
        raise IndexOrderError(f"Run-start indices must be strictly increasing, got {indices.tolist()}")
    return indices


def encode_row_record(indices, width):
    """Encodes one row: its index count followed by the indices, little-endian.

    Args:
        indices (iterable): Run-start indices of the row.
        width (int): Row width.

    Returns:
        bytes: The record. A count of 0 marks an all-zero row.
    """
    indices = _check_indices(indices, width)
    b_cnt, b_idx = field_widths(width)
    parts = [int(indices.size).to_bytes(b_cnt, "little")]
    parts.extend(int(index).to_bytes(b_idx, "little") for index in indices)
    return b"".join(parts)


def encode_bitmap_section(rows, width, height):
    """Encodes the background section of an image.

    Args:
        rows (list): One run-start index list per row.
        width (int): Image width.
        height (int): Image height.

    Returns:
        bytes: The concatenated row records.
    """
    if len(rows) != height:
        raise ValueError(f"Expected {height} index lists, got {len(rows)}")
    section = b"".join(encode_row_record(indices, width) for indices in rows)
    logger.debug("Background section: %d rows, %d bytes", height, len(section))
    return section


def reconstruct_bitmap_row(indices, width):
    """Rebuilds a bitmap from its run starts.

    Bits before the first index are 0, the run starting at the first index is a run of ones and the run types
    alternate after that; the last run extends to the end of the row.

    Args:
        indices (iterable): Strictly increasing run starts below width.
        width (int): Row width.

    Returns:
        BitmapRow: The bitmap.
    """
    indices = _check_indices(indices, width)
    markers = np.zeros(width, dtype=np.int64)
    markers[indices] = 1
    return BitmapRow(np.cumsum(markers) % 2 == 1)


def decode_index_lists(section, width, height):
    """Splits a background section into its per-row index lists.

    Args:
        section (bytes): The section.
        width (int): Image width.
        height (int): Image height.

    Returns:
        list: One numpy index array per row.
    """
    b_cnt, b_idx = field_widths(width)
    rows = []
    pos = 0
    for row in range(height):
        if pos + b_cnt > len(section):
            raise TruncatedSectionError(f"Background section ends inside the count of row {row}")
        count = int.from_bytes(section[pos:pos + b_cnt], "little")
        pos += b_cnt
        if count > width:
            raise CountOverflowError(f"Row {row} claims {count} run starts but rows are only {width} wide")
        end = pos + count * b_idx
        if end > len(section):
            raise TruncatedSectionError(f"Background section ends inside the indices of row {row}")
        indices = np.array([int.from_bytes(section[p:p + b_idx], "little") for p in range(pos, end, b_idx)],
                           dtype=np.int64)
        pos = end
        rows.append(_check_indices(indices, width))
    if pos != len(section):
        raise TruncatedSectionError(f"Background section has {len(section) - pos} bytes after the last row")
    return rows


def decode_bitmap_section(section, width, height):
    """Decodes a background section into the bitmap of every row."""
    return [reconstruct_bitmap_row(indices, width) for indices in decode_index_lists(section, width, height)]


def section_length(rows, width):
    """Returns the exact encoded size of a background section without encoding it."""
    b_cnt, b_idx = field_widths(width)
    return sum(b_cnt + len(indices) * b_idx for indices in rows)


def run_lengths(indices, width):
    """Converts run starts into alternating run lengths, beginning with the (possibly empty) leading zero run.

    Args:
        indices (iterable): Run starts of a row.
        width (int): Row width.

    Returns:
        numpy.ndarray: Run lengths summing to width.
    """
    indices = _check_indices(indices, width)
    bounds = np.concatenate(([0], indices, [width]))
    return np.diff(bounds)


class PaperAccounting:
    """Idealized bit count of the foreground and bitmap data before any variable-length coding.

    Every foreground pixel, every run start of a non-empty row and every all-zero row costs 8 bits, with no row
    delimiters.
    """

    def __init__(self, foreground_bits, index_bits, zero_row_bits, raw_bits):
        self.foreground_bits = foreground_bits
        self.index_bits = index_bits
        self.zero_row_bits = zero_row_bits
        self.total_bits = foreground_bits + index_bits + zero_row_bits
        self.raw_bits = raw_bits

    @property
    def ratio(self):
        return self.raw_bits / self.total_bits

    def __repr__(self):
        return (f"PaperAccounting(foreground_bits={self.foreground_bits}, index_bits={self.index_bits}, "
                f"zero_row_bits={self.zero_row_bits}, total_bits={self.total_bits}, ratio={self.ratio:.4f})")


def paper_cost_model(img):
    """Counts the bits of the idealized accounting for an image.

    Args:
        img (Image): The image.

    Returns:
        PaperAccounting: The counts.
    """
    n_indices = 0
    n_zero_rows = 0
    for row in img.rows():
        indices = scan_row(row)
        if indices.size:
            n_indices += indices.size
        else:
            n_zero_rows += 1
    return PaperAccounting(foreground_bits=8 * img.nonzero_count(),
                           index_bits=8 * n_indices,
                           zero_row_bits=8 * n_zero_rows,
                           raw_bits=8 * img.width * img.height)
