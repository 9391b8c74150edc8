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


class BitRow:
    """A fixed-width row of bits backed by a boolean numpy array.
    """

    def __init__(self, bits):
        """
        Args:
            bits (iterable): The bits, truthy values meaning 1.
        """
        self.bits = np.asarray(bits, dtype=bool).reshape(-1)

    @property
    def width(self):
        return self.bits.size

    @classmethod
    def from_string(cls, text):
        """Builds a row from a string of '0' and '1' characters, e.g. "0011111001111100"."""
        return cls([char == "1" for char in text])

    def to_string(self):
        return "".join("1" if bit else "0" for bit in self.bits)

    def popcount(self):
        return int(np.count_nonzero(self.bits))

    def __eq__(self, other):
        if not isinstance(other, BitRow):
            return NotImplemented
        return type(self) is type(other) and np.array_equal(self.bits, other.bits)

    def __repr__(self):
        return f"{type(self).__name__}('{self.to_string()}')"


class BitmapRow(BitRow):
    """Foreground mask of a row: bit j is 1 iff pixel j is non-zero.
    """


class TransitionRow(BitRow):
    """Run-start markers of a row: bit j is 1 iff a run of the bitmap begins at column j.
    """


def bitmap_row(row):
    """ORs the bits of every pixel, giving the foreground mask of the row.

    Args:
        row (numpy.ndarray): The pixels of one row.

    Returns:
        BitmapRow: The bitmap.
    """
    row = np.asarray(row)
    if row.size < 1:
        raise ValueError("A row must hold at least one pixel")
    return BitmapRow(row != 0)


def transitions(bitmap):
    """XORs every bitmap bit with its left neighbour.

    The left neighbour of column 0 is a constant 0, so every row is coded on its own and a row starting with
    foreground has a run start at column 0.

    Args:
        bitmap (BitmapRow): The bitmap.

    Returns:
        TransitionRow: The run-start markers.
    """
    bits = bitmap.bits
    previous = np.concatenate(([False], bits[:-1]))
    return TransitionRow(np.logical_xor(bits, previous))


def run_start_indices(transition_row):
    """Lists the columns where runs start.

    The first index always starts a run of ones and the runs alternate from there on.

    Args:
        transition_row (TransitionRow): The run-start markers.

    Returns:
        numpy.ndarray: Strictly increasing column indices.
    """
    return np.flatnonzero(transition_row.bits)


def scan_row(row):
    """Runs the bitmap and transition stages on one row and returns its run-start indices."""
    return run_start_indices(transitions(bitmap_row(row)))


def bitmap_image(img):
    """Returns the bitmap of every row of an image, top to bottom."""
    return [bitmap_row(row) for row in img.rows()]
