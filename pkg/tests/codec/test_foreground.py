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
import pytest

from macc.codec.foreground import (empirical_entropy, extract_foreground, residual_decode, residual_encode,
                                   residual_table)
from macc.codec.huffman import histogram, huffman_decode, huffman_encode
from macc.errors import DimensionMismatchError, ResidualCorruptionError
from macc.hardware.row_scanner import BitmapRow, bitmap_row


def test_extract_foreground():
    row = np.array([0, 0, 5, 9, 0, 3])
    assert extract_foreground(row, BitmapRow.from_string("001101")).tolist() == [5, 9, 3]


def test_extract_foreground_of_zero_row():
    assert extract_foreground(np.zeros(6), BitmapRow.from_string("000000")).tolist() == []


def test_extract_foreground_matches_filter():
    rs = np.random.RandomState(seed=42)
    for _ in range(100):
        row = rs.randint(-200, 256, size=rs.randint(1, 300)).clip(0)
        assert np.array_equal(extract_foreground(row, bitmap_row(row)), row[row != 0])


def test_extract_foreground_rejects_mismatched_bitmap():
    with pytest.raises(DimensionMismatchError):
        extract_foreground(np.array([0, 1, 2]), BitmapRow.from_string("01"))
    with pytest.raises(DimensionMismatchError):
        extract_foreground(np.array([0, 1, 2]), BitmapRow.from_string("110"))


def test_residual_encode():
    assert residual_encode([10, 12, 11]).tolist() == [10, 2, 255]
    assert residual_encode([]).tolist() == []
    assert residual_encode([7, 7, 7, 7]).tolist() == [7, 0, 0, 0]


def test_residual_encode_continues_from_previous_value():
    assert residual_encode([12, 11], previous=10).tolist() == [2, 255]


def test_residual_decode():
    assert residual_decode([10, 2, 255]).tolist() == [10, 12, 11]
    assert residual_decode([]).tolist() == []


def test_residual_decode_reports_zero_value():
    with pytest.raises(ResidualCorruptionError):
        residual_decode([10, 246])


def test_foreground_round_trip_through_huffman():
    rs = np.random.RandomState(seed=42)
    for n in [0, 1, 5, 1000, 100000]:
        values = rs.randint(1, 256, size=n)
        residuals = residual_encode(values)
        table = residual_table(residuals)
        if n == 0:
            assert table is None
            continue
        decoded = huffman_decode(huffman_encode(residuals, table), table, n)
        assert np.array_equal(residual_decode(decoded), values)


def test_smooth_foreground_has_lower_residual_entropy():
    values = np.clip(np.rint(128 + 60 * np.sin(np.arange(2000) / 40)), 1, 255)
    assert empirical_entropy(histogram(residual_encode(values))) < empirical_entropy(histogram(values))


def test_empirical_entropy():
    assert empirical_entropy(np.zeros(256)) == 0.0
    assert empirical_entropy(np.ones(256)) == pytest.approx(8.0)
    assert empirical_entropy(histogram([3, 3, 4, 4])) == pytest.approx(1.0)
