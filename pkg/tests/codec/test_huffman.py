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

import functools
import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from macc.codec.foreground import empirical_entropy
from macc.codec.huffman import (ALPHABET_SIZE, HuffmanTable, deserialize_table, histogram, huffman_build,
                                huffman_decode, huffman_encode, serialize_table)
from macc.errors import (BitstreamExhaustedError, CodeWalkError, EmptyHistogramError, KraftViolationError,
                         SymbolAbsentError)


def hist_of(counts):
    hist = np.zeros(ALPHABET_SIZE, dtype=np.int64)
    for symbol, count in counts.items():
        hist[symbol] = count
    return hist


def total_cost(hist, table):
    return int((hist * table.code_lengths.astype(np.int64)).sum())


def optimal_cost(counts):
    """Cheapest merge order found by trying every pair at every step."""
    return _optimal_cost(tuple(sorted(counts)))


@functools.lru_cache(maxsize=None)
def _optimal_cost(counts):
    if len(counts) < 2:
        return 0
    best = None
    for i, j in itertools.combinations(range(len(counts)), 2):
        rest = [c for k, c in enumerate(counts) if k not in (i, j)]
        merged = counts[i] + counts[j]
        cost = merged + _optimal_cost(tuple(sorted(rest + [merged])))
        best = cost if best is None else min(best, cost)
    return best


def random_histogram(rs):
    hist = rs.randint(0, 20, size=ALPHABET_SIZE) * (rs.rand(ALPHABET_SIZE) < rs.rand())
    hist[rs.randint(ALPHABET_SIZE)] += 1
    return hist


def test_single_symbol_gets_one_bit():
    table = huffman_build(hist_of({65: 1}))
    assert table.code_for(65) == "0"
    assert huffman_encode([65], table) == b"\x00"


def test_four_symbol_code_costs_fifteen_bits():
    hist = hist_of({0: 5, 1: 2, 2: 1, 3: 1})
    table = huffman_build(hist)
    assert total_cost(hist, table) == 15
    assert table.code_lengths[:4].tolist() == [1, 2, 3, 3]


def test_uniform_histogram_gives_eight_bit_codes():
    table = huffman_build(np.ones(ALPHABET_SIZE, dtype=np.int64))
    assert set(table.code_lengths.tolist()) == {8}


def test_empty_histogram_is_rejected():
    with pytest.raises(EmptyHistogramError):
        huffman_build(np.zeros(ALPHABET_SIZE))


def test_build_is_optimal_for_small_alphabets():
    rs = np.random.RandomState(seed=42)
    for _ in range(40):
        n = rs.randint(2, 9)
        counts = rs.randint(1, 50, size=n).tolist()
        hist = hist_of(dict(zip(rs.choice(ALPHABET_SIZE, size=n, replace=False), counts)))
        # sum of internal node weights equals the total code length
        assert total_cost(hist, huffman_build(hist)) == optimal_cost(counts)


def test_codes_are_prefix_free_and_satisfy_kraft():
    rs = np.random.RandomState(seed=42)
    for _ in range(1000):
        table = huffman_build(random_histogram(rs))
        # a code that prefixes another sorts right before one that it prefixes
        codes = sorted(table.code_for(s) for s in table.codes)
        for a, b in zip(codes, codes[1:]):
            assert not b.startswith(a)
        assert sum(Fraction(1, 2 ** int(length)) for length in table.code_lengths if length) <= 1


def test_build_is_deterministic():
    rs = np.random.RandomState(seed=42)
    for _ in range(50):
        hist = random_histogram(rs)
        first, second = huffman_build(hist), huffman_build(hist.copy())
        assert serialize_table(first) == serialize_table(second)
        assert all(first.code_for(s) == second.code_for(s) for s in first.codes)


def test_canonical_codes_follow_length_then_symbol():
    table = HuffmanTable(hist_of({7: 2, 3: 2, 9: 1}))
    assert table.code_for(9) == "0"
    assert table.code_for(3) == "10"
    assert table.code_for(7) == "11"


def test_encoded_size_is_within_entropy_bound():
    rs = np.random.RandomState(seed=42)
    for _ in range(20):
        symbols = rs.geometric(rs.uniform(0.05, 0.9), size=2000) % ALPHABET_SIZE
        hist = histogram(symbols)
        table = huffman_build(hist)
        bits = total_cost(hist, table)
        assert bits <= (empirical_entropy(hist) + 1) * symbols.size
        assert len(huffman_encode(symbols, table)) == math.ceil(bits / 8)


def test_encode_decode_round_trip():
    rs = np.random.RandomState(seed=42)
    for n in [1, 2, 10, 1000, 20000]:
        symbols = rs.randint(0, rs.randint(1, 257), size=n)
        table = huffman_build(histogram(symbols))
        decoded = huffman_decode(huffman_encode(symbols, table), table, n)
        assert np.array_equal(decoded, symbols)


def test_decode_zero_symbols():
    table = huffman_build(hist_of({1: 1}))
    assert huffman_decode(b"", table, 0).tolist() == []


def test_encode_empty_stream():
    assert huffman_encode([], huffman_build(hist_of({1: 1}))) == b""


def test_encode_absent_symbol():
    with pytest.raises(SymbolAbsentError):
        huffman_encode([2], huffman_build(hist_of({1: 1})))


def test_decode_truncated_stream():
    hist = hist_of({0: 5, 1: 2, 2: 1, 3: 1})
    table = huffman_build(hist)
    with pytest.raises(BitstreamExhaustedError):
        huffman_decode(huffman_encode([3] * 8, table), table, 9)


def test_decode_bits_outside_the_code():
    table = huffman_build(hist_of({4: 1}))
    with pytest.raises(CodeWalkError):
        huffman_decode(b"\x80", table, 1)


def test_table_serialization_round_trip():
    rs = np.random.RandomState(seed=42)
    for _ in range(20):
        table = huffman_build(rs.randint(0, 5, size=ALPHABET_SIZE) * rs.randint(0, 2, size=ALPHABET_SIZE) + (
            np.arange(ALPHABET_SIZE) == 0))
        data = serialize_table(table)
        assert len(data) == ALPHABET_SIZE
        assert deserialize_table(data) == table


def test_deserialize_single_symbol_table():
    table = deserialize_table(bytes([0] * 10 + [1] + [0] * 245))
    assert table.code_for(10) == "0"


def test_deserialize_rejects_kraft_violation():
    with pytest.raises(KraftViolationError):
        deserialize_table(bytes([1, 1, 1] + [0] * 253))


def test_deserialize_rejects_wrong_size():
    with pytest.raises(KraftViolationError):
        deserialize_table(bytes(10))
