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

import heapq
import logging

import numpy as np

from macc.errors import (BitstreamExhaustedError, CodeWalkError, EmptyHistogramError, KraftViolationError,
                         SymbolAbsentError)

logger = logging.getLogger(__name__)

ALPHABET_SIZE = 256


def histogram(symbols):
    """Counts the occurrences of every byte value in a symbol stream."""
    return np.bincount(np.asarray(symbols, dtype=np.int64).reshape(-1), minlength=ALPHABET_SIZE)


class HuffmanTable:
    """A canonical prefix code over the byte alphabet, fully determined by its code lengths.

    Codes are assigned in order of increasing length, ties broken by increasing symbol value.
    """

    def __init__(self, code_lengths):
        """
        Args:
            code_lengths (iterable): 256 code lengths, 0 marking a symbol without a code.
        """
        lengths = np.asarray(code_lengths, dtype=np.int64).reshape(-1)
        if lengths.size != ALPHABET_SIZE:
            raise KraftViolationError(f"Expected {ALPHABET_SIZE} code lengths, got {lengths.size}")
        if lengths.min() < 0 or lengths.max() > 255:
            raise KraftViolationError("Code lengths must lie in [0, 255]")
        present = lengths[lengths > 0]
        if present.size == 0:
            raise KraftViolationError("A code table needs at least one symbol")
        max_len = int(present.max())
        if sum(1 << (max_len - int(length)) for length in present) > 1 << max_len:
            raise KraftViolationError(f"Code lengths {sorted(present.tolist())} violate the Kraft inequality")
        self.code_lengths = lengths.astype(np.uint8)
        self._assign_codes()

    def _assign_codes(self):
        order = sorted((int(length), symbol) for symbol, length in enumerate(self.code_lengths) if length)
        self.codes = {}
        self.sorted_symbols = [symbol for _, symbol in order]
        self.max_length = order[-1][0]
        self.first_code = [0] * (self.max_length + 2)
        self.first_index = [0] * (self.max_length + 2)
        self.count = [0] * (self.max_length + 2)
        code = 0
        prev_length = order[0][0]
        for index, (length, symbol) in enumerate(order):
            code <<= length - prev_length
            if self.count[length] == 0:
                self.first_code[length] = code
                self.first_index[length] = index
            self.count[length] += 1
            self.codes[symbol] = (code, length)
            code += 1
            prev_length = length
        self._code_bits = {symbol: np.array([(code >> (length - 1 - i)) & 1 for i in range(length)], dtype=np.uint8)
                           for symbol, (code, length) in self.codes.items()}

    def code_for(self, symbol):
        """Returns the code of a symbol as a string of '0' and '1' characters."""
        if symbol not in self.codes:
            raise SymbolAbsentError(f"Symbol {symbol} has no code in the table")
        code, length = self.codes[symbol]
        return format(code, f"0{length}b")

    def bits_for(self, symbol):
        if symbol not in self._code_bits:
            raise SymbolAbsentError(f"Symbol {symbol} has no code in the table")
        return self._code_bits[symbol]

    def __eq__(self, other):
        if not isinstance(other, HuffmanTable):
            return NotImplemented
        return np.array_equal(self.code_lengths, other.code_lengths)

    def __repr__(self):
        return f"HuffmanTable(symbols={len(self.codes)}, max_length={self.max_length})"


def huffman_build(hist):
    """Builds an optimal canonical Huffman code for a histogram.

    Args:
        hist (iterable): 256 symbol counts.

    Returns:
        HuffmanTable: The table. A single-symbol alphabet gets a 1-bit code.
    """
    hist = np.asarray(hist, dtype=np.int64).reshape(-1)
    if hist.size != ALPHABET_SIZE:
        raise ValueError(f"Expected {ALPHABET_SIZE} counts, got {hist.size}")
    symbols = np.flatnonzero(hist > 0)
    if symbols.size == 0:
        raise EmptyHistogramError("Cannot build a Huffman code from an empty histogram")
    lengths = np.zeros(ALPHABET_SIZE, dtype=np.int64)
    if symbols.size == 1:
        lengths[symbols[0]] = 1
        return HuffmanTable(lengths)

    # (count, smallest symbol, members) keeps the merge order independent of heap internals
    heap = [(int(hist[s]), int(s), [int(s)]) for s in symbols]
    heapq.heapify(heap)
    while len(heap) > 1:
        count_a, key_a, members_a = heapq.heappop(heap)
        count_b, key_b, members_b = heapq.heappop(heap)
        merged = members_a + members_b
        lengths[merged] += 1
        heapq.heappush(heap, (count_a + count_b, min(key_a, key_b), merged))
    return HuffmanTable(lengths)


def encode_bits(symbols, table):
    """Concatenates the codes of the symbols.

    Returns:
        numpy.ndarray: The code bits as a uint8 array of 0s and 1s.
    """
    symbols = np.asarray(symbols, dtype=np.int64).reshape(-1)
    if symbols.size == 0:
        return np.zeros(0, dtype=np.uint8)
    return np.concatenate([table.bits_for(int(symbol)) for symbol in symbols])


def huffman_encode(symbols, table):
    """Codes a symbol stream, most significant bit first, zero-padding the last byte.

    Args:
        symbols (iterable): Byte values, each with a code in the table.
        table (HuffmanTable): The code.

    Returns:
        bytes: The packed bitstream.
    """
    return np.packbits(encode_bits(symbols, table)).tobytes()


def huffman_decode(data, table, n_symbols):
    """Decodes exactly n_symbols symbols; padding after them is ignored.

    Args:
        data (bytes): The packed bitstream.
        table (HuffmanTable): The code used by the encoder.
        n_symbols (int): Number of symbols to decode.

    Returns:
        numpy.ndarray: The symbols as uint8.
    """
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8)).tolist()
    out = np.zeros(n_symbols, dtype=np.uint8)
    first_code, first_index, count = table.first_code, table.first_index, table.count
    sorted_symbols = table.sorted_symbols
    pos = 0
    n_bits = len(bits)
    for i in range(n_symbols):
        code = 0
        length = 0
        while True:
            if pos >= n_bits:
                raise BitstreamExhaustedError(f"Bitstream exhausted after {i} of {n_symbols} symbols")
            code = (code << 1) | bits[pos]
            pos += 1
            length += 1
            if length > table.max_length:
                raise CodeWalkError(f"No code matches the bits ending at bit {pos} (symbol {i})")
            offset = code - first_code[length]
            if count[length] and 0 <= offset < count[length]:
                out[i] = sorted_symbols[first_index[length] + offset]
                break
    return out


def serialize_table(table):
    """Returns the 256 code lengths as raw bytes."""
    return table.code_lengths.tobytes()


def deserialize_table(data):
    """Rebuilds a canonical table from 256 code-length bytes."""
    data = bytes(data)
    if len(data) != ALPHABET_SIZE:
        raise KraftViolationError(f"A serialized table is {ALPHABET_SIZE} bytes, got {len(data)}")
    return HuffmanTable(np.frombuffer(data, dtype=np.uint8))
