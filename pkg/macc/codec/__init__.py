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

from macc.codec.background import (encode_bitmap_section, decode_bitmap_section, reconstruct_bitmap_row,
                                   paper_cost_model, PaperAccounting)
from macc.codec.huffman import (HuffmanTable, huffman_build, huffman_encode, huffman_decode, serialize_table,
                                deserialize_table)
from macc.codec.foreground import extract_foreground, residual_encode, residual_decode
from macc.codec.container import CompressedStream, StatsReport, compress, decompress, stats

__all__ = ['encode_bitmap_section',
           'decode_bitmap_section',
           'reconstruct_bitmap_row',
           'paper_cost_model',
           'PaperAccounting',
           'HuffmanTable',
           'huffman_build',
           'huffman_encode',
           'huffman_decode',
           'serialize_table',
           'deserialize_table',
           'extract_foreground',
           'residual_encode',
           'residual_decode',
           'CompressedStream',
           'StatsReport',
           'compress',
           'decompress',
           'stats']
