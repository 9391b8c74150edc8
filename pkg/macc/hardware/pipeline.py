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
from collections import namedtuple

import numpy as np
import pandas as pd

from macc.codec.background import encode_row_record
from macc.codec.foreground import extract_image_foreground, residual_encode, residual_table
from macc.codec.huffman import encode_bits
from macc.hardware.compactor import MaskedVector, compact, cu_structural, derive_controls
from macc.errors import MissingCodeTableError
from macc.hardware.row_scanner import bitmap_image, bitmap_row, transitions

logger = logging.getLogger(__name__)

DEPTH = 3
TRACE_COLUMNS = ["cycle", "stage1_row", "stage2_row", "stage3_row", "bytes_emitted"]

# inter-stage registers
BitmapRecord = namedtuple("BitmapRecord", ["row", "pixels", "bitmap"])
# a CU input or output tagged with the row it belongs to
CuWord = namedtuple("CuWord", ["row", "values"])
ExtractRecord = namedtuple("ExtractRecord", ["row", "indices", "foreground", "indices_row", "foreground_row"])

Emission = namedtuple("Emission", ["cycle", "row", "background", "foreground_bits"])
CycleRecord = namedtuple("CycleRecord", ["cycle", "stage1_row", "stage2_row", "stage3_row", "bytes_emitted",
                                         "indices_row", "foreground_row"])


class PipelineState:
    """Registers and counters of the three-stage row pipeline after some number of cycles.

    stage_regs[0] holds the output of the bitmap stage, stage_regs[1] the output of the extraction stage (run starts
    and the compacted foreground of the same row). The residual predictor value and the number of foreground bits
    emitted so far carry over between rows. The residual code table is fixed for the whole image and is needed as soon
    as a row with foreground reaches stage 3.
    """

    def __init__(self, width, table=None, stage_regs=(None, None), cycle=0, last_value=0, fg_bits=0, emitted=()):
        self.width = width
        self.table = table
        self.stage_regs = tuple(stage_regs)
        self.cycle = cycle
        self.last_value = last_value
        self.fg_bits = fg_bits
        self.emitted = tuple(emitted)

    def is_empty(self):
        return all(reg is None for reg in self.stage_regs)


def _cu(row, mv, structural):
    if structural:
        return CuWord(row, cu_structural(mv, derive_controls(mv.y)))
    return CuWord(row, compact(mv))


def _extract(record, structural):
    """Stage 2: transition detection feeding the index CU, with the foreground CU working alongside."""
    t = transitions(record.bitmap)
    indices = _cu(record.row, MaskedVector(np.arange(record.bitmap.width), t.bits), structural)
    foreground = _cu(record.row, MaskedVector(record.pixels, record.bitmap.bits), structural)
    return ExtractRecord(record.row, indices.values[:t.popcount()],
                         foreground.values[:record.bitmap.popcount()].astype(np.uint8), indices.row, foreground.row)


def step(state, next_row=None, structural=False):
    """Advances the pipeline by one clock cycle.

    Args:
        state (PipelineState): The state before the cycle.
        next_row (tuple, optional): (row index, pixels) entering stage 1, or None for a bubble. Defaults to None.
        structural (bool, optional): Evaluate the CUs on the Routing-Unit grid. Defaults to False.

    Returns:
        tuple: The new PipelineState and the CycleRecord of the cycle.

    Raises:
        MissingCodeTableError: A row with foreground reaches stage 3 of a state built without a code table.
    """
    cycle = state.cycle + 1
    bitmap_reg, extract_reg = state.stage_regs

    emitted = state.emitted
    last_value = state.last_value
    fg_bits = state.fg_bits
    bytes_emitted = 0
    if extract_reg is not None:
        background = encode_row_record(extract_reg.indices, state.width)
        residuals = residual_encode(extract_reg.foreground, previous=last_value)
        if residuals.size and state.table is None:
            raise MissingCodeTableError(f"Row {extract_reg.row} has {residuals.size} foreground pixels but the "
                                        f"pipeline has no residual code table")
        bits = encode_bits(residuals, state.table) if residuals.size else np.zeros(0, dtype=np.uint8)
        if extract_reg.foreground.size:
            last_value = int(extract_reg.foreground[-1])
        bytes_emitted = len(background) + (fg_bits + bits.size) // 8 - fg_bits // 8
        fg_bits += bits.size
        emitted = emitted + (Emission(cycle, extract_reg.row, background, bits),)

    new_extract = _extract(bitmap_reg, structural) if bitmap_reg is not None else None
    new_bitmap = None
    if next_row is not None:
        row_index, pixels = next_row
        new_bitmap = BitmapRecord(row_index, np.asarray(pixels), bitmap_row(pixels))

    record = CycleRecord(cycle,
                         None if new_bitmap is None else new_bitmap.row,
                         None if new_extract is None else new_extract.row,
                         None if extract_reg is None else extract_reg.row,
                         bytes_emitted,
                         None if new_extract is None else new_extract.indices_row,
                         None if new_extract is None else new_extract.foreground_row)
    new_state = PipelineState(state.width, state.table, (new_bitmap, new_extract), cycle, last_value, fg_bits, emitted)
    return new_state, record


class SimTrace:
    """Per-cycle occupancy and emissions of a whole-image simulation.
    """

    def __init__(self, records, emissions):
        self.records = list(records)
        self.emissions = list(emissions)

    @property
    def cycles(self):
        return len(self.records)

    def background_payload(self):
        return b"".join(emission.background for emission in self.emissions)

    def foreground_payload(self):
        parts = [emission.foreground_bits for emission in self.emissions]
        bits = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint8)
        return np.packbits(bits).tobytes()

    def to_frame(self):
        """Returns the trace as a DataFrame with the columns of TRACE_COLUMNS; empty stages are blank."""
        df = pd.DataFrame([record._asdict() for record in self.records], columns=list(CycleRecord._fields))
        df = df[TRACE_COLUMNS]
        for column in ["stage1_row", "stage2_row", "stage3_row"]:
            df[column] = df[column].astype("Int64")
        return df

    def to_csv(self, path):
        self.to_frame().to_csv(path, index=False)


def simulate(img, structural=False):
    """Runs an image through the pipeline, one row per cycle, until the pipeline drains.

    The residual code is built from the whole image before the first cycle, so stage 3 can emit codes as soon as a
    row reaches it.

    Args:
        img (Image): The image.
        structural (bool, optional): Evaluate the CUs on the Routing-Unit grid. Defaults to False.

    Returns:
        SimTrace: The trace; it lasts height + 2 cycles.
    """
    if img.height < 1:
        raise ValueError("Cannot simulate an image without rows")
    table = residual_table(residual_encode(extract_image_foreground(img, bitmap_image(img))))
    state = PipelineState(img.width, table)
    records = []
    rows = iter(enumerate(img.rows()))
    while True:
        next_row = next(rows, None)
        if next_row is None and state.is_empty():
            break
        state, record = step(state, next_row, structural)
        records.append(record)
    if state.fg_bits % 8:
        last = records[-1]
        records[-1] = last._replace(bytes_emitted=last.bytes_emitted + 1)
    logger.debug("Simulated %d rows in %d cycles", img.height, len(records))
    return SimTrace(records, state.emitted)
