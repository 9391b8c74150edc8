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

from macc.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

RuControl = namedtuple("RuControl", ["cin1", "cin2"])
RuControl.__doc__ = """Control signals of one Routing Unit.

(0, 0) routes Up_in to Down_out, (1, 0) and (1, 1) route Right_in to Down_out and (0, 1) routes Up_in to Left_out.
"""

PASS_DOWN = RuControl(0, 0)
TAKE_RIGHT = RuControl(1, 0)
PASS_LEFT = RuControl(0, 1)


class MaskedVector:
    """The two inputs of a Compression Unit: values X and the keep-mask Y.
    """

    def __init__(self, x, y):
        """
        Args:
            x (iterable): N unsigned integer values.
            y (iterable): N mask bits; elements with a 1 are kept.
        """
        self.x = np.asarray(x, dtype=np.int64).reshape(-1)
        self.y = np.asarray(y, dtype=bool).reshape(-1)
        if self.x.size != self.y.size:
            raise DimensionMismatchError(f"X has {self.x.size} elements but Y has {self.y.size}")
        if self.x.size < 1:
            raise DimensionMismatchError("A masked vector needs at least one element")

    def __len__(self):
        return self.x.size


class RuGrid:
    """Control matrix of a Compression Unit built from N stages of N Routing Units.

    Stage s takes the down-outputs of stage s - 1 as its up-inputs. Inside a stage the Up_in of cell j + 1 is also
    wired to the Right_in of cell j, and the Right_in of the rightmost cell is tied to 0. Left_out is left unconnected,
    so a (0, 1) control only clears the cell's Down_out.
    """

    def __init__(self, cin1, cin2):
        """
        Args:
            cin1 (numpy.ndarray): Cin1 of every cell, shape (stages, width).
            cin2 (numpy.ndarray): Cin2 of every cell, shape (stages, width).
        """
        self.cin1 = np.asarray(cin1, dtype=np.uint8)
        self.cin2 = np.asarray(cin2, dtype=np.uint8)
        if self.cin1.shape != self.cin2.shape or self.cin1.ndim != 2:
            raise DimensionMismatchError(f"Control planes must share a 2-D shape, got {self.cin1.shape} "
                                         f"and {self.cin2.shape}")

    @classmethod
    def passthrough(cls, width):
        return cls(np.zeros((width, width)), np.zeros((width, width)))

    @property
    def width(self):
        return self.cin1.shape[1]

    @property
    def stages(self):
        return self.cin1.shape[0]

    def control(self, stage, cell):
        return RuControl(int(self.cin1[stage, cell]), int(self.cin2[stage, cell]))


def compact(mv):
    """Behavioral Compression Unit: packs the kept values of X to the left, in order, and zero-fills the rest.

    Args:
        mv (MaskedVector): The inputs.

    Returns:
        numpy.ndarray: N values; the first popcount(Y) are the kept ones.
    """
    out = np.zeros_like(mv.x)
    kept = mv.x[mv.y]
    out[:kept.size] = kept
    return out


def compact_indices(y):
    """Feeds the CU with X = 0..N-1, which turns a marker vector into the dense list of marked positions."""
    y = np.asarray(y, dtype=bool).reshape(-1)
    return compact(MaskedVector(np.arange(y.size), y))


def ru_route(up_in, right_in, control):
    """Evaluates one Routing Unit.

    Args:
        up_in (int): Value arriving from the stage above.
        right_in (int): Value arriving from the right neighbour.
        control (RuControl): The (Cin1, Cin2) pair.

    Returns:
        tuple: (down_out, left_out); an output not driven by the selected routing is 0.
    """
    cin1, cin2 = control
    if cin1:
        return right_in, 0
    if cin2:
        return 0, up_in
    return up_in, 0


def derive_controls(y):
    """Builds the control matrix that makes the RU grid compact X under the mask Y.

    Stage k closes the k-th hole: the leftmost position that still holds a masked-out element. Cells left of it pass
    their value down, the cell at the hole and every cell right of it take the value on their right, so the tail
    shifts left by one and a 0 enters at the right edge. Stages left over after the last hole pass everything down.

    Args:
        y (iterable): The N-bit mask.

    Returns:
        RuGrid: An N x N control matrix.
    """
    y = np.asarray(y, dtype=bool).reshape(-1)
    width = y.size
    cin1 = np.zeros((width, width), dtype=np.uint8)
    cin2 = np.zeros((width, width), dtype=np.uint8)
    for stage, dropped in enumerate(np.flatnonzero(~y)):
        # earlier stages already removed `stage` holes to the left of this one
        cin1[stage, dropped - stage:] = 1
    return RuGrid(cin1, cin2)


def route_stage(up, cin1, cin2):
    """Evaluates a whole stage of Routing Units at once.

    Args:
        up (numpy.ndarray): Up_in of every cell.
        cin1 (numpy.ndarray): Cin1 of every cell.
        cin2 (numpy.ndarray): Cin2 of every cell.

    Returns:
        tuple: The down-bus and the left-outputs of the stage. The grid does not route the left-outputs anywhere.
    """
    right = np.zeros_like(up)
    right[:-1] = up[1:]
    take_right = cin1.astype(bool)
    pass_left = ~take_right & cin2.astype(bool)
    down = np.where(take_right, right, np.where(pass_left, 0, up))
    left = np.where(pass_left, up, 0)
    return down, left


def cu_structural(mv, grid, trace=False):
    """Structural Compression Unit: pushes X through the RU grid stage by stage.

    Args:
        mv (MaskedVector): The inputs. Only X enters the grid; Y acts through the controls.
        grid (RuGrid): The control matrix.
        trace (bool, optional): Also return the down-bus after every stage. Defaults to False.

    Returns:
        numpy.ndarray or tuple: The final down-bus, and the list of stage buses when tracing.
    """
    if grid.width != len(mv):
        raise DimensionMismatchError(f"Grid is {grid.width} cells wide but the vector has {len(mv)} elements")
    bus = mv.x.copy()
    buses = []
    for stage in range(grid.stages):
        bus, _ = route_stage(bus, grid.cin1[stage], grid.cin2[stage])
        if trace:
            buses.append(bus.copy())
    if trace:
        return bus, buses
    return bus


def format_trace(buses):
    """Renders stage buses as text, one line per stage."""
    return "\n".join(f"stage {s:3d}: " + " ".join(str(int(v)) for v in bus) for s, bus in enumerate(buses))
