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

from abc import ABC, abstractmethod

import numpy as np


class SpotShape(ABC):
    """Spot shapes give the footprint a single microarray spot stamps onto the image.
    """

    @abstractmethod
    def footprint(self):
        """Returns the spot footprint.

        Returns:
            numpy.ndarray: A boolean array of shape (height, width) where True marks spot pixels.
        """
        pass

    @property
    def extent(self):
        """tuple: The (height, width) of the footprint's bounding box."""
        return self.footprint().shape


class DiskSpot(SpotShape):
    """DiskSpot is a filled circle of the given diameter.
    """

    def __init__(self, diameter):
        """
        Args:
            diameter (int): Diameter of the disk in pixels.
        """
        if diameter < 1:
            raise ValueError(f"Disk diameter must be positive, got {diameter}")
        self.diameter = int(diameter)

    def footprint(self):
        center = (self.diameter - 1) / 2
        y, x = np.indices((self.diameter, self.diameter))
        return (y - center) ** 2 + (x - center) ** 2 <= (self.diameter / 2) ** 2

    def __repr__(self):
        return f"DiskSpot({self.diameter})"


class RectSpot(SpotShape):
    """RectSpot is a filled axis-aligned rectangle.
    """

    def __init__(self, width, height):
        """
        Args:
            width (int): Width of the rectangle in pixels.
            height (int): Height of the rectangle in pixels.
        """
        if width < 1 or height < 1:
            raise ValueError(f"Rectangle sides must be positive, got {width}x{height}")
        self.width = int(width)
        self.height = int(height)

    def footprint(self):
        return np.ones((self.height, self.width), dtype=bool)

    def __repr__(self):
        return f"RectSpot({self.width}, {self.height})"
