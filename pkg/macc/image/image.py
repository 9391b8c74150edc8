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


class Image:
    """An 8-bit grayscale image stored as a row-major (height, width) uint8 array.

    Pixels equal to zero are background, every other pixel is foreground.
    """

    def __init__(self, width, height, pixels):
        """
        Args:
            width (int): Number of pixels per row, at least 1.
            height (int): Number of rows, at least 1.
            pixels (iterable): Row-major pixel values in [0, 255], width * height of them.
        """
        if width < 1 or height < 1:
            raise ValueError(f"Image dimensions must be positive, got {width}x{height}")
        values = np.asarray(pixels).reshape(-1)
        if values.dtype != bool and not np.issubdtype(values.dtype, np.integer):
            raise ValueError(f"Pixel values must be integers, got dtype {values.dtype}")
        if values.size != width * height:
            raise ValueError(f"Expected {width * height} pixels for a {width}x{height} image, got {values.size}")
        if values.size and (values.min() < 0 or values.max() > 255):
            raise ValueError("Pixel values must lie in [0, 255]")
        self.width = int(width)
        self.height = int(height)
        self.pixels = values.astype(np.uint8).reshape((self.height, self.width))

    @classmethod
    def from_array(cls, array):
        """Builds an image from a two-dimensional array.

        Args:
            array (numpy.ndarray): Array of shape (height, width).

        Returns:
            Image: The image.
        """
        array = np.asarray(array)
        if array.ndim != 2:
            raise ValueError(f"Expected a 2-dimensional array, got shape {array.shape}")
        return cls(array.shape[1], array.shape[0], array)

    @classmethod
    def zeros(cls, width, height):
        return cls(width, height, np.zeros(width * height, dtype=np.uint8))

    def rows(self):
        """Yields the rows of the image from top to bottom."""
        for row in self.pixels:
            yield row

    def nonzero_count(self):
        return int(np.count_nonzero(self.pixels))

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"Image(width={self.width}, height={self.height}, foreground={self.nonzero_count()})"
