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

from macc.errors import LayoutError
from macc.image.image import Image
from macc.image.intensity import GaussianIntensity, ProfileIntensity
from macc.image.shapes import DiskSpot, RectSpot

logger = logging.getLogger(__name__)


def random_state_for(seed):
    """Creates the MT19937 generator used for a 64-bit layout seed.

    The seed is split into its low and high 32-bit words, which seeds numpy's RandomState.

    Args:
        seed (int): A seed in [0, 2**64).

    Returns:
        mtrand.RandomState: The seeded generator.
    """
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise LayoutError(f"Seed must be a 64-bit unsigned value, got {seed}")
    return np.random.RandomState([seed & 0xFFFFFFFF, seed >> 32])


class SpotLayoutParams:
    """Describes a regular grid of microarray spots on a zero background.

    Spot (r, c) occupies the cell whose top-left corner is (margin + r * pitch, margin + c * pitch); the footprint is
    centered in its cell and optionally displaced by up to `jitter` pixels along each axis.
    """

    background_value = 0

    def __init__(self, grid_rows, grid_cols, spot_shape, pitch, margin=0, occupancy=1.0, intensity_law=None, seed=0,
                 jitter=0, width=None, height=None):
        """
        Args:
            grid_rows (int): Number of spot rows.
            grid_cols (int): Number of spot columns.
            spot_shape (SpotShape): The footprint of a spot.
            pitch (int): Distance between neighbouring spot cells in pixels.
            margin (int, optional): Border around the grid in pixels. Defaults to 0.
            occupancy (float, optional): Probability that a grid position holds a spot. Defaults to 1.0.
            intensity_law (IntensityLaw, optional): Law for the spot pixels. Defaults to GaussianIntensity(128, 32).
            seed (int, optional): 64-bit seed. Defaults to 0.
            jitter (int, optional): Largest per-axis displacement of a spot. Defaults to 0.
            width (int, optional): Image width. Defaults to 2 * margin + grid_cols * pitch.
            height (int, optional): Image height. Defaults to 2 * margin + grid_rows * pitch.
        """
        self.grid_rows = int(grid_rows)
        self.grid_cols = int(grid_cols)
        self.spot_shape = spot_shape
        self.pitch = int(pitch)
        self.margin = int(margin)
        self.occupancy = float(occupancy)
        self.intensity_law = intensity_law if intensity_law is not None else GaussianIntensity(128, 32)
        self.seed = int(seed)
        self.jitter = int(jitter)
        self.width = int(width) if width is not None else 2 * self.margin + self.grid_cols * self.pitch
        self.height = int(height) if height is not None else 2 * self.margin + self.grid_rows * self.pitch

    def validate(self):
        """Raises LayoutError unless every spot lies inside the image without touching another spot."""
        if self.grid_rows < 0 or self.grid_cols < 0 or self.margin < 0 or self.jitter < 0:
            raise LayoutError("Grid dimensions, margin and jitter must be non-negative")
        if not 0.0 <= self.occupancy <= 1.0:
            raise LayoutError(f"Occupancy must lie in [0, 1], got {self.occupancy}")
        if self.width < 1 or self.height < 1:
            raise LayoutError(f"Image must be at least 1x1, got {self.width}x{self.height}")
        spot_h, spot_w = self.spot_shape.extent
        if self.pitch < max(spot_h, spot_w) + 2 * self.jitter:
            raise LayoutError(f"Pitch {self.pitch} is smaller than the spot extent {max(spot_h, spot_w)} "
                              f"plus twice the jitter {self.jitter}; spots would overlap")
        needed_w = 2 * self.margin + self.grid_cols * self.pitch
        needed_h = 2 * self.margin + self.grid_rows * self.pitch
        if needed_w > self.width or needed_h > self.height:
            raise LayoutError(f"Layout needs {needed_w}x{needed_h} pixels but the image is {self.width}x{self.height}")

    def __repr__(self):
        return (f"SpotLayoutParams(grid={self.grid_rows}x{self.grid_cols}, spot={self.spot_shape!r}, "
                f"pitch={self.pitch}, margin={self.margin}, occupancy={self.occupancy}, seed={self.seed})")


def gen_synthetic(params):
    """Generates a synthetic microarray image.

    Spots are visited in raster order of the grid; for each one the generator draws presence, then jitter, then the
    spot intensities, so the result depends on the seed alone.

    Args:
        params (SpotLayoutParams): The layout.

    Returns:
        Image: The generated image.
    """
    params.validate()
    random_state = random_state_for(params.seed)
    pixels = np.zeros((params.height, params.width), dtype=np.uint8)
    footprint = params.spot_shape.footprint()
    spot_h, spot_w = footprint.shape
    n_spots = 0
    for r in range(params.grid_rows):
        for c in range(params.grid_cols):
            if random_state.rand() >= params.occupancy:
                continue
            top = params.margin + r * params.pitch + (params.pitch - spot_h) // 2
            left = params.margin + c * params.pitch + (params.pitch - spot_w) // 2
            if params.jitter:
                dy, dx = random_state.randint(-params.jitter, params.jitter + 1, size=2)
                top += dy
                left += dx
            values = params.intensity_law.sample(random_state, footprint)
            window = pixels[top:top + spot_h, left:left + spot_w]
            window[footprint] = values[footprint]
            n_spots += 1
    logger.debug("Generated %d spots on a %dx%d image", n_spots, params.width, params.height)
    return Image.from_array(pixels)


def four_spot_layout(seed=0):
    """Returns the four-spot 18x18 reference layout.

    Four 4-wide, 6-tall rectangles sit at columns 3-6 and 11-14 and rows 2-7 and 10-15, which leaves rows
    0, 1, 8, 9, 16 and 17 empty: 96 foreground pixels, 48 run starts and 6 all-zero rows.

    Args:
        seed (int, optional): Seed for the spot intensities. Defaults to 0.

    Returns:
        SpotLayoutParams: The layout.
    """
    return SpotLayoutParams(grid_rows=2, grid_cols=2, spot_shape=RectSpot(4, 6), pitch=8, margin=1, occupancy=1.0,
                            intensity_law=GaussianIntensity(160, 40), seed=seed)


def gen_four_spot(seed=0):
    return gen_synthetic(four_spot_layout(seed))


def microarray_layout(size=256, seed=0, spot_diameter=12, pitch=28):
    """Returns a layout resembling a small scanned microarray.

    The defaults give 12-pixel disk spots covering roughly 15 percent of a 256x256 image with smooth spot profiles.

    Args:
        size (int, optional): Width and height of the image. Defaults to 256.
        seed (int, optional): The seed. Defaults to 0.
        spot_diameter (int, optional): Diameter of the spots. Defaults to 12.
        pitch (int, optional): Spot pitch. Defaults to 28.

    Returns:
        SpotLayoutParams: The layout.
    """
    n = size // pitch
    margin = (size - n * pitch) // 2
    return SpotLayoutParams(grid_rows=n, grid_cols=n, spot_shape=DiskSpot(spot_diameter), pitch=pitch, margin=margin,
                            occupancy=0.95, intensity_law=ProfileIntensity(60, 250), seed=seed, width=size,
                            height=size)
