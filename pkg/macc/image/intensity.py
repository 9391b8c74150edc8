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


class IntensityLaw(ABC):
    """Intensity laws draw the pixel values of one spot.

    Every drawn value lies in [1, 255] so that spot pixels are never mistaken for background.
    """

    @abstractmethod
    def sample(self, random_state, footprint):
        """Draws intensities for the pixels of a spot.

        Args:
            random_state (mtrand.RandomState): A random state object to be used in all things related to randomness
                to ensure the repeatability.
            footprint (numpy.ndarray): The boolean footprint of the spot.

        Returns:
            numpy.ndarray: A uint8 array shaped like the footprint. Values outside the footprint are unspecified.
        """
        pass


class UniformIntensity(IntensityLaw):
    """UniformIntensity draws every pixel independently from the integers lo..hi.
    """

    def __init__(self, lo, hi):
        """
        Args:
            lo (int): Smallest value, at least 1.
            hi (int): Largest value, at most 255.
        """
        if not 1 <= lo <= hi <= 255:
            raise ValueError(f"Uniform intensity bounds must satisfy 1 <= lo <= hi <= 255, got {lo}, {hi}")
        self.lo = int(lo)
        self.hi = int(hi)

    def sample(self, random_state, footprint):
        return random_state.randint(self.lo, self.hi + 1, size=footprint.shape).astype(np.uint8)


class GaussianIntensity(IntensityLaw):
    """GaussianIntensity draws every pixel from a normal distribution, rounded and clipped to 1..255.
    """

    def __init__(self, mean, sd):
        """
        Args:
            mean (float): The mean of the normal distribution.
            sd (float): The standard deviation of the normal distribution.
        """
        if sd < 0:
            raise ValueError(f"Standard deviation must be non-negative, got {sd}")
        self.mean = float(mean)
        self.sd = float(sd)

    def sample(self, random_state, footprint):
        values = np.rint(random_state.normal(loc=self.mean, scale=self.sd, size=footprint.shape))
        return np.clip(values, 1, 255).astype(np.uint8)


class ProfileIntensity(IntensityLaw):
    """ProfileIntensity gives each spot a smooth bell-shaped profile.

    A peak value is drawn per spot from Uniform(peak_lo, peak_hi). Pixels fall off as a Gaussian of their distance
    from the spot center, scaled by the spot radius, and a small amount of Gaussian noise is added on top.
    """

    def __init__(self, peak_lo, peak_hi, noise_sd=2.0):
        """
        Args:
            peak_lo (int): Smallest peak value.
            peak_hi (int): Largest peak value.
            noise_sd (float, optional): Standard deviation of the per-pixel noise. Defaults to 2.0.
        """
        if not 1 <= peak_lo <= peak_hi <= 255:
            raise ValueError(f"Peak bounds must satisfy 1 <= lo <= hi <= 255, got {peak_lo}, {peak_hi}")
        self.peak_lo = int(peak_lo)
        self.peak_hi = int(peak_hi)
        self.noise_sd = float(noise_sd)

    def sample(self, random_state, footprint):
        peak = random_state.randint(self.peak_lo, self.peak_hi + 1)
        height, width = footprint.shape
        y, x = np.indices(footprint.shape)
        dist2 = ((y - (height - 1) / 2) / max(height / 2, 1)) ** 2 + ((x - (width - 1) / 2) / max(width / 2, 1)) ** 2
        values = peak * np.exp(-dist2) + random_state.normal(scale=self.noise_sd, size=footprint.shape)
        return np.clip(np.rint(values), 1, 255).astype(np.uint8)
