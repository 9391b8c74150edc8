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

from macc.image.image import Image
from macc.image.pgm import load_pgm, store_pgm, read_pgm, write_pgm
from macc.image.shapes import SpotShape, DiskSpot, RectSpot
from macc.image.intensity import IntensityLaw, UniformIntensity, GaussianIntensity, ProfileIntensity
from macc.image.synthetic import SpotLayoutParams, gen_synthetic, four_spot_layout, gen_four_spot, microarray_layout

__all__ = ['Image',
           'load_pgm',
           'store_pgm',
           'read_pgm',
           'write_pgm',
           'SpotShape',
           'DiskSpot',
           'RectSpot',
           'IntensityLaw',
           'UniformIntensity',
           'GaussianIntensity',
           'ProfileIntensity',
           'SpotLayoutParams',
           'gen_synthetic',
           'four_spot_layout',
           'gen_four_spot',
           'microarray_layout']
