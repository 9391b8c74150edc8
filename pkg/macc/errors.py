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

class MaccError(Exception):
    """Base class for every error raised by the macc package.
    """


class PgmError(MaccError):
    """The input is not an acceptable binary PGM file.
    """


class PgmHeaderError(PgmError):
    """The PGM magic number or header tokens are malformed.
    """


class UnsupportedMaxvalError(PgmError):
    """The PGM maxval does not fit in 8 bits.
    """


class TruncatedPayloadError(PgmError):
    """The PGM raster holds fewer bytes than the header promises.
    """


class LayoutError(MaccError):
    """A synthetic spot layout does not fit inside the requested image.
    """


class ConfigError(MaccError):
    """A layout configuration file contains unknown or invalid entries.
    """


class DimensionMismatchError(MaccError):
    """Two inputs that must share a width do not.
    """


class BitmapSectionError(MaccError):
    """The background section cannot be decoded.
    """


class TruncatedSectionError(BitmapSectionError):
    pass


class CountOverflowError(BitmapSectionError):
    pass


class IndexOrderError(BitmapSectionError):
    pass


class IndexRangeError(BitmapSectionError):
    pass


class HuffmanError(MaccError):
    """Base class for errors of the residual Huffman coder.
    """


class EmptyHistogramError(HuffmanError):
    pass


class KraftViolationError(HuffmanError):
    pass


class SymbolAbsentError(HuffmanError):
    pass


class CodeWalkError(HuffmanError):
    pass


class BitstreamExhaustedError(HuffmanError):
    pass


class ResidualCorruptionError(MaccError):
    """A decoded foreground value is zero, which no foreground pixel can be.
    """


class ContainerError(MaccError):
    """The MACC container is malformed or inconsistent.
    """


class BadMagicError(ContainerError):
    pass


class VersionMismatchError(ContainerError):
    pass


class SectionLengthError(ContainerError):
    pass


class ForegroundCountError(ContainerError):
    pass


class VerificationError(MaccError):
    """A decompressed image differs from the image that was compressed.
    """


class MissingCodeTableError(HuffmanError):
    """Foreground residuals reached the output stage of the pipeline before a code table was supplied.
    """
