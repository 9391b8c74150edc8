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

from macc.errors import PgmHeaderError, TruncatedPayloadError, UnsupportedMaxvalError
from macc.image.image import Image

logger = logging.getLogger(__name__)

MAGIC = b"P5"
WHITESPACE = b" \t\n\r\v\f"


def _read_token(data, pos):
    """Reads one ASCII header token, skipping whitespace and comments.

    Args:
        data (bytes): The whole file.
        pos (int): Offset to start scanning from.

    Returns:
        tuple: The token as bytes and the offset just past it.
    """
    while pos < len(data):
        if data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        elif data[pos:pos + 1] in WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < len(data) and data[pos:pos + 1] not in WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise PgmHeaderError("malformed header: unexpected end of header")
    return data[start:pos], pos


def _read_int(data, pos, name):
    token, pos = _read_token(data, pos)
    if not token.isdigit():
        raise PgmHeaderError(f"malformed header: {name} is not a decimal number ({token!r})")
    return int(token), pos


def load_pgm(data):
    """Parses a binary (P5) PGM file.

    Args:
        data (bytes): The file contents.

    Returns:
        Image: The decoded image.
    """
    data = bytes(data)
    if data[:2] != MAGIC:
        raise PgmHeaderError(f"malformed header: bad magic {data[:2]!r}, expected {MAGIC!r}")
    if not data[2:3] or data[2:3] not in WHITESPACE:
        raise PgmHeaderError("malformed header: missing whitespace after magic")
    width, pos = _read_int(data, 2, "width")
    height, pos = _read_int(data, pos, "height")
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PgmHeaderError(f"malformed header: dimensions {width}x{height}")
    if maxval > 255:
        raise UnsupportedMaxvalError(f"unsupported maxval {maxval}, only 8-bit images are accepted")
    if maxval < 1:
        raise PgmHeaderError("malformed header: maxval must be at least 1")
    if pos >= len(data) or data[pos:pos + 1] not in WHITESPACE:
        raise PgmHeaderError("malformed header: missing whitespace after maxval")
    pos += 1

    n_pixels = width * height
    payload = data[pos:pos + n_pixels]
    if len(payload) < n_pixels:
        raise TruncatedPayloadError(f"truncated payload: expected {n_pixels} bytes, got {len(payload)}")
    if len(data) > pos + n_pixels:
        logger.debug("Ignoring %d trailing bytes after the PGM raster", len(data) - pos - n_pixels)
    return Image(width, height, np.frombuffer(payload, dtype=np.uint8))


def store_pgm(img):
    """Serializes an image as a binary PGM with maxval 255.

    Args:
        img (Image): The image.

    Returns:
        bytes: The file contents.
    """
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def read_pgm(path):
    with open(path, "rb") as file:
        return load_pgm(file.read())


def write_pgm(path, img):
    with open(path, "wb") as file:
        file.write(store_pgm(img))
    logger.info("Wrote %dx%d PGM to %s", img.width, img.height, path)
