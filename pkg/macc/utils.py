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
from pathlib import Path


def get_project_root():
    """Returns a path to the root of the project.

    Returns:
        pathlib.PosixPath: The path to the root of the project.
    """
    return Path(__file__).resolve().parents[1]


def get_data_dir():
    """Returns a path to the directory where example configurations are kept.

    Returns:
        pathlib.PosixPath: The path to the data directory.
    """
    return get_project_root() / "data"


def bytes_for(value):
    """Returns the minimal number of bytes that can hold a non-negative integer.

    Zero still needs one byte.

    Args:
        value (int): A non-negative integer.

    Returns:
        int: The byte count.
    """
    return max(1, (int(value).bit_length() + 7) // 8)


def configure_logging(verbosity=0):
    """Configures the root logger from a repeat count of the -v flag.

    Args:
        verbosity (int, optional): 0 for warnings only, 1 for info, 2 or more for debug. Defaults to 0.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s")
