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

import json

import pytest

from macc.config import layout_from_dict, load_layout_params
from macc.errors import ConfigError
from macc.image import DiskSpot, ProfileIntensity, RectSpot, UniformIntensity, gen_synthetic
from macc.utils import get_data_dir


def test_example_layout_loads():
    params = load_layout_params(get_data_dir() / "example_layout.json")
    assert (params.grid_rows, params.grid_cols, params.pitch, params.seed, params.jitter) == (9, 9, 28, 2019, 2)
    assert isinstance(params.spot_shape, DiskSpot)
    assert isinstance(params.intensity_law, ProfileIntensity)
    assert gen_synthetic(params).width == 2 * 2 + 9 * 28


def test_rect_spot_and_uniform_law():
    params = layout_from_dict({"grid_rows": 1, "grid_cols": 2, "spot": {"shape": "rect", "width": 3, "height": 2},
                               "pitch": 4, "intensity": {"law": "uniform", "lo": 5, "hi": 6}})
    assert isinstance(params.spot_shape, RectSpot)
    assert isinstance(params.intensity_law, UniformIntensity)
    assert gen_synthetic(params).nonzero_count() == 12


def test_unknown_parameter_is_rejected():
    with pytest.raises(ConfigError) as e:
        layout_from_dict({"grid_rows": 1, "grid_cols": 1, "spot": {"shape": "disk", "diameter": 3}, "pitch": 4,
                          "colour": "red"})
    assert "colour" in str(e.value)


def test_missing_parameter_is_rejected():
    with pytest.raises(ConfigError):
        layout_from_dict({"grid_rows": 1, "spot": {"shape": "disk", "diameter": 3}, "pitch": 4})


def test_unknown_spot_shape_and_law():
    base = {"grid_rows": 1, "grid_cols": 1, "pitch": 4}
    with pytest.raises(ConfigError):
        layout_from_dict(dict(base, spot={"shape": "star"}))
    with pytest.raises(ConfigError):
        layout_from_dict(dict(base, spot={"shape": "disk"}))
    with pytest.raises(ConfigError):
        layout_from_dict(dict(base, spot={"shape": "disk", "diameter": 3}, intensity={"law": "poisson"}))


def test_invalid_json(tmp_path):
    path = tmp_path / "layout.json"
    path.write_text("{grid_rows: 1")
    with pytest.raises(ConfigError):
        load_layout_params(path)


def test_json_file_round_trip(tmp_path):
    path = tmp_path / "layout.json"
    path.write_text(json.dumps({"grid_rows": 2, "grid_cols": 3, "spot": {"shape": "disk", "diameter": 5},
                                "pitch": 7, "seed": 11}))
    params = load_layout_params(path)
    assert (params.width, params.height, params.seed) == (21, 14, 11)
