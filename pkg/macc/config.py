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

from macc.errors import ConfigError
from macc.image.intensity import GaussianIntensity, ProfileIntensity, UniformIntensity
from macc.image.shapes import DiskSpot, RectSpot
from macc.image.synthetic import SpotLayoutParams

LAYOUT_KEYS = {"grid_rows", "grid_cols", "spot", "pitch", "margin", "occupancy", "intensity", "seed", "jitter",
               "width", "height"}


def _spot_from_dict(spot):
    shape = spot.get("shape")
    try:
        if shape == "disk":
            return DiskSpot(spot["diameter"])
        if shape == "rect":
            return RectSpot(spot["width"], spot["height"])
    except KeyError as e:
        raise ConfigError(f"Spot of shape '{shape}' is missing the parameter {e}") from e
    raise ConfigError(f"Unknown spot shape '{shape}', expected 'disk' or 'rect'")


def _intensity_from_dict(intensity):
    law = intensity.get("law")
    try:
        if law == "uniform":
            return UniformIntensity(intensity["lo"], intensity["hi"])
        if law == "gaussian":
            return GaussianIntensity(intensity["mean"], intensity["sd"])
        if law == "profile":
            return ProfileIntensity(intensity["peak_lo"], intensity["peak_hi"], intensity.get("noise_sd", 2.0))
    except KeyError as e:
        raise ConfigError(f"Intensity law '{law}' is missing the parameter {e}") from e
    raise ConfigError(f"Unknown intensity law '{law}', expected 'uniform', 'gaussian' or 'profile'")


def layout_from_dict(config):
    """Builds layout parameters from a dictionary of the JSON layout format.

    Args:
        config (dict): The configuration.

    Returns:
        SpotLayoutParams: The layout.
    """
    unknown = sorted(set(config) - LAYOUT_KEYS)
    if unknown:
        raise ConfigError(f"Unknown layout parameter '{unknown[0]}'")
    for key in ("grid_rows", "grid_cols", "spot", "pitch"):
        if key not in config:
            raise ConfigError(f"The layout configuration does not contain the parameter '{key}'")
    params = {key: value for key, value in config.items() if key not in ("spot", "intensity")}
    params["spot_shape"] = _spot_from_dict(config["spot"])
    if "intensity" in config:
        params["intensity_law"] = _intensity_from_dict(config["intensity"])
    return SpotLayoutParams(**params)


def load_layout_params(path_to_config):
    """Loads layout parameters from a JSON-file.

    Args:
        path_to_config (str): A string containing the relative or absolute path to the file.

    Returns:
        SpotLayoutParams: The layout.
    """
    with open(path_to_config) as file:
        try:
            config = json.load(file)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path_to_config} is not valid JSON: {e}") from e
    return layout_from_dict(config)
