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

import argparse
import logging
import sys
from pathlib import Path

from macc.codec.background import paper_cost_model
from macc.codec.container import EXTENSION, CompressedStream, StatsReport, compress, decompress, stats
from macc.config import load_layout_params
from macc.errors import (BadMagicError, BitmapSectionError, ConfigError, ContainerError, HuffmanError, LayoutError,
                         MaccError, PgmError, ResidualCorruptionError, VerificationError, VersionMismatchError)
from macc.hardware.compactor import MaskedVector, cu_structural, derive_controls, format_trace
from macc.hardware.pipeline import simulate
from macc.hardware.row_scanner import bitmap_row, transitions
from macc.image.intensity import GaussianIntensity, UniformIntensity
from macc.image.pgm import load_pgm, store_pgm, write_pgm
from macc.image.shapes import DiskSpot, RectSpot
from macc.image.synthetic import SpotLayoutParams, four_spot_layout, gen_synthetic, microarray_layout
from macc.runner import run
from macc.utils import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_IO = 3
EXIT_PGM = 4
EXIT_MAGIC = 5
EXIT_VERSION = 6
EXIT_CORRUPT = 7
EXIT_VERIFY = 8
EXIT_LAYOUT = 9

# both names select the 18x18 four-spot example
PRESETS = ["fig8", "four-spot"]


def exit_code_for(error):
    """Maps an exception to the exit status of the CLI."""
    if isinstance(error, OSError):
        return EXIT_IO
    if isinstance(error, PgmError):
        return EXIT_PGM
    if isinstance(error, BadMagicError):
        return EXIT_MAGIC
    if isinstance(error, VersionMismatchError):
        return EXIT_VERSION
    if isinstance(error, VerificationError):
        return EXIT_VERIFY
    if isinstance(error, (LayoutError, ConfigError)):
        return EXIT_LAYOUT
    if isinstance(error, (ContainerError, BitmapSectionError, HuffmanError, ResidualCorruptionError)):
        return EXIT_CORRUPT
    return EXIT_ERROR


def _read_bytes(path):
    try:
        with open(path, "rb") as file:
            return file.read()
    except OSError as e:
        raise OSError(e.errno, f"cannot read {path}: {e.strerror}") from e


def _write_bytes(path, data):
    try:
        with open(path, "wb") as file:
            file.write(data)
    except OSError as e:
        raise OSError(e.errno, f"cannot write {path}: {e.strerror}") from e


def _read_image(path):
    return load_pgm(_read_bytes(path))


def cmd_compress(args):
    img = _read_image(args.input)
    stream = compress(img)
    data = stream.to_bytes()
    if args.output is None:
        args.output = str(Path(args.input).with_suffix(EXTENSION))
    _write_bytes(args.output, data)
    if args.verify and decompress(CompressedStream.from_bytes(_read_bytes(args.output))) != img:
        raise VerificationError(f"{args.output} does not decompress to {args.input}")
    report = StatsReport(8 * img.width * img.height, stream, paper_cost_model(img), None)
    print(f"{args.output}: {len(data)} bytes, {report.summary()}" + (", verified" if args.verify else ""))
    return EXIT_OK


def cmd_decompress(args):
    img = decompress(CompressedStream.from_bytes(_read_bytes(args.input)))
    _write_bytes(args.output, store_pgm(img))
    print(f"{args.output}: {img.width}x{img.height}")
    return EXIT_OK


def layout_from_args(args):
    """Builds the layout selected by the gen flags: a preset, a JSON config or explicit grid parameters."""
    if args.preset in PRESETS:
        return four_spot_layout(args.seed or 0)
    if args.config:
        params = load_layout_params(args.config)
        if args.seed is not None:
            params.seed = args.seed
        return params
    if not args.grid:
        raise ConfigError("gen needs --preset, --config or --grid")
    spot = RectSpot(*args.spot_rect) if args.spot_rect else DiskSpot(args.spot_diameter)
    intensity = UniformIntensity(*args.uniform) if args.uniform else GaussianIntensity(*args.gaussian)
    return SpotLayoutParams(grid_rows=args.grid[0], grid_cols=args.grid[1], spot_shape=spot, pitch=args.pitch,
                            margin=args.margin, occupancy=args.occupancy, intensity_law=intensity,
                            seed=args.seed or 0, jitter=args.jitter)


def cmd_gen(args):
    img = gen_synthetic(layout_from_args(args))
    _write_bytes(args.output, store_pgm(img))
    print(f"{args.output}: {img.width}x{img.height}, {img.nonzero_count()} foreground pixels")
    return EXIT_OK


def cmd_gen_corpus(args):
    directory = Path(args.directory)
    directory.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        img = gen_synthetic(microarray_layout(size=args.size, seed=args.seed + i))
        write_pgm(directory / f"synthetic_{i:04d}.pgm", img)
    print(f"{directory}: {args.count} images")
    return EXIT_OK


def cmd_stats(args):
    img = _read_image(args.input)
    report = stats(img)
    for key, value in report.as_dict().items():
        print(f"{key},{'' if value is None else value}")
    return EXIT_OK


def cmd_simulate(args):
    img = _read_image(args.input)
    trace = simulate(img, structural=args.structural)
    if args.trace:
        trace.to_csv(args.trace)
    if args.cu_trace is not None:
        if not 0 <= args.cu_trace < img.height:
            raise ConfigError(f"Row {args.cu_trace} is outside the image (height {img.height})")
        t = transitions(bitmap_row(img.pixels[args.cu_trace]))
        _, buses = cu_structural(MaskedVector(range(img.width), t.bits), derive_controls(t.bits), trace=True)
        print(format_trace(buses))
    print(f"{args.input}: {img.height} rows in {trace.cycles} cycles")
    return EXIT_OK


def cmd_bench(args):
    report = run(args.directory, n_processes=args.processes)
    if args.out:
        report.to_csv(args.out)
    else:
        print(report.df.to_csv(index=False), end="")
    means = report.means()
    print(f"{len(report)} images; mean " + ", ".join(
        f"{name} {'n/a' if value is None else format(value, '.4f')}" for name, value in means.items()))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="macc", description="Lossless microarray image compression")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Repeat for more logging")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    p = commands.add_parser("compress", help="Compress a PGM image into a MACC container")
    p.add_argument("--verify", action="store_true", help="Decompress the output and compare before succeeding")
    p.add_argument("input")
    p.add_argument("output", nargs="?", help=f"Defaults to the input path with a {EXTENSION} suffix")
    p.set_defaults(func=cmd_compress)

    p = commands.add_parser("decompress", help="Decompress a MACC container into a PGM image")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decompress)

    p = commands.add_parser("gen", help="Generate a synthetic microarray image")
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--config", help="JSON layout configuration")
    p.add_argument("--grid", type=int, nargs=2, metavar=("ROWS", "COLS"))
    spot = p.add_mutually_exclusive_group()
    spot.add_argument("--spot-diameter", type=int, default=12)
    spot.add_argument("--spot-rect", type=int, nargs=2, metavar=("WIDTH", "HEIGHT"))
    p.add_argument("--pitch", type=int, default=28)
    p.add_argument("--margin", type=int, default=0)
    p.add_argument("--occupancy", type=float, default=1.0)
    p.add_argument("--jitter", type=int, default=0)
    law = p.add_mutually_exclusive_group()
    law.add_argument("--uniform", type=int, nargs=2, metavar=("LO", "HI"))
    law.add_argument("--gaussian", type=float, nargs=2, metavar=("MEAN", "SD"), default=[128.0, 32.0])
    p.add_argument("--seed", type=int)
    p.add_argument("output")
    p.set_defaults(func=cmd_gen)

    p = commands.add_parser("gen-corpus", help="Generate a directory of synthetic microarray images")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--size", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("directory")
    p.set_defaults(func=cmd_gen_corpus)

    p = commands.add_parser("stats", help="Print sizes and ratios of compressing an image")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = commands.add_parser("simulate", help="Run an image through the row pipeline model")
    p.add_argument("input")
    p.add_argument("--trace", help="Write the per-cycle trace as CSV")
    p.add_argument("--cu-trace", type=int, metavar="ROW", help="Print the CU stage buses of one row")
    p.add_argument("--structural", action="store_true", help="Evaluate the CUs on the Routing-Unit grid")
    p.set_defaults(func=cmd_simulate)

    p = commands.add_parser("bench", help="Compress every PGM image of a directory")
    p.add_argument("directory")
    p.add_argument("--out", help="Write the report as CSV")
    p.add_argument("--processes", type=int)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except (MaccError, OSError) as e:
        print(f"macc: error: {e}", file=sys.stderr)
        return exit_code_for(e)
