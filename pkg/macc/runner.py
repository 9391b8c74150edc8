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
import time
from multiprocessing.pool import Pool
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from macc.codec.container import stats
from macc.errors import MaccError
from macc.image.pgm import read_pgm

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["name", "raw_bytes", "compressed_bytes", "container_ratio", "fg_ratio", "paper_model_ratio",
                  "time_stats", "error"]
RATIO_COLUMNS = ["container_ratio", "fg_ratio", "paper_model_ratio"]


def worker(path):
    """Measures one image of the corpus.

    Args:
        path (str): Path to a PGM file.

    Returns:
        dict: One report row. Files that fail keep their row with the error message set.
    """
    name = Path(path).name
    time_start = time.time()
    try:
        report = stats(read_pgm(path))
    except (MaccError, OSError) as e:
        logger.warning("Skipping %s: %s", path, e)
        return {"name": name, "error": f"{type(e).__name__}: {e}"}
    return {
        "name": name,
        "raw_bytes": report.raw_bits // 8,
        "compressed_bytes": report.container_bits // 8,
        "container_ratio": report.container_ratio,
        "fg_ratio": report.fg_ratio,
        "paper_model_ratio": report.paper_model.ratio,
        "time_stats": round(time.time() - time_start, 3),
        "error": None,
    }


def get_total_results_from_workers(paths, n_processes):
    """Gathers the report rows of every file from a pool of workers.

    Args:
        paths (list): Paths of the images.
        n_processes (int): Max number of active subprocesses.

    Returns:
        list: All report rows.
    """
    total_results = []
    with Pool(n_processes) as pool:
        for result in tqdm(pool.imap(worker, paths), total=len(paths)):
            total_results.append(result)
    return total_results


class BenchReport:
    """Per-image sizes and ratios of a corpus, sorted by file name.
    """

    def __init__(self, df):
        """
        Args:
            df (pandas.DataFrame): One row per image with the columns of REPORT_COLUMNS.
        """
        self.df = df

    def means(self):
        """Arithmetic means of the ratio columns over the images that compressed without error."""
        ok = self.df[self.df["error"].isna()]
        return {column: float(ok[column].dropna().mean()) if ok[column].notna().any() else None
                for column in RATIO_COLUMNS}

    def to_csv(self, path):
        self.df.to_csv(path, index=False)
        logger.info("Wrote bench report of %d images to %s", len(self.df), path)

    def __len__(self):
        return len(self.df)


def list_corpus(directory):
    """Returns the PGM files of a directory sorted by name."""
    return sorted(str(path) for path in Path(directory).iterdir() if path.suffix.lower() == ".pgm")


def run(directory, n_processes=None):
    """Compresses every PGM image of a directory and collects the results.

    Args:
        directory (str): Directory of the corpus.
        n_processes (int, optional): Max number of active subprocesses. Defaults to the CPU count.

    Returns:
        BenchReport: The report.
    """
    paths = list_corpus(directory)
    total_results = get_total_results_from_workers(paths, n_processes) if paths else []
    df = pd.DataFrame(total_results, columns=REPORT_COLUMNS)
    df = df.sort_values("name", kind="mergesort").reset_index(drop=True)
    return BenchReport(df)
