#!/usr/bin/env python3
"""Fetch the four UCI datasets used by the real-data acceptance checks.

Downloads from archive.ics.uci.edu (network required) and normalizes each
dataset to a headered CSV with one "label" column, the layout the acceptance
tests and the CLI examples expect:

    dermatology.csv  34 numeric columns + label (disease class 1..6).
                     The 8 source rows with a missing age ('?') are dropped,
                     366 -> 358 rows.
    satimage.csv     36 numeric columns + label; training and test splits
                     concatenated (4435 + 2000 = 6435 rows).
    control.csv      60 numeric columns + label (six chart classes in source
                     order: normal, cyclic, increasing, decreasing,
                     upward_shift, downward_shift; 100 rows each).
    mfeat.csv        649 numeric columns (fac, fou, kar, mor, pix, zer
                     feature blocks, column-bound) + label (digit 0..9,
                     200 rows per digit).

Usage:
    python scripts/fetch_uci.py [--dest data/uci]

Iris is not fetched; the repository ships data/iris.csv.
"""

from __future__ import annotations

import argparse
import csv
import sys
import urllib.request
from pathlib import Path

BASE = "https://archive.ics.uci.edu/ml/machine-learning-databases"

MFEAT_BLOCKS = ("fac", "fou", "kar", "mor", "pix", "zer")
CONTROL_CLASSES = (
    "normal",
    "cyclic",
    "increasing",
    "decreasing",
    "upward_shift",
    "downward_shift",
)


def _get(url: str) -> str:
    print(f"  fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read().decode("utf-8")


def _write_csv(path: Path, n_numeric: int, rows: list[list[str]]) -> None:
    header = [f"x{i}" for i in range(n_numeric)] + ["label"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    print(f"  wrote {path} ({len(rows)} rows, {n_numeric} numeric columns)")


def fetch_dermatology(dest: Path) -> None:
    text = _get(f"{BASE}/dermatology/dermatology.data")
    rows, dropped = [], 0
    for line in text.splitlines():
        if not line.strip():
            continue
        cells = line.split(",")
        if "?" in cells:
            dropped += 1
            continue
        rows.append(cells[:-1] + [cells[-1]])
    print(f"  dropped {dropped} rows with missing values")
    _write_csv(dest / "dermatology.csv", 34, rows)


def fetch_satimage(dest: Path) -> None:
    rows = []
    for part in ("sat.trn", "sat.tst"):
        text = _get(f"{BASE}/statlog/satimage/{part}")
        for line in text.splitlines():
            cells = line.split()
            if cells:
                rows.append(cells[:-1] + [cells[-1]])
    _write_csv(dest / "satimage.csv", 36, rows)


def fetch_control(dest: Path) -> None:
    text = _get(f"{BASE}/synthetic_control-mld/synthetic_control.data")
    tokens = text.split()
    if len(tokens) % 60 != 0:
        raise SystemExit(f"unexpected token count {len(tokens)} in control data")
    rows = []
    for i in range(len(tokens) // 60):
        label = CONTROL_CLASSES[i // 100]
        rows.append(tokens[i * 60 : (i + 1) * 60] + [label])
    _write_csv(dest / "control.csv", 60, rows)


def fetch_mfeat(dest: Path) -> None:
    blocks = []
    for block in MFEAT_BLOCKS:
        text = _get(f"{BASE}/mfeat/mfeat-{block}")
        blocks.append([line.split() for line in text.splitlines() if line.strip()])
    n_rows = len(blocks[0])
    if any(len(b) != n_rows for b in blocks):
        raise SystemExit("mfeat feature files disagree on row count")
    rows = []
    for i in range(n_rows):
        cells: list[str] = []
        for b in blocks:
            cells.extend(b[i])
        rows.append(cells + [str(i // 200)])
    _write_csv(dest / "mfeat.csv", len(rows[0]) - 1, rows)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default="data/uci", help="output directory")
    parser.add_argument(
        "--only",
        choices=("dermatology", "satimage", "control", "mfeat"),
        default=None,
        help="fetch a single dataset",
    )
    args = parser.parse_args()
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    jobs = {
        "dermatology": fetch_dermatology,
        "satimage": fetch_satimage,
        "control": fetch_control,
        "mfeat": fetch_mfeat,
    }
    for name, job in jobs.items():
        if args.only and name != args.only:
            continue
        print(f"{name}:")
        job(dest)
    return 0


if __name__ == "__main__":
    sys.exit(main())
