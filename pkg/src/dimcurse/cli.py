"""Command line interface: dataset ingestion, dispatch, and stable emission.

Exit codes: 0 success, 1 usage error, 2 data or I/O error, 3 numerical
failure. Errors go to stderr only; result tables go to the output file (or
stdout) and nowhere else. Output files are written to a temporary sibling and
renamed into place, so a failed run never leaves a partial file.

Floating point cells are printed with 12 significant digits in both CSV and
JSON, which makes repeated runs byte-identical while round-tripping to one
unit in the 12th digit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, is_dataclass

import numpy as np

from .core import Dataset, sample_density
from .exceptions import (
    DataFormatError,
    DegenerateInputError,
    DimcurseError,
    DimensionMismatchError,
    InsufficientDataError,
    NumericalFailureError,
    ParameterError,
    ValidationError,
)
from .metrics import Metric, concentration_stats
from .pca import ccr_curve, spectrum_hdlss
from .simulate import (
    ExperimentGrid,
    run_chebyshev_experiment,
    run_cosine_experiment,
    run_minkowski_experiment,
    run_pca_experiment,
)
from .theory import (
    chebyshev_expected_max,
    chebyshev_variance,
    cosine_limit,
    eigen_mean_limit,
    minkowski_normalized_limit,
    rdr_bounds,
)

SIMULATE_COMMANDS = ("simulate-minkowski", "simulate-chebyshev", "simulate-cosine", "simulate-pca")

_DEFAULT_DIMS = "1,2,4,8,16,32,64,128,256,512,1024"

_THEORY_KINDS = (
    "minkowski-limit",
    "rdr-bounds",
    "chebyshev-max",
    "chebyshev-variance",
    "cosine-limit",
    "eigen-mean",
)


class UsageError(DimcurseError):
    """Bad flags or flag combinations; maps to exit code 1."""


@dataclass(frozen=True)
class TabularFile:
    """How to read a delimited text file into a dataset.

    ``delimiter`` is a single character or the word "whitespace" (splits on
    any run of blanks, the layout several UCI files use). ``label_col``
    designates one column, by header name or 0-based index, to capture as
    sample labels instead of a numeric feature.
    """

    delimiter: str = ","
    header: bool = False
    label_col: str | int | None = None


@dataclass(frozen=True)
class RunConfig:
    """A fully validated invocation; building one does no heavy work."""

    command: str
    output_path: str | None = None
    output_format: str = "csv"
    grid: ExperimentGrid | None = None
    input_path: str | None = None
    tabular: TabularFile | None = None
    metric: Metric | None = None
    query: object | None = None
    n: int | None = None
    intervals: int | None = None
    max_dim: int | None = None
    what: str | None = None
    ks: tuple[float, ...] | None = None
    dims: tuple[int, ...] | None = None
    s: float | None = None
    t: float | None = None
    var_x: float | None = None


# ---------------------------------------------------------------------------
# dataset loading


def _resolve_label_col(label_col, names: list[str] | None, width: int) -> int | None:
    if label_col is None:
        return None
    if isinstance(label_col, int):
        idx = label_col
    elif names is not None and label_col in names:
        idx = names.index(label_col)
    elif isinstance(label_col, str) and label_col.isdigit():
        idx = int(label_col)
    else:
        have = f"; header columns: {names}" if names is not None else " and the file has no header"
        raise DataFormatError(f"label column {label_col!r} not found{have}")
    if not 0 <= idx < width:
        raise DataFormatError(
            f"label column index {idx} out of range for {width} column(s)"
        )
    return idx


def load_dataset(path, options: TabularFile = TabularFile()) -> Dataset:
    """Parse a delimited text file into a Dataset.

    Rows are samples; every column except the designated label column must be
    numeric. Blank lines are skipped. Errors name the first offending
    location using 1-based file line numbers.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        if options.delimiter == "whitespace":
            raw = [(lineno, line.split()) for lineno, line in enumerate(handle, start=1)]
        else:
            reader = csv.reader(handle, delimiter=options.delimiter)
            raw = [(lineno, row) for lineno, row in enumerate(reader, start=1)]
    rows = [(lineno, row) for lineno, row in raw if any(cell.strip() for cell in row)]
    names: list[str] | None = None
    if options.header:
        if not rows:
            raise DataFormatError(f"{path}: empty dataset (no rows at all)")
        names = [cell.strip() for cell in rows[0][1]]
        rows = rows[1:]
    if not rows:
        raise DataFormatError(f"{path}: empty dataset (no data rows)")
    width = len(rows[0][1])
    label_idx = _resolve_label_col(options.label_col, names, width)
    if width - (0 if label_idx is None else 1) < 1:
        raise DataFormatError(f"{path}: empty dataset (no numeric columns)")
    values: list[list[float]] = []
    labels: list[str] = []
    for lineno, row in rows:
        if len(row) != width:
            raise DataFormatError(
                f"{path}: ragged row at line {lineno}: {len(row)} field(s), expected {width}"
            )
        numeric: list[float] = []
        for j, cell in enumerate(row):
            if j == label_idx:
                labels.append(cell.strip())
                continue
            try:
                numeric.append(float(cell))
            except ValueError:
                col = names[j] if names is not None else str(j)
                raise DataFormatError(
                    f"{path}: non-numeric value {cell.strip()!r} at line {lineno}, "
                    f"column {col}"
                ) from None
        values.append(numeric)
    try:
        return Dataset(np.array(values), tuple(labels) if label_idx is not None else None)
    except ValidationError as exc:
        raise DataFormatError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# emission


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _json_value(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, float):
        return float(f"{v:.12g}")
    return v


def emit_table(rows, fields: list[str], output_format: str = "csv", path=None) -> None:
    """Write rows (mappings) as CSV or JSON with a stable byte layout.

    ``fields`` fixes the column order; missing or None values become empty
    CSV cells / JSON nulls. With ``path=None`` the table goes to stdout,
    otherwise to a temporary file renamed over ``path`` on success.
    """
    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_csv_cell(row.get(f)) for f in fields])
        text = buf.getvalue()
    elif output_format == "json":
        objs = [{f: _json_value(row.get(f)) for f in fields} for row in rows]
        text = json.dumps(objs, indent=2) + "\n"
    else:
        raise ParameterError(f"unknown output format {output_format!r}")
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".dimcurse-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); remap to exit code 1
        raise UsageError(f"{message}\n{self.format_usage()}".rstrip())


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in str(text).split(","))
    except ValueError:
        raise UsageError(f"{flag} expects a comma-separated integer list, got {text!r}") from None


def _parse_float_list(text: str, flag: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in str(text).split(","))
    except ValueError:
        raise UsageError(f"{flag} expects a comma-separated number list, got {text!r}") from None


def _add_output_flags(sub) -> None:
    sub.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    sub.add_argument("--format", default="csv", choices=("csv", "json"), help="output format")


def _add_grid_flags(sub, *, with_k: bool = False, with_range: bool = False) -> None:
    sub.add_argument("--n", type=int, default=100, help="points per trial")
    sub.add_argument("--dims", default=_DEFAULT_DIMS, help="comma-separated dimension grid")
    sub.add_argument("--trials", type=int, default=8, help="Monte Carlo trials per dimension")
    sub.add_argument("--seed", type=int, default=0, help="base seed for per-cell seeding")
    if with_k:
        sub.add_argument("--k", default="2", help="norm order(s), comma-separated")
    if with_range:
        sub.add_argument("--s", type=float, default=0.0, help="uniform lower bound")
        sub.add_argument("--t", type=float, default=1.0, help="uniform upper bound")


def _add_input_flags(sub) -> None:
    sub.add_argument("--input", required=True, help="delimited text file to analyze")
    sub.add_argument("--delimiter", default=",", help="field delimiter, or 'whitespace'")
    sub.add_argument("--header", action="store_true", help="first row is a header")
    sub.add_argument("--label-col", default=None, help="label column name or 0-based index")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="dimcurse",
        description="Distance-concentration and manifold-effect diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate-minkowski", help="RDR concentration under L_k norms")
    _add_grid_flags(p, with_k=True)
    _add_output_flags(p)

    p = sub.add_parser("simulate-chebyshev", help="largest-coordinate concentration")
    _add_grid_flags(p, with_range=True)
    _add_output_flags(p)

    p = sub.add_parser("simulate-cosine", help="pairwise cosine concentration")
    _add_grid_flags(p, with_range=True)
    _add_output_flags(p)

    p = sub.add_parser("simulate-pca", help="covariance spectrum vs dimension")
    _add_grid_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("analyze", help="concentration statistics of a dataset file")
    _add_input_flags(p)
    p.add_argument("--metric", default="minkowski", choices=("minkowski", "chebyshev", "cosine"))
    p.add_argument("--k", type=float, default=2.0, help="Minkowski norm order")
    p.add_argument(
        "--query",
        default="centroid",
        help="'origin', 'centroid', 'row:<i>', or an explicit comma-separated vector",
    )
    _add_output_flags(p)

    p = sub.add_parser("pca-spectrum", help="eigenvalues and CCR of a dataset file")
    _add_input_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("density", help="sample density per cell as dimension grows")
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("--intervals", type=int, required=True, help="intervals per feature")
    p.add_argument("--max-dim", type=int, required=True, help="largest dimension to tabulate")
    _add_output_flags(p)

    p = sub.add_parser("theory", help="closed-form limits and bounds")
    p.add_argument("--what", required=True, choices=_THEORY_KINDS)
    p.add_argument("--k", default="2", help="norm order(s), comma-separated")
    p.add_argument("--n", type=int, default=100, help="point/sample count")
    p.add_argument("--dims", default=_DEFAULT_DIMS, help="comma-separated dimension grid")
    p.add_argument("--s", type=float, default=0.0, help="uniform lower bound")
    p.add_argument("--t", type=float, default=1.0, help="uniform upper bound")
    p.add_argument("--var-x", type=float, default=1.0 / 12.0, help="coordinate variance")
    _add_output_flags(p)

    return parser


def _parse_query(text: str):
    if text in ("origin", "centroid"):
        return text
    if text.startswith("row:"):
        try:
            return ("row", int(text[4:]))
        except ValueError:
            raise UsageError(f"--query row index must be an integer, got {text!r}") from None
    return np.array(_parse_float_list(text, "--query"))


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed flags into a RunConfig; raises UsageError on any problem."""
    common = {"output_path": args.output, "output_format": args.format}
    try:
        if args.command in SIMULATE_COMMANDS:
            grid_kwargs = {
                "dims": _parse_int_list(args.dims, "--dims"),
                "n": args.n,
                "trials": args.trials,
                "base_seed": args.seed,
            }
            if args.command == "simulate-minkowski":
                grid_kwargs["ks"] = _parse_float_list(args.k, "--k")
            if args.command in ("simulate-chebyshev", "simulate-cosine"):
                grid_kwargs["s"] = args.s
                grid_kwargs["t"] = args.t
            return RunConfig(command=args.command, grid=ExperimentGrid(**grid_kwargs), **common)
        if args.command in ("analyze", "pca-spectrum"):
            tabular = TabularFile(
                delimiter=args.delimiter, header=args.header, label_col=args.label_col
            )
            metric = None
            query = None
            if args.command == "analyze":
                metric = (
                    Metric.minkowski(args.k)
                    if args.metric == "minkowski"
                    else Metric(args.metric)
                )
                query = _parse_query(args.query)
            return RunConfig(
                command=args.command,
                input_path=args.input,
                tabular=tabular,
                metric=metric,
                query=query,
                **common,
            )
        if args.command == "density":
            if args.n < 1 or args.intervals < 1 or args.max_dim < 1:
                raise UsageError("--n, --intervals and --max-dim must all be >= 1")
            return RunConfig(
                command="density",
                n=args.n,
                intervals=args.intervals,
                max_dim=args.max_dim,
                **common,
            )
        if args.command == "theory":
            return RunConfig(
                command="theory",
                what=args.what,
                ks=_parse_float_list(args.k, "--k"),
                n=args.n,
                dims=_parse_int_list(args.dims, "--dims"),
                s=args.s,
                t=args.t,
                var_x=args.var_x,
                **common,
            )
    except (ParameterError, ValidationError) as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown command {args.command!r}")


# ---------------------------------------------------------------------------
# execution


def _rows_to_dicts(rows) -> list[dict]:
    return [asdict(r) if is_dataclass(r) else dict(r) for r in rows]


_SIMULATE_FIELDS = {
    "simulate-minkowski": [
        "dim", "trial", "k", "d_min", "d_max", "rdr", "limit", "lower_bound", "upper_bound",
    ],
    "simulate-chebyshev": ["dim", "trial", "d_min", "d_max", "mean", "variance", "expected_max"],
    "simulate-cosine": ["dim", "trial", "d_min", "d_max", "mean", "variance", "limit"],
    "simulate-pca": [
        "dim", "trial", "mean_eigenvalue", "limit", "zero_count",
        "ccr_descending_at_n", "ccr_ascending_at_gap",
    ],
}

_SIMULATE_RUNNERS = {
    "simulate-minkowski": run_minkowski_experiment,
    "simulate-chebyshev": run_chebyshev_experiment,
    "simulate-cosine": run_cosine_experiment,
    "simulate-pca": run_pca_experiment,
}


def _resolve_query(query, data: Dataset) -> np.ndarray:
    if isinstance(query, str):
        if query == "origin":
            return np.zeros(data.n_features)
        return data.values.mean(axis=0)
    if isinstance(query, tuple) and query[0] == "row":
        idx = query[1]
        if not 0 <= idx < data.n_samples:
            raise DataFormatError(
                f"query row {idx} out of range for {data.n_samples} sample(s)"
            )
        return np.array(data.values[idx])
    return np.asarray(query, dtype=float)


def _query_name(query) -> str:
    if isinstance(query, str):
        return query
    if isinstance(query, tuple) and query[0] == "row":
        return f"row:{query[1]}"
    return ",".join(f"{v:g}" for v in np.asarray(query).ravel())


def _execute(config: RunConfig):
    if config.grid is not None:
        rows = _SIMULATE_RUNNERS[config.command](config.grid)
        return _rows_to_dicts(rows), _SIMULATE_FIELDS[config.command]

    if config.command == "analyze":
        data = load_dataset(config.input_path, config.tabular)
        q = _resolve_query(config.query, data)
        stats = concentration_stats(data, q, config.metric)
        row = {
            "metric": config.metric.kind,
            "k": config.metric.k,
            "query": _query_name(config.query),
            "n_samples": data.n_samples,
            "n_features": data.n_features,
            "d_min": stats.d_min,
            "d_max": stats.d_max,
            "rdr": stats.rdr,
            "mean": stats.mean,
            "variance": stats.variance,
        }
        return [row], list(row.keys())

    if config.command == "pca-spectrum":
        data = load_dataset(config.input_path, config.tabular)
        spectrum = spectrum_hdlss(data)
        ccr = ccr_curve(spectrum, ascending=False)
        rows = [
            {"component": j, "eigenvalue": float(lam), "ccr": float(c)}
            for j, (lam, c) in enumerate(zip(spectrum.eigenvalues, ccr), start=1)
        ]
        return rows, ["component", "eigenvalue", "ccr"]

    if config.command == "density":
        rows = []
        for d in range(1, config.max_dim + 1):
            res = sample_density(config.n, config.intervals, d)
            rows.append({"d": d, "density": res.density, "log_density": res.log_density})
        return rows, ["d", "density", "log_density"]

    if config.command == "theory":
        return _execute_theory(config)

    raise UsageError(f"unknown command {config.command!r}")


def _execute_theory(config: RunConfig):
    what = config.what
    if what == "minkowski-limit":
        rows = [{"k": k, "limit": minkowski_normalized_limit(k)} for k in config.ks]
        return rows, ["k", "limit"]
    if what == "rdr-bounds":
        rows = []
        for dim in config.dims:
            for k in config.ks:
                b = rdr_bounds(k, config.n, dim)
                rows.append(
                    {"dim": dim, "k": k, "n": config.n,
                     "lower_bound": b.lower, "upper_bound": b.upper}
                )
        return rows, ["dim", "k", "n", "lower_bound", "upper_bound"]
    if what == "chebyshev-max":
        rows = [
            {"dim": dim, "s": config.s, "t": config.t,
             "expected_max": chebyshev_expected_max(config.s, config.t, dim)}
            for dim in config.dims
        ]
        return rows, ["dim", "s", "t", "expected_max"]
    if what == "chebyshev-variance":
        rows = [
            {"dim": dim, "s": config.s, "t": config.t,
             "variance": chebyshev_variance(config.s, config.t, dim)}
            for dim in config.dims
        ]
        return rows, ["dim", "s", "t", "variance"]
    if what == "cosine-limit":
        row = {"s": config.s, "t": config.t, "limit": cosine_limit(config.s, config.t)}
        return [row], ["s", "t", "limit"]
    if what == "eigen-mean":
        row = {"n": config.n, "var_x": config.var_x,
               "limit": eigen_mean_limit(config.n, config.var_x)}
        return [row], ["n", "var_x", "limit"]
    raise UsageError(f"unknown theory kind {what!r}")


def run(config: RunConfig) -> int:
    """Execute a validated config; returns the process exit code."""
    try:
        rows, fields = _execute(config)
        emit_table(rows, fields, config.output_format, config.output_path)
        return 0
    except UsageError as exc:
        print(f"dimcurse: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        print(f"dimcurse: {exc}", file=sys.stderr)
        return 1
    except NumericalFailureError as exc:
        print(f"dimcurse: numerical failure: {exc}", file=sys.stderr)
        return 3
    except (
        DataFormatError,
        DegenerateInputError,
        DimensionMismatchError,
        InsufficientDataError,
        ValidationError,
        OSError,
    ) as exc:
        print(f"dimcurse: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = config_from_args(args)
    except UsageError as exc:
        print(f"dimcurse: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
