"""Tabular numeric data: strict CSV loading, summaries, observed ranges."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataError


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable table of finite float64 observations with named columns.

    `values` is n rows by p predictor columns; an optional response vector
    rides along for model fitting. Arrays are locked read-only so instances
    can be shared freely across worker threads.
    """

    predictor_names: tuple
    values: np.ndarray
    response: np.ndarray | None = None
    response_name: str | None = None

    def __post_init__(self):
        names = tuple(str(n) for n in self.predictor_names)
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise DataError("values must be a 2-D array")
        n, p = values.shape
        if n < 1 or p < 1:
            raise DataError("dataset needs at least one row and one predictor")
        if len(names) != p:
            raise DataError(f"{len(names)} predictor names for {p} columns")
        if any(not name for name in names):
            raise DataError("predictor names must be nonempty")
        if len(set(names)) != len(names):
            seen, dup = set(), []
            for name in names:
                if name in seen and name not in dup:
                    dup.append(name)
                seen.add(name)
            raise DataError(f"duplicate predictor names: {', '.join(dup)}")
        if not np.isfinite(values).all():
            raise DataError("dataset contains NaN or infinite values")
        response = self.response
        if response is not None:
            response = np.ascontiguousarray(response, dtype=np.float64)
            if response.shape != (n,):
                raise DataError("response length does not match the row count")
            if not np.isfinite(response).all():
                raise DataError("response contains NaN or infinite values")
            response.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "predictor_names", names)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "response", response)

    @property
    def n_rows(self):
        return self.values.shape[0]

    @property
    def n_predictors(self):
        return self.values.shape[1]

    def column(self, index):
        return self.values[:, index]

    def index_of(self, name):
        try:
            return self.predictor_names.index(name)
        except ValueError:
            raise DataError(f"unknown predictor name: {name!r}") from None


@dataclass(frozen=True)
class ColumnStats:
    """Five-number descriptive summary of one column."""

    mean: float
    sd: float
    minimum: float
    median: float
    maximum: float


def column_stats(values) -> ColumnStats:
    """Summary of one column: mean, sample sd (n-1), min, median, max.

    The median of an even-length column is the midpoint of the two central
    order statistics; a length-1 or constant column has sd exactly 0.
    """
    col = np.asarray(values, dtype=np.float64)
    if col.ndim != 1 or col.size == 0:
        raise DataError("column_stats expects a nonempty 1-D array")
    sd = float(np.std(col, ddof=1)) if col.size > 1 else 0.0
    return ColumnStats(
        mean=float(np.mean(col)),
        sd=sd,
        minimum=float(np.min(col)),
        median=float(np.median(col)),
        maximum=float(np.max(col)),
    )


def describe(ds: Dataset) -> dict:
    """Per-column ColumnStats, predictors first, then the response if any."""
    stats = {name: column_stats(ds.column(i)) for i, name in enumerate(ds.predictor_names)}
    if ds.response is not None:
        stats[ds.response_name or "response"] = column_stats(ds.response)
    return stats


@dataclass(frozen=True)
class RangePolicy:
    """How a predictor's sweep range is taken from the data.

    mode "full" uses the observed minimum and maximum; mode "quantile"
    restricts to the empirical (lo, hi) quantiles, linearly interpolated
    between order statistics.
    """

    mode: str = "full"
    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        if self.mode not in ("full", "quantile"):
            raise DataError(f"unknown range policy mode: {self.mode!r}")
        if self.mode == "quantile":
            if not (0.0 <= self.lo < self.hi <= 1.0):
                raise DataError(
                    f"quantile bounds must satisfy 0 <= lo < hi <= 1, got ({self.lo}, {self.hi})"
                )

    @classmethod
    def full(cls):
        return cls()

    @classmethod
    def quantile(cls, lo, hi):
        return cls(mode="quantile", lo=float(lo), hi=float(hi))


def effective_range(ds: Dataset, index, policy: RangePolicy | None = None):
    """(low, high) sweep bounds for predictor `index` under `policy`."""
    if not 0 <= index < ds.n_predictors:
        raise IndexError(
            f"predictor index {index} out of range for {ds.n_predictors} columns"
        )
    col = ds.column(index)
    if policy is None or policy.mode == "full":
        return float(np.min(col)), float(np.max(col))
    low, high = np.quantile(col, [policy.lo, policy.hi])
    return float(low), float(high)


def _parse_cell(cell, line_no, col_name):
    text = cell.strip()
    if '"' in text or "'" in text:
        raise DataError(
            f"quoted cell at line {line_no}, column {col_name!r}: quoting is not supported"
        )
    if not text:
        raise DataError(f"empty cell at line {line_no}, column {col_name!r}")
    try:
        value = float(text)
    except ValueError:
        raise DataError(
            f"cannot parse {text!r} as a number at line {line_no}, column {col_name!r}"
        ) from None
    if not np.isfinite(value):
        raise DataError(
            f"non-finite value {text!r} at line {line_no}, column {col_name!r}"
        )
    return value


def load_csv(path, response_name=None) -> Dataset:
    """Load a strict numeric CSV: header row, comma-separated, '.' decimals.

    Every body cell must parse as a plain or scientific-notation number;
    quoted cells, missing values, and non-numeric text are rejected with the
    offending line and column. When `response_name` matches a header, that
    column is split out as the response.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DataError(f"data file not found: {path}") from None
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None

    lines = [line for line in text.splitlines() if line != ""]
    if not lines:
        raise DataError(f"empty file: {path}")
    header = [name.strip() for name in lines[0].split(",")]
    if any(not name for name in header):
        raise DataError(f"{path}: header contains an empty column name")
    if len(set(header)) != len(header):
        dup = sorted({name for name in header if header.count(name) > 1})
        raise DataError(f"{path}: duplicate header name(s): {', '.join(dup)}")

    rows = []
    for line_no, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(header):
            raise DataError(
                f"{path}: line {line_no} has {len(cells)} cells, expected {len(header)}"
            )
        rows.append(
            [_parse_cell(cell, line_no, header[j]) for j, cell in enumerate(cells)]
        )
    if len(rows) < 2:
        raise DataError(f"{path}: need at least 2 data rows, found {len(rows)}")

    values = np.array(rows, dtype=np.float64)
    response = None
    if response_name is not None:
        if response_name not in header:
            raise DataError(f"{path}: response column {response_name!r} not found")
        j = header.index(response_name)
        response = values[:, j]
        values = np.delete(values, j, axis=1)
        header = header[:j] + header[j + 1 :]
    return Dataset(
        predictor_names=tuple(header),
        values=values,
        response=response,
        response_name=response_name,
    )


def save_csv(ds: Dataset, path):
    """Write a dataset in the exact dialect `load_csv` reads.

    Cells use shortest round-trip decimal formatting, so a write/read cycle
    reproduces every float bit for bit.
    """
    header = list(ds.predictor_names)
    columns = [ds.values]
    if ds.response is not None:
        header.append(ds.response_name or "Y")
        columns.append(ds.response.reshape(-1, 1))
    table = np.hstack(columns)
    out = [",".join(header)]
    for row in table:
        out.append(",".join(repr(float(v)) for v in row))
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8")
