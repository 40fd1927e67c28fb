"""Panel dataset model: ingestion, interpolation, differencing, lagging, alignment.

A :class:`PanelDataset` holds a balanced grid of N entities x T annual periods
for any number of named variables.  Cells are either observed, interpolated,
or missing; all operations are pure and return new datasets.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AlignmentError,
    InterpolationError,
    PanelDataError,
    TransformError,
)

OBSERVED = 0
INTERPOLATED = 1
MISSING = 2

LEVEL = "level"
FIRST_DIFFERENCE = "first_difference"

MAX_LAG = 4


@dataclass(frozen=True)
class TransformSpec:
    """One right-hand-side term: a variable, a transform, and a lag.

    The lag applies after differencing, so ``(x, first_difference, 1)`` is
    the one-period lag of the first difference of ``x``.
    """

    variable: str
    transform: str = LEVEL
    lag: int = 0

    def __post_init__(self):
        if self.transform not in (LEVEL, FIRST_DIFFERENCE):
            raise ValueError(f"unknown transform {self.transform!r}")
        if not 0 <= self.lag <= MAX_LAG:
            raise ValueError(f"lag must be in 0..{MAX_LAG}, got {self.lag}")

    @property
    def periods_lost(self) -> int:
        """Leading periods dropped per entity by this term."""
        return (1 if self.transform == FIRST_DIFFERENCE else 0) + self.lag

    @property
    def label(self) -> str:
        """Display name, e.g. ``D(GINI(-1))`` or ``TAX(-2)``."""
        name = self.variable.upper()
        if self.lag > 0:
            name = f"{name}(-{self.lag})"
        if self.transform == FIRST_DIFFERENCE:
            name = f"D({name})"
        return name


@dataclass(frozen=True)
class InterpolationEntry:
    entity: str
    variable: str
    period: int
    filled_value: float
    left_anchor_period: int
    right_anchor_period: int


@dataclass(frozen=True)
class InterpolationLog:
    """Record of every cell filled by :func:`interpolate_missing`."""

    entries: tuple[InterpolationEntry, ...] = ()

    def for_entity(self, entity: str) -> list[InterpolationEntry]:
        return [e for e in self.entries if e.entity == entity]

    def to_delimited(self, delimiter: str = ",") -> str:
        """One row per entity: entity, filled periods, filled values."""
        out = io.StringIO()
        writer = csv.writer(out, delimiter=delimiter)
        writer.writerow(["entity", "periods", "values"])
        entities = sorted({e.entity for e in self.entries})
        for ent in entities:
            rows = sorted(self.for_entity(ent), key=lambda e: e.period)
            writer.writerow(
                [
                    ent,
                    " ".join(str(e.period) for e in rows),
                    " ".join(f"{e.filled_value:.2f}" for e in rows),
                ]
            )
        return out.getvalue()


@dataclass(frozen=True)
class SampleInfo:
    """Row layout of a balanced design: entity-major, period-minor."""

    entities: tuple[str, ...]
    periods: tuple[int, ...]

    @property
    def n_entities(self) -> int:
        return len(self.entities)

    @property
    def n_periods(self) -> int:
        return len(self.periods)

    @property
    def n_obs(self) -> int:
        return self.n_entities * self.n_periods

    def row_index(self, entity: str, period: int) -> int:
        return self.entities.index(entity) * self.n_periods + self.periods.index(period)

    def row_labels(self) -> list[tuple[str, int]]:
        return [(e, p) for e in self.entities for p in self.periods]

    def reshape(self, values: np.ndarray) -> np.ndarray:
        """Stacked vector -> (N, T) matrix."""
        values = np.asarray(values, dtype=float)
        if values.size != self.n_obs:
            raise AlignmentError(
                f"expected {self.n_obs} values, got {values.size}"
            )
        return values.reshape(self.n_entities, self.n_periods)


@dataclass(frozen=True)
class PanelDataset:
    """Immutable N x T x K panel with per-cell provenance.

    ``values[var]`` is an (N, T) float array with NaN marking missing cells;
    ``provenance[var]`` carries OBSERVED / INTERPOLATED / MISSING codes.
    """

    entities: tuple[str, ...]
    periods: tuple[int, ...]
    values: Mapping[str, np.ndarray] = field(default_factory=dict)
    provenance: Mapping[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if not self.entities:
            raise PanelDataError("dataset needs at least one entity")
        if not self.periods:
            raise PanelDataError("dataset needs at least one period")
        diffs = np.diff(self.periods)
        if len(self.periods) > 1 and (np.any(diffs <= 0) or np.any(diffs != diffs[0])):
            raise PanelDataError("periods must be strictly increasing and evenly spaced")
        shape = (len(self.entities), len(self.periods))
        for var, arr in self.values.items():
            if arr.shape != shape:
                raise PanelDataError(f"variable {var!r} has shape {arr.shape}, expected {shape}")
            tags = self.provenance[var]
            nan = np.isnan(arr)
            if np.any(nan != (tags == MISSING)):
                raise PanelDataError(f"variable {var!r}: missing mask and provenance disagree")

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.values.keys())

    @property
    def n_entities(self) -> int:
        return len(self.entities)

    @property
    def n_periods(self) -> int:
        return len(self.periods)

    def series(self, entity: str, variable: str) -> np.ndarray:
        return self.values[variable][self.entities.index(entity)]

    def missing_mask(self, variable: str) -> np.ndarray:
        return np.isnan(self.values[variable])

    def n_missing(self, variable: str) -> int:
        return int(self.missing_mask(variable).sum())

    def with_variable(self, name: str, values: np.ndarray) -> "PanelDataset":
        """Return a copy with one variable added or replaced."""
        values = np.asarray(values, dtype=float)
        tags = np.where(np.isnan(values), MISSING, OBSERVED).astype(np.int8)
        new_values = dict(self.values)
        new_prov = dict(self.provenance)
        new_values[name] = values
        new_prov[name] = tags
        return PanelDataset(self.entities, self.periods, new_values, new_prov)


def load_panel(records: Iterable[tuple]) -> PanelDataset:
    """Build a dataset from long-format records (entity, period, variable, value).

    ``value`` may be None to mark a missing cell.  Periods are completed to a
    full consecutive range; absent (entity, period, variable) cells are missing.

    Raises
    ------
    PanelDataError
        On duplicate (entity, period, variable) keys or an empty record set.
    """
    seen: dict[tuple[str, int, str], float] = {}
    entities: set[str] = set()
    periods: set[int] = set()
    variables: set[str] = set()
    for entity, period, variable, value in records:
        entity = str(entity)
        period = int(period)
        variable = str(variable)
        key = (entity, period, variable)
        if key in seen:
            raise PanelDataError(f"duplicate record for {key}")
        if value is not None:
            value = float(value)
            if np.isnan(value):
                value = None
        seen[key] = value
        entities.add(entity)
        periods.add(period)
        variables.add(variable)
    if not seen:
        raise PanelDataError("no records supplied")

    ent_order = tuple(sorted(entities))
    per_order = tuple(range(min(periods), max(periods) + 1))
    n, t = len(ent_order), len(per_order)
    ent_idx = {e: i for i, e in enumerate(ent_order)}
    per_idx = {p: i for i, p in enumerate(per_order)}

    values: dict[str, np.ndarray] = {}
    prov: dict[str, np.ndarray] = {}
    for var in sorted(variables):
        values[var] = np.full((n, t), np.nan)
        prov[var] = np.full((n, t), MISSING, dtype=np.int8)
    for (entity, period, variable), value in seen.items():
        if value is None:
            continue
        i, j = ent_idx[entity], per_idx[period]
        values[variable][i, j] = value
        prov[variable][i, j] = OBSERVED
    return PanelDataset(ent_order, per_order, values, prov)


def read_long_csv(path_or_file, delimiter: str | None = None) -> list[tuple]:
    """Read long-format delimited text into records for :func:`load_panel`.

    Expects a header row ``entity,period,variable,value``; an empty value
    field marks a missing cell.  Comma and tab delimiters are auto-detected.
    """
    if hasattr(path_or_file, "read"):
        text = path_or_file.read()
    else:
        with open(path_or_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    if delimiter is None:
        header = text.splitlines()[0] if text else ""
        delimiter = "\t" if "\t" in header else ","
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    rows = list(reader)
    if not rows:
        raise PanelDataError("empty input file")
    header = [h.strip().lower() for h in rows[0]]
    required = ["entity", "period", "variable", "value"]
    if header[: len(required)] != required:
        raise PanelDataError(
            f"expected header {','.join(required)}, got {','.join(header)}"
        )
    records: list[tuple] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) < 4:
            raise PanelDataError(f"row {lineno}: expected 4 fields, got {len(row)}")
        entity, period, variable, value = (c.strip() for c in row[:4])
        try:
            period_i = int(period)
        except ValueError:
            raise PanelDataError(f"row {lineno}: non-integer period {period!r}") from None
        if value == "":
            parsed = None
        else:
            try:
                parsed = float(value)
            except ValueError:
                raise PanelDataError(f"row {lineno}: non-numeric value {value!r}") from None
        records.append((entity, period_i, variable, parsed))
    return records


def wide_to_long(rows: Sequence[Mapping[str, str]]) -> list[tuple]:
    """Reshape wide records ({entity, period, var1, var2, ...}) to long records."""
    records: list[tuple] = []
    for row in rows:
        entity = row["entity"]
        period = int(row["period"])
        for key, value in row.items():
            if key in ("entity", "period"):
                continue
            if value is None or (isinstance(value, str) and not value.strip()):
                parsed = None
            else:
                parsed = float(value)
            records.append((entity, period, key, parsed))
    return records


def interpolate_missing(
    ds: PanelDataset, variable: str
) -> tuple[PanelDataset, InterpolationLog]:
    """Fill interior gaps of one variable by linear interpolation in time.

    Each missing run must have observed anchors on both sides; the fill at
    period t between anchors (t0, v0) and (t1, v1) is
    ``v0 + (t - t0) * (v1 - v0) / (t1 - t0)``.  Leading or trailing gaps are
    an error: extrapolation would silently alter results.
    """
    if variable not in ds.values:
        raise PanelDataError(f"unknown variable {variable!r}")
    values = ds.values[variable].copy()
    prov = ds.provenance[variable].copy()
    periods = np.asarray(ds.periods)
    entries: list[InterpolationEntry] = []

    for i, entity in enumerate(ds.entities):
        row = values[i]
        missing = np.isnan(row)
        if not missing.any():
            continue
        obs_idx = np.flatnonzero(~missing)
        if obs_idx.size == 0:
            raise InterpolationError(
                f"{entity}/{variable}: series has no observed values"
            )
        if missing[0]:
            raise InterpolationError(
                f"{entity}/{variable}: missing at first period {periods[0]} has no left anchor"
            )
        if missing[-1]:
            raise InterpolationError(
                f"{entity}/{variable}: missing at last period {periods[-1]} has no right anchor"
            )
        for j in np.flatnonzero(missing):
            left = obs_idx[obs_idx < j].max()
            right = obs_idx[obs_idx > j].min()
            t0, t1 = int(periods[left]), int(periods[right])
            v0, v1 = row[left], row[right]
            filled = v0 + (int(periods[j]) - t0) * (v1 - v0) / (t1 - t0)
            values[i, j] = filled
            prov[i, j] = INTERPOLATED
            entries.append(
                InterpolationEntry(entity, variable, int(periods[j]), float(filled), t0, t1)
            )

    new_values = dict(ds.values)
    new_prov = dict(ds.provenance)
    new_values[variable] = values
    new_prov[variable] = prov
    out = PanelDataset(ds.entities, ds.periods, new_values, new_prov)
    return out, InterpolationLog(tuple(entries))


@dataclass(frozen=True)
class DerivedSeries:
    """A transformed variable on its shortened period range."""

    label: str
    periods: tuple[int, ...]
    values: np.ndarray  # (N, T - periods_lost)


def apply_transform(ds: PanelDataset, spec: TransformSpec) -> DerivedSeries:
    """Apply differencing and lagging within each entity.

    First differencing drops one leading period per entity; a lag of k drops
    k more.  Differences never span entity boundaries.
    """
    if spec.variable not in ds.values:
        raise PanelDataError(f"unknown variable {spec.variable!r}")
    source = ds.values[spec.variable]
    lost = spec.periods_lost
    if lost >= ds.n_periods:
        raise TransformError(
            f"{spec.label}: transform loses {lost} periods but only {ds.n_periods} exist"
        )
    work = source
    if spec.transform == FIRST_DIFFERENCE:
        work = np.diff(source, axis=1)
    if spec.lag > 0:
        # lag k dates each value k periods later, so drop the last k columns
        work = work[:, : work.shape[1] - spec.lag]
    out = work
    periods = ds.periods[lost:]
    if np.isnan(out).any():
        bad = np.argwhere(np.isnan(out))
        i, j = bad[0]
        raise TransformError(
            f"{spec.label}: source has missing values (e.g. {ds.entities[int(i)]}); "
            "interpolate before transforming"
        )
    return DerivedSeries(spec.label, tuple(periods), out)


def align_balanced(
    ds: PanelDataset,
    terms: Sequence[TransformSpec],
    dependent: TransformSpec,
) -> tuple[np.ndarray, np.ndarray, list[str], SampleInfo]:
    """Assemble the balanced response vector and design matrix.

    Every term (and the dependent) is truncated to the common period window;
    rows are stacked entity-major.  Returns (y, X, column labels, sample).
    The row count always equals ``entities * (periods - maxloss)`` where
    ``maxloss`` is the worst differencing-plus-lag loss among all terms.
    """
    if not terms:
        raise AlignmentError("no regressor terms supplied")
    all_specs = [dependent, *terms]
    maxloss = max(s.periods_lost for s in all_specs)
    if maxloss >= ds.n_periods:
        raise AlignmentError(
            f"terms lose {maxloss} periods but the panel has only {ds.n_periods}"
        )
    window = ds.periods[maxloss:]
    t_out = len(window)

    def window_values(spec: TransformSpec) -> np.ndarray:
        derived = apply_transform(ds, spec)
        # derived.periods[0] == ds.periods[spec.periods_lost]; keep last t_out columns
        return derived.values[:, derived.values.shape[1] - t_out :]

    y = window_values(dependent).reshape(-1)
    columns = [window_values(s).reshape(-1) for s in terms]
    x = np.column_stack(columns)
    labels = [s.label for s in terms]
    sample = SampleInfo(ds.entities, tuple(window))
    if np.isnan(y).any() or np.isnan(x).any():
        raise AlignmentError("aligned sample contains missing values")
    return y, x, labels, sample
