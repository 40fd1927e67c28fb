"""Panel model: ingestion, interpolation, transforms, balanced alignment."""

import io

import numpy as np
import pytest

from panelecm import (
    AlignmentError,
    InterpolationError,
    PanelDataError,
    TransformError,
    TransformSpec,
    align_balanced,
    apply_transform,
    interpolate_missing,
    load_panel,
    read_long_csv,
    wide_to_long,
)
from panelecm.panel import FIRST_DIFFERENCE, LEVEL, INTERPOLATED, OBSERVED


def grid_records(entities, periods, variables, value=1.0, skip=()):
    records = []
    for e in entities:
        for p in periods:
            for v in variables:
                if (e, p, v) in skip:
                    continue
                records.append((e, p, v, value + periods.index(p)))
    return records


ENTITIES15 = [f"C{i:02d}" for i in range(15)]
YEARS = list(range(1995, 2015))


class TestLoadPanel:
    def test_complete_grid(self):
        vars9 = [f"v{i}" for i in range(9)]
        ds = load_panel(grid_records(ENTITIES15, YEARS, vars9))
        assert ds.n_entities == 15
        assert ds.n_periods == 20
        assert len(ds.variables) == 9
        for v in vars9:
            assert ds.values[v].size == 300
            assert ds.n_missing(v) == 0

    def test_missing_cell_flagged_exactly_there(self):
        records = grid_records(["AT", "BE"], YEARS, ["gini"], skip={("AT", 2002, "gini")})
        ds = load_panel(records)
        mask = ds.missing_mask("gini")
        assert mask[ds.entities.index("AT"), ds.periods.index(2002)]
        assert mask.sum() == 1

    def test_duplicate_key_rejected(self):
        records = [("AT", 2000, "gini", 1.0), ("AT", 2000, "gini", 2.0)]
        with pytest.raises(PanelDataError, match="AT.*2000.*gini"):
            load_panel(records)

    def test_period_gaps_completed_as_missing(self):
        ds = load_panel([("AT", 1995, "x", 1.0), ("AT", 1997, "x", 3.0)])
        assert ds.periods == (1995, 1996, 1997)
        assert ds.n_missing("x") == 1

    def test_entities_and_periods_sorted(self):
        ds = load_panel([("B", 2001, "x", 1.0), ("A", 2000, "x", 2.0),
                         ("A", 2001, "x", 1.0), ("B", 2000, "x", 2.0)])
        assert ds.entities == ("A", "B")
        assert ds.periods == (2000, 2001)

    def test_empty_input_rejected(self):
        with pytest.raises(PanelDataError):
            load_panel([])


class TestReadCsv:
    def test_round_trip_with_missing(self):
        text = "entity,period,variable,value\nAT,1995,gini,27.0\nAT,1996,gini,\n" \
               "AT,1997,gini,29.0\n"
        records = read_long_csv(io.StringIO(text))
        ds = load_panel(records)
        assert ds.n_missing("gini") == 1

    def test_non_numeric_value_reports_row(self):
        text = "entity,period,variable,value\nAT,1995,gini,27.0\nAT,1996,gini,oops\n"
        with pytest.raises(PanelDataError, match="row 3"):
            read_long_csv(io.StringIO(text))

    def test_tab_delimited_autodetected(self):
        text = "entity\tperiod\tvariable\tvalue\nAT\t1995\tgini\t27.0\n"
        assert read_long_csv(io.StringIO(text)) == [("AT", 1995, "gini", 27.0)]

    def test_wide_adapter(self):
        rows = [{"entity": "AT", "period": "1995", "gini": "27.0", "tax": "40.0"}]
        records = wide_to_long(rows)
        assert ("AT", 1995, "gini", 27.0) in records
        assert ("AT", 1995, "tax", 40.0) in records


class TestInterpolation:
    def test_midpoint(self):
        ds = load_panel([("AT", 1995, "x", 10.0), ("AT", 1996, "x", None),
                         ("AT", 1997, "x", 14.0)])
        out, log = interpolate_missing(ds, "x")
        assert out.series("AT", "x")[1] == pytest.approx(12.0, abs=1e-12)
        assert len(log.entries) == 1
        entry = log.entries[0]
        assert (entry.left_anchor_period, entry.right_anchor_period) == (1995, 1997)
        assert out.provenance["x"][0, 1] == INTERPOLATED
        assert out.provenance["x"][0, 0] == OBSERVED

    def test_three_period_gap_has_constant_differences(self):
        ds = load_panel(
            [("AT", 1997, "credit", 100.0)]
            + [("AT", y, "credit", None) for y in (1998, 1999, 2000)]
            + [("AT", 2001, "credit", 90.0)]
        )
        out, _ = interpolate_missing(ds, "credit")
        series = out.series("AT", "credit")
        diffs = np.diff(series)
        assert np.allclose(diffs, diffs[0], rtol=1e-12, atol=1e-12)

    def test_leading_gap_is_error(self):
        ds = load_panel([("AT", 1995, "x", None), ("AT", 1996, "x", 1.0)])
        with pytest.raises(InterpolationError, match="AT.*1995"):
            interpolate_missing(ds, "x")

    def test_trailing_gap_is_error(self):
        ds = load_panel([("AT", 1995, "x", 1.0), ("AT", 1996, "x", None)])
        with pytest.raises(InterpolationError, match="right anchor"):
            interpolate_missing(ds, "x")

    def test_idempotent(self):
        ds = load_panel([("AT", 1995, "x", 1.0), ("AT", 1996, "x", None),
                         ("AT", 1997, "x", 5.0), ("BE", 1995, "x", 2.0),
                         ("BE", 1996, "x", 2.5), ("BE", 1997, "x", 3.0)])
        once, _ = interpolate_missing(ds, "x")
        twice, log2 = interpolate_missing(once, "x")
        assert not log2.entries
        assert np.array_equal(once.values["x"], twice.values["x"])

    def test_filled_values_between_anchors(self):
        rng = np.random.default_rng(0)
        for _ in range(25):
            values = rng.uniform(-10.0, 10.0, size=8)
            records = [("AT", 1995 + i, "x", float(v)) for i, v in enumerate(values)]
            gap = rng.integers(1, 7, size=2)
            for g in set(gap):
                records[g] = ("AT", 1995 + int(g), "x", None)
            ds = load_panel(records)
            out, log = interpolate_missing(ds, "x")
            for entry in log.entries:
                i0 = ds.periods.index(entry.left_anchor_period)
                i1 = ds.periods.index(entry.right_anchor_period)
                lo = min(values[i0], values[i1]) - 1e-12
                hi = max(values[i0], values[i1]) + 1e-12
                assert lo <= entry.filled_value <= hi

    def test_affine_runs_second_difference_zero(self):
        ds = load_panel(
            [("AT", 1995, "x", 3.0)]
            + [("AT", y, "x", None) for y in range(1996, 2000)]
            + [("AT", 2000, "x", 23.0)]
        )
        out, _ = interpolate_missing(ds, "x")
        second = np.diff(out.series("AT", "x"), n=2)
        assert np.max(np.abs(second)) <= 1e-12 * 23.0

    def test_log_export_layout(self):
        ds = load_panel([("AT", 1995, "x", 10.0), ("AT", 1996, "x", None),
                         ("AT", 1997, "x", 14.0)])
        _, log = interpolate_missing(ds, "x")
        text = log.to_delimited()
        assert text.splitlines()[0] == "entity,periods,values"
        assert "AT,1996,12.00" in text


class TestTransforms:
    def make(self, entities=("AT",), levels=(3.0, 5.0, 4.0), start=1995):
        records = []
        for e in entities:
            for i, v in enumerate(levels):
                records.append((e, start + i, "x", float(v)))
        return load_panel(records)

    def test_first_difference_by_hand(self):
        ds = self.make()
        derived = apply_transform(ds, TransformSpec("x", FIRST_DIFFERENCE, 0))
        assert derived.periods == (1996, 1997)
        assert np.allclose(derived.values[0], [2.0, -1.0])

    def test_difference_then_lag_loses_two_periods(self):
        ds = load_panel([("AT", y, "x", float(y)) for y in YEARS])
        derived = apply_transform(ds, TransformSpec("x", FIRST_DIFFERENCE, 1))
        assert derived.periods[0] == 1997
        assert derived.periods[-1] == 2014
        assert derived.values.shape[1] == 18

    def test_lag_zero_is_identity(self):
        ds = self.make()
        derived = apply_transform(ds, TransformSpec("x", LEVEL, 0))
        assert np.array_equal(derived.values, ds.values["x"])

    def test_lag_exceeding_periods_is_error(self):
        ds = self.make(levels=(1.0, 2.0, 3.0))
        with pytest.raises(TransformError):
            apply_transform(ds, TransformSpec("x", FIRST_DIFFERENCE, 3))

    def test_differences_never_span_entities(self):
        ds = self.make(entities=("AT", "BE"))
        derived = apply_transform(ds, TransformSpec("x", FIRST_DIFFERENCE, 0))
        assert derived.values.shape == (2, 2)
        assert np.allclose(derived.values[0], derived.values[1])

    def test_diff_then_cumsum_reconstructs(self):
        rng = np.random.default_rng(3)
        levels = rng.standard_normal(12).cumsum()
        ds = self.make(levels=levels)
        derived = apply_transform(ds, TransformSpec("x", FIRST_DIFFERENCE, 0))
        rebuilt = np.concatenate([[levels[0]], levels[0] + np.cumsum(derived.values[0])])
        assert np.allclose(rebuilt, levels)

    def test_labels(self):
        assert TransformSpec("gini", FIRST_DIFFERENCE, 1).label == "D(GINI(-1))"
        assert TransformSpec("tax", LEVEL, 2).label == "TAX(-2)"
        assert TransformSpec("cpi", FIRST_DIFFERENCE, 0).label == "D(CPI)"

    def test_lag_bound(self):
        with pytest.raises(ValueError):
            TransformSpec("x", LEVEL, 5)


class TestAlignBalanced:
    def full_panel(self, entities=15, periods=20):
        names = [f"C{i:02d}" for i in range(entities)]
        rng = np.random.default_rng(1)
        records = []
        for e in names:
            for j in range(periods):
                records.append((e, 1995 + j, "y", float(rng.standard_normal())))
                records.append((e, 1995 + j, "x", float(rng.standard_normal())))
        return load_panel(records)

    def test_observation_accounting_270(self):
        ds = self.full_panel()
        y, x, labels, sample = align_balanced(
            ds,
            [TransformSpec("x", FIRST_DIFFERENCE, 1)],
            TransformSpec("y", FIRST_DIFFERENCE, 0),
        )
        assert sample.periods == tuple(range(1997, 2015))
        assert sample.n_periods == 18
        assert len(y) == 270
        assert x.shape == (270, 1)

    def test_lag4_gives_225(self):
        ds = self.full_panel()
        y, x, _, sample = align_balanced(
            ds,
            [TransformSpec("x", FIRST_DIFFERENCE, 4)],
            TransformSpec("y", FIRST_DIFFERENCE, 0),
        )
        assert len(y) == 15 * 15
        assert sample.n_periods == 15

    def test_single_entity_levels_no_loss(self):
        ds = self.full_panel(entities=1)
        y, x, _, sample = align_balanced(
            ds, [TransformSpec("x", LEVEL, 0)], TransformSpec("y", LEVEL, 0)
        )
        assert len(y) == 20
        assert sample.periods == tuple(range(1995, 2015))

    def test_row_count_formula_and_no_missing(self):
        ds = self.full_panel(entities=4, periods=12)
        for lag in range(0, 4):
            y, x, _, sample = align_balanced(
                ds,
                [TransformSpec("x", FIRST_DIFFERENCE, lag)],
                TransformSpec("y", FIRST_DIFFERENCE, 0),
            )
            assert len(y) == 4 * (12 - 1 - lag)
            assert not np.isnan(x).any()

    def test_entity_permutation_equivariance(self):
        ds = self.full_panel(entities=5, periods=10)
        terms = [TransformSpec("x", FIRST_DIFFERENCE, 1)]
        dep = TransformSpec("y", FIRST_DIFFERENCE, 0)
        y1, x1, _, s1 = align_balanced(ds, terms, dep)
        # rebuild with entities renamed so the sort order reverses
        renamed = {e: f"Z{9 - i}" for i, e in enumerate(ds.entities)}
        records = []
        for e in ds.entities:
            for j, p in enumerate(ds.periods):
                for v in ("x", "y"):
                    records.append((renamed[e], p, v, float(ds.values[v][ds.entities.index(e), j])))
        ds2 = load_panel(records)
        y2, x2, _, s2 = align_balanced(ds2, terms, dep)
        for e in ds.entities:
            i1 = s1.entities.index(e)
            i2 = s2.entities.index(renamed[e])
            rows1 = slice(i1 * s1.n_periods, (i1 + 1) * s1.n_periods)
            rows2 = slice(i2 * s2.n_periods, (i2 + 1) * s2.n_periods)
            assert np.array_equal(y1[rows1], y2[rows2])
            assert np.array_equal(x1[rows1], x2[rows2])

    def test_empty_window_is_error(self):
        ds = self.full_panel(entities=2, periods=3)
        with pytest.raises((AlignmentError, TransformError)):
            align_balanced(
                ds,
                [TransformSpec("x", FIRST_DIFFERENCE, 4)],
                TransformSpec("y", FIRST_DIFFERENCE, 0),
            )
