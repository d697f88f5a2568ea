"""Tests for sweep configuration, execution and CSV rendering."""

import math

import pytest

from catneg.linalg import CapacityError
from catneg.analytic import FLAG_GAMMA_T
from catneg.sweeps import (
    MODE_COMPARE,
    MODE_N_SWEEP,
    MODE_PARTITION_SWEEP,
    MODE_TIME_SWEEP,
    MODES,
    ConfigError,
    SweepConfig,
    format_value,
    result_to_csv,
    run_sweep,
)


def column(result, name):
    index = result.columns.index(name)
    return [row[index] for row in result.rows]


def test_from_mapping_coerces_strings():
    cfg = SweepConfig.from_mapping(
        {"mode": "time_sweep", "n": "6", "theta0": "0.5", "t_max": "1.0"}
    )
    assert cfg.n == 6
    assert cfg.theta0 == 0.5
    assert cfg.t_max == 1.0


def test_from_mapping_rejects_unknown_key():
    with pytest.raises(ConfigError, match="n_qubits"):
        SweepConfig.from_mapping({"mode": "time_sweep", "n_qubits": "6"})


def test_from_mapping_rejects_bad_value():
    with pytest.raises(ConfigError, match="steps"):
        SweepConfig.from_mapping({"mode": "time_sweep", "steps": "many"})


def test_from_mapping_requires_mode():
    with pytest.raises(ConfigError, match="mode"):
        SweepConfig.from_mapping({"n": 4})


def test_from_mapping_skips_none_values():
    cfg = SweepConfig.from_mapping({"mode": "partition_sweep", "n": None})
    assert cfg.n == 10


@pytest.mark.parametrize(
    "overrides,fragment",
    [
        ({"mode": "orbit"}, "mode"),
        ({"variant": "ghz"}, "variant"),
        ({"channel": "amplitude"}, "channel"),
        ({"gamma": -1.0}, "gamma"),
        ({"t": -0.5}, "t"),
        ({"eps": 0.0}, "eps"),
        ({"t_max": None}, "t_max"),
        ({"t": 2.0, "t_max": 1.0}, "t_max"),
        ({"steps": 1}, "steps"),
        ({"k": 0}, "k"),
        ({"k": 6}, "k"),
        ({"theta0": 3.0}, "theta0"),
        ({"s": 0.1, "variant": "zbasis"}, "width"),
    ],
)
def test_validated_rejects(overrides, fragment):
    base = dict(mode=MODE_TIME_SWEEP, n=6, t_max=1.0)
    base.update(overrides)
    with pytest.raises(ConfigError, match=fragment):
        SweepConfig(**base).validated()


def test_validated_nsweep_requirements():
    with pytest.raises(ConfigError, match="n_max"):
        SweepConfig(mode=MODE_N_SWEEP, n=4).validated()
    with pytest.raises(ConfigError, match="n_max"):
        SweepConfig(mode=MODE_N_SWEEP, n=6, n_max=4).validated()
    SweepConfig(mode=MODE_N_SWEEP, n=4, n_max=6).validated()


def test_validated_capacity_error_keeps_type():
    with pytest.raises(CapacityError):
        SweepConfig(mode=MODE_PARTITION_SWEEP, n=15).validated()
    with pytest.raises(CapacityError):
        SweepConfig(mode=MODE_N_SWEEP, n=4, n_max=15).validated()


def test_run_sweep_validates_first():
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(mode="bogus"))
    assert set(MODES) == {
        MODE_TIME_SWEEP,
        MODE_N_SWEEP,
        MODE_PARTITION_SWEEP,
        MODE_COMPARE,
    }


def test_time_sweep_grid_and_values():
    cfg = SweepConfig(mode=MODE_TIME_SWEEP, n=10, k=1, t_max=0.02, steps=3)
    result = run_sweep(cfg)
    assert result.columns == (
        "t",
        "gamma_t",
        "negativity_numeric",
        "negativity_short_time",
        "n_negative",
        "negative_groups",
        "flags",
    )
    assert column(result, "t") == pytest.approx([0.0, 0.01, 0.02])
    assert column(result, "gamma_t") == pytest.approx([0.0, 0.01, 0.02])
    numeric = column(result, "negativity_numeric")
    assert numeric[0] == pytest.approx(0.4325894254, abs=1e-8)
    short = column(result, "negativity_short_time")
    for got, want in zip(short, numeric):
        assert got == pytest.approx(want, rel=0.01)
    assert result.summary is None


def test_time_sweep_zbasis_matches_coherence_decay():
    cfg = SweepConfig(
        mode=MODE_TIME_SWEEP, n=2, k=1, variant="zbasis", t_max=1.0, steps=5
    )
    result = run_sweep(cfg)
    for gamma_t, value in zip(column(result, "gamma_t"), column(result, "negativity_numeric")):
        assert value == pytest.approx(0.5 * math.exp(-2 * gamma_t), abs=1e-12)
    # No closed form covers this variant, so the analytic cell stays empty.
    assert set(column(result, "negativity_short_time")) == {None}


def test_compare_columns_and_summary():
    cfg = SweepConfig(mode=MODE_COMPARE, n=6, k=1, t_max=0.02, steps=5)
    result = run_sweep(cfg)
    assert result.columns == (
        "t",
        "gamma_t",
        "negativity_numeric",
        "negativity_short_time",
        "rel_err_short_time",
        "negativity_leading",
        "rel_err_leading",
        "negativity_small_angle",
        "rel_err_small_angle",
        "n_negative",
        "negative_groups",
        "flags",
    )
    assert result.summary.startswith("gamma_t<=0.1: ")
    for name in ("short_time", "leading", "small_angle"):
        assert f"max_rel_err[{name}]=" in result.summary
    assert max(column(result, "rel_err_short_time")) < 0.01


def test_compare_flags_outside_validity_window():
    cfg = SweepConfig(mode=MODE_COMPARE, n=6, k=1, t_max=0.3, steps=4)
    result = run_sweep(cfg)
    flags = dict(zip(column(result, "gamma_t"), column(result, "flags")))
    assert FLAG_GAMMA_T not in flags[0.0]
    assert FLAG_GAMMA_T in flags[0.3]


def test_n_sweep_delta_only():
    cfg = SweepConfig(mode=MODE_N_SWEEP, n=2, n_max=5, k=1, theta0=0.1, t=0.02)
    result = run_sweep(cfg)
    assert result.columns == (
        "n",
        "negativity_delta",
        "negativity_small_angle",
        "n_negative",
        "negative_groups",
        "flags",
    )
    assert column(result, "n") == [2, 3, 4, 5]
    for delta, small in zip(
        column(result, "negativity_delta"), column(result, "negativity_small_angle")
    ):
        assert delta == pytest.approx(small, rel=0.05)


def test_n_sweep_gaussian_column_present_iff_width_positive():
    cfg = SweepConfig(
        mode=MODE_N_SWEEP, n=2, n_max=5, k=1, theta0=0.1, t=0.02, s=0.05
    )
    result = run_sweep(cfg)
    assert "negativity_gaussian" in result.columns
    for gauss, delta in zip(
        column(result, "negativity_gaussian"), column(result, "negativity_delta")
    ):
        assert gauss > delta > 0


def test_partition_sweep_covers_half_range():
    cfg = SweepConfig(mode=MODE_PARTITION_SWEEP, n=8, theta0=0.02, t=0.01)
    result = run_sweep(cfg)
    assert result.columns == (
        "k",
        "negativity_numeric",
        "negativity_leading",
        "negativity_small_angle",
        "n_negative",
        "negative_groups",
        "flags",
    )
    assert column(result, "k") == [1, 2, 3, 4]
    numeric = column(result, "negativity_numeric")
    assert numeric == sorted(numeric)
    for got, want in zip(numeric, column(result, "negativity_small_angle")):
        assert got == pytest.approx(want, rel=0.01)


def test_time_sweep_long_time_decay():
    cfg = SweepConfig(mode=MODE_TIME_SWEEP, n=6, k=1, t_max=8.0, steps=5)
    result = run_sweep(cfg)
    numeric = column(result, "negativity_numeric")
    assert all(a >= b for a, b in zip(numeric, numeric[1:]))
    assert numeric[-1] < 1e-3


def test_format_value():
    assert format_value(None) == ""
    assert format_value("flag") == "flag"
    assert format_value(3) == "3"
    assert format_value(0.5) == "0.5"
    assert format_value(1 / 3) == "0.333333333333"
    assert format_value(1.25e-13) == "1.25e-13"


def test_csv_layout():
    cfg = SweepConfig(mode=MODE_TIME_SWEEP, n=4, k=1, t_max=0.02, steps=2)
    text = result_to_csv(run_sweep(cfg))
    lines = text.split("\n")
    assert lines[0] == "t,gamma_t,negativity_numeric,negativity_short_time,n_negative,negative_groups,flags"
    assert text.endswith("\n") and lines[-1] == ""
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "0"
    assert "×1" in first[5]


def test_csv_empty_cells_for_missing_analytics():
    cfg = SweepConfig(
        mode=MODE_TIME_SWEEP, n=2, k=1, variant="zbasis", t_max=0.5, steps=2
    )
    text = result_to_csv(run_sweep(cfg))
    row = text.split("\n")[1].split(",")
    assert row[3] == ""


def test_sweep_is_deterministic():
    cfg = SweepConfig(mode=MODE_COMPARE, n=4, k=1, t_max=0.02, steps=3)
    first = result_to_csv(run_sweep(cfg))
    second = result_to_csv(run_sweep(cfg))
    assert first == second
