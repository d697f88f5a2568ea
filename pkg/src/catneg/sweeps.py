"""Parameter sweeps over time, qubit number and partition size.

A sweep is described by a SweepConfig (merged from config file and CLI by
the caller), validated up front, and executed into a SweepResult holding
typed rows.  CSV rendering is split out so the byte-exact formatting rules
live in one place: 12 significant digits, '.' decimal separator, Unix
newlines, UTF-8.

Column layout per mode (sweep coordinates first, numeric value, analytic
columns, then structure):

    time_sweep       t, gamma_t, negativity_numeric, negativity_short_time,
                     n_negative, negative_groups, flags
    n_sweep          n, negativity_delta[, negativity_gaussian],
                     negativity_small_angle, n_negative, negative_groups, flags
    partition_sweep  k, negativity_numeric, negativity_leading,
                     negativity_small_angle, n_negative, negative_groups, flags
    compare          time_sweep columns plus negativity_leading,
                     negativity_small_angle and a rel_err_* column per
                     analytic value, plus a max-relative-error summary

Analytic cells are empty when the corresponding closed form does not apply
(wrong channel or variant, Gaussian width, k != 1, N < 4) and empty with a
*_domain flag when the form applies but leaves its validity domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .analytic import (
    FLAG_GAMMA_T,
    VALID_GAMMA_T,
    leading_eigenvalue_short_time,
    short_time_negativity,
    small_angle_negativity,
)
from .channels import KIND_DEPHASING, KIND_DEPOLARIZING, ChannelSpec
from .negativity import NegativityReport, PartitionSpec, negativity
from .states import (
    VARIANT_STANDARD,
    VARIANT_Z_BASIS_GHZ,
    VARIANT_ZERO_AND_TILTED,
    CatStateSpec,
    QuadratureSpec,
    cat_state,
    density_from_state,
)

MODE_TIME_SWEEP = "time_sweep"
MODE_N_SWEEP = "n_sweep"
MODE_PARTITION_SWEEP = "partition_sweep"
MODE_COMPARE = "compare"
MODES = (MODE_TIME_SWEEP, MODE_N_SWEEP, MODE_PARTITION_SWEEP, MODE_COMPARE)

# CLI spellings of the state variants.
VARIANT_NAMES = {
    "standard": VARIANT_STANDARD,
    "zbasis": VARIANT_Z_BASIS_GHZ,
    "zerotilted": VARIANT_ZERO_AND_TILTED,
}

FLAG_SHORT_TIME_DOMAIN = "short_time_domain"
FLAG_LEADING_DOMAIN = "leading_domain"

# Guard against division by a numerically-zero reference value.
_REL_ERR_FLOOR = 1e-15


class ConfigError(ValueError):
    """Invalid or inconsistent sweep configuration."""


# Config keys and the type each value is coerced to.
KEY_TYPES = {
    "mode": str,
    "n": int,
    "n_max": int,
    "k": int,
    "theta0": float,
    "s": float,
    "gamma": float,
    "t": float,
    "t_max": float,
    "steps": int,
    "channel": str,
    "variant": str,
    "quad_nodes": int,
    "quad_halfwidth": float,
    "eps": float,
}


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    n: int = 10
    n_max: int | None = None
    k: int = 1
    theta0: float = math.pi / 3
    s: float = 0.0
    gamma: float = 1.0
    t: float = 0.0
    t_max: float | None = None
    steps: int = 51
    channel: str = KIND_DEPHASING
    variant: str = "standard"
    quad_nodes: int = 61
    quad_halfwidth: float = 6.0
    eps: float | None = None

    @classmethod
    def from_mapping(cls, mapping: dict) -> "SweepConfig":
        """Build a config from string-or-typed values, rejecting unknown keys."""
        kwargs = {}
        for key, raw in mapping.items():
            if raw is None:
                continue
            if key not in KEY_TYPES:
                raise ConfigError(f"unknown config key '{key}'")
            want = KEY_TYPES[key]
            try:
                if want is int and isinstance(raw, str):
                    kwargs[key] = int(raw, 10)
                else:
                    kwargs[key] = want(raw)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for '{key}': {raw!r}") from exc
        if "mode" not in kwargs:
            raise ConfigError("missing required key 'mode'")
        return cls(**kwargs)

    def validated(self) -> "SweepConfig":
        """Return self after full validation, raising ConfigError on problems."""
        if self.mode not in MODES:
            raise ConfigError(
                f"unknown mode '{self.mode}'; expected one of {', '.join(MODES)}"
            )
        if self.variant not in VARIANT_NAMES:
            raise ConfigError(
                f"unknown variant '{self.variant}'; expected one of "
                f"{', '.join(VARIANT_NAMES)}"
            )
        if self.channel not in (KIND_DEPHASING, KIND_DEPOLARIZING):
            raise ConfigError(
                f"unknown channel '{self.channel}'; expected "
                f"{KIND_DEPHASING} or {KIND_DEPOLARIZING}"
            )
        if self.gamma < 0:
            raise ConfigError("'gamma' must be nonnegative")
        if self.t < 0:
            raise ConfigError("'t' must be nonnegative")
        if self.eps is not None and self.eps <= 0:
            raise ConfigError("'eps' must be positive")

        n_top = self.n_max if self.mode == MODE_N_SWEEP and self.n_max else self.n
        # State validity (angle range, width, variant pairing, capacity) is
        # delegated to the state spec; capacity problems keep their own type.
        try:
            spec = CatStateSpec(
                n_qubits=n_top,
                theta0=self.theta0,
                width=self.s,
                variant=VARIANT_NAMES[self.variant],
            )
            if self.s > 0:
                QuadratureSpec(self.quad_nodes, self.quad_halfwidth)
            del spec
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

        if self.mode in (MODE_TIME_SWEEP, MODE_COMPARE):
            if self.t_max is None:
                raise ConfigError(f"mode {self.mode} requires 't_max'")
            if self.t_max <= self.t:
                raise ConfigError("'t_max' must exceed 't'")
            if self.steps < 2:
                raise ConfigError("'steps' must be at least 2 for a time sweep")
            if not 1 <= self.k <= self.n - 1:
                raise ConfigError(f"'k' must lie in [1, {self.n - 1}]")
        elif self.mode == MODE_N_SWEEP:
            if self.n_max is None:
                raise ConfigError("mode n_sweep requires 'n_max'")
            if self.n_max < self.n:
                raise ConfigError("'n_max' must be at least 'n'")
            if not 1 <= self.k <= self.n - 1:
                raise ConfigError(f"'k' must lie in [1, {self.n - 1}] for the smallest n")
        elif self.mode == MODE_PARTITION_SWEEP:
            if self.n < 2:
                raise ConfigError("'n' must be at least 2")
        return self


@dataclass(frozen=True)
class SweepResult:
    mode: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    summary: str | None = None


def format_value(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return "%.12g" % x


def encode_groups(report: NegativityReport) -> str:
    return ";".join(
        f"{format_value(value)}×{mult}" for value, mult in report.groups.groups
    )


def result_to_csv(result: SweepResult) -> str:
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(format_value(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _quad_for(cfg: SweepConfig) -> QuadratureSpec | None:
    if cfg.s > 0:
        return QuadratureSpec(cfg.quad_nodes, cfg.quad_halfwidth)
    return None


def _evolved_report(
    rho0, cfg: SweepConfig, n: int, k: int, gamma_t: float
) -> NegativityReport:
    rho = ChannelSpec(cfg.channel, gamma_t).apply(rho0)
    return negativity(rho, PartitionSpec.first_k(n, k), eps=cfg.eps)


def _delta_analytic_ok(cfg: SweepConfig) -> bool:
    """Closed forms cover the dephased, delta-width standard state."""
    return (
        cfg.channel == KIND_DEPHASING
        and VARIANT_NAMES[cfg.variant] == VARIANT_STANDARD
        and cfg.s == 0
    )


def _short_time_cell(cfg: SweepConfig, n: int, k_eff: int, gamma_t: float):
    """(value, flags) for the {1, N-1} closed form, or (None, flags)."""
    if not (_delta_analytic_ok(cfg) and k_eff == 1 and n >= 4):
        return None, []
    try:
        value = short_time_negativity(n, cfg.theta0, gamma_t)
    except ValueError:
        return None, [FLAG_SHORT_TIME_DOMAIN]
    flags = [FLAG_GAMMA_T] if gamma_t > VALID_GAMMA_T else []
    return value, flags


def _leading_cell(cfg: SweepConfig, n: int, k_eff: int, gamma_t: float):
    if not _delta_analytic_ok(cfg) or not 0.0 < cfg.theta0 < math.pi / 2:
        return None, []
    try:
        value = -leading_eigenvalue_short_time(n, k_eff, cfg.theta0, gamma_t)
    except ValueError:
        return None, [FLAG_LEADING_DOMAIN]
    flags = [FLAG_GAMMA_T] if gamma_t > VALID_GAMMA_T else []
    return value, flags


def _small_angle_cell(cfg: SweepConfig, n: int, k_eff: int, gamma_t: float):
    if not (
        cfg.channel == KIND_DEPHASING
        and VARIANT_NAMES[cfg.variant] == VARIANT_STANDARD
    ):
        return None, []
    result = small_angle_negativity(n, k_eff, cfg.theta0, gamma_t)
    return result.value, list(result.flags)


def _merge_flags(*flag_lists) -> str:
    seen = []
    for flags in flag_lists:
        for flag in flags:
            if flag not in seen:
                seen.append(flag)
    return ";".join(seen)


def _rel_err(analytic, numeric):
    if analytic is None:
        return None
    return abs(analytic - numeric) / max(abs(numeric), _REL_ERR_FLOOR)


def _time_grid(cfg: SweepConfig) -> list[float]:
    span = cfg.t_max - cfg.t
    return [cfg.t + span * i / (cfg.steps - 1) for i in range(cfg.steps)]


def _run_time_sweep(cfg: SweepConfig) -> SweepResult:
    quad = _quad_for(cfg)
    spec = CatStateSpec(cfg.n, cfg.theta0, width=cfg.s, variant=VARIANT_NAMES[cfg.variant])
    rho0 = density_from_state(cat_state(spec, quad))
    k_eff = min(cfg.k, cfg.n - cfg.k)
    rows = []
    for t_i in _time_grid(cfg):
        gamma_t = cfg.gamma * t_i
        report = _evolved_report(rho0, cfg, cfg.n, cfg.k, gamma_t)
        short, short_flags = _short_time_cell(cfg, cfg.n, k_eff, gamma_t)
        rows.append(
            (
                t_i,
                gamma_t,
                report.value,
                short,
                report.n_negative,
                encode_groups(report),
                _merge_flags(short_flags),
            )
        )
    columns = (
        "t",
        "gamma_t",
        "negativity_numeric",
        "negativity_short_time",
        "n_negative",
        "negative_groups",
        "flags",
    )
    return SweepResult(cfg.mode, columns, tuple(rows))


def _run_compare(cfg: SweepConfig) -> SweepResult:
    quad = _quad_for(cfg)
    spec = CatStateSpec(cfg.n, cfg.theta0, width=cfg.s, variant=VARIANT_NAMES[cfg.variant])
    rho0 = density_from_state(cat_state(spec, quad))
    k_eff = min(cfg.k, cfg.n - cfg.k)
    rows = []
    window_errs: dict[str, float] = {}

    def track(name: str, err, gamma_t: float) -> None:
        if err is not None and gamma_t <= VALID_GAMMA_T:
            window_errs[name] = max(window_errs.get(name, 0.0), err)

    for t_i in _time_grid(cfg):
        gamma_t = cfg.gamma * t_i
        report = _evolved_report(rho0, cfg, cfg.n, cfg.k, gamma_t)
        short, short_flags = _short_time_cell(cfg, cfg.n, k_eff, gamma_t)
        lead, lead_flags = _leading_cell(cfg, cfg.n, k_eff, gamma_t)
        small, small_flags = _small_angle_cell(cfg, cfg.n, k_eff, gamma_t)
        err_short = _rel_err(short, report.value)
        err_lead = _rel_err(lead, report.value)
        err_small = _rel_err(small, report.value)
        track("short_time", err_short, gamma_t)
        track("leading", err_lead, gamma_t)
        track("small_angle", err_small, gamma_t)
        rows.append(
            (
                t_i,
                gamma_t,
                report.value,
                short,
                err_short,
                lead,
                err_lead,
                small,
                err_small,
                report.n_negative,
                encode_groups(report),
                _merge_flags(short_flags, lead_flags, small_flags),
            )
        )
    columns = (
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
    parts = [
        f"max_rel_err[{name}]={format_value(window_errs[name])}"
        for name in ("short_time", "leading", "small_angle")
        if name in window_errs
    ]
    summary = (
        f"gamma_t<={format_value(VALID_GAMMA_T)}: " + " ".join(parts)
        if parts
        else "no analytic columns applicable"
    )
    return SweepResult(cfg.mode, columns, tuple(rows), summary=summary)


def _run_n_sweep(cfg: SweepConfig) -> SweepResult:
    gamma_t = cfg.gamma * cfg.t
    with_gaussian = cfg.s > 0
    quad = _quad_for(cfg)
    variant = VARIANT_NAMES[cfg.variant]
    rows = []
    for n in range(cfg.n, cfg.n_max + 1):
        k_eff = min(cfg.k, n - cfg.k)
        delta_spec = CatStateSpec(n, cfg.theta0, width=0.0, variant=variant)
        rho_delta = density_from_state(cat_state(delta_spec))
        delta_cfg = replace(cfg, s=0.0)
        report_delta = _evolved_report(rho_delta, delta_cfg, n, cfg.k, gamma_t)
        if with_gaussian:
            gauss_spec = CatStateSpec(n, cfg.theta0, width=cfg.s, variant=variant)
            rho_gauss = density_from_state(cat_state(gauss_spec, quad))
            report_gauss = _evolved_report(rho_gauss, cfg, n, cfg.k, gamma_t)
            structure = report_gauss
        else:
            report_gauss = None
            structure = report_delta
        small, small_flags = _small_angle_cell(cfg, n, k_eff, gamma_t)
        row = [n, report_delta.value]
        if with_gaussian:
            row.append(report_gauss.value)
        row.extend(
            (
                small,
                structure.n_negative,
                encode_groups(structure),
                _merge_flags(small_flags),
            )
        )
        rows.append(tuple(row))
    columns = ["n", "negativity_delta"]
    if with_gaussian:
        columns.append("negativity_gaussian")
    columns.extend(
        ("negativity_small_angle", "n_negative", "negative_groups", "flags")
    )
    return SweepResult(cfg.mode, tuple(columns), tuple(rows))


def _run_partition_sweep(cfg: SweepConfig) -> SweepResult:
    gamma_t = cfg.gamma * cfg.t
    quad = _quad_for(cfg)
    spec = CatStateSpec(cfg.n, cfg.theta0, width=cfg.s, variant=VARIANT_NAMES[cfg.variant])
    rho0 = density_from_state(cat_state(spec, quad))
    rho = ChannelSpec(cfg.channel, gamma_t).apply(rho0)
    rows = []
    for k in range(1, cfg.n // 2 + 1):
        report = negativity(rho, PartitionSpec.first_k(cfg.n, k), eps=cfg.eps)
        lead, lead_flags = _leading_cell(cfg, cfg.n, k, gamma_t)
        small, small_flags = _small_angle_cell(cfg, cfg.n, k, gamma_t)
        rows.append(
            (
                k,
                report.value,
                lead,
                small,
                report.n_negative,
                encode_groups(report),
                _merge_flags(lead_flags, small_flags),
            )
        )
    columns = (
        "k",
        "negativity_numeric",
        "negativity_leading",
        "negativity_small_angle",
        "n_negative",
        "negative_groups",
        "flags",
    )
    return SweepResult(cfg.mode, columns, tuple(rows))


_RUNNERS = {
    MODE_TIME_SWEEP: _run_time_sweep,
    MODE_N_SWEEP: _run_n_sweep,
    MODE_PARTITION_SWEEP: _run_partition_sweep,
    MODE_COMPARE: _run_compare,
}


def run_sweep(cfg: SweepConfig) -> SweepResult:
    cfg = cfg.validated()
    return _RUNNERS[cfg.mode](cfg)
