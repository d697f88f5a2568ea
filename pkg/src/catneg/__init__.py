"""Negativity of dephased and depolarized multi-qubit cat states."""

from .analytic import (
    ShortTimeEigenvalues,
    SmallAngleNegativity,
    T0Spectrum,
    asymptotic_negativity,
    leading_eigenvalue_short_time,
    short_time_eigenvalues,
    short_time_negativity,
    small_angle_negativity,
    t0_eigenvectors,
    t0_spectrum,
)
from .channels import (
    KIND_DEPHASING,
    KIND_DEPOLARIZING,
    ChannelSpec,
    apply_dephasing,
    apply_depolarizing,
    evolve_cat,
)
from .linalg import (
    CapacityError,
    DegeneracyGroups,
    NonHermitianError,
    Spectrum,
    group_degenerate,
    hermitian_eigenvalues,
)
from .negativity import (
    NegativityReport,
    PartitionSpec,
    negative_structure,
    negativity,
    partial_transpose,
)
from .states import (
    VARIANT_STANDARD,
    VARIANT_Z_BASIS_GHZ,
    VARIANT_ZERO_AND_TILTED,
    CatStateSpec,
    QuadratureSpec,
    cat_state,
    density_from_state,
)
from .sweeps import ConfigError, SweepConfig, SweepResult, result_to_csv, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CatStateSpec",
    "ChannelSpec",
    "ConfigError",
    "DegeneracyGroups",
    "KIND_DEPHASING",
    "KIND_DEPOLARIZING",
    "NegativityReport",
    "NonHermitianError",
    "PartitionSpec",
    "QuadratureSpec",
    "ShortTimeEigenvalues",
    "SmallAngleNegativity",
    "Spectrum",
    "SweepConfig",
    "SweepResult",
    "T0Spectrum",
    "VARIANT_STANDARD",
    "VARIANT_Z_BASIS_GHZ",
    "VARIANT_ZERO_AND_TILTED",
    "apply_dephasing",
    "apply_depolarizing",
    "asymptotic_negativity",
    "cat_state",
    "density_from_state",
    "evolve_cat",
    "group_degenerate",
    "hermitian_eigenvalues",
    "leading_eigenvalue_short_time",
    "negative_structure",
    "negativity",
    "partial_transpose",
    "result_to_csv",
    "run_sweep",
    "short_time_eigenvalues",
    "short_time_negativity",
    "small_angle_negativity",
    "t0_eigenvectors",
    "t0_spectrum",
    "__version__",
]
