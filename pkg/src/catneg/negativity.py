"""Partial transpose over a qubit subset and the negativity it exposes.

Negativity is the sum of |eigenvalue| over the negative eigenvalues of the
partially transposed density matrix; it vanishes for every separable state.
The degeneracy pattern of the negative eigenvalues is reported alongside the
value because it carries structural information about the state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    GROUPING_RTOL,
    DegeneracyGroups,
    group_degenerate,
    hermitian_eigenvalues,
    qubit_count,
)

# Separates true negative eigenvalues from solver noise in the large null
# space; scaled by the largest |eigenvalue| of the transposed matrix.
NEGATIVE_EPS_RTOL = 1e-11


@dataclass(frozen=True)
class PartitionSpec:
    """Bipartition of n qubits; ``subset`` is the transposed side.

    Subsets larger than half the system are accepted but reported via the
    complementary size ``k``, matching the convention k <= N/2.
    """

    n_qubits: int
    subset: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_qubits < 2:
            raise ValueError("need at least 2 qubits to bipartition")
        subset = tuple(sorted(set(int(q) for q in self.subset)))
        if len(subset) != len(self.subset):
            raise ValueError("subset contains repeated qubit indices")
        object.__setattr__(self, "subset", subset)
        if not subset:
            raise ValueError("subset must not be empty")
        if subset[0] < 0 or subset[-1] >= self.n_qubits:
            raise ValueError("subset indices must lie in [0, n_qubits)")
        if len(subset) >= self.n_qubits:
            raise ValueError("subset must be a strict subset of the qubits")

    @classmethod
    def first_k(cls, n_qubits: int, k: int) -> "PartitionSpec":
        """Canonical partition transposing qubits 0..k-1."""
        return cls(n_qubits=n_qubits, subset=tuple(range(k)))

    @property
    def k(self) -> int:
        """Reported partition size, normalized to the smaller side."""
        return min(len(self.subset), self.n_qubits - len(self.subset))


@dataclass(frozen=True, eq=False)
class NegativityReport:
    """Negativity value plus the structure of the negative spectrum."""

    value: float
    negative_eigenvalues: np.ndarray
    groups: DegeneracyGroups
    epsilon_used: float

    @property
    def n_negative(self) -> int:
        return len(self.negative_eigenvalues)


def partial_transpose(rho: np.ndarray, part: PartitionSpec) -> np.ndarray:
    """Transpose the indices of ``part.subset`` only.

    Viewing rho as a rank-2N tensor with one row axis and one column axis
    per qubit, the transpose swaps the row and column axes of every qubit in
    the subset.
    """
    n = qubit_count(rho.shape[0])
    if n != part.n_qubits:
        raise ValueError(
            f"matrix has {n} qubits but partition expects {part.n_qubits}"
        )
    tensor = rho.reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for q in part.subset:
        axes[q], axes[n + q] = axes[n + q], axes[q]
    return tensor.transpose(axes).reshape(rho.shape)


def negativity(
    rho: np.ndarray, part: PartitionSpec, eps: float | None = None
) -> NegativityReport:
    """Sum of |eigenvalue| over eigenvalues below -eps of the transpose.

    ``eps`` defaults to NEGATIVE_EPS_RTOL times the largest |eigenvalue|,
    which keeps solver noise in the null space from masquerading as
    entanglement.
    """
    if eps is not None and eps <= 0:
        raise ValueError("eps must be positive")
    transposed = partial_transpose(rho, part)
    values = hermitian_eigenvalues(transposed).values
    scale = float(np.max(np.abs(values))) if len(values) else 0.0
    epsilon = eps if eps is not None else NEGATIVE_EPS_RTOL * max(scale, 1e-300)
    negative = values[values < -epsilon]
    return NegativityReport(
        value=float(-negative.sum()) if negative.size else 0.0,
        negative_eigenvalues=negative,
        groups=group_degenerate(negative, GROUPING_RTOL),
        epsilon_used=float(epsilon),
    )


def negative_structure(rho: np.ndarray, part: PartitionSpec) -> DegeneracyGroups:
    """Degeneracy groups of the negative eigenvalues only."""
    return negativity(rho, part).groups
