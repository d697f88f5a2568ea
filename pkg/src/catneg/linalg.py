"""Dense complex linear-algebra kernel for multi-qubit density matrices.

Matrices are plain numpy arrays (``complex128``, row-major).  A matrix is
accepted as Hermitian only if its asymmetry stays below ``HERMITICITY_RTOL``
times the largest entry magnitude; anything worse is an error rather than
something to symmetrize away, so a buggy channel cannot hide behind the
eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Dense eigensolves beyond 14 qubits (dimension 16384) are not desk-scale.
DEFAULT_MAX_QUBITS = 14
DEFAULT_MAX_DIM = 2**DEFAULT_MAX_QUBITS

# Asymmetry above this (relative to max |entry|) is a real bug, not noise.
HERMITICITY_RTOL = 1e-10

# Default relative tolerance for merging near-degenerate eigenvalues.
GROUPING_RTOL = 1e-8


class CapacityError(Exception):
    """Requested matrix dimension exceeds the configured cap."""


class NonHermitianError(Exception):
    """Matrix asymmetry exceeds what solver noise can explain."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    ``residual`` is max ||M v - w v|| over all eigenpairs, filled only when
    the spectrum was computed together with eigenvectors.
    """

    values: np.ndarray
    residual: float | None = None

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DegeneracyGroups:
    """Eigenvalues clustered into (representative, multiplicity) pairs."""

    groups: tuple[tuple[float, int], ...]
    tol_used: float

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.groups)

    def __len__(self) -> int:
        return len(self.groups)


def qubit_count(dim: int) -> int:
    """Number of qubits for a 2**n dimension; rejects anything else."""
    n = int(dim).bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def kron(a: np.ndarray, b: np.ndarray, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Kronecker product with a capacity guard on the result dimension."""
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > max_dim:
        raise CapacityError(
            f"kron result dimension {out_dim} exceeds cap {max_dim}"
        )
    return np.kron(a, b)


def hermiticity_defect(m: np.ndarray) -> tuple[float, tuple[int, int]]:
    """Largest |m[i,j] - conj(m[j,i])| and the offending index pair."""
    defect = np.abs(m - m.conj().T)
    i, j = np.unravel_index(np.argmax(defect), defect.shape)
    return float(defect[i, j]), (int(i), int(j))


def check_hermitian(m: np.ndarray, rtol: float = HERMITICITY_RTOL) -> None:
    """Raise NonHermitianError naming the worst entry pair if m is asymmetric."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonHermitianError(f"matrix shape {m.shape} is not square")
    scale = float(np.max(np.abs(m)))
    worst, (i, j) = hermiticity_defect(m)
    if worst > rtol * scale:
        raise NonHermitianError(
            f"matrix is not Hermitian: |m[{i},{j}] - conj(m[{j},{i}])| = "
            f"{worst:.3e} exceeds {rtol:g} * max|m| = {rtol * scale:.3e}"
        )


def hermitian_eigenvalues(
    m: np.ndarray,
    rtol: float = HERMITICITY_RTOL,
    with_residual: bool = False,
) -> Spectrum:
    """All eigenvalues of a Hermitian matrix, sorted ascending.

    Inputs are symmetrized as (m + m^dag)/2 only after passing the asymmetry
    check, so the cleanup removes rounding noise and nothing more.
    """
    check_hermitian(m, rtol=rtol)
    h = (m + m.conj().T) / 2
    if not with_residual:
        return Spectrum(np.linalg.eigvalsh(h))
    w, v = np.linalg.eigh(h)
    residual = float(np.max(np.linalg.norm(h @ v - v * w, axis=0)))
    return Spectrum(w, residual=residual)


def group_degenerate(
    spectrum: Spectrum | np.ndarray, rel_tol: float = GROUPING_RTOL
) -> DegeneracyGroups:
    """Merge eigenvalues whose gaps stay within rel_tol * max|value|.

    Values must be sorted ascending.  Representatives are group means, which
    keeps adjacent representatives separated by more than the merge tolerance.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    values = spectrum.values if isinstance(spectrum, Spectrum) else np.asarray(spectrum)
    if len(values) == 0:
        return DegeneracyGroups(groups=(), tol_used=0.0)
    scale = float(np.max(np.abs(values)))
    tol = rel_tol * (scale if scale > 0 else 1.0)
    groups: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            chunk = values[start:i]
            groups.append((float(np.mean(chunk)), len(chunk)))
            start = i
    return DegeneracyGroups(groups=tuple(groups), tol_used=tol)
