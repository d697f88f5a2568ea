"""Construction of N-qubit cat states and their density matrices.

A state vector is a plain complex array of 2**N amplitudes.  Basis ordering
is big-endian throughout the package: the binary digits of index b give each
qubit's component with qubit 0 as the most significant bit.  One global
convention prevents partial-transpose index bugs.

The standard cat state superposes two product states of tilted single-qubit
kets, phi1(theta) = cos(theta)|0> + sin(theta)|1> and phi2(theta) with the
sign of the |1> component flipped.  A zero-width spec takes both factors at
theta0; a positive width integrates the superposition against a Gaussian
envelope centered at theta0 before normalizing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_MAX_QUBITS

VARIANT_STANDARD = "standard"
VARIANT_Z_BASIS_GHZ = "z_basis_ghz"
VARIANT_ZERO_AND_TILTED = "zero_and_tilted"
VARIANTS = (VARIANT_STANDARD, VARIANT_Z_BASIS_GHZ, VARIANT_ZERO_AND_TILTED)

# Superpositions whose branches cancel below this norm are rejected.
DEGENERATE_NORM = 1e-14


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Legendre discretization of the Gaussian envelope integral.

    ``support_halfwidth`` is measured in units of the envelope width, so the
    nodes cover [theta0 - h*s, theta0 + h*s].
    """

    node_count: int = 61
    support_halfwidth: float = 6.0

    def __post_init__(self) -> None:
        if self.node_count < 3 or self.node_count % 2 == 0:
            raise ValueError("node_count must be an odd integer >= 3")
        if self.support_halfwidth <= 0:
            raise ValueError("support_halfwidth must be positive")


@dataclass(frozen=True)
class CatStateSpec:
    """Parameters of an initial cat state.

    ``width`` is the Gaussian envelope width s (0 means a sharp angle), only
    meaningful for the standard variant.  ``max_qubits`` overrides the
    default capacity cap.
    """

    n_qubits: int
    theta0: float
    width: float = 0.0
    variant: str = VARIANT_STANDARD
    max_qubits: int = DEFAULT_MAX_QUBITS

    def __post_init__(self) -> None:
        if self.n_qubits < 2:
            raise ValueError("need at least 2 qubits")
        if self.n_qubits > self.max_qubits:
            from .linalg import CapacityError

            raise CapacityError(
                f"{self.n_qubits} qubits exceeds cap of {self.max_qubits}"
            )
        # Angles outside the first quadrant are rejected rather than wrapped.
        if not 0.0 <= self.theta0 <= math.pi / 2:
            raise ValueError("theta0 must lie in [0, pi/2] radians")
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.width > 0 and self.variant != VARIANT_STANDARD:
            raise ValueError("positive width applies only to the standard variant")


def single_qubit_state(theta: float, sign: str = "+") -> np.ndarray:
    """(cos(theta), +-sin(theta)) as a complex 2-vector."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    s = math.sin(theta) if sign == "+" else -math.sin(theta)
    return np.array([math.cos(theta), s], dtype=complex)


def _uniform_product(single: np.ndarray, n: int) -> np.ndarray:
    v = np.array([1.0], dtype=complex)
    for _ in range(n):
        v = np.kron(v, single)
    return v


def gaussian_nodes(
    theta0: float, width: float, quad: QuadratureSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature angles and weights, the Gaussian envelope folded in.

    The envelope's overall normalization cancels when the state is
    normalized afterwards; it is kept for readability only.
    """
    x, w = np.polynomial.legendre.leggauss(quad.node_count)
    half = quad.support_halfwidth * width
    thetas = theta0 + half * x
    envelope = np.exp(-((thetas - theta0) ** 2) / (2 * width**2))
    envelope /= math.sqrt(2 * math.pi) * width
    return thetas, w * half * envelope


def cat_state(spec: CatStateSpec, quad: QuadratureSpec | None = None) -> np.ndarray:
    """Normalized amplitude vector for the given spec.

    A quadrature spec is required exactly when width > 0 (standard variant);
    all constructed states are symmetric under any permutation of qubit
    positions, so amplitudes depend only on the Hamming weight of the index.
    """
    needs_quad = spec.width > 0 and spec.variant == VARIANT_STANDARD
    if needs_quad and quad is None:
        raise ValueError("width > 0 requires a QuadratureSpec")
    if not needs_quad and quad is not None:
        raise ValueError("QuadratureSpec only applies when width > 0")

    n = spec.n_qubits
    if spec.variant == VARIANT_Z_BASIS_GHZ:
        v = np.zeros(2**n, dtype=complex)
        v[0] = 1.0
        v[-1] = 1.0
    elif spec.variant == VARIANT_ZERO_AND_TILTED:
        zero = np.array([1.0, 0.0], dtype=complex)
        tilted = single_qubit_state(spec.theta0, "+")
        v = _uniform_product(zero, n) + _uniform_product(tilted, n)
    elif spec.width == 0:
        v = _uniform_product(single_qubit_state(spec.theta0, "+"), n)
        v += _uniform_product(single_qubit_state(spec.theta0, "-"), n)
    else:
        thetas, weights = gaussian_nodes(spec.theta0, spec.width, quad)
        v = np.zeros(2**n, dtype=complex)
        for theta, weight in zip(thetas, weights):
            branch = _uniform_product(single_qubit_state(theta, "+"), n)
            branch += _uniform_product(single_qubit_state(theta, "-"), n)
            v += weight * branch

    norm = np.linalg.norm(v)
    if norm < DEGENERATE_NORM:
        raise ValueError("degenerate cat state: the superposition cancels")
    return v / norm


def density_from_state(v: np.ndarray) -> np.ndarray:
    """Projector |v><v| for a normalized state vector."""
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state vector is not normalized (norm {norm!r})")
    return np.outer(v, v.conj())
