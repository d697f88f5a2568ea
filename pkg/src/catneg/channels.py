"""Independent per-qubit noise channels on dense density matrices.

Dephasing acts per qubit as rho -> p0 rho + (1-p0) Z rho Z with
p0 = (1 + exp(-gamma_t))/2.  Composed over all qubits this multiplies entry
(a, b) by exp(-gamma_t * H(a, b)), H being the Hamming distance between the
basis indices: each differing bit contributes one factor 2*p0 - 1 =
exp(-gamma_t).  The closed form is what `apply_dephasing` computes; the
sequential per-qubit composition is kept as `apply_dephasing_kraus` so the
two can be checked against each other.

Depolarizing acts per qubit as rho -> p0 rho + p1 (X rho X + Y rho Y +
Z rho Z) with p0 = (1 + 3 exp(-gamma_t))/4 and p1 = (1 - exp(-gamma_t))/4.
There is no diagonal closed form, so it is applied qubit by qubit with
bit-masked index arithmetic; the single-qubit maps commute, so the order
does not matter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import qubit_count
from .states import CatStateSpec, QuadratureSpec, cat_state, density_from_state

KIND_DEPHASING = "dephasing"
KIND_DEPOLARIZING = "depolarizing"
KINDS = (KIND_DEPHASING, KIND_DEPOLARIZING)


@dataclass(frozen=True)
class ChannelSpec:
    """Channel kind plus the dimensionless gamma*t it is applied for."""

    kind: str
    gamma_t: float

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.gamma_t < 0:
            raise ValueError("gamma_t must be nonnegative")

    @property
    def p0(self) -> float:
        """Probability that a single qubit survives unflipped."""
        decay = math.exp(-self.gamma_t)
        if self.kind == KIND_DEPHASING:
            return (1 + decay) / 2
        return (1 + 3 * decay) / 4

    @property
    def p1(self) -> float:
        """Per-Pauli error probability (depolarizing only)."""
        if self.kind != KIND_DEPOLARIZING:
            raise ValueError("p1 is defined for the depolarizing channel only")
        return (1 - math.exp(-self.gamma_t)) / 4

    def apply(self, rho: np.ndarray) -> np.ndarray:
        if self.kind == KIND_DEPHASING:
            return apply_dephasing(rho, self.gamma_t)
        return apply_depolarizing(rho, self.gamma_t)


def _z_signs(n: int, qubit: int) -> np.ndarray:
    """(-1)**bit(qubit) over all basis indices; qubit 0 is the MSB."""
    mask = 1 << (n - 1 - qubit)
    idx = np.arange(2**n)
    return np.where(idx & mask, -1.0, 1.0)


def apply_dephasing(rho: np.ndarray, gamma_t: float) -> np.ndarray:
    """Multiply entry (a, b) by exp(-gamma_t * Hamming(a, b))."""
    n = qubit_count(rho.shape[0])
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    if gamma_t == 0:
        return rho.copy()
    dim = 2**n
    popcount = np.array([i.bit_count() for i in range(dim)], dtype=np.uint8)
    idx = np.arange(dim)
    hamming = popcount[np.bitwise_xor.outer(idx, idx)]
    return rho * np.exp(-gamma_t * hamming)


def apply_dephasing_kraus(rho: np.ndarray, gamma_t: float) -> np.ndarray:
    """Sequential per-qubit phase-flip maps; oracle for the closed form."""
    n = qubit_count(rho.shape[0])
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    p0 = (1 + math.exp(-gamma_t)) / 2
    out = rho.astype(complex, copy=True)
    for qubit in range(n):
        z = _z_signs(n, qubit)
        out = p0 * out + (1 - p0) * (np.outer(z, z) * out)
    return out


def apply_depolarizing(
    rho: np.ndarray, gamma_t: float, qubit_order: list[int] | None = None
) -> np.ndarray:
    """Apply the single-qubit depolarizing map to every qubit in turn.

    ``qubit_order`` exists to let tests confirm the maps commute; the result
    must not depend on it.
    """
    n = qubit_count(rho.shape[0])
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    order = list(range(n)) if qubit_order is None else list(qubit_order)
    if sorted(order) != list(range(n)):
        raise ValueError("qubit_order must be a permutation of all qubits")
    decay = math.exp(-gamma_t)
    p0 = (1 + 3 * decay) / 4
    p1 = (1 - decay) / 4
    dim = 2**n
    idx = np.arange(dim)
    out = rho.astype(complex, copy=True)
    for qubit in order:
        mask = 1 << (n - 1 - qubit)
        z = np.where(idx & mask, -1.0, 1.0)
        zz = np.outer(z, z)
        perm = idx ^ mask
        flipped = out[np.ix_(perm, perm)]
        # X rho X permutes both indices; Y adds the phase-flip signs on top.
        out = p0 * out + p1 * (flipped + zz * flipped + zz * out)
    return out


def evolve_cat(
    spec: CatStateSpec, channel: ChannelSpec, quad: QuadratureSpec | None = None
) -> np.ndarray:
    """Density matrix of the cat state after the channel at gamma_t."""
    rho = density_from_state(cat_state(spec, quad))
    return channel.apply(rho)
