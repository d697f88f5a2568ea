"""Closed-form negativity results for the standard (delta) cat state.

Everything here is expressed through c = cos(2*theta0), the overlap of the
two tilted single-qubit kets.  At t = 0 the partial transpose over k of N
qubits has exactly four nonzero eigenvalues:

    pp, mm     = [1 +- c**k][1 +- c**(N-k)] / (2 (1 + c**N))
    cross_+-   = +- sqrt(1 - c**(2k)) sqrt(1 - c**(2(N-k))) / (2 (1 + c**N))

so the initial negativity is the magnitude of the single negative eigenvalue
cross_-.  For the {1, N-1} partition and small gamma_t the negative spectrum
consists of a leading root, a subleading root and an (N-2)-fold degenerate
branch; these are evaluated here from the coefficient combinations a_+-,
b_+- of the overlap powers.  The small-angle law
sqrt(k (N-k)) theta0**2 (1 - 2 gamma_t) and the vanishing asymptotic value
close the set.

All functions are pure and scalar; validity limits are soft (reported as
flags) except where a formula genuinely leaves its domain, which raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_MAX_QUBITS, CapacityError
from .states import single_qubit_state

# Soft validity bounds; crossing them flags the output instead of raising.
VALID_GAMMA_T = 0.1
VALID_ANGLE_PRODUCT = 0.1

FLAG_GAMMA_T = "gamma_t>0.1"
FLAG_ANGLE_PRODUCT = "n_theta0_sq>0.1"
FLAG_TIME_PRODUCT = "n_theta0_gamma_t>0.1"

# Pairing of the b coefficients inside the product coefficient below: the
# "plus" form uses b_plus in both brackets, the "mixed" form uses b_plus in
# one and b_minus in the other.  Exact diagonalization selects the default;
# see the README note.
B_PAIRING_PLUS = "plus"
B_PAIRING_MIXED = "mixed"
DEFAULT_B_PAIRING = B_PAIRING_PLUS

_DENOM_EPS = 1e-14


@dataclass(frozen=True)
class T0Spectrum:
    """The four nonzero eigenvalues of the transposed state at t = 0."""

    plus_plus: float
    minus_minus: float
    cross_positive: float
    cross_negative: float
    n_qubits: int
    k: int
    theta0: float

    @property
    def values(self) -> tuple[float, float, float, float]:
        return (self.plus_plus, self.minus_minus, self.cross_positive, self.cross_negative)

    @property
    def negativity(self) -> float:
        return -self.cross_negative


@dataclass(frozen=True)
class ShortTimeEigenvalues:
    """Negative eigenvalues of the {1, N-1} transpose at small gamma_t.

    ``negativity`` combines them with the (N-2)-fold multiplicity of the
    degenerate branch.  ``flags`` lists soft validity violations.
    """

    n_qubits: int
    theta0: float
    gamma_t: float
    b_pairing: str
    a_plus: float
    a_minus: float
    b_plus: float
    b_minus: float
    sum_coeff: float
    product_coeff: float
    leading: float
    subleading: float
    degenerate: float
    negativity: float
    flags: tuple[str, ...]


@dataclass(frozen=True)
class SmallAngleNegativity:
    """Small-angle, short-time negativity with its validity products."""

    value: float
    n_theta0_sq: float
    n_theta0_gamma_t: float
    flags: tuple[str, ...]


def _validate_partition(n_qubits: int, k: int, theta0: float) -> None:
    if n_qubits < 2:
        raise ValueError("need at least 2 qubits")
    if not 1 <= k <= n_qubits - 1:
        raise ValueError(f"k must lie in [1, {n_qubits - 1}]")
    if not 0.0 <= theta0 <= math.pi / 2:
        raise ValueError("theta0 must lie in [0, pi/2] radians")


def t0_spectrum(n_qubits: int, k: int, theta0: float) -> T0Spectrum:
    """Exact nonzero spectrum of the transposed state at t = 0."""
    _validate_partition(n_qubits, k, theta0)
    c = math.cos(2 * theta0)
    denom = 2 * (1 + c**n_qubits)
    if abs(denom) < _DENOM_EPS:
        raise ValueError("cat state norm vanishes for this theta0 and N")
    plus_plus = (1 + c**k) * (1 + c ** (n_qubits - k)) / denom
    minus_minus = (1 - c**k) * (1 - c ** (n_qubits - k)) / denom
    cross = (
        math.sqrt((1 - c ** (2 * k)) * (1 - c ** (2 * (n_qubits - k)))) / denom
    )
    return T0Spectrum(
        plus_plus=plus_plus,
        minus_minus=minus_minus,
        cross_positive=cross,
        cross_negative=-cross,
        n_qubits=n_qubits,
        k=k,
        theta0=theta0,
    )


def _product_state(theta: float, sign: str, n: int) -> np.ndarray:
    v = np.array([1.0], dtype=complex)
    single = single_qubit_state(theta, sign)
    for _ in range(n):
        v = np.kron(v, single)
    return v


def _balanced_pair(theta0: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal sum/difference combinations of the two branch products."""
    c = math.cos(2 * theta0)
    pair = []
    for sign, label in ((1.0, "+"), (-1.0, "-")):
        norm_sq = 2 * (1 + sign * c**n)
        if abs(norm_sq) < _DENOM_EPS:
            raise ValueError(
                f"normalization vanishes for sign '{label}' on the {n}-qubit side"
            )
        v = _product_state(theta0, "+", n) + sign * _product_state(theta0, "-", n)
        pair.append(v / math.sqrt(norm_sq))
    return pair[0], pair[1]


def t0_eigenvectors(
    n_qubits: int, k: int, theta0: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Eigenvectors matching t0_spectrum, in the same order.

    Built from the sum/difference combinations on each side of the
    partition; the transposed side is the first k qubits.
    """
    _validate_partition(n_qubits, k, theta0)
    if n_qubits > DEFAULT_MAX_QUBITS:
        raise CapacityError(f"{n_qubits} qubits exceeds cap of {DEFAULT_MAX_QUBITS}")
    u_plus_k, u_minus_k = _balanced_pair(theta0, k)
    u_plus_r, u_minus_r = _balanced_pair(theta0, n_qubits - k)
    v_pp = np.kron(u_plus_k, u_plus_r)
    v_mm = np.kron(u_minus_k, u_minus_r)
    cross_a = np.kron(u_plus_k, u_minus_r)
    cross_b = np.kron(u_minus_k, u_plus_r)
    v_cp = (cross_a + cross_b) / math.sqrt(2)
    v_cm = (cross_a - cross_b) / math.sqrt(2)
    return v_pp, v_mm, v_cp, v_cm


def short_time_eigenvalues(
    n_qubits: int,
    theta0: float,
    gamma_t: float,
    b_pairing: str = DEFAULT_B_PAIRING,
) -> ShortTimeEigenvalues:
    """Closed-form negative eigenvalues for the {1, N-1} partition.

    Valid for small gamma_t (soft bound VALID_GAMMA_T) and N >= 4; below
    that only the t = 0 eigenvalue is negative and the numeric path should
    be used.  Raises when a radicand leaves its domain.
    """
    if n_qubits < 4:
        raise ValueError(
            "short-time closed form needs at least 4 qubits; use the numeric path"
        )
    _validate_partition(n_qubits, 1, theta0)
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    if b_pairing not in (B_PAIRING_PLUS, B_PAIRING_MIXED):
        raise ValueError(f"unknown b_pairing {b_pairing!r}")

    c = math.cos(2 * theta0)
    den_plus = 1 + c ** (n_qubits - 1)
    den_minus = 1 - c ** (n_qubits - 1)
    if abs(den_plus) < _DENOM_EPS or abs(den_minus) < _DENOM_EPS:
        raise ValueError("coefficient denominator vanishes for this theta0")
    a_plus = (c + c ** (n_qubits - 2)) / den_plus
    a_minus = (c - c ** (n_qubits - 2)) / den_minus
    b_plus = (c**2 + c ** (n_qubits - 3)) / den_plus
    b_minus = (c**2 - c ** (n_qubits - 3)) / den_minus

    lam = t0_spectrum(n_qubits, 1, theta0).cross_negative
    tau = gamma_t / 2
    shrink = 1 - (n_qubits + 1) * tau
    sum_coeff = (
        shrink**2
        + 2 * (n_qubits - 1) * tau * (1 + (n_qubits + 1) * tau) * a_minus * a_plus
        + tau**2 * ((n_qubits - 2) * b_plus + 1) * ((n_qubits - 2) * b_minus + 1)
    )
    first_bracket = (n_qubits - 2) * b_plus - (n_qubits - 1) * a_minus**2 + 1
    b_second = b_plus if b_pairing == B_PAIRING_PLUS else b_minus
    second_bracket = (n_qubits - 2) * b_second - (n_qubits - 1) * a_plus**2 + 1
    product_coeff = 4 * tau**2 * shrink**2 * first_bracket * second_bracket

    disc = sum_coeff**2 - product_coeff
    # A discriminant that is an exact square can round to a tiny negative.
    tiny_disc = 1e-12 * max(sum_coeff**2, abs(product_coeff), 1e-300)
    if disc < -tiny_disc:
        raise ValueError(
            "short-time form left its validity domain (negative discriminant); "
            "use the numeric path"
        )
    root = math.sqrt(max(disc, 0.0))
    inner_deep = sum_coeff + root
    inner_shallow = sum_coeff - root
    tiny = 1e-13 * max(1.0, abs(sum_coeff))
    if inner_deep < 0 or inner_shallow < -tiny:
        raise ValueError(
            "short-time form left its validity domain (negative root argument); "
            "use the numeric path"
        )
    inner_shallow = max(inner_shallow, 0.0)
    leading = lam / math.sqrt(2) * math.sqrt(inner_deep)
    subleading = lam / math.sqrt(2) * math.sqrt(inner_shallow)

    branch_radicand = (b_plus - 1) * (b_minus - 1)
    if branch_radicand < 0:
        raise ValueError(
            "degenerate-branch radicand is negative for this theta0; "
            "use the numeric path"
        )
    degenerate = tau * lam * math.sqrt(branch_radicand)

    flags = (FLAG_GAMMA_T,) if gamma_t > VALID_GAMMA_T else ()
    value = -((n_qubits - 2) * degenerate + subleading + leading)
    return ShortTimeEigenvalues(
        n_qubits=n_qubits,
        theta0=theta0,
        gamma_t=gamma_t,
        b_pairing=b_pairing,
        a_plus=a_plus,
        a_minus=a_minus,
        b_plus=b_plus,
        b_minus=b_minus,
        sum_coeff=sum_coeff,
        product_coeff=product_coeff,
        leading=leading,
        subleading=subleading,
        degenerate=degenerate,
        negativity=value,
        flags=flags,
    )


def short_time_negativity(
    n_qubits: int,
    theta0: float,
    gamma_t: float,
    b_pairing: str = DEFAULT_B_PAIRING,
) -> float:
    """Negativity from the short-time eigenvalues, {1, N-1} partition."""
    return short_time_eigenvalues(n_qubits, theta0, gamma_t, b_pairing).negativity


def leading_eigenvalue_short_time(
    n_qubits: int, k: int, theta0: float, gamma_t: float
) -> float:
    """First-order evolution of the t = 0 negative eigenvalue, any partition.

    This is the dominant contribution to the negativity when
    N * theta0**2 << 1.  Returns the (negative) eigenvalue itself.
    """
    _validate_partition(n_qubits, k, theta0)
    if k > n_qubits / 2:
        raise ValueError("k must not exceed N/2")
    if not 0.0 < theta0 < math.pi / 2:
        raise ValueError("theta0 must lie strictly inside (0, pi/2)")
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    c = math.cos(2 * theta0)
    correction = -float(n_qubits)
    for side in (k, n_qubits - k):
        den_plus = 1 + c**side
        den_minus = 1 - c**side
        if abs(den_plus) < _DENOM_EPS or abs(den_minus) < _DENOM_EPS:
            raise ValueError(f"coefficient denominator vanishes on the {side}-qubit side")
        coeff_plus = (c + c ** (side - 1)) / den_plus
        coeff_minus = (c - c ** (side - 1)) / den_minus
        correction += side * coeff_plus * coeff_minus
    lam = t0_spectrum(n_qubits, k, theta0).cross_negative
    return lam * (1 + (gamma_t / 2) * correction)


def small_angle_negativity(
    n_qubits: int, k: int, theta0: float, gamma_t: float
) -> SmallAngleNegativity:
    """sqrt(k (N-k)) theta0**2 (1 - 2 gamma_t) with validity bookkeeping.

    Valid when N*theta0**2 and N*theta0*gamma_t are both small; violations
    are reported as flags, never as errors, because the bounds are
    asymptotic rather than sharp.
    """
    _validate_partition(n_qubits, k, theta0)
    if gamma_t < 0:
        raise ValueError("gamma_t must be nonnegative")
    value = math.sqrt(k * (n_qubits - k)) * theta0**2 * (1 - 2 * gamma_t)
    n_theta0_sq = n_qubits * theta0**2
    n_theta0_gamma_t = n_qubits * theta0 * gamma_t
    flags = []
    if gamma_t > VALID_GAMMA_T:
        flags.append(FLAG_GAMMA_T)
    if n_theta0_sq > VALID_ANGLE_PRODUCT:
        flags.append(FLAG_ANGLE_PRODUCT)
    if n_theta0_gamma_t > VALID_ANGLE_PRODUCT:
        flags.append(FLAG_TIME_PRODUCT)
    return SmallAngleNegativity(
        value=value,
        n_theta0_sq=n_theta0_sq,
        n_theta0_gamma_t=n_theta0_gamma_t,
        flags=tuple(flags),
    )


def asymptotic_negativity() -> float:
    """Negativity in the fully dephased limit: exactly zero."""
    return 0.0
