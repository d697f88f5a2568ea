"""Tests for the closed-form negativity results."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catneg.analytic import (
    FLAG_ANGLE_PRODUCT,
    FLAG_GAMMA_T,
    B_PAIRING_MIXED,
    B_PAIRING_PLUS,
    DEFAULT_B_PAIRING,
    asymptotic_negativity,
    leading_eigenvalue_short_time,
    short_time_eigenvalues,
    short_time_negativity,
    small_angle_negativity,
    t0_eigenvectors,
    t0_spectrum,
)
from catneg.channels import KIND_DEPHASING, ChannelSpec, evolve_cat
from catneg.negativity import PartitionSpec, negativity, partial_transpose
from catneg.states import CatStateSpec, cat_state, density_from_state


def numeric_negativity(n, k, theta0, gamma_t):
    rho = evolve_cat(CatStateSpec(n, theta0), ChannelSpec(KIND_DEPHASING, gamma_t))
    return negativity(rho, PartitionSpec.first_k(n, k)).value


def test_t0_spectrum_orthogonal_branches():
    spectrum = t0_spectrum(6, 2, math.pi / 4)
    assert spectrum.plus_plus == pytest.approx(0.5, abs=1e-15)
    assert spectrum.minus_minus == pytest.approx(0.5, abs=1e-15)
    assert spectrum.cross_positive == pytest.approx(0.5, abs=1e-15)
    assert spectrum.cross_negative == pytest.approx(-0.5, abs=1e-15)


def test_t0_spectrum_product_state():
    spectrum = t0_spectrum(5, 2, 0.0)
    assert spectrum.values == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-15)


def test_t0_spectrum_reference_point():
    spectrum = t0_spectrum(10, 1, math.pi / 3)
    c = math.cos(2 * math.pi / 3)
    exact = math.sqrt((1 - c**2) * (1 - c**18)) / (2 * (1 + c**10))
    assert spectrum.negativity == pytest.approx(exact, abs=1e-15)
    assert spectrum.cross_negative == pytest.approx(-0.432590, abs=2e-6)


def test_t0_spectrum_validation():
    with pytest.raises(ValueError):
        t0_spectrum(1, 1, 0.3)
    with pytest.raises(ValueError):
        t0_spectrum(5, 0, 0.3)
    with pytest.raises(ValueError):
        t0_spectrum(5, 5, 0.3)
    with pytest.raises(ValueError):
        t0_spectrum(5, 2, -0.1)


@settings(deadline=None, max_examples=60)
@given(
    n=st.integers(2, 12),
    k_frac=st.floats(0, 1),
    theta0=st.floats(0.0, math.pi / 2),
)
def test_t0_spectrum_invariants(n, k_frac, theta0):
    k = 1 + round(k_frac * (n - 2))
    spectrum = t0_spectrum(n, k, theta0)
    assert sum(spectrum.values) == pytest.approx(1.0, abs=1e-12)
    assert spectrum.cross_positive == pytest.approx(-spectrum.cross_negative, abs=1e-15)
    assert spectrum.plus_plus >= 0 and spectrum.minus_minus >= 0
    assert spectrum.cross_negative <= 0


def test_t0_oracle_agreement_sample():
    for n, k, theta0 in (
        (2, 1, 0.5),
        (5, 2, 1.4),
        (8, 3, 0.1),
        (8, 4, math.pi / 3),
    ):
        assert numeric_negativity(n, k, theta0, 0.0) == pytest.approx(
            t0_spectrum(n, k, theta0).negativity, abs=1e-9
        )


def test_t0_eigenvectors_satisfy_eigen_equation():
    n, k, theta0 = 4, 2, math.pi / 3
    rho = density_from_state(cat_state(CatStateSpec(n, theta0)))
    pt = partial_transpose(rho, PartitionSpec.first_k(n, k))
    spectrum = t0_spectrum(n, k, theta0)
    vectors = t0_eigenvectors(n, k, theta0)
    for value, vector in zip(spectrum.values, vectors):
        assert np.linalg.norm(pt @ vector - value * vector) < 1e-10
        assert np.linalg.norm(vector) == pytest.approx(1.0, abs=1e-12)


def test_t0_eigenvectors_are_orthonormal():
    vectors = np.array(t0_eigenvectors(5, 2, 0.9))
    gram = vectors.conj() @ vectors.T
    np.testing.assert_allclose(gram, np.eye(4), atol=1e-12)


def test_t0_eigenvectors_degenerate_normalization_rejected():
    with pytest.raises(ValueError, match="sign '-'"):
        t0_eigenvectors(4, 2, 0.0)


def test_short_time_reduces_to_initial_negativity():
    for n in (4, 7, 10):
        for theta0 in (0.3, math.pi / 4, 1.3):
            result = short_time_eigenvalues(n, theta0, 0.0)
            lam = t0_spectrum(n, 1, theta0).cross_negative
            assert result.leading == pytest.approx(lam, abs=1e-12)
            assert result.subleading == pytest.approx(0.0, abs=1e-12)
            assert result.degenerate == pytest.approx(0.0, abs=1e-12)
            assert result.sum_coeff == pytest.approx(1.0, abs=1e-12)
            assert result.product_coeff == pytest.approx(0.0, abs=1e-12)
            assert result.negativity == pytest.approx(-lam, abs=1e-12)


def test_short_time_validation():
    with pytest.raises(ValueError):
        short_time_negativity(3, 0.5, 0.01)
    with pytest.raises(ValueError):
        short_time_negativity(6, 0.5, -0.01)
    with pytest.raises(ValueError):
        short_time_negativity(6, 0.5, 0.01, b_pairing="both")


def test_short_time_validity_flag():
    assert short_time_eigenvalues(6, 0.5, 0.05).flags == ()
    assert FLAG_GAMMA_T in short_time_eigenvalues(6, 0.5, 0.2).flags


def test_short_time_tracks_exact_negativity():
    # Light version of the acceptance sweep: a few points, same regime.
    for gamma_t in (0.005, 0.01, 0.02):
        exact = numeric_negativity(10, 1, math.pi / 3, gamma_t)
        approx = short_time_negativity(10, math.pi / 3, gamma_t)
        assert approx == pytest.approx(exact, rel=0.01)


def test_short_time_both_pairings_evaluable():
    assert DEFAULT_B_PAIRING == B_PAIRING_PLUS
    for pairing in (B_PAIRING_PLUS, B_PAIRING_MIXED):
        value = short_time_negativity(8, 1.0, 0.01, b_pairing=pairing)
        assert math.isfinite(value) and value > 0


def test_short_time_orthogonal_branch_discriminant_is_clamped():
    # At theta0 = pi/4 the discriminant is an exact square; rounding must
    # not push it negative.  The value collapses to (1 - gamma_t)/2 there.
    for n in (4, 6, 8):
        value = short_time_negativity(n, math.pi / 4, 0.08)
        assert value == pytest.approx((1 - 0.08) / 2, abs=1e-12)


def test_leading_eigenvalue_at_zero_time():
    for n, k, theta0 in ((4, 2, 0.7), (9, 4, 1.2)):
        lam = t0_spectrum(n, k, theta0).cross_negative
        assert leading_eigenvalue_short_time(n, k, theta0, 0.0) == pytest.approx(
            lam, abs=1e-14
        )


def test_leading_eigenvalue_validation():
    with pytest.raises(ValueError):
        leading_eigenvalue_short_time(6, 4, 0.5, 0.01)
    with pytest.raises(ValueError):
        leading_eigenvalue_short_time(6, 1, 0.0, 0.01)
    with pytest.raises(ValueError):
        leading_eigenvalue_short_time(6, 1, math.pi / 2, 0.01)
    with pytest.raises(ValueError):
        leading_eigenvalue_short_time(6, 1, 0.5, -0.01)


def test_leading_eigenvalue_matches_short_time_internals():
    # For the {1, N-1} partition the general-partition expression is the
    # first-order expansion of the leading root.
    for n, theta0 in ((10, math.pi / 3), (6, 0.5)):
        general = leading_eigenvalue_short_time(n, 1, theta0, 1e-4)
        internal = short_time_eigenvalues(n, theta0, 1e-4).leading
        assert general == pytest.approx(internal, rel=1e-6)


def test_leading_eigenvalue_small_angle_limit():
    value = -leading_eigenvalue_short_time(10, 5, 0.02, 0.01)
    assert value == pytest.approx(5 * 0.02**2 * 0.98, rel=5e-3)


def test_small_angle_examples():
    result = small_angle_negativity(10, 1, 0.01, 0.0)
    assert result.value == pytest.approx(3e-4, abs=1e-15)
    assert result.flags == ()
    assert result.n_theta0_sq == pytest.approx(1e-3)
    assert result.n_theta0_gamma_t == 0.0


def test_small_angle_maximized_at_half_partition():
    values = {k: small_angle_negativity(10, k, 0.02, 0.01).value for k in range(1, 6)}
    assert max(values, key=values.get) == 5


def test_small_angle_root_is_flagged_not_rejected():
    result = small_angle_negativity(6, 2, 0.02, 0.5)
    assert result.value == pytest.approx(0.0, abs=1e-15)
    assert FLAG_GAMMA_T in result.flags


def test_small_angle_regime_flags():
    assert FLAG_ANGLE_PRODUCT in small_angle_negativity(10, 2, 0.5, 0.0).flags
    with pytest.raises(ValueError):
        small_angle_negativity(10, 2, 0.02, -0.1)


def test_small_angle_slope_matches_exact_finite_difference():
    n, k, theta0 = 6, 1, 0.04
    step = 1e-4
    slope = (
        numeric_negativity(n, k, theta0, step) - numeric_negativity(n, k, theta0, 0.0)
    ) / step
    predicted = -2 * math.sqrt(k * (n - k)) * theta0**2
    assert slope == pytest.approx(predicted, rel=0.05)


def test_small_angle_consistency_chain():
    # Exact numerics and the leading-eigenvalue form both approach the
    # small-angle law as theta0 shrinks.
    deviations = []
    for theta0 in (0.02, 0.01, 0.005):
        law = small_angle_negativity(8, 2, theta0, 0.01).value
        exact = numeric_negativity(8, 2, theta0, 0.01)
        leading = -leading_eigenvalue_short_time(8, 2, theta0, 0.01)
        deviations.append((abs(exact / law - 1), abs(leading / law - 1)))
    for (coarse, _), (fine, _) in zip(deviations, deviations[1:]):
        assert fine < coarse
    assert deviations[-1][0] < 1e-3
    assert deviations[-1][1] < 1e-4


def test_asymptotic_negativity():
    assert asymptotic_negativity() == 0.0
    assert numeric_negativity(4, 1, math.pi / 3, 30.0) < 1e-10


def test_short_time_is_n_independent_for_orthogonal_branches():
    # With orthogonal branches the closed form collapses to (1 - gamma_t)/2
    # for every qubit number; the exact negativity does not share this
    # property beyond first order in gamma_t.
    values = [short_time_negativity(n, math.pi / 4, 0.1) for n in range(4, 9)]
    assert max(values) - min(values) < 1e-12
