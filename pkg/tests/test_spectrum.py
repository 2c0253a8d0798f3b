import logging
import math

import numpy as np
import pytest

from app_config import config
from core.model import ModelParams
from core.spectrum import correlation_spectrum, spectrum_for
from core.toeplitz import SignMatrix, build_sign_matrix, frobenius_from_coefficients
from utils import IntegrityError


def test_single_site_half_filling():
    spec = spectrum_for(1, math.pi / 2)
    np.testing.assert_allclose(spec.values, [0.0], atol=1e-15)
    assert spec.order == 1


def test_two_sites_half_filling():
    spec = spectrum_for(2, math.pi / 2)
    np.testing.assert_allclose(spec.values, [-2.0 / math.pi, 2.0 / math.pi], rtol=1e-14)


@pytest.mark.parametrize('L', [5, 50, 200])
@pytest.mark.parametrize('h', [0.0, 1.0, 1.7])
def test_spectrum_bounds_and_sum_rules(L, h):
    k_F = ModelParams(h=h, L=L).k_F
    G = build_sign_matrix(L, k_F)
    spec = correlation_spectrum(G)

    assert np.all(np.abs(spec.values) <= 1.0)
    assert np.all(np.diff(spec.values) >= 0.0)
    np.testing.assert_allclose(spec.trace, L * G.first_row[0], atol=1e-10 * L)
    np.testing.assert_allclose(spec.second_moment, frobenius_from_coefficients(G.first_row),
                               atol=1e-10 * L)


def test_values_are_read_only():
    spec = spectrum_for(4, 1.0)
    with pytest.raises(ValueError):
        spec.values[0] = 0.0


def test_source_recovers_field():
    params = ModelParams(h=1.2, L=6)
    spec = spectrum_for(params.L, params.k_F)
    order, field = spec.source
    assert order == 6
    np.testing.assert_allclose(field, 1.2, rtol=1e-14)


def _one_by_one(value):
    row = np.array([value])
    return SignMatrix(order=1, k_F=math.pi / 2, first_row=row, dense=row.reshape(1, 1))


def test_small_overshoot_is_clamped():
    spec = correlation_spectrum(_one_by_one(1.0 + 1e-10))
    assert spec.values[0] == 1.0
    assert len(spec.clamp_log) == 1
    assert spec.clamp_log[0][0] == 0


def test_large_overshoot_raises():
    with pytest.raises(IntegrityError):
        correlation_spectrum(_one_by_one(1.0 + 1e-6))


def test_asymmetric_matrix_raises():
    dense = np.array([[0.0, 0.1], [0.2, 0.0]])
    G = SignMatrix(order=2, k_F=math.pi / 2, first_row=np.array([0.0, 0.1]), dense=dense)
    with pytest.raises(IntegrityError):
        correlation_spectrum(G)


def test_spectrum_symmetric_at_zero_field():
    # g_0 = 0 and the chessboard sign flip maps G to -G
    values = spectrum_for(40, math.pi / 2).values
    np.testing.assert_allclose(values, -values[::-1], atol=1e-13)


def test_routine_clamping_is_quiet(caplog):
    spec = spectrum_for(400, math.pi / 2)
    assert spec.clamp_log
    assert max(excess for _, excess in spec.clamp_log) <= config.spectrum.clamp_warn_tol
    with caplog.at_level(logging.WARNING, logger="core.spectrum"):
        spectrum_for(400, math.pi / 2)
    assert not [r for r in caplog.records if r.name == "core.spectrum"]


def test_unusual_overshoot_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="core.spectrum"):
        correlation_spectrum(_one_by_one(1.0 + 1e-9))
    assert any("Clamped" in r.getMessage() for r in caplog.records if r.levelno == logging.WARNING)


def test_clamped_overshoot_stays_within_tolerance():
    # rounding pins eigenvalues onto +-1; max|nu| < 1 - 1e-12 is not attainable in float64
    spec = spectrum_for(400, math.pi / 2)
    assert len(spec.clamp_log) > 0
    assert all(0.0 < excess <= config.spectrum.clamp_tol for _, excess in spec.clamp_log)
    assert np.all(np.abs(spec.values) <= 1.0)
