import math

import numpy as np
import pytest

from rindler.exceptions import DomainError, NotAStateError
from rindler.linalg import I2, SIGMA_X, conjugate, eigvalsh, partial_transpose, projector, validate_density_matrix
from rindler.states import (
    FIRST,
    R_MAX,
    SECOND,
    acceleration_to_r,
    alpha_beta_pure,
    alpha_from_beta,
    closed_form_spectra,
    min_pt_eigenvalue,
    pseudo_entangled,
    reduce_tripartite,
    rho_AI,
    rho_AII,
    rho_IB,
    rho_III,
    rho_tilde_IB,
    sigma_x_equivalent,
    unruh_channel,
    unruh_isometry,
)

GRID = [(p, r) for r in np.linspace(0, R_MAX, 21) for p in np.linspace(0, 1, 21)]
BETAS = np.linspace(0, 1, 11)


def test_pseudo_entangled_examples():
    np.testing.assert_allclose(pseudo_entangled(0), np.eye(4) / 4)
    bell = pseudo_entangled(1)
    assert bell[0, 0] == bell[0, 3] == bell[3, 3] == pytest.approx(0.5)
    x = np.kron(I2, SIGMA_X)
    for p in (0.0, 0.3, 1.0):
        np.testing.assert_allclose(conjugate(pseudo_entangled(p), x), sigma_x_equivalent(p), atol=1e-15)
    with pytest.raises(DomainError):
        pseudo_entangled(1.2)


def test_isometry():
    for r in (0.0, 0.3, R_MAX):
        v = unruh_isometry(r)
        np.testing.assert_allclose(v.conj().T @ v, np.eye(2), atol=1e-15)
    with pytest.raises(DomainError):
        unruh_isometry(1.0)


def test_closed_forms_match_channel():
    for p, r in GRID:
        out = unruh_channel(pseudo_entangled(p), r, SECOND)
        assert np.trace(out) == pytest.approx(1.0)
        np.testing.assert_allclose(reduce_tripartite(out, (0, 1)), rho_AI(p, r), atol=1e-12)
        np.testing.assert_allclose(reduce_tripartite(out, (0, 2)), rho_AII(p, r), atol=1e-12)
        np.testing.assert_allclose(reduce_tripartite(out, (1, 2)), rho_III(r), atol=1e-12)


@pytest.mark.parametrize("r", [0.0, 0.2, 0.5, R_MAX])
def test_ib_closed_forms_match_channel(r):
    for beta in BETAS:
        alpha = alpha_from_beta(beta)
        for tilde, closed in ((False, rho_IB), (True, rho_tilde_IB)):
            out = unruh_channel(alpha_beta_pure(alpha, beta, tilde), r, FIRST)
            np.testing.assert_allclose(reduce_tripartite(out, (0, 2)), closed(alpha, beta, r), atol=1e-12)
            validate_density_matrix(closed(alpha, beta, r))


def test_spectra_match_eigensolver():
    for p, r in GRID:
        for name, rho in (("AI", rho_AI(p, r)), ("AII", rho_AII(p, r))):
            np.testing.assert_allclose(np.sort(closed_form_spectra(name, p, r)), np.sort(eigvalsh(rho)), atol=1e-10)
            pt = partial_transpose(rho, (2, 2), 1)
            np.testing.assert_allclose(np.sort(closed_form_spectra(name + "_pt", p, r)), np.sort(eigvalsh(pt)),
                                       atol=1e-10)
            assert min_pt_eigenvalue(name, p, r) == pytest.approx(min(eigvalsh(pt)), abs=1e-10)


def test_spectra_examples():
    assert closed_form_spectra("AI_pt", 1 / 3, 0)[1] == pytest.approx(0, abs=1e-15)
    assert closed_form_spectra("AI_pt", 3 / 7, R_MAX)[1] == pytest.approx(0, abs=1e-15)
    assert closed_form_spectra("AII_pt", 3 / 7, R_MAX)[1] == pytest.approx(0, abs=1e-15)
    assert closed_form_spectra("AII_pt", 0.9, 0)[1] == 0
    with pytest.raises(ValueError):
        closed_form_spectra("III", 0.5, 0.1)


def test_rho_iii_is_pure_and_p_free():
    for r in (0.0, 0.4, R_MAX):
        vals = eigvalsh(rho_III(r))
        assert vals[0] == pytest.approx(0.5) and vals[1] == pytest.approx(0.5)


def test_alpha_beta_checks():
    assert alpha_from_beta(1.0) == 0.0
    assert alpha_from_beta(0.0) == pytest.approx(1 / math.sqrt(2))
    psi = alpha_beta_pure(0.5, math.sqrt(0.5))
    np.testing.assert_allclose(psi @ psi, psi, atol=1e-15)
    with pytest.raises(DomainError):
        alpha_beta_pure(0.6, 0.6)
    with pytest.raises(DomainError):
        rho_IB(-0.5, math.sqrt(0.5), 0.1)


def test_acceleration_to_r():
    assert acceleration_to_r(1e-6, 1.0) == pytest.approx(0.0, abs=1e-12)
    assert acceleration_to_r(1e12, 1.0) == pytest.approx(R_MAX, abs=1e-9)
    # a = 2 pi omega gives cos r = (1 + e^-1)^(-1/2)
    assert math.cos(acceleration_to_r(2 * math.pi, 1.0)) == pytest.approx((1 + math.exp(-1)) ** -0.5)
    assert acceleration_to_r(1e-300, 1.0) == 0.0
    for bad in ((0, 1), (-1, 1), (1, 0)):
        with pytest.raises(DomainError):
            acceleration_to_r(*bad)


def test_channel_errors():
    with pytest.raises(NotAStateError):
        unruh_channel(np.eye(4), 0.1)
    with pytest.raises(DomainError):
        unruh_channel(pseudo_entangled(0.5), 0.1, slot=3)
    np.testing.assert_allclose(unruh_channel(projector([1, 0, 0, 0]), 0.0, SECOND)[0, 0], 1.0)
