"""Entanglement and correlation measures for two-qubit states.

Discord is directional. ``measured_side`` names the qubit that carries the
projective measurement: ``1`` (the default) measures the second factor,
giving D(A:B); ``0`` measures the first, giving D(B:A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._search import golden_section
from .exceptions import DomainError, NotXStateError, NumericalError
from .linalg import (
    PSD_TOL,
    SIGMA_Y,
    entropy_of_spectrum,
    hermitian_eigen,
    partial_trace,
    partial_transpose,
    swap_qubits,
    tensor_product,
    validate_density_matrix,
)

DISCORD_CLAMP = 1e-9
MIN_OUTCOME_PROB = 1e-14
X_TOL = 1e-12
SPIN_FLIP_FLOOR = 64 * np.finfo(float).eps
DEFAULT_RESOLUTION = (64, 128)
REFINE_TOL = 1e-8
REFINE_MAX_LINE_SEARCHES = 200

_YY = tensor_product(SIGMA_Y, SIGMA_Y)


def _state(rho) -> np.ndarray:
    return validate_density_matrix(rho, dim=4)


def _entropy(m: np.ndarray) -> float:
    return entropy_of_spectrum(np.clip(hermitian_eigen(m).values, 0.0, None))


def _oriented(rho: np.ndarray, measured_side: int) -> np.ndarray:
    """Arrange ``rho`` so the measured qubit is the second factor."""
    if measured_side == 1:
        return rho
    if measured_side == 0:
        return swap_qubits(rho)
    raise ValueError(f"measured_side must be 0 or 1, got {measured_side}")


# -- entanglement ----------------------------------------------------------


def log_negativity(rho, transpose_side: int = 1) -> float:
    """N(rho) = log2 of the trace norm of the partial transpose, in ebits.

    Partial-transpose eigenvalues within 1e-10 below zero count as zero, so
    PPT states give exactly 0.
    """
    rho = _state(rho)
    values = hermitian_eigen(partial_transpose(rho, (2, 2), transpose_side)).values
    negative = -values[values < -PSD_TOL].sum()
    return math.log2(1.0 + 2.0 * negative)


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    values, vectors = hermitian_eigen(m, vectors=True)
    root = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * root) @ vectors.conj().T


def concurrence(rho) -> float:
    """Wootters concurrence.

    The spin-flip spectrum is taken from the Hermitian matrix
    sqrt(rho) R sqrt(rho), R = (sy x sy) rho* (sy x sy), whose eigenvalues
    equal those of rho R.
    """
    rho = _state(rho)
    root = _psd_sqrt(rho)
    flipped = _YY @ rho.conj() @ _YY
    m = root @ flipped @ root
    m = (m + m.conj().T) / 2
    values = hermitian_eigen(m).values
    # eigenvalues at roundoff level would otherwise turn into ~1e-8 after the root
    values[values < SPIN_FLIP_FLOOR * max(values[0], 1.0)] = 0.0
    lam = np.sqrt(values)
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def eof_from_concurrence(c: float) -> float:
    if not -1e-12 <= c <= 1 + 1e-12:
        raise DomainError(f"concurrence must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    x = (1 + math.sqrt(1 - c * c)) / 2
    return entropy_of_spectrum((x, 1 - x))


def entanglement_of_formation(rho) -> float:
    return eof_from_concurrence(concurrence(rho))


# -- mutual information and measured conditional entropy -------------------


def mutual_information(rho) -> float:
    rho = _state(rho)
    s_a = _entropy(partial_trace(rho, (2, 2), [0]))
    s_b = _entropy(partial_trace(rho, (2, 2), [1]))
    return s_a + s_b - _entropy(rho)


@dataclass(frozen=True)
class MeasurementPoint:
    """Projective qubit measurement onto |v0>, |v1>, with
    |v0> = cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>.

    In the SU(2) coordinates used for X-states, kappa = cos^2(theta/2) is the
    weight of |0> in |v0> and mu = kappa (1 - kappa) sin^2(phi).
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise DomainError(f"phi must lie in [0, 2 pi), got {self.phi}")

    @classmethod
    def from_appendix(cls, kappa: float, mu: float = 0.0) -> "MeasurementPoint":
        if not 0.0 <= kappa <= 1.0:
            raise DomainError(f"kappa must lie in [0, 1], got {kappa}")
        kl = kappa * (1 - kappa)
        if not 0.0 <= mu <= kl + 1e-12:
            raise DomainError(f"mu must lie in [0, kappa (1 - kappa)] = [0, {kl}], got {mu}")
        theta = 2 * math.acos(math.sqrt(kappa))
        phi = math.asin(math.sqrt(min(1.0, mu / kl))) if kl > 0 else 0.0
        return cls(theta, phi)

    @property
    def kappa(self) -> float:
        return math.cos(self.theta / 2) ** 2

    @property
    def ell(self) -> float:
        return 1 - self.kappa

    @property
    def mu(self) -> float:
        return self.kappa * self.ell * math.sin(self.phi) ** 2

    def basis(self) -> tuple[np.ndarray, np.ndarray]:
        c = math.cos(self.theta / 2)
        s = math.sin(self.theta / 2) * complex(math.cos(self.phi), math.sin(self.phi))
        return np.array([c, s]), np.array([-s.conjugate(), c])


def _xlogx(x):
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    return np.where(x > 0, x * np.log2(safe), 0.0)


def _conditional_entropy(rho: np.ndarray, theta, phi):
    """S(A|B) after measuring B along (theta, phi); broadcasts over angle arrays."""
    t = rho.reshape(2, 2, 2, 2)
    c = np.cos(np.asarray(theta) / 2)
    s = np.sin(np.asarray(theta) / 2) * np.exp(1j * np.asarray(phi))
    total = 0.0
    for v0, v1 in ((c, s), (-np.conj(s), c)):
        w = ((np.conj(v0) * v0, np.conj(v0) * v1), (np.conj(v1) * v0, np.conj(v1) * v1))

        def block(a, a2):
            return sum(w[b][b2] * t[a, b, a2, b2] for b in range(2) for b2 in range(2))

        m00, m11, m01 = block(0, 0).real, block(1, 1).real, block(0, 1)
        pk = m00 + m11
        gap = np.sqrt((m00 - m11) ** 2 + 4 * np.abs(m01) ** 2)
        hi, lo = (pk + gap) / 2, np.clip((pk - gap) / 2, 0.0, None)
        branch = _xlogx(pk) - _xlogx(hi) - _xlogx(lo)
        total = total + np.where(pk < MIN_OUTCOME_PROB, 0.0, branch)
    return total


def _conditional_entropy_scalar(blocks, theta: float, phi: float) -> float:
    """Pure-Python twin of _conditional_entropy for one angle pair.

    ``blocks[b][b2]`` is the 2x2 operator <b|rho|b2> on the unmeasured qubit,
    as nested lists.
    """
    c = math.cos(theta / 2)
    s = math.sin(theta / 2) * complex(math.cos(phi), math.sin(phi))
    total = 0.0
    for v0, v1 in ((c, s), (-s.conjugate(), c)):
        v = (v0, v1)
        m = [[0j, 0j], [0j, 0j]]
        for b in range(2):
            for b2 in range(2):
                w = v[b].conjugate() * v[b2]
                blk = blocks[b][b2]
                m[0][0] += w * blk[0][0]
                m[1][1] += w * blk[1][1]
                m[0][1] += w * blk[0][1]
        m00, m11 = m[0][0].real, m[1][1].real
        pk = m00 + m11
        if pk < MIN_OUTCOME_PROB:
            continue
        gap = math.sqrt((m00 - m11) ** 2 + 4 * abs(m[0][1]) ** 2)
        hi, lo = (pk + gap) / 2, max((pk - gap) / 2, 0.0)
        total += pk * math.log2(pk)
        for x in (hi, lo):
            if x > 0:
                total -= x * math.log2(x)
    return total


def _measured_blocks(rho: np.ndarray):
    t = rho.reshape(2, 2, 2, 2)
    return [[t[:, b, :, b2].tolist() for b2 in range(2)] for b in range(2)]


def measured_conditional_entropy(rho, point: MeasurementPoint, measured_side: int = 1) -> float:
    """sum_k p_k S(rho_{A|k}) for the projective measurement ``point`` on ``measured_side``."""
    rho = _oriented(_state(rho), measured_side)
    return float(_conditional_entropy(rho, point.theta, point.phi))


# -- X-state fast path -----------------------------------------------------


def is_real_x_state(rho, tol: float = X_TOL) -> bool:
    a = np.asarray(rho)
    if a.shape != (4, 4):
        return False
    mask = np.ones((4, 4), dtype=bool)
    mask[[0, 1, 2, 3], [0, 1, 2, 3]] = False
    mask[[0, 1, 2, 3], [3, 2, 1, 0]] = False
    return bool(
        np.abs(a[mask]).max() <= tol
        and np.abs(np.imag(a)).max() <= tol
        and np.abs(a - a.T).max() <= tol
    )


def xstate_conditional_entropy(rho_x, kappa: float, mu: float) -> float:
    """Conditional entropy of a real symmetric X-state in SU(2) coordinates.

    ``kappa`` is the weight of |0> in the first measurement vector and
    ``mu`` in [0, 1/4] the phase-sensitive coordinate; the value depends on
    the measurement only through these two numbers.
    """
    if not is_real_x_state(rho_x):
        raise NotXStateError("expected a real symmetric X-shaped 4x4 matrix")
    if not 0.0 <= kappa <= 1.0:
        raise DomainError(f"kappa must lie in [0, 1], got {kappa}")
    if not 0.0 <= mu <= 0.25:
        raise DomainError(f"mu must lie in [0, 1/4], got {mu}")
    a = np.real(np.asarray(rho_x))
    r11, r22, r33, r44 = a[0, 0], a[1, 1], a[2, 2], a[3, 3]
    r14, r23 = a[0, 3], a[1, 2]
    ell = 1 - kappa
    cross = 4 * kappa * ell * (r14 + r23) ** 2 - 16 * mu * r14 * r23
    p0 = (r22 + r44) * ell + (r11 + r33) * kappa
    branches = (
        (p0, (r11 - r33) * kappa + (r22 - r44) * ell),
        (1 - p0, (r11 - r33) * ell + (r22 - r44) * kappa),
    )
    total = 0.0
    for pk, diff in branches:
        if pk < MIN_OUTCOME_PROB:
            continue
        theta = min(1.0, math.sqrt(max(diff * diff + cross, 0.0)) / pk)
        total += pk * entropy_of_spectrum(((1 + theta) / 2, (1 - theta) / 2))
    return total


# candidates in tie-break order: middle point first, mu = 0 before mu = 1/4
XSTATE_CANDIDATES = ((0.5, 0.0), (0.5, 0.25), (1.0, 0.0), (0.0, 0.0))


@dataclass(frozen=True)
class DiscordResult:
    mutual_information: float
    classical_correlation: float
    discord: float
    argmin: MeasurementPoint
    method: str
    min_conditional_entropy: float
    measured_side: int = 1


def _discord_result(rho: np.ndarray, min_s: float, point: MeasurementPoint, method: str,
                    measured_side: int) -> DiscordResult:
    # rho is oriented: measured qubit second
    s_unmeasured = _entropy(partial_trace(rho, (2, 2), [0]))
    s_measured = _entropy(partial_trace(rho, (2, 2), [1]))
    s_joint = _entropy(rho)
    mi = s_unmeasured + s_measured - s_joint
    d = s_measured - s_joint + min_s
    if d < -DISCORD_CLAMP:
        raise NumericalError(f"discord {d:.3e} is below the clamp window; minimisation is inconsistent")
    d = max(d, 0.0)
    return DiscordResult(mi, mi - d, d, point, method, min_s, measured_side)


def xstate_discord(rho_x, measured_side: int = 1) -> DiscordResult:
    """Discord of a real symmetric X-state from the four-point candidate set."""
    rho = _state(rho_x)
    if not is_real_x_state(rho):
        raise NotXStateError("expected a real symmetric X-shaped 4x4 matrix")
    work = _oriented(rho, measured_side)
    best = None
    for kappa, mu in XSTATE_CANDIDATES:
        value = xstate_conditional_entropy(work, kappa, mu)
        if best is None or value < best[0] - 1e-15:
            best = (value, kappa, mu)
    value, kappa, mu = best
    point = MeasurementPoint.from_appendix(kappa, mu)
    return _discord_result(work, value, point, "xstate_fast", measured_side)


def oracle_discord(rho, measured_side: int = 1, resolution=DEFAULT_RESOLUTION) -> DiscordResult:
    """Discord by exhaustive search over projective measurements.

    A (theta, phi) grid of ``resolution`` points is scanned, then the best
    grid point is polished by alternating golden-section line searches in
    theta and phi until both move less than 1e-8.
    """
    rho = _state(rho)
    work = _oriented(rho, measured_side)
    n_theta, n_phi = (resolution, 2 * resolution) if np.isscalar(resolution) else resolution
    if n_theta < 2 or n_phi < 1:
        raise ValueError(f"resolution too small: {resolution}")
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.arange(n_phi) * (2 * math.pi / n_phi)
    grid = _conditional_entropy(work, thetas[:, None], phis[None, :])
    i, j = np.unravel_index(np.argmin(grid), grid.shape)
    theta, phi, best = float(thetas[i]), float(phis[j]), float(grid[i, j])

    blocks = _measured_blocks(work)
    h_theta, h_phi = math.pi / (n_theta - 1), 2 * math.pi / n_phi
    searches = 0
    while searches < REFINE_MAX_LINE_SEARCHES:
        # a move is taken only on strict improvement, so flat directions settle
        x, val = golden_section(lambda t: _conditional_entropy_scalar(blocks, t, phi),
                                max(0.0, theta - h_theta), min(math.pi, theta + h_theta), REFINE_TOL)
        moved = 0.0
        if val < best:
            moved, theta, best = abs(x - theta), x, val
        x, val = golden_section(lambda f: _conditional_entropy_scalar(blocks, theta, f),
                                phi - h_phi, phi + h_phi, REFINE_TOL)
        if val < best:
            moved, phi, best = max(moved, abs(x - phi)), x, val
        searches += 2
        if moved < REFINE_TOL:
            break

    point = MeasurementPoint(theta, phi % (2 * math.pi))
    return _discord_result(work, best, point, "oracle", measured_side)


def discord(rho, measured_side: int = 1, force_oracle: bool = False,
            resolution=DEFAULT_RESOLUTION) -> DiscordResult:
    """Quantum discord with projective measurements on ``measured_side``.

    Real symmetric X-states go through the closed-form candidate search;
    anything else, or ``force_oracle=True``, goes through the grid oracle.
    """
    rho = _state(rho)
    if not force_oracle and is_real_x_state(rho):
        return xstate_discord(rho, measured_side)
    return oracle_discord(rho, measured_side, resolution)
