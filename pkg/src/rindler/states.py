"""State families and the single-mode fermionic Unruh channel.

Everything is parametrised by the Rindler mixing angle ``r`` in [0, pi/4]:
``r = 0`` is an inertial observer and ``r = pi/4`` infinite acceleration.
Subsystem labels: ``A`` (Alice, inertial), ``I`` (Rob, region I),
``II`` (anti-Rob, region II) and ``B`` (inertial second party).
"""

from __future__ import annotations

import math

import numpy as np

from .exceptions import DomainError
from .linalg import I2, conjugate, partial_trace, projector, validate_density_matrix

R_MAX = math.pi / 4
AB_TOL = 1e-12

PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2)

FIRST, SECOND = 0, 1

SPECTRUM_FAMILIES = ("AI", "AI_pt", "AII", "AII_pt")


def check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    return p


def check_r(r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= R_MAX:
        raise DomainError(f"r must lie in [0, pi/4], got {r}")
    return r


def check_alpha_beta(alpha: float, beta: float) -> tuple[float, float]:
    alpha, beta = float(alpha), float(beta)
    if alpha < 0 or beta < 0:
        raise DomainError(f"alpha and beta must be nonnegative, got ({alpha}, {beta})")
    if abs(2 * alpha**2 + beta**2 - 1) > AB_TOL:
        raise DomainError(f"2 alpha^2 + beta^2 = {2 * alpha**2 + beta**2!r}, expected 1")
    return alpha, beta


def alpha_from_beta(beta: float) -> float:
    """The nonnegative alpha normalising ``alpha (|00> + |11>) + beta |10>``."""
    beta = float(beta)
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [0, 1], got {beta}")
    return math.sqrt((1 - beta * beta) / 2)


def pseudo_entangled(p: float) -> np.ndarray:
    """(1 - p)/4 I + p |Phi+><Phi+|; entangled exactly when p > 1/3."""
    p = check_p(p)
    return (1 - p) / 4 * np.eye(4, dtype=complex) + p * projector(PHI_PLUS)


def sigma_x_equivalent(p: float) -> np.ndarray:
    """(1 - p)/4 I + p |Psi+><Psi+|, the image of pseudo_entangled under I x sigma_x."""
    p = check_p(p)
    return (1 - p) / 4 * np.eye(4, dtype=complex) + p * projector(PSI_PLUS)


def alpha_beta_pure(alpha: float, beta: float, tilde: bool = False) -> np.ndarray:
    """Projector onto alpha(|00> + |11>) + beta|10>.

    With ``tilde`` the state is first mapped by sigma_x on the first qubit,
    giving alpha(|10> + |01>) + beta|00>.
    """
    alpha, beta = check_alpha_beta(alpha, beta)
    if tilde:
        ket = [beta, alpha, alpha, 0.0]
    else:
        ket = [alpha, 0.0, beta, alpha]
    return projector(ket)


def acceleration_to_r(a: float, omega: float) -> float:
    """Mixing angle for proper acceleration ``a`` and mode frequency ``omega`` (c = 1)."""
    a, omega = float(a), float(omega)
    if not (a > 0 and omega > 0):
        raise DomainError(f"acceleration and frequency must be positive, got a={a}, omega={omega}")
    # 1 + exp(-x) with x >= 0 never overflows
    return math.acos(1.0 / math.sqrt(1.0 + math.exp(-2 * math.pi * omega / a)))


def unruh_isometry(r: float) -> np.ndarray:
    """The 4x2 map |0> -> cos r |00> + sin r |11>, |1> -> |10> into (I, II)."""
    r = check_r(r)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def unruh_channel(rho, r: float, slot: int = SECOND) -> np.ndarray:
    """Send one qubit of a two-qubit state to an accelerated observer.

    The accelerated qubit is replaced by the adjacent (region I, region II)
    pair, so ``slot=SECOND`` returns a state on (A, I, II) and
    ``slot=FIRST`` one on (I, II, B).
    """
    rho = validate_density_matrix(rho, dim=4)
    v = unruh_isometry(r)
    if slot == SECOND:
        w = np.kron(I2, v)
    elif slot == FIRST:
        w = np.kron(v, I2)
    else:
        raise DomainError(f"slot must be 0 or 1, got {slot}")
    return conjugate(rho, w)


def rho_AI(p: float, r: float) -> np.ndarray:
    """Alice-Rob state: the Unruh output on (A, I, II) with region II traced out."""
    p, r = check_p(p), check_r(r)
    c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = (1 + p) * c2
    m[1, 1] = 1 + s2 - p * c2
    m[2, 2] = (1 - p) * c2
    m[3, 3] = 1 + s2 + p * c2
    m[0, 3] = m[3, 0] = 2 * p * math.cos(r)
    return m / 4


def rho_AII(p: float, r: float) -> np.ndarray:
    """Alice-antiRob state: region I traced out."""
    p, r = check_p(p), check_r(r)
    c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 1 + c2 - p * s2
    m[1, 1] = (1 + p) * s2
    m[2, 2] = 1 + c2 + p * s2
    m[3, 3] = (1 - p) * s2
    m[1, 2] = m[2, 1] = 2 * p * math.sin(r)
    return m / 4


def rho_III(r: float) -> np.ndarray:
    """Rob-antiRob state: Alice traced out. Independent of p."""
    r = check_r(r)
    c, s = math.cos(r), math.sin(r)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = c * c
    m[2, 2] = 1.0
    m[3, 3] = s * s
    m[0, 3] = m[3, 0] = s * c
    return m / 2


def rho_IB(alpha: float, beta: float, r: float) -> np.ndarray:
    """Region-I / B state of alpha(|00> + |11>) + beta|10> with the first qubit accelerated."""
    alpha, beta = check_alpha_beta(alpha, beta)
    r = check_r(r)
    c, s = math.cos(r), math.sin(r)
    a2, ab = alpha * alpha, alpha * beta
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = a2 * c * c
    m[2, 2] = beta * beta + a2 * s * s
    m[3, 3] = a2
    m[0, 2] = m[2, 0] = ab * c
    m[0, 3] = m[3, 0] = a2 * c
    m[2, 3] = m[3, 2] = ab
    return m


def rho_tilde_IB(alpha: float, beta: float, r: float) -> np.ndarray:
    """As rho_IB for the sigma_x-equivalent state alpha(|10> + |01>) + beta|00>."""
    alpha, beta = check_alpha_beta(alpha, beta)
    r = check_r(r)
    c, s = math.cos(r), math.sin(r)
    a2, b2, ab = alpha * alpha, beta * beta, alpha * beta
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = b2 * c * c
    m[1, 1] = a2 * c * c
    m[2, 2] = a2 + b2 * s * s
    m[3, 3] = a2 * s * s
    m[0, 1] = m[1, 0] = ab * c * c
    m[0, 2] = m[2, 0] = ab * c
    m[1, 2] = m[2, 1] = a2 * c
    m[2, 3] = m[3, 2] = ab * s * s
    return m


def reduce_tripartite(rho8, keep) -> np.ndarray:
    return partial_trace(rho8, (2, 2, 2), keep)


def closed_form_spectra(family: str, p: float, r: float) -> tuple[float, float, float, float]:
    """Closed-form eigenvalues (l1, l2, l3, l4) of rho_AI, rho_AII or their partial transposes.

    ``l2`` of the ``*_pt`` families is the only one that can go negative.
    """
    p, r = check_p(p), check_r(r)
    c2, s2 = math.cos(r) ** 2, math.sin(r) ** 2
    if family == "AI":
        root = math.sqrt(4 * p * p * c2 + s2 * s2)
        vals = (1 + p * c2 + root, 1 + p * c2 - root, 1 - p * c2 + s2, 1 - p * c2 - s2)
    elif family == "AI_pt":
        root = math.sqrt(s2 * s2 + 4 * p * p * c2)
        vals = (1 - p * c2 + root, 1 - p * c2 - root, 1 + p * c2 + s2, 1 + p * c2 - s2)
    elif family == "AII":
        root = math.sqrt(c2 * c2 + 4 * p * p * s2)
        vals = (1 + p * s2 + root, 1 + p * s2 - root, 1 - p * s2 + c2, 1 - p * s2 - c2)
    elif family == "AII_pt":
        root = math.sqrt(c2 * c2 + 4 * p * p * s2)
        vals = (1 - p * s2 + root, 1 - p * s2 - root, 1 + p * s2 + c2, 1 + p * s2 - c2)
    else:
        raise ValueError(f"unknown spectrum family {family!r}; expected one of {SPECTRUM_FAMILIES}")
    return tuple(v / 4 for v in vals)


def min_pt_eigenvalue(family: str, p: float, r: float) -> float:
    """The sign-carrying eigenvalue l2 of the partial transpose of rho_AI or rho_AII."""
    if family not in ("AI", "AII"):
        raise ValueError(f"family must be 'AI' or 'AII', got {family!r}")
    return closed_form_spectra(family + "_pt", p, r)[1]
