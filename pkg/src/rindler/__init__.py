"""Entanglement and quantum discord of pseudo-entangled qubit pairs seen by an
accelerated observer (single-mode fermionic Unruh channel)."""

__version__ = "0.1.0"

from .linalg import (  # noqa: E402
    hermitian_eigen,
    partial_trace,
    partial_transpose,
    tensor_product,
    von_neumann_entropy,
)
from .states import (  # noqa: E402
    acceleration_to_r,
    alpha_beta_pure,
    closed_form_spectra,
    pseudo_entangled,
    rho_AI,
    rho_AII,
    rho_III,
    rho_IB,
    rho_tilde_IB,
    sigma_x_equivalent,
    unruh_channel,
)
from .measures import (  # noqa: E402
    DiscordResult,
    MeasurementPoint,
    concurrence,
    discord,
    entanglement_of_formation,
    log_negativity,
    measured_conditional_entropy,
    mutual_information,
    oracle_discord,
    xstate_conditional_entropy,
    xstate_discord,
)
from .analysis import SweepSpec, SweepTable, critical_p, critical_r, extremal_beta, run_sweep  # noqa: E402
from .verify import ClaimResult, verify_claims  # noqa: E402
