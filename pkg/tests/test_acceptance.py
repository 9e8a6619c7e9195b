"""Acceptance criteria, one test each, at the stated tolerances."""

import math

import numpy as np
import pytest

from rindler.analysis import (
    critical_p,
    critical_r,
    default_p_grid,
    default_r_grid,
    extremal_beta,
    negativity_gap,
)
from rindler.linalg import eigvalsh, partial_transpose
from rindler.measures import (
    concurrence,
    discord,
    entanglement_of_formation,
    log_negativity,
    oracle_discord,
    xstate_discord,
)
from rindler.states import (
    FIRST,
    R_MAX,
    SECOND,
    closed_form_spectra,
    min_pt_eigenvalue,
    pseudo_entangled,
    reduce_tripartite,
    rho_AI,
    rho_AII,
    rho_III,
    sigma_x_equivalent,
    unruh_channel,
)
from rindler.verify import verify_claims

P65 = default_p_grid(65)
R65 = default_r_grid(65)
GRID21 = [(p, r) for r in np.linspace(0, R_MAX, 21) for p in np.linspace(0, 1, 21)]
FAMILY = {"AI": lambda p, r: rho_AI(p, r), "AII": lambda p, r: rho_AII(p, r), "III": lambda p, r: rho_III(r)}


def test_inertial_threshold(report):
    err = abs(critical_p(0.0, "AI") - 1 / 3)
    assert report(1, "inertial threshold", err <= 1e-9, f"|p_c - 1/3| = {err:.2e}")


def test_infinite_acceleration_threshold(report):
    err_ai = abs(critical_p(R_MAX, "AI") - 3 / 7)
    err_aii = abs(critical_p(R_MAX, "AII") - 3 / 7)
    ok = max(err_ai, err_aii) <= 1e-9
    assert report(2, "infinite-acceleration threshold", ok, f"AI {err_ai:.2e}, AII {err_aii:.2e}")


@pytest.mark.parametrize("p", [0.35, 0.40])
def test_critical_region(report, p):
    r_star = critical_r(p)
    ok = r_star is not None and 0 < r_star < R_MAX
    if ok:
        before = min_pt_eigenvalue("AI", p, r_star - 1e-3)
        after = min_pt_eigenvalue("AI", p, r_star + 1e-3)
        ok = before < 0 < after
    assert report(3, f"critical region p={p}", ok, f"r* = {r_star}")


def test_negativity_coincidence(report):
    gap = max(abs(log_negativity(rho_AI(p, R_MAX)) - log_negativity(rho_AII(p, R_MAX))) for p in P65)
    assert report(4, "endpoint negativity coincidence", gap <= 1e-9, f"max gap {gap:.2e}")


def test_discord_coincidence(report):
    gap = max(abs(discord(rho_AI(p, R_MAX)).discord - discord(rho_AII(p, R_MAX)).discord) for p in P65)
    assert report(5, "endpoint discord coincidence", gap <= 1e-6, f"max gap {gap:.2e}")


def test_inertial_discord(report):
    antirob = max(abs(discord(rho_AII(p, 0.0)).discord) for p in P65)
    werner = max(abs(discord(rho_AI(p, 0.0)).discord - oracle_discord(pseudo_entangled(p)).discord) for p in P65)
    ok = antirob <= 1e-9 and werner <= 1e-4
    assert report(6, "discord at r=0", ok, f"D(A:II) max {antirob:.2e}, D(A:I) vs Werner {werner:.2e}")


@pytest.mark.parametrize("family,sign", [("AI", -1), ("AII", 1), ("III", 1)])
def test_discord_monotonicity(report, family, sign):
    worst = 0.0
    for p in P65:
        d = np.array([discord(FAMILY[family](p, r)).discord for r in R65])
        worst = max(worst, float(np.max(-sign * np.diff(d), initial=0.0)))
        if family == "III":
            break  # independent of p
    label = {"AI": "D(A:I) nonincreasing", "AII": "D(A:II) nondecreasing", "III": "D(I:II) nondecreasing"}[family]
    assert report(7, f"monotonicity {label}", worst <= 1e-9, f"largest violation {worst:.2e}")


def test_oracle_equivalence(report):
    worst, below = 0.0, 0.0
    for family in FAMILY:
        for p, r in GRID21:
            rho = FAMILY[family](p, r)
            fast, slow = xstate_discord(rho).discord, oracle_discord(rho).discord
            worst = max(worst, abs(fast - slow))
            below = max(below, slow - fast)
    ok = worst <= 1e-4 and below <= 1e-9
    assert report(8, "oracle equivalence", ok, f"max |diff| {worst:.2e}, fast below oracle by {below:.2e}")


def test_pipeline_consistency(report):
    entry, spectrum = 0.0, 0.0
    for p, r in GRID21:
        out = unruh_channel(pseudo_entangled(p), r, SECOND)
        for family, keep in (("AI", (0, 1)), ("AII", (0, 2)), ("III", (1, 2))):
            entry = max(entry, np.max(np.abs(reduce_tripartite(out, keep) - FAMILY[family](p, r))))
        for name, rho in (("AI", rho_AI(p, r)), ("AII", rho_AII(p, r))):
            for suffix, m in (("", rho), ("_pt", partial_transpose(rho, (2, 2), 1))):
                closed = np.sort(closed_form_spectra(name + suffix, p, r))
                spectrum = max(spectrum, np.max(np.abs(closed - np.sort(eigvalsh(m)))))
    ok = entry <= 1e-12 and spectrum <= 1e-10
    assert report(9, "pipeline consistency", ok, f"entries {entry:.2e}, spectra {spectrum:.2e}")


def test_equivalence_preservation(report):
    worst = 0.0
    for p, r in GRID21:
        for slot in (FIRST, SECOND):
            a = unruh_channel(pseudo_entangled(p), r, slot)
            b = unruh_channel(sigma_x_equivalent(p), r, slot)
            for keep in ((0, 1), (0, 2), (1, 2)):
                ea = np.sort(eigvalsh(partial_transpose(reduce_tripartite(a, keep), (2, 2), 1)))
                eb = np.sort(eigvalsh(partial_transpose(reduce_tripartite(b, keep), (2, 2), 1)))
                worst = max(worst, np.max(np.abs(ea - eb)))
    assert report(10, "equivalence preservation", worst <= 1e-10, f"max PT spectrum gap {worst:.2e}")


def test_equivalence_breaking(report):
    beta, gap = extremal_beta(R_MAX)
    ends = max(abs(negativity_gap(0.0, R_MAX)), abs(negativity_gap(1.0, R_MAX)))
    ok = abs(beta - 0.80) <= 0.01 and gap > 0 and ends <= 1e-10
    assert report(11, "equivalence breaking", ok, f"beta* = {beta:.6f}, gap {gap:.6f}, endpoints {ends:.1e}")


def _first_positive(values):
    return next((i for i, v in enumerate(values) if v > 0), None)


def test_eof_threshold(report):
    eof = [entanglement_of_formation(rho_AI(p, R_MAX)) for p in P65]
    neg = [log_negativity(rho_AI(p, R_MAX)) for p in P65]
    i_e, i_n = _first_positive(eof), _first_positive(neg)
    same = i_e is not None and i_n is not None and abs(i_e - i_n) <= 1
    wootters = max(abs(concurrence(pseudo_entangled(p)) - max(0.0, (3 * p - 1) / 2)) for p in P65)
    ok = same and wootters <= 1e-10
    assert report(12, "EoF threshold consistency", ok,
                  f"first positive index EoF {i_e}, N {i_n}; concurrence err {wootters:.2e}")


def test_non_conservation(report):
    witness = None
    for p in P65:
        if not 1 / 3 < p < 3 / 7 or log_negativity(pseudo_entangled(p)) <= 0:
            continue
        for r in R65:
            if log_negativity(rho_AI(p, r)) == 0 and log_negativity(rho_AII(p, r)) == 0:
                witness = (float(p), round(float(r), 6))
                break
        if witness:
            break
    claim = verify_claims(["non_conservation"])[0]
    ok = witness is not None and claim.passed
    assert report(13, "non-conservation witness", ok, f"witness (p, r) = {witness}")


def test_discord_asymmetry(report):
    rho = rho_AI(0.7, 0.5)
    diff = abs(oracle_discord(rho, 0).discord - oracle_discord(rho, 1).discord)
    where = "(0.7, 0.5)"
    if diff <= 1e-4:
        for p, r in GRID21:
            rho = rho_AI(p, r)
            diff = abs(oracle_discord(rho, 0).discord - oracle_discord(rho, 1).discord)
            if diff > 1e-4:
                where = f"({p}, {r})"
                break
    assert report(14, "discord asymmetry", diff > 1e-4, f"|D(I:A) - D(A:I)| = {diff:.2e} at {where}")
