"""Quantitative checks of the threshold, coincidence, monotonicity and
equivalence claims, each reported as a :class:`ClaimResult`."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .analysis import (
    DEFAULT_POINTS,
    SweepSpec,
    critical_p,
    critical_r,
    default_p_grid,
    default_r_grid,
    extremal_beta,
    negativity_gap,
    run_sweep,
)
from .linalg import eigvalsh, partial_transpose
from .measures import concurrence, discord, entanglement_of_formation, log_negativity, oracle_discord, xstate_discord
from .states import (
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

CHECK_GRID = 21

# bipartition -> kept subsystems of the (A, I, II) output
REDUCTIONS = {"AI": (0, 1), "AII": (0, 2), "III": (1, 2)}


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    target: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.claim_id}: {self.description} | target {self.target} | "
                f"measured {self.measured:.3e} (tol {self.tolerance:g}){' | ' + self.detail if self.detail else ''}")


def _grid(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.linspace(0.0, 1.0, n), np.linspace(0.0, R_MAX, n)


def inertial_threshold() -> ClaimResult:
    pc = critical_p(0.0, "AI")
    dev = abs(pc - 1 / 3)
    return ClaimResult("inertial_threshold", "critical p of Alice-Rob at r=0", "1/3",
                       dev, 1e-9, dev <= 1e-9, f"p_c={pc:.12f}")


def infinite_acceleration_threshold() -> ClaimResult:
    pcs = {fam: critical_p(R_MAX, fam) for fam in ("AI", "AII")}
    dev = max(abs(v - 3 / 7) for v in pcs.values())
    return ClaimResult("infinite_acceleration_threshold", "critical p of AI and AII at r=pi/4", "3/7",
                       dev, 1e-9, dev <= 1e-9, ", ".join(f"{k}: {v:.12f}" for k, v in pcs.items()))


def critical_region() -> ClaimResult:
    ok, parts = True, []
    worst = 0.0
    for p in (0.35, 0.40):
        r_star = critical_r(p)
        good = r_star is not None and 0.0 < r_star < R_MAX
        if good:
            below = min_pt_eigenvalue("AI", p, r_star - 1e-3)
            above = min_pt_eigenvalue("AI", p, r_star + 1e-3)
            good = below < 0 < above
            worst = max(worst, abs(min_pt_eigenvalue("AI", p, r_star)))
        ok &= good
        parts.append(f"p={p}: r*={r_star}")
    return ClaimResult("critical_region", "finite acceleration disentangles p in (1/3, 3/7)",
                       "sign change of l2 across r*", worst, 1e-9, ok, "; ".join(parts))


def negativity_coincidence(points: int = DEFAULT_POINTS) -> ClaimResult:
    dev = max(abs(log_negativity(rho_AI(p, R_MAX)) - log_negativity(rho_AII(p, R_MAX)))
              for p in default_p_grid(points))
    return ClaimResult("negativity_coincidence", "N(A,I) = N(A,II) at r=pi/4", "0", dev, 1e-9, dev <= 1e-9)


def discord_coincidence(points: int = DEFAULT_POINTS) -> ClaimResult:
    dev = max(abs(discord(rho_AI(p, R_MAX)).discord - discord(rho_AII(p, R_MAX)).discord)
              for p in default_p_grid(points))
    return ClaimResult("discord_coincidence", "D(A:I) = D(A:II) at r=pi/4", "0", dev, 1e-6, dev <= 1e-6)


def antirob_inertial_discord(points: int = DEFAULT_POINTS) -> ClaimResult:
    ps = default_p_grid(points)
    zero_dev = max(discord(rho_AII(p, 0.0)).discord for p in ps)
    werner_dev = max(abs(discord(rho_AI(p, 0.0)).discord - oracle_discord(pseudo_entangled(p)).discord)
                     for p in ps)
    ok = zero_dev <= 1e-9 and werner_dev <= 1e-4
    return ClaimResult("inertial_discord", "D(A:II)=0 and D(A:I)=Werner discord at r=0", "0",
                       max(zero_dev, werner_dev), 1e-4, ok,
                       f"max D(A:II)={zero_dev:.2e} (tol 1e-9); max |D(A:I)-oracle|={werner_dev:.2e} (tol 1e-4)")


def discord_monotonicity(points: int = DEFAULT_POINTS, tol: float = 1e-9) -> ClaimResult:
    rs, ps = default_r_grid(points), default_p_grid(points)
    worst = {}
    for family, sign in (("AI", -1), ("AII", +1)):
        table = run_sweep(SweepSpec(family, rs, ps, ("discord",)), n_jobs=None)
        d = table.grid("discord")  # rows: r, columns: p
        steps = np.diff(d, axis=0) * sign
        worst[family] = float(max(0.0, -steps.min()))
    # the Rob-antiRob state carries no p dependence: one column covers every p
    d3 = np.array([discord(rho_III(r)).discord for r in rs])
    worst["III"] = float(max(0.0, -np.diff(d3).min()))
    dev = max(worst.values())
    return ClaimResult("discord_monotonicity", "D(A:I) nonincreasing, D(A:II), D(I:II) nondecreasing in r",
                       "no violation", dev, tol, dev <= tol,
                       ", ".join(f"{k}: {v:.1e}" for k, v in worst.items()))


def oracle_equivalence(n: int = CHECK_GRID) -> ClaimResult:
    ps, rs = _grid(n)
    worst_abs, worst_below = 0.0, 0.0
    states = [rho_AI(p, r) for p in ps for r in rs] + [rho_AII(p, r) for p in ps for r in rs]
    states += [rho_III(r) for r in rs]
    for rho in states:
        fast = xstate_discord(rho).discord
        slow = oracle_discord(rho).discord
        worst_abs = max(worst_abs, abs(fast - slow))
        worst_below = max(worst_below, slow - fast)
    ok = worst_abs <= 1e-4 and worst_below <= 1e-9
    return ClaimResult("oracle_equivalence", "X-state fast path agrees with the grid oracle", "0",
                       worst_abs, 1e-4, ok, f"fast below oracle by at most {worst_below:.1e} (tol 1e-9)")


def pipeline_consistency(n: int = CHECK_GRID) -> ClaimResult:
    ps, rs = _grid(n)
    worst_entry, worst_spec = 0.0, 0.0
    for p in ps:
        for r in rs:
            out = unruh_channel(pseudo_entangled(p), r, SECOND)
            closed = {"AI": rho_AI(p, r), "AII": rho_AII(p, r), "III": rho_III(r)}
            for name, keep in REDUCTIONS.items():
                worst_entry = max(worst_entry, np.abs(reduce_tripartite(out, keep) - closed[name]).max())
            for fam, m in (("AI", closed["AI"]), ("AII", closed["AII"])):
                for suffix, mat in (("", m), ("_pt", partial_transpose(m, (2, 2), 1))):
                    ref = np.sort(closed_form_spectra(fam + suffix, p, r))
                    worst_spec = max(worst_spec, np.abs(np.sort(eigvalsh(mat)) - ref).max())
    ok = worst_entry <= 1e-12 and worst_spec <= 1e-10
    return ClaimResult("pipeline_consistency", "channel reductions and spectra match closed forms", "0",
                       max(worst_entry, worst_spec), 1e-10, ok,
                       f"entrywise {worst_entry:.1e} (tol 1e-12); spectra {worst_spec:.1e} (tol 1e-10)")


def equivalence_preservation(n: int = CHECK_GRID) -> ClaimResult:
    ps, rs = _grid(n)
    worst = 0.0
    for p in ps:
        for r in rs:
            a = unruh_channel(pseudo_entangled(p), r, SECOND)
            b = unruh_channel(sigma_x_equivalent(p), r, SECOND)
            for keep in REDUCTIONS.values():
                ea = eigvalsh(partial_transpose(reduce_tripartite(a, keep), (2, 2), 1))
                eb = eigvalsh(partial_transpose(reduce_tripartite(b, keep), (2, 2), 1))
                worst = max(worst, np.abs(ea - eb).max())
    return ClaimResult("equivalence_preservation", "PT spectra of rho and rho~ pipelines coincide", "0",
                       worst, 1e-10, worst <= 1e-10)


def equivalence_breaking() -> ClaimResult:
    beta, gap = extremal_beta(R_MAX)
    end_gaps = (abs(negativity_gap(0.0, R_MAX)), abs(negativity_gap(1.0, R_MAX)))
    ok = abs(beta - 0.80) <= 0.01 and gap > 0 and max(end_gaps) <= 1e-10
    return ClaimResult("equivalence_breaking", "maximal negativity gap at r=pi/4", "beta*=0.80",
                       abs(beta - 0.80), 0.01, ok,
                       f"beta*={beta:.6f}, gap={gap:.6f}, endpoint gaps {end_gaps[0]:.1e}, {end_gaps[1]:.1e}")


def _first_positive(values) -> int | None:
    idx = np.flatnonzero(np.asarray(values) > 0)
    return int(idx[0]) if idx.size else None


def eof_threshold(points: int = DEFAULT_POINTS) -> ClaimResult:
    ps = default_p_grid(points)
    neg = [log_negativity(rho_AI(p, R_MAX)) for p in ps]
    eof = [entanglement_of_formation(rho_AI(p, R_MAX)) for p in ps]
    i_n, i_e = _first_positive(neg), _first_positive(eof)
    same = i_n is not None and i_e is not None and abs(i_n - i_e) <= 1
    werner = max(abs(concurrence(rho_AI(p, 0.0)) - max(0.0, (3 * p - 1) / 2)) for p in ps)
    ok = same and werner <= 1e-10
    return ClaimResult("eof_threshold", "EoF and negativity share the threshold; Werner concurrence",
                       "(3p-1)/2", werner, 1e-10, ok,
                       f"first N>0 at p={ps[i_n] if i_n is not None else None}, "
                       f"first EoF>0 at p={ps[i_e] if i_e is not None else None}")


def non_conservation(points: int = DEFAULT_POINTS) -> ClaimResult:
    rs = default_r_grid(points)
    for p in np.linspace(0.34, 0.42, 9):
        if log_negativity(pseudo_entangled(p)) <= 0:
            continue
        for r in rs:
            if log_negativity(rho_AI(p, r)) == 0.0 and log_negativity(rho_AII(p, r)) == 0.0:
                return ClaimResult("non_conservation", "AI and AII both unentangled for an entangled input",
                                   "witness exists", 0.0, 0.0, True, f"witness p={p:.4f}, r={r:.6f}")
    return ClaimResult("non_conservation", "AI and AII both unentangled for an entangled input",
                       "witness exists", 1.0, 0.0, False, "no witness found")


def discord_asymmetry(threshold: float = 1e-4) -> ClaimResult:
    def gap(p, r):
        rho = rho_AI(p, r)
        return abs(oracle_discord(rho, SECOND).discord - oracle_discord(rho, FIRST).discord)

    g = gap(0.7, 0.5)
    where = "p=0.7, r=0.5"
    if g <= threshold:
        ps, rs = _grid(CHECK_GRID)
        g, where = max((gap(p, r), f"p={p:.3f}, r={r:.4f}") for p in ps for r in rs)
    return ClaimResult("discord_asymmetry", "D(A:I) differs from D(I:A)", f"> {threshold:g}",
                       g, threshold, g > threshold, where)


CLAIMS: dict[str, Callable[[], ClaimResult]] = {
    "inertial_threshold": inertial_threshold,
    "infinite_acceleration_threshold": infinite_acceleration_threshold,
    "critical_region": critical_region,
    "negativity_coincidence": negativity_coincidence,
    "discord_coincidence": discord_coincidence,
    "inertial_discord": antirob_inertial_discord,
    "discord_monotonicity": discord_monotonicity,
    "oracle_equivalence": oracle_equivalence,
    "pipeline_consistency": pipeline_consistency,
    "equivalence_preservation": equivalence_preservation,
    "equivalence_breaking": equivalence_breaking,
    "eof_threshold": eof_threshold,
    "non_conservation": non_conservation,
    "discord_asymmetry": discord_asymmetry,
}


def verify_claims(only=None) -> list[ClaimResult]:
    """Run every registered claim (or the ids in ``only``) and collect the results."""
    ids = list(CLAIMS) if only is None else list(only)
    return [CLAIMS[i]() for i in ids]
