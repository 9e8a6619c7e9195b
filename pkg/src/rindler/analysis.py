"""Parameter sweeps, entanglement thresholds and the equivalence-gap extremum."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Sequence

import numpy as np

from . import __version__
from ._search import bisect_sign, golden_section
from .measures import DEFAULT_RESOLUTION, discord, entanglement_of_formation, log_negativity
from .states import (
    R_MAX,
    alpha_from_beta,
    check_p,
    check_r,
    min_pt_eigenvalue,
    rho_AI,
    rho_AII,
    rho_III,
    rho_IB,
    rho_tilde_IB,
)

FAMILIES = ("AI", "AII", "III", "IB_pair")
MEASURES = ("negativity", "eof", "discord", "mutual_info", "classical_corr")
DEFAULT_POINTS = 65
THRESHOLD_TOL = 1e-10
# treat |l2| below this as zero when deciding PPT at the r-grid ends
ZERO_EIG = 1e-14


def default_r_grid(n: int = DEFAULT_POINTS) -> np.ndarray:
    return np.linspace(0.0, R_MAX, n)


def default_p_grid(n: int = DEFAULT_POINTS) -> np.ndarray:
    return np.linspace(0.0, 1.0, n)


def family_state(family: str, r: float, x: float) -> np.ndarray:
    """Two-qubit state of ``family`` at mixing angle ``r``; ``x`` is p (or beta for IB)."""
    if family == "AI":
        return rho_AI(x, r)
    if family == "AII":
        return rho_AII(x, r)
    if family == "III":
        check_p(x)
        return rho_III(r)
    if family == "IB":
        return rho_IB(alpha_from_beta(x), x, r)
    if family == "IB_tilde":
        return rho_tilde_IB(alpha_from_beta(x), x, r)
    raise ValueError(f"unknown family {family!r}")


class SweepError(RuntimeError):
    def __init__(self, family: str, r: float, x: float, cause: Exception):
        super().__init__(f"{type(cause).__name__} at family={family}, r={r!r}, x={x!r}: {cause}")
        self.family, self.r, self.x, self.cause = family, r, x, cause


@dataclass(frozen=True)
class SweepSpec:
    family: str
    r_grid: Sequence[float]
    p_grid: Sequence[float]
    measures: Sequence[str]
    measured_side: int = 1
    force_oracle: bool = False
    oracle_resolution: tuple[int, int] = DEFAULT_RESOLUTION

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        object.__setattr__(self, "r_grid", tuple(float(r) for r in self.r_grid))
        object.__setattr__(self, "p_grid", tuple(float(p) for p in self.p_grid))
        object.__setattr__(self, "measures", tuple(self.measures))
        for name, grid, check in (("r_grid", self.r_grid, check_r), (self.x_name + "_grid", self.p_grid, check_p)):
            if not grid:
                raise ValueError(f"{name} is empty")
            if any(b < a for a, b in zip(grid, grid[1:])):
                raise ValueError(f"{name} must be sorted ascending")
            for v in grid:
                check(v)
        if not self.measures:
            raise ValueError("no measures requested")
        for m in self.measures:
            if m not in MEASURES:
                raise ValueError(f"unknown measure {m!r}; expected one of {MEASURES}")
        if len(set(self.measures)) != len(self.measures):
            raise ValueError("duplicate measures")

    @property
    def x_name(self) -> str:
        return "beta" if self.family == "IB_pair" else "p"

    def columns(self) -> list[str]:
        cols = ["r", self.x_name]
        for m in self.measures:
            if self.family == "IB_pair":
                cols += [m, m + "_tilde"]
                if m == "negativity":
                    cols.append("negativity_gap")
            else:
                cols.append(m)
        return cols


def _measure_values(rho: np.ndarray, measures: Sequence[str], spec: SweepSpec) -> dict[str, float]:
    out = {}
    dres = None
    for m in measures:
        if m == "negativity":
            out[m] = log_negativity(rho)
        elif m == "eof":
            out[m] = entanglement_of_formation(rho)
        else:
            if dres is None:
                dres = discord(rho, spec.measured_side, spec.force_oracle, spec.oracle_resolution)
            out[m] = {"discord": dres.discord, "mutual_info": dres.mutual_information,
                      "classical_corr": dres.classical_correlation}[m]
    return out


def _sweep_cell(spec: SweepSpec, r: float, x: float) -> list[float]:
    try:
        if spec.family == "IB_pair":
            plain = _measure_values(family_state("IB", r, x), spec.measures, spec)
            tilde = _measure_values(family_state("IB_tilde", r, x), spec.measures, spec)
            row = [r, x]
            for m in spec.measures:
                row += [plain[m], tilde[m]]
                if m == "negativity":
                    row.append(plain[m] - tilde[m])
            return row
        vals = _measure_values(family_state(spec.family, r, x), spec.measures, spec)
        return [r, x] + [vals[m] for m in spec.measures]
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        raise SweepError(spec.family, r, x, exc) from exc


def _sweep_rows(spec: SweepSpec, r: float) -> list[list[float]]:
    return [_sweep_cell(spec, r, x) for x in spec.p_grid]


def worker_count() -> int:
    raw = os.environ.get("RINDLER_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"RINDLER_THREADS must be a positive integer, got {raw!r}") from None
    return max(1, n)


@dataclass
class SweepTable:
    columns: list[str]
    rows: list[list[float]]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row length does not match columns")
            if not all(math.isfinite(v) for v in row):
                raise ValueError(f"non-finite value in row {row}")

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([row[i] for row in self.rows])

    def grid(self, name: str) -> np.ndarray:
        """Column ``name`` reshaped to (len(r_grid), len(x_grid)), rows indexed by r."""
        r = self.column("r")
        n_r = len(np.unique(r))
        return self.column(name).reshape(n_r, -1)

    def to_csv(self, fh=None, metadata: bool = True) -> str:
        buf = io.StringIO()
        if metadata and self.metadata:
            buf.write("# " + json.dumps(self.metadata, sort_keys=True) + "\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([format_real(v) for v in row])
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text

    def to_json(self, fh=None, metadata: bool = True) -> str:
        doc = {"rows": [{c: float(format_real(v)) for c, v in zip(self.columns, row)} for row in self.rows]}
        if metadata:
            doc["metadata"] = self.metadata
        text = json.dumps(doc, indent=1, sort_keys=False) + "\n"
        if fh is not None:
            fh.write(text)
        return text

    @classmethod
    def from_csv(cls, text: str) -> "SweepTable":
        lines = text.splitlines()
        meta = {}
        if lines and lines[0].startswith("#"):
            meta = json.loads(lines[0][1:])
            lines = lines[1:]
        reader = csv.reader(lines)
        columns = next(reader)
        rows = [[float(v) for v in row] for row in reader if row]
        return cls(columns, rows, meta)


def format_real(v: float) -> str:
    return f"{v:.12g}"


def run_sweep(spec: SweepSpec, n_jobs: int | None = None) -> SweepTable:
    """Evaluate ``spec.measures`` on every (r, x) grid point, r outermost."""
    n_jobs = worker_count() if n_jobs is None else max(1, n_jobs)
    if n_jobs > 1 and len(spec.r_grid) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            chunks = list(pool.map(_sweep_rows, [spec] * len(spec.r_grid), spec.r_grid))
    else:
        chunks = [_sweep_rows(spec, r) for r in spec.r_grid]
    rows = [row for chunk in chunks for row in chunk]
    metadata = {
        "family": spec.family,
        "measures": list(spec.measures),
        "measured_side": spec.measured_side,
        "r_points": len(spec.r_grid),
        f"{spec.x_name}_points": len(spec.p_grid),
        "force_oracle": spec.force_oracle,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    return SweepTable(spec.columns(), rows, metadata)


# -- thresholds ------------------------------------------------------------


def critical_p(r: float, family: str = "AI") -> float | None:
    """Smallest p at which the partial transpose of the family state turns negative.

    Bisects the sign of the closed-form eigenvalue l2 over p in [0, 1] to
    1e-10. Returns None when l2 never goes negative (AII at r = 0).
    """
    r = check_r(r)
    if family not in ("AI", "AII"):
        raise ValueError(f"family must be 'AI' or 'AII', got {family!r}")

    def entangled(p: float) -> bool:
        return min_pt_eigenvalue(family, p, r) < 0.0

    if not entangled(1.0):
        return None
    if entangled(0.0):
        return 0.0
    return bisect_sign(entangled, 0.0, 1.0, THRESHOLD_TOL)


def critical_r(p: float) -> float | None:
    """Mixing angle at which the Alice-Rob state of fraction ``p`` becomes separable.

    Returns 0.0 when the state is already separable at r = 0 (p <= 1/3) and
    None when it stays entangled up to r = pi/4 (p > 3/7).
    """
    p = check_p(p)

    def separable(r: float) -> bool:
        return min_pt_eigenvalue("AI", p, r) >= -ZERO_EIG

    if separable(0.0):
        return 0.0
    if not separable(R_MAX):
        return None
    return bisect_sign(separable, 0.0, R_MAX, THRESHOLD_TOL)


# -- equivalence gap -------------------------------------------------------


def negativity_gap(beta: float, r: float) -> float:
    """N(rho_IB) - N(rho~_IB) for the alpha-beta family at mixing angle ``r``."""
    alpha = alpha_from_beta(beta)
    return log_negativity(rho_IB(alpha, beta, r)) - log_negativity(rho_tilde_IB(alpha, beta, r))


def extremal_beta(r: float, scan_points: int = 1001, tol: float = 1e-8) -> tuple[float, float]:
    """Maximise the equivalence gap over beta: coarse scan, then golden section."""
    r = check_r(r)
    betas = np.linspace(0.0, 1.0, scan_points)
    gaps = np.array([negativity_gap(b, r) for b in betas])
    i = int(np.argmax(gaps))
    lo, hi = betas[max(i - 1, 0)], betas[min(i + 1, scan_points - 1)]
    beta, neg_gap = golden_section(lambda b: -negativity_gap(b, r), float(lo), float(hi), tol)
    if -neg_gap < gaps[i]:
        return float(betas[i]), float(gaps[i])
    return beta, -neg_gap
