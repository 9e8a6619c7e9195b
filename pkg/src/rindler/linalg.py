"""Small dense complex linear algebra for 2-8 dimensional density matrices.

Composite indices are big-endian: for subsystem dimensions ``(2, 2, 2)`` the
basis ket ``|l m n>`` sits at index ``4*l + 2*m + n``.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .exceptions import ConvergenceError, DimensionError, NotAStateError, NotHermitianError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
MAX_DIM = 8

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


class EigenResult(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray | None = None


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square complex128 array, checking the shape."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise DimensionError(f"invalid subsystem dimensions {dims}")
    if math.prod(dims) != m.shape[0]:
        raise DimensionError(f"dims {dims} do not match matrix dimension {m.shape[0]}")
    return dims


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    a = as_matrix(m)
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; ``(a x b)[i*db + k, j*db + l] = a[i, j] * b[k, l]``."""
    return np.kron(as_matrix(a), as_matrix(b))


def tensor(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = tensor_product(out, f)
    return out


def partial_trace(m, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    The kept subsystems appear in ascending order in the result, regardless
    of the order given in ``keep``.
    """
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise DimensionError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= n:
        raise DimensionError(f"keep {keep} out of range for {n} subsystems")

    letters = "abcdefghijklmnopqrstuvwxyz"
    row = letters[:n]
    col = "".join(letters[n + i] if i in keep else letters[i] for i in range(n))
    out = "".join(row[i] for i in keep) + "".join(col[i] for i in keep)
    t = a.reshape(dims + dims)
    d = math.prod(dims[i] for i in keep)
    return np.einsum(f"{row}{col}->{out}", t).reshape(d, d)


def partial_transpose(m, dims: Sequence[int], subsystem: int) -> np.ndarray:
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    if not 0 <= subsystem < n:
        raise DimensionError(f"subsystem {subsystem} out of range for {n} subsystems")
    axes = list(range(2 * n))
    axes[subsystem], axes[n + subsystem] = axes[n + subsystem], axes[subsystem]
    return a.reshape(dims + dims).transpose(axes).reshape(a.shape)


def swap_qubits(m) -> np.ndarray:
    """Exchange the two factors of a 2x2 bipartite operator."""
    a = as_matrix(m)
    _check_dims(a, (2, 2))
    return a.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)


def hermitian_eigen(m, vectors: bool = False) -> EigenResult:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back in descending order. When ``vectors`` is true the
    columns of ``EigenResult.vectors`` are the matching orthonormal
    eigenvectors, so ``V @ diag(values) @ V.conj().T`` reproduces ``m``.
    """
    a = as_matrix(m)
    if not is_hermitian(a):
        raise NotHermitianError("hermitian_eigen requires a Hermitian matrix")
    n = a.shape[0]
    # nested lists of Python complex beat numpy slicing at these sizes
    h = ((a + a.conj().T) / 2).tolist()
    v = np.eye(n, dtype=complex).tolist() if vectors else None
    scale = max(1.0, float(np.linalg.norm(a)))
    limit = (JACOBI_TOL * scale) ** 2

    for _ in range(JACOBI_MAX_SWEEPS + 1):
        off = sum(abs(h[i][j]) ** 2 for i in range(n) for j in range(n) if i != j)
        if off <= limit:
            break
        if _ == JACOBI_MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p][q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                ph = apq / mag
                phc = ph.conjugate()
                theta = (h[q][q].real - h[p][p].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # J = diag(1, conj(ph)) @ [[c, s], [-s, c]] on the (p, q) plane
                for row in h:
                    xp, xq = row[p], row[q] * phc
                    row[p] = c * xp - s * xq
                    row[q] = s * xp + c * xq
                hp, hq = h[p], h[q]
                for k in range(n):
                    xp, xq = hp[k], hq[k] * ph
                    hp[k] = c * xp - s * xq
                    hq[k] = s * xp + c * xq
                hp[q] = hq[p] = 0j
                if v is not None:
                    for row in v:
                        xp, xq = row[p], row[q] * phc
                        row[p] = c * xp - s * xq
                        row[q] = s * xp + c * xq

    values = np.array([h[i][i].real for i in range(n)])
    order = np.argsort(-values, kind="stable")
    values = values[order]
    if v is not None:
        v = np.array(v, dtype=complex)[:, order]
    return EigenResult(values, v)


def eigvalsh(m) -> np.ndarray:
    return hermitian_eigen(m).values


def validate_density_matrix(m, dim: int | None = None) -> np.ndarray:
    """Return ``m`` as a complex array after checking it is a density matrix.

    Raises NotAStateError for a non-Hermitian, non-unit-trace or non-PSD
    input (tolerances 1e-12, 1e-12 and 1e-10 respectively).
    """
    try:
        a = as_matrix(m)
    except DimensionError as exc:
        raise NotAStateError(str(exc)) from exc
    if dim is not None and a.shape[0] != dim:
        raise NotAStateError(f"expected a {dim}x{dim} density matrix, got {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise NotAStateError(f"dimension {a.shape[0]} exceeds {MAX_DIM}")
    if not is_hermitian(a):
        raise NotAStateError("density matrix is not Hermitian")
    tr = np.trace(a)
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotAStateError(f"density matrix trace is {tr.real:.3e}, expected 1")
    lo = eigvalsh(a)[-1]
    if lo < -PSD_TOL:
        raise NotAStateError(f"density matrix has negative eigenvalue {lo:.3e}")
    return a


def entropy_of_spectrum(values: Iterable[float]) -> float:
    """Shannon entropy in bits of a probability vector; 0 log 0 = 0."""
    total = 0.0
    for x in values:
        if x > 0.0:
            total -= x * math.log2(x)
    return total


def von_neumann_entropy(m) -> float:
    """S(rho) = -tr(rho log2 rho), in bits."""
    a = validate_density_matrix(m)
    values = np.clip(eigvalsh(a), 0.0, None)
    s = entropy_of_spectrum(values)
    return min(max(s, 0.0), math.log2(a.shape[0]))


def projector(ket) -> np.ndarray:
    k = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(k, k.conj())


def conjugate(m, u) -> np.ndarray:
    """Return ``u @ m @ u^dagger``."""
    u = np.asarray(u, dtype=complex)
    return u @ as_matrix(m) @ u.conj().T
