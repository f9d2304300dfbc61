"""Dense Hermitian matrix numerics and matrix-level reference metrics.

Everything here works on explicit ``numpy`` arrays.  The matrix-level
metrics (fidelity, trace distance, relative entropy, Chernoff overlap)
are deliberately computed straight from eigendecompositions so that the
closed-form formulas elsewhere in the package can be validated against
an independent route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    NonHermitianError,
    NotDensityMatrixError,
)

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_FLOOR = -1e-10
SUPPORT_TOL = 1e-12
ZERO_SNAP = 1e-13
TENSOR_DIM_CAP = 4096

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition A = V diag(w) V† with ascending eigenvalues."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {a.shape}")
    return a


def hermiticity_defect(a: np.ndarray) -> float:
    """Largest entrywise deviation of ``a`` from its conjugate transpose."""
    return float(np.abs(a - a.conj().T).max())


def eigh(a) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    Raises NonHermitianError if the input deviates from Hermiticity by
    more than ``HERMITIAN_TOL``.  Output is deterministic for identical
    input (LAPACK on the symmetrised matrix), eigenvalues ascending.
    """
    a = _as_square(a)
    if hermiticity_defect(a) > HERMITIAN_TOL:
        raise NonHermitianError(
            f"matrix is not Hermitian within {HERMITIAN_TOL:g} "
            f"(defect {hermiticity_defect(a):.3e})"
        )
    w, v = np.linalg.eigh((a + a.conj().T) / 2.0)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with the subsystem-major index convention.

    (a ⊗ b)[i*db + k, j*db + l] = a[i, j] * b[k, l].
    """
    a = _as_square(a, "a")
    b = _as_square(b, "b")
    dim = a.shape[0] * b.shape[0]
    if dim > TENSOR_DIM_CAP:
        raise DimensionOverflowError(
            f"tensor product dimension {dim} exceeds cap {TENSOR_DIM_CAP}"
        )
    return np.kron(a, b)


def partial_transpose(a, d: int) -> np.ndarray:
    """Transpose the second factor of an operator on a d x d bipartite space."""
    a = _as_square(a)
    if a.shape[0] != d * d:
        raise DimensionMismatchError(
            f"expected a {d * d} x {d * d} matrix for local dimension {d}, "
            f"got {a.shape[0]} x {a.shape[0]}"
        )
    return (
        a.reshape(d, d, d, d).transpose(0, 3, 2, 1).reshape(d * d, d * d).copy()
    )


def check_density_matrix(rho, name: str = "rho") -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity; return the array.

    Eigenvalues in [PSD_FLOOR, 0) are tolerated (they are clamped to zero
    wherever fractional powers or logarithms are taken); anything below
    PSD_FLOOR is rejected.
    """
    rho = _as_square(rho, name)
    defect = hermiticity_defect(rho)
    if defect > HERMITIAN_TOL:
        raise NonHermitianError(f"{name}: Hermiticity defect {defect:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotDensityMatrixError(f"{name}: trace {tr} differs from 1")
    w = np.linalg.eigvalsh((rho + rho.conj().T) / 2.0)
    if w.min() < PSD_FLOOR:
        raise NotDensityMatrixError(
            f"{name}: minimum eigenvalue {w.min():.3e} below {PSD_FLOOR:g}"
        )
    return rho


def _clamped_spectrum(rho, name: str = "rho") -> EigenDecomposition:
    # Round-off near rank-deficient states produces tiny eigenvalues of
    # either sign where the true value is zero.  Anything below ZERO_SNAP
    # becomes an exact zero before powers/logs are taken (a +1e-17 noise
    # eigenvalue would otherwise contribute ~3e-9 under a square root);
    # negatives beyond PSD_FLOOR are rejected.
    dec = eigh(rho)
    w = dec.eigenvalues
    if w.min() < PSD_FLOOR:
        raise NotDensityMatrixError(
            f"{name}: minimum eigenvalue {w.min():.3e} below {PSD_FLOOR:g}"
        )
    return EigenDecomposition(np.where(w < ZERO_SNAP, 0.0, w), dec.eigenvectors)


def _check_same_dims(rho: np.ndarray, sigma: np.ndarray) -> None:
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(
            f"operands have different shapes {rho.shape} and {sigma.shape}"
        )


def bures_fidelity_numeric(rho, sigma) -> float:
    """F(rho, sigma) = Tr sqrt(sqrt(sigma) rho sqrt(sigma)), from matrices."""
    rho = _as_square(rho, "rho")
    sigma = _as_square(sigma, "sigma")
    _check_same_dims(rho, sigma)
    ds = _clamped_spectrum(sigma, "sigma")
    sqrt_sigma = (ds.eigenvectors * np.sqrt(ds.eigenvalues)) @ ds.eigenvectors.conj().T
    inner = sqrt_sigma @ rho @ sqrt_sigma
    w = _clamped_spectrum(inner, "sqrt(sigma) rho sqrt(sigma)").eigenvalues
    return float(np.sqrt(w).sum())


def trace_distance_numeric(rho, sigma) -> float:
    """D(rho, sigma) = half the sum of |eigenvalues| of rho - sigma."""
    rho = _as_square(rho, "rho")
    sigma = _as_square(sigma, "sigma")
    _check_same_dims(rho, sigma)
    w = eigh(rho - sigma).eigenvalues
    return float(0.5 * np.abs(w).sum())


def relative_entropy_numeric(rho, sigma) -> float:
    """Base-2 relative entropy Tr(rho log2 rho - rho log2 sigma).

    Returns ``math.inf`` when the support of rho is not contained in the
    support of sigma (eigenvalues below SUPPORT_TOL count as zero).
    """
    rho = _as_square(rho, "rho")
    sigma = _as_square(sigma, "sigma")
    _check_same_dims(rho, sigma)
    dr = _clamped_spectrum(rho, "rho")
    ds = _clamped_spectrum(sigma, "sigma")

    p = dr.eigenvalues
    plogp = float(np.sum(p[p > SUPPORT_TOL] * np.log2(p[p > SUPPORT_TOL])))

    # weight of rho on each eigenvector of sigma
    overlap = np.abs(ds.eigenvectors.conj().T @ dr.eigenvectors) ** 2
    weights = overlap @ p
    q = ds.eigenvalues
    null = q <= SUPPORT_TOL
    if np.any(weights[null] > SUPPORT_TOL):
        return math.inf
    live = ~null
    cross = float(np.sum(weights[live] * np.log2(q[live])))
    return plogp - cross


def golden_section_min(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-8
) -> float:
    """Golden-section search for the minimiser of a unimodal function.

    Shrinks the bracket [lo, hi] until its width is at most ``tol`` and
    returns the midpoint.  Deterministic for identical inputs.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


class QcbNumeric(NamedTuple):
    q: float
    s_star: float


# Coarse pass for the Chernoff overlap: 0.005, 0.010, ..., 0.995.
_QCB_GRID_STEP = 0.005
_QCB_GRID = np.arange(1, 200) * _QCB_GRID_STEP


def qcb_curve(rho, sigma, s_values) -> np.ndarray:
    """Tr(rho^s sigma^(1-s)) for each s, via eigendecompositions.

    Matrix powers use the convention 0^s := 0 for s > 0.
    """
    rho = _as_square(rho, "rho")
    sigma = _as_square(sigma, "sigma")
    _check_same_dims(rho, sigma)
    dr = _clamped_spectrum(rho, "rho")
    ds = _clamped_spectrum(sigma, "sigma")
    overlap = np.abs(dr.eigenvectors.conj().T @ ds.eigenvectors) ** 2
    s = np.asarray(s_values, dtype=float)
    p = dr.eigenvalues[:, None] ** s[None, :]       # (dim, ns)
    q = ds.eigenvalues[:, None] ** (1.0 - s[None, :])
    return np.einsum("ik,ij,jk->k", p, overlap, q)


def qcb_numeric(rho, sigma) -> QcbNumeric:
    """Minimise Tr(rho^s sigma^(1-s)) over s in the open interval (0, 1).

    Coarse grid (step 0.005) followed by golden-section refinement of the
    bracketing interval down to width 1e-8.  Endpoint limits for states
    with mismatched support are out of scope here; this reports the
    open-interval infimum seen by the search.
    """
    rho = _as_square(rho, "rho")
    sigma = _as_square(sigma, "sigma")
    _check_same_dims(rho, sigma)
    dr = _clamped_spectrum(rho, "rho")
    ds = _clamped_spectrum(sigma, "sigma")
    overlap = np.abs(dr.eigenvectors.conj().T @ ds.eigenvectors) ** 2
    p, q = dr.eigenvalues, ds.eigenvalues

    def q_at(s: float) -> float:
        return float((p**s) @ overlap @ (q ** (1.0 - s)))

    coarse = np.array([q_at(s) for s in _QCB_GRID])
    k = int(np.argmin(coarse))
    lo = max(_QCB_GRID[k] - _QCB_GRID_STEP, 1e-9)
    hi = min(_QCB_GRID[k] + _QCB_GRID_STEP, 1.0 - 1e-9)
    s_star = golden_section_min(q_at, lo, hi, tol=1e-8)
    return QcbNumeric(q=q_at(s_star), s_star=s_star)


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Full-rank random density matrix from a complex Gaussian square root."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return (rho + rho.conj().T) / 2.0


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Gaussian matrix."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    qmat, r = np.linalg.qr(g)
    return qmat * (np.diag(r) / np.abs(np.diag(r)))
