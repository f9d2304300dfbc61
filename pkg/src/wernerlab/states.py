"""Two-qudit exchange-symmetric states, their spectra, and the matching channels.

Basis convention: the computational product basis is ordered |ij> = i*d + j
throughout the package.  The flip and maximally entangled operators, the
partial transpose, and the teleportation simulator all rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidDimensionError,
    InvalidParameterError,
)

__all__ = [
    "SpectrumPair",
    "flip_operator",
    "max_entangled_ket",
    "max_entangled_operator",
    "werner_state",
    "werner_spectrum",
    "isotropic_state",
    "isotropic_spectrum",
    "isotropic_from_p",
    "isotropic_p_parameter",
    "HWChannel",
    "DepolarizingChannel",
    "choi_matrix",
]


def _check_dim(d: int) -> int:
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidDimensionError(f"local dimension must be an integer >= 2, got {d!r}")
    return int(d)


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not -1.0 <= eta <= 1.0:
        raise InvalidParameterError(f"flip expectation must lie in [-1, 1], got {eta}")
    return eta


def _check_alpha(alpha: float, d: int) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= d:
        raise InvalidParameterError(
            f"entangled-operator expectation must lie in [0, {d}], got {alpha}"
        )
    return alpha


@dataclass(frozen=True)
class SpectrumPair:
    """Eigenvalue classes (value, multiplicity) of a simultaneously
    diagonalisable two-class family.  Zero-eigenvalue classes are kept so
    that multiplicity bookkeeping stays uniform at the parameter extremes."""

    classes: tuple[tuple[float, int], ...]

    def expanded(self) -> np.ndarray:
        """All eigenvalues with multiplicity, ascending."""
        values = np.concatenate([np.full(m, v) for v, m in self.classes])
        return np.sort(values)


def flip_operator(d: int) -> np.ndarray:
    """Flip (swap) operator F = sum_ij |ij><ji| on two qudits."""
    d = _check_dim(d)
    f = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            f[i * d + j, j * d + i] = 1.0
    return f


def max_entangled_ket(d: int) -> np.ndarray:
    """Normalised maximally entangled vector d^(-1/2) sum_i |ii>."""
    d = _check_dim(d)
    phi = np.zeros(d * d, dtype=complex)
    phi[np.arange(d) * d + np.arange(d)] = 1.0 / np.sqrt(d)
    return phi


def max_entangled_operator(d: int) -> np.ndarray:
    """Unnormalised projector M = sum_ij |ii><jj| (= d |Phi><Phi|)."""
    d = _check_dim(d)
    phi = max_entangled_ket(d)
    return d * np.outer(phi, phi.conj())


def werner_state(eta: float, d: int) -> np.ndarray:
    """Two-qudit state with flip expectation eta, invariant under U (x) U.

    W = [(d - eta) I + (d eta - 1) F] / (d^3 - d).
    """
    eta = _check_eta(eta)
    d = _check_dim(d)
    ident = np.eye(d * d, dtype=complex)
    return ((d - eta) * ident + (d * eta - 1.0) * flip_operator(d)) / (d**3 - d)


def werner_spectrum(eta: float, d: int) -> SpectrumPair:
    """Eigenvalue classes of the flip-expectation state.

    Symmetric class: (1 + eta) / [d(d+1)] with multiplicity d(d+1)/2;
    antisymmetric class: (1 - eta) / [d(d-1)] with multiplicity d(d-1)/2.
    """
    eta = _check_eta(eta)
    d = _check_dim(d)
    sym = ((1.0 + eta) / (d * (d + 1)), d * (d + 1) // 2)
    anti = ((1.0 - eta) / (d * (d - 1)), d * (d - 1) // 2)
    return SpectrumPair(classes=(sym, anti))


def isotropic_state(alpha: float, d: int) -> np.ndarray:
    """Two-qudit state with entangled-operator expectation alpha.

    Omega = [(d - alpha) I + (d alpha - 1) M] / (d^3 - d).
    """
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    ident = np.eye(d * d, dtype=complex)
    return ((d - alpha) * ident + (d * alpha - 1.0) * max_entangled_operator(d)) / (
        d**3 - d
    )


def isotropic_spectrum(alpha: float, d: int) -> SpectrumPair:
    """Eigenvalue classes: (alpha/d, x1) and ((d - alpha)/[d(d^2-1)], x(d^2-1))."""
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    top = (alpha / d, 1)
    rest = ((d - alpha) / (d * (d * d - 1)), d * d - 1)
    return SpectrumPair(classes=(top, rest))


def isotropic_p_parameter(alpha: float, d: int) -> float:
    """Mixing-probability form of the expectation parameter:
    p = d (d - alpha) / (d^2 - 1), ranging over [0, d^2/(d^2-1)]."""
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    return d * (d - alpha) / (d * d - 1.0)


def isotropic_from_p(p: float, d: int) -> np.ndarray:
    """State in the mixing form p I/d^2 + (1 - p) |Phi><Phi|."""
    d = _check_dim(d)
    p = float(p)
    if not 0.0 <= p <= d * d / (d * d - 1.0) + 1e-15:
        raise InvalidParameterError(
            f"mixing parameter must lie in [0, d^2/(d^2-1)], got {p}"
        )
    phi = max_entangled_ket(d)
    return p * np.eye(d * d, dtype=complex) / (d * d) + (1.0 - p) * np.outer(
        phi, phi.conj()
    )


def _check_input_dim(x: np.ndarray, d: int) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.shape != (d, d):
        raise DimensionMismatchError(
            f"channel acts on {d} x {d} inputs, got shape {x.shape}"
        )
    return x


@dataclass(frozen=True)
class HWChannel:
    """Transpose-depolarizing channel with flip expectation eta.

    apply() is the linear extension
        X -> [(d - eta) Tr(X) I + (d eta - 1) X^T] / (d^2 - 1),
    which reduces to the usual channel action on unit-trace input.
    """

    eta: float
    d: int

    def __post_init__(self):
        _check_eta(self.eta)
        _check_dim(self.d)

    def apply(self, x) -> np.ndarray:
        x = _check_input_dim(x, self.d)
        d, eta = self.d, self.eta
        return ((d - eta) * np.trace(x) * np.eye(d, dtype=complex) + (d * eta - 1.0) * x.T) / (
            d * d - 1.0
        )


@dataclass(frozen=True)
class DepolarizingChannel:
    """Depolarizing channel with entangled-operator expectation alpha.

    apply() is the linear extension
        X -> [(d - alpha) Tr(X) I + (d alpha - 1) X] / (d^2 - 1).
    """

    alpha: float
    d: int

    def __post_init__(self):
        _check_dim(self.d)
        _check_alpha(self.alpha, self.d)

    def apply(self, x) -> np.ndarray:
        x = _check_input_dim(x, self.d)
        d, alpha = self.d, self.alpha
        return (
            (d - alpha) * np.trace(x) * np.eye(d, dtype=complex) + (d * alpha - 1.0) * x
        ) / (d * d - 1.0)


def choi_matrix(channel) -> np.ndarray:
    """State obtained by sending the second half of |Phi><Phi| through a channel.

    ``channel`` needs a local dimension attribute ``d`` and a linear
    ``apply(X)`` accepting arbitrary d x d matrices.
    """
    d = _check_dim(channel.d)
    chi = np.zeros((d * d, d * d), dtype=complex)
    basis_block = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            basis_block[:] = 0.0
            basis_block[i, j] = 1.0
            out = channel.apply(basis_block)
            chi[i * d : (i + 1) * d, j * d : (j + 1) * d] = out
    return chi / d
