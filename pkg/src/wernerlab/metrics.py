"""Closed-form distinguishability metrics for the two-class spectral families.

All quantities in this module are parameter-in/number-out: they depend on
the flip expectations (eta, zeta) or entangled-operator expectations
(alpha, beta) alone, never on explicit matrices.  The matrix-level
counterparts in :mod:`wernerlab.linalg` serve as independent cross-checks.

Infinity is a first-class sentinel here (``math.inf``): it propagates
through min/comparisons instead of raising, so downstream bound assembly
stays total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import (
    DimensionOverflowError,
    InvalidParameterError,
    SupportMismatchError,
)
from .states import _check_alpha, _check_dim, _check_eta, werner_spectrum

__all__ = [
    "QcbResult",
    "fidelity_werner",
    "one_minus_fidelity_squared",
    "relative_entropy_werner",
    "delta_s",
    "s_quantity",
    "werner_qs",
    "interior_critical_s",
    "qcb_werner",
    "isotropic_qs",
    "interior_critical_s_isotropic",
    "qcb_isotropic",
    "helstrom_multicopy_werner",
]

LN_SQRT2 = 0.5 * math.log(2.0)

# Parameters closer than this are treated as equal: the interior critical
# point formula is 0/0 on the diagonal.
DEGENERATE_TOL = 1e-14

SKind = Literal["interior", "left_limit", "right_limit", "degenerate_half"]


@dataclass(frozen=True)
class QcbResult:
    """Chernoff overlap minimum: value q, minimiser s_star, and how the
    minimiser was reached (interior critical point, an endpoint limit, or
    the degenerate equal-parameter case pinned at 1/2)."""

    q: float
    s_star: float
    s_kind: SKind


def fidelity_werner(eta: float, zeta: float) -> float:
    """sqrt((1+eta)(1+zeta))/2 + sqrt((1-eta)(1-zeta))/2, clamped to [0, 1]."""
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    f = 0.5 * math.sqrt((1.0 + eta) * (1.0 + zeta)) + 0.5 * math.sqrt(
        (1.0 - eta) * (1.0 - zeta)
    )
    return min(1.0, max(0.0, f))


def one_minus_fidelity_squared(eta: float, zeta: float) -> float:
    """1 - F^2 in a cancellation-free form:

        (eta - zeta)^2 / (2 [1 - eta zeta + sqrt((1-eta^2)(1-zeta^2))]).

    Going through the fidelity directly loses everything below machine
    epsilon once F rounds to 1; this stays accurate for arbitrarily close
    parameters.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    if eta == zeta:
        return 0.0
    gap = eta - zeta
    denom = 1.0 - eta * zeta + math.sqrt((1.0 - eta * eta) * (1.0 - zeta * zeta))
    return gap * gap / (2.0 * denom)


def _binary_relent_bits(p: float, q: float) -> float:
    # Relative entropy of biased coins (p, 1-p) || (q, 1-q) in bits,
    # with 0 log 0 := 0 and support mismatch -> inf.
    total = 0.0
    for pi, qi in ((p, q), (1.0 - p, 1.0 - q)):
        if pi <= 0.0:
            continue
        if qi <= 0.0:
            return math.inf
        total += pi * math.log2(pi / qi)
    return total


def relative_entropy_werner(eta: float, zeta: float) -> float:
    """Base-2 relative entropy between the size-two eigenvalue distributions:

        (1+eta)/2 log2[(1+eta)/(1+zeta)] + (1-eta)/2 log2[(1-eta)/(1-zeta)].

    Returns ``math.inf`` when zeta = +/-1 and eta differs.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    return _binary_relent_bits((1.0 + eta) / 2.0, (1.0 + zeta) / 2.0)


def delta_s(eta: float, zeta: float) -> float:
    """Antisymmetric entropy difference S(eta||zeta) - S(zeta||eta) via

        (1 + (eta+zeta)/2) log2[(1+eta)/(1+zeta)]
      + (1 - (eta+zeta)/2) log2[(1-eta)/(1-zeta)].

    Both parameters must lie strictly inside (-1, 1); at the endpoints one
    of the directed entropies diverges and the difference is undefined.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    if abs(eta) == 1.0 or abs(zeta) == 1.0:
        raise SupportMismatchError(
            "entropy difference is undefined at the rank-deficient extremes"
        )
    half_sum = 0.5 * (eta + zeta)
    return (1.0 + half_sum) * math.log2((1.0 + eta) / (1.0 + zeta)) + (
        1.0 - half_sum
    ) * math.log2((1.0 - eta) / (1.0 - zeta))


def s_quantity(eta: float, zeta: float) -> float:
    """ln(sqrt 2) times the smaller of the two directed relative entropies.

    The branch with the larger |parameter| in the first slot is the smaller
    one, so this is computed piecewise on |eta| >= |zeta|.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    if abs(eta) >= abs(zeta):
        return LN_SQRT2 * relative_entropy_werner(eta, zeta)
    return LN_SQRT2 * relative_entropy_werner(zeta, eta)


def _log_ratio(gap: float, num: float, den: float) -> float:
    # ln(num/den) where num = den + gap.  log1p of the exact difference
    # keeps full relative accuracy for nearby parameters (the plain ratio
    # loses it); for well-separated ones the direct log is exact enough
    # and avoids the division rounding to -1 near a vanishing numerator.
    x = gap / den
    if abs(x) < 0.5:
        return math.log1p(x)
    return math.log(num / den)


def _power_term(weight: float, num: float, den: float, s: float) -> float:
    # weight * (num/den)^s with the convention that a zero weight kills the
    # term before the ratio is formed (the ratio may be 0/0 there).
    if weight == 0.0:
        return 0.0
    return weight * (num / den) ** s


def werner_qs(eta: float, zeta: float, s: float) -> float:
    """s-overlap of two flip-expectation spectra:

        Q_s = (1+zeta)/2 * [(1+eta)/(1+zeta)]^s + (1-zeta)/2 * [(1-eta)/(1-zeta)]^s.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    return _power_term((1.0 + zeta) / 2.0, 1.0 + eta, 1.0 + zeta, s) + _power_term(
        (1.0 - zeta) / 2.0, 1.0 - eta, 1.0 - zeta, s
    )


def interior_critical_s(eta: float, zeta: float) -> float:
    """Stationary point of werner_qs in (0, 1) for non-degenerate parameters:

        s = ln[ (zeta-1)/(zeta+1) * ln M / ln P ] / ln(P / M),

    with P = (1+eta)/(1+zeta) and M = (1-eta)/(1-zeta).
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    if abs(eta) == 1.0 or abs(zeta) == 1.0 or abs(eta - zeta) <= DEGENERATE_TOL:
        raise InvalidParameterError(
            "interior critical point requires distinct parameters strictly inside (-1, 1)"
        )
    gap = eta - zeta
    log_p = _log_ratio(gap, 1.0 + eta, 1.0 + zeta)
    log_m = _log_ratio(-gap, 1.0 - eta, 1.0 - zeta)
    numerator = math.log((zeta - 1.0) / (zeta + 1.0) * log_m / log_p)
    return numerator / (log_p - log_m)


def qcb_werner(eta: float, zeta: float) -> QcbResult:
    """Minimum s-overlap of two flip-expectation spectra over s in [0, 1].

    Case dispatch (exact comparisons; the interior formula is 0/0 at the
    boundaries of its validity):
      * eta == zeta (within 1e-14): Q_s is identically 1, s pinned at 1/2;
      * eta = +/-1: infimum is the right-continuous limit at s -> 0+;
      * zeta = +/-1: infimum is the left-continuous limit at s -> 1-;
      * otherwise: interior critical point.

    Accuracy degrades gracefully within a few ulp of the singular
    parameter values (the limits above converge only like 1/|log eps|
    there); everywhere else the result is correct to near machine
    precision.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    if abs(eta - zeta) <= DEGENERATE_TOL:
        return QcbResult(q=1.0, s_star=0.5, s_kind="degenerate_half")
    if eta == 1.0:
        return QcbResult(q=(1.0 + zeta) / 2.0, s_star=0.0, s_kind="left_limit")
    if eta == -1.0:
        return QcbResult(q=(1.0 - zeta) / 2.0, s_star=0.0, s_kind="left_limit")
    if zeta == 1.0:
        return QcbResult(q=(1.0 + eta) / 2.0, s_star=1.0, s_kind="right_limit")
    if zeta == -1.0:
        return QcbResult(q=(1.0 - eta) / 2.0, s_star=1.0, s_kind="right_limit")
    s = interior_critical_s(eta, zeta)
    return QcbResult(q=werner_qs(eta, zeta, s), s_star=s, s_kind="interior")


def isotropic_qs(alpha: float, beta: float, d: int, s: float) -> float:
    """s-overlap of two entangled-expectation spectra:

        Q_s = beta/d * (alpha/beta)^s + (d-beta)/d * [(d-alpha)/(d-beta)]^s.
    """
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    beta = _check_alpha(beta, d)
    return _power_term(beta / d, alpha, beta, s) + _power_term(
        (d - beta) / d, d - alpha, d - beta, s
    )


def interior_critical_s_isotropic(alpha: float, beta: float, d: int) -> float:
    """Stationary point of isotropic_qs in (0, 1):

        s = ln[ (beta-d)/beta * ln((d-alpha)/(d-beta)) / ln(alpha/beta) ]
            / ln[ alpha (d-beta) / (beta (d-alpha)) ].

    Unlike the flip-expectation case this depends on the dimension d.
    """
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    beta = _check_alpha(beta, d)
    if (
        alpha in (0.0, float(d))
        or beta in (0.0, float(d))
        or abs(alpha - beta) <= DEGENERATE_TOL * d
    ):
        raise InvalidParameterError(
            "interior critical point requires distinct parameters strictly inside (0, d)"
        )
    gap = alpha - beta
    log_p = _log_ratio(gap, alpha, beta)
    log_m = _log_ratio(-gap, d - alpha, d - beta)
    numerator = math.log((beta - d) / beta * log_m / log_p)
    return numerator / (log_p - log_m)


def qcb_isotropic(alpha: float, beta: float, d: int) -> QcbResult:
    """Minimum s-overlap of two entangled-expectation spectra over s in [0, 1].

    Same case structure as :func:`qcb_werner`, with the singular parameter
    values at 0 and d instead of -1 and 1.
    """
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    beta = _check_alpha(beta, d)
    if abs(alpha - beta) <= DEGENERATE_TOL * d:
        return QcbResult(q=1.0, s_star=0.5, s_kind="degenerate_half")
    if alpha == float(d):
        return QcbResult(q=beta / d, s_star=0.0, s_kind="left_limit")
    if alpha == 0.0:
        return QcbResult(q=(d - beta) / d, s_star=0.0, s_kind="left_limit")
    if beta == float(d):
        return QcbResult(q=alpha / d, s_star=1.0, s_kind="right_limit")
    if beta == 0.0:
        return QcbResult(q=(d - alpha) / d, s_star=1.0, s_kind="right_limit")
    s = interior_critical_s_isotropic(alpha, beta, d)
    return QcbResult(q=isotropic_qs(alpha, beta, d, s), s_star=s, s_kind="interior")


HELSTROM_COPY_CAP = 1000
_LOG_SPACE_THRESHOLD = 50


def _class_weights(eta: float, d: int, n: int, log_space: bool) -> list[float]:
    # Weight of the k-th multiplicity class of the n-fold tensor power:
    # C(n, k) * (m+ a+)^k * (m- a-)^(n-k), for k = 0..n.
    sym, anti = werner_spectrum(eta, d).classes
    w_plus = sym[0] * sym[1]
    w_minus = anti[0] * anti[1]
    if not log_space:
        return [
            math.comb(n, k) * w_plus**k * w_minus ** (n - k) for k in range(n + 1)
        ]
    out = []
    for k in range(n + 1):
        if (w_plus == 0.0 and k > 0) or (w_minus == 0.0 and k < n):
            out.append(0.0)
            continue
        log_term = (
            math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
        )
        if k > 0:
            log_term += k * math.log(w_plus)
        if n - k > 0:
            log_term += (n - k) * math.log(w_minus)
        out.append(math.exp(log_term))
    return out


def helstrom_multicopy_werner(eta: float, zeta: float, d: int, n: int) -> float:
    """Exact minimum error probability for discriminating two equiprobable
    n-fold tensor powers of flip-expectation states.

    Both spectra live in one eigenbasis, so the trace distance reduces to a
    combinatorial sum over the shared multiplicity classes:

        p = (1 - 1/2 sum_k C(n,k) m+^k m-^(n-k)
                 |a+(eta)^k a-(eta)^(n-k) - a+(zeta)^k a-(zeta)^(n-k)|) / 2.

    The value does not depend on d.  Products switch to log space above
    n = 50; n beyond 1000 is rejected.
    """
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    d = _check_dim(d)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f"copy count must be a positive integer, got {n!r}")
    n = int(n)
    if n > HELSTROM_COPY_CAP:
        raise DimensionOverflowError(f"copy count {n} exceeds cap {HELSTROM_COPY_CAP}")
    log_space = n > _LOG_SPACE_THRESHOLD
    weights_eta = _class_weights(eta, d, n, log_space)
    weights_zeta = _class_weights(zeta, d, n, log_space)
    distance = 0.5 * sum(
        abs(we - wz) for we, wz in zip(weights_eta, weights_zeta)
    )
    return 0.5 * (1.0 - distance)
