"""Error-probability bounds for n-use discrimination of two channels drawn
from the transpose-depolarizing family.

For a pair of flip expectations (eta, zeta) and n channel uses, the optimal
error probability is sandwiched by single-letter quantities:

    (1 - sqrt(min{1 - F^2n, n S})) / 2  <=  p_opt  <=  Q^n / 2  <=  F^n / 2,

with F the fidelity, Q the minimum s-overlap and S the rescaled directed
relative entropy.  The exact error of the best block (non-adaptive)
strategy sits between the lower bound and Q^n/2 and is carried along as
the sharpest internal consistency check.

All four numbers are dimension-free, so grids are generated at a fixed
nominal d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .metrics import (
    fidelity_werner,
    helstrom_multicopy_werner,
    one_minus_fidelity_squared,
    qcb_isotropic,
    qcb_werner,
    s_quantity,
)
from .states import _check_alpha, _check_dim, _check_eta

__all__ = [
    "DiscriminationBounds",
    "IsotropicDiscrimination",
    "bounds",
    "bounds_isotropic",
    "curve_grid",
]


@dataclass(frozen=True)
class DiscriminationBounds:
    """Bound sandwich for one parameter pair and copy count.

    Invariant: lower <= helstrom_block <= qcb_upper <= fid_upper, all in
    [0, 1/2].
    """

    eta: float
    zeta: float
    d: int
    n: int
    lower: float
    qcb_upper: float
    fid_upper: float
    helstrom_block: float


@dataclass(frozen=True)
class IsotropicDiscrimination:
    """Chernoff upper bound for a depolarizing-channel pair (no matching
    closed-form lower bound is assembled for this family)."""

    alpha: float
    beta: float
    d: int
    n: int
    qcb_upper: float


def bounds(eta: float, zeta: float, d: int, n: int) -> DiscriminationBounds:
    """Assemble the full bound sandwich for one (eta, zeta, d, n)."""
    eta = _check_eta(eta)
    zeta = _check_eta(zeta)
    d = _check_dim(d)
    n = _check_n(n)
    f = fidelity_werner(eta, zeta)
    s = s_quantity(eta, zeta)
    # 1 - F^2n evaluated through expm1/log1p of the stable 1 - F^2, so the
    # lower bound stays comparable to the exact block error even when F
    # rounds to 1.  min() picks the finite branch when S is the +inf
    # sentinel; the 1 - F^2n branch never exceeds 1, so the root is real.
    gap = one_minus_fidelity_squared(eta, zeta)
    one_minus_f2n = 1.0 if gap >= 1.0 else -math.expm1(n * math.log1p(-gap))
    m = min(one_minus_f2n, n * s)
    lower = 0.5 * (1.0 - math.sqrt(m))
    q = qcb_werner(eta, zeta).q
    return DiscriminationBounds(
        eta=eta,
        zeta=zeta,
        d=d,
        n=n,
        lower=lower,
        qcb_upper=0.5 * q**n,
        fid_upper=0.5 * f**n,
        helstrom_block=helstrom_multicopy_werner(eta, zeta, d, n),
    )


def bounds_isotropic(alpha: float, beta: float, d: int, n: int) -> IsotropicDiscrimination:
    """Chernoff upper bound Q^n/2 for a depolarizing pair."""
    d = _check_dim(d)
    alpha = _check_alpha(alpha, d)
    beta = _check_alpha(beta, d)
    n = _check_n(n)
    q = qcb_isotropic(alpha, beta, d).q
    return IsotropicDiscrimination(alpha=alpha, beta=beta, d=d, n=n, qcb_upper=0.5 * q**n)


def _check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f"use count must be a positive integer, got {n!r}")
    return int(n)


def curve_grid(
    zeta: float, n_list: list[int], eta_step: float
) -> list[DiscriminationBounds]:
    """Bound sandwiches over an eta grid, one block per copy count.

    The grid runs over eta = -1, -1 + step, ..., 1; rows are ordered by
    (n, eta).  All bound values are dimension-free, so rows are computed
    at nominal d = 2.
    """
    zeta = _check_eta(zeta)
    if not n_list:
        raise InvalidParameterError("need at least one copy count")
    eta_step = float(eta_step)
    if eta_step <= 0.0:
        raise InvalidParameterError(f"grid step must be positive, got {eta_step}")
    count = round(2.0 / eta_step)
    if count < 1 or abs(count * eta_step - 2.0) > 1e-9:
        raise InvalidParameterError(f"grid step {eta_step} does not divide [-1, 1]")
    etas = [(2 * i - count) / count for i in range(count + 1)]
    rows = []
    for n in sorted(set(n_list)):
        n = _check_n(n)
        for eta in etas:
            rows.append(bounds(eta, zeta, d=2, n=n))
    return rows
