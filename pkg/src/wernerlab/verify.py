"""Cross-validation suite: every closed form against its matrix-level oracle.

Each check sweeps a parameter grid, compares an analytic quantity with an
independently computed reference, and reports the worst defect seen.  The
CLI front end turns the results into an exit code; the checks themselves
are plain functions so they can also be driven from tests or notebooks.

The WERNERLAB_THREADS environment variable caps the worker threads used
for the per-dimension sweeps (0 or unset means auto).  Results are
collected in a fixed order, so the output is schedule-independent.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import discrimination, linalg, metrics, metrology, states, teleport
from .errors import InvalidParameterError

__all__ = ["CheckResult", "run_verification", "teleport_check", "max_workers"]

TELEPORT_TOL = 1e-10


@dataclass(frozen=True)
class CheckResult:
    """One named cross-check: points examined, failures, worst defect, tolerance."""

    name: str
    points: int
    failures: int
    worst: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def max_workers() -> int:
    """Worker-thread cap from WERNERLAB_THREADS (0 or unset = auto)."""
    raw = os.environ.get("WERNERLAB_THREADS", "0").strip()
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidParameterError(
            f"WERNERLAB_THREADS must be an integer, got {raw!r}"
        ) from exc
    if value < 0:
        raise InvalidParameterError(f"WERNERLAB_THREADS must be >= 0, got {value}")
    if value == 0:
        return min(8, os.cpu_count() or 1)
    return value


def _map_ordered(fn, items):
    items = list(items)
    workers = min(max_workers(), len(items)) or 1
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _eta_grid(step: float, *, endpoints: bool = True) -> list[float]:
    count = round(2.0 / step)
    if count < 1 or abs(count * step - 2.0) > 1e-9:
        raise InvalidParameterError(f"grid step {step} does not divide [-1, 1]")
    values = [(2 * i - count) / count for i in range(count + 1)]
    return values if endpoints else values[1:-1]


def _alpha_grid(d: int, points: int = 11) -> list[float]:
    return [d * i / (points - 1) for i in range(points)]


def _collect(name, deltas, tol) -> CheckResult:
    worst = max(deltas) if deltas else 0.0
    failures = sum(1 for x in deltas if not x <= tol)
    return CheckResult(name=name, points=len(deltas), failures=failures, worst=worst, tol=tol)


def check_fidelity_oracle(grid_step, dims, tol) -> CheckResult:
    etas = _eta_grid(grid_step)

    def sweep(d):
        ws = {e: states.werner_state(e, d) for e in etas}
        return [
            abs(linalg.bures_fidelity_numeric(ws[a], ws[b]) - metrics.fidelity_werner(a, b))
            for a in etas
            for b in etas
        ]

    deltas = [x for chunk in _map_ordered(sweep, dims) for x in chunk]
    return _collect("fidelity-oracle", deltas, tol)


def check_trace_distance_oracle(grid_step, dims, tol) -> CheckResult:
    etas = _eta_grid(grid_step)

    def sweep(d):
        ws = {e: states.werner_state(e, d) for e in etas}
        return [
            abs(linalg.trace_distance_numeric(ws[a], ws[b]) - abs(a - b) / 2.0)
            for a in etas
            for b in etas
        ]

    deltas = [x for chunk in _map_ordered(sweep, dims) for x in chunk]
    return _collect("trace-distance-oracle", deltas, tol)


def check_relative_entropy_oracle(grid_step, dims, tol) -> CheckResult:
    etas = _eta_grid(grid_step)

    def sweep(d):
        ws = {e: states.werner_state(e, d) for e in etas}
        out = []
        for a in etas:
            for b in etas:
                numeric = linalg.relative_entropy_numeric(ws[a], ws[b])
                closed = metrics.relative_entropy_werner(a, b)
                if math.isinf(numeric) or math.isinf(closed):
                    out.append(0.0 if numeric == closed else math.inf)
                else:
                    out.append(abs(numeric - closed))
        return out

    deltas = [x for chunk in _map_ordered(sweep, dims) for x in chunk]
    return _collect("relative-entropy-oracle", deltas, tol)


def check_qcb_oracle(grid_step, dims, q_tol, s_tol) -> tuple[CheckResult, CheckResult]:
    etas = _eta_grid(grid_step, endpoints=False)

    def sweep(d):
        ws = {e: states.werner_state(e, d) for e in etas}
        dq, ds = [], []
        for a in etas:
            for b in etas:
                if a == b:
                    continue
                numeric = linalg.qcb_numeric(ws[a], ws[b])
                closed = metrics.qcb_werner(a, b)
                dq.append(abs(numeric.q - closed.q))
                ds.append(abs(numeric.s_star - closed.s_star))
        return dq, ds

    chunks = _map_ordered(sweep, dims)
    dq = [x for dq_chunk, _ in chunks for x in dq_chunk]
    ds = [x for _, ds_chunk in chunks for x in ds_chunk]
    return _collect("qcb-oracle-q", dq, q_tol), _collect("qcb-oracle-s", ds, s_tol)


def check_qcb_isotropic_oracle(dims, q_tol) -> CheckResult:
    def sweep(d):
        alphas = _alpha_grid(d)
        omegas = {a: states.isotropic_state(a, d) for a in alphas}
        out = []
        for a in alphas:
            for b in alphas:
                if a == b or a in (0.0, float(d)) or b in (0.0, float(d)):
                    continue
                numeric = linalg.qcb_numeric(omegas[a], omegas[b])
                closed = metrics.qcb_isotropic(a, b, d)
                out.append(abs(numeric.q - closed.q))
        return out

    deltas = [x for chunk in _map_ordered(sweep, dims) for x in chunk]
    return _collect("qcb-isotropic-oracle", deltas, q_tol)


def check_critical_point_identities(grid_step, tol) -> CheckResult:
    # s_{a,b} + s_{b,a} = 1, interior containment, and local-minimum
    # bracketing Q(s +/- 1e-3) > Q(s), on every off-diagonal interior pair.
    etas = _eta_grid(grid_step, endpoints=False)
    deltas = []
    for a in etas:
        for b in etas:
            if a == b:
                continue
            s_ab = metrics.interior_critical_s(a, b)
            s_ba = metrics.interior_critical_s(b, a)
            deltas.append(abs(s_ab + s_ba - 1.0))
            deltas.append(0.0 if 0.0 < s_ab < 1.0 else math.inf)
            q0 = metrics.werner_qs(a, b, s_ab)
            bracket_ok = (
                metrics.werner_qs(a, b, s_ab - 1e-3) > q0
                and metrics.werner_qs(a, b, s_ab + 1e-3) > q0
            )
            deltas.append(0.0 if bracket_ok else math.inf)
    return _collect("critical-point-identities", deltas, tol)


def check_substitution_identity(grid_step, dims, tol) -> CheckResult:
    # Critical point of the entangled-expectation family equals the
    # flip-expectation one under alpha -> d(1 + eta)/2.
    deltas = []
    for d in dims:
        alphas = [a for a in _alpha_grid(d, points=round(2.0 / grid_step) + 1)]
        for a in alphas:
            for b in alphas:
                if a == b or a in (0.0, float(d)) or b in (0.0, float(d)):
                    continue
                eta = (2.0 * a - d) / d
                zeta = (2.0 * b - d) / d
                s_iso = metrics.interior_critical_s_isotropic(a, b, d)
                s_wer = metrics.interior_critical_s(eta, zeta)
                deltas.append(abs(s_iso - s_wer))
    return _collect("substitution-identity", deltas, tol)


def check_teleport_simulation(seed, tol, samples: int = 20) -> CheckResult:
    deltas = []
    for d in (2, 3):
        rng = np.random.default_rng(np.random.SeedSequence((seed, d)))
        inputs = [linalg.random_density_matrix(d, rng) for _ in range(samples)]
        for eta in (-1.0, -0.5, 0.0, 0.5, 1.0):
            resource = states.werner_state(eta, d)
            channel = states.HWChannel(eta, d)
            for rho in inputs:
                out = teleport.teleport_channel(resource, rho)
                deltas.append(linalg.trace_distance_numeric(out, channel.apply(rho)))
    return _collect("teleport-simulation", deltas, tol)


def check_teleport_covariance(seed, tol, samples: int = 20) -> CheckResult:
    deltas = []
    for d in (2, 3):
        rng = np.random.default_rng(np.random.SeedSequence((seed, 100 + d)))
        channel = states.HWChannel(0.7, d)
        for _ in range(samples):
            u = linalg.random_unitary(d, rng)
            rho = linalg.random_density_matrix(d, rng)
            deltas.append(teleport.covariance_check(channel, u, rho))
    return _collect("teleport-covariance", deltas, tol)


def check_helstrom_explicit(tol) -> CheckResult:
    # n-copy exact error from explicit tensor-power matrices (d = 2).
    deltas = []
    pairs = [(0.5, 0.0), (0.8, 0.2), (-0.4, 0.3), (1.0, 0.0)]
    for eta, zeta in pairs:
        rho = states.werner_state(eta, 2)
        sigma = states.werner_state(zeta, 2)
        rho_n, sigma_n = rho, sigma
        for n in (1, 2, 3):
            explicit = 0.5 * (1.0 - linalg.trace_distance_numeric(rho_n, sigma_n))
            combinatorial = metrics.helstrom_multicopy_werner(eta, zeta, 2, n)
            deltas.append(abs(explicit - combinatorial))
            if n < 3:
                rho_n = linalg.tensor_product(rho_n, rho)
                sigma_n = linalg.tensor_product(sigma_n, sigma)
    return _collect("helstrom-explicit", deltas, tol)


def check_estimation_saturation(seed, tol) -> CheckResult:
    # |empirical variance * QFI - 1| per tested eta.
    deltas = []
    for eta in (0.0, 0.3, 0.6, -0.9):
        report = metrology.simulate_estimation(eta, n=1000, trials=10_000, seed=seed)
        deltas.append(abs(report.empirical_variance * report.qfi - 1.0))
    return _collect("estimation-saturation", deltas, tol)


def check_delta_s_sign(tol) -> CheckResult:
    # Directed-entropy asymmetry must be strictly negative for |eta| > |zeta|.
    etas = _eta_grid(0.05, endpoints=False)
    deltas = []
    for a in etas:
        for b in etas:
            if abs(a) > abs(b):
                deltas.append(0.0 if metrics.delta_s(a, b) < 0.0 else math.inf)
    return _collect("delta-s-sign", deltas, tol)


def check_sandwich_ordering(grid_step, tol) -> CheckResult:
    etas = _eta_grid(grid_step)
    deltas = []
    for n in range(1, 21):
        for a in etas:
            for b in etas:
                r = discrimination.bounds(a, b, d=2, n=n)
                violation = max(
                    r.lower - r.helstrom_block,
                    r.helstrom_block - r.qcb_upper,
                    r.qcb_upper - r.fid_upper,
                    -r.lower,
                    r.fid_upper - 0.5,
                )
                deltas.append(max(0.0, violation))
    return _collect("sandwich-ordering", deltas, tol)


def run_verification(
    grid_step: float = 0.1,
    dims: tuple[int, ...] = (2, 3, 4, 5, 6),
    seed: int = 20260808,
    tol_scale: float = 1.0,
) -> list[CheckResult]:
    """Run every cross-check; tolerances are multiplied by ``tol_scale``."""
    if tol_scale <= 0.0:
        raise InvalidParameterError(f"tolerance scale must be positive, got {tol_scale}")
    iso_dims = tuple(d for d in dims if d <= 4) or (2,)
    results = [
        check_fidelity_oracle(grid_step, dims, 1e-9 * tol_scale),
        check_trace_distance_oracle(grid_step, dims, 1e-10 * tol_scale),
        check_relative_entropy_oracle(grid_step, dims, 1e-9 * tol_scale),
        *check_qcb_oracle(grid_step, dims, 1e-6 * tol_scale, 1e-4 * tol_scale),
        check_qcb_isotropic_oracle(iso_dims, 1e-6 * tol_scale),
        check_critical_point_identities(grid_step, 1e-12 * tol_scale),
        check_substitution_identity(grid_step, iso_dims, 1e-12 * tol_scale),
        check_teleport_simulation(seed, TELEPORT_TOL * tol_scale),
        check_teleport_covariance(seed, TELEPORT_TOL * tol_scale),
        check_helstrom_explicit(1e-10 * tol_scale),
        check_estimation_saturation(seed, 0.05 * tol_scale),
        check_delta_s_sign(0.0),
        check_sandwich_ordering(grid_step, 1e-10 * tol_scale),
    ]
    return results


def teleport_check(eta: float, d: int, seed: int, samples: int = 20) -> dict:
    """Worst simulation and covariance defects for one (eta, d)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, d)))
    resource = states.werner_state(eta, d)
    channel = states.HWChannel(eta, d)
    sim_defect = 0.0
    cov_defect = 0.0
    for _ in range(samples):
        rho = linalg.random_density_matrix(d, rng)
        out = teleport.teleport_channel(resource, rho)
        sim_defect = max(sim_defect, linalg.trace_distance_numeric(out, channel.apply(rho)))
        u = linalg.random_unitary(d, rng)
        cov_defect = max(cov_defect, teleport.covariance_check(channel, u, rho))
    return {
        "simulation_defect": sim_defect,
        "covariance_defect": cov_defect,
        "tolerance": TELEPORT_TOL,
        "samples": samples,
    }
