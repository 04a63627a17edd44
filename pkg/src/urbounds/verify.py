"""Randomized self-verification sweep over the full bound hierarchy.

Each trial draws a random density matrix with a random Hermitian triple and
checks every inequality the package evaluates; a companion instance built on
a tensor product (third observable acting on the other factor) exercises the
commuting-third specialization exactly.  Every instance is a pure function
of ``(seed, index)``, so sweeps parallelize and reproduce byte-identically.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    REL_TOL,
    bound_csv_row,
    coupled_bound_commuting,
    report_from_moments,
    rs_bound,
)
from .config import DEFAULT_CONFIG, PhysConfig
from .moments import covariance_matrices, gram_psd_check, triple_residual_scale
from .states import FockMixedState, Observable

#: histogram bin edges for the relative slack of the best bound
TIGHTNESS_EDGES = (0.0, 1e-9, 1e-3, 1e-2, 0.1, 0.5, 1.0, math.inf)


def thread_budget() -> int:
    """Worker count for sweeps, capped by the URBOUNDS_THREADS variable."""
    raw = os.environ.get("URBOUNDS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class SweepResult:
    """Aggregated outcome of a verification sweep."""

    seed: int
    trials: int
    max_dim: int
    instances: int = 0
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    max_violation: float = 0.0
    tightness_hist: list = field(default_factory=lambda: [0] * (len(TIGHTNESS_EDGES) - 1))
    coupled_dominates: int = 0
    coupled_vacuous: int = 0
    csv_rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _count(self, name):
        self.checks[name] = self.checks.get(name, 0) + 1

    def _record(self, name, margin, context):
        """margin >= 0 passes; negative margins are violations."""
        self._count(name)
        if margin < 0:
            self.max_violation = max(self.max_violation, -margin)
            self.violations.append(f"{name} violated by {-margin:.3e} at {context}")

    def _tightness(self, relative_slack):
        for k in range(len(TIGHTNESS_EDGES) - 1):
            if TIGHTNESS_EDGES[k] <= relative_slack < TIGHTNESS_EDGES[k + 1]:
                self.tightness_hist[k] += 1
                return

    def summary_lines(self):
        lines = [
            f"verification sweep: seed={self.seed} trials={self.trials} max_dim={self.max_dim}",
            f"instances checked: {self.instances}",
            "checks: " + " ".join(f"{k}={v}" for k, v in sorted(self.checks.items())),
            f"max violation (relative): {self.max_violation:.12g}",
            "tightness histogram (relative slack of the best bound):",
        ]
        for k in range(len(TIGHTNESS_EDGES) - 1):
            lo, hi = TIGHTNESS_EDGES[k], TIGHTNESS_EDGES[k + 1]
            lines.append(f"  [{lo:g}, {hi:g}): {self.tightness_hist[k]}")
        general = max(self.checks.get("coupled", 0) + self.coupled_vacuous, 1)
        lines.append(
            f"coupled bound exceeded the pair bound on {self.coupled_dominates}"
            f"/{general} general triples; vacuous radicand on {self.coupled_vacuous}"
        )
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(f"  {v}" for v in self.violations[:20])
        return lines


def _ginibre_density(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return FockMixedState(rho=0.5 * (rho + rho.conj().T))


def _ginibre_hermitian(rng, dim, label):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return Observable.from_matrix(label, 0.5 * (g + g.conj().T))


def _commuting_dims(rng, max_dim):
    pairs = [(da, db) for da in (2, 3, 4) for db in (2, 3, 4) if da * db <= max_dim]
    if not pairs:
        return None
    return pairs[int(rng.integers(0, len(pairs)))]


def _check_instance(result: SweepResult, stream: int, mp, context: str, commuting: bool):
    report = report_from_moments(mp, hbar=1.0)
    product = report.product
    tol = REL_TOL * max(product, 1e-300)
    result.instances += 1
    result._record("robertson", product - report.robertson + tol, context)
    result._record("rs", product - report.rs + tol, context)

    det_scale = triple_residual_scale(mp)
    result._record("det3", report.det3_residual + 1e-9 * det_scale, context)
    cert = gram_psd_check(mp)
    result._record("detf", cert.det_f + 1e-10 * det_scale, context)
    # the explicit polynomial and the eigenvalue route must agree; near-zero
    # determinants are cancellation dominated, so keep a scale-relative floor
    identity_tol = max(
        1e-10 * max(abs(cert.det_f), abs(report.det3_residual)), 1e-12 * det_scale
    )
    agree = abs(report.det3_residual - cert.det_f) <= identity_tol
    result._record("det3_identity", 0.0 if agree else -1.0, context)

    if report.new_bound_vacuous:
        result.coupled_vacuous += 1
    else:
        result._record("coupled", product - report.new_bound + tol, context)
        if report.new_bound > report.rs + 1e-12 * abs(mp.scale()):
            result.coupled_dominates += 1
    if commuting:
        eq18 = coupled_bound_commuting(mp)
        result._record("commuting", product - eq18 + tol, context)
        result._record(
            "commuting_dominates_rs", eq18 - rs_bound(mp) + 1e-12 * abs(mp.scale()), context
        )
    if product > 0:
        result._tightness(report.slack / product)
    result.csv_rows.append(bound_csv_row(stream, report))


def _run_trial(seed, index, max_dim, cfg):
    """One general instance plus one commuting tensor-product instance."""
    out = []
    rng = np.random.default_rng([seed, 2 * index])
    dim = int(rng.integers(2, max_dim + 1))
    state = _ginibre_density(rng, dim)
    obs = [_ginibre_hermitian(rng, dim, f"z{k + 1}") for k in range(3)]
    mp = covariance_matrices(state, obs, cfg)
    out.append((2 * index, mp, f"general(dim={dim}, trial={index})", False))

    rng_c = np.random.default_rng([seed, 2 * index + 1])
    dims = _commuting_dims(rng_c, max_dim)
    if dims is not None:
        da, db = dims
        state_c = _ginibre_density(rng_c, da * db)
        ha1 = _ginibre_hermitian(rng_c, da, "z1")
        ha2 = _ginibre_hermitian(rng_c, da, "z2")
        hb = _ginibre_hermitian(rng_c, db, "z3")
        eye_a, eye_b = np.eye(da), np.eye(db)
        obs_c = [
            Observable.from_matrix("z1", np.kron(ha1.matrix, eye_b)),
            Observable.from_matrix("z2", np.kron(ha2.matrix, eye_b)),
            Observable.from_matrix("z3", np.kron(eye_a, hb.matrix)),
        ]
        mp_c = covariance_matrices(state_c, obs_c, cfg)
        out.append((2 * index + 1, mp_c, f"commuting(dims={da}x{db}, trial={index})", True))
    return out


def run_sweep(
    seed: int = 0,
    trials: int = 500,
    max_dim: int = 8,
    cfg: PhysConfig = DEFAULT_CONFIG,
    threads: int = None,
) -> SweepResult:
    """Run ``trials`` seeded random instances and collect every check outcome.

    Deterministic in ``(seed, trials, max_dim)`` regardless of the thread
    count: each trial derives its own generator from ``(seed, index)`` and
    results are folded in index order.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 2 <= max_dim <= 64:
        raise ValueError(f"max_dim must lie in [2, 64], got {max_dim}")
    threads = thread_budget() if threads is None else max(1, threads)
    result = SweepResult(seed=seed, trials=trials, max_dim=max_dim)

    def work(index):
        return _run_trial(seed, index, max_dim, cfg)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(work, range(trials)))
    else:
        batches = [work(i) for i in range(trials)]
    for batch in batches:
        for stream, mp, context, commuting in batch:
            _check_instance(result, stream, mp, context, commuting)
    return result
