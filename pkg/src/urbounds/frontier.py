"""Exact purity-constrained frontier over diagonal number-state mixtures.

Among density matrices of fixed purity ``mu``, the smallest value of
``sqrt(sigma_xx sigma_pp - sigma_xp^2)`` is reached on diagonal mixtures of
finitely many oscillator number states, where it equals
``hbar (<n> + 1/2)``.  Minimizing ``<n>`` subject to ``sum p = 1`` and
``sum p^2 = mu`` is therefore the whole computation.  Stationarity makes
the minimizer a decreasing linear profile ``p_n = alpha - beta n`` on a
contiguous support ``{0 .. N-1}``; this module solves that profile in
closed form per support size and scans supports exhaustively.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bounds import phi_asymptotic, phi_tilde
from .errors import DomainError, TruncationError

_DEFAULT_MAX_LEVELS = 256


@dataclass(frozen=True)
class FrontierPoint:
    """One tabulated frontier point with the approximations alongside.

    ``abs_diff_lead`` is ``|phi_exact - 8/(9 mu)|`` and ``scaled_diff_lead``
    is ``mu`` times that; both are reported because the leading-order
    accuracy claim can be read against either metric.
    """

    mu: float
    phi_exact: float
    phi_tilde: float
    phi_asym: float
    support_size: int
    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", np.asarray(self.probs, dtype=float))
        self.probs.setflags(write=False)

    @property
    def abs_diff_lead(self) -> float:
        return abs(self.phi_exact - 8.0 / (9.0 * self.mu))

    @property
    def scaled_diff_lead(self) -> float:
        return self.mu * self.abs_diff_lead


def _linear_profile(mu: float, n_levels: int):
    """Closed-form decreasing linear profile on {0..N-1}, or None if infeasible.

    Solving ``sum p = 1`` and ``sum p^2 = mu`` for ``p_n = alpha - beta n``
    gives ``beta^2 = 12 (mu - 1/N) / (N (N^2 - 1))``; feasibility needs
    ``mu >= 1/N`` (else the support is too small) and ``p_{N-1} >= 0``.
    """
    if n_levels == 1:
        if abs(mu - 1.0) > 1e-12:
            return None
        return 0.0, np.array([1.0])
    if mu < 1.0 / n_levels - 1e-15:
        return None
    beta_sq = 12.0 * (mu - 1.0 / n_levels) / (n_levels * (n_levels * n_levels - 1))
    beta = math.sqrt(max(beta_sq, 0.0))
    alpha = 1.0 / n_levels + beta * (n_levels - 1) / 2.0
    probs = alpha - beta * np.arange(n_levels)
    if probs[-1] < -1e-14:
        return None
    probs = np.clip(probs, 0.0, None)
    nbar = (n_levels - 1) / 2.0 - beta * n_levels * (n_levels * n_levels - 1) / 12.0
    return nbar, probs


def min_mean_occupation(mu: float, max_levels: int = _DEFAULT_MAX_LEVELS):
    """Minimum mean occupation ``<n>`` over probability vectors of purity ``mu``.

    Returns ``(n_min, probs)`` where ``probs`` is the minimizing vector.
    Scans every support size up to ``max_levels`` with the closed-form
    linear profile and keeps the feasible minimum.

    Raises:
        DomainError: ``mu`` outside ``(0, 1]``.
        TruncationError: ``mu < 1/max_levels`` so the support would not fit.
    """
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"mu must lie in (0, 1], got {mu}")
    if mu < 1.0 / max_levels:
        raise TruncationError(
            f"purity {mu} needs more than {max_levels} Fock levels; raise max_levels"
        )
    best = None
    for n_levels in range(1, max_levels + 1):
        cand = _linear_profile(mu, n_levels)
        if cand is not None and (best is None or cand[0] < best[0]):
            best = cand
    if best is None:  # mu = 1 handled by n_levels = 1; anything else has N >= 2
        raise DomainError(f"no feasible profile found for mu = {mu}")
    return best


def phi_exact(mu: float, max_levels: int = _DEFAULT_MAX_LEVELS) -> float:
    """Exact frontier factor ``Phi(mu) = 2 n_min(mu) + 1``.

    ``sqrt(sigma_xx sigma_pp - sigma_xp^2) >= (hbar/2) Phi(mu)`` for every
    state of purity ``mu``; diagonal number mixtures achieve equality.
    """
    n_min, _ = min_mean_occupation(mu, max_levels)
    return 2.0 * n_min + 1.0


def frontier_table(mu_min: float, mu_max: float, steps: int, max_levels: int = _DEFAULT_MAX_LEVELS):
    """Frontier points on a uniform purity grid from ``mu_min`` to ``mu_max``."""
    if not 0.0 < mu_min <= mu_max <= 1.0:
        raise DomainError(
            f"need 0 < mu_min <= mu_max <= 1, got mu_min={mu_min}, mu_max={mu_max}"
        )
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    grid = np.linspace(mu_min, mu_max, steps)
    points = []
    for mu in grid:
        mu = float(mu)
        n_min, probs = min_mean_occupation(mu, max_levels)
        points.append(
            FrontierPoint(
                mu=mu,
                phi_exact=2.0 * n_min + 1.0,
                phi_tilde=phi_tilde(mu),
                phi_asym=phi_asymptotic(mu),
                support_size=int(probs.size),
                probs=probs,
            )
        )
    return points


#: CSV header of the frontier table
FRONTIER_CSV_HEADER = "mu,phi_exact,phi_tilde,phi_asym,support,abs_diff_lead,scaled_diff_lead"


def frontier_to_csv(points) -> str:
    lines = [FRONTIER_CSV_HEADER]
    for pt in points:
        lines.append(
            f"{pt.mu:.12g},{pt.phi_exact:.12g},{pt.phi_tilde:.12g},{pt.phi_asym:.12g},"
            f"{pt.support_size},{pt.abs_diff_lead:.12g},{pt.scaled_diff_lead:.12g}"
        )
    return "\n".join(lines) + "\n"
