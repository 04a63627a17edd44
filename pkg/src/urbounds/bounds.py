"""Lower bounds on uncertainty products, from Heisenberg's floor up to the
coupled three-observable bound, plus the purity-bounded relation.

All bounds act on a :class:`~urbounds.moments.MomentPair`.  Unless noted,
they bound the *uncertainty* product ``Dz_1 Dz_2 = sqrt(X11 X22)``; the
correlation-coefficient form is the one exception and bounds the *variance*
product ``X11 X22``.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import DEFAULT_CONFIG, PhysConfig
from .errors import (
    DegenerateInputError,
    DomainError,
    ThirdObservableDeterministicError,
    WrongRegimeError,
)
from .moments import MomentPair, covariance_matrices, gram_psd_check

#: slack below -REL_TOL * product counts as a physicality violation
REL_TOL = 1e-9


def rs_bound(mp: MomentPair, i: int = 0, j: int = 1) -> float:
    """Two-observable floor ``G_ij = sqrt(X_ij^2 + Y_ij^2)`` on ``Dz_i Dz_j``.

    Dropping the covariance term leaves the weaker commutator-only floor
    ``|Y_ij|`` (see :func:`robertson_bound`).
    """
    if i == j:
        raise ValueError("need two distinct observables")
    x, y = float(mp.X[i, j]), float(mp.Y[i, j])
    return math.sqrt(x * x + y * y)


def robertson_bound(mp: MomentPair, i: int = 0, j: int = 1) -> float:
    """Commutator-only floor ``|Y_ij|`` on the uncertainty product."""
    return abs(float(mp.Y[i, j]))


def correlation_form(mp: MomentPair, i: int = 0, j: int = 1):
    """Correlation-coefficient form of the two-observable bound.

    Returns ``(r, bound)`` with ``r = X_ij / sqrt(X_ii X_jj)`` and
    ``bound = Y_ij^2 / (1 - r^2)``, a floor on the *variance* product
    ``X_ii X_jj``.  For an (x, p) pair this is
    ``hbar^2 / (4 (1 - r^2))``: correlation acts like an enhanced
    effective Planck constant.

    Raises:
        DegenerateInputError: a variance is zero or ``|r| >= 1``.
    """
    xii, xjj = float(mp.X[i, i]), float(mp.X[j, j])
    if xii <= 0 or xjj <= 0:
        raise DegenerateInputError(
            f"variances must be positive, got X[{i},{i}]={xii:.3e}, X[{j},{j}]={xjj:.3e}"
        )
    r = float(mp.X[i, j]) / math.sqrt(xii * xjj)
    one_minus = 1.0 - r * r
    if one_minus <= 0:
        raise DegenerateInputError(f"correlation coefficient r={r:.6g} outside (-1, 1)")
    y = float(mp.Y[i, j])
    return r, y * y / one_minus


def triple_det_residual(mp: MomentPair) -> float:
    """Residual of the three-observable determinant inequality.

    Positive semidefiniteness of the Gram matrix gives
    ``det(X + iY) >= 0``; written out for N = 3 this is

        X11 X22 X33 >= X11 (X23^2 + Y23^2) + X22 (X13^2 + Y13^2)
                       + X33 (X12^2 + Y12^2)
                       + 2 (X12 Y23 Y31 + X23 Y31 Y12 + X31 Y12 Y23
                            - X12 X23 X31).

    The returned value is LHS - RHS, which equals ``det(X + iY)`` exactly;
    it is nonnegative (to tolerance) for every physical state.
    """
    if mp.n != 3:
        raise DomainError(f"determinant residual needs 3 observables, got {mp.n}")
    x, y = mp.X, mp.Y
    x11, x22, x33 = float(x[0, 0]), float(x[1, 1]), float(x[2, 2])
    x12, x13, x23 = float(x[0, 1]), float(x[0, 2]), float(x[1, 2])
    x31 = float(x[2, 0])
    y12, y13, y23 = float(y[0, 1]), float(y[0, 2]), float(y[1, 2])
    y31 = float(y[2, 0])
    lhs = x11 * x22 * x33
    rhs = (
        x11 * (x23 * x23 + y23 * y23)
        + x22 * (x13 * x13 + y13 * y13)
        + x33 * (x12 * x12 + y12 * y12)
        + 2.0 * (x12 * y23 * y31 + x23 * y31 * y12 + x31 * y12 * y23 - x12 * x23 * x31)
    )
    return lhs - rhs


class CoupledBound(NamedTuple):
    """Result of the coupled three-observable bound.

    ``bound`` is ``None`` when the radicand is negative: the underlying
    quadratic has no real root, the determinant inequality imposes nothing
    on ``sqrt(X11 X22)``, and only the two-observable floor survives.
    """

    omega: float
    gamma: float
    bound: float


def coupled_bound(mp: MomentPair) -> CoupledBound:
    """Lower bound on ``Dz_1 Dz_2`` accounting for coupling to ``z_3``.

    Evaluates ``sqrt(G12^2 + Omega^2 + 2 Gamma) + Omega`` with

        Omega = |G13 G23| / X33,
        Gamma = [X12 (Y23 Y31 - X23 X31) + Y12 (X23 Y31 + Y23 X31)] / X33.

    When ``z_3`` is uncorrelated with the pair (``X13 = X23 = Y13 = Y23
    = 0``) this reduces exactly to :func:`rs_bound`.

    Raises:
        ThirdObservableDeterministicError: ``X33`` is too small to divide by.
    """
    if mp.n != 3:
        raise DomainError(f"coupled bound needs 3 observables, got {mp.n}")
    x, y = mp.X, mp.Y
    x33 = float(x[2, 2])
    eps = 1e-12 * abs(mp.scale())
    if x33 <= eps:
        raise ThirdObservableDeterministicError(
            f"X33 = {x33:.3e} <= {eps:.3e}; the third observable is deterministic"
        )
    x12, y12 = float(x[0, 1]), float(y[0, 1])
    x13, y13 = float(x[0, 2]), float(y[0, 2])
    x23, y23 = float(x[1, 2]), float(y[1, 2])
    x31, y31 = float(x[2, 0]), float(y[2, 0])
    g12_sq = x12 * x12 + y12 * y12
    g13_sq = x13 * x13 + y13 * y13
    g23_sq = x23 * x23 + y23 * y23
    omega = math.sqrt(g13_sq * g23_sq) / x33
    gamma = (x12 * (y23 * y31 - x23 * x31) + y12 * (x23 * y31 + y23 * x31)) / x33
    radicand = g12_sq + omega * omega + 2.0 * gamma
    tol = 1e-12 * max(g12_sq + omega * omega, float(x[0, 0]) * float(x[1, 1]))
    if radicand < -tol:
        return CoupledBound(omega=omega, gamma=gamma, bound=None)
    return CoupledBound(
        omega=omega, gamma=gamma, bound=math.sqrt(max(radicand, 0.0)) + omega
    )


def coupled_bound_commuting(mp: MomentPair) -> float:
    """Coupled bound specialized to a third observable commuting with both.

    With ``Y13 = Y23 = 0`` (e.g. ``z1 = x``, ``z2 = p_x``, ``z3 = y``) the
    coupled bound simplifies to

        sqrt(Y12^2 + (X12 - X13 X23 / X33)^2) + |X13 X23| / X33,

    which always dominates the two-observable floor ``G12``.

    Raises:
        WrongRegimeError: the commutator moments Y13, Y23 are not zero.
        ThirdObservableDeterministicError: ``X33`` is too small.
    """
    if mp.n != 3:
        raise DomainError(f"coupled bound needs 3 observables, got {mp.n}")
    scale = abs(mp.scale())
    y13, y23 = float(mp.Y[0, 2]), float(mp.Y[1, 2])
    if abs(y13) > 1e-12 * scale or abs(y23) > 1e-12 * scale:
        raise WrongRegimeError(
            f"|Y13|={abs(y13):.3e}, |Y23|={abs(y23):.3e} exceed 1e-12 * scale; "
            "the third observable does not commute with the pair"
        )
    x33 = float(mp.X[2, 2])
    if x33 <= 1e-12 * scale:
        raise ThirdObservableDeterministicError(
            f"X33 = {x33:.3e} is too small; the third observable is deterministic"
        )
    x12, y12 = float(mp.X[0, 1]), float(mp.Y[0, 1])
    cross = float(mp.X[0, 2]) * float(mp.X[1, 2]) / x33
    shifted = x12 - cross
    return math.sqrt(y12 * y12 + shifted * shifted) + abs(cross)


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Every evaluated lower bound for one state and observable pair/triple.

    ``product`` is the achieved ``Dz1 Dz2``; ``best_bound`` is the largest
    valid bound and ``slack = product - best_bound`` is nonnegative (to
    tolerance) for physical inputs.  ``heisenberg`` is the canonical-pair
    reference ``hbar/2``; it is informational and never enters
    ``best_bound`` because it only applies to conjugate pairs.
    The correlation-form entries live on the variance-product scale,
    everything else on the uncertainty-product scale.
    """

    labels: tuple
    product: float
    variance_product: float
    heisenberg: float
    robertson: float
    rs: float
    corr_coeff_r: float
    corr_bound_variance: float
    best_bound: float
    slack: float
    new_bound: float = None
    new_bound_vacuous: bool = False
    omega: float = None
    gamma: float = None
    det3_residual: float = None
    commuting: float = None
    gram_min_eigenvalue: float = None
    gram_det: float = None
    gram_passed: bool = None

    @property
    def violated(self) -> bool:
        """True when the achieved product undercuts the best bound."""
        return self.slack < -REL_TOL * max(self.product, 0.0)

    def to_dict(self) -> dict:
        out = {
            "labels": list(self.labels),
            "product": self.product,
            "variance_product": self.variance_product,
            "heisenberg": self.heisenberg,
            "robertson": self.robertson,
            "rs": self.rs,
            "corr_coeff_r": self.corr_coeff_r,
            "corr_bound_variance": self.corr_bound_variance,
            "new_bound": "vacuous" if self.new_bound_vacuous else self.new_bound,
            "omega": self.omega,
            "gamma": self.gamma,
            "det3_residual": self.det3_residual,
            "commuting": self.commuting,
            "best_bound": self.best_bound,
            "slack": self.slack,
            "gram_min_eigenvalue": self.gram_min_eigenvalue,
            "gram_det": self.gram_det,
            "gram_passed": self.gram_passed,
        }
        return out


#: header of the per-trial CSV row form used by verification sweeps
BOUND_CSV_HEADER = "seed,product,robertson,rs,new,commuting,best,slack"


def bound_csv_row(seed, report: BoundReport) -> str:
    def num(v):
        return "nan" if v is None else f"{v:.12g}"

    new = "nan" if report.new_bound_vacuous else num(report.new_bound)
    return ",".join(
        [
            str(seed),
            num(report.product),
            num(report.robertson),
            num(report.rs),
            new,
            num(report.commuting),
            num(report.best_bound),
            num(report.slack),
        ]
    )


def report_from_moments(mp: MomentPair, hbar: float) -> BoundReport:
    """Assemble a :class:`BoundReport` from an already computed MomentPair."""
    x11, x22 = float(mp.X[0, 0]), float(mp.X[1, 1])
    product = math.sqrt(max(x11, 0.0) * max(x22, 0.0))
    variance_product = x11 * x22
    rob = robertson_bound(mp)
    rs = rs_bound(mp)
    try:
        r, corr_var = correlation_form(mp)
    except DegenerateInputError:
        r, corr_var = math.nan, math.nan
    candidates = [rob, rs]
    new_bound = None
    vacuous = False
    omega = gamma = det3 = commuting = None
    if mp.n == 3:
        det3 = triple_det_residual(mp)
        cb = coupled_bound(mp)
        omega, gamma = cb.omega, cb.gamma
        if cb.bound is None:
            vacuous = True
        else:
            new_bound = cb.bound
            candidates.append(cb.bound)
        scale = abs(mp.scale())
        if abs(float(mp.Y[0, 2])) <= 1e-12 * scale and abs(float(mp.Y[1, 2])) <= 1e-12 * scale:
            commuting = coupled_bound_commuting(mp)
            candidates.append(commuting)
    cert = gram_psd_check(mp)
    best = max(candidates)
    return BoundReport(
        labels=mp.labels,
        product=product,
        variance_product=variance_product,
        heisenberg=hbar / 2.0,
        robertson=rob,
        rs=rs,
        corr_coeff_r=r,
        corr_bound_variance=corr_var,
        new_bound=new_bound,
        new_bound_vacuous=vacuous,
        omega=omega,
        gamma=gamma,
        det3_residual=det3,
        commuting=commuting,
        best_bound=best,
        slack=product - best,
        gram_min_eigenvalue=cert.min_eigenvalue,
        gram_det=cert.det_f,
        gram_passed=cert.passed,
    )


def bound_report(state, z1, z2, z3=None, cfg: PhysConfig = DEFAULT_CONFIG) -> BoundReport:
    """Evaluate every applicable bound for observables ``z1, z2`` (and ``z3``).

    With a third observable the report additionally carries the determinant
    residual, the coupled bound with its ``omega``/``gamma`` ingredients,
    and the commuting-case value when ``[z1, z3] = [z2, z3] = 0``.
    """
    obs = [z1, z2] if z3 is None else [z1, z2, z3]
    mp = covariance_matrices(state, obs, cfg)
    hbar = getattr(state, "hbar", cfg.hbar)
    return report_from_moments(mp, hbar)


# ---------------------------------------------------------------------------
# purity-bounded uncertainty relation
# ---------------------------------------------------------------------------


def phi_tilde(mu: float) -> float:
    """Approximate purity-frontier factor ``(4 + sqrt(16 + 9 mu^2)) / (9 mu)``.

    Agrees with the exact frontier :func:`urbounds.frontier.phi_exact`
    to better than 2% on (0, 1] and is exactly 1 at ``mu = 1``.
    """
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"mu must lie in (0, 1], got {mu}")
    return (4.0 + math.sqrt(16.0 + 9.0 * mu * mu)) / (9.0 * mu)


def phi_asymptotic(mu: float) -> float:
    """Small-``mu`` expansion ``8/(9 mu) * (1 + 9 mu^2 / 64)`` of the frontier."""
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"mu must lie in (0, 1], got {mu}")
    return 8.0 / (9.0 * mu) * (1.0 + 9.0 * mu * mu / 64.0)


def purity_bound(mu: float, cfg: PhysConfig = DEFAULT_CONFIG) -> float:
    """Purity-bounded floor ``(hbar/2) * phi_tilde(mu)`` on ``sqrt(det sigma)``."""
    return 0.5 * cfg.hbar * phi_tilde(mu)
