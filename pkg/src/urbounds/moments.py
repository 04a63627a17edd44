"""Means, covariance matrices, Gram positivity certificates, and purity.

For observables ``z_1 .. z_N`` the central second moments split into a real
symmetric part ``X`` (symmetrized covariances) and a real antisymmetric part
``Y`` (commutator expectations over ``2i``).  The Hermitian Gram matrix
``F = X + iY`` is positive semidefinite for every quantum state; that single
fact generates all the uncertainty bounds evaluated in :mod:`urbounds.bounds`.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, PhysConfig
from .errors import IncompatibleRepresentationError, QuadratureAccuracyError
from .grids import derivative, grid_weights
from .states import (
    FockMixedState,
    GaussianState,
    GridWavefunction,
    Observable,
    symplectic_form,
)


@dataclass(frozen=True)
class MomentPair:
    """Means plus the symmetric/antisymmetric second-moment matrices.

    ``X[m, n] = <{dz_m, dz_n}>/2`` and ``Y[m, n] = <[z_m, z_n]>/(2i)`` with
    ``dz = z - <z>``; both matrices are real, ``X`` symmetric and ``Y``
    antisymmetric by construction.
    """

    labels: tuple
    means: np.ndarray
    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "means", np.asarray(self.means, dtype=float))
        object.__setattr__(self, "X", np.asarray(self.X, dtype=float))
        object.__setattr__(self, "Y", np.asarray(self.Y, dtype=float))
        for arr in (self.means, self.X, self.Y):
            arr.setflags(write=False)
        n = len(self.labels)
        if self.means.shape != (n,) or self.X.shape != (n, n) or self.Y.shape != (n, n):
            raise ValueError("labels, means, X, Y sizes are inconsistent")
        scale = max(float(np.abs(self.X).max()), 1e-300)
        if float(np.abs(self.X - self.X.T).max()) > 1e-12 * scale:
            raise ValueError("X must be symmetric")
        if float(np.abs(self.Y + self.Y.T).max()) > 1e-12 * scale:
            raise ValueError("Y must be antisymmetric")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def gram(self) -> np.ndarray:
        """Hermitian Gram matrix ``F = X + iY``."""
        return self.X + 1j * self.Y

    def scale(self) -> float:
        """Natural magnitude for relative tolerances (trace of ``X``)."""
        return float(np.trace(self.X))

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "means": self.means.tolist(),
            "X": self.X.tolist(),
            "Y": self.Y.tolist(),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "MomentPair":
        return cls(labels=tuple(obj["labels"]), means=obj["means"], X=obj["X"], Y=obj["Y"])


@dataclass(frozen=True)
class PsdCertificate:
    """Outcome of the Gram positivity check (a report, never an exception)."""

    min_eigenvalue: float
    det_f: float
    passed: bool
    tolerance_used: float


def triple_residual_scale(mp: MomentPair) -> float:
    """Natural magnitude ``X11 X22 X33`` for determinant-level tolerances."""
    return float(mp.X[0, 0] * mp.X[1, 1] * mp.X[2, 2])


def gram_psd_check(mp: MomentPair, rel_tol: float = 1e-10) -> PsdCertificate:
    """Eigenvalue certificate that ``F = X + iY`` is positive semidefinite.

    The tolerance is relative to ``trace(X)`` so the verdict does not depend
    on the units the observables are expressed in.
    """
    eigs = np.linalg.eigvalsh(mp.gram)
    tol = rel_tol * abs(mp.scale())
    min_eig = float(eigs[0])
    det_f = float(np.prod(eigs))
    return PsdCertificate(
        min_eigenvalue=min_eig,
        det_f=det_f,
        passed=bool(min_eig >= -tol),
        tolerance_used=tol,
    )


# ---------------------------------------------------------------------------
# covariance engines, one per representation
# ---------------------------------------------------------------------------


def _hermitian_second_moments(labels, means, raw):
    """Assemble a MomentPair from means and raw complex moments <z_m z_n>, m<=n."""
    n = len(labels)
    x = np.zeros((n, n))
    y = np.zeros((n, n))
    for m in range(n):
        for k in range(m, n):
            central = raw[(m, k)] - means[m] * means[k]
            x[m, k] = x[k, m] = central.real
            y[m, k] = central.imag
            y[k, m] = -central.imag
    return MomentPair(labels=tuple(labels), means=means, X=x, Y=y)


def _fock_moments(state: FockMixedState, observables):
    mats = []
    for obs in observables:
        if obs.kind != "matrix":
            raise IncompatibleRepresentationError(
                f"observable {obs.label!r} is {obs.kind}, need a Fock-basis matrix"
            )
        if obs.matrix.shape != (state.dim, state.dim):
            raise IncompatibleRepresentationError(
                f"observable {obs.label!r} has dim {obs.matrix.shape[0]}, state has {state.dim}"
            )
        mats.append(obs.matrix)
    rho = state.rho
    means = np.array([float(np.trace(rho @ m).real) for m in mats])
    raw = {}
    for m in range(len(mats)):
        for k in range(m, len(mats)):
            raw[(m, k)] = complex(np.trace(rho @ mats[m] @ mats[k]))
    return _hermitian_second_moments([o.label for o in observables], means, raw)


def _gaussian_moments(state: GaussianState, observables):
    vecs = []
    for obs in observables:
        if obs.kind != "quadrature":
            raise IncompatibleRepresentationError(
                f"observable {obs.label!r} is {obs.kind}, need a quadrature linear form"
            )
        if obs.coeffs.shape != (2 * state.n_modes,):
            raise IncompatibleRepresentationError(
                f"observable {obs.label!r} has {obs.coeffs.size} coefficients, "
                f"state has {2 * state.n_modes} quadratures"
            )
        vecs.append(obs.coeffs)
    j = symplectic_form(state.n_modes)
    means = np.array([float(v @ state.mean) for v in vecs])
    n = len(vecs)
    x = np.zeros((n, n))
    y = np.zeros((n, n))
    for m in range(n):
        for k in range(m, n):
            x[m, k] = x[k, m] = float(vecs[m] @ state.cov @ vecs[k])
            ymk = 0.5 * state.hbar * float(vecs[m] @ j @ vecs[k])
            y[m, k] = ymk
            y[k, m] = -ymk
    return MomentPair(
        labels=tuple(o.label for o in observables), means=means, X=x, Y=y
    )


def _grid_action(state: GridWavefunction, obs: Observable, cfg: PhysConfig):
    """Array of ``z |psi>`` for a grid observable."""
    axis = obs.axis
    if axis >= state.n_axes:
        raise IncompatibleRepresentationError(
            f"observable {obs.label!r} acts on axis {axis}, state has {state.n_axes}"
        )
    if obs.grid_kind == "q":
        coords = state.axes[axis].points
        if state.n_axes == 2 and axis == 1:
            return state.amplitudes * coords[np.newaxis, :]
        if state.n_axes == 2:
            return state.amplitudes * coords[:, np.newaxis]
        return state.amplitudes * coords
    return -1j * cfg.hbar * derivative(state.amplitudes, state.axes[axis].step, axis=axis)


def _grid_moments(state: GridWavefunction, observables, cfg: PhysConfig):
    actions = []
    for obs in observables:
        if obs.kind != "grid":
            raise IncompatibleRepresentationError(
                f"observable {obs.label!r} is {obs.kind}, need a grid operator"
            )
        actions.append(_grid_action(state, obs, cfg))
    w = grid_weights(state.axes)
    psi = state.amplitudes
    means = np.array([float(np.sum(w * np.conj(psi) * act).real) for act in actions])
    n = len(observables)
    x = np.zeros((n, n))
    for m in range(n):
        for k in range(m, n):
            raw = complex(np.sum(w * np.conj(actions[m]) * actions[k]))
            x[m, k] = x[k, m] = raw.real - means[m] * means[k]
    # commutators of grid operators are state independent: [q_a, p_a] = i hbar,
    # everything else commutes, so Y is filled analytically.
    y = np.zeros((n, n))
    for m in range(n):
        for k in range(n):
            om, ok = observables[m], observables[k]
            if om.axis == ok.axis and (om.grid_kind, ok.grid_kind) == ("q", "p"):
                y[m, k] = 0.5 * cfg.hbar
            elif om.axis == ok.axis and (om.grid_kind, ok.grid_kind) == ("p", "q"):
                y[m, k] = -0.5 * cfg.hbar
    return MomentPair(
        labels=tuple(o.label for o in observables), means=means, X=x, Y=y
    )


def covariance_matrices(state, observables, cfg: PhysConfig = DEFAULT_CONFIG) -> MomentPair:
    """Means and (X, Y) moment matrices of 2 or 3 observables on a state.

    The state and every observable must share a representation; mixing
    e.g. grid operators with a Fock density matrix raises
    :class:`IncompatibleRepresentationError`.
    """
    observables = list(observables)
    if not 2 <= len(observables) <= 3:
        raise ValueError(f"need 2 or 3 observables, got {len(observables)}")
    if isinstance(state, FockMixedState):
        return _fock_moments(state, observables)
    if isinstance(state, GaussianState):
        return _gaussian_moments(state, observables)
    if isinstance(state, GridWavefunction):
        return _grid_moments(state, observables, cfg)
    raise IncompatibleRepresentationError(f"unsupported state type {type(state).__name__}")


# ---------------------------------------------------------------------------
# purity
# ---------------------------------------------------------------------------


def purity(state) -> float:
    """Quantum purity ``mu = Tr(rho^2)`` of a state, in ``(0, 1]``.

    Grid wavefunctions are pure by construction and return exactly 1.
    Gaussian states use the determinant identity
    ``mu = (hbar/2)^n / sqrt(det sigma)``.
    """
    if isinstance(state, GridWavefunction):
        return 1.0
    if isinstance(state, FockMixedState):
        return float(np.sum(np.abs(state.rho) ** 2))
    if isinstance(state, GaussianState):
        det = float(np.linalg.det(state.cov))
        return float((state.hbar / 2.0) ** state.n_modes / math.sqrt(det))
    raise IncompatibleRepresentationError(f"unsupported state type {type(state).__name__}")


def reduced_moments(psi2d: GridWavefunction, keep=0, cfg: PhysConfig = DEFAULT_CONFIG):
    """Single-mode moments and purity after tracing out the other grid axis.

    The kept mode's ``(q, p)`` moments come straight from the two-mode
    wavefunction.  The purity is computed honestly from the reduced density
    matrix ``rho(s, s') = integral psi(s, t) psi*(s', t) dt`` by trapezoid
    double integration of ``|rho|^2``.

    Returns:
        ``(GaussianState, mu)`` with the kept mode's means and covariance.

    Raises:
        QuadratureAccuracyError: reduced trace drifted more than 1e-6 from 1.
    """
    if psi2d.n_axes != 2:
        raise IncompatibleRepresentationError("reduced_moments needs a two-mode grid state")
    keep = {"x": 0, "y": 1, 0: 0, 1: 1}.get(keep)
    if keep is None:
        raise ValueError("keep must be 'x', 'y', 0 or 1")
    obs = [
        Observable(label="q", kind="grid", grid_kind="q", axis=keep),
        Observable(label="p", kind="grid", grid_kind="p", axis=keep),
    ]
    mp = covariance_matrices(psi2d, obs, cfg)

    traced = 1 - keep
    w_traced = psi2d.axes[traced].weights
    psi = psi2d.amplitudes
    if keep == 0:
        rho = (psi * w_traced[np.newaxis, :]) @ psi.conj().T
    else:
        rho = psi.T @ (w_traced[:, np.newaxis] * psi.conj())
    w_keep = psi2d.axes[keep].weights
    trace = float(np.sum(np.diag(rho).real * w_keep))
    if abs(trace - 1.0) > 1e-6:
        raise QuadratureAccuracyError(
            f"reduced trace drifted to {trace:.9g}; grid quadrature did not converge"
        )
    mu = float(np.sum(np.outer(w_keep, w_keep) * np.abs(rho) ** 2))
    reduced = GaussianState(
        n_modes=1,
        mean=mp.means,
        cov=mp.X,
        hbar=cfg.hbar,
    )
    return reduced, mu
