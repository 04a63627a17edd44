"""Quantum states and observables in three interchangeable representations.

Three state families cover everything the bound evaluators need:

* :class:`GaussianState` -- means plus a symmetric covariance matrix in
  canonical ``(q1, p1, q2, p2, ...)`` ordering.
* :class:`FockMixedState` -- a density matrix truncated in the harmonic
  oscillator number basis.
* :class:`GridWavefunction` -- complex amplitudes of a pure state on a
  uniform 1D or 2D spatial grid.

Observables are labelled and carry one of three representations: an
explicit Hermitian matrix (Fock basis), a position/momentum tag for grid
states, or a linear form in the canonical quadratures for Gaussian states.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CONFIG, PhysConfig
from .errors import (
    DomainError,
    GridTooSmallError,
    IncompatibleRepresentationError,
    NonNormalizableError,
    ValidationError,
)
from .grids import (
    GridAxis,
    centered_axis,
    grid_weights,
    points_for_accuracy,
)

# Amplitude tail that must remain below TAIL_TOL * max|psi| at the grid edge.
TAIL_TOL = 1e-10

# Half-width of auto-selected grids, in units of the position standard
# deviation.  8*sqrt(2) sigma leaves a boundary amplitude of exp(-32) ~ 1e-14
# for Gaussian states, comfortably inside TAIL_TOL.
_HALF_WIDTH_SIGMAS = 8.0 * math.sqrt(2.0)

_DEFAULT_FOCK_DIM = 32


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form J in (q1, p1, q2, p2, ...) ordering."""
    j2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = j2
    return out


# ---------------------------------------------------------------------------
# state types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianState:
    """Gaussian state of ``n_modes`` canonical modes.

    Attributes:
        n_modes: number of modes.
        mean: length ``2*n_modes`` vector ``(<q1>, <p1>, ...)``.
        cov: symmetric ``2n x 2n`` covariance matrix of the quadratures.
        hbar: value of hbar the covariance entries are expressed with.
    """

    n_modes: int
    mean: np.ndarray
    cov: np.ndarray
    hbar: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "mean", np.asarray(self.mean, dtype=float))
        object.__setattr__(self, "cov", np.asarray(self.cov, dtype=float))
        self.mean.setflags(write=False)
        self.cov.setflags(write=False)
        self.validate()

    def validate(self):
        n = self.n_modes
        if n < 1:
            raise ValidationError(f"n_modes must be >= 1, got {n}")
        if self.mean.shape != (2 * n,):
            raise ValidationError(f"mean must have length {2 * n}, got {self.mean.shape}")
        if self.cov.shape != (2 * n, 2 * n):
            raise ValidationError(f"cov must be {2 * n}x{2 * n}, got {self.cov.shape}")
        scale = max(1.0, float(np.abs(self.cov).max()))
        asym = float(np.abs(self.cov - self.cov.T).max())
        if asym > 1e-12 * scale:
            raise ValidationError(f"cov not symmetric: max asymmetry {asym:.3e}")
        # physicality: cov + (i*hbar/2) J must be positive semidefinite
        f = self.cov + 0.5j * self.hbar * symplectic_form(n)
        min_eig = float(np.linalg.eigvalsh(f)[0])
        if min_eig < -1e-10 * float(np.trace(self.cov)):
            raise ValidationError(
                f"covariance is unphysical: min eig of cov + i*hbar/2*J is {min_eig:.3e}"
            )


@dataclass(frozen=True)
class FockMixedState:
    """Density matrix truncated to the lowest ``dim`` oscillator levels."""

    rho: np.ndarray
    check_tail: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", np.asarray(self.rho, dtype=complex))
        self.rho.setflags(write=False)
        self.validate(check_tail=self.check_tail)

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    def validate(self, check_tail: bool = False):
        if self.rho.ndim != 2 or self.rho.shape[0] != self.rho.shape[1]:
            raise ValidationError(f"rho must be square, got shape {self.rho.shape}")
        scale = max(1.0, float(np.abs(self.rho).max()))
        herm = float(np.abs(self.rho - self.rho.conj().T).max())
        if herm > 1e-12 * scale:
            raise ValidationError(f"rho not Hermitian: max deviation {herm:.3e}")
        tr = complex(np.trace(self.rho))
        if abs(tr - 1.0) > 1e-10:
            raise ValidationError(f"rho trace is {tr:.12g}, expected 1")
        min_eig = float(np.linalg.eigvalsh(self.rho)[0])
        if min_eig < -1e-10:
            raise ValidationError(f"rho has negative eigenvalue {min_eig:.3e}")
        if check_tail:
            top = float(self.rho[-1, -1].real)
            if top >= 1e-8:
                raise ValidationError(
                    f"top-level occupation {top:.3e} >= 1e-8; increase the truncation dim"
                )


@dataclass(frozen=True)
class GridWavefunction:
    """Pure state sampled on one or two uniform axes.

    ``amplitudes`` has shape ``(n1,)`` or ``(n1, n2)`` matching ``axes``.
    The state must be normalized under the trapezoid rule and must have
    decayed below ``TAIL_TOL * max|psi|`` at every grid boundary.
    """

    axes: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "amplitudes", np.asarray(self.amplitudes, dtype=complex))
        self.amplitudes.setflags(write=False)
        self.validate()

    @property
    def n_axes(self) -> int:
        return len(self.axes)

    def validate(self):
        if len(self.axes) not in (1, 2):
            raise ValidationError(f"grids support 1 or 2 axes, got {len(self.axes)}")
        shape = tuple(ax.count for ax in self.axes)
        if self.amplitudes.shape != shape:
            raise ValidationError(
                f"amplitudes shape {self.amplitudes.shape} does not match axes {shape}"
            )
        w = grid_weights(self.axes)
        norm = float(np.sum(w * np.abs(self.amplitudes) ** 2).real)
        if abs(norm - 1.0) > 1e-8:
            raise ValidationError(f"norm is {norm:.12g}, expected 1 +- 1e-8")
        peak = float(np.abs(self.amplitudes).max())
        edge = 0.0
        for axis in range(len(self.axes)):
            sl_lo = [slice(None)] * self.amplitudes.ndim
            sl_hi = [slice(None)] * self.amplitudes.ndim
            sl_lo[axis] = 0
            sl_hi[axis] = -1
            edge = max(
                edge,
                float(np.abs(self.amplitudes[tuple(sl_lo)]).max()),
                float(np.abs(self.amplitudes[tuple(sl_hi)]).max()),
            )
        if edge > TAIL_TOL * peak:
            raise GridTooSmallError(
                f"boundary amplitude {edge:.3e} exceeds {TAIL_TOL:g} * max|psi| = "
                f"{TAIL_TOL * peak:.3e}; widen the grid"
            )


# ---------------------------------------------------------------------------
# observables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Observable:
    """Labelled observable in one of three representations.

    * ``kind == "matrix"``: Hermitian matrix in the Fock basis.
    * ``kind == "grid"``: position (``grid_kind="q"``) or momentum
      (``grid_kind="p"``) along grid axis ``axis``.
    * ``kind == "quadrature"``: linear form ``coeffs . (q1, p1, ...)``.
    """

    label: str
    kind: str
    matrix: np.ndarray = None
    grid_kind: str = None
    axis: int = None
    coeffs: np.ndarray = None

    def __post_init__(self):
        if self.kind == "matrix":
            m = np.asarray(self.matrix, dtype=complex)
            scale = max(1.0, float(np.abs(m).max()))
            if float(np.abs(m - m.conj().T).max()) > 1e-12 * scale:
                raise ValidationError(f"observable {self.label!r} is not Hermitian")
            object.__setattr__(self, "matrix", m)
            m.setflags(write=False)
        elif self.kind == "grid":
            if self.grid_kind not in ("q", "p"):
                raise ValidationError(f"grid observable kind must be 'q' or 'p', got {self.grid_kind!r}")
        elif self.kind == "quadrature":
            v = np.asarray(self.coeffs, dtype=float)
            object.__setattr__(self, "coeffs", v)
            v.setflags(write=False)
        else:
            raise ValidationError(f"unknown observable kind {self.kind!r}")

    @classmethod
    def from_matrix(cls, label: str, matrix) -> "Observable":
        return cls(label=label, kind="matrix", matrix=matrix)

    @classmethod
    def grid_position(cls, axis: int = 0, label: str = None) -> "Observable":
        return cls(label=label or ("x", "y")[axis], kind="grid", grid_kind="q", axis=axis)

    @classmethod
    def grid_momentum(cls, axis: int = 0, label: str = None) -> "Observable":
        return cls(label=label or ("p", "py")[axis], kind="grid", grid_kind="p", axis=axis)

    @classmethod
    def quadrature(cls, label: str, coeffs) -> "Observable":
        return cls(label=label, kind="quadrature", coeffs=coeffs)


def resolve_observable(state, label: str, cfg: PhysConfig = DEFAULT_CONFIG) -> Observable:
    """Map a conventional label ("x", "p", "y", "py") to the state's representation."""
    if isinstance(state, GridWavefunction):
        table = {"x": ("q", 0), "p": ("p", 0), "px": ("p", 0), "y": ("q", 1), "py": ("p", 1)}
        if label not in table:
            raise ValueError(f"unknown grid observable label {label!r}")
        grid_kind, axis = table[label]
        if axis >= state.n_axes:
            raise IncompatibleRepresentationError(
                f"observable {label!r} needs axis {axis} but state has {state.n_axes} axes"
            )
        return Observable(label=label, kind="grid", grid_kind=grid_kind, axis=axis)
    if isinstance(state, GaussianState):
        table = {"x": 0, "p": 1, "px": 1, "y": 2, "py": 3}
        if label not in table:
            raise ValueError(f"unknown quadrature label {label!r}")
        idx = table[label]
        if idx >= 2 * state.n_modes:
            raise IncompatibleRepresentationError(
                f"observable {label!r} needs {idx // 2 + 1} modes but state has {state.n_modes}"
            )
        coeffs = np.zeros(2 * state.n_modes)
        coeffs[idx] = 1.0
        return Observable.quadrature(label, coeffs)
    if isinstance(state, FockMixedState):
        if label in ("x", "p"):
            x, p = quadrature_observables(state.dim, cfg)
            return x if label == "x" else p
        raise ValueError(f"unknown Fock observable label {label!r}")
    raise IncompatibleRepresentationError(f"unsupported state type {type(state).__name__}")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_correlated_coherent(
    sigma_x: float,
    r: float,
    alpha: complex = 0j,
    grid: GridAxis = None,
    cfg: PhysConfig = DEFAULT_CONFIG,
) -> GridWavefunction:
    """Displaced Gaussian wavefunction with position-momentum correlation ``r``.

    The state has position variance ``sigma_x``, correlation coefficient
    ``r = sigma_xp / sqrt(sigma_xx sigma_pp)``, and saturates the
    correlation-corrected uncertainty product
    ``sigma_pp sigma_xx = hbar^2 / (4 (1 - r^2))``.  ``alpha`` displaces
    the state without touching any second central moment.

    Raises:
        DomainError: ``sigma_x <= 0`` or ``|r| >= 1``.
        GridTooSmallError: explicit ``grid`` does not contain the tails.
    """
    if sigma_x <= 0:
        raise DomainError(f"sigma_x must be positive, got {sigma_x}")
    if not -1.0 < r < 1.0:
        raise DomainError(f"r must lie in (-1, 1), got {r}")
    alpha = complex(alpha)
    slope = r / math.sqrt(1.0 - r * r)
    if grid is None:
        std = math.sqrt(sigma_x)
        mean_x = 2.0 * std * alpha.real
        mean_p = cfg.hbar * (slope * alpha.real + alpha.imag) / std
        sigma_p_std = cfg.hbar / (2.0 * std * math.sqrt(1.0 - r * r))
        half_width = _HALF_WIDTH_SIGMAS * std
        wavenumber = (sigma_p_std + abs(mean_p)) / cfg.hbar
        grid = centered_axis(mean_x, half_width, points_for_accuracy(half_width, wavenumber))
    x = grid.points
    exponent = (
        -(x * x) / (4.0 * sigma_x) * (1.0 - 1j * slope)
        + alpha * x / math.sqrt(sigma_x)
        - 0.5 * (alpha * alpha + abs(alpha) ** 2)
    )
    exponent -= exponent.real.max()  # normalized below; avoids overflow
    psi = np.exp(exponent)
    norm = float(np.sum(grid.weights * np.abs(psi) ** 2))
    psi /= math.sqrt(norm)
    return GridWavefunction(axes=(grid,), amplitudes=psi)


def make_thermal(omega: float, T: float, cfg: PhysConfig = DEFAULT_CONFIG) -> GaussianState:
    """Harmonic-oscillator equilibrium state at temperature ``T`` (mass = 1).

    The covariance satisfies
    ``sigma_xx sigma_pp = [(hbar/2) coth(hbar omega / (2 kB T))]^2``
    with ``sigma_xp = 0``; ``T = 0`` returns the ground-state covariance.
    """
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if T < 0:
        raise DomainError(f"T must be nonnegative, got {T}")
    coth = 1.0 if T == 0 else 1.0 / math.tanh(cfg.hbar * omega / (2.0 * cfg.kB * T))
    sxx = cfg.hbar / (2.0 * omega) * coth
    spp = cfg.hbar * omega / 2.0 * coth
    return GaussianState(
        n_modes=1, mean=np.zeros(2), cov=np.diag([sxx, spp]), hbar=cfg.hbar
    )


def make_entangled_gaussian(
    a: float,
    c: float,
    b: complex,
    grid2d: tuple = None,
    cfg: PhysConfig = DEFAULT_CONFIG,
) -> GridWavefunction:
    """Two-mode pure Gaussian ``psi(x, y) ~ exp(-a x^2/2 - b x y - c y^2/2)``.

    ``a`` and ``c`` must be positive reals while ``b`` may be complex; the
    state is normalizable iff ``D = a c - Re(b)^2 > 0``.  Any nonzero ``b``
    entangles the two coordinates, so the reduced state of either one is
    mixed.

    Raises:
        NonNormalizableError: ``D <= 0``.
    """
    if a <= 0 or c <= 0:
        raise DomainError(f"a and c must be positive, got a={a}, c={c}")
    b = complex(b)
    d_val = a * c - b.real**2
    if d_val <= 0:
        raise NonNormalizableError(
            f"ac - Re(b)^2 = {d_val:.6g} <= 0; the Gaussian is not normalizable"
        )
    if grid2d is None:
        std_x = math.sqrt(c / (2.0 * d_val))
        std_y = math.sqrt(a / (2.0 * d_val))
        # momentum spreads of the two marginals, in units of hbar
        k_x = math.sqrt(a * (d_val + b.imag**2) / (2.0 * d_val))
        k_y = math.sqrt(c * (d_val + b.imag**2) / (2.0 * d_val))
        hw_x = _HALF_WIDTH_SIGMAS * std_x
        hw_y = _HALF_WIDTH_SIGMAS * std_y
        grid2d = (
            centered_axis(0.0, hw_x, points_for_accuracy(hw_x, k_x)),
            centered_axis(0.0, hw_y, points_for_accuracy(hw_y, k_y)),
        )
    ax_x, ax_y = grid2d
    xg, yg = np.meshgrid(ax_x.points, ax_y.points, indexing="ij")
    psi = np.exp(-(a / 2.0) * xg * xg - b * xg * yg - (c / 2.0) * yg * yg)
    w = grid_weights((ax_x, ax_y))
    norm = float(np.sum(w * np.abs(psi) ** 2))
    psi /= math.sqrt(norm)
    return GridWavefunction(axes=(ax_x, ax_y), amplitudes=psi)


def make_fock_mixture(probs, dim: int = None) -> FockMixedState:
    """Diagonal mixture of number states with occupation probabilities ``probs``.

    The truncation ``dim`` defaults to ``max(len(probs) + 1, 32)`` so the
    top level stays empty and quadrature moments are truncation-exact.
    """
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValidationError("probs must be a nonempty 1D vector")
    if p.min() < 0:
        raise ValidationError(f"probs must be nonnegative, got min {p.min():.3e}")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-12:
        raise ValidationError(f"probs sum to {total:.15g}, expected 1 +- 1e-12")
    if dim is None:
        dim = max(p.size + 1, _DEFAULT_FOCK_DIM)
    if dim < p.size:
        raise ValidationError(f"dim {dim} cannot hold {p.size} probabilities")
    rho = np.zeros((dim, dim), dtype=complex)
    rho[: p.size, : p.size] = np.diag(p)
    return FockMixedState(rho=rho, check_tail=True)


def make_coherent_fock(alpha: complex, dim: int = _DEFAULT_FOCK_DIM) -> FockMixedState:
    """Coherent state ``|alpha>`` as a truncated Fock density matrix."""
    alpha = complex(alpha)
    amps = np.zeros(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    nrm = float(np.sum(np.abs(amps) ** 2))
    amps /= math.sqrt(nrm)
    return FockMixedState(rho=np.outer(amps, amps.conj()), check_tail=True)


def lowering_operator(dim: int) -> np.ndarray:
    """Ladder operator ``a`` with ``a|n> = sqrt(n)|n-1>``, truncated to ``dim``."""
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(n)
    return a


def quadrature_observables(dim: int, cfg: PhysConfig = DEFAULT_CONFIG):
    """Truncated position and momentum matrices in the Fock basis.

    ``[x, p] = i hbar`` holds exactly on the sub-block that excludes the
    top level; states occupying the top level see the truncation edge.
    """
    if dim < 2:
        raise DomainError(f"dim must be >= 2, got {dim}")
    a = lowering_operator(dim)
    scale = math.sqrt(cfg.hbar / 2.0)
    x = scale * (a + a.conj().T)
    p = 1j * scale * (a.conj().T - a)
    return Observable.from_matrix("x", x), Observable.from_matrix("p", p)


# ---------------------------------------------------------------------------
# seeded random generators (fuzz inputs for the verification sweeps)
# ---------------------------------------------------------------------------


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _symplectic_orthogonal(u: np.ndarray) -> np.ndarray:
    # image of U(n) inside Sp(2n, R) in (q..q, p..p) ordering
    a, b = u.real, u.imag
    return np.block([[a, -b], [b, a]])


def random_gaussian_state(seed, n_modes: int = 1, cfg: PhysConfig = DEFAULT_CONFIG) -> GaussianState:
    """Random physical Gaussian state, deterministic in ``seed``.

    Built as ``sigma = (hbar/2) S diag(2 nbar + 1) S^T`` with ``S`` a random
    symplectic matrix (squeezings between two passive rotations) and
    ``nbar in [0, 2]`` per mode, so physicality holds by construction.
    """
    rng = np.random.default_rng(seed)
    n = n_modes
    o1 = _symplectic_orthogonal(_haar_unitary(rng, n))
    o2 = _symplectic_orthogonal(_haar_unitary(rng, n))
    squeeze = rng.uniform(0.0, 0.75, size=n)
    z = np.diag(np.concatenate([np.exp(squeeze), np.exp(-squeeze)]))
    s = o1 @ z @ o2
    nbar = rng.uniform(0.0, 2.0, size=n)
    d = np.diag(np.tile(2.0 * nbar + 1.0, 2))
    cov_qqpp = (cfg.hbar / 2.0) * s @ d @ s.T
    # reorder (q..q, p..p) -> (q1, p1, q2, p2, ...)
    perm = np.array([i // 2 + (i % 2) * n for i in range(2 * n)])
    cov = cov_qqpp[np.ix_(perm, perm)]
    cov = 0.5 * (cov + cov.T)
    mean = rng.normal(scale=math.sqrt(cfg.hbar), size=2 * n)
    return GaussianState(n_modes=n, mean=mean, cov=cov, hbar=cfg.hbar)


def random_density_matrix(seed, dim: int) -> FockMixedState:
    """Random full-rank density matrix (Ginibre construction), seeded."""
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    rho = 0.5 * (rho + rho.conj().T)
    return FockMixedState(rho=rho)


def random_hermitian(seed, dim: int, scale: float = 1.0, label: str = "h") -> Observable:
    """Random Hermitian observable with entries of magnitude ~``scale``."""
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h = scale * 0.5 * (g + g.conj().T)
    return Observable.from_matrix(label, h)


# ---------------------------------------------------------------------------
# JSON state schema
# ---------------------------------------------------------------------------


def state_from_dict(obj: dict, cfg: PhysConfig = DEFAULT_CONFIG):
    """Build a state from the JSON object schema used by the CLI.

    Supported ``type`` values: ``gaussian``, ``fock_mixture``, ``grid_psi``,
    ``entangled_gaussian``.
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValidationError("state object must be a JSON object with a 'type' key")
    kind = obj["type"]
    try:
        if kind == "gaussian":
            mean = np.asarray(obj["mean"], dtype=float)
            cov = np.asarray(obj["cov"], dtype=float)
            if mean.size % 2 != 0:
                raise ValidationError("gaussian mean length must be even")
            return GaussianState(
                n_modes=mean.size // 2,
                mean=mean,
                cov=cov,
                hbar=float(obj.get("hbar", cfg.hbar)),
            )
        if kind == "fock_mixture":
            return make_fock_mixture(obj["probs"])
        if kind == "grid_psi":
            axes = tuple(
                GridAxis(origin=float(ax["origin"]), step=float(ax["step"]), count=int(ax["count"]))
                for ax in obj["axes"]
            )
            shape = tuple(ax.count for ax in axes)
            re = np.asarray(obj["re"], dtype=float).reshape(shape)
            im = np.asarray(obj["im"], dtype=float).reshape(shape)
            return GridWavefunction(axes=axes, amplitudes=re + 1j * im)
        if kind == "entangled_gaussian":
            b = complex(float(obj.get("b_re", 0.0)), float(obj.get("b_im", 0.0)))
            return make_entangled_gaussian(float(obj["a"]), float(obj["c"]), b, cfg=cfg)
    except KeyError as exc:
        raise ValidationError(f"state of type {kind!r} is missing field {exc}") from exc
    raise ValidationError(f"unknown state type {kind!r}")


def state_to_dict(state) -> dict:
    """Inverse of :func:`state_from_dict` (grid states serialize flattened)."""
    if isinstance(state, GaussianState):
        return {
            "type": "gaussian",
            "hbar": state.hbar,
            "mean": state.mean.tolist(),
            "cov": state.cov.tolist(),
        }
    if isinstance(state, FockMixedState):
        diag = np.diag(state.rho).real
        off = float(np.abs(state.rho - np.diag(diag)).max())
        if off > 1e-14:
            raise ValidationError("only diagonal Fock states serialize to fock_mixture")
        probs = diag[: int(np.max(np.nonzero(diag > 0)[0])) + 1] if diag.any() else diag[:1]
        return {"type": "fock_mixture", "probs": probs.tolist()}
    if isinstance(state, GridWavefunction):
        return {
            "type": "grid_psi",
            "axes": [
                {"origin": ax.origin, "step": ax.step, "count": ax.count} for ax in state.axes
            ],
            "re": state.amplitudes.real.ravel().tolist(),
            "im": state.amplitudes.imag.ravel().tolist(),
        }
    raise IncompatibleRepresentationError(f"cannot serialize {type(state).__name__}")


def observable_from_obj(obj, state, cfg: PhysConfig = DEFAULT_CONFIG) -> Observable:
    """Observable from a label string or an inline ``{"re": .., "im": ..}`` matrix."""
    if isinstance(obj, str):
        return resolve_observable(state, obj, cfg)
    if isinstance(obj, dict):
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
        if not isinstance(state, FockMixedState):
            raise IncompatibleRepresentationError(
                "inline matrix observables require a Fock-basis state"
            )
        if re.shape != (state.dim, state.dim):
            raise ValidationError(
                f"inline observable shape {re.shape} does not match state dim {state.dim}"
            )
        return Observable.from_matrix(obj.get("label", "A"), re + 1j * im)
    raise ValidationError(f"cannot interpret observable {obj!r}")
