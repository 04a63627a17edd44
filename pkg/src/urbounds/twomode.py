"""Closed forms for the entangled two-mode Gaussian example.

For ``psi(x, y) ~ exp(-a x^2 / 2 - b x y - c y^2 / 2)`` every covariance of
``(x, p_x, y)`` has a short closed form, the reduced x-state purity is
``sqrt(D / (ac + Im(b)^2))`` with ``D = ac - Re(b)^2``, and the commuting
coupled bound simplifies to ``Dx Dp >= hbar/2 + |sigma_xp|``, saturated
exactly on the ``|Re b| = |Im b|`` diagonals.  This module evaluates those
forms directly; the grid machinery provides the independent cross-check.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import coupled_bound_commuting, rs_bound
from .config import DEFAULT_CONFIG, PhysConfig
from .errors import DomainError
from .moments import MomentPair


@dataclass(frozen=True)
class ExampleParams:
    """Exponent coefficients of the two-mode Gaussian; needs ``D > 0``."""

    a: float
    c: float
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "b", complex(self.b))
        if self.a <= 0 or self.c <= 0:
            raise DomainError(f"a and c must be positive, got a={self.a}, c={self.c}")
        if self.D <= 0:
            raise DomainError(
                f"D = ac - Re(b)^2 = {self.D:.6g} must be positive for a normalizable state"
            )

    @property
    def D(self) -> float:
        return self.a * self.c - self.b.real**2


def analytic_covariances(params: ExampleParams, cfg: PhysConfig = DEFAULT_CONFIG) -> MomentPair:
    """Closed-form MomentPair of ``(x, p_x, y)`` for the two-mode Gaussian.

    All first moments vanish;

        X11 = c / (2D),                X22 = a hbar^2 (D + Im(b)^2) / (2D),
        X12 = hbar Re(b) Im(b) / (2D), Y12 = hbar / 2,
        X33 = a / (2D),                X13 = -Re(b) / (2D),
        X23 = -a hbar Im(b) / (2D),    Y13 = Y23 = 0.

    The identity ``X12 = X13 X23 / X33`` holds exactly for every parameter
    choice, which is what makes the example saturable.
    """
    a, c, b = params.a, params.c, params.b
    d_val = params.D
    hbar = cfg.hbar
    x = np.zeros((3, 3))
    y = np.zeros((3, 3))
    x[0, 0] = c / (2.0 * d_val)
    x[1, 1] = a * hbar * hbar * (d_val + b.imag**2) / (2.0 * d_val)
    x[0, 1] = x[1, 0] = hbar * b.real * b.imag / (2.0 * d_val)
    x[2, 2] = a / (2.0 * d_val)
    x[0, 2] = x[2, 0] = -b.real / (2.0 * d_val)
    x[1, 2] = x[2, 1] = -a * hbar * b.imag / (2.0 * d_val)
    y[0, 1] = hbar / 2.0
    y[1, 0] = -hbar / 2.0
    return MomentPair(labels=("x", "p", "y"), means=np.zeros(3), X=x, Y=y)


def example_purity(params: ExampleParams) -> float:
    """Purity of the reduced x-state, ``sqrt(D / (ac + Im(b)^2))``.

    Equals 1 exactly when ``b = 0`` (product state) and drops below 1 as
    soon as ``b`` entangles the modes.
    """
    return math.sqrt(params.D / (params.a * params.c + params.b.imag**2))


def saturation_residual(params: ExampleParams, cfg: PhysConfig = DEFAULT_CONFIG) -> float:
    """Gap ``Dx Dp - (hbar/2 + |sigma_xp|)`` of the commuting coupled bound.

    Nonnegative for every valid parameter set; zero exactly on the
    ``|Re b| = |Im b|`` diagonals.
    """
    mp = analytic_covariances(params, cfg)
    product = math.sqrt(float(mp.X[0, 0]) * float(mp.X[1, 1]))
    return product - (0.5 * cfg.hbar + abs(float(mp.X[0, 1])))


@dataclass(frozen=True)
class ScanRow:
    """One saturation-scan grid point; invalid rows mark ``D <= 0``."""

    re_b: float
    im_b: float
    valid: bool
    product: float = field(default=math.nan)
    rs_bound: float = field(default=math.nan)
    eq18_bound: float = field(default=math.nan)
    residual: float = field(default=math.nan)
    purity: float = field(default=math.nan)


#: CSV header of the saturation scan
SCAN_CSV_HEADER = "re_b,im_b,valid,product,rs_bound,eq18_bound,residual,purity"

# default scan window stays inside D > 0 for a = c = 1
_DEFAULT_SCAN_GRID = np.linspace(-0.9, 0.9, 37)


def saturation_scan(
    a: float = 1.0,
    c: float = 1.0,
    re_grid=None,
    im_grid=None,
    cfg: PhysConfig = DEFAULT_CONFIG,
):
    """Tabulate product, bounds, residual, and purity over a grid of ``b``.

    Grid points with ``D <= 0`` are kept in the output flagged invalid
    rather than silently dropped, so the scanned domain stays auditable.
    """
    re_grid = _DEFAULT_SCAN_GRID if re_grid is None else np.asarray(re_grid, dtype=float)
    im_grid = _DEFAULT_SCAN_GRID if im_grid is None else np.asarray(im_grid, dtype=float)
    rows = []
    for re_b in re_grid:
        for im_b in im_grid:
            if a * c - re_b**2 <= 0:
                rows.append(ScanRow(re_b=float(re_b), im_b=float(im_b), valid=False))
                continue
            params = ExampleParams(a=a, c=c, b=complex(re_b, im_b))
            mp = analytic_covariances(params, cfg)
            product = math.sqrt(float(mp.X[0, 0]) * float(mp.X[1, 1]))
            rows.append(
                ScanRow(
                    re_b=float(re_b),
                    im_b=float(im_b),
                    valid=True,
                    product=product,
                    rs_bound=rs_bound(mp),
                    eq18_bound=coupled_bound_commuting(mp),
                    residual=saturation_residual(params, cfg),
                    purity=example_purity(params),
                )
            )
    return rows


def scan_to_csv(rows) -> str:
    lines = [SCAN_CSV_HEADER]
    for row in rows:
        lines.append(
            f"{row.re_b:.12g},{row.im_b:.12g},{int(row.valid)},"
            f"{row.product:.12g},{row.rs_bound:.12g},{row.eq18_bound:.12g},"
            f"{row.residual:.12g},{row.purity:.12g}"
        )
    return "\n".join(lines) + "\n"
