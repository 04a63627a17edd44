"""Uncertainty-product lower bounds for observable pairs coupled to a third.

The package builds covariance data for Gaussian, Fock-basis, and grid
states, evaluates the full hierarchy of uncertainty bounds (commutator
floor, covariance-corrected pair bound, coupled three-observable bound and
its commuting-third form), reproduces the saturating entangled-Gaussian
example in closed form, and computes the exact purity-constrained frontier.
"""

from .bounds import (
    BOUND_CSV_HEADER,
    BoundReport,
    CoupledBound,
    bound_csv_row,
    bound_report,
    correlation_form,
    coupled_bound,
    coupled_bound_commuting,
    phi_asymptotic,
    phi_tilde,
    purity_bound,
    report_from_moments,
    robertson_bound,
    rs_bound,
    triple_det_residual,
)
from .config import DEFAULT_CONFIG, PhysConfig
from .errors import (
    DegenerateInputError,
    DomainError,
    GridTooSmallError,
    IncompatibleRepresentationError,
    NonNormalizableError,
    QuadratureAccuracyError,
    ThirdObservableDeterministicError,
    TruncationError,
    ValidationError,
    WrongRegimeError,
)
from .frontier import (
    FRONTIER_CSV_HEADER,
    FrontierPoint,
    frontier_table,
    frontier_to_csv,
    min_mean_occupation,
    phi_exact,
)
from .grids import GridAxis, centered_axis
from .moments import (
    MomentPair,
    PsdCertificate,
    covariance_matrices,
    gram_psd_check,
    purity,
    reduced_moments,
    triple_residual_scale,
)
from .states import (
    FockMixedState,
    GaussianState,
    GridWavefunction,
    Observable,
    lowering_operator,
    make_coherent_fock,
    make_correlated_coherent,
    make_entangled_gaussian,
    make_fock_mixture,
    make_thermal,
    observable_from_obj,
    quadrature_observables,
    random_density_matrix,
    random_gaussian_state,
    random_hermitian,
    resolve_observable,
    state_from_dict,
    state_to_dict,
    symplectic_form,
)
from .twomode import (
    SCAN_CSV_HEADER,
    ExampleParams,
    ScanRow,
    analytic_covariances,
    example_purity,
    saturation_residual,
    saturation_scan,
    scan_to_csv,
)
from .verify import SweepResult, run_sweep, thread_budget

__version__ = "0.1.0"
