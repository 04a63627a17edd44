import math

import numpy as np
import pytest

from urbounds import (
    DegenerateInputError,
    DomainError,
    GaussianState,
    MomentPair,
    PhysConfig,
    ThirdObservableDeterministicError,
    WrongRegimeError,
    bound_report,
    correlation_form,
    coupled_bound,
    coupled_bound_commuting,
    covariance_matrices,
    gram_psd_check,
    make_correlated_coherent,
    make_entangled_gaussian,
    make_thermal,
    phi_asymptotic,
    phi_tilde,
    purity,
    purity_bound,
    random_density_matrix,
    random_gaussian_state,
    random_hermitian,
    resolve_observable,
    robertson_bound,
    rs_bound,
    triple_det_residual,
)
from urbounds.twomode import ExampleParams, analytic_covariances

REFERENCE = ExampleParams(a=1.0, c=1.0, b=0.5 + 0.5j)


def pair_mp(x11, x22, x12, y12):
    x = np.array([[x11, x12], [x12, x22]])
    y = np.array([[0.0, y12], [-y12, 0.0]])
    return MomentPair(labels=("z1", "z2"), means=np.zeros(2), X=x, Y=y)


def random_triple_mp(seed, dim=6):
    state = random_density_matrix(seed, dim)
    obs = [random_hermitian(10 * seed + k, dim, label=f"z{k + 1}") for k in range(3)]
    return covariance_matrices(state, obs)


class TestRsBound:
    def test_coherent_saturation(self):
        psi = make_correlated_coherent(0.5, 0.0)
        obs = [resolve_observable(psi, l) for l in ("x", "p")]
        mp = covariance_matrices(psi, obs)
        product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
        assert rs_bound(mp) == pytest.approx(0.5, abs=1e-9)
        assert product == pytest.approx(rs_bound(mp), abs=1e-9)

    def test_reference_arithmetic(self):
        mp = pair_mp(1.0, 1.0, 1.0 / 6.0, 0.5)
        assert rs_bound(mp) == pytest.approx(math.sqrt(10.0) / 6.0, rel=1e-15)

    def test_zero_moments(self):
        assert rs_bound(pair_mp(1.0, 1.0, 0.0, 0.0)) == 0.0

    def test_robertson_is_commutator_only(self):
        mp = pair_mp(1.0, 1.0, 0.3, 0.5)
        assert robertson_bound(mp) == 0.5


class TestCorrelationForm:
    def test_correlated_state_achieves_bound(self):
        psi = make_correlated_coherent(0.5, 0.6)
        obs = [resolve_observable(psi, l) for l in ("x", "p")]
        mp = covariance_matrices(psi, obs)
        r, bound = correlation_form(mp)
        assert r == pytest.approx(0.6, abs=1e-9)
        assert bound == pytest.approx(0.390625, abs=1e-9)
        assert mp.X[0, 0] * mp.X[1, 1] == pytest.approx(bound, abs=1e-9)

    def test_uncorrelated_floor(self):
        r, bound = correlation_form(pair_mp(0.5, 0.5, 0.0, 0.5))
        assert r == 0.0
        assert bound == pytest.approx(0.25, rel=1e-15)

    def test_reference_point_arithmetic(self):
        mp = analytic_covariances(REFERENCE)
        r, bound = correlation_form(mp)
        assert r == pytest.approx(0.25, rel=1e-12)
        assert bound == pytest.approx(0.25 / (1 - 0.0625), rel=1e-12)
        assert bound <= mp.X[0, 0] * mp.X[1, 1] + 1e-12

    def test_zero_variance_rejected(self):
        with pytest.raises(DegenerateInputError):
            correlation_form(pair_mp(0.0, 1.0, 0.0, 0.5))


class TestTripleDetResidual:
    def test_identity_matrix(self):
        mp = MomentPair(("a", "b", "c"), np.zeros(3), np.eye(3), np.zeros((3, 3)))
        assert triple_det_residual(mp) == pytest.approx(1.0, rel=1e-15)

    def test_reference_point_is_rank_deficient(self):
        mp = analytic_covariances(REFERENCE)
        scale = mp.X[0, 0] * mp.X[1, 1] * mp.X[2, 2]
        assert abs(triple_det_residual(mp)) <= 1e-10 * scale
        assert abs(gram_psd_check(mp).det_f) <= 1e-10 * scale

    def test_random_triple_nonnegative(self):
        mp = random_triple_mp(11, dim=6)
        assert triple_det_residual(mp) >= 0.0

    def test_equals_gram_determinant_100_random(self):
        for seed in range(100):
            mp = random_triple_mp(seed, dim=5)
            det_f = gram_psd_check(mp).det_f
            residual = triple_det_residual(mp)
            assert residual == pytest.approx(det_f, rel=1e-10, abs=1e-13 * abs(mp.scale()) ** 3)

    def test_needs_three_observables(self):
        with pytest.raises(DomainError):
            triple_det_residual(pair_mp(1.0, 1.0, 0.0, 0.5))


class TestCoupledBound:
    def test_decoupled_third_reduces_to_rs_bitwise(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            x11, x22, x33 = rng.uniform(0.2, 3.0, size=3)
            x12 = rng.uniform(-0.9, 0.9) * math.sqrt(x11 * x22)
            y12 = rng.uniform(-0.9, 0.9) * math.sqrt(x11 * x22)
            x = np.array([[x11, x12, 0.0], [x12, x22, 0.0], [0.0, 0.0, x33]])
            y = np.array([[0.0, y12, 0.0], [-y12, 0.0, 0.0], [0.0, 0.0, 0.0]])
            mp = MomentPair(("z1", "z2", "z3"), np.zeros(3), x, y)
            cb = coupled_bound(mp)
            assert cb.omega == 0.0
            assert cb.gamma == 0.0
            assert cb.bound == rs_bound(mp)  # identical code path, bit level

    def test_reference_point_ingredients(self):
        mp = analytic_covariances(REFERENCE)
        cb = coupled_bound(mp)
        assert cb.omega == pytest.approx(1.0 / 6.0, rel=1e-12)
        assert cb.gamma == pytest.approx(-1.0 / 36.0, rel=1e-12)
        # with the omega^2 term the radicand is (10 + 1 - 2)/36 = 1/4
        assert cb.bound == pytest.approx(2.0 / 3.0, rel=1e-12)
        assert coupled_bound_commuting(mp) == pytest.approx(cb.bound, rel=1e-12)

    def test_random_triples_stay_below_product(self):
        for seed in range(100):
            mp = random_triple_mp(seed, dim=8)
            product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
            cb = coupled_bound(mp)
            assert cb.bound is not None
            assert cb.bound <= product * (1 + 1e-9)

    def test_always_dominates_pair_bound(self):
        # |Gamma| <= G12 * Omega (Cauchy-Schwarz), so the radicand is at least
        # (G12 - Omega)^2 and the coupled bound can never undercut G12
        for seed in range(100):
            mp = random_triple_mp(seed + 300, dim=6)
            cb = coupled_bound(mp)
            assert cb.bound >= rs_bound(mp) - 1e-12 * abs(mp.scale())

    def test_deterministic_third_rejected(self):
        x = np.diag([1.0, 1.0, 0.0])
        mp = MomentPair(("a", "b", "c"), np.zeros(3), x, np.zeros((3, 3)))
        with pytest.raises(ThirdObservableDeterministicError):
            coupled_bound(mp)

    def test_quadratic_root_equivalence(self):
        # the bound must match the largest root of X33 t^2 - 2 sqrt(ab) t - c
        for seed in range(60):
            mp = random_triple_mp(seed + 500, dim=7)
            x, y = mp.X, mp.Y
            x33 = x[2, 2]
            g12_sq = x[0, 1] ** 2 + y[0, 1] ** 2
            a_coef = x[1, 2] ** 2 + y[1, 2] ** 2
            b_coef = x[0, 2] ** 2 + y[0, 2] ** 2
            gamma = (
                x[0, 1] * (y[1, 2] * y[2, 0] - x[1, 2] * x[2, 0])
                + y[0, 1] * (x[1, 2] * y[2, 0] + y[1, 2] * x[2, 0])
            ) / x33
            c_coef = x33 * g12_sq + 2.0 * gamma * x33
            disc = a_coef * b_coef + c_coef * x33
            root = (math.sqrt(a_coef * b_coef) + math.sqrt(disc)) / x33
            cb = coupled_bound(mp)
            assert cb.bound == pytest.approx(root, rel=1e-12)

    def test_scaling_homogeneity(self):
        dim = 6
        state = random_density_matrix(42, dim)
        obs = [random_hermitian(60 + k, dim, label=f"z{k + 1}") for k in range(3)]
        lam = 3.7
        scaled_z1 = type(obs[0]).from_matrix("z1s", lam * obs[0].matrix)
        mp = covariance_matrices(state, obs)
        mp_s = covariance_matrices(state, [scaled_z1, obs[1], obs[2]])
        cb, cb_s = coupled_bound(mp), coupled_bound(mp_s)
        product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
        product_s = math.sqrt(mp_s.X[0, 0] * mp_s.X[1, 1])
        assert product_s == pytest.approx(lam * product, rel=1e-10)
        assert rs_bound(mp_s) == pytest.approx(lam * rs_bound(mp), rel=1e-10)
        assert cb_s.omega == pytest.approx(lam * cb.omega, rel=1e-10)
        assert cb_s.bound == pytest.approx(lam * cb.bound, rel=1e-10)
        slack = product - cb.bound
        slack_s = product_s - cb_s.bound
        assert slack_s == pytest.approx(lam * slack, rel=1e-8, abs=1e-12)


class TestCoupledBoundCommuting:
    def test_reference_point_saturates(self):
        mp = analytic_covariances(REFERENCE)
        # X12 equals X13 X23 / X33 exactly, so the bound is hbar/2 + |X12|
        assert mp.X[0, 1] == pytest.approx(mp.X[0, 2] * mp.X[1, 2] / mp.X[2, 2], rel=1e-14)
        bound = coupled_bound_commuting(mp)
        assert bound == pytest.approx(0.5 + 1.0 / 6.0, rel=1e-12)
        product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
        assert product == pytest.approx(bound, rel=1e-12)

    def test_zero_cross_covariance_reduces_to_rs(self):
        mp = analytic_covariances(ExampleParams(a=1.0, c=1.0, b=0.5j))
        assert mp.X[0, 2] == 0.0
        assert coupled_bound_commuting(mp) == pytest.approx(rs_bound(mp), rel=1e-15)

    def test_real_coupling_not_tight(self):
        mp = analytic_covariances(ExampleParams(a=1.0, c=1.0, b=0.5))
        bound = coupled_bound_commuting(mp)
        product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
        assert bound == pytest.approx(0.5, rel=1e-12)
        assert product == pytest.approx(math.sqrt(1.0 / 3.0), rel=1e-12)
        assert product > bound

    def test_wrong_regime_rejected(self):
        mp = random_triple_mp(3, dim=5)
        assert abs(mp.Y[0, 2]) > 1e-6  # random Hermitians do not commute
        with pytest.raises(WrongRegimeError):
            coupled_bound_commuting(mp)

    def test_ordering_in_commuting_regime(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            params = ExampleParams(
                a=rng.uniform(0.5, 2.0),
                c=rng.uniform(0.5, 2.0),
                b=complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.9, 0.9)),
            )
            mp = analytic_covariances(params)
            eq18 = coupled_bound_commuting(mp)
            rs = rs_bound(mp)
            rob = robertson_bound(mp)
            assert eq18 >= rs - 1e-12 * mp.scale()
            assert rs >= rob - 1e-12 * mp.scale()
            assert rob >= 0.0


class TestBoundReport:
    def test_vacuum_with_independent_third(self):
        vacuum2 = GaussianState(n_modes=2, mean=np.zeros(4), cov=0.5 * np.eye(4), hbar=1.0)
        obs = [resolve_observable(vacuum2, l) for l in ("x", "p", "y")]
        report = bound_report(vacuum2, *obs)
        assert report.best_bound == pytest.approx(0.5, rel=1e-12)
        assert report.slack == pytest.approx(0.0, abs=1e-12)
        assert not report.violated

    def test_reference_point_report(self):
        psi = make_entangled_gaussian(1.0, 1.0, 0.5 + 0.5j)
        obs = [resolve_observable(psi, l) for l in ("x", "p", "y")]
        report = bound_report(psi, *obs)
        assert report.product == pytest.approx(2.0 / 3.0, abs=1e-8)
        assert report.rs == pytest.approx(math.sqrt(10.0) / 6.0, abs=1e-8)
        assert report.best_bound == pytest.approx(2.0 / 3.0, abs=1e-8)
        assert report.commuting == pytest.approx(2.0 / 3.0, abs=1e-8)
        assert report.best_bound > report.rs + 0.13
        assert not report.violated

    def test_thermal_pair_with_uncoupled_third(self):
        thermal = make_thermal(1.0, 1.0)
        cov = np.zeros((4, 4))
        cov[:2, :2] = thermal.cov
        cov[2:, 2:] = 0.5 * np.eye(2)
        state = GaussianState(n_modes=2, mean=np.zeros(4), cov=cov, hbar=1.0)
        obs = [resolve_observable(state, l) for l in ("x", "p", "y")]
        report = bound_report(state, *obs)
        assert report.best_bound == pytest.approx(0.5, rel=1e-12)
        assert report.product == pytest.approx(0.5 / math.tanh(0.5), rel=1e-12)
        assert report.slack > 0.5  # far from saturation

    def test_pair_only_report(self):
        psi = make_correlated_coherent(0.5, 0.6)
        obs = [resolve_observable(psi, l) for l in ("x", "p")]
        report = bound_report(psi, obs[0], obs[1])
        assert report.det3_residual is None
        assert report.commuting is None
        assert report.new_bound is None and not report.new_bound_vacuous
        assert report.corr_coeff_r == pytest.approx(0.6, abs=1e-9)
        assert report.variance_product == pytest.approx(0.390625, abs=1e-9)

    def test_json_dict_shape(self):
        psi = make_entangled_gaussian(1.0, 1.0, 0.5 + 0.5j)
        obs = [resolve_observable(psi, l) for l in ("x", "p", "y")]
        d = bound_report(psi, *obs).to_dict()
        for key in (
            "product",
            "heisenberg",
            "robertson",
            "rs",
            "corr_coeff_r",
            "new_bound",
            "omega",
            "gamma",
            "det3_residual",
            "commuting",
            "best_bound",
            "slack",
        ):
            assert key in d


class TestPurityBoundFunctions:
    def test_phi_tilde_is_one_at_unit_purity(self):
        assert phi_tilde(1.0) == pytest.approx(1.0, rel=1e-15)

    def test_phi_tilde_quarter(self):
        expected = (4.0 + math.sqrt(16.0 + 9.0 * 0.0625)) / 2.25
        assert phi_tilde(0.25) == pytest.approx(expected, rel=1e-15)
        assert phi_tilde(0.25) == pytest.approx(3.58653, abs=1e-5)
        assert phi_asymptotic(0.25) == pytest.approx(3.58681, abs=1e-5)

    def test_phi_tilde_against_tabulated_point(self):
        assert phi_tilde(0.70711) == pytest.approx(1.34000, abs=5e-5)

    def test_purity_bound_carries_hbar(self):
        assert purity_bound(1.0) == pytest.approx(0.5, rel=1e-15)
        assert purity_bound(1.0, PhysConfig(hbar=2.0)) == pytest.approx(1.0, rel=1e-15)

    def test_domain_errors(self):
        for mu in (0.0, -0.5, 1.2):
            with pytest.raises(DomainError):
                phi_tilde(mu)
            with pytest.raises(DomainError):
                phi_asymptotic(mu)

    def test_gaussian_purity_chain(self):
        # sqrt(det sigma) = hbar/(2 mu) never falls below the phi_tilde floor
        for seed in range(100):
            state = random_gaussian_state(seed)
            mu = purity(state)
            lhs = math.sqrt(float(np.linalg.det(state.cov)))
            assert lhs == pytest.approx(0.5 / mu, rel=1e-10)
            assert lhs >= purity_bound(mu) - 1e-9
