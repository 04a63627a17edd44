"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every tolerance is pinned here, nothing is deferred.
"""

import math
import time

import numpy as np
import pytest

from urbounds import (
    ExampleParams,
    FockMixedState,
    analytic_covariances,
    bound_report,
    coupled_bound,
    coupled_bound_commuting,
    covariance_matrices,
    example_purity,
    make_entangled_gaussian,
    make_thermal,
    min_mean_occupation,
    phi_exact,
    phi_tilde,
    purity,
    quadrature_observables,
    random_density_matrix,
    random_gaussian_state,
    reduced_moments,
    resolve_observable,
    rs_bound,
    run_sweep,
    saturation_residual,
)
from urbounds.moments import MomentPair

from conftest import draw_example_params
from test_frontier import occupation_oracle


def report_line(criterion, ok, detail):
    print(f"[acceptance {criterion}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_saturation_reproduction():
    start = time.monotonic()
    params = ExampleParams(a=1.0, c=1.0, b=0.5 + 0.5j)
    mp = analytic_covariances(params)
    product = math.sqrt(mp.X[0, 0] * mp.X[1, 1])
    eq18 = coupled_bound_commuting(mp)
    residual = saturation_residual(params)
    ok = (
        abs(product - 2.0 / 3.0) < 1e-12
        and abs(eq18 - (0.5 + abs(mp.X[0, 1]))) < 1e-12
        and abs(eq18 - 2.0 / 3.0) < 1e-12
        and abs(residual) < 1e-10
    )
    # the same numbers must come out of the full grid pipeline
    psi = make_entangled_gaussian(1.0, 1.0, 0.5 + 0.5j)
    obs = [resolve_observable(psi, l) for l in ("x", "p", "y")]
    rep = bound_report(psi, *obs)
    ok = ok and abs(rep.product - 2.0 / 3.0) < 1e-8 and abs(rep.commuting - 2.0 / 3.0) < 1e-8

    rng = np.random.default_rng(100)
    worst = 0.0
    count = 0
    while count < 20:
        a = rng.uniform(0.4, 2.0)
        c = rng.uniform(0.4, 2.0)
        beta = rng.uniform(0.05, 1.0)
        sign = rng.choice([-1.0, 1.0])
        if a * c - beta**2 <= 0.05:
            continue
        count += 1
        p = ExampleParams(a=a, c=c, b=complex(beta, sign * beta))
        worst = max(worst, abs(saturation_residual(p)))
    elapsed = time.monotonic() - start
    ok = ok and worst < 1e-9 and elapsed < 5.0
    report_line(
        1,
        ok,
        f"product=2/3, eq18=2/3, |residual|={abs(residual):.2e}, "
        f"worst over 20 balanced b: {worst:.2e}, runtime {elapsed:.2f}s",
    )


def test_criterion_2_bound_exceeds_pair_bound():
    mp = analytic_covariances(ExampleParams(a=1.0, c=1.0, b=0.5 + 0.5j))
    eq18 = coupled_bound_commuting(mp)
    g12 = rs_bound(mp)
    ok = (
        abs(eq18 - 2.0 / 3.0) < 1e-9
        and abs(g12 - math.sqrt(10.0) / 6.0) < 1e-9
        and eq18 - g12 > 0.13
    )
    report_line(2, ok, f"eq18={eq18:.12g} > G12={g12:.12g}, margin={eq18 - g12:.6f}")


def test_criterion_3_gaussian_purity_identity():
    worst = 0.0
    for seed in range(100):
        state = random_gaussian_state(seed)
        lhs = math.sqrt(float(np.linalg.det(state.cov)))
        rhs = state.hbar / (2.0 * purity(state))
        worst = max(worst, abs(lhs - rhs))
    ok = worst < 1e-8
    report_line(3, ok, f"max |sqrt(det sigma) - hbar/(2 mu)| = {worst:.2e} over 100 states")


def test_criterion_4_reduced_purity_formula():
    psi = make_entangled_gaussian(1.0, 1.0, 0.5 + 0.5j)
    _, mu_ref = reduced_moments(psi, "x")
    ok = abs(mu_ref - 0.774597) < 1e-6
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(20):
        params = draw_example_params(rng)
        psi = make_entangled_gaussian(params.a, params.c, params.b)
        _, mu = reduced_moments(psi, "x")
        worst = max(worst, abs(mu - example_purity(params)))
    ok = ok and worst < 1e-6
    report_line(
        4,
        ok,
        f"mu(1,1,0.5+0.5i)={mu_ref:.9f}, max |numeric - closed form| = {worst:.2e} over 20",
    )


def test_criterion_5_frontier_values():
    start = time.monotonic()
    ok = phi_exact(1.0) == 1.0
    # independent oracle first: random-start constrained search at mu = 0.25
    n_min_closed, probs = min_mean_occupation(0.25)
    n_min_oracle = occupation_oracle(0.25, probs.size + 3, seed=5)
    phi_oracle = 2.0 * n_min_oracle + 1.0
    ok = ok and abs(phi_oracle - 3.5857864) < 1e-6
    ok = ok and abs(phi_exact(0.25) - 3.5857864) < 1e-6
    worst_rel = max(
        abs(phi_exact(float(mu)) - phi_tilde(float(mu))) / phi_exact(float(mu))
        for mu in np.linspace(0.05, 1.0, 50)
    )
    ok = ok and worst_rel <= 0.02
    lead_ratio = phi_exact(0.05) * 9.0 * 0.05 / 8.0
    ok = ok and abs(lead_ratio - 1.0) <= 0.01
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    report_line(
        5,
        ok,
        f"phi(1)=1, phi(0.25)={phi_exact(0.25):.7f} (oracle {phi_oracle:.7f}), "
        f"max rel gap to phi_tilde {worst_rel:.4f}, phi(0.05)*9mu/8={lead_ratio:.4f}, "
        f"runtime {elapsed:.2f}s",
    )


def test_criterion_6_randomized_validity_sweep():
    start = time.monotonic()
    result = run_sweep(seed=0, trials=500, max_dim=8)
    elapsed = time.monotonic() - start
    ok = result.ok and result.instances == 1000 and elapsed < 60.0
    report_line(
        6,
        ok,
        f"{result.instances} instances (dims 2-8), violations={len(result.violations)}, "
        f"max violation {result.max_violation:.2e}, runtime {elapsed:.2f}s",
    )


def test_criterion_7_reduction_to_pair_bound():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        x11, x22, x33 = rng.uniform(0.1, 5.0, size=3)
        rho = rng.uniform(-0.95, 0.95)
        x12 = rho * math.sqrt(x11 * x22)
        y12 = rng.uniform(-1.0, 1.0) * math.sqrt(x11 * x22) * math.sqrt(max(1 - rho * rho, 0))
        x = np.array([[x11, x12, 0.0], [x12, x22, 0.0], [0.0, 0.0, x33]])
        y = np.array([[0.0, y12, 0.0], [-y12, 0.0, 0.0], [0.0, 0.0, 0.0]])
        mp = MomentPair(("z1", "z2", "z3"), np.zeros(3), x, y)
        cb = coupled_bound(mp)
        rs = rs_bound(mp)
        rel = 0.0 if cb.bound == rs else abs(cb.bound - rs) / max(abs(rs), 1e-300)
        worst = max(worst, rel)
    ok = worst <= 1e-14
    report_line(7, ok, f"max relative gap coupled vs pair bound on decoupled inputs: {worst:.2e}")


def test_criterion_8_thermal_sanity():
    state = make_thermal(omega=1.0, T=1.0)
    product = float(state.cov[0, 0] * state.cov[1, 1])
    mu = purity(state)
    # closed-form oracle evaluated in place: [(hbar/2) coth(0.5)]^2 and tanh(0.5)
    coth_half = 1.0 / math.tanh(0.5)
    product_oracle = (0.5 * coth_half) ** 2
    ok = abs(product - product_oracle) < 1e-5
    ok = ok and abs(mu - 0.462117) < 1e-5
    # consistency between the coth form and the determinant identity
    det_route = state.hbar / (2.0 * math.sqrt(float(np.linalg.det(state.cov))))
    ok = ok and abs(det_route - mu) < 1e-12
    # cross-check against the number-basis representation
    nbar = 1.0 / (math.exp(1.0) - 1.0)
    probs = (nbar / (1 + nbar)) ** np.arange(64) / (1 + nbar)
    rho = FockMixedState(rho=np.diag(probs / probs.sum()).astype(complex))
    obs = quadrature_observables(64)
    mp = covariance_matrices(rho, list(obs))
    ok = ok and abs(mp.X[0, 0] * mp.X[1, 1] - product) < 1e-9
    ok = ok and abs(purity(rho) - mu) < 1e-9
    report_line(
        8,
        ok,
        f"sigma_xx*sigma_pp={product:.7f} (coth oracle {product_oracle:.7f}), "
        f"mu={mu:.6f}, Fock cross-check agrees",
    )
