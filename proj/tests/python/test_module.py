"""Smoke tests for the _ctxlab extension module."""

import math

import numpy as np
import pytest


def test_version_string(ctx):
    assert ctx.__version__.count(".") == 2


def test_bloch_round_trip(ctx):
    s = ctx.BlochState(theta=0.3, phi=1.1)
    rho = ctx.bloch_to_density(s)
    assert rho.dim == 2
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)
    back = ctx.density_to_bloch(rho)
    assert back.theta == pytest.approx(0.3, abs=1e-10)
    assert back.phi == pytest.approx(1.1, abs=1e-10)


def test_vectorize_preserves_hs_inner_product(ctx):
    rng = np.random.default_rng(7)
    g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    a = 0.5 * (g + g.conj().T)
    g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = 0.5 * (g + g.conj().T)
    va = ctx.vectorize_hermitian(a)
    vb = ctx.vectorize_hermitian(b)
    assert np.dot(va, vb) == pytest.approx(np.trace(a @ b).real, abs=1e-10)


def test_rank_test_antipodes_plus(ctx):
    pi = math.pi
    mats = [
        np.asarray(ctx.bloch_to_density(ctx.BlochState(t, 0.0)).matrix)
        for t in (0.0, pi / 2, pi / 4)
    ]
    verdict = ctx.rank_test(ctx.StateSet(mats, ["z0", "z1", "plus"]))
    assert verdict.verdict == "NONCONTEXTUAL_INDEPENDENT"
    assert verdict.rank == 3
    assert verdict.certificate is None


def test_rank_test_dependent_with_certificate(ctx):
    z0 = np.diag([1.0, 0.0]).astype(complex)
    z1 = np.diag([0.0, 1.0]).astype(complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]], dtype=complex)
    verdict = ctx.rank_test(ctx.StateSet([z0, z1, plus, minus]))
    assert verdict.dependent
    alpha = np.asarray(verdict.certificate)
    combo = sum(a * m for a, m in zip(alpha, [z0, z1, plus, minus]))
    assert np.abs(combo).max() < 1e-10


def test_dual_frame_model_round_trip(ctx):
    pi = math.pi
    mats = [
        np.asarray(ctx.bloch_to_density(ctx.BlochState(t, 0.0)).matrix)
        for t in (0.0, pi / 2, pi / 4)
    ]
    states = ctx.StateSet(mats)
    frame = ctx.dual_frame(states)
    # Tr(rho_i F_j) = delta_ij
    for i, rho in enumerate(mats):
        for j, f in enumerate(frame.operators):
            want = 1.0 if i == j else 0.0
            assert np.trace(rho @ np.asarray(f)).real == pytest.approx(
                want, abs=1e-10
            )
    model = ctx.model_from_frame(states, frame)
    pvms = [ctx.random_pvm(2, 2, seed) for seed in range(5)]
    check = ctx.verify_model(states, model, pvms, 1e-8)
    assert check.passed
    assert check.max_deviation < 1e-8


def test_lp_oracle_matches_rank_test(ctx):
    z0 = np.diag([1.0, 0.0]).astype(complex)
    z1 = np.diag([0.0, 1.0]).astype(complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]], dtype=complex)

    independent = ctx.StateSet([z0, z1, plus])
    model = ctx.lp_oracle(independent, ctx.default_ansatz(independent))
    assert model is not None
    assert np.asarray(model.weights).min() >= -1e-9

    dependent = ctx.StateSet([z0, z1, plus, minus])
    assert ctx.lp_oracle(dependent, ctx.default_ansatz(dependent)) is None


def test_deutsch_clone_dimensions(ctx):
    rho = ctx.bloch_to_density(ctx.BlochState(0.7, 0.2))
    cloned = ctx.deutsch_clone(rho)
    assert cloned.dim == 4
    back = ctx.partial_trace(cloned, 2, 2, keep="A")
    assert np.allclose(np.asarray(back.matrix), np.asarray(rho.matrix))


def test_weinberg_evolution(ctx):
    h = ctx.WeinbergHamiltonian([0.0, 0.0, 1.0])  # hbar(a) = a^2
    assert h.is_nonlinear()
    theta = math.pi / 4
    omega = ctx.weinberg_omega(h, theta)
    assert omega == pytest.approx(2.0 * math.sin(theta) ** 2)
    out = ctx.weinberg_evolve(ctx.BlochState(theta, 0.0), h, 1.0)
    assert out.theta == pytest.approx(theta)
    assert out.phi == pytest.approx(2.0 * math.pi - omega)


def test_counterexample_map_injective_on_coarse_grid(ctx):
    pi = math.pi
    seen = set()
    n = 16
    for i in range(n):
        for j in range(n):
            s = ctx.BlochState(i / n * (pi / 2), j / n * (2 * pi))
            out = ctx.counterexample_map(s, precision_bits=8)
            seen.add((round(out.theta, 12), round(out.phi, 12)))
    assert len(seen) == n * n


def test_sn_channel_zero_gravity_is_identity(ctx):
    cfg = ctx.SNConfig()
    cfg.mass = 1e-17
    cfg.g_newton = 0.0
    cfg.reg_radius = 1e-7
    cfg.a0 = 1e-14
    n = 200
    cfg.time_grid = [k / n for k in range(n + 1)]
    f0 = 2e-23
    half = [f0] * (n // 2) + [-f0] * (n // 2)
    cfg.force_up = half
    cfg.force_down = [-f for f in half]
    cfg.validate()

    res = ctx.sn_moment_evolution(cfg, 0.5)
    assert res.phi_up[-1] == pytest.approx(res.phi_down[-1], abs=1e-12)

    s = ctx.BlochState(0.6, 1.0)
    out = ctx.sn_channel(s, cfg)
    assert out.theta == pytest.approx(s.theta)
    assert out.phi == pytest.approx(s.phi, abs=1e-12)


def test_run_scenario_json_roundtrip(ctx, configs_dir):
    import json

    cfg_text = (configs_dir / "deutsch_antipodes.json").read_text()
    report = json.loads(ctx.run_scenario_json(cfg_text))
    assert report["map_kind"] == "DEUTSCH"
    tags = [c["tag"] for c in report["checkpoints"]]
    assert tags == ["pre", "post"]
    assert report["checkpoints"][1]["verdict"]["verdict"] == (
        "NONCONTEXTUAL_INDEPENDENT"
    )


def test_invalid_inputs_raise(ctx):
    with pytest.raises(ctx.CtxlabError):
        ctx.DensityMatrix(np.diag([1.5, -0.5]).astype(complex))
    with pytest.raises(ctx.CtxlabError):
        ctx.BlochState(-0.1, 0.0)
