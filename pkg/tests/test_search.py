"""Annealer, objectives, gain refinement and snapping."""

from __future__ import annotations

import math

import numpy as np
import pytest

from gainforge.constructions import catalog_entry, complete, toral
from gainforge.errors import Disconnected, LengthMismatch
from gainforge.gains import Gain, build, switching_isomorphic
from gainforge.search import (
    SearchConfig,
    SearchResult,
    anneal,
    objective_cospectral,
    objective_two_ev,
    refine_gains,
    run_search,
    snap_gains,
)
from gainforge.spectral import certify_two_ev

ONE = Gain.exact(0, 1)
QUICK = dict(t0=1.0, alpha=0.9, iters_per_temp=500, tau=1e-4, epsilon=1e-6)


def c4():
    return build(4, [(0, 1, ONE), (1, 2, ONE), (2, 3, ONE), (3, 0, ONE)])


# -- objectives -------------------------------------------------------------------

def test_objective_zero_on_a_two_ev_graph():
    g = catalog_entry("W4").build()
    assert objective_two_ev(g.matrix()) < 1e-12


def test_objective_on_the_plain_four_cycle():
    # eigenvalues 2, 0, 0, -2: each zero mode contributes (0-2)(0+2) = -4
    assert objective_two_ev(c4().matrix()) == pytest.approx(4 * math.sqrt(2))


def test_objective_on_the_empty_matrix():
    assert objective_two_ev(np.zeros((0, 0))) == 0.0


def test_cospectral_objective():
    A = complete(4).matrix()
    target = np.array([-1.0, -1.0, -1.0, 3.0])
    assert objective_cospectral(A, target) == pytest.approx(0.0, abs=1e-24)
    assert objective_cospectral(A, target + [0, 0, 0, 0.5]) == pytest.approx(0.25)
    with pytest.raises(LengthMismatch):
        objective_cospectral(A, np.zeros(5))


# -- configuration ----------------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(alpha=1.0)
    with pytest.raises(ValueError):
        SearchConfig(tau=2.0, t0=1.0)
    with pytest.raises(ValueError):
        SearchConfig(epsilon=0.0)
    with pytest.raises(ValueError):
        SearchConfig(iters_per_temp=0)


# -- annealing ---------------------------------------------------------------------

def test_anneal_requires_connected_support():
    g = build(4, [(0, 1, ONE), (2, 3, ONE)])
    with pytest.raises(Disconnected):
        anneal(g, SearchConfig(**QUICK))


def test_anneal_is_deterministic_for_a_fixed_seed():
    cfg = SearchConfig(seed=11, **QUICK)
    r1 = anneal(c4(), cfg)
    r2 = anneal(c4(), cfg)
    assert r1.best_f == r2.best_f
    assert r1.trace == r2.trace
    assert np.array_equal(r1.best_gains.matrix(), r2.best_gains.matrix())


def test_anneal_trace_temperatures_cool_geometrically():
    cfg = SearchConfig(seed=3, **QUICK)
    res = anneal(c4(), cfg)
    temps = [t for t, _ in res.trace]
    assert temps[0] == pytest.approx(1.0)
    for a, b in zip(temps, temps[1:]):
        assert b == pytest.approx(a * 0.9)


def test_run_search_on_the_four_cycle_snaps_to_the_quarter_turn_square():
    res = run_search(c4(), SearchConfig(seed=0, **QUICK))
    assert res.status == "Converged" and res.best_f < 1e-6
    assert res.snapped is not None and res.snapped_cert is not None
    assert res.snapped_cert.theta1 == pytest.approx(math.sqrt(2), abs=1e-9)
    target = catalog_entry("IG(W2)").build()
    assert switching_isomorphic(res.snapped, target, tol=1e-6) is not None


def test_run_search_reports_exhausted_on_a_hopeless_support():
    # C8 complement: 8 vertices, each joined to the 5 non-neighbours
    edges = []
    for u in range(8):
        for v in range(u + 1, 8):
            if (v - u) % 8 not in (1, 7):
                edges.append((u, v, ONE))
    g = build(8, edges)
    res = run_search(g, SearchConfig(seed=0, **QUICK))
    assert res.status == "Exhausted"
    assert res.best_f > 1e-6
    assert res.snapped is None


def test_extra_chains_only_improve_the_result():
    base = anneal(c4(), SearchConfig(seed=9, **QUICK))
    multi = anneal(c4(), SearchConfig(seed=9, chains=3, **QUICK))
    assert multi.best_f <= base.best_f


def test_cospectral_search_hits_a_prescribed_spectrum():
    target = np.array([2.0, 0.0, 0.0, -2.0])
    cfg = SearchConfig(seed=4, **QUICK)
    res = anneal(c4(), cfg, objective=lambda A: objective_cospectral(A, target))
    assert res.best_f < 1e-6  # the all-ones gain already does it


# -- refinement and snapping ----------------------------------------------------

def test_refine_tightens_a_jittered_solution():
    rng = np.random.default_rng(7)
    g = toral(3, Gain.exact(1, 5))
    noisy = build(g.n, [
        (u, v, Gain.numeric(w.value * np.exp(1j * rng.normal(0, 1e-3)), tol=1e-2))
        for u, v, w in g.edges()
    ])
    f0 = objective_two_ev(noisy.matrix())
    refined = refine_gains(noisy)
    assert objective_two_ev(refined.matrix()) < min(f0, 1e-8)


def test_snap_recovers_exact_roots_of_unity():
    g = toral(3, Gain.exact(1, 8))
    jig = build(g.n, [
        (u, v, Gain.numeric(w.value * np.exp(2e-4j), tol=1e-3))
        for u, v, w in g.edges()
    ])
    snapped = snap_gains(jig, Q=24)
    assert snapped is not None
    for _, _, w in snapped.edges():
        assert w.is_exact


def test_snap_returns_none_for_irrational_angles():
    g = catalog_entry("Renes7").build()
    assert snap_gains(g, Q=24) is None or all(
        w.is_exact for _, _, w in snap_gains(g, Q=24).edges())
    # the circulant presentation carries gains at irrational angles
    from gainforge.gains import normalize_spanning_tree
    h, _ = normalize_spanning_tree(g)
    assert snap_gains(h, Q=24) is None


def test_snap_is_identity_on_exact_graphs():
    g = complete(4)
    snapped = snap_gains(g, Q=24)
    assert snapped is not None
    assert np.array_equal(snapped.matrix(), g.matrix())
