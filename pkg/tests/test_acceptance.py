"""Acceptance suite: one test (and one printed PASS/FAIL line) per criterion.

Each test exercises a headline guarantee of the package end to end, at the
tolerance the guarantee is stated with.  Slow items (the annealer
reproduction run, the 126-vertex eigensolves) carry explicit wall-clock
budgets instead of implicit ones.
"""

from __future__ import annotations

import dataclasses
import math
import time
from itertools import combinations

import numpy as np
import pytest

from gainforge.cli import catalog_verify_all
from gainforge.constructions import (
    catalog,
    catalog_entry,
    complete,
    double,
    example_1,
    fixed_catalog,
    k222_gamma,
    k_star_pqr,
    named_weighing,
    renes,
    toral,
)
from gainforge.gains import (
    Gain,
    apply_witness,
    build,
    converse,
    cycle_gain,
    relabel,
    switch,
    switching_equivalent,
    switching_isomorphic,
    structure_stats,
)
from gainforge.lines import (
    angle_profile,
    bounds_check,
    dismantle,
    find_basis_partition,
    gain_to_lines,
    geometry_lines,
    lines_to_gain,
    tightness_check,
)
from gainforge.search import SearchConfig, run_search
from gainforge.spectral import (
    certify_two_ev,
    char_poly_elementary,
    char_poly_from_eigenvalues,
    eigenvalues,
)

ONE = Gain.exact(0, 1)
S3 = math.sqrt(3.0)
QUICK = dict(t0=1.0, alpha=0.9, iters_per_temp=500, tau=1e-4, epsilon=1e-6)


def _report(num: int, label: str, problems: list[str]) -> None:
    ok = not problems
    print(f"{'PASS' if ok else 'FAIL'} criterion-{num:02d} {label}")
    assert ok, f"criterion-{num:02d} {label}: " + "; ".join(problems)


def _entry_graph(entry, rng=None):
    params = {}
    for i, p in enumerate(entry.parameters):
        if rng is None:
            params[p] = Gain.exact(1, 7)
        else:
            params[p] = Gain.numeric(np.exp(2j * np.pi * rng.random()), tol=1e-12)
    return entry.build(**params)


def _negate(g):
    return build(g.n, [(u, v, -w) for (u, v, w) in g.edges()])


def _normalized(g, cert):
    return _negate(g) if cert is not None and cert.negated else g


def _certified_catalog():
    out = []
    for entry in catalog():
        g = _entry_graph(entry)
        cert = certify_two_ev(g)
        assert cert is not None, entry.name
        out.append((entry, g, cert))
    return out


# -- 1: the registry certifies at its published spectra ---------------------------

def test_criterion_01_catalog_spectra():
    problems = []
    rows, ok = catalog_verify_all(tol=1e-8, draws=5)
    if not ok:
        problems += [r for r in rows[1:] if r.endswith("FAIL")]
    degree4 = [e for e in catalog() if "degree4" in e.tags]
    if len(degree4) != 8:
        problems.append(f"degree-4 families: {len(degree4)} != 8")
    small_mult = {("K_n" if e.name.startswith("K") and e.name[1:].isdigit()
                   else e.name)
                  for e in catalog() if "table2" in e.tags}
    if len(small_mult) != 11:
        problems.append(f"small-multiplicity rows: {len(small_mult)} != 11")
    _report(1, "catalog certifies at published spectra "
               "(8 degree-4 families, 11 small-multiplicity rows, "
               "5 draws per free parameter, tol 1e-8)", problems)


# -- 2: weighing matrices are exactly unitary-orthogonal --------------------------

def test_criterion_02_weighing_identities():
    problems = []
    samples = [("W2", None), ("W3", None), ("W4", None), ("W5", None),
               ("W7", None)]
    samples += [("Z", Gain.exact(p, q))
                for p, q in [(0, 1), (1, 2), (1, 4), (1, 3), (1, 6)]]
    for name, x in samples:
        try:
            W = named_weighing(name) if x is None else named_weighing(name, x)
        except Exception as exc:            # construction IS the exact check
            problems.append(f"{name}: {exc}")
            continue
        if not W.is_exact:
            problems.append(f"{name}: not in exact arithmetic")
        M = W.matrix()
        if np.linalg.norm(M @ M.conj().T - W.weight * np.eye(W.n)) > 1e-12:
            problems.append(f"{name}: float residual too large")
    _report(2, "W2,W3,W4,W5,W7,Z give WW* = kI in exact arithmetic", problems)


# -- 3: doubling laws --------------------------------------------------------------

def test_criterion_03_doubling_laws():
    problems = []
    bases = [catalog_entry(n).build() for n in ("IG(W2)", "W4", "IG(W3)")]
    for g in bases:
        k = structure_stats(g).degrees[0]
        for kind, target in (("ND", math.sqrt(k + 1)),
                             ("SD", math.sqrt(2 * k)),
                             ("SDstar", math.sqrt(2 * k + 1))):
            h = double(g, kind)
            cert = certify_two_ev(h, tol=1e-9)
            if cert is None:
                problems.append(f"{kind} of n={g.n}: no certificate")
                continue
            if abs(cert.theta1 - target) > 1e-9 or abs(cert.theta2 + target) > 1e-9:
                problems.append(f"{kind} of n={g.n}: thetas off target {target}")
            if cert.m != h.n // 2:
                problems.append(f"{kind} of n={g.n}: multiplicities not balanced")
    _report(3, "ND/SD/SD* doubles certify at +-sqrt(k+1), +-sqrt(2k), "
               "+-sqrt(2k+1), tol 1e-9", problems)


# -- 4: the Gaussian-prime family -------------------------------------------------

def test_criterion_04_renes_family():
    problems = []
    for p in (3, 7, 11, 19):
        cert = certify_two_ev(renes(p))
        t1, t2 = math.sqrt(p + 1), -(p - 1) / math.sqrt(p + 1)
        if cert is None:
            problems.append(f"p={p}: no certificate")
            continue
        if abs(cert.theta1 - t1) > 1e-8 or abs(cert.theta2 - t2) > 1e-8:
            problems.append(f"p={p}: thetas off")
        if cert.m != (p - 1) // 2:
            problems.append(f"p={p}: mult {cert.m} != {(p - 1) // 2}")
    if switching_isomorphic(renes(7), example_1()) is None:
        problems.append("order-7 graph not switching-isomorphic to the "
                        "circulant presentation")
    _report(4, "renes(3,7,11,19) certify at sqrt(p+1), -(p-1)/sqrt(p+1); "
               "renes(7) matches the circulant form", problems)


# -- 5: the generalized-quadrangle graph -----------------------------------------

def test_criterion_05_gq22():
    problems = []
    g = fixed_catalog("GQ22")
    spec = eigenvalues(g)
    expected = sorted([3.0] * 6 + [-2.0] * 9)
    if np.max(np.abs(np.sort(spec.eigenvalues) - expected)) > 1e-8:
        problems.append("spectrum is not {3^6, -2^9}")
    for u, v, w in g.edges():
        if abs(w.value ** 6 - 1.0) > 1e-8:
            problems.append(f"gain on ({u},{v}) is not a sixth root of unity")
            break
    _report(5, "15-vertex quadrangle graph has spectrum {3^6,-2^9} with "
               "gains in T6", problems)


# -- 6: the large geometry graphs --------------------------------------------------

def test_criterion_06_geometry_graphs():
    problems = []
    t0 = time.perf_counter()
    targets = {
        "Witting": sorted([9 * S3] * 4 + [-S3] * 36),
        "ST33": sorted([16.0] * 5 + [-2.0] * 40),
    }
    for name, expected in targets.items():
        evs = np.sort(eigenvalues(catalog_entry(name).build()).eigenvalues)
        if np.max(np.abs(evs - expected)) > 1e-7:
            problems.append(f"{name}: spectrum off")
    ct = [np.sort(eigenvalues(catalog_entry(f"CoxeterTodd{b}").build()).eigenvalues)
          for b in (2, 3, 4)]
    expected = sorted([40.0] * 6 + [-2.0] * 120)
    for b, evs in zip((2, 3, 4), ct):
        if np.max(np.abs(evs - expected)) > 1e-7:
            problems.append(f"CoxeterTodd{b}: spectrum off")
    for (i, a), (j, b) in combinations(enumerate(ct), 2):
        if np.max(np.abs(a - b)) > 1e-7:
            problems.append(f"bases {i + 2} and {j + 2} not cospectral")
    elapsed = time.perf_counter() - t0
    if elapsed > 60:
        problems.append(f"took {elapsed:.0f}s > 60s")
    _report(6, "Witting {9sqrt3^4,-sqrt3^36}, ST33 {16^5,-2^40}, three "
               "Coxeter-Todd bases pairwise cospectral {40^6,-2^120}, "
               "under a minute", problems)


# -- 7: graphs -> lines -> graphs is the identity ---------------------------------

def test_criterion_07_frame_round_trip():
    problems = []
    for entry, g, cert in _certified_catalog():
        system = gain_to_lines(g, cert)
        rep = tightness_check(system)
        if not rep.is_tight or abs(rep.z - g.n / system.dim) > 1e-8:
            problems.append(f"{entry.name}: not tight at z=n/m")
        theta_min = -cert.theta1 if cert.negated else cert.theta2
        h = lines_to_gain(system, alpha=-1.0 / theta_min)
        if np.max(np.abs(h.matrix() - g.matrix())) > 1e-8:
            problems.append(f"{entry.name}: entries drift on the round trip")
    _report(7, "gain_to_lines then lines_to_gain reproduces every catalog "
               "graph to 1e-8 with z = n/m", problems)


# -- 8: dismantling tight systems into bases --------------------------------------

def test_criterion_08_dismantling():
    problems = []
    witting = geometry_lines("Witting")
    partition = find_basis_partition(witting)
    if partition is None or len(partition) != 10:
        problems.append("no 10-basis split of the 40 Witting lines")
    else:
        result = dismantle(witting, partition, alpha=1 / S3)
        for t in range(2, 11):
            cert = result.union_certificates[t - 1]
            if cert is None:
                problems.append(f"union {t}: no certificate")
                continue
            if (abs(cert.theta1 - (t - 1) * S3) > 1e-8
                    or abs(cert.theta2 + S3) > 1e-8
                    or cert.m != 4):
                problems.append(f"union {t}: wrong spectrum")
    mubs = geometry_lines("MUB_C3", t=4)
    result = dismantle(mubs, [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]],
                       alpha=1 / S3)
    for t in (2, 3, 4):
        cert = result.union_certificates[t - 1]
        if cert is None or abs(cert.theta1 - (t - 1) * S3) > 1e-8 \
                or abs(cert.theta2 + S3) > 1e-8 or cert.m != 3:
            problems.append(f"basis union {t}: wrong spectrum")
    _report(8, "Witting splits into 10 bases with unions at "
               "{(t-1)sqrt3^4, -sqrt3^(4(t-1))}; basis unions in C^3 "
               "likewise", problems)


# -- 9: two independent characteristic-polynomial routes --------------------------

def test_criterion_09_char_poly_oracle():
    problems = []
    for entry, g, _ in _certified_catalog():
        if g.n > 10:
            continue
        via_sums = np.array(char_poly_elementary(g))
        via_evs = np.array(char_poly_from_eigenvalues(
            list(eigenvalues(g).eigenvalues)))
        if np.max(np.abs(via_sums - via_evs)) > 1e-6:
            problems.append(f"{entry.name}: coefficient routes disagree")
    _report(9, "power-sum and eigenvalue characteristic polynomials agree "
               "to 1e-6 on every catalog graph with n <= 10", problems)


# -- 10: switching invariance ------------------------------------------------------

def test_criterion_10_invariance_suite():
    problems = []
    rng = np.random.default_rng(7041)
    for entry, g, _ in _certified_catalog():
        reference = np.sort(eigenvalues(g).eigenvalues)
        for trial in range(100):
            h = g
            if rng.random() < 0.5:
                h = converse(h)
            if rng.random() < 0.7:
                diag = [Gain.numeric(np.exp(2j * np.pi * rng.random()),
                                     tol=1e-12) for _ in range(h.n)]
                h = switch(h, diag)
            if rng.random() < 0.7:
                h = relabel(h, list(rng.permutation(h.n)))
            perturbed = np.sort(eigenvalues(h).eigenvalues)
            if np.max(np.abs(perturbed - reference)) > 1e-9:
                problems.append(f"{entry.name}: trial {trial} moved the spectrum")
                break
        diag = [Gain.numeric(np.exp(2j * np.pi * rng.random()), tol=1e-12)
                for _ in range(g.n)]
        switched = switch(g, diag)
        witness = switching_equivalent(g, switched)
        if witness is None:
            problems.append(f"{entry.name}: no witness for a pure switch")
        elif np.max(np.abs(apply_witness(g, witness).matrix()
                           - switched.matrix())) > 1e-9:
            problems.append(f"{entry.name}: witness does not reproduce the switch")
    _report(10, "100 random switch/relabel/converse perturbations per "
                "catalog graph leave spectra fixed to 1e-9; diagonal "
                "switches yield verified witnesses", problems)


# -- 11: a cospectral pair where only one side is regular --------------------------

def test_criterion_11_cospectral_pair():
    problems = []
    k77 = build(14, [(u, v, ONE) for u in range(7) for v in range(7, 14)])
    star = k_star_pqr(1, 4, 9)
    target = np.sort([7.0] + [0.0] * 12 + [-7.0])
    for name, g in (("balanced", k77), ("weighted-star", star)):
        evs = np.sort(eigenvalues(g).eigenvalues)
        if np.max(np.abs(evs - target)) > 1e-9:
            problems.append(f"{name}: spectrum is not {{+-7, 0^12}}")
    regular_flags = [structure_stats(k77).is_regular,
                     structure_stats(star).is_regular]
    if sum(regular_flags) != 1:
        problems.append(f"regularity flags {regular_flags}: expected exactly one")
    _report(11, "K_{7,7} and the (1,4,9) star share spectrum {+-7, 0^12} "
                "to 1e-9 and exactly one is regular", problems)


# -- 12: the annealer rediscovers the classification -------------------------------

def _classify(h, cert, targets, t6_family):
    h = _normalized(h, cert)
    for name, target in targets:
        if switching_isomorphic(h, target, tol=1e-6) is not None:
            return name
    if t6_family:
        for c in combinations(range(h.n), 3):
            try:
                t = cycle_gain(h, list(c))
            except Exception:
                continue
            for cand in (t, np.conj(t), -t, -np.conj(t)):
                x = Gain.numeric(cand / abs(cand), tol=1e-6)
                if switching_isomorphic(h, toral(3, x), tol=1e-6) is not None:
                    return "T6-family"
            break
    return None


def test_criterion_12_annealer_reproduction():
    problems = []
    t0 = time.perf_counter()
    cube_edges = [(u, v, ONE) for u in range(8) for v in range(u + 1, 8)
                  if bin(u ^ v).count("1") == 1]
    octa_edges = [(u, v, ONE) for u in range(6) for v in range(u + 1, 6)
                  if {u, v} not in ({0, 1}, {2, 3}, {4, 5})]
    supports = [
        ("C4", build(4, [(0, 1, ONE), (1, 2, ONE), (2, 3, ONE), (0, 3, ONE)]),
         [("IG(W2)", catalog_entry("IG(W2)").build())], False),
        ("K4", complete(4),
         [("K4", complete(4)), ("W4", catalog_entry("W4").build())], False),
        ("K33", build(6, [(u, v, ONE) for u in range(3) for v in range(3, 6)]),
         [("IG(W3)", catalog_entry("IG(W3)").build())], False),
        ("cube", build(8, cube_edges),
         [("ND(IG(W2))", catalog_entry("ND(IG(W2))").build())], False),
        ("octahedron", build(6, octa_edges),
         [("K222_gamma", k222_gamma())], True),
    ]
    for name, support, targets, t6 in supports:
        converged = classified = 0
        for seed in range(40):
            res = run_search(support, SearchConfig(seed=seed, **QUICK))
            if res.status != "Converged":
                continue
            converged += 1
            h = res.snapped if res.snapped is not None else res.best_gains
            cert = res.snapped_cert if res.snapped is not None \
                else certify_two_ev(h, tol=1e-5)
            if _classify(h, cert, targets, t6) is not None:
                classified += 1
        if converged < 20:
            problems.append(f"{name}: only {converged}/40 runs converged")
        if classified != converged:
            problems.append(f"{name}: {converged - classified} converged runs "
                            "failed to classify")
    hopeless = build(8, [(u, v, ONE) for u in range(8) for v in range(u + 1, 8)
                         if (v - u) % 8 not in (1, 7)])
    for seed in range(40):
        if run_search(hopeless, SearchConfig(seed=seed, **QUICK)).status \
                == "Converged":
            problems.append(f"octagon complement: seed {seed} converged")
            break
    elapsed = time.perf_counter() - t0
    if elapsed > 600:
        problems.append(f"took {elapsed:.0f}s > 600s")
    _report(12, ">=50% of seeded quick runs converge on each known support "
                "and every one lands in the catalog (up to switching "
                "isomorphism and sign); the octagon complement never "
                "converges; under 10 minutes", problems)


# -- 13: order bounds ---------------------------------------------------------------

def test_criterion_13_bounds():
    problems = []
    for entry, g, cert in _certified_catalog():
        system = gain_to_lines(g, cert)
        profile = angle_profile(system)
        angles = [v for v in profile.values if v < 1 - 1e-6]
        s = len(angles)
        has_zero = bool(angles) and angles[0] <= 1e-8
        rep = bounds_check(system.dim, s, has_zero, g=g)
        if not rep.absolute_ok:
            problems.append(f"{entry.name}: absolute bound violated")
        if not rep.rank_bound_ok:
            problems.append(f"{entry.name}: n > m^2 + m'")
        if not rep.coclique_ok:
            problems.append(f"{entry.name}: coclique exceeds m")
    for name, expect in (("W4", 4), ("K222_gamma", 6)):
        g = catalog_entry(name).build()
        cert = certify_two_ev(g)
        system = gain_to_lines(g, cert)
        profile = angle_profile(system)
        angles = [v for v in profile.values if v < 1 - 1e-6]
        rep = bounds_check(system.dim, len(angles),
                           bool(angles) and angles[0] <= 1e-8, g=g)
        if rep.absolute_bound != expect or rep.distinct_lines != expect:
            problems.append(f"{name}: absolute bound not attained at {expect}")
    g = catalog_entry("MUB_C3(4)").build()
    rep = bounds_check(3, 2, True, g=g)
    if rep.rank_bound != 12 or g.n != 12:
        problems.append("the 12 unbiased lines do not attain m(m+1)")
    _report(13, "every catalog graph satisfies the absolute, rank and "
                "coclique bounds; the known extremal cases attain them",
            problems)


# -- 14: negative controls ----------------------------------------------------------

def test_criterion_14_negative_controls():
    problems = []
    c4 = build(4, [(0, 1, ONE), (1, 2, ONE), (2, 3, ONE), (0, 3, ONE)])
    if certify_two_ev(c4) is not None:
        problems.append("plain four-cycle wrongly certified")
    s3, s6 = math.sqrt(3), math.sqrt(6)
    cols = np.array([
        [1.0, 0.5, 0.0, 0.5],
        [0.0, s3 / 2, s3 / 3, -s3 / 6],
        [0.0, 0.0, s6 / 3, s6 / 3],
    ])
    from gainforge.lines import LineSystem
    if tightness_check(LineSystem(cols)).is_tight:
        problems.append("four loose vectors in R^3 wrongly reported tight")
    w4 = catalog_entry("W4")

    def corrupted(**_):
        g = w4.build()
        edges = [(u, v, w) for (u, v, w) in g.edges()]
        u, v, w = edges[0]
        edges[0] = (u, v, -w)
        return build(g.n, edges)

    bad = dataclasses.replace(w4, build=corrupted)
    rows, ok = catalog_verify_all(entries=[bad])
    if ok or not rows[-1].endswith("FAIL") or "W4" not in rows[-1]:
        problems.append("corrupted fixture slipped through the verifier")
    _report(14, "non-examples are rejected: plain C4, a loose vector "
                "quadruple, and a sign-corrupted fixture", problems)
