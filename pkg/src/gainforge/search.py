"""Simulated annealing over gain functions on a fixed underlying graph.

The state space is a torus: one free angle per non-tree edge (a spanning
tree can always be switched to gain 1, so its edges are pinned).  The
objective drops to zero exactly when the gain matrix has at most two
distinct eigenvalues, so annealing it is a direct search for new
examples.  Converged runs are polished by an alternating-projection
refinement and, when the gains land on low-order roots of unity, snapped
to an exact certified graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import Disconnected, LengthMismatch
from .gains import Gain, GainGraph, _bfs_tree, build, normalize_spanning_tree
from .spectral import TwoEvCertificate, certify_two_ev

Objective = Callable[[np.ndarray], float]


# -- objectives -----------------------------------------------------------------

def objective_two_ev(A: np.ndarray) -> float:
    """Frobenius norm of A^2 - (l1+ln)A + l1*ln*I, via the spectral form.

    For Hermitian A the matrix has eigenvalues (l - l1)(l - ln), so the
    norm is computable from the spectrum alone; zero iff at most two
    distinct eigenvalues.
    """
    if A.shape[0] == 0:
        return 0.0
    evs = np.linalg.eigvalsh(A)
    lo, hi = evs[0], evs[-1]
    return float(math.sqrt(np.sum(((evs - lo) * (evs - hi)) ** 2)))


def objective_cospectral(A: np.ndarray, target: np.ndarray) -> float:
    """Sum of squared deviations between the sorted spectra."""
    evs = np.linalg.eigvalsh(A)
    target = np.sort(np.asarray(target, dtype=float))
    if len(target) != len(evs):
        raise LengthMismatch(f"target has {len(target)} values for order {len(evs)}")
    return float(np.sum((evs - target) ** 2))


# -- configuration and results ----------------------------------------------------

@dataclass
class SearchConfig:
    t0: float = 1.0
    alpha: float = 0.95
    tau: float = 1e-4
    iters_per_temp: int = 2000
    epsilon: float = 1e-6
    seed: int = 0
    chains: int = 1
    snap_order: int = 24

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0,1), got {self.alpha}")
        if self.tau >= self.t0:
            raise ValueError("tau must be below t0")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.iters_per_temp <= 0:
            raise ValueError("iters_per_temp must be positive")


@dataclass
class SearchResult:
    status: str                     # "Converged" | "Exhausted"
    best_gains: GainGraph
    best_f: float
    snapped: Optional[GainGraph] = None
    snapped_cert: Optional[TwoEvCertificate] = None
    trace: list = field(default_factory=list)   # (temperature, best_f) rows
    seed: int = 0


# -- the annealer ----------------------------------------------------------------

def _edge_layout(underlying: GainGraph):
    """Split edges into a pinned BFS tree and the free remainder."""
    tree = set(_bfs_tree(underlying))           # raises Disconnected
    tree = {(min(u, v), max(u, v)) for u, v in tree}
    all_edges = sorted(underlying.gains.keys())
    free = [e for e in all_edges if e not in tree]
    return sorted(tree), free


def _graph_from_state(n: int, tree: list, free: list, angles: np.ndarray) -> GainGraph:
    edges = [(u, v, Gain.exact(0, 1)) for u, v in tree]
    edges += [(u, v, Gain.numeric(complex(np.exp(1j * a)), tol=1e-6))
              for (u, v), a in zip(free, angles)]
    return build(n, edges)


def _anneal_chain(n: int, tree: list, free: list, cfg: SearchConfig,
                  objective: Objective, seed: int):
    rng = np.random.default_rng(seed)
    A = np.zeros((n, n), dtype=complex)
    for u, v in tree:
        A[u, v] = A[v, u] = 1.0
    fu = np.array([e[0] for e in free], dtype=int)
    fv = np.array([e[1] for e in free], dtype=int)

    def place(angles: np.ndarray) -> None:
        z = np.exp(1j * angles)
        A[fu, fv] = z
        A[fv, fu] = z.conj()

    angles = rng.uniform(0.0, 2.0 * math.pi, size=len(free))
    place(angles)
    f = objective(A)
    best_f, best_angles = f, angles.copy()
    trace = []
    t = cfg.t0
    converged = f < cfg.epsilon
    while not converged:
        for _ in range(cfg.iters_per_temp):
            step = math.pi * min(1.0, t)
            proposal = angles + rng.uniform(-step, step, size=len(free))
            place(proposal)
            f_new = objective(A)
            # f >= epsilon > 0 here, so the division below is safe
            if f_new < f or rng.random() < math.exp((f - f_new) / (f * t)):
                angles, f = proposal, f_new
                if f < best_f:
                    best_f, best_angles = f, angles.copy()
                if f < cfg.epsilon:
                    converged = True
                    break
            else:
                place(angles)
        trace.append((t, best_f))
        t *= cfg.alpha
        if t <= cfg.tau:
            break
    return best_f, best_angles, trace, converged


def anneal(underlying: GainGraph, cfg: SearchConfig = SearchConfig(),
           objective: Objective = objective_two_ev) -> SearchResult:
    """Run the annealing loop; returns the best state over all chains.

    The trace logs (temperature, best_f) once per cooling step of the
    winning chain.  Deterministic for a fixed config.
    """
    tree, free = _edge_layout(underlying)
    n = underlying.n
    results = []
    for i in range(cfg.chains):
        results.append(_anneal_chain(n, tree, free, cfg, objective, cfg.seed + i))
    _, (best_f, best_angles, trace, _) = min(
        enumerate(results), key=lambda pair: (pair[1][0], pair[0]))
    g = _graph_from_state(n, tree, free, best_angles)
    status = "Converged" if best_f < cfg.epsilon else "Exhausted"
    return SearchResult(status, g, best_f, trace=trace, seed=cfg.seed)


# -- distillation -----------------------------------------------------------------

def refine_gains(g: GainGraph, max_iter: int = 200) -> GainGraph:
    """Alternating projection between two-eigenvalue matrices and unit gains.

    Project the spectrum onto its two cluster means, rebuild, then push
    the entries back onto the unit circle over the original support.
    Inherits the support and only polishes phases.
    """
    A = g.matrix()
    edges = sorted(g.gains.keys())
    n = g.n
    for _ in range(max_iter):
        evs, V = np.linalg.eigh(A)
        gaps = np.diff(evs)
        split = int(np.argmax(gaps)) + 1
        target = evs.copy()
        target[:split] = evs[:split].mean()
        target[split:] = evs[split:].mean()
        B = (V * target) @ V.conj().T
        A_next = np.zeros_like(A)
        for u, v in edges:
            z = B[u, v]
            if abs(z) < 1e-14:
                z = A[u, v]
            z /= abs(z)
            A_next[u, v] = z
            A_next[v, u] = z.conjugate()
        delta = float(np.linalg.norm(A_next - A))
        A = A_next
        if delta < 1e-15:
            break
    return build(n, [(u, v, Gain.numeric(complex(A[u, v]), tol=1e-6)) for u, v in edges])


def snap_gains(g: GainGraph, Q: int = 24, verify_tol: float = 1e-9,
               partial: bool = False) -> Optional[GainGraph]:
    """Replace each gain by the nearest root of unity of order at most Q.

    Gains further than 1e-3 radians from every such root abort the snap
    (or survive unchanged in partial mode).  The snapped graph must
    re-certify or None is returned.
    """
    edges = []
    for (u, v), gn in sorted(g.gains.items()):
        if gn.is_exact and gn.angle.denominator <= Q:
            edges.append((u, v, gn))
            continue
        turns = (math.atan2(gn.value.imag, gn.value.real) / (2 * math.pi)) % 1.0
        best = None
        for q in range(1, Q + 1):
            p = round(turns * q)
            dist = abs(turns - p / q)
            if best is None or dist < best[0]:
                best = (dist, p % q, q)
        dist, p, q = best
        if dist * 2 * math.pi <= 1e-3:
            edges.append((u, v, Gain.exact(p, q)))
        elif partial:
            edges.append((u, v, gn))
        else:
            return None
    snapped = build(g.n, edges)
    if certify_two_ev(snapped, tol=verify_tol) is None:
        return None
    return snapped


def run_search(underlying: GainGraph, cfg: SearchConfig = SearchConfig(),
               objective: Objective = objective_two_ev) -> SearchResult:
    """anneal, then distill: refine the best state and snap if possible."""
    result = anneal(underlying, cfg, objective)
    refined = refine_gains(result.best_gains)
    # the spectral projection wanders along the switching orbit, so pull
    # the result back to its tree-normal representative: free-edge gains
    # become cycle gains, which is what snapping can bite on
    refined, _ = normalize_spanning_tree(refined)
    refined_f = objective(refined.matrix())
    if refined_f < result.best_f:
        result.best_gains, result.best_f = refined, refined_f
        result.status = "Converged" if refined_f < cfg.epsilon else "Exhausted"
    if result.status == "Converged":
        snapped = snap_gains(result.best_gains, cfg.snap_order)
        if snapped is not None:
            result.snapped = snapped
            result.snapped_cert = certify_two_ev(snapped, tol=1e-9)
    return result
