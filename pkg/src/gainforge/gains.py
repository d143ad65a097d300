"""Complex unit gain graphs: representation, switching, and isomorphism.

A gain graph assigns a complex number of modulus one to every oriented
edge of a simple graph; the reversed orientation carries the complex
conjugate.  The resulting gain matrix is Hermitian, so its spectrum is
real.  Switching by a unit diagonal, relabeling the vertices and taking
the converse (entry-wise conjugate) all preserve that spectrum; the
equivalence they generate is the natural notion of isomorphism here.

Gains are dual-represented: ``Gain.exact(p, q)`` stores the rational
rotation exp(2*pi*i*p/q) exactly (angle arithmetic on ``Fraction``),
while ``Gain.numeric(z)`` stores an arbitrary unit complex number.
Exact gains survive switching and comparison without rounding, which is
what makes equivalence tests on root-of-unity graphs decidable.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    IndexOutOfRange,
    LengthMismatch,
    NonUnitGain,
    NotACycle,
    OrderMismatch,
    SelfLoop,
    SupportMismatch,
    Timeout,
)

NUMERIC_EQ_TOL = 1e-9


# -- unit gains -----------------------------------------------------------

class Gain:
    """A complex number of modulus one, exact or numeric.

    Exact gains are rotations by a rational angle p/q (in turns), kept in
    lowest terms with 0 <= p < q.  Products and conjugates of exact gains
    are exact; any operation that mixes in a numeric gain degrades to a
    numeric result.
    """

    __slots__ = ("angle", "_z")

    def __init__(self, angle: Optional[Fraction], z: complex):
        self.angle = angle
        self._z = z

    @classmethod
    def exact(cls, p: int, q: int) -> "Gain":
        if q <= 0:
            raise NonUnitGain(f"denominator must be positive, got {q}")
        a = Fraction(p, q) % 1
        z = complex(math.cos(2 * math.pi * a), math.sin(2 * math.pi * a))
        return cls(a, z)

    @classmethod
    def numeric(cls, z: complex, tol: float = 1e-12) -> "Gain":
        z = complex(z)
        if abs(abs(z) - 1.0) > tol:
            raise NonUnitGain(f"|z| = {abs(z)!r} is not 1 within {tol}")
        return cls(None, z)

    @property
    def value(self) -> complex:
        return self._z

    @property
    def is_exact(self) -> bool:
        return self.angle is not None

    def conj(self) -> "Gain":
        if self.angle is not None:
            return Gain((-self.angle) % 1, self._z.conjugate())
        return Gain(None, self._z.conjugate())

    def __mul__(self, other: "Gain") -> "Gain":
        if self.angle is not None and other.angle is not None:
            a = (self.angle + other.angle) % 1
            return Gain(a, complex(math.cos(2 * math.pi * a),
                                   math.sin(2 * math.pi * a)))
        return Gain(None, self._z * other._z)

    def __neg__(self) -> "Gain":
        return self * Gain.exact(1, 2)

    def close(self, other: "Gain", tol: float = NUMERIC_EQ_TOL) -> bool:
        """Equality up to tolerance; exact when both sides are exact."""
        if self.angle is not None and other.angle is not None:
            return self.angle == other.angle
        return abs(self._z - other._z) <= tol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gain):
            return NotImplemented
        if self.angle is not None and other.angle is not None:
            return self.angle == other.angle
        return self._z == other._z

    def __hash__(self) -> int:
        return hash(self.angle) if self.angle is not None else hash(self._z)

    def __repr__(self) -> str:
        if self.angle is not None:
            return f"Gain.exact({self.angle.numerator}, {self.angle.denominator})"
        return f"Gain.numeric({self._z!r})"


ONE = Gain.exact(0, 1)
MINUS_ONE = Gain.exact(1, 2)
I_GAIN = Gain.exact(1, 4)


# -- the graph type ---------------------------------------------------------

@dataclass
class GainGraph:
    """A simple graph with unit gains on its edges.

    ``gains`` maps (u, v) with u < v to the gain of the oriented edge
    u -> v; the reverse orientation is implied by conjugation.  The
    diagonal is implicitly zero.  Treat instances as immutable.
    """

    n: int
    gains: dict[tuple[int, int], Gain] = field(default_factory=dict)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.gains

    def gain(self, u: int, v: int) -> Gain:
        """Gain of the oriented edge u -> v."""
        if u < v:
            return self.gains[(u, v)]
        return self.gains[(v, u)].conj()

    def edges(self) -> Iterator[tuple[int, int, Gain]]:
        for (u, v), g in sorted(self.gains.items()):
            yield u, v, g

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for (u, v) in self.gains:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v) in self.gains:
            deg[u] += 1
            deg[v] += 1
        return deg

    def support(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.gains)

    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=complex)
        for (u, v), g in self.gains.items():
            A[u, v] = g.value
            A[v, u] = g.value.conjugate()
        return A

    @property
    def is_exact(self) -> bool:
        return all(g.is_exact for g in self.gains.values())


def build(n: int, edges: list[tuple[int, int, Gain]]) -> GainGraph:
    """Assemble a gain graph from an oriented edge list.

    Each item (u, v, g) declares gain g on the edge u -> v; the reverse
    direction gets conj(g).  Vertices are 0-indexed.
    """
    gains: dict[tuple[int, int], Gain] = {}
    for u, v, g in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not isinstance(g, Gain):
            g = Gain.numeric(g)
        key = (u, v) if u < v else (v, u)
        if key in gains:
            raise DuplicateEdge(f"edge {key} given twice")
        gains[key] = g if u < v else g.conj()
    return GainGraph(n, gains)


def from_matrix(A: np.ndarray, zero_tol: float = 1e-8,
                unit_tol: float = 1e-6) -> GainGraph:
    """Read a gain graph off a Hermitian matrix with unit-or-zero entries.

    Entries with modulus below ``zero_tol`` are non-edges; the rest must
    be within ``unit_tol`` of the unit circle and are normalized onto it.
    """
    n = A.shape[0]
    if np.max(np.abs(A - A.conj().T)) > 1e-9:
        raise NonUnitGain("matrix is not Hermitian")
    gains: dict[tuple[int, int], Gain] = {}
    for u in range(n):
        for v in range(u + 1, n):
            z = complex(A[u, v])
            r = abs(z)
            if r <= zero_tol:
                continue
            if abs(r - 1.0) > unit_tol:
                raise NonUnitGain(f"entry ({u},{v}) has modulus {r}")
            gains[(u, v)] = Gain.numeric(z / r)
    return GainGraph(n, gains)


# -- elementary operations ---------------------------------------------------

def cycle_gain(g: GainGraph, cycle: list[int]) -> complex:
    """Product of gains along a closed walk u1 -> u2 -> ... -> u1.

    The first vertex is not repeated at the end; interior vertices must
    be distinct and consecutive ones adjacent.
    """
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{cycle} is not a simple cycle")
    out = ONE
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not g.has_edge(a, b):
            raise NotACycle(f"({a},{b}) is not an edge")
        out = out * g.gain(a, b)
    return out.value


def switch(g: GainGraph, diagonal: list[Gain]) -> GainGraph:
    """Diagonal switching: gain'(u,v) = conj(s_u) * gain(u,v) * s_v."""
    if len(diagonal) != g.n:
        raise LengthMismatch(f"need {g.n} diagonal entries, got {len(diagonal)}")
    new = {}
    for (u, v), gn in g.gains.items():
        new[(u, v)] = diagonal[u].conj() * gn * diagonal[v]
    return GainGraph(g.n, new)


def converse(g: GainGraph) -> GainGraph:
    """Replace every gain by its conjugate (reverse all orientations)."""
    return GainGraph(g.n, {e: gn.conj() for e, gn in g.gains.items()})


def relabel(g: GainGraph, permutation: list[int]) -> GainGraph:
    """Rename vertex u to permutation[u]."""
    if sorted(permutation) != list(range(g.n)):
        raise LengthMismatch("not a permutation of the vertex set")
    new = {}
    for (u, v), gn in g.gains.items():
        a, b = permutation[u], permutation[v]
        new[(a, b) if a < b else (b, a)] = gn if a < b else gn.conj()
    return GainGraph(g.n, new)


def is_connected(g: GainGraph) -> bool:
    if g.n == 0:
        return False
    adj = g.neighbors()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


# -- switching equivalence ----------------------------------------------------

@dataclass
class SwitchingWitness:
    """Recipe turning one graph into another.

    Apply as: take the converse if ``conjugated``, send vertex u to
    ``permutation[u]``, then switch by ``diagonal``.
    """

    permutation: list[int]
    diagonal: list[Gain]
    conjugated: bool = False


def apply_witness(g: GainGraph, w: SwitchingWitness) -> GainGraph:
    h = converse(g) if w.conjugated else g
    return switch(relabel(h, w.permutation), w.diagonal)


def _bfs_tree(g: GainGraph) -> list[tuple[int, int]]:
    """Canonical spanning tree: BFS from vertex 0, neighbors by index.

    Returns (parent, child) pairs in visit order; raises Disconnected.
    """
    adj = g.neighbors()
    parent_edges = []
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                parent_edges.append((u, v))
                queue.append(v)
    if len(seen) != g.n:
        raise Disconnected("graph is not connected")
    return parent_edges


def normalize_spanning_tree(g: GainGraph) -> tuple[GainGraph, SwitchingWitness]:
    """Switch so that every canonical-BFS-tree edge carries gain 1.

    After this normalization the only remaining switching freedom on a
    connected graph is a global scalar, which acts trivially, so two
    graphs on the same support are switching equivalent exactly when
    their normalized forms coincide.
    """
    tree = _bfs_tree(g)
    s: list[Optional[Gain]] = [None] * g.n
    s[0] = ONE
    for u, v in tree:
        s[v] = s[u] * g.gain(u, v).conj()
    witness = SwitchingWitness(list(range(g.n)), list(s), False)  # type: ignore[arg-type]
    normalized = switch(g, witness.diagonal)
    for u, v in tree:
        key = (u, v) if u < v else (v, u)
        normalized.gains[key] = ONE
    return normalized, witness


def _graphs_equal(g1: GainGraph, g2: GainGraph, tol: float = NUMERIC_EQ_TOL) -> bool:
    if g1.n != g2.n or g1.gains.keys() != g2.gains.keys():
        return False
    return all(g1.gains[e].close(g2.gains[e], tol) for e in g1.gains)


def switching_equivalent(g1: GainGraph, g2: GainGraph,
                         tol: float = NUMERIC_EQ_TOL) -> Optional[SwitchingWitness]:
    """Witness that a diagonal switch alone maps g1 onto g2, if one exists."""
    if g1.n != g2.n or g1.support() != g2.support():
        raise SupportMismatch("graphs must share their underlying support")
    n1, w1 = normalize_spanning_tree(g1)
    n2, w2 = normalize_spanning_tree(g2)
    if not _graphs_equal(n1, n2, tol):
        return None
    # switch(g1, d1) == switch(g2, d2)  =>  g2 == switch(g1, d1 * conj(d2))
    diag = [a * b.conj() for a, b in zip(w1.diagonal, w2.diagonal)]
    return SwitchingWitness(list(range(g1.n)), diag, False)


def _neighbor_degree_key(adj: list[list[int]], deg: list[int], u: int) -> tuple:
    return (deg[u], tuple(sorted(deg[v] for v in adj[u])))


def switching_isomorphic(g1: GainGraph, g2: GainGraph,
                         budget: int = 10_000_000,
                         tol: float = NUMERIC_EQ_TOL) -> Optional[SwitchingWitness]:
    """Search for a switching isomorphism (switch + relabel + optional converse).

    Backtracks over support isomorphisms with degree-based pruning and
    tests switching equivalence for each complete candidate.  Raises
    Timeout when the node-expansion budget runs out, which is *not* a
    proof of non-isomorphism.  ``tol`` loosens the gain comparison for
    graphs that are only numerically on the switching class.
    """
    if g1.n != g2.n:
        raise OrderMismatch(f"orders differ: {g1.n} vs {g2.n}")
    if not is_connected(g1) or not is_connected(g2):
        raise Disconnected("both graphs must be connected")
    if len(g1.gains) != len(g2.gains):
        return None
    adj1, adj2 = g1.neighbors(), g2.neighbors()
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return None
    keys1 = [_neighbor_degree_key(adj1, deg1, u) for u in range(g1.n)]
    keys2 = [_neighbor_degree_key(adj2, deg2, u) for u in range(g2.n)]
    if sorted(keys1) != sorted(keys2):
        return None

    set1 = [set(a) for a in adj1]
    set2 = [set(a) for a in adj2]
    g2conv = converse(g2)

    # order g1's vertices so each one (after the first) touches the mapped part
    start = max(range(g1.n), key=lambda u: deg1[u])
    order = [start]
    placed = {start}
    while len(order) < g1.n:
        nxt = max(
            (u for u in range(g1.n) if u not in placed),
            key=lambda u: (len(set1[u] & placed), deg1[u]),
        )
        order.append(nxt)
        placed.add(nxt)

    perm: list[Optional[int]] = [None] * g1.n
    used = [False] * g2.n
    expansions = 0

    def extend(i: int) -> Optional[SwitchingWitness]:
        nonlocal expansions
        if i == g1.n:
            p = [perm[u] for u in range(g1.n)]  # type: ignore[misc]
            cand = relabel(g1, p)
            for target, conj_flag in ((g2, False), (g2conv, True)):
                try:
                    w = switching_equivalent(cand, target, tol)
                except SupportMismatch:
                    continue
                if w is not None:
                    d = [x.conj() for x in w.diagonal] if conj_flag else w.diagonal
                    return SwitchingWitness(p, d, conj_flag)
            return None
        u = order[i]
        for v in range(g2.n):
            if used[v] or keys1[u] != keys2[v]:
                continue
            ok = True
            for w_ in order[:i]:
                if (w_ in set1[u]) != (perm[w_] in set2[v]):
                    ok = False
                    break
            if not ok:
                continue
            expansions += 1
            if expansions > budget:
                raise Timeout(f"isomorphism search exceeded {budget} expansions")
            perm[u] = v
            used[v] = True
            found = extend(i + 1)
            perm[u] = None
            used[v] = False
            if found is not None:
                return found
        return None

    return extend(0)


# -- structural statistics --------------------------------------------------

@dataclass
class StructureStats:
    degrees: list[int]
    is_regular: bool
    is_bipartite: bool
    triangle_free: bool
    triangles_per_edge: dict[tuple[int, int], int]
    common_neighbors: dict[tuple[int, int], int]  # nonadjacent pairs only


def structure_stats(g: GainGraph) -> StructureStats:
    adj = [set(a) for a in g.neighbors()]
    deg = g.degrees()
    tri = {e: len(adj[e[0]] & adj[e[1]]) for e in g.gains}
    common = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in adj[u]:
                common[(u, v)] = len(adj[u] & adj[v])
    # 2-color each component for bipartiteness
    color = [-1] * g.n
    bipartite = True
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue and bipartite:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    bipartite = False
                    break
    return StructureStats(
        degrees=deg,
        is_regular=len(set(deg)) <= 1,
        is_bipartite=bipartite,
        triangle_free=all(t == 0 for t in tri.values()),
        triangles_per_edge=tri,
        common_neighbors=common,
    )


def max_coclique(g: GainGraph, budget: int = 10_000_000) -> tuple[int, list[int]]:
    """Exact maximum independent set of the support, by branch and bound."""
    n = g.n
    nbr = [0] * n
    for (u, v) in g.gains:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best_size = 0
    best_set = 0
    expansions = 0

    def bb(cand: int, cur: int, size: int) -> None:
        nonlocal best_size, best_set, expansions
        expansions += 1
        if expansions > budget:
            raise Timeout(f"coclique search exceeded {budget} expansions")
        if size > best_size:
            best_size, best_set = size, cur
        if cand == 0 or size + bin(cand).count("1") <= best_size:
            return
        # branch on the candidate with the most candidate neighbors
        v = max(_bits(cand), key=lambda b: bin(nbr[b] & cand).count("1"))
        bit = 1 << v
        bb(cand & ~bit & ~nbr[v], cur | bit, size + 1)
        bb(cand & ~bit, cur, size)

    bb((1 << n) - 1, 0, 0)
    return best_size, list(_bits(best_set))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
