"""Named two-eigenvalue gain graphs and the families that generate them.

Weighing matrices (WW* = kI) are the seed: their bipartite doubles and
the three doubling constructions below turn a square root of kI into
larger two-eigenvalue graphs, and the cyclic/toral constructions cover
the 4- and 5-regular families.  Everything with root-of-unity gains is
built with exact gains so that the weighing identities can be verified
with zero residual; the one family with inherently irrational gains
(quadratic-residue graphs on a Gaussian prime) is numeric.

``catalog()`` is the immutable registry of every named example together
with its expected spectrum; the batch verifier in the CLI walks it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .cyclotomic import root_sum_is_zero
from .errors import (
    InvalidOrder,
    NotAWeighingMatrix,
    NotGaussianPrime,
    NotSquareRootOfkI,
    UnknownName,
)
from .gains import Gain, GainGraph, ONE, MINUS_ONE, I_GAIN, build, from_matrix

PHI = Gain.exact(1, 3)      # primitive third root of unity
PHI_BAR = Gain.exact(2, 3)

Entry = Optional[Gain]


# -- weighing matrices -------------------------------------------------------

@dataclass
class WeighingMatrix:
    """n x n matrix of unit gains and zeros with WW* = W*W = kI."""

    n: int
    entries: list[list[Entry]]
    weight: int

    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e is not None:
                    A[i, j] = e.value
        return A

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for row in self.entries for e in row if e is not None)

    def is_hermitian(self) -> bool:
        for i in range(self.n):
            for j in range(i, self.n):
                a, b = self.entries[i][j], self.entries[j][i]
                if (a is None) != (b is None):
                    return False
                if a is not None and not a.close(b.conj()):
                    return False
        return True


def _weighing_weight(entries: list[list[Entry]]) -> int:
    """Validate WW* = kI and return k; exact whenever the entries allow."""
    n = len(entries)
    weights = {sum(e is not None for e in row) for row in entries}
    weights |= {sum(entries[i][j] is not None for i in range(n)) for j in range(n)}
    if len(weights) != 1:
        raise NotAWeighingMatrix(f"row/column weights differ: {sorted(weights)}")
    k = weights.pop()
    all_exact = all(e.is_exact for row in entries for e in row if e is not None)
    for i in range(n):
        for j in range(n):
            terms = [
                (entries[i][h], entries[j][h])
                for h in range(n)
                if entries[i][h] is not None and entries[j][h] is not None
            ]
            if all_exact:
                counts: dict[Fraction, int] = {}
                for a, b in terms:
                    ang = (a.angle - b.angle) % 1  # type: ignore[operator]
                    counts[ang] = counts.get(ang, 0) + 1
                if i == j:
                    counts[Fraction(0)] = counts.get(Fraction(0), 0) - k
                if not root_sum_is_zero(counts):
                    raise NotAWeighingMatrix(f"(WW*)[{i}][{j}] is off")
            else:
                s = sum(a.value * b.value.conjugate() for a, b in terms)
                target = k if i == j else 0.0
                if abs(s - target) > 1e-9:
                    raise NotAWeighingMatrix(f"(WW*)[{i}][{j}] = {s}")
    return k


def make_weighing(entries: list[list[Entry]]) -> WeighingMatrix:
    return WeighingMatrix(len(entries), entries, _weighing_weight(entries))


def cm_weighing(first_row: list[Entry]) -> WeighingMatrix:
    """Circulant matrix from its first row, validated as a weighing matrix."""
    n = len(first_row)
    entries = [[first_row[(j - i) % n] for j in range(n)] for i in range(n)]
    return make_weighing(entries)


def _parse_row(tokens: str, x: Optional[Gain] = None) -> list[Entry]:
    base: dict[str, Entry] = {
        "0": None, "1": ONE, "-1": MINUS_ONE,
        "i": I_GAIN, "-i": I_GAIN.conj(),
        "f": PHI, "F": PHI_BAR,
    }
    if x is not None:
        base.update({"x": x, "-x": -x, "X": x.conj(), "-X": -(x.conj())})
    return [base[t] for t in tokens.split()]


def _parse_matrix(rows: list[str], x: Optional[Gain] = None) -> list[list[Entry]]:
    return [_parse_row(r, x) for r in rows]


_Z_ROWS = [
    "1  1  1  1  1  0",
    "1 -X -1  X  0 -x",
    "1 -1  x  0 -x  x",
    "1  X  0 -X -1 -x",
    "1  0 -x -1  x  x",
    "0  X -X  X -X  1",
]


def named_weighing(name: str, x: Optional[Gain] = None) -> WeighingMatrix:
    """The small library of unit weighing matrices: W2, W3, W4, W5, W7, Z.

    ``Z`` takes a free unit parameter x and has weight 5; W4 is the
    Hermitian zero-diagonal one of weight 3; W5 and W7 are circulant.
    """
    if name == "W2":
        return make_weighing(_parse_matrix(["1 1", "1 -1"]))
    if name == "W3":
        return make_weighing(_parse_matrix(["1 1 1", "1 f F", "1 F f"]))
    if name == "W4":
        return make_weighing(_parse_matrix([
            "0  1  1  1",
            "1  0  i -i",
            "1 -i  0  i",
            "1  i -i  0",
        ]))
    if name == "W5":
        return cm_weighing(_parse_row("0 1 f f 1"))
    if name == "W7":
        return cm_weighing(_parse_row("-1 1 1 0 1 0 0"))
    if name == "Z":
        if x is None:
            x = ONE
        return make_weighing(_parse_matrix(_Z_ROWS, x))
    raise UnknownName(f"no weighing matrix named {name!r}")


# -- doubling constructions ---------------------------------------------------

def _graph_from_entries(entries: list[list[Entry]]) -> GainGraph:
    n = len(entries)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if entries[u][v] is not None:
                edges.append((u, v, entries[u][v]))
    return build(n, edges)


def ig(W: WeighingMatrix) -> GainGraph:
    """Bipartite double [[0, B], [B*, 0]]; eigenvalues +-sqrt(weight)."""
    n = W.n
    edges = [
        (i, n + j, W.entries[i][j])
        for i in range(n)
        for j in range(n)
        if W.entries[i][j] is not None
    ]
    g = build(2 * n, edges)
    from .gains import is_connected
    if not is_connected(g):
        warnings.warn("weighing matrix is reducible; IG is disconnected")
    return g


def _square_root_entries(g_or_W) -> tuple[list[list[Entry]], int]:
    """Entries of a Hermitian zero-diagonal W with W^2 = kI, plus k."""
    if isinstance(g_or_W, WeighingMatrix):
        entries = g_or_W.entries
        if not g_or_W.is_hermitian():
            raise NotSquareRootOfkI("weighing matrix is not Hermitian")
        if any(entries[i][i] is not None for i in range(g_or_W.n)):
            raise NotSquareRootOfkI("diagonal is not zero")
    elif isinstance(g_or_W, GainGraph):
        n = g_or_W.n
        entries = [[None] * n for _ in range(n)]
        for (u, v), gn in g_or_W.gains.items():
            entries[u][v] = gn
            entries[v][u] = gn.conj()
    else:
        raise NotSquareRootOfkI(f"unsupported input {type(g_or_W)!r}")
    n = len(entries)
    A = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if entries[i][j] is not None:
                A[i, j] = entries[i][j].value
    sq = A @ A
    k = sq[0, 0].real
    if np.max(np.abs(sq - k * np.eye(n))) > 1e-9 or abs(k - round(k)) > 1e-9:
        raise NotSquareRootOfkI("input does not satisfy W^2 = kI")
    return entries, int(round(k))


def double(g_or_W, kind: str) -> GainGraph:
    """Grow a square root of kI: ND -> +-sqrt(k+1), SD -> +-sqrt(2k),
    SDstar -> +-sqrt(2k+1)."""
    entries, _k = _square_root_entries(g_or_W)
    n = len(entries)
    edges: list[tuple[int, int, Gain]] = []
    for u in range(n):
        for v in range(n):
            e = entries[u][v]
            if e is None:
                continue
            if u < v:
                edges.append((u, v, e))                      # W block
                edges.append((n + u, n + v, -e))             # -W block
            if kind in ("SD", "SDstar"):
                edges.append((u, n + v, e))                  # W off-block
    if kind == "ND":
        edges += [(u, n + u, ONE) for u in range(n)]
    elif kind == "SDstar":
        edges += [(u, n + u, I_GAIN) for u in range(n)]
    elif kind != "SD":
        raise UnknownName(f"kind must be ND, SD or SDstar, not {kind!r}")
    return build(2 * n, edges)


# -- cyclic families ----------------------------------------------------------

def _cycle_blocks(t: int, x: Gain) -> dict[tuple[int, int], Gain]:
    """Entries of C for the directed t-cycle with gains (1, ..., 1, x)."""
    c: dict[tuple[int, int], Gain] = {}
    for j in range(t - 1):
        c[(j, j + 1)] = ONE
    c[(t - 1, 0)] = x
    return c


def _toral_entries(t: int, x: Gain, spokes: bool) -> list[list[Entry]]:
    if t < 3:
        raise InvalidOrder(f"need t >= 3, got {t}")
    C = _cycle_blocks(t, x)
    n = 2 * t
    entries: list[list[Entry]] = [[None] * n for _ in range(n)]

    def put(i: int, j: int, g: Gain) -> None:
        entries[i][j] = g
        entries[j][i] = g.conj()

    for (j, h), g in C.items():
        put(j, h, g)                      # C + C*
        put(t + j, t + h, -g)             # -C - C*
        entries[j][t + h] = g             # C - C*
        entries[t + h][j] = g.conj()
        entries[h][t + j] = -(g.conj())   # (C - C*)[h][j] = -conj(C[j][h])
        entries[t + j][h] = -g
    if spokes:
        for j in range(t):
            put(j, t + j, ONE)
    return entries


def toral(t: int, x: Gain) -> GainGraph:
    """Toral tessellation graph on 2t vertices: 4-regular, eigenvalues +-2."""
    return _graph_from_entries(_toral_entries(t, x, spokes=False))


def donut(t: int, x: Gain) -> GainGraph:
    """The order-2t donut: toral blocks plus identity spokes; 5-regular, +-sqrt(5)."""
    return _graph_from_entries(_toral_entries(t, x, spokes=True))


def d8_star(c: Gain) -> GainGraph:
    """The exceptional 5-regular order-8 graph (not a donut for generic c).

    Its triangles carry gains +-c, whereas order-8 donut triangles carry
    +-1; that invariant separates the two switching classes.
    """
    edges = [
        (0, 1, ONE), (1, 2, ONE), (2, 3, ONE), (0, 3, ONE),
        (4, 5, MINUS_ONE), (5, 6, MINUS_ONE), (6, 7, MINUS_ONE), (4, 7, MINUS_ONE),
        (0, 4, ONE), (1, 5, ONE), (2, 6, ONE), (3, 7, ONE),
        (0, 5, c), (6, 1, c), (2, 7, c), (4, 3, c),
        (0, 7, -c), (4, 1, -c), (2, 5, -c), (6, 3, -c),
    ]
    return build(8, edges)


# -- quadratic-residue family ---------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(math.isqrt(p)) + 1):
        if p % d == 0:
            return False
    return True


def renes(p: int) -> GainGraph:
    """Equiangular gain graph on K_p from quadratic residues, p prime = 3 mod 4.

    A = (p+1)^(-1/2) (I - J - i sqrt(p) M) with M the antisymmetric
    residue sign matrix; eigenvalues sqrt(p+1) (multiplicity (p-1)/2)
    and -(p-1)/sqrt(p+1).  Gains are numeric (irrational angles).
    """
    if not _is_prime(p) or p % 4 != 3:
        raise NotGaussianPrime(f"{p} is not a prime congruent to 3 mod 4")
    residues = {(x * x) % p for x in range(1, p)}
    s = math.sqrt(p + 1.0)
    edges = []
    for j in range(p):
        for h in range(j + 1, p):
            sign = 1.0 if (h - j) % p in residues else -1.0
            z = (-1.0 - 1j * math.sqrt(p) * sign) / s
            edges.append((j, h, Gain.numeric(z, tol=1e-12)))
    return build(p, edges)


def k_star_pqr(p: int, q: int, r: int) -> GainGraph:
    """Complete tripartite gain graph whose triangles all have gain i.

    One representative of the switching class: gain 1 on the first two
    part-pairs and gain i on edges oriented from the third part back to
    the first.  Rank 2; nonzero eigenvalues +-sqrt(pq+qr+rp).
    """
    P = range(p)
    Q = range(p, p + q)
    R = range(p + q, p + q + r)
    edges = [(u, v, ONE) for u in P for v in Q]
    edges += [(u, v, ONE) for u in Q for v in R]
    edges += [(w, u, I_GAIN) for w in R for u in P]
    return build(p + q + r, edges)


def complete(n: int) -> GainGraph:
    """K_n with every gain 1: eigenvalues {n-1, -1^(n-1)}."""
    return build(n, [(u, v, ONE) for u in range(n) for v in range(u + 1, n)])


# -- literal fixtures ----------------------------------------------------------

_K222_ROWS = [
    " 0  0 -i  i  1  1",
    " 0  0  1  1 -1  1",
    " i  1  0  0 -X  x",
    "-i  1  0  0 -x  X",
    " 1 -1 -x -X  0  0",
    " 1  1  X  x  0  0",
]

_K8STAR_ROWS = [
    "0 1 1 1 1 1 1 1",
    "1 0 i -i i -i i -i",
    "1 -i 0 -i -i i i i",
    "1 i i 0 -i -i -i i",
    "1 -i i i 0 i -i -i",
    "1 i -i i -i 0 i -i",
    "1 -i -i i i -i 0 i",
    "1 i -i -i i i -i 0",
]

_K10STAR_ROWS = [
    "0 1 1 1 1 1 1 1 1 1",
    "1 0 -1 -1 1 1 -1 -1 1 1",
    "1 -1 0 1 1 -1 1 -1 -1 1",
    "1 -1 1 0 -1 -1 -1 1 1 1",
    "1 1 1 -1 0 -1 1 -1 1 -1",
    "1 1 -1 -1 -1 0 1 1 -1 1",
    "1 -1 1 -1 1 1 0 1 -1 -1",
    "1 -1 -1 1 -1 1 1 0 1 -1",
    "1 1 -1 1 1 -1 -1 1 0 -1",
    "1 1 1 1 -1 1 -1 -1 -1 0",
]

_M1_ROWS = [
    "0 1 0 0 0 1 1 1 0 0 0 1",
    "1 0 1 0 0 0 1 -1 1 0 0 0",
    "0 1 0 1 0 0 0 -1 -1 1 0 0",
    "0 0 1 0 1 0 0 0 -1 -1 1 0",
    "0 0 0 1 0 x 0 0 0 -1 -1 -x",
    "1 0 0 0 X 0 -1 0 0 0 -X 1",
    "1 1 0 0 0 -1 0 1 0 0 0 -1",
    "1 -1 -1 0 0 0 1 0 -1 0 0 0",
    "0 1 -1 -1 0 0 0 -1 0 -1 0 0",
    "0 0 1 -1 -1 0 0 0 -1 0 -1 0",
    "0 0 0 1 -1 -x 0 0 0 -1 0 x",
    "1 0 0 0 -X 1 -1 0 0 0 X 0",
]

_M3_ROWS = [
    "0 0 0 0 1 0 0 1 1 0 1 1",
    "0 0 0 0 1 0 0 1 0 1 -1 -1",
    "0 0 0 0 0 1 1 0 -x x x 0",
    "0 0 0 0 0 1 1 0 x -x 0 -x",
    "1 1 0 0 0 0 1 0 0 0 -x x",
    "0 0 1 1 0 0 0 -1 1 1 0 0",
    "0 0 1 1 1 0 0 0 -1 -1 0 0",
    "1 1 0 0 0 -1 0 0 0 0 x -x",
    "1 0 -X X 0 1 -1 0 0 0 0 0",
    "0 1 X -X 0 1 -1 0 0 0 0 0",
    "1 -1 X 0 -X 0 0 X 0 0 0 0",
    "1 -1 0 -X X 0 0 -X 0 0 0 0",
]

_M4_ROWS = [
    "0 0 0 1 0 0 1 0 1 1 1 0",
    "0 0 0 0 1 0 1 1 0 0 -1 1",
    "0 0 0 0 0 1 1 -1 0 0 -1 -1",
    "1 0 0 0 0 0 i 0 -i -i i 0",
    "0 1 0 0 0 0 0 -i i -i 0 i",
    "0 0 1 0 0 0 0 i i -i 0 -i",
    "1 1 1 -i 0 0 0 0 0 i 0 0",
    "0 1 -1 0 i -i 0 0 0 0 0 -i",
    "1 0 0 i -i -i 0 0 0 0 -i 0",
    "1 0 0 i i i -i 0 0 0 0 0",
    "1 -1 -1 -i 0 0 0 0 i 0 0 0",
    "0 1 -1 0 -i i 0 i 0 0 0 0",
]


def k222_gamma() -> GainGraph:
    """Octahedral gain graph with spectrum {2 sqrt(2) ^2, -sqrt(2) ^4}.

    Arises from three mutually unbiased bases of C^2.  The mixed gain is
    the primitive eighth root of unity; only it and its conjugate close
    the square identity, so there is no free parameter here.
    """
    return _graph_from_entries(_parse_matrix(_K222_ROWS, Gain.exact(1, 8)))


def example_1() -> GainGraph:
    """Order-7 equiangular-line graph, (1/4) sqrt(2) (I - J - i sqrt(7) (N - N^T))."""
    N = np.zeros((7, 7))
    row = [0, 1, 1, 0, 1, 0, 0]
    for j in range(7):
        for h in range(7):
            N[j, h] = row[(h - j) % 7]
    A = (math.sqrt(2.0) / 4.0) * (np.eye(7) - np.ones((7, 7)) - 1j * math.sqrt(7.0) * (N - N.T))
    return from_matrix(A)


def fixed_catalog(name: str, **params) -> GainGraph:
    """One-off graphs embedded as literal data (see also ``catalog()``)."""
    x = params.get("x", ONE)
    if name == "K_n":
        return complete(int(params.get("n", 3)))
    if name == "K222_gamma":
        return k222_gamma()
    if name == "Example1":
        return example_1()
    if name == "K8star":
        return _graph_from_entries(_parse_matrix(_K8STAR_ROWS))
    if name == "K10star":
        return _graph_from_entries(_parse_matrix(_K10STAR_ROWS))
    if name == "M1":
        return _graph_from_entries(_parse_matrix(_M1_ROWS, x))
    if name == "M2":
        return ig(named_weighing("Z", x))
    if name == "M3":
        return _graph_from_entries(_parse_matrix(_M3_ROWS, x))
    if name == "M4":
        return _graph_from_entries(_parse_matrix(_M4_ROWS))
    if name in ("GQ22", "Ramezani_Delta5"):
        from . import lines
        if name == "GQ22":
            return lines.lines_to_gain(lines.geometry_lines("Hexacode"), 0.5)
        return lines.lines_to_gain(lines.geometry_lines("SimplexDiff", m=5), 0.5)
    raise UnknownName(f"no fixed graph named {name!r}")


# -- the registry --------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """A named graph with its expected two-eigenvalue spectrum.

    ``expected_spectrum`` is ((theta1, m1), (theta2, m2)); ``parameters``
    names the free unit-gain slots of ``build`` (sampled by the batch
    verifier).  ``tags`` group entries for report filtering.
    """

    name: str
    order: int
    degree: int
    expected_spectrum: tuple[tuple[float, int], tuple[float, int]]
    build: Callable[..., GainGraph]
    parameters: tuple[str, ...] = ()
    tags: frozenset = frozenset()
    note: str = ""


def _lines_graph(geometry: str, alpha: float, **kw) -> Callable[..., GainGraph]:
    def _build(**_ignored) -> GainGraph:
        from . import lines
        return lines.lines_to_gain(lines.geometry_lines(geometry, **kw), alpha)
    return _build


def _spec(t1: float, m1: int, t2: float, m2: int):
    return ((t1, m1), (t2, m2))


_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)
_SQRT7 = math.sqrt(7.0)


def _catalog_entries() -> list[CatalogEntry]:
    E = CatalogEntry
    entries = [
        # least multiplicity at most 3
        *[
            E(f"K{n}", n, n - 1, _spec(float(n - 1), 1, -1.0, n - 1),
              (lambda n=n, **kw: complete(n)),
              tags=frozenset({"table2", "complete"} | ({"table3"} if n <= 4 else set())
                             | ({"degree4", "table3"} if n == 5 else set())),
              note="all-ones complete graph")
            for n in (3, 4, 5, 6, 7)
        ],
        E("IG(W2)", 4, 2, _spec(_SQRT2, 2, -_SQRT2, 2),
          lambda **kw: ig(named_weighing("W2")),
          tags=frozenset({"table2", "table3"}), note="bipartite double of W2"),
        E("W4", 4, 3, _spec(_SQRT3, 2, -_SQRT3, 2),
          lambda **kw: _graph_from_entries(named_weighing("W4").entries),
          tags=frozenset({"table2", "table3"}), note="graphical weight-3 weighing matrix"),
        E("K222_gamma", 6, 4, _spec(2 * _SQRT2, 2, -_SQRT2, 4),
          lambda **kw: k222_gamma(),
          tags=frozenset({"table2", "table3", "degree4"}),
          note="octahedron with eighth-root gains, from three MUBs in C^2"),
        E("MUB_C3(2)", 6, 3, _spec(_SQRT3, 3, -_SQRT3, 3),
          _lines_graph("MUB_C3", 1 / _SQRT3, t=2),
          tags=frozenset({"table2", "mub"}), note="two mutually unbiased bases in C^3"),
        E("MUB_C3(3)", 9, 6, _spec(2 * _SQRT3, 3, -_SQRT3, 6),
          _lines_graph("MUB_C3", 1 / _SQRT3, t=3),
          tags=frozenset({"table2", "mub"}), note="three mutually unbiased bases in C^3"),
        E("MUB_C3(4)", 12, 9, _spec(3 * _SQRT3, 3, -_SQRT3, 9),
          _lines_graph("MUB_C3", 1 / _SQRT3, t=4),
          tags=frozenset({"table2", "mub"}), note="four mutually unbiased bases in C^3"),
        E("T6", 6, 4, _spec(2.0, 3, -2.0, 3),
          lambda x=ONE, **kw: toral(3, x), ("x",),
          tags=frozenset({"table2"}), note="order-6 toral tessellation, free unit x"),
        E("ETF6", 6, 5, _spec(_SQRT5, 3, -_SQRT5, 3),
          lambda z=ONE, **kw: _etf6(z), ("z",),
          tags=frozenset({"table2"}), note="order-6 equiangular tight frame family"),
        E("Renes7", 7, 6, _spec(2 * _SQRT2, 3, -3.0 / _SQRT2, 4),
          lambda **kw: renes(7),
          tags=frozenset({"table2"}), note="quadratic-residue gains on K7"),
        E("SIC3", 9, 8, _spec(4.0, 3, -2.0, 6),
          _lines_graph("SIC3", 0.5),
          tags=frozenset({"table2"}), note="nine equiangular lines in C^3"),
        # degree at most 4 (remaining rows)
        E("IG(W3)", 6, 3, _spec(_SQRT3, 3, -_SQRT3, 3),
          lambda **kw: ig(named_weighing("W3")),
          tags=frozenset({"table3"}), note="bipartite double of W3"),
        E("ND(IG(W2))", 8, 3, _spec(_SQRT3, 4, -_SQRT3, 4),
          lambda **kw: double(ig(named_weighing("W2")), "ND"),
          tags=frozenset({"table3"}), note="signed cube"),
        E("ND(W4)", 8, 4, _spec(2.0, 4, -2.0, 4),
          lambda **kw: double(_graph_from_entries(named_weighing("W4").entries), "ND"),
          tags=frozenset({"table3", "degree4"}), note="doubled W4 graph"),
        E("IG(W5)", 10, 4, _spec(2.0, 5, -2.0, 5),
          lambda **kw: ig(named_weighing("W5")),
          tags=frozenset({"table3", "degree4"}), note="bipartite double of W5"),
        E("ND(IG(W3))", 12, 4, _spec(2.0, 6, -2.0, 6),
          lambda **kw: double(ig(named_weighing("W3")), "ND"),
          tags=frozenset({"table3", "degree4"}), note="doubled bipartite double of W3"),
        E("IG(W7)", 14, 4, _spec(2.0, 7, -2.0, 7),
          lambda **kw: ig(named_weighing("W7")),
          tags=frozenset({"table3", "degree4"}), note="bipartite double of W7"),
        E("ND(ND(IG(W2)))", 16, 4, _spec(2.0, 8, -2.0, 8),
          lambda **kw: double(double(ig(named_weighing("W2")), "ND"), "ND"),
          tags=frozenset({"table3", "degree4"}), note="twice-doubled 4-cycle"),
        E("T8", 8, 4, _spec(2.0, 4, -2.0, 4),
          lambda x=ONE, **kw: toral(4, x), ("x",),
          tags=frozenset({"table3", "degree4"}), note="order-8 toral tessellation, free unit x"),
        E("T10", 10, 4, _spec(2.0, 5, -2.0, 5),
          lambda x=ONE, **kw: toral(5, x), ("x",),
          tags=frozenset({"toral"}), note="order-10 toral tessellation, free unit x"),
        # degree 5
        E("Donut6", 6, 5, _spec(_SQRT5, 3, -_SQRT5, 3),
          lambda x=ONE, **kw: donut(3, x), ("x",),
          tags=frozenset({"degree5"}), note="order-6 donut, free unit x"),
        E("Donut8", 8, 5, _spec(_SQRT5, 4, -_SQRT5, 4),
          lambda x=ONE, **kw: donut(4, x), ("x",),
          tags=frozenset({"degree5"}), note="order-8 donut, free unit x"),
        E("D8star", 8, 5, _spec(_SQRT5, 4, -_SQRT5, 4),
          lambda c=I_GAIN, **kw: d8_star(c), ("c",),
          tags=frozenset({"degree5"}), note="exceptional order-8 five-regular family"),
        # geometries
        E("GQ22", 15, 6, _spec(3.0, 6, -2.0, 9),
          lambda **kw: fixed_catalog("GQ22"),
          tags=frozenset({"geometry"}), note="hexacode line system on 15 vertices"),
        E("Ramezani_Delta5", 10, 6, _spec(3.0, 4, -2.0, 6),
          lambda **kw: fixed_catalog("Ramezani_Delta5"),
          tags=frozenset({"geometry"}), note="simplex difference lines, ten vertices"),
        E("Witting", 40, 27, _spec(9 * _SQRT3, 4, -_SQRT3, 36),
          _lines_graph("Witting", 1 / _SQRT3),
          tags=frozenset({"geometry"}), note="forty lines of the Witting polytope"),
        E("ST33", 45, 32, _spec(16.0, 5, -2.0, 40),
          _lines_graph("ST33", 0.5),
          tags=frozenset({"geometry"}), note="45 lines in C^5 meeting the second bound"),
        E("CoxeterTodd2", 126, 80, _spec(40.0, 6, -2.0, 120),
          _lines_graph("CoxeterTodd", 0.5, base=2),
          tags=frozenset({"geometry", "coxeter-todd"}), note="Coxeter-Todd lines, base-2 frame"),
        E("CoxeterTodd3", 126, 80, _spec(40.0, 6, -2.0, 120),
          _lines_graph("CoxeterTodd", 0.5, base=3),
          tags=frozenset({"geometry", "coxeter-todd"}), note="Coxeter-Todd lines, base-3 frame"),
        E("CoxeterTodd4", 126, 80, _spec(40.0, 6, -2.0, 120),
          _lines_graph("CoxeterTodd", 0.5, base=4),
          tags=frozenset({"geometry", "coxeter-todd"}), note="Coxeter-Todd lines, base-4 frame"),
        # sporadic search results
        E("K8star", 8, 7, _spec(_SQRT7, 4, -_SQRT7, 4),
          lambda **kw: fixed_catalog("K8star"),
          tags=frozenset({"sporadic"}), note="seven-regular graph on eight vertices"),
        E("K10star", 10, 9, _spec(3.0, 5, -3.0, 5),
          lambda **kw: fixed_catalog("K10star"),
          tags=frozenset({"sporadic"}), note="nine-regular signed graph on ten vertices"),
        E("M1", 12, 5, _spec(_SQRT5, 6, -_SQRT5, 6),
          lambda x=ONE, **kw: fixed_catalog("M1", x=x), ("x",),
          tags=frozenset({"sporadic"}), note="five-regular family on the icosahedron"),
        E("M2", 12, 5, _spec(_SQRT5, 6, -_SQRT5, 6),
          lambda x=ONE, **kw: fixed_catalog("M2", x=x), ("x",),
          tags=frozenset({"sporadic"}), note="bipartite double of the weight-5 matrix Z"),
        E("M3", 12, 5, _spec(_SQRT5, 6, -_SQRT5, 6),
          lambda x=ONE, **kw: fixed_catalog("M3", x=x), ("x",),
          tags=frozenset({"sporadic"}), note="five-regular sporadic family"),
        E("M4", 12, 5, _spec(_SQRT5, 6, -_SQRT5, 6),
          lambda **kw: fixed_catalog("M4"),
          tags=frozenset({"sporadic"}), note="five-regular sporadic graph, quartic gains"),
        E("Example1", 7, 6, _spec(2 * _SQRT2, 3, -3.0 / _SQRT2, 4),
          lambda **kw: example_1(),
          tags=frozenset({"equiangular"}), note="seven equiangular lines in C^4"),
    ]
    return entries


def _etf6(z: Gain) -> GainGraph:
    from . import lines
    return lines.lines_to_gain(lines.geometry_lines("ETF6", z=z), 1 / _SQRT5)


_CATALOG: Optional[tuple[CatalogEntry, ...]] = None


def catalog() -> tuple[CatalogEntry, ...]:
    """The immutable registry of all named examples, in fixed report order."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = tuple(_catalog_entries())
    return _CATALOG


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise UnknownName(f"no catalog entry named {name!r}")
