"""Line-oriented text formats for gain graphs and line systems.

Both formats are versioned, diff-friendly, and locale-independent;
numeric values are written with 17 significant digits so that parse
after serialize is the identity for exact gains and bit-faithful for
numeric ones.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParseError, SelfLoop
from .gains import Gain, GainGraph, build
from .lines import LineSystem


def strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# -- gain graphs -----------------------------------------------------------------

def serialize_gaingraph(g: GainGraph) -> str:
    out = ["gaingraph v1", f"n {g.n}"]
    for u, v, gain in g.edges():
        if gain.is_exact:
            a = gain.angle
            out.append(f"e {u} {v} rot {a.numerator}/{a.denominator}")
        else:
            z = gain.value
            out.append(f"e {u} {v} num {_fmt(z.real)} {_fmt(z.imag)}")
    return "\n".join(out) + "\n"


def parse_gaingraph(text: str) -> GainGraph:
    lines = text.splitlines()
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        body = strip_comment(raw)
        if body:
            rows.append((lineno, body.split()))
    if not rows or rows[0][1] != ["gaingraph", "v1"]:
        raise ParseError(rows[0][0] if rows else 1, "expected header 'gaingraph v1'")
    if len(rows) < 2 or rows[1][1][0] != "n" or len(rows[1][1]) != 2:
        raise ParseError(rows[1][0] if len(rows) > 1 else 1, "expected 'n <N>'")
    try:
        n = int(rows[1][1][1])
    except ValueError:
        raise ParseError(rows[1][0], f"bad vertex count {rows[1][1][1]!r}") from None
    if n < 0:
        raise ParseError(rows[1][0], "vertex count must be nonnegative")

    edges = []
    for lineno, tok in rows[2:]:
        if tok[0] != "e":
            raise ParseError(lineno, f"expected edge line, got {tok[0]!r}")
        if len(tok) < 5:
            raise ParseError(lineno, "edge line too short")
        try:
            u, v = int(tok[1]), int(tok[2])
        except ValueError:
            raise ParseError(lineno, "vertex ids must be integers") from None
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise ParseError(lineno, f"edges must satisfy u < v, got {u} {v}")
        kind = tok[3]
        if kind == "rot":
            if len(tok) != 5 or "/" not in tok[4]:
                raise ParseError(lineno, "rot gain needs a single p/q token")
            ps, qs = tok[4].split("/", 1)
            try:
                p, q = int(ps), int(qs)
            except ValueError:
                raise ParseError(lineno, f"bad rotation {tok[4]!r}") from None
            if q <= 0 or not 0 <= p < q or math.gcd(p, q) != 1:
                raise ParseError(lineno, f"rotation {p}/{q} not reduced into [0,1)")
            gain = Gain.exact(p, q)
        elif kind == "num":
            if len(tok) != 6:
                raise ParseError(lineno, "num gain needs re and im")
            try:
                z = complex(float(tok[4]), float(tok[5]))
            except ValueError:
                raise ParseError(lineno, "bad numeric gain components") from None
            gain = Gain.numeric(z, tol=1e-9)   # NonUnitGain on bad modulus
        else:
            raise ParseError(lineno, f"unknown gain kind {kind!r}")
        edges.append((u, v, gain))
    return build(n, edges)


# -- line systems ----------------------------------------------------------------

def serialize_lines(system: LineSystem) -> str:
    out = ["lines v1", f"dim {system.dim}", f"count {system.count}"]
    for j in range(system.count):
        parts = [f"v {j}"]
        for x in system.matrix[:, j]:
            parts.append(f"{_fmt(x.real)} {_fmt(x.imag)}")
        out.append(" ".join(parts))
    return "\n".join(out) + "\n"


def parse_lines(text: str) -> LineSystem:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = strip_comment(raw)
        if body:
            rows.append((lineno, body.split()))
    if not rows or rows[0][1] != ["lines", "v1"]:
        raise ParseError(rows[0][0] if rows else 1, "expected header 'lines v1'")
    if len(rows) < 3:
        raise ParseError(rows[-1][0], "missing dim/count headers")
    for idx, key in ((1, "dim"), (2, "count")):
        if rows[idx][1][0] != key or len(rows[idx][1]) != 2:
            raise ParseError(rows[idx][0], f"expected '{key} <int>'")
    try:
        m = int(rows[1][1][1])
        n = int(rows[2][1][1])
    except ValueError:
        raise ParseError(rows[1][0], "dim and count must be integers") from None
    if m <= 0 or n < 0:
        raise ParseError(rows[1][0], "dim must be positive and count nonnegative")

    vec_rows = rows[3:]
    if len(vec_rows) != n:
        raise ParseError(rows[-1][0] if rows else 1,
                         f"count says {n} vectors but found {len(vec_rows)}")
    N = np.zeros((m, n), dtype=complex)
    seen = set()
    for lineno, tok in vec_rows:
        if tok[0] != "v" or len(tok) != 2 + 2 * m:
            raise ParseError(lineno, f"expected 'v <j>' plus {m} re/im pairs")
        try:
            j = int(tok[1])
            vals = [float(t) for t in tok[2:]]
        except ValueError:
            raise ParseError(lineno, "bad vector entries") from None
        if not 0 <= j < n or j in seen:
            raise ParseError(lineno, f"vector index {j} out of range or repeated")
        seen.add(j)
        N[:, j] = [complex(vals[2 * i], vals[2 * i + 1]) for i in range(m)]
    return LineSystem(N)   # NormViolation on non-unit columns
