"""Core gain/graph layer: exact-vs-numeric gains, building, switching."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gainforge.errors import (
    DuplicateEdge,
    Disconnected,
    IndexOutOfRange,
    NonUnitGain,
    SelfLoop,
)
from gainforge.gains import (
    Gain,
    apply_witness,
    build,
    converse,
    cycle_gain,
    from_matrix,
    max_coclique,
    normalize_spanning_tree,
    relabel,
    structure_stats,
    switch,
    switching_equivalent,
    switching_isomorphic,
)

ONE = Gain.exact(0, 1)
I_G = Gain.exact(1, 4)


def c4(gain=ONE):
    return build(4, [(0, 1, ONE), (1, 2, ONE), (2, 3, ONE), (0, 3, gain)])


# -- Gain values --------------------------------------------------------------

def test_exact_gain_reduces_angle():
    g = Gain.exact(5, 4)
    assert g.angle == Fraction(1, 4)
    assert g.value == pytest.approx(1j)


def test_exact_negative_rotation_wraps():
    assert Gain.exact(-1, 4).angle == Fraction(3, 4)


def test_numeric_gain_must_be_unit():
    with pytest.raises(NonUnitGain):
        Gain.numeric(0.5 + 0.1j)
    # on the circle it is fine
    z = complex(math.cos(0.3), math.sin(0.3))
    assert Gain.numeric(z).value == z


def test_gain_product_stays_exact():
    g = Gain.exact(1, 3) * Gain.exact(1, 6)
    assert g.is_exact and g.angle == Fraction(1, 2)


def test_gain_conj_and_neg():
    g = Gain.exact(1, 8)
    assert g.conj().angle == Fraction(7, 8)
    assert (-g).angle == Fraction(5, 8)


def test_close_mixes_exact_and_numeric():
    a = Gain.exact(1, 4)
    b = Gain.numeric(complex(0, 1))
    assert a.close(b) and b.close(a)


@given(st.integers(-40, 40), st.integers(1, 24))
def test_exact_value_on_unit_circle(p, q):
    assert abs(abs(Gain.exact(p, q).value) - 1.0) < 1e-12


# -- graph construction -------------------------------------------------------

def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build(3, [(1, 1, ONE)])


def test_build_rejects_duplicate():
    with pytest.raises(DuplicateEdge):
        build(3, [(0, 1, ONE), (1, 0, I_G)])


def test_build_rejects_bad_index():
    with pytest.raises(IndexOutOfRange):
        build(3, [(0, 5, ONE)])


def test_gain_is_conjugated_against_orientation():
    g = build(2, [(0, 1, I_G)])
    assert g.gain(0, 1).value == pytest.approx(1j)
    assert g.gain(1, 0).value == pytest.approx(-1j)


def test_matrix_is_hermitian_with_zero_diagonal():
    g = c4(I_G)
    A = g.matrix()
    assert np.allclose(A, A.conj().T)
    assert np.allclose(np.diag(A), 0)


def test_from_matrix_round_trip():
    g = c4(Gain.exact(1, 3))
    h = from_matrix(g.matrix())
    assert h.support() == g.support()
    for u, v, gn in g.edges():
        assert h.gain(u, v).close(gn)


def test_from_matrix_rejects_non_unit_entry():
    A = np.zeros((2, 2), dtype=complex)
    A[0, 1] = 0.5
    A[1, 0] = 0.5
    with pytest.raises(NonUnitGain):
        from_matrix(A)


def test_cycle_gain_around_square():
    g = c4(I_G)
    z = cycle_gain(g, [0, 1, 2, 3])
    # walk 0-1-2-3-0 picks up conj(i) on the closing edge
    assert z == pytest.approx(-1j)


# -- switching ------------------------------------------------------------------

def test_switch_changes_gains_not_spectrum_support():
    g = c4(I_G)
    d = [Gain.exact(k, 7) for k in range(4)]
    h = switch(g, d)
    assert h.support() == g.support()
    e1 = np.linalg.eigvalsh(g.matrix())
    e2 = np.linalg.eigvalsh(h.matrix())
    assert np.allclose(e1, e2)


def test_converse_conjugates_gains():
    g = c4(I_G)
    h = converse(g)
    assert h.gain(0, 3).close(I_G.conj())


def test_relabel_permutes_support():
    g = build(3, [(0, 1, ONE), (1, 2, I_G)])
    h = relabel(g, [2, 0, 1])  # vertex u of g becomes perm[u] of h
    assert h.has_edge(2, 0) and h.has_edge(0, 1)


def test_normalize_spanning_tree_sets_tree_gains_to_one():
    g = c4(Gain.exact(1, 5))
    norm, wit = normalize_spanning_tree(g)
    ones = sum(1 for _, _, gn in norm.edges() if gn.close(ONE))
    assert ones >= g.n - 1
    assert apply_witness(g, wit).support() == g.support()


def test_normalize_requires_connected():
    g = build(4, [(0, 1, ONE), (2, 3, ONE)])
    with pytest.raises(Disconnected):
        normalize_spanning_tree(g)


def test_switching_equivalent_finds_diagonal():
    g = c4(Gain.exact(2, 9))
    d = [Gain.exact(k % 3, 3) for k in range(4)]
    h = switch(g, d)
    w = switching_equivalent(g, h)
    assert w is not None and not w.conjugated
    assert np.allclose(apply_witness(g, w).matrix(), h.matrix())


def test_switching_equivalent_rejects_different_cycle_gain():
    w = switching_equivalent(c4(ONE), c4(I_G))
    assert w is None


def test_switching_isomorphic_handles_relabel_and_converse():
    g = c4(Gain.exact(1, 6))
    h = converse(relabel(switch(g, [Gain.exact(k, 5) for k in range(4)]),
                         [1, 3, 0, 2]))
    w = switching_isomorphic(g, h)
    assert w is not None
    assert np.allclose(apply_witness(g, w).matrix(), h.matrix())


def test_switching_isomorphic_distinguishes_supports():
    path = build(4, [(0, 1, ONE), (1, 2, ONE), (2, 3, ONE)])
    star = build(4, [(0, 1, ONE), (0, 2, ONE), (0, 3, ONE)])
    assert switching_isomorphic(path, star) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 16 - 1))
def test_random_switch_never_moves_eigenvalues(bits):
    g = c4(I_G)
    d = [Gain.exact((bits >> (4 * k)) & 15, 16) for k in range(4)]
    e1 = np.linalg.eigvalsh(g.matrix())
    e2 = np.linalg.eigvalsh(switch(g, d).matrix())
    assert np.max(np.abs(e1 - e2)) < 1e-9


# -- structure helpers ---------------------------------------------------------

def test_structure_stats_on_square():
    s = structure_stats(c4())
    assert s.degrees == [2, 2, 2, 2]
    assert s.is_regular and s.is_bipartite and s.triangle_free


def test_max_coclique_square():
    size, members = max_coclique(c4())
    assert size == 2
    u, v = members
    assert not c4().has_edge(u, v)


def test_max_coclique_complete():
    g = build(5, [(u, v, ONE) for u in range(5) for v in range(u + 1, 5)])
    assert max_coclique(g)[0] == 1
