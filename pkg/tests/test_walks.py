import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from magmalab.quantum.walks import (
    CombinatorialBlowup,
    JohnsonGraph,
    MarkovChain,
    NotErgodic,
    QuantizedWalk,
    WalkCosts,
    build_johnson_chain,
    build_product_chain,
    classical_walk_cost,
    default_cap,
    detection_curve,
    detection_steps,
    first_detection_step,
    johnson_gap,
    johnson_transition_matrix,
    mnrs_cost,
    product_gap_from_factors,
    spectral_gap,
)


def johnson_spectrum(m, r):
    # adjacency eigenvalue (r-j)(m-r-j) - j with multiplicity C(m,j) - C(m,j-1)
    out = Counter()
    deg = r * (m - r)
    for j in range(min(r, m - r) + 1):
        mult = math.comb(m, j) - (math.comb(m, j - 1) if j else 0)
        out[round(((r - j) * (m - r - j) - j) / deg, 9)] += mult
    return out


@pytest.mark.parametrize("m, r", [(4, 1), (5, 2), (6, 3), (7, 2), (8, 3)])
def test_full_spectrum_matches_closed_form(m, r):
    eigs = build_johnson_chain(m, r).eigenvalues()
    assert Counter(round(float(x), 9) for x in eigs) == johnson_spectrum(m, r)


def test_johnson_graph_shape():
    g = JohnsonGraph(6, 2)
    assert len(g.vertices) == 15 and g.degree == 8
    A = g.adjacency()
    assert (A.sum(axis=1) == 8).all() and np.array_equal(A, A.T) and A.trace() == 0
    with pytest.raises(ValueError):
        JohnsonGraph(4, 4)


def test_chain_validation():
    with pytest.raises(ValueError):
        MarkovChain((0, 1), np.array([[0.5, 0.5], [0.2, 0.8]]))
    with pytest.raises(NotErgodic):
        MarkovChain((0, 1), np.eye(2))
    with pytest.raises(NotErgodic):
        build_johnson_chain(2, 1)  # bipartite: eigenvalue -1
    P = johnson_transition_matrix(2, 1)
    assert spectral_gap(P) == pytest.approx(2.0) == johnson_gap(2, 1)


@given(st.integers(3, 9).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m - 1))))
def test_gap_closed_form_and_lower_bound(mr):
    m, r = mr
    gap = spectral_gap(build_johnson_chain(m, r))
    assert abs(gap - johnson_gap(m, r)) < 1e-9
    assert gap >= 1 / r - 1e-12


def test_product_chain_gap():
    c1, c2 = build_johnson_chain(5, 2), build_johnson_chain(4, 1)
    prod = build_product_chain(c1, c2)
    assert prod.size == 40
    assert abs(spectral_gap(prod) - product_gap_from_factors(c1, c2)) < 1e-9


def test_costs():
    c = WalkCosts(s=10, u=2, c=3, delta=0.25, eps=0.04)
    assert mnrs_cost(c) == pytest.approx(10 + (2 / 0.5 + 3) / 0.2)
    assert classical_walk_cost(c) == pytest.approx(10 + (2 / 0.25 + 3) / 0.04)
    with pytest.raises(ValueError):
        WalkCosts(1, 1, 1, delta=1.5, eps=0.5)
    with pytest.raises(ValueError):
        WalkCosts(1, 1, 1, delta=0.5, eps=0)


def test_stationary_state_is_fixed_by_unmarked_walk():
    w = QuantizedWalk(build_johnson_chain(5, 2))
    psi = w.step(w.initial, with_oracle=False)
    assert np.allclose(psi, w.initial)


def test_marked_walk_is_unitary():
    w = QuantizedWalk(build_johnson_chain(6, 2), [(0, 1), (2, 5)])
    for psi in w.evolve(12):
        assert abs(np.vdot(psi, psi).real - 1) < 1e-12


def test_detection_extremes():
    chain = build_johnson_chain(6, 2)
    assert np.abs(detection_curve(chain, [], 30)).max() < 1e-12
    curve = detection_curve(chain, chain.states, 3)
    assert curve[1] == pytest.approx(1.0)


def test_marked_given_by_index_or_state():
    chain = build_johnson_chain(5, 2)
    a = detection_curve(chain, [chain.states[3]], 5)
    b = detection_curve(chain, [3], 5)
    assert np.allclose(a, b)


def test_single_marked_vertex_detected_on_schedule():
    chain = build_johnson_chain(6, 2)
    T = detection_steps(johnson_gap(6, 2), 1 / chain.size)
    assert T == 4
    for v in range(chain.size):
        step = first_detection_step(chain, [v], T)
        assert step is not None and step <= T


def test_cap(monkeypatch):
    with pytest.raises(CombinatorialBlowup):
        QuantizedWalk(build_johnson_chain(6, 2), cap=200)
    monkeypatch.setenv("MAGMA_LAB_CAP", "77")
    assert default_cap() == 77
