import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _util import fm
from recip import linalg as la
from recip.inertia import (
    BOUNDARY_EXAMPLES, congruence_diagonalize, inertia, project_inertia,
    sylvester_bounds_check, sylvester_witness,
)
from recip.randgen import lemma10_pair, rand_matrix, rand_symmetric
from recip.surd import simplify


def _reconstruct_canonical(w):
    R = w.canonical_transform()
    D = w.canonical
    out = la.matmul(la.transpose(R), [[d * x for x in row] for d, row in zip(D, R)])
    return [[simplify(x) for x in row] for row in out]


@pytest.mark.parametrize("M,counts", [
    (fm([[0, 0], [0, 0]]), (0, 0, 2)),
    (fm([[0, 1], [1, 0]]), (1, 1, 0)),
    (fm([[1, 1], [1, 1]]), (1, 0, 1)),
    (fm([[2]]), (1, 0, 0)),
])
def test_congruence_examples(M, counts):
    w = congruence_diagonalize(M)
    assert (w.positive, w.negative, w.zero) == counts
    assert w.reconstruct() == M
    assert _reconstruct_canonical(w) == M


def test_zero_matrix_transform_is_identity():
    w = congruence_diagonalize(fm([[0, 0], [0, 0]]))
    assert w.transform == la.identity(2) and w.canonical == [0, 0]


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        congruence_diagonalize(fm([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        inertia(fm([[1, 2], [3, 4]]))


def test_project_examples():
    assert project_inertia(fm([[1, 0], [0, -1]]), fm([[1], [1]])).rank == 0
    r = project_inertia(la.identity(2), la.identity(2))
    assert (r.positive, r.negative) == (2, 0)
    r = project_inertia(fm([[1, 0, 0], [0, -1, 0], [0, 0, 0]]), fm([[1, 0], [0, 1], [0, 0]]))
    assert (r.positive, r.negative) == (1, 1)
    with pytest.raises(ValueError):
        project_inertia(la.identity(2), fm([[1]]))


def test_bounds_example():
    rep = sylvester_bounds_check(fm([[1, 0], [0, -1]]), fm([[1], [1]]))
    assert rep.holds and rep.nullity_St == 1 and rep.projected.rank == 0


@pytest.mark.parametrize("P,S,bound", BOUNDARY_EXAMPLES)
def test_boundary_examples_are_tight(P, S, bound):
    rep = sylvester_bounds_check(fm(P), fm(S))
    slack = {v.name: v.slack for v in rep.verdicts}
    assert rep.holds and slack[bound] == 0


def test_gram_matrix_tight():
    rng = random.Random(3)
    for _ in range(20):
        S = rand_matrix(rng, 3, 5)
        rep = sylvester_bounds_check(la.identity(3), S)
        assert rep.projected.positive == la.rank(S)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_inertia_matches_eigenvalues(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    M = rand_symmetric(rng, n)
    if rng.random() < 0.5:
        V = rand_matrix(rng, n, rng.randint(0, n))
        M = la.matmul(V, la.matmul(rand_symmetric(rng, len(V[0]) if V and V[0] else 0), la.transpose(V, len(V[0]) if V and V[0] else 0))) if V and V[0] else la.zeros(n, n)
    ir = inertia(M)
    ev = np.linalg.eigvalsh(np.array(M, dtype=float))
    tol = 1e-8 * max(1.0, np.abs(ev).max(initial=0))
    assert (ir.positive, ir.negative) == (int((ev > tol).sum()), int((ev < -tol).sum()))
    w = congruence_diagonalize(M)
    assert w.reconstruct() == M and w.inertia() == ir


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_classical_sylvester_law(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    P = rand_symmetric(rng, n)
    S = rand_matrix(rng, n, n)
    if la.rank(S) == n:
        assert project_inertia(P, S) == inertia(P)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_constructive_witness_agrees(seed):
    rng = random.Random(seed)
    P, S = lemma10_pair(rng, 5, 5)
    rep = sylvester_bounds_check(P, S)
    wit = sylvester_witness(P, S)
    pi, nu = rep.projected.positive, rep.projected.negative
    assert wit.pi_lower <= pi <= wit.pi_upper
    assert wit.nu_lower <= nu <= wit.nu_upper
    assert wit.pi_upper <= rep.pi_P and wit.nu_upper <= rep.nu_P
    assert wit.pi_lower >= rep.pi_P - rep.nullity_St
    assert wit.nu_lower >= rep.nu_P - rep.nullity_St
