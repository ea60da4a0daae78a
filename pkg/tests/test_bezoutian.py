import random

import pytest
from hypothesis import given, settings, strategies as st

from _util import fm, mfd, one, s, scalar
from recip import linalg as la, randgen
from recip.bezoutian import (
    bezoutian, bezoutian_identity_holds, cauchy_sweep, gamma_delta_bez, inertia, real_roots,
)
from recip.polymat import Poly, PolyMatrix
from recip.ratmfd import LeftMFD, is_symmetric_tf

diag_mixed = LeftMFD(PolyMatrix([[s, 0], [0, 1]]), PolyMatrix([[1, 0], [0, s]]))


@pytest.mark.parametrize("p,q,want", [
    (one, s, [[1]]),
    (s, one, [[-1]]),
    (s + 1, s * s + s, [[1, 1], [1, 1]]),
    (one, s * s + 1, [[0, 1], [1, 0]]),
    (s * s + 1, s, [[1, 0], [0, -1]]),
])
def test_scalar_examples(p, q, want):
    b = bezoutian(scalar(p), scalar(q))
    assert b.data == fm(want)
    assert bezoutian_identity_holds(scalar(p), scalar(q), b)


def test_inertia_examples():
    assert inertia(fm([[2, 0, 0], [0, -3, 0], [0, 0, 0]])) == inertia(fm([[1, 0, 0], [0, -1, 0], [0, 0, 0]]))
    r = inertia(fm([[1, 1], [1, 1]]))
    assert (r.positive, r.negative, r.zero) == (1, 0, 1)


def test_gamma_delta_examples():
    assert gamma_delta_bez(mfd(s, one)) == (1, 1)
    assert gamma_delta_bez(mfd(one, s)) == (-1, 1)
    assert gamma_delta_bez(mfd(s * s + s, s + 1)) == (1, 1)
    assert gamma_delta_bez(diag_mixed) == (0, 2)


def test_non_reciprocal_pair_rejected():
    P = PolyMatrix([[s, 1], [0, 1]])
    Q = PolyMatrix([[1, 0], [s, 1]])
    with pytest.raises(ValueError):
        bezoutian(P, Q)
    with pytest.raises(ValueError):
        bezoutian(PolyMatrix([[0, 1], [0, 0]]), PolyMatrix.identity(2))


def test_real_roots():
    p = Poly.from_roots([-2, 0, 0, 3]) * (s * s + 1) * (s * s - 2)
    got = real_roots(p)
    want = [-2, -(2 ** 0.5), 0, 2 ** 0.5, 3]
    assert len(got) == 5 and all(abs(a - b) < 1e-10 for a, b in zip(got, want))
    assert real_roots(s * s + 1) == [] and real_roots(Poly.const(4)) == []


@pytest.mark.parametrize("h,want", [
    (mfd(s, one), 1),
    (mfd(s * s + 1, one), 0),
    (mfd(s, s * s + 1), 0),
    (mfd(one, s), -1),
    (diag_mixed, 0),
])
def test_sweep_examples(h, want):
    assert cauchy_sweep(h) == want


def test_sweep_rejects_bad_epsilon():
    h = mfd(s * (s - 1), one)
    with pytest.raises(ValueError):
        cauchy_sweep(h, epsilon=0.6)
    with pytest.raises(ValueError):
        cauchy_sweep(h, epsilon=-1.0)
    with pytest.raises(ValueError):
        cauchy_sweep(LeftMFD(PolyMatrix.identity(2), PolyMatrix([[0, 1], [0, 0]])))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_identity_antisymmetry_symmetry(seed):
    P, Q = randgen.reciprocal_pair(random.Random(seed))
    b = bezoutian(P, Q)
    assert bezoutian_identity_holds(P, Q, b)
    if b.m:
        assert bezoutian(Q, P).data == la.scale(-1, b.data)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_bezoutian_symmetric_for_symmetric_tf(seed):
    h = randgen.symmetric_mfd(random.Random(seed), 3, 5, improper=True)
    assert is_symmetric_tf(h)
    assert la.is_symmetric(bezoutian(h.P, h.Q).data)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_signature_pair_identity(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 5)
    A, sigma = randgen.signature_symmetric_pair(rng, d)
    Q = (PolyMatrix.identity(d) * s - PolyMatrix.constant(A)) @ PolyMatrix.constant(la.diag(sigma))
    assert bezoutian(PolyMatrix.identity(d), Q).data == la.diag(sigma)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_sweep_matches_bezoutian(seed):
    h = randgen.scalar_separated(random.Random(seed))
    assert cauchy_sweep(h) == gamma_delta_bez(h)[0]
