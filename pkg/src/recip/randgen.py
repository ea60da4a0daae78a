"""Seeded generators for the randomized property suites.

Integer coefficients are uniform in ``[-3, 3]`` unless a caller widens the
range; all draws go through one ``random.Random`` so a seed fixes a run.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .polymat import Poly, PolyMatrix, coprime_decompose, det, poly_gcd
from .ratmfd import LeftMFD
from .realization import StateSpace, transfer_function

LO, HI = -3, 3


def rand_int(rng: random.Random, lo: int = LO, hi: int = HI) -> Fraction:
    return Fraction(rng.randint(lo, hi))


def rand_poly(rng: random.Random, deg: int, monic: bool = False) -> Poly:
    c = [rand_int(rng) for _ in range(deg + 1)]
    if monic:
        c[deg] = Fraction(1)
    elif deg >= 0 and c[deg] == 0:
        c[deg] = Fraction(rng.choice((-1, 1)))
    return Poly(c)


def rand_matrix(rng, r: int, c: int, lo: int = LO, hi: int = HI) -> list:
    return [[rand_int(rng, lo, hi) for _ in range(c)] for _ in range(r)]


def rand_symmetric(rng, n: int, lo: int = LO, hi: int = HI) -> list:
    M = rand_matrix(rng, n, n, lo, hi)
    return [[M[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


def rand_sigma(rng, d: int) -> list:
    return [rng.choice((1, -1)) for _ in range(d)]


def rand_polymatrix(rng, r: int, c: int, deg: int) -> PolyMatrix:
    return PolyMatrix([[Poly([rand_int(rng) for _ in range(rng.randint(0, deg) + 1)])
                        for _ in range(c)] for _ in range(r)], r, c)


def rand_sym_polymatrix(rng, n: int, deg: int) -> PolyMatrix:
    M = rand_polymatrix(rng, n, n, deg)
    return PolyMatrix([[M[min(i, j), max(i, j)] for j in range(n)] for i in range(n)], n, n)


def reciprocal_pair(rng, n_max: int = 3, deg_max: int = 4):
    """``(P, Q)`` of size ``n <= n_max``, degrees ``<= deg_max``, with ``Q P^T`` symmetric.

    Scalars are unrestricted.  Matrices are ``P = L Ps``, ``Q = q L`` with
    ``Ps`` symmetric and ``q`` scalar, which covers non-diagonal, non-coprime
    and singular cases while keeping the Bezoutian defined.
    """
    n = rng.randint(1, n_max)
    if n == 1:
        return (PolyMatrix([[rand_poly(rng, rng.randint(0, deg_max))]]),
                PolyMatrix([[rand_poly(rng, rng.randint(0, deg_max))]]))
    dl = rng.randint(0, deg_max // 2)
    rest = deg_max - dl
    L = rand_polymatrix(rng, n, n, dl)
    Ps = rand_sym_polymatrix(rng, n, rng.randint(0, rest))
    q = rand_poly(rng, rng.randint(0, rest))
    return L @ Ps, L * q


def signature_symmetric_pair(rng, d: int):
    """``(A, sigma)`` with ``A diag(sigma)`` symmetric."""
    sigma = rand_sigma(rng, d)
    X = rand_symmetric(rng, d)
    A = [[X[i][j] * sigma[j] for j in range(d)] for i in range(d)]
    return A, sigma


def signature_symmetric_ss(rng, d: int, n: int) -> tuple:
    """Random signature-symmetric ``(StateSpace, sigma)``."""
    A, sigma = signature_symmetric_pair(rng, d)
    C = rand_matrix(rng, n, d)
    B = [[sigma[i] * C[k][i] for k in range(n)] for i in range(d)]
    return StateSpace(A, B, C, rand_symmetric(rng, n)), sigma


def symmetric_mfd(rng, n_max: int = 3, d_max: int = 6, improper: bool = False) -> LeftMFD:
    """Symmetric ``H`` from a random signature-symmetric realization.

    With ``improper`` a term ``s K`` (``K`` symmetric) may be added; ``d`` and
    ``rank K`` together stay within ``d_max``.
    """
    n = rng.randint(1, n_max)
    d = rng.randint(0, d_max)
    ss, _ = signature_symmetric_ss(rng, d, n)
    h = transfer_function(ss)
    if improper and d < d_max and rng.random() < 0.5:
        k = rng.randint(1, min(n, d_max - d))
        V = rand_matrix(rng, n, k)
        signs = rand_sigma(rng, k)
        K = [[sum(V[i][t] * signs[t] * V[j][t] for t in range(k)) for j in range(n)] for i in range(n)]
        chi = h.Q[0, 0]
        P = h.P + PolyMatrix.constant(K) * (chi * Poly((0, 1)))
        h = LeftMFD(h.Q, P)
    return h


def coprime_symmetric_mfd(rng, n_max: int = 3, d_max: int = 6) -> LeftMFD:
    h = symmetric_mfd(rng, n_max, d_max)
    dec = coprime_decompose(h.P, h.Q)
    return LeftMFD(dec.Qtilde, dec.Ptilde)


def scalar_separated(rng, deg_max: int = 6) -> LeftMFD:
    """Scalar ``p/q`` with distinct integer real poles (gap >= 1) and possibly
    a complex pair; ``deg p <= deg q + 1`` so improper cases occur."""
    nreal = rng.randint(0, deg_max)
    poles = rng.sample(range(-6, 7), nreal)
    q = Poly.from_roots(poles)
    if q.degree + 2 <= deg_max and rng.random() < 0.3:
        b = rng.randint(-2, 2)
        c = rng.randint(b * b // 4 + 1, 4)
        q = q * Poly((c, b, 1))
    top = min(q.degree + 1, deg_max)
    p = rand_poly(rng, rng.randint(0, top))
    if p.is_zero():
        p = Poly.const(1)
    return LeftMFD(PolyMatrix([[q]]), PolyMatrix([[p]]))


def scalar_behavior(rng, delta_max: int = 4, f_max: int = 2):
    """``(P^, Q^) = (F p~, F q~)`` with coprime proper ``p~/q~`` and ``F`` a
    product of distinct real linear factors that are not poles."""
    while True:
        dq = rng.randint(0, delta_max)
        qt = rand_poly(rng, dq, monic=True)
        pt = rand_poly(rng, rng.randint(0, dq))
        if pt.is_zero() or poly_gcd(pt, qt).degree > 0:
            continue
        k = rng.randint(0, f_max)
        roots = rng.sample(range(-3, 4), k)
        if any(qt(Fraction(r)) == 0 for r in roots):
            continue
        F = Poly.from_roots(roots)
        return LeftMFD(PolyMatrix([[F * qt]]), PolyMatrix([[F * pt]])), pt, qt, F


def lemma10_pair(rng, m_max: int = 8, n_max: int = 8):
    """Symmetric ``P`` (``m x m``) and ``S`` (``m x n``) with occasional rank loss."""
    m = rng.randint(1, m_max)
    n = rng.randint(1, n_max)
    P = rand_symmetric(rng, m)
    if rng.random() < 0.5:
        r = rng.randint(0, min(m, n))
        left, right = rand_matrix(rng, m, r), rand_matrix(rng, r, n)
        S = [[sum((a * b for a, b in zip(x, y)), Fraction(0)) for y in zip(*right)] for x in left]
    else:
        S = rand_matrix(rng, m, n)
    return P, S


def theorem9_pair(rng, delta_max: int = 5, n_max: int = 3):
    h = symmetric_mfd(rng, n_max, delta_max, improper=True)
    k = rng.randint(1, n_max)
    return h, rand_matrix(rng, h.n, k)


def nonsingular(h: LeftMFD) -> bool:
    return not det(h.Q).is_zero()
