"""Rational matrix functions as left matrix-fraction descriptions ``Q^{-1} P``.

Properness and symmetry are decided by exact polynomial identities.  The
McMillan degree has two routes: the coprime factor's ``deg det Q~`` and the
rank at which the block Hankel matrix of Markov parameters stabilizes.
Improper functions are moved to the proper case by ``s = a - 1/w``, a real
orientation-preserving Moebius map that sends ``a`` to infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .inertia import inertia
from .polymat import Poly, PolyMatrix, adjugate, coprime_decompose, delta_max_minor, det


@dataclass(frozen=True)
class LeftMFD:
    Q: PolyMatrix
    P: PolyMatrix

    def __post_init__(self):
        if not (self.Q.is_square() and self.P.is_square() and self.Q.shape == self.P.shape):
            raise ValueError("Q and P must be square of equal size")
        if det(self.Q).is_zero():
            raise ValueError("Q is singular")

    @property
    def n(self) -> int:
        return self.Q.rows

    def evaluate(self, x):
        """Numerical value of ``Q(x)^{-1} P(x)`` (numpy array)."""
        import numpy as np

        Qx = np.array(self.Q.eval(float(x)) if not isinstance(x, complex) else self.Q.eval(x))
        Px = np.array(self.P.eval(float(x)) if not isinstance(x, complex) else self.P.eval(x))
        return np.linalg.solve(Qx, Px)

    def scaled(self, S) -> "LeftMFD":
        """MFD of ``S^T H S`` for constant ``S`` (scalar denominator form)."""
        Sm = PolyMatrix.constant(S)
        d = det(self.Q)
        num = Sm.T @ adjugate(self.Q) @ self.P @ Sm
        return LeftMFD(PolyMatrix.scalar(d, Sm.cols), num)


def is_proper(h: LeftMFD) -> bool:
    return delta_max_minor((-h.P).hstack(h.Q)) == det(h.Q).degree


def _proper_by_adjugate(h: LeftMFD) -> bool:
    # same answer as is_proper, via deg(adj(Q) P) <= deg det Q; much cheaper
    d = det(h.Q).degree
    return (adjugate(h.Q) @ h.P).max_degree() <= d


def is_symmetric_tf(h: LeftMFD) -> bool:
    return h.P @ h.Q.T == h.Q @ h.P.T


@dataclass(frozen=True)
class MarkovSeries:
    """``H(s) = Wminus1 + W[0]/s + W[1]/s^2 + ...`` up to ``W[len(W)-1]``."""

    Wminus1: list
    W: list

    @property
    def order(self) -> int:
        return len(self.W) - 1

    def left_multiply(self, S) -> "MarkovSeries":
        St = la.transpose(S)
        return MarkovSeries(la.matmul(St, self.Wminus1), [la.matmul(St, w) for w in self.W])

    def right_multiply(self, S) -> "MarkovSeries":
        return MarkovSeries(la.matmul(self.Wminus1, S), [la.matmul(w, S) for w in self.W])


def _scalar_series(num: Poly, den: Poly, count: int) -> list:
    """First ``count`` coefficients of ``num/den`` in powers of ``1/s``."""
    D = den.degree
    if num.degree > D:
        raise ValueError("improper rational function")
    dt = [den.coeff(D - l) for l in range(D + 1)]
    c = []
    for l in range(count):
        acc = num.coeff(D - l) if l <= D else Fraction(0)
        for k in range(max(0, l - D), l):
            acc -= dt[l - k] * c[k]
        c.append(acc / dt[0])
    return c


def markov(h: LeftMFD, order: int) -> MarkovSeries:
    """Markov parameters ``W_{-1}, W_0, ..., W_order`` by exact long division."""
    d = det(h.Q)
    N = adjugate(h.Q) @ h.P
    if N.max_degree() > d.degree:
        raise ValueError("markov parameters need a proper transfer function")
    n = h.n
    count = order + 2
    series = [[_scalar_series(N[i, j], d, count) for j in range(n)] for i in range(n)]
    mats = [[[series[i][j][k] for j in range(n)] for i in range(n)] for k in range(count)]
    return MarkovSeries(mats[0], mats[1:])


@dataclass(frozen=True)
class HankelMatrix:
    r: int
    data: list


def hankel(s: MarkovSeries, r: int, shift: int = 0) -> HankelMatrix:
    """Block Hankel matrix with block ``(i, j) = W[i + j + shift]``."""
    need = 2 * (r - 1) + shift
    if r < 1 or need > s.order:
        raise ValueError(f"series of order {s.order} too short for a {r}-block Hankel matrix")
    rows = []
    for i in range(r):
        blocks = [s.W[i + j + shift] for j in range(r)]
        for k in range(len(blocks[0])):
            rows.append([x for b in blocks for x in b[k]])
    return HankelMatrix(r, rows)


def choose_pivot(h: LeftMFD) -> Fraction:
    """First of 0, 1, -1, 2, -2, ... where ``det Q`` does not vanish."""
    d = det(h.Q)
    k = 0
    while True:
        for a in ((k,) if k == 0 else (k, -k)):
            if d(Fraction(a)) != 0:
                return Fraction(a)
        k += 1


def _substitute(p: Poly, a: Fraction, k: int) -> Poly:
    """``w**k * p(a - 1/w)`` for ``deg p <= k``."""
    lin = Poly((-1, a))  # a*w - 1
    out = Poly()
    pw = Poly.const(1)
    for j, c in enumerate(p.coeffs):
        if c:
            out = out + pw * Poly.monomial(k - j, c)
        pw = pw * lin
    return out


def mobius_transform(h: LeftMFD, pivot) -> LeftMFD:
    """MFD of ``w -> H(pivot - 1/w)``; proper whenever ``pivot`` is not a pole."""
    a = Fraction(pivot)
    k = max(h.Q.max_degree(), h.P.max_degree(), 0)

    def sub(M):
        return PolyMatrix([[_substitute(e, a, k) for e in row] for row in M.entries], M.rows, M.cols)

    out = LeftMFD(sub(h.Q), sub(h.P))
    if not _proper_by_adjugate(out):
        raise ValueError(f"pivot {a} is a pole of H")
    return out


def properize(h: LeftMFD) -> LeftMFD:
    return h if _proper_by_adjugate(h) else mobius_transform(h, choose_pivot(h))


def mcmillan_degree(h: LeftMFD, method: str = "coprime") -> int:
    if method == "hankel":
        return hankel_degree(h)
    if method != "coprime":
        raise ValueError(f"unknown method {method!r}")
    hp = properize(h)
    dec = coprime_decompose(hp.P, hp.Q)
    return det(dec.Qtilde).degree


def hankel_ranks(h: LeftMFD, rmax: int) -> list:
    """``[rank H_1, ..., rank H_rmax]`` for a proper ``h``."""
    s = markov(h, 2 * rmax)
    return [la.rank(hankel(s, r).data) for r in range(1, rmax + 1)]


def hankel_degree(h: LeftMFD, bound: int | None = None) -> int:
    """McMillan degree from the stabilized Hankel rank.

    ``bound`` is an a priori upper bound on the degree (default ``deg det Q``
    of the proper form); the rank is evaluated there and one order beyond,
    and the two must agree.
    """
    hp = properize(h)
    D = det(hp.Q).degree if bound is None else bound
    if D == 0:
        return 0
    s = markov(hp, 2 * D + 1)
    r1 = la.rank(hankel(s, D).data)
    r2 = la.rank(hankel(s, D + 1).data)
    if r1 != r2:
        raise ArithmeticError("Hankel rank did not stabilize within the degree bound")
    return r1


def gamma_hankel(h: LeftMFD) -> int:
    """Extended Cauchy index as ``pi - nu`` of the stabilized Hankel matrix."""
    if not _proper_by_adjugate(h):
        raise ValueError("gamma_hankel needs a proper transfer function")
    if not is_symmetric_tf(h):
        raise ValueError("extended Cauchy index is defined for symmetric H only")
    d = hankel_degree(h)
    if d == 0:
        return 0
    s = markov(h, 2 * d)
    return inertia(hankel(s, d).data).signature


def gamma(h: LeftMFD) -> int:
    """Extended Cauchy index of a possibly improper symmetric ``h``."""
    if not is_symmetric_tf(h):
        raise ValueError("extended Cauchy index is defined for symmetric H only")
    return gamma_hankel(properize(h))
