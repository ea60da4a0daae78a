"""Matrix Bezoutians, their inertia, and an independent Cauchy-index oracle.

``Bez(Q, P)`` is the constant block matrix of the bivariate quotient
``(Q(z) P(w)^T - P(z) Q(w)^T) / (z - w)``.  For symmetric ``H = Q^{-1} P`` its
rank is the McMillan degree and ``pi - nu`` is the extended Cauchy index.
:func:`cauchy_sweep` counts eigenvalue jumps of ``H`` along the real line in
floating point, sharing nothing with the Bezoutian route except the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .inertia import InertiaResult, inertia
from .polymat import Poly, PolyMatrix, coprime_decompose, det, poly_gcd
from .ratmfd import LeftMFD, is_symmetric_tf, properize

__all__ = [
    "BezoutianMatrix", "InertiaResult", "bezoutian", "inertia", "gamma_delta_bez",
    "real_roots", "cauchy_sweep",
]


@dataclass(frozen=True)
class BezoutianMatrix:
    m: int
    n: int
    data: list

    def block(self, i: int, j: int) -> list:
        n = self.n
        return [row[j * n:(j + 1) * n] for row in self.data[i * n:(i + 1) * n]]

    def times_z_minus_w(self) -> dict:
        """Coefficients of ``sum Bez_ij z^i w^j (z - w)`` keyed by ``(a, b)``."""
        out = {}
        for i in range(self.m):
            for j in range(self.m):
                blk = self.block(i, j)
                for key, sign in (((i + 1, j), 1), ((i, j + 1), -1)):
                    acc = out.get(key, la.zeros(self.n, self.n))
                    out[key] = [[a + sign * b for a, b in zip(r1, r2)] for r1, r2 in zip(acc, blk)]
        return out


def _numerator(P: PolyMatrix, Q: PolyMatrix, m: int) -> list:
    """``N[a][b]`` = coefficient of ``z^a w^b`` in ``Q(z)P(w)^T - P(z)Q(w)^T``."""
    Qc = [Q.coefficient(k) for k in range(m + 1)]
    Pc = [P.coefficient(k) for k in range(m + 1)]
    PcT = [la.transpose(x) for x in Pc]
    QcT = [la.transpose(x) for x in Qc]
    return [[la.sub(la.matmul(Qc[a], PcT[b]), la.matmul(Pc[a], QcT[b])) for b in range(m + 1)]
            for a in range(m + 1)]


def bezoutian(P: PolyMatrix, Q: PolyMatrix) -> BezoutianMatrix:
    """``Bez(Q, P)``; note the argument order ``(P, Q)``.

    Raises ``ValueError`` if the numerator is not divisible by ``z - w``,
    which happens exactly when ``Q P^T`` is not symmetric.
    """
    if not (P.is_square() and Q.is_square() and P.shape == Q.shape):
        raise ValueError("P and Q must be square of equal size")
    n = P.rows
    m = max(P.max_degree(), Q.max_degree(), 0)
    N = _numerator(P, Q, m)
    Z = la.zeros(n, n)
    # synthetic division in z; B[a] is a polynomial in w with matrix coefficients
    B = [None] * m
    carry = [Z] * (m + 2)
    for a in range(m, 0, -1):
        cur = [la.add(N[a][b], carry[b - 1] if b >= 1 else Z) for b in range(m + 1)]
        B[a - 1] = cur
        carry = cur
    rem = [la.add(N[0][b], carry[b - 1] if (b >= 1 and m) else Z) for b in range(m + 1)]
    if m and not all(la.is_zero_matrix(x) for x in rem):
        raise ValueError("Q(z)P(w)^T - P(z)Q(w)^T is not divisible by z - w (Q P^T not symmetric)")
    if m == 0 and not all(la.is_zero_matrix(x) for x in rem):
        raise ValueError("constant P, Q with Q P^T not symmetric")
    if any(not la.is_zero_matrix(B[a][m]) for a in range(m)):
        raise ArithmeticError("quotient exceeds the block order")
    data = [[B[i][j][r][c] for j in range(m) for c in range(n)] for i in range(m) for r in range(n)]
    return BezoutianMatrix(m, n, data)


def bezoutian_identity_holds(P: PolyMatrix, Q: PolyMatrix, bez: BezoutianMatrix) -> bool:
    """Re-expand ``Bez (z - w)`` and compare with the numerator, coefficientwise."""
    N = _numerator(P, Q, bez.m)
    got = bez.times_z_minus_w()
    for a in range(bez.m + 1):
        for b in range(bez.m + 1):
            want = N[a][b]
            have = got.get((a, b), la.zeros(bez.n, bez.n))
            if want != have:
                return False
    return all(a <= bez.m and b <= bez.m for a, b in got)


def gamma_delta_bez(h: LeftMFD) -> tuple[int, int]:
    """``(gamma, delta)`` of ``H = Q^{-1} P`` from the inertia of ``Bez(Q, P)``."""
    if not is_symmetric_tf(h):
        raise ValueError("transfer function is not symmetric")
    ir = inertia(bezoutian(h.P, h.Q).data)
    return ir.positive - ir.negative, ir.positive + ir.negative


# -- real roots by Sturm sequences --------------------------------------------

def _sturm_chain(p: Poly) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = [v for v in (q(x) for q in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def real_roots(p: Poly, tol: float = 1e-12) -> list:
    """Distinct real roots, isolated by Sturm counts and refined by bisection."""
    if p.degree <= 0:
        return []
    q = p // poly_gcd(p, p.derivative())
    if q.coeff(0) == 0:
        return sorted([0.0] + real_roots(q // Poly((0, 1)), tol))
    bound = 1 + max(abs(c / q.lc) for c in q.coeffs[:-1])
    chain = _sturm_chain(q)
    roots = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if count == 1:
            roots.append(_bisect(q, lo, hi, tol))
            continue
        mid = (lo + hi) / 2
        if q(mid) == 0:
            rest = q // Poly((-mid, 1))
            return sorted([float(mid)] + real_roots(rest, tol))
        stack.extend([(lo, mid), (mid, hi)])
    return sorted(roots)


def _bisect(q: Poly, lo: Fraction, hi: Fraction, tol: float) -> float:
    flo = q(lo)
    if q(hi) == 0:
        return float(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = q(mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return float((lo + hi) / 2)


# -- floating-point sweep oracle -------------------------------------------------

def _eigs(h: LeftMFD, x: float) -> np.ndarray:
    try:
        H = h.evaluate(x)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"H is numerically singular at {x!r}; try a larger epsilon") from exc
    return np.linalg.eigvalsh((H + H.T) / 2)


def _divergent_positive(h: LeftMFD, x0: float, side: float, eps: float, samples: int) -> int:
    levels = [_eigs(h, x0 + side * eps * 10.0 ** (-t)) for t in range(samples)]
    first, last = levels[0], levels[-1]
    count = 0
    for a, b in zip(first, last):
        if abs(b) > 3.0 * abs(a) and abs(b) > 1.0 and b > 0:
            count += 1
    return count


def cauchy_sweep(h: LeftMFD, epsilon: float | None = None, samples: int = 2) -> int:
    """Signed count of eigenvalue jumps through infinity over the projective line.

    Improper ``h`` is first moved to a proper one by a Moebius map so that the
    wrap through infinity becomes a finite crossing.  At each real pole the
    eigenvalues diverging to ``+inf`` are counted on either side; their
    difference is the number of ``-inf -> +inf`` jumps minus ``+inf -> -inf``
    jumps.  ``epsilon`` defaults to ``1e-6`` of the minimal pole gap.
    """
    if not is_symmetric_tf(h):
        raise ValueError("extended Cauchy index is defined for symmetric H only")
    if samples < 2:
        raise ValueError("need at least two sample scales")
    hp = properize(h)
    dec = coprime_decompose(hp.P, hp.Q)
    poles = real_roots(det(dec.Qtilde))
    gaps = [b - a for a, b in zip(poles, poles[1:])]
    gap = min(gaps) if gaps else 1.0
    eps = 1e-6 * gap if epsilon is None else epsilon
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if eps >= gap / 2:
        raise ValueError("epsilon collides with the pole spacing; choose a smaller epsilon")
    total = 0
    for lam in poles:
        total += (_divergent_positive(hp, lam, +1.0, eps, samples)
                  - _divergent_positive(hp, lam, -1.0, eps, samples))
    return total
