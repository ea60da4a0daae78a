"""State-space realizations ``dx/dt = Ax + Bu, y = Cx + Du`` with state signatures.

A realization is signature-symmetric for ``Sigma = diag(+-1)`` when
``A Sigma = Sigma A^T``, ``B = Sigma C^T`` and ``D = D^T``.  Entries are exact
(``Fraction`` or :class:`~recip.surd.Surd`) unless they come from a
floating-point step, in which case the checks take a tolerance.

Behavior equality between a realization and a pair ``(P^, Q^)`` is decided
algebraically: equal transfer functions, and a hidden-mode polynomial (the
characteristic polynomial of ``A`` on ``X / (reachable + unobservable)``)
equal to ``det F`` up to a constant, where ``F`` is a greatest common left
divisor of ``P^`` and ``Q^``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg as la
from .bezoutian import bezoutian, gamma_delta_bez
from .inertia import Verdict, congruence_diagonalize, inertia
from .polymat import (
    Poly, PolyMatrix, column_compress, coprime_decompose, det, rational_roots, squarefree,
)
from .ratmfd import LeftMFD, hankel, is_proper, is_symmetric_tf, markov, properize
from .surd import Surd, simplify


@dataclass(frozen=True)
class StateSpace:
    A: list
    B: list
    C: list
    D: list

    def __post_init__(self):
        d, n = len(self.A), len(self.D)
        if any(len(r) != d for r in self.A):
            raise ValueError("A must be square")
        if any(len(r) != n for r in self.D):
            raise ValueError("D must be square")
        if len(self.B) != d or any(len(r) != n for r in self.B):
            raise ValueError(f"B must be {d}x{n}")
        if len(self.C) != n or any(len(r) != d for r in self.C):
            raise ValueError(f"C must be {n}x{d}")

    @property
    def d(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.D)

    def is_exact(self) -> bool:
        return all(isinstance(x, (int, Fraction, Surd))
                   for M in (self.A, self.B, self.C, self.D) for row in M for x in row)


@dataclass(frozen=True)
class SignatureRealization:
    ss: StateSpace
    sigma: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(x) for x in self.sigma))
        if len(self.sigma) != self.ss.d or any(x not in (1, -1) for x in self.sigma):
            raise ValueError("sigma must hold one +-1 entry per state")

    @property
    def even(self) -> int:
        return sum(1 for x in self.sigma if x == 1)

    @property
    def odd(self) -> int:
        return sum(1 for x in self.sigma if x == -1)


def _rational(x) -> Fraction:
    x = simplify(x)
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, Fraction):
        raise ArithmeticError(f"expected a rational value, got {x!r}")
    return x


def _simplify_matrix(M) -> list:
    return [[simplify(x) for x in row] for row in M]


def _power_blocks(A, X, count: int, left: bool) -> list:
    """``[X, AX, A^2X, ...]`` (or ``[X, XA, ...]`` with ``left=False``)."""
    out = [X]
    for _ in range(count - 1):
        out.append(_simplify_matrix(la.matmul(A, out[-1]) if left else la.matmul(out[-1], A)))
    return out


# -- transfer functions ------------------------------------------------------

def transfer_function(ss: StateSpace) -> LeftMFD:
    """Exact ``D + C (sI - A)^{-1} B`` as ``(chi I)^{-1} P``."""
    if not ss.is_exact():
        raise TypeError("transfer_function needs exact entries")
    n, d = ss.n, ss.d
    coeffs, mats = la.charpoly_adjugate(ss.A)
    chi = Poly([_rational(c) for c in coeffs])
    grid = [[[Fraction(0)] * (d + 1) for _ in range(n)] for _ in range(n)]
    for k, Mk in enumerate(mats):
        CMB = la.matmul(ss.C, la.matmul(Mk, ss.B), cols=n)
        for i in range(n):
            for j in range(n):
                grid[i][j][d - 1 - k] = _rational(CMB[i][j])
    P = PolyMatrix([[Poly(grid[i][j]) + chi * _rational(ss.D[i][j]) for j in range(n)]
                    for i in range(n)], n, n)
    return LeftMFD(PolyMatrix.scalar(chi, n), P)


def markov_of(ss: StateSpace, count: int) -> list:
    """``[D, CB, CAB, ..., C A^(count-2) B]``."""
    out = [ss.D]
    if ss.d == 0:
        return out + [la.zeros(ss.n, ss.n) for _ in range(count - 1)]
    for AkB in _power_blocks(ss.A, ss.B, count - 1, left=True):
        out.append(_simplify_matrix(la.matmul(ss.C, AkB, cols=ss.n)))
    return out


def transfer_equals(ss: StateSpace, h: LeftMFD) -> bool:
    t = transfer_function(ss)
    chi = t.Q[0, 0]
    return h.Q @ t.P == h.P * chi


def is_signature_symmetric(sr: SignatureRealization, tol: float | None = None) -> bool:
    ss, sig = sr.ss, sr.sigma
    d, n = ss.d, ss.n

    def same(a, b):
        return a == b if tol is None else abs(float(a) - float(b)) <= tol

    return (all(same(ss.A[i][j] * sig[j], sig[i] * ss.A[j][i]) for i in range(d) for j in range(d))
            and all(same(ss.B[i][k], sig[i] * ss.C[k][i]) for i in range(d) for k in range(n))
            and all(same(ss.D[i][j], ss.D[j][i]) for i in range(n) for j in range(n)))


# -- modes ---------------------------------------------------------------------

def _charpoly_exact(A):
    if not all(isinstance(x, (int, Fraction, Surd)) for row in A for x in row):
        return None
    coeffs, _ = la.charpoly_adjugate(A)
    try:
        return Poly([_rational(c) for c in coeffs])
    except ArithmeticError:
        return None


def _pbh_deficiency(A, B, lam) -> int:
    d = len(A)
    M = [[(lam if i == j else 0) - A[i][j] for j in range(d)] + list(B[i]) for i in range(d)]
    return d - la.rank(M)


def _numeric_deficiency(A, B, lam, tol: float) -> int:
    d = len(A)
    Af = np.array([[float(x) for x in row] for row in A], dtype=complex)
    Bf = np.array([[float(x) for x in row] for row in B], dtype=complex).reshape(d, -1)
    M = np.hstack([lam * np.eye(d) - Af, Bf])
    sv = np.linalg.svd(M, compute_uv=False)
    return d - int(np.sum(sv > tol * max(1.0, sv[0] if sv.size else 1.0)))


def _cluster(values, tol=1e-6) -> list:
    out = []
    for v in values:
        if not any(abs(v - u) <= tol * max(1.0, abs(u)) for u in out):
            out.append(v)
    return out


def uncontrollable_modes(A, B, tol: float = 1e-9) -> list:
    """``[(eigenvalue, deficiency)]`` where ``rank [lam I - A, B] < d``.

    Rational eigenvalues are found and tested exactly; the remainder of the
    spectrum is tested numerically by singular values.
    """
    d = len(A)
    if d == 0:
        return []
    chi = _charpoly_exact(A)
    out = []
    if chi is not None:
        rest = squarefree(chi)
        for lam in rational_roots(chi):
            k = _pbh_deficiency(A, B, lam)
            if k:
                out.append((lam, k))
            rest = rest // Poly((-lam, 1))
        numeric = np.roots([float(c) for c in reversed(rest.coeffs)]) if rest.degree > 0 else []
    else:
        numeric = np.linalg.eigvals(np.array([[float(x) for x in row] for row in A]))
    for lam in _cluster(list(numeric)):
        k = _numeric_deficiency(A, B, complex(lam), tol)
        if k:
            lam = lam.real if abs(lam.imag) <= 1e-12 else complex(lam)
            out.append((float(lam) if isinstance(lam, (float, np.floating)) else lam, k))
    return out


def unobservable_modes(A, C, tol: float = 1e-9) -> list:
    return uncontrollable_modes(la.transpose(A, len(A)), la.transpose(C, len(A)), tol)


def _column_basis(M, rows: int) -> list:
    """Columns of ``M`` at its pivot positions (a basis of the column span)."""
    if not M or not M[0]:
        return [[] for _ in range(rows)]
    _, piv = la.rref(M)
    return [[M[i][j] for j in piv] for i in range(rows)]


def reachable_basis(A, B) -> list:
    d = len(A)
    if d == 0:
        return []
    blocks = _power_blocks(A, B, d, left=True)
    K = la.hstack(*blocks, rows=d)
    return _column_basis(K, d)


def unobservable_basis(A, C) -> list:
    d = len(A)
    if d == 0:
        return []
    O = la.vstack(*_power_blocks(A, C, d, left=False))
    return la.nullspace(O, d) if O else la.transpose(la.identity(d))


def hidden_mode_polynomial(ss: StateSpace) -> Poly:
    """Characteristic polynomial of ``A`` on ``X / (reachable + unobservable)``.

    These are the uncontrollable modes visible at the terminals.  Monic.
    """
    d = ss.d
    if d == 0:
        return Poly.const(1)
    V = la.hstack(reachable_basis(ss.A, ss.B), unobservable_basis(ss.A, ss.C), rows=d)
    Vb = _column_basis(V, d)
    k = len(Vb[0]) if Vb and Vb[0] else 0
    if k == d:
        return Poly.const(1)
    T = la.hstack(Vb, la.column_complement(Vb, d), rows=d)
    Abar = _simplify_matrix(la.matmul(la.inverse(T), la.matmul(ss.A, T)))
    block = [row[k:] for row in Abar[k:]]
    chi = _charpoly_exact(block)
    if chi is None:
        raise ArithmeticError("hidden-mode polynomial is not rational")
    return chi


def delta_C_Ainv(ss: StateSpace) -> int:
    """McMillan degree of ``C (sI - A)^{-1}``: the observable dimension."""
    if ss.d == 0:
        return 0
    return la.rank(la.vstack(*_power_blocks(ss.A, ss.C, ss.d, left=False)), ss.d)


def _radicand(x) -> int | None:
    """Squarefree ``m`` with ``x`` a rational multiple of ``sqrt(m)``; None for 0 or mixed sums."""
    x = simplify(x)
    if not isinstance(x, Surd):
        return 1 if x else None
    keys = list(x.terms)
    return keys[0] if len(keys) == 1 else None


def rational_coordinates(ss: StateSpace) -> StateSpace:
    """Similar realization ``(T A T^{-1}, T B, C T^{-1}, D)`` with rational entries.

    ``T`` is diagonal with entries ``sqrt(m_i)``, which covers realizations
    whose states were rescaled by square roots of rationals.
    """
    d = ss.d
    if all(isinstance(simplify(x), (int, Fraction)) for M in (ss.A, ss.B, ss.C, ss.D) for row in M for x in row):
        return ss
    m = [None] * d
    for i in range(d):
        for x in list(ss.B[i]) + [row[i] for row in ss.C]:
            r = _radicand(x)
            if r is not None:
                m[i] = r
                break
    changed = True
    while changed:
        changed = False
        for i in range(d):
            for j in range(d):
                if m[i] is None and m[j] is not None and simplify(ss.A[i][j]):
                    r = _radicand(ss.A[i][j] * Surd.sqrt(m[j]))
                    if r is not None:
                        m[i], changed = r, True
    roots = [Surd.sqrt(k or 1) for k in m]
    try:
        A = [[_rational(ss.A[i][j] * roots[i] / roots[j]) for j in range(d)] for i in range(d)]
        B = [[_rational(x * roots[i]) for x in ss.B[i]] for i in range(d)]
        C = [[_rational(row[j] / roots[j]) for j in range(d)] for row in ss.C]
        D = [[_rational(x) for x in row] for row in ss.D]
    except ArithmeticError as exc:
        raise ArithmeticError("no diagonal square-root similarity makes the realization rational") from exc
    return StateSpace(A, B, C, D)


def eliminate_state(ss: StateSpace) -> LeftMFD:
    """Manifest ``(u, y)`` behavior ``Q^ y = P^ u`` of an exact realization.

    Row-compresses ``[sI - A; -C]`` by a unimodular ``U`` and applies the
    bottom rows of ``U`` to the ``(u, y)`` coefficients.
    """
    ss = rational_coordinates(ss)
    d, n = ss.d, ss.n
    Af = [[_rational(x) for x in row] for row in ss.A]
    Bf = [[_rational(x) for x in row] for row in ss.B]
    Cf = [[_rational(x) for x in row] for row in ss.C]
    Df = [[_rational(x) for x in row] for row in ss.D]
    if d == 0:
        return LeftMFD(PolyMatrix.identity(n), PolyMatrix.constant(Df))
    s = Poly((0, 1))
    pencil = [[(s if i == j else Poly()) - Af[i][j] for j in range(d)] for i in range(d)]
    M = PolyMatrix(pencil + [[-x for x in row] for row in Cf], d + n, d)
    _, W = column_compress(M.T)
    U2 = W.select_cols(range(d, d + n)).T
    coef = ([[-x for x in Bf[i]] + [Fraction(0)] * n for i in range(d)]
            + [[-x for x in Df[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    XY = U2 @ PolyMatrix.constant(coef)
    X = XY.select_cols(range(n))
    Y = XY.select_cols(range(n, 2 * n))
    return LeftMFD(Y, -X)


# -- storage bounds and compression checks -----------------------------------

class BehaviorMismatch(ValueError):
    """The realization does not realize the behavior; ``kind`` names why."""

    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind} mismatch: {detail}")
        self.kind = kind


@dataclass(frozen=True)
class Theorem5Report:
    pi_sigma: int
    nu_sigma: int
    pi_bez: int
    nu_bez: int
    zeta: int
    verdicts: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(v.passed for v in self.verdicts)


def verify_theorem5(sr: SignatureRealization, behavior: LeftMFD, tol: float | None = None) -> Theorem5Report:
    """Storage lower bounds ``pi(Sigma) >= pi(Bez) + zeta``, ``nu(Sigma) >= nu(Bez) + zeta``."""
    if not is_signature_symmetric(sr, tol):
        raise ValueError("realization is not signature-symmetric")
    if not is_proper(behavior):
        raise ValueError("behavior must have a proper transfer function")
    if not is_symmetric_tf(behavior):
        raise ValueError("behavior is not reciprocal (asymmetric transfer function)")
    if not transfer_equals(sr.ss, behavior):
        raise BehaviorMismatch("transfer", "D + C(sI - A)^{-1}B differs from Q^{-1}P")
    dec = coprime_decompose(behavior.P, behavior.Q)
    detF = det(dec.F).monic()
    hidden = hidden_mode_polynomial(sr.ss).monic()
    if hidden != detF:
        raise BehaviorMismatch("mode", f"hidden modes {hidden} but det F = {detF}")
    ib = inertia(bezoutian(behavior.P, behavior.Q).data)
    z = dec.zeta
    need_pi, need_nu = ib.positive + z, ib.negative + z
    return Theorem5Report(sr.even, sr.odd, ib.positive, ib.negative, z, [
        Verdict("Thm5-pi", sr.even >= need_pi, sr.even - need_pi),
        Verdict("Thm5-nu", sr.odd >= need_nu, sr.odd - need_nu),
    ])


@dataclass(frozen=True)
class Theorem9Report:
    gamma_H: int
    delta_H: int
    gamma_SHS: int
    delta_SHS: int
    delta_SH: int
    verdicts: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _block_repeat(S, times: int, cols: int) -> list:
    """``diag(S, ..., S)`` for a possibly non-square ``S``."""
    m = len(S)
    out = la.zeros(m * times, cols * times)
    for b in range(times):
        for i in range(m):
            for j in range(cols):
                out[b * m + i][b * cols + j] = S[i][j]
    return out


def check_theorem9(h: LeftMFD, S, cols: int | None = None) -> Theorem9Report:
    """Compression inequalities for ``S^T H S``.

    ``gamma(H) + delta(H) >= gamma(S^T H S) - delta(S^T H S) + 2 delta(S^T H)`` and
    ``gamma(H) - delta(H) <= gamma(S^T H S) + delta(S^T H S) - 2 delta(S^T H)``.
    The compressed quantities come from one Hankel matrix of the proper form.
    """
    if not is_symmetric_tf(h):
        raise ValueError("H is not symmetric")
    if len(S) != h.n:
        raise ValueError("S must have as many rows as H")
    k = len(S[0]) if S and S[0] else (cols or 0)
    S = [[Fraction(x) for x in row] for row in S]
    g, dl = gamma_delta_bez(h)
    hp = properize(h)
    D = det(coprime_decompose(hp.P, hp.Q).Qtilde).degree
    if D == 0 or k == 0:
        gs = ds = dsh = 0
    else:
        Hk = hankel(markov(hp, 2 * D), D).data
        Sh = _block_repeat(S, D, k)
        ShT = la.transpose(Sh)
        left = la.matmul(ShT, Hk)
        ir = inertia(la.matmul(left, Sh))
        gs, ds, dsh = ir.signature, ir.rank, la.rank(left)
    r5, r6 = gs - ds + 2 * dsh, gs + ds - 2 * dsh
    return Theorem9Report(g, dl, gs, ds, dsh, [
        Verdict("Thm9-eq5", g + dl >= r5, g + dl - r5),
        Verdict("Thm9-eq6", g - dl <= r6, r6 - (g - dl)),
    ])


# -- construction ----------------------------------------------------------------

class UnsupportedBehavior(ValueError):
    pass


def _controllable_part(ht: LeftMFD):
    n = ht.n
    delta = det(ht.Q).degree
    series = markov(ht, max(2 * delta, 1))
    Dm = series.Wminus1
    if delta == 0:
        return [], [], [[] for _ in range(n)], Dm, []
    Hk = hankel(series, delta).data
    K = hankel(series, delta, shift=1).data
    _, J = la.rref(Hk)
    if len(J) != delta:
        raise ArithmeticError("Hankel rank differs from deg det of the coprime denominator")
    T = la.inverse(la.submatrix(Hk, J, J))
    A = la.matmul(T, la.submatrix(K, J, J))
    B = la.matmul(T, la.submatrix(Hk, J, range(n)))
    C = la.submatrix(Hk, range(n), J)
    # T = R^T diag(e) R; new coordinates x' = G x with G^{-1} = R^T |e|^{1/2}
    wit = congruence_diagonalize(T)
    R = wit.transform
    Rinv = la.inverse(R)
    roots = [Surd.sqrt(abs(e)) for e in wit.scales]
    G = [[simplify(Rinv[j][i] / roots[i]) for j in range(delta)] for i in range(delta)]
    Ginv = [[simplify(R[j][i] * roots[j]) for j in range(delta)] for i in range(delta)]
    A2 = _simplify_matrix(la.matmul(G, la.matmul(A, Ginv)))
    B2 = _simplify_matrix(la.matmul(G, B))
    C2 = _simplify_matrix(la.matmul(C, Ginv))
    return A2, B2, C2, Dm, wit.canonical


def minimal_signature_realization(behavior: LeftMFD) -> SignatureRealization:
    """Signature-symmetric realization with ``rank Bez + 2 zeta`` states.

    The controllable part is a Hankel shift realization of the coprime factor
    in coordinates that diagonalize the inverse leading Hankel block.  Each
    uncontrollable mode ``lam`` (a simple rational root of ``det F``) adds the
    block ``A = lam I_2``, ``Sigma = diag(1, -1)``, ``C = [w w]``,
    ``B = [w^T; -w^T]`` with ``Q^(lam) w = 0``: it cancels in the transfer
    function and leaves one observable autonomous mode.
    """
    if not is_symmetric_tf(behavior):
        raise ValueError("behavior is not reciprocal (asymmetric transfer function)")
    if not is_proper(behavior):
        raise ValueError("behavior must have a proper transfer function")
    n = behavior.n
    dec = coprime_decompose(behavior.P, behavior.Q)
    A, B, C, D, sigma = _controllable_part(LeftMFD(dec.Qtilde, dec.Ptilde))
    blocks = []
    detF = det(dec.F)
    if detF.degree > 0:
        if squarefree(detF).degree != detF.degree:
            raise UnsupportedBehavior("repeated roots of det F are not supported")
        lams = rational_roots(detF)
        if len(lams) != detF.degree:
            raise UnsupportedBehavior("det F has complex or irrational roots; not supported")
        detQt = det(dec.Qtilde)
        for lam in lams:
            if detQt(lam) == 0:
                raise UnsupportedBehavior(f"uncontrollable mode {lam} is also a pole")
            ker = la.nullspace(behavior.Q.eval(lam), n)
            if not ker or len(ker[0]) != 1:
                raise UnsupportedBehavior(f"no unique output direction at {lam}")
            blocks.append((lam, [row[0] for row in ker]))
    for lam, w in blocks:
        A = la.block_diag(A, [[lam, Fraction(0)], [Fraction(0), lam]]) if A else [[lam, Fraction(0)], [Fraction(0), lam]]
        B = B + [list(w), [-x for x in w]]
        C = [list(row) + [w[i], w[i]] for i, row in enumerate(C)]
        sigma = list(sigma) + [1, -1]
    return SignatureRealization(StateSpace(A, B, C, D), tuple(sigma))


def pad_decoupled(sr: SignatureRealization, A_extra, sigma_extra) -> SignatureRealization:
    """Append states with dynamics ``A_extra`` and no coupling to the ports."""
    ss = sr.ss
    k = len(A_extra)
    A = la.block_diag(ss.A, A_extra) if ss.A else [list(r) for r in A_extra]
    B = [list(r) for r in ss.B] + [[Fraction(0)] * ss.n for _ in range(k)]
    C = [list(row) + [Fraction(0)] * k for row in ss.C]
    return SignatureRealization(StateSpace(A, B, C, ss.D), tuple(sr.sigma) + tuple(sigma_extra))
