"""Exact inertia by symmetric congruence and the generalized Sylvester law.

For symmetric ``P`` (m x m) and any ``S`` (m x n)::

    pi(P) - nullity(S^T) <= pi(S^T P S) <= pi(P)
    nu(P) - nullity(S^T) <= nu(S^T P S) <= nu(P)

:func:`sylvester_bounds_check` evaluates both chains directly.
:func:`sylvester_witness` reaches the same bounds constructively, by
reduction to a signature matrix and a full-column-rank ``S`` and then the
explicit block diagonalization ``(SZ)^T P (SZ) = diag(X11, -G^T G)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .surd import Surd, simplify


@dataclass(frozen=True)
class InertiaResult:
    positive: int
    negative: int
    zero: int

    @property
    def rank(self) -> int:
        return self.positive + self.negative

    @property
    def order(self) -> int:
        return self.positive + self.negative + self.zero

    @property
    def signature(self) -> int:
        return self.positive - self.negative


@dataclass(frozen=True)
class CongruenceWitness:
    """``transform^T @ diag(scales) @ transform == M``.

    ``scales`` holds nonzero rationals sorted positives first, then negatives,
    then zeros, so its sign pattern is the canonical ``diag(I, -I, 0)``.
    A rational witness with exactly ``+-1`` entries does not exist in general
    (``M = [2]``); :meth:`canonical_transform` absorbs the scales with exact
    square roots instead.
    """

    transform: list
    scales: list
    positive: int
    negative: int
    zero: int

    @property
    def canonical(self) -> list:
        return [1] * self.positive + [-1] * self.negative + [0] * self.zero

    def inertia(self) -> InertiaResult:
        return InertiaResult(self.positive, self.negative, self.zero)

    def canonical_transform(self) -> list:
        """``R`` with ``R^T diag(canonical) R == M`` (entries may be surds)."""
        out = []
        for d, row in zip(self.scales, self.transform):
            if d == 0:
                out.append(list(row))
            else:
                r = Surd.sqrt(abs(d))
                out.append([simplify(r * x) for x in row])
        return out

    def reconstruct(self) -> list:
        R = self.transform
        DR = [[d * x for x in row] for d, row in zip(self.scales, R)]
        return la.matmul(la.transpose(R), DR)


def _check_symmetric(M):
    if not la.is_symmetric(M):
        raise ValueError("matrix is not symmetric")


def congruence_diagonalize(M) -> CongruenceWitness:
    """Symmetric elimination with 1x1 pivots, and 2x2 pivots on zero diagonals."""
    _check_symmetric(M)
    n = len(M)
    A = [list(row) for row in M]
    E = la.identity(n)  # invariant: E @ M @ E^T == A

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        E[i], E[j] = E[j], E[i]

    def axpy(dst, src, f):
        # row_dst -= f*row_src, then the same on columns
        A[dst] = [a - f * b for a, b in zip(A[dst], A[src])]
        for row in A:
            row[dst] = row[dst] - f * row[src]
        E[dst] = [a - f * b for a, b in zip(E[dst], E[src])]

    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is not None:
            swap(k, piv)
            p = A[k][k]
            for j in range(k + 1, n):
                if A[j][k] != 0:
                    axpy(j, k, A[j][k] / p)
            k += 1
            continue
        pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
        if pair is None:
            break
        swap(k, pair[0])
        swap(k + 1, pair[1] if pair[1] != k else pair[0])
        b = A[k][k + 1]
        for j in range(k + 2, n):
            fk = A[j][k + 1] / b
            fk1 = A[j][k] / b
            if fk != 0:
                axpy(j, k, fk)
            if fk1 != 0:
                axpy(j, k + 1, fk1)
        # [[0,b],[b,0]] -> diag(2b, -2b) via rows (r_k + r_k1, r_k1 - r_k)
        ek, ek1 = E[k], E[k + 1]
        E[k] = [a + c for a, c in zip(ek, ek1)]
        E[k + 1] = [c - a for a, c in zip(ek, ek1)]
        A[k][k], A[k + 1][k + 1] = 2 * b, -2 * b
        A[k][k + 1] = A[k + 1][k] = Fraction(0)
        k += 2
    d = [A[i][i] for i in range(n)]
    R = la.transpose(la.inverse(E)) if n else []
    order = ([i for i in range(n) if d[i] > 0] + [i for i in range(n) if d[i] < 0]
             + [i for i in range(n) if d[i] == 0])
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return CongruenceWitness([R[i] for i in order], [d[i] for i in order], pos, neg, n - pos - neg)


def inertia(M) -> InertiaResult:
    """Exact ``(pi, nu, zero)`` counts of a symmetric rational matrix."""
    _check_symmetric(M)
    n = len(M)
    A = [list(row) for row in M]
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is not None:
            A[k], A[piv] = A[piv], A[k]
            for row in A:
                row[k], row[piv] = row[piv], row[k]
            p = A[k][k]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rk = A[k]
            for j in range(k + 1, n):
                f = A[j][k]
                if f != 0:
                    f = f / p
                    A[j] = [a - f * b if b != 0 else a for a, b in zip(A[j], rk)]
            k += 1
            continue
        pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        # rows/cols i += j makes the (i, i) entry 2*A[i][j] != 0
        A[i] = [a + b for a, b in zip(A[i], A[j])]
        for row in A:
            row[i] = row[i] + row[j]
    return InertiaResult(pos, neg, n - pos - neg)


def project_inertia(P, S) -> InertiaResult:
    """Inertia of ``S^T P S``."""
    _check_symmetric(P)
    if len(S) != len(P):
        raise ValueError("dimension mismatch: rows of S must equal order of P")
    return inertia(la.matmul(la.transpose(S), la.matmul(P, S)))


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    slack: int


@dataclass(frozen=True)
class SylvesterReport:
    pi_P: int
    nu_P: int
    nullity_St: int
    projected: InertiaResult
    verdicts: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _bound_verdicts(pi_P, nu_P, nul, pi_S, nu_S):
    return [
        Verdict("Lem10-pi-lower", pi_P - nul <= pi_S, pi_S - (pi_P - nul)),
        Verdict("Lem10-pi-upper", pi_S <= pi_P, pi_P - pi_S),
        Verdict("Lem10-nu-lower", nu_P - nul <= nu_S, nu_S - (nu_P - nul)),
        Verdict("Lem10-nu-upper", nu_S <= nu_P, nu_P - nu_S),
    ]


def sylvester_bounds_check(P, S, cols=None) -> SylvesterReport:
    """Evaluate both double inequalities of the generalized Sylvester law."""
    _check_symmetric(P)
    m = len(P)
    if len(S) != m:
        raise ValueError("dimension mismatch: rows of S must equal order of P")
    n = len(S[0]) if S else (cols or 0)
    ip = inertia(P)
    nullity_st = m - la.rank(S, n)
    proj = inertia(la.matmul(la.transpose(S, n), la.matmul(P, S), cols=n)) if n else InertiaResult(0, 0, 0)
    return SylvesterReport(ip.positive, ip.negative, nullity_st, proj,
                           _bound_verdicts(ip.positive, ip.negative, nullity_st,
                                           proj.positive, proj.negative))


# -- constructive path ------------------------------------------------------

@dataclass
class WitnessStep:
    """Block diagonalization of ``S^T diag(I_n1, -I_n2) S`` for full-column-rank S."""

    Z: list
    X11: list
    gram: list  # (S2 Y2)^T (S2 Y2), positive definite
    rank_S1: int


def _signature_case(S, n1, n2) -> WitnessStep:
    """Signature ``P = diag(I_n1, -I_n2)`` and ``S`` of full column rank."""
    n = len(S[0])
    S1, S2 = S[:n1], S[n1:]
    Y2 = la.nullspace(S1, n) if n1 else la.identity(n)
    k = len(Y2[0]) if Y2 and Y2[0] else 0
    Y1 = la.column_complement(Y2, n)
    r = n - k
    if k:
        G = la.matmul(S2, Y2, cols=k)
        gram = la.matmul(la.transpose(G, k), G)
        Gplus = la.matmul(la.inverse(gram), la.transpose(G, k))
        if r:
            lower = la.scale(-1, la.matmul(Gplus, la.matmul(S2, Y1, cols=r), cols=r))
        else:
            lower = [[] for _ in range(k)]
    else:
        gram, lower = [], []
    T = la.vstack(la.hstack(la.identity(r), la.zeros(r, k), rows=r),
                  la.hstack(lower, la.identity(k), rows=k)) if n else []
    Y = la.hstack(Y1, Y2, rows=n)
    Z = la.matmul(Y, T)
    SZ = la.matmul(S, Z)
    Pz = la.matmul(la.transpose(SZ, n), [row if i < n1 else [-x for x in row] for i, row in enumerate(SZ)], cols=n)
    off = [Pz[i][j] for i in range(r) for j in range(r, n)]
    if any(x != 0 for x in off):
        raise AssertionError("congruence failed to decouple the null space of S1")
    X11 = [row[:r] for row in Pz[:r]]
    corner = [[-x for x in row[r:]] for row in Pz[r:]]
    if corner != gram:
        raise AssertionError("lower block is not -(S2 Y2)^T (S2 Y2)")
    return WitnessStep(Z, X11, gram, la.rank(S1, n) if n1 else 0)


@dataclass(frozen=True)
class SylvesterWitness:
    """Bounds certified by the constructive path, one step per sign class."""

    pi_upper: int   # rank(S1)   >= pi(S^T P S)
    nu_lower: int   # #col(G)    <= nu(S^T P S)
    nu_upper: int
    pi_lower: int
    case: str


def sylvester_witness(P, S, cols=None) -> SylvesterWitness:
    """Certify the generalized Sylvester bounds via the three-case reduction.

    General ``P`` is reduced to a signature matrix using an exact congruence
    (with surd entries); the column null space of ``S`` is split off so the
    remaining factor has full column rank; then the signature case produces
    an explicit block-diagonal congruence whose block sizes give the bounds.
    """
    _check_symmetric(P)
    m = len(P)
    n = len(S[0]) if S else (cols or 0)
    wit = congruence_diagonalize(P)
    case = "nonsingular" if wit.zero == 0 else "general"
    if all(P[i][j] == (1 if i == j and i < wit.positive else -1 if i == j else 0)
           for i in range(m) for j in range(m)):
        case = "signature"
    Rc = wit.canonical_transform()
    r1 = wit.positive + wit.negative
    S_eff = la.matmul(Rc[:r1], S, cols=n) if r1 and n else [[Fraction(0)] * n for _ in range(r1)]
    # split off the null space of S_eff; what is left has full column rank
    X2 = la.nullspace(S_eff, n) if n else []
    k2 = len(X2[0]) if X2 and X2[0] else 0
    X1 = la.column_complement(X2, n) if n else []
    c = n - k2
    if c == 0:
        return SylvesterWitness(0, 0, 0, 0, case)
    SX1 = la.matmul(S_eff, X1, cols=c)
    n1, n2 = wit.positive, wit.negative
    pos = _signature_case(SX1, n1, n2)
    flipped = [row for row in SX1[n1:]] + [row for row in SX1[:n1]]
    neg = _signature_case(flipped, n2, n1)
    return SylvesterWitness(
        pi_upper=pos.rank_S1,
        nu_lower=len(pos.gram),
        nu_upper=neg.rank_S1,
        pi_lower=len(neg.gram),
        case=case,
    )


# (P, S, bound) triples where the named bound of the generalized Sylvester
# law is attained with equality
BOUNDARY_EXAMPLES = (
    ([[1, 0], [0, 1]], [[1], [0]], "Lem10-pi-lower"),
    ([[1, 0], [0, 1]], [[1, 0], [0, 1]], "Lem10-pi-upper"),
    ([[-1, 0], [0, -1]], [[1], [0]], "Lem10-nu-lower"),
    ([[1, 0], [0, -1]], [[1, 0], [0, 1]], "Lem10-nu-upper"),
)
