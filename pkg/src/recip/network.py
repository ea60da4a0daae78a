"""RLCT networks in hybrid form: realization extraction and storage bounds.

The resistor-transformer part is a constant hybrid matrix with blocks
``M11 .. M23`` relating the port group ``e`` and the storage groups.  Group
``1`` holds the independent storage elements (``sigma1 = -1`` for inductor
currents, ``+1`` for capacitor voltages, inductors first); group ``2`` holds
storage elements whose state is a combination of group-``1`` states.
``lambda1`` and ``lambda2`` are the element values.

Everything is exact except the square root of ``Omega``, which is computed
blockwise by a symmetric eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .bezoutian import bezoutian
from .inertia import inertia
from .polymat import PolyMatrix, coprime_decompose, normalrank
from .realization import SignatureRealization, StateSpace, is_signature_symmetric

TOL = 1e-9


class NetworkError(ValueError):
    """Invalid network data; ``relation`` names the violated condition."""

    def __init__(self, relation: str, detail: str = ""):
        super().__init__(f"{relation}: {detail}" if detail else relation)
        self.relation = relation


def _mat(M, r: int, c: int, name: str) -> list:
    if r == 0:
        return []
    if c == 0 and (not M or all(len(row) == 0 for row in M)):
        return [[] for _ in range(r)]
    if len(M) != r or any(len(row) != c for row in M):
        raise NetworkError(f"{name} shape", f"expected {r}x{c}")
    return [[Fraction(x) for x in row] for row in M]


@dataclass(frozen=True)
class NetworkData:
    M11: list
    M12: list
    M21: list
    M22: list
    M23: list
    sigmaE: tuple
    sigma1: tuple
    sigma2: tuple
    lambda1: tuple
    lambda2: tuple

    def __post_init__(self):
        for name in ("sigmaE", "sigma1", "sigma2"):
            sig = tuple(int(x) for x in getattr(self, name))
            if any(x not in (1, -1) for x in sig):
                raise NetworkError(f"{name} entries", "must be +-1")
            object.__setattr__(self, name, sig)
        for name in ("lambda1", "lambda2"):
            object.__setattr__(self, name, tuple(Fraction(x) for x in getattr(self, name)))
        ne, n1, n2 = self.ne, self.n1, self.n2
        for name, r, c in (("M11", ne, ne), ("M12", ne, n1), ("M21", n1, ne),
                           ("M22", n1, n1), ("M23", n1, n2)):
            object.__setattr__(self, name, _mat(getattr(self, name), r, c, name))
        if len(self.lambda1) != n1 or len(self.lambda2) != n2:
            raise NetworkError("lambda sizes", "lambda1/lambda2 must match sigma1/sigma2")

    @property
    def ne(self) -> int:
        return len(self.sigmaE)

    @property
    def n1(self) -> int:
        return len(self.sigma1)

    @property
    def n2(self) -> int:
        return len(self.sigma2)

    def element_counts(self) -> tuple[int, int]:
        """``(capacitors, inductors)`` over both storage groups."""
        sig = self.sigma1 + self.sigma2
        return sum(1 for x in sig if x == 1), sum(1 for x in sig if x == -1)

    def scaled(self, c) -> "NetworkData":
        """Same network with every element value multiplied by ``c > 0``."""
        c = Fraction(c)
        return NetworkData(self.M11, self.M12, self.M21, self.M22, self.M23,
                           self.sigmaE, self.sigma1, self.sigma2,
                           tuple(c * x for x in self.lambda1), tuple(c * x for x in self.lambda2))


def _rscale(M, sig):
    """``M diag(sig)``."""
    return [[x * s for x, s in zip(row, sig)] for row in M]


def _lscale(sig, M):
    """``diag(sig) M``."""
    return [[s * x for x in row] for s, row in zip(sig, M)]


def validate_network(data: NetworkData) -> NetworkData:
    sE, s1, s2 = data.sigmaE, data.sigma1, data.sigma2
    if not la.is_symmetric(_rscale(data.M11, sE)):
        raise NetworkError("M11*sigmaE symmetric")
    if data.n1 and not la.is_symmetric(_rscale(data.M22, s1)):
        raise NetworkError("M22*sigma1 symmetric")
    lhs = _rscale(data.M21, sE)
    rhs = [[-x for x in row] for row in _lscale(s1, la.transpose(data.M12, data.n1))] if data.n1 else []
    if lhs != rhs:
        raise NetworkError("M21*sigmaE = -sigma1*M12^T")
    if data.n1 and data.n2 and _rscale(data.M23, s2) != _lscale(s1, data.M23):
        raise NetworkError("M23*sigma2 = sigma1*M23")
    if any(x <= 0 for x in data.lambda1 + data.lambda2):
        raise NetworkError("lambda positive", "element values must be > 0")
    if list(s1) != sorted(s1):
        raise NetworkError("sigma1 ordering", "inductor entries (-1) must precede capacitor entries (+1)")
    return data


def omega(data: NetworkData):
    """``(Omega, Omega^{1/2})``: exact ``Omega`` and its float square root."""
    n1 = data.n1
    if n1 == 0:
        return [], np.zeros((0, 0))
    s1, s2 = data.sigma1, data.sigma2
    Om = la.diag(data.lambda1)
    if data.n2:
        T = _lscale(s1, _rscale(data.M23, s2))  # sigma1 M23 sigma2
        L2 = la.diag(data.lambda2)
        Om = la.add(Om, la.matmul(T, la.matmul(L2, la.transpose(T))))
    if not la.is_symmetric(_rscale(Om, s1)):
        raise NetworkError("Omega*sigma1 symmetric")
    if inertia(Om).positive != n1:
        raise NetworkError("Omega positive definite")
    groups = [[i for i in range(n1) if s1[i] == sgn] for sgn in (-1, 1)]
    half = np.zeros((n1, n1))
    for idx in groups:
        if not idx:
            continue
        blk = np.array([[float(Om[i][j]) for j in idx] for i in idx])
        w, V = np.linalg.eigh(blk)
        root = (V * np.sqrt(w)) @ V.T
        half[np.ix_(idx, idx)] = (root + root.T) / 2
    return Om, half


def network_tilde(data: NetworkData) -> StateSpace:
    """Exact ``(A~, B~, C~, D~)`` before the balancing similarity."""
    validate_network(data)
    ne, n1 = data.ne, data.n1
    sE, s1 = data.sigmaE, data.sigma1
    D = _rscale(data.M11, sE)
    if n1 == 0:
        return StateSpace([], [], [[] for _ in range(ne)], D)
    Om, _ = omega(data)
    Oinv = la.inverse(Om)
    A = [[-x for x in row] for row in la.matmul(Oinv, _rscale(_lscale(s1, data.M22), s1))]
    B = [[-x for x in row] for row in la.matmul(Oinv, _rscale(_lscale(s1, data.M21), sE))]
    C = _rscale(data.M12, s1)
    return StateSpace(A, B, C, D)


def network_realization(data: NetworkData) -> SignatureRealization:
    """Signature-symmetric realization with ``Sigma = sigma1`` (float entries)."""
    tilde = network_tilde(data)
    n1 = data.n1
    D = [[float(x) for x in row] for row in tilde.D]
    if n1 == 0:
        sr = SignatureRealization(StateSpace([], [], [[] for _ in range(data.ne)], D), ())
    else:
        _, half = omega(data)
        inv_half = np.linalg.inv(half)
        At = np.array([[float(x) for x in row] for row in tilde.A])
        Bt = np.array([[float(x) for x in row] for row in tilde.B]).reshape(n1, data.ne)
        Ct = np.array([[float(x) for x in row] for row in tilde.C]).reshape(data.ne, n1)
        A = half @ At @ inv_half
        B = half @ Bt
        C = Ct @ inv_half
        sr = SignatureRealization(StateSpace(A.tolist(), B.tolist(), C.tolist(), D), data.sigma1)
    if not is_signature_symmetric(sr, TOL):
        raise NetworkError("signature symmetry", "extracted realization violates A S = S A^T, B = S C^T")
    return sr


@dataclass(frozen=True)
class BoundsReport:
    pi_bez: int
    nu_bez: int
    zeta: int
    min_capacitors: int
    min_inductors: int
    gamma: int
    delta: int
    rlctg_storage_count: int

    def to_json(self) -> dict:
        return {"piBez": self.pi_bez, "nuBez": self.nu_bez, "zeta": self.zeta,
                "minCapacitors": self.min_capacitors, "minInductors": self.min_inductors,
                "gamma": self.gamma, "delta": self.delta,
                "rlctgStorageCount": self.rlctg_storage_count}


def element_bounds(P: PolyMatrix, Q: PolyMatrix) -> BoundsReport:
    """Least capacitor and inductor counts of any RLCT network with behavior ``P i = Q v``."""
    if not (P.is_square() and Q.is_square() and P.shape == Q.shape):
        raise ValueError("invalid behavior form: P and Q must be square of equal size")
    n = P.rows
    if normalrank(P.hstack(-Q)) != n:
        raise ValueError("invalid behavior form: normalrank([P -Q]) < n")
    if Q @ P.T != P @ Q.T:
        raise ValueError("behavior is not reciprocal: Q P^T is not symmetric")
    ib = inertia(bezoutian(P, Q).data)
    z = coprime_decompose(P, Q).zeta
    return BoundsReport(ib.positive, ib.negative, z, ib.positive + z, ib.negative + z,
                        ib.positive - ib.negative, ib.positive + ib.negative,
                        ib.positive + ib.negative + z)
