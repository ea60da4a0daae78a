"""Exact univariate polynomials over Q and matrices of them.

Besides the ring arithmetic this module carries the structural tools used
everywhere else: determinants, maximal-minor degrees, normal rank, and the
greatest-common-left-divisor extraction ``P = F P~, Q = F Q~`` whose
``deg det F`` counts the uncontrollable modes of ``P(d/dt) i = Q(d/dt) v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

NEG_INF = float("-inf")


class Poly:
    """Polynomial with rational coefficients stored in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [x if type(x) is Fraction else Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        out = cls.const(1)
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    @property
    def degree(self):
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        return eval_poly(self, x)

    def monic(self) -> "Poly":
        return self * (1 / self.lc) if self.coeffs else self

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


def eval_poly(p: Poly, x):
    """Horner evaluation; ``x`` may be rational, float or complex."""
    exact = isinstance(x, (int, Fraction))
    acc = Fraction(0) if exact else 0.0 * x
    for c in reversed(p.coeffs):
        acc = acc * x + (c if exact else float(c))
    return acc


def poly_arith(a: Poly, b: Poly, kind: str) -> Poly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class PolyMatrix:
    """Immutable ``rows x cols`` matrix of :class:`Poly`."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        grid = tuple(tuple(e if isinstance(e, Poly) else Poly.const(e) for e in row) for row in entries)
        self.rows = len(grid) if rows is None else rows
        self.cols = (len(grid[0]) if grid else 0) if cols is None else cols
        if len(grid) != self.rows or any(len(r) != self.cols for r in grid):
            raise ValueError("ragged polynomial matrix")
        self.entries = grid

    @classmethod
    def zeros(cls, r: int, c: int) -> "PolyMatrix":
        return cls([[Poly()] * c for _ in range(r)], r, c)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[Poly.const(1) if i == j else Poly() for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def constant(cls, M, cols=None) -> "PolyMatrix":
        r = len(M)
        c = len(M[0]) if M else (cols or 0)
        return cls([[Poly.const(x) for x in row] for row in M], r, c)

    @classmethod
    def from_coeffs(cls, grid) -> "PolyMatrix":
        """Build from a grid of ascending coefficient lists."""
        return cls([[Poly(c) for c in row] for row in grid])

    @classmethod
    def scalar(cls, p: Poly, n: int) -> "PolyMatrix":
        return cls([[p if i == j else Poly() for j in range(n)] for i in range(n)], n, n)

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        _check_same(self, other)
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                          self.rows, self.cols)

    def __sub__(self, other):
        _check_same(self, other)
        return PolyMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                          self.rows, self.cols)

    def __neg__(self):
        return PolyMatrix([[-a for a in row] for row in self.entries], self.rows, self.cols)

    def __mul__(self, c):
        """Entrywise scaling by a scalar or a scalar polynomial."""
        return PolyMatrix([[a * c for a in row] for row in self.entries], self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Poly()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.coeffs:
                        b = other.entries[k][j]
                        if b.coeffs:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.rows, other.cols)

    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                          self.cols, self.rows)

    def max_degree(self):
        return max((e.degree for row in self.entries for e in row), default=NEG_INF)

    def coefficient(self, k: int) -> list:
        """Constant matrix multiplying ``s**k``."""
        return [[e.coeff(k) for e in row] for row in self.entries]

    def eval(self, x) -> list:
        return [[eval_poly(e, x) for e in row] for row in self.entries]

    def select_cols(self, cols) -> "PolyMatrix":
        return PolyMatrix([[row[j] for j in cols] for row in self.entries], self.rows, len(cols))

    def select_rows(self, rows) -> "PolyMatrix":
        return PolyMatrix([self.entries[i] for i in rows], len(rows), self.cols)

    def hstack(self, other) -> "PolyMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return PolyMatrix([a + b for a, b in zip(self.entries, other.entries)], self.rows,
                          self.cols + other.cols)

    def vstack(self, other) -> "PolyMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return PolyMatrix(self.entries + other.entries, self.rows + other.rows, self.cols)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_constant(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def to_coeffs(self) -> list:
        return [[list(e.coeffs) for e in row] for row in self.entries]

    def __repr__(self):
        return f"PolyMatrix({[[str(e) for e in row] for row in self.entries]})"


def _check_same(a: PolyMatrix, b: PolyMatrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def det(M: PolyMatrix) -> Poly:
    """Fraction-free (Bareiss) determinant over Q[s]."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Poly.const(1)
    A = [list(row) for row in M.entries]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return Poly()
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pk - A[i][k] * A[k][j]).exact_div(prev)
        prev = pk
    return A[n - 1][n - 1] * sign


def normalrank(R: PolyMatrix) -> int:
    """Rank over the field of rational functions (fraction-free elimination)."""
    A = [list(row) for row in R.entries]
    m, n = R.rows, R.cols
    prev = Poly.const(1)
    rk = 0
    cols = list(range(n))
    for k in range(min(m, n)):
        found = None
        for jj in range(k, n):
            i = next((i for i in range(k, m) if not A[i][jj].is_zero()), None)
            if i is not None:
                found = (i, jj)
                break
        if found is None:
            break
        i, jj = found
        A[k], A[i] = A[i], A[k]
        for row in A:
            row[k], row[jj] = row[jj], row[k]
        cols[k], cols[jj] = cols[jj], cols[k]
        pk = A[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pk - A[i][k] * A[k][j]).exact_div(prev)
            A[i][k] = Poly()
        prev = pk
        rk += 1
    return rk


def delta_max_minor(R: PolyMatrix) -> int:
    """Maximal degree over all ``m x m`` minors of a full-row-rank ``R``."""
    m = R.rows
    if m > R.cols:
        raise ValueError("more rows than columns: not of full row rank")
    if m == 0:
        return 0
    best = NEG_INF
    for cols in combinations(range(R.cols), m):
        d = det(R.select_cols(cols)).degree
        if d > best:
            best = d
    if best == NEG_INF:
        raise ValueError("degenerate input: matrix is not of full row rank")
    return best


def is_unimodular(M: PolyMatrix) -> bool:
    d = det(M)
    return not d.is_zero() and d.is_constant()


@dataclass(frozen=True)
class CoprimeDecomposition:
    """``P = F Ptilde``, ``Q = F Qtilde`` with ``[[Ptilde, -Qtilde], [U, V]]`` unimodular."""

    F: PolyMatrix
    Ptilde: PolyMatrix
    Qtilde: PolyMatrix
    U: PolyMatrix
    V: PolyMatrix
    zeta: int

    def completion(self) -> PolyMatrix:
        return self.Ptilde.hstack(-self.Qtilde).vstack(self.U.hstack(self.V))


def _col_axpy(M, dst, src, q):
    for row in M:
        if not row[src].is_zero():
            row[dst] = row[dst] - q * row[src]


def _hermite(R: PolyMatrix):
    n, m = R.rows, R.cols
    A = [list(row) for row in R.entries]
    W = [list(row) for row in PolyMatrix.identity(m).entries]
    Winv = [list(row) for row in PolyMatrix.identity(m).entries]
    for i in range(n):
        while True:
            nz = [j for j in range(i, m) if not A[i][j].is_zero()]
            if not nz:
                raise ValueError("normal rank deficiency: rows are dependent over R(s)")
            p = min(nz, key=lambda j: (A[i][j].degree, j))
            if len(nz) == 1:
                break
            for j in nz:
                if j == p:
                    continue
                q = A[i][j] // A[i][p]
                _col_axpy(A, j, p, q)
                _col_axpy(W, j, p, q)
                Winv[p] = [a + q * b for a, b in zip(Winv[p], Winv[j])]
        if p != i:
            for M in (A, W):
                for row in M:
                    row[i], row[p] = row[p], row[i]
            Winv[i], Winv[p] = Winv[p], Winv[i]
        c = A[i][i].lc
        if c != 1:
            for M in (A, W):
                for row in M:
                    row[i] = row[i] * (1 / c)
            Winv[i] = [x * c for x in Winv[i]]
        for k in range(i):
            q = A[i][k] // A[i][i]
            if not q.is_zero():
                _col_axpy(A, k, i, q)
                _col_axpy(W, k, i, q)
                Winv[i] = [a + q * b for a, b in zip(Winv[i], Winv[k])]
    L = PolyMatrix([row[:n] for row in A], n, n)
    return L, PolyMatrix(W, m, m), PolyMatrix(Winv, m, m)


def column_hermite(R: PolyMatrix):
    """Column-reduce an ``n x m`` full-row-rank ``R`` to ``[L 0]``.

    Returns ``(L, Winv)`` with ``L`` lower triangular with monic diagonal,
    off-diagonal entries reduced modulo the diagonal, and ``Winv`` unimodular
    such that ``R = [L 0] @ Winv``.  ``Winv`` is accumulated from the inverse
    elementary operations, so no matrix inversion is ever performed.
    """
    L, _, Winv = _hermite(R)
    return L, Winv


def column_compress(R: PolyMatrix):
    """``(L, W)`` with ``R @ W == [L 0]`` and ``W`` unimodular."""
    L, W, _ = _hermite(R)
    return L, W


def coprime_decompose(P: PolyMatrix, Q: PolyMatrix) -> CoprimeDecomposition:
    """Extract a greatest common left divisor of square ``P`` and ``Q``."""
    if not (P.is_square() and Q.is_square() and P.shape == Q.shape):
        raise ValueError("P and Q must be square of equal size")
    n = P.rows
    try:
        F, Winv = column_hermite(P.hstack(-Q))
    except ValueError as exc:
        raise ValueError("not a valid behavior: normalrank([P -Q]) < n") from exc
    top = Winv.select_rows(range(n))
    bottom = Winv.select_rows(range(n, 2 * n))
    Pt = top.select_cols(range(n))
    Qt = -top.select_cols(range(n, 2 * n))
    U = bottom.select_cols(range(n))
    V = bottom.select_cols(range(n, 2 * n))
    zeta = sum(F[i, i].degree for i in range(n))
    return CoprimeDecomposition(F, Pt, Qt, U, V, zeta)


def zeta(P: PolyMatrix, Q: PolyMatrix) -> int:
    """Number of uncontrollable modes of ``P(d/dt) i = Q(d/dt) v``."""
    return coprime_decompose(P, Q).zeta


def adjugate(M: PolyMatrix) -> PolyMatrix:
    n = M.rows
    if n == 1:
        return PolyMatrix.identity(1)
    out = [[Poly()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = PolyMatrix([[M.entries[r][c] for c in range(n) if c != j]
                                for r in range(n) if r != i], n - 1, n - 1)
            d = det(minor)
            out[j][i] = d if (i + j) % 2 == 0 else -d
    return PolyMatrix(out, n, n)


def squarefree(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.degree <= 0:
        return Poly.const(1)
    return (p // poly_gcd(p, p.derivative())).monic()


def rational_roots(p: Poly) -> list:
    """Distinct rational roots of ``p``, sorted.

    Candidates come from the floating-point roots of the squarefree part,
    rounded to nearby fractions; every candidate is confirmed exactly.
    """
    import numpy as np

    q = squarefree(p)
    found = set()
    while q.degree > 0:
        if q.coeff(0) == 0:
            found.add(Fraction(0))
            q = q // Poly((0, 1))
            continue
        hit = None
        for z in np.roots([float(c) for c in reversed(q.coeffs)]):
            if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
                continue
            for bound in (1, 10, 100, 10 ** 3, 10 ** 4, 10 ** 6):
                cand = Fraction(float(z.real)).limit_denominator(bound)
                if q(cand) == 0:
                    hit = cand
                    break
            if hit is not None:
                break
        if hit is None:
            break
        found.add(hit)
        q = q // Poly((-hit, 1))
    return sorted(found)
