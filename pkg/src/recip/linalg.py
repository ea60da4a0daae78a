"""Dense exact linear algebra on lists of lists.

Entries may be ``int``, ``Fraction`` or :class:`~recip.surd.Surd`; every
routine uses only field operations and exact zero tests, so results are
exact.  Matrices are plain ``list[list]`` with row-major layout; a matrix
with zero rows is ``[]`` and its column count must be passed explicitly
where it matters.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac_matrix(rows) -> list:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> list:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> list:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def shape(M, cols=None):
    return len(M), (len(M[0]) if M else (cols or 0))


def transpose(M, cols=None) -> list:
    r, c = shape(M, cols)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def matmul(A, B, inner=None, cols=None) -> list:
    """``A @ B``; ``cols`` is needed only when ``B`` has no rows."""
    if not A:
        return []
    n = len(B)
    c = len(B[0]) if B else (cols or 0)
    out = []
    for row in A:
        acc = [ZERO] * c
        for k in range(n):
            a = row[k]
            if a == 0:
                continue
            Bk = B[k]
            for j in range(c):
                b = Bk[j]
                if b != 0:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def add(A, B) -> list:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A, B) -> list:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, A) -> list:
    return [[c * a for a in row] for row in A]


def is_zero_matrix(A, tol=None) -> bool:
    if tol is None:
        return all(x == 0 for row in A for x in row)
    return all(abs(float(x)) <= tol for row in A for x in row)


def is_symmetric(A) -> bool:
    n = len(A)
    if any(len(row) != n for row in A):
        return False
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def hstack(*blocks, rows=None) -> list:
    r = rows if rows is not None else len(blocks[0])
    return [[x for b in blocks for x in (b[i] if b else [])] for i in range(r)]


def vstack(*blocks) -> list:
    return [list(row) for b in blocks for row in b]


def block_diag(*blocks) -> list:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def diag(values) -> list:
    values = list(values)
    out = zeros(len(values), len(values))
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def rref(M, cols=None):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    R = [list(row) for row in M]
    r, c = shape(M, cols)
    pivots = []
    row = 0
    for col in range(c):
        if row == r:
            break
        piv = next((i for i in range(row, r) if R[i][col] != 0), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        inv = 1 / R[row][col] if not isinstance(R[row][col], int) else Fraction(1, R[row][col])
        R[row] = [x * inv if x != 0 else x for x in R[row]]
        for i in range(r):
            if i != row and R[i][col] != 0:
                f = R[i][col]
                R[i] = [a - f * b if b != 0 else a for a, b in zip(R[i], R[row])]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(M, cols=None) -> int:
    """Rank by fraction-keeping forward elimination (no back substitution)."""
    R = [list(row) for row in M]
    r, c = shape(M, cols)
    rk = 0
    for col in range(c):
        piv = next((i for i in range(rk, r) if R[i][col] != 0), None)
        if piv is None:
            continue
        R[rk], R[piv] = R[piv], R[rk]
        p = R[rk][col]
        for i in range(rk + 1, r):
            if R[i][col] != 0:
                f = R[i][col] / p
                R[i] = [a - f * b if b != 0 else a for a, b in zip(R[i], R[rk])]
        rk += 1
        if rk == r:
            break
    return rk


def nullspace(M, cols=None) -> list:
    """Basis of ``{x : M x = 0}`` as the columns of a ``c x k`` matrix.

    The basis is the canonical one read off the reduced row echelon form:
    one vector per free column, with a 1 in that column.
    """
    r, c = shape(M, cols)
    R, pivots = rref(M, c)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * c
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return transpose(basis, c) if basis else [[] for _ in range(c)]


def column_complement(B, n) -> list:
    """Unit columns that extend the columns of ``B`` (``n x k``) to a basis."""
    k = len(B[0]) if B and B[0] else 0
    current = [list(row) for row in B] if k else [[] for _ in range(n)]
    extra = []
    rk = k
    for j in range(n):
        e = [ONE if i == j else ZERO for i in range(n)]
        trial = [current[i] + [e[i]] for i in range(n)]
        if rank(trial) > rk:
            current = trial
            extra.append(e)
            rk += 1
        if rk == n:
            break
    return transpose(extra, n) if extra else [[] for _ in range(n)]


def inverse(M) -> list:
    n = len(M)
    aug = [list(M[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def det(M):
    n = len(M)
    R = [list(row) for row in M]
    out = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if R[i][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            R[col], R[piv] = R[piv], R[col]
            out = -out
        p = R[col][col]
        out = out * p
        for i in range(col + 1, n):
            if R[i][col] != 0:
                f = R[i][col] / p
                R[i] = [a - f * b for a, b in zip(R[i], R[col])]
    return out


def submatrix(M, rows, cols) -> list:
    return [[M[i][j] for j in cols] for i in rows]


def charpoly_adjugate(A):
    """Faddeev-LeVerrier: characteristic polynomial and adjugate of ``sI - A``.

    Returns ``(coeffs, mats)`` where ``coeffs`` lists the characteristic
    polynomial in ascending powers (monic, length ``d+1``) and
    ``adj(sI - A) = sum_k mats[k] * s**(d-1-k)``.  Uses ring operations and
    division by integers only, so it works for any entry type here.
    """
    d = len(A)
    if d == 0:
        return [ONE], []
    c = [ZERO] * (d + 1)
    c[d] = ONE
    mats = []
    Mk = identity(d)
    for k in range(1, d + 1):
        mats.append(Mk)
        AM = matmul(A, Mk)
        tr = sum((AM[i][i] for i in range(d)), ZERO)
        ck = -tr / k if isinstance(tr, Fraction) else tr * Fraction(-1, k)
        c[d - k] = ck
        Mk = [[AM[i][j] + (ck if i == j else ZERO) for j in range(d)] for i in range(d)]
    return c, mats
