"""Dense exact linear algebra over the coefficient fields.

Matrices are plain lists of lists of field elements (FieldElement or
CycElement); every routine works for any element type supporting +, -, *, /,
is_zero() and complexity().  Construction is sparse-friendly: products skip
zero entries.
"""

from __future__ import annotations

from .rings import ExactDivisionError, Poly2


def identity(n, ctx):
    one, zero = ctx.one(), ctx.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, ctx):
    zero = ctx.zero()
    return [[zero] * n for _ in range(n)]


def mat_mul(A, B):
    n, m = len(A), len(B[0])
    inner = len(B)
    zero = None
    for row in A:
        for e in row:
            if zero is None:
                zero = e - e
            break
        break
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a.is_zero():
                continue
            Bk = B[k]
            for j in range(m):
                b = Bk[j]
                if not b.is_zero():
                    Oi[j] = Oi[j] + a * b
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in row] for row in A]


def mat_eq(A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if a != b:
                return False
    return True


def mat_vec(A, v):
    out = []
    for row in A:
        acc = None
        for a, x in zip(row, v):
            if a.is_zero() or x.is_zero():
                continue
            acc = a * x if acc is None else acc + a * x
        if acc is None:
            acc = row[0] - row[0]
        out.append(acc)
    return out


def is_zero_vector(v):
    return all(e.is_zero() for e in v)


def det(M, ctx):
    """Determinant by Gaussian elimination over the field (exact division)."""
    n = len(M)
    if n == 0:
        return ctx.one()
    A = [list(row) for row in M]
    detval = ctx.one()
    for k in range(n):
        piv = None
        best = None
        for i in range(k, n):
            if not A[i][k].is_zero():
                c = A[i][k].complexity()
                if best is None or c < best:
                    best, piv = c, i
        if piv is None:
            return ctx.zero()
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            detval = -detval
        pivot = A[k][k]
        detval = detval * pivot
        inv = ctx.one() / pivot
        for i in range(k + 1, n):
            f = A[i][k]
            if f.is_zero():
                continue
            f = f * inv
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                if not Ak[j].is_zero():
                    Ai[j] = Ai[j] - f * Ak[j]
            Ai[k] = ctx.zero()
    return detval


def rref(M, ctx):
    """Reduced row echelon form.

    Returns (rows, pivot_cols) with unit pivots and zeros above and below.
    Pivot choice within a column favours the entry with the smallest term
    count, which keeps rational-function growth down; the result does not
    depend on the choice.
    """
    A = [list(row) for row in M]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        best = None
        for i in range(rank, nrows):
            if not A[i][col].is_zero():
                c = A[i][col].complexity()
                if best is None or c < best:
                    best, piv = c, i
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = ctx.one() / A[rank][col]
        A[rank] = [e * inv for e in A[rank]]
        prow = A[rank]
        for i in range(nrows):
            if i == rank:
                continue
            f = A[i][col]
            if f.is_zero():
                continue
            A[i] = [a - f * p if not p.is_zero() else a
                    for a, p in zip(A[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return A[:rank], pivots


def kernel_basis(M, ctx):
    """A basis of the right kernel, rows in reduced echelon form: scanning
    each basis vector, its first nonzero entry is 1 and sits in a column
    where every other basis vector vanishes."""
    R, pivots = rref(M, ctx)
    ncols = len(M[0]) if M else 0
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    one, zero = ctx.one(), ctx.zero()
    basis = []
    for f in free_cols:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(R, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        basis.append(v)
    return basis


def rank(M, ctx):
    return len(rref(M, ctx)[0])


def submatrix(M, rows, cols):
    """Extract by 1-based row/column index lists."""
    return [[M[i - 1][j - 1] for j in cols] for i in rows]


# -- fraction-free determinant over Q[l, r] ---------------------------------

def bareiss_det_poly(M):
    """Exact determinant of a Poly2 matrix by Bareiss one-step elimination.

    Intermediate entries stay minors of the input, so every division below
    is exact in the polynomial ring.
    """
    n = len(M)
    if n == 0:
        return Poly2.one()
    A = [list(row) for row in M]
    sign = 1
    prev = Poly2.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Poly2.zero()
        pkk = A[k][k]
        for i in range(k + 1, n):
            Ai, Ak = A[i], A[k]
            aik = Ai[k]
            for j in range(k + 1, n):
                t = pkk * Ai[j]
                if not aik.is_zero() and not Ak[j].is_zero():
                    t = t - aik * Ak[j]
                if k:
                    t = t.divexact(prev)
                Ai[j] = t
            Ai[k] = Poly2.zero()
        prev = pkk
    result = A[n - 1][n - 1]
    return -result if sign < 0 else result
