"""Exact linear algebra on rational matrices.

Matrices are sequences of rows of scalars.  Rank and kernel computations
clear denominators row by row and then run fraction-free (Bareiss-style)
Gaussian elimination, so every intermediate entry is an integer and no
denominator blowup can occur; rationals reappear only in the final back
substitution.  These sizes (dim <= ~12, cocycle systems a few hundred
rows) make dense arithmetic the right choice.
"""

from math import gcd, lcm

from .scalar import ONE, ZERO, Q


def zeros(m: int, n: int) -> list:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> list:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def transpose(M) -> list:
    return [list(col) for col in zip(*M)]


def mat_mul(A, B) -> list:
    n = len(B)
    cols = len(B[0])
    out = []
    for row in A:
        orow = []
        for j in range(cols):
            s = ZERO
            for k in range(n):
                a = row[k]
                if a:
                    s += a * B[k][j]
            orow.append(s)
        out.append(orow)
    return out


def mat_vec(M, v) -> list:
    out = []
    for row in M:
        s = ZERO
        for a, x in zip(row, v):
            if a and x:
                s += a * x
        out.append(s)
    return out


def mat_add(A, B) -> list:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B) -> list:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A) -> list:
    return [[c * a for a in row] for row in A]


def mat_eq(A, B) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero_mat(A) -> bool:
    return all(not a for row in A for a in row)


def _integer_rows(M) -> list:
    """Scale each row by the lcm of its denominators; kernel is unchanged."""
    out = []
    for row in M:
        den = 1
        for x in row:
            q = Q(x)
            den = lcm(den, int(q.denominator))
        out.append([int(Q(x) * den) for x in row])
    return out


def _echelon_ff(rows):
    """Fraction-free row echelon form of an integer matrix (in place).

    Returns the list of (row, col) pivot positions.  Bareiss division by
    the previous pivot keeps entries integral and small.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            xi = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            # every row below is rescaled, even for xi = 0: Bareiss
            # exactness needs the p/prev factor applied uniformly
            for j in range(c, n):
                ri[j] = (p * ri[j] - xi * rr[j]) // prev
        pivots.append((r, c))
        prev = p
        r += 1
        if r == m:
            break
    return pivots


def rank(M) -> int:
    if not M or not M[0]:
        return 0
    rows = _integer_rows(M)
    return len(_echelon_ff(rows))


def kernel_basis(M) -> list:
    """Exact basis of the right kernel {v : M v = 0}.

    Each basis vector is normalized to a primitive integer vector whose
    first nonzero entry is positive, which makes results deterministic.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    rows = _integer_rows(M)
    pivots = _echelon_ff(rows)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [ZERO] * n
        v[f] = ONE
        for r, c in reversed(pivots):
            s = ZERO
            row = rows[r]
            for j in range(c + 1, n):
                if row[j] and v[j]:
                    s += Q(row[j]) * v[j]
            v[c] = -s / row[c]
        basis.append(_primitive(v))
    return basis


def _primitive(v) -> list:
    den = 1
    for x in v:
        den = lcm(den, int(Q(x).denominator))
    ints = [int(Q(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return [Q(x) for x in ints]


def inverse(M) -> list:
    """Gauss-Jordan inverse over Q.  Raises ValueError on a singular input."""
    n = len(M)
    A = [list(row) + ident_row for row, ident_row in zip(M, identity(n))]
    for c in range(n):
        pr = None
        for i in range(c, n):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            raise ValueError("matrix is singular")
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def solve(M, b):
    """One solution of M x = b over Q, or None if inconsistent."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(row) + [bv] for row, bv in zip(M, b)]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            A[r], A[pr] = A[pr], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if A[i][n]:
            return None
    x = [ZERO] * n
    for rr, c in pivots:
        x[c] = A[rr][n]
    return x


def rref(M):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    A = [list(row) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            A[r], A[pr] = A[pr], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def reduce_against(rows, pivots, v):
    """Reduce v against an rref basis; the remainder is zero iff v is in
    the row space."""
    w = list(v)
    for row, c in zip(rows, pivots):
        if w[c]:
            f = w[c]
            w = [x - f * y for x, y in zip(w, row)]
    return w


def row_space_basis(vectors) -> list:
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    rows, _ = rref(vecs)
    return rows


def congruent_diagonal(K) -> list:
    """Diagonal of a rational congruence diagonalization P^T K P of a
    symmetric matrix (only the diagonal is returned)."""
    n = len(K)
    A = [list(row) for row in K]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]

    def add_to(i, j):
        # row_i += row_j, then col_i += col_j
        A[i] = [x + y for x, y in zip(A[i], A[j])]
        for row in A:
            row[i] = row[i] + row[j]

    diag = []
    for i in range(n):
        if not A[i][i]:
            j = next((j for j in range(i + 1, n) if A[j][j]), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if A[i][j]), None)
                if j is None:
                    diag.append(ZERO)
                    continue
                add_to(i, j)
        p = A[i][i]
        for j in range(i + 1, n):
            if A[i][j]:
                f = A[i][j] / p
                A[j] = [x - f * y for x, y in zip(A[j], A[i])]
                for row in A:
                    row[j] = row[j] - f * row[i]
        diag.append(p)
    return diag


def signature(K):
    """(positive, negative, zero) inertia of a symmetric rational matrix."""
    diag = congruent_diagonal(K)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
