"""Exact integer matrix algebra: Smith form, kernels, Diophantine solving.

Matrices are plain lists of lists of Python ints (row major); sizes in
this project stay tiny, so there is no need for sparse formats or
modular tricks.  All transforms are tracked unimodularly.
"""

from __future__ import annotations

from math import gcd


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int):
    return [[0] * n for _ in range(m)]


def matmul(A, B):
    m, k = len(A), len(A[0]) if A else 0
    n = len(B[0]) if B else 0
    C = zeros(m, n)
    for i in range(m):
        Ai = A[i]
        Ci = C[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            for j in range(n):
                Ci[j] += a * Bt[j]
    return C


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def det(A) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V = D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ...  The pivot at
    each step is a smallest nonzero entry by absolute value, which keeps
    intermediate entries small at these sizes.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = identity(m)
    V = identity(n)

    def rowop(i, t, q):
        for j in range(n):
            D[i][j] -= q * D[t][j]
        for j in range(m):
            U[i][j] -= q * U[t][j]

    def colop(j, t, q):
        for i in range(m):
            D[i][j] -= q * D[i][t]
        for i in range(n):
            V[i][j] -= q * V[i][t]

    def qround(x, d):
        # symmetric division: remainder magnitude at most |d|/2
        # divmod's remainder shares d's sign, so moving q up by one always
        # flips it to the short side
        q, r = divmod(x, d)
        if 2 * abs(r) > abs(d):
            q += 1
        return q

    def diagonalize():
        # bring D to diagonal form; every re-selection strictly shrinks
        # the pivot magnitude, so each position terminates
        for t in range(min(m, n)):
            while True:
                piv = None
                for i in range(t, m):
                    for j in range(t, n):
                        if D[i][j] != 0 and (
                            piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])
                        ):
                            piv = (i, j)
                if piv is None:
                    return
                i, j = piv
                if i != t:
                    D[t], D[i] = D[i], D[t]
                    U[t], U[i] = U[i], U[t]
                if j != t:
                    for row in D:
                        row[t], row[j] = row[j], row[t]
                    for row in V:
                        row[t], row[j] = row[j], row[t]
                for i in range(t + 1, m):
                    if D[i][t]:
                        rowop(i, t, qround(D[i][t], D[t][t]))
                if any(D[i][t] for i in range(t + 1, m)):
                    continue
                for j in range(t + 1, n):
                    if D[t][j]:
                        colop(j, t, qround(D[t][j], D[t][t]))
                if any(D[t][j] for j in range(t + 1, n)):
                    continue
                break

    diagonalize()
    # repair the divisibility chain: folding row i+1 into row i and
    # re-diagonalizing replaces d_i by gcd(d_i, d_{i+1}), so the diagonal
    # decreases lexicographically and the loop terminates
    while True:
        viol = next(
            (
                i
                for i in range(min(m, n) - 1)
                if D[i][i] != 0 and D[i + 1][i + 1] % D[i][i] != 0
            ),
            None,
        )
        if viol is None:
            break
        rowop(viol, viol + 1, -1)
        diagonalize()
    for t in range(min(m, n)):
        if D[t][t] < 0:
            for j in range(n):
                D[t][j] = -D[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]
    return U, D, V


def hermite_reduce_rows(rows):
    """Row-style Hermite form of a full-rank list of lattice basis rows.

    Unimodular row operations only, so the rows span the same lattice.
    Pivots positive, entries above each pivot reduced into [0, pivot);
    in particular each row's first nonzero entry is positive.
    """
    B = [list(map(int, r)) for r in rows]
    if not B:
        return B
    n = len(B[0])
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(B)):
            if B[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        B[r], B[piv] = B[piv], B[r]
        while True:
            nz = [i for i in range(r + 1, len(B)) if B[i][col] != 0]
            if not nz:
                break
            for i in nz:
                q = B[i][col] // B[r][col]
                for j in range(n):
                    B[i][j] -= q * B[r][j]
                if B[i][col] != 0:
                    B[r], B[i] = B[i], B[r]
        if B[r][col] < 0:
            B[r] = [-x for x in B[r]]
        for i in range(r):
            q = B[i][col] // B[r][col]
            if q:
                for j in range(n):
                    B[i][j] -= q * B[r][j]
        r += 1
        if r == len(B):
            break
    return B


def kernel_basis(A, cols=None):
    """A Hermite-reduced basis of the saturated integer kernel of A.

    With U*A*V = D, the columns of V at zero diagonal positions span
    {v : A v = 0}; V unimodular makes the span saturated.  ``cols``
    disambiguates the domain dimension when A has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    if n == 0:
        return []
    if m == 0:
        return [row[:] for row in identity(n)]
    _, D, V = smith_normal_form(A)
    free = [j for j in range(n) if j >= m or D[j][j] == 0]
    basis = [[V[i][j] for i in range(n)] for j in free]
    return hermite_reduce_rows(basis)


def solve_linear(A, b):
    """Some integer solution of A x = b, or None when none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError(f"vector length {len(b)} does not match {m} rows")
    U, D, V = smith_normal_form(A)
    c = matvec(U, list(b))
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return matvec(V, y)


def is_primitive(v) -> bool:
    """True iff v is nonzero with coprime entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def lattice_points_in_box(basis_rows, bound: int):
    """All lattice points of span_Z(basis_rows) with sup-norm <= bound.

    The basis must be in row Hermite form (as produced by kernel_basis):
    coordinates at the pivot columns determine the combination by a
    triangular solve, so the search space is (2*bound+1)^rank.
    """
    if bound < 0:
        return []
    B = [list(r) for r in basis_rows]
    if not B:
        return []
    n = len(B[0])
    pivots = []
    for row in B:
        col = next(j for j, x in enumerate(row) if x != 0)
        pivots.append(col)

    points = []

    def rec(k, cs):
        if k == len(B):
            v = [0] * n
            for c, row in zip(cs, B):
                if c:
                    for j in range(n):
                        v[j] += c * row[j]
            if all(-bound <= x <= bound for x in v):
                points.append(v)
            return
        col = pivots[k]
        # value already contributed at this pivot column by earlier rows
        base = sum(c * row[col] for c, row in zip(cs, B[:k]))
        p = B[k][col]
        for target in range(-bound, bound + 1):
            if (target - base) % p == 0:
                rec(k + 1, cs + [(target - base) // p])

    rec(0, [])
    return points
