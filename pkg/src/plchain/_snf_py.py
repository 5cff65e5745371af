"""Dense Smith normal form over the integers, pure Python.

The compiled kernel in ``_snf_ext.pyx`` runs the same algorithm step for step
on int64 arrays, so both produce identical (U, D, V).
"""


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _pick(D, rows, cols):
    best = None
    for i in rows:
        Di = D[i]
        for j in cols:
            v = Di[j]
            if v:
                a = -v if v < 0 else v
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        return best
    return best


def smith(A):
    """Return (U, D, V) with D = U*A*V diagonal, d1 | d2 | ..., U and V unimodular.

    Pivot rule: smallest nonzero magnitude in the active block, ties broken by
    (row, column).  Matrices are lists of lists of Python ints.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(r) for r in A]
    U = _identity(m)
    V = _identity(n)
    t = 0
    while t < min(m, n):
        piv = _pick(D, range(t, m), range(t, n))
        if piv is None:
            break
        _, i, j = piv
        _swap_rows(D, U, t, i)
        _swap_cols(D, V, t, j)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    if q:
                        _add_row(D, U, i, t, -q)
                    if D[i][t]:
                        dirty = True
            if dirty:
                _, i, _ = _pick(D, range(t + 1, m), (t,))
                _swap_rows(D, U, t, i)
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    if q:
                        _add_col(D, V, j, t, -q)
                    if D[t][j]:
                        dirty = True
            if dirty:
                _, _, j = _pick(D, (t,), range(t + 1, n))
                _swap_cols(D, V, t, j)
                continue
            if p != 1 and p != -1:
                bad = None
                for i in range(t + 1, m):
                    Di = D[i]
                    for j in range(t + 1, n):
                        if Di[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    _add_row(D, U, t, bad, 1)
                    continue
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def _swap_rows(D, U, a, b):
    if a != b:
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]


def _swap_cols(D, V, a, b):
    if a != b:
        for M in (D, V):
            for r in M:
                r[a], r[b] = r[b], r[a]


def _add_row(D, U, dst, src, c):
    for M in (D, U):
        rs, rd = M[src], M[dst]
        for k, x in enumerate(rs):
            if x:
                rd[k] += c * x


def _add_col(D, V, dst, src, c):
    for M in (D, V):
        for r in M:
            x = r[src]
            if x:
                r[dst] += c * x
