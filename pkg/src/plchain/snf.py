"""Smith normal form front end with compiled/pure-Python kernel selection."""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _snf_py

try:
    if os.environ.get("PLCHAIN_PURE_PYTHON") == "1":
        raise ImportError
    from ._snf_ext import smith as _smith_ext
    BACKEND = "cython"
except ImportError:
    _smith_ext = None
    BACKEND = "python"

# above this many entries the dense int64 kernel is not worth the copy
_EXT_LIMIT = 4_000_000
_INT64_SAFE = 1 << 40


def smith_python(A):
    return _snf_py.smith(A)


def smith_compiled(A):
    if _smith_ext is None:
        raise RuntimeError("compiled kernel not available")
    return _smith_ext(A)


def smith(A):
    """(U, D, V) using the compiled kernel when entries are small enough."""
    if _smith_ext is not None and A and A[0]:
        size = len(A) * len(A[0])
        if size <= _EXT_LIMIT and all(-_INT64_SAFE < x < _INT64_SAFE for r in A for x in r):
            try:
                return _smith_ext(A)
            except OverflowError:
                pass
    return _snf_py.smith(A)


@dataclass(frozen=True)
class SNFDecomposition:
    U: list
    D: list
    V: list

    @property
    def diagonal(self) -> list:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k) if self.D[i][i]]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def matmul(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * n
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(A) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A, check: bool = False) -> SNFDecomposition:
    """D = U*A*V with unimodular U, V and a divisibility chain on the diagonal.

    Pivoting is deterministic: smallest magnitude first, then (row, column).
    With ``check`` the certificate is asserted exactly.
    """
    A = [list(map(int, r)) for r in A]
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0 or n == 0:
        dec = SNFDecomposition(identity(m), [[0] * n for _ in range(m)], identity(n))
    else:
        dec = SNFDecomposition(*smith(A))
    if check:
        verify_snf(A, dec)
    return dec


def verify_snf(A, dec: SNFDecomposition):
    m = len(A)
    n = len(A[0]) if m else 0
    if m and n:
        assert matmul(matmul(dec.U, A), dec.V) == dec.D, "U*A*V != D"
    for i in range(m):
        for j in range(n):
            if i != j:
                assert dec.D[i][j] == 0, "D not diagonal"
    diag = [dec.D[i][i] for i in range(min(m, n))]
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz, "zero before nonzero on diagonal"
    assert all(d > 0 for d in nz), "negative invariant factor"
    assert all(b % a == 0 for a, b in zip(nz, nz[1:])), "divisibility chain broken"
    assert abs(determinant(dec.U)) == 1 and abs(determinant(dec.V)) == 1, "not unimodular"


def integer_inverse(U):
    """Inverse of a unimodular integer matrix."""
    from fractions import Fraction
    n = len(U)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(U)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    out = [[x for x in row[n:]] for row in M]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]
