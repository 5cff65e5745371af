# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 Smith normal form; mirrors _snf_py.smith step for step.

Raises OverflowError when an intermediate entry leaves the int64 range, in
which case the caller reruns the pure-Python kernel.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int mul_ovf(long long a, long long b, long long *r) nogil
    int add_ovf(long long a, long long b, long long *r) nogil


cdef inline int64_t fdiv(int64_t a, int64_t b) nogil:
    cdef int64_t q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline int64_t fmod(int64_t a, int64_t b) nogil:
    cdef int64_t r = a % b
    if r != 0 and ((r < 0) != (b < 0)):
        r += b
    return r


cdef int axpy_row(int64_t[:, ::1] M, Py_ssize_t dst, Py_ssize_t src, int64_t c) nogil:
    cdef Py_ssize_t k
    cdef long long tmp
    for k in range(M.shape[1]):
        if M[src, k] != 0:
            if mul_ovf(c, M[src, k], &tmp):
                return 1
            if add_ovf(M[dst, k], tmp, &tmp):
                return 1
            M[dst, k] = tmp
    return 0


cdef int axpy_col(int64_t[:, ::1] M, Py_ssize_t dst, Py_ssize_t src, int64_t c) nogil:
    cdef Py_ssize_t k
    cdef long long tmp
    for k in range(M.shape[0]):
        if M[k, src] != 0:
            if mul_ovf(c, M[k, src], &tmp):
                return 1
            if add_ovf(M[k, dst], tmp, &tmp):
                return 1
            M[k, dst] = tmp
    return 0


cdef void swap_rows(int64_t[:, ::1] M, Py_ssize_t a, Py_ssize_t b) nogil:
    cdef Py_ssize_t k
    cdef int64_t x
    if a == b:
        return
    for k in range(M.shape[1]):
        x = M[a, k]
        M[a, k] = M[b, k]
        M[b, k] = x


cdef void swap_cols(int64_t[:, ::1] M, Py_ssize_t a, Py_ssize_t b) nogil:
    cdef Py_ssize_t k
    cdef int64_t x
    if a == b:
        return
    for k in range(M.shape[0]):
        x = M[k, a]
        M[k, a] = M[k, b]
        M[k, b] = x


cdef inline int64_t iabs(int64_t v) nogil:
    return -v if v < 0 else v


cdef int pick(int64_t[:, ::1] D, Py_ssize_t r0, Py_ssize_t r1, Py_ssize_t c0, Py_ssize_t c1,
              Py_ssize_t *bi, Py_ssize_t *bj) nogil:
    cdef Py_ssize_t i, j
    cdef int64_t best = -1, a
    for i in range(r0, r1):
        for j in range(c0, c1):
            if D[i, j] != 0:
                a = iabs(D[i, j])
                if best < 0 or a < best:
                    best = a
                    bi[0] = i
                    bj[0] = j
                    if a == 1:
                        return 1
    return 1 if best >= 0 else 0


cdef int run(int64_t[:, ::1] D, int64_t[:, ::1] U, int64_t[:, ::1] V) nogil:
    cdef Py_ssize_t m = D.shape[0], n = D.shape[1]
    cdef Py_ssize_t t = 0, i, j, bi = 0, bj = 0, bad
    cdef int64_t p, q
    cdef bint dirty
    cdef Py_ssize_t lim = m if m < n else n
    while t < lim:
        if not pick(D, t, m, t, n, &bi, &bj):
            break
        swap_rows(D, t, bi)
        swap_rows(U, t, bi)
        swap_cols(D, t, bj)
        swap_cols(V, t, bj)
        while True:
            p = D[t, t]
            dirty = False
            for i in range(t + 1, m):
                if D[i, t] != 0:
                    q = fdiv(D[i, t], p)
                    if q != 0:
                        if axpy_row(D, i, t, -q) or axpy_row(U, i, t, -q):
                            return 1
                    if D[i, t] != 0:
                        dirty = True
            if dirty:
                pick(D, t + 1, m, t, t + 1, &bi, &bj)
                swap_rows(D, t, bi)
                swap_rows(U, t, bi)
                continue
            for j in range(t + 1, n):
                if D[t, j] != 0:
                    q = fdiv(D[t, j], p)
                    if q != 0:
                        if axpy_col(D, j, t, -q) or axpy_col(V, j, t, -q):
                            return 1
                    if D[t, j] != 0:
                        dirty = True
            if dirty:
                pick(D, t, t + 1, t + 1, n, &bi, &bj)
                swap_cols(D, t, bj)
                swap_cols(V, t, bj)
                continue
            if p != 1 and p != -1:
                bad = -1
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if fmod(D[i, j], p) != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad >= 0:
                    if axpy_row(D, t, bad, 1) or axpy_row(U, t, bad, 1):
                        return 1
                    continue
            break
        if D[t, t] < 0:
            for j in range(n):
                D[t, j] = -D[t, j]
            for j in range(m):
                U[t, j] = -U[t, j]
        t += 1
    return 0


def smith(A):
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    Dn = np.array(A, dtype=np.int64).reshape(m, n)
    Un = np.eye(m, dtype=np.int64)
    Vn = np.eye(n, dtype=np.int64)
    cdef int64_t[:, ::1] D = Dn
    cdef int64_t[:, ::1] U = Un
    cdef int64_t[:, ::1] V = Vn
    cdef int err
    with nogil:
        err = run(D, U, V)
    if err:
        raise OverflowError("int64 overflow in Smith normal form")
    return Un.tolist(), Dn.tolist(), Vn.tolist()
