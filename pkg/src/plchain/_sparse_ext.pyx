# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Unit-pivot sparse elimination for A x = b; mirrors the Python loop in
chain_algebra.solve_sparse.  Raises OverflowError on int64 overflow."""

from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.utility cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.queue cimport priority_queue

cdef extern from *:
    """
    #include <stdint.h>
    static inline int mul_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sub_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int mul_ovf(int64_t a, int64_t b, int64_t *r) nogil
    int sub_ovf(int64_t a, int64_t b, int64_t *r) nogil


ctypedef unordered_map[int, int64_t] Row


def eliminate(int nrows, int ncols, list row_cols, list row_vals, list rhs):
    """Returns (consistent, pivots, residual, rhs_residual).

    ``pivots`` is a list of (col, eps, br, cols, vals) in elimination order;
    ``residual`` maps surviving row ids to {col: val}.
    """
    cdef vector[Row] rows = vector[Row](nrows)
    cdef vector[unordered_set[int]] colrows = vector[unordered_set[int]](ncols)
    cdef vector[int64_t] b = vector[int64_t](nrows)
    cdef vector[char] alive = vector[char](nrows, 1)
    cdef priority_queue[pair[int64_t, int]] heap
    cdef int r, c, r2, best, cc
    cdef int64_t v, eps, br, lam, tmp, nv
    cdef size_t ln, bestlen
    cdef Row er
    cdef Row.iterator it
    cdef pair[int, int64_t] kv
    cdef vector[int] targets
    cdef Py_ssize_t t
    cdef list cols_r, vals_r
    for r in range(nrows):
        cols_r = row_cols[r]
        vals_r = row_vals[r]
        for t in range(len(cols_r)):
            c = cols_r[t]
            v = vals_r[t]
            if v:
                rows[r][c] = v
                colrows[c].insert(r)
        b[r] = rhs[r]
        # min-heap via negated keys; ties broken by smaller row id
        heap.push(pair[int64_t, int](-(<int64_t>rows[r].size() * nrows + r), r))
    pivots = []
    while not heap.empty():
        key = heap.top().first
        r = heap.top().second
        heap.pop()
        if not alive[r]:
            continue
        ln = rows[r].size()
        if <int64_t>(-key) // nrows != <int64_t>ln:
            heap.push(pair[int64_t, int](-(<int64_t>ln * nrows + r), r))
            continue
        if ln == 0:
            if b[r] != 0:
                return False, None, None, None
            alive[r] = 0
            continue
        best = -1
        bestlen = 0
        for kv in rows[r]:
            if kv.second == 1 or kv.second == -1:
                if best < 0 or colrows[kv.first].size() < bestlen or \
                        (colrows[kv.first].size() == bestlen and kv.first < best):
                    best = kv.first
                    bestlen = colrows[kv.first].size()
        if best < 0:
            continue
        c = best
        eps = rows[r][c]
        er = rows[r]
        br = b[r]
        alive[r] = 0
        rows[r].clear()
        for kv in er:
            colrows[kv.first].erase(r)
        targets.clear()
        for r2 in colrows[c]:
            targets.push_back(r2)
        for r2 in targets:
            lam = rows[r2][c] * eps
            for kv in er:
                cc = kv.first
                if mul_ovf(lam, kv.second, &tmp):
                    raise OverflowError
                it = rows[r2].find(cc)
                if it == rows[r2].end():
                    nv = -tmp
                    if nv:
                        rows[r2][cc] = nv
                        colrows[cc].insert(r2)
                else:
                    if sub_ovf(rows[r2][cc], tmp, &nv):
                        raise OverflowError
                    if nv:
                        rows[r2][cc] = nv
                    else:
                        rows[r2].erase(cc)
                        colrows[cc].erase(r2)
            if br:
                if mul_ovf(lam, br, &tmp) or sub_ovf(b[r2], tmp, &nv):
                    raise OverflowError
                b[r2] = nv
            heap.push(pair[int64_t, int](-(<int64_t>rows[r2].size() * nrows + r2), r2))
        colrows[c].clear()
        er.erase(c)
        pcols = []
        pvals = []
        for kv in er:
            pcols.append(kv.first)
            pvals.append(kv.second)
        pivots.append((c, eps, br, pcols, pvals))
    residual = {}
    bres = {}
    for r in range(nrows):
        if alive[r] and (rows[r].size() or b[r]):
            residual[r] = {kv.first: kv.second for kv in rows[r]}
            bres[r] = b[r]
    return True, pivots, residual, bres
