# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels mirroring ``_kernels_py``.

Ryser runs in wrapping 64-bit arithmetic, which is exact modulo 2^64. Since
|perm A| <= prod_i sum_j |a_ij|, the wrapped result is the true permanent
whenever that product is below 2^63; otherwise the pure-Python version
handles it with arbitrary-precision ints. Matching
search keeps the used-column set in a 64-bit mask, so larger graphs also fall
back.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

from . import _kernels_py

LIMIT = 1 << 63


def _fits_int64(rows):
    bound = 1
    for r in rows:
        bound *= sum(abs(v) for v in r)
    return bound < LIMIT


cdef int64_t _ryser(uint64_t* a, int n):
    # unsigned so that intermediate overflow wraps instead of being undefined
    cdef uint64_t* sums = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t total = 0, prod
    cdef uint64_t k, subset = 0, top = (<uint64_t>1) << n
    cdef int i, j, size = 0
    for i in range(n):
        sums[i] = 0
    k = 1
    while k < top:
        j = 0
        while not ((k >> j) & 1):
            j += 1
        subset ^= (<uint64_t>1) << j
        if (subset >> j) & 1:
            size += 1
            for i in range(n):
                sums[i] += a[i * n + j]
        else:
            size -= 1
            for i in range(n):
                sums[i] -= a[i * n + j]
        prod = 1
        for i in range(n):
            prod *= sums[i]
            if prod == 0:
                break
        if (n - size) & 1:
            total -= prod
        else:
            total += prod
        k += 1
    free(sums)
    return <int64_t>total


def permanent_int(rows):
    n = len(rows)
    if n == 0:
        return 1
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    if n > 62 or not _fits_int64(rows):
        return _kernels_py.permanent_int(rows)
    cdef uint64_t* a = <uint64_t*>malloc(n * n * sizeof(uint64_t))
    cdef int i, j
    for i in range(n):
        for j in range(n):
            a[i * n + j] = <uint64_t>(<int64_t>rows[i][j])
    try:
        return _ryser(a, n)
    finally:
        free(a)


cdef class _Search:
    cdef int n
    cdef int* cand
    cdef int* ncand
    cdef int* assigned
    cdef uint64_t used
    cdef long long count
    cdef object sink

    def __cinit__(self, candidates, sink):
        self.n = len(candidates)
        self.cand = <int*>malloc(max(1, self.n * self.n) * sizeof(int))
        self.ncand = <int*>malloc(max(1, self.n) * sizeof(int))
        self.assigned = <int*>malloc(max(1, self.n) * sizeof(int))
        cdef int x, t
        for x in range(self.n):
            row = candidates[x]
            self.ncand[x] = len(row)
            for t in range(len(row)):
                self.cand[x * self.n + t] = row[t]
            self.assigned[x] = -1
        self.used = 0
        self.count = 0
        self.sink = sink

    def __dealloc__(self):
        free(self.cand)
        free(self.ncand)
        free(self.assigned)

    cdef void rec(self, int depth):
        cdef int x, t, y, best = -1, best_free = 1 << 30, nfree
        if depth == self.n:
            self.count += 1
            if self.sink is not None:
                self.sink.append(tuple([self.assigned[x] for x in range(self.n)]))
            return
        for x in range(self.n):
            if self.assigned[x] != -1:
                continue
            nfree = 0
            for t in range(self.ncand[x]):
                if not ((self.used >> self.cand[x * self.n + t]) & 1):
                    nfree += 1
            if nfree < best_free:
                best, best_free = x, nfree
                if nfree == 0:
                    return
        for t in range(self.ncand[best]):
            y = self.cand[best * self.n + t]
            if (self.used >> y) & 1:
                continue
            self.assigned[best] = y
            self.used |= (<uint64_t>1) << y
            self.rec(depth + 1)
            self.used &= ~((<uint64_t>1) << y)
        self.assigned[best] = -1


def directed_pms(candidates):
    if len(candidates) > 64:
        return _kernels_py.directed_pms(candidates)
    found = []
    s = _Search(candidates, found)
    s.rec(0)
    found.sort()
    return found


def count_directed_pms(candidates):
    if len(candidates) > 64:
        return _kernels_py.count_directed_pms(candidates)
    s = _Search(candidates, None)
    s.rec(0)
    return s.count
