# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel on int64 with overflow detection.

Raises OverflowError when an entry leaves the int64 range; the caller
then reruns the pure-Python kernel on arbitrary-precision integers.
"""
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static int nl_mul_ovf(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static int nl_sub_ovf(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    """
    int nl_mul_ovf(long long a, long long b, long long *r) nogil
    int nl_sub_ovf(long long a, long long b, long long *r) nogil


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef int _eliminate(long long *m, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t *out) nogil:
    cdef Py_ssize_t rank = 0, col, r, i, j, piv
    cdef long long p, a, g, pa, aa, x, y, c
    cdef long long *prow
    cdef long long *row
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                x = m[piv * ncols + j]
                m[piv * ncols + j] = m[rank * ncols + j]
                m[rank * ncols + j] = x
        prow = m + rank * ncols
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = m + i * ncols
            a = row[col]
            if a == 0:
                continue
            g = _gcd(a, p)
            pa = p // g
            aa = a // g
            c = 0
            for j in range(col, ncols):
                if nl_mul_ovf(pa, row[j], &x):
                    return 1
                if nl_mul_ovf(aa, prow[j], &y):
                    return 1
                if nl_sub_ovf(x, y, &row[j]):
                    return 1
                if row[j] != 0 and c != 1:
                    c = _gcd(c, row[j])
            if c > 1:
                for j in range(col, ncols):
                    row[j] = row[j] // c
        rank += 1
        if rank == nrows:
            break
    out[0] = rank
    return 0


def int_rank(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, rank = 0
    cdef int status
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                m[i * ncols + j] = row[j]
        with nogil:
            status = _eliminate(m, nrows, ncols, &rank)
    finally:
        free(m)
    if status:
        raise OverflowError("int64 overflow during elimination")
    return rank
