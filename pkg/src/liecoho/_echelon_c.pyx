# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer elimination kernel (int64 with overflow detection).

Mirrors ``_echelon_py.echelon`` step for step. Any intermediate that does
not fit in a signed 64-bit integer raises ``OverflowError``; the caller
then reruns the pure-Python kernel on the original data.
"""

from libc.stdint cimport int64_t, INT64_MIN

cdef extern from *:
    """
    #include <stdint.h>
    static inline int lc_mul(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lc_sub(int64_t a, int64_t b, int64_t *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint lc_mul(int64_t a, int64_t b, int64_t *r) nogil
    bint lc_sub(int64_t a, int64_t b, int64_t *r) nogil


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t _row_content(int64_t[::1] m, Py_ssize_t base, Py_ssize_t ncols) nogil:
    cdef int64_t g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if m[base + j]:
            g = _gcd(g, m[base + j])
            if g == 1:
                return 1
    return g


cdef void _divide_row(int64_t[::1] m, Py_ssize_t base, Py_ssize_t ncols, int64_t g) nogil:
    cdef Py_ssize_t j
    for j in range(ncols):
        m[base + j] //= g


cdef void _negate_row(int64_t[::1] m, Py_ssize_t base, Py_ssize_t ncols) nogil:
    cdef Py_ssize_t j
    for j in range(ncols):
        m[base + j] = -m[base + j]


cdef void _swap_rows(int64_t[::1] m, Py_ssize_t a, Py_ssize_t b, Py_ssize_t ncols) nogil:
    cdef Py_ssize_t j
    cdef int64_t t
    for j in range(ncols):
        t = m[a + j]
        m[a + j] = m[b + j]
        m[b + j] = t


def echelon(int64_t[::1] m, Py_ssize_t nrows, Py_ssize_t ncols, bint reduce=True):
    """Row-reduce the row-major ``nrows x ncols`` buffer ``m`` in place.

    Returns the pivot columns. Raises OverflowError on int64 overflow,
    leaving ``m`` in an unspecified state.
    """
    cdef Py_ssize_t r = 0, c, i, j, best, lo, start, pbase, rbase
    cdef int64_t v, a, best_abs, p, g, pa, aa, x, y
    cdef list pivots = []
    if m.shape[0] != nrows * ncols:
        raise ValueError("buffer size does not match shape")
    for i in range(nrows * ncols):
        if m[i] == INT64_MIN:
            raise OverflowError("int64 minimum is not supported")
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = m[i * ncols + c]
            if v:
                a = v if v > 0 else -v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        pbase = r * ncols
        if best != r:
            _swap_rows(m, pbase, best * ncols, ncols)
        g = _row_content(m, pbase, ncols)
        if g > 1:
            _divide_row(m, pbase, ncols, g)
        if m[pbase + c] < 0:
            _negate_row(m, pbase, ncols)
        p = m[pbase + c]
        start = 0 if reduce else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            rbase = i * ncols
            a = m[rbase + c]
            if not a:
                continue
            g = _gcd(p, a)
            pa = p // g
            aa = a // g
            lo = 0 if i < r else c
            for j in range(lo, ncols):
                if lc_mul(aa, m[pbase + j], &y):
                    raise OverflowError("int64 overflow in elimination")
                if pa == 1:
                    x = m[rbase + j]
                elif lc_mul(pa, m[rbase + j], &x):
                    raise OverflowError("int64 overflow in elimination")
                if lc_sub(x, y, &x) or x == INT64_MIN:
                    raise OverflowError("int64 overflow in elimination")
                m[rbase + j] = x
            g = _row_content(m, rbase, ncols)
            if g > 1:
                _divide_row(m, rbase, ncols, g)
            if i < r and m[rbase + pivots[i]] < 0:
                _negate_row(m, rbase, ncols)
        pivots.append(c)
        r += 1
    return pivots
