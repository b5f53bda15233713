# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Boolean closure and brute-force chain counting."""
import numpy as np

cimport numpy as cnp

cnp.import_array()


def bool_product(const unsigned char[:, ::1] a, const unsigned char[:, ::1] b):
    """Boolean (OR of ANDs) matrix product."""
    cdef Py_ssize_t n = a.shape[0], m = a.shape[1], p = b.shape[1]
    cdef Py_ssize_t i, k, j
    if b.shape[0] != m:
        raise ValueError("shape mismatch")
    out = np.zeros((n, p), dtype=np.uint8)
    cdef unsigned char[:, ::1] o = out
    for i in range(n):
        for k in range(m):
            if a[i, k]:
                for j in range(p):
                    o[i, j] |= b[k, j]
    return out


def bool_closure(const unsigned char[:, ::1] a):
    """``I + A + A^2 + ...`` over the Boolean semiring; stops when a power vanishes.

    Raises ``ValueError`` if ``A`` is not nilpotent.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, step
    if a.shape[1] != n:
        raise ValueError("square matrix expected")
    result = np.eye(n, dtype=np.uint8)
    power = np.ascontiguousarray(a, dtype=np.uint8)
    for step in range(n + 1):
        if not power.any():
            return result
        np.bitwise_or(result, power, out=result)
        power = bool_product(power, a)
    raise ValueError("matrix is not nilpotent")


def count_chain_tuples(const unsigned char[:, ::1] zeta, starts, stops):
    """Count tuples ``(x_0, ..., x_m)`` with ``x_i`` in ``[starts[i], stops[i])``
    and ``zeta[x_i, x_{i+1}] == 1`` for every consecutive pair.

    Every tuple of the level product is visited.
    """
    cdef Py_ssize_t m = len(starts)
    if m != len(stops):
        raise ValueError("starts/stops length mismatch")
    if m == 0:
        return 1
    cdef cnp.int64_t[::1] lo = np.asarray(starts, dtype=np.int64)
    cdef cnp.int64_t[::1] hi = np.asarray(stops, dtype=np.int64)
    cdef cnp.int64_t[::1] cur = np.asarray(starts, dtype=np.int64).copy()
    cdef Py_ssize_t depth, i
    cdef unsigned long long count = 0
    for i in range(m):
        if hi[i] <= lo[i]:
            return 0
    # odometer over the product; depth is the deepest level whose prefix is valid
    depth = 0
    while True:
        if depth == m - 1:
            for i in range(lo[depth], hi[depth]):
                if depth == 0 or zeta[cur[depth - 1], i]:
                    count += 1
            depth -= 1
            if depth < 0:
                break
            cur[depth] += 1
        elif cur[depth] < hi[depth]:
            if depth == 0 or zeta[cur[depth - 1], cur[depth]]:
                depth += 1
                cur[depth] = lo[depth]
            else:
                cur[depth] += 1
        else:
            depth -= 1
            if depth < 0:
                break
            cur[depth] += 1
    return count
