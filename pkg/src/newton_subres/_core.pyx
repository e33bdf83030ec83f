# cython: boundscheck=False, wraparound=False
"""Compiled kernels. Entries stay Python objects (arbitrary precision),
only the loop control is native."""


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, p
    cdef int sign = 1
    cdef list a, rk, ri
    cdef object akk, aik, prev
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n - 1):
        if (<list>a[k])[k] == 0:
            for p in range(k + 1, n):
                if (<list>a[p])[k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = <list>a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = <list>a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * (<list>a[n - 1])[n - 1]


def matmul(a, b):
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t cols, j, k
    cdef list out, acc, row
    cdef object s, x
    if not a:
        return []
    cols = len(b[0]) if inner else 0
    out = []
    for row in a:
        acc = []
        for j in range(cols):
            s = 0
            for k in range(inner):
                x = row[k]
                if x:
                    s += x * (<list>b[k])[j]
            acc.append(s)
        out.append(acc)
    return out
