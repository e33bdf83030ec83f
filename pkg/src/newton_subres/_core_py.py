"""Pure-Python kernels; the reference behaviour for the compiled ``_core``."""


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination.

    ``rows`` is a list of lists of Python ints and is not modified.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def matmul(a, b):
    """Product of two matrices given as lists of row lists (any ring elements)."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for row in a:
        acc = []
        for j in range(cols):
            s = 0
            for k in range(inner):
                x = row[k]
                if x:
                    s += x * b[k][j]
            acc.append(s)
        out.append(acc)
    return out
