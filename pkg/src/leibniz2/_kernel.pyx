# cython: language_level=3, boundscheck=False, wraparound=False
"""Integer Gauss-Jordan elimination (compiled)."""
from math import gcd


cdef list _primitive(list row):
    cdef object g = 0
    cdef object v
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def rref_int(rows, Py_ssize_t ncols):
    cdef list work = [list(src) for src in rows]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t prow = 0, c, r, k, sel
    cdef list piv, row, out
    cdef object p, a, g, s, t
    for c in range(ncols):
        if prow == nrows:
            break
        sel = -1
        for r in range(prow, nrows):
            if (<list>work[r])[c]:
                sel = r
                break
        if sel < 0:
            continue
        work[prow], work[sel] = work[sel], work[prow]
        piv = work[prow]
        if piv[c] < 0:
            piv = [-v for v in piv]
        piv = _primitive(piv)
        work[prow] = piv
        p = piv[c]
        for r in range(nrows):
            if r == prow:
                continue
            row = work[r]
            a = row[c]
            if not a:
                continue
            g = gcd(p, a)
            s = p // g
            t = a // g
            out = [None] * ncols
            for k in range(ncols):
                out[k] = s * row[k] - t * piv[k]
            work[r] = _primitive(out)
        pivots.append(c)
        prow += 1
    return work, pivots
