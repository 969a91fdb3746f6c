"""Integer Gauss-Jordan elimination, pure Python twin of _kernel.pyx."""
from math import gcd


def _primitive(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def rref_int(rows, ncols):
    """Reduce integer rows in place order; returns (rows, pivots).

    Rows come back primitive with a positive pivot, so dividing each
    pivot row by its pivot entry gives the reduced row echelon form.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    prow = 0
    for c in range(ncols):
        if prow == nrows:
            break
        sel = -1
        for r in range(prow, nrows):
            if rows[r][c]:
                sel = r
                break
        if sel < 0:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        piv = rows[prow]
        if piv[c] < 0:
            piv = [-v for v in piv]
        piv = _primitive(piv)
        rows[prow] = piv
        p = piv[c]
        for r in range(nrows):
            if r == prow:
                continue
            row = rows[r]
            a = row[c]
            if not a:
                continue
            g = gcd(p, a)
            s, t = p // g, a // g
            rows[r] = _primitive([s * row[k] - t * piv[k] for k in range(ncols)])
        pivots.append(c)
        prow += 1
    return rows, pivots
