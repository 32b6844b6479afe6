"""Pure-Python integer elimination kernel.

This is the reference twin of ``_echelon_c.pyx``. Both run the same
fraction-free Gauss-Jordan sweep with identical pivot and normalisation
rules, so their outputs agree bit for bit.
"""

from math import gcd


def _normalize(row, lead):
    g = gcd(*row)
    if g > 1:
        for j in range(len(row)):
            row[j] //= g
    if row[lead] < 0:
        for j in range(len(row)):
            row[j] = -row[j]


def echelon(rows, ncols, reduce=True):
    """Row-reduce an integer matrix in place.

    ``rows`` is a list of lists of ints. Returns the list of pivot columns;
    rows ``0..rank-1`` of ``rows`` then hold the echelon form. With
    ``reduce`` every pivot column is cleared above as well as below, giving
    a scaled reduced row echelon form; each row is divided by its content
    and carries a positive pivot.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                a = v if v > 0 else -v
                if best < 0 or a < best_abs:
                    best, best_abs = i, a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        _normalize(prow, c)
        p = prow[c]
        start = 0 if reduce else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if not a:
                continue
            g = gcd(p, a)
            pa = p // g
            aa = a // g
            lo = 0 if i < r else c
            if pa == 1:
                for j in range(lo, ncols):
                    row[j] = row[j] - aa * prow[j]
            else:
                for j in range(lo, ncols):
                    row[j] = pa * row[j] - aa * prow[j]
            if i < r:
                _normalize(row, pivots[i])
            else:
                g = gcd(*row)
                if g > 1:
                    for j in range(ncols):
                        row[j] //= g
        pivots.append(c)
        r += 1
    return pivots
