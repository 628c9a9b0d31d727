"""Pure-Python elimination kernel.

Same contract as the compiled ``_kernels.int_rank``: rank of an integer
matrix given as a list of equal-length rows.  Rows are combined without
division (a*r_i - b*r_p) and then divided by their content, so entries
stay small on the structured systems built in ``realize``.
"""
from math import gcd


def _content(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    return g


def int_rank(rows, ncols):
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        prow = m[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[col]
            if not a:
                continue
            g = gcd(a, p)
            pa, aa = p // g, a // g
            for j in range(col, ncols):
                row[j] = pa * row[j] - aa * prow[j]
            c = _content(row)
            if c > 1:
                for j in range(col, ncols):
                    row[j] //= c
        rank += 1
        if rank == nrows:
            break
    return rank
