"""Pure-Python versions of the integer kernels (fallback when the compiled
extension is not built).  Signatures match ``_kernels.pyx`` exactly."""


def first_violation(n, c):
    """First basis triple (0-based, lexicographic) with nonzero Zinbiel defect.

    ``c`` is the flat integer tensor ``c[(i*n + j)*n + k]`` of a table scaled
    to integer structure constants.  Returns ``(i, j, k)`` or ``None``.
    """
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            base = (i * n + j) * n
            rows[i][j] = [(k, c[base + k]) for k in range(n) if c[base + k]]
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rij = ri[j]
            for k in range(n):
                acc = {}
                for p, v in rij:
                    for m, w in rows[p][k]:
                        acc[m] = acc.get(m, 0) + v * w
                for p, v in rows[j][k]:
                    for m, w in ri[p]:
                        acc[m] = acc.get(m, 0) - v * w
                for p, v in rows[k][j]:
                    for m, w in ri[p]:
                        acc[m] = acc.get(m, 0) - v * w
                for val in acc.values():
                    if val:
                        return (i, j, k)
    return None


def bareiss_echelon(rows, ncols):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(echelon_rows, pivot_columns)``; the echelon rows are integer
    lists and only the first ``len(pivot_columns)`` rows are nonzero.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        sel = -1
        for i in range(r, nrows):
            if m[i][col]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            m[r], m[sel] = m[sel], m[r]
        piv_row = m[r]
        p = piv_row[col]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j] - f * piv_row[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[col] = 0
        prev = p
        pivots.append(col)
        r += 1
    return m[:r], pivots
