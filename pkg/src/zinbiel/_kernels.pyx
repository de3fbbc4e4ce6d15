# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; see ``_kernels_py`` for the reference versions."""


from libc.stdlib cimport calloc, free


def first_violation(int n, const long long[:] c):
    cdef Py_ssize_t i, j, k, m, p, base_ij, base_jk, base_kj
    cdef long long a, b
    cdef long long *acc = <long long *> calloc(n if n > 0 else 1, sizeof(long long))
    if acc == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                base_ij = (i * n + j) * n
                for k in range(n):
                    base_jk = (j * n + k) * n
                    base_kj = (k * n + j) * n
                    for m in range(n):
                        acc[m] = 0
                    for p in range(n):
                        # (e_i e_j) e_k
                        a = c[base_ij + p]
                        if a != 0:
                            for m in range(n):
                                acc[m] += a * c[(p * n + k) * n + m]
                        # e_i (e_j e_k + e_k e_j)
                        b = c[base_jk + p] + c[base_kj + p]
                        if b != 0:
                            for m in range(n):
                                acc[m] -= b * c[(i * n + p) * n + m]
                    for m in range(n):
                        if acc[m] != 0:
                            return (i, j, k)
        return None
    finally:
        free(acc)


def bareiss_echelon(rows, Py_ssize_t ncols):
    cdef list m = [list(row_in) for row_in in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, col, i, j, sel
    cdef list pivots = []
    cdef list piv_row, row
    cdef object prev = 1, p, f
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
