# cython: language_level=3, boundscheck=False, wraparound=False
"""Fraction-free integer elimination kernels, compiled twin of _bareiss_py.

Same algorithm and signatures; coefficients stay arbitrary-precision Python
ints, Cython removes the interpreter overhead of the inner loops.
"""


def echelon_int(rows, Py_ssize_t ncols):
    """Row-echelon form. Returns (matrix, pivot_columns, sign)."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef list piv_cols = []
    cdef int sign = 1
    cdef Py_ssize_t r = 0, c, i, j, p
    cdef list row_r, row_i
    prev = 1
    for c in range(ncols):
        p = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        row_r = <list>m[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            mic = row_i[c]
            if mic:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row_i[j]:
                        row_i[j] = (piv * row_i[j]) // prev
            row_i[c] = 0
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m, piv_cols, sign


def rank_int(rows, ncols):
    """Rank of an integer matrix."""
    return len(echelon_int(rows, ncols)[1])


def det_int(rows):
    """Determinant of a square integer matrix (the last Bareiss pivot)."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    for r in rows:
        if len(r) != n:
            raise ValueError("determinant requires a square matrix")
    m, piv_cols, sign = echelon_int(rows, n)
    if len(piv_cols) < n:
        return 0
    return sign * m[n - 1][n - 1]
