# cython: language_level=3
"""Compiled twin of hecke_bz._linalg_py.

Same algorithms, same semantics, C-typed loop indices.  The scalars are
still Python objects (exact Fractions, rational functions), so the win is
interpreter overhead on the inner loops, not the arithmetic itself; the
benchmark in benchmarks/bench_linalg.py measures the actual ratio.
Keep this file in lockstep with _linalg_py.py.
"""

__all__ = ["mat_mul", "rref"]


def mat_mul(A, B):
    """Dense product A*B with zero skipping; see _linalg_py.mat_mul."""
    cdef Py_ssize_t n = len(A)
    cdef Py_ssize_t inner = len(B)
    cdef Py_ssize_t m = len(B[0]) if inner else 0
    cdef Py_ssize_t i, j, k
    cdef list out = [[0] * m for _ in range(n)]
    cdef list Ai, Oi, Bk
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(m):
                    b = Bk[j]
                    if b:
                        Oi[j] = Oi[j] + a * b
    return out


def rref(A):
    """Reduced row echelon form; see _linalg_py.rref."""
    cdef list R = [list(row) for row in A]
    cdef Py_ssize_t nrows = len(R)
    cdef Py_ssize_t ncols = len(R[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j
    cdef Py_ssize_t pr
    cdef list Rr, Ri
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if R[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            R[r], R[pr] = R[pr], R[r]
        Rr = R[r]
        lead = Rr[c]
        if lead != 1:
            for j in range(c, ncols):
                if Rr[j]:
                    Rr[j] = Rr[j] / lead
        for i in range(nrows):
            if i != r:
                f = R[i][c]
                if f:
                    Ri = R[i]
                    for j in range(c, ncols):
                        v = Rr[j]
                        if v:
                            Ri[j] = Ri[j] - f * v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots
