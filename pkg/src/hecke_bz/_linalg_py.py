"""Pure-Python exact linear-algebra kernels.

Matrices are lists of row lists whose entries are exact field scalars
(Fraction, QRational, PKPoly).  The integer 0 is a valid zero entry: every
scalar type coerces ints on the left and right, and truth-testing is the
zero test.  These two loops dominate every exact computation in the
package, which is why a compiled twin of this module exists
(`hecke_bz._linalg_cy`); keep the two implementations in lockstep.
"""

__all__ = ["mat_mul", "rref"]


def mat_mul(A, B):
    """Dense product A*B, skipping zero entries (seminormal and Hecke
    generator matrices are very sparse, so the skip is load-bearing)."""
    n = len(A)
    inner = len(B)
    m = len(B[0]) if inner else 0
    out = [[0] * m for _ in range(n)]
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
    """Reduced row echelon form with leftmost-pivot tie-breaking.

    Returns (R, pivots) where pivots lists the pivot column of each
    nonzero row of R in order.  A is not modified.
    """
    R = [list(row) for row in A]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
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
        lead = R[r][c]
        if lead != 1:
            Rr = R[r]
            for j in range(c, ncols):
                if Rr[j]:
                    Rr[j] = Rr[j] / lead
        Rr = R[r]
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
