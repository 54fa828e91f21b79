"""Exact dense linear algebra over any of the package's scalar fields.

The two hot kernels (`mat_mul`, `rref`) come from a compiled Cython core
when it was built, with a pure-Python fallback otherwise; everything else
here is derived from them.  `BACKEND` records which one is active, and the
environment variable HECKEBZ_LINALG=py forces the fallback (used by the
benchmark and by debugging sessions).

Subspaces are always carried as a `Subspace`: a dim x k basis matrix in
reduced column echelon form together with its pivot rows, so that
B[pivot_rows, :] is the k x k identity.  Restricting an operator that
preserves the subspace is then a sparse application plus a row selection,
never a dense solve.
"""

from __future__ import annotations

import os

__all__ = [
    "BACKEND",
    "mat_mul",
    "rref",
    "identity",
    "zeros",
    "transpose",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_eq",
    "is_zero_matrix",
    "nullspace",
    "kernel_subspace",
    "column_space",
    "Subspace",
    "full_space",
    "intersect_kernels",
    "mat_inverse",
    "restrict_operator",
]

if os.environ.get("HECKEBZ_LINALG", "").lower() in ("py", "python"):
    from . import _linalg_py as _backend
else:
    try:
        from . import _linalg_cy as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _linalg_py as _backend

BACKEND = _backend.__name__.rsplit("_", 1)[-1]  # "cy" or "py"
mat_mul = _backend.mat_mul
rref = _backend.rref


def identity(n: int) -> list[list]:
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = 1
    return out


def zeros(nrows: int, ncols: int) -> list[list]:
    return [[0] * ncols for _ in range(nrows)]


def transpose(A: list[list]) -> list[list]:
    return [list(col) for col in zip(*A)] if A else []

def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_eq(A, B) -> bool:
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if a != b:
                return False
    return True


def is_zero_matrix(A) -> bool:
    return all(not a for row in A for a in row)


def kernel_subspace(A: list[list], ncols: int | None = None) -> "Subspace":
    """{v : A v = 0} as a Subspace (canonical rref kernel basis; the unit
    rows are the free columns of A, in increasing order)."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    R, pivots = rref(A)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = zeros(ncols, len(free))
    for j, fc in enumerate(free):
        basis[fc][j] = 1
        for i, pc in enumerate(pivots):
            v = R[i][fc]
            if v:
                basis[pc][j] = -v
    return Subspace(basis, free)


def nullspace(A: list[list]) -> list[list]:
    """Basis of {v : A v = 0} as a (ncols x k) matrix."""
    return kernel_subspace(A).basis


def column_space(A: list[list]) -> tuple[list[list], list[int]]:
    """Basis of the column space of A, as (B, pivot_rows) with B a
    (nrows x rank) matrix in reduced column echelon form and
    B[pivot_rows, :] the identity.  Leftmost-pivot tie-breaking."""
    R, pivots = rref(transpose(A))
    rank = len(pivots)
    B = [[R[i][r] for i in range(rank)] for r in range(len(A))]
    return B, list(pivots)


class Subspace:
    """An embedded subspace: basis matrix in reduced column echelon form.

    dim is the ambient dimension, k the subspace dimension.  The pivot
    rows identify the coordinates in which the basis is the identity, so
    `project` (read off subspace coordinates of a vector known to lie in
    the subspace) is a row selection.
    """

    __slots__ = ("basis", "pivot_rows", "ambient_dim", "dim")

    def __init__(self, basis: list[list], pivot_rows: list[int]):
        self.basis = basis
        self.pivot_rows = pivot_rows
        self.ambient_dim = len(basis)
        self.dim = len(pivot_rows)

    def restrict(self, M: list[list], check: bool = True) -> list[list]:
        """Matrix of the operator M on the subspace, assuming (and, when
        check is set, verifying) that M maps the subspace into itself."""
        return restrict_operator(M, self, check=check)

    def coords(self, image: list[list], check: bool = True) -> list[list]:
        """Subspace coordinates of ambient column vectors lying in the
        subspace: X with basis*X = image."""
        X = [image[r] for r in self.pivot_rows]
        if check and not mat_eq(mat_mul(self.basis, X), image):
            raise ArithmeticError("vectors do not lie in the subspace")
        return X


def full_space(n: int) -> Subspace:
    return Subspace(identity(n), list(range(n)))


def intersect_kernels(mats: list[list[list]], dim: int) -> Subspace:
    """Subspace {v : M v = 0 for all M}, returned in canonical form."""
    stacked = [row for M in mats for row in M]
    if not stacked:
        return full_space(dim)
    return kernel_subspace(stacked, ncols=dim)


def mat_inverse(A: list[list]) -> list[list]:
    """Exact inverse by row reduction of the augmented matrix."""
    n = len(A)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if list(pivots) != list(range(n)):
        raise ArithmeticError("matrix is singular")
    return [row[n:] for row in R[:n]]


def restrict_operator(M: list[list], V: Subspace, check: bool = True) -> list[list]:
    image = mat_mul(M, V.basis)
    X = [image[r] for r in V.pivot_rows]
    if check and not mat_eq(mat_mul(V.basis, X), image):
        raise ArithmeticError("subspace is not invariant under the operator")
    return X
