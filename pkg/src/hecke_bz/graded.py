"""Modules over the degenerate (graded) algebra: the symmetric group
together with commuting first-order generators E_1..E_n obeying

    E_k t_j - t_j E_{s_j(k)} = p (delta_{k,j} - delta_{k,j+1}) I,

with t_j the adjacent transpositions and p a formal parameter.  Scalars
are polynomials in (p, kappa) in the exact mode and floats at pinned
(p0, kappa0) in the numeric one.

The basic family is the Speh module on a partition: the seminormal
symmetric-group module with E_k acting as kappa - p * (content of the
letter k), diagonal in the tableau basis.  The commutation relation
follows from the recursion E_{k+1} = t_k E_k t_k - p t_k, which also
pins every E_k once E_1 = kappa holds; `decompose_as_speh` exploits
exactly that to certify a module as a sum of Spehs by its symmetric
group content alone, with a class-trace cross-check on the E traces.

The derivative here is the tail sign-isotypic part: project with the
tail sign idempotent, keep the front transpositions and the front E's.
`pieri_verify` compares its Speh decomposition with the vertical-strip
prediction.
"""

from __future__ import annotations

from .combinatorics import (
    hook_dimension,
    standard_tableaux,
    vertical_strips,
)
from .linalg import (
    Subspace,
    column_space,
    identity,
    is_zero_matrix,
    mat_add,
    mat_eq,
    mat_mul,
    mat_scale,
    mat_sub,
    zeros,
)
from .scalars import KAPPA_SYM, P_SYM, PKPoly
from .symgroup import (
    decompose_sn,
    sign_idempotent_matrix,
    specht_module,
)

__all__ = [
    "GradedModule",
    "speh_module",
    "check_graded_relations",
    "g_bz_derivative",
    "decompose_as_speh",
    "pieri_verify",
]


class GradedModule:
    """Generator matrices: gens[j-1] is the transposition t_j, jm[k-1]
    is E_k.  Exact modules carry Fraction transpositions and PKPoly E's;
    numeric ones carry floats and record (p0, kappa0) in meta."""

    __slots__ = ("n", "dim", "gens", "jm", "scalar_mode", "meta")

    def __init__(self, n, dim, gens, jm, scalar_mode="exact", meta=None):
        if len(gens) != max(n - 1, 0) or len(jm) != n:
            raise ValueError("generator count does not match the rank")
        self.n = n
        self.dim = dim
        self.gens = gens
        self.jm = jm
        self.scalar_mode = scalar_mode
        self.meta = meta or {}


def speh_module(shape, scalar_mode="exact", p0=None, kappa0=None
                ) -> GradedModule:
    """The Speh module on a partition: seminormal transposition action,
    E_k = kappa - p * content(letter k) diagonally in the tableau basis.
    Numeric mode pins (p0, kappa0) and stores float matrices."""
    S = specht_module(shape)
    n, dim = S.n, S.dim
    contents = [[t.content(k) for t in S.tableaux] for k in range(1, n + 1)]
    if scalar_mode == "exact":
        gens = S.gens
        jm = []
        for k in range(n):
            mat = zeros(dim, dim)
            for r in range(dim):
                mat[r][r] = KAPPA_SYM - P_SYM * contents[k][r]
            jm.append(mat)
        meta = {"shape": tuple(shape)}
    elif scalar_mode == "numeric":
        if p0 is None or kappa0 is None:
            raise ValueError("numeric mode needs p0 and kappa0")
        p0, kappa0 = float(p0), float(kappa0)
        gens = [[[float(v) for v in row] for row in g] for g in S.gens]
        jm = []
        for k in range(n):
            mat = [[0.0] * dim for _ in range(dim)]
            for r in range(dim):
                mat[r][r] = kappa0 - p0 * contents[k][r]
            jm.append(mat)
        meta = {"shape": tuple(shape), "p0": p0, "kappa0": kappa0}
    else:
        raise ValueError(f"unknown scalar mode {scalar_mode!r}")
    return GradedModule(n, dim, gens, jm, scalar_mode=scalar_mode, meta=meta)


def _graded_residuals(M: GradedModule) -> dict[str, list]:
    n, dim = M.n, M.dim
    ident = identity(dim)
    p = P_SYM if M.scalar_mode == "exact" else float(M.meta["p0"])
    res: dict[str, list] = {
        "square": [], "braid": [], "distant_commute": [],
        "jm_commute": [], "cross_far": [], "cross_near": [],
    }
    for j in range(n - 1):
        g = M.gens[j]
        res["square"].append(mat_sub(mat_mul(g, g), ident))
    for j in range(n - 2):
        a, b = M.gens[j], M.gens[j + 1]
        res["braid"].append(
            mat_sub(mat_mul(a, mat_mul(b, a)), mat_mul(b, mat_mul(a, b))))
    for j in range(n - 1):
        for k in range(j + 2, n - 1):
            res["distant_commute"].append(
                mat_sub(mat_mul(M.gens[j], M.gens[k]),
                        mat_mul(M.gens[k], M.gens[j])))
    for k in range(n):
        for l in range(k + 1, n):
            res["jm_commute"].append(
                mat_sub(mat_mul(M.jm[k], M.jm[l]),
                        mat_mul(M.jm[l], M.jm[k])))
    for j in range(1, n):
        g = M.gens[j - 1]
        for k in range(1, n + 1):
            if k not in (j, j + 1):
                res["cross_far"].append(
                    mat_sub(mat_mul(M.jm[k - 1], g),
                            mat_mul(g, M.jm[k - 1])))
        lhs = mat_sub(mat_mul(M.jm[j - 1], g), mat_mul(g, M.jm[j]))
        res["cross_near"].append(mat_sub(lhs, mat_scale(p, ident)))
        lhs = mat_sub(mat_mul(M.jm[j], g), mat_mul(g, M.jm[j - 1]))
        res["cross_near"].append(mat_add(lhs, mat_scale(p, ident)))
    return res


def check_graded_relations(M: GradedModule, tol: float = 1e-8) -> dict:
    """Every defining relation of the graded algebra on M; exact modules
    must vanish identically in (p, kappa), numeric ones up to tol."""
    report: dict = {"families": {}}
    worst = 0.0
    ok = True
    for name, mats in _graded_residuals(M).items():
        if M.scalar_mode == "exact":
            bad = sum(0 if is_zero_matrix(r) else 1 for r in mats)
            report["families"][name] = {"nonzero": bad}
            ok = ok and bad == 0
        else:
            r = max((abs(v) for m in mats for row in m for v in row),
                    default=0.0)
            report["families"][name] = {"residual": r}
            worst = max(worst, r)
    if M.scalar_mode != "exact":
        ok = worst <= tol
    report["pass"] = bool(ok)
    report["worst"] = worst
    return report


def g_bz_derivative(M: GradedModule, i: int) -> GradedModule:
    """Tail sign component as a module of rank n - i: image of the tail
    sign idempotent, carrying the front transpositions and front E's
    (both commute with the tail, so the image is invariant)."""
    n = M.n
    if not 0 <= i <= n:
        raise ValueError(f"derivative order {i} out of range")
    if i == 0:
        return M
    m = n - i
    if M.scalar_mode == "exact":
        proj = sign_idempotent_matrix(M.gens, n, i)
        B, piv = column_space(proj)
        V = Subspace(B, piv)
        gens = [V.restrict(M.gens[j]) for j in range(m - 1)]
        jm = [V.restrict(M.jm[k]) for k in range(m)]
        meta = {"parent": M, "tail": i, "subspace": V}
        return GradedModule(m, V.dim, gens, jm, meta=meta)
    return _g_bz_numeric(M, i)


def _g_bz_numeric(M: GradedModule, i: int, tol: float = 1e-8):
    import numpy as np

    n, d = M.n, M.dim
    m = n - i
    gens_np = [np.array(g, dtype=float) for g in M.gens]
    proj = np.eye(d)
    for k in range(2, i + 1):
        b = n - k + 1
        acc = np.eye(d)
        term = np.eye(d)
        sign = 1
        for t in range(1, k):
            term = gens_np[b + t - 2] @ term
            sign = -sign
            acc = acc + sign * term
        proj = (acc / k) @ proj
    u, s, _ = np.linalg.svd(proj)
    scale = max(float(s[0]) if len(s) else 1.0, 1.0)
    rank = int(sum(1 for v in s if v > tol * scale))
    B = u[:, :rank]

    def restrict(A):
        A = np.array(A, dtype=float)
        X = B.T @ (A @ B)
        resid = float(np.abs(A @ B - B @ X).max()) if rank else 0.0
        if resid > tol * max(1.0, float(np.abs(A).max())):
            raise ArithmeticError(
                f"subspace is not numerically invariant ({resid:.3e})")
        return X.tolist()

    gens = [restrict(M.gens[j]) for j in range(m - 1)]
    jm = [restrict(M.jm[k]) for k in range(m)]
    meta = dict(M.meta)
    meta.update({"parent": M, "tail": i, "subspace_basis": B.tolist()})
    return GradedModule(m, rank, gens, jm, scalar_mode="numeric", meta=meta)


def _content_trace(shape, k: int) -> int:
    """Sum over standard tableaux of the content of the letter k."""
    return sum(t.content(k) for t in standard_tableaux(shape))


def decompose_as_speh(M: GradedModule) -> dict:
    """Certify an exact module as a direct sum of Speh modules and return
    the multiplicities.

    Route one: symmetric-group class traces give candidate
    multiplicities.  Route two: E_1 = kappa and the recursion
    E_{k+1} = t_k E_k t_k - p t_k pin the whole E action to the Speh one,
    and the E traces are cross-checked against tableau content sums.
    """
    if M.scalar_mode != "exact":
        raise ValueError("decomposition runs on exact modules")
    m, dim = M.n, M.dim
    report: dict = {"multiplicities": {}, "pass": True}
    if dim == 0:
        return report
    mults = decompose_sn(M.gens, dim=dim, m=m)
    report["multiplicities"] = mults
    if m == 0:
        return report
    e1_ok = all(
        M.jm[0][r][c] == (KAPPA_SYM if r == c else 0)
        for r in range(dim) for c in range(dim))
    rec_ok = True
    for k in range(m - 1):
        g = M.gens[k]
        want = mat_sub(mat_mul(g, mat_mul(M.jm[k], g)), mat_scale(P_SYM, g))
        rec_ok = rec_ok and mat_eq(M.jm[k + 1], want)
    trace_ok = True
    for k in range(1, m + 1):
        got = PKPoly(0)
        for r in range(dim):
            got = got + M.jm[k - 1][r][r]
        want = PKPoly(0)
        for mu, c in mults.items():
            want = want + c * (KAPPA_SYM * hook_dimension(mu)
                               - P_SYM * _content_trace(mu, k))
        trace_ok = trace_ok and got == want
    report["jm_start"] = e1_ok
    report["jm_recursion"] = rec_ok
    report["trace_match"] = trace_ok
    report["pass"] = bool(e1_ok and rec_ok and trace_ok)
    return report


def pieri_verify(shape, i: int) -> dict:
    """Speh decomposition of the i-th derivative of a Speh module against
    the vertical-strip prediction; exact in (p, kappa)."""
    shape = tuple(shape)
    M = speh_module(shape)
    D = g_bz_derivative(M, i)
    predicted = sorted(vertical_strips(shape, i), reverse=True)
    rep = decompose_as_speh(D)
    computed = sorted(
        (mu for mu, c in rep["multiplicities"].items() for _ in range(c)),
        reverse=True)
    ok = rep["pass"] and computed == predicted
    return {
        "shape": list(shape),
        "i": i,
        "dim": D.dim,
        "predicted": [list(mu) for mu in predicted],
        "computed": [list(mu) for mu in computed],
        "pass": bool(ok),
    }
