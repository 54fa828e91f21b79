"""Finite-dimensional modules over the affine Hecke algebra.

A module is the matrix data of the generators: T_1..T_{n-1} for the
finite part and the commuting invertible Theta_1..Theta_n for the
Bernstein torus.  Everything any construction needs to satisfy is
centralized in `verify_relations`, which checks the quadratic, braid and
commutation relations together with the specialized cross relations

    Theta_k T_j = T_j Theta_k                      (k not in {j, j+1}),
    Theta_j T_j - T_j Theta_{j+1} = (q-1) Theta_j,
    Theta_{j+1} T_j - T_j Theta_j  = -(q-1) Theta_j,

exactly in the symbolic mode and to a tolerance in the numeric one.

Constructions: principal series (free of rank n! over the finite part,
theta action through a character twisted by the rewrite rules), parabolic
induction from a pair of modules on a two-block Levi, one-dimensional
characters, and the derivative functor

    bz(M, i) = joint (-1)-eigenspace of the tail generators
               T_{n-i+1}..T_{n-1}, as a module over H_{n-i},

whose image equals the image of the tail sign projector (the projector
identity T_s S = -S gives one inclusion, S v = P(1/q) v on the eigenspace
the other).  Central blocks, the antispherical action, and the additivity
check for derivatives of induced modules live here too.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..combinatorics import (
    Permutation,
    length,
    min_coset_reps,
    reduced_word,
    sym_group,
)
from ..linalg import (
    Subspace,
    column_space,
    full_space,
    identity,
    intersect_kernels,
    is_zero_matrix,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_sub,
    rref,
    zeros,
)
from ..scalars import QRational, parse_qrational
from .elements import AffineElement, _right_rewrite, _t_product

__all__ = [
    "FinDimAffineModule",
    "verify_relations",
    "principal_series",
    "one_dimensional_module",
    "induce",
    "bz_derivative",
    "bz_dimension",
    "central_block",
    "antispherical_apply",
    "antispherical_generator",
    "leibniz_check",
    "generic_guard",
    "module_to_json",
    "module_from_json",
]

_Q = QRational.gen()
_ONE = QRational(1)


class FinDimAffineModule:
    """Generator matrices of a finite-dimensional module.

    tee[j-1] is T_j (j = 1..n-1), theta[k-1] is Theta_k (k = 1..n).
    scalar_mode is "exact" (entries in Q(q), q formal) or "numeric"
    (float entries at a fixed q0 recorded in meta["q0"]).  meta carries
    construction provenance (the character t of a principal series, the
    parent of a derivative) and is never consulted by the checks.
    """

    __slots__ = ("n", "dim", "tee", "theta", "scalar_mode", "meta",
                 "_theta_pow", "_perm_cache")

    def __init__(self, n, dim, tee, theta, scalar_mode="exact", meta=None):
        if len(tee) != max(n - 1, 0) or len(theta) != n:
            raise ValueError("generator count does not match the rank")
        self.n = n
        self.dim = dim
        self.tee = tee
        self.theta = theta
        self.scalar_mode = scalar_mode
        self.meta = meta or {}
        self._theta_pow = {}
        self._perm_cache = {}

    def perm_matrix(self, w: Permutation) -> list[list]:
        """T_w as a product of tee matrices along a reduced word."""
        got = self._perm_cache.get(w)
        if got is None:
            got = identity(self.dim)
            for a in reduced_word(w):
                got = mat_mul(got, self.tee[a - 1])
            self._perm_cache[w] = got
        return got

    def theta_weight(self, x) -> list[list]:
        """theta_x = prod Theta_k^{x_k}, inverses included."""
        x = tuple(x)
        got = self._theta_pow.get(x)
        if got is not None:
            return got
        out = identity(self.dim)
        for k, e in enumerate(x):
            if not e:
                continue
            base = self.theta[k] if e > 0 else self._theta_inv(k)
            for _ in range(abs(e)):
                out = mat_mul(base, out)
        self._theta_pow[x] = out
        return out

    def _theta_inv(self, k: int) -> list[list]:
        key = ("inv", k)
        got = self._theta_pow.get(key)
        if got is None:
            got = mat_inverse(self.theta[k])
            self._theta_pow[key] = got
        return got

    def act(self, el: AffineElement) -> list[list]:
        """Matrix of an algebra element (exact mode only)."""
        if self.scalar_mode != "exact":
            raise ValueError("act is defined for exact modules")
        if el.n != self.n:
            raise ValueError("rank mismatch")
        out = zeros(self.dim, self.dim)
        for (x, w), c in el.terms.items():
            m = mat_mul(self.theta_weight(x), self.perm_matrix(w))
            out = mat_add(out, mat_scale(c, m))
        return out


def _residuals(M: FinDimAffineModule) -> dict[str, list[list[list]]]:
    """All defining-relation residual matrices, keyed by family."""
    n, d = M.n, M.dim
    ident = identity(d)
    res: dict[str, list] = {
        "quadratic": [], "braid": [], "tee_commute": [],
        "theta_commute": [], "cross_far": [], "cross_near": [],
    }
    qm1 = _q_minus_one(M)
    q = _q_value(M)
    for j in range(n - 1):
        Tj = M.tee[j]
        res["quadratic"].append(
            mat_sub(mat_mul(Tj, Tj),
                    mat_add(mat_scale(qm1, Tj), mat_scale(q, ident))))
    for j in range(n - 2):
        a, b = M.tee[j], M.tee[j + 1]
        res["braid"].append(
            mat_sub(mat_mul(a, mat_mul(b, a)), mat_mul(b, mat_mul(a, b))))
    for j in range(n - 1):
        for k in range(j + 2, n - 1):
            res["tee_commute"].append(
                mat_sub(mat_mul(M.tee[j], M.tee[k]),
                        mat_mul(M.tee[k], M.tee[j])))
    for k in range(n):
        for l in range(k + 1, n):
            res["theta_commute"].append(
                mat_sub(mat_mul(M.theta[k], M.theta[l]),
                        mat_mul(M.theta[l], M.theta[k])))
    for j in range(1, n):
        Tj = M.tee[j - 1]
        for k in range(1, n + 1):
            if k not in (j, j + 1):
                res["cross_far"].append(
                    mat_sub(mat_mul(M.theta[k - 1], Tj),
                            mat_mul(Tj, M.theta[k - 1])))
        lhs = mat_sub(mat_mul(M.theta[j - 1], Tj),
                      mat_mul(Tj, M.theta[j]))
        res["cross_near"].append(mat_sub(lhs, mat_scale(qm1, M.theta[j - 1])))
        lhs = mat_sub(mat_mul(M.theta[j], Tj),
                      mat_mul(Tj, M.theta[j - 1]))
        res["cross_near"].append(mat_add(lhs, mat_scale(qm1, M.theta[j - 1])))
    return res


def _q_value(M):
    if M.scalar_mode == "exact":
        return _Q
    return float(M.meta["q0"])


def _q_minus_one(M):
    if M.scalar_mode == "exact":
        return _Q - 1
    return float(M.meta["q0"]) - 1.0


def verify_relations(M: FinDimAffineModule, tol: float = 1e-8) -> dict:
    """Check every defining relation; exact modules must vanish exactly,
    numeric ones up to tol in max-abs.  Also checks theta invertibility.
    Returns {"pass": bool, "worst": float, "families": {name: residual}}.
    """
    report: dict = {"families": {}}
    worst = 0.0
    ok = True
    for name, mats in _residuals(M).items():
        if M.scalar_mode == "exact":
            bad = sum(0 if is_zero_matrix(r) else 1 for r in mats)
            report["families"][name] = {"nonzero": bad}
            ok = ok and bad == 0
        else:
            r = max((abs(v) for m in mats for row in m for v in row),
                    default=0.0)
            report["families"][name] = {"residual": r}
            worst = max(worst, r)
    inv_ok = True
    for k in range(M.n):
        if M.scalar_mode == "exact":
            try:
                M._theta_inv(k)
            except ArithmeticError:
                inv_ok = False
        else:
            import numpy as np

            if np.linalg.matrix_rank(np.array(M.theta[k], dtype=float)) \
                    < M.dim:
                inv_ok = False
    report["families"]["theta_invertible"] = {"ok": inv_ok}
    if M.scalar_mode != "exact":
        ok = worst <= tol
    report["pass"] = bool(ok and inv_ok)
    report["worst"] = worst
    return report


# --- constructions ----------------------------------------------------------

def principal_series(n: int, t) -> FinDimAffineModule:
    """H tensored over the theta subalgebra with the character
    theta_x -> t^x; basis T_w for w in S_n sorted by (length, word).

    The T action never sees t (the module is free of rank one over the
    finite subalgebra), while each Theta_k column comes from rewriting
    theta_{e_k} T_w into T-first form and evaluating the theta tails.
    """
    t = tuple(_coerce_scalar(v) for v in t)
    if len(t) != n:
        raise ValueError("character length must equal the rank")
    if not all(t):
        raise ValueError("principal series characters must be invertible")
    G = sym_group(n)
    index = {w: i for i, w in enumerate(G)}
    dim = len(G)
    tee = []
    for j in range(1, n):
        s = Permutation.adjacent(n, j)
        mat = zeros(dim, dim)
        for col, w in enumerate(G):
            sw = s * w
            if length(sw) > length(w):
                mat[index[sw]][col] = _ONE
            else:
                mat[col][col] = _Q - 1
                mat[index[sw]][col] = _Q
        tee.append(mat)
    theta = []
    for k in range(n):
        e_k = tuple(1 if i == k else 0 for i in range(n))
        mat = zeros(dim, dim)
        for col, w in enumerate(G):
            for (v, z), c in _right_rewrite(n, e_k, w):
                val = c * _char_value(t, z)
                row = index[v]
                mat[row][col] = mat[row][col] + val
        theta.append(mat)
    return FinDimAffineModule(n, dim, tee, theta, meta={"t": t})


def _char_value(t: tuple, z: tuple) -> QRational:
    out = _ONE
    for tv, e in zip(t, z):
        if e:
            out = out * tv ** e
    return out


def _coerce_scalar(v) -> QRational:
    if isinstance(v, QRational):
        return v
    return QRational(v)


def one_dimensional_module(n: int, t0, kind: str) -> FinDimAffineModule:
    """The two families of characters of H_n: kind "index" has every
    T_j = q and theta spectrum (t, t/q, ..., t/q^{n-1}); kind "sign" has
    every T_j = -1 and theta spectrum (t, qt, ..., q^{n-1} t)."""
    t0 = _coerce_scalar(t0)
    if not t0:
        raise ValueError("character value must be invertible")
    if kind == "index":
        tval, step = _Q, 1 / _Q
    elif kind == "sign":
        tval, step = QRational(-1), _Q
    else:
        raise ValueError(f"unknown kind {kind!r}")
    tee = [[[tval]] for _ in range(n - 1)]
    cur = t0
    t = []
    for _ in range(n):
        t.append(cur)
        cur = cur * step
    theta = [[[v]] for v in t]
    return FinDimAffineModule(n, 1, tee, theta, meta={"t": tuple(t)})


def _block_split(word: tuple, n1: int):
    """Split a Levi permutation into its two block permutations."""
    w1 = tuple(word[:n1])
    w2 = tuple(v - n1 for v in word[n1:])
    return Permutation(w1), Permutation(w2)


def _coset_factor(y: Permutation, n1: int):
    """y = u * x with u the minimal representative of y S_L (values
    increasing on each block) and x in the Levi; lengths add."""
    n = len(y.word)
    u_word = tuple(sorted(y.word[:n1])) + tuple(sorted(y.word[n1:]))
    u = Permutation(u_word)
    x = u.inverse() * y
    return u, x


def induce(M1: FinDimAffineModule, M2: FinDimAffineModule) -> FinDimAffineModule:
    """Parabolic induction from H_{n1} x H_{n2}: basis T_u (x) (b1 (x) b2)
    over the minimal coset representatives u.

    The action rewrites h T_u structurally: finite products first, then
    theta tails, then the unique factorization T_y = T_{u'} T_x with x in
    the Levi, whose blocks act through the factor modules.
    """
    n1, n2 = M1.n, M2.n
    n = n1 + n2
    if M1.scalar_mode != "exact" or M2.scalar_mode != "exact":
        raise ValueError("induction is implemented for exact modules")
    meta: dict = {"factors": (M1, M2)}
    if "t" in M1.meta and "t" in M2.meta:
        meta["t"] = tuple(M1.meta["t"]) + tuple(M2.meta["t"])
    if n1 == 0 or n2 == 0:
        inner, extra = (M2, M1.dim) if n1 == 0 else (M1, M2.dim)
        tee = [_block_copies(g, inner.dim, extra) for g in inner.tee]
        theta = [_block_copies(g, inner.dim, extra) for g in inner.theta]
        return FinDimAffineModule(inner.n, extra * inner.dim, tee, theta,
                                  meta=meta)
    reps = min_coset_reps(n, (n1, n2))
    rep_index = {u: i for i, u in enumerate(reps)}
    d1, d2 = M1.dim, M2.dim
    dim = len(reps) * d1 * d2

    def basis_offset(u_idx, r1, r2):
        return (u_idx * d1 + r1) * d2 + r2

    def place(mat, col, coeff, y, op1, op2, c1, c2):
        """Add coeff * T_y (x) (op1 e_{c1} (x) op2 e_{c2}) to a column;
        op are factor-module matrices or None for the identity."""
        u, x = _coset_factor(y, n1)
        x1, x2 = _block_split(x.word, n1)
        P1 = M1.perm_matrix(x1)
        P2 = M2.perm_matrix(x2)
        A1 = P1 if op1 is None else mat_mul(P1, op1)
        A2 = P2 if op2 is None else mat_mul(P2, op2)
        ui = rep_index[u]
        for r1 in range(d1):
            a = A1[r1][c1]
            if not a:
                continue
            ca = coeff * a
            for r2 in range(d2):
                b = A2[r2][c2]
                if b:
                    row = basis_offset(ui, r1, r2)
                    mat[row][col] = mat[row][col] + ca * b

    tee = [zeros(dim, dim) for _ in range(n - 1)]
    theta = [zeros(dim, dim) for _ in range(n)]
    for u_idx, u in enumerate(reps):
        for c1 in range(d1):
            for c2 in range(d2):
                col = basis_offset(u_idx, c1, c2)
                for j in range(1, n):
                    s = Permutation.adjacent(n, j)
                    for y, c in _t_product(n, s, u):
                        place(tee[j - 1], col, c, y, None, None, c1, c2)
                for k in range(n):
                    e_k = tuple(1 if i == k else 0 for i in range(n))
                    for (y, z), c in _right_rewrite(n, e_k, u):
                        th1 = M1.theta_weight(z[:n1])
                        th2 = M2.theta_weight(z[n1:])
                        place(theta[k], col, c, y, th1, th2, c1, c2)
    return FinDimAffineModule(n, dim, tee, theta, meta=meta)


def _block_copies(A: list[list], d: int, copies: int) -> list[list]:
    """Block-diagonal stack of `copies` copies of a d x d matrix, the
    action on (multiplicity space) (x) (module) in multiplicity-major
    basis order."""
    out = zeros(copies * d, copies * d)
    for e in range(copies):
        off = e * d
        for r in range(d):
            row = A[r]
            for c in range(d):
                if row[c]:
                    out[off + r][off + c] = row[c]
    return out


# --- the derivative functor -------------------------------------------------

def _tail_kernel_exact(M: FinDimAffineModule, i: int) -> Subspace:
    mats = []
    for j in range(M.n - i + 1, M.n):
        mats.append(mat_add(M.tee[j - 1], identity(M.dim)))
    return intersect_kernels(mats, M.dim)


def bz_derivative(M: FinDimAffineModule, i: int) -> FinDimAffineModule:
    """The i-th derivative: joint (-1)-eigenspace of the tail generators
    as a module over H_{n-i} (front T's and the first n-i thetas).

    Front generators commute with the tail ones, so the eigenspace is
    invariant; the restriction still verifies invariance.
    """
    n = M.n
    if not 0 <= i <= n:
        raise ValueError(f"derivative order {i} out of range")
    if i == 0:
        return M
    m = n - i
    if M.scalar_mode == "exact":
        V = _tail_kernel_exact(M, i)
        tee = [V.restrict(M.tee[j]) for j in range(m - 1)]
        theta = [V.restrict(M.theta[k]) for k in range(m)]
        meta = {"parent": M, "tail": i, "subspace": V}
        if "q0" in M.meta:
            meta["q0"] = M.meta["q0"]
        return FinDimAffineModule(m, V.dim, tee, theta, meta=meta)
    return _bz_numeric(M, i)


def _bz_numeric(M: FinDimAffineModule, i: int, tol: float = 1e-8):
    import numpy as np

    n, d = M.n, M.dim
    m = n - i
    mats = [np.array(M.tee[j - 1], dtype=float) + np.eye(d)
            for j in range(m + 1, n)]
    if mats:
        stacked = np.vstack(mats)
        _, s, vt = np.linalg.svd(stacked)
        scale = max(float(s[0]) if len(s) else 1.0, 1.0)
        rank = int(sum(1 for v in s if v > tol * scale))
        B = vt[rank:].T
    else:
        B = np.eye(d)
    k = B.shape[1]

    def restrict(A):
        A = np.array(A, dtype=float)
        X = B.T @ (A @ B)
        resid = float(np.abs(A @ B - B @ X).max()) if k else 0.0
        if resid > tol * max(1.0, float(np.abs(A).max())):
            raise ArithmeticError(
                f"subspace is not numerically invariant ({resid:.3e})")
        return X.tolist()

    tee = [restrict(M.tee[j]) for j in range(m - 1)]
    theta = [restrict(M.theta[kk]) for kk in range(m)]
    meta = {"parent": M, "tail": i, "subspace_basis": B.tolist()}
    if "q0" in M.meta:
        meta["q0"] = M.meta["q0"]
    return FinDimAffineModule(m, k, tee, theta, scalar_mode="numeric",
                              meta=meta)


def bz_dimension(M: FinDimAffineModule, i: int) -> int:
    """dim bz_derivative(M, i) by rank counting alone (no basis, no
    restriction), which is what the larger sweeps use."""
    n = M.n
    if not 0 <= i <= n:
        raise ValueError(f"derivative order {i} out of range")
    if i <= 1:
        return M.dim
    rows = []
    for j in range(n - i + 1, n):
        rows.extend(mat_add(M.tee[j - 1], identity(M.dim)))
    if M.scalar_mode == "exact":
        _, pivots = rref(rows)
        return M.dim - len(pivots)
    import numpy as np

    return M.dim - int(np.linalg.matrix_rank(np.array(rows, dtype=float)))


# --- central blocks ---------------------------------------------------------

def _generalized_eigenspace(A: list[list], lam, dim: int) -> list[list[list]]:
    """Rows spanning the orthogonal complement description of
    ker (A - lam)^s, as the matrix (A - lam)^s with stabilized s."""
    D = mat_sub(A, mat_scale(lam, identity(dim)))
    P = D
    s = 1
    while s < dim:
        rank_now = len(rref(P)[1])
        P2 = mat_mul(P, D)
        if len(rref(P2)[1]) == rank_now:
            return P
        P = P2
        s += 1
    return P


def central_block(M: FinDimAffineModule, points) -> Subspace:
    """The sum over the given character points of the joint generalized
    eigenspaces of the thetas: points is an iterable of value tuples, one
    per theta, typically one S_n-orbit of a character.

    The power in each generalized eigenspace is raised until the kernel
    stabilizes, which for generic characters ends at one.
    """
    if M.scalar_mode != "exact":
        raise ValueError("central blocks are defined for exact modules")
    if M.dim == 0:
        return full_space(0)
    bases = []
    for pt in points:
        mats = []
        for k in range(M.n):
            mats.append(_generalized_eigenspace(M.theta[k], pt[k], M.dim))
        V = intersect_kernels(mats, M.dim)
        if V.dim:
            bases.append(V.basis)
    if not bases:
        return Subspace([[] for _ in range(M.dim)], [])
    concat = [sum((b[r] for b in bases), []) for r in range(M.dim)]
    B, piv = column_space(concat)
    return Subspace(B, piv)


# --- antispherical module ---------------------------------------------------

def antispherical_generator(n: int) -> dict:
    """The cyclic vector theta_0 (x) 1 of H (x)_{finite} sign."""
    return {(0,) * n: _ONE}


def antispherical_apply(el: AffineElement, vec: dict) -> dict:
    """el acting on sum c_x theta_x (x) 1: rewrite el * theta_x to the
    theta-first form and fold the T part through the sign character."""
    out: dict = {}
    n = el.n
    for x, cx in vec.items():
        prod = el * AffineElement.theta(n, x)
        for (z, u), c in prod.terms.items():
            val = cx * (c if length(u) % 2 == 0 else -c)
            s = out.get(z, 0) + val
            if s:
                out[z] = s
            else:
                out.pop(z, None)
    return out


# --- characters and the additivity check ------------------------------------

def generic_guard(t, q0=None) -> None:
    """Reject characters outside the generic regime: a zero coordinate, a
    repeated coordinate, or a coordinate ratio equal to q^{+-1} (checked
    formally, and at q0 when a numeric value is supplied)."""
    t = tuple(_coerce_scalar(v) for v in t)
    for k, v in enumerate(t):
        if not v:
            raise ValueError(f"character coordinate {k + 1} is zero")
    qv = None
    if q0 is not None:
        qv = QRational(Fraction(q0))
    for a in range(len(t)):
        for b in range(len(t)):
            if a == b:
                continue
            r = t[a] / t[b]
            if r == 1:
                raise ValueError(
                    f"coordinates {a + 1}, {b + 1} coincide")
            if r == _Q:
                raise ValueError(
                    f"coordinates {a + 1}, {b + 1} differ by q")
            if qv is not None and r == qv:
                raise ValueError(
                    f"coordinates {a + 1}, {b + 1} differ by q0")


def _orbit_key(values) -> tuple:
    return tuple(sorted((str(v) for v in values)))


def _orbit_points(values) -> list[tuple]:
    return sorted(set(itertools.permutations(tuple(values))),
                  key=lambda pt: tuple(str(v) for v in pt))


def leibniz_check(M1: FinDimAffineModule, M2: FinDimAffineModule,
                  i: int, require_generic: bool = False) -> dict:
    """Derivatives of an induced module against the derivative sum rule.

    Both sides are cut into central blocks of H_{n-i} along every
    candidate character orbit (the (n-i)-subsets of the concatenated
    character), and the comparison is the multiset of (orbit, dimension)
    pairs: left = bz(induce(M1, M2), i), right = sum over a + b = i of
    induce(bz(M1, a), bz(M2, b)).  Block dimensions are additive in any
    filtration, so no genericity is needed; the optional guard is for
    callers who also rely on the generic dimension count.
    """
    t1 = tuple(M1.meta["t"])
    t2 = tuple(M2.meta["t"])
    full = t1 + t2
    if require_generic:
        generic_guard(full)
    n = M1.n + M2.n
    m = n - i
    left = bz_derivative(induce(M1, M2), i)
    cands = {}
    for sub in itertools.combinations(range(n), m):
        vals = tuple(full[s] for s in sub)
        cands[_orbit_key(vals)] = _orbit_points(vals)
    left_dims = {key: central_block(left, pts).dim
                 for key, pts in cands.items()}
    right_dims = {key: 0 for key in cands}
    for a in range(i + 1):
        b = i - a
        if a > M1.n or b > M2.n:
            continue
        Da = bz_derivative(M1, a)
        Db = bz_derivative(M2, b)
        if Da.dim == 0 or Db.dim == 0:
            continue
        piece = induce(Da, Db)
        for key, pts in cands.items():
            right_dims[key] += central_block(piece, pts).dim
    orbits = []
    ok = True
    for key in sorted(cands):
        l, r = left_dims[key], right_dims[key]
        orbits.append({"orbit": list(key), "left": l, "right": r,
                       "pass": l == r})
        ok = ok and l == r
    covered = sum(left_dims.values())
    exhaustive = covered == left.dim
    return {
        "n": n, "i": i, "orbits": orbits,
        "blocks_cover": exhaustive,
        "left_dim": left.dim,
        "pass": bool(ok and exhaustive),
    }


# --- serialization ----------------------------------------------------------

def module_to_json(M: FinDimAffineModule) -> dict:
    """Plain-dict form with "num/den in q" strings in exact mode."""
    if M.scalar_mode == "exact":
        def enc(mat):
            return [[str(_coerce_scalar(v)) for v in row] for row in mat]
    else:
        def enc(mat):
            return [[float(v) for v in row] for row in mat]
    out = {
        "n": M.n,
        "dim": M.dim,
        "scalar_mode": M.scalar_mode,
        "tee": [enc(g) for g in M.tee],
        "theta": [enc(g) for g in M.theta],
    }
    if M.scalar_mode != "exact" and "q0" in M.meta:
        out["q0"] = float(M.meta["q0"])
    return out


def module_from_json(data: dict) -> FinDimAffineModule:
    mode = data.get("scalar_mode", "exact")
    if mode == "exact":
        def dec(mat):
            return [[parse_qrational(v) for v in row] for row in mat]
    else:
        def dec(mat):
            return [[float(v) for v in row] for row in mat]
    meta = {}
    if "q0" in data:
        meta["q0"] = float(data["q0"])
    return FinDimAffineModule(
        int(data["n"]), int(data["dim"]),
        [dec(g) for g in data["tee"]],
        [dec(g) for g in data["theta"]],
        scalar_mode=mode, meta=meta,
    )
