"""The affine Hecke algebra of GL_n in its Bernstein presentation.

An element is a finite sum of basis terms theta_x T_w with x in Z^n and w
in S_n, coefficients in Q(q).  The finite subalgebra is spanned by the
T_w; the theta_x form a commutative Laurent subalgebra on which S_n acts
by permuting coordinates, and the two halves braid through the cross
relation for the simple root alpha_j = e_j - e_{j+1}:

    theta_x T_j = T_j theta_{s_j x} + (q-1) G(x, alpha_j),

where G(x, alpha) = (theta_x - theta_{s x}) / (1 - theta_{-alpha})
telescopes into an honest sum of m = <x, alpha^vee> monomials (negated
and shifted when m < 0).  Products are normalized to the theta-first form
by memoized rewriting; the T-first form is what finite-dimensional
modules over the theta subalgebra consume, so both rewrites live here.

As an independent check on the presentation, `oracle_apply` realizes the
algebra by Demazure-Lusztig operators on Laurent polynomials:

    T_j . x^y = q x^{s_j y} + (q-1) G(y, alpha_j),    theta_x . f = x^x f.

That realization never touches the rewrite rules (it is pure operator
composition on monomial dicts), so agreement of `multiply` with composed
oracle actions is a genuine two-route test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from ..combinatorics import (
    Permutation,
    length,
    parse_permutation,
    reduced_word,
    render_permutation,
)
from ..finite_hecke import (
    FiniteHeckeElement,
    _Parser,
    _tokenize,
)
from ..scalars import QRational

__all__ = [
    "AffineElement",
    "multiply",
    "oracle_apply",
    "levi_embed",
    "sign_projector_tail",
    "parse_affine",
    "render_affine",
]

_Q = QRational.gen()
_ONE = QRational(1)
_SCALARS = (QRational, Fraction, int)


def _swap(x: tuple, a: int) -> tuple:
    """s_a on a weight: exchange coordinates a, a+1 (1-indexed)."""
    y = list(x)
    y[a - 1], y[a] = y[a], y[a - 1]
    return tuple(y)


def _telescope(y: tuple, a: int) -> list[tuple[tuple, int]]:
    """G(y, alpha_a) as [(weight, +-1)]: m = y_a - y_{a+1} terms."""
    m = y[a - 1] - y[a]
    out = []
    if m >= 0:
        w = list(y)
        for _ in range(m):
            out.append((tuple(w), 1))
            w[a - 1] -= 1
            w[a] += 1
    else:
        w = list(y)
        for _ in range(-m):
            w[a - 1] += 1
            w[a] -= 1
            out.append((tuple(w), -1))
    return out


@cache
def _t_product(n: int, u: Permutation, w: Permutation):
    """T_u T_w in the finite algebra, as a tuple of (perm, coeff)."""
    prod = FiniteHeckeElement.t(n, u) * FiniteHeckeElement.t(n, w)
    return tuple(prod.terms.items())


@cache
def _left_rewrite(n: int, v: Permutation, y: tuple):
    """T_v theta_y as a tuple of ((z, u), coeff) meaning sum theta_z T_u.

    Recursion peels the last letter of a reduced word for v through the
    cross relation, so the cache is shared across all products.
    """
    if v.is_identity():
        return (((y, v), _ONE),)
    word = reduced_word(v)
    a = word[-1]
    s = Permutation.adjacent(n, a)
    vp = v * s
    acc: dict = {}
    for (z, u), c in _left_rewrite(n, vp, _swap(y, a)):
        for r, e in _t_product(n, u, s):
            _bump(acc, (z, r), c * e)
    qm1 = _Q - 1
    for yy, sgn in _telescope(y, a):
        for (z, u), c in _left_rewrite(n, vp, yy):
            _bump(acc, (z, u), qm1 * c if sgn > 0 else -(qm1 * c))
    return tuple(acc.items())


@cache
def _right_rewrite(n: int, x: tuple, w: Permutation):
    """theta_x T_w as a tuple of ((v, z), coeff) meaning sum T_v theta_z.

    This is the form module actions consume: the theta tail evaluates on
    a character or a theta-weight matrix.
    """
    if w.is_identity():
        return (((w, x), _ONE),)
    a = reduced_word(w)[0]
    s = Permutation.adjacent(n, a)
    wp = s * w
    acc: dict = {}
    for (v, z), c in _right_rewrite(n, _swap(x, a), wp):
        for r, e in _t_product(n, s, v):
            _bump(acc, (r, z), c * e)
    qm1 = _Q - 1
    for xx, sgn in _telescope(x, a):
        for (v, z), c in _right_rewrite(n, xx, wp):
            _bump(acc, (v, z), qm1 * c if sgn > 0 else -(qm1 * c))
    return tuple(acc.items())


def _bump(acc: dict, key, c) -> None:
    s = acc.get(key, 0) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class AffineElement:
    """Finite sum of theta_x T_w terms; keys are (weight, Permutation)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def zero(cls, n: int) -> "AffineElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AffineElement":
        return cls(n, {((0,) * n, Permutation.identity(n)): _ONE})

    @classmethod
    def theta(cls, n: int, x) -> "AffineElement":
        x = tuple(x)
        if len(x) != n:
            raise ValueError(f"weight {x} is not in Z^{n}")
        return cls(n, {(x, Permutation.identity(n)): _ONE})

    @classmethod
    def t(cls, n: int, w: Permutation) -> "AffineElement":
        return cls(n, {((0,) * n, w): _ONE})

    @classmethod
    def t_gen(cls, n: int, j: int) -> "AffineElement":
        return cls.t(n, Permutation.adjacent(n, j))

    @classmethod
    def from_finite(cls, el: FiniteHeckeElement) -> "AffineElement":
        zero = (0,) * el.n
        return cls(el.n, {(zero, w): c for w, c in el.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            _bump(out, k, c)
        return AffineElement(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AffineElement(self.n, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = _coerce(other)
            if not c:
                return AffineElement(self.n)
            return AffineElement(self.n, {k: c * v for k, v in self.terms.items()})
        if isinstance(other, AffineElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (_ONE / _coerce(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers take a nonnegative integer")
        out = AffineElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def _promote(self, other):
        if isinstance(other, AffineElement):
            if other.n != self.n:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, _SCALARS):
            return AffineElement.one(self.n) * other
        return NotImplemented

    def __repr__(self):
        return render_affine(self)


def _coerce(c) -> QRational:
    if isinstance(c, QRational):
        return c
    if isinstance(c, (int, Fraction)):
        return QRational(c)
    raise TypeError(f"not a scalar: {c!r}")


def multiply(A: AffineElement, B: AffineElement) -> AffineElement:
    """Product in the Bernstein presentation, normalized theta-first."""
    if A.n != B.n:
        raise ValueError("rank mismatch")
    n = A.n
    acc: dict = {}
    for (x, v), a in A.terms.items():
        for (y, w), b in B.terms.items():
            ab = a * b
            for (z, u), c in _left_rewrite(n, v, y):
                xz = tuple(p + r for p, r in zip(x, z))
                for r, e in _t_product(n, u, w):
                    _bump(acc, (xz, r), ab * c * e)
    return AffineElement(n, acc)


# --- Demazure-Lusztig oracle ----------------------------------------------

def _dl_generator(a: int, poly: dict) -> dict:
    """T_a on a Laurent polynomial {weight: coeff}."""
    out: dict = {}
    qm1 = _Q - 1
    for y, c in poly.items():
        _bump(out, _swap(y, a), _Q * c)
        for z, sgn in _telescope(y, a):
            _bump(out, z, qm1 * c if sgn > 0 else -(qm1 * c))
    return out


def oracle_apply(el: AffineElement, poly: dict) -> dict:
    """el acting on a Laurent polynomial through the Demazure-Lusztig
    realization; polynomials are {weight tuple: coeff} dicts."""
    out: dict = {}
    for (x, w), c in el.terms.items():
        cur = poly
        for a in reversed(reduced_word(w)):
            cur = _dl_generator(a, cur)
        for y, d in cur.items():
            xy = tuple(p + r for p, r in zip(x, y))
            _bump(out, xy, c * d)
    return out


# --- block embeddings -------------------------------------------------------

def levi_embed(el1: AffineElement, el2: AffineElement) -> AffineElement:
    """The image of el1 tensor el2 under H_{n1} x H_{n2} -> H_{n1+n2}
    (permutations act on disjoint blocks, weights concatenate)."""
    n1, n2 = el1.n, el2.n
    n = n1 + n2
    out: dict = {}
    for (x1, w1), c1 in el1.terms.items():
        for (x2, w2), c2 in el2.terms.items():
            word = tuple(w1.word) + tuple(i + n1 for i in w2.word)
            _bump(out, (x1 + x2, Permutation(word)), c1 * c2)
    return AffineElement(n, out)


def sign_projector_tail(n: int, i: int) -> AffineElement:
    """sum (-1/q)^{l(w)} T_w over the copy of S_i permuting the last i
    letters; for i <= 1 this is the identity."""
    if not 0 <= i <= n:
        raise ValueError(f"tail size {i} out of range")
    from ..finite_hecke import sign_projector

    if i <= 1:
        return AffineElement.one(n)
    head = Permutation.identity(n - i)
    out: dict = {}
    zero = (0,) * n
    for w, c in sign_projector(i).terms.items():
        word = tuple(head.word) + tuple(a + (n - i) for a in w.word)
        out[(zero, Permutation(word))] = c
    return AffineElement(n, out)


# --- grammar ----------------------------------------------------------------

def parse_affine(text: str, n: int) -> AffineElement:
    """The element grammar with theta atoms.

    >>> e = parse_affine("th[(1,0,-1)] * T[2 1 3] * (q-1)/q", 3)
    >>> render_affine(e)
    'th[(1,0,-1)] * T[2 1 3] * ((q - 1)/q)'
    """

    def atom_fn(kind, tok):
        if kind == "tee":
            w = parse_permutation(tok[2:-1].strip())
            if len(w.word) != n:
                raise ValueError(f"permutation {tok} is not in S_{n}")
            return AffineElement.t(n, w)
        inner = tok[3:-1].strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ValueError(f"malformed weight in {tok}")
        parts = [p.strip() for p in inner[1:-1].split(",") if p.strip()]
        x = tuple(int(p) for p in parts)
        return AffineElement.theta(n, x)

    def promote_fn(s):
        return AffineElement.one(n) * s

    v = _Parser(_tokenize(text), atom_fn, promote_fn).parse()
    if isinstance(v, _SCALARS):
        v = promote_fn(v)
    return v


def render_affine(el: AffineElement) -> str:
    """Deterministic inverse of parse_affine: terms sorted by weight then
    by (length, word); identity factors are dropped."""
    if not el.terms:
        return "0"
    zero = (0,) * el.n
    bits = []
    for x, w in sorted(el.terms, key=lambda k: (k[0], length(k[1]), k[1].word)):
        c = el.terms[(x, w)]
        parts = []
        if x != zero:
            parts.append("th[(" + ",".join(str(v) for v in x) + ")]")
        if w != Permutation.identity(el.n) or x == zero:
            parts.append(f"T[{render_permutation(w)}]")
        if c != _ONE:
            s = str(c)
            if " " in s or s.startswith("-"):
                s = f"({s})"
            parts.append(s)
        bits.append(" * ".join(parts))
    return " + ".join(bits)
