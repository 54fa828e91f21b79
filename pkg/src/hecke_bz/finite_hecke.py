"""The finite Hecke algebra of S_n over the rational function field Q(q).

Elements are finite linear combinations of the standard basis T_w, w in
S_n, with the quadratic convention (T_s - q)(T_s + 1) = 0 for adjacent
transpositions, so

    T_s T_w = T_{sw}                  if l(sw) > l(w),
    T_s T_w = (q-1) T_w + q T_{sw}    otherwise,

and lengths add along reduced words.  Products are computed by peeling
the reduced word of the left factor one letter at a time onto the whole
right element, which keeps the sign-projector identities at n = 5 cheap.

The central object downstream is the sign projector

    S_n = sum_w (-1/q)^{l(w)} T_w,

which satisfies T_s S_n = S_n T_s = -S_n and S_n^2 = P_n(1/q) S_n with
P_n(z) = prod_{k<=n} (1 + z + ... + z^{k-1}); its image in any module is
the simultaneous (-1)-eigenspace of all the T_s.

The element grammar ("T[2 1 3] * (q-1)/q + T[1 2 3]") is a small
expression language over scalars and basis atoms; the tokenizer and
recursive-descent evaluator live here and are shared with the affine
layer, which adds theta atoms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .combinatorics import (
    Permutation,
    length,
    parse_permutation,
    reduced_word,
    render_permutation,
    sym_group,
)
from .scalars import QRational, parse_qrational

__all__ = [
    "FiniteHeckeElement",
    "sign_projector",
    "sign_idempotent",
    "poincare_value",
    "sign_character",
    "parse_element",
    "render_element",
]

_Q = QRational.gen()
_ONE = QRational(1)

_SCALARS = (QRational, Fraction, int)


class FiniteHeckeElement:
    """A linear combination of T_w basis elements with QRational
    coefficients; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[w] = c

    @classmethod
    def zero(cls, n: int) -> "FiniteHeckeElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "FiniteHeckeElement":
        return cls(n, {Permutation.identity(n): _ONE})

    @classmethod
    def t(cls, n: int, w: Permutation) -> "FiniteHeckeElement":
        return cls(n, {w: _ONE})

    @classmethod
    def t_gen(cls, n: int, j: int) -> "FiniteHeckeElement":
        return cls.t(n, Permutation.adjacent(n, j))

    def coefficient(self, w: Permutation) -> QRational:
        return self.terms.get(w, QRational(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteHeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FiniteHeckeElement(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FiniteHeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self._scale(other)
        if isinstance(other, FiniteHeckeElement):
            if other.n != self.n:
                raise ValueError("rank mismatch")
            # T_v * other is memoized across the reduced-word prefixes of
            # all left terms, so a dense left factor (the sign projector)
            # costs one generator application per group element.
            memo = {Permutation.identity(self.n): other.terms}

            def t_apply(v):
                got = memo.get(v)
                if got is None:
                    a = reduced_word(v)[0]
                    rest = Permutation.adjacent(self.n, a) * v
                    got = _gen_apply(self.n, a, t_apply(rest))
                    memo[v] = got
                return got

            acc: dict = {}
            for v, a in self.terms.items():
                for w, c in t_apply(v).items():
                    s = acc.get(w, 0) + a * c
                    if s:
                        acc[w] = s
                    else:
                        acc.pop(w, None)
            return FiniteHeckeElement(self.n, acc)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self._scale(_ONE / _coerce(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element powers take a nonnegative integer")
        out = FiniteHeckeElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def _scale(self, c):
        c = _coerce(c)
        if not c:
            return FiniteHeckeElement(self.n)
        return FiniteHeckeElement(self.n, {w: c * v for w, v in self.terms.items()})

    def _promote(self, other):
        if isinstance(other, FiniteHeckeElement):
            if other.n != self.n:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, _SCALARS):
            return FiniteHeckeElement.one(self.n) * other
        return NotImplemented

    def __repr__(self):
        return render_element(self)


def _coerce(c) -> QRational:
    if isinstance(c, QRational):
        return c
    if isinstance(c, (int, Fraction)):
        return QRational(c)
    raise TypeError(f"not a scalar: {c!r}")


def _gen_apply(n: int, a: int, terms: dict) -> dict:
    """T_{s_a} times a term dict."""
    s = Permutation.adjacent(n, a)
    qm1 = _Q - 1
    nxt: dict = {}
    for w, c in terms.items():
        sw = s * w
        if length(sw) > length(w):
            x = nxt.get(sw, 0) + c
            if x:
                nxt[sw] = x
            else:
                nxt.pop(sw, None)
        else:
            x = nxt.get(w, 0) + qm1 * c
            if x:
                nxt[w] = x
            else:
                nxt.pop(w, None)
            x = nxt.get(sw, 0) + _Q * c
            if x:
                nxt[sw] = x
            else:
                nxt.pop(sw, None)
    return nxt


def sign_projector(n: int) -> FiniteHeckeElement:
    """sum_w (-1/q)^{l(w)} T_w.

    >>> S = sign_projector(2)
    >>> render_element(S)
    'T[1 2] + T[2 1] * (-1/q)'
    """
    z = -(_ONE / _Q)
    terms = {w: z ** length(w) for w in sym_group(n)}
    return FiniteHeckeElement(n, terms)


def poincare_value(n: int, z) -> QRational:
    """prod_{k<=n} (1 + z + ... + z^{k-1}); at z = 1/q this is the
    eigenvalue in S_n^2 = P_n(1/q) S_n."""
    z = _coerce(z)
    out = _ONE
    for k in range(1, n + 1):
        term = QRational(0)
        power = _ONE
        for _ in range(k):
            term = term + power
            power = power * z
        out = out * term
    return out


def sign_idempotent(n: int) -> FiniteHeckeElement:
    """The sign projector normalized to an idempotent."""
    return sign_projector(n) / poincare_value(n, _ONE / _Q)


def sign_character(el: FiniteHeckeElement) -> QRational:
    """The algebra character T_w -> (-1)^{l(w)} applied to el."""
    out = QRational(0)
    for w, c in el.terms.items():
        out = out + (c if length(w) % 2 == 0 else -c)
    return out


# --- element grammar ------------------------------------------------------
#
#   expr  := term (('+'|'-') term)*
#   term  := unary (('*'|'/') unary)*
#   unary := '-' unary | power
#   power := atom ('^' unary)?
#   atom  := '(' expr ')' | T[..] | th[(..)] | q | integer
#
# Scalars and algebra elements mix freely; a bare scalar expression is
# promoted to a multiple of T[identity] at the end.

_TOKEN_RE = re.compile(
    r"(?P<tee>T\[[^\]]*\])"
    r"|(?P<theta>th\[[^\]]*\])"
    r"|(?P<num>\d+)"
    r"|(?P<q>q)"
    r"|(?P<op>[-+*/^()])"
    r"|(?P<ws>\s+)"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ValueError(f"bad element syntax at {text[pos:pos+12]!r}")
        pos = m.end()
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group()))
    return out


class _Parser:
    """Recursive-descent evaluator over mixed scalar/element values.

    atom_fn(kind, text) builds the algebra atoms (kind "tee" or
    "theta"); promote_fn(scalar) lifts a scalar into the algebra when an
    additive mix forces it.
    """

    def __init__(self, tokens, atom_fn, promote_fn):
        self.toks = tokens
        self.pos = 0
        self.atom_fn = atom_fn
        self.promote_fn = promote_fn

    def peek_op(self):
        if self.pos < len(self.toks) and self.toks[self.pos][0] == "op":
            return self.toks[self.pos][1]
        return None

    def next(self):
        if self.pos >= len(self.toks):
            raise ValueError("unexpected end of element expression")
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        if self.pos != len(self.toks):
            raise ValueError(f"trailing tokens: {self.toks[self.pos:]}")
        return v

    def expr(self):
        v = self.term()
        while self.peek_op() in ("+", "-"):
            op = self.next()[1]
            w = self.term()
            v, w = self._match(v, w)
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek_op() in ("*", "/"):
            op = self.next()[1]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if not isinstance(w, _SCALARS):
                    raise ValueError("division only by scalars")
                v = v / w
        return v

    def unary(self):
        if self.peek_op() == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek_op() == "^":
            self.next()
            e = self.unary()
            e = _as_int(e)
            v = v ** e
        return v

    def atom(self):
        kind, text = self.next()
        if kind == "op" and text == "(":
            v = self.expr()
            kind, text = self.next()
            if text != ")":
                raise ValueError("unbalanced parentheses")
            return v
        if kind == "num":
            return QRational(int(text))
        if kind == "q":
            return _Q
        if kind in ("tee", "theta"):
            return self.atom_fn(kind, text)
        raise ValueError(f"unexpected token {text!r}")

    def _match(self, v, w):
        v_scal = isinstance(v, _SCALARS)
        w_scal = isinstance(w, _SCALARS)
        if v_scal and not w_scal:
            v = self.promote_fn(v)
        elif w_scal and not v_scal:
            w = self.promote_fn(w)
        return v, w


def _as_int(e) -> int:
    if isinstance(e, int):
        return e
    if isinstance(e, Fraction) and e.denominator == 1:
        return int(e)
    if isinstance(e, QRational) and e.is_constant():
        c = e.constant_value()
        if c.denominator == 1:
            return int(c)
    raise ValueError("exponent must be an integer")


def parse_element(text: str, n: int) -> FiniteHeckeElement:
    """Evaluate the element grammar over the finite algebra of S_n.

    >>> e = parse_element("T[2 1 3] * (q-1)/q + T[1 2 3]", 3)
    >>> render_element(e)
    'T[1 2 3] + T[2 1 3] * ((q - 1)/q)'
    """

    def atom_fn(kind, tok):
        if kind == "theta":
            raise ValueError("theta atoms belong to the affine algebra")
        w = parse_permutation(tok[2:-1].strip())
        if len(w.word) != n:
            raise ValueError(f"permutation {tok} is not in S_{n}")
        return FiniteHeckeElement.t(n, w)

    def promote_fn(s):
        return FiniteHeckeElement.one(n) * s

    v = _Parser(_tokenize(text), atom_fn, promote_fn).parse()
    if isinstance(v, _SCALARS):
        v = promote_fn(v)
    return v


def render_element(el: FiniteHeckeElement) -> str:
    """Deterministic inverse of parse_element: terms sorted by
    (length, one-line word), scalar factors trailing."""
    if not el.terms:
        return "0"
    bits = []
    for w in sorted(el.terms, key=lambda u: (length(u), u.word)):
        c = el.terms[w]
        t = f"T[{render_permutation(w)}]"
        if c != _ONE:
            s = str(c)
            if " " in s or s.startswith("-"):
                s = f"({s})"
            t = f"{t} * {s}"
        bits.append(t)
    return " + ".join(bits)
