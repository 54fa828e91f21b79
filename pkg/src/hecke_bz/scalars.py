"""Exact coefficient arithmetic for the Hecke parameter q.

Everything exact in this package is linear algebra over one of two fields:

* ``BigRational`` -- plain rationals with arbitrary-precision integers.
  This is exactly ``fractions.Fraction`` (reduced, positive denominator),
  re-exported under the name the rest of the code uses.

* ``QRational`` -- rational functions in a single formal parameter q with
  rational coefficients.  Internally both numerator and denominator are
  integer-coefficient polynomials, coprime, with no joint integer content
  and positive denominator lead; that form is unique, so equality is
  syntactic, and it keeps every coefficient operation in machine-integer
  arithmetic (Fraction appears only at the boundary):

  >>> q = QRational.gen()
  >>> (q - 1) / (q * q - 1)
  QRational('1/(q + 1)')
  >>> 1 / (q + 1) + q / (q + 1) == 1
  True

q is a single formal transcendental: nothing in the exact path ever
specializes it, and ``specialize`` refuses poles, so root-of-unity
degeneracies cannot arise silently.

There is also ``PKPoly``, a bivariate polynomial ring Q[p, kappa] used by
the graded algebra, where p plays the role of log q and kappa is the Speh
parameter.  Graded computations only ever need ring operations (the
subspace cuts happen over plain rationals), so no two-variable fraction
field is provided.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "BigRational",
    "QRational",
    "PKPoly",
    "P_SYM",
    "KAPPA_SYM",
    "specialize",
    "parse_qrational",
]

BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense univariate polynomials with integer coefficients, lowest degree
# first; the primitive Euclidean algorithm keeps every reduction in
# machine-integer arithmetic, which is the hottest loop in the package
# after matrix products
# ---------------------------------------------------------------------------

def _ptrim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _pgcd(a, b):
    """Primitive gcd (positive lead) of integer polynomials, by pseudo-
    remainders with content stripped after every step."""
    A = _int_primitive(a)
    B = _int_primitive(b)
    while B:
        A, B = B, _int_primitive(_prem(A, B))
    return A


def _int_primitive(a) -> tuple:
    """Divide out the integer content and normalize the lead positive."""
    if not a:
        return ()
    g = 0
    for v in a:
        g = _gcd_int(g, v if v >= 0 else -v)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return tuple(a)
    return tuple(v // g for v in a)


def _prem(a, b) -> tuple:
    """Pseudo-remainder of integer polynomials (lowest degree first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        for i in range(len(r)):
            r[i] *= lb
        for i, c in enumerate(b):
            r[shift + i] -= lr * c
        while r and not r[-1]:
            r.pop()
    return tuple(r)


def _pdiv_exact(a, b) -> tuple:
    """Quotient of integer polynomials when b divides a exactly."""
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        if c:
            quo[shift] = c
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quo)


def _peval(a, x0: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(a):
        acc = acc * x0 + c
    return acc


def _pstr(a, var: str = "q") -> str:
    """Render with integer coefficients assumed (see QRational.__str__)."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        mag = abs(c)
        if mag == 1 and mono:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_IONE = (1,)


class QRational:
    """A rational function in q, always in canonical reduced form.

    Numerator and denominator are coprime integer polynomials with no
    joint content and positive denominator lead, so ``==`` is exact
    identity in Q(q).  Mixed arithmetic with int and Fraction coerces
    the scalar.

    >>> q = QRational.gen()
    >>> (q ** 2 + q) * (1 / q)
    QRational('q + 1')
    >>> q ** -2
    QRational('1/q^2')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, QRational) and den is None:
            self.num, self.den = num.num, num.den
            self._hash = num._hash
            return
        nc = self._coerce_poly(num)
        dc = (_ONE,) if den is None else self._coerce_poly(den)
        scale = 1
        for c in nc + dc:
            d = c.denominator
            scale = scale * d // _gcd_int(scale, d)
        self.num, self.den = self._reduce(
            tuple(int(c * scale) for c in nc),
            tuple(int(c * scale) for c in dc),
        )
        self._hash = None

    @staticmethod
    def _coerce_poly(v) -> tuple[Fraction, ...]:
        if isinstance(v, tuple):
            return _ptrim([Fraction(c) for c in v])
        if isinstance(v, (int, Fraction)):
            f = Fraction(v)
            return (f,) if f else ()
        if isinstance(v, QRational):
            if len(v.den) != 1:
                raise ValueError("not a polynomial")
            d = v.den[0]
            return tuple(Fraction(c, d) for c in v.num)
        raise TypeError(f"cannot build polynomial from {type(v).__name__}")

    @staticmethod
    def _reduce(num, den):
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            return (), _IONE
        # Monomial denominators (c * q^k) dominate in Hecke-basis work;
        # for them reduction is a power shift, no polynomial gcd.
        nz = sum(1 for x in den if x)
        if nz == 1:
            k = len(den) - 1
            t = 0
            while t < k and not num[t]:
                t += 1
            if t:
                num = num[t:]
            c = den[-1]
            g = c if c >= 0 else -c
            for v in num:
                g = _gcd_int(g, v if v >= 0 else -v)
            if c < 0:
                g = -g
            if g != 1:
                num = tuple(v // g for v in num)
                c //= g
            m = k - t
            den = _IONE if m == 0 and c == 1 else (0,) * m + (c,)
            return num, den
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        g = 0
        for v in num:
            g = _gcd_int(g, v if v >= 0 else -v)
        for v in den:
            g = _gcd_int(g, v if v >= 0 else -v)
        if den[-1] < 0:
            g = -g
        if g != 1:
            num = tuple(v // g for v in num)
            den = tuple(v // g for v in den)
        return num, den

    @classmethod
    def _raw(cls, num, den):
        out = object.__new__(cls)
        out.num, out.den = cls._reduce(num, den)
        out._hash = None
        return out

    @classmethod
    def gen(cls) -> "QRational":
        """The generator q."""
        return cls._raw((0, 1), _IONE)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QRational):
            return other
        if isinstance(other, (int, Fraction)):
            return QRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return QRational._raw(_padd(self.num, o.num), self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return QRational._raw(num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(QRational)
        out.num, out.den = _pneg(self.num), self.den
        out._hash = None
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return QRational()
        return QRational._raw(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return QRational._raw(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.num:
                raise ZeroDivisionError("0 ** negative in Q(q)")
            base, k = 1 / self, -k
        else:
            base = self
        out = QRational(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if len(self.num) <= 1 and len(self.den) == 1:
                # match the hash of the embedded rational constant
                self._hash = hash(
                    Fraction(self.num[0], self.den[0]) if self.num else _ZERO
                )
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0], self.den[0]) if self.num else _ZERO

    def __str__(self):
        ns = _pstr(self.num)
        if self.den == _IONE:
            return ns
        ds = _pstr(self.den)
        if len([c for c in self.num if c]) > 1:
            ns = f"({ns})"
        # a denominator like 2*q must parenthesize or it reparses as
        # (num/2)*q under left association
        if len([c for c in self.den if c]) > 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"QRational('{self}')"


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def specialize(a: QRational, q0: Fraction) -> Fraction:
    """Evaluate a at q = q0, exactly.

    >>> q = QRational.gen()
    >>> specialize(1 / (q + 1), Fraction(2))
    Fraction(1, 3)
    """
    q0 = Fraction(q0)
    dv = _peval(a.den, q0)
    if not dv:
        raise ZeroDivisionError(f"pole of {a} at q = {q0}")
    return _peval(a.num, q0) / dv


# ---------------------------------------------------------------------------
# parsing: the element grammar's scalar sublanguage, e.g. "(q-1)/q"
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> list[str]:
    toks, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(text[i:j])
            i = j
        elif ch in "q^*/+-()":
            toks.append(ch)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in scalar {text!r}")
    return toks


class _ScalarParser:
    def __init__(self, toks: list[str]):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expression(self) -> QRational:
        if self.peek() == "-":
            self.take()
            acc = -self.term()
        else:
            acc = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                acc = acc + self.term()
            else:
                acc = acc - self.term()
        return acc

    def term(self) -> QRational:
        acc = self.power()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                acc = acc * self.power()
            else:
                acc = acc / self.power()
        return acc

    def power(self) -> QRational:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = self.peek() == "-"
            if neg:
                self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ValueError("malformed exponent")
            return base ** (-int(tok) if neg else int(tok))
        return base

    def atom(self) -> QRational:
        tok = self.take()
        if tok == "q":
            return QRational.gen()
        if tok == "(":
            inner = self.expression()
            if self.take() != ")":
                raise ValueError("unbalanced parentheses in scalar")
            return inner
        if tok == "-":
            return -self.atom()
        if tok is not None and tok.isdigit():
            return QRational(int(tok))
        raise ValueError(f"unexpected token {tok!r} in scalar")


def parse_qrational(text: str) -> QRational:
    """Parse the textual scalar grammar.

    >>> parse_qrational("(q-1)/q") == (QRational.gen() - 1) / QRational.gen()
    True
    """
    parser = _ScalarParser(_tokenize(text))
    out = parser.expression()
    if parser.peek() is not None:
        raise ValueError(f"trailing tokens in scalar {text!r}")
    return out


# ---------------------------------------------------------------------------
# bivariate polynomials in (p, kappa) over Q
# ---------------------------------------------------------------------------

class PKPoly:
    """Element of Q[p, kappa]; sparse map (deg_p, deg_kappa) -> Fraction.

    >>> P_SYM * 2 + KAPPA_SYM
    PKPoly('kappa + 2*p')
    >>> (KAPPA_SYM - P_SYM) * (KAPPA_SYM + P_SYM)
    PKPoly('kappa^2 - p^2')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, PKPoly):
            self.coeffs = coeffs.coeffs
        elif isinstance(coeffs, dict):
            self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v}
        else:
            f = Fraction(coeffs)
            self.coeffs = {(0, 0): f} if f else {}

    @staticmethod
    def _coerce(other):
        if isinstance(other, PKPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PKPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            s = out.get(k, _ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PKPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PKPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in o.coeffs.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, _ZERO) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return PKPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only exact division by a rational constant is meaningful here
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return PKPoly({k: v * inv for k, v in self.coeffs.items()})
        if isinstance(other, PKPoly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs.get((0, 0), _ZERO)

    def evaluate(self, p0, kappa0):
        """Value at (p, kappa) = (p0, kappa0); exact for Fraction inputs,
        float for float inputs.

        >>> (KAPPA_SYM * 2 - P_SYM).evaluate(Fraction(1, 2), Fraction(3))
        Fraction(11, 2)
        """
        out = 0 * p0
        for (dp, dk), c in self.coeffs.items():
            out = out + c * p0 ** dp * kappa0 ** dk
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        def key(k):
            return (-(k[0] + k[1]), -k[1], -k[0])
        parts = []
        for (dp, dk) in sorted(self.coeffs, key=key):
            c = self.coeffs[(dp, dk)]
            names = []
            if dk:
                names.append("kappa" if dk == 1 else f"kappa^{dk}")
            if dp:
                names.append("p" if dp == 1 else f"p^{dp}")
            mono = "*".join(names)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"PKPoly('{self}')"


P_SYM = PKPoly({(1, 0): _ONE})
KAPPA_SYM = PKPoly({(0, 1): _ONE})
