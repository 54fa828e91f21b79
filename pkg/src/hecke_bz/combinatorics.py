"""Partitions, permutations, standard tableaux, and character combinatorics.

This is the combinatorial backbone for everything else: length and reduced
words for S_n, minimal coset representatives for Young subgroups, vertical
strips (the Pieri shapes), Murnaghan-Nakayama character values, and the
standard-tableau bookkeeping that indexes seminormal bases.

Conventions, fixed once:

* Permutations are bijections of {1..n}; the one-line word of w is
  (w(1), ..., w(n)) and products compose as functions, (v*w)(i) = v(w(i)).
* s_j is the adjacent transposition (j, j+1), 1 <= j <= n-1.
* Partitions are weakly decreasing tuples of positive integers; lists of
  partitions are always returned in descending lexicographic order.
* Standard tableaux of a fixed shape are kept in last-letter order: sort
  by the row index of n, then recursively on the tableau with n removed.
  Box contents are column - row (0-indexed).

>>> length(Permutation((2, 1, 4, 3)))
2
>>> vertical_strips((2, 2), 1)
[(2, 1)]
>>> mn_character((2, 1), (3,))
-1
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import permutations as _itertools_permutations
from math import factorial

__all__ = [
    "Permutation",
    "StandardTableau",
    "length",
    "reduced_word",
    "min_coset_reps",
    "vertical_strips",
    "mn_character",
    "hook_dimension",
    "partitions",
    "is_partition",
    "conjugate_partition",
    "standard_tableaux",
    "sym_group",
    "cycle_type",
    "class_size",
    "centralizer_order",
    "class_representative",
    "parse_partition",
    "render_partition",
    "parse_permutation",
    "render_permutation",
]


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> s1 = Permutation.adjacent(3, 1)
    >>> s2 = Permutation.adjacent(3, 2)
    >>> (s1 * s2).word
    (2, 3, 1)
    >>> (s1 * s2)(3)
    1
    """

    __slots__ = ("word", "_hash")

    def __init__(self, word):
        word = tuple(word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation one-line word: {word}")
        self.word = word
        self._hash = hash(word)

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def adjacent(cls, n: int, j: int) -> "Permutation":
        """The generator s_j in S_n."""
        if not 1 <= j <= n - 1:
            raise ValueError(f"s_{j} is not a generator of S_{n}")
        word = list(range(1, n + 1))
        word[j - 1], word[j] = word[j], word[j - 1]
        return cls(word)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        word = list(range(1, n + 1))
        word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
        return cls(word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.word):
            out[v - 1] = i + 1
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.word))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation"):
        return self.word < other.word

    def __repr__(self):
        return f"Permutation({self.word})"


def length(w: Permutation) -> int:
    """Coxeter length = inversion count of the one-line word."""
    word = w.word
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word [a_1, ..., a_l] with w = s_{a_1} * ... * s_{a_l}.

    Deterministic: peels the smallest descent from the right.

    >>> reduced_word(Permutation((3, 2, 1)))
    [1, 2, 1]
    """
    word = list(w.word)
    letters: list[int] = []
    while True:
        j = next((k for k in range(len(word) - 1) if word[k] > word[k + 1]), None)
        if j is None:
            break
        word[j], word[j + 1] = word[j + 1], word[j]
        letters.append(j + 1)
    letters.reverse()
    return letters


@cache
def sym_group(n: int) -> tuple[Permutation, ...]:
    """All of S_n, sorted by (length, one-line word)."""
    elems = [Permutation(p) for p in _itertools_permutations(range(1, n + 1))]
    elems.sort(key=lambda w: (length(w), w.word))
    return tuple(elems)


def min_coset_reps(n: int, composition) -> list[Permutation]:
    """Minimal-length representatives of the left cosets w*S_c of the
    Young subgroup of the composition, i.e. the w that increase on every
    block.  Sorted by (length, word).

    >>> [w.word for w in min_coset_reps(3, (2, 1))]
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    composition = tuple(composition)
    if any(c <= 0 for c in composition) or sum(composition) != n:
        raise ValueError(f"invalid composition {composition} of {n}")
    blocks = []
    start = 1
    for c in composition:
        blocks.append(range(start, start + c - 1))
        start += c
    inner = [j for block in blocks for j in block]
    reps = [
        w
        for w in sym_group(n)
        if all(w(j) < w(j + 1) for j in inner)
    ]
    expected = factorial(n)
    for c in composition:
        expected //= factorial(c)
    assert len(reps) == expected
    return reps


def cycle_type(w: Permutation) -> tuple[int, ...]:
    """The partition of cycle lengths of w."""
    seen = [False] * w.n
    lengths = []
    for start in range(1, w.n + 1):
        if seen[start - 1]:
            continue
        size, i = 0, start
        while not seen[i - 1]:
            seen[i - 1] = True
            i = w(i)
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def class_representative(mu) -> Permutation:
    """A permutation with cycle type mu, cycles laid out in blocks."""
    word: list[int] = []
    start = 1
    for part in mu:
        word.extend(range(start + 1, start + part))
        word.append(start)
        start += part
    return Permutation(word)


def centralizer_order(mu) -> int:
    """z_mu = prod k^{m_k} m_k! over the multiplicities of mu."""
    out = 1
    for part in set(mu):
        m = list(mu).count(part)
        out *= part ** m * factorial(m)
    return out


def class_size(mu) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@cache
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in descending lexicographic order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("negative size")

    def gen(rest: int, max_part: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, max_part), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def conjugate_partition(parts) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p > r) for r in range(parts[0])
    )


def vertical_strips(shape, i: int) -> list[tuple[int, ...]]:
    """All partitions obtained by removing i boxes from shape with at
    most one box per row, in descending lexicographic order.

    >>> vertical_strips((2, 2), 2)
    [(1, 1)]
    >>> vertical_strips((3,), 2)
    []
    """
    shape = tuple(shape)
    if not is_partition(shape) and shape != ():
        raise ValueError(f"not a partition: {shape}")
    if not 0 <= i <= sum(shape):
        raise ValueError(f"cannot remove {i} boxes from {shape}")
    out = []

    def gen(row: int, todo: int, prev: int, acc: tuple[int, ...]):
        if row == len(shape):
            if todo == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        for remove in (0, 1):
            if remove > todo:
                continue
            new = shape[row] - remove
            if new < 0 or new > prev:
                continue
            gen(row + 1, todo - remove, new, acc + (new,))

    gen(0, i, shape[0] if shape else 0, ())
    return sorted(set(out), reverse=True)


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse "3,2,2"; the empty partition is "∅" or "-" (or "")."""
    text = text.strip()
    if text in ("∅", "-", ""):
        return ()
    parts = tuple(int(p) for p in text.split(","))
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def render_partition(parts) -> str:
    return ",".join(str(p) for p in parts) if parts else "∅"


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation "2 1 4 3"."""
    return Permutation(int(v) for v in text.split())


def render_permutation(w: Permutation) -> str:
    return " ".join(str(v) for v in w.word)


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------

class StandardTableau:
    """A standard filling of a Young diagram by 1..n.

    >>> t = StandardTableau(((1, 3), (2,)))
    >>> t.position(3)
    (0, 1)
    >>> t.content(3)
    1
    """

    __slots__ = ("rows", "shape", "_pos")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.shape = tuple(len(r) for r in self.rows)
        if not is_partition(self.shape) and self.shape != ():
            raise ValueError("row lengths must form a partition")
        n = sum(self.shape)
        pos: dict[int, tuple[int, int]] = {}
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                pos[v] = (r, c)
        if sorted(pos) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r, row in enumerate(self.rows):
            for c in range(len(row)):
                if c + 1 < len(row) and row[c] >= row[c + 1]:
                    raise ValueError("rows must increase")
                if r + 1 < len(self.rows) and c < len(self.rows[r + 1]) and \
                        row[c] >= self.rows[r + 1][c]:
                    raise ValueError("columns must increase")
        self._pos = pos

    @property
    def n(self) -> int:
        return sum(self.shape)

    def position(self, letter: int) -> tuple[int, int]:
        return self._pos[letter]

    def content(self, letter: int) -> int:
        r, c = self._pos[letter]
        return c - r

    def last_letter_key(self) -> tuple[int, ...]:
        """Row indices of n, n-1, ..., 2; the global tableau order."""
        return tuple(self._pos[k][0] for k in range(self.n, 1, -1))

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({self.rows})"


@cache
def standard_tableaux(shape) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the shape, in last-letter order.

    >>> [t.rows for t in standard_tableaux((2, 1))]
    [((1, 3), (2,)), ((1, 2), (3,))]
    """
    shape = tuple(shape)
    if shape == ():
        return (StandardTableau(()),)
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    n = sum(shape)
    out = []
    corners = [
        r
        for r in range(len(shape))
        if (r + 1 == len(shape) or shape[r] > shape[r + 1])
    ]
    # building corner-row-ascending on n, then recursively, yields exactly
    # the last-letter order
    for r in corners:
        sub = tuple(
            p - 1 if idx == r else p for idx, p in enumerate(shape)
        )
        sub = tuple(p for p in sub if p > 0)
        for t in standard_tableaux(sub):
            rows = [list(row) for row in t.rows]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(n)
            out.append(StandardTableau(rows))
    assert [t.last_letter_key() for t in out] == sorted(
        t.last_letter_key() for t in out
    )
    return tuple(out)


def hook_dimension(shape) -> int:
    """Number of standard tableaux (hook-length formula).

    >>> hook_dimension((2, 2))
    2
    """
    shape = tuple(shape)
    if shape == ():
        return 1
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    conj = conjugate_partition(shape)
    hooks = 1
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            hooks *= (row_len - c) + (conj[c] - r) - 1
    return factorial(sum(shape)) // hooks


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters
# ---------------------------------------------------------------------------

@cache
def mn_character(lam, mu) -> int:
    """Irreducible character value chi_lambda on the class of cycle type
    mu, by the Murnaghan-Nakayama border-strip recursion on beta-numbers.
    Always an integer (returned as int; it embeds in BigRational
    arithmetic unchanged).

    >>> mn_character((1, 1, 1), (2, 1))
    -1
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    r = len(lam)
    beta = [lam[i] + (r - 1 - i) for i in range(r)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((bset - {b}) | {nb}, reverse=True)
        nlam = tuple(
            x - (r - 1 - i) for i, x in enumerate(nbeta)
        )
        nlam = tuple(x for x in nlam if x > 0)
        total += (-1) ** height * mn_character(nlam, rest)
    return total


def sn_multiplicities(trace_fn, m: int) -> dict[tuple[int, ...], Fraction]:
    """Multiplicity of each irreducible in a representation of S_m given
    only by its class traces: (1/m!) * sum |class| * trace * character.
    trace_fn maps a cycle-type partition to the trace on that class."""
    traces = {mu: trace_fn(mu) for mu in partitions(m)}
    out: dict[tuple[int, ...], Fraction] = {}
    for lam in partitions(m):
        acc = Fraction(0)
        for mu, tr in traces.items():
            acc += Fraction(class_size(mu)) * Fraction(tr) * mn_character(lam, mu)
        out[lam] = acc / factorial(m)
    return out
