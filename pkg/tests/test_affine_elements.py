import random
from fractions import Fraction

from hecke_bz.affine import (
    AffineElement,
    levi_embed,
    oracle_apply,
    parse_affine,
    render_affine,
    sign_projector_tail,
)
from hecke_bz.combinatorics import Permutation
from hecke_bz.scalars import QRational

q = QRational.gen()


def rand_element(n, rng, terms=3):
    out = AffineElement.zero(n)
    for _ in range(terms):
        x = tuple(rng.randint(-2, 2) for _ in range(n))
        w = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        c = QRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        out = out + AffineElement.theta(n, x) * AffineElement.t(n, w) * c
    return out


def rand_poly(n, rng, terms=2):
    out = {}
    for _ in range(terms):
        y = tuple(rng.randint(-2, 2) for _ in range(n))
        out[y] = QRational(rng.randint(1, 4))
    return out


def oracle_agree(a, b, probes):
    prod = a * b
    return all(
        oracle_apply(prod, f) == oracle_apply(a, oracle_apply(b, f))
        for f in probes)


class TestOracleOperators:
    def test_quadratic_on_polynomials(self):
        rng = random.Random(3)
        for n in (2, 3):
            t = AffineElement.t_gen(n, 1)
            lhs = t * t
            rhs = t * (q - 1) + AffineElement.one(n) * q
            for _ in range(5):
                f = rand_poly(n, rng)
                assert oracle_apply(lhs, f) == oracle_apply(rhs, f)

    def test_braid_on_polynomials(self):
        rng = random.Random(4)
        n = 3
        t1, t2 = AffineElement.t_gen(n, 1), AffineElement.t_gen(n, 2)
        for _ in range(5):
            f = rand_poly(n, rng)
            assert oracle_apply(t1 * t2 * t1, f) \
                == oracle_apply(t2 * t1 * t2, f)


class TestMultiplicationAgainstOracle:
    def test_generator_pairs(self):
        rng = random.Random(5)
        for n in (2, 3):
            gens = [AffineElement.t_gen(n, a) for a in range(1, n)]
            gens += [AffineElement.theta(
                n, tuple(1 if i == k else 0 for i in range(n)))
                for k in range(n)]
            gens.append(AffineElement.theta(
                n, tuple(-1 if i == 0 else 0 for i in range(n))))
            probes = [rand_poly(n, rng) for _ in range(3)]
            probes.append({(0,) * n: QRational(1)})
            for a in gens:
                for b in gens:
                    assert oracle_agree(a, b, probes)

    def test_random_pairs(self):
        rng = random.Random(6)
        for n in (2, 3):
            probes = [rand_poly(n, rng) for _ in range(3)]
            for _ in range(30):
                a, b = rand_element(n, rng), rand_element(n, rng)
                assert oracle_agree(a, b, probes)

    def test_associativity(self):
        rng = random.Random(7)
        for _ in range(20):
            a = rand_element(3, rng)
            b = rand_element(3, rng)
            c = rand_element(3, rng)
            assert (a * b) * c == a * (b * c)


class TestCrossRelation:
    def test_closed_form(self):
        for n in (2, 3):
            for j in range(1, n):
                tj = AffineElement.t_gen(n, j)
                for x in _small_weights(n):
                    th = AffineElement.theta(n, x)
                    sx = list(x)
                    sx[j - 1], sx[j] = sx[j], sx[j - 1]
                    ths = AffineElement.theta(n, tuple(sx))
                    lhs = th * tj - tj * ths
                    m = x[j - 1] - x[j]
                    rhs = AffineElement.zero(n)
                    if m >= 0:
                        w = list(x)
                        for _ in range(m):
                            rhs = rhs + AffineElement.theta(n, tuple(w))
                            w[j - 1] -= 1
                            w[j] += 1
                    else:
                        w = list(x)
                        for _ in range(-m):
                            w[j - 1] += 1
                            w[j] -= 1
                            rhs = rhs - AffineElement.theta(n, tuple(w))
                    assert lhs == rhs * (q - 1), (n, j, x)


def _small_weights(n):
    if n == 2:
        rng = range(-2, 3)
        return [(a, b) for a in rng for b in rng]
    rng = range(-1, 2)
    return [(a, b, c) for a in rng for b in rng for c in rng]


class TestEmbeddingsAndTail:
    def test_levi_embed_is_multiplicative(self):
        rng = random.Random(8)
        for _ in range(10):
            a1, b1 = rand_element(2, rng), rand_element(2, rng)
            a2, b2 = rand_element(2, rng), rand_element(2, rng)
            lhs = levi_embed(a1 * b1, a2 * b2)
            rhs = levi_embed(a1, a2) * levi_embed(b1, b2)
            assert lhs == rhs

    def test_tail_projector_eigenproperty(self):
        n, i = 4, 3
        e = sign_projector_tail(n, i)
        for a in range(n - i + 1, n):
            t = AffineElement.t_gen(n, a)
            assert t * e == e * (-1)
            assert e * t == e * (-1)

    def test_tail_trivial(self):
        assert sign_projector_tail(3, 1) == AffineElement.one(3)
        assert sign_projector_tail(3, 0) == AffineElement.one(3)


class TestGrammar:
    def test_documented_round_trip(self):
        text = "th[(1,0,-1)] * T[2 1 3] * ((q - 1)/q)"
        el = parse_affine(text, 3)
        assert render_affine(el) == text

    def test_round_trip_random(self):
        rng = random.Random(9)
        for _ in range(40):
            el = rand_element(3, rng)
            assert parse_affine(render_affine(el), 3) == el

    def test_identity_renders(self):
        assert render_affine(AffineElement.one(2)) == "T[1 2]"
