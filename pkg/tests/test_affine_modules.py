"""Finite-dimensional module layer: relations, derivatives, induction."""

import itertools
import random
from fractions import Fraction
from math import factorial

import pytest

from hecke_bz.affine import AffineElement
from hecke_bz.affine.modules import (
    antispherical_apply,
    antispherical_generator,
    bz_derivative,
    bz_dimension,
    central_block,
    generic_guard,
    induce,
    leibniz_check,
    module_from_json,
    module_to_json,
    one_dimensional_module,
    principal_series,
    verify_relations,
)
from hecke_bz.combinatorics import Permutation, length, sym_group
from hecke_bz.linalg import mat_eq, mat_mul
from hecke_bz.scalars import QRational

q = QRational.gen()


def generic_char(n, seed):
    """Pairwise-distinct positive rationals, reproducible from the seed."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < n:
        v = Fraction(rng.randint(2, 40), rng.randint(1, 9))
        if v not in seen:
            seen.add(v)
            out.append(QRational(v))
    return tuple(out)


def random_element(n, rng):
    out = AffineElement.zero(n)
    for _ in range(3):
        x = tuple(rng.randint(-1, 1) for _ in range(n))
        w = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        c = QRational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        out = out + AffineElement.theta(n, x) * AffineElement.t(n, w) * c
    return out


def theta_traces(M):
    return [sum(M.theta[k][i][i] for i in range(M.dim)) for k in range(M.n)]


class TestRelations:
    """verify_relations is exact-zero on the built-in module families."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_principal_series(self, n):
        M = principal_series(n, generic_char(n, 100 + n))
        report = verify_relations(M)
        assert report["pass"], report
        assert report["worst"] == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("kind", ["index", "sign"])
    def test_one_dimensional(self, n, kind):
        D = one_dimensional_module(n, Fraction(5, 3), kind)
        assert D.dim == 1
        assert verify_relations(D)["pass"]

    def test_report_families(self):
        report = verify_relations(principal_series(2, generic_char(2, 7)))
        for family in ("quadratic", "cross_near", "theta_commute"):
            assert family in report["families"]

    def test_act_is_an_algebra_map(self):
        M = principal_series(3, generic_char(3, 11))
        rng = random.Random(3)
        for trial in range(6):
            a, b = random_element(3, rng), random_element(3, rng)
            assert mat_eq(M.act(a * b), mat_mul(M.act(a), M.act(b))), trial


class TestDerivatives:
    """Tail sign-isotypic restriction on principal series."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_generic_dimension_drop(self, n):
        t = generic_char(n, 200 + n)
        generic_guard(t)
        M = principal_series(n, t)
        for i in range(n + 1):
            d = bz_dimension(M, i)
            assert d == factorial(n) // factorial(i), (n, i, d)
            D = bz_derivative(M, i)
            assert D.dim == d and D.n == n - i

    def test_derived_module_satisfies_relations(self):
        M = principal_series(4, generic_char(4, 203))
        for i in (1, 2, 3):
            assert verify_relations(bz_derivative(M, i))["pass"], i

    def test_zeroth_derivative_is_identity(self):
        M = principal_series(2, generic_char(2, 205))
        D = bz_derivative(M, 0)
        assert D.dim == M.dim
        assert all(mat_eq(a, b) for a, b in zip(M.theta, D.theta))

    def test_full_derivative_is_a_line(self):
        M = principal_series(3, generic_char(3, 207))
        D = bz_derivative(M, 3)
        assert D.n == 0 and D.dim == 1

    def test_one_dimensional_derivative_dims(self):
        # order 1 is plain restriction, so it never drops dimension;
        # past that only the sign module survives the tail condition
        sign = one_dimensional_module(3, Fraction(2), "sign")
        index = one_dimensional_module(3, Fraction(2), "index")
        assert [bz_dimension(sign, i) for i in range(4)] == [1, 1, 1, 1]
        assert [bz_dimension(index, i) for i in range(4)] == [1, 1, 0, 0]


class TestInduction:
    def test_rank_one_times_rank_one(self):
        a, b = generic_char(1, 31), generic_char(1, 32)
        P = induce(principal_series(1, a), principal_series(1, b))
        R = principal_series(2, a + b)
        assert P.dim == R.dim == 2
        assert verify_relations(P)["pass"]
        assert theta_traces(P) == theta_traces(R)

    def test_two_plus_one_matches_full_principal_series(self):
        c2, c1 = generic_char(2, 33), generic_char(1, 34)
        M = induce(principal_series(2, c2), principal_series(1, c1))
        assert M.n == 3 and M.dim == 6
        assert verify_relations(M)["pass"]
        assert theta_traces(M) == theta_traces(principal_series(3, c2 + c1))

    def test_one_dimensional_factors(self):
        D1 = one_dimensional_module(2, Fraction(7, 2), "sign")
        D2 = one_dimensional_module(2, Fraction(3), "index")
        M = induce(D1, D2)
        assert M.dim == 6
        assert verify_relations(M)["pass"]

    def test_rank_zero_factor(self):
        # A full derivative leaves a module over the rank-zero algebra;
        # inducing with it must reproduce the other factor.
        point = bz_derivative(principal_series(1, generic_char(1, 35)), 1)
        assert point.n == 0 and point.dim == 1
        M2 = principal_series(2, generic_char(2, 36))
        M = induce(point, M2)
        assert M.n == 2 and M.dim == M2.dim
        assert theta_traces(M) == theta_traces(M2)

    def test_lengths_add_in_coset_factorization(self):
        c2, c1 = generic_char(2, 37), generic_char(1, 38)
        M = induce(principal_series(2, c2), principal_series(1, c1))
        assert verify_relations(M)["pass"]
        assert M.meta["t"] == c2 + c1


class TestCentralBlocks:
    def test_full_orbit_recovers_everything(self):
        t = generic_char(3, 41)
        M = principal_series(3, t)
        orbit = sorted(set(itertools.permutations(t)), key=str)
        assert central_block(M, orbit).dim == 6

    def test_off_orbit_point_gives_zero(self):
        t = generic_char(3, 41)
        M = principal_series(3, t)
        wrong = tuple(v * 7 for v in t)
        assert central_block(M, [wrong]).dim == 0

    def test_single_generic_point_gives_a_line(self):
        t = generic_char(3, 41)
        generic_guard(t)
        M = principal_series(3, t)
        assert central_block(M, [t]).dim == 1


class TestAntispherical:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sign_character_on_the_generator(self, n):
        gen = antispherical_generator(n)
        for w in sym_group(n):
            got = antispherical_apply(AffineElement.t(n, w), gen)
            want = {(0,) * n: QRational((-1) ** length(w))}
            assert got == want, (n, w, got)

    def test_action_is_associative(self):
        rng = random.Random(9)
        v = {(0, 1, -1): QRational(2), (0, 0, 0): QRational(1)}
        for trial in range(5):
            a, b = random_element(3, rng), random_element(3, rng)
            lhs = antispherical_apply(a, antispherical_apply(b, v))
            rhs = antispherical_apply(a * b, v)
            assert lhs == rhs, trial


class TestLeibniz:
    """Derivative-of-an-induced-module bookkeeping on fast cases.

    The full grid at the acceptance bound lives in the acceptance tests.
    """

    def test_rank_one_pair(self):
        M1 = principal_series(1, generic_char(1, 51))
        M2 = principal_series(1, generic_char(1, 52))
        for i in range(3):
            report = leibniz_check(M1, M2, i)
            assert report["pass"], (i, report)
            assert report["blocks_cover"]

    def test_mixed_ranks(self):
        M1 = principal_series(2, generic_char(2, 53))
        M2 = principal_series(1, generic_char(1, 54))
        for i in range(4):
            assert leibniz_check(M1, M2, i)["pass"], i

    def test_one_dimensional_pair(self):
        M1 = one_dimensional_module(2, Fraction(4, 3), "index")
        M2 = one_dimensional_module(2, Fraction(9, 5), "sign")
        for i in range(5):
            report = leibniz_check(M1, M2, i)
            assert report["pass"], (i, report)

    def test_report_shape(self):
        M1 = principal_series(1, generic_char(1, 55))
        M2 = principal_series(1, generic_char(1, 56))
        report = leibniz_check(M1, M2, 1)
        assert report["n"] == 2 and report["i"] == 1
        assert all(o["left"] == o["right"] for o in report["orbits"])
        assert report["left_dim"] == sum(o["left"] for o in report["orbits"])


class TestSerializationAndGuard:
    def test_json_round_trip(self):
        M = principal_series(2, generic_char(2, 61))
        M2 = module_from_json(module_to_json(M))
        assert M2.n == M.n and M2.dim == M.dim
        assert all(mat_eq(a, b) for a, b in zip(M.tee, M2.tee))
        assert all(mat_eq(a, b) for a, b in zip(M.theta, M2.theta))

    def test_json_round_trip_one_dimensional(self):
        D = one_dimensional_module(3, Fraction(2), "sign")
        D2 = module_from_json(module_to_json(D))
        assert all(mat_eq(a, b) for a, b in zip(D.theta, D2.theta))

    def test_guard_rejects_degenerate_characters(self):
        with pytest.raises(ValueError):
            generic_guard((QRational(0), QRational(2)))
        with pytest.raises(ValueError):
            generic_guard((QRational(2), QRational(2)))
        with pytest.raises(ValueError):
            generic_guard((QRational(2), QRational(2) * q))

    def test_guard_checks_numeric_ratio(self):
        with pytest.raises(ValueError):
            generic_guard((QRational(2), QRational(6)), q0=3)
        generic_guard((QRational(2), QRational(7)), q0=3)
