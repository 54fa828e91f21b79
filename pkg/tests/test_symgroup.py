from fractions import Fraction

import pytest

from hecke_bz.combinatorics import (
    Permutation,
    hook_dimension,
    partitions,
    sym_group,
    vertical_strips,
)
from hecke_bz.linalg import identity, mat_eq, mat_mul
from hecke_bz.symgroup import (
    decompose_sn,
    perm_matrix,
    sign_idempotent_matrix,
    sign_isotypic,
    specht_module,
)


class TestSeminormalModules:
    def test_coxeter_relations_and_jm_diagonality(self):
        for n in range(2, 6):
            for lam in partitions(n):
                M = specht_module(lam)
                ident = identity(M.dim)
                for g in M.gens:
                    assert mat_eq(mat_mul(g, g), ident)
                for j in range(len(M.gens) - 1):
                    a, b = M.gens[j], M.gens[j + 1]
                    assert mat_eq(mat_mul(a, mat_mul(b, a)),
                                  mat_mul(b, mat_mul(a, b)))
                for k in range(1, n + 1):
                    diag = M.jm_diagonal(k)
                    full = M.jm_matrix_sum(k)
                    for r in range(M.dim):
                        for c in range(M.dim):
                            want = diag[r] if r == c else 0
                            assert full[r][c] == want

    def test_perm_matrix_is_a_homomorphism(self):
        M = specht_module((2, 1))
        G = sym_group(3)
        for v in G:
            for w in G:
                assert mat_eq(perm_matrix(M.gens, v * w),
                              mat_mul(perm_matrix(M.gens, v),
                                      perm_matrix(M.gens, w)))

    def test_dimensions(self):
        assert specht_module((3, 2)).dim == 5
        assert specht_module((2, 2, 1)).dim == 5
        assert specht_module((1, 1, 1)).dim == 1


class TestDecompose:
    def test_self_recognition(self):
        for n in range(1, 7):
            for lam in partitions(n):
                got = decompose_sn(specht_module(lam).gens,
                                   dim=specht_module(lam).dim,
                                   m=n)
                assert got == {lam: 1}

    def test_regular_representation(self):
        n = 4
        G = sym_group(n)
        index = {w: i for i, w in enumerate(G)}
        gens = []
        for a in range(1, n):
            s = Permutation.adjacent(n, a)
            mat = [[Fraction(0)] * len(G) for _ in range(len(G))]
            for col, w in enumerate(G):
                mat[index[s * w]][col] = Fraction(1)
            gens.append(mat)
        got = decompose_sn(gens)
        assert got == {lam: hook_dimension(lam) for lam in partitions(n)}

    def test_rejects_non_module(self):
        bad = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1)]]
        with pytest.raises(ValueError):
            decompose_sn([bad])

    def test_rank_zero_front(self):
        assert decompose_sn([], dim=3, m=0) == {(): 3}
        assert decompose_sn([], dim=0, m=0) == {}
        assert decompose_sn([], dim=2, m=1) == {(1,): 2}


class TestSignIsotypic:
    def test_idempotent_square(self):
        for n, i in ((3, 2), (4, 2), (4, 3), (5, 3)):
            M = specht_module((n - 1, 1) if n > 1 else (1,))
            P = sign_idempotent_matrix(M.gens, n, i)
            assert mat_eq(mat_mul(P, P), P)

    def test_master_vertical_strip_check(self):
        for n in range(1, 7):
            for lam in partitions(n):
                M = specht_module(lam)
                for i in range(n + 1):
                    sub, front = sign_isotypic(M.gens, i, dim=M.dim)
                    want = {mu: 1 for mu in vertical_strips(lam, i)}
                    if sub.dim == 0:
                        assert not want, (lam, i)
                        continue
                    got = decompose_sn(front, dim=sub.dim, m=n - i)
                    assert got == want, (lam, i)

    def test_master_check_n7_spots(self):
        for lam in ((4, 2, 1), (3, 3, 1), (2, 2, 2, 1)):
            M = specht_module(lam)
            for i in (1, 2, 3):
                sub, front = sign_isotypic(M.gens, i)
                want = {mu: 1 for mu in vertical_strips(lam, i)}
                if sub.dim == 0:
                    assert not want
                    continue
                got = decompose_sn(front, dim=sub.dim, m=7 - i)
                assert got == want
