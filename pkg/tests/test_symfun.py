from modpalg import symfun
from modpalg.reports import PASS, PRECONDITION


def s(n, k, char=0):
    return symfun.sigma(n, k, char)


def test_nabla_on_generators():
    assert symfun.nabla(s(3, 2), 3) == s(3, 1).scale(2)
    assert symfun.nabla(s(3, 1), 3) == symfun.sym_algebra(3).one().scale(3)


def test_nabla_on_constant():
    one = symfun.sym_algebra(3).one()
    assert symfun.nabla(one, 3).is_zero()


def test_nabla_square_of_sigma1():
    assert symfun.nabla(s(3, 1) ** 2, 3) == s(3, 1).scale(6)


def test_nabla_via_t_oracle():
    f = s(3, 1) ** 2
    lhs = symfun.expand_in_t(symfun.nabla(f, 3), 3)
    rhs = symfun.sum_of_partials(symfun.expand_in_t(f, 3), 3)
    assert lhs == rhs


def test_expand_in_t_definitions():
    alg = symfun.t_algebra(2)
    t1, t2 = alg.gen("t1"), alg.gen("t2")
    assert symfun.expand_in_t(s(2, 1), 2) == t1 + t2
    assert symfun.expand_in_t(s(2, 2), 2) == t1 * t2
    assert symfun.expand_in_t(s(2, 1) ** 2, 2) == t1 ** 2 + (t1 * t2).scale(2) + t2 ** 2


def test_nabla_matrix_examples():
    assert symfun.nabla_matrix(3, 2, 0).matrix == [[6, 2]]
    assert symfun.nabla_matrix(1, 1, 0).matrix == [[1]]
    assert symfun.nabla_matrix(3, 1, 0).matrix == [[3]]


def test_nabla_matrix_shape_contract():
    slc = symfun.nabla_matrix(4, 3, 0)
    rows, cols = slc.shape
    assert rows == len(slc.target) and cols == len(slc.source)


def test_kernel_K_degree4():
    kern = symfun.kernel_K(3, 2)
    assert len(kern) == 1
    assert kern[0] == s(3, 1) ** 2 - s(3, 2).scale(3)


def test_kernel_K_trivial_degrees():
    assert symfun.kernel_K(3, 0) == [symfun.sym_algebra(3).one()]
    for n in (2, 3, 5):
        assert symfun.kernel_K(n, 1) == []


def test_kernel_K_elements_are_killed_exactly():
    for k in range(0, 8):
        for e in symfun.kernel_K(3, k):
            assert symfun.nabla(e, 3).is_zero()


def test_kernel_L_degree2():
    assert symfun.kernel_L(3, 3, 1) == [s(3, 1, 3)]
    assert symfun.kernel_L(3, 3, 0) == [symfun.sym_algebra(3, 3).one()]


def test_kernel_L_killed_mod_p():
    for e in symfun.kernel_L(3, 9, 9):
        assert symfun.nabla(e, 9).is_zero()
    assert symfun.kernel_L(3, 9, 9)


def test_coker_dim_examples():
    assert symfun.coker_dim(3, 3, 1) == 1
    # full row rank: n = 2 has nabla(s1) = 2, a unit mod 3
    assert symfun.coker_dim(3, 2, 1) == 0
    got = symfun.coker_dim(3, 9, 3)
    rank = symfun.dim_lambda(9, 3) - len(symfun.kernel_L(3, 9, 3))
    assert got == symfun.dim_lambda(9, 2) - rank


def test_rank_nullity():
    for n, k in [(3, 4), (9, 5), (5, 6)]:
        slc = symfun.nabla_matrix(n, k, 3)
        from modpalg import linalg
        rank = linalg.rank_mod(slc.matrix, 3)
        assert len(symfun.kernel_L(3, n, k)) + rank == symfun.dim_lambda(n, k)
        assert symfun.coker_dim(3, n, k) == symfun.dim_lambda(n, k - 1) - rank


def test_integer_kernel_reduces_into_mod_p_kernel():
    p, n = 3, 9
    for k in range(1, 7):
        lbasis = symfun.kernel_L(p, n, k)
        alg = symfun.sym_algebra(n, p)
        from modpalg import linalg
        lrows = [alg.coords(e, 2 * k) for e in lbasis]
        for e in symfun.kernel_K(n, k):
            reduced = [c % p for c in symfun.sym_algebra(n, 0).coords(e, 2 * k)]
            assert linalg.row_space_contains(lrows, reduced, p)


def test_check_nabla_onto():
    assert symfun.check_nabla_onto_2p(3, 3).status == PASS
    assert symfun.check_nabla_onto_2p(3, 9).status == PASS
    assert symfun.check_nabla_onto_2p(5, 5).status == PASS
    assert symfun.check_nabla_onto_2p(3, 4).status == PRECONDITION


def test_check_ln_lemma():
    assert symfun.check_Ln_lemma(3, 9).status == PASS
    assert symfun.check_Ln_lemma(3, 18).status == PASS
    assert symfun.check_Ln_lemma(3, 10).status == PRECONDITION


def test_sigma_p_to_the_p_is_closed_mod_p():
    # nabla(s_p^p) = p (n-p+1) s_p^{p-1} s_{p-1} has coefficient p
    p, n = 3, 9
    e = symfun.sigma(n, p, p) ** p
    assert symfun.nabla(e, n).is_zero()
    over_z = symfun.sigma(n, p, 0) ** p
    img = symfun.nabla(over_z, n)
    assert not img.is_zero()
    assert all(c % p == 0 for c in img.terms.values())
