import pytest

from modpalg import spectral, symfun
from modpalg.reports import PASS
from modpalg.spectral import KZ3Monomial, d3_matrix, e4_rank, kz3_basis


def test_kz3_basis_degree3():
    assert kz3_basis(3, 3) == (KZ3Monomial(1, 0, 0, 0),)


def test_kz3_basis_degree8():
    assert kz3_basis(3, 8) == (KZ3Monomial(0, 1, 0, 0),)


def test_kz3_basis_top_degree():
    # degree 2p^2 + 2p + 3 = 27 at p = 3: x*y0^3 before y01
    assert kz3_basis(3, 27) == (KZ3Monomial(1, 3, 0, 0), KZ3Monomial(0, 0, 0, 1))


def test_kz3_basis_rejects_beyond_bound():
    with pytest.raises(ValueError):
        kz3_basis(3, 28)


def test_kz3_basis_degrees_consistent():
    for d in range(0, spectral.truncation_bound(3) + 1):
        for m in kz3_basis(3, d):
            assert spectral.kz3_degree(3, m) == d


def test_torsion_marker():
    assert not spectral.is_torsion(KZ3Monomial(0, 0, 0, 0))
    assert not spectral.is_torsion(KZ3Monomial(1, 0, 0, 0))
    assert spectral.is_torsion(KZ3Monomial(0, 1, 0, 0))
    assert spectral.is_torsion(KZ3Monomial(1, 0, 1, 0))


def test_d3_from_base_row_is_nabla_into_x_row():
    slc = d3_matrix(3, 3, 0, 4)
    nab = symfun.nabla_matrix(3, 2, 0)
    assert slc.matrix == nab.matrix
    assert slc.char == 0  # 1 row to x row stays integral


def test_d3_out_of_x_row_vanishes():
    slc = d3_matrix(3, 3, 3, 4)
    assert all(all(x == 0 for x in row) for row in slc.matrix)


def test_d3_torsion_rows_are_reduced():
    slc = d3_matrix(3, 9, 8, 6)  # y0 row into x*y0 row
    assert slc.char == 3
    assert all(0 <= x < 3 for row in slc.matrix for x in row)
    nab = symfun.nabla_matrix(9, 3, 3)
    assert slc.matrix == nab.matrix


def test_d3_squared_at_origin():
    m1 = d3_matrix(3, 3, 0, 6)
    m2 = d3_matrix(3, 3, 3, 4)
    from modpalg import linalg
    comp = linalg.mat_mul(m2.matrix, m1.matrix)
    assert all(all(x == 0 for x in row) for row in comp)


def test_e4_rank_base_column_is_integer_kernel():
    for n in (3, 9):
        for k in range(0, 13):
            assert e4_rank(3, n, 0, 2 * k) == len(symfun.kernel_K(n, k))


def test_d3_matrix_agrees_with_nabla_on_vectors():
    import random

    from modpalg import linalg
    rng = random.Random(99)
    alg = symfun.sym_algebra(3, 3)
    for k in (2, 3, 4):
        slc = d3_matrix(3, 3, 8, 2 * k)  # y0 row into x*y0 row
        for _ in range(20):
            vec = [rng.randrange(3) for _ in range(len(alg.basis(2 * k)))]
            f = alg.from_coords(vec, 2 * k)
            img = symfun.nabla(f, 3)
            matvec = [sum(row[c] * vec[c] for c in range(len(vec))) % 3
                      for row in slc.matrix]
            assert matvec == alg.coords(img, 2 * k - 2)


def test_e4_rank_x_column_is_mod_p_cokernel():
    for k in range(0, 8):
        assert e4_rank(3, 3, 3, 2 * k) == symfun.coker_dim(3, 3, k + 1)


def test_e4_rank_y0_column_is_mod_p_kernel():
    for k in range(0, 8):
        assert e4_rank(3, 9, 8, 2 * k) == len(symfun.kernel_L(3, 9, k))


def test_e4_rank_empty_slice():
    assert e4_rank(3, 3, 1, 4) == 0  # no base monomial of degree 1


def test_verify_e4_identities():
    assert spectral.verify_e4_identities(3, 3, 10).status == PASS
    assert spectral.verify_e4_identities(3, 9, 10).status == PASS
    assert spectral.verify_e4_identities(3, 3, 0).status == PASS  # trivially
    assert spectral.verify_e4_identities(4, 3, 5).status == "precondition-error"


def test_d3_matrix_validates_region():
    with pytest.raises(ValueError):
        d3_matrix(3, 3, 25, 4)  # target degree 28 beyond the bound
    with pytest.raises(ValueError):
        d3_matrix(3, 3, 0, 3)  # odd fiber degree
