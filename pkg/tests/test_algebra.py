import pytest

from modpalg.algebra import Monomial, make_algebra

BGAMMA_GENS = [("xi", 2, "even"), ("eta", 2, "even"), ("a", 1, "odd"), ("b", 1, "odd")]


@pytest.fixture
def bg3():
    return make_algebra(BGAMMA_GENS, char=3)


def test_make_algebra_bgamma(bg3):
    assert bg3.char == 3
    assert [g.name for g in bg3.gens] == ["xi", "eta", "a", "b"]


def test_make_algebra_ground_field():
    alg = make_algebra([], char=3)
    assert alg.basis(0) == (Monomial((), ()),)
    assert alg.one() + alg.one() + alg.one() == alg.zero()


def test_make_algebra_lambda_n_over_z():
    alg = make_algebra([(f"s{i}", 2 * i, "even") for i in range(1, 4)], char=0)
    assert alg.char == 0
    assert alg.gens[2].degree == 6


def test_make_algebra_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate"):
        make_algebra([("x", 2, "even"), ("x", 4, "even")], char=3)


def test_make_algebra_rejects_parity_mismatch():
    with pytest.raises(ValueError, match="odd-type"):
        make_algebra([("a", 2, "odd")], char=3)
    with pytest.raises(ValueError, match="even-type"):
        make_algebra([("x", 3, "even")], char=3)


def test_make_algebra_rejects_bad_char():
    with pytest.raises(ValueError):
        make_algebra(BGAMMA_GENS, char=4)


def test_odd_anticommute(bg3):
    a, b = bg3.gen("a"), bg3.gen("b")
    assert b * a == -(a * b)


def test_exterior_square_of_term_vanishes(bg3):
    xi, b = bg3.gen("xi"), bg3.gen("b")
    assert ((xi * b) * (xi * b)).is_zero()


def test_odd_degree_element_squares_to_zero(bg3):
    xi, eta, a, b = (bg3.gen(n) for n in ("xi", "eta", "a", "b"))
    s = xi * b - eta * a
    assert (s * s).is_zero()


def test_add_cancels(bg3):
    xi = bg3.gen("xi")
    assert (xi + xi.scale(-1)).is_zero()


def test_characteristic(bg3):
    assert bg3.gen("xi").scale(3).is_zero()


def test_dickson_f_from_sum(bg3):
    xi, eta = bg3.gen("xi"), bg3.gen("eta")
    f = xi ** 3 * eta + (-(eta ** 3 * xi))
    assert f == xi ** 3 * eta - eta ** 3 * xi
    assert f.degree() == 8


def test_homogeneous_component(bg3):
    xi = bg3.gen("xi")
    e = xi + xi ** 3
    assert e.homogeneous_component(6) == xi ** 3
    assert e.homogeneous_component(4).is_zero()
    assert bg3.zero().homogeneous_component(10).is_zero()


def test_component_of_homogeneous_is_identity(bg3):
    xi, eta = bg3.gen("xi"), bg3.gen("eta")
    f = xi ** 3 * eta - eta ** 3 * xi
    assert f.homogeneous_component(8) == f


def test_components_recover_element(bg3):
    xi, a = bg3.gen("xi"), bg3.gen("a")
    e = xi + xi * a + xi ** 2
    total = bg3.zero()
    for comp in e.components().values():
        total = total + comp
    assert total == e


def test_basis_bgamma_degree2(bg3):
    names = [bg3.monomial_str(m) for m in bg3.basis(2)]
    assert names == ["xi", "eta", "a*b"]


def test_basis_lambda3_degree4():
    alg = make_algebra([(f"s{i}", 2 * i, "even") for i in range(1, 4)], char=0)
    names = [alg.monomial_str(m) for m in alg.basis(4)]
    assert names == ["s1^2", "s2"]


def test_basis_degree0(bg3):
    assert [bg3.monomial_str(m) for m in bg3.basis(0)] == ["1"]


def test_coords_of_dickson_f(bg3):
    xi, eta = bg3.gen("xi"), bg3.gen("eta")
    f = xi ** 3 * eta - eta ** 3 * xi
    vec = bg3.coords(f, 8)
    basis = [bg3.monomial_str(m) for m in bg3.basis(8)]
    assert vec[basis.index("xi^3*eta")] == 1
    assert vec[basis.index("xi*eta^3")] == 2  # -1 mod 3
    assert sum(1 for x in vec if x) == 2


def test_coords_of_zero(bg3):
    assert bg3.coords(bg3.zero(), 6) == [0] * len(bg3.basis(6))


def test_coords_over_z():
    alg = make_algebra([(f"s{i}", 2 * i, "even") for i in range(1, 4)], char=0)
    s1, s2 = alg.gen("s1"), alg.gen("s2")
    assert alg.coords(s1 ** 2 - s2.scale(3), 4) == [1, -3]


def test_coords_rejects_nonhomogeneous(bg3):
    xi = bg3.gen("xi")
    with pytest.raises(ValueError):
        bg3.coords(xi + xi ** 2, 2)


def test_coords_roundtrip(bg3):
    for m in bg3.basis(7):
        e = bg3.element({m: 1})
        vec = bg3.coords(e, 7)
        assert sum(vec) == 1 and max(vec) == 1
        assert bg3.from_coords(vec, 7) == e


def test_degree_additivity(bg3):
    xi, a = bg3.gen("xi"), bg3.gen("a")
    assert (xi * a).degree() == 3


def test_mixed_element_degree_raises(bg3):
    xi = bg3.gen("xi")
    with pytest.raises(ValueError):
        (xi + xi ** 2).degree()


def test_elements_of_different_algebras_do_not_mix(bg3):
    other = make_algebra(BGAMMA_GENS, char=5)
    with pytest.raises(ValueError):
        bg3.gen("xi") + other.gen("xi")
