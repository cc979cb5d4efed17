import pytest

from modpalg import invariants
from modpalg.invariants import GroupAction, generate_group, sl2_generators
from modpalg.reports import PASS
from modpalg.topology import gamma_model


def test_sl2_f3_order():
    group = generate_group(sl2_generators(3), 3)
    assert len(group) == 24


def test_identity_only_group():
    assert generate_group([((1, 0), (0, 1))], 3) == [((1, 0), (0, 1))]


def test_sl2_f5_order():
    assert len(generate_group(sl2_generators(5), 5)) == 120


def test_generate_group_rejects_singular():
    with pytest.raises(ValueError):
        generate_group([((1, 1), (1, 1))], 3)


def test_group_closed_under_product_and_inverse():
    p = 3
    group = set(generate_group(sl2_generators(p), p))
    from modpalg.invariants import mat_mul2
    for g in list(group)[:8]:
        for h in list(group)[:8]:
            assert mat_mul2(g, h, p) in group
        inv = ((g[1][1], (-g[0][1]) % p), ((-g[1][0]) % p, g[0][0]))
        assert inv in group


def test_act_column_convention():
    action = GroupAction(3)
    m = action.model
    g = ((1, 1), (0, 1))
    assert action.act(g, m.xi()) == m.xi()
    assert action.act(g, m.eta()) == m.xi() + m.eta()


def test_identity_acts_trivially():
    action = GroupAction(3)
    e = action.model.xi() ** 2 * action.model.a()
    assert action.act(((1, 0), (0, 1)), e) == e


def test_s_invariant_under_whole_group():
    action = GroupAction(3)
    s = action.model.s()
    assert all(action.act(g, s) == s for g in action.group())


def test_invariant_subspace_degree3():
    action = GroupAction(3)
    inv = invariants.invariant_subspace(action, 3)
    assert len(inv) == 1
    s = action.model.s()
    assert inv.basis[0] in (s, s.scale(2))  # the line spanned by s


def test_invariant_subspace_degree1_empty():
    assert len(invariants.invariant_subspace(GroupAction(3), 1)) == 0


def test_invariant_subspace_degree0():
    action = GroupAction(3)
    inv = invariants.invariant_subspace(action, 0)
    assert len(inv) == 1 and inv.basis[0] == action.model.alg.one()


def test_dickson_elements_p3():
    f, h = invariants.dickson_elements(3)
    m = gamma_model(3, 1)
    xi, eta = m.xi(), m.eta()
    assert f == xi ** 3 * eta - eta ** 3 * xi
    assert f.degree() == 8
    assert h == xi ** 6 + eta ** 2 * (xi ** 2 - eta ** 2) ** 2
    assert h.degree() == 12


def test_dickson_invariance_exhaustive():
    action = GroupAction(3)
    f, h = invariants.dickson_elements(3)
    for g in action.group():
        assert action.act(g, f) == f
        assert action.act(g, h) == h


def test_mui_elements_degrees():
    p = 3
    s, y, z, w, e = invariants.mui_elements(p)
    assert [x.degree() for x in (s, y, z, w, e)] == [3, 2, 2 * p + 1, 2 * p * p + 1, 2 * p * p + 2]
    m = gamma_model(p, 1)
    assert z == m.xi() ** 3 * m.b() - m.eta() ** 3 * m.a()
    assert w == m.xi() ** 9 * m.b() - m.eta() ** 9 * m.a()
    assert (y * s).is_zero()


def test_prop_relation_collapses():
    for p in (3, 5):
        s, y, z, w, e = invariants.mui_elements(p)
        f, h = invariants.dickson_elements(p)
        assert (z * (f ** (p - 1) * s + w)).is_zero()


def test_verify_mui_presentation_passes():
    report = invariants.verify_mui_presentation(3, 40)
    assert report.status == PASS


def test_verify_mui_dimension_sample():
    report = invariants.verify_mui_presentation(3, 28)
    dims = {d["d"]: d["invariant_dim"] for d in report.details if "d" in d}
    assert dims[8] == 1   # the f line
    assert dims[3] == 1   # the s line
    assert dims[1] == 0


def test_verify_mui_rejects_small_bound():
    assert invariants.verify_mui_presentation(3, 8).status == "precondition-error"


def test_verify_vistoli_passes():
    report = invariants.verify_vistoli_integral(3, 24)
    assert report.status == PASS
    dims = {d["d"]: d["fixed_integral_dim"] for d in report.details if "d" in d}
    assert dims[3] == 1   # span{s}
    assert dims[2] == 0   # no invariant in the xi, eta span


def test_equivariance_is_multiplicative():
    action = GroupAction(3)
    m = action.model
    g = ((1, 1), (0, 1))
    x = m.xi() * m.a()
    y = m.eta() + m.xi()
    assert action.act(g, x * y) == action.act(g, x) * action.act(g, y)


def test_bockstein_equivariance():
    action = GroupAction(3)
    act = action.model.action
    for g in action.gens:
        for e in (action.model.a() * action.model.b(), action.model.s(),
                  action.model.xi() * action.model.a()):
            assert act.bockstein(action.act(g, e)) == action.act(g, act.bockstein(e))


def test_generator_fixed_space_equals_whole_group_fixed_space():
    # invariant_subspace stacks (g - id) over the two generators only; the
    # oracle stacks over all 24 group elements
    from modpalg import linalg
    action = GroupAction(3)
    alg = action.model.alg
    for d in range(0, 13):
        basis = alg.basis(d)
        if not basis:
            continue
        stacked = []
        for g in action.group():
            mg = action.matrix_on_degree(g, d)
            for r in range(len(basis)):
                row = mg[r][:]
                row[r] = (row[r] - 1) % 3
                stacked.append(row)
        oracle = linalg.nullspace_mod(stacked, 3)
        assert len(oracle) == len(invariants.invariant_subspace(action, d))
