import itertools

import pytest

from regmaps.graphs import hamming, is_isomorphic
from regmaps.maps import coset_graph, invariants, petrie_dual, validate_admissible
from regmaps.perms import element_order, is_involution
from regmaps.pgl29 import (
    GF9,
    M_LAM,
    M_RHO,
    M_TAU,
    Mat2,
    gf9_add,
    gf9_elements,
    gf9_inv,
    gf9_mul,
    mat_closure,
    mat_det,
    mat_mul,
    mat_scale,
    pgl_closure,
    pgl_triple,
    proj_normalize,
    psl_members,
    verify_construction,
)

I = GF9(0, 1)
ONE = GF9(1)
ZERO = GF9(0)


def test_field_has_nine_elements():
    elems = gf9_elements()
    assert len(set(elems)) == 9


def test_field_axioms_exhaustive():
    elems = gf9_elements()
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
        assert x * y == y * x
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_field_examples():
    assert I * I == GF9(-1)  # i^2 = -1
    one_plus_i = GF9(1, 1)
    assert one_plus_i * one_plus_i == GF9(0, 2)  # (1+i)^2 = 2i
    assert gf9_inv(GF9(2)) == GF9(2)  # 2*2 = 4 = 1 mod 3
    assert gf9_add(GF9(2), GF9(2)) == GF9(1)
    assert gf9_mul(GF9(2), GF9(0, 2)) == GF9(0, 1)


def test_multiplicative_group_order_eight():
    for x in gf9_elements():
        if not x:
            continue
        acc = ONE
        for _ in range(8):
            acc = acc * x
        assert acc == ONE
        assert x * gf9_inv(x) == ONE


def test_inverting_zero_raises():
    with pytest.raises(ZeroDivisionError):
        gf9_inv(ZERO)


def test_paper_matrix_determinants():
    assert mat_det(M_LAM) == ONE
    assert mat_det(M_RHO) == GF9(1, 1)
    assert mat_det(M_TAU) == ONE


def test_proj_normalize_scalar_equivalence():
    for mat in (M_LAM, M_RHO, M_TAU):
        for c in gf9_elements():
            if not c:
                continue
            assert proj_normalize(mat_scale(mat, c)) == proj_normalize(mat)
    assert proj_normalize(proj_normalize(M_RHO)) == proj_normalize(M_RHO)


def test_det_is_multiplicative():
    mats = [M_LAM, M_RHO, M_TAU, mat_mul(M_LAM, M_RHO)]
    for p, q in itertools.product(mats, repeat=2):
        assert mat_det(mat_mul(p, q)) == mat_det(p) * mat_det(q)


def test_gl2_and_projective_class_counts():
    # brute force over all 6561 matrices
    elems = gf9_elements()
    invertible = [
        Mat2(a, b, c, d)
        for a, b, c, d in itertools.product(elems, repeat=4)
        if mat_det(Mat2(a, b, c, d))
    ]
    assert len(invertible) == (9**2 - 1) * (9**2 - 9) == 5760
    classes = {proj_normalize(m) for m in invertible}
    assert len(classes) == 5760 // 8 == 720


def test_pgl_closure_order():
    assert pgl_closure().order == 720


def test_rho_tau_generate_dihedral_20():
    assert mat_closure([M_RHO, M_TAU]).order == 20


def test_lam_lies_in_index_two_subgroup():
    group = pgl_closure()
    members = psl_members(group)
    assert len(members) == 360
    assert proj_normalize(M_LAM) in set(members)
    # the square-determinant classes really are closed
    assert mat_closure(members, cap=720).order == 360


def test_triple_generator_orders():
    t = pgl_triple()
    assert all(is_involution(g) for g in (t.lam, t.rho, t.tau))
    assert (t.lam * t.tau * t.lam * t.tau).is_identity()
    orders = (
        element_order(t.lam * t.rho),
        element_order(t.rho * t.tau),
        element_order(t.lam * t.rho * t.tau),
    )
    assert orders == (10, 10, 8)


def test_triple_invariants():
    t = pgl_triple()
    report = validate_admissible(t, cap=1000)
    assert report.ok and report.group_order == 720
    inv = invariants(t, cap=1000)
    assert inv.type_string == "{10,10}_8"
    assert (inv.vertices, inv.edges, inv.faces) == (36, 180, 36)
    assert inv.chi == -108
    assert not inv.orientable
    assert inv.genus == 110

    dual = invariants(petrie_dual(t), cap=1000)
    assert dual.type_string == "{8,10}_10"
    assert dual.faces == 45
    assert dual.chi == -99
    assert dual.genus == 101
    assert not dual.orientable


def test_coset_graph_is_h26():
    t = pgl_triple()
    graph = coset_graph(t, cap=1000)
    assert graph.n == 36
    assert all(graph.degree(v) == 10 for v in range(36))
    assert is_isomorphic(graph, hamming(2, 6)) is not None


def test_verify_construction_all_pass():
    report = verify_construction()
    assert report.ok, report.failed()
    names = [name for name, _, _ in report.checks]
    assert "group_order_720" in names
    assert "coset_graph_isomorphic_h26" in names
