import random

import pytest

from flagcsm import golden
from flagcsm.cohomology import CohClass, flag_variety, to_gkm
from flagcsm.csmops import (
    apply_bgg,
    apply_dl,
    apply_right_weyl,
    bgg_on_basis,
    csm,
    csm_gkm,
    csm_localization_closed_form,
    csm_via_recursion,
    dl_on_basis,
    equivariant_sign_data,
    leading_coefficient,
    matrix_inverse,
    phi_w0,
    pushforward_of_constructible,
    theta_coefficients,
    transition_matrix,
)
from flagcsm.exactalg import Poly
from flagcsm.verify import random_class


def test_identity_cell_is_point_class():
    for t, r in [("A", 2), ("B", 2), ("G", 2)]:
        sp = flag_variety(t, r)
        assert csm(sp, 0).cls == sp.schubert("X", 0)


def test_p1_classes():
    sp = flag_variety("A", 1)
    a, h = Poly.linear(sp.weight_form(sp.rs.cartan_matrix[0])), Poly.hbar(2)
    top = csm(sp, 1).cls
    assert top.coeff(1) == h + a and top.coeff(0) == 1
    ne = {u: c for u, c in top.nonequivariant().items()}
    assert ne == {1: golden.P1_CSM[(1,)], 0: golden.P1_CSM[()]}
    dual = csm(sp, 1, "X", "dual").cls.nonequivariant()
    assert dual == {1: golden.P1_DUAL_CSM[(1,)], 0: golden.P1_DUAL_CSM[()]}


def test_fl3_example_and_fl4_entry():
    sp = flag_variety("A", 2)
    g = sp.group
    ne = csm(sp, g.from_word([1, 2])).cls.nonequivariant()
    assert ne == {g.from_word([1, 2]): 1, g.from_word([1]): 1, g.from_word([2]): 2, 0: 1}
    sp4 = flag_variety("A", 3)
    g4 = sp4.group
    ne4 = csm(sp4, g4.w0).cls.nonequivariant()
    assert ne4[g4.from_window("2143")] == 6


@pytest.mark.parametrize("t,r", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_recursion_route_matches_gkm_route(t, r):
    sp = flag_variety(t, r)
    for w in sp.points:
        for basis in "XY":
            for variant in ("ordinary", "dual"):
                assert csm(sp, w, basis, variant).cls == csm_via_recursion(sp, w, basis, variant).cls


def test_basis_rules_on_descents():
    sp = flag_variety("B", 2)
    g = sp.group
    for k in range(2):
        for w in sp.points:
            if g.lengths[g.right[k][w]] < g.lengths[w]:
                x = sp.schubert("X", w)
                assert dl_on_basis(sp, k, x) == -x
                assert dl_on_basis(sp, k, x, dual=True) == x


def test_operators_braid_involution_a2():
    sp = flag_variety("A", 2)
    rng = random.Random(11)
    for _ in range(5):
        c = random_class(sp, "X", rng)
        assert apply_dl("L", [1, 2, 1], c) == apply_dl("L", [2, 1, 2], c)
        assert apply_dl("Lv", [1, 2, 1], c) == apply_dl("Lv", [2, 1, 2], c)
        assert apply_dl("L", [], c) == c
        assert apply_dl("L", [2, 2], c) == c
        assert apply_right_weyl(1, apply_right_weyl(1, c)) == c
        assert apply_bgg(1, c) == bgg_on_basis(1, c)
    assert apply_right_weyl(1, sp.one()) == sp.one()
    assert apply_bgg(2, sp.schubert("X", 0)) == sp.schubert("X", sp.group.from_word([2]))


def test_leading_coefficients():
    sp = flag_variety("G", 2)
    for w in sp.points:
        assert csm(sp, w).cls.coeff(w) == leading_coefficient(sp, w)
        assert csm(sp, w, "X", "dual").cls.coeff(w) == leading_coefficient(sp, w, dual=True)


@pytest.mark.parametrize("t,r", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_closed_form_exhaustive(t, r):
    sp = flag_variety(t, r)
    for w in sp.points:
        vals = csm_gkm(sp, w, "Y")
        for u in sp.points:
            assert csm_localization_closed_form(sp, w, u) == vals[u]


def test_closed_form_needs_nonreduced_subwords():
    # restricting the subword sum to reduced products loses terms already in A2
    sp = flag_variety("A", 2)
    bad = [
        (w, u)
        for w in sp.points
        for u in sp.points
        if csm_localization_closed_form(sp, w, u, reduced_only=True) != csm_gkm(sp, w, "Y")[u]
    ]
    assert bad


def test_closed_form_small_cases():
    sp = flag_variety("A", 1)
    a, h = Poly.linear(sp.weight_form(sp.rs.cartan_matrix[0])), Poly.hbar(2)
    assert csm_localization_closed_form(sp, 0, 0) == -(a - h)
    assert csm_localization_closed_form(sp, 1, 0) == 0


def test_phi_w0():
    sp = flag_variety("B", 2)
    g = sp.group
    for w in sp.points:
        assert phi_w0(csm(sp, g.mult(g.w0, w)).cls) == csm(sp, w, "Y").cls
    c = random_class(sp, "X", random.Random(4))
    assert phi_w0(phi_w0(c)) == c


def test_transition_matrix_inverse_and_theta_a3():
    sp = flag_variety("A", 3)
    g = sp.group
    M = transition_matrix(sp)
    assert all(x == 1 for x in M[0])
    inv = matrix_inverse(M)
    n = len(M)
    for i in range(n):
        for j in range(n):
            assert sum(M[i][k] * inv[k][j] for k in range(n)) == int(i == j)
    for w in sp.points:
        assert pushforward_of_constructible(sp, theta_coefficients(sp, w, M)) == sp.schubert("X", w)


def test_theta_swapped_indices_do_not_reproduce_fundamental_class():
    # reading the coefficient as c(w0 v; w0 w) instead of c(w0 w; w0 v)
    # gives the indicator of the open cell at w = w0, not the fundamental class
    sp = flag_variety("A", 2)
    g = sp.group
    M = transition_matrix(sp)
    w = g.w0
    swapped = {}
    for v in sp.points:
        c = M[g.mult(g.w0, v)][g.mult(g.w0, w)]
        if c:
            swapped[v] = c if (g.lengths[v] - g.lengths[w]) % 2 == 0 else -c
    assert swapped == {w: 1}
    assert pushforward_of_constructible(sp, swapped) != sp.schubert("X", w)
    assert pushforward_of_constructible(sp, theta_coefficients(sp, w, M)) == sp.schubert("X", w)


def test_csm_result_json():
    sp = flag_variety("A", 2)
    res = csm(sp, "231")
    d = res.to_json(nonequivariant=True)
    assert d["cell"] == [1, 2] and d["cell_label"] == "231"
    assert {t["label"]: t["coeff"] for t in d["terms"]} == {"231": "1", "213": "1", "132": "2", "123": "1"}
    full = res.to_json()
    assert CohClass.from_json(full["class"]) == res.cls


def test_equivariant_sign_data_reports_only():
    sp = flag_variety("A", 2)
    w0 = sp.group.w0
    d = equivariant_sign_data(sp, w0)
    # count monomials in the simple-root coordinates independently
    M = sp.rs.weight_to_simple
    images = {i: Poly.linear(tuple(M[i]) + (0,)) for i in range(2)}
    nterms = sum(len(p.substitute(images).terms) for p in csm(sp, w0).cls.coeffs.values())
    assert d["positive"] + d["negative"] == nterms
    assert d["cell"] == "321"
    assert set(d) == {"cell", "positive", "negative", "cells_with_negative"}


def test_invalid_arguments():
    sp = flag_variety("A", 2)
    with pytest.raises(ValueError):
        apply_dl("M", [1], sp.one())
    with pytest.raises(ValueError):
        apply_bgg(3, sp.one())
    gp = flag_variety("A", 2, (1,))
    with pytest.raises(ValueError):
        apply_bgg(1, gp.one())
    assert to_gkm(csm(sp, 0).cls) == sp.fixed_point_class(0)
