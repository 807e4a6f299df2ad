import json
import random

import pytest

from flagcsm.cohomology import (
    CohClass,
    GKMClass,
    NotInSpanError,
    chern_tangent,
    convert,
    cup,
    flag_variety,
    from_gkm,
    integrate,
    pairing_localization,
    pairing_schubert,
    pullback_gp,
    pushforward_gkm,
    pushforward_gp,
    to_gkm,
)
from flagcsm.exactalg import Poly
from flagcsm.verify import random_class

SPACES = [("A", 1, ()), ("A", 2, ()), ("B", 2, ()), ("G", 2, ()), ("A", 3, (1, 3)), ("A", 2, (1,)), ("B", 2, (2,))]


@pytest.mark.parametrize("t,r,P", SPACES)
def test_schubert_duality_and_edges(t, r, P):
    sp = flag_variety(t, r, P)
    for u in sp.points:
        gu = to_gkm(sp.schubert("X", u))
        assert not gu.edge_violations()
        assert not to_gkm(sp.schubert("Y", u)).edge_violations()
        for v in sp.points:
            assert pairing_localization(sp.schubert("X", u), sp.schubert("Y", v)) == int(u == v)


@pytest.mark.parametrize("t,r,P", SPACES)
def test_roundtrip_and_basis_change(t, r, P):
    sp = flag_variety(t, r, P)
    rng = random.Random(1)
    for basis in "XY":
        c = random_class(sp, basis, rng)
        assert from_gkm(to_gkm(c), basis) == c
        other = convert(c, "Y" if basis == "X" else "X")
        assert other == c and to_gkm(other) == to_gkm(c)


def test_billey_row_values_a2():
    sp = flag_variety("A", 2)
    g = sp.group
    s1 = g.from_word([1])
    # [Y(s1)] restricted to s1 is alpha_1
    val = sp.billey_localize("Y", s1, s1)
    assert val == Poly.linear(sp.weight_form(sp.rs.cartan_matrix[0]))
    assert sp.billey_localize("Y", s1, 0) == 0


def test_support_of_schubert_classes():
    sp = flag_variety("B", 2)
    g = sp.group
    for w in sp.points:
        vals = to_gkm(sp.schubert("X", w))
        for u in sp.points:
            assert bool(vals.value(u)) == g.bruhat_leq(u, w)


@pytest.mark.parametrize("t,r,P", SPACES + [("B", 3, ())])
def test_euler_characteristic(t, r, P):
    sp = flag_variety(t, r, P)
    assert integrate(chern_tangent(sp)).specialize(weights_zero=True) == len(sp.points)


def test_from_gkm_rejects_non_classes():
    sp = flag_variety("A", 2)
    bad = GKMClass(sp, {x: (Poly.gen(sp.nvars, 0) if x == 1 else Poly.zero(sp.nvars)) for x in sp.points})
    assert bad.edge_violations()
    with pytest.raises(NotInSpanError):
        from_gkm(bad, "X")


def test_cup_product_chevalley_sanity_p1():
    sp = flag_variety("A", 1)
    x = sp.schubert("Y", 1)
    sq = cup(x, x, "Y")
    # [pt]^2 = 0 nonequivariantly; equivariantly it is alpha [pt]
    assert sq.specialize(weights_zero=True) == sp.zero("Y")
    assert sq.coeff(1) == Poly.linear(sp.weight_form(sp.rs.cartan_matrix[0]))


def test_pairing_routes_agree():
    sp = flag_variety("G", 2)
    rng = random.Random(3)
    for _ in range(10):
        a, b = random_class(sp, "X", rng), random_class(sp, "Y", rng)
        assert pairing_schubert(a, b) == pairing_localization(a, b)


def test_pushforward_and_pullback():
    full = flag_variety("A", 3)
    target = flag_variety("A", 3, (1, 3))
    rng = random.Random(5)
    c = random_class(full, "X", rng, cells=6)
    assert to_gkm(pushforward_gp(c, target)) == pushforward_gkm(to_gkm(c), target)
    # the projection formula: f_*(f^* a . b) = a . f_* b
    a = random_class(target, "Y", rng)
    lhs = pushforward_gp(cup(pullback_gp(a, full), c, "X"), target)
    rhs = cup(a, pushforward_gp(c, target), "X")
    assert lhs == rhs


def test_json_roundtrip_and_format():
    sp = flag_variety("B", 2)
    c = random_class(sp, "Y", random.Random(2))
    data = json.loads(json.dumps(c.to_json()))
    assert CohClass.from_json(data) == c
    p1 = flag_variety("A", 1)
    cls = CohClass(p1, "X", {1: Poly.const(2, 1), 0: Poly.linear((2, 0)) + Poly.hbar(2)})
    assert cls.format() == "[X(21)] + (a1 + h)*[X(id)]"
    assert json.loads(json.dumps(to_gkm(cls).to_json()))[0]["word"] == []


def test_descriptor_and_mismatch():
    a = flag_variety("A", 2).one()
    b = flag_variety("B", 2).one()
    with pytest.raises(ValueError):
        a + b
    assert flag_variety("A", 3, (3, 1)).descriptor() == {"type": "A", "rank": 3, "parabolic": [1, 3]}
