import pytest

from flagcsm import golden
from flagcsm.cohomology import flag_variety
from flagcsm.csmops import csm
from flagcsm.exactalg import Poly
from flagcsm.parabolic import (
    chevalley_classical_limit,
    chevalley_csm,
    csm_gp,
    gp_orthogonality,
    naive_dual_pairing,
    p2_negative_control,
    projective_plane,
    segre_ratio,
    vrr_check,
)


def test_trivial_parabolic_is_full_flag():
    sp = flag_variety("A", 2)
    for w in sp.points:
        assert csm_gp(sp, w) == csm(sp, w).cls


def test_p2_open_cell_and_negative_control():
    sp = projective_plane()
    g = sp.group
    top = g.from_word([1, 2])
    ne = csm_gp(sp, top).nonequivariant()
    assert {tuple(i + 1 for i in g.words[u]): c for u, c in ne.items()} == golden.P2_OPEN_CELL_CSM
    ctl = p2_negative_control()
    assert ctl["naive"] == golden.P2_NAIVE_DUAL_PAIRING == -2
    assert ctl["normalized"] == golden.P2_NORMALIZED_PAIRING == 0
    assert naive_dual_pairing(sp, top) == -2


@pytest.mark.parametrize("t,r,P", [("A", 3, (1, 3)), ("A", 3, (2, 3)), ("B", 2, (1,)), ("G", 2, (2,))])
def test_gp_orthogonality_exhaustive(t, r, P):
    sp = flag_variety(t, r, P)
    for u in sp.points:
        for v in sp.points:
            assert gp_orthogonality(sp, u, v) == Poly.const(sp.nvars, int(u == v))


def test_grassmannian_cells_effective():
    sp = flag_variety("A", 3, (1, 3))
    assert len(sp.points) == 6 and sp.dim == 4
    for w in sp.points:
        ne = csm_gp(sp, w).nonequivariant()
        assert all(c > 0 and int(c) == c for c in ne.values())
        assert ne[w] == 1


@pytest.mark.parametrize("t,r,P", [("A", 2, (1,)), ("A", 3, (1, 3)), ("B", 2, (2,))])
def test_vrr(t, r, P):
    sp = flag_variety(t, r, P)
    for u in sp.points:
        rep = vrr_check(sp, u)
        assert rep, rep.discrepancy


def test_chevalley_grassmannian_and_p1():
    gr = flag_variety("A", 3, (1, 3))
    for w in gr.points:
        assert chevalley_csm(gr, 2, w)
        assert chevalley_classical_limit(gr, 2, w)
    p1 = flag_variety("A", 1)
    assert chevalley_csm(p1, 1, 0)
    with pytest.raises(ValueError, match="outside the parabolic"):
        chevalley_csm(gr, 1, 0)


def test_segre_ratio_is_diagnostic():
    sp = projective_plane()
    r = segre_ratio(sp, 0)
    assert set(r.values) == set(sp.points)


def test_non_minimal_representative_rejected():
    sp = projective_plane()
    with pytest.raises(ValueError):
        csm_gp(sp, sp.group.from_word([1]))
