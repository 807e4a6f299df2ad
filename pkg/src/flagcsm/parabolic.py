"""CSM classes on G/P: pushforward, VRR pullback, orthogonality and Chevalley.

CSM classes of cells in G/P are pushforwards along f: G/B -> G/P, since f
maps X(w)° (w in W^P) and Y(v w_P)° isomorphically onto their images.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import (
    CohClass,
    FlagVariety,
    GKMClass,
    flag_variety,
    from_gkm,
    pairing_localization,
    pushforward_gp,
    relative_tangent_chern,
    to_gkm,
)
from .csmops import csm, csm_gkm
from .exactalg import Poly, RatFunc, poly_sum


def csm_gp(space: FlagVariety, w, cell_basis: str = "X", variant: str = "ordinary") -> CohClass:
    """Homogenized CSM class of X(wW_P)° or Y(wW_P)° for w in W^P."""
    g = space.group
    w = space.check_point(g.coerce(w))
    full = space.full()
    if space.is_full:
        return csm(full, w, cell_basis, variant).cls
    cell = w if cell_basis == "X" else g.mult(w, space.P.wp_longest)
    return pushforward_gp(csm(full, cell, cell_basis, variant).cls, space)


def csm_gp_gkm(space: FlagVariety, w, cell_basis: str = "X", variant: str = "ordinary") -> GKMClass:
    """Fixed-point values of :func:`csm_gp`, read off the G/B values at minimal representatives."""
    g = space.group
    w = space.check_point(g.coerce(w))
    if space.is_full:
        return GKMClass(space, csm_gkm(space, w, cell_basis, variant))
    return to_gkm(csm_gp(space, w, cell_basis, variant))


def _dehomogenized(c: GKMClass) -> GKMClass:
    return c.map_values(lambda p: p.specialize(hbar=1))


# Verdier-Riemann-Roch ---------------------------------------------------------------

@dataclass
class IdentityReport:
    name: str
    ids: tuple
    passed: bool
    discrepancy: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def vrr_check(space: FlagVariety, u) -> IdentityReport:
    """c^T(T_f) . f^* c^T_SM(X(uW_P)°) = sum over x in W_P of c^T_SM(X(ux)°), at h = 1."""
    g = space.group
    u = space.check_point(g.coerce(u))
    full = space.full()
    lhs_gp = _dehomogenized(csm_gp_gkm(space, u, "X"))
    rel = relative_tangent_chern(full, space.parabolic)
    P = space.P
    rhs = {x: Poly.zero(full.nvars) for x in full.points}
    cells = [g.mult(u, y) for y in P.wp_group]
    for c in cells:
        vals = csm_gkm(full, c, "X")
        for x in full.points:
            rhs[x] = rhs[x] + vals[x].specialize(hbar=1)
    bad = {}
    for x in full.points:
        lhs = rel.value(x) * lhs_gp.value(P.minrep(x))
        if lhs != rhs[x]:
            bad[full.label(x)] = (str(rhs[x]), str(lhs))
    return IdentityReport("vrr", (space.label(u),), not bad, bad)


# orthogonality ---------------------------------------------------------------------

def gp_orthogonality(space: FlagVariety, u, v) -> Poly:
    """<c_SM(X(uW_P)°), c_SM(Y(vW_P)°) / c(T(G/P))> by localization.

    Both classes and the tangent Chern class are homogenized in h, so every
    denominator stays a product of linear forms; the pairing has degree 0
    and equals its value at h = 1.
    """
    g = space.group
    u = space.check_point(g.coerce(u))
    v = space.check_point(g.coerce(v))
    a = csm_gp_gkm(space, u, "X")
    b = csm_gp_gkm(space, v, "Y")
    hb_forms = {x: [tuple(c for c in wt[:-1]) + (1,) for wt in space.tangent_weights(x)] for x in space.points}
    return pairing_localization(a, b, extra=lambda x: hb_forms[x])


def segre_ratio(space: FlagVariety, v) -> GKMClass:
    """Per-point ratio c_SM(Y(vW_P)°) / c(T(G/P)), homogenized in h (diagnostic only)."""
    b = csm_gp_gkm(space, v, "Y")
    vals = {}
    for x in space.points:
        forms = [tuple(wt[:-1]) + (1,) for wt in space.tangent_weights(x)]
        vals[x] = RatFunc(b.value(x), forms)
    return GKMClass(space, vals)


def naive_dual_pairing(space: FlagVariety, u) -> Poly:
    """<c_SM(X(uW_P)°), c_SM^vee(X(uW_P)°)>, nonequivariant."""
    a = csm_gp_gkm(space, u, "X")
    b = csm_gp_gkm(space, u, "X", "dual")
    return pairing_localization(a, b).specialize(weights_zero=True, hbar=1)


# Chevalley formula ---------------------------------------------------------------------

def _fund_weight_form(space: FlagVariety, beta: int, w: int) -> Poly:
    """varpi_beta - w(varpi_beta) as a linear polynomial; beta 0-based."""
    r = space.rs.rank
    unit = tuple(int(j == beta) for j in range(r))
    img = space.group.act_on_weight(w, unit)
    return Poly.linear(tuple(a - b for a, b in zip(unit, img)) + (0,))


def chevalley_terms(space: FlagVariety, beta: int, w: int, *, classical: bool = False) -> list[tuple[int, int]]:
    """(multiplicity, cell) for roots alpha in R+ \\ R_P+ with l(w s_alpha W_P) > l(w).

    With ``classical`` only the length increases by exactly one are kept.
    """
    g = space.group
    rs = space.rs
    unit = tuple(int(j == beta) for j in range(rs.rank))
    out = []
    for k in space.P.nonlevi_roots:
        m = rs.pairing(unit, k)
        if not m:
            continue
        y = space.P.minrep(g.mult(w, g.reflections[k]))
        dl = g.lengths[y] - g.lengths[w]
        if dl > 0 and (not classical or dl == 1):
            out.append((m, y))
    return out


def chevalley_csm(space: FlagVariety, beta_index: int, w) -> IdentityReport:
    """[Y(s_beta)] . c(Y(w)°) against the diagonal term plus the h-weighted sum, in GKM."""
    g = space.group
    beta = beta_index - 1
    if beta in space.P.J or not 0 <= beta < space.rs.rank:
        raise ValueError(f"simple index {beta_index} must lie outside the parabolic")
    w = space.check_point(g.coerce(w))
    s_beta = g.right[beta][0]
    n = space.nvars
    hb = Poly.hbar(n)
    cw = csm_gp_gkm(space, w, "Y")
    terms = [(m, csm_gp_gkm(space, y, "Y")) for m, y in chevalley_terms(space, beta, w)]
    diag = _fund_weight_form(space, beta, w)
    bad = {}
    for x in space.points:
        lhs = space.billey_localize("Y", s_beta, x) * cw.value(x)
        rhs = diag * cw.value(x) + hb * poly_sum(n, (t.value(x) * m for m, t in terms))
        if lhs != rhs:
            bad[space.label(x)] = (str(rhs), str(lhs))
    return IdentityReport("chevalley", (beta_index, space.label(w)), not bad, bad)


def hbar_leading(c: CohClass, power: int) -> CohClass:
    """Limit of c / h^power as h -> infinity, coefficientwise; requires h-degree <= power."""
    out = {}
    for u, p in c.coeffs.items():
        if p.hbar_degree() > power:
            raise ArithmeticError(f"coefficient of cell {u} has h-degree above {power}")
        q = p.hbar_coefficient(power)
        if q:
            out[u] = q
    return CohClass(c.space, c.basis, out)


def chevalley_classical_limit(space: FlagVariety, beta_index: int, w) -> IdentityReport:
    """The h -> infinity limit of the CSM Chevalley identity against the classical formula.

    Three quantities must agree on the Y basis: the limit of
    [Y(s_beta)] . c(Y(w)°) / h^D with D = dim - l(w), the product
    [Y(s_beta)] . [Y(w)] computed by localization, and the classical
    expansion with length increase exactly one.
    """
    g = space.group
    beta = beta_index - 1
    w = space.check_point(g.coerce(w))
    s_beta = g.right[beta][0]
    n = space.nvars
    D = space.dim - g.lengths[w]
    divisor = to_gkm(space.schubert("Y", s_beta))
    lhs = from_gkm(divisor * csm_gp_gkm(space, w, "Y"), "Y")
    limit = hbar_leading(lhs, D)
    product = from_gkm(divisor * to_gkm(space.schubert("Y", w)), "Y")
    classical = {w: _fund_weight_form(space, beta, w)}
    for m, y in chevalley_terms(space, beta, w, classical=True):
        classical[y] = classical.get(y, Poly.zero(n)) + m
    classical = CohClass(space, "Y", classical)
    bad = {}
    if limit != product:
        bad["limit-vs-product"] = (str(product), str(limit))
    if product != classical:
        bad["product-vs-classical"] = (str(classical), str(product))
    return IdentityReport("chevalley-classical", (beta_index, space.label(w)), not bad, bad)


def projective_plane() -> FlagVariety:
    """P^2 as A2 modulo the parabolic generated by s1; cells id, s2, s1 s2."""
    return flag_variety("A", 2, (1,))


def p2_negative_control() -> dict:
    """The naive dual pairing (-2) and the normalized pairing (0) for the open cell of P^2."""
    sp = projective_plane()
    g = sp.group
    top = g.from_word([1, 2])
    return {
        "naive": naive_dual_pairing(sp, top).constant_term(),
        "normalized": gp_orthogonality(sp, top, 0).specialize(weights_zero=True, hbar=1).constant_term(),
        "csm_open_cell": csm_gp(sp, top).nonequivariant(),
    }
