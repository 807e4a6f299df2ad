"""BGG and Demazure-Lusztig operators, and CSM classes of Schubert cells.

Two independent routes compute the homogenized equivariant CSM classes:

* ``csm``: operators applied in the GKM model (fixed-point restrictions);
* ``csm_via_recursion``: the explicit action of ``L_k`` on Schubert classes.

In the GKM model, for a class ``f`` and a fixed point ``w``::

    (d_i f)|_w = (f|_{w s_i} - f|_w) / w(alpha_i)
    (s_i f)|_w = f|_{w s_i}
    L_i = h d_i - s_i,    L_i^vee = h d_i + s_i
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import CohClass, FlagVariety, GKMClass, flag_variety, from_gkm, to_gkm
from .exactalg import Poly, weyl_twist

VARIANTS = ("ordinary", "dual")


def _require_full(space: FlagVariety) -> None:
    if not space.is_full:
        raise ValueError("operators and phi_w0 are defined on G/B only")


def _check_index(space: FlagVariety, i: int) -> int:
    if not 1 <= i <= space.rs.rank:
        raise ValueError(f"simple index {i} outside 1..{space.rs.rank}")
    return i - 1


# GKM operators (0-based index, no checks) -----------------------------------------

def _bgg_values(space: FlagVariety, i: int, vals: dict) -> dict:
    g = space.group
    right = g.right[i]
    alpha = space.rs.cartan_matrix[i]
    out = {}
    for w in space.points:
        d = vals[right[w]] - vals[w]
        out[w] = d.div_linear(space.weight_form(g.act_on_weight(w, alpha))) if d else d
    return out


def _dl_values(space: FlagVariety, i: int, vals: dict, dual: bool) -> dict:
    g = space.group
    right = g.right[i]
    alpha = space.rs.cartan_matrix[i]
    hb = Poly.hbar(space.nvars)
    out = {}
    for w in space.points:
        a, b = vals[right[w]], vals[w]
        d = a - b
        val = hb * d.div_linear(space.weight_form(g.act_on_weight(w, alpha))) if d else d
        out[w] = val + a if dual else val - a
    return out


def _gkm(c) -> GKMClass:
    return to_gkm(c) if isinstance(c, CohClass) else c


def _wrap(c, space: FlagVariety, vals: dict):
    g = GKMClass(space, vals)
    return from_gkm(g, c.basis) if isinstance(c, CohClass) else g


def apply_bgg(i: int, c):
    """BGG operator d_i on a CohClass (result in the same basis) or a GKMClass."""
    g = _gkm(c)
    _require_full(g.space)
    return _wrap(c, g.space, _bgg_values(g.space, _check_index(g.space, i), g.polynomial_values()))


def apply_right_weyl(i: int, c):
    g = _gkm(c)
    _require_full(g.space)
    j = _check_index(g.space, i)
    right = g.space.group.right[j]
    vals = g.polynomial_values()
    return _wrap(c, g.space, {w: vals[right[w]] for w in g.space.points})


def apply_dl(kind: str, word: Sequence[int], c):
    """Composite L_{i1} ... L_{ik} (or the dual operators); the last letter acts first."""
    if kind not in ("L", "Lv"):
        raise ValueError("kind must be 'L' or 'Lv'")
    g = _gkm(c)
    sp = g.space
    _require_full(sp)
    vals = g.polynomial_values()
    for i in reversed(list(word)):
        vals = _dl_values(sp, _check_index(sp, i), vals, kind == "Lv")
    return _wrap(c, sp, vals)


def bgg_on_basis(i: int, c: CohClass) -> CohClass:
    """d_i[X(w)] = [X(w s_i)] if the length goes up, else 0."""
    sp = c.space
    _require_full(sp)
    if c.basis != "X":
        raise ValueError("basis formula is stated for the X basis")
    j = _check_index(sp, i)
    g = sp.group
    out = {}
    for w, p in c.coeffs.items():
        v = g.right[j][w]
        if g.lengths[v] > g.lengths[w]:
            out[v] = p
    return CohClass(sp, "X", out)


# CSM classes -----------------------------------------------------------------

@dataclass(frozen=True)
class CSMResult:
    cell: int
    cell_basis: str
    variant: str
    cls: CohClass
    provenance: str

    @property
    def space(self) -> FlagVariety:
        return self.cls.space

    def to_json(self, *, nonequivariant: bool = False) -> dict:
        sp = self.space
        g = sp.group
        out = {
            "cell": [i + 1 for i in g.words[self.cell]],
            "cell_label": sp.label(self.cell),
            "cell_basis": self.cell_basis,
            "variant": self.variant,
            "provenance": self.provenance,
            "nonequivariant": nonequivariant,
        }
        if nonequivariant:
            ne = self.cls.nonequivariant()
            out["terms"] = [
                {"word": [i + 1 for i in g.words[u]], "label": sp.label(u), "coeff": str(ne[u])}
                for u in sorted(ne)
            ]
        else:
            out["class"] = self.cls.to_json()
        return out


class _CSMCache:
    """Write-once memo of GKM values per (space, cell basis, variant)."""

    def __init__(self):
        self.gkm: dict = {}
        self.basis: dict = {}


_CACHE: dict = {}


def _cache(space: FlagVariety) -> _CSMCache:
    c = _CACHE.get(id(space))
    if c is None:
        c = _CACHE[id(space)] = _CSMCache()
    return c


def _start_values(space: FlagVariety, cell_basis: str) -> dict:
    g = space.group
    x = 0 if cell_basis == "X" else g.w0
    return space.fixed_point_class(x).polynomial_values()


def _first_letter(space: FlagVariety, w: int, cell_basis: str) -> int | None:
    """First letter of the canonical word of w^{-1} (X cells) or w^{-1} w0 (Y cells)."""
    g = space.group
    x = g.inv[w] if cell_basis == "X" else g.mult(g.inv[w], g.w0)
    word = g.words[x]
    return word[0] if word else None


def csm_gkm(space: FlagVariety, w: int, cell_basis: str = "X", variant: str = "ordinary") -> dict:
    """Fixed-point values of the homogenized equivariant (dual) CSM class of a cell."""
    _require_full(space)
    if cell_basis not in ("X", "Y") or variant not in VARIANTS:
        raise ValueError("cell basis must be X/Y and variant ordinary/dual")
    memo = _cache(space).gkm
    key = (cell_basis, variant, w)
    got = memo.get(key)
    if got is not None:
        return got
    # walk down to a memoized (or starting) cell, then apply operators back up
    chain = []
    x = w
    while (cell_basis, variant, x) not in memo:
        a = _first_letter(space, x, cell_basis)
        if a is None:
            memo[(cell_basis, variant, x)] = _start_values(space, cell_basis)
            break
        chain.append((x, a))
        x = space.group.right[a][x]
    vals = memo[(cell_basis, variant, x)]
    for y, a in reversed(chain):
        vals = _dl_values(space, a, vals, variant == "dual")
        memo[(cell_basis, variant, y)] = vals
    return memo[key]


def csm(space: FlagVariety, w, cell_basis: str = "X", variant: str = "ordinary") -> CSMResult:
    """Homogenized CSM class of X(w)° (X basis) or Y(w)° (Y basis), GKM route."""
    w = space.group.coerce(w)
    memo = _cache(space).basis
    key = (cell_basis, variant, w)
    cls = memo.get(key)
    if cls is None:
        cls = from_gkm(GKMClass(space, csm_gkm(space, w, cell_basis, variant)), cell_basis)
        memo[key] = cls
    return CSMResult(w, cell_basis, variant, cls, "gkm-operators")


# Schubert-basis recursion ---------------------------------------------------------

def dl_on_basis(space: FlagVariety, k: int, c: CohClass, dual: bool = False) -> CohClass:
    """L_k (or L_k^vee) by the explicit action on Schubert classes; ``k`` is 0-based."""
    g = space.group
    rs = space.rs
    alpha_k = rs.cartan_matrix[k]
    hb = Poly.hbar(space.nvars)
    sgn = -1 if dual else 1
    ascent = (lambda w, v: g.lengths[v] > g.lengths[w]) if c.basis == "X" else (lambda w, v: g.lengths[v] < g.lengths[w])
    pair = [rs.pairing(alpha_k, j) for j in range(len(rs.positive_roots))]
    simple_k = rs.simple_root_positions[k]
    out: dict[int, Poly] = {}

    def add(u, p):
        q = out.get(u)
        out[u] = p if q is None else q + p

    for w, p in c.coeffs.items():
        v = g.right[k][w]
        if not ascent(w, v):
            add(w, p * -sgn)
            continue
        wa = Poly.linear(space.weight_form(g.act_on_weight(w, alpha_k)))
        add(v, p * (hb + wa if not dual else hb - wa))
        add(w, p * sgn)
        for j, refl in enumerate(g.reflections):
            if j == simple_k or not pair[j]:
                continue
            x = g.mult(v, refl)
            if g.lengths[x] == g.lengths[w]:
                add(x, p * (pair[j] * sgn))
    return CohClass(space, c.basis, out)


def csm_via_recursion(space: FlagVariety, w, cell_basis: str = "X", variant: str = "ordinary") -> CSMResult:
    _require_full(space)
    g = space.group
    w = g.coerce(w)
    word = []
    x = w
    while True:
        a = _first_letter(space, x, cell_basis)
        if a is None:
            break
        word.append(a)
        x = g.right[a][x]
    start = 0 if cell_basis == "X" else g.w0
    c = space.schubert(cell_basis, start)
    for a in reversed(word):
        c = dl_on_basis(space, a, c, variant == "dual")
    return CSMResult(w, cell_basis, variant, c, "schubert-recursion")


# phi_w0 ------------------------------------------------------------------------

def phi_w0(c: CohClass) -> CohClass:
    """[Y(w)] <-> [X(w0 w)], coefficients twisted by w0, h fixed."""
    sp = c.space
    _require_full(sp)
    g = sp.group
    other = "X" if c.basis == "Y" else "Y"
    return CohClass(sp, other, {g.mult(g.w0, u): weyl_twist(g, g.w0, p) for u, p in c.coeffs.items()})


# closed-form localization -----------------------------------------------------------

def csm_localization_closed_form(space: FlagVariety, w, u, *, reduced_only: bool = False) -> Poly:
    """Restriction of the homogenized CSM class of Y(w)° to the fixed point u.

    Sum over subwords of the canonical word of u whose product is w; each
    omitted letter contributes h and each used letter its root beta_p.
    With ``reduced_only`` the subword products are required to be reduced.
    """
    _require_full(space)
    g = space.group
    w, u = g.coerce(w), g.coerce(u)
    n = space.nvars
    if not g.bruhat_leq(w, u):
        return Poly.zero(n)
    hb = Poly.hbar(n)
    states = {0: Poly.const(n, 1)}
    prefix = 0
    for i in g.words[u]:
        beta = Poly.linear(space.weight_form(g.act_on_weight(prefix, space.rs.cartan_matrix[i])))
        new = {}
        for v, c in states.items():
            new[v] = new[v] + c * hb if v in new else c * hb
            v2 = g.right[i][v]
            if reduced_only and g.lengths[v2] < g.lengths[v]:
                continue
            t = c * beta
            new[v2] = new[v2] + t if v2 in new else t
        states = {v: c for v, c in new.items() if c}
        prefix = g.right[i][prefix]
    total = states.get(w, Poly.zero(n))
    inv = set(g.inversions(u))
    for k, beta in enumerate(space.rs.positive_roots):
        if k not in inv:
            total = total * (Poly.linear(space.weight_form(beta)) - hb)
    N = len(space.rs.positive_roots)
    return -total if (N - g.lengths[u]) % 2 else total


# transition matrix ------------------------------------------------------------------

def transition_matrix(space: FlagVariety, variant: str = "ordinary") -> list[list[int]]:
    """Nonequivariant c(u; v): coefficient of [X(u)] in the CSM class of X(v)°.

    Rows and columns follow the group's index order.
    """
    _require_full(space)
    n = len(space.points)
    M = [[0] * n for _ in range(n)]
    for v in space.points:
        ne = csm(space, v, "X", variant).cls.nonequivariant()
        for u, c in ne.items():
            M[u][v] = c
    return M


def matrix_inverse(M: list[list]) -> list[list]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        if piv != 1:
            A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [[int(x) if x.denominator == 1 else x for x in row[n:]] for row in A]


def inverse_by_antitranspose(space: FlagVariety, M: list[list]) -> list[list]:
    """(-1)^{l(u)-l(v)} c(w0 v; w0 u)."""
    g = space.group
    n = len(M)
    return [
        [(-1) ** ((g.lengths[u] - g.lengths[v]) % 2) * M[g.mult(g.w0, v)][g.mult(g.w0, u)] for v in range(n)]
        for u in range(n)
    ]


def theta_coefficients(space: FlagVariety, w, M: list[list] | None = None) -> dict[int, int]:
    """Coefficients theta_v of the constructible function whose CSM class is [X(w)].

    theta_v = (-1)^{l(v)-l(w)} c(w0 w; w0 v).
    """
    g = space.group
    w = g.coerce(w)
    if M is None:
        M = transition_matrix(space)
    ww = g.mult(g.w0, w)
    out = {}
    for v in space.points:
        c = M[ww][g.mult(g.w0, v)]
        if c:
            out[v] = c if (g.lengths[v] - g.lengths[w]) % 2 == 0 else -c
    return out


def pushforward_of_constructible(space: FlagVariety, theta: dict[int, int]) -> CohClass:
    """Nonequivariant CSM class of sum theta_v 1_{X(v)°}, on the X basis."""
    acc: dict[int, int] = {}
    for v, t in theta.items():
        for u, c in csm(space, v).cls.nonequivariant().items():
            acc[u] = acc.get(u, 0) + t * c
    n = space.nvars
    return CohClass(space, "X", {u: Poly.const(n, c) for u, c in acc.items()})


def leading_coefficient(space: FlagVariety, w: int, dual: bool = False) -> Poly:
    """prod over alpha > 0 with w^{-1} alpha < 0 of (h + alpha), or (h - alpha) for the dual."""
    hb = Poly.hbar(space.nvars)
    out = Poly.const(space.nvars, 1)
    for k in space.group.inversions(w):
        a = Poly.linear(space.weight_form(space.rs.positive_roots[k]))
        out = out * (hb - a if dual else hb + a)
    return out


def space_for(cartan_type: str, rank: int) -> FlagVariety:
    return flag_variety(cartan_type, rank)


def equivariant_sign_data(space: FlagVariety, w, cell_basis: str = "X", variant: str = "ordinary") -> dict:
    """Signs of the monomial coefficients in the simple roots a_i and h.

    Reported as data only: nothing is asserted about equivariant positivity.
    """
    g = space.group
    w = g.coerce(w)
    r = space.rs.rank
    M = space.rs.weight_to_simple
    images = {i: Poly.linear(tuple(M[i]) + (0,)) for i in range(r)}
    cls = csm(space, w, cell_basis, variant).cls
    pos = neg = 0
    cells = []
    for u in sorted(cls.coeffs):
        p = cls.coeffs[u].substitute(images)
        n_neg = sum(1 for _, c in p.exps() if c < 0)
        pos += sum(1 for _, c in p.exps() if c > 0)
        neg += n_neg
        if n_neg:
            cells.append(space.label(u))
    return {"cell": space.label(w), "positive": pos, "negative": neg, "cells_with_negative": cells}
