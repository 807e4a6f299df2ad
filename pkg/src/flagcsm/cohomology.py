"""Equivariant cohomology of G/B and G/P: Schubert bases and the GKM model.

A class is either a :class:`CohClass` (coefficients on the Schubert basis
``[X(u)]`` or ``[Y(u)]``) or a :class:`GKMClass` (restrictions to the torus
fixed points). Fixed points and cells are indexed by Weyl group indices, by
minimal coset representatives on G/P.

Sign conventions: the tangent space at the fixed point ``x`` has weights
``-x(gamma)`` for ``gamma`` in ``R+ \\ R_P+``; the cotangent bundle with the
extra C* scaling has weights ``x(alpha) - h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exactalg import LinForm, NotDivisibleError, Poly, RatFunc, poly_dot, poly_sum, prod_linear
from .rootsys import DEFAULT_BOUND, ParabolicData, WeylGroup, weyl_group, word_label

BASES = ("X", "Y")


class NotInSpanError(ValueError):
    """A GKM function that is not a polynomial combination of Schubert classes."""


class FlagVariety:
    """G/B (empty ``parabolic``) or G/P, with cached localization data."""

    def __init__(self, cartan_type: str, rank: int, parabolic: Iterable[int] = (), bound: int = DEFAULT_BOUND):
        self.group: WeylGroup = weyl_group(cartan_type, rank, bound)
        self.rs = self.group.rs
        self.P = ParabolicData(self.group, parabolic)
        self.nvars = rank + 1
        self.points: list[int] = self.P.minimal_reps
        self.dim = self.P.dimension
        self._billey: dict = {"X": {}, "Y": {}}
        self._weights: dict = {}
        self._one = Poly.const(self.nvars, 1)

    # descriptors ------------------------------------------------------------
    @property
    def is_full(self) -> bool:
        return self.P.is_trivial()

    @property
    def parabolic(self) -> tuple:
        return tuple(sorted(self.P.subset))

    def descriptor(self) -> dict:
        return {"type": self.rs.cartan_type, "rank": self.rs.rank, "parabolic": list(self.parabolic)}

    def __repr__(self) -> str:
        tail = f"/P{list(self.parabolic)}" if self.parabolic else "/B"
        return f"FlagVariety({self.rs.name}{tail})"

    def full(self) -> "FlagVariety":
        return flag_variety(self.rs.cartan_type, self.rs.rank)

    def label(self, u: int) -> str:
        return self.group.label(u) if self.rs.cartan_type == "A" else word_label(self.group.words[u])

    def length(self, u: int) -> int:
        return self.group.lengths[u]

    def check_point(self, u: int) -> int:
        if not self.P.is_minimal(u):
            raise ValueError(f"{word_label(self.group.words[u])} is not a minimal coset representative")
        return u

    # linear forms -----------------------------------------------------------
    def weight_form(self, lam) -> LinForm:
        return tuple(lam) + (0,)

    def root_poly(self, w: int, k: int) -> Poly:
        """w(beta_k) as a linear polynomial."""
        return Poly.linear(self.weight_form(self.group.act_on_weight(w, self.rs.positive_roots[k])))

    def moved_roots(self, w: int) -> list:
        """w(beta) for every positive root beta, as weight tuples."""
        got = self._weights.get(w)
        if got is None:
            got = [self.group.act_on_weight(w, b) for b in self.rs.positive_roots]
            self._weights[w] = got
        return got

    def tangent_weights(self, x: int) -> list[LinForm]:
        wr = self.moved_roots(x)
        return [tuple(-c for c in wr[k]) + (0,) for k in self.P.nonlevi_roots]

    def cotangent_hbar_weights(self, x: int) -> list[LinForm]:
        """Chern roots x(alpha) - h of the C*-scaled cotangent bundle at x."""
        wr = self.moved_roots(x)
        return [tuple(wr[k]) + (-1,) for k in self.P.nonlevi_roots]

    def euler(self, x: int) -> Poly:
        return prod_linear(self.nvars, self.tangent_weights(x))

    def cotangent_euler(self, x: int) -> Poly:
        return prod_linear(self.nvars, self.cotangent_hbar_weights(x))

    # Schubert localization --------------------------------------------------
    def _billey_row(self, u: int, twist: bool) -> dict:
        """[Y(v)]|_u for all v by the subword sum over the canonical word of u.

        With ``twist`` every root is replaced by its image under w0.
        """
        g = self.group
        rs = self.rs
        zero = Poly.zero(self.nvars)
        states = {0: self._one}
        prefix = 0
        for i in g.words[u]:
            beta = g.act_on_weight(prefix, rs.cartan_matrix[i])
            if twist:
                beta = g.act_on_weight(g.w0, beta)
            L = Poly.linear(self.weight_form(beta))
            new = dict(states)
            right = g.right[i]
            for v, c in states.items():
                v2 = right[v]
                if g.lengths[v2] > g.lengths[v]:
                    new[v2] = new.get(v2, zero) + c * L
            states = new
            prefix = right[prefix]
        return {v: c for v, c in states.items() if c}

    def billey_row(self, basis: str, u: int) -> dict:
        """Map v -> [basis(v)]|_u on G/B (v over all of W)."""
        cache = self._billey[basis]
        row = cache.get(u)
        if row is None:
            if basis == "Y":
                row = self._billey_row(u, False)
            elif basis == "X":
                g = self.group
                tw = self._billey_row(g.mult(g.w0, u), True)
                row = {g.mult(g.w0, v): c for v, c in tw.items()}
            else:
                raise ValueError(f"unknown basis {basis!r}")
            cache[u] = row
        return row

    def billey_localize(self, basis: str, w: int, u: int) -> Poly:
        """[basis(w W_P)]|_u for cell w and fixed point u (both in W^P)."""
        if basis == "X" and not self.is_full:
            w = self.P.maxrep(w)
        return self.billey_row(basis, u).get(w, Poly.zero(self.nvars))

    def localize_word(self, basis: str, w: int, word) -> Poly:
        """[Y(w)]|_u computed from an arbitrary reduced word (0-based) of u; for tests."""
        g = self.group
        if basis == "X":
            raise ValueError("word-level localization is only exposed for the Y basis")
        zero = Poly.zero(self.nvars)
        states = {0: self._one}
        prefix = 0
        for i in word:
            L = Poly.linear(self.weight_form(g.act_on_weight(prefix, self.rs.cartan_matrix[i])))
            new = dict(states)
            for v, c in states.items():
                v2 = g.right[i][v]
                if g.lengths[v2] > g.lengths[v]:
                    new[v2] = new.get(v2, zero) + c * L
            states = new
            prefix = g.right[i][prefix]
        return states.get(w, zero)

    def diagonal_factors(self, basis: str, x: int) -> list[LinForm]:
        """Linear factors of [basis(x)]|_x for x in W^P."""
        wr = self.moved_roots(x)
        if basis == "Y":
            return [tuple(-c for c in wr[k]) + (0,) for k in self.P.nonlevi_roots if self.rs.root_index[wr[k]] < 0]
        return [tuple(-c for c in wr[k]) + (0,) for k in self.P.nonlevi_roots if self.rs.root_index[wr[k]] > 0]

    # classes -----------------------------------------------------------------
    def zero(self, basis: str = "X") -> "CohClass":
        return CohClass(self, basis, {})

    def schubert(self, basis: str, u: int) -> "CohClass":
        return CohClass(self, basis, {self.check_point(u): self._one})

    def one(self) -> "CohClass":
        return CohClass(self, "Y", {0: self._one})

    def fixed_point_class(self, x: int) -> "GKMClass":
        """The class supported at x with value e(T_x)."""
        self.check_point(x)
        zero = Poly.zero(self.nvars)
        return GKMClass(self, {p: (self.euler(x) if p == x else zero) for p in self.points})


_SPACES: dict = {}


def flag_variety(cartan_type: str, rank: int, parabolic: Iterable[int] = ()) -> FlagVariety:
    key = (cartan_type.upper(), rank, frozenset(parabolic))
    sp = _SPACES.get(key)
    if sp is None:
        sp = _SPACES[key] = FlagVariety(cartan_type, rank, parabolic)
    return sp


def _check_same(a, b) -> None:
    if a.space is not b.space:
        raise ValueError(f"classes live on different spaces: {a.space} vs {b.space}")


@dataclass(frozen=True, eq=False)
class CohClass:
    space: FlagVariety
    basis: str
    coeffs: Mapping[int, Poly]

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be X or Y, got {self.basis!r}")
        object.__setattr__(self, "coeffs", {u: p for u, p in self.coeffs.items() if p})

    def coeff(self, u) -> Poly:
        u = self.space.group.coerce(u)
        return self.coeffs.get(u, Poly.zero(self.space.nvars))

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __add__(self, other: "CohClass") -> "CohClass":
        _check_same(self, other)
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.coeffs)
        for u, p in other.coeffs.items():
            out[u] = out[u] + p if u in out else p
        return CohClass(self.space, self.basis, out)

    def __neg__(self) -> "CohClass":
        return CohClass(self.space, self.basis, {u: -p for u, p in self.coeffs.items()})

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def scale(self, c) -> "CohClass":
        return CohClass(self.space, self.basis, {u: p * c for u, p in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohClass) or other.space is not self.space:
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def map_coeffs(self, f) -> "CohClass":
        return CohClass(self.space, self.basis, {u: f(p) for u, p in self.coeffs.items()})

    def specialize(self, *, weights_zero: bool = False, hbar=None) -> "CohClass":
        return self.map_coeffs(lambda p: p.specialize(weights_zero=weights_zero, hbar=hbar))

    def nonequivariant(self) -> dict[int, Fraction | int]:
        """Coefficients at w -> 0, h -> 1."""
        out = {}
        for u, p in self.coeffs.items():
            c = p.specialize(weights_zero=True, hbar=1).constant_term()
            if c:
                out[u] = c
        return out

    def to_json(self) -> dict:
        g = self.space.group
        return {
            "space": self.space.descriptor(),
            "basis": self.basis,
            "terms": [
                {"word": [i + 1 for i in g.words[u]], "poly": self.coeffs[u].to_json()}
                for u in sorted(self.coeffs)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CohClass":
        sp = data["space"]
        space = flag_variety(sp["type"], sp["rank"], sp.get("parabolic", ()))
        coeffs = {}
        for t in data["terms"]:
            u = space.check_point(space.group.from_word(t["word"]))
            coeffs[u] = Poly.from_json(space.nvars, t["poly"])
        return cls(space, data["basis"], coeffs)

    def format(self, *, roots: bool = True, hbar: str = "h") -> str:
        if not self.coeffs:
            return "0"
        sp = self.space
        parts = []
        for u in sorted(self.coeffs, reverse=True):
            p = self.coeffs[u]
            text = format_poly(sp, p, roots=roots, hbar=hbar)
            cell = f"[{self.basis}({sp.label(u) if u else 'id'})]"
            if text == "1":
                parts.append(cell)
            elif text == "-1":
                parts.append("-" + cell)
            elif " + " in text or " - " in text:
                parts.append(f"({text})*{cell}")
            else:
                parts.append(f"{text}*{cell}")
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __str__(self) -> str:
        return self.format()


def format_poly(space: FlagVariety, p: Poly, *, roots: bool = True, hbar: str = "h") -> str:
    """Print with a1..ar for simple roots (or w1..wr for fundamental weights) and h."""
    r = space.rs.rank
    if roots:
        M = space.rs.weight_to_simple
        images = {i: Poly.linear(tuple(M[i]) + (0,)) for i in range(r)}
        return p.substitute(images).format([f"a{i + 1}" for i in range(r)] + [hbar])
    return p.format([f"w{i + 1}" for i in range(r)] + [hbar])


@dataclass(frozen=True, eq=False)
class GKMClass:
    space: FlagVariety
    values: Mapping[int, object]  # Poly, or RatFunc after division

    def value(self, x: int):
        return self.values.get(x, Poly.zero(self.space.nvars))

    def __add__(self, other: "GKMClass") -> "GKMClass":
        _check_same(self, other)
        return GKMClass(self.space, {x: self.value(x) + other.value(x) for x in self.space.points})

    def __sub__(self, other: "GKMClass") -> "GKMClass":
        _check_same(self, other)
        return GKMClass(self.space, {x: self.value(x) - other.value(x) for x in self.space.points})

    def __mul__(self, other) -> "GKMClass":
        if isinstance(other, GKMClass):
            _check_same(self, other)
            return GKMClass(self.space, {x: self.value(x) * other.value(x) for x in self.space.points})
        return GKMClass(self.space, {x: v * other for x, v in self.values.items()})

    def __neg__(self) -> "GKMClass":
        return GKMClass(self.space, {x: -v for x, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GKMClass) or other.space is not self.space:
            return NotImplemented
        return all(self.value(x) == other.value(x) for x in self.space.points)

    __hash__ = None  # type: ignore[assignment]

    def map_values(self, f) -> "GKMClass":
        return GKMClass(self.space, {x: f(v) for x, v in self.values.items()})

    def polynomial_values(self) -> dict[int, Poly]:
        out = {}
        for x in self.space.points:
            v = self.value(x)
            if isinstance(v, RatFunc):
                p = v.is_polynomial()
                if p is None:
                    raise NotInSpanError(f"value at {self.space.label(x)} is not a polynomial: {v}")
                v = p
            out[x] = v
        return out

    def edge_violations(self) -> list[tuple[int, int]]:
        """Pairs (x, y = x s_gamma) where x, y differ by a reflection and the GKM divisibility fails."""
        sp = self.space
        g = sp.group
        vals = self.polynomial_values()
        bad = []
        for x in sp.points:
            for k in sp.P.nonlevi_roots:
                y = sp.P.minrep(g.mult(x, g.reflections[k]))
                if y <= x:
                    continue
                diff = vals[x] - vals[y]
                if diff and diff.try_div_linear(sp.weight_form(sp.moved_roots(x)[k])) is None:
                    bad.append((x, y))
        return bad

    def to_json(self) -> list[dict]:
        g = self.space.group
        out = []
        for x in self.space.points:
            v = self.value(x)
            if isinstance(v, RatFunc):
                ent = {
                    "num": v.num.to_json(),
                    "den": [list(f) for f, m in sorted(v.den.items()) for _ in range(m)],
                    "scale": str(v.scale),
                }
            else:
                ent = {"num": v.to_json(), "den": [], "scale": "1"}
            out.append({"word": [i + 1 for i in g.words[x]], "ratfunc": ent})
        return out


# conversions --------------------------------------------------------------

def to_gkm(c: CohClass) -> GKMClass:
    sp = c.space
    items = list(c.coeffs.items())
    vals = {}
    for x in sp.points:
        pairs = []
        for u, p in items:
            loc = sp.billey_localize(c.basis, u, x)
            if loc:
                pairs.append((p, loc))
        vals[x] = poly_dot(sp.nvars, pairs)
    return GKMClass(sp, vals)


def _divide_all(p: Poly, factors) -> Poly:
    for f in factors:
        p = p.div_linear(f)
    return p


def from_gkm(g: GKMClass, basis: str) -> CohClass:
    """Triangular solve against the Schubert localization matrix."""
    sp = g.space
    if basis not in BASES:
        raise ValueError(f"basis must be X or Y, got {basis!r}")
    vals = g.polynomial_values()
    order = sorted(sp.points, key=sp.length)
    if basis == "X":
        order.reverse()
    coeffs: dict[int, Poly] = {}
    for u in order:
        pairs = [(c, sp.billey_localize(basis, v, u)) for v, c in coeffs.items()]
        known = poly_dot(sp.nvars, [(a, b) for a, b in pairs if b])
        rest = vals[u] - known
        if not rest:
            continue
        try:
            coeffs[u] = _divide_all(rest, sp.diagonal_factors(basis, u))
        except NotDivisibleError:
            raise NotInSpanError(
                f"not in the Schubert span: residual at {sp.label(u)} is not divisible by the diagonal"
            ) from None
    return CohClass(sp, basis, coeffs)


def convert(c: CohClass, basis: str) -> CohClass:
    if c.basis == basis:
        return c
    return from_gkm(to_gkm(c), basis)


def cup(a: CohClass, b: CohClass, basis: str | None = None) -> CohClass:
    _check_same(a, b)
    return from_gkm(to_gkm(a) * to_gkm(b), basis or a.basis)


# pairings -------------------------------------------------------------------

def pairing_schubert(a: CohClass, b: CohClass) -> Poly:
    """Sum of a_u b_u for a on the X basis and b on the Y basis."""
    _check_same(a, b)
    if a.basis != "X" or b.basis != "Y":
        raise ValueError("pairing_schubert needs an X-basis class and a Y-basis class")
    return poly_dot(a.space.nvars, [(p, b.coeffs[u]) for u, p in a.coeffs.items() if u in b.coeffs])


def _values(c) -> GKMClass:
    return to_gkm(c) if isinstance(c, CohClass) else c


def pairing_localization(a, b, extra=None, *, expect_polynomial: bool = True):
    """Atiyah-Bott sum of a|_x b|_x / e(T_x) (optionally over extra linear factors).

    ``extra`` maps a fixed point to a list of additional denominator forms.
    Returns a Poly, or a RatFunc when ``expect_polynomial`` is False.
    """
    ga, gb = _values(a), _values(b)
    _check_same(ga, gb)
    sp = ga.space
    plain = all(not isinstance(v, RatFunc) for v in list(ga.values.values()) + list(gb.values.values()))
    if extra is None and sp.is_full and plain:
        # every e(T_x) is +-prod(alpha): one common denominator
        N = len(sp.rs.positive_roots)
        pairs = []
        for x in sp.points:
            u, v = ga.value(x), gb.value(x)
            if u and v:
                pairs.append((u, -v if (N + sp.length(x)) % 2 else v))
        num = poly_dot(sp.nvars, pairs)
        r = RatFunc(num, [sp.weight_form(b) for b in sp.rs.positive_roots])
    else:
        terms = []
        for x in sp.points:
            u, v = ga.value(x), gb.value(x)
            if not u or not v:
                continue
            prod = (u if isinstance(u, RatFunc) else RatFunc.from_poly(u)) * v
            dens = sp.tangent_weights(x) + (list(extra(x)) if extra else [])
            for f in dens:
                prod = prod.div_by_linform(f)
            terms.append(prod)
        r = RatFunc.sum(terms, sp.nvars)
    if not expect_polynomial:
        return r
    p = r.is_polynomial()
    if p is None:
        raise ArithmeticError(f"identity violation: pairing is not a polynomial: {r}")
    return p


def integrate(c) -> Poly:
    g = _values(c)
    return pairing_localization(g, GKMClass(g.space, {x: g.space._one for x in g.space.points}))


# Chern classes ------------------------------------------------------------------

def chern_tangent(space: FlagVariety, *, hbar: bool = False) -> GKMClass:
    """prod(1 - x gamma) over gamma in R+ \\ R_P+; with ``hbar`` the homogenized prod(h - x gamma)."""
    n = space.nvars
    out = {}
    shift = Poly.hbar(n) if hbar else 1
    for x in space.points:
        val = Poly.const(n, 1)
        for w in space.tangent_weights(x):
            val = val * (Poly.linear(w) + shift)
        out[x] = val
    return GKMClass(space, out)


def chern_cotangent(space: FlagVariety) -> GKMClass:
    n = space.nvars
    out = {}
    for x in space.points:
        val = Poly.const(n, 1)
        for w in space.tangent_weights(x):
            val = val * (1 - Poly.linear(w))
        out[x] = val
    return GKMClass(space, out)


def relative_tangent_chern(space: FlagVariety, parabolic: Iterable[int]) -> GKMClass:
    """c^T(T_f) on G/B for f: G/B -> G/P, value prod_{gamma in R_P+}(1 - x gamma)."""
    P = ParabolicData(space.group, parabolic)
    n = space.nvars
    out = {}
    for x in space.points:
        wr = space.moved_roots(x)
        val = Poly.const(n, 1)
        for k in P.levi_roots:
            val = val * (1 - Poly.linear(space.weight_form(wr[k])))
        out[x] = val
    return GKMClass(space, out)


# G/B -> G/P ---------------------------------------------------------------------

def pushforward_gp(c: CohClass, target: FlagVariety) -> CohClass:
    """f_* on the Schubert basis."""
    src = c.space
    if not src.is_full or target.group is not src.group:
        raise ValueError("pushforward needs a class on G/B of the same root system")
    P = target.P
    out: dict[int, Poly] = {}
    for w, p in c.coeffs.items():
        if c.basis == "X":
            if P.is_minimal(w):
                out[w] = out[w] + p if w in out else p
        else:
            if w == P.maxrep(w):
                u = P.minrep(w)
                out[u] = out[u] + p if u in out else p
    return CohClass(target, c.basis, out)


def pushforward_gkm(g: GKMClass, target: FlagVariety) -> GKMClass:
    """f_* by localization: sum over the fibre of g / e(T_f)."""
    src = g.space
    grp = src.group
    P = target.P
    vals = {}
    for x in target.points:
        terms = []
        for y in P.wp_group:
            xy = grp.mult(x, y)
            v = g.value(xy)
            if not v:
                continue
            r = v if isinstance(v, RatFunc) else RatFunc.from_poly(v)
            wr = src.moved_roots(xy)
            for k in P.levi_roots:
                r = r.div_by_linform(tuple(-c for c in wr[k]) + (0,))
            terms.append(r)
        s = RatFunc.sum(terms, src.nvars)
        p = s.is_polynomial()
        vals[x] = p if p is not None else s
    return GKMClass(target, vals)


def pullback_gp(c, source: FlagVariety) -> CohClass | GKMClass:
    """f^*: value at w is the value at the coset of w. CohClass in, CohClass out."""
    g = _values(c)
    tgt = g.space
    P = tgt.P
    vals = {w: g.value(P.minrep(w)) for w in source.points}
    out = GKMClass(source, vals)
    if isinstance(c, CohClass):
        return from_gkm(out, c.basis)
    return out
