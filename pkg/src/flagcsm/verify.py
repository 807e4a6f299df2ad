"""Named verification suites over exact identities.

A suite enumerates independent cases for a space and checks each one
exactly. Cases are exhaustive when the Weyl group has at most
``EXHAUSTIVE_LIMIT`` elements, and sampled (seeded) above that. Cases may be
fanned out over worker processes; reports sort failures canonically so the
output does not depend on the worker count.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Callable

from . import golden
from .cohomology import (
    CohClass,
    FlagVariety,
    GKMClass,
    chern_cotangent,
    chern_tangent,
    flag_variety,
    from_gkm,
    integrate,
    pairing_localization,
    pairing_schubert,
    pushforward_gkm,
    pushforward_gp,
    to_gkm,
)
from .csmops import (
    VARIANTS,
    apply_bgg,
    apply_dl,
    apply_right_weyl,
    bgg_on_basis,
    csm,
    csm_gkm,
    csm_localization_closed_form,
    csm_via_recursion,
    inverse_by_antitranspose,
    leading_coefficient,
    matrix_inverse,
    phi_w0,
    pushforward_of_constructible,
    theta_coefficients,
    transition_matrix,
)
from .exactalg import Poly, weyl_twist
from .parabolic import (
    chevalley_classical_limit,
    chevalley_csm,
    csm_gp,
    csm_gp_gkm,
    gp_orthogonality,
    p2_negative_control,
    vrr_check,
)

EXHAUSTIVE_LIMIT = 50
DEFAULT_SAMPLE = 200


# space descriptors ---------------------------------------------------------------

def parse_space(desc: str) -> tuple[str, int, tuple]:
    """'A3' or 'A3/1,3' -> ('A', 3, (1, 3))."""
    head, _, tail = desc.partition("/")
    t, r = head[0].upper(), int(head[1:])
    P = tuple(sorted(int(x) for x in tail.split(",") if x.strip())) if tail else ()
    return t, r, P


def space_name(space: FlagVariety) -> str:
    base = space.rs.name
    return base + ("/" + ",".join(map(str, space.parabolic)) if space.parabolic else "")


def _space(desc: str) -> FlagVariety:
    t, r, P = parse_space(desc)
    return flag_variety(t, r, P)


# reports ----------------------------------------------------------------------------

@dataclass
class Failure:
    ids: list
    expected: str
    actual: str
    order: tuple = field(default=(), repr=False)


@dataclass
class SuiteReport:
    suite: str
    space: str
    passed: bool
    cases: int
    failures: list
    seconds: float
    incomplete: bool = False
    exhaustive: bool = True
    seed: int = 0

    def to_json(self) -> dict:
        d = asdict(self)
        d["failures"] = [{"ids": f.ids, "expected": f.expected, "actual": f.actual} for f in self.failures]
        d["witness"] = d["failures"][0] if d["failures"] else None
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = " (incomplete)" if self.incomplete else ""
        return f"{status} {self.suite} [{self.space}] cases={self.cases} failures={len(self.failures)} {self.seconds:.2f}s{extra}"


# helpers -------------------------------------------------------------------------------

def _label(space: FlagVariety, u: int) -> str:
    return space.label(u) if u or space.rs.cartan_type == "A" else "id"


def _fail(space: FlagVariety, ids, expected, actual) -> Failure:
    g = space.group
    order = tuple(g.lengths[i] if isinstance(i, int) and 0 <= i < g.order else 0 for i in ids) + tuple(
        i if isinstance(i, int) else 0 for i in ids
    )
    return Failure([_label(space, i) if isinstance(i, int) else str(i) for i in ids], str(expected), str(actual), order)


def _pairs(space: FlagVariety, seed: int, sample: int) -> tuple[list, bool]:
    pts = space.points
    if space.group.order <= EXHAUSTIVE_LIMIT:
        return [(u, v) for u in pts for v in pts], True
    rng = random.Random(seed)
    allp = [(u, v) for u in pts for v in pts]
    return sorted(rng.sample(allp, min(sample, len(allp)))), False


def _cells(space: FlagVariety, seed: int, sample: int) -> tuple[list, bool]:
    pts = list(space.points)
    if space.group.order <= EXHAUSTIVE_LIMIT or len(pts) <= sample:
        return pts, True
    return sorted(random.Random(seed).sample(pts, sample)), False


def random_poly(nvars: int, rng: random.Random, degree: int = 2, terms: int = 3) -> Poly:
    items = []
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(nvars)] += 1
        items.append((tuple(exps), rng.randint(-3, 3)))
    return Poly.from_exps(nvars, items)


def random_class(space: FlagVariety, basis: str, rng: random.Random, cells: int = 3) -> CohClass:
    pts = space.points
    pick = rng.sample(pts, min(cells, len(pts)))
    return CohClass(space, basis, {u: random_poly(space.nvars, rng) for u in pick})


def _prod_roots(space: FlagVariety, sign: int) -> Poly:
    hb = Poly.hbar(space.nvars)
    out = Poly.const(space.nvars, 1)
    for b in space.rs.positive_roots:
        out = out * (hb + Poly.linear(space.weight_form(b)) * sign)
    return out


# suites: each is (cases(space, seed, sample) -> (list, exhaustive), check(space, case) -> Failure|None) --------

def _golden_fl4_cases(space, seed, sample):
    return [("csm", i) for i in range(24)] + [("inverse", i) for i in range(24)], True


def _fl4_matrices(space):
    g = space.group
    idx = {g.window(w): w for w in space.points}
    order = [idx[s] for s in golden.FL4_WINDOWS]
    M = transition_matrix(space)
    A = [[M[order[i]][order[j]] for j in range(24)] for i in range(24)]
    return A, matrix_inverse(A)


_FL4: dict = {}


def _golden_fl4_check(space, case):
    if space.rs.name != "A3" or not space.is_full:
        raise ValueError("golden-fl4 runs on A3 only")
    if "m" not in _FL4:
        _FL4["m"] = _fl4_matrices(space)
    A, Ai = _FL4["m"]
    kind, i = case
    got, want = (A, golden.FL4_CSM) if kind == "csm" else (Ai, golden.FL4_CSM_INVERSE)
    if list(got[i]) != list(want[i]):
        return Failure([kind, golden.FL4_WINDOWS[i]], list(want[i]), list(got[i]), (i,))
    return None


def _golden_fl3_cases(space, seed, sample):
    return [("cell", w) for w in sorted(golden.FL3_CSM)] + [("tangent",), ("P1",)], True


def _ne_by_word(c: CohClass) -> dict:
    g = c.space.group
    return {tuple(i + 1 for i in g.words[u]): v for u, v in c.nonequivariant().items()}


def _golden_fl3_check(space, case):
    if space.rs.name != "A2" or not space.is_full:
        raise ValueError("golden-fl3 runs on A2 only")
    g = space.group
    if case[0] == "cell":
        w = g.from_word(case[1])
        got = _ne_by_word(csm(space, w).cls)
        want = golden.FL3_CSM[case[1]]
    elif case[0] == "tangent":
        total = space.zero("X")
        for w in space.points:
            total = total + csm(space, w).cls
        got = _ne_by_word(total)
        want = golden.FL3_TANGENT
        tan = from_gkm(chern_tangent(space), "X")
        got2 = _ne_by_word(tan.map_coeffs(lambda p: p.specialize(weights_zero=True)))
        if got2 != want:
            return Failure(["c(TX) by localization"], want, got2)
    else:
        p1 = flag_variety("A", 1)
        got = {
            "csm": _ne_by_word(csm(p1, 1).cls),
            "dual": _ne_by_word(csm(p1, 1, "X", "dual").cls),
            "tangent": _ne_by_word(from_gkm(chern_tangent(p1), "X").map_coeffs(lambda p: p.specialize(weights_zero=True))),
        }
        want = {"csm": golden.P1_CSM, "dual": golden.P1_DUAL_CSM, "tangent": golden.P1_TANGENT}
    if got != want:
        return Failure([str(case)], want, got)
    return None


def _hecke_cases(space, seed, sample):
    pairs, ex = _pairs(space, seed, sample)
    return [(k, u, v) for k in ("main", "opposite", "nonequivariant") for u, v in pairs], ex


def _hecke_check(space, case):
    kind, u, v = case
    if kind == "main":
        got = pairing_localization(GKMClass(space, csm_gkm(space, u, "X")), GKMClass(space, csm_gkm(space, v, "Y", "dual")))
        want = _prod_roots(space, 1) if u == v else Poly.zero(space.nvars)
    elif kind == "opposite":
        got = pairing_localization(GKMClass(space, csm_gkm(space, u, "Y")), GKMClass(space, csm_gkm(space, v, "X", "dual")))
        want = _prod_roots(space, -1) if u == v else Poly.zero(space.nvars)
    else:
        a = csm(space, u, "X").cls.specialize(weights_zero=True, hbar=1)
        b = csm(space, v, "Y", "dual").cls.specialize(weights_zero=True, hbar=1)
        got = pairing_schubert(a, b)
        want = Poly.const(space.nvars, int(u == v))
    return None if got == want else _fail(space, (kind, u, v), want, got)


def _stable_cases(space, seed, sample):
    pairs, ex = _pairs(space, seed, sample)
    return [("axioms", w) for w in space.points] + [("orth", u, v) for u, v in pairs], ex


def _stable_check(space, case):
    g = space.group
    n = space.nvars
    hb = Poly.hbar(n)
    N = len(space.rs.positive_roots)
    if case[0] == "axioms":
        w = case[1]
        vals = csm_gkm(space, w, "X")
        for u in space.points:
            val = vals[u]
            if not g.bruhat_leq(u, w):
                if val:
                    return _fail(space, ("support", w, u), 0, val)
            elif u == w:
                want = Poly.const(n, 1)
                for b in space.moved_roots(w):
                    L = Poly.linear(space.weight_form(b))
                    want = want * (L - hb if space.rs.root_index[b] < 0 else L)
                got = -val if N % 2 else val
                if got != want:
                    return _fail(space, ("normalization", w), want, got)
            elif val.try_div_linear((0,) * (n - 1) + (1,)) is None:
                return _fail(space, ("h-divisibility", w, u), "divisible by h", val)
        return None
    _, u, v = case
    got = pairing_localization(
        GKMClass(space, csm_gkm(space, u, "X")),
        GKMClass(space, csm_gkm(space, v, "Y")),
        extra=space.cotangent_hbar_weights,
    )
    want = Poly.const(n, (-1) ** N if u == v else 0)
    return None if got == want else _fail(space, ("orth", u, v), want, got)


def _duality_cases(space, seed, sample):
    cells, ex = _cells(space, seed, sample)
    return [("eq72", v) for v in cells] + [("cTX", v) for v in cells] + [("cTstarX", v) for v in cells], ex


def _duality_check(space, case):
    kind, v = case
    g = space.group
    if kind == "eq72":
        dual = csm_gkm(space, v, "Y", "dual")
        ordinary = csm_gkm(space, v, "Y")
        w0cot = space.cotangent_euler(g.w0)
        for x in space.points:
            lhs = dual[x] * space.cotangent_euler(x)
            rhs = w0cot * ordinary[x]
            if lhs != rhs:
                return _fail(space, (kind, v, x), rhs, lhs)
        return None
    if kind == "cTX":
        factor, src, target = chern_tangent(space), "dual", "ordinary"
    else:
        factor, src, target = chern_cotangent(space), "ordinary", "dual"
    a = GKMClass(space, csm_gkm(space, v, "X", src)).map_values(lambda p: p.specialize(hbar=1))
    prod = from_gkm(factor * a, "X").specialize(weights_zero=True)
    want = csm(space, v, "X", target).cls.specialize(weights_zero=True, hbar=1)
    return None if prod == want else _fail(space, (kind, v), want, prod)


def _chern_cases(space, seed, sample):
    return [("product",), ("euler",), ("classes",)], True


def _chern_check(space, case):
    n = space.nvars
    if case[0] == "product":
        want = Poly.const(n, 1)
        for b in space.rs.positive_roots:
            L = Poly.linear(space.weight_form(b))
            want = want * (1 - L * L)
        prod = chern_tangent(space) * chern_cotangent(space)
        glob = from_gkm(prod, "Y")
        expect = CohClass(space, "Y", {0: want})
        return None if glob == expect else _fail(space, ("product",), expect, glob)
    if case[0] == "euler":
        got = integrate(chern_tangent(space)).specialize(weights_zero=True)
        want = Poly.const(n, space.group.order)
        return None if got == want else _fail(space, ("euler",), want, got)
    for c in (chern_tangent(space), chern_cotangent(space)):
        if c.edge_violations():
            return _fail(space, ("classes",), "GKM class", "edge violation")
        from_gkm(c, "X")
    return None


def _closed_cases(space, seed, sample):
    pairs, ex = _pairs(space, seed, sample)
    rec = [("recursion", w, b, var) for w in space.points for b in "XY" for var in VARIANTS]
    if not ex:
        rng = random.Random(seed + 1)
        rec = sorted(rng.sample(rec, min(sample, len(rec))))
    return [("closed", w, u) for w, u in pairs] + rec, ex


def _closed_check(space, case):
    if case[0] == "closed":
        _, w, u = case
        got = csm_localization_closed_form(space, w, u)
        want = csm_gkm(space, w, "Y")[u]
        return None if got == want else _fail(space, case, want, got)
    _, w, b, var = case
    a = csm(space, w, b, var).cls
    r = csm_via_recursion(space, w, b, var).cls
    return None if a == r else _fail(space, (b, var, w), a, r)


def _positivity_cases(space, seed, sample):
    r = space.rs.rank
    subsets = [s for k in range(r + 1) for s in combinations(range(1, r + 1), k)]
    out = []
    for s in subsets:
        sp = flag_variety(space.rs.cartan_type, r, s)
        out.extend((s, w) for w in sp.points)
    if space.group.order > EXHAUSTIVE_LIMIT:
        return sorted(random.Random(seed).sample(out, min(sample, len(out)))), False
    return out, True


def _positivity_check(space, case):
    s, w = case
    sp = flag_variety(space.rs.cartan_type, space.rs.rank, s)
    ne = csm_gp(sp, w).nonequivariant()
    bad = {sp.label(u): c for u, c in ne.items() if not (int(c) == c and c >= 0)}
    if bad or ne.get(w) != 1:
        return Failure([str(list(s)), _label(sp, w)], "nonnegative integers, leading 1", bad or ne.get(w), (len(s), w))
    return None


def _gp_orth_cases(space, seed, sample):
    pairs, ex = _pairs(space, seed, sample)
    return [("pair", u, v) for u, v in pairs], ex


def _gp_orth_check(space, case):
    _, u, v = case
    got = gp_orthogonality(space, u, v)
    want = Poly.const(space.nvars, int(u == v))
    return None if got == want else _fail(space, (u, v), want, got)


def _vrr_cases(space, seed, sample):
    return [("cell", u) for u in space.points] + [("push", u) for u in space.points], True


def _vrr_check(space, case):
    kind, u = case
    if kind == "cell":
        rep = vrr_check(space, u)
        return None if rep else _fail(space, ("vrr", u), "equal", rep.discrepancy)
    # basis pushforward agrees with the localization pushforward
    full = space.full()
    c = csm(full, u, "X").cls
    a = to_gkm(pushforward_gp(c, space))
    b = pushforward_gkm(to_gkm(c), space)
    return None if a == b else _fail(space, ("push", u), a.values, b.values)


def _chevalley_cases(space, seed, sample):
    betas = [b for b in range(1, space.rs.rank + 1) if b not in space.parabolic]
    return [(k, b, w) for k in ("csm", "classical") for b in betas for w in space.points], True


def _chevalley_check(space, case):
    kind, b, w = case
    rep = chevalley_csm(space, b, w) if kind == "csm" else chevalley_classical_limit(space, b, w)
    return None if rep else _fail(space, (kind, b, w), "equal", rep.discrepancy)


def _p2_cases(space, seed, sample):
    return [("control",)], True


def _p2_check(space, case):
    got = p2_negative_control()
    want = {
        "naive": golden.P2_NAIVE_DUAL_PAIRING,
        "normalized": golden.P2_NORMALIZED_PAIRING,
        "csm_open_cell": golden.P2_OPEN_CELL_CSM,
    }
    sp = flag_variety("A", 2, (1,))
    got = dict(got, csm_open_cell={tuple(i + 1 for i in sp.group.words[u]): c for u, c in got["csm_open_cell"].items()})
    return None if got == want else Failure(["P2"], want, got)


def _inverse_cases(space, seed, sample):
    return [("inverse",), ("GB",)] + [("theta", w) for w in space.points], True


_MATS: dict = {}


def _matrix(space):
    key = id(space)
    if key not in _MATS:
        _MATS[key] = transition_matrix(space)
    return _MATS[key]


def _inverse_check(space, case):
    M = _matrix(space)
    g = space.group
    if case[0] == "inverse":
        if any(x != 1 for x in M[0]):
            return _fail(space, ("row id",), "all ones", M[0])
        inv = matrix_inverse(M)
        anti = inverse_by_antitranspose(space, M)
        return None if inv == anti else _fail(space, ("inverse",), anti, inv)
    if case[0] == "GB":
        theta = theta_coefficients(space, g.w0, M)
        want = {v: (-1) ** ((g.lengths[g.w0] - g.lengths[v]) % 2) for v in space.points}
        if theta != want:
            return _fail(space, ("GB",), want, theta)
        got = pushforward_of_constructible(space, theta)
        return None if got == space.schubert("X", g.w0) else _fail(space, ("GB",), "[X(w0)]", got)
    w = case[1]
    got = pushforward_of_constructible(space, theta_coefficients(space, w, M))
    want = space.schubert("X", w)
    return None if got == want else _fail(space, ("theta", w), want, got)


def _operators_cases(space, seed, sample):
    r = space.rs.rank
    cases = [("braid", i, j, t) for i in range(1, r + 1) for j in range(i + 1, r + 1) for t in range(3)]
    cases += [("involution", i, k) for i in range(1, r + 1) for k in range(3)]
    cases += [("adjoint", i, k) for i in range(1, r + 1) for k in range(3)]
    cases += [("bgg-basis", i, k) for i in range(1, r + 1) for k in range(3)]
    cases += [("point-action", i) for i in range(1, r + 1)]
    cases += [("descent", i) for i in range(1, r + 1)]
    return cases, True


def _braid_word(space, i, j):
    C = space.rs.cartan_matrix
    m = {0: 2, 1: 3, 2: 4, 3: 6}[C[i - 1][j - 1] * C[j - 1][i - 1]]
    a = [i if k % 2 == 0 else j for k in range(m)]
    b = [j if k % 2 == 0 else i for k in range(m)]
    return a, b


def _operators_check(space, case):
    rng = random.Random(hash(case) & 0xFFFF)
    kind = case[0]
    if kind == "braid":
        _, i, j, t = case
        c = random_class(space, "X", rng)
        a, b = _braid_word(space, i, j)
        if t < 2:
            op = "L" if t == 0 else "Lv"
            lhs, rhs = apply_dl(op, a, c), apply_dl(op, b, c)
        else:
            lhs, rhs = c, c
            for k in reversed(a):
                lhs = apply_right_weyl(k, lhs)
            for k in reversed(b):
                rhs = apply_right_weyl(k, rhs)
        return None if lhs == rhs else _fail(space, case, rhs, lhs)
    if kind == "involution":
        _, i, k = case
        c = random_class(space, "X", rng)
        tests = {
            "L": apply_dl("L", [i, i], c),
            "Lv": apply_dl("Lv", [i, i], c),
            "s": apply_right_weyl(i, apply_right_weyl(i, c)),
        }
        for name, val in tests.items():
            if val != c:
                return _fail(space, case + (name,), c, val)
        dd = apply_bgg(i, apply_bgg(i, c))
        return None if not dd.coeffs else _fail(space, case + ("d^2",), 0, dd)
    if kind == "adjoint":
        _, i, k = case
        a = random_class(space, "X", rng)
        b = random_class(space, "Y", rng)
        lhs = pairing_localization(apply_dl("L", [i], a), b)
        rhs = pairing_localization(a, apply_dl("Lv", [i], b))
        return None if lhs == rhs else _fail(space, case, rhs, lhs)
    if kind == "bgg-basis":
        _, i, k = case
        c = random_class(space, "X", rng)
        a, b = apply_bgg(i, c), bgg_on_basis(i, c)
        return None if a == b else _fail(space, case, b, a)
    g = space.group
    if kind == "descent":
        # L_i[X(w)] = -[X(w)] and L_i^v[X(w)] = [X(w)] when w s_i < w
        i = case[1]
        for w in space.points:
            if g.lengths[g.right[i - 1][w]] > g.lengths[w]:
                continue
            x = space.schubert("X", w)
            if apply_dl("L", [i], x) != -x or apply_dl("Lv", [i], x) != x:
                return _fail(space, case + (w,), "-[X(w)], [X(w)]", "other")
        return None
    _, i = case
    si = g.from_word([i])
    got = apply_right_weyl(i, space.fixed_point_class(0))
    want = -space.fixed_point_class(si)
    if got != want:
        return _fail(space, case, want.values, got.values)
    x = apply_bgg(i, space.schubert("X", 0))
    return None if x == space.schubert("X", si) else _fail(space, case + ("d[X(id)]",), "[X(s_i)]", x)


def _leading_cases(space, seed, sample):
    cells, ex = _cells(space, seed, sample)
    return [(b, var, w) for b in "XY" for var in VARIANTS for w in cells], ex


def _leading_check(space, case):
    b, var, w = case
    g = space.group
    c = csm(space, w, b, var).cls
    for u in c.coeffs:
        ok = g.bruhat_leq(u, w) if b == "X" else g.bruhat_leq(w, u)
        if not ok:
            return _fail(space, case + ("support", u), "Bruhat-comparable support", u)
    if b == "X":
        want = leading_coefficient(space, w, var == "dual")
    else:
        ww = g.mult(g.w0, w)
        want = weyl_twist(g, g.w0, leading_coefficient(space, ww, var == "dual"))
    if c.coeff(w) != want:
        return _fail(space, case + ("leading",), want, c.coeff(w))
    if b == "X":
        vals = csm_gkm(space, w, b, var)
        zero = Poly.zero(space.nvars)
        for x in space.points:
            v0 = vals[x].specialize(hbar=0)
            # the dual class flips the sign of the point class when l(w) is odd
            sign = -1 if var == "dual" and g.lengths[w] % 2 else 1
            expect = space.euler(x) * sign if x == w else zero
            if v0 != expect:
                return _fail(space, case + ("degree0", x), expect, v0)
    return None


def _gkm_cases(space, seed, sample):
    cells, ex = _cells(space, seed, sample)
    pairs, _ = _pairs(space, seed, sample)
    cases = [("edges", b, var, w) for b in "XY" for var in VARIANTS for w in cells]
    cases += [("duality", u, v) for u, v in pairs]
    cases += [("roundtrip", k) for k in range(10)]
    cases += [("pairings", k) for k in range(50)]
    cases += [("delta", x) for x in cells]
    if space.rs.rank <= 2 and space.is_full:
        cases += [("words", u) for u in space.points]
    return cases, ex


def _reduced_words(g, w):
    if w == 0:
        return [()]
    out = []
    for i in range(g.rank):
        v = g.right[i][w]
        if g.lengths[v] < g.lengths[w]:
            out.extend(word + (i,) for word in _reduced_words(g, v))
    return out


def _gkm_check(space, case):
    kind = case[0]
    rng = random.Random(hash(case) & 0xFFFF)
    if kind == "edges":
        _, b, var, w = case
        bad = csm_gp_gkm(space, w, b, var).edge_violations()
        return None if not bad else _fail(space, case, [], bad)
    if kind == "duality":
        _, u, v = case
        got = pairing_localization(space.schubert("X", u), space.schubert("Y", v))
        want = int(u == v)
        return None if got == want else _fail(space, case, want, got)
    if kind == "roundtrip":
        b = "XY"[case[1] % 2]
        c = random_class(space, b, rng)
        back = from_gkm(to_gkm(c), b)
        return None if back == c else _fail(space, case, c, back)
    if kind == "pairings":
        a = random_class(space, "X", rng)
        bcls = random_class(space, "Y", rng)
        lhs, rhs = pairing_schubert(a, bcls), pairing_localization(a, bcls)
        return None if lhs == rhs else _fail(space, case, lhs, rhs)
    if kind == "delta":
        x = case[1]
        e = from_gkm(space.fixed_point_class(x), "X")
        got = integrate(e)
        return None if got == 1 else _fail(space, case, 1, got)
    u = case[1]
    g = space.group
    for v in space.points:
        ref = space.billey_localize("Y", v, u)
        for word in _reduced_words(g, u):
            got = space.localize_word("Y", v, word)
            if got != ref:
                return _fail(space, ("words", u, v), ref, got)
    return None


def _phi_cases(space, seed, sample):
    cells, ex = _cells(space, seed, sample)
    return [("opposite", var, w) for var in VARIANTS for w in cells] + [("involution", k) for k in range(5)], ex


def _phi_check(space, case):
    g = space.group
    if case[0] == "opposite":
        _, var, w = case
        got = phi_w0(csm(space, g.mult(g.w0, w), "X", var).cls)
        want = csm(space, w, "Y", var).cls
        return None if got == want else _fail(space, case, want, got)
    rng = random.Random(case[1])
    c = random_class(space, "XY"[case[1] % 2], rng)
    back = phi_w0(phi_w0(c))
    if back != c:
        return _fail(space, case, c, back)
    ne = c.specialize(weights_zero=True)
    tw = phi_w0(ne)
    swapped = {g.mult(g.w0, u): p for u, p in ne.coeffs.items()}
    return None if tw.coeffs == swapped else _fail(space, case + ("nonequivariant",), swapped, tw.coeffs)


@dataclass(frozen=True)
class Suite:
    name: str
    cases: Callable
    check: Callable
    spaces: tuple  # default spaces for "all"
    description: str
    only: tuple = ()  # if set, the suite runs on exactly these spaces
    full_only: bool = False

    def applies(self, desc: str) -> bool:
        t, r, P = parse_space(desc)
        if self.only:
            return any(parse_space(d) == (t, r, P) for d in self.only)
        return not (self.full_only and P)


SUITES: dict[str, Suite] = {}


def _register(name, cases, check, spaces, description, *, only=False, full_only=False):
    SUITES[name] = Suite(name, cases, check, tuple(spaces), description, tuple(spaces) if only else (), full_only)


_FULL = ("A1", "A2", "A3", "B2", "B3", "G2")
_GP = ("A1", "A2", "A2/1", "A2/2", "A3/2,3", "A3/1,3", "A3/1", "A3/2", "A3/3", "A3/1,2", "A3/1,2,3", "A3", "B2/1", "B2/2", "G2/1", "G2/2")

_register("golden-fl4", _golden_fl4_cases, _golden_fl4_check, ["A3"], "transition matrix and inverse for Fl(4)", only=True)
_register("golden-fl3", _golden_fl3_cases, _golden_fl3_check, ["A2"], "CSM classes of Fl(3), c(T Fl(3)), P^1", only=True)
_register("hecke-orthogonality", _hecke_cases, _hecke_check, _FULL, "Hecke orthogonality, opposite version, nonequivariant duality", full_only=True)
_register("stable-axioms", _stable_cases, _stable_check, ("A2", "B2", "G2"), "support, normalization, h-divisibility, stable orthogonality", full_only=True)
_register("duality", _duality_cases, _duality_check, ("A1", "A2", "A3", "B2", "G2"), "dual classes vs cotangent Euler class; c(TX) and c(T*X) exchange", full_only=True)
_register("chern-product", _chern_cases, _chern_check, _FULL, "c(TX) c(T*X) = prod(1 - alpha^2); Euler characteristic", full_only=True)
_register("closed-form", _closed_cases, _closed_check, ("A1", "A2", "B2", "G2", "A3", "B3"), "closed-form localization vs operators vs recursion", full_only=True)
_register("positivity", _positivity_cases, _positivity_check, ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"), "nonnegative nonequivariant coefficients on G/B and every G/P", full_only=True)
_register("gp-orthogonality", _gp_orth_cases, _gp_orth_check, _GP, "orthogonality with the Segre-normalized dual on G/P")
_register("vrr", _vrr_cases, _vrr_check, _GP, "VRR pullback identity; pushforward by basis vs localization")
_register("chevalley", _chevalley_cases, _chevalley_check, _GP, "CSM Chevalley formula and its classical limit")
_register("p2-negative-control", _p2_cases, _p2_check, ("A2/1",), "naive dual pairing -2 and normalized pairing 0 on P^2", only=True)
_register("inverse-theta", _inverse_cases, _inverse_check, ("A2", "A3", "B2"), "inverse transition matrix and constructible functions with [X(w)]", full_only=True)
_register("operators", _operators_cases, _operators_check, ("A1", "A2", "B2", "G2", "A3", "B3", "C3"), "braid relations, involutions, adjointness, BGG formula", full_only=True)
_register("leading-terms", _leading_cases, _leading_check, ("A1", "A2", "A3", "B2", "B3", "G2"), "leading coefficients, degree-0 term, Bruhat support", full_only=True)
_register("gkm-model", _gkm_cases, _gkm_check, ("A1", "A2", "B2", "G2", "A3", "B3", "A2/1", "A3/1,3", "B2/2"), "GKM edge conditions, round trips, pairing agreement, word independence")
_register("phi-w0", _phi_cases, _phi_check, ("A1", "A2", "A3", "B2", "G2"), "the w0 automorphism exchanges X and Y cells", full_only=True)

# invariant -> suite; the registry is tested against this list
COVERAGE = {
    "cohomology.gkm-edge-condition": "gkm-model",
    "cohomology.schubert-duality": "gkm-model",
    "cohomology.to-from-gkm-roundtrip": "gkm-model",
    "cohomology.pairing-routes-agree": "gkm-model",
    "cohomology.billey-word-independence": "gkm-model",
    "cohomology.euler-characteristic": "chern-product",
    "csmops.braid-and-involution": "operators",
    "csmops.adjointness": "operators",
    "csmops.descent-basis-rules": "operators",
    "csmops.hecke-orthogonality": "hecke-orthogonality",
    "csmops.nonequivariant-poincare-duality": "hecke-orthogonality",
    "csmops.leading-and-degree-zero": "leading-terms",
    "csmops.stable-axioms": "stable-axioms",
    "csmops.stable-orthogonality": "stable-axioms",
    "csmops.dual-class-euler-identity": "duality",
    "csmops.tangent-cotangent-exchange": "duality",
    "csmops.positivity": "positivity",
    "csmops.two-routes-and-closed-form": "closed-form",
    "csmops.phi-w0-opposite": "phi-w0",
    "csmops.inverse-and-theta": "inverse-theta",
    "cohomology.chern-product": "chern-product",
    "parabolic.gp-orthogonality": "gp-orthogonality",
    "parabolic.vrr": "vrr",
    "parabolic.chevalley": "chevalley",
    "parabolic.p2-negative-control": "p2-negative-control",
    "golden.fl4": "golden-fl4",
    "golden.fl3": "golden-fl3",
}


# running ---------------------------------------------------------------------------------

def _run_case(args):
    name, desc, case = args
    space = _space(desc)
    try:
        return SUITES[name].check(space, case)
    except Exception as exc:  # an exception is a failed case, not a crash
        return Failure([str(case)], "no exception", f"{type(exc).__name__}: {exc}", ())


def run_suite(
    name: str,
    space: str,
    seed: int = 0,
    budget: float | None = None,
    sample: int = DEFAULT_SAMPLE,
    workers: int | None = None,
) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    if not suite.applies(space):
        raise ValueError(f"suite {name!r} does not apply to space {space!r}")
    sp = _space(space)
    t0 = time.perf_counter()
    cases, exhaustive = suite.cases(sp, seed, sample)
    if workers is None:
        workers = int(os.environ.get("FLAGCSM_WORKERS", "1") or 1)
    failures: list[Failure] = []
    done = 0
    incomplete = False
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunk = max(1, len(cases) // (4 * workers))
            for res in ex.map(_run_case, [(name, space, c) for c in cases], chunksize=chunk):
                done += 1
                if res is not None:
                    failures.append(res)
    else:
        for c in cases:
            if budget is not None and time.perf_counter() - t0 > budget:
                incomplete = True
                break
            res = _run_case((name, space, c))
            done += 1
            if res is not None:
                failures.append(res)
    failures.sort(key=lambda f: (f.order, f.ids))
    seconds = time.perf_counter() - t0
    return SuiteReport(
        suite=name,
        space=space,
        passed=not failures and not incomplete,
        cases=done,
        failures=failures,
        seconds=round(seconds, 3),
        incomplete=incomplete,
        exhaustive=exhaustive,
        seed=seed,
    )


def cross_route_difftest(space: str, count: int = DEFAULT_SAMPLE, seed: int = 0) -> SuiteReport:
    return run_suite("closed-form", space, seed=seed, sample=count)


def default_plan(max_rank: int | None = None, suites=None) -> list[tuple[str, str]]:
    plan = []
    for name in sorted(SUITES):
        if suites and name not in suites:
            continue
        for desc in SUITES[name].spaces:
            if max_rank is not None and parse_space(desc)[1] > max_rank:
                continue
            if not SUITES[name].applies(desc):
                continue
            plan.append((name, desc))
    return plan


def run_plan(plan, seed: int = 0, sample: int = DEFAULT_SAMPLE, workers: int | None = None, budget=None) -> list[SuiteReport]:
    return [run_suite(n, d, seed=seed, sample=sample, workers=workers, budget=budget) for n, d in plan]


def reports_json(reports: list[SuiteReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
