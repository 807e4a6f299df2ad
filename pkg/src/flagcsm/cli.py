"""Command line interface: compute, matrix, verify, localize."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .cohomology import CohClass, FlagVariety, flag_variety, format_poly
from .csmops import VARIANTS, csm, csm_localization_closed_form, matrix_inverse
from .exactalg import Poly, parse_coeff
from .parabolic import csm_gp, csm_gp_gkm
from .rootsys import cartan_matrix, parse_cell
from . import verify as _verify

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


# argument helpers -------------------------------------------------------------------

def _parabolic(text: str) -> tuple:
    if not text:
        return ()
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"invalid parabolic index {tok!r}") from None
    return tuple(sorted(set(out)))


def _space(args) -> FlagVariety:
    t = args.type.upper()
    try:
        cartan_matrix(t, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    P = _parabolic(args.parabolic)
    for i in P:
        if not 1 <= i <= args.rank:
            raise UsageError(f"parabolic index {i} outside 1..{args.rank}")
    try:
        return flag_variety(t, args.rank, P)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cell(space: FlagVariety, text: str, what: str = "cell") -> int:
    try:
        w = parse_cell(space.group, text)
    except ValueError as exc:
        raise UsageError(f"{what} {text!r}: {exc}") from None
    if w not in space.P.minimal_reps:
        raise UsageError(f"{what} {text!r} is not a minimal coset representative for parabolic {list(space.parabolic)}")
    return w


def _hbar(text: str | None):
    if text is None:
        return None
    try:
        return parse_coeff(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid value for --hbar: {text!r}") from None


def _word(space: FlagVariety, u: int) -> str:
    return " ".join(str(i + 1) for i in space.group.words[u])


def _label(space: FlagVariety, u: int) -> str:
    return space.label(u) if (u or space.rs.cartan_type == "A") else "id"


def _coeff_text(space: FlagVariety, p: Poly, coords: str) -> str:
    return format_poly(space, p, roots=coords == "roots")


def _order(space: FlagVariety, how: str) -> list[int]:
    if how == "window":
        if space.rs.cartan_type != "A":
            raise UsageError("--order window requires type A")
        return sorted(space.points, key=space.group.window)
    return list(space.points)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _fmt_num(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# compute ----------------------------------------------------------------------------------

def _compute_class(space: FlagVariety, w: int, basis: str, variant: str) -> CohClass:
    if space.is_full:
        return csm(space, w, basis, variant).cls
    return csm_gp(space, w, basis, variant)


def cmd_compute(args) -> str:
    space = _space(args)
    w = _cell(space, args.cell)
    cls = _compute_class(space, w, args.basis, args.variant)
    hb = _hbar(args.hbar)
    if args.non_equivariant:
        ne = cls.specialize(weights_zero=True, hbar=1 if hb is None else hb)
        terms = [(u, _fmt_num(ne.coeff(u).constant_term())) for u in sorted(ne.coeffs)]
    else:
        if hb is not None:
            cls = cls.specialize(hbar=hb)
        terms = [(u, _coeff_text(space, cls.coeffs[u], args.coords)) for u in sorted(cls.coeffs)]
    head = {
        "space": space.descriptor(),
        "cell": _word(space, w),
        "cell_label": _label(space, w),
        "cell_basis": args.basis,
        "variant": args.variant,
        "non_equivariant": args.non_equivariant,
        "hbar": "h" if hb is None else _fmt_num(hb),
        "coords": args.coords,
    }
    if args.format == "json":
        head["terms"] = [{"word": _word(space, u), "label": _label(space, u), "coeff": c} for u, c in terms]
        if not args.non_equivariant and hb is None:
            head["class"] = cls.to_json()
        return _dump_json(head)
    if args.format == "csv":
        return _csv([["word", "label", "coeff"]] + [[_word(space, u), _label(space, u), c] for u, c in terms])
    name = "c_SM" if args.variant == "ordinary" else "c_SM^dual"
    lines = [f"{name}({args.basis}({_label(space, w)})°) on {space.rs.name}" + (f"/P{list(space.parabolic)}" if space.parabolic else "")]
    for u, c in reversed(terms):
        lines.append(f"  [{args.basis}({_label(space, u)})]: {c}")
    if not terms:
        lines.append("  0")
    return "\n".join(lines)


# matrix -------------------------------------------------------------------------------------

def _nonequivariant_matrix(space: FlagVariety, variant: str) -> list[list]:
    pts = list(space.points)
    pos = {u: i for i, u in enumerate(pts)}
    M = [[0] * len(pts) for _ in pts]
    for v in pts:
        ne = _compute_class(space, v, "X", variant).nonequivariant()
        for u, c in ne.items():
            M[pos[u]][pos[v]] = c
    return M


def cmd_matrix(args) -> str:
    space = _space(args)
    pts = list(space.points)
    order = _order(space, args.order)
    M = _nonequivariant_matrix(space, args.variant)
    pos = {u: i for i, u in enumerate(pts)}
    A = [[M[pos[u]][pos[v]] for v in order] for u in order]
    if args.inverse:
        A = matrix_inverse(A)
    labels = [_label(space, u) for u in order]
    rows = [[_fmt_num(x) for x in row] for row in A]
    if args.format == "json":
        return _dump_json(
            {
                "space": space.descriptor(),
                "variant": args.variant,
                "inverse": args.inverse,
                "order": args.order,
                "labels": labels,
                "words": [_word(space, u) for u in order],
                "rows": rows,
                "convention": "entry [i][j] is the coefficient of [X(labels[i])] in the class of X(labels[j])°",
            }
        )
    if args.format == "csv":
        return _csv([[""] + labels] + [[labels[i]] + rows[i] for i in range(len(rows))])
    width = max(len(s) for s in labels + [x for r in rows for x in r])
    lines = [" " * width + " " + " ".join(s.rjust(width) for s in labels)]
    for i, r in enumerate(rows):
        lines.append(labels[i].rjust(width) + " " + " ".join(x.rjust(width) for x in r))
    return "\n".join(lines)


# localize ------------------------------------------------------------------------------------

def cmd_localize(args) -> str:
    space = _space(args)
    w = _cell(space, args.cell)
    if args.method == "closed-form":
        if not space.is_full or args.basis != "Y" or args.variant != "ordinary":
            raise UsageError("--method closed-form applies to ordinary Y cells on G/B")
    pts = [_cell(space, args.at, "fixed point")] if args.at is not None else list(space.points)
    gk = None if args.method == "closed-form" else csm_gp_gkm(space, w, args.basis, args.variant)
    hb = _hbar(args.hbar)
    vals = []
    for x in pts:
        v = csm_localization_closed_form(space, w, x) if gk is None else gk.value(x)
        if hb is not None:
            v = v.specialize(hbar=hb)
        vals.append((x, _coeff_text(space, v, args.coords)))
    if args.format == "json":
        return _dump_json(
            {
                "space": space.descriptor(),
                "cell": _word(space, w),
                "cell_basis": args.basis,
                "variant": args.variant,
                "method": args.method,
                "values": [{"point": _word(space, x), "label": _label(space, x), "value": v} for x, v in vals],
            }
        )
    if args.format == "csv":
        return _csv([["point", "label", "value"]] + [[_word(space, x), _label(space, x), v] for x, v in vals])
    return "\n".join(f"{_label(space, x)}: {v}" for x, v in vals)


# verify ------------------------------------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    suites = args.suite or None
    if suites:
        for s in suites:
            if s not in _verify.SUITES:
                raise UsageError(f"unknown suite {s!r}; known: {', '.join(sorted(_verify.SUITES))}")
    if args.type:
        try:
            cartan_matrix(args.type.upper(), args.rank or 0)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        desc = f"{args.type.upper()}{args.rank}" + (f"/{','.join(map(str, _parabolic(args.parabolic)))}" if args.parabolic else "")
        if suites:
            for n in suites:
                if not _verify.SUITES[n].applies(desc):
                    raise UsageError(f"suite {n!r} does not apply to space {desc!r}")
            names = suites
        else:
            names = [n for n in sorted(_verify.SUITES) if _verify.SUITES[n].applies(desc)]
        plan = [(n, desc) for n in names]
    else:
        plan = _verify.default_plan(args.max_rank, suites)
    reports = _verify.run_plan(plan, seed=args.seed, sample=args.sample, workers=args.workers, budget=args.budget)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = [r.to_json() for r in reports]
        if args.deterministic:
            for p in payload:
                p["seconds"] = 0
        out = _dump_json({"passed": ok, "reports": payload})
    elif args.format == "csv":
        out = _csv(
            [["suite", "space", "passed", "cases", "failures", "exhaustive"]]
            + [[r.suite, r.space, r.passed, r.cases, len(r.failures), r.exhaustive] for r in reports]
        )
    else:
        lines = [r.summary() for r in reports]
        for r in reports:
            if r.failures:
                f = r.failures[0]
                lines.append(f"  witness {r.suite} [{r.space}] {f.ids}: expected {f.expected} got {f.actual}")
        lines.append("all suites passed" if ok else "FAILURES")
        out = "\n".join(lines)
    return out, 0 if ok else 1


# parser ------------------------------------------------------------------------------------------

def _add_space(p, cell=True):
    p.add_argument("--type", required=True, help="Cartan type A-G")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--parabolic", default="", help="simple indices generating W_P, e.g. '1,3'")
    if cell:
        p.add_argument("--cell", required=True, help="reduced word like '1 2 1', or a type-A window like 2143")
        p.add_argument("--basis", choices=("X", "Y"), default="X", help="X: Schubert cells, Y: opposite cells")
        p.add_argument("--variant", choices=VARIANTS, default="ordinary")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagcsm", description="Equivariant CSM classes of Schubert cells in G/B and G/P.")
    p.add_argument("--version", action="version", version=f"flagcsm {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="CSM class of a cell in the Schubert basis")
    _add_space(c)
    c.add_argument("--non-equivariant", action="store_true", help="set weights to 0 and h to 1")
    c.add_argument("--hbar", help="specialize h to a rational value")
    c.add_argument("--coords", choices=("roots", "weights"), default="roots")
    c.add_argument("--format", choices=FORMATS, default="text")

    m = sub.add_parser("matrix", help="nonequivariant transition matrix to the Schubert basis")
    _add_space(m, cell=False)
    m.add_argument("--variant", choices=VARIANTS, default="ordinary")
    m.add_argument("--inverse", action="store_true")
    m.add_argument("--order", choices=("index", "window"), default="index")
    m.add_argument("--format", choices=FORMATS, default="text")

    lo = sub.add_parser("localize", help="restrictions of a CSM class to torus fixed points")
    _add_space(lo)
    lo.add_argument("--at", help="fixed point (default: all)")
    lo.add_argument("--method", choices=("gkm", "closed-form"), default="gkm")
    lo.add_argument("--hbar", help="specialize h to a rational value")
    lo.add_argument("--coords", choices=("roots", "weights"), default="roots")
    lo.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", help="suite name (repeatable); default all")
    v.add_argument("--type")
    v.add_argument("--rank", type=int)
    v.add_argument("--parabolic", default="")
    v.add_argument("--max-rank", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sample", type=int, default=_verify.DEFAULT_SAMPLE)
    v.add_argument("--workers", type=int)
    v.add_argument("--budget", type=float, help="seconds per suite")
    v.add_argument("--deterministic", action="store_true", help="zero the timings in JSON output")
    v.add_argument("--list", action="store_true", help="list suites and exit")
    v.add_argument("--format", choices=FORMATS, default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify" and args.list:
            out, code = "\n".join(f"{n}: {s.description}" for n, s in sorted(_verify.SUITES.items())), 0
        elif args.command == "verify":
            if args.type and args.rank is None:
                raise UsageError("--type requires --rank")
            out, code = cmd_verify(args)
        elif args.command == "compute":
            out, code = cmd_compute(args), 0
        elif args.command == "matrix":
            out, code = cmd_matrix(args), 0
        else:
            out, code = cmd_localize(args), 0
    except UsageError as exc:
        parser.exit(2, f"flagcsm: error: {exc}\n")
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
