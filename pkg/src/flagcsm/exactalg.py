"""Exact multivariate polynomials and rational functions over Q.

Generators are the fundamental weights w_1..w_r followed by the loop
parameter h (always the last generator). Monomials are packed into a single
integer, 8 bits per exponent, so that multiplying monomials is integer
addition; see :mod:`flagcsm.kernels`.

Rational functions only ever need denominators that are products of linear
forms (Euler classes of tangent spaces at fixed points), so ``RatFunc``
keeps its denominator factored and cancels by trial division.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence, Union

from . import kernels

BITS = 8
MASK = (1 << BITS) - 1

Number = Union[int, Fraction]
LinForm = tuple  # coefficient per generator, zero constant term


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division by a linear form leaves a remainder."""


def pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MASK:
            raise OverflowError(f"exponent {e} out of range 0..{MASK}")
        key |= e << (BITS * i)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (BITS * i)) & MASK for i in range(nvars))


def _key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & MASK
        key >>= BITS
    return d


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_coeff(s) -> Number:
    if isinstance(s, (int, Fraction)):
        return _norm(s)
    return _norm(Fraction(str(s)))


def format_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _div_terms(terms: dict, c) -> dict:
    if c == 1:
        return terms
    if c == -1:
        return {k: -v for k, v in terms.items()}
    return {k: _norm(Fraction(v) / c) for k, v in terms.items()}


class Poly:
    """Sparse polynomial with rational coefficients.

    Instances are treated as immutable; ``terms`` must not be mutated after
    construction.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[int, Number] | None = None, *, trusted: bool = False):
        self.nvars = nvars
        if terms is None:
            terms = {}
        elif not trusted:
            terms = {k: _norm(v) for k, v in terms.items() if v}
        self.terms = terms
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {}, trusted=True)

    @classmethod
    def const(cls, nvars: int, c: Number) -> "Poly":
        c = _norm(c)
        return cls(nvars, {0: c} if c else {}, trusted=True)

    @classmethod
    def gen(cls, nvars: int, i: int) -> "Poly":
        return cls(nvars, {1 << (BITS * i): 1}, trusted=True)

    @classmethod
    def hbar(cls, nvars: int) -> "Poly":
        return cls.gen(nvars, nvars - 1)

    @classmethod
    def linear(cls, coeffs: Sequence[Number], const: Number = 0) -> "Poly":
        terms = {1 << (BITS * i): _norm(c) for i, c in enumerate(coeffs) if c}
        if const:
            terms[0] = _norm(const)
        return cls(len(coeffs), terms, trusted=True)

    @classmethod
    def from_exps(cls, nvars: int, items: Iterable[tuple[Sequence[int], Number]]) -> "Poly":
        terms: dict[int, Number] = {}
        for exps, c in items:
            if len(exps) != nvars:
                raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
            k = pack(exps)
            terms[k] = terms.get(k, 0) + c
        return cls(nvars, terms)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"generator mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    # inspection ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> Number:
        return self.terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((_key_degree(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_key_degree(k) for k in self.terms}) <= 1

    def homogeneous_parts(self) -> dict[int, "Poly"]:
        parts: dict[int, dict] = {}
        for k, v in self.terms.items():
            parts.setdefault(_key_degree(k), {})[k] = v
        return {d: Poly(self.nvars, t, trusted=True) for d, t in sorted(parts.items())}

    def exps(self) -> list[tuple[tuple[int, ...], Number]]:
        """Terms as (exponents, coefficient), graded lex, h last."""
        items = [(unpack(k, self.nvars), v) for k, v in self.terms.items()]
        items.sort(key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        return items

    def linear_coefficients(self) -> LinForm:
        if 0 in self.terms or any(_key_degree(k) != 1 for k in self.terms):
            raise ValueError(f"not a linear form: {self}")
        out = [0] * self.nvars
        for k, v in self.terms.items():
            out[(k.bit_length() - 1) // BITS] = v
        return tuple(out)

    def hbar_degree(self) -> int:
        shift = BITS * (self.nvars - 1)
        return max(((k >> shift) & MASK for k in self.terms), default=-1)

    def hbar_coefficient(self, k: int) -> "Poly":
        """The coefficient of h^k, as a polynomial free of h."""
        shift = BITS * (self.nvars - 1)
        return Poly(
            self.nvars,
            {key - (k << shift): v for key, v in self.terms.items() if (key >> shift) & MASK == k},
            trusted=True,
        )

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        get = out.get
        for k, v in other.terms.items():
            s = get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly(self.nvars, out, trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {k: -v for k, v in self.terms.items()}, trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return Poly.zero(self.nvars)
            if other == 1:
                return self
            return Poly(self.nvars, {k: _norm(v * other) for k, v in self.terms.items()}, trusted=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Poly.zero(self.nvars)
        if self.degree() + other.degree() > MASK:
            raise OverflowError("product degree exceeds the packed exponent range")
        return Poly(self.nvars, kernels.mul(self.terms, other.terms), trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return Poly(self.nvars, {k: _norm(Fraction(v) / c) for k, v in self.terms.items()}, trusted=True)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # exact division -----------------------------------------------------
    def div_linear(self, lin) -> "Poly":
        """Exact quotient by a linear form; raises :class:`NotDivisibleError`."""
        coeffs = lin.linear_coefficients() if isinstance(lin, Poly) else tuple(lin)
        if len(coeffs) != self.nvars:
            raise ValueError("linear form has the wrong number of generators")
        if not any(coeffs):
            raise ZeroDivisionError("division by the zero linear form")
        if not self.terms:
            return self
        # prefer a unit pivot to keep integer coefficients
        nz = [i for i, c in enumerate(coeffs) if c]
        j = next((i for i in nz if coeffs[i] in (1, -1)), nz[0])
        c = coeffs[j]
        rest = {1 << (BITS * i): coeffs[i] for i in nz if i != j}
        shift = BITS * j
        groups: dict[int, dict] = {}
        for k, v in self.terms.items():
            e = (k >> shift) & MASK
            groups.setdefault(e, {})[k - (e << shift)] = v
        top = max(groups)
        quotient: dict[int, Number] = {}
        q_prev: dict = {}
        for e in range(top, 0, -1):
            r = dict(groups.get(e, {}))
            if q_prev and rest:
                kernels.addmul(r, {k: -v for k, v in rest.items()}, q_prev)
            q_prev = _div_terms(r, c)
            off = (e - 1) << shift
            for k, v in q_prev.items():
                quotient[k + off] = v
        r = dict(groups.get(0, {}))
        if q_prev and rest:
            kernels.addmul(r, {k: -v for k, v in rest.items()}, q_prev)
        if r:
            raise NotDivisibleError("linear form does not divide the polynomial")
        return Poly(self.nvars, quotient, trusted=True)

    def try_div_linear(self, lin) -> "Poly | None":
        try:
            return self.div_linear(lin)
        except NotDivisibleError:
            return None

    # substitution -------------------------------------------------------
    def substitute(self, images: Mapping[int, "Poly | Number"]) -> "Poly":
        """Replace generator ``i`` by ``images[i]``; other generators stay."""
        n = self.nvars
        imgs = {i: (p if isinstance(p, Poly) else Poly.const(n, p)) for i, p in images.items()}
        if not imgs:
            return self
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            got = powers.get((i, e))
            if got is None:
                got = imgs[i] if e == 1 else power(i, e - 1) * imgs[i]
                powers[(i, e)] = got
            return got

        acc: dict[int, Number] = {}
        for k, v in self.terms.items():
            exps = unpack(k, n)
            kept = 0
            factor = Poly.const(n, v)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in imgs:
                    factor = factor * power(i, e)
                else:
                    kept += e << (BITS * i)
            if kept:
                kernels.addmul(acc, {kept: 1}, factor.terms)
            else:
                for fk, fv in factor.terms.items():
                    acc[fk] = acc.get(fk, 0) + fv
        return Poly(n, acc)

    def evaluate(self, values: Sequence[Number]) -> Number:
        total: Number = 0
        for exps, c in self.exps():
            term = c
            for x, e in zip(values, exps):
                if e:
                    term = term * x**e
            total += term
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def specialize(self, *, weights_zero: bool = False, hbar: "Number | None" = None) -> "Poly":
        images: dict[int, Number] = {}
        if weights_zero:
            images.update({i: 0 for i in range(self.nvars - 1)})
        if hbar is not None:
            images[self.nvars - 1] = hbar
        return self.substitute(images)

    def dehomogenize(self) -> "Poly":
        return self.specialize(hbar=1)

    def flip_hbar(self) -> "Poly":
        """Substitute h -> -h."""
        shift = BITS * (self.nvars - 1)
        return Poly(
            self.nvars,
            {k: (-v if (k >> shift) & 1 else v) for k, v in self.terms.items()},
            trusted=True,
        )

    # output -------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"coeff": format_coeff(c), "exps": list(e)} for e, c in self.exps()]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Mapping]) -> "Poly":
        return cls.from_exps(nvars, ((tuple(t["exps"]), parse_coeff(t["coeff"])) for t in data))

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"w{i + 1}" for i in range(self.nvars - 1)] + ["h"]
        out = []
        for exps, c in self.exps():
            mono = "*".join(
                (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(exps) if e
            )
            cf = Fraction(c)
            sign = "-" if cf < 0 else "+"
            mag = abs(cf)
            if not mono:
                body = format_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_coeff(mag)}*{mono}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"


def poly_sum(nvars: int, polys: Iterable[Poly]) -> Poly:
    acc: dict[int, Number] = {}
    get = acc.get
    for p in polys:
        for k, v in p.terms.items():
            acc[k] = get(k, 0) + v
    return Poly(nvars, acc)


def poly_dot(nvars: int, pairs: Iterable[tuple[Poly, Poly]]) -> Poly:
    """Sum of products, accumulated in one pass through the kernel."""
    return Poly(nvars, kernels.dot((a.terms, b.terms) for a, b in pairs), trusted=True)


def prod_linear(nvars: int, forms: Iterable[LinForm]) -> Poly:
    result = Poly.const(nvars, 1)
    for f in forms:
        result = result * Poly.linear(f)
    return result


def weyl_twist(group, w, p: Poly) -> Poly:
    """Apply the Weyl element ``w`` to the weight generators of ``p``; h is fixed."""
    r = p.nvars - 1
    images = {}
    for i in range(r):
        unit = tuple(1 if j == i else 0 for j in range(r))
        img = group.act_on_weight(w, unit)
        images[i] = Poly.linear(tuple(img) + (0,))
    return p.substitute(images)


def homogenize(pieces: Mapping, dimension: Callable[[object], int], nvars: int) -> dict:
    """Homogenize a class given as ``key -> h-free coefficient``.

    The degree-``d`` part of the coefficient of ``key`` lives in dimension
    ``dimension(key) - d`` and is multiplied by ``h`` to that power.
    """
    hb = Poly.hbar(nvars)
    out = {}
    for key, p in pieces.items():
        if p.hbar_degree() > 0:
            raise ValueError(f"coefficient of {key!r} already involves h")
        total = Poly.zero(nvars)
        for d, part in p.homogeneous_parts().items():
            k = dimension(key) - d
            if k < 0:
                raise ValueError(f"coefficient of {key!r} has degree {d} above the cell dimension")
            total = total + part * hb**k
        if total:
            out[key] = total
    return out


def dehomogenize(p: Poly) -> Poly:
    return p.dehomogenize()


# linear forms and rational functions ------------------------------------

def normalize_linform(coeffs: Sequence[Number]) -> tuple[Fraction, LinForm]:
    """Split a linear form into ``scale * primitive`` with a positive leading entry."""
    fr = [Fraction(c) for c in coeffs]
    if not any(fr):
        raise ZeroDivisionError("zero linear form")
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    lead = next(c for c in ints if c)
    if lead < 0:
        g = -g
    return Fraction(g, den), tuple(c // g for c in ints)


class RatFunc:
    """``num / (scale * prod(factor ** mult))`` with linear-form factors."""

    __slots__ = ("num", "den", "scale")

    def __init__(self, num: Poly, factors: Iterable[LinForm] = (), scale: Number = 1, *, reduce: bool = True):
        scale = Fraction(scale)
        if not scale:
            raise ZeroDivisionError("zero denominator scale")
        den: Counter = Counter()
        for f in factors:
            s, prim = normalize_linform(f)
            scale *= s
            den[prim] += 1
        self.num = num
        self.den = den
        self.scale = scale
        if not num:
            self.den = Counter()
            self.scale = Fraction(1)
        elif reduce:
            self._cancel()

    def _cancel(self) -> None:
        for f in list(self.den):
            while self.den[f]:
                q = self.num.try_div_linear(f)
                if q is None:
                    break
                self.num = q
                self.den[f] -= 1
            if not self.den[f]:
                del self.den[f]
        if self.num.is_constant() or not self.den:
            self.num = self.num * (1 / self.scale) if self.scale != 1 else self.num
            self.scale = Fraction(1)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, reduce=False)

    def denominator_poly(self) -> Poly:
        return prod_linear(self.nvars, (f for f, m in self.den.items() for _ in range(m))) * self.scale

    def is_polynomial(self) -> "Poly | None":
        """The polynomial value if every denominator factor cancels, else None."""
        self._cancel()
        if self.den:
            return None
        return self.num * (1 / self.scale) if self.scale != 1 else self.num

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc.sum([self, other])

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        r = RatFunc(-self.num, reduce=False)
        r.den, r.scale = Counter(self.den), self.scale
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        r = RatFunc(self.num * other.num, reduce=False)
        if r.num:
            r.den = self.den + other.den
            r.scale = self.scale * other.scale
            r._cancel()
        return r

    __rmul__ = __mul__

    def div_by_linform(self, lin) -> "RatFunc":
        coeffs = lin.linear_coefficients() if isinstance(lin, Poly) else tuple(lin)
        s, prim = normalize_linform(coeffs)
        r = RatFunc(self.num, reduce=False)
        if r.num:
            r.den = Counter(self.den)
            r.den[prim] += 1
            r.scale = self.scale * s
            r._cancel()
        return r

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = RatFunc.from_poly(other if isinstance(other, Poly) else Poly.const(self.nvars, other))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.denominator_poly() == other.num * self.denominator_poly()

    __hash__ = None  # type: ignore[assignment]

    @staticmethod
    def sum(items: Sequence["RatFunc"], nvars: int | None = None) -> "RatFunc":
        """Sum over a common denominator (maximum multiplicity of each factor)."""
        items = [x for x in items if x.num]
        if not items:
            if nvars is None:
                raise ValueError("empty sum needs nvars")
            return RatFunc(Poly.zero(nvars))
        n = items[0].nvars
        common: Counter = Counter()
        for x in items:
            common |= x.den
        acc: dict[int, Number] = {}
        for x in items:
            missing = common - x.den
            mult = prod_linear(n, (f for f, m in missing.items() for _ in range(m)))
            if x.scale != 1:
                mult = mult * (1 / x.scale)
            kernels.addmul(acc, x.num.terms, mult.terms)
        r = RatFunc(Poly(n, acc), reduce=False)
        if r.num:
            r.den = common
            r._cancel()
        return r

    def __str__(self) -> str:
        if not self.den and self.scale == 1:
            return str(self.num)
        den = " * ".join(
            f"({Poly.linear(f)})" + (f"^{m}" if m > 1 else "") for f, m in sorted(self.den.items())
        )
        sc = "" if self.scale == 1 else f"{format_coeff(self.scale)} * "
        return f"({self.num}) / ({sc}{den or '1'})"

    __repr__ = __str__
