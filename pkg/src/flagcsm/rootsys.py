"""Finite root systems, Weyl groups, Bruhat order and parabolic cosets.

Conventions
-----------
* Bourbaki numbering of simple roots. ``C[i][j] = <alpha_i, alpha_j^vee>``.
* Weights are integer tuples in the fundamental-weight basis, so the simple
  root ``alpha_j`` is row ``j`` of the Cartan matrix and
  ``s_j(lam) = lam - lam[j] * alpha_j``.
* Simple indices are 1-based in every public signature (words, subsets) and
  0-based in the internal tables.
* A Weyl group element is an ``int`` index into the group tables, sorted by
  (length, ShortLex-minimal reduced word). :class:`WeylElt` is a thin wrapper
  for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_BOUND = 10_000

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates


def cartan_matrix(cartan_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    t = cartan_type.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if t not in valid:
        raise ValueError(f"unknown Cartan type {cartan_type!r}; expected one of A,B,C,D,E,F,G")
    if not valid[t]:
        need = {
            "A": "n >= 1",
            "B": "n >= 2",
            "C": "n >= 2",
            "D": "n >= 3",
            "E": "n in {6, 7, 8}",
            "F": "n = 4",
            "G": "n = 2",
        }[t]
        raise ValueError(f"invalid rank {rank} for type {t}: requires {need}")
    C = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        C[i][i] = 2

    def link(i, j):
        C[i][j] = C[j][i] = -1

    if t in "ABCD":
        chain = rank - 1 if t != "D" else rank - 2
        for i in range(chain):
            link(i, i + 1)
        if t == "B":
            C[rank - 2][rank - 1] = -2
        elif t == "C":
            C[rank - 1][rank - 2] = -2
        elif t == "D":
            link(rank - 3, rank - 1)
    elif t == "E":
        # Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif t == "F":
        link(0, 1)
        link(2, 3)
        C[1][2] = -2
        C[2][1] = -1
    elif t == "G":
        C[0][1] = -1
        C[1][0] = -3
    return tuple(tuple(row) for row in C)


def _inverse(M) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c])
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@dataclass(frozen=True)
class RootSystem:
    cartan_type: str
    rank: int
    cartan_matrix: tuple
    positive_roots: tuple  # weight coordinates
    positive_roots_simple: tuple  # coordinates in the simple-root basis
    positive_coroots: tuple  # coordinates in the simple-coroot basis

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def nvars(self) -> int:
        """Number of polynomial generators: the fundamental weights plus h."""
        return self.rank + 1

    @property
    def simple_roots(self) -> tuple:
        return self.cartan_matrix

    @cached_property
    def root_index(self) -> dict:
        """Map from a root (weight tuple) to +-(k+1) for the k-th positive root."""
        idx = {}
        for k, beta in enumerate(self.positive_roots):
            idx[beta] = k + 1
            idx[tuple(-x for x in beta)] = -(k + 1)
        return idx

    @cached_property
    def simple_root_positions(self) -> tuple:
        return tuple(self.root_index[a] - 1 for a in self.cartan_matrix)

    def pairing(self, lam: Sequence[int], k: int) -> int:
        """<lam, beta_k^vee> for the k-th positive root."""
        return sum(c * x for c, x in zip(self.positive_coroots[k], lam))

    def reflect(self, lam: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i (0-based) applied to a weight."""
        c = lam[i]
        if not c:
            return tuple(lam)
        a = self.cartan_matrix[i]
        return tuple(x - c * y for x, y in zip(lam, a))

    def is_positive(self, root: Sequence[int]) -> bool:
        return self.root_index[tuple(root)] > 0

    @cached_property
    def weight_to_simple(self) -> tuple:
        """Matrix expressing fundamental weights in simple roots: w_i = sum_j M[i][j] a_j."""
        return tuple(tuple(r) for r in _inverse(self.cartan_matrix))

    def in_simple_roots(self, lam: Sequence[int]) -> tuple:
        M = self.weight_to_simple
        return tuple(sum((lam[i] * M[i][j] for i in range(self.rank)), Fraction(0)) for j in range(self.rank))


def build(cartan_type: str, rank: int) -> RootSystem:
    C = cartan_matrix(cartan_type, rank)
    n = rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # BFS over positive roots, carrying coroot coordinates along
    roots = {tuple(simple[i]): tuple(simple[i]) for i in range(n)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for beta in frontier:
            cor = roots[beta]
            for i in range(n):
                # <beta, alpha_i^vee> = sum_j beta_j C[j][i]
                p = sum(beta[j] * C[j][i] for j in range(n))
                if beta == simple[i]:
                    continue
                new = tuple(b - p * int(j == i) for j, b in enumerate(beta))
                if min(new) < 0 or new in roots:
                    continue
                q = sum(cor[j] * C[i][j] for j in range(n))  # <alpha_i, beta^vee>
                roots[new] = tuple(c - q * int(j == i) for j, c in enumerate(cor))
                nxt.append(new)
        frontier = nxt
    order = sorted(roots, key=lambda b: (sum(b), tuple(-x for x in b)))
    weights = tuple(tuple(sum(b[j] * C[j][i] for j in range(n)) for i in range(n)) for b in order)
    return RootSystem(
        cartan_type=cartan_type.upper(),
        rank=rank,
        cartan_matrix=C,
        positive_roots=weights,
        positive_roots_simple=tuple(order),
        positive_coroots=tuple(roots[b] for b in order),
    )


class WeylGroup:
    """All elements of W with multiplication, length and Bruhat tables."""

    def __init__(self, rs: RootSystem, bound: int = DEFAULT_BOUND):
        self.rs = rs
        r = rs.rank
        rho = tuple([1] * r)
        keys = {rho: 0}
        levels = [[rho]]
        words = {rho: ()}
        while True:
            nxt = []
            for k in levels[-1]:
                for i in range(r):
                    if k[i] > 0:
                        k2 = rs.reflect(k, i)
                        if k2 not in words:
                            words[k2] = None
                            nxt.append(k2)
                            if len(words) > bound:
                                raise ValueError(
                                    f"Weyl group of {rs.name} exceeds the enumeration bound {bound}"
                                )
            if not nxt:
                break
            for k in nxt:
                a = next(i for i in range(r) if k[i] < 0)
                words[k] = (a,) + words[rs.reflect(k, a)]
            nxt.sort(key=lambda k: words[k])
            levels.append(nxt)
        ordered = [k for lev in levels for k in lev]
        self.keys: list = ordered
        self.index: dict = {k: n for n, k in enumerate(ordered)}
        self.words: list = [words[k] for k in ordered]
        self.lengths: list = [len(w) for w in self.words]
        self.order = len(ordered)
        self.left = [[self.index[rs.reflect(k, i)] for k in ordered] for i in range(r)]
        inv = [0] * self.order
        for n, w in enumerate(self.words):
            x = 0
            for i in w:
                x = self.left[i][x]
            inv[n] = x
        self.inv = inv
        self.right = [[inv[self.left[i][inv[n]]] for n in range(self.order)] for i in range(r)]
        self.identity = 0
        self.w0 = self.order - 1
        self._matrix: dict = {}
        self._below: dict = {0: 1}
        self._elt_cache: dict = {}

    # basic data -----------------------------------------------------------
    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    @property
    def rank(self) -> int:
        return self.rs.rank

    def length(self, w: int) -> int:
        return self.lengths[w]

    def word(self, w: int) -> tuple:
        """Canonical reduced word, 0-based letters."""
        return self.words[w]

    def mult(self, u: int, v: int) -> int:
        x = u
        for i in self.words[v]:
            x = self.right[i][x]
        return x

    def inverse(self, w: int) -> int:
        return self.inv[w]

    def from_word(self, word: Iterable[int], *, one_based: bool = True) -> int:
        x = 0
        for i in word:
            j = i - 1 if one_based else i
            if not 0 <= j < self.rank:
                raise ValueError(f"simple index {i} out of range for {self.rs.name}")
            x = self.right[j][x]
        return x

    def longest(self) -> int:
        return self.w0

    def has_right_descent(self, w: int, i: int) -> bool:
        return self.lengths[self.right[i][w]] < self.lengths[w]

    def has_left_descent(self, w: int, i: int) -> bool:
        return self.keys[w][i] < 0

    # action on weights ------------------------------------------------------
    def matrix(self, w: int) -> tuple:
        """Integer matrix M with w(lam) = M lam in weight coordinates (columns w(w_j))."""
        got = self._matrix.get(w)
        if got is None:
            r = self.rank
            if w == 0:
                cols = [tuple(int(i == j) for i in range(r)) for j in range(r)]
            else:
                a = self.words[w][0]
                prev = self.matrix(self.left[a][w])
                cols = [self.rs.reflect(tuple(prev[i][j] for i in range(r)), a) for j in range(r)]
            got = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
            self._matrix[w] = got
        return got

    def act_on_weight(self, w: int, lam: Sequence[int]) -> Weight:
        M = self.matrix(w)
        return tuple(sum(m * x for m, x in zip(row, lam)) for row in M)

    def root_image(self, w: int, k: int) -> int:
        """Signed index (+-(j+1)) of w(beta_k) for the k-th positive root."""
        return self.rs.root_index[self.act_on_weight(w, self.rs.positive_roots[k])]

    def inversions(self, w: int) -> list[int]:
        """Indices of positive roots alpha with w^{-1}(alpha) < 0."""
        wi = self.inv[w]
        return [k for k in range(len(self.rs.positive_roots)) if self.root_image(wi, k) < 0]

    def reflection(self, k: int) -> int:
        """The reflection s_beta for the k-th positive root."""
        rs = self.rs
        beta = rs.positive_roots[k]
        c = rs.pairing([1] * rs.rank, k)
        return self.index[tuple(1 - c * b for b in beta)]

    @cached_property
    def reflections(self) -> list[int]:
        return [self.reflection(k) for k in range(len(self.rs.positive_roots))]

    # Bruhat order -----------------------------------------------------------
    def below(self, w: int) -> int:
        """Bitset of {x : x <= w}, by the subword property."""
        got = self._below.get(w)
        if got is None:
            a = self.words[w][-1]
            prev = self.below(self.right[a][w])
            got = prev
            rt = self.right[a]
            m = prev
            while m:
                low = m & -m
                got |= 1 << rt[low.bit_length() - 1]
                m ^= low
            self._below[w] = got
        return got

    def bruhat_leq(self, u: int, w: int) -> bool:
        return u == w or (self.lengths[u] < self.lengths[w] and bool(self.below(w) >> u & 1))

    def interval_below(self, w: int) -> list[int]:
        b = self.below(w)
        return [x for x in range(w + 1) if b >> x & 1]

    # type A window notation --------------------------------------------------
    def window(self, w: int) -> str:
        if self.rs.cartan_type != "A":
            raise ValueError("window notation is only defined in type A")
        n = self.rank + 1
        perm = list(range(1, n + 1))
        # w = s_{i1} ... s_{ik} as a composite of functions on {1..n}
        for i in reversed(self.words[w]):
            perm = [v + 1 if v == i + 1 else v - 1 if v == i + 2 else v for v in perm]
        if n > 9:
            return ",".join(map(str, perm))
        return "".join(map(str, perm))

    def from_window(self, text: str) -> int:
        if self.rs.cartan_type != "A":
            raise ValueError("window notation is only defined in type A")
        n = self.rank + 1
        vals = [int(t) for t in text.split(",")] if "," in text else [int(c) for c in text] if text.isdigit() else None
        if vals is None or sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"invalid window {text!r}: need a permutation of 1..{n}")
        perm = list(vals)
        word = []
        # bubble sort from the right: perm = w, find right descents
        while True:
            d = next((i for i in range(n - 1) if perm[i] > perm[i + 1]), None)
            if d is None:
                break
            perm[d], perm[d + 1] = perm[d + 1], perm[d]
            word.append(d)
        # perm * s_{d1} * ... = id, so w = s_{dk} ... s_{d1}
        return self.from_word(reversed(word), one_based=False)

    @cached_property
    def window_order(self) -> list[int]:
        return sorted(range(self.order), key=lambda w: self.window(w))

    # public wrappers --------------------------------------------------------
    def elt(self, w: int) -> "WeylElt":
        e = self._elt_cache.get(w)
        if e is None:
            e = self._elt_cache[w] = WeylElt(self, w)
        return e

    def coerce(self, x) -> int:
        """Accept an index, a :class:`WeylElt`, a 1-based word, or a type-A window."""
        if isinstance(x, WeylElt):
            if x.group is not self:
                raise ValueError("element belongs to a different Weyl group")
            return x.index
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ValueError(f"element index {x} out of range")
            return x
        if isinstance(x, str):
            return parse_cell(self, x)
        return self.from_word(x)

    def label(self, w: int) -> str:
        if self.rs.cartan_type == "A":
            return self.window(w)
        return word_label(self.words[w])


def word_label(word: Sequence[int]) -> str:
    return "id" if not word else "s" + "s".join(str(i + 1) for i in word)


def parse_cell(group: WeylGroup, text: str) -> int:
    """Parse a 1-based reduced word ("1 2 1", "1,2,1", "") or a type-A window ("2143")."""
    t = text.strip()
    if t in ("", "id", "e"):
        return 0
    if group.rs.cartan_type == "A" and t.isdigit() and len(t) == group.rank + 1 and " " not in t:
        try:
            return group.from_window(t)
        except ValueError:
            pass
    toks = t.replace(",", " ").split()
    word = []
    for tok in toks:
        if not tok.isdigit():
            raise ValueError(f"malformed cell word: bad token {tok!r}")
        i = int(tok)
        if not 1 <= i <= group.rank:
            raise ValueError(f"malformed cell word: index {tok!r} outside 1..{group.rank}")
        word.append(i)
    w = group.from_word(word)
    if group.lengths[w] != len(word):
        raise ValueError(f"cell word {text!r} is not reduced")
    return w


@dataclass(frozen=True, eq=False)
class WeylElt:
    group: WeylGroup = field(repr=False)
    index: int

    @property
    def word(self) -> tuple:
        return tuple(i + 1 for i in self.group.words[self.index])

    @property
    def length(self) -> int:
        return self.group.lengths[self.index]

    @property
    def permutation_action(self) -> tuple:
        """Images of the simple roots."""
        g = self.group
        return tuple(g.act_on_weight(self.index, a) for a in g.rs.cartan_matrix)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        if other.group is not self.group:
            raise ValueError("elements of different Weyl groups")
        return self.group.elt(self.group.mult(self.index, other.index))

    def inverse(self) -> "WeylElt":
        return self.group.elt(self.group.inv[self.index])

    def __le__(self, other: "WeylElt") -> bool:
        if other.group is not self.group:
            raise ValueError("elements of different Weyl groups")
        return self.group.bruhat_leq(self.index, other.index)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElt) and other.group is self.group and other.index == self.index

    def __hash__(self) -> int:
        return hash((id(self.group), self.index))

    def __str__(self) -> str:
        return word_label(self.group.words[self.index])


class ParabolicData:
    """Cosets W/W_P for the parabolic generated by ``subset`` (1-based)."""

    def __init__(self, group: WeylGroup, subset: Iterable[int] = ()):
        self.group = group
        self.subset = frozenset(subset)
        for i in self.subset:
            if not 1 <= i <= group.rank:
                raise ValueError(f"parabolic index {i} outside 1..{group.rank}")
        J = sorted(i - 1 for i in self.subset)
        self.J = tuple(J)
        g = group
        # W_P: closure of the identity under right multiplication by J
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for j in J:
                y = g.right[j][x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        self.wp_group = sorted(seen)
        self.wp_longest = max(self.wp_group, key=g.length)
        self.minimal_reps = [w for w in g if all(not g.has_right_descent(w, j) for j in J)]
        self._minset = set(self.minimal_reps)
        decomp = {}
        for w in g:
            x, tail = w, []
            while True:
                j = next((j for j in J if g.has_right_descent(x, j)), None)
                if j is None:
                    break
                x = g.right[j][x]
                tail.append(j)
            decomp[w] = (x, g.from_word(reversed(tail), one_based=False))
        self.coset_decomposition = decomp
        rs = g.rs
        Jset = set(J)
        self.levi_roots = [
            k for k, b in enumerate(rs.positive_roots_simple) if all(c == 0 or i in Jset for i, c in enumerate(b))
        ]
        levi = set(self.levi_roots)
        self.nonlevi_roots = [k for k in range(len(rs.positive_roots)) if k not in levi]

    @property
    def dimension(self) -> int:
        return len(self.nonlevi_roots)

    def is_minimal(self, w: int) -> bool:
        return w in self._minset

    def minrep(self, w: int) -> int:
        return self.coset_decomposition[w][0]

    def maxrep(self, u: int) -> int:
        return self.group.mult(self.minrep(u), self.wp_longest)

    def length(self, w: int) -> int:
        return self.group.lengths[self.minrep(w)]

    def is_trivial(self) -> bool:
        return not self.J


def parabolic(group: WeylGroup, subset: Iterable[int] = ()) -> ParabolicData:
    return ParabolicData(group, subset)


_GROUPS: dict = {}


def weyl_group(cartan_type: str, rank: int, bound: int = DEFAULT_BOUND) -> WeylGroup:
    """Cached Weyl group for a Cartan type (groups are immutable once built)."""
    key = (cartan_type.upper(), rank)
    g = _GROUPS.get(key)
    if g is None or (bound < DEFAULT_BOUND and g.order > bound):
        g = WeylGroup(build(cartan_type, rank), bound)
        _GROUPS[key] = g
    return g


def enumerate_weyl(rs: RootSystem, bound: int = DEFAULT_BOUND) -> list[WeylElt]:
    g = WeylGroup(rs, bound)
    return [g.elt(w) for w in g]
