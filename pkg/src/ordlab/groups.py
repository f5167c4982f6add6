"""Nilpotent groups with explicit normal forms, and lexicographic orders on them.

Three families are supported:

* ``Heisenberg(n)``: elements ``y^b x^a z^c`` with ``[x_i, y_i] = z``;
* ``NGroup()``: elements ``b1^m1 b2^m2 a1^k1 a2^k2 a3^k3`` with
  ``[a3, b1] = a1`` and ``[a3, b2] = a2``;
* ``Triangular(k)``: lower unitriangular integer k x k matrices.

Commutators follow ``[g, h] = g^-1 h^-1 g h`` and conjugation of ``h`` by
``g`` is ``g^-1 h g``.  With these conventions the action of ``g`` on an
abelian normal subgroup is ``phi(g)``, the matrix whose columns are the
coordinates of the conjugated generators.

Each group carries a fixed series of convex subgroups (``levels``), listed
from the top quotient down to the abelian kernel.  A lexicographic order
assigns a :class:`LatticeOrder` to each level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .intlinear import LnMatrix, UnimodularMatrix, identity_rows, matmul
from .orders import LatticeOrder, Verdict, act, classify_level, make_order, orders_equal


class GroupError(ValueError):
    pass


class PreconditionError(GroupError):
    """The conjugator does not preserve and fix the series above the kernel."""


def _vec(xs) -> tuple[int, ...]:
    return tuple(int(x) for x in xs)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


# --- Heisenberg groups ---------------------------------------------------


@dataclass(frozen=True)
class HeisenbergElement:
    """``y_1^b_1 ... y_n^b_n x_1^a_1 ... x_n^a_n z^c``."""

    b: tuple[int, ...]
    a: tuple[int, ...]
    c: int = 0

    def __post_init__(self):
        object.__setattr__(self, "b", _vec(self.b))
        object.__setattr__(self, "a", _vec(self.a))
        object.__setattr__(self, "c", int(self.c))
        if len(self.a) != len(self.b):
            raise GroupError("a and b must have the same length")

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def group(self) -> "Heisenberg":
        return Heisenberg(self.n)

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return h_multiply(self, other)

    def inverse(self) -> "HeisenbergElement":
        # (y^b x^a z^c)^-1 = z^-c x^-a y^-b = y^-b x^-a z^(a.b - c)
        return HeisenbergElement(
            tuple(-x for x in self.b), tuple(-x for x in self.a), _dot(self.a, self.b) - self.c
        )

    def key(self):
        return self.b + self.a + (self.c,)

    def to_json(self) -> dict:
        return {"group": "heisenberg", "n": self.n, "b": list(self.b), "a": list(self.a), "c": self.c}


def h_multiply(g: HeisenbergElement, h: HeisenbergElement) -> HeisenbergElement:
    """Normal form of ``g h``.

    Moving ``x^a`` past ``y^b'`` costs ``z^(a.b')`` because
    ``x_i y_i = y_i x_i z``; all other generators commute.
    """
    if g.n != h.n:
        raise GroupError(f"Heisenberg parameters differ: {g.n} vs {h.n}")
    return HeisenbergElement(
        tuple(x + y for x, y in zip(g.b, h.b)),
        tuple(x + y for x, y in zip(g.a, h.a)),
        g.c + h.c + _dot(g.a, h.b),
    )


def h_matrix(g: HeisenbergElement) -> tuple[tuple[int, ...], ...]:
    """The (n+2)x(n+2) defining matrix ``[[1, a, c], [0, I, b^T], [0, 0, 1]]``."""
    n = g.n
    rows = [list(r) for r in identity_rows(n + 2)]
    rows[0][1 : n + 1] = g.a
    rows[0][n + 1] = g.c
    for i in range(n):
        rows[i + 1][n + 1] = g.b[i]
    return tuple(tuple(r) for r in rows)


def h_from_matrix(m) -> HeisenbergElement:
    n = len(m) - 2
    return HeisenbergElement(
        tuple(m[i + 1][n + 1] for i in range(n)), tuple(m[0][1 : n + 1]), m[0][n + 1]
    )


def h_conj_representation(g: HeisenbergElement) -> LnMatrix:
    """Action of ``g`` on ``<x_1, ..., x_n, z>`` in the basis (x_1..x_n, z)."""
    return LnMatrix(g.b)


# --- the group N -----------------------------------------------------------


@dataclass(frozen=True)
class NElement:
    """``b1^m1 b2^m2 a1^k1 a2^k2 a3^k3``."""

    m: tuple[int, int]
    k: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "m", _vec(self.m))
        object.__setattr__(self, "k", _vec(self.k))
        if len(self.m) != 2 or len(self.k) != 3:
            raise GroupError("N elements need 2 b-exponents and 3 a-exponents")

    @property
    def group(self) -> "NGroup":
        return NGroup()

    def __mul__(self, other: "NElement") -> "NElement":
        return n_multiply(self, other)

    def inverse(self) -> "NElement":
        m1, m2 = self.m
        k1, k2, k3 = self.k
        return NElement((-m1, -m2), (-k1 + m1 * k3, -k2 + m2 * k3, -k3))

    def key(self):
        return self.m + self.k

    def to_json(self) -> dict:
        return {"group": "N", "m": list(self.m), "k": list(self.k)}


def _b_action(m, k) -> tuple[int, int, int]:
    """``b^-m a^k b^m`` in a-coordinates: b1 shifts a3 into a1, b2 into a2."""
    return (k[0] + m[0] * k[2], k[1] + m[1] * k[2], k[2])


def n_multiply(g: NElement, h: NElement) -> NElement:
    """``b^m a^k b^m' a^k' = b^(m+m') (b^-m' a^k b^m') a^k'``."""
    shifted = _b_action(h.m, g.k)
    return NElement(
        (g.m[0] + h.m[0], g.m[1] + h.m[1]),
        tuple(x + y for x, y in zip(shifted, h.k)),
    )


def n_conj_representation(g: NElement) -> UnimodularMatrix:
    m1, m2 = g.m
    return UnimodularMatrix(((1, 0, m1), (0, 1, m2), (0, 0, 1)))


# N sits in N_4 as <a, b, c, d, f>: b1 -> f, b2 -> a, a1 -> b, a2 -> c, a3 -> d
N_IN_N4 = {"b1": (3, 2), "b2": (3, 1), "a1": (4, 2), "a2": (4, 1), "a3": (4, 3)}
N4_LETTERS = {"e": (2, 1), "a": (3, 1), "f": (3, 2), "c": (4, 1), "b": (4, 2), "d": (4, 3)}


def n_to_n4(g: NElement) -> "TriangularElement":
    """Image in N_4, evaluated as the product of generator powers."""
    out = TriangularElement.identity(4)
    for name, e in zip(("b1", "b2", "a1", "a2", "a3"), g.m + g.k):
        out = out * t_generator(4, *N_IN_N4[name]) ** e
    return out


def n_from_n4(t: "TriangularElement") -> NElement:
    """Inverse of :func:`n_to_n4` on the subgroup with vanishing e-entry."""
    if t.k != 4 or t.entry(2, 1):
        raise GroupError("matrix is not in the copy of N inside N_4")
    m = tuple(t.entry(*N_IN_N4[x]) for x in ("b1", "b2"))
    k = tuple(t.entry(*N_IN_N4[x]) for x in ("a1", "a2", "a3"))
    return NElement(m, k)


_SEMIDIRECT_A = ((1, 0, 1), (0, 1, 0), (0, 0, 1))
_SEMIDIRECT_B = ((1, 0, 0), (0, 1, 1), (0, 0, 1))


def _matpow(m, e: int):
    if e < 0:
        inv = [list(r) for r in m]
        # A and B are elementary: inverse negates the off-diagonal entry
        for i in range(3):
            for j in range(3):
                if i != j:
                    inv[i][j] = -inv[i][j]
        m, e = tuple(tuple(r) for r in inv), -e
    out = identity_rows(len(m))
    for _ in range(e):
        out = matmul(out, m)
    return out


def n_semidirect_multiply(g: NElement, h: NElement) -> NElement:
    """Second oracle: Z^2 acting on Z^3 through powers of the matrices A and B."""
    act_m = matmul(_matpow(_SEMIDIRECT_A, h.m[0]), _matpow(_SEMIDIRECT_B, h.m[1]))
    moved = tuple(sum(act_m[i][j] * g.k[j] for j in range(3)) for i in range(3))
    return NElement(
        (g.m[0] + h.m[0], g.m[1] + h.m[1]), tuple(x + y for x, y in zip(moved, h.k))
    )


# --- unitriangular groups --------------------------------------------------


@dataclass(frozen=True)
class TriangularElement:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(_vec(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        k = len(rows)
        for i, r in enumerate(rows):
            if len(r) != k or r[i] != 1 or any(r[j] for j in range(i + 1, k)):
                raise GroupError("not a lower unitriangular matrix")

    @classmethod
    def identity(cls, k: int) -> "TriangularElement":
        return cls(identity_rows(k))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def group(self) -> "Triangular":
        return Triangular(self.k)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def __mul__(self, other: "TriangularElement") -> "TriangularElement":
        if other.k != self.k:
            raise GroupError("size mismatch")
        return TriangularElement(matmul(self.entries, other.entries))

    def inverse(self) -> "TriangularElement":
        # forward substitution on a unipotent lower triangular matrix
        k = self.k
        inv = [[int(i == j) for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i):
                inv[i][j] = -sum(self.entries[i][t] * inv[t][j] for t in range(j, i))
        return TriangularElement(inv)

    def __pow__(self, e: int) -> "TriangularElement":
        base = self if e >= 0 else self.inverse()
        out = TriangularElement.identity(self.k)
        for _ in range(abs(e)):
            out = out * base
        return out

    def key(self):
        return tuple(self.entries[i][j] for i in range(self.k) for j in range(i))

    def to_json(self) -> dict:
        return {"group": "triangular", "k": self.k, "entries": [list(r) for r in self.entries]}


def t_generator(k: int, i: int, j: int) -> TriangularElement:
    """``E_{i,j} = I + e_{i,j}`` (1-indexed, i > j)."""
    if not (1 <= j < i <= k):
        raise GroupError(f"E_({i},{j}) is not a generator of N_{k}")
    rows = [list(r) for r in identity_rows(k)]
    rows[i - 1][j - 1] = 1
    return TriangularElement(rows)


def t_lower_central(k: int, level: int) -> list[TriangularElement]:
    """Generators ``E_{i,j}`` with ``i - j > level`` of the lower central term."""
    if not (0 <= level <= k - 1):
        raise GroupError(f"level {level} out of range for N_{k}")
    return [t_generator(k, i, j) for i in range(1, k + 1) for j in range(1, i) if i - j > level]


def t_embed(g: TriangularElement) -> TriangularElement:
    """Block embedding N_k -> N_{k+1}."""
    k = g.k
    rows = [list(r) + [0] for r in g.entries] + [[0] * k + [1]]
    return TriangularElement(rows)


def t_embed_to(g: TriangularElement, size: int) -> TriangularElement:
    while g.k < size:
        g = t_embed(g)
    return g


def commutator(g, h):
    return g.inverse() * h.inverse() * g * h


def conjugate(g, h):
    """``g^-1 h g``."""
    return g.inverse() * h * g


def power(g, e: int):
    if hasattr(g, "__pow__") and isinstance(g, TriangularElement):
        return g**e
    base = g if e >= 0 else g.inverse()
    out = g.group.identity()
    for _ in range(abs(e)):
        out = out * base
    return out


# --- groups, series and lexicographic orders -------------------------------


@dataclass(frozen=True)
class Level:
    """One factor ``C_i / C_{i+1}`` of a series.

    ``project`` is a homomorphism from ``C_i`` onto ``Z^rank`` whose kernel is
    ``C_{i+1}``; ``generators`` map onto the unit vectors.
    """

    name: str
    rank: int
    generators: tuple
    project: Callable = field(compare=False, repr=False)


@dataclass(frozen=True)
class Heisenberg:
    n: int

    def identity(self) -> HeisenbergElement:
        return HeisenbergElement((0,) * self.n, (0,) * self.n, 0)

    def generators(self) -> dict[str, HeisenbergElement]:
        gens = {}
        n = self.n
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            gens[f"y{i + 1}"] = HeisenbergElement(e, (0,) * n)
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            gens[f"x{i + 1}"] = HeisenbergElement((0,) * n, e)
        gens["z"] = HeisenbergElement((0,) * n, (0,) * n, 1)
        return gens

    def levels(self) -> tuple[Level, ...]:
        g = self.generators()
        n = self.n
        return (
            Level("quotient <y>", n, tuple(g[f"y{i + 1}"] for i in range(n)), lambda h: h.b),
            Level(
                "kernel <x, z>",
                n + 1,
                tuple(g[f"x{i + 1}"] for i in range(n)) + (g["z"],),
                lambda h: h.a + (h.c,),
            ),
        )

    def describe(self) -> dict:
        return {"group": "heisenberg", "n": self.n}


@dataclass(frozen=True)
class NGroup:
    def identity(self) -> NElement:
        return NElement((0, 0), (0, 0, 0))

    def generators(self) -> dict[str, NElement]:
        return {
            "b1": NElement((1, 0), (0, 0, 0)),
            "b2": NElement((0, 1), (0, 0, 0)),
            "a1": NElement((0, 0), (1, 0, 0)),
            "a2": NElement((0, 0), (0, 1, 0)),
            "a3": NElement((0, 0), (0, 0, 1)),
        }

    def levels(self) -> tuple[Level, ...]:
        g = self.generators()
        return (
            Level("quotient <b1, b2>", 2, (g["b1"], g["b2"]), lambda h: h.m),
            Level("kernel <a1, a2, a3>", 3, (g["a1"], g["a2"], g["a3"]), lambda h: h.k),
        )

    def describe(self) -> dict:
        return {"group": "N"}


def _entry_level(name, size, cells) -> Level:
    gens = tuple(t_generator(size, i, j) for i, j in cells)
    return Level(name, len(cells), gens, lambda h, cells=cells: tuple(h.entry(i, j) for i, j in cells))


@dataclass(frozen=True)
class Triangular:
    """N_k with the series ``N~_{k-1} < A_1 < ... < A_{k-1} = N_k``, recursively.

    With ``core="N"`` the recursion stops at N_4, which is ordered through
    ``1 < <b, c, d> < N < N_4`` instead.
    """

    k: int
    core: str | None = None

    def __post_init__(self):
        if self.k < 1:
            raise GroupError("N_k needs k >= 1")
        if self.core not in (None, "N"):
            raise GroupError(f"unknown core {self.core!r}")
        if self.core == "N" and self.k < 4:
            raise GroupError("the N core needs k >= 4")

    def identity(self) -> TriangularElement:
        return TriangularElement.identity(self.k)

    def generators(self) -> dict[str, TriangularElement]:
        return {
            f"E{i},{j}": t_generator(self.k, i, j)
            for i in range(2, self.k + 1)
            for j in range(1, i)
        }

    def levels(self) -> tuple[Level, ...]:
        out = []
        size = self.k
        while size >= 2:
            if self.core == "N" and size == 4:
                out.append(_entry_level("N_4 / N  <e>", self.k, [N4_LETTERS["e"]]))
                out.append(_entry_level("N / <b,c,d>  <f, a>", self.k,
                                        [N_IN_N4["b1"], N_IN_N4["b2"]]))
                out.append(_entry_level("kernel <b, c, d>", self.k,
                                        [N_IN_N4["a1"], N_IN_N4["a2"], N_IN_N4["a3"]]))
                break
            for j in range(size - 1, 0, -1):
                out.append(_entry_level(f"A_{j} / A_{j - 1} in N_{size}", self.k, [(size, j)]))
            size -= 1
        return tuple(out)

    def describe(self) -> dict:
        doc = {"group": "triangular", "k": self.k}
        if self.core:
            doc["core"] = self.core
        return doc


GroupDescriptor = Heisenberg | NGroup | Triangular


@dataclass(frozen=True)
class ChainDescription:
    """Bottom-up chain ``{1} < C_1 < ... < G`` with the rank of each factor.

    A factor whose subgroup is itself nonabelian is reported with rank
    ``None`` and its own chain in ``nested``.
    """

    subgroups: tuple[str, ...]
    factor_ranks: tuple[int | None, ...]
    nested: "ChainDescription | None" = None


def convex_series(group) -> ChainDescription:
    if isinstance(group, Heisenberg):
        n = group.n
        return ChainDescription(("<x, z>", f"H_{2 * n + 1}"), (n + 1, n))
    if isinstance(group, NGroup):
        return ChainDescription(("<a1, a2, a3>", "N"), (3, 2))
    if isinstance(group, Triangular):
        k = group.k
        if group.core == "N" and k == 4:
            return ChainDescription(("<b, c, d>", "N", "N_4"), (3, 2, 1))
        if k == 1:
            return ChainDescription((), ())
        if k == 2:
            return ChainDescription(("N_2",), (1,))
        inner = Triangular(k - 1, group.core if k - 1 >= 4 else None)
        subs = (f"N~_{k - 1}",) + tuple(
            f"A_{i} = <E{k},1..E{k},{i}, N~_{k - 1}>" for i in range(1, k)
        )
        return ChainDescription(subs, (None,) + (1,) * (k - 1), convex_series(inner))
    raise GroupError(f"unknown group descriptor {group!r}")


def group_of(element) -> GroupDescriptor:
    return element.group


class LexGroupOrder:
    """Lexicographic order: one lattice order per level, top level first."""

    def __init__(self, group, factor_orders: Sequence[LatticeOrder]):
        levels = group.levels()
        factor_orders = tuple(factor_orders)
        if len(factor_orders) != len(levels):
            raise GroupError(f"{len(levels)} factor orders needed, got {len(factor_orders)}")
        for lv, P in zip(levels, factor_orders):
            if P.n != lv.rank:
                raise GroupError(f"level {lv.name!r} has rank {lv.rank}, order has rank {P.n}")
        self.group = group
        self.levels = levels
        self.factor_orders = factor_orders

    @property
    def kernel_order(self) -> LatticeOrder:
        return self.factor_orders[-1]

    def with_kernel(self, P: LatticeOrder) -> "LexGroupOrder":
        return LexGroupOrder(self.group, self.factor_orders[:-1] + (P,))

    def classify(self, g) -> Verdict:
        return lex_classify(self, g)

    def __repr__(self):
        return f"LexGroupOrder({self.group}, {list(self.factor_orders)})"


def default_lex_order(group, kernel: LatticeOrder | None = None) -> LexGroupOrder:
    """Each level ordered lexicographically by the standard basis, optionally
    with a given kernel order."""
    levels = group.levels()
    orders = [make_order(lv.rank, [tuple(int(i == j) for j in range(lv.rank)) for i in range(lv.rank)])
              for lv in levels]
    if kernel is not None:
        orders[-1] = kernel
    return LexGroupOrder(group, orders)


def lex_classify_level(O: LexGroupOrder, g) -> tuple[Verdict, int | None]:
    if group_of(g) != _plain(O.group):
        raise GroupError(f"element of {group_of(g)} for an order on {O.group}")
    for i, (lv, P) in enumerate(zip(O.levels, O.factor_orders)):
        verdict, _ = classify_level(P, lv.project(g))
        if verdict is not Verdict.ZERO:
            return verdict, i
    return Verdict.ZERO, None


def lex_classify(O: LexGroupOrder, g) -> Verdict:
    return lex_classify_level(O, g)[0]


def _plain(group):
    if isinstance(group, Triangular):
        return Triangular(group.k)
    return group


def in_level(levels: Sequence[Level], i: int, x) -> bool:
    """Whether ``x`` lies in ``C_i`` (all projections above level i vanish)."""
    return all(not any(levels[j].project(x)) for j in range(i))


def check_preserves_and_fixes(O: LexGroupOrder, g) -> None:
    """Raise PreconditionError unless conjugation by ``g`` normalises every
    term of the series and acts trivially on every factor above the kernel."""
    levels = O.levels
    ginv = g.inverse()
    for i in range(len(levels)):
        gens = [x for lv in levels[i:] for x in lv.generators]
        for x in gens:
            y = ginv * x * g
            y2 = g * x * ginv
            if not (in_level(levels, i, y) and in_level(levels, i, y2)):
                raise PreconditionError(
                    f"conjugation does not preserve the term {levels[i].name!r}"
                )
            if i < len(levels) - 1 and levels[i].project(y) != levels[i].project(x):
                raise PreconditionError(f"conjugation acts on the factor {levels[i].name!r}")


def conjugation_matrix(group, g, level: int = -1) -> UnimodularMatrix:
    """Matrix of ``h -> g^-1 h g`` on an abelian level, columns = images of generators."""
    lv = group.levels()[level]
    ginv = g.inverse()
    cols = [lv.project(ginv * x * g) for x in lv.generators]
    return UnimodularMatrix(tuple(zip(*cols)))


def conjugate_lex_order(O: LexGroupOrder, g) -> LexGroupOrder:
    """The order with positive cone ``g^-1 P g``."""
    if group_of(g) != _plain(O.group):
        raise GroupError(f"conjugator from {group_of(g)} for an order on {O.group}")
    check_preserves_and_fixes(O, g)
    A = conjugation_matrix(O.group, g)
    return O.with_kernel(act(O.kernel_order, A))


def lex_orders_equal(O: LexGroupOrder, Q: LexGroupOrder) -> bool:
    return O.group == Q.group and all(
        orders_equal(P1, P2) for P1, P2 in zip(O.factor_orders, Q.factor_orders)
    )


def word_ball(group, radius: int, generators: Sequence[str] | None = None) -> list:
    """Elements of word length <= radius, sorted by (length, normal form)."""
    gens = group.generators()
    if generators is not None:
        missing = [g for g in generators if g not in gens]
        if missing:
            raise GroupError(f"unknown generators {missing}")
        gens = {k: gens[k] for k in generators}
    letters = []
    for g in gens.values():
        letters += [g, g.inverse()]
    seen = {group.identity().key(): group.identity()}
    out = [group.identity()]
    frontier = [group.identity()]
    for _ in range(radius):
        new = {}
        for w in frontier:
            for s in letters:
                x = w * s
                if x.key() not in seen and x.key() not in new:
                    new[x.key()] = x
        layer = [new[k] for k in sorted(new)]
        seen.update(new)
        out += layer
        frontier = layer
    return out


def t_coordinates(g: TriangularElement, group: Triangular | None = None) -> tuple[int, ...]:
    """Exponents ``e`` with ``g = prod_i t_i^e_i`` over the series generators,
    top level first, generators of a level in their listed order."""
    group = group or Triangular(g.k)
    coords = []
    rest = g
    for lv in group.levels():
        p = lv.project(rest)
        coords += p
        peel = group.identity()
        for t, e in zip(lv.generators, p):
            peel = peel * t**e
        rest = peel.inverse() * rest
    if rest != group.identity():
        raise GroupError("normal form did not terminate at the identity")
    return tuple(coords)


def t_from_coordinates(coords: Sequence[int], group: Triangular) -> TriangularElement:
    out = group.identity()
    gens = [t for lv in group.levels() for t in lv.generators]
    for t, e in zip(gens, coords):
        out = out * t**e
    return out


def element_from_json(doc: dict):
    kind = doc.get("group")
    if kind == "heisenberg":
        n = int(doc["n"])
        b, a = doc.get("b", [0] * n), doc.get("a", [0] * n)
        if len(a) != n or len(b) != n:
            raise GroupError(f"Heisenberg element needs vectors of length {n}")
        return HeisenbergElement(b, a, doc.get("c", 0))
    if kind == "N":
        return NElement(doc.get("m", [0, 0]), doc.get("k", [0, 0, 0]))
    if kind == "triangular":
        el = TriangularElement(doc["entries"])
        if "k" in doc and int(doc["k"]) != el.k:
            raise GroupError("entries do not match k")
        return el
    raise GroupError(f"unknown group {kind!r}")


def group_from_json(doc: dict):
    kind = doc.get("group")
    if kind == "heisenberg":
        return Heisenberg(int(doc["n"]))
    if kind == "N":
        return NGroup()
    if kind == "triangular":
        return Triangular(int(doc["k"]), doc.get("core"))
    raise GroupError(f"unknown group {kind!r}")


def iter_levels_product(group):
    return itertools.chain.from_iterable(lv.generators for lv in group.levels())


def lex_order_to_json(O: LexGroupOrder) -> dict:
    return {
        "schema": "ordlab/1",
        "group": O.group.describe(),
        "factors": [P.to_json() for P in O.factor_orders],
    }


def lex_order_from_json(doc: dict) -> LexGroupOrder:
    group = group_from_json(doc["group"])
    return LexGroupOrder(group, [LatticeOrder.from_json(f) for f in doc["factors"]])
