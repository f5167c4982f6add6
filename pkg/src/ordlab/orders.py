"""Orders on Z^n given by sequences of defining functionals.

A point ``w`` is positive when the first functional that does not vanish on
``w`` is positive there.  The integer kernels of the leading functionals form
the chain of convex subgroups; construction rejects orders whose chain does
not reach zero (not total) and functionals that vanish on their level.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .intlinear import (
    IntVec,
    hermite_basis,
    kernel_sublattice,
    same_lattice,
    transform_functional,
    unimodular_inverse,
)
from .scalars import (
    ExactScalar,
    RadicandList,
    as_basis,
    coerce_scalar,
    common_basis,
    inner_product,
)

SCHEMA = "ordlab/1"


class Verdict(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO = "zero"

    @classmethod
    def from_sign(cls, s: int) -> "Verdict":
        return {1: cls.POSITIVE, -1: cls.NEGATIVE, 0: cls.ZERO}[int(s)]

    @property
    def sign(self) -> int:
        return {"positive": 1, "negative": -1, "zero": 0}[self.value]


class OrderError(ValueError):
    pass


class NontotalOrder(OrderError):
    pass


class RedundantVector(OrderError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"defining vector {index} vanishes on its level")
        self.index = index


class ConvexityError(OrderError):
    pass


def _kernel_chain(vectors, n: int) -> list[tuple[IntVec, ...]]:
    """Levels K_0 = Z^n, K_{i+1} = K_i cap ker v_i as Hermite bases."""
    chain = [tuple(tuple(int(i == j) for j in range(n)) for i in range(n))]
    for i in range(len(vectors)):
        chain.append(kernel_sublattice(vectors[: i + 1], n))
    return chain


@dataclass(frozen=True, eq=False)
class LatticeOrder:
    n: int
    vectors: tuple[tuple[ExactScalar, ...], ...]
    basis: RadicandList = field(default_factory=RadicandList)

    def __post_init__(self):
        n = int(self.n)
        object.__setattr__(self, "n", n)
        if not self.vectors:
            raise NontotalOrder("an order needs at least one defining vector" if n else "rank 0")
        for v in self.vectors:
            if len(v) != n:
                raise OrderError(f"defining vector of length {len(v)} for rank {n}")
        chain = _kernel_chain(self.vectors, n)
        for i, v in enumerate(self.vectors):
            level = chain[i]
            if not level or all(inner_product(v, b).is_zero() for b in level):
                raise RedundantVector(i)
        if chain[-1]:
            raise NontotalOrder(
                f"joint kernel is nontrivial, e.g. contains {chain[-1][0]}"
            )
        self.__dict__["chain"] = chain

    @classmethod
    def _unchecked(cls, n, vectors, basis) -> "LatticeOrder":
        # for images of valid orders under unimodular maps, which stay valid
        obj = object.__new__(cls)
        obj.__dict__.update(n=n, vectors=vectors, basis=basis)
        return obj

    @functools.cached_property
    def chain(self) -> list[tuple[IntVec, ...]]:
        return _kernel_chain(self.vectors, self.n)

    @functools.cached_property
    def _coef(self) -> np.ndarray | None:
        return _coefficient_array(self.vectors, self.basis)

    def classify(self, w: Sequence[int]) -> Verdict:
        return classify(self, w)

    def classify_many(self, points) -> np.ndarray:
        return classify_many(self, points)

    def __repr__(self):
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors)
        return f"LatticeOrder(n={self.n}, [{vs}])"

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "rank": self.n,
            "radicands": list(self.basis.radicands),
            "vectors": [[[str(c) for c in x.coeffs] for x in v] for v in self.vectors],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LatticeOrder":
        basis = RadicandList(tuple(doc.get("radicands", ())))
        vectors = []
        for v in doc["vectors"]:
            vectors.append([coerce_scalar(x, basis) for x in v])
        return make_order(int(doc["rank"]), vectors, basis)


def _coefficient_array(vectors, basis: RadicandList) -> np.ndarray | None:
    out = np.zeros((len(vectors), len(vectors[0]), basis.size), dtype=object)
    for lv, v in enumerate(vectors):
        den = math.lcm(*(c.denominator for x in v for c in x.coeffs))
        for i, x in enumerate(v):
            for j, c in enumerate(x.coeffs):
                out[lv, i, j] = int(c * den)
    if np.abs(out).max(initial=0) >= 1 << 40:
        return None
    return out.astype(np.int64)


def make_order(n: int, vectors: Sequence[Sequence], radicands=None,
               complete: bool = False) -> LatticeOrder:
    """Validated order on Z^n from defining functionals (scalars or rationals).

    With ``complete=True`` standard basis vectors are appended as
    tie-breakers until the order is total.
    """
    flat = [x for v in vectors for x in v]
    basis = as_basis(radicands) if radicands is not None else common_basis(flat)
    vecs = [tuple(coerce_scalar(x, basis) for x in v) for v in vectors]
    if complete:
        for i in range(n):
            level = kernel_sublattice(vecs, n) if vecs else _kernel_chain([], n)[0]
            if not level:
                break
            e = tuple(ExactScalar.rational(int(i == j), basis) for j in range(n))
            if any(inner_product(e, b).sign() for b in level):
                vecs.append(e)
    return LatticeOrder(n, tuple(vecs), basis)


def classify_level(P: LatticeOrder, w: Sequence[int]) -> tuple[Verdict, int | None]:
    if len(w) != P.n:
        raise ValueError(f"vector of length {len(w)} for an order of rank {P.n}")
    for i, v in enumerate(P.vectors):
        s = inner_product(v, w).sign()
        if s:
            return Verdict.from_sign(s), i
    return Verdict.ZERO, None


def classify(P: LatticeOrder, w: Sequence[int]) -> Verdict:
    return classify_level(P, w)[0]


def classify_many(P: LatticeOrder, points, kernel: str | None = None) -> np.ndarray:
    """Signs (+1/-1/0) of many integer points, certified batch path first."""
    pts = np.asarray(points, dtype=np.int64).reshape(-1, P.n)
    if P._coef is not None:
        try:
            sign, _ = kernels.classify_points(P._coef, P.basis.radicands, pts, kernel)
        except OverflowError:
            sign = None
        if sign is not None:
            sign = sign.astype(np.int8)
            for idx in np.nonzero(sign == kernels.UNDECIDED)[0]:
                sign[idx] = classify(P, tuple(int(x) for x in pts[idx])).sign
            return sign
    return np.array([classify(P, tuple(int(x) for x in p)).sign for p in pts], dtype=np.int8)


def act(P: LatticeOrder, A) -> LatticeOrder:
    """Transport of P by A: defined by ``(A^-1)^T v_i``."""
    if A.n != P.n:
        raise ValueError(f"dimension mismatch: matrix {A.n}, order {P.n}")
    return LatticeOrder._unchecked(P.n, tuple(transform_functional(A, v) for v in P.vectors), P.basis)


def _proportional_positive(f: list[ExactScalar], g: list[ExactScalar]) -> bool:
    """Whether g = c f for some positive real c (both given on one basis)."""
    ff = [x.to_field() for x in f]
    gf = [x.to_field() for x in g]
    pivot = next((i for i, x in enumerate(ff) if x), None)
    if pivot is None:
        return not any(gf)
    if ff[pivot].sign() != gf[pivot].sign():
        return False
    for j in range(len(ff)):
        if j != pivot and ff[pivot] * gf[j] - ff[j] * gf[pivot]:
            return False
    return True


def orders_equal(P: LatticeOrder, Q: LatticeOrder) -> bool:
    if P.n != Q.n:
        raise ValueError("orders of different rank")
    if len(P.vectors) != len(Q.vectors):
        return False
    for level_p, level_q in zip(P.chain, Q.chain):
        if level_p != level_q:
            return False
    for i, (v, u) in enumerate(zip(P.vectors, Q.vectors)):
        level = P.chain[i]
        f = [inner_product(v, b) for b in level]
        g = [inner_product(u, b) for b in level]
        if not _proportional_positive(f, g):
            return False
    return True


def restrict(P: LatticeOrder, sublattice_basis: Sequence[Sequence[int]]) -> LatticeOrder:
    """P on a convex sublattice, written in the coordinates of the given basis."""
    basis = [tuple(map(int, b)) for b in sublattice_basis]
    if not basis:
        raise ConvexityError("empty sublattice")
    if any(len(b) != P.n for b in basis):
        raise ValueError("basis vectors must lie in Z^n")
    if len(hermite_basis(basis)) != len(basis):
        raise ValueError("basis vectors are dependent")
    for i, level in enumerate(P.chain[:-1]):
        if same_lattice(level, basis):
            vecs = tuple(
                tuple(inner_product(v, b) for b in basis) for v in P.vectors[i:]
            )
            return LatticeOrder(len(basis), vecs, P.basis)
    raise ConvexityError(f"span of {basis} is not a convex subgroup of the order")


def lattice_ball(n: int, radius: int) -> np.ndarray:
    """Integer points of Euclidean norm <= radius, in lexicographic order."""
    r = int(radius)
    axes = np.arange(-r, r + 1)
    grid = np.stack(np.meshgrid(*([axes] * n), indexing="ij"), axis=-1).reshape(-1, n)
    return grid[(grid * grid).sum(axis=1) <= r * r]


def rank_one_orders() -> tuple[LatticeOrder, LatticeOrder]:
    return make_order(1, [[1]]), make_order(1, [[-1]])


def scaled(P: LatticeOrder, q) -> LatticeOrder:
    return LatticeOrder(P.n, tuple(tuple(x * Fraction(q) for x in v) for v in P.vectors), P.basis)


def inverse_apply(A, w):
    return unimodular_inverse(A).apply(w)
