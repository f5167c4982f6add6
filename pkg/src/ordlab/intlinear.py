"""Unimodular matrices, integer kernels of exact functionals, cone lattice points."""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import ExactScalar, FieldElement, coerce_vector, to_fraction

IntVec = tuple[int, ...]


class NotUnimodular(ValueError):
    pass


class NotInSublattice(ValueError):
    pass


class DependentGenerators(ValueError):
    pass


def _int_matrix(rows) -> tuple[IntVec, ...]:
    out = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    return out


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matmul(a, b) -> tuple[IntVec, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a)


def matvec(a, w) -> IntVec:
    return tuple(sum(x * y for x, y in zip(r, w)) for r in a)


def identity_rows(n: int) -> tuple[IntVec, ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class UnimodularMatrix:
    rows: tuple[IntVec, ...]

    def __post_init__(self):
        rows = _int_matrix(self.rows)
        object.__setattr__(self, "rows", rows)
        if abs(int_det(rows)) != 1:
            raise NotUnimodular(f"determinant of {rows} is not +-1")

    @classmethod
    def identity(cls, n: int) -> "UnimodularMatrix":
        return cls(identity_rows(n))

    @classmethod
    def elementary(cls, n: int, i: int, j: int, k: int = 1) -> "UnimodularMatrix":
        """Identity plus k at (i, j), 1-indexed."""
        rows = [list(r) for r in identity_rows(n)]
        rows[i - 1][j - 1] += k
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> "UnimodularMatrix":
        return self

    def __matmul__(self, other) -> "UnimodularMatrix":
        return UnimodularMatrix(matmul(self.rows, other.matrix.rows))

    def apply(self, w: Sequence[int]) -> IntVec:
        return matvec(self.rows, w)

    def transpose(self) -> "UnimodularMatrix":
        return UnimodularMatrix(tuple(zip(*self.rows)))

    def is_identity(self) -> bool:
        return self.rows == identity_rows(self.n)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]


@dataclass(frozen=True)
class LnMatrix:
    """Identity except the last row, which is ``(a_1, ..., a_{n-1}, 1)``."""

    a: IntVec

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def n(self) -> int:
        return len(self.a) + 1

    @property
    def matrix(self) -> UnimodularMatrix:
        rows = [list(r) for r in identity_rows(self.n)]
        rows[-1][:-1] = self.a
        return UnimodularMatrix(rows)

    @property
    def rows(self):
        return self.matrix.rows

    def __matmul__(self, other):
        if isinstance(other, LnMatrix):
            return LnMatrix(tuple(x + y for x, y in zip(self.a, other.a)))
        return self.matrix @ other

    def apply(self, w: Sequence[int]) -> IntVec:
        w = tuple(w)
        return w[:-1] + (w[-1] + sum(x * y for x, y in zip(self.a, w)),)

    def is_identity(self) -> bool:
        return not any(self.a)

    @classmethod
    def box(cls, n: int, bound: int, include_identity: bool = False):
        """All L_n matrices with last-row entries in [-bound, bound]."""
        for a in itertools.product(range(-bound, bound + 1), repeat=n - 1):
            if include_identity or any(a):
                yield cls(a)


def unimodular_inverse(A):
    if isinstance(A, LnMatrix):
        return LnMatrix(tuple(-x for x in A.a))
    return UnimodularMatrix(_adjugate_inverse(A.rows))


@functools.lru_cache(maxsize=4096)
def _adjugate_inverse(rows: tuple[IntVec, ...]) -> tuple[IntVec, ...]:
    # det is +-1, so the inverse is det * adj(A) and stays integral
    n = len(rows)
    det = int_det(rows)
    if n == 1:
        return ((det,),)

    def minor(i, j):
        return [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]

    return tuple(
        tuple(det * (-1) ** (i + j) * int_det(minor(j, i)) for j in range(n))
        for i in range(n)
    )


def transform_functional(A, v: Sequence[ExactScalar]) -> tuple[ExactScalar, ...]:
    """``(A^-1)^T v``: the functional describing the transported order."""
    v = coerce_vector(v)
    if len(v) != A.n:
        raise ValueError(f"dimension mismatch: matrix {A.n}, vector {len(v)}")
    if isinstance(A, LnMatrix):
        # (A^-1)^T has last column (-a, 1): u_i = v_i - a_i v_n
        last = v[-1]
        return tuple(x - last * k if k else x for x, k in zip(v[:-1], A.a)) + (last,)
    inv = unimodular_inverse(A).rows
    basis = v[0].basis
    # integer arithmetic over a common denominator
    den = math.lcm(*(c.denominator for x in v for c in x.coeffs))
    nums = [[c.numerator * (den // c.denominator) for c in x.coeffs] for x in v]
    out = []
    for j in range(A.n):
        terms = [(inv[i][j], nums[i]) for i in range(A.n) if inv[i][j]]
        coeffs = tuple(Fraction(sum(k * c[t] for k, c in terms), den) for t in range(basis.size))
        out.append(ExactScalar(basis, coeffs))
    return tuple(out)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _row_echelon(rows: list[list[int]], ncols: int) -> int:
    """Unimodular row reduction on the first ``ncols`` columns, in place.

    Pivots end up positive with the entries above them reduced.  Returns
    the rank over those columns.
    """
    m = len(rows)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            b = rows[i][col]
            if not b:
                continue
            a = rows[r][col]
            if b % a == 0:
                q = b // a
                rows[i] = [y - q * x for x, y in zip(rows[r], rows[i])]
                continue
            g, x, y = _xgcd(a, b)
            pr, pi = rows[r], rows[i]
            rows[r] = [x * s + y * t for s, t in zip(pr, pi)]
            rows[i] = [(-b // g) * s + (a // g) * t for s, t in zip(pr, pi)]
        if rows[r][col] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [y - q * x for x, y in zip(rows[r], rows[i])]
        r += 1
        if r == m:
            break
    return r


def hermite_basis(vectors: Sequence[Sequence[int]]) -> tuple[IntVec, ...]:
    """Canonical (row Hermite normal form) basis of the lattice spanned."""
    rows = [list(map(int, v)) for v in vectors if any(v)]
    if not rows:
        return ()
    rank = _row_echelon(rows, len(rows[0]))
    return tuple(tuple(r) for r in rows[:rank])


def same_lattice(b1, b2) -> bool:
    return hermite_basis(b1) == hermite_basis(b2)


def integer_kernel(rows: Sequence[Sequence], n: int) -> tuple[IntVec, ...]:
    """Z-basis of {w in Z^n : R w = 0} for a rational matrix R."""
    int_rows = []
    for r in rows:
        r = [to_fraction(x) for x in r]
        den = math.lcm(*(x.denominator for x in r)) if r else 1
        ir = [int(x * den) for x in r]
        if any(ir):
            int_rows.append(ir)
    m = len(int_rows)
    aug = [[int_rows[k][i] for k in range(m)] + [int(i == j) for j in range(n)]
           for i in range(n)]
    rank = _row_echelon(aug, m)
    kernel = [r[m:] for r in aug[rank:]]
    return hermite_basis(kernel)


def split_rational_rows(vectors: Sequence[Sequence[ExactScalar]]) -> list[list[Fraction]]:
    """One rational equation per radical coefficient of every functional."""
    out = []
    for v in vectors:
        v = coerce_vector(v)
        if not v:
            continue
        for j in range(v[0].basis.size):
            row = [x.coeffs[j] for x in v]
            if any(row):
                out.append(row)
    return out


def kernel_sublattice(vectors: Sequence[Sequence], n: int) -> tuple[IntVec, ...]:
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"functional of length {len(v)} in dimension {n}")
    return integer_kernel(split_rational_rows(vectors), n)


def _solve_rational(basis: Sequence[IntVec], target: IntVec) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = target, or None."""
    k = len(basis)
    n = len(target)
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    r = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][col]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = aug[i][k]
    return sol


def complete_basis_with_last(kernel_basis: Sequence[IntVec], n: int,
                             preferred: Sequence[int]) -> tuple[IntVec, ...]:
    """Basis of the same sublattice whose last vector is ``preferred``."""
    basis = [tuple(map(int, b)) for b in kernel_basis]
    preferred = tuple(map(int, preferred))
    if len(preferred) != n or any(len(b) != n for b in basis):
        raise ValueError("dimension mismatch")
    if preferred in basis:
        rest = [b for b in basis if b != preferred]
        return tuple(rest) + (preferred,)
    coeffs = _solve_rational(basis, preferred)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise NotInSublattice(f"{preferred} is not in the sublattice spanned by {basis}")
    c = [int(x) for x in coeffs]
    if math.gcd(*c) != 1:
        raise NotInSublattice(f"{preferred} is not primitive in the sublattice")
    # column operations V with c V = e_k; then the last row of V^-1 is c
    k = len(c)
    vec = list(c)
    V = [[int(i == j) for j in range(k)] for i in range(k)]

    def colop(dst, src, q):  # column dst -= q * column src
        vec[dst] -= q * vec[src]
        for row in V:
            row[dst] -= q * row[src]

    while sum(1 for x in vec[:-1] if x) or abs(vec[-1]) != 1:
        nz = [i for i in range(k) if vec[i]]
        piv = min(nz, key=lambda i: (abs(vec[i]), i != k - 1))
        if piv != k - 1:
            vec[piv], vec[-1] = vec[-1], vec[piv]
            for row in V:
                row[piv], row[-1] = row[-1], row[piv]
        for i in range(k - 1):
            if vec[i]:
                colop(i, k - 1, vec[i] // vec[-1])
    if vec[-1] == -1:
        vec[-1] = 1
        for row in V:
            row[-1] = -row[-1]
    U = unimodular_inverse(UnimodularMatrix(V)).rows
    assert U[-1] == tuple(c)
    new = tuple(tuple(sum(U[i][j] * basis[j][t] for j in range(k)) for t in range(n))
                for i in range(k))
    return new


def field_solve(columns: Sequence[Sequence[FieldElement]]) -> list[list[FieldElement]]:
    """Inverse of the matrix whose columns are given; raises if singular."""
    n = len(columns)
    a = [[columns[j][i] for j in range(n)] + [FieldElement.rational(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise DependentGenerators("cone generators are linearly dependent")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


@dataclass
class ConeSolver:
    """Exact coordinates of integer points in a basis with radical entries."""

    inverse: list[list[FieldElement]]

    @classmethod
    def from_generators(cls, generators) -> "ConeSolver":
        gens = [coerce_vector(g) for g in generators]
        n = len(gens)
        if any(len(g) != n for g in gens):
            raise DependentGenerators(f"need {n} generators of length {n}")
        cols = [[x.to_field() for x in g] for g in gens]
        return cls(field_solve(cols))

    def coordinates(self, z: Sequence[int]) -> list[FieldElement]:
        out = []
        for row in self.inverse:
            acc = FieldElement()
            for x, k in zip(row, z):
                if k and x:
                    acc = acc + x * k
            out.append(acc)
        return out

    def is_interior(self, z: Sequence[int]) -> bool:
        return all(c.sign() > 0 for c in self.coordinates(z))


def cone_interior_lattice_point(generators) -> IntVec:
    """An integer point strictly inside the cone spanned by ``generators``.

    Candidates are integer points near ``lam * sum(generators)`` for
    ``lam = 1, 2, 4, ...``; every candidate is accepted only after its
    coordinates in the generator basis are all exactly positive.
    """
    gens = [coerce_vector(g) for g in generators]
    solver = ConeSolver.from_generators(gens)
    n = len(gens)
    center = [sum(float(g[i]) for g in gens) for i in range(n)]
    row_sums = [sum(abs(float(x)) for x in row) for row in solver.inverse]
    # a ball of this radius around the generator sum stays inside the cone
    rho = Fraction(1 / max(row_sums)).limit_denominator(1 << 20) * Fraction(99, 100)
    lam = 1
    while True:
        c = [lam * x for x in center]
        base = [round(x) for x in c]
        radius = min(max(1, math.ceil(lam * rho)), n)
        cands = []
        for d in itertools.product(range(-radius, radius + 1), repeat=n):
            p = tuple(b + e for b, e in zip(base, d))
            dist = sum((x - y) ** 2 for x, y in zip(p, c))
            cands.append((dist, p))
        cands.sort()
        for _, p in cands:
            if solver.is_interior(p):
                return p
        lam *= 2
