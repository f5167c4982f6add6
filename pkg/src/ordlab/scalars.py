"""Exact scalars in the rational span of 1, sqrt(d_1), ..., sqrt(d_r).

Only the operations that keep values inside the span are public: addition,
rational scaling and integer-weighted sums.  Exact sign determination works
by refining integer enclosures of each square root until the enclosure of
the whole sum excludes zero.

:class:`FieldElement` is the internal companion used where products of
two scalars are unavoidable (proportionality tests, exact linear solves);
it lives in the full multiquadratic field generated by the radicands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from numbers import Rational
from typing import Iterable, Sequence

START_BITS = 16


class BasisMismatch(ValueError):
    pass


def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


def prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


@dataclass(frozen=True)
class RadicandList:
    """Ordered distinct squarefree radicands; the basis is (1, sqrt(d_1), ...)."""

    radicands: tuple[int, ...] = ()

    def __post_init__(self):
        rs = tuple(int(d) for d in self.radicands)
        object.__setattr__(self, "radicands", rs)
        for d in rs:
            if not is_squarefree(d):
                raise ValueError(f"radicand {d} is not a squarefree integer >= 2")
        if any(a >= b for a, b in zip(rs, rs[1:])):
            raise ValueError(f"radicands must be strictly increasing: {rs}")

    def __len__(self):
        return len(self.radicands)

    @property
    def size(self) -> int:
        return len(self.radicands) + 1


def as_basis(basis) -> RadicandList:
    if isinstance(basis, RadicandList):
        return basis
    return RadicandList(tuple(basis or ()))


def _sign_terms(terms: Iterable[tuple[Fraction, int]]) -> tuple[int, int]:
    """Sign of sum q * sqrt(m) over squarefree m (m == 1 is the rational part).

    Returns ``(sign, refinements)``.  Each sqrt(m) is enclosed in
    ``[s, s + 1] / 2**bits`` with ``s = isqrt(m * 4**bits)``; the precision
    doubles until the enclosure of the sum is one-signed.
    """
    terms = [(q, m) for q, m in terms if q]
    if not terms:
        return 0, 0
    den = 1
    for q, _ in terms:
        den = lcm(den, q.denominator)
    ints = [(q.numerator * (den // q.denominator), m) for q, m in terms]
    if all(m == 1 for _, m in ints):
        total = sum(c for c, _ in ints)
        return (total > 0) - (total < 0), 0
    bits = START_BITS
    rounds = 0
    while True:
        rounds += 1
        one = 1 << bits
        lo = hi = 0
        for c, m in ints:
            if m == 1:
                lo += c * one
                hi += c * one
                continue
            s = isqrt(m << (2 * bits))
            if c > 0:
                lo += c * s
                hi += c * (s + 1)
            else:
                lo += c * (s + 1)
                hi += c * s
        if lo > 0:
            return 1, rounds
        if hi < 0:
            return -1, rounds
        bits *= 2


def to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q.strip())
    raise TypeError(f"not a rational: {q!r}")


@dataclass(frozen=True)
class ExactScalar:
    """``coeffs[0] + sum(coeffs[i] * sqrt(basis.radicands[i-1]))``."""

    basis: RadicandList
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        basis = as_basis(self.basis)
        object.__setattr__(self, "basis", basis)
        cs = tuple(to_fraction(c) for c in self.coeffs)
        if len(cs) != basis.size:
            raise ValueError(f"expected {basis.size} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def rational(cls, q, basis=()) -> "ExactScalar":
        basis = as_basis(basis)
        return cls(basis, (to_fraction(q),) + (Fraction(0),) * len(basis))

    @classmethod
    def zero(cls, basis=()) -> "ExactScalar":
        return cls.rational(0, basis)

    @classmethod
    def sqrt(cls, d: int, basis) -> "ExactScalar":
        basis = as_basis(basis)
        coeffs = [Fraction(0)] * basis.size
        coeffs[basis.radicands.index(d) + 1] = Fraction(1)
        return cls(basis, tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "ExactScalar":
        if isinstance(other, ExactScalar):
            if other.basis != self.basis:
                raise BasisMismatch(
                    f"basis {other.basis.radicands} != {self.basis.radicands}"
                )
            return other
        return ExactScalar.rational(to_fraction(other), self.basis)

    def __add__(self, other):
        return scalar_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return scalar_scale(-1, self)

    def __sub__(self, other):
        return scalar_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return scalar_add(self._coerce(other), -self)

    def __mul__(self, q):
        if isinstance(q, ExactScalar):
            raise TypeError("products of two ExactScalars leave the span")
        return scalar_scale(q, self)

    __rmul__ = __mul__

    def sign(self) -> int:
        return scalar_sign(self)

    def __float__(self):
        total = float(self.coeffs[0])
        for q, d in zip(self.coeffs[1:], self.basis.radicands):
            total += float(q) * d**0.5
        return total

    def to_field(self) -> "FieldElement":
        terms = {1: self.coeffs[0]} if self.coeffs[0] else {}
        for q, d in zip(self.coeffs[1:], self.basis.radicands):
            if q:
                terms[d] = q
        return FieldElement(terms)

    def embed(self, basis) -> "ExactScalar":
        """Same value over a larger radicand list."""
        basis = as_basis(basis)
        coeffs = [Fraction(0)] * basis.size
        coeffs[0] = self.coeffs[0]
        for q, d in zip(self.coeffs[1:], self.basis.radicands):
            if q:
                if d not in basis.radicands:
                    raise BasisMismatch(f"sqrt({d}) not in {basis.radicands}")
                coeffs[basis.radicands.index(d) + 1] = q
        return ExactScalar(basis, tuple(coeffs))

    def to_json(self) -> dict:
        return {
            "radicands": list(self.basis.radicands),
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ExactScalar":
        return cls(RadicandList(tuple(doc.get("radicands", ()))), tuple(doc["coeffs"]))

    def __str__(self):
        parts = []
        if self.coeffs[0] or self.is_zero():
            parts.append(str(self.coeffs[0]))
        for q, d in zip(self.coeffs[1:], self.basis.radicands):
            if q:
                c = "" if q == 1 else "-" if q == -1 else f"{q}*"
                parts.append(f"{c}sqrt({d})")
        return " + ".join(parts).replace("+ -", "- ")


def scalar_add(a: ExactScalar, b: ExactScalar) -> ExactScalar:
    if a.basis != b.basis:
        raise BasisMismatch(f"basis {a.basis.radicands} != {b.basis.radicands}")
    return ExactScalar(a.basis, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def scalar_scale(q, a: ExactScalar) -> ExactScalar:
    q = to_fraction(q)
    return ExactScalar(a.basis, tuple(q * c for c in a.coeffs))


def scalar_sign(a: ExactScalar) -> int:
    return sign_with_stats(a)[0]


def sign_with_stats(a: ExactScalar) -> tuple[int, int]:
    """Sign together with the number of enclosure refinements it took."""
    terms = [(a.coeffs[0], 1)]
    terms += list(zip(a.coeffs[1:], a.basis.radicands))
    return _sign_terms(terms)


def common_basis(values: Iterable) -> RadicandList:
    rads: set[int] = set()
    for v in values:
        if isinstance(v, ExactScalar):
            rads.update(v.basis.radicands)
    return RadicandList(tuple(sorted(rads)))


def coerce_scalar(x, basis: RadicandList) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x if x.basis == basis else x.embed(basis)
    if isinstance(x, dict):
        return ExactScalar.from_json(x).embed(basis)
    if isinstance(x, (list, tuple)):
        return ExactScalar(basis, tuple(x))
    return ExactScalar.rational(x, basis)


def coerce_vector(v: Sequence, basis: RadicandList | None = None) -> tuple[ExactScalar, ...]:
    if basis is None:
        basis = common_basis(v)
    return tuple(coerce_scalar(x, basis) for x in v)


def inner_product(v: Sequence[ExactScalar], w: Sequence[int]) -> ExactScalar:
    """sum(w_i * v_i) for an integer vector w."""
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    if not v:
        return ExactScalar.zero()
    if not all(isinstance(x, ExactScalar) for x in v):
        v = coerce_vector(v)
    basis = v[0].basis
    acc = [Fraction(0)] * basis.size
    for x, k in zip(v, w):
        if x.basis != basis:
            raise BasisMismatch("mixed bases in one vector")
        if k:
            for j, c in enumerate(x.coeffs):
                if c:
                    acc[j] += k * c
    return ExactScalar(basis, tuple(acc))


def _mul_sqrt(m1: int, m2: int) -> tuple[int, int]:
    """sqrt(m1) * sqrt(m2) = g * sqrt(m) for squarefree m1, m2."""
    g = gcd(m1, m2)
    return g, (m1 // g) * (m2 // g)


class FieldElement:
    """Element of Q(sqrt(d_1), ..., sqrt(d_r)) as ``{squarefree m: coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = {m: Fraction(q) for m, q in (terms or {}).items() if q}

    @classmethod
    def rational(cls, q) -> "FieldElement":
        return cls({1: to_fraction(q)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            other = FieldElement.rational(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            other = FieldElement.rational(other)
        out = dict(self.terms)
        for m, q in other.terms.items():
            out[m] = out.get(m, 0) + q
        return FieldElement(out)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement({m: -q for m, q in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, FieldElement) else FieldElement.rational(-to_fraction(other)))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            q = to_fraction(other)
            return FieldElement({m: q * c for m, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for m1, q1 in self.terms.items():
            for m2, q2 in other.terms.items():
                g, m = _mul_sqrt(m1, m2)
                out[m] = out.get(m, 0) + g * q1 * q2
        return FieldElement(out)

    __rmul__ = __mul__

    def _flip(self, p: int) -> "FieldElement":
        return FieldElement({m: (-q if m % p == 0 else q) for m, q in self.terms.items()})

    def inverse(self) -> "FieldElement":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        primes = sorted({p for m in self.terms for p in prime_factors(m)})
        num = FieldElement.rational(1)
        y = self
        for p in primes:
            c = y._flip(p)
            num = num * c
            y = y * c
        assert set(y.terms) == {1}
        return num * (1 / y.terms[1])

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return self * (1 / to_fraction(other))
        return self * other.inverse()

    def sign(self) -> int:
        return _sign_terms((q, m) for m, q in self.terms.items())[0]

    def __float__(self):
        return float(sum(float(q) * m**0.5 for m, q in self.terms.items()))

    def __repr__(self):
        return f"FieldElement({self.terms!r})"
