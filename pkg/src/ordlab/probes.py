"""Finite certificates about conjugacy orbits of orders.

Discreteness: a finite set of points positive for a base order ``P`` on
Z^n such that every transport of ``P`` by an L_n matrix either equals ``P``
or makes one of the points non-positive.

Condensation: for the group N (and its copies inside N_k, k >= 4) a
conjugator whose transported order still contains a prescribed finite
positive set but differs from the base order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .groups import (
    LexGroupOrder,
    NElement,
    NGroup,
    PreconditionError,
    Triangular,
    conjugate_lex_order,
    default_lex_order,
    lex_classify,
    lex_order_to_json,
    lex_orders_equal,
    n_to_n4,
    t_embed_to,
    word_ball,
)
from .intlinear import (
    LnMatrix,
    UnimodularMatrix,
    complete_basis_with_last,
    cone_interior_lattice_point,
    kernel_sublattice,
    transform_functional,
)
from .orders import (
    SCHEMA,
    LatticeOrder,
    Verdict,
    _coefficient_array,
    act,
    classify,
    classify_level,
    classify_many,
    lattice_ball,
    make_order,
    orders_equal,
    restrict,
)
from .scalars import ExactScalar, coerce_vector, inner_product


class ProbeError(ValueError):
    """A precondition of a probe is not met."""


class VerificationFailure(RuntimeError):
    """A produced certificate failed its own exact check (a bug, never expected)."""


def _sign(v, w) -> int:
    return inner_product(v, w).sign()


def _ivec(w) -> tuple[int, ...]:
    return tuple(int(x) for x in w)


# --- discreteness ------------------------------------------------------------


def separating_witness(v, A: LnMatrix) -> tuple[int, ...]:
    """Integer ``z`` with ``<v, z> > 0`` and ``<(A^-1)^T v, z> < 0``.

    Needs ``v[-1] != 0`` and ``A != I``.
    """
    v = coerce_vector(v)
    n = len(v)
    if A.n != n:
        raise ProbeError(f"matrix of size {A.n} for a functional of length {n}")
    if A.is_identity():
        raise ProbeError("the identity matrix fixes every order")
    s_last = v[-1].sign()
    if s_last == 0:
        raise ProbeError("last coordinate of the functional is zero")
    if s_last < 0:
        # -I is not in L_n, so flip the functional instead of the matrix
        z = separating_witness(tuple(-x for x in v), A)
        z = tuple(-x for x in z)
    else:
        xn = v[-1]
        basis = v[0].basis
        zero = ExactScalar.zero(basis)
        gens = []
        i0 = next(i for i, a in enumerate(A.a) if a)
        for i, a in enumerate(A.a):
            s = -1 if a < 0 else 1
            # x_n * sgn(a_i) * (e_i - (x_i / x_n) e_n), kept inside the span
            w = [zero] * n
            w[i] = xn * s
            w[-1] = v[i] * (-s)
            gens.append(tuple(w))
        top = list(gens[i0])
        top[-1] = top[-1] + xn * abs(A.a[i0])
        gens.append(tuple(top))
        z = cone_interior_lattice_point(gens)
    u = transform_functional(A, v)
    if _sign(v, z) != 1 or _sign(u, z) != -1:
        raise VerificationFailure(f"witness {z} does not separate for {A}")
    return z


def sign_patterns(k: int):
    """Nonzero vectors of {-1, 0, 1}^k in lexicographic order."""
    for b in itertools.product((-1, 0, 1), repeat=k):
        if any(b):
            yield b


@dataclass
class DiscretenessCertificate:
    base: LatticeOrder
    witnesses: list[tuple[int, ...]]
    scope: str
    trace: list[str] = field(default_factory=list)
    log: list[dict] = field(default_factory=list)
    verify_box: int | None = None

    @property
    def verified(self) -> bool:
        return self.verify_box is not None and all(e["outcome"] != "unseparated" for e in self.log)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "discreteness",
            "base": self.base.to_json(),
            "witnesses": [list(w) for w in self.witnesses],
            "scope": self.scope,
            "trace": list(self.trace),
            "verify_box": self.verify_box,
            "verified": self.verified,
            "log": self.log,
        }


def verify_certificate(cert: DiscretenessCertificate, bound: int = 3) -> DiscretenessCertificate:
    """Check every non-identity L_n matrix with last-row entries in [-bound, bound].

    Each must either fix the base order or make some witness non-positive.
    The log is replaced by the outcome for each matrix.
    """
    P = cert.base
    for z in cert.witnesses:
        if classify(P, z) is not Verdict.POSITIVE:
            raise VerificationFailure(f"witness {z} is not positive for the base order")
    log = []
    if P.n > 1:
        pts = np.array(cert.witnesses, dtype=np.int64).reshape(-1, P.n)
        for A in LnMatrix.box(P.n, bound):
            Q = act(P, A)
            entry = {"a": list(A.a)}
            signs = classify_many(Q, pts) if len(pts) else np.zeros(0)
            bad = np.nonzero(signs != 1)[0]
            if len(bad):
                entry.update(outcome="excluded", witness=int(bad[0]))
            elif orders_equal(P, Q):
                entry["outcome"] = "fixed"
            else:
                entry["outcome"] = "unseparated"
            log.append(entry)
    cert.log = log
    cert.verify_box = bound
    return cert


def discreteness_witness_set(v, order: LatticeOrder | None = None,
                             verify_box: int | None = 3) -> DiscretenessCertificate:
    """One witness per nonzero sign pattern in {-1, 0, 1}^(n-1).

    A witness built against the pattern matrix separates every L_n matrix
    with that sign pattern, so the family covers all of L_n minus I.
    """
    v = coerce_vector(v)
    n = len(v)
    base = order if order is not None else make_order(n, [v], complete=True)
    if n == 1:
        cert = DiscretenessCertificate(base, [], "L_1 trivial", ["rank 1: L_1 is trivial"])
    else:
        if v[-1].sign() == 0:
            raise ProbeError("last coordinate of the functional is zero")
        ws = []
        for b in sign_patterns(n - 1):
            ws.append(separating_witness(v, LnMatrix(b)))
        cert = DiscretenessCertificate(base, ws, f"all of L_{n}", [f"case ii on Z^{n}: {len(ws)} patterns"])
    if verify_box is not None:
        verify_certificate(cert, verify_box)
    return cert


def _lift(basis, w) -> tuple[int, ...]:
    n = len(basis[0])
    return tuple(sum(wi * b[t] for wi, b in zip(w, basis)) for t in range(n))


def ln_smoothness_probe(P: LatticeOrder, verify_box: int | None = 3) -> DiscretenessCertificate:
    """Witnesses isolating ``P`` in its L_n orbit, by induction on the rank.

    If the top functional vanishes on e_n it is invariant under L_n, so every
    transport keeps the kernel C_1 and acts on it through an L_k matrix in a
    basis of C_1 ending in e_n.  Witnesses of the restricted order are lifted
    back.  The points pinning the top level (a positive point outside C_1) are
    not needed to separate the orbit but are kept so the set also fixes the
    top functional among all orders.
    """
    n = P.n
    trace: list[str] = []
    witnesses: list[tuple[int, ...]] = []
    current = P
    composed = None  # basis of the current sublattice inside Z^n
    while True:
        k = current.n
        v0 = current.vectors[0]
        if k == 1:
            trace.append("rank 1: L_1 is trivial")
            break
        if v0[-1].sign():
            sub = discreteness_witness_set(v0, current, verify_box=None)
            trace += sub.trace
            for z in sub.witnesses:
                witnesses.append(_lift(composed, z) if composed else z)
            break
        c1 = kernel_sublattice([v0], k)
        en = tuple(int(i == k - 1) for i in range(k))
        basis = complete_basis_with_last(c1, k, en)
        trace.append(f"case i on Z^{k}: top functional vanishes on e_{k}, recurse into rank {len(basis)}")
        # pin the top level: one standard vector made positive
        pin = next(
            tuple(s * int(i == j) for i in range(k))
            for j in range(k)
            for s in (1, -1)
            if classify_level(current, tuple(s * int(i == j) for i in range(k)))[1] == 0
            and classify(current, tuple(s * int(i == j) for i in range(k))) is Verdict.POSITIVE
        )
        witnesses.append(_lift(composed, pin) if composed else pin)
        composed = [(_lift(composed, b) if composed else b) for b in basis]
        current = restrict(current, basis)
    cert = DiscretenessCertificate(P, witnesses, f"all of L_{n}", trace)
    if verify_box is not None:
        verify_certificate(cert, verify_box)
    return cert


# --- condensation ---------------------------------------------------------------


@dataclass
class NeighborhoodSpec:
    """Points required to stay positive."""

    elements: list

    def __post_init__(self):
        self.elements = [e if not isinstance(e, (list, np.ndarray)) else _ivec(e) for e in self.elements]


def positive_ball(P: LatticeOrder, radius: int) -> NeighborhoodSpec:
    pts = lattice_ball(P.n, radius)
    signs = classify_many(P, pts)
    return NeighborhoodSpec([_ivec(p) for p in pts[signs == 1]])


def epsilon_bound(v, U: NeighborhoodSpec | Sequence) -> Fraction | float:
    """Positive rational ``q`` such that ``v + d e_n`` keeps every constraint
    positive for ``0 <= d <= q``; ``math.inf`` if no constraint has a negative
    last coordinate."""
    v = coerce_vector(v)
    elems = U.elements if isinstance(U, NeighborhoodSpec) else [_ivec(u) for u in U]
    tight = []
    for u in elems:
        val = inner_product(v, u)
        if val.sign() != 1:
            raise ProbeError(f"constraint {list(u)} is not positive for the functional")
        if u[-1] < 0:
            tight.append((val, u[-1]))
    if not tight:
        return math.inf
    ratio = min(float(val) / -un for val, un in tight)
    q = Fraction(math.floor(ratio * (1 << 40)), 1 << 40)
    if q <= 0:
        q = Fraction(1, 1 << 40)
    while not all((val + q * un).sign() == 1 for val, un in tight):
        q /= 2
    return q


def check_independent(v) -> None:
    v = coerce_vector(v)
    if len(v) != 3:
        raise ProbeError("condensation needs a functional on Z^3")
    if kernel_sublattice([v], 3):
        raise ProbeError(f"entries of {[str(x) for x in v]} are rationally dependent")


def _shell(L: int) -> np.ndarray:
    """Points with both coordinates nonzero and sup-norm L."""
    side = np.concatenate([np.arange(-L, 0), np.arange(1, L + 1)]).astype(np.int64)
    inner = side[np.abs(side) < L]
    return np.concatenate([
        np.column_stack([np.repeat([-L, L], len(side)), np.tile(side, 2)]),
        np.column_stack([np.tile(inner, 2), np.repeat([-L, L], len(inner))]),
    ])


def _near(c0: float, c1: float, lo: float, hi: float, fixed: np.ndarray, L: int) -> np.ndarray:
    """Integers x in [-L, L] with c0 * fixed + c1 * x possibly in (lo, hi),
    padded by one on each side against float rounding."""
    a = (lo - c0 * fixed) / c1
    b = (hi - c0 * fixed) / c1
    first = np.maximum(np.floor(np.minimum(a, b)) - 1, -L).astype(np.int64)
    last = np.minimum(np.ceil(np.maximum(a, b)) + 1, L).astype(np.int64)
    rows, cols = [], []
    for f, x0, x1 in zip(fixed, first, last):
        for x in range(x0, x1 + 1):
            rows.append(f)
            cols.append(x)
    return np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64)


def _shell_candidates(L: int, window) -> np.ndarray:
    """Shell points, reduced to those near the target window when it is finite.

    For ``k alpha + t beta`` to land in an interval shorter than ``|beta|``
    with ``k`` fixed, at most a couple of ``t`` qualify (and symmetrically),
    so a finite window leaves O(1) candidates per shell.
    """
    if window is None:
        pts = _shell(L)
    else:
        a, b, lo, hi = window
        ends = np.array([-L, L], dtype=np.int64)
        k1, t1 = _near(a, b, lo, hi, ends, L)
        t2, k2 = _near(b, a, lo, hi, ends, L)
        pts = np.column_stack([np.concatenate([k1, k2]), np.concatenate([t1, t2])])
        pts = pts[(pts[:, 0] != 0) & (pts[:, 1] != 0)]
        pts = pts[np.maximum(np.abs(pts[:, 0]), np.abs(pts[:, 1])) == L]
        pts = np.unique(pts, axis=0) if len(pts) else pts.reshape(0, 2)
    if len(pts) == 0:
        return pts.reshape(0, 2)
    order = np.lexsort((pts[:, 1], pts[:, 0], np.abs(pts).sum(axis=1)))
    return pts[order]


def _shell_signs(coef, basis, pts: np.ndarray) -> np.ndarray:
    if coef is not None and len(pts):
        try:
            sign, _ = kernels.classify_points(coef, basis.radicands, pts)
            return sign
        except OverflowError:
            pass
    return np.full(len(pts), kernels.UNDECIDED, dtype=np.int8)


def find_shift(v, n: int, m: int, epsilon, exclude=(), max_shell: int = 1 << 16):
    """Nonzero ``(k0, t0)`` with ``0 < -nm(k0 alpha + t0 beta) < epsilon``.

    Enumerates sup-norm shells ``L = 1, 2, ...``, each in the order
    ``(|k|+|t|, k, t)``, and returns the first pair accepted by exact
    arithmetic.  Float bounds only shortlist candidates (with a margin),
    and the batch kernel only screens out pairs whose sign is certified
    wrong, so the result is the first exact solution in that order.
    """
    v = coerce_vector(v)
    alpha, beta = v[0], v[1]
    nm = n * m
    basis = v[0].basis
    finite = epsilon is not math.inf and epsilon is not None
    eps = ExactScalar.rational(Fraction(epsilon), basis) if finite else None
    window = None
    if finite:
        # k alpha + t beta must lie strictly between 0 and -epsilon / nm
        edge = -float(Fraction(epsilon)) / nm
        window = (float(alpha), float(beta), min(0.0, edge), max(0.0, edge))
    c1 = _coefficient_array([(alpha, beta)], basis)
    # screening against a coarse upper bound of epsilon only discards points
    # that fail for the exact epsilon too
    coarse = Fraction(math.ceil(Fraction(epsilon) * (1 << 16)), 1 << 16) if finite else None
    c2 = _coefficient_array([(alpha, beta, ExactScalar.rational(coarse, basis))], basis) if finite else None
    excluded = set(exclude)
    tried = 0
    L, width = 1, 1
    while L <= max_shell:
        # consecutive shells are screened together; order is preserved
        shells = range(L, min(L + width, max_shell + 1))
        arr = np.concatenate([_shell_candidates(x, window) for x in shells])
        L, width = shells[-1] + 1, min(2 * width, 256)
        keep = np.isin(_shell_signs(c1, basis, -nm * arr), (1, kernels.UNDECIDED))
        if finite and len(arr):
            lifted = np.column_stack([nm * arr, np.ones(len(arr), np.int64)])
            keep &= np.isin(_shell_signs(c2, basis, lifted), (1, kernels.UNDECIDED))
        for idx in np.nonzero(keep)[0]:
            k0, t0 = int(arr[idx, 0]), int(arr[idx, 1])
            if (k0, t0) in excluded:
                continue
            delta = (alpha * k0 + beta * t0) * (-nm)
            if delta.sign() != 1:
                continue
            if finite and (eps - delta).sign() != 1:
                continue
            return (k0, t0), delta, {"shells": max(abs(k0), abs(t0)), "candidates": tried + int(idx) + 1}
        tried += len(arr)
    raise ProbeError("no shift found within the search bound")


@dataclass
class CondensationSample:
    base: object
    conjugator: object
    neighborhood: NeighborhoodSpec
    transported: object
    shift: tuple[int, int]
    epsilon: object
    search: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def order_doc(O):
            return O.to_json() if isinstance(O, LatticeOrder) else lex_order_to_json(O)

        def elem(e):
            return list(e) if isinstance(e, tuple) else e.to_json()

        return {
            "schema": SCHEMA,
            "kind": "condensation",
            "base": order_doc(self.base),
            "conjugator": elem(self.conjugator),
            "transported": order_doc(self.transported),
            "shift": list(self.shift),
            "epsilon": "inf" if self.epsilon is math.inf else str(self.epsilon),
            "neighborhood_size": len(self.neighborhood.elements),
            "search": self.search,
            "checks": self.checks,
        }


def _elementary_power(which: int, e: int) -> UnimodularMatrix:
    rows = [[int(i == j) for j in range(3)] for i in range(3)]
    rows[which][2] = e
    return UnimodularMatrix(rows)


def condensation_certificate(v, n: int = 1, m: int = 1, U=None, epsilon=None,
                             exclude=()) -> CondensationSample:
    """Shift ``(k0, t0)`` and conjugator ``g^(k0 m) h^(t0 n)`` on Z^3.

    ``g`` and ``h`` act by the elementary matrices with ``n`` at (1,3) and
    ``m`` at (2,3).  The conjugator is returned as its matrix.
    """
    if not n or not m:
        raise ProbeError("n and m must be nonzero")
    v = coerce_vector(v)
    check_independent(v)
    P = make_order(3, [v])
    U = U if isinstance(U, NeighborhoodSpec) else NeighborhoodSpec(list(U or []))
    eps = epsilon_bound(v, U)
    if epsilon is not None:
        eps = min(eps, Fraction(epsilon)) if epsilon is not math.inf else eps
    (k0, t0), delta, stats = find_shift(v, n, m, eps, exclude)
    Ag = _elementary_power(0, n * k0 * m)
    Ah = _elementary_power(1, m * t0 * n)
    A = Ag @ Ah
    Q = act(P, A)
    sample = CondensationSample(P, A.rows, U, Q, (k0, t0), eps, stats)
    _verify_lattice_sample(sample, delta)
    return sample


def _verify_lattice_sample(sample: CondensationSample, delta) -> None:
    P, Q, U = sample.base, sample.transported, sample.neighborhood
    expected = tuple(P.vectors[0][:2]) + (P.vectors[0][2] + delta,)
    if not orders_equal(Q, make_order(3, [expected], P.basis)):
        raise VerificationFailure("transported functional is not v + delta e")
    inside = all(classify(Q, u) is Verdict.POSITIVE for u in U.elements)
    distinct = not orders_equal(P, Q)
    sample.checks = {"inside_neighborhood": inside, "differs_from_base": distinct,
                     "delta": str(delta)}
    if not (inside and distinct):
        raise VerificationFailure(f"condensation sample failed: {sample.checks}")


def _kernel_element(group, w):
    if isinstance(group, NGroup):
        return NElement((0, 0), w)
    return _n_kernel_in_triangular(group, w)


def _n_kernel_in_triangular(group: Triangular, w):
    return t_embed_to(n_to_n4(NElement((0, 0), w)), group.k)


def _group_sample(O: LexGroupOrder, g, U: NeighborhoodSpec, shift, eps, stats) -> CondensationSample:
    """Verify a conjugator on a group order, through two routes:
    the transported kernel order, and ``x in g^-1 P g  iff  g x g^-1 in P``."""
    try:
        Og = conjugate_lex_order(O, g)
    except PreconditionError as exc:  # pragma: no cover - conjugators come from N
        raise VerificationFailure(str(exc)) from exc
    ginv = g.inverse()
    elems = [_kernel_element(O.group, u) for u in U.elements]
    via_order = all(lex_classify(Og, x) is Verdict.POSITIVE for x in elems)
    via_conj = all(lex_classify(O, g * x * ginv) is Verdict.POSITIVE for x in elems)
    distinct = not lex_orders_equal(O, Og)
    sample = CondensationSample(O, g, U, Og, shift, eps, stats)
    sample.checks = {"inside_neighborhood": via_order, "conjugation_route": via_conj,
                     "differs_from_base": distinct}
    if not (via_order and via_conj and distinct):
        raise VerificationFailure(f"condensation sample failed: {sample.checks}")
    return sample


def n_default_order(v=None) -> LexGroupOrder:
    if v is None:
        v = (ExactScalar.sqrt(2, (2, 3)), ExactScalar.sqrt(3, (2, 3)), 1)
    return default_lex_order(NGroup(), make_order(3, [v]))


def condensation_sequence(O: LexGroupOrder, count: int) -> list[CondensationSample]:
    """``count`` conjugates of ``O`` with pairwise distinct kernel orders;
    sample ``j`` keeps every positive kernel point of norm <= j positive."""
    if not isinstance(O.group, NGroup):
        raise ProbeError("condensation_sequence works on orders of N")
    P = O.kernel_order
    if len(P.vectors) != 1:
        raise ProbeError("kernel order must be given by a single functional")
    v = P.vectors[0]
    check_independent(v)
    out: list[CondensationSample] = []
    used: list[tuple[int, int]] = []
    for j in range(1, count + 1):
        U = positive_ball(P, j)
        eps = epsilon_bound(v, U)
        (k0, t0), _, stats = find_shift(v, 1, 1, eps, used)
        used.append((k0, t0))
        g = NElement((k0, t0), (0, 0, 0))
        out.append(_group_sample(O, g, U, (k0, t0), eps, stats))
    for a, b in itertools.combinations(out, 2):
        if lex_orders_equal(a.transported, b.transported):
            raise VerificationFailure("two samples gave the same order")
    return out


def lift_and_condense(k: int, radius: int = 2, v=None) -> CondensationSample:
    """Condensation sample for a lexicographic order on N_k, k >= 4.

    The order runs through ``1 < <b, c, d> < N < N_4`` and then the rows
    of N_k above, with the kernel ordered by ``v`` (default
    ``(sqrt 2, sqrt 3, 1)``).  The conjugator lies in the copy of N, which
    fixes every factor above the kernel.
    """
    if k < 4:
        raise ProbeError(
            f"N_{k} has no condensed orders: for k = 1, 2, 3 the orbit relation is smooth"
        )
    group = Triangular(k, core="N")
    base_kernel = n_default_order(v).kernel_order
    O = default_lex_order(group, base_kernel)
    U = positive_ball(base_kernel, radius)
    eps = epsilon_bound(base_kernel.vectors[0], U)
    (k0, t0), _, stats = find_shift(base_kernel.vectors[0], 1, 1, eps)
    g = t_embed_to(n_to_n4(NElement((k0, t0), (0, 0, 0))), k)
    return _group_sample(O, g, U, (k0, t0), eps, stats)


# --- orbits and axioms -------------------------------------------------------------


def orbit_enumerate(O: LexGroupOrder, radius: int, generators=None) -> list[LexGroupOrder]:
    """Distinct conjugates ``g^-1 O g`` over the word ball, in ball order.

    Conjugators that do not preserve the series are skipped.
    """
    out: list[LexGroupOrder] = []
    for g in word_ball(O.group, radius, generators):
        try:
            Q = conjugate_lex_order(O, g)
        except PreconditionError:
            continue
        if not any(lex_orders_equal(Q, R) for R in out):
            out.append(Q)
    return out


class FlippedOrder:
    """A deliberately broken cone: ``P`` with the verdict at one point negated."""

    def __init__(self, order, point):
        self.order = order
        self.point = point
        self.n = getattr(order, "n", None)

    def classify_many(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=np.int64).reshape(-1, self.n)
        s = classify_many(self.order, pts).copy()
        hit = np.all(pts == np.asarray(self.point, dtype=np.int64), axis=1)
        s[hit] = -s[hit]
        return s

    def classify(self, g) -> Verdict:
        base = lex_classify(self.order, g) if isinstance(self.order, LexGroupOrder) else classify(self.order, g)
        if (g.key() if hasattr(g, "key") else _ivec(g)) == (
            self.point.key() if hasattr(self.point, "key") else _ivec(self.point)
        ):
            return Verdict.from_sign(-base.sign)
        return base


@dataclass
class AxiomReport:
    ok: bool
    points: int
    pairs: int
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "ok": self.ok, "points": self.points, "pairs": self.pairs,
                "violations": self.violations}


def _lattice_axioms(order, radius: int, limit: int) -> AxiomReport:
    pts = lattice_ball(order.n, radius)
    signs = order.classify_many(pts)
    neg = order.classify_many(-pts)
    violations = []
    for p, s, t in zip(pts, signs, neg):
        zero = not p.any()
        ok = (s == 0 and t == 0) if zero else ({int(s), int(t)} == {1, -1})
        if not ok:
            violations.append({"trichotomy": _ivec(p), "signs": [int(s), int(t)]})
    pos = pts[signs == 1]
    pairs = 0
    for w in pos:
        if len(violations) >= limit:
            break
        sums = pos + w
        ss = order.classify_many(sums)
        pairs += len(pos)
        for idx in np.nonzero(ss != 1)[0][: limit]:
            violations.append({"closure": [_ivec(w), _ivec(pos[idx])]})
    return AxiomReport(not violations, len(pts), pairs, violations[:limit])


def _group_axioms(order, radius: int, generators, limit: int) -> AxiomReport:
    group = order.group if not isinstance(order, FlippedOrder) else order.order.group
    classify_one = order.classify if isinstance(order, FlippedOrder) else (lambda g: lex_classify(order, g))
    ball = word_ball(group, radius, generators)
    identity = group.identity()
    violations = []
    pos = []
    for g in ball:
        s, t = classify_one(g), classify_one(g.inverse())
        if g == identity:
            ok = s is Verdict.ZERO and t is Verdict.ZERO
        else:
            ok = {s, t} == {Verdict.POSITIVE, Verdict.NEGATIVE}
        if not ok:
            violations.append({"trichotomy": g.to_json(), "signs": [s.sign, t.sign]})
        if s is Verdict.POSITIVE:
            pos.append(g)
    pairs = 0
    for g in pos:
        for h in pos:
            pairs += 1
            if classify_one(g * h) is not Verdict.POSITIVE:
                violations.append({"closure": [g.to_json(), h.to_json()]})
                if len(violations) >= limit:
                    return AxiomReport(False, len(ball), pairs, violations)
    return AxiomReport(not violations, len(ball), pairs, violations[:limit])


def axiom_check(order, radius: int, generators=None, limit: int = 10) -> AxiomReport:
    """Trichotomy and closure on a lattice ball or word ball, exhaustively."""
    inner = order.order if isinstance(order, FlippedOrder) else order
    if isinstance(inner, LatticeOrder):
        return _lattice_axioms(order, radius, limit)
    if isinstance(inner, LexGroupOrder):
        return _group_axioms(order, radius, generators, limit)
    raise TypeError(f"cannot check axioms for {type(order).__name__}")
