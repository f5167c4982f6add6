import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ordlab.intlinear import LnMatrix, UnimodularMatrix, unimodular_inverse
from ordlab.orders import (
    ConvexityError,
    LatticeOrder,
    NontotalOrder,
    RedundantVector,
    Verdict,
    act,
    classify,
    classify_level,
    lattice_ball,
    make_order,
    orders_equal,
    rank_one_orders,
    restrict,
    scaled,
)
from ordlab.scalars import ExactScalar
from test_intlinear import random_unimodular


def test_make_order_examples(v23):
    P = make_order(3, [v23])
    assert P.n == 3 and len(P.vectors) == 1
    with pytest.raises(NontotalOrder):
        make_order(2, [(1, 0)])
    make_order(2, [(1, 0), (0, 1)])


def test_redundant_vector_reports_index():
    with pytest.raises(RedundantVector) as err:
        make_order(2, [(1, 0), (2, 0), (0, 1)])
    assert err.value.index == 1


def test_rational_functionals_need_completion():
    with pytest.raises(NontotalOrder):
        make_order(2, [(1, 1)])
    P = make_order(2, [(1, 1)], complete=True)
    assert [[c.coeffs[0] for c in v] for v in P.vectors] == [[1, 1], [1, 0]]


def test_classify_examples(v23):
    P = make_order(3, [v23])
    assert classify(P, (1, 1, -3)) is Verdict.POSITIVE
    assert classify(P, (0, 0, 0)) is Verdict.ZERO
    assert classify(make_order(2, [(1, 0), (0, 1)]), (0, -5)) is Verdict.NEGATIVE
    assert classify_level(make_order(2, [(1, 0), (0, 1)]), (0, -5)) == (Verdict.NEGATIVE, 1)
    with pytest.raises(ValueError):
        classify(P, (1, 2))


def test_act_examples(v23):
    P = make_order(3, [v23])
    assert orders_equal(act(P, UnimodularMatrix.identity(3)), P)
    Q = act(make_order(2, [(1, 1)], complete=True), LnMatrix((1,)))
    assert [[c.coeffs[0] for c in v] for v in Q.vectors] == [[0, 1], [1, 0]]
    # y^k on <x, z>: u = (alpha - k gamma, beta, gamma)
    k = 3
    Q = act(P, LnMatrix((k, 0)))
    assert Q.vectors[0] == (v23[0] - v23[2] * k, v23[1], v23[2])


def test_transport_oracle(v23):
    rng = random.Random(11)
    P = make_order(3, [v23])
    for _ in range(500):
        A = random_unimodular(rng, 3)
        w = tuple(rng.randint(-10, 10) for _ in range(3))
        assert classify(act(P, A), w) == classify(P, unimodular_inverse(A).apply(w))


def test_act_is_an_action(v23):
    rng = random.Random(5)
    P = make_order(3, [(1, 1, 0), (0, 0, 1)], complete=True)
    for Q0 in (P, make_order(3, [v23])):
        for _ in range(50):
            A, B = random_unimodular(rng, 3), random_unimodular(rng, 3)
            assert orders_equal(act(act(Q0, B), A), act(Q0, A @ B))


def test_equal_examples(v23):
    P = make_order(3, [v23])
    assert orders_equal(P, scaled(P, 2))
    assert not orders_equal(P, make_order(3, [tuple(-x for x in v23)]))
    assert not orders_equal(make_order(2, [(1, 0), (0, 1)]), make_order(2, [(1, 0), (0, -1)]))


def test_equal_ignores_deeper_representation():
    # same order written with different second functionals
    P = make_order(2, [(1, 0), (0, 1)])
    Q = make_order(2, [(1, 0), (5, 1)])
    assert orders_equal(P, Q)


def small_family():
    b = (2,)
    r2 = ExactScalar.sqrt(2, b)
    out = [
        make_order(2, [(1, 0), (0, 1)]),
        make_order(2, [(1, 0), (0, -1)]),
        make_order(2, [(2, 0), (0, 3)]),
        make_order(2, [(1, 1)], complete=True),
        make_order(2, [(2, 2)], complete=True),
        make_order(2, [(r2, 1)]),
        make_order(2, [(r2 * 3, 3)]),
        make_order(2, [(-r2, 1)]),
    ]
    return out


def test_equal_is_an_equivalence():
    fam = small_family()
    eq = [[orders_equal(a, b) for b in fam] for a in fam]
    for i, j, k in itertools.product(range(len(fam)), repeat=3):
        assert eq[i][i]
        assert eq[i][j] == eq[j][i]
        if eq[i][j] and eq[j][k]:
            assert eq[i][k]
    # equality agrees with classification on a ball
    pts = [tuple(int(x) for x in p) for p in lattice_ball(2, 6)]
    for a, b in itertools.combinations(fam, 2):
        same = all(classify(a, w) == classify(b, w) for w in pts)
        assert orders_equal(a, b) == same


def test_restrict_examples():
    P = make_order(2, [(1, 0), (0, 1)])
    R = restrict(P, [(0, 1)])
    assert R.n == 1 and R.vectors[0][0].coeffs == (1,)
    Q = make_order(3, [(1, 1, 0), (0, 0, 1)], complete=True)
    R = restrict(Q, [(1, -1, 0), (0, 0, 1)])
    assert [[c.coeffs[0] for c in v] for v in R.vectors] == [[0, 1], [1, 0]]
    with pytest.raises(ConvexityError):
        restrict(P, [(1, 0)])


def test_ball_is_euclidean():
    assert len(lattice_ball(2, 1)) == 5
    assert len(lattice_ball(3, 5)) == 515


def test_rank_one_has_two_orders():
    pos, neg = rank_one_orders()
    assert not orders_equal(pos, neg)
    for q in (3, Fraction(1, 7), 100):
        P = make_order(1, [(q,)])
        assert orders_equal(P, pos) and not orders_equal(P, neg)
    assert orders_equal(act(pos, UnimodularMatrix.identity(1)), pos)


def test_json_round_trip(v23):
    P = make_order(3, [v23])
    doc = P.to_json()
    assert doc == {"schema": "ordlab/1", "rank": 3, "radicands": [2, 3],
                   "vectors": [[["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]]}
    assert orders_equal(LatticeOrder.from_json(doc), P)


@st.composite
def lattice_orders(draw):
    n = draw(st.integers(2, 3))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=n))
    vecs = []
    for r in rows:
        try:
            make_order(n, vecs + [r], complete=True)
            vecs.append(r)
        except (RedundantVector, ValueError):
            continue
    if not vecs:
        vecs = [[1] + [0] * (n - 1)]
    return make_order(n, vecs, complete=True)


@given(lattice_orders(), st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_trichotomy_property(P, w):
    w = tuple(w[: P.n])
    s, t = classify(P, w), classify(P, tuple(-x for x in w))
    if any(w):
        assert {s, t} == {Verdict.POSITIVE, Verdict.NEGATIVE}
    else:
        assert s is t is Verdict.ZERO
