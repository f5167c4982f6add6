import random

import pytest
from hypothesis import given, strategies as st

from ordlab.groups import (
    N4_LETTERS,
    GroupError,
    Heisenberg,
    HeisenbergElement,
    LexGroupOrder,
    NElement,
    NGroup,
    PreconditionError,
    Triangular,
    TriangularElement,
    commutator,
    conjugate,
    conjugate_lex_order,
    conjugation_matrix,
    convex_series,
    default_lex_order,
    element_from_json,
    h_conj_representation,
    h_from_matrix,
    h_matrix,
    lex_classify,
    lex_order_from_json,
    lex_order_to_json,
    lex_orders_equal,
    n_conj_representation,
    n_from_n4,
    n_semidirect_multiply,
    n_to_n4,
    t_coordinates,
    t_embed,
    t_from_coordinates,
    t_generator,
    t_lower_central,
    word_ball,
)
from ordlab.intlinear import matmul
from ordlab.orders import Verdict, make_order

ints = st.integers(-6, 6)


@st.composite
def h_elements(draw, n=None):
    n = n or draw(st.integers(1, 3))
    vec = st.lists(ints, min_size=n, max_size=n)
    return HeisenbergElement(draw(vec), draw(vec), draw(ints))


@st.composite
def n_elements(draw):
    return NElement(draw(st.lists(ints, min_size=2, max_size=2)),
                    draw(st.lists(ints, min_size=3, max_size=3)))


@st.composite
def t_elements(draw, k):
    rows = [[int(i == j) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i):
            rows[i][j] = draw(st.integers(-4, 4))
    return TriangularElement(rows)


# --- Heisenberg ---------------------------------------------------------------


def test_heisenberg_identity_and_commutator():
    H = Heisenberg(1)
    g = H.generators()
    x, y, z = g["x1"], g["y1"], g["z"]
    assert x * H.identity() == x
    assert commutator(x, y) == z
    xy, yx = x * y, y * x
    assert xy.b == yx.b and xy.a == yx.a and abs(xy.c - yx.c) == 1


def test_heisenberg_against_matrices():
    rng = random.Random(1)
    for n in (1, 2, 3):
        for _ in range(100):
            g, h = (HeisenbergElement([rng.randint(-9, 9) for _ in range(n)],
                                      [rng.randint(-9, 9) for _ in range(n)], rng.randint(-9, 9))
                    for _ in range(2))
            assert h_from_matrix(matmul(h_matrix(g), h_matrix(h))) == g * h


@given(h_elements())
def test_heisenberg_inverse(g):
    assert g * g.inverse() == g.group.identity() == g.inverse() * g


def test_heisenberg_generator_commutators_are_central():
    H = Heisenberg(2)
    gens = H.generators()
    for a in gens.values():
        for b in gens.values():
            c = commutator(a, b)
            assert not any(c.a) and not any(c.b)


def test_heisenberg_representation_examples():
    H1, H2 = Heisenberg(1), Heisenberg(2)
    assert h_conj_representation(H1.identity()).is_identity()
    assert h_conj_representation(H1.generators()["y1"]).rows == ((1, 0), (1, 1))
    g2 = H2.generators()
    g = g2["y1"] * g2["y1"] * g2["y2"]
    assert h_conj_representation(g).rows == ((1, 0, 0), (0, 1, 0), (2, 1, 1))
    assert conjugation_matrix(H2, g).rows == h_conj_representation(g).rows


@given(h_elements(n=2), h_elements(n=2))
def test_heisenberg_representation_is_homomorphism(g, h):
    assert h_conj_representation(g * h) == h_conj_representation(g) @ h_conj_representation(h)


@given(h_elements(n=2), st.lists(ints, min_size=3, max_size=3))
def test_heisenberg_conjugation_on_kernel(g, w):
    h = HeisenbergElement((0, 0), w[:2], w[2])
    c = conjugate(g, h)
    assert not any(c.b)
    assert c.a + (c.c,) == h_conj_representation(g).apply(w)


# --- N -------------------------------------------------------------------------


def test_n_examples():
    N = NGroup()
    g = N.generators()
    x = NElement((2, -1), (3, 0, 5))
    assert x * x.inverse() == N.identity()
    assert commutator(g["a3"], g["b1"]) == g["a1"]
    assert commutator(g["a3"], g["b2"]) == g["a2"]
    ab, ba = g["a3"] * g["b1"], g["b1"] * g["a3"]
    diff = ba.inverse() * ab
    assert diff in (g["a1"], g["a1"].inverse())
    assert commutator(g["a1"], g["b1"]) == N.identity()
    assert commutator(g["b1"], g["b2"]) == N.identity()


def test_n_against_both_oracles():
    rng = random.Random(2)
    for _ in range(100):
        g, h = (NElement([rng.randint(-9, 9) for _ in range(2)], [rng.randint(-9, 9) for _ in range(3)])
                for _ in range(2))
        assert n_from_n4(n_to_n4(g) * n_to_n4(h)) == g * h
        assert n_semidirect_multiply(g, h) == g * h


def test_n_embedding_is_linear_in_entries():
    g = NElement((1, -2), (3, 4, -5))
    t = n_to_n4(g)
    assert t.entry(2, 1) == 0 and n_from_n4(t) == g
    with pytest.raises(GroupError):
        n_from_n4(t_generator(4, 2, 1))


def test_n_representation_examples():
    g = NGroup().generators()
    assert n_conj_representation(g["b1"]).rows == ((1, 0, 1), (0, 1, 0), (0, 0, 1))
    assert n_conj_representation(g["a1"] * g["a2"] * g["a3"]).is_identity()
    x = NElement((3, -2), (0, 0, 0))
    m = n_conj_representation(x).rows
    assert m[0][2] == 3 and m[1][2] == -2


@given(n_elements(), n_elements())
def test_n_representation_is_homomorphism(g, h):
    assert n_conj_representation(g * h) == n_conj_representation(g) @ n_conj_representation(h)
    assert conjugation_matrix(NGroup(), g) == n_conj_representation(g)


@given(n_elements(), st.lists(ints, min_size=3, max_size=3))
def test_n_conjugation_on_kernel(g, w):
    c = conjugate(g, NElement((0, 0), w))
    assert c.m == (0, 0) and c.k == n_conj_representation(g).apply(w)


# --- N_k -----------------------------------------------------------------------


def test_generator_examples():
    assert t_generator(2, 2, 1).entries == ((1, 0), (1, 1))
    assert commutator(t_generator(3, 3, 2), t_generator(3, 2, 1)) == t_generator(3, 3, 1)
    assert commutator(t_generator(3, 3, 1), t_generator(3, 2, 1)) == TriangularElement.identity(3)
    with pytest.raises(GroupError):
        t_generator(3, 1, 2)


def test_generator_commutator_table():
    k = 5
    for (i, j), (p, q) in ((a, b) for a in [(i, j) for i in range(2, k + 1) for j in range(1, i)]
                           for b in [(i, j) for i in range(2, k + 1) for j in range(1, i)]):
        c = commutator(t_generator(k, i, j), t_generator(k, p, q))
        if j == p:
            assert c == t_generator(k, i, q)
        elif q == i:
            assert c == t_generator(k, p, j).inverse()
        else:
            assert c == TriangularElement.identity(k)


def test_n4_letter_commutators():
    T = {x: t_generator(4, *ij) for x, ij in N4_LETTERS.items()}
    assert commutator(T["d"], T["f"]) == T["b"]
    assert commutator(T["d"], T["a"]) == T["c"]
    assert commutator(T["f"], T["e"]) == T["a"]
    assert commutator(T["b"], T["e"]) == T["c"]


def test_lower_central_examples():
    names = {(g.entries, ) for g in t_lower_central(4, 1)}
    assert names == {(t_generator(4, i, j).entries,) for i, j in [(3, 1), (4, 1), (4, 2)]}
    assert t_lower_central(4, 3) == []
    assert len(t_lower_central(3, 0)) == 3
    with pytest.raises(GroupError):
        t_lower_central(3, 3)


def test_lower_central_is_commutator_subgroup_on_generators():
    # [gamma_0, gamma_l] lands in gamma_{l+1} for generators
    k = 5
    for l in range(k - 1):
        deeper = {g.entries for g in t_lower_central(k, l + 1)}
        for g in t_lower_central(k, 0):
            for h in t_lower_central(k, l):
                c = commutator(g, h)
                if c != TriangularElement.identity(k):
                    assert c.entries in deeper or c.inverse().entries in deeper


def test_embed_examples():
    assert t_embed(TriangularElement.identity(3)) == TriangularElement.identity(4)
    assert t_embed(t_generator(2, 2, 1)) == t_generator(3, 2, 1)


@given(t_elements(3), t_elements(3))
def test_embed_is_homomorphism(g, h):
    assert t_embed(g * h) == t_embed(g) * t_embed(h)


@given(t_elements(5), t_elements(5))
def test_triangular_inverse_and_product(g, h):
    assert g * g.inverse() == TriangularElement.identity(5)
    assert (g * h).inverse() == h.inverse() * g.inverse()


@given(t_elements(4))
def test_triangular_coordinates_round_trip(g):
    for group in (Triangular(4), Triangular(4, core="N")):
        assert t_from_coordinates(t_coordinates(g, group), group) == g


def test_convex_series_examples():
    assert convex_series(NGroup()).factor_ranks == (3, 2)
    assert convex_series(Heisenberg(1)).factor_ranks == (2, 1)
    s = convex_series(Triangular(4))
    assert s.factor_ranks == (None, 1, 1, 1) and s.subgroups[0] == "N~_3"
    assert convex_series(s and Triangular(4, core="N")).factor_ranks == (3, 2, 1)
    with pytest.raises(GroupError):
        convex_series("SL2")


@pytest.mark.parametrize("group", [Triangular(3), Triangular(5), Triangular(4, core="N"),
                                   Triangular(6, core="N")])
def test_levels_are_a_series(group):
    """Each level's projection is a homomorphism on its subgroup, and the
    total rank is the number of free entries."""
    levels = group.levels()
    k = group.k
    assert sum(lv.rank for lv in levels) == k * (k - 1) // 2
    rng = random.Random(4)
    for i, lv in enumerate(levels):
        gens = [x for deeper in levels[i:] for x in deeper.generators]
        for _ in range(30):
            g = h = group.identity()
            for _ in range(4):
                g = g * rng.choice(gens) ** rng.choice([-1, 1])
                h = h * rng.choice(gens) ** rng.choice([-1, 1])
            assert all(not any(levels[j].project(g)) for j in range(i))
            assert lv.project(g * h) == tuple(a + b for a, b in zip(lv.project(g), lv.project(h)))


# --- lexicographic orders --------------------------------------------------------


def test_lex_classify_examples(v23):
    H = Heisenberg(1)
    O = default_lex_order(H, make_order(2, [(1, 1)], complete=True))
    assert lex_classify(O, H.identity()) is Verdict.ZERO
    assert lex_classify(O, HeisenbergElement((1,), (-50,), -99)) is Verdict.POSITIVE
    assert lex_classify(O, HeisenbergElement((-1,), (50,), 99)) is Verdict.NEGATIVE
    ON = default_lex_order(NGroup(), make_order(3, [v23]))
    assert lex_classify(ON, NElement((0, 0), (1, 1, -3))) is Verdict.POSITIVE
    with pytest.raises(GroupError):
        lex_classify(ON, H.identity())


def test_lex_order_validates_ranks():
    with pytest.raises(GroupError):
        LexGroupOrder(NGroup(), [make_order(2, [(1, 0), (0, 1)])])
    with pytest.raises(GroupError):
        LexGroupOrder(NGroup(), [make_order(1, [(1,)]), make_order(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])])


def test_conjugate_lex_order_examples(v23):
    H = Heisenberg(1)
    O = default_lex_order(H, make_order(2, [(1, 1)], complete=True))
    assert lex_orders_equal(conjugate_lex_order(O, H.identity()), O)
    Q = conjugate_lex_order(O, H.generators()["y1"])
    assert [[c.coeffs[0] for c in v] for v in Q.kernel_order.vectors] == [[0, 1], [1, 0]]
    ON = default_lex_order(NGroup(), make_order(3, [v23]))
    Q = conjugate_lex_order(ON, NGroup().generators()["b1"])
    # phi(b1)^-T moves -alpha into the last entry
    assert Q.kernel_order.vectors[0] == (v23[0], v23[1], v23[2] - v23[0])


@given(n_elements(), n_elements())
def test_conjugate_order_agrees_with_conjugation(g, x):
    """x in g^-1 P g  iff  g x g^-1 in P."""
    basis = (2, 3)
    from ordlab.scalars import ExactScalar
    v = (ExactScalar.sqrt(2, basis), ExactScalar.sqrt(3, basis), 1)
    O = default_lex_order(NGroup(), make_order(3, [v]))
    Q = conjugate_lex_order(O, g)
    assert lex_classify(Q, x) == lex_classify(O, g * x * g.inverse())


def test_precondition_checked_for_triangular():
    # cyclic factors are fixed by unipotent conjugation, so the plain series passes
    O = default_lex_order(Triangular(4))
    conjugate_lex_order(O, t_generator(4, 2, 1))
    # through the copy of N, e = E_{2,1} moves f into f a: the (f, a) factor is not fixed
    O = default_lex_order(Triangular(4, core="N"))
    with pytest.raises(PreconditionError):
        conjugate_lex_order(O, t_generator(4, *N4_LETTERS["e"]))
    conjugate_lex_order(O, t_generator(4, *N4_LETTERS["f"]))


def test_left_invariance_tautology(v23):
    rng = random.Random(8)
    O = default_lex_order(NGroup(), make_order(3, [v23]))
    for _ in range(100):
        g = NElement([rng.randint(-5, 5) for _ in range(2)], [rng.randint(-5, 5) for _ in range(3)])
        h = NElement([rng.randint(-5, 5) for _ in range(2)], [rng.randint(-5, 5) for _ in range(3)])
        if lex_classify(O, g) is Verdict.POSITIVE:
            assert lex_classify(O, h.inverse() * (h * g)) is Verdict.POSITIVE


def test_word_ball_sizes():
    H = Heisenberg(1)
    assert len(word_ball(H, 0)) == 1
    assert len(word_ball(H, 1)) == 7
    assert len(word_ball(H, 20, ["y1"])) == 41
    assert word_ball(H, 3) == word_ball(H, 3)
    with pytest.raises(GroupError):
        word_ball(H, 1, ["q"])


def test_element_json_round_trip():
    for g in (HeisenbergElement((1,), (0,), 2), NElement((1, 0), (0, 0, 3)), t_generator(4, 3, 1)):
        assert element_from_json(g.to_json()) == g
    assert element_from_json({"group": "heisenberg", "n": 1, "b": [1], "a": [0], "c": 2}) \
        == HeisenbergElement((1,), (0,), 2)
    with pytest.raises(GroupError):
        element_from_json({"group": "heisenberg", "n": 2, "b": [1], "a": [0]})


def test_lex_order_json_round_trip(v23):
    O = default_lex_order(NGroup(), make_order(3, [v23]))
    assert lex_orders_equal(lex_order_from_json(lex_order_to_json(O)), O)
