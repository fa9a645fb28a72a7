"""Generic group engine: words, closure, commutators, hom extension,
centralizers."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from regmaps.construct import build_G, build_H, param_sets
from regmaps.ffield import PrimePower, PrimitivePoly, enumerate_primitive
from regmaps.grp import (ClosureBoundError, GroupModel, Word, centralizer_order,
                         closure, commutator, commutator_subgroup, conjugate,
                         element_order, eval_word, hom_extend,
                         hom_extend_report, power, quotient_model, rmul_table)


def cyclic_model(n, x_exp=1, y_exp=1):
    return GroupModel(name=f"C{n}", n=n,
                      mul=lambda a, b: (a + b) % n,
                      inv=lambda a: (-a) % n,
                      gen_x=x_exp % n, gen_y=y_exp % n)


# -- words --------------------------------------------------------------------

def test_word_normalization():
    w = Word.of([("x", 1), ("x", 2), ("y", 0), ("y", -1), ("y", 1), ("x", 1)])
    assert w.letters == (("x", 4),)  # y^-1 y cancels, x's merge across
    assert Word.of([("x", 1), ("x", -1)]).letters == ()
    assert (Word.gen("x") * Word.gen("x", -1)).letters == ()


def test_word_algebra():
    x, y = Word.gen("x"), Word.gen("y")
    assert ((x * y) ** 2).to_text() == "x y x y"
    assert (x ** -2).to_text() == "x^-2"
    assert commutator(x, y).to_text() == "x^-1 y^-1 x y"
    assert conjugate(x, y ** 2).to_text() == "y^2 x y^-2"
    assert (x * y).inverse().to_text() == "y^-1 x^-1"
    w = Word.from_text("x^3 y^-2 x y")
    assert w.to_text() == "x^3 y^-2 x y"
    assert w.length() == 7
    assert w.syllables() == [(0, 3), (3, 2), (0, 1), (2, 1)]
    assert str(Word()) == "1"


def test_word_rejects_bad_symbol():
    with pytest.raises(ValueError):
        Word.of([("z", 1)])


# -- element orders (AGL examples) --------------------------------------------

def test_element_orders_in_agl():
    H8 = build_H(8, enumerate_primitive(PrimePower(2, 3))[0])
    assert element_order(H8, H8.gen_y) == 7         # ord(v) = q-1
    uv = H8.mul(H8.gen_x, H8.gen_y)
    assert element_order(H8, uv) == 2               # ord(uv) = 2
    H7 = build_H(7, enumerate_primitive(PrimePower(7, 1))[0])
    assert element_order(H7, H7.gen_x) == 3         # (q-1)/2 for q=3 mod 4
    H5 = build_H(5, enumerate_primitive(PrimePower(5, 1))[0])
    assert element_order(H5, H5.gen_x) == 4         # q-1 for q=1 mod 4


# -- closure -------------------------------------------------------------------

def test_closure_sizes():
    H5 = build_H(5, enumerate_primitive(PrimePower(5, 1))[0])
    assert len(closure(H5, (H5.gen_x, H5.gen_y))) == 20
    assert closure(H5, (H5.identity,)) == {0}
    G = build_G(param_sets(5, 3)[0])
    assert len(closure(G, (G.gen_x, G.gen_y))) == 60


def test_closure_bound_error():
    C = cyclic_model(100)
    with pytest.raises(ClosureBoundError):
        closure(C, (1,), bound=10)


# -- commutator subgroup --------------------------------------------------------

def commutators_bruteforce(G):
    """Oracle: subgroup generated by all |G|^2 commutators."""
    gens = set()
    for g in G.elements:
        for h in G.elements:
            gens.add(G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h)))
    return closure(G, gens)


def test_commutator_subgroup_agl8():
    H8 = build_H(8, enumerate_primitive(PrimePower(2, 3))[0])
    Gp = commutator_subgroup(H8)
    assert len(Gp) == 8
    assert all(H8.mul(g, g) == 0 for g in Gp)       # exponent 2
    assert Gp == commutators_bruteforce(H8)


def test_commutator_subgroup_cyclic_trivial():
    C = cyclic_model(12, x_exp=3, y_exp=4)
    assert commutator_subgroup(C) == {0}


def test_commutator_subgroup_quaternion_case():
    ps = [p for p in param_sets(4, 4) if p.variant == "q4B"][0]
    G = build_G(ps)
    Gp = commutator_subgroup(G)
    assert len(Gp) == 8
    invols = [g for g in Gp if g != 0 and G.mul(g, g) == 0]
    assert len(invols) == 1                          # quaternion signature
    assert Gp == commutators_bruteforce(G)


@pytest.mark.parametrize("qt", [(3, 3), (5, 1), (5, 3), (8, 2), (9, 1)])
def test_commutator_matches_bruteforce_small(qt):
    for ps in param_sets(*qt):
        G = build_G(ps)
        assert commutator_subgroup(G) == commutators_bruteforce(G)


# -- eval_word -------------------------------------------------------------------

def test_eval_word_examples():
    x, y = Word.gen("x"), Word.gen("y")
    H5 = build_H(5, enumerate_primitive(PrimePower(5, 1))[0])
    assert eval_word(H5, (x * y) ** 2) == 0
    assert eval_word(H5, Word()) == 0
    from regmaps.construct import w_word
    mu = enumerate_primitive(PrimePower(5, 1))[0]
    assert eval_word(H5, w_word(mu, 5)) == 0


def test_eval_word_homomorphism_property():
    H = build_H(9, enumerate_primitive(PrimePower(3, 2))[0])
    rng = random.Random(3)
    letters = [("x", 1), ("x", -1), ("y", 2), ("y", -3), ("x", 2)]
    for _ in range(25):
        w1 = Word.of(rng.choices(letters, k=rng.randrange(0, 6)))
        w2 = Word.of(rng.choices(letters, k=rng.randrange(0, 6)))
        assert eval_word(H, w1 * w2) == H.mul(eval_word(H, w1), eval_word(H, w2))


# -- hom_extend --------------------------------------------------------------------

def test_hom_extend_identity():
    G = build_G(param_sets(5, 3)[0])
    phi = hom_extend(G, G, G.gen_x, G.gen_y)
    assert phi == list(range(G.n))


def test_hom_extend_distinguishes_m0_m1():
    sets = param_sets(8, 2)
    m0 = build_G([p for p in sets if p.variant == "M0"][0])
    m1 = build_G([p for p in sets if p.variant == "M1"][0])
    assert hom_extend(m0, m1, m1.gen_x, m1.gen_y) is None
    rep = hom_extend_report(m0, m1, m1.gen_x, m1.gen_y)
    assert not rep["ok"] and "extend" in rep["reason"]


def test_hom_extend_order_mismatch():
    rep = hom_extend_report(cyclic_model(4), cyclic_model(6), 1, 1)
    assert not rep["ok"] and "mismatch" in rep["reason"]


def test_hom_extend_swap_agl5():
    """(u, v) -> (v, u) extends for q = 5 (self-dual at t = 1)."""
    H5 = build_H(5, enumerate_primitive(PrimePower(5, 1))[0])
    phi = hom_extend(H5, H5, H5.gen_y, H5.gen_x)
    assert phi is not None
    # certificate is a genuine automorphism
    rng = random.Random(11)
    for _ in range(100):
        a, b = rng.randrange(H5.n), rng.randrange(H5.n)
        assert phi[H5.mul(a, b)] == H5.mul(phi[a], phi[b])


def test_hom_extend_with_tables_matches_plain():
    G = build_G(param_sets(9, 1)[0])
    tabs = (rmul_table(G, G.gen_x), rmul_table(G, G.gen_y),
            rmul_table(G, G.gen_x), rmul_table(G, G.gen_y))
    assert hom_extend(G, G, G.gen_x, G.gen_y, tables=tabs) == list(range(G.n))


# -- quotient -----------------------------------------------------------------------

def test_quotient_model_recovers_agl():
    ps = param_sets(5, 3)[0]
    G = build_G(ps)
    N = closure(G, (power(G, G.gen_y, 4),))
    assert len(N) == 3
    Q, rep_of = quotient_model(G, N)
    assert Q.n == 20
    H = build_H(5, ps.mu)
    assert hom_extend(Q, H, H.gen_x, H.gen_y) is not None
    assert rep_of[G.identity] == Q.identity


# -- centralizer -----------------------------------------------------------------------

def test_centralizer_of_regular_map_action():
    from regmaps.mapcore import build_map
    G = build_G(param_sets(5, 3)[0])
    M = build_map(G)
    assert centralizer_order([M.R, M.L]) == 60


def test_centralizer_nonregular_rotation_system():
    """A hand-built rotation system on K_4 that is not regular."""
    from regmaps.oracle import _layout
    vertex_of, darts_at = _layout(4, 1)
    # vertex rotations: cyclic on each dart list, but with one vertex twisted
    rot = [-1] * 12
    orders = {0: (0, 1), 1: (0, 1), 2: (0, 1), 3: (1, 0)}
    for v, (i, j) in orders.items():
        ds = darts_at[v]
        cyc = [ds[0], ds[1 + i], ds[1 + j]]
        for idx, d in enumerate(cyc):
            rot[d] = cyc[(idx + 1) % 3]
    L = [d ^ 1 for d in range(12)]
    assert centralizer_order([rot, L]) < 12


def test_centralizer_trivial_point():
    assert centralizer_order([[0]]) == 1


def test_centralizer_rejects_intransitive():
    with pytest.raises(ValueError):
        centralizer_order([[0, 1], [0, 1]])


# -- model sanity ---------------------------------------------------------------------

@pytest.mark.parametrize("qt", [(5, 1), (5, 3), (4, 4), (2, 6), (3, 3), (8, 2)])
def test_generators_generate_and_lagrange(qt):
    rng = random.Random(5)
    for ps in param_sets(*qt):
        G = build_G(ps)
        assert len(closure(G, (G.gen_x, G.gen_y))) == G.n
        for _ in range(8):
            g = rng.randrange(G.n)
            assert G.n % element_order(G, g) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["x", "y"]), st.integers(-4, 4)),
                max_size=8))
def test_word_normal_form_invariants(pairs):
    w = Word.of(pairs)
    assert all(e != 0 for _, e in w.letters)
    assert all(a[0] != b[0] for a, b in zip(w.letters, w.letters[1:]))
    # normalization is idempotent and inversion is involutive
    assert Word.of(w.letters) == w
    assert w.inverse().inverse() == w
    H = build_H(4, enumerate_primitive(PrimePower(2, 2))[0])
    assert H.mul(eval_word(H, w), eval_word(H, w.inverse())) == 0
