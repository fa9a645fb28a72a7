"""Todd-Coxeter enumeration: orders, generator orders, determinism."""

import pytest

from regmaps.construct import build_G, build_relators, expected_order, param_sets
from regmaps.cosetenum import (CosetTable, Presentation, enumerate_cosets,
                               order_of_generator)
from regmaps.grp import Word, commutator, element_order, hom_extend

x, y = Word.gen("x"), Word.gen("y")


def test_trivial_group():
    table = enumerate_cosets(Presentation.of([x, y]), 100)
    assert table.complete and table.order == 1


def test_known_small_groups():
    s3 = enumerate_cosets(Presentation.of([x ** 2, y ** 3, (x * y) ** 2]), 100)
    assert s3.order == 6
    q8 = enumerate_cosets(
        Presentation.of([x ** 4, x ** 2 * y ** -2, y ** -1 * x * y * x]), 100)
    assert q8.order == 8
    c2xc3 = enumerate_cosets(Presentation.of([x ** 2, y ** 3, commutator(x, y)]), 100)
    assert c2xc3.order == 6


def test_long_power_relators():
    d = enumerate_cosets(Presentation.of([x ** 2, y ** 300, (x * y) ** 2]), 10000)
    assert d.order == 600
    assert order_of_generator(d, "y") == 300
    assert order_of_generator(d, "x") == 2


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation.of([])
    with pytest.raises(ValueError):
        enumerate_cosets(Presentation.of([Word()]), 10)
    with pytest.raises(ValueError):
        enumerate_cosets(Presentation.of([x]), 0)


def test_spec_example_5_3():
    """Thm 4.3(I) presentation for q=5, t=3 closes at 60."""
    for ps in param_sets(5, 3):
        table = enumerate_cosets(Presentation.of(build_relators(ps)), 1200)
        assert table.complete and table.order == 60
        assert order_of_generator(table, "y") == 12


def test_spec_example_q4_case_b():
    """Prop 6.1 presentation for t=4, (a, e) = (0, 2) closes at 48."""
    ps = [p for p in param_sets(4, 4) if p.variant == "q4B" and p.a == 0][0]
    table = enumerate_cosets(Presentation.of(build_relators(ps)), 1000)
    assert table.complete and table.order == 48


def test_generator_order_example_7_3():
    """ord(x) = ell*t/gcd(a, t) = 9 for q=7, t=3."""
    ps = param_sets(7, 3)[0]
    table = enumerate_cosets(Presentation.of(build_relators(ps)), 2600)
    assert table.order == 126
    assert order_of_generator(table, "x") == 9
    assert order_of_generator(table, "y") == 18


def test_trivial_generator_order():
    table = enumerate_cosets(Presentation.of([x, y]), 10)
    assert order_of_generator(table, "x") == 1


def test_inconclusive_on_tiny_limit():
    table = enumerate_cosets(Presentation.of([x ** 2, y ** 300, (x * y) ** 2]), 50)
    assert table.status == "exceeded-limit"
    assert table.order is None
    with pytest.raises(ValueError):
        table.group_model()
    with pytest.raises(ValueError):
        order_of_generator(table, "x")


def test_determinism():
    rels = build_relators(param_sets(8, 2)[0])
    t1 = enumerate_cosets(Presentation.of(rels), 2240)
    t2 = enumerate_cosets(Presentation.of(rels), 2240)
    assert t1.rows == t2.rows


def test_q4b_e_relator_is_redundant():
    """Dropping the commutator relator containing e leaves the order at
    12t for the quaternion case (the paper's remark)."""
    ps = [p for p in param_sets(4, 8) if p.variant == "q4B"][0]
    rels = build_relators(ps)
    with_e = enumerate_cosets(Presentation.of(rels), 2000)
    without_e = enumerate_cosets(Presentation.of(rels[:-1]), 2000)
    assert with_e.order == without_e.order == 96


def test_invalid_parameters_do_not_fake_the_profile():
    """For deliberately wrong parameter tuples: if enumeration closes,
    the order or the generator orders differ from the valid profile."""
    from dataclasses import replace
    ps = param_sets(5, 3)[0]
    for wrong_c in range(3):
        if wrong_c == ps.c:
            continue
        table = enumerate_cosets(
            Presentation.of(build_relators(replace(ps, c=wrong_c))), 1200)
        if table.complete:
            assert (table.order != 60 or order_of_generator(table, "y") != 12)
    # wrong parity of t for odd q: a=(t-1)/2 needs odd t; fake an even-t tuple
    ps2 = replace(param_sets(7, 3)[0], t=2)
    table = enumerate_cosets(Presentation.of(build_relators(ps2)), 1700)
    if table.complete:
        assert table.order != 7 * 6 * 2 or order_of_generator(table, "y") != 12


def test_coset_group_model_matches_concrete_construction():
    """The coset-table model and the concrete model are isomorphic via
    the canonical generators."""
    for qt in [(5, 3), (8, 2), (3, 5), (4, 4)]:
        for ps in param_sets(*qt):
            order = expected_order(ps)
            table = enumerate_cosets(Presentation.of(build_relators(ps)),
                                     20 * order)
            assert table.order == order
            model = table.group_model()
            concrete = build_G(ps)
            assert hom_extend(model, concrete,
                              concrete.gen_x, concrete.gen_y) is not None


def test_group_model_multiplication():
    table = enumerate_cosets(Presentation.of([x ** 2, y ** 3, (x * y) ** 2]), 100)
    G = table.group_model()
    assert element_order(G, G.gen_x) == 2
    assert element_order(G, G.gen_y) == 3
    for a in G.elements:
        assert G.mul(a, G.inv(a)) == G.identity
        assert G.mul(a, G.identity) == a
        assert G.mul(G.identity, a) == a


def test_text_roundtrip():
    pres = Presentation.of(build_relators(param_sets(5, 3)[0]))
    text = pres.to_text()
    again = Presentation.from_text(text)
    assert again == pres
    withcomments = "# a comment\n\n" + text
    assert Presentation.from_text(withcomments) == pres
