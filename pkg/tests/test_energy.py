import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fock_energy import crystal as cr
from fock_energy import energy as en
from fock_energy.alphabet import parse_alphabet_spec, preset
from fock_energy.psst import FockTuple, Level1, enumerate_level1, kappa


def test_sign_sequences_of_worked_example(example_tuple):
    t1, t2, t3 = example_tuple.entries
    a, b = example_tuple.a, example_tuple.b
    assert en.sign_string(en.sign_sequence(t2, t3, a, b)) == "+ + - - + + - + - + -"
    assert en.sign_string(en.sign_sequence(t1, t2, a, b)) == "- - + + + - + + - + - - + +"
    eps, phi, reduced = en.reduce(en.sign_sequence(t2, t3, a, b))
    assert (eps, phi) == (0, 1)
    assert en.sign_string(reduced) == "+"


def test_local_energy_and_r_matrix_of_worked_example(example_tuple):
    t1, t2, t3 = example_tuple.entries
    a, b = example_tuple.a, example_tuple.b
    assert en.local_H(t2, t3, a, b) == 0
    t2p, t3p = en.r_matrix(t2, t3, a, b)
    assert t2p == Level1(("0'", "6'", "7'"), ("-4'", "-2'", "-1'"))
    assert t3p == Level1(("2'", "4'", "5'"), ("-2'", "-1'"))
    assert en.sign_string(en.sign_sequence(t1, t2p, a, b)) == "- - + + + + + - + - - + +"
    assert en.local_H(t1, t2, a, b) == -2
    assert en.local_H(t1, t2p, a, b) == -2


def test_global_energy_of_worked_example(example_tuple):
    assert en.energy_terms(example_tuple) == [(1, 2, -2), (1, 3, -2), (2, 3, 0)]
    assert en.global_D(example_tuple) == -4
    assert en.global_D_direct(example_tuple) == -4
    assert en.D_via_roots(example_tuple) == -4
    _, q = kappa(example_tuple)
    assert cr.charge(q.word(), 3) == 4


MIXED_A = parse_alphabet_spec("a1/even,a2/odd,a3/even")
MIXED_B = parse_alphabet_spec("b1/odd,b2/even")
POOL = list(enumerate_level1(MIXED_A, MIXED_B, 3))
entries = st.sampled_from(POOL)


def _tuple(es):
    return FockTuple(MIXED_A, MIXED_B, tuple(es))


def test_charge_lemma_on_all_pairs():
    pr = en.Pairing(MIXED_A, MIXED_B)
    keys = [en._entry(e, MIXED_A, MIXED_B) for e in POOL]
    for x in keys:
        for y in keys:
            eps, phi, _, _ = pr.reduce(x, y)
            k1, k2 = len(x[0]) - len(x[1]), len(y[0]) - len(y[1])
            assert phi - eps == k1 - k2


@settings(max_examples=200, deadline=None)
@given(entries, entries)
def test_r_matrix_swaps_charges_and_keeps_content(x, y):
    u, v = en.r_matrix(x, y, MIXED_A, MIXED_B)
    assert (u.k, v.k) == (y.k, x.k)
    assert Counter(x.plus + y.plus) == Counter(u.plus + v.plus)
    assert Counter(x.minus + y.minus) == Counter(u.minus + v.minus)
    assert en.r_matrix(u, v, MIXED_A, MIXED_B) == (x, y)
    assert en.local_H(u, v, MIXED_A, MIXED_B) == en.local_H(x, y, MIXED_A, MIXED_B)


@settings(max_examples=150, deadline=None)
@given(st.lists(entries, min_size=2, max_size=4))
def test_energy_forms_agree(es):
    ft = _tuple(es)
    d = en.global_D(ft)
    assert en.global_D_direct(ft) == d
    assert en.D_via_roots(ft) == d
    _, q = kappa(ft)
    assert d == -cr.charge(q.word(), ft.n)


@settings(max_examples=100, deadline=None)
@given(st.lists(entries, min_size=3, max_size=4))
def test_r_matrix_equals_reflection_and_keeps_energy(es):
    ft = _tuple(es)
    d = en.global_D(ft)
    for i in range(1, ft.n):
        moved = en.r_matrix_at(ft, i)
        assert moved == en.tuple_crystal_op(ft, "S", i)
        assert en.global_D(moved) == d


def test_cache_does_not_change_results():
    rng = random.Random(7)
    cached, plain = en.Pairing(MIXED_A, MIXED_B), en.Pairing(MIXED_A, MIXED_B, cache=False)
    keys = [en._entry(e, MIXED_A, MIXED_B) for e in POOL]
    for _ in range(300):
        t = tuple(rng.choice(keys) for _ in range(3))
        assert cached.global_D(t) == plain.global_D(t)
        assert cached.r_matrix_at(t, 1) == plain.r_matrix_at(t, 1)


@pytest.mark.parametrize("spec", ["[3]'", "[3]"])
def test_single_alphabet_energy_is_minus_min_eps_phi(spec):
    # with B empty the pair is an A_1 tensor product and H = -min(eps_1, phi_1)
    a, b = preset(spec), preset("empty")
    pool = list(enumerate_level1(a, b, 3))
    for x in pool:
        for y in pool:
            ft = FockTuple(a, b, (x, y))
            w = en.tuple_word(ft)
            assert en.local_H(x, y, a, b) == -min(cr.eps(w, 1), cr.phi(w, 1))


def test_tuple_crystal_operators(example_tuple):
    w = en.tuple_word(example_tuple)
    for j in (1, 2):
        moved = en.tuple_crystal_op(example_tuple, "f", j)
        assert (moved is None) == (cr.f_tilde(w, j) is None)
        if moved is not None:
            assert en.tuple_word(moved) == cr.f_tilde(w, j)
    with pytest.raises(en.EnergyError):
        en.tuple_crystal_op(example_tuple, "e", 3)


def test_matrix_round_trip(example_tuple):
    m = en.to_matrix(example_tuple)
    letters = [letter for letter, _ in m.rows]
    assert letters == ["-4'", "-3'", "-2'", "-1'", "0'", "1'", "2'", "3'", "4'", "5'", "6'", "7'"]
    assert m.row("-2'") == (0, 1, 1)
    assert m.row("9'") == (0, 0, 0)
    assert en.from_matrix(m) == example_tuple
    again = en.AbMatrix.from_json(m.to_json(), example_tuple.a, example_tuple.b, 3)
    assert again == m


def test_matrix_validation(example_tuple):
    a, b = example_tuple.a, example_tuple.b
    with pytest.raises(en.EnergyError):
        en.AbMatrix(a, b, 2, (("1'", (2, 0)),))
    with pytest.raises(en.EnergyError):
        en.AbMatrix(a, b, 2, (("1'", (1, 0)), ("1'", (0, 1))))
    with pytest.raises(en.EnergyError):
        en.AbMatrix(a, b, 2, (("zz", (1, 0)),))


def test_row_tableaux(example_tuple):
    m = en.to_matrix(example_tuple)
    col = en.row_tableau(m, "-2'")
    assert col.neg_rows == ((), (-3,), (-2,))
    row = en.row_tableau(m, "4'")
    assert row.pos_rows == ((1,), (3,), ())
    even = en.AbMatrix(MIXED_A, MIXED_B, 2, (("a1", (2, 1)), ("b2", (1, 1))))
    assert en.row_tableau(even, "a1").pos_rows == ((1, 1, 2), ())
    assert en.row_tableau(even, "b2").neg_rows == ((), (-2, -1))
