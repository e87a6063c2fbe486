from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fock_energy.alphabet import parse_alphabet_spec, pi_dual, preset
from fock_energy.tableau import (
    Partition,
    SuperTableau,
    TableauError,
    col_insert,
    enumerate_sst,
    glue,
    key_tableau,
    rho_col,
    rho_col_inverse,
    rho_row,
    rho_row_inverse,
    row_insert,
    split,
    validate,
    weight,
    word_col,
    word_row,
)

MIXED = parse_alphabet_spec("a/even,b/odd,c/even,d/odd")


def brute_sst(alph, outer, inner=()):
    """Every filling of the cells, kept when it passes a direct rule check."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    rank = {x: k for k, x in enumerate(alph.ids)}
    out = []
    for fill in product(alph.ids, repeat=len(cells)):
        grid = dict(zip(cells, fill))
        ok = True
        for (i, j), x in grid.items():
            right, below = grid.get((i, j + 1)), grid.get((i + 1, j))
            if right is not None and (rank[right] < rank[x] or (right == x and alph.is_odd(x))):
                ok = False
            if below is not None and (rank[below] < rank[x] or (below == x and not alph.is_odd(x))):
                ok = False
        if ok:
            out.append(fill)
    return out


@pytest.mark.parametrize("outer,inner", [((2, 1), ()), ((3,), ()), ((2, 2), (1,)), ((1, 1, 1), ()), ((3, 1), (2,))])
def test_enumeration_matches_brute_force(outer, inner):
    got = list(enumerate_sst(MIXED, outer, inner))
    assert len(got) == len(brute_sst(MIXED, outer, inner))
    assert all(validate(t) for t in got)
    assert len({t.rows for t in got}) == len(got)


def test_classical_counts():
    # dimension of the GL_3 module of shape (2,1) and of sym^2
    assert len(list(enumerate_sst(preset("[3]"), (2, 1)))) == 8
    assert len(list(enumerate_sst(preset("[3]"), (2,)))) == 6
    # odd letters: exterior powers instead
    assert len(list(enumerate_sst(preset("[3]'"), (2,)))) == 3


def test_parity_rules():
    assert validate(SuperTableau(MIXED, [["a", "a"], ["b"]]))
    assert not validate(SuperTableau(MIXED, [["b", "b"]]))
    assert validate(SuperTableau(MIXED, [["b"], ["b"]]))
    assert not validate(SuperTableau(MIXED, [["a"], ["a"]]))


def test_shape_errors():
    with pytest.raises(TableauError):
        SuperTableau(MIXED, [["a"], ["a", "b"]])
    with pytest.raises(TableauError):
        SuperTableau(MIXED, [["z"]])
    with pytest.raises(TableauError):
        Partition((1, 2))


def test_reading_words():
    t = SuperTableau(preset("[3]"), [["1", "1", "2"], ["2", "3"]])
    assert word_row(t) == ("2", "3", "1", "1", "2")
    assert word_col(t) == ("2", "1", "3", "1", "2")
    assert weight(t) == {"1": 2, "2": 2, "3": 1}


def test_worked_column_insertion_example():
    b_dual = pi_dual(preset("primed-neg", (-9, -1)))
    rows = [["-3'", "-4'"], ["-1'", "-2'", "-4'"], ["-1'", "-2'"]]
    p, q = rho_col([SuperTableau(b_dual, [r]) for r in rows])
    assert p.rows == (("-1'", "-2'", "-3'", "-4'"), ("-1'", "-2'", "-4'"))
    assert q.rows == (("1", "1", "2", "2"), ("2", "3", "3"))
    back = rho_col_inverse(p, q, 3)
    assert [t.rows[0] for t in back] == [tuple(r) for r in rows]


def test_worked_row_insertion_example():
    three = preset("[3]")
    rows = [["1", "1"], ["2"], ["1", "1"]]
    p, q = rho_row([SuperTableau(three, [r]) for r in rows])
    assert p.rows == (("1", "1", "1", "1"), ("2",))
    assert q.rows == (("1", "1", "2", "3"), ("3",))


row_words = st.lists(st.lists(st.sampled_from(range(4)), max_size=4), min_size=1, max_size=4)


def _rows(words):
    out = []
    for w in words:
        # make each word a semistandard row over MIXED: sort, drop repeated odd letters
        w = sorted(w)
        row = [x for k, x in enumerate(w) if not (k and x == w[k - 1] and x % 2 == 1)]
        out.append(SuperTableau.from_keys(MIXED, [row]) if row else SuperTableau(MIXED, []))
    return out


@settings(max_examples=150, deadline=None)
@given(row_words)
def test_rho_row_round_trip(words):
    tabs = _rows(words)
    p, q = rho_row(tabs)
    assert validate(p) and validate(q)
    content = sum((weight(t) for t in tabs), start=weight(SuperTableau(MIXED, [])))
    assert weight(p) == content
    assert [t.rows for t in rho_row_inverse(p, q, len(tabs))] == [t.rows for t in tabs]


@settings(max_examples=150, deadline=None)
@given(row_words)
def test_rho_col_round_trip(words):
    tabs = _rows(words)
    p, q = rho_col(tabs)
    assert validate(p) and validate(q)
    assert [t.rows for t in rho_col_inverse(p, q, len(tabs))] == [t.rows for t in tabs]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(MIXED.ids), max_size=7))
def test_single_insertions_stay_semistandard(word):
    t = SuperTableau(MIXED, [])
    u = SuperTableau(MIXED, [])
    for x in word:
        t = row_insert(t, x)
        u = col_insert(u, x)
        assert validate(t) and validate(u)
    assert t.size == u.size == len(word)


def test_insertion_rejects_bad_input():
    with pytest.raises(TableauError):
        row_insert(SuperTableau(MIXED, [["b", "b"]]), "a")
    with pytest.raises(TableauError):
        rho_row_inverse(SuperTableau(MIXED, [["a"]]), SuperTableau(preset("[2]"), [["3"]]), 2)


def test_glue_and_split():
    a = parse_alphabet_spec("u/odd,v/even")
    b = parse_alphabet_spec("w/even")
    s = SuperTableau(a, [["u", "v"], ["v"]])
    t = SuperTableau(b, [["w"], ["w"]], inner=(2, 1))
    g = glue(s, t)
    assert validate(g)
    s2, t2 = split(g, a, b)
    assert s2.rows == s.rows and t2.rows == t.rows


def test_key_tableau():
    assert key_tableau((3, 1), 3).rows == (("1", "1", "1"), ("2",))
    with pytest.raises(TableauError):
        key_tableau((1, 1, 1), 2)
