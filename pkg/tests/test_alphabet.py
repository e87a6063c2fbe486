import pytest

from fock_energy.alphabet import (
    EVEN,
    ODD,
    Alphabet,
    AlphabetError,
    letter_id,
    parse_alphabet_spec,
    parse_letter_id,
    pi_dual,
    preset,
    star,
)


def test_finite_presets():
    three = preset("[3]")
    assert three.ids == ("1", "2", "3")
    assert all(l.parity == EVEN for l in three)
    neg = preset("[-2]'")
    assert neg.ids == ("-2'", "-1'")
    assert all(l.parity == ODD for l in neg)


def test_window_clipping():
    a = preset("primed-nonneg", (-5, 2))
    assert a.ids == ("0'", "1'", "2'")
    assert a.window == (0, 2)
    with pytest.raises(AlphabetError):
        preset("neg", (1, 4))
    with pytest.raises(AlphabetError):
        preset("pos")


def test_rank_and_order():
    b = preset("primed-neg", (-3, -1))
    assert [b.rank(x) for x in b.ids] == [0, 1, 2]
    assert b.compare("-3'", "-1'") < 0
    assert b.is_odd("-2'")
    with pytest.raises(AlphabetError):
        b.rank("5")


def test_letter_ids_round_trip():
    for v in (-4, 0, 7):
        for primed in (False, True):
            assert parse_letter_id(letter_id(v, primed)) == (v, primed)
    with pytest.raises(AlphabetError):
        parse_letter_id("x'")


def test_pi_dual_reverses_and_is_an_involution():
    a = parse_alphabet_spec("p/even,q/odd,r/even")
    d = pi_dual(a)
    assert d.ids == ("r", "q", "p")
    assert d.parity("q") == ODD
    assert pi_dual(d) == a


def test_star_concatenates_disjoint_alphabets():
    a, b = preset("[2]"), preset("[-2]'")
    s = star(a, b)
    assert s.ids == a.ids + b.ids
    assert s.rank("-2'") == 2
    with pytest.raises(AlphabetError):
        star(a, a)


def test_json_round_trip():
    for alph in (preset("primed-neg", (-4, -1)), parse_alphabet_spec("u/odd,v/even"), preset("[3]")):
        assert Alphabet.from_json(alph.to_json()) == alph
    rev = pi_dual(preset("nonneg", (0, 2)))
    assert Alphabet.from_json(rev.to_json()) == rev


@pytest.mark.parametrize("text", ["bogus", "nonneg:3", "a/weird", "pos:x..y"])
def test_bad_specs(text):
    with pytest.raises(AlphabetError):
        parse_alphabet_spec(text)
