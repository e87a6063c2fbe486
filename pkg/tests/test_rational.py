from fractions import Fraction
from itertools import product

import pytest

from fock_energy.rational import (
    RationalError,
    RationalTableau,
    delta,
    delta_keys,
    enumerate_rational,
    gen_partition,
    sigma,
    sigma_inverse,
    sigma_power,
    validate_rational,
)

# Q of the worked RSK example: shape (4,3,0) over [3]
Q_EX = RationalTableau.from_rows(3, [(1, 1, 2, 2), (2, 3, 3)])


def weyl_dimension(lam):
    n = len(lam)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(out)


def shapes(n, lo, hi):
    for lam in product(range(hi, lo - 1, -1), repeat=n):
        if all(lam[i] >= lam[i + 1] for i in range(n - 1)):
            yield lam


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_weyl_dimension(n):
    for lam in shapes(n, -2, 2):
        tabs = list(enumerate_rational(n, lam))
        assert len(tabs) == weyl_dimension(lam), lam
        assert all(validate_rational(t) for t in tabs)
        assert len({(t.pos_rows, t.neg_rows) for t in tabs}) == len(tabs)


def test_sigma_inverse_of_worked_example():
    s = sigma_power(Q_EX, -4)
    assert s.shape == (0, -1, -4)
    assert s.pos_rows == ((), (), ())
    assert s.neg_rows == ((), (-3,), (-3, -2, -1, -1))


def test_delta_of_worked_example():
    d = delta(Q_EX, 4)
    assert d.pos_rows == ((1, 1, 2, 3), (3,), ())
    assert d.weight() == (2, 1, 2)


def test_delta_column_formula_agrees():
    for lam in shapes(3, 0, 3):
        for t in enumerate_rational(3, lam):
            for d in range(lam[0], lam[0] + 2):
                rows = [list(r) for r in t.pos_rows if r]
                got = [tuple(r) for r in delta_keys(rows, 3, d)]
                want = [r for r in delta(t, d).pos_rows if r]
                assert got == want


@pytest.mark.parametrize("lam", [(2, 0, -1), (1, 1, -2), (0, -1, -1), (3, 1, 0)])
def test_sigma_is_invertible(lam):
    for t in enumerate_rational(3, lam):
        assert sigma(sigma_inverse(t)) == t
        assert sigma_inverse(sigma(t)) == t
        assert sigma(t).shape == tuple(x + 1 for x in lam)


def test_weight_and_shape_shift_together():
    for t in enumerate_rational(2, (1, -1)):
        w = t.weight()
        assert sigma(t).weight() == (w[0] + 1, w[1] + 1)


def test_reading_word_and_refill():
    t = sigma_power(Q_EX, -4)
    assert t.word() == (-3, -1, -1, -2, -3)
    assert t.with_word(t.word()) == t


def test_invalid_tableaux():
    assert not validate_rational(RationalTableau.from_rows(2, [(2, 1)]))
    assert not validate_rational(RationalTableau.from_rows(2, [(3,)]))
    # column 1 holding 1 next to column -1 holding -1 is the one bad filling of (1,-1)
    assert not validate_rational(RationalTableau.from_rows(2, [(1,)], [(), (-1,)]))
    assert validate_rational(RationalTableau.from_rows(2, [(1,)], [(), (-2,)]))
    with pytest.raises(RationalError):
        RationalTableau(2, (1, 0), ((1, 2),), ())
    with pytest.raises(RationalError):
        delta(Q_EX, 3)


def test_json_round_trip():
    for t in enumerate_rational(3, (1, 0, -2)):
        assert RationalTableau.from_json(t.to_json()) == t
    with pytest.raises(RationalError):
        RationalTableau.from_json({"n": 2})


def test_gen_partition():
    assert gen_partition([2, -1], 2) == (2, -1)
    with pytest.raises(RationalError):
        gen_partition((2, -1), 3)
    with pytest.raises(RationalError):
        gen_partition((0, 1), 2)
