"""Acceptance criteria 1-10; each test prints one PASS/FAIL line.

The exhaustive window runs (criteria 4, 5 and 10) are marked slow and take
several minutes on one core.
"""

import time

import pytest

from conftest import ACCEPTANCE
from fock_energy import crystal
from fock_energy.energy import global_D, local_H, r_matrix
from fock_energy.psst import kappa, kappa_inverse
from fock_energy.rational import RationalTableau, delta, sigma_power
from fock_energy.symfunc import kostka_foulkes_charge, kostka_foulkes_hl, sst_with_weight
from fock_energy.poly import QPoly
from fock_energy.verify import VerifyConfig, run_suite


def record(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def suite_detail(results) -> str:
    parts = []
    for r in results:
        rank = f" n={r.params['n']}" if "n" in r.params else ""
        parts.append(f"{r.suite}{rank}: {r.cases} cases, {r.failure_count} violations, {r.seconds:.1f}s")
    return "; ".join(parts)


def window_runs(suite: str):
    return [run_suite(suite, VerifyConfig(ns=(n,))) for n in (2, 3)]


def test_criterion_01_rsk_example(example_tuple):
    start = time.perf_counter()
    p, q = kappa(example_tuple)
    back = kappa_inverse(p, q)
    elapsed = time.perf_counter() - start
    want_q = RationalTableau.from_rows(3, [(1, 1, 1, 2, 2), (3,)], [(), (), (-3, -2)])
    ok = (
        p.shape == (5, 1, -2)
        and p.plus.rows == (("2'", "4'", "5'", "6'", "7'"), ("0'", "3'", "4'", "5'"), ("0'", "1'"))
        and p.minus.rows == ((), ("-4'", "-2'", "-1'"), ("-4'", "-3'", "-2'", "-1'"))
        and q == want_q
        and back.to_json() == example_tuple.to_json()
        and elapsed < 1.0
    )
    record(1, ok, f"shape {p.shape}, inverse exact, {elapsed * 1000:.1f} ms")


def test_criterion_02_energy_example(example_tuple):
    start = time.perf_counter()
    t1, t2, t3 = example_tuple.entries
    a, b = example_tuple.a, example_tuple.b
    t2p, _ = r_matrix(t2, t3, a, b)
    values = (local_H(t2, t3, a, b), local_H(t1, t2, a, b), local_H(t1, t2p, a, b))
    d = global_D(example_tuple)
    ch = crystal.charge(kappa(example_tuple)[1].word(), 3)
    elapsed = time.perf_counter() - start
    ok = values == (0, -2, -2) and d == -4 and ch == 4 and d == -ch and elapsed < 1.0
    record(2, ok, f"H = {values}, D = {d}, charge(Q) = {ch}, {elapsed * 1000:.1f} ms")


def test_criterion_03_sigma_and_delta():
    q = RationalTableau.from_rows(3, [(1, 1, 2, 2), (2, 3, 3)])
    s = sigma_power(q, -4)
    dq = delta(q, 4)
    ok = (
        s.shape == (0, -1, -4)
        and s.neg_rows == ((), (-3,), (-3, -2, -1, -1))
        and dq.pos_rows == ((1, 1, 2, 3), (3,), ())
    )
    record(3, ok, f"sigma^-4 shape {s.shape}, delta_4 rows {[r for r in dq.pos_rows if r]}")


@pytest.mark.slow
def test_criterion_04_energy_equals_minus_charge():
    runs = window_runs("energy-charge")
    n3 = runs[1]
    ok = all(r.passed for r in runs) and n3.seconds < 300
    record(4, ok, suite_detail(runs))


@pytest.mark.slow
def test_criterion_05_crystal_isomorphism():
    runs = window_runs("crystal-isom")
    record(5, all(r.passed for r in runs), suite_detail(runs))


def test_criterion_06_charge_statistics():
    res = run_suite("charge")
    record(6, res.passed and res.cases == 887, suite_detail([res]))


def test_criterion_07_kostka_foulkes():
    res = run_suite("kf-equivalence")
    k = kostka_foulkes_charge((2, 1, 0), (1, 1, 1), 3)
    hl = kostka_foulkes_hl((2, 1, 0), (1, 1, 1), 3)
    want = QPoly.from_list([0, 1, 1])
    count = len(sst_with_weight((2, 1, 0), (1, 1, 1), 3))
    ok = res.passed and k == want and hl == want and k(1) == count == 2
    record(7, ok, suite_detail([res]) + f"; K_(2,1),(1,1,1) = {k}")


def test_criterion_08_cauchy_identity():
    res = run_suite("cauchy")
    record(8, res.passed, suite_detail([res]))


def test_criterion_09_graded_character():
    res = run_suite("q-character")
    record(9, res.passed, suite_detail([res]))


@pytest.mark.slow
def test_criterion_10_structural_suites():
    runs = window_runs("rmatrix-braid")
    record(10, all(r.passed for r in runs), suite_detail(runs))
