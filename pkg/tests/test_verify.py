import pytest

from fock_energy.alphabet import preset
from fock_energy.verify import SUITES, VerifyConfig, run_suite, thread_count

TUPLE_SUITES = ("bijection", "energy-charge", "crystal-isom", "rmatrix-braid")


def small(**kw):
    base = dict(a=preset("primed-nonneg", (0, 2)), b=preset("primed-neg", (-2, -1)), ns=(2, 3), max_boxes=2)
    base.update(kw)
    return VerifyConfig(**base)


@pytest.mark.parametrize("suite", TUPLE_SUITES)
def test_tuple_suites_pass_on_a_small_window(suite):
    res = run_suite(suite, small())
    assert res.passed, res.failures
    assert res.cases > 0


@pytest.mark.parametrize("suite", SUITES)
def test_injected_fault_is_reported(suite):
    cfg = small(ns=(2,), inject=True) if suite in TUPLE_SUITES else VerifyConfig(inject=True)
    res = run_suite(suite, cfg)
    assert not res.passed
    assert res.failure_count >= 1
    assert res.failures, "a failing run must dump a counterexample"


def test_sampling_is_seeded():
    a = run_suite("energy-charge", small(sample=40, seed=3)).to_json()
    b = run_suite("energy-charge", small(sample=40, seed=3)).to_json()
    a.pop("seconds"), b.pop("seconds")
    assert a == b
    assert a["cases"] == 80


def test_parallel_merge_matches_serial(monkeypatch):
    serial = run_suite("crystal-isom", small(ns=(2,), inject=True, threads=1)).to_json()
    monkeypatch.setenv("FOCK_ENERGY_THREADS", "2")
    assert thread_count(2) == 2
    parallel = run_suite("crystal-isom", small(ns=(2,), inject=True, threads=2)).to_json()
    serial.pop("seconds"), parallel.pop("seconds")
    assert serial == parallel


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("FOCK_ENERGY_THREADS", "1")
    assert thread_count(8) == 1
    monkeypatch.setenv("FOCK_ENERGY_THREADS", "junk")
    assert thread_count(1) == 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
