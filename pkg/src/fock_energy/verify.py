"""Exhaustive identity checks over finite windows.

Each suite walks every case in its window, compares two independent
computations and returns a :class:`SuiteResult` holding the first few
counterexamples.  ``inject`` corrupts one computed value per work chunk so the
reporting path can be exercised.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from . import crystal
from .alphabet import Alphabet, parse_alphabet_spec, preset
from .energy import EnergyError, Pairing
from .psst import (
    Bound,
    FockTuple,
    PsstError,
    enumerate_psst,
    kappa,
    kappa_inverse,
    kappa_keys,
    level1_keys,
)
from .rational import enumerate_rational
from .symfunc import (
    Q_char_energy,
    Q_char_kostka,
    cauchy_product,
    cauchy_sum,
    dominated_weights,
    kostka_foulkes_charge,
    kostka_row_hl,
    sst_with_weight,
)

SUITES = (
    "bijection",
    "energy-charge",
    "crystal-isom",
    "rmatrix-braid",
    "charge",
    "kf-equivalence",
    "cauchy",
    "q-character",
)


@dataclass
class VerifyConfig:
    a: Alphabet = field(default_factory=lambda: preset("primed-nonneg", (0, 3)))
    b: Alphabet = field(default_factory=lambda: preset("primed-neg", (-3, -1)))
    ns: tuple[int, ...] = (2, 3)
    max_boxes: int = 4  # per level-1 entry
    sample: int | None = None  # random subset of this size per n
    seed: int = 0
    threads: int | None = None
    inject: bool = False
    max_failures: int = 5


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.cases > 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": self.cases,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "params": self.params,
        }


def thread_count(requested: int | None = None) -> int:
    env = os.environ.get("FOCK_ENERGY_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            pass
    return max(1, min(requested or cap, cap))


# ---------------------------------------------------------------------------
# per-tuple checks; each returns a list of (label, expected, actual) mismatches


class _Checker:
    def __init__(self, a: Alphabet, b: Alphabet, n: int, inject: bool):
        self.a, self.b, self.n = a, b, n
        self.pr = Pairing(a, b)
        self.odd_a = a.odd_ranks()
        self.odd_bpi = frozenset(-r for r in b.odd_ranks())
        self.inject = inject
        self._charge: dict = {}

    def corrupt(self, value):
        # flips once, then behaves
        if self.inject:
            self.inject = False
            if isinstance(value, int):
                return value + 1
            return None if value is not None else ()
        return value

    def charge_of(self, q) -> int:
        c = self._charge.get(q)
        if c is None:
            c = self._charge[q] = crystal.charge(q.word(), self.n)
        return c

    def energy_charge(self, t) -> list:
        n = self.n
        _, _, _, _, q = kappa_keys(t, n, self.odd_a, self.odd_bpi)
        d_val = self.corrupt(self.pr.global_D(t))
        out = []
        ch = self.charge_of(q)
        if d_val != -ch:
            out.append(("D = -charge(Q)", -ch, d_val))
        roots = self.pr.D_via_roots(t)
        if roots != d_val:
            out.append(("D = root sum", d_val, roots))
        direct = self.pr.global_D_direct(t)
        if direct != d_val:
            out.append(("D incremental = D direct", direct, d_val))
        return out

    def crystal_isom(self, t) -> list:
        n = self.n
        d, mu, tp, tm, q = kappa_keys(t, n, self.odd_a, self.odd_bpi)
        qword = q.word()
        out = []
        for j in range(1, n):
            for name, op in (("e", crystal.e_tilde), ("f", crystal.f_tilde)):
                moved = self.corrupt(self.pr.crystal_op(t, name, j))
                w = op(qword, j)
                label = f"{name}_{j}"
                if (moved is None) != (w is None):
                    out.append((label + " null cases", w is None, moved is None))
                    continue
                if moved is None:
                    continue
                d2, mu2, tp2, tm2, q2 = kappa_keys(moved, n, self.odd_a, self.odd_bpi)
                if (d2, mu2, tp2, tm2) != (d, mu, tp, tm):
                    out.append((label + " keeps P", (d, mu, tp, tm), (d2, mu2, tp2, tm2)))
                if q2 != q.with_word(w):
                    out.append((label + " acts on Q", q.with_word(w).to_json(), q2.to_json()))
        return out

    def rmatrix_braid(self, t) -> list:
        n, pr = self.n, self.pr
        out = []
        word, _ = pr.tuple_word(t)
        d0 = pr.global_D(t)
        for i in range(1, n):
            try:
                s = pr.r_matrix_at(t, i)
                back = pr.r_matrix_at(s, i)
                h = pr.local_H(t[i - 1], t[i])
            except EnergyError as exc:
                out.append((f"lemma at {i}", "phi - eps = k1 - k2", str(exc)))
                continue
            s = self.corrupt(s)
            if back != t:
                out.append((f"involution {i}", t, back))
            via_s = pr.crystal_op(t, "S", i)
            if via_s != s:
                out.append((f"R_{i} = S_{i}", via_s, s))
            minus, plus = crystal.unmatched(word, i)
            if h != -min(len(minus), len(plus)):
                out.append((f"H_{i} = -min(eps, phi)", -min(len(minus), len(plus)), h))
            if s is not None and pr.global_D(s) != d0:
                out.append((f"D invariant under R_{i}", d0, pr.global_D(s)))
        for i in range(1, n - 1):
            left = pr.r_matrix_at(pr.r_matrix_at(pr.r_matrix_at(t, i), i + 1), i)
            right = pr.r_matrix_at(pr.r_matrix_at(pr.r_matrix_at(t, i + 1), i), i + 1)
            if left != right:
                out.append((f"braid {i},{i + 1}", left, right))
        for i in range(1, n):
            for k in range(i + 2, n):
                x = pr.r_matrix_at(pr.r_matrix_at(t, i), k)
                y = pr.r_matrix_at(pr.r_matrix_at(t, k), i)
                if x != y:
                    out.append((f"commute {i},{k}", x, y))
        return out

    def bijection(self, t) -> list:
        ft = FockTuple.from_keys(self.a, self.b, t)
        out = []
        try:
            p, q = kappa(ft)
        except PsstError as exc:
            return [("kappa defined", "ok", str(exc))]
        if not p.is_valid():
            out.append(("P semistandard", True, False))
        if p.weight_AB() != ft.weight_AB():
            out.append(("A/B weight kept", dict(ft.weight_AB()), dict(p.weight_AB())))
        if q.weight() != ft.weight_n():
            out.append(("[n] weight kept", ft.weight_n(), q.weight()))
        back = self.corrupt(kappa_inverse(p, q))
        if back != ft:
            out.append(("inverse restores", ft.to_json(), None if back is None else back.to_json()))
        return out


_CHECKS = {
    "energy-charge": _Checker.energy_charge,
    "crystal-isom": _Checker.crystal_isom,
    "rmatrix-braid": _Checker.rmatrix_braid,
    "bijection": _Checker.bijection,
}


def _tuple_json(a: Alphabet, b: Alphabet, t) -> list:
    return FockTuple.from_keys(a, b, t).to_json()


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, list):
        return [_plain(y) for y in x]
    return x


def _run_chunk(args) -> tuple[int, int, list]:
    suite, a, b, n, singles, firsts, sample, inject, max_failures = args
    checker = _Checker(a, b, n, inject)
    check = _CHECKS[suite]
    cases = bad = 0
    fails: list = []
    if sample is not None:
        tuples: Iterable = (tuple(singles[i] for i in idx) for idx in sample)
    else:
        tuples = ((singles[f],) + rest for f in firsts for rest in product(singles, repeat=n - 1))
    for t in tuples:
        cases += 1
        problems = check(checker, t)
        if problems:
            bad += 1
            if len(fails) < max_failures:
                fails.append({
                    "tuple": _tuple_json(a, b, t),
                    "checks": [{"check": l, "expected": _plain(e), "actual": _plain(v)} for l, e, v in problems],
                })
    return cases, bad, fails


def _blocks(items: list, parts: int) -> list[list]:
    size = -(-len(items) // max(1, parts)) or 1
    return [items[k:k + size] for k in range(0, len(items), size)] or [[]]


def _tuple_suite(suite: str, cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult(suite, params={
        "A": cfg.a.to_json(), "B": cfg.b.to_json(), "n": list(cfg.ns),
        "max_boxes_per_entry": cfg.max_boxes, "sample": cfg.sample, "seed": cfg.seed,
    })
    singles = level1_keys(cfg.a, cfg.b, cfg.max_boxes)
    threads = thread_count(cfg.threads)
    rng = random.Random(cfg.seed)
    jobs = []
    for n in cfg.ns:
        # contiguous blocks, so concatenating job results reproduces the serial order
        if cfg.sample is not None:
            idx = [tuple(rng.randrange(len(singles)) for _ in range(n)) for _ in range(cfg.sample)]
            blocks = [(None, part) for part in _blocks(idx, threads)]
        else:
            blocks = [(part, None) for part in _blocks(list(range(len(singles))), threads)]
        for firsts, sample in blocks:
            inject = cfg.inject and not jobs
            jobs.append((suite, cfg.a, cfg.b, n, singles, firsts, sample, inject, cfg.max_failures))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_chunk, jobs))
    else:
        results = [_run_chunk(j) for j in jobs]
    for cases, bad, fails in results:
        res.cases += cases
        res.failure_count += bad
        res.failures.extend(fails)
    res.failures = res.failures[: cfg.max_failures]
    return res


# ---------------------------------------------------------------------------
# suites that are not per-tuple


def _dominant_words(n: int, max_len: int) -> Iterable[tuple[int, ...]]:
    for length in range(max_len + 1):
        for w in product(range(1, n + 1), repeat=length):
            if crystal.is_dominant(crystal.weight(w, n)):
                yield w


def _charge_suite(cfg: VerifyConfig, n: int = 3, max_len: int = 7) -> SuiteResult:
    res = SuiteResult("charge", params={"n": n, "max_length": max_len})
    inject = cfg.inject
    for w in _dominant_words(n, max_len):
        res.cases += 1
        ls = crystal.charge_LS(w, n)
        if inject and ls:
            ls, inject = ls + 1, False
        roots = crystal.charge(w, n)
        if ls != roots:
            res.failure_count += 1
            if len(res.failures) < cfg.max_failures:
                res.failures.append({"word": list(w), "charge_LS": ls, "root_sum": roots})
    return res


def _partitions(n: int, max_size: int) -> list[tuple[int, ...]]:
    """Partitions with at most n parts (padded with zeros) and size <= max_size."""
    out = []

    def rec(i, cap, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        for x in range(min(cap, left), -1, -1):
            acc.append(x)
            rec(i + 1, x, left - x, acc)
            acc.pop()

    for size in range(max_size + 1):
        rec(0, size, size, [])
    return out


def _kf_suite(cfg: VerifyConfig, n: int = 3, max_size: int = 6) -> SuiteResult:
    res = SuiteResult("kf-equivalence", params={"n": n, "max_size": max_size})
    inject = cfg.inject
    for lam in _partitions(n, max_size):
        row = kostka_row_hl(lam, n)
        below = dominated_weights(lam, n)
        for mu in below:
            res.cases += 1
            by_charge = kostka_foulkes_charge(lam, mu, n)
            by_hl = row.get(mu)
            if inject and by_hl is not None:
                by_hl, inject = by_hl + 1, False
            count = len(sst_with_weight(lam, mu, n))
            problems = []
            if by_hl is None or by_charge != by_hl:
                problems.append(("charge = Hall-Littlewood", str(by_charge), str(by_hl)))
            if by_charge(1) != count:
                problems.append(("K(1) = tableau count", count, by_charge(1)))
            if problems:
                res.failure_count += 1
                if len(res.failures) < cfg.max_failures:
                    res.failures.append({"lambda": list(lam), "mu": list(mu), "checks": problems})
        # the solve must not produce weights outside dominance order
        for mu in set(row) - set(below):
            res.failure_count += 1
            if len(res.failures) < cfg.max_failures:
                res.failures.append({"lambda": list(lam), "mu": list(mu), "checks": ["outside dominance"]})
    return res


CAUCHY_WINDOWS = (
    ("a/even", "", 1, 5),
    ("a/even,c/odd", "b/even", 2, 3),
    ("a1/even,a2/odd,a3/odd", "b1/even,b2/odd,b3/even", 2, 4),
    ("a1/odd,a2/even,a3/odd", "b1/odd,b2/even", 2, 4),
    ("a1/even,a2/odd", "b1/odd,b2/odd,b3/even", 1, 4),
)


def _alph(spec: str) -> Alphabet:
    return preset("empty") if not spec else parse_alphabet_spec(spec)


def _series_failures(res: SuiteResult, label: dict, lhs, rhs, cfg: VerifyConfig) -> None:
    res.cases += 1
    diff = lhs.diff(rhs)
    if diff:
        res.failure_count += 1
        if len(res.failures) < cfg.max_failures:
            res.failures.append({
                **label,
                "mismatches": [
                    {"monomial": lhs.mono_str(e), "sum_side": str(x), "product_side": str(y)} for e, x, y in diff[:5]
                ],
            })


def _cauchy_suite(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("cauchy", params={"windows": [list(w) for w in CAUCHY_WINDOWS]})
    inject = cfg.inject
    for sa, sb, n, box in CAUCHY_WINDOWS:
        a, b = _alph(sa), _alph(sb)
        lhs = cauchy_sum(a, b, n, box)
        if inject:
            e = next(iter(sorted(lhs.terms)))
            lhs = lhs + type(lhs)(lhs.variables, {e: 1})
            inject = False
        _series_failures(res, {"A": sa, "B": sb, "n": n, "box": box}, lhs, cauchy_product(a, b, n, box), cfg)
    return res


Q_WEIGHTS = ((1, 0), (1, 1), (2, 0), (2, -1))


def _q_suite(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("q-character", params={"windows": [list(w) for w in CAUCHY_WINDOWS], "mu": Q_WEIGHTS})
    inject = cfg.inject
    for sa, sb, n, box in CAUCHY_WINDOWS:
        a, b = _alph(sa), _alph(sb)
        for mu in Q_WEIGHTS:
            if len(mu) != n:
                continue
            lhs = Q_char_energy(mu, a, b, box)
            if inject and lhs.terms:
                e = next(iter(sorted(lhs.terms)))
                lhs = lhs + type(lhs)(lhs.variables, {e: 1})
                inject = False
            label = {"A": sa, "B": sb, "n": n, "box": box, "mu": list(mu)}
            _series_failures(res, label, lhs, Q_char_kostka(mu, a, b, box), cfg)
    return res


def _bijection_onto(cfg: VerifyConfig, res: SuiteResult, n: int = 2, max_boxes: int = 3) -> None:
    """kappa after kappa_inverse on every bounded pair (P, Q) of equal shape."""
    from .psst import shapes_nonempty

    bound = Bound(max_boxes=max_boxes)
    for lam in sorted(shapes_nonempty(cfg.a, cfg.b, n, bound)):
        qs = list(enumerate_rational(n, lam))
        for p in enumerate_psst(cfg.a, cfg.b, n, lam, bound):
            for q in qs:
                res.cases += 1
                try:
                    t = kappa_inverse(p, q)
                    ok = kappa(t) == (p, q)
                except PsstError as exc:
                    ok, t = False, str(exc)
                if not ok:
                    res.failure_count += 1
                    if len(res.failures) < cfg.max_failures:
                        res.failures.append({"P": p.to_json(), "Q": q.to_json(), "check": "kappa(kappa_inverse) = id"})


def run_suite(name: str, cfg: VerifyConfig | None = None) -> SuiteResult:
    cfg = cfg or VerifyConfig()
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    if name in _CHECKS:
        res = _tuple_suite(name, cfg)
        if name == "bijection" and cfg.sample is None:
            _bijection_onto(cfg, res)
    elif name == "charge":
        res = _charge_suite(cfg)
    elif name == "kf-equivalence":
        res = _kf_suite(cfg)
    elif name == "cauchy":
        res = _cauchy_suite(cfg)
    else:
        res = _q_suite(cfg)
    res.seconds = time.perf_counter() - start
    return res


def run_all(cfg: VerifyConfig | None = None, names: Sequence[str] = SUITES) -> list[SuiteResult]:
    return [run_suite(n, cfg) for n in names]
