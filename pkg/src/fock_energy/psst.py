"""Parabolically semistandard tableaux and the RSK-type bijection kappa.

Internally every step runs on integer keys:

* letters of A keep their rank (0, 1, ...),
* letters j of [n] become ``j - n - 1`` so they sit below every A key,
* letters of B become ``-rank`` which realises the reversed order of B.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .alphabet import Alphabet, pi_dual
from .rational import RationalTableau, delta_keys, gen_partition, sigma_power, validate_rational
from .tableau import (
    Partition,
    SuperTableau,
    TableauError,
    enumerate_keys,
    padded,
    rho_col_inverse_keys,
    rho_col_keys,
    rho_row_inverse_keys,
    rho_row_keys,
    validate_keys,
)


class PsstError(ValueError):
    pass


@dataclass(frozen=True)
class Bound:
    """Enumeration limits: largest d and largest total number of boxes."""

    d_max: int | None = None
    max_boxes: int | None = None


@dataclass(frozen=True)
class Level1:
    """A level-1 element: one row over A and one row over B, charge len(plus) - len(minus)."""

    plus: tuple[str, ...] = ()
    minus: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(self.plus))
        object.__setattr__(self, "minus", tuple(self.minus))

    @property
    def k(self) -> int:
        return len(self.plus) - len(self.minus)

    @property
    def size(self) -> int:
        return len(self.plus) + len(self.minus)

    def to_json(self) -> dict:
        return {"k": self.k, "plus_row": list(self.plus), "minus_row": list(self.minus)}

    @classmethod
    def from_json(cls, data: dict) -> "Level1":
        e = cls(tuple(data.get("plus_row", ())), tuple(data.get("minus_row", ())))
        if "k" in data and int(data["k"]) != e.k:
            raise PsstError(f"declared k={data['k']} but rows give {e.k}")
        return e


def _row_ok(alph: Alphabet, row: Sequence[str]) -> bool:
    if any(x not in alph for x in row):
        return False
    keys = [alph.rank(x) for x in row]
    return validate_keys([keys], (), alph.odd_ranks())


def check_level1(e: Level1, a: Alphabet, b: Alphabet) -> None:
    if not _row_ok(a, e.plus):
        raise PsstError(f"plus row {e.plus} is not semistandard over A")
    if not _row_ok(b, e.minus):
        raise PsstError(f"minus row {e.minus} is not semistandard over B")


@dataclass(frozen=True)
class FockTuple:
    a: Alphabet
    b: Alphabet
    entries: tuple[Level1, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if set(self.a.ids) & set(self.b.ids):
            raise PsstError("A and B must be disjoint")
        for e in self.entries:
            check_level1(e, self.a, self.b)

    @property
    def n(self) -> int:
        return len(self.entries)

    def weight_n(self) -> tuple[int, ...]:
        return tuple(e.k for e in self.entries)

    def weight_AB(self) -> Counter:
        w: Counter = Counter()
        for e in self.entries:
            w.update(e.plus)
            w.subtract(e.minus)
        return Counter({k: v for k, v in w.items() if v})

    def keys(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        ra, rb = self.a.rank, self.b.rank
        return tuple((tuple(map(ra, e.plus)), tuple(map(rb, e.minus))) for e in self.entries)

    @classmethod
    def from_keys(cls, a: Alphabet, b: Alphabet, keys) -> "FockTuple":
        return cls(a, b, tuple(Level1(tuple(a.id_of(x) for x in p), tuple(b.id_of(x) for x in m)) for p, m in keys))

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]


@dataclass(frozen=True)
class Psst:
    """Level-n element stored in canonical form (last part of ``mu`` is 0).

    ``plus`` has shape (shape + d^n)/mu over A; ``minus`` has shape (d^n)/mu over B.
    """

    a: Alphabet
    b: Alphabet
    n: int
    shape: tuple[int, ...]
    d: int
    mu: tuple[int, ...]
    plus: SuperTableau
    minus: SuperTableau

    def __post_init__(self):
        n, d = self.n, self.d
        shape = gen_partition(self.shape, n)
        mu = padded(tuple(self.mu), n)
        Partition(mu)
        if d < 0 or any(x > d for x in mu):
            raise PsstError("mu must fit inside the d x n rectangle")
        outer = tuple(x + d for x in shape)
        if outer[-1] < 0 or any(outer[i] < mu[i] for i in range(n)):
            raise PsstError("shape + d^n must be a partition containing mu")
        if n and mu[-1] != 0:
            raise PsstError("Psst must be canonical (last part of mu is 0); use normalize()")
        if self.plus.alphabet != self.a or self.minus.alphabet != self.b:
            raise PsstError("fillings use the wrong alphabets")
        if padded(tuple(self.plus.outer), n) != outer or padded(tuple(self.plus.inner), n) != mu:
            raise PsstError("plus filling has the wrong shape")
        if padded(tuple(self.minus.outer), n) != (d,) * n or padded(tuple(self.minus.inner), n) != mu:
            raise PsstError("minus filling has the wrong shape")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "mu", mu)

    def is_valid(self) -> bool:
        from .tableau import validate

        return validate(self.plus) and validate(self.minus)

    def weight_AB(self) -> Counter:
        w: Counter = Counter()
        for r in self.plus.rows:
            w.update(r)
        for r in self.minus.rows:
            w.subtract(r)
        return Counter({k: v for k, v in w.items() if v})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shape": list(self.shape),
            "d": self.d,
            "mu": list(self.mu),
            "plus": self.plus.to_json(),
            "minus": self.minus.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Psst":
        plus = SuperTableau.from_json(data["plus"])
        minus = SuperTableau.from_json(data["minus"])
        return normalize(plus.alphabet, minus.alphabet, int(data["n"]), int(data["d"]), data["mu"],
                         plus.rows, minus.rows, shape=data.get("shape"))

    def __str__(self) -> str:
        return f"shape {self.shape}, d={self.d}, mu={self.mu}\nT+:\n{self.plus}\nT-:\n{self.minus}"


def _fill(alph: Alphabet, rows: Sequence[Sequence[str]], n: int, inner: Sequence[int]) -> SuperTableau:
    rows = [tuple(r) for r in rows] + [()] * (n - len(rows))
    return SuperTableau(alph, rows, inner)


def normalize(
    a: Alphabet,
    b: Alphabet,
    n: int,
    d: int,
    mu: Sequence[int],
    plus_rows: Sequence[Sequence[str]],
    minus_rows: Sequence[Sequence[str]],
    shape: Sequence[int] | None = None,
) -> Psst:
    """Build the canonical representative: strip full columns shared by mu and d^n.

    Rows hold only the cells outside mu, so translating left changes (d, mu) only.
    """
    mu = list(padded(tuple(mu), n))
    plus_rows = [tuple(r) for r in plus_rows] + [()] * (n - len(plus_rows))
    minus_rows = [tuple(r) for r in minus_rows] + [()] * (n - len(minus_rows))
    if len(plus_rows) != n or len(minus_rows) != n:
        raise PsstError("too many rows for the level")
    for i in range(n):
        if len(minus_rows[i]) != d - mu[i]:
            raise PsstError(f"minus row {i + 1} should have {d - mu[i]} cells")
    lam = tuple(mu[i] + len(plus_rows[i]) - d for i in range(n))
    if shape is not None and tuple(shape) != lam:
        raise PsstError(f"declared shape {tuple(shape)} differs from rows {lam}")
    shift = mu[-1] if n else 0
    d -= shift
    mu = [x - shift for x in mu]
    return Psst(a, b, n, lam, d, tuple(mu), _fill(a, plus_rows, n, mu), _fill(b, minus_rows, n, mu))


def weight_AB(t) -> Counter:
    return t.weight_AB()


# ---------------------------------------------------------------------------
# kappa on integer keys


@lru_cache(maxsize=1 << 16)
def _minus_stage(minus: tuple[tuple[int, ...], ...], odd_bpi: frozenset) -> tuple:
    """Steps 1 and 2: returns (d, mu, minus rows as B ranks, S words over 1..n)."""
    n = len(minus)
    words = [[-r for r in reversed(row)] for row in minus]
    p_rows, q_rows = rho_col_keys(words, odd_bpi)
    nu = padded(tuple(len(r) for r in p_rows), n)
    d = nu[0]
    mu = tuple(d - nu[n - 1 - i] for i in range(n))
    p_rows = p_rows + [[] for _ in range(n - len(p_rows))]
    t_minus = tuple(tuple(-k for k in reversed(p_rows[n - 1 - i])) for i in range(n))
    q_dual = delta_keys(q_rows, n, d) if d else []
    h_rows = [[i + 1] * mu[i] for i in range(n) if mu[i]]
    s_words = rho_row_inverse_keys(h_rows, q_dual, n, frozenset())
    return d, mu, t_minus, tuple(tuple(w) for w in s_words)


@lru_cache(maxsize=1 << 16)
def _sigma_down(rows: tuple[tuple[int, ...], ...], n: int, d: int) -> RationalTableau:
    t = RationalTableau.from_rows(n, list(rows) + [()] * (n - len(rows)))
    return sigma_power(t, -d)


def kappa_keys(entries, n: int, odd_a: frozenset, odd_bpi: frozenset):
    """kappa on key data; returns (d, mu, plus rows, minus rows, Q as RationalTableau)."""
    minus = tuple(m for _, m in entries)
    d, mu, t_minus, s_words = _minus_stage(minus, odd_bpi)
    shift = -n - 1
    words = [[s + shift for s in s_words[i]] + list(entries[i][0]) for i in range(n)]
    u_rows, u_rec = rho_row_keys(words, odd_a)
    u_rows = u_rows + [[] for _ in range(n - len(u_rows))]
    t_plus = []
    for i in range(n):
        row = u_rows[i]
        if len(row) < mu[i] or any(x != i + 1 + shift for x in row[: mu[i]]) or (
            len(row) > mu[i] and row[mu[i]] < 0
        ):
            raise PsstError("insertion tableau does not split as H^mu * T+")
        t_plus.append(tuple(row[mu[i]:]))
    q = _sigma_down(tuple(map(tuple, u_rec)), n, d)
    return d, mu, tuple(t_plus), t_minus, q


def kappa(ft: FockTuple) -> tuple[Psst, RationalTableau]:
    """The RSK-type map from n-tuples of level-1 elements to (P, Q)."""
    n = ft.n
    if n == 0:
        raise PsstError("empty tuple")
    a, b = ft.a, ft.b
    odd_bpi = frozenset(-r for r in b.odd_ranks())
    d, mu, t_plus, t_minus, q = kappa_keys(ft.keys(), n, a.odd_ranks(), odd_bpi)
    plus_rows = [[a.id_of(x) for x in r] for r in t_plus]
    minus_rows = [[b.id_of(x) for x in r] for r in t_minus]
    return normalize(a, b, n, d, mu, plus_rows, minus_rows), q


def kappa_inverse(p: Psst, q: RationalTableau) -> FockTuple:
    """Run the four steps of kappa backwards."""
    n = p.n
    if q.n != n or tuple(q.shape) != tuple(p.shape):
        raise PsstError(f"shapes differ: {p.shape} vs {q.shape}")
    if not validate_rational(q):
        raise PsstError("Q is not a rational semistandard tableau")
    a, b = p.a, p.b
    odd_a = a.odd_ranks()
    odd_bpi = frozenset(-r for r in b.odd_ranks())
    d, mu = p.d, p.mu
    shift = -n - 1
    # step 4 backwards
    u_rec = sigma_power(q, d)
    if any(u_rec.neg_rows):
        raise PsstError("sigma^d(Q) is not an ordinary tableau")
    u_rows = [
        [i + 1 + shift] * mu[i] + [a.rank(x) for x in (p.plus.rows[i] if i < len(p.plus.rows) else ())]
        for i in range(n)
    ]
    rec_rows = [list(r) for r in u_rec.pos_rows if r]
    u_rows = [r for r in u_rows if r]
    words = rho_row_inverse_keys(u_rows, rec_rows, n, odd_a)
    # step 3 backwards
    s_words, plus_words = [], []
    for w in words:
        k = 0
        while k < len(w) and w[k] < 0:
            k += 1
        s_words.append([x - shift for x in w[:k]])
        plus_words.append(tuple(w[k:]))
    # step 2 backwards
    _, q_dual = rho_row_keys(s_words, frozenset())
    q_rows = delta_keys(q_dual, n, d) if d else []
    # step 1 backwards
    minus_rows = [[b.rank(x) for x in (p.minus.rows[i] if i < len(p.minus.rows) else ())] for i in range(n)]
    p_rows = [[-k for k in reversed(minus_rows[n - 1 - i])] for i in range(n)]
    p_rows = [r for r in p_rows if r]
    pi_words = rho_col_inverse_keys(p_rows, q_rows, n, odd_bpi)
    minus_words = [tuple(-k for k in reversed(w)) for w in pi_words]
    return FockTuple.from_keys(a, b, list(zip(plus_words, minus_words)))


# ---------------------------------------------------------------------------
# enumeration


def rows_over(alph: Alphabet, length: int) -> Iterator[tuple[int, ...]]:
    """Semistandard single rows of a given length, as rank tuples."""
    for rows in enumerate_keys(len(alph), alph.odd_ranks(), (length,) if length else ()):
        yield tuple(rows[0]) if rows else ()


def level1_keys(a: Alphabet, b: Alphabet, max_boxes: int, k: int | None = None):
    """All level-1 key pairs with at most ``max_boxes`` cells (optionally of charge k)."""
    out = []
    for total in range(max_boxes + 1):
        for lp in range(total + 1):
            lm = total - lp
            if k is not None and lp - lm != k:
                continue
            plus = list(rows_over(a, lp))
            if not plus:
                continue
            for m in rows_over(b, lm):
                for pr in plus:
                    out.append((pr, m))
    return out


def enumerate_level1(a: Alphabet, b: Alphabet, max_boxes: int, k: int | None = None) -> Iterator[Level1]:
    for p, m in level1_keys(a, b, max_boxes, k):
        yield Level1(tuple(a.id_of(x) for x in p), tuple(b.id_of(x) for x in m))


def enumerate_fock(a: Alphabet, b: Alphabet, n: int, max_boxes_each: int) -> Iterator[FockTuple]:
    singles = level1_keys(a, b, max_boxes_each)
    for combo in product(singles, repeat=n):
        yield FockTuple.from_keys(a, b, combo)


def enumerate_fock_weight(
    a: Alphabet, b: Alphabet, mu: Sequence[int], max_total: int
) -> Iterator[tuple]:
    """Key tuples in F^mu whose total number of cells is at most ``max_total``."""
    pools = [level1_keys(a, b, max_total, k) for k in mu]

    def rec(i, budget, acc):
        if i == len(pools):
            yield tuple(acc)
            return
        for e in pools[i]:
            s = len(e[0]) + len(e[1])
            if s <= budget:
                acc.append(e)
                yield from rec(i + 1, budget - s, acc)
                acc.pop()

    yield from rec(0, max_total, [])


def _mu_choices(n: int, d: int, outer: Sequence[int]):
    # partitions mu inside d^n and outer, with last part 0
    def rec(i, cap, acc):
        if i == n - 1:
            yield tuple(acc) + (0,)
            return
        for x in range(min(cap, outer[i]), -1, -1):
            acc.append(x)
            yield from rec(i + 1, x, acc)
            acc.pop()

    if n == 0:
        yield ()
        return
    yield from rec(0, d, [])


def enumerate_psst(a: Alphabet, b: Alphabet, n: int, shape: Sequence[int], bound: Bound) -> Iterator[Psst]:
    """Canonical elements of the given shape inside the bound, ordered by (d, mu, rows)."""
    shape = gen_partition(shape, n)
    if bound.d_max is None and bound.max_boxes is None:
        raise PsstError("enumeration needs d_max or max_boxes")
    d_lo = max(0, -shape[-1])
    d_hi = bound.d_max if bound.d_max is not None else bound.max_boxes
    if bound.max_boxes is not None:
        d_hi = min(d_hi, bound.max_boxes)
    odd_a, odd_b = a.odd_ranks(), b.odd_ranks()
    for d in range(d_lo, d_hi + 1):
        outer = tuple(x + d for x in shape)
        for mu in sorted(_mu_choices(n, d, outer)):
            boxes = sum(outer) - sum(mu) + n * d - sum(mu)
            if bound.max_boxes is not None and boxes > bound.max_boxes:
                continue
            minus_fill = list(enumerate_keys(len(b), odd_b, (d,) * n, mu)) if n * d - sum(mu) else [[[]] * n]
            if not minus_fill:
                continue
            for plus in enumerate_keys(len(a), odd_a, outer, mu):
                plus_rows = [[a.id_of(x) for x in r] for r in plus]
                for minus in minus_fill:
                    minus_rows = [[b.id_of(x) for x in r] for r in minus]
                    yield normalize(a, b, n, d, mu, plus_rows, minus_rows)


def shapes_nonempty(a: Alphabet, b: Alphabet, n: int, bound: Bound) -> set[tuple[int, ...]]:
    """Shapes realised by at least one element inside the bound."""
    limit = bound.max_boxes if bound.max_boxes is not None else (bound.d_max or 0) * (n + 1) + len(a) * n
    out = set()
    for shape in generalized_partitions(n, -limit, limit, limit):
        for _ in enumerate_psst(a, b, n, shape, bound):
            out.add(shape)
            break
    return out


def generalized_partitions(n: int, lo: int, hi: int, max_abs_total: int | None = None):
    """Weakly decreasing n-vectors with entries in [lo, hi]."""

    def rec(i, cap, acc):
        if i == n:
            if max_abs_total is None or sum(abs(x) for x in acc) <= max_abs_total:
                yield tuple(acc)
            return
        for x in range(cap, lo - 1, -1):
            acc.append(x)
            yield from rec(i + 1, x, acc)
            acc.pop()

    yield from rec(0, hi, [])


def empty_tuple(a: Alphabet, b: Alphabet, n: int) -> FockTuple:
    return FockTuple(a, b, tuple(Level1() for _ in range(n)))


__all__ = [
    "Bound",
    "FockTuple",
    "Level1",
    "Psst",
    "PsstError",
    "TableauError",
    "check_level1",
    "enumerate_fock",
    "enumerate_fock_weight",
    "enumerate_level1",
    "enumerate_psst",
    "generalized_partitions",
    "kappa",
    "kappa_inverse",
    "kappa_keys",
    "level1_keys",
    "normalize",
    "pi_dual",
    "shapes_nonempty",
    "weight_AB",
]
