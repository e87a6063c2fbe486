"""Schur, Hall-Littlewood and Kostka-Foulkes polynomials, and the truncated
characters used for the series identities."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Sequence

from . import crystal
from .alphabet import Alphabet
from .energy import Pairing
from .poly import ONE, GradedPoly, PolyError, QPoly
from .psst import Bound, enumerate_fock_weight, enumerate_psst, shapes_nonempty
from .rational import gen_partition
from .tableau import enumerate_keys


class SymfuncError(ValueError):
    pass


def x_vars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def ab_vars(a: Alphabet, b: Alphabet) -> tuple[str, ...]:
    return tuple(f"x[{l}]" for l in a.ids) + tuple(f"x[{l}]" for l in b.ids)


def _pad(parts: Sequence[int]) -> int:
    return max(0, -min(parts, default=0))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if sum(lam) != sum(mu):
        return False
    s = t = 0
    for x, y in zip(lam, mu):
        s, t = s + x, t + y
        if s < t:
            return False
    return True


# ---------------------------------------------------------------------------
# Schur


@lru_cache(maxsize=None)
def _schur_counts(lam: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    d = _pad(lam)
    outer = tuple(x + d for x in lam)
    c: Counter = Counter()
    for rows in enumerate_keys(n, frozenset(), tuple(x for x in outer if x)):
        w = [-d] * n
        for r in rows:
            for x in r:
                w[x] += 1
        c[tuple(w)] += 1
    return tuple(sorted(c.items()))


def schur(lam: Sequence[int], n: int) -> GradedPoly:
    """Laurent Schur polynomial by tableau enumeration."""
    lam = gen_partition(lam, n)
    return GradedPoly(x_vars(n), dict(_schur_counts(lam, n)))


def sst_with_weight(lam: Sequence[int], mu: Sequence[int], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Rows (letters 1..n) of every tableau of shape lam+d and weight mu+d."""
    lam, mu = gen_partition(lam, n), tuple(mu)
    d = max(_pad(lam), _pad(mu))
    outer = tuple(x + d for x in lam if x + d)
    target = tuple(x + d for x in mu)
    out = []
    for rows in enumerate_keys(n, frozenset(), outer):
        w = [0] * n
        for r in rows:
            for x in r:
                w[x] += 1
        if tuple(w) == target:
            out.append(tuple(tuple(x + 1 for x in r) for r in rows))
    return out


def _column_word(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    width = len(rows[0]) if rows else 0
    return tuple(r[c] for c in range(width - 1, -1, -1) for r in rows if len(r) > c)


# ---------------------------------------------------------------------------
# Hall-Littlewood


def v_factor(mu: Sequence[int]) -> QPoly:
    """Product over part sizes (zeros included) of the q-factorial of the multiplicity."""
    out = ONE
    for mult in Counter(mu).values():
        for m in range(1, mult + 1):
            out = out * QPoly({i: 1 for i in range(m)})
    return out


def _antisymmetrized(mu: Sequence[int], n: int) -> dict[tuple[int, ...], QPoly]:
    """Coefficients b_beta with A(x^mu prod_{i<j}(x_i - q x_j)) = sum b_beta a_{beta+delta}."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    num: dict[tuple[int, ...], QPoly] = {}
    for choice in product((0, 1), repeat=len(pairs)):
        e = list(mu)
        qpow = 0
        for (i, j), c in zip(pairs, choice):
            if c:
                e[j] += 1
                qpow += 1
            else:
                e[i] += 1
        key = tuple(e)
        term = QPoly({qpow: (-1) ** qpow})
        num[key] = num[key] + term if key in num else term
    out: dict[tuple[int, ...], QPoly] = {}
    for alpha, c in num.items():
        if c.is_zero() or len(set(alpha)) < n:
            continue
        order = sorted(range(n), key=lambda k: -alpha[k])
        sign = _perm_sign(order)
        beta = tuple(alpha[order[k]] - (n - 1 - k) for k in range(n))
        term = c if sign > 0 else -c
        out[beta] = out[beta] + term if beta in out else term
    return {b: c for b, c in out.items() if not c.is_zero()}


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _hl_partition(mu: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], QPoly], ...]:
    acc: dict[tuple[int, ...], QPoly] = {}
    for beta, c in _antisymmetrized(mu, n).items():
        for e, k in _schur_counts(beta, n):
            term = c * k
            acc[e] = acc[e] + term if e in acc else term
    v = v_factor(mu)
    out = []
    for e, c in acc.items():
        if c.is_zero():
            continue
        try:
            out.append((e, c.exact_div(v)))
        except PolyError as exc:
            raise SymfuncError(f"normalization of P_{mu} is not exact: {exc}") from None
    return tuple(sorted(out))


def hall_littlewood(mu: Sequence[int], n: int, pad: int | None = None) -> GradedPoly:
    """P_mu(x_1..x_n; q); generalized mu is shifted by ``pad`` (default: the least valid one)."""
    mu = gen_partition(mu, n)
    d = _pad(mu) if pad is None else pad
    if d < _pad(mu):
        raise SymfuncError(f"pad {d} too small for {mu}")
    shifted = tuple(x + d for x in mu)
    terms = {tuple(x - d for x in e): c for e, c in _hl_partition(shifted, n)}
    return GradedPoly(x_vars(n), terms)


# ---------------------------------------------------------------------------
# Kostka-Foulkes


def kostka_foulkes_charge(lam: Sequence[int], mu: Sequence[int], n: int) -> QPoly:
    """Sum of q^charge over tableaux of shape lam and weight mu."""
    lam, mu = gen_partition(lam, n), tuple(int(x) for x in mu)
    if len(mu) != n or sum(lam) != sum(mu):
        return QPoly()
    out: dict[int, int] = {}
    for rows in sst_with_weight(lam, mu, n):
        c = crystal.charge(_column_word(rows), n)
        out[c] = out.get(c, 0) + 1
    return QPoly(out)


def kostka_foulkes_hl(lam: Sequence[int], mu: Sequence[int], n: int) -> QPoly:
    """Coefficient of P_mu when s_lam is expanded in Hall-Littlewood polynomials."""
    return kostka_row_hl(lam, n).get(tuple(mu), QPoly())


@lru_cache(maxsize=None)
def _kostka_row_partition(lam: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], QPoly], ...]:
    rest: dict[tuple[int, ...], QPoly] = {e: QPoly(k) for e, k in _schur_counts(lam, n)}
    found = []
    while rest:
        dominant = [e for e in rest if all(e[i] >= e[i + 1] for i in range(n - 1))]
        if not dominant:
            raise SymfuncError(f"triangular solve for s_{lam} left a non-symmetric remainder")
        top = max(dominant)
        k = rest[top]
        found.append((top, k))
        for e, c in _hl_partition(top, n):
            v = rest.get(e, QPoly()) - k * c
            if v.is_zero():
                rest.pop(e, None)
            else:
                rest[e] = v
    return tuple(sorted(found))


def kostka_row_hl(lam: Sequence[int], n: int) -> dict[tuple[int, ...], QPoly]:
    """All K_{lam,mu}(q) from one triangular solve, keyed by mu."""
    lam = gen_partition(lam, n)
    d = _pad(lam)
    shifted = tuple(x + d for x in lam)
    return {tuple(x - d for x in m): k for m, k in _kostka_row_partition(shifted, n)}


def dominated_weights(lam: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Generalized partitions mu <= lam in dominance, largest first."""
    lam = gen_partition(lam, n)
    d = _pad(lam)
    total = sum(lam) + n * d
    out = []

    def rec(i, cap, left, acc):
        if i == n:
            if left == 0:
                m = tuple(x - d for x in acc)
                if dominates(lam, m):
                    out.append(m)
            return
        for x in range(min(cap, left), -1, -1):
            acc.append(x)
            rec(i + 1, x, left - x, acc)
            acc.pop()

    rec(0, total, total, [])
    return out


# ---------------------------------------------------------------------------
# characters over A/B


def _ab_exponent(plus: Sequence[int], minus: Sequence[int], n_a: int, n_b: int) -> tuple[int, ...]:
    e = [0] * (n_a + n_b)
    for x in plus:
        e[x] += 1
    for x in minus:
        e[n_a + x] -= 1
    return tuple(e)


def box_degree(e: Sequence[int], n_ab: int) -> int:
    return sum(abs(x) for x in e[:n_ab])


def S_char(lam: Sequence[int], a: Alphabet, b: Alphabet, bound: Bound) -> GradedPoly:
    """Character of the PSSTs of shape lam inside the bound."""
    n = len(lam)
    acc: Counter = Counter()
    for p in enumerate_psst(a, b, n, lam, bound):
        plus = [a.rank(x) for r in p.plus.rows for x in r]
        minus = [b.rank(x) for r in p.minus.rows for x in r]
        acc[_ab_exponent(plus, minus, len(a), len(b))] += 1
    return GradedPoly(ab_vars(a, b), dict(acc))


def Q_char_energy(mu: Sequence[int], a: Alphabet, b: Alphabet, max_boxes: int) -> GradedPoly:
    """Sum of q^{-D} x^T over tuples of charges mu with at most ``max_boxes`` cells."""
    pr = Pairing(a, b)
    acc: dict[tuple[int, ...], QPoly] = {}
    for keys in enumerate_fock_weight(a, b, mu, max_boxes):
        plus = [x for e in keys for x in e[0]]
        minus = [x for e in keys for x in e[1]]
        e = _ab_exponent(plus, minus, len(a), len(b))
        term = QPoly.q(-pr.global_D(keys))
        acc[e] = acc[e] + term if e in acc else term
    return GradedPoly(ab_vars(a, b), acc)


def Q_char_kostka(mu: Sequence[int], a: Alphabet, b: Alphabet, max_boxes: int) -> GradedPoly:
    """Sum over lam of K_{lam,mu}(q) times the truncated character of shape lam."""
    n = len(mu)
    bound = Bound(max_boxes=max_boxes)
    out = GradedPoly(ab_vars(a, b))
    for lam in sorted(shapes_nonempty(a, b, n, bound)):
        if not dominates(lam, mu):
            continue
        k = kostka_foulkes_charge(lam, mu, n)
        if not k.is_zero():
            out = out + S_char(lam, a, b, bound).scale(k)
    return out


def cauchy_product(a: Alphabet, b: Alphabet, n: int, max_boxes: int) -> GradedPoly:
    """The product side, expanded up to ``max_boxes`` in the A/B degree."""
    variables = ab_vars(a, b) + x_vars(n)
    n_ab = len(a) + len(b)
    keep = lambda e: box_degree(e, n_ab) <= max_boxes  # noqa: E731
    out = GradedPoly(variables, {(0,) * len(variables): 1})
    for i in range(n):
        for idx, letter in enumerate(list(a.ids) + list(b.ids)):
            sign = 1 if idx < len(a) else -1
            odd = (a if sign > 0 else b).is_odd(letter)
            top = 1 if odd else max_boxes
            factor = {}
            for k in range(top + 1):
                e = [0] * len(variables)
                e[idx] = sign * k
                e[n_ab + i] = sign * k
                factor[tuple(e)] = 1
            out = out.mul(GradedPoly(variables, factor), keep)
    return out


def cauchy_sum(a: Alphabet, b: Alphabet, n: int, max_boxes: int) -> GradedPoly:
    """Sum over shapes of S_char(lam) s_lam, up to ``max_boxes``."""
    variables = ab_vars(a, b) + x_vars(n)
    bound = Bound(max_boxes=max_boxes)
    out = GradedPoly(variables)
    for lam in sorted(shapes_nonempty(a, b, n, bound)):
        s = S_char(lam, a, b, bound).embed(variables)
        out = out + s.mul(schur(lam, n).embed(variables))
    return out


def cauchy_check(a: Alphabet, b: Alphabet, n: int, max_boxes: int, perturb=None) -> bool:
    """Coefficientwise comparison of both sides; ``perturb`` may alter the sum side
    first (used to confirm the comparison can fail)."""
    lhs = cauchy_sum(a, b, n, max_boxes)
    if perturb is not None:
        lhs = perturb(lhs)
    return lhs == cauchy_product(a, b, n, max_boxes)
