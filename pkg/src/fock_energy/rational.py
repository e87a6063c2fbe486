"""Rational semistandard tableaux of rank n and the column maps sigma and delta."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .tableau import TableauError, enumerate_keys, padded, validate_keys


class RationalError(ValueError):
    pass


def gen_partition(parts: Sequence[int], n: int) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if len(parts) != n:
        raise RationalError(f"generalized partition {parts} must have exactly {n} parts")
    if any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise RationalError(f"{parts} is not weakly decreasing")
    return parts


@dataclass(frozen=True)
class RationalTableau:
    """Positive entries live in ``pos_rows`` (left-aligned from column 1),
    negative ones in ``neg_rows`` (right-aligned at column -1, listed left to right)."""

    n: int
    shape: tuple[int, ...]
    pos_rows: tuple[tuple[int, ...], ...]
    neg_rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        shape = gen_partition(self.shape, n)
        pos = tuple(tuple(int(x) for x in r) for r in self.pos_rows)
        neg = tuple(tuple(int(x) for x in r) for r in self.neg_rows)
        pos = pos + ((),) * (n - len(pos))
        neg = neg + ((),) * (n - len(neg))
        if len(pos) != n or len(neg) != n:
            raise RationalError("too many rows")
        for i, lam in enumerate(shape):
            if len(pos[i]) != max(lam, 0) or len(neg[i]) != max(-lam, 0):
                raise RationalError(f"row {i + 1} does not match shape entry {lam}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "pos_rows", pos)
        object.__setattr__(self, "neg_rows", neg)

    @classmethod
    def from_rows(cls, n: int, pos_rows: Sequence[Sequence[int]], neg_rows: Sequence[Sequence[int]] = ()):
        """Shape is read off the row lengths."""
        pos = list(pos_rows) + [()] * (n - len(pos_rows))
        neg = list(neg_rows) + [()] * (n - len(neg_rows))
        shape = tuple(len(pos[i]) - len(neg[i]) for i in range(n))
        return cls(n, shape, tuple(map(tuple, pos)), tuple(map(tuple, neg)))

    @property
    def size(self) -> int:
        return sum(map(len, self.pos_rows)) + sum(map(len, self.neg_rows))

    def weight(self) -> tuple[int, ...]:
        w = [0] * self.n
        for r in self.pos_rows:
            for x in r:
                w[x - 1] += 1
        for r in self.neg_rows:
            for x in r:
                w[-x - 1] -= 1
        return tuple(w)

    def cells(self) -> list[tuple[int, int]]:
        """(row, column) of each entry in column-reading order; columns are
        numbered 1, 2, ... on the right of the wall and -1, -2, ... on the left."""
        out = []
        width = max(self.shape[0], 0)
        for c in range(width, 0, -1):
            for i in range(self.n):
                if len(self.pos_rows[i]) >= c:
                    out.append((i, c))
        depth = max(-self.shape[-1], 0)
        for k in range(1, depth + 1):
            for i in range(self.n):
                if len(self.neg_rows[i]) >= k:
                    out.append((i, -k))
        return out

    def entry(self, i: int, c: int) -> int:
        if c > 0:
            return self.pos_rows[i][c - 1]
        row = self.neg_rows[i]
        return row[len(row) + c]

    def word(self) -> tuple[int, ...]:
        """Column reading word: columns right to left, each top to bottom."""
        return tuple(self.entry(i, c) for i, c in self.cells())

    def with_word(self, word: Sequence[int]) -> "RationalTableau":
        """Refill the same cells, in column-reading order, with ``word``."""
        pos = [list(r) for r in self.pos_rows]
        neg = [list(r) for r in self.neg_rows]
        for (i, c), x in zip(self.cells(), word, strict=True):
            if c > 0:
                pos[i][c - 1] = x
            else:
                neg[i][len(neg[i]) + c] = x
        return RationalTableau(self.n, self.shape, tuple(map(tuple, pos)), tuple(map(tuple, neg)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shape": list(self.shape),
            "pos_rows": [list(r) for r in self.pos_rows],
            "neg_rows": [list(r) for r in self.neg_rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalTableau":
        try:
            return cls(int(data["n"]), tuple(data["shape"]), data["pos_rows"], data["neg_rows"])
        except KeyError as exc:
            raise RationalError(f"missing field {exc}") from None

    def __str__(self) -> str:
        depth = max(-self.shape[-1], 0)
        lines = []
        for i in range(self.n):
            neg = ["."] * (depth - len(self.neg_rows[i])) + [str(x) for x in self.neg_rows[i]]
            lines.append(" ".join(neg + ["|"] + [str(x) for x in self.pos_rows[i]]))
        return "\n".join(lines)


def _column(t: RationalTableau, c: int) -> list[int]:
    return [t.entry(i, c) for i in range(t.n) if (len(t.pos_rows[i]) >= c if c > 0 else len(t.neg_rows[i]) >= -c)]


def validate_rational(t: RationalTableau) -> bool:
    n = t.n
    for r in t.pos_rows:
        if any(not 1 <= x <= n for x in r):
            return False
    for r in t.neg_rows:
        if any(not -n <= x <= -1 for x in r):
            return False
    pos_rows = [r for r in t.pos_rows if r]
    if not validate_keys(pos_rows, (), frozenset()):
        return False
    depth = max(-t.shape[-1], 0)
    neg_rows = [r for r in t.neg_rows if r]
    neg_inner = [depth - len(r) for r in neg_rows]
    if not validate_keys(neg_rows, neg_inner, frozenset()):
        return False
    b = _column(t, 1)
    b_dual = {-x for x in _column(t, -1)}
    complement = [x for x in range(1, n + 1) if x not in b_dual]
    if len(b) + len(b_dual) > n:
        return False
    return all(complement[i] <= b[i] for i in range(len(b)))


def sigma(t: RationalTableau) -> RationalTableau:
    """Replace column -1 (entries -b) by a new column 1 holding [n] minus {b}."""
    n = t.n
    removed = {-t.neg_rows[i][-1] for i in range(n) if t.neg_rows[i]}
    fresh = [x for x in range(1, n + 1) if x not in removed]
    pos, neg = [], []
    k = 0
    for i in range(n):
        if t.neg_rows[i]:
            pos.append(())
            neg.append(t.neg_rows[i][:-1])
        else:
            pos.append((fresh[k],) + t.pos_rows[i])
            neg.append(())
            k += 1
    return RationalTableau(n, tuple(x + 1 for x in t.shape), tuple(pos), tuple(neg))


def sigma_inverse(t: RationalTableau) -> RationalTableau:
    """Replace column 1 (entries c) by a new column -1 holding -([n] minus c)."""
    n = t.n
    first = {t.pos_rows[i][0] for i in range(n) if t.pos_rows[i]}
    fresh = [-x for x in range(n, 0, -1) if x not in first]  # ascending negatives
    pos, neg = [], []
    k = 0
    for i in range(n):
        if t.pos_rows[i]:
            pos.append(t.pos_rows[i][1:])
            neg.append(())
        else:
            pos.append(())
            neg.append(t.neg_rows[i] + (fresh[k],))
            k += 1
    return RationalTableau(n, tuple(x - 1 for x in t.shape), tuple(pos), tuple(neg))


def sigma_power(t: RationalTableau, k: int) -> RationalTableau:
    step = sigma if k >= 0 else sigma_inverse
    for _ in range(abs(k)):
        t = step(t)
    return t


def delta(t: RationalTableau, d: int) -> RationalTableau:
    """Apply sigma^{-d}, rotate by 180 degrees and read -k as k."""
    if any(x < 0 for x in t.shape):
        raise RationalError("delta needs a partition shape")
    if d < t.shape[0]:
        raise RationalError(f"delta needs d >= {t.shape[0]}")
    s = sigma_power(t, -d)
    rows = [tuple(-x for x in reversed(s.neg_rows[t.n - 1 - i])) for i in range(t.n)]
    return RationalTableau.from_rows(t.n, rows)


def delta_keys(rows: Sequence[Sequence[int]], n: int, d: int) -> list[list[int]]:
    """Column formula for delta on plain rows over 1..n: column j of the result is
    the complement of column d+1-j of the input, top-aligned."""
    cols = [[r[c] for r in rows if len(r) > c] for c in range(d)]
    out_cols = []
    for j in range(d):
        present = set(cols[d - 1 - j])
        out_cols.append([x for x in range(1, n + 1) if x not in present])
    height = len(out_cols[0]) if out_cols else 0
    return [[c[i] for c in out_cols if len(c) > i] for i in range(height)]


def from_partition_rows(n: int, rows: Sequence[Sequence[int]]) -> RationalTableau:
    if len(rows) > n:
        raise RationalError("too many rows for rank")
    return RationalTableau.from_rows(n, [tuple(r) for r in rows])


def enumerate_rational(n: int, shape: Sequence[int]) -> Iterator[RationalTableau]:
    """All rational tableaux of a generalized shape, via sigma^{-d} of ordinary ones."""
    shape = gen_partition(shape, n)
    d = max(0, -shape[-1])
    outer = tuple(x + d for x in shape)
    for rows in enumerate_keys(n, frozenset(), outer):
        t = from_partition_rows(n, [[x + 1 for x in r] for r in rows])
        yield sigma_power(t, -d)


def weight_counter(t: RationalTableau) -> Counter:
    return Counter({i + 1: w for i, w in enumerate(t.weight()) if w})


__all__ = [
    "RationalError",
    "RationalTableau",
    "TableauError",
    "delta",
    "delta_keys",
    "enumerate_rational",
    "gen_partition",
    "padded",
    "sigma",
    "sigma_inverse",
    "sigma_power",
    "validate_rational",
]
