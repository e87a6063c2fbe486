"""Super semistandard tableaux, super Schensted insertion, rho_col/rho_row.

Public functions work on :class:`SuperTableau`, whose cells hold letter ids.
The ``*_keys`` kernels underneath work on rows of plain integers with an
``odd`` set marking odd keys; they are what the enumeration-heavy code calls.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .alphabet import Alphabet, preset, star, pi_dual

Rows = list[list[int]]


class TableauError(ValueError):
    pass


# ---------------------------------------------------------------------------
# shapes


class Partition(tuple):
    """Weakly decreasing nonnegative parts; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        p = [int(x) for x in parts]
        while p and p[-1] == 0:
            p.pop()
        if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise TableauError(f"not a partition: {tuple(parts)}")
        return super().__new__(cls, p)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for x in self if x > j) for j in range(self[0] if self else 0))

    def contains(self, other: Sequence[int]) -> bool:
        return all(self.part(i) >= x for i, x in enumerate(other))


def padded(parts: Sequence[int], n: int) -> tuple[int, ...]:
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise TableauError(f"{parts} has more than {n} nonzero parts")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise TableauError(f"inner {self.inner} not inside outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class SuperTableau:
    """A filling of ``outer/inner``; ``rows[i]`` lists the cells of row i left to right."""

    alphabet: Alphabet
    outer: Partition
    inner: Partition
    rows: tuple[tuple[str, ...], ...]

    def __init__(self, alphabet: Alphabet, rows: Sequence[Sequence[str]], inner: Sequence[int] = ()):
        rows_t = [tuple(str(x) for x in r) for r in rows]
        inner_t = list(padded(tuple(inner), max(len(rows_t), len(inner))))
        while len(rows_t) < len(inner_t):
            rows_t.append(())
        # strip trailing empty rows that carry no inner cells
        while rows_t and not rows_t[-1] and inner_t[-1] == 0:
            rows_t.pop()
            inner_t.pop()
        outer = [inner_t[i] + len(rows_t[i]) for i in range(len(rows_t))]
        try:
            outer_p, inner_p = Partition(outer), Partition(inner_t)
        except TableauError as exc:
            raise TableauError(f"rows do not fit a skew shape: {exc}") from None
        if not outer_p.contains(inner_p):
            raise TableauError("inner shape not contained in outer")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "outer", outer_p)
        object.__setattr__(self, "inner", inner_p)
        object.__setattr__(self, "rows", tuple(rows_t))
        for r in rows_t:
            for x in r:
                if x not in alphabet:
                    raise TableauError(f"letter {x!r} not in alphabet")

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_straight(self) -> bool:
        return not any(self.inner)

    def cell(self, i: int, j: int) -> str:
        return self.rows[i][j - self.inner.part(i)]

    def key_rows(self) -> Rows:
        rank = self.alphabet.rank
        return [[rank(x) for x in r] for r in self.rows]

    @classmethod
    def from_keys(cls, alphabet: Alphabet, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()):
        ident = alphabet.id_of
        return cls(alphabet, [[ident(k) for k in r] for r in rows], inner)

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuperTableau":
        alph = Alphabet.from_json(data["alphabet"])
        t = cls(alph, data["rows"], data.get("inner", ()))
        if "outer" in data and tuple(Partition(data["outer"])) != tuple(t.outer):
            raise TableauError("rows do not match declared outer shape")
        return t

    def __str__(self) -> str:
        lines = []
        for i, r in enumerate(self.rows):
            lines.append(" ".join(["."] * self.inner.part(i) + list(r)))
        return "\n".join(lines) if lines else "(empty)"


def validate_keys(rows: Sequence[Sequence[int]], inner: Sequence[int], odd) -> bool:
    """Check the super semistandard conditions on integer rows of a skew shape."""
    prev: Sequence[int] = ()
    prev_off = 0
    for i, row in enumerate(rows):
        off = inner[i] if i < len(inner) else 0
        for j in range(1, len(row)):
            a, b = row[j - 1], row[j]
            if b < a or (b == a and b in odd):
                return False
        for j, b in enumerate(row):
            col = off + j
            k = col - prev_off
            if 0 <= k < len(prev):
                a = prev[k]
                if b < a or (b == a and b not in odd):
                    return False
        prev, prev_off = row, off
    return True


def validate(t: SuperTableau) -> bool:
    """True iff rows/columns weakly increase, even letters are column-strict
    and odd letters are row-strict."""
    return validate_keys(t.key_rows(), t.inner, t.alphabet.odd_ranks())


def word_col(t: SuperTableau) -> tuple[str, ...]:
    """Columns from right to left, each read top to bottom."""
    out = []
    width = t.outer.part(0)
    for col in range(width - 1, -1, -1):
        for i, r in enumerate(t.rows):
            j = col - t.inner.part(i)
            if 0 <= j < len(r):
                out.append(r[j])
    return tuple(out)


def word_row(t: SuperTableau) -> tuple[str, ...]:
    """Rows from bottom to top, each read left to right."""
    return tuple(x for r in reversed(t.rows) for x in r)


def weight(t: SuperTableau) -> Counter:
    return Counter(x for r in t.rows for x in r)


# ---------------------------------------------------------------------------
# insertion kernels


def row_insert_keys(rows: Rows, a: int, odd) -> int:
    """Row-insert ``a`` in place; return the row index of the new box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([a])
            return r
        row = rows[r]
        idx = bisect_left(row, a) if a in odd else bisect_right(row, a)
        if idx == len(row):
            row.append(a)
            return r
        row[idx], a = a, row[idx]
        r += 1


def col_insert_keys(cols: Rows, a: int, odd) -> int:
    """Column-insert ``a`` into a column list in place; return the column index of the new box."""
    c = 0
    while True:
        if c == len(cols):
            cols.append([a])
            return c
        col = cols[c]
        idx = bisect_right(col, a) if a in odd else bisect_left(col, a)
        if idx == len(col):
            col.append(a)
            return c
        col[idx], a = a, col[idx]
        c += 1


def row_uninsert_keys(rows: Rows, r: int, odd) -> int:
    """Undo a row insertion whose new box ended row ``r``; return the ejected letter."""
    x = rows[r].pop()
    if not rows[r]:
        if r != len(rows) - 1:
            raise TableauError("removed box is not a corner")
        rows.pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        j = (bisect_right(row, x) if x in odd else bisect_left(row, x)) - 1
        if j < 0:
            raise TableauError("reverse row bump failed")
        row[j], x = x, row[j]
    return x


def col_uninsert_keys(cols: Rows, c: int, odd) -> int:
    """Undo a column insertion whose new box ended column ``c``; return the ejected letter."""
    x = cols[c].pop()
    if not cols[c]:
        if c != len(cols) - 1:
            raise TableauError("removed box is not a corner")
        cols.pop()
    for k in range(c - 1, -1, -1):
        col = cols[k]
        j = (bisect_left(col, x) if x in odd else bisect_right(col, x)) - 1
        if j < 0:
            raise TableauError("reverse column bump failed")
        col[j], x = x, col[j]
    return x


def rows_to_cols(rows: Sequence[Sequence[int]]) -> Rows:
    width = len(rows[0]) if rows else 0
    return [[r[j] for r in rows if len(r) > j] for j in range(width)]


def cols_to_rows(cols: Sequence[Sequence[int]]) -> Rows:
    height = len(cols[0]) if cols else 0
    return [[c[i] for c in cols if len(c) > i] for i in range(height)]


def rho_col_keys(words: Sequence[Sequence[int]], odd) -> tuple[Rows, Rows]:
    """rho_col on one-row key tableaux; the recording tableau uses labels 1..r."""
    cols: Rows = [[a] for a in words[0]] if words else []
    rec: Rows = [[1] * len(words[0])] if words and words[0] else []
    for k, row in enumerate(words[1:], start=2):
        for a in reversed(row):
            c = col_insert_keys(cols, a, odd)
            i = len(cols[c]) - 1
            if i == len(rec):
                rec.append([])
            rec[i].append(k)
    return cols_to_rows(cols), rec


def rho_row_keys(words: Sequence[Sequence[int]], odd) -> tuple[Rows, Rows]:
    """rho_row on one-row key tableaux; the recording tableau uses labels 1..r."""
    rows: Rows = [list(words[0])] if words and words[0] else []
    rec: Rows = [[1] * len(words[0])] if words and words[0] else []
    for k, row in enumerate(words[1:], start=2):
        for a in row:
            i = row_insert_keys(rows, a, odd)
            if i == len(rec):
                rec.append([])
            rec[i].append(k)
    return rows, rec


def _label_cells(rec: Sequence[Sequence[int]], k: int) -> list[tuple[int, int]]:
    cells = [(i, j) for i, r in enumerate(rec) for j, v in enumerate(r) if v == k]
    cells.sort(key=lambda c: -c[1])
    return cells


def _check_recording(rec: Sequence[Sequence[int]], r: int) -> None:
    for row in rec:
        for v in row:
            if not 1 <= v <= r:
                raise TableauError(f"recording label {v} outside 1..{r}")
    if not validate_keys(rec, (), frozenset()):
        raise TableauError("recording tableau is not semistandard")


def rho_col_inverse_keys(s: Rows, rec: Rows, r: int, odd) -> list[list[int]]:
    _check_recording(rec, r)
    if [len(x) for x in s] != [len(x) for x in rec]:
        raise TableauError("insertion and recording tableaux differ in shape")
    cols = rows_to_cols(s)
    rec = [list(x) for x in rec]
    out: list[list[int]] = [[] for _ in range(r)]
    for k in range(r, 1, -1):
        word = []
        for i, j in _label_cells(rec, k):
            if len(cols[j]) != i + 1:
                raise TableauError("malformed recording tableau")
            word.append(col_uninsert_keys(cols, j, odd))
            rec[i].pop()
        out[k - 1] = word
        while rec and not rec[-1]:
            rec.pop()
    first = cols_to_rows(cols)
    if len(first) > 1:
        raise TableauError("malformed recording tableau")
    out[0] = first[0] if first else []
    return out


def rho_row_inverse_keys(s: Rows, rec: Rows, r: int, odd) -> list[list[int]]:
    _check_recording(rec, r)
    if [len(x) for x in s] != [len(x) for x in rec]:
        raise TableauError("insertion and recording tableaux differ in shape")
    rows = [list(x) for x in s]
    rec = [list(x) for x in rec]
    out: list[list[int]] = [[] for _ in range(r)]
    for k in range(r, 1, -1):
        word = []
        for i, j in _label_cells(rec, k):
            if len(rows[i]) != j + 1:
                raise TableauError("malformed recording tableau")
            word.append(row_uninsert_keys(rows, i, odd))
            rec[i].pop()
        word.reverse()
        out[k - 1] = word
        while rec and not rec[-1]:
            rec.pop()
    if len(rows) > 1:
        raise TableauError("malformed recording tableau")
    out[0] = rows[0] if rows else []
    return out


# ---------------------------------------------------------------------------
# public wrappers


def _require_straight(t: SuperTableau) -> None:
    if not t.is_straight():
        raise TableauError("insertion needs a straight-shape tableau")
    if not validate(t):
        raise TableauError("input tableau is not semistandard")


def row_insert(t: SuperTableau, a: str) -> SuperTableau:
    """(a -> T): Schensted row bumping adapted to parities."""
    _require_straight(t)
    rows = t.key_rows()
    row_insert_keys(rows, t.alphabet.rank(a), t.alphabet.odd_ranks())
    return SuperTableau.from_keys(t.alphabet, rows)


def col_insert(t: SuperTableau, a: str) -> SuperTableau:
    """(T <- a): column bumping adapted to parities."""
    _require_straight(t)
    cols = rows_to_cols(t.key_rows())
    col_insert_keys(cols, t.alphabet.rank(a), t.alphabet.odd_ranks())
    return SuperTableau.from_keys(t.alphabet, cols_to_rows(cols))


def _one_row_keys(tabs: Sequence[SuperTableau]) -> tuple[Alphabet, list[list[int]]]:
    if not tabs:
        raise TableauError("need at least one tableau")
    alph = tabs[0].alphabet
    words = []
    for t in tabs:
        if t.alphabet != alph:
            raise TableauError("tableaux over different alphabets")
        if len(t.rows) > 1 or not t.is_straight() or not validate(t):
            raise TableauError("expected a semistandard single-row tableau")
        words.append([alph.rank(x) for x in (t.rows[0] if t.rows else ())])
    return alph, words


def _recording(rec: Rows, r: int) -> SuperTableau:
    return SuperTableau(preset(f"[{r}]"), [[str(v) for v in row] for row in rec])


def rho_col(tabs: Sequence[SuperTableau]) -> tuple[SuperTableau, SuperTableau]:
    alph, words = _one_row_keys(tabs)
    s, rec = rho_col_keys(words, alph.odd_ranks())
    return SuperTableau.from_keys(alph, s), _recording(rec, len(tabs))


def rho_row(tabs: Sequence[SuperTableau]) -> tuple[SuperTableau, SuperTableau]:
    alph, words = _one_row_keys(tabs)
    s, rec = rho_row_keys(words, alph.odd_ranks())
    return SuperTableau.from_keys(alph, s), _recording(rec, len(tabs))


def _inverse_inputs(s: SuperTableau, rec: SuperTableau, r: int):
    if not s.is_straight() or not rec.is_straight():
        raise TableauError("expected straight shapes")
    rec_rows = [[int(x) for x in row] for row in rec.rows]
    return s.key_rows(), rec_rows


def rho_col_inverse(s: SuperTableau, rec: SuperTableau, r: int) -> list[SuperTableau]:
    rows, rec_rows = _inverse_inputs(s, rec, r)
    words = rho_col_inverse_keys(rows, rec_rows, r, s.alphabet.odd_ranks())
    return [SuperTableau.from_keys(s.alphabet, [w]) for w in words]


def rho_row_inverse(s: SuperTableau, rec: SuperTableau, r: int) -> list[SuperTableau]:
    rows, rec_rows = _inverse_inputs(s, rec, r)
    words = rho_row_inverse_keys(rows, rec_rows, r, s.alphabet.odd_ranks())
    return [SuperTableau.from_keys(s.alphabet, [w]) for w in words]


def rotate_pi(t: SuperTableau, rect: tuple[int, int] | None = None) -> SuperTableau:
    """Rotate by 180 degrees inside a ``rows x cols`` rectangle (default: the bounding box).

    The result lives over the order-reversed alphabet.
    """
    height, width = rect if rect is not None else (len(t.outer), t.outer.part(0))
    if len(t.outer) > height or t.outer.part(0) > width:
        raise TableauError("tableau does not fit the rotation rectangle")
    rows = list(t.rows) + [()] * (height - len(t.rows))
    new_rows = [tuple(reversed(rows[height - 1 - i])) for i in range(height)]
    new_inner = [width - t.inner.part(height - 1 - i) - len(rows[height - 1 - i]) for i in range(height)]
    return SuperTableau(pi_dual(t.alphabet), new_rows, new_inner)


def glue(s: SuperTableau, t: SuperTableau) -> SuperTableau:
    """S * T: fill the inner shape of T with the straight tableau S."""
    if not s.is_straight():
        raise TableauError("left factor must have straight shape")
    if tuple(t.inner) != tuple(s.outer):
        raise TableauError(f"inner shape {t.inner} differs from {s.outer}")
    alph = star(s.alphabet, t.alphabet)
    n = max(len(s.rows), len(t.rows))
    rows = [
        (s.rows[i] if i < len(s.rows) else ()) + (t.rows[i] if i < len(t.rows) else ())
        for i in range(n)
    ]
    out = SuperTableau(alph, rows)
    if not validate(out):
        raise TableauError("glued tableau is not semistandard")
    return out


def split(u: SuperTableau, a: Alphabet, b: Alphabet) -> tuple[SuperTableau, SuperTableau]:
    """Inverse of :func:`glue`: separate the cells by alphabet membership."""
    left, right = [], []
    for row in u.rows:
        k = 0
        while k < len(row) and row[k] in a:
            k += 1
        if any(x not in b for x in row[k:]):
            raise TableauError("cells are not split by alphabet order")
        left.append(row[:k])
        right.append(row[k:])
    s = SuperTableau(a, left)
    return s, SuperTableau(b, right, [len(r) for r in left])


def key_tableau(mu: Sequence[int], r: int) -> SuperTableau:
    """Row i (1-based) filled with the letter i."""
    mu = Partition(mu)
    if len(mu) > r:
        raise TableauError(f"length of {tuple(mu)} exceeds {r}")
    return SuperTableau(preset(f"[{r}]"), [[str(i + 1)] * m for i, m in enumerate(mu)])


# ---------------------------------------------------------------------------
# enumeration


def enumerate_keys(
    nletters: int,
    odd,
    outer: Sequence[int],
    inner: Sequence[int] = (),
) -> Iterator[list[list[int]]]:
    """All semistandard fillings of ``outer/inner`` by keys ``0..nletters-1``."""
    outer = tuple(outer)
    inner = padded(tuple(inner), len(outer))
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    rows: list[list[int]] = [[] for _ in outer]
    ncells = len(cells)

    def rec(pos: int):
        if pos == ncells:
            yield [list(r) for r in rows]
            return
        i, j = cells[pos]
        lo = 0
        if j > inner[i]:
            left = rows[i][-1]
            lo = left + 1 if left in odd else left
            # an odd left neighbour forbids repeating it; an even one allows it
        up = None
        if i > 0 and inner[i - 1] <= j < outer[i - 1]:
            up = rows[i - 1][j - inner[i - 1]]
            lo = max(lo, up)
        for v in range(lo, nletters):
            if up is not None and v == up and v not in odd:
                continue
            if j > inner[i] and v == rows[i][-1] and v in odd:
                continue
            rows[i].append(v)
            yield from rec(pos + 1)
            rows[i].pop()

    yield from rec(0)


def enumerate_sst(alph: Alphabet, outer: Sequence[int], inner: Sequence[int] = ()) -> Iterator[SuperTableau]:
    """All tableaux of shape ``outer/inner`` over a finite alphabet."""
    inner_p = padded(tuple(inner), len(tuple(outer)))
    for rows in enumerate_keys(len(alph), alph.odd_ranks(), outer, inner_p):
        yield SuperTableau.from_keys(alph, rows, inner_p)
