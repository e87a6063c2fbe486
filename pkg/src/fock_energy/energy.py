"""Local energy H, the R-matrix on pairs of level-1 elements, the global energy D,
and the matrix model giving n-tuples an A_{n-1}-crystal structure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import crystal
from .alphabet import Alphabet
from .psst import FockTuple, Level1, PsstError
from .rational import RationalTableau

# sign tags: which alphabet the letter comes from
FROM_A = 0
FROM_B = 1

Entry = tuple[tuple[int, ...], tuple[int, ...]]  # (plus ranks, minus ranks)


class EnergyError(ValueError):
    pass


@dataclass(frozen=True)
class Sign:
    """One sign together with the letter occurrence that produced it.

    ``side`` names the row holding the letter: "T1+", "T2+", "T1-" or "T2-".
    """

    sign: int  # +1 or -1
    source: int  # FROM_A or FROM_B
    letter: int  # rank in its alphabet
    side: str
    index: int  # occurrence number among equal letters on that side


SignSeq = tuple[Sign, ...]


class Pairing:
    """Parity data for one (A, B) pair; all kernels take entries as rank tuples."""

    def __init__(self, a: Alphabet, b: Alphabet, cache: bool = True):
        self.a, self.b = a, b
        self.odd_a = a.odd_ranks()
        self.odd_b = b.odd_ranks()
        # pair -> H and pair -> R-matrix image; both are pure functions of the pair
        self._h: dict | None = {} if cache else None
        self._r: dict | None = {} if cache else None

    # -- signs -----------------------------------------------------------
    def signs(self, e1: Entry, e2: Entry) -> SignSeq:
        out: list[Sign] = []
        p1, p2 = Counter(e1[0]), Counter(e2[0])
        for a in sorted(set(p1) | set(p2), reverse=True):
            m1, m2 = p1[a], p2[a]
            plus = [Sign(1, FROM_A, a, "T1+", i) for i in range(m1)]
            minus = [Sign(-1, FROM_A, a, "T2+", i) for i in range(m2)]
            out.extend(plus + minus if a in self.odd_a else minus + plus)
        n1, n2 = Counter(e1[1]), Counter(e2[1])
        for b in sorted(set(n1) | set(n2)):
            m1, m2 = n1[b], n2[b]
            plus = [Sign(1, FROM_B, b, "T2-", i) for i in range(m2)]
            minus = [Sign(-1, FROM_B, b, "T1-", i) for i in range(m1)]
            out.extend(plus + minus if b in self.odd_b else minus + plus)
        return tuple(out)

    def reduce(self, e1: Entry, e2: Entry) -> tuple[int, int, list[Sign], list[Sign]]:
        return reduce_signs(self.signs(e1, e2))

    def local_H(self, e1: Entry, e2: Entry) -> int:
        if self._h is None:
            return self._local_H(e1, e2)
        key = (e1, e2)
        h = self._h.get(key)
        if h is None:
            h = self._h[key] = self._local_H(e1, e2)
        return h

    def _local_H(self, e1: Entry, e2: Entry) -> int:
        eps, phi, _, _ = self.reduce(e1, e2)
        k1 = len(e1[0]) - len(e1[1])
        k2 = len(e2[0]) - len(e2[1])
        if phi - eps != k1 - k2:
            raise EnergyError(f"phi - eps = {phi - eps} but k1 - k2 = {k1 - k2}")
        return -min(eps, phi)

    def r_matrix(self, e1: Entry, e2: Entry) -> tuple[Entry, Entry]:
        """Swap charges by moving the boxes behind the outermost surviving signs."""
        if self._r is None:
            return self._r_matrix(e1, e2)
        key = (e1, e2)
        out = self._r.get(key)
        if out is None:
            out = self._r[key] = self._r_matrix(e1, e2)
        return out

    def _r_matrix(self, e1: Entry, e2: Entry) -> tuple[Entry, Entry]:
        k1 = len(e1[0]) - len(e1[1])
        k2 = len(e2[0]) - len(e2[1])
        if k1 == k2:
            return e1, e2
        eps, phi, minus, plus = self.reduce(e1, e2)
        if phi - eps != k1 - k2:
            raise EnergyError(f"phi - eps = {phi - eps} but k1 - k2 = {k1 - k2}")
        p1, m1 = list(e1[0]), list(e1[1])
        p2, m2 = list(e2[0]), list(e2[1])
        if k1 > k2:
            for s in plus[: k1 - k2]:
                if s.source == FROM_A:
                    p1.remove(s.letter)
                    p2.append(s.letter)
                else:
                    m2.remove(s.letter)
                    m1.append(s.letter)
        else:
            for s in minus[len(minus) - (k2 - k1):]:
                if s.source == FROM_A:
                    p2.remove(s.letter)
                    p1.append(s.letter)
                else:
                    m1.remove(s.letter)
                    m2.append(s.letter)
        out1 = (tuple(sorted(p1)), tuple(sorted(m1)))
        out2 = (tuple(sorted(p2)), tuple(sorted(m2)))
        for e in (out1, out2):
            if not (_strict_ok(e[0], self.odd_a) and _strict_ok(e[1], self.odd_b)):
                raise EnergyError("R-matrix produced a repeated odd letter")
        return out1, out2

    # -- global energy -----------------------------------------------------
    def global_D(self, entries: Sequence[Entry]) -> int:
        """Sum of H_i after the R-matrix moves, computed right to left per j."""
        total = 0
        for j in range(1, len(entries)):
            x = entries[j]
            for i in range(j - 1, -1, -1):
                total += self.local_H(entries[i], x)
                if i:
                    x = self.r_matrix(entries[i], x)[0]
        return total

    def global_D_direct(self, entries: Sequence[Entry]) -> int:
        """Literal double sum: H_i of s_{i+1} ... s_{j-1} applied to the whole tuple."""
        n = len(entries)
        total = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                t = list(entries)
                for k in range(j - 1, i, -1):
                    t[k], t[k + 1] = self.r_matrix(t[k], t[k + 1])
                total += self.local_H(t[i], t[i + 1])
        return total

    def r_matrix_at(self, entries: Sequence[Entry], i: int) -> tuple[Entry, ...]:
        """The R-matrix acting on positions i, i+1 (1-based i)."""
        t = list(entries)
        t[i - 1], t[i] = self.r_matrix(t[i - 1], t[i])
        return tuple(t)

    # -- matrix model --------------------------------------------------------
    def counts(self, entries: Sequence[Entry]) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
        n = len(entries)
        ma: dict[int, list[int]] = {}
        mb: dict[int, list[int]] = {}
        for j, (p, m) in enumerate(entries):
            for a in p:
                ma.setdefault(a, [0] * n)[j] += 1
            for b in m:
                mb.setdefault(b, [0] * n)[j] += 1
        return ma, mb

    def tuple_word(self, entries: Sequence[Entry]) -> tuple[tuple[int, ...], list[tuple[int, int, int, int]]]:
        """Column words of the row tableaux, A rows from the top letter down, then
        B rows upward.  Segments are (source, letter, start, stop)."""
        ma, mb = self.counts(entries)
        word: list[int] = []
        segs = []
        for a in sorted(ma, reverse=True):
            start = len(word)
            word.extend(_row_word(ma[a], a in self.odd_a, positive=True))
            segs.append((FROM_A, a, start, len(word)))
        for b in sorted(mb):
            start = len(word)
            word.extend(_row_word(mb[b], b in self.odd_b, positive=False))
            segs.append((FROM_B, b, start, len(word)))
        return tuple(word), segs

    def from_word(self, word: Sequence[int], segs, n: int) -> tuple[Entry, ...]:
        plus: list[list[int]] = [[] for _ in range(n)]
        minus: list[list[int]] = [[] for _ in range(n)]
        for source, letter, start, stop in segs:
            for x in word[start:stop]:
                (plus if source == FROM_A else minus)[abs(x) - 1].append(letter)
        out = tuple((tuple(sorted(p)), tuple(sorted(m))) for p, m in zip(plus, minus))
        for p, m in out:
            if not (_strict_ok(p, self.odd_a) and _strict_ok(m, self.odd_b)):
                raise EnergyError("crystal operator produced an invalid entry")
        return out

    def crystal_op(self, entries: Sequence[Entry], op: str, j: int) -> tuple[Entry, ...] | None:
        n = len(entries)
        word, segs = self.tuple_word(entries)
        fn = {"e": crystal.e_tilde, "f": crystal.f_tilde, "S": crystal.weyl_S}[op]
        out = fn(word, j)
        if out is None:
            return None
        return self.from_word(out, segs, n)

    def D_via_roots(self, entries: Sequence[Entry]) -> int:
        word, _ = self.tuple_word(entries)
        return -crystal.charge(word, len(entries))


def _strict_ok(row: Sequence[int], odd) -> bool:
    return all(not (row[i] == row[i + 1] and row[i] in odd) for i in range(len(row) - 1))


def _row_word(counts: Sequence[int], odd: bool, positive: bool) -> list[int]:
    """Column word of the row tableau attached to one matrix row."""
    letters = [j + 1 for j, c in enumerate(counts) for _ in range(c)]
    if odd and any(c > 1 for c in counts):
        raise EnergyError("odd row with an entry above 1")
    if positive:
        # even: a single row, read right to left; odd: a single column, top to bottom
        return letters[::-1] if not odd else letters
    # even: a negative row [-j...] ascending, read right to left -> j ascending
    # odd: a negative column, ascending -> j descending
    return [-x for x in letters] if not odd else [-x for x in letters[::-1]]


def reduce_signs(signs: Sequence[Sign]) -> tuple[int, int, list[Sign], list[Sign]]:
    """Cancel adjacent (+ -) pairs; returns (eps, phi, surviving minus, surviving plus)."""
    stack: list[Sign] = []
    minus: list[Sign] = []
    for s in signs:
        if s.sign > 0:
            stack.append(s)
        elif stack:
            stack.pop()
        else:
            minus.append(s)
    return len(minus), len(stack), minus, stack


def sign_string(signs: Sequence[Sign]) -> str:
    return " ".join("+" if s.sign > 0 else "-" for s in signs)


# ---------------------------------------------------------------------------
# public wrappers on Level1 / FockTuple


def _entry(e: Level1, a: Alphabet, b: Alphabet) -> Entry:
    return tuple(map(a.rank, e.plus)), tuple(map(b.rank, e.minus))


def _level1(x: Entry, a: Alphabet, b: Alphabet) -> Level1:
    return Level1(tuple(map(a.id_of, x[0])), tuple(map(b.id_of, x[1])))


def sign_sequence(t1: Level1, t2: Level1, a: Alphabet, b: Alphabet) -> SignSeq:
    return Pairing(a, b).signs(_entry(t1, a, b), _entry(t2, a, b))


def reduce(signs: Sequence[Sign]) -> tuple[int, int, SignSeq]:
    eps, phi, minus, plus = reduce_signs(signs)
    return eps, phi, tuple(minus) + tuple(plus)


def local_H(t1: Level1, t2: Level1, a: Alphabet, b: Alphabet) -> int:
    return Pairing(a, b).local_H(_entry(t1, a, b), _entry(t2, a, b))


def r_matrix(t1: Level1, t2: Level1, a: Alphabet, b: Alphabet) -> tuple[Level1, Level1]:
    x, y = Pairing(a, b).r_matrix(_entry(t1, a, b), _entry(t2, a, b))
    return _level1(x, a, b), _level1(y, a, b)


def global_D(ft: FockTuple) -> int:
    return Pairing(ft.a, ft.b).global_D(ft.keys())


def global_D_direct(ft: FockTuple) -> int:
    return Pairing(ft.a, ft.b).global_D_direct(ft.keys())


def energy_terms(ft: FockTuple) -> list[tuple[int, int, int]]:
    """(i, j, H term) for each pair i < j, 1-based."""
    pr = Pairing(ft.a, ft.b)
    entries = ft.keys()
    out = []
    for j in range(1, len(entries)):
        x = entries[j]
        for i in range(j - 1, -1, -1):
            out.append((i + 1, j + 1, pr.local_H(entries[i], x)))
            if i:
                x = pr.r_matrix(entries[i], x)[0]
    out.sort()
    return out


def D_via_roots(ft: FockTuple) -> int:
    return Pairing(ft.a, ft.b).D_via_roots(ft.keys())


def tuple_word(ft: FockTuple) -> tuple[int, ...]:
    return Pairing(ft.a, ft.b).tuple_word(ft.keys())[0]


def tuple_crystal_op(ft: FockTuple, op: str, j: int) -> FockTuple | None:
    """``op`` is "e", "f" or "S" (the Weyl reflection)."""
    if not 1 <= j < ft.n:
        raise EnergyError(f"colour {j} outside 1..{ft.n - 1}")
    out = Pairing(ft.a, ft.b).crystal_op(ft.keys(), op, j)
    return None if out is None else FockTuple.from_keys(ft.a, ft.b, out)


def r_matrix_at(ft: FockTuple, i: int) -> FockTuple:
    return FockTuple.from_keys(ft.a, ft.b, Pairing(ft.a, ft.b).r_matrix_at(ft.keys(), i))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class AbMatrix:
    """Nonnegative matrix with rows indexed by letters of B and A, columns by 1..n.

    ``rows`` pairs a letter id with its n entries; zero rows are omitted and
    the rest are kept B first, then A, each ascending.
    """

    a: Alphabet
    b: Alphabet
    n: int
    rows: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        seen = set()
        for letter, entries in self.rows:
            if letter in seen:
                raise EnergyError(f"duplicate row {letter}")
            seen.add(letter)
            if len(entries) != self.n or any(x < 0 for x in entries):
                raise EnergyError(f"bad entries for row {letter}")
            if letter in self.a:
                odd = self.a.is_odd(letter)
            elif letter in self.b:
                odd = self.b.is_odd(letter)
            else:
                raise EnergyError(f"row letter {letter} in neither alphabet")
            if odd and any(x > 1 for x in entries):
                raise EnergyError(f"odd row {letter} must have 0/1 entries")

    def row(self, letter: str) -> tuple[int, ...]:
        return dict(self.rows).get(letter, (0,) * self.n)

    def to_json(self) -> dict:
        return {"rows": [{"letter": l, "entries": list(e)} for l, e in self.rows]}

    @classmethod
    def from_json(cls, data: dict, a: Alphabet, b: Alphabet, n: int) -> "AbMatrix":
        rows = tuple((r["letter"], tuple(int(x) for x in r["entries"])) for r in data["rows"])
        return _ordered(cls(a, b, n, rows))


def _row_order(m: AbMatrix, letter: str) -> tuple[int, int]:
    # B rows first, then A rows, each in its alphabet's order (display order)
    if letter in m.b:
        return (0, m.b.rank(letter))
    return (1, m.a.rank(letter))


def _ordered(m: AbMatrix) -> AbMatrix:
    rows = tuple(sorted(((l, e) for l, e in m.rows if any(e)), key=lambda r: _row_order(m, r[0])))
    return AbMatrix(m.a, m.b, m.n, rows)


def to_matrix(ft: FockTuple) -> AbMatrix:
    ma, mb = Pairing(ft.a, ft.b).counts(ft.keys())
    rows = [(ft.a.id_of(k), tuple(v)) for k, v in ma.items()]
    rows += [(ft.b.id_of(k), tuple(v)) for k, v in mb.items()]
    return _ordered(AbMatrix(ft.a, ft.b, ft.n, tuple(rows)))


def from_matrix(m: AbMatrix) -> FockTuple:
    plus: list[list[int]] = [[] for _ in range(m.n)]
    minus: list[list[int]] = [[] for _ in range(m.n)]
    for letter, entries in m.rows:
        for j, c in enumerate(entries):
            if letter in m.a:
                plus[j].extend([m.a.rank(letter)] * c)
            else:
                minus[j].extend([m.b.rank(letter)] * c)
    keys = [(tuple(sorted(p)), tuple(sorted(q))) for p, q in zip(plus, minus)]
    try:
        return FockTuple.from_keys(m.a, m.b, keys)
    except PsstError as exc:
        raise EnergyError(str(exc)) from None


def row_tableau(m: AbMatrix, letter: str) -> RationalTableau:
    """The rational tableau of one matrix row: a row or a column, on the positive
    side for letters of A and the negative side for letters of B."""
    counts = m.row(letter)
    n = m.n
    letters = [j + 1 for j, c in enumerate(counts) for _ in range(c)]
    total = len(letters)
    if letter in m.a:
        if m.a.is_odd(letter):
            return RationalTableau.from_rows(n, [(x,) for x in letters])
        return RationalTableau.from_rows(n, [tuple(letters)] if letters else [])
    if letter not in m.b:
        raise EnergyError(f"unknown row letter {letter}")
    if m.b.is_odd(letter):
        neg = [()] * (n - total) + [(-x,) for x in reversed(letters)]
        return RationalTableau.from_rows(n, [], neg)
    neg = [()] * (n - 1) + [tuple(sorted(-x for x in letters))]
    return RationalTableau.from_rows(n, [], neg)
