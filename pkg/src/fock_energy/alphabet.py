"""Z2-graded totally ordered alphabets with finite truncation windows."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

EVEN = 0
ODD = 1

_PARITY_NAMES = {"even": EVEN, "odd": ODD}


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    id: str
    parity: int
    rank: int

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD


def letter_id(value: int, primed: bool = False) -> str:
    """Canonical id of an integer letter, e.g. ``letter_id(-2, True) == "-2'"``."""
    return f"{value}'" if primed else str(value)


_ID_RE = re.compile(r"^(-?\d+)('?)$")


def parse_letter_id(text: str) -> tuple[int, bool]:
    """Inverse of :func:`letter_id` for integer-valued ids."""
    m = _ID_RE.match(text)
    if not m:
        raise AlphabetError(f"not an integer letter id: {text!r}")
    return int(m.group(1)), bool(m.group(2))


# family -> (integer range function, default parity, primed)
_FINITE = re.compile(r"^\[(-?)(\d+)\]('?)$")
_INFINITE = {
    "pos": (lambda lo, hi: (max(lo, 1), hi), EVEN, False),
    "nonneg": (lambda lo, hi: (max(lo, 0), hi), EVEN, False),
    "neg": (lambda lo, hi: (lo, min(hi, -1)), EVEN, False),
    "primed-pos": (lambda lo, hi: (max(lo, 1), hi), ODD, True),
    "primed-nonneg": (lambda lo, hi: (max(lo, 0), hi), ODD, True),
    "primed-neg": (lambda lo, hi: (lo, min(hi, -1)), ODD, True),
}
_ALIASES = {
    "Z>0": "pos", "Z>=0": "nonneg", "Z<0": "neg",
    "Z>0'": "primed-pos", "Z>=0'": "primed-nonneg", "Z<0'": "primed-neg",
}


class Alphabet:
    """An ordered finite list of letters; rank is the position in the list.

    Two alphabets are equal when they list the same ids with the same
    parities in the same order; the family/window tags are descriptive only.
    """

    __slots__ = ("letters", "family", "window", "reversed", "_rank", "_parity", "_key")

    def __init__(
        self,
        letters: Iterable[tuple[str, int]],
        family: str = "custom",
        window: tuple[int, int] | None = None,
        reversed: bool = False,
    ):
        pairs = [(str(i), int(p)) for i, p in letters]
        ids = [i for i, _ in pairs]
        if len(set(ids)) != len(ids):
            raise AlphabetError("duplicate letter ids")
        for _, p in pairs:
            if p not in (EVEN, ODD):
                raise AlphabetError(f"bad parity {p}")
        self.letters = tuple(Letter(i, p, r) for r, (i, p) in enumerate(pairs))
        self.family = family
        self.window = window
        self.reversed = reversed
        self._rank = {l.id: l.rank for l in self.letters}
        self._parity = {l.id: l.parity for l in self.letters}
        self._key = tuple(pairs)

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __contains__(self, letter_id: object) -> bool:
        return letter_id in self._rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        body = "<".join(l.id for l in self.letters)
        return f"Alphabet({self.family}: {body})"

    # -- lookups -----------------------------------------------------------
    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(l.id for l in self.letters)

    def letter(self, letter_id: str) -> Letter:
        try:
            return self.letters[self._rank[letter_id]]
        except KeyError:
            raise AlphabetError(f"letter {letter_id!r} not in {self!r}") from None

    def rank(self, letter_id: str) -> int:
        try:
            return self._rank[letter_id]
        except KeyError:
            raise AlphabetError(f"letter {letter_id!r} not in {self!r}") from None

    def parity(self, letter_id: str) -> int:
        return self._parity[letter_id]

    def is_odd(self, letter_id: str) -> bool:
        return self._parity[letter_id] == ODD

    def compare(self, x: str, y: str) -> int:
        rx, ry = self.rank(x), self.rank(y)
        return (rx > ry) - (rx < ry)

    def ranks(self, ids: Sequence[str]) -> tuple[int, ...]:
        r = self._rank
        return tuple(r[i] for i in ids)

    def id_of(self, rank: int) -> str:
        return self.letters[rank].id

    def odd_ranks(self) -> frozenset[int]:
        return frozenset(l.rank for l in self.letters if l.parity == ODD)

    @property
    def even(self) -> tuple[Letter, ...]:
        return tuple(l for l in self.letters if l.parity == EVEN)

    @property
    def odd(self) -> tuple[Letter, ...]:
        return tuple(l for l in self.letters if l.parity == ODD)

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        if self.family != "custom" and self.family in _INFINITE or _FINITE.match(self.family or ""):
            out: dict = {"family": self.family}
            if self.window is not None:
                out["window"] = list(self.window)
            if self.reversed:
                out["reversed"] = True
            return out
        return {
            "custom": [
                {"id": l.id, "parity": "odd" if l.parity else "even"} for l in self.letters
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "Alphabet":
        if "custom" in data:
            try:
                letters = [(d["id"], _PARITY_NAMES[d["parity"]]) for d in data["custom"]]
            except (KeyError, TypeError) as exc:
                raise AlphabetError(f"bad custom alphabet: {exc}") from None
            return cls(letters)
        if "family" not in data:
            raise AlphabetError("alphabet needs 'family' or 'custom'")
        window = data.get("window")
        alph = preset(data["family"], tuple(window) if window is not None else None)
        return pi_dual(alph) if data.get("reversed") else alph


def preset(name: str, window: tuple[int, int] | None = None) -> Alphabet:
    """Build a named alphabet.

    Finite families are written ``[n]``, ``[-n]`` and their primed forms
    ``[n]'``/``[-n]'``; infinite ones (``pos``, ``nonneg``, ``neg`` and the
    ``primed-`` variants) need an inclusive integer ``window``.
    """
    name = _ALIASES.get(name, name)
    if name == "empty":
        return Alphabet([], family="empty")
    m = _FINITE.match(name)
    if m:
        neg, n, primed = m.group(1) == "-", int(m.group(2)), m.group(3) == "'"
        values = range(-n, 0) if neg else range(1, n + 1)
        parity = ODD if primed else EVEN
        return Alphabet([(letter_id(v, primed), parity) for v in values], family=name)
    if name not in _INFINITE:
        raise AlphabetError(f"unknown alphabet preset {name!r}")
    if window is None:
        raise AlphabetError(f"preset {name!r} needs a window")
    clip, parity, primed = _INFINITE[name]
    lo, hi = clip(int(window[0]), int(window[1]))
    if lo > hi:
        raise AlphabetError(f"empty window {window} for {name!r}")
    return Alphabet(
        [(letter_id(v, primed), parity) for v in range(lo, hi + 1)],
        family=name,
        window=(lo, hi),
    )


def pi_dual(alph: Alphabet) -> Alphabet:
    """Same letters and parities in the reverse order."""
    return Alphabet(
        [(l.id, l.parity) for l in reversed(alph.letters)],
        family=alph.family,
        window=alph.window,
        reversed=not alph.reversed,
    )


def star(a: Alphabet, b: Alphabet) -> Alphabet:
    """Concatenation with every letter of ``a`` below every letter of ``b``."""
    if set(a.ids) & set(b.ids):
        raise AlphabetError("star needs disjoint alphabets")
    if len(b) == 0:
        return a
    if len(a) == 0:
        return b
    return Alphabet([(l.id, l.parity) for l in a] + [(l.id, l.parity) for l in b])


def parse_alphabet_spec(text: str) -> Alphabet:
    """Parse a compact command-line spec such as ``primed-nonneg:0..3`` or ``[3]``.

    A comma list of ``id/parity`` pairs (``a/odd,b/even``) builds a custom alphabet.
    """
    text = text.strip()
    if text in ("", "empty"):
        return preset("empty")
    if "/" in text:
        letters = []
        for item in text.split(","):
            ident, _, par = item.partition("/")
            if par not in _PARITY_NAMES:
                raise AlphabetError(f"bad parity in {item!r}")
            letters.append((ident.strip(), _PARITY_NAMES[par]))
        return Alphabet(letters)
    name, _, win = text.partition(":")
    if win:
        lo, sep, hi = win.partition("..")
        if not sep:
            raise AlphabetError(f"bad window {win!r}; use lo..hi")
        try:
            return preset(name, (int(lo), int(hi)))
        except ValueError as exc:
            raise AlphabetError(str(exc)) from None
    return preset(name)
