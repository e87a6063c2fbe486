"""A_{n-1}-crystal structure on words over [n] and its dual [-n].

A word ``w`` is a tuple of nonzero integers read as the tensor product
``w[0] (x) w[1] (x) ...`` (Kashiwara's convention).  Letter ``j`` carries a
``+`` for colour ``j`` and letter ``j+1`` a ``-``; on the dual letters the
roles swap, so ``-j`` carries ``-`` and ``-(j+1)`` carries ``+``.
``None`` stands for the zero element.
"""

from __future__ import annotations

from typing import Sequence

Word = tuple[int, ...]


class CrystalError(ValueError):
    pass


def check_word(w: Sequence[int], n: int) -> Word:
    w = tuple(int(x) for x in w)
    for x in w:
        if x == 0 or abs(x) > n:
            raise CrystalError(f"letter {x} outside [n] and [-n] for n={n}")
    return w


def weight(w: Sequence[int], n: int) -> tuple[int, ...]:
    out = [0] * n
    for x in w:
        if x > 0:
            out[x - 1] += 1
        else:
            out[-x - 1] -= 1
    return tuple(out)


def unmatched(w: Sequence[int], j: int) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled ``-`` and ``+`` signs for colour ``j``,
    after removing adjacent ``+ -`` pairs."""
    minus: list[int] = []
    plus: list[int] = []
    up, down = j, j + 1
    for pos, x in enumerate(w):
        if x == up or x == -down:
            plus.append(pos)
        elif x == down or x == -up:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def _raise(x: int, j: int) -> int:
    # e-direction change of a single letter
    return j if x == j + 1 else -(j + 1)


def _lower(x: int, j: int) -> int:
    return j + 1 if x == j else -j


def eps(w: Sequence[int], j: int) -> int:
    return len(unmatched(w, j)[0])


def phi(w: Sequence[int], j: int) -> int:
    return len(unmatched(w, j)[1])


def e_tilde(w: Sequence[int], j: int) -> Word | None:
    minus, _ = unmatched(w, j)
    if not minus:
        return None
    p = minus[-1]
    out = list(w)
    out[p] = _raise(out[p], j)
    return tuple(out)


def f_tilde(w: Sequence[int], j: int) -> Word | None:
    _, plus = unmatched(w, j)
    if not plus:
        return None
    p = plus[0]
    out = list(w)
    out[p] = _lower(out[p], j)
    return tuple(out)


def e_tilde_pos(w: Sequence[int], j: int) -> int | None:
    """Position that ``e_tilde`` would change, or None."""
    minus, _ = unmatched(w, j)
    return minus[-1] if minus else None


def f_tilde_pos(w: Sequence[int], j: int) -> int | None:
    _, plus = unmatched(w, j)
    return plus[0] if plus else None


def weyl_S(w: Sequence[int], j: int) -> Word:
    """Simple reflection: the unmatched block ``-^a +^b`` becomes ``-^b +^a``."""
    minus, plus = unmatched(w, j)
    k = len(plus) - len(minus)
    if k == 0:
        return tuple(w)
    out = list(w)
    if k > 0:
        for p in plus[:k]:
            out[p] = _lower(out[p], j)
    else:
        for p in minus[len(minus) + k:]:
            out[p] = _raise(out[p], j)
    return tuple(out)


def weyl_S_iterated(w: Sequence[int], j: int, n: int) -> Word:
    """The same reflection through repeated operator application (reference version)."""
    wt = weight(w, n)
    k = wt[j - 1] - wt[j]
    out: Word | None = tuple(w)
    for _ in range(abs(k)):
        out = f_tilde(out, j) if k > 0 else e_tilde(out, j)
        assert out is not None
    return out


def _through(w: Sequence[int], s: int, t: int) -> Word:
    # S_{s+1} S_{s+2} ... S_{t-1} (w), rightmost factor first
    x = tuple(w)
    for j in range(t - 1, s, -1):
        x = weyl_S(x, j)
    return x


def eps_alpha(w: Sequence[int], s: int, t: int) -> int:
    if not 1 <= s < t:
        raise CrystalError("need 1 <= s < t")
    return eps(_through(w, s, t), s)


def phi_alpha(w: Sequence[int], s: int, t: int) -> int:
    if not 1 <= s < t:
        raise CrystalError("need 1 <= s < t")
    return phi(_through(w, s, t), s)


def root_terms(w: Sequence[int], n: int) -> dict[tuple[int, int], int]:
    """min(eps_alpha, phi_alpha) for each positive root alpha = e_s - e_t."""
    out = {}
    for t in range(2, n + 1):
        x = tuple(w)
        for s in range(t - 1, 0, -1):
            minus, plus = unmatched(x, s)
            out[(s, t)] = min(len(minus), len(plus))
            x = weyl_S(x, s)
    return out


def charge(w: Sequence[int], n: int) -> int:
    """Sum over positive roots of min(eps_alpha, phi_alpha)."""
    total = 0
    for t in range(2, n + 1):
        x = tuple(w)
        for s in range(t - 1, 0, -1):
            minus, plus = unmatched(x, s)
            total += min(len(minus), len(plus))
            if s > 1:
                x = weyl_S(x, s)
    return total


def is_dominant(wt: Sequence[int]) -> bool:
    return all(wt[i] >= wt[i + 1] for i in range(len(wt) - 1))


def to_dominant(w: Sequence[int], n: int, strategy: str = "bubble") -> tuple[Word, tuple[int, ...]]:
    """Apply reflections until the weight is weakly decreasing.

    Returns the dominant word and the sequence of reflection indices used.
    ``strategy`` picks the leftmost ("bubble") or rightmost ("rightmost")
    descent each time; the result must not depend on it.
    """
    x = tuple(w)
    used = []
    while True:
        wt = weight(x, n)
        descents = [j for j in range(1, n) if wt[j - 1] < wt[j]]
        if not descents:
            return x, tuple(used)
        j = descents[0] if strategy == "bubble" else descents[-1]
        x = weyl_S(x, j)
        used.append(j)


def _charge_western(u: Sequence[int]) -> int:
    # Lascoux-Schutzenberger charge of a left-to-right word with partition content.
    u = list(u)
    alive = [True] * len(u)
    remaining = len(u)
    total = 0
    while remaining:
        top = max(u[p] for p in range(len(u)) if alive[p])
        # 1 is the first one found reading from the right
        pos = max(p for p in range(len(u)) if alive[p] and u[p] == 1)
        alive[pos] = False
        index = 0
        for k in range(2, top + 1):
            p = pos - 1
            wrapped = False
            while True:
                if p < 0:
                    p = len(u) - 1
                    wrapped = True
                if alive[p] and u[p] == k:
                    break
                p -= 1
            if wrapped:
                index += 1
            total += index
            alive[p] = False
            pos = p
        remaining -= top
    return total


def charge_LS(w: Sequence[int], n: int | None = None) -> int:
    """Lascoux-Schutzenberger charge of a word over [n] with partition content.

    Crystal words here are tensor-ordered, so the classical statistic is taken
    on the reversed word.
    """
    w = tuple(w)
    if any(x <= 0 for x in w):
        raise CrystalError("charge_LS needs positive letters; use charge_LS_general")
    m = max(w, default=0)
    n = m if n is None else n
    wt = weight(w, n)
    if not is_dominant(wt) or any(x < 0 for x in wt):
        raise CrystalError(f"content {wt} is not a partition")
    return _charge_western(tuple(reversed(w)))


def charge_LS_general(w: Sequence[int], n: int) -> int:
    """LS charge of any word: dual letters become complementary columns, then
    the word is reflected to dominant weight."""
    flat: list[int] = []
    for x in w:
        if x > 0:
            flat.append(x)
        else:
            flat.extend(k for k in range(1, n + 1) if k != -x)
    dom, _ = to_dominant(tuple(flat), n)
    return charge_LS(dom, n)


def highest_weight_path(w: Sequence[int], n: int) -> tuple[Word, tuple[int, ...]]:
    """Raise with the smallest available colour until no e_tilde applies."""
    x = tuple(w)
    path = []
    while True:
        for j in range(1, n):
            y = e_tilde(x, j)
            if y is not None:
                x = y
                path.append(j)
                break
        else:
            return x, tuple(path)


def equiv(w1: Sequence[int], w2: Sequence[int], n: int, allow_shift: bool = False) -> bool:
    """True when some isomorphism of connected components maps w1 to w2.

    With ``allow_shift`` the weights may differ by a multiple of (1, ..., 1).
    """
    h1, p1 = highest_weight_path(w1, n)
    h2, p2 = highest_weight_path(w2, n)
    if p1 != p2:
        return False
    a, b = weight(h1, n), weight(h2, n)
    if allow_shift:
        shift = a[0] - b[0]
        return all(x - y == shift for x, y in zip(a, b))
    return a == b
