"""Iterated commutators and lower-central-series weight certificates.

Free-letter words carry no group relations: they are freely reduced
sequences of signed abstract symbols.  The Magnus substitution x -> 1 + X
(truncated) certifies lower-central-series depth: a word whose series has
no nonzero term below degree k lies in the k-th stage of the free group's
descending central series, which maps into the free product's.
"""

from __future__ import annotations

from typing import Sequence

from .words import Word, commutator as group_commutator, conjugate, multiply, reduce_word

# A free-letter word: ((symbol, +1|-1), ...), freely reduced.
FreeLetterWord = tuple[tuple[str, int], ...]

MAX_MAGNUS_DEGREE = 8


def free_reduce(seq) -> FreeLetterWord:
    out: list[tuple[str, int]] = []
    for sym, sign in seq:
        if out and out[-1] == (sym, -sign):
            out.pop()
        else:
            out.append((sym, sign))
    return tuple(out)


def letters(*symbols: str) -> list[FreeLetterWord]:
    return [((s, 1),) for s in symbols]


def fl_mul(*ws: FreeLetterWord) -> FreeLetterWord:
    return free_reduce([p for w in ws for p in w])


def fl_inv(w: FreeLetterWord) -> FreeLetterWord:
    return tuple((s, -sg) for s, sg in reversed(w))


def fl_commutator(a: FreeLetterWord, b: FreeLetterWord) -> FreeLetterWord:
    return fl_mul(a, b, fl_inv(a), fl_inv(b))


def iterated_commutator(ws: Sequence[FreeLetterWord]) -> FreeLetterWord:
    """Right-nested [w1,[w2,[...,[w_{k-1},w_k]...]]]."""
    if not ws:
        raise ValueError("need at least one word")
    acc = ws[-1]
    for w in reversed(ws[:-1]):
        acc = fl_commutator(w, acc)
    return acc


def delta_identity_check(g: Word, f: Word) -> bool:
    """g f g^-1 == [g,f] f, as reduced words in the free product."""
    if g.groups != f.groups:
        raise ValueError("words over different group lists")
    return conjugate(g, f) == multiply(group_commutator(g, f), f)


def product_expansion_check(a: FreeLetterWord, b: FreeLetterWord,
                            c: FreeLetterWord) -> bool:
    """[ab, c] == [a,[b,c]] . [b,c] . [a,c], verified by free reduction."""
    lhs = fl_commutator(fl_mul(a, b), c)
    bc = fl_commutator(b, c)
    rhs = fl_mul(fl_commutator(a, bc), bc, fl_commutator(a, c))
    return lhs == rhs


def _series_letter(sym: str, sign: int, degree: int) -> dict:
    # x -> 1 + X ; x^-1 -> 1 - X + X^2 - ... (truncated)
    series = {(): 1}
    if sign == 1:
        series[(sym,)] = 1
    else:
        coeff = -1
        for d in range(1, degree + 1):
            series[(sym,) * d] = coeff
            coeff = -coeff
    return series


def _series_mul(a: dict, b: dict, degree: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if len(ma) + len(mb) > degree:
                continue
            key = ma + mb
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def magnus_series(w: FreeLetterWord, degree: int) -> dict:
    """Truncated non-commutative Magnus expansion of a free-letter word."""
    series = {(): 1}
    for sym, sign in w:
        series = _series_mul(series, _series_letter(sym, sign, degree), degree)
    return series


def magnus_weight(w: FreeLetterWord, degree: int) -> int | None:
    """Minimal degree of a nonzero term of (series - 1), or None if > degree.

    None means the weight is at least degree + 1; it is never a silent
    truncation artefact.
    """
    if degree > MAX_MAGNUS_DEGREE:
        raise ValueError(f"degree cap is {MAX_MAGNUS_DEGREE}")
    series = magnus_series(w, degree)
    weights = [len(mon) for mon, c in series.items() if mon and c]
    return min(weights) if weights else None
