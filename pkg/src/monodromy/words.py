"""Reduced-word calculus in a free product of finite groups.

A word is an alternating sequence of letters (factor index, non-identity
element index).  Reduction merges adjacent same-factor letters through the
Cayley table and drops identity letters, yielding the unique normal form.
Words are immutable values; all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import FiniteGroup


@dataclass(frozen=True)
class Letter:
    factor: int  # 0-based coordinate
    elem: int    # non-identity element index of groups[factor]


@dataclass(frozen=True)
class Word:
    groups: tuple[FiniteGroup, ...]
    letters: tuple[Letter, ...]

    def __post_init__(self):
        prev = None
        for lt in self.letters:
            if not 0 <= lt.factor < len(self.groups):
                raise ValueError(f"factor index out of range: {lt.factor}")
            if not 0 < lt.elem < self.groups[lt.factor].order:
                raise ValueError(f"bad element index {lt.elem} in factor {lt.factor}")
            if prev is not None and prev == lt.factor:
                raise ValueError("word not reduced: adjacent letters share a factor")
            prev = lt.factor

    def __len__(self):
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self):
        return format_word(self)


def _check_same_groups(a: Word, b: Word):
    if a.groups != b.groups:
        raise ValueError("words are over different group lists")


def empty_word(groups: Sequence[FiniteGroup]) -> Word:
    return Word(tuple(groups), ())


def single(groups: Sequence[FiniteGroup], factor: int, elem: int) -> Word:
    """One-letter word; the identity element gives the empty word."""
    groups = tuple(groups)
    if elem % groups[factor].order == 0:
        return Word(groups, ())
    return Word(groups, (Letter(factor, elem),))


def reduce_word(raw: Iterable[tuple[int, int]], groups: Sequence[FiniteGroup]) -> Word:
    """Reduce a raw (factor, elem) sequence to alternating normal form."""
    groups = tuple(groups)
    stack: list[tuple[int, int]] = []
    for factor, elem in raw:
        G = groups[factor]
        if not 0 <= elem < G.order:
            raise ValueError(f"element index {elem} out of range for factor {factor}")
        if elem == 0:
            continue
        if stack and stack[-1][0] == factor:
            merged = G.op(stack[-1][1], elem)
            stack.pop()
            if merged != 0:
                # re-push; a merge can expose a new same-factor neighbour only
                # after a deletion, which the stack handles naturally
                if stack and stack[-1][0] == factor:
                    raise AssertionError("stack invariant broken")
                stack.append((factor, merged))
        else:
            stack.append((factor, elem))
    return Word(groups, tuple(Letter(f, e) for f, e in stack))


def multiply(w1: Word, w2: Word) -> Word:
    _check_same_groups(w1, w2)
    raw = [(lt.factor, lt.elem) for lt in w1.letters + w2.letters]
    return reduce_word(raw, w1.groups)


def invert(w: Word) -> Word:
    raw = [(lt.factor, w.groups[lt.factor].inverse(lt.elem))
           for lt in reversed(w.letters)]
    return reduce_word(raw, w.groups)


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    _check_same_groups(a, b)
    return multiply(multiply(a, b), multiply(invert(a), invert(b)))


def conjugate(g: Word, w: Word) -> Word:
    """g w g^-1."""
    return multiply(multiply(g, w), invert(g))


def project(w: Word) -> tuple[int, ...]:
    """Image under the retraction onto the direct product, per coordinate."""
    acc = [0] * len(w.groups)
    for lt in w.letters:
        acc[lt.factor] = w.groups[lt.factor].op(acc[lt.factor], lt.elem)
    return tuple(acc)


def is_in_kernel(w: Word) -> bool:
    return all(v == 0 for v in project(w))


_X_TOKEN = re.compile(r"x([0-9]+)\^?(-?[0-9]+)?$")
_NAME_TOKEN = re.compile(r"s([0-9]+):(.+)$")


def parse_word(text: str, groups: Sequence[FiniteGroup]) -> Word:
    """Parse the CLI word syntax.

    Tokens separated by '*': x<i>^<k> is the k-th power of generator
    (element index 1) of coordinate i; s<i>:<name> picks an element of
    coordinate i by display name.  Coordinates are 1-based.  'e' or an
    empty string is the identity.
    """
    groups = tuple(groups)
    text = text.strip()
    if text in ("", "e", "1"):
        return empty_word(groups)
    raw: list[tuple[int, int]] = []
    for token in text.split("*"):
        token = token.strip()
        m = _X_TOKEN.match(token)
        if m:
            i = int(m.group(1))
            k = 1 if m.group(2) is None else int(m.group(2))
            if not 1 <= i <= len(groups):
                raise ValueError(f"coordinate {i} out of range in token {token!r}")
            G = groups[i - 1]
            if G.order < 2:
                raise ValueError(f"factor {i} is trivial; has no generator")
            raw.append((i - 1, G.power(1, k)))
            continue
        m = _NAME_TOKEN.match(token)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= len(groups):
                raise ValueError(f"coordinate {i} out of range in token {token!r}")
            raw.append((i - 1, groups[i - 1].index_of(m.group(2))))
            continue
        raise ValueError(f"cannot parse word token {token!r}")
    return reduce_word(raw, groups)


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    parts = []
    for lt in w.letters:
        name = w.groups[lt.factor].names[lt.elem]
        cyclic_name = name.replace("x", f"x{lt.factor + 1}")
        if re.fullmatch(r"x(\^-?[0-9]+)?", name):
            parts.append(cyclic_name)
        else:
            parts.append(f"s{lt.factor + 1}:{name}")
    return "*".join(parts)
