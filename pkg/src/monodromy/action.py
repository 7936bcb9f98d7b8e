"""The conjugation action on the kernel free group.

An automorphism is stored as the images of the chosen basis generators,
each a freely reduced signed word over basis symbols.  Two bases are
supported: the commutator basis w[i,j] = [g_i, h_j] for exactly two
factors, and the spanning-tree cycle basis of a fibre graph for any
number of factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .fibre import FibreGraph, cycle_witness, decompose_word
from .groups import FiniteGroup
from .words import (Letter, Word, commutator, conjugate, empty_word, invert,
                    is_in_kernel, multiply, single)

# A signed symbol word: ((symbol_index, +1|-1), ...)
SymbolWord = tuple[tuple[int, int], ...]


def free_reduce_signed(seq) -> SymbolWord:
    out: list[tuple[int, int]] = []
    for sym, sign in seq:
        if out and out[-1] == (sym, -sign):
            out.pop()
        else:
            out.append((sym, sign))
    return tuple(out)


def invert_signed(seq: SymbolWord) -> SymbolWord:
    return tuple((sym, -sign) for sym, sign in reversed(seq))


@dataclass(frozen=True)
class Basis:
    kind: str  # "algebraic-n2" | "tree"
    groups: tuple[FiniteGroup, ...]
    symbols: tuple[str, ...]
    witnesses: tuple[Word, ...]
    graph: FibreGraph | None = field(default=None, compare=False)

    def __post_init__(self):
        for w in self.witnesses:
            if not is_in_kernel(w):
                raise ValueError("basis witness is not in the kernel")

    @property
    def rank(self) -> int:
        return len(self.symbols)

    def format_image(self, image: SymbolWord) -> str:
        if not image:
            return "e"
        parts = []
        for sym, sign in image:
            parts.append(self.symbols[sym] + ("" if sign == 1 else "^-1"))
        return "*".join(parts)


def algebraic_basis(groups: Sequence[FiniteGroup]) -> Basis:
    """The basis w[i,j] = [g_i, h_j], i-major, for two nontrivial factors."""
    groups = tuple(groups)
    if len(groups) != 2:
        raise ValueError("the commutator basis needs exactly two factors")
    G, H = groups
    if G.order < 2 or H.order < 2:
        raise ValueError("both factors must be nontrivial")
    symbols, witnesses = [], []
    for i in range(1, G.order):
        for j in range(1, H.order):
            symbols.append(f"w[{i},{j}]")
            witnesses.append(commutator(single(groups, 0, i), single(groups, 1, j)))
    return Basis("algebraic-n2", groups, tuple(symbols), tuple(witnesses))


def algebraic_symbol_index(G: FiniteGroup, H: FiniteGroup, i: int, j: int) -> int:
    return (i - 1) * (H.order - 1) + (j - 1)


def tree_basis(graph: FibreGraph) -> Basis:
    symbols = tuple(f"c{k + 1}" for k in range(len(graph.cotree)))
    witnesses = tuple(cycle_witness(graph, e) for e in graph.cotree)
    return Basis("tree", graph.groups, symbols, witnesses, graph=graph)


@dataclass(frozen=True)
class Automorphism:
    basis: Basis
    images: tuple[SymbolWord, ...]

    def __post_init__(self):
        if len(self.images) != self.basis.rank:
            raise ValueError("one image per basis symbol required")

    def apply(self, word: SymbolWord) -> SymbolWord:
        out: list[tuple[int, int]] = []
        for sym, sign in word:
            img = self.images[sym] if sign == 1 else invert_signed(self.images[sym])
            for s in img:
                if out and out[-1] == (s[0], -s[1]):
                    out.pop()
                else:
                    out.append(s)
        return tuple(out)


def identity_automorphism(basis: Basis) -> Automorphism:
    return Automorphism(basis, tuple(((k, 1),) for k in range(basis.rank)))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """(f o g): substitute f's images into g's."""
    if f.basis != g.basis:
        raise ValueError("automorphisms over different bases")
    return Automorphism(f.basis, tuple(f.apply(img) for img in g.images))


def telescope_decompose(w: Word) -> tuple[tuple[int, int, int], ...]:
    """Write a two-factor kernel word as a product of commutators [g_i, h_j].

    Returns signed (i, j, sign) triples; multiplying witnesses
    [g_i, h_j]^sign in order recovers w.  Prefix products telescope: each
    new letter contributes the commutator of the two running prefix
    products, and factors touching the identity are dropped.
    """
    if len(w.groups) != 2:
        raise ValueError("telescoping decomposition needs exactly two factors")
    if not is_in_kernel(w):
        raise ValueError("word is not in the kernel of the projection")
    G, H = w.groups
    p = q = 0  # running prefix products in G and H
    out: list[tuple[int, int, int]] = []

    def emit(i, j, sign):
        if i == 0 or j == 0:
            return
        if out and out[-1] == (i, j, -sign):
            out.pop()
        else:
            out.append((i, j, sign))

    for lt in w.letters:
        if lt.factor == 0:
            p = G.op(p, lt.elem)
            emit(p, q, -1)  # [q, p_new] = [g,h]^-1 with g = p_new
        else:
            q = H.op(q, lt.elem)
            emit(p, q, 1)   # [p, q_new]
    return tuple(out)


def telescope_recompose(basis: Basis, decomposition) -> Word:
    """Multiply the commutator witnesses back together (round-trip check)."""
    G, H = basis.groups
    acc = empty_word(basis.groups)
    for i, j, sign in decomposition:
        wit = basis.witnesses[algebraic_symbol_index(G, H, i, j)]
        acc = multiply(acc, wit if sign == 1 else invert(wit))
    return acc


def act_two_groups(t: Letter, basis: Basis) -> Automorphism:
    """Closed-form action of a single letter on the commutator basis.

    g_k . [g_i, h_j] = [g_k g_i, h_j] [h_j, g_k]
    h_k . [g_i, h_j] = [h_k, g_i] [g_i, h_k h_j]
    with commutators hitting the identity dropped.
    """
    if basis.kind != "algebraic-n2":
        raise ValueError("act_two_groups needs the commutator basis")
    G, H = basis.groups
    if t.elem == 0:
        return identity_automorphism(basis)
    k = t.elem
    images = []
    for i in range(1, G.order):
        for j in range(1, H.order):
            seq: list[tuple[int, int]] = []
            if t.factor == 0:
                gi = G.op(k, i)
                if gi != 0:
                    seq.append((algebraic_symbol_index(G, H, gi, j), 1))
                seq.append((algebraic_symbol_index(G, H, k, j), -1))
            else:
                seq.append((algebraic_symbol_index(G, H, i, k), -1))
                hj = H.op(k, j)
                if hj != 0:
                    seq.append((algebraic_symbol_index(G, H, i, hj), 1))
            images.append(free_reduce_signed(seq))
    return Automorphism(basis, tuple(images))


def act_geometric(g: Word, basis: Basis) -> Automorphism:
    """Action by conjugation, expressed in the tree cycle basis."""
    if basis.kind != "tree" or basis.graph is None:
        raise ValueError("act_geometric needs a tree basis with its graph")
    if g.groups != basis.groups:
        raise ValueError("word is over a different group list")
    graph = basis.graph
    images = tuple(decompose_word(graph, conjugate(g, wit)) for wit in basis.witnesses)
    return Automorphism(basis, images)


def act_letter(t: Letter, basis: Basis) -> Automorphism:
    if basis.kind == "algebraic-n2":
        return act_two_groups(t, basis)
    return act_geometric(single(basis.groups, t.factor, t.elem), basis)


def act_word(w: Word, basis: Basis) -> Automorphism:
    """Fold the per-letter action: act_word(uv) = act(u) o act(v)."""
    if w.groups != basis.groups:
        raise ValueError("word is over a different group list")
    phi = identity_automorphism(basis)
    for lt in w.letters:
        phi = compose(phi, act_letter(lt, basis))
    return phi


def image_as_word(phi: Automorphism, sym: int) -> Word:
    """The kernel word witnessing the image of one basis generator."""
    acc = empty_word(phi.basis.groups)
    for s, sign in phi.images[sym]:
        wit = phi.basis.witnesses[s]
        acc = multiply(acc, wit if sign == 1 else invert(wit))
    return acc
