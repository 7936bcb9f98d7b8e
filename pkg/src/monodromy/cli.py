"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage error.  All output is
deterministic for a fixed seed; JSON payloads carry "schema": 1.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .action import (act_two_groups, act_word, algebraic_basis, tree_basis)
from .commutators import (delta_identity_check, fl_commutator, free_reduce,
                          iterated_commutator, letters, magnus_weight,
                          product_expansion_check)
from .complexes import build_complex, h1, load_complex_file, parse_complex_spec
from .fibre import betti_one, build_fibre_graph, rank_formula, to_dot
from .groups import GroupSpecParseError, parse_group_spec
from .intmatrix import _random_kernel_word, abelianize, representation_report
from .verify import run_all
from .words import parse_word, reduce_word

SCHEMA = 1


def _groups(args):
    return parse_group_spec(args.groups)


def _basis_for(groups, choice):
    if choice == "algebraic" or (choice == "auto" and len(groups) == 2):
        return algebraic_basis(groups)
    return tree_basis(build_fibre_graph(groups))


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        payload["schema"] = SCHEMA
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_rank(args):
    orders = [G.order for G in _groups(args)]
    n = rank_formula(orders)
    _emit(args, {"orders": orders, "rank": n}, str(n))
    return 0


def cmd_graph(args):
    groups = _groups(args)
    g = build_fibre_graph(groups)
    if args.emit == "dot":
        print(to_dot(g))
        return 0
    payload = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "tree_edges": len(g.tree),
        "cotree_edges": len(g.cotree),
        "betti_one": betti_one(g),
    }
    text = (f"vertices={payload['vertices']} edges={payload['edges']} "
            f"betti_one={payload['betti_one']}")
    _emit(args, payload, text)
    return 0


def cmd_basis(args):
    groups = _groups(args)
    basis = _basis_for(groups, args.basis)
    lines = [f"{sym} = {wit}" for sym, wit in zip(basis.symbols, basis.witnesses)]
    payload = {"kind": basis.kind,
               "symbols": list(basis.symbols),
               "witnesses": [str(w) for w in basis.witnesses]}
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_act(args):
    groups = _groups(args)
    basis = _basis_for(groups, args.basis)
    w = parse_word(args.element, groups)
    phi = act_word(w, basis)
    lines = [f"{sym} -> {basis.format_image(img)}"
             for sym, img in zip(basis.symbols, phi.images)]
    payload = {"basis": list(basis.symbols), "element": str(w),
               "images": {sym: basis.format_image(img)
                          for sym, img in zip(basis.symbols, phi.images)}}
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_matrix(args):
    groups = _groups(args)
    basis = _basis_for(groups, args.basis)
    w = parse_word(args.element, groups)
    mat = abelianize(act_word(w, basis))
    payload = {"basis": list(basis.symbols),
               "convention": "columns-as-images",
               "element": str(w),
               "determinant": mat.det(),
               "entries": mat.to_lists()}
    _emit(args, payload, mat.pretty())
    return 0


def cmd_report(args):
    groups = _groups(args)
    if len(groups) != 2:
        print("report needs exactly two groups", file=sys.stderr)
        return 2
    rep = representation_report(groups[0], groups[1], seed=args.seed)
    if args.format == "json":
        rep["schema"] = SCHEMA
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        for key, value in rep.items():
            print(f"{key}: {value}")
    checks = ("cross_factor_commute", "faithful", "non_ia_certificate",
              "kernel_words_act_trivially")
    return 0 if all(rep[k] for k in checks) else 1


def cmd_lemma_check(args):
    groups = _groups(args)
    rng = random.Random(args.seed)
    trials = args.trials
    ok = True

    passed = 0
    for _ in range(trials):
        g = _random_word(rng, groups)
        f = _random_word(rng, groups)
        passed += delta_identity_check(g, f)
    print(f"delta-identity: {passed}/{trials}")
    ok &= passed == trials

    alphabet = "abcde"
    passed = 0
    for _ in range(trials):
        ws = [free_reduce(tuple((rng.choice(alphabet), rng.choice((1, -1)))
                                for _ in range(rng.randrange(1, 5))))
              for _ in range(3)]
        passed += product_expansion_check(*ws)
    print(f"product-expansion: {passed}/{trials}")
    ok &= passed == trials

    depth = min(args.depth, 5)
    passed = 0
    for k in range(1, depth + 1):
        f = iterated_commutator(letters(*alphabet[:k]))
        good = magnus_weight(f, 6) == k
        good &= magnus_weight(fl_commutator(letters("z")[0], f), 7) == k + 1
        passed += good
    print(f"magnus-weights (k<= {depth}): {passed}/{depth}")
    ok &= passed == depth
    return 0 if ok else 1


def _random_word(rng, groups, max_letters=8):
    raw = [(f, rng.randrange(1, groups[f].order))
           for f in (rng.randrange(len(groups)) for _ in range(rng.randrange(1, max_letters)))
           if groups[f].order > 1]
    return reduce_word(raw, tuple(groups))


def cmd_homology(args):
    groups = _groups(args)
    if args.complex.startswith("@"):
        K = load_complex_file(args.complex[1:], n=len(groups))
    else:
        K = parse_complex_spec(args.complex, n=len(groups))
    cx = build_complex(groups, K)
    betti, torsion = h1(cx)
    payload = {"betti": betti, "torsion": torsion,
               "cells": dict(zip(("vertices", "edges", "squares"), cx.counts))}
    _emit(args, payload, f"betti={betti} torsion={torsion or 'none'}")
    return 0


def cmd_verify(args):
    ok = run_all(seed=args.seed, stream=sys.stdout)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodromy",
        description="Monodromy of the fibration over a product of finite groups: "
                    "fibre graphs, kernel words, automorphisms, integer matrices, homology.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("rank", cmd_rank, help="rank of the kernel free group")
    p.add_argument("--groups", required=True)

    p = add("graph", cmd_graph, help="fibre graph counts or DOT")
    p.add_argument("--groups", required=True)
    p.add_argument("--emit", choices=("dot",), default=None)

    p = add("basis", cmd_basis, help="basis symbols and kernel-word witnesses")
    p.add_argument("--groups", required=True)
    p.add_argument("--basis", choices=("algebraic", "tree", "auto"), default="auto")

    p = add("act", cmd_act, help="images of the basis under one element")
    p.add_argument("--groups", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--basis", choices=("algebraic", "tree", "auto"), default="auto")

    p = add("matrix", cmd_matrix, help="abelianized matrix of one element")
    p.add_argument("--groups", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--basis", choices=("algebraic", "tree", "auto"), default="auto")

    p = add("report", cmd_report, help="matrix-level certificates for a pair of groups")
    p.add_argument("--groups", required=True)

    p = add("lemma-check", cmd_lemma_check, help="commutator-calculus property checks")
    p.add_argument("--groups", required=True)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--trials", type=int, default=200)

    p = add("homology", cmd_homology, help="H1 of the cubical model over a complex")
    p.add_argument("--groups", required=True)
    p.add_argument("--complex", required=True,
                   help="facet syntax K={1;2;3;1,2}, or @file with one facet per line")

    add("verify", cmd_verify, help="run the full acceptance suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, GroupSpecParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
