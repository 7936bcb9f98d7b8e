import random

import pytest

from monodromy.action import (Automorphism, act_geometric, act_letter,
                              act_two_groups, act_word, algebraic_basis,
                              algebraic_symbol_index, compose,
                              free_reduce_signed, identity_automorphism,
                              image_as_word, invert_signed,
                              telescope_decompose, telescope_recompose,
                              tree_basis)
from monodromy.fibre import build_fibre_graph, decompose_word
from monodromy.groups import make_cyclic, make_symmetric
from monodromy.words import (Letter, commutator, conjugate, invert,
                             is_in_kernel, multiply, reduce_word, single)


def rand_kernel_word(rng, groups, max_len=10):
    from monodromy.words import project
    raw = [(f, rng.randrange(1, groups[f].order))
           for f in (rng.randrange(len(groups)) for _ in range(rng.randrange(max_len)))]
    w = reduce_word(raw, groups)
    fix = [(i, groups[i].inverse(p)) for i, p in enumerate(project(w)) if p]
    return reduce_word([(lt.factor, lt.elem) for lt in w.letters] + fix, groups)


def test_free_reduce_signed():
    assert free_reduce_signed([(0, 1), (0, -1)]) == ()
    assert free_reduce_signed([(0, 1), (1, 1), (1, -1), (0, -1)]) == ()
    assert free_reduce_signed([(0, 1), (0, 1)]) == ((0, 1), (0, 1))
    seq = ((2, -1), (0, 1))
    assert invert_signed(invert_signed(seq)) == seq


def test_algebraic_basis_shape():
    basis = algebraic_basis((make_cyclic(2), make_cyclic(3)))
    assert basis.rank == 2
    assert basis.symbols == ("w[1,1]", "w[1,2]")
    for wit in basis.witnesses:
        assert is_in_kernel(wit)
    basis = algebraic_basis((make_cyclic(2), make_symmetric(3)))
    assert basis.rank == 5


def test_algebraic_basis_rejects_wrong_factor_count():
    with pytest.raises(ValueError):
        algebraic_basis((make_cyclic(2),))
    with pytest.raises(ValueError):
        algebraic_basis((make_cyclic(2), make_cyclic(1)))


def test_symbol_index_matches_witness():
    G, H = make_cyclic(3), make_cyclic(4)
    basis = algebraic_basis((G, H))
    for i in range(1, 3):
        for j in range(1, 4):
            k = algebraic_symbol_index(G, H, i, j)
            assert basis.witnesses[k] == commutator(
                single(basis.groups, 0, i), single(basis.groups, 1, j))


def test_telescope_roundtrip_random():
    rng = random.Random(21)
    for orders in [(2, 3), (4, 4)]:
        groups = (make_cyclic(orders[0]), make_cyclic(orders[1]))
        basis = algebraic_basis(groups)
        for _ in range(300):
            w = rand_kernel_word(rng, groups)
            assert telescope_recompose(basis, telescope_decompose(w)) == w


def test_telescope_on_commutator_is_single_symbol():
    groups = (make_cyclic(3), make_cyclic(4))
    w = commutator(single(groups, 0, 2), single(groups, 1, 3))
    assert telescope_decompose(w) == ((2, 3, 1),)


def test_telescope_rejects_non_kernel():
    groups = (make_cyclic(2), make_cyclic(3))
    with pytest.raises(ValueError):
        telescope_decompose(single(groups, 0, 1))


def test_closed_form_matches_conjugation():
    # phi_t(w) must spell the kernel word t w t^-1
    for groups in [(make_cyclic(2), make_cyclic(3)),
                   (make_cyclic(2), make_symmetric(3)),
                   (make_cyclic(4), make_cyclic(4))]:
        basis = algebraic_basis(groups)
        for factor in range(2):
            for e in range(1, groups[factor].order):
                t = Letter(factor, e)
                phi = act_two_groups(t, basis)
                tw = single(groups, factor, e)
                for k, wit in enumerate(basis.witnesses):
                    assert image_as_word(phi, k) == conjugate(tw, wit)


def test_identity_letter_acts_trivially():
    basis = algebraic_basis((make_cyclic(3), make_cyclic(3)))
    assert act_two_groups(Letter(0, 0), basis) == identity_automorphism(basis)


def test_act_word_is_antihomomorphism_free():
    # act_word folds left to right, so act_word(uv) = act_word(u) o act_word(v)
    groups = (make_cyclic(3), make_cyclic(4))
    basis = algebraic_basis(groups)
    rng = random.Random(22)
    for _ in range(100):
        u = rand_kernel_word(rng, groups, 6)
        v = rand_kernel_word(rng, groups, 6)
        assert act_word(multiply(u, v), basis) == compose(
            act_word(u, basis), act_word(v, basis))


def test_order_of_generator_action_divides_group_exponent():
    groups = (make_cyclic(2), make_cyclic(3))
    basis = algebraic_basis(groups)
    phi = act_two_groups(Letter(0, 1), basis)
    assert compose(phi, phi) == identity_automorphism(basis)
    psi = act_two_groups(Letter(1, 1), basis)
    assert compose(psi, compose(psi, psi)) == identity_automorphism(basis)


def test_inverse_letter_inverts_action():
    groups = (make_cyclic(4), make_symmetric(3))
    basis = algebraic_basis(groups)
    for factor in range(2):
        for e in range(1, groups[factor].order):
            phi = act_two_groups(Letter(factor, e), basis)
            inv = act_two_groups(
                Letter(factor, groups[factor].inverse(e)), basis)
            assert compose(phi, inv) == identity_automorphism(basis)


def test_tree_basis_and_geometric_action():
    groups = (make_cyclic(3), make_cyclic(4))
    graph = build_fibre_graph(groups)
    basis = tree_basis(graph)
    assert basis.rank == 6
    phi = act_geometric(single(groups, 0, 1), basis)
    for k, wit in enumerate(basis.witnesses):
        assert image_as_word(phi, k) == conjugate(single(groups, 0, 1), wit)


def test_geometric_matches_algebraic_through_words():
    # same automorphism seen through either basis, compared on kernel words
    groups = (make_cyclic(3), make_cyclic(4))
    graph = build_fibre_graph(groups)
    alg = algebraic_basis(groups)
    geo = tree_basis(graph)
    rng = random.Random(23)
    for _ in range(30):
        f = rng.randrange(2)
        t = single(groups, f, rng.randrange(1, groups[f].order))
        phi_a = act_word(t, alg)
        phi_g = act_word(t, geo)
        for _ in range(5):
            w = rand_kernel_word(rng, groups, 8)
            via_a = telescope_recompose(
                alg, [(i, j, s) for (i, j, s) in _expand(phi_a, telescope_decompose(w), groups)])
            via_g_sym = phi_g.apply(decompose_word(graph, w))
            acc = None
            from monodromy.words import empty_word
            acc = empty_word(groups)
            for sym, sign in via_g_sym:
                wit = geo.witnesses[sym]
                acc = multiply(acc, wit if sign == 1 else invert(wit))
            assert via_a == acc == conjugate(t, w)


def _expand(phi, decomposition, groups):
    G, H = groups
    sym = [(algebraic_symbol_index(G, H, i, j), s) for i, j, s in decomposition]
    out = phi.apply(tuple(sym))
    triples = []
    for k, s in out:
        i, j = divmod(k, H.order - 1)
        triples.append((i + 1, j + 1, s))
    return triples


def test_three_factor_geometric_action():
    groups = (make_cyclic(2), make_cyclic(2), make_cyclic(2))
    graph = build_fibre_graph(groups)
    basis = tree_basis(graph)
    assert basis.rank == 5
    rng = random.Random(24)
    for _ in range(50):
        f = rng.randrange(3)
        t = single(groups, f, 1)
        phi = act_word(t, basis)
        for k, wit in enumerate(basis.witnesses):
            assert image_as_word(phi, k) == conjugate(t, wit)


def test_automorphism_image_count_enforced():
    basis = algebraic_basis((make_cyclic(2), make_cyclic(3)))
    with pytest.raises(ValueError):
        Automorphism(basis, (((0, 1),),))


def test_act_letter_dispatch():
    groups = (make_cyclic(2), make_cyclic(3))
    alg = algebraic_basis(groups)
    geo = tree_basis(build_fibre_graph(groups))
    t = Letter(1, 2)
    assert act_letter(t, alg).basis.kind == "algebraic-n2"
    assert act_letter(t, geo).basis.kind == "tree"
