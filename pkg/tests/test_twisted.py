from random import Random

import pytest

from ainfcat.category import verify_relations, verify_relations_m, verify_units
from ainfcat.errors import PreconditionError
from ainfcat.field import QQ
from ainfcat.fixtures import poly_fixture
from ainfcat.twisted import (FreeElement, FreeObject, TwObject, b_free, b_tw,
                             basis_entry, closed_morphism_space, cone,
                             embed_object, free_hom_basis, identity_free,
                             materialize_tw, shift_free_element, shift_tw,
                             truncation_check, verify_maurer_cartan, zero_free)

from support import random_closed_morphism, tw_object_pool


def two_term(cat, obj_top, obj_bot, shift_bot, label):
    base = FreeObject([(0, obj_top), (shift_bot, obj_bot)])
    elem = cat.basis_element(obj_top, obj_bot, label)
    delta = FreeElement(base, base, 1, {(1, 0): elem})
    return TwObject(base, delta)


# -- free category signs -------------------------------------------------------


def test_single_summand_matches_base(quiver):
    X, Y = FreeObject([(0, "A")]), FreeObject([(0, "B")])
    f = basis_entry(quiver, X, Y, 0, 0, "f0")
    uB = basis_entry(quiver, Y, Y, 0, 0, "uB")
    out = b_free(quiver, [X, Y, Y], [f, uB])
    (entry,) = out.entries.values()
    assert entry == quiver.basis_element("A", "B", "f0")


def test_sigma_commutation_sign(quiver):
    # b_F2(s sigma^1 g, s sigma^0 f) = -sigma^1 b_2(sg, sf): one s-sigma swap
    X, Y = FreeObject([(0, "A")]), FreeObject([(0, "B")])
    Z = FreeObject([(1, "B")])
    f = basis_entry(quiver, X, Y, 0, 0, "f0")
    g = basis_entry(quiver, Y, Z, 0, 0, "uB")
    out = b_free(quiver, [X, Y, Z], [f, g])
    (entry,) = out.entries.values()
    assert entry == -quiver.basis_element("A", "B", "f0")


def test_shift_of_sigma_element_sign(quiver):
    # Sigma(sigma^a f) = (-1)^a sigma^a f
    X, Y = FreeObject([(0, "A")]), FreeObject([(1, "B")])
    f = basis_entry(quiver, X, Y, 0, 0, "f0")  # offset 1
    shifted = shift_free_element(f)
    assert shifted.entries[(0, 0)] == -f.entries[(0, 0)]
    Y2 = FreeObject([(2, "B")])
    f2 = basis_entry(quiver, X, Y2, 0, 0, "f0")  # offset 2
    assert shift_free_element(f2).entries[(0, 0)] == f2.entries[(0, 0)]


def test_free_subcategory_satisfies_relations(quiver):
    objs = [embed_object(quiver, "A"), embed_object(quiver, "B", 1),
            embed_object(quiver, "C", -1),
            TwObject(FreeObject([(2, "A"), (0, "B")]),
                     zero_free(FreeObject([(2, "A"), (0, "B")]),
                               FreeObject([(2, "A"), (0, "B")]), 1))]
    model = materialize_tw(quiver, objs, 4)
    assert verify_relations(model.category, 4).passed
    assert verify_relations_m(model.category, 4).passed
    assert verify_units(model.category).passed


# -- Maurer-Cartan --------------------------------------------------------------


def test_mc_zero_delta(quiver):
    X = embed_object(quiver, "A")
    assert verify_maurer_cartan(quiver, X).passed


def test_mc_two_summands_iff_m1_vanishes(quiver):
    X = two_term(quiver, "A", "B", -1, "f0")
    assert verify_maurer_cartan(quiver, X).passed


def test_mc_two_summands_fails_with_differential(Q):
    # in a dg algebra with m1(x) = z, delta = sigma^{-1} x is not Maurer-Cartan
    from test_category import _dg_algebra
    cat = _dg_algebra()
    base = FreeObject([(0, "V"), (-1, "V")])
    x = cat.basis_element("V", "V", "x")
    X = TwObject(base, FreeElement(base, base, 1, {(1, 0): x}))
    assert not verify_maurer_cartan(cat, X).passed


def test_mc_three_summands_m2_component(Q):
    # with m1 = 0, the only obstruction is the m2(delta21, delta10) component
    cat = poly_fixture(7, 3, Q)
    base = FreeObject([(0, "P"), (-1, "P"), (-2, "P")])
    u = cat.unit_element("P")
    delta = FreeElement(base, base, 1, {(1, 0): u, (2, 1): u})
    X = TwObject(base, delta)
    rep = verify_maurer_cartan(cat, X)
    assert not rep.passed  # u . u = u is nonzero
    delta_ok = FreeElement(base, base, 1, {(1, 0): u})
    assert verify_maurer_cartan(cat, TwObject(base, delta_ok)).passed


def test_twist_shape_validation(quiver):
    base = FreeObject([(0, "A"), (-1, "B")])
    f = quiver.basis_element("A", "B", "f0")
    with pytest.raises(PreconditionError):
        TwObject(base, FreeElement(base, base, 0, {}))  # wrong degree
    upper = FreeObject([(0, "B"), (-1, "A")])
    g = quiver.basis_element("A", "B", "f0")
    with pytest.raises(PreconditionError):
        TwObject(upper, FreeElement(upper, upper, 1, {(0, 1): g}))


# -- twisted composition ---------------------------------------------------------


def test_tw1_expansion_on_two_term_twists(Q):
    """b_Tw,1(sg) = b1 + b2(., s d0) + b2(s d1, .) + b3(s d1, ., s d0)."""
    cat = poly_fixture(7, 2, Q)
    X = two_term(cat, "P", "P", -7, "t1")
    g = identity_free(cat, X.base)
    full = b_tw(cat, [X, X], [g])
    zero_tw = TwObject(X.base, zero_free(X.base, X.base, 1))
    t1 = b_free(cat, [X.base, X.base], [g])
    t2 = b_free(cat, [X.base] * 3, [X.delta, g])
    t3 = b_free(cat, [X.base] * 3, [g, X.delta])
    t4 = b_free(cat, [X.base] * 4, [X.delta, g, X.delta])
    assert full == t1 + t2 + t3 + t4


def test_tw_relations_with_nonzero_delta(Q):
    cat = poly_fixture(7, 2, Q)
    X = two_term(cat, "P", "P", -7, "t1")
    E = embed_object(cat, "P")
    model = materialize_tw(cat, [E, X], 3)
    assert verify_relations(model.category, 3).passed
    assert verify_relations_m(model.category, 3).passed
    assert verify_units(model.category).passed


def test_shift_strict_on_tw_compose(quiver):
    rng = Random(1)
    X = two_term(quiver, "A", "B", -1, "f0")
    Y = embed_object(quiver, "C", -2)
    f = random_closed_morphism(quiver, X, Y, rng) or zero_free(X.base, Y.base, 0)
    g = random_closed_morphism(quiver, Y, Y, rng) or identity_free(quiver, Y.base)
    lhs = shift_free_element(b_tw(quiver, [X, Y, Y], [f, g]))
    rhs = b_tw(quiver, [shift_tw(X), shift_tw(Y), shift_tw(Y)],
               [shift_free_element(f), shift_free_element(g)])
    assert lhs == rhs
    # Sigma and Sigma^{-1} cancel exactly
    assert shift_tw(shift_tw(X, 1), -1) == X


# -- cones ------------------------------------------------------------------------


def test_cone_matches_printed_matrix_on_flat_input(quiver):
    # with delta_A = 0 and unshifted summands the twist is literally
    # [[-delta_A, 0], [sigma^{-1} f, delta_B]]
    X, Y = embed_object(quiver, "A"), embed_object(quiver, "B")
    f = FreeElement(X.base, Y.base, 0, {(0, 0): quiver.basis_element("A", "B", "f0")})
    C, i, p = cone(quiver, X, Y, f)
    assert C.base.summands == ((1, "A"), (0, "B"))
    assert C.delta.entries == {(1, 0): quiver.basis_element("A", "B", "f0")}
    assert i.entries == {(1, 0): quiver.unit_element("B")}
    assert p.entries == {(0, 0): quiver.unit_element("A")}
    assert p.degree == 1


def test_cone_of_zero_is_direct_sum(quiver):
    X = two_term(quiver, "A", "B", -1, "f0")
    Y = embed_object(quiver, "C")
    z = zero_free(X.base, Y.base, 0)
    C, _, _ = cone(quiver, X, Y, z)
    assert set(C.delta.entries) == {(1, 0)}  # only the shifted delta_A survives


def test_cone_requires_closed_degree_zero(quiver):
    X, Y = embed_object(quiver, "A"), embed_object(quiver, "B", 1)
    f = basis_entry(quiver, X.base, Y.base, 0, 0, "f0")  # degree -1
    with pytest.raises(PreconditionError):
        cone(quiver, X, Y, f)


def test_cone_mc_on_random_closed_morphisms(quiver, poly, arrow):
    # the asserts inside cone() check Maurer-Cartan and closedness of i, p
    built = 0
    for cat in (quiver, poly, arrow):
        pool = tw_object_pool(cat, seed=11, rounds=5)
        rng = Random(23)
        for _ in range(120):
            a, b = rng.choice(pool), rng.choice(pool)
            f = random_closed_morphism(cat, a, b, rng)
            if f is None:
                continue
            cone(cat, a, b, f)
            built += 1
    assert built >= 30


def test_cone_of_identity_is_contractible(quiver):
    from ainfcat.category import HomologyData
    X = embed_object(quiver, "A")
    C, _, _ = cone(quiver, X, X, identity_free(quiver, X.base))
    others = [embed_object(quiver, o) for o in quiver.objects]
    model = materialize_tw(quiver, [C] + others, 3)
    data = HomologyData(model.category)
    names = model.names
    for k in range(1, len(names)):
        for d in model.category.hom(names[0], names[k]).degrees():
            assert data.h_dim(names[0], names[k], d) == 0
        for d in model.category.hom(names[k], names[0]).degrees():
            assert data.h_dim(names[k], names[0], d) == 0
    for d in model.category.hom(names[0], names[0]).degrees():
        assert data.h_dim(names[0], names[0], d) == 0


# -- truncation ------------------------------------------------------------------


def test_truncation_zero_delta(quiver):
    X = TwObject(FreeObject([(0, "A"), (0, "B")]),
                 zero_free(FreeObject([(0, "A"), (0, "B")]),
                           FreeObject([(0, "A"), (0, "B")]), 1))
    wit = truncation_check(X, 0)
    assert wit.accepted and len(wit.blocks) == 1


def test_truncation_two_term(quiver):
    X = two_term(quiver, "A", "B", -1, "f0")
    assert not truncation_check(X, 0).accepted
    assert truncation_check(X, 1).accepted


def test_truncation_monotone(quiver):
    X = two_term(quiver, "A", "B", -1, "f0")
    for q in range(4):
        if truncation_check(X, q).accepted:
            assert truncation_check(X, q + 1).accepted


def test_truncation_of_cone_bounded_by_sum(quiver):
    X = two_term(quiver, "A", "B", -1, "f0")
    Y = embed_object(quiver, "D", -2)
    rng = Random(5)
    f = random_closed_morphism(quiver, X, Y, rng) or zero_free(X.base, Y.base, 0)
    C, _, _ = cone(quiver, X, Y, f)
    blocks_x = len(truncation_check(X, 99).blocks)
    blocks_y = len(truncation_check(Y, 99).blocks)
    assert len(truncation_check(C, 99).blocks) <= blocks_x + blocks_y


def test_greedy_partition_is_coarsest(quiver):
    base = FreeObject([(0, "A"), (-1, "B"), (-1, "B"), (-2, "C")])
    f0 = quiver.basis_element("A", "B", "f0")
    g0 = quiver.basis_element("B", "C", "g0")
    delta = FreeElement(base, base, 1, {(1, 0): f0, (3, 2): g0})
    X = TwObject(base, delta)
    wit = truncation_check(X, 2)
    # two disjoint violating entries force exactly two cuts; summand 2 stays
    # in the middle block because nothing maps into it from there
    assert wit.blocks == [(0,), (1, 2), (3,)]
    assert wit.accepted
    assert not truncation_check(X, 1).accepted
    # a single entry needs a single cut, wherever it spans
    delta2 = FreeElement(base, base, 1, {(1, 0): f0})
    X2 = TwObject(base, delta2)
    assert len(truncation_check(X2, 9).blocks) == 2
