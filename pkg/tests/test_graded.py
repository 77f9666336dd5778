from random import Random

import pytest

from ainfcat.errors import PreconditionError
from ainfcat.field import QQ
from ainfcat.graded import (GradedElement, GradedMap, GradedSpace, degree_change,
                            identity_map, shift_map, shift_space, zero_map)


def space(dims):
    return GradedSpace(QQ, dims)


def rand_map(rng, dom, cod, degree):
    blocks = {}
    for d in dom.degrees():
        rows = cod.dim(d + degree)
        cols = dom.dim(d)
        if rows and cols:
            blocks[d] = [[QQ.scalar(rng.randint(-2, 2)) for _ in range(cols)]
                         for _ in range(rows)]
    return GradedMap(dom, cod, degree, blocks)


def test_shift_space_dims():
    A = space({0: ["e"]})
    assert shift_space(A, 1).dims == {-1: ("e",)}
    assert shift_space(A, 0).dims == A.dims
    assert shift_space(shift_space(A, 2), -2).dims == A.dims


def test_duplicate_labels_rejected():
    with pytest.raises(PreconditionError):
        space({0: ["e", "e"]})


def test_shift_map_signs():
    A = space({0: ["a"], 1: ["b"]})
    B = space({0: ["x"], 1: ["y"]})
    one = QQ.one()
    f0 = GradedMap(A, B, 0, {0: [[one]], 1: [[one]]})
    assert shift_map(f0).block(-1) == [[one]]
    f1 = GradedMap(A, B, 1, {0: [[one]]})
    # odd degree: every component negated
    assert shift_map(f1).block(-1) == [[-one]]


def test_s_sigma_anticommutation():
    # s_{Sigma A} = -Sigma s_A as an equality of maps
    A = space({0: ["a"], 2: ["b"], 3: ["c"]})
    s_A = degree_change(A, 1)
    lhs = degree_change(shift_space(A, 1), 1)
    rhs = shift_map(s_A).scale(-QQ.one())
    assert lhs == rhs


def test_degree_change_composition():
    A = space({0: ["a"], 1: ["b"]})
    s2 = degree_change(A, 2)
    step = degree_change(shift_space(A, 1), 1).compose(degree_change(A, 1))
    assert s2 == step


def test_s_omega_mutually_inverse():
    A = space({-1: ["a"], 4: ["b", "c"]})
    s = degree_change(A, 1)
    omega = degree_change(shift_space(A, 1), -1)
    assert omega.compose(s) == identity_map(A)


def test_degrees_add_under_composition():
    rng = Random(0)
    A = space({0: ["a"], 1: ["b"]})
    B = space({0: ["x"], 1: ["y"], 2: ["z"]})
    C = space({1: ["p"], 3: ["q"]})
    for _ in range(10):
        d1, d2 = rng.randint(-1, 2), rng.randint(-1, 2)
        f = rand_map(rng, A, B, d1)
        g = rand_map(rng, B, C, d2)
        assert g.compose(f).degree == d1 + d2


def test_shift_functorial():
    # the (-1)^{|f|} in Sigma f makes Sigma strictly compatible with
    # composition: the two signs cancel, Sigma(g . f) = (Sigma g) . (Sigma f)
    rng = Random(3)
    A = space({0: ["a"], 1: ["b"], 2: ["c"]})
    B = space({0: ["x", "y"], 1: ["z"], 2: ["w"]})
    C = space({d: [f"c{d}"] for d in range(-1, 5)})
    for _ in range(30):
        d1, d2 = rng.randint(-1, 2), rng.randint(-1, 2)
        f = rand_map(rng, A, B, d1)
        g = rand_map(rng, B, C, d2)
        assert shift_map(g.compose(f)) == shift_map(g).compose(shift_map(f))


def test_apply_and_rank_nullity():
    rng = Random(9)
    A = space({0: ["a1", "a2"], 1: ["b1", "b2", "b3"]})
    B = space({1: ["x1", "x2"], 2: ["y"]})
    f = rand_map(rng, A, B, 1)
    kd = f.kernel_dims()
    idm = f.image_dims()
    for d in A.degrees():
        assert kd[d] + idm.get(d + 1, 0) == A.dim(d)
    x = GradedElement(A, 0, {"a1": QQ.one(), "a2": QQ.scalar(2)})
    y = f.apply(x)
    assert y.degree == 1 and y.space == B


def test_zero_dimensional_spaces_are_fine():
    Z = space({})
    assert Z.total_dim() == 0
    f = zero_map(Z, Z, 1)
    assert f.apply(Z.zero_element(0)).is_zero()
