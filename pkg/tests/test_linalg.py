from random import Random

from ainfcat.field import GF, QQ
from ainfcat.linalg import (Span, image_basis, kernel_basis, rref, solve,
                            vec_is_zero)


def mk(field, rows):
    return [[field.scalar(x) for x in r] for r in rows]


def test_rref_simple():
    rows = mk(QQ, [[2, 4], [1, 2]])
    red, pivots = rref(rows, QQ)
    assert pivots == [0]
    assert red == mk(QQ, [[1, 2]])


def test_rank_nullity_random():
    rng = Random(5)
    for _ in range(25):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = mk(QQ, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)])
        kern = kernel_basis(rows, QQ, n)
        cols = [[rows[r][c] for r in range(m)] for c in range(n)]
        img = image_basis(cols, QQ)
        assert len(kern) + len(img) == n


def test_kernel_vectors_annihilate():
    rows = mk(GF(7), [[1, 2, 3], [2, 4, 6]])
    kern = kernel_basis(rows, GF(7), 3)
    for v in kern:
        for r in rows:
            s = GF(7).zero()
            for a, b in zip(r, v):
                s = s + a * b
            assert not s


def test_solve_deterministic_free_coords_zero():
    gens = mk(QQ, [[1, 0], [0, 1], [1, 1]])
    sol = solve(gens, mk(QQ, [[1, 1]])[0], QQ)
    # third generator is dependent; it never enters the combination
    assert sol == mk(QQ, [[1, 1, 0]])[0]


def test_solve_unsolvable():
    gens = mk(QQ, [[1, 0]])
    assert solve(gens, mk(QQ, [[0, 1]])[0], QQ) is None


def test_span_reduce_tracks_combos():
    span = Span(QQ, 3)
    v1 = mk(QQ, [[1, 1, 0]])[0]
    v2 = mk(QQ, [[0, 1, 1]])[0]
    assert span.add(v1) and span.add(v2)
    target = mk(QQ, [[1, 2, 1]])[0]
    residual, combo = span.reduce(target)
    assert vec_is_zero(residual)
    rebuilt = [QQ.zero()] * 3
    for k, c in combo.items():
        gen = [v1, v2][k]
        rebuilt = [a + c * b for a, b in zip(rebuilt, gen)]
    assert rebuilt == target


def test_span_echelon_is_deterministic():
    rows = mk(QQ, [[2, 4, 0], [1, 1, 1], [3, 5, 1]])
    s1 = Span(QQ, 3)
    s2 = Span(QQ, 3)
    for r in rows:
        s1.add(list(r))
        s2.add(list(r))
    assert s1.basis() == s2.basis()
    assert s1.rank == 2
