"""Shared sampling helpers for the test and acceptance suites."""

from random import Random

from ainfcat.category import HomologyData
from ainfcat.errors import PreconditionError
from ainfcat.twisted import (FreeElement, TwObject, closed_morphism_space, cone,
                             embed_object, zero_free)


def random_element(field, rng, elems):
    """Random nonzero combination of the given homogeneous elements."""
    if not elems:
        return None
    for _ in range(20):
        acc = None
        for e in elems:
            c = field.scalar(rng.choice([0, 1, 1, -1, 2]))
            piece = e.scale(c)
            acc = piece if acc is None else acc + piece
        if acc is not None and acc:
            return acc
    return None


def random_closed_morphism(cat, src, dst, rng, degree=0):
    basis = closed_morphism_space(cat, src, dst, degree)
    return random_element(cat.field, rng, basis)


def tw_object_pool(cat, seed, max_summands=3, rounds=6):
    """Deterministic pool of valid twisted complexes: embeddings, shifts,
    and iterated cones of random closed degree-0 morphisms."""
    rng = Random(seed)
    pool = []
    for obj in cat.objects:
        pool.append(embed_object(cat, obj))
        pool.append(embed_object(cat, obj, 1))
        pool.append(embed_object(cat, obj, -2))
    for _ in range(rounds):
        a = rng.choice(pool)
        b = rng.choice(pool)
        if len(a) + len(b) > max_summands:
            continue
        f = random_closed_morphism(cat, a, b, rng)
        if f is None:
            f = zero_free(a.base, b.base, 0)
        try:
            C, _, _ = cone(cat, a, b, f)
        except PreconditionError:
            continue
        if len(C) <= max_summands:
            pool.append(C)
    return pool


def massey_triples(cat, data, rng, count, max_candidates=4000):
    """Valid Massey inputs (objects, f, g, h) with gf, hg boundaries.

    Enumerates object 4-tuples and random class choices deterministically,
    keeping triples whose products vanish in cohomology.
    """
    out = []
    objs = cat.objects
    attempts = 0
    while len(out) < count and attempts < max_candidates:
        attempts += 1
        X, Y, Z, U = (rng.choice(objs) for _ in range(4))
        nf = data.h_dim(X, Y, 0)
        ng = data.h_dim(Y, Z, 0)
        nh = data.h_dim(Z, U, 1)
        if not (nf and ng and nh):
            continue
        f = data.rep_element(X, Y, 0, [cat.field.scalar(rng.choice([0, 1, -1, 2]))
                                       for _ in range(nf)])
        g = data.rep_element(Y, Z, 0, [cat.field.scalar(rng.choice([0, 1, -1, 2]))
                                       for _ in range(ng)])
        h = data.rep_element(Z, U, 1, [cat.field.scalar(rng.choice([0, 1, -1, 2]))
                                       for _ in range(nh)])
        gf = cat.m_value((X, Y, Z), [f, g])
        hg = cat.m_value((Y, Z, U), [g, h])
        if data.primitive_of(gf, X, Z) is None:
            continue
        if data.primitive_of(hg, Y, U) is None:
            continue
        out.append(((X, Y, Z, U), f, g, h))
    return out


def perturb_by_boundary(cat, data, elem, src, dst, rng):
    """The same class, different cycle representative (adds a random boundary)."""
    space = cat.hom(src, dst)
    labels = space.labels(elem.degree - 1)
    if not labels:
        return elem
    prim = space.zero_element(elem.degree - 1)
    for lab in labels:
        c = cat.field.scalar(rng.choice([0, 0, 1, -1]))
        if c:
            prim = prim + space.basis_element(elem.degree - 1, lab).scale(c)
    return elem + cat.m_value((src, dst), [prim])


def random_cycle(cat, data, src, dst, degree, rng):
    """Random cycle of the given degree (possibly zero class)."""
    n = data.h_dim(src, dst, degree)
    rep = data.rep_element(src, dst, degree,
                           [cat.field.scalar(rng.choice([0, 1, -1]))
                            for _ in range(n)])
    return perturb_by_boundary(cat, data, rep, src, dst, rng)
