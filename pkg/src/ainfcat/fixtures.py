"""Built-in verified example categories, plus a seeded random generator.

Every fixture is gated: it must pass verify_relations and verify_units up
to its declared arity before being handed out.  All three named fixtures
are minimal (m_1 = 0) and have all operations above the tabulated ones
genuinely zero, so they are declared with a comfortable max_arity; that is
what lets twisted-complex evaluation insert many Maurer-Cartan twists
without hitting the unknown-beyond-max-arity wall.
"""

from functools import lru_cache
from random import Random

from .category import AInftyCategory, verify_relations, verify_units
from .errors import PreconditionError, SamplingBudgetError
from .field import FieldSpec
from .graded import GradedSpace

FIXTURE_ARITY = 24


def _gate(cat, arity=None):
    arity = cat.max_arity if arity is None else arity
    rel = verify_relations(cat, arity)
    uni = verify_units(cat)
    assert rel.passed, f"fixture fails relations: {rel.failures[:3]}"
    assert uni.passed, f"fixture fails unit axioms: {uni.failures[:3]}"
    return cat


def _unit_rows(objects, homs, units):
    """Complete m_2 unit rows: m2(x, id_src) = x and m2(id_dst, x) = x."""
    ops2 = {}
    for (src, dst), space in homs.items():
        for d in space.degrees():
            for l in space.labels(d):
                x = space.basis_element(d, l)
                if not (l == units[src] and src == dst):
                    ops2[((src, src, dst), (units[src], l))] = x
                ops2[((src, dst, dst), (l, units[dst]))] = x
    # id . id = id once per object
    for obj, lab in units.items():
        ops2[((obj, obj, obj), (lab, lab))] = homs[(obj, obj)].basis_element(0, lab)
    return ops2


@lru_cache(maxsize=None)
def quiver_massey_fixture(field):
    """Directed A -> B -> C -> D quiver with one nonzero m_3 into hom(A, D).

    Non-unit binary compositions all vanish, hom(A, D) is one-dimensional in
    degree -1, and m_3(h0, g0, f0) = w generates it.  This is the desk-scale
    carrier for Massey products: the correction spaces are zero, so the
    triple product coset is a nonzero singleton.
    """
    objects = ["A", "B", "C", "D"]
    units = {o: f"u{o}" for o in objects}
    homs = {}
    for o in objects:
        homs[(o, o)] = GradedSpace(field, {0: [f"u{o}"]})
    homs[("A", "B")] = GradedSpace(field, {0: ["f0"]})
    homs[("B", "C")] = GradedSpace(field, {0: ["g0"]})
    homs[("C", "D")] = GradedSpace(field, {0: ["h0"]})
    homs[("A", "D")] = GradedSpace(field, {-1: ["w"]})
    ops = {2: _unit_rows(objects, homs, units)}
    w = homs[("A", "D")].basis_element(-1, "w")
    ops[3] = {(("A", "B", "C", "D"), ("f0", "g0", "h0")): w}
    cat = AInftyCategory(field, objects, homs, units, FIXTURE_ARITY, ops)
    return _gate(cat)


@lru_cache(maxsize=None)
def poly_fixture(N, d, field):
    """Truncated graded polynomial algebra k[t]/(t^d) with |t| = 1 - N, N odd.

    Single object, basis 1, t, ..., t^{d-1}; m_2 is truncated multiplication;
    minimal and associative, so every higher relation holds.
    """
    if N % 2 == 0:
        raise PreconditionError("N must be odd (graded commutativity)")
    if N < 7:
        raise PreconditionError("N must be at least 7")
    if d < 2:
        raise PreconditionError("truncation order d must be at least 2")
    obj = "P"
    step = 1 - N
    labels = {k * step: [f"t{k}"] for k in range(d)}
    space = GradedSpace(field, labels)
    homs = {(obj, obj): space}
    units = {obj: "t0"}
    ops2 = {}
    for j in range(d):
        for k in range(d):
            if j + k >= d:
                continue
            out = space.basis_element((j + k) * step, f"t{j + k}")
            ops2[((obj, obj, obj), (f"t{j}", f"t{k}"))] = out
    cat = AInftyCategory(field, [obj], homs, units, FIXTURE_ARITY, {2: ops2})
    return _gate(cat)


@lru_cache(maxsize=None)
def arrow_fixture(N, field):
    """Two objects glued by a two-dimensional bimodule in degrees 0 and -N.

    hom(B, A) = 0 and both endomorphism rings are the ground field, so the
    category is directed of length 1.
    """
    if N < 4:
        raise PreconditionError("N must be at least 4")
    objects = ["A", "B"]
    units = {"A": "uA", "B": "uB"}
    homs = {
        ("A", "A"): GradedSpace(field, {0: ["uA"]}),
        ("B", "B"): GradedSpace(field, {0: ["uB"]}),
        ("A", "B"): GradedSpace(field, {0: ["e0"], -N: ["eN"]}),
    }
    ops = {2: _unit_rows(objects, homs, units)}
    cat = AInftyCategory(field, objects, homs, units, FIXTURE_ARITY, ops)
    return _gate(cat)


NAMED_FIXTURES = {
    "quiver_massey": quiver_massey_fixture,
    "poly": poly_fixture,
    "arrow": arrow_fixture,
}

RANDOM_BOUNDS = {"max_objects": 4, "max_hom_dim": 3, "max_arity": 5}


def random_minimal_category(seed, field=None, attempts=400):
    """Rejection-sample a small minimal category, deterministic per seed.

    Draws directed-quiver-shaped data (ordered objects, forward homs only,
    unit endomorphisms), sparse m_2 between composable non-unit pairs, and
    an occasional degree-consistent m_3; keeps the first sample passing the
    relation and unit gates.  Raises SamplingBudgetError when the budget
    runs out.
    """
    rng = Random(seed)
    field = field or FieldSpec("Q")
    for _ in range(attempts):
        cat = _draw_candidate(rng, field)
        if cat is None:
            continue
        if verify_relations(cat, cat.max_arity).passed and verify_units(cat).passed:
            return cat
    raise SamplingBudgetError(f"no valid category within {attempts} attempts")


def _labels_of(space):
    return [(l, d) for d in space.degrees() for l in space.labels(d)]


def _draw_candidate(rng, field):
    quiver_like = rng.random() < 0.4
    n_obj = rng.choice([2, 3, 3, 4, 4]) if not quiver_like else rng.choice([3, 4, 4])
    palette = [-1, 0, 0, 0] if quiver_like else [-2, -1, 0, 0, 1]
    objects = [f"X{i}" for i in range(n_obj)]
    units = {o: f"u{i}" for i, o in enumerate(objects)}
    homs = {}
    for i, o in enumerate(objects):
        homs[(o, o)] = GradedSpace(field, {0: [units[o]]})
    for i in range(n_obj):
        for j in range(i + 1, n_obj):
            dim = rng.choice([0, 1, 1, 1, 2])
            if not dim:
                continue
            degs = {}
            for k in range(dim):
                d = rng.choice(palette)
                degs.setdefault(d, []).append(f"x{i}{j}_{k}")
            homs[(objects[i], objects[j])] = GradedSpace(field, degs)
    ops2 = _unit_rows(objects, homs, units)
    pairs = [(s, d) for (s, d) in homs if s != d]
    if not quiver_like:
        for (a, b) in pairs:
            for (b2, c) in pairs:
                if b2 != b or (a, c) not in homs:
                    continue
                space_ab, space_bc = homs[(a, b)], homs[(b, c)]
                space_ac = homs[(a, c)]
                for d1 in space_ab.degrees():
                    for l1 in space_ab.labels(d1):
                        for d2 in space_bc.degrees():
                            for l2 in space_bc.labels(d2):
                                if rng.random() < 0.6:
                                    continue
                                tgt = space_ac.labels(d1 + d2)
                                if not tgt:
                                    continue
                                lab = rng.choice(tgt)
                                coeff = field.scalar(rng.choice([1, 1, -1, 2]))
                                ops2[((a, b, c), (l1, l2))] = \
                                    space_ac.basis_element(d1 + d2, lab).scale(coeff)
    ops = {2: ops2}
    # with vanishing non-unit binary products any degree-consistent triple
    # operation passes the gates (the unit terms cancel pairwise), so the
    # quiver-like mode always tries to carry one
    if quiver_like or rng.random() < 0.5:
        placements = []
        for (a, b) in pairs:
            for (b2, c) in pairs:
                if b2 != b:
                    continue
                for (c2, e) in pairs:
                    if c2 != c or (a, e) not in homs:
                        continue
                    for l1, d1 in _labels_of(homs[(a, b)]):
                        for l2, d2 in _labels_of(homs[(b, c)]):
                            for l3, d3 in _labels_of(homs[(c, e)]):
                                tgt = homs[(a, e)].labels(d1 + d2 + d3 - 1)
                                for lo in tgt:
                                    placements.append(
                                        ((a, b, c, e), (l1, l2, l3),
                                         d1 + d2 + d3 - 1, lo))
        if placements:
            chain, labels, out_deg, lo = rng.choice(placements)
            out = homs[(chain[0], chain[-1])].basis_element(out_deg, lo)
            ops[3] = {(chain, labels): out}
    try:
        return AInftyCategory(field, objects, homs, units,
                              RANDOM_BOUNDS["max_arity"], ops)
    except PreconditionError:
        return None
