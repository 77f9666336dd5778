"""A-infinity categories as finite data, with exact verification.

Storage is on the m-side (operations m_i of degree 2-i, sparse tables over
basis tuples, chain order: first morphism first).  The b-side lives on shift
suspensions; we represent b-values through their underlying unshifted
elements,

    b_i(s x_i, ..., s x_1) = s B_i(x_1, ..., x_i),

so B_i has the same degree bookkeeping as m_i and one sign function mediates:

    B_i = -kappa * m_i,   kappa = (-1)^{i(i-1)/2 + sum_{r>=2} (r-1)|x_r|}.

kappa is the evaluation sign of omega^{tensor i} on (s x_i tensor ... tensor
s x_1) under the Koszul rule (moving a degree-d operator past a degree-e
element costs (-1)^{de}), which is the single sign oracle of the codebase.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import NonComposableError, PreconditionError
from .graded import GradedSpace, GradedElement, GradedMap
from .linalg import Span, kernel_basis


def kappa_exponent(degrees):
    """Exponent of the omega^{tensor i} Koszul sign; degrees in chain order."""
    i = len(degrees)
    e = (i * (i - 1)) // 2
    for k in range(1, i):
        e += k * degrees[k]
    return e % 2


def relation_terms(i):
    """All (k, l) with inner arity k >= 1 starting after l outer-left slots."""
    return [(k, l) for k in range(1, i + 1) for l in range(0, i - k + 1)]


def compositions(total, parts):
    """Ordered splittings of `total` into `parts` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def splittable(total, parts, allowed):
    """Can `total` be written as an ordered sum of `parts` values in `allowed`?"""
    if parts == 0:
        return total == 0
    return any(a <= total - (parts - 1) and splittable(total - a, parts - 1, allowed)
               for a in allowed if a >= 1)


@dataclass
class CheckReport:
    passed: bool
    failures: list = dc_field(default_factory=list)
    checked_arity: int = 0

    def __bool__(self):
        return self.passed


class AInftyCategory:
    """Objects, graded hom spaces, sparse m_i tables, strict units.

    `ops[i]` maps (chain, labels) -> GradedElement of hom(chain[0], chain[-1]),
    where chain = (A_0, ..., A_i) and labels = (l_1, ..., l_i) in chain order.
    Unstored entries are zero.  Operations with arity > max_arity are unknown,
    not zero; verification beyond max_arity is refused.

    Basis labels must be unique within each hom space (across degrees), so a
    bare label determines a basis element of the hom.
    """

    def __init__(self, field, objects, homs, units, max_arity, ops):
        self.field = field
        self.objects = list(objects)
        if len(set(self.objects)) != len(self.objects):
            raise PreconditionError("duplicate object ids")
        self.homs = {}
        self._label_degree = {}
        for (src, dst), space in homs.items():
            if src not in self.objects or dst not in self.objects:
                raise PreconditionError(f"hom endpoints {src!r}->{dst!r} unknown")
            if space.total_dim() == 0:
                continue
            self.homs[(src, dst)] = space
            seen = {}
            for d in space.degrees():
                for l in space.labels(d):
                    if l in seen:
                        raise PreconditionError(
                            f"label {l!r} reused across degrees in hom {src}->{dst}")
                    seen[l] = d
            self._label_degree[(src, dst)] = seen
        self.units = dict(units)
        self.max_arity = int(max_arity)
        if self.max_arity < 2:
            raise PreconditionError("max_arity must be at least 2")
        for obj in self.objects:
            lab = self.units.get(obj)
            if lab is None:
                raise PreconditionError(f"object {obj!r} has no unit")
            end = self.homs.get((obj, obj))
            if end is None or lab not in end.labels(0):
                raise PreconditionError(
                    f"unit {lab!r} of {obj!r} is not a degree-0 basis label")
        self.ops = {}
        for i, table in ops.items():
            i = int(i)
            if not 1 <= i <= self.max_arity:
                raise PreconditionError(f"op arity {i} outside 1..max_arity")
            clean = {}
            for (chain, labels), out in table.items():
                chain = tuple(chain)
                labels = tuple(labels)
                if len(chain) != i + 1 or len(labels) != i:
                    raise PreconditionError(f"malformed op key {chain} {labels}")
                degs = []
                for r in range(i):
                    degs.append(self.label_degree(chain[r], chain[r + 1], labels[r]))
                want = sum(degs) + 2 - i
                if out.space != self.hom(chain[0], chain[-1]) or out.degree != want:
                    raise PreconditionError(
                        f"op m_{i}{labels} output must be degree {want} in "
                        f"hom({chain[0]},{chain[-1]})")
                if out:
                    clean[(chain, labels)] = out
            if clean:
                self.ops[i] = clean

    # -- structure access -------------------------------------------------

    def hom(self, src, dst):
        space = self.homs.get((src, dst))
        if space is None:
            space = GradedSpace(self.field, {})
        return space

    def label_degree(self, src, dst, label):
        try:
            return self._label_degree[(src, dst)][label]
        except KeyError:
            raise PreconditionError(f"no basis label {label!r} in hom {src}->{dst}")

    def basis_element(self, src, dst, label):
        d = self.label_degree(src, dst, label)
        return self.hom(src, dst).basis_element(d, label)

    def unit_element(self, obj):
        return self.basis_element(obj, obj, self.units[obj])

    def sign(self, s):
        return self.field.one() if s >= 0 else -self.field.one()

    def composable_chains(self, i):
        """All object chains (A_0..A_i) whose consecutive homs are nonzero."""
        chains = [(o,) for o in self.objects]
        for _ in range(i):
            chains = [c + (o,) for c in chains for o in self.objects
                      if (c[-1], o) in self.homs]
        return chains

    def basis_labels(self, src, dst):
        """(label, degree) pairs in degree-then-position order."""
        space = self.hom(src, dst)
        out = []
        for d in space.degrees():
            for l in space.labels(d):
                out.append((l, d))
        return out

    # -- evaluation --------------------------------------------------------

    def m_basis(self, i, chain, labels):
        """Stored m_i on a basis tuple; None means zero."""
        table = self.ops.get(i)
        if table is None:
            return None
        return table.get((tuple(chain), tuple(labels)))

    def m_value(self, chain, elems):
        """Multilinear m_i on homogeneous elements (chain order)."""
        i = len(elems)
        if i > self.max_arity:
            raise PreconditionError(f"arity {i} beyond declared max {self.max_arity}")
        out_space = self.hom(chain[0], chain[-1])
        out_deg = sum(e.degree for e in elems) + 2 - i
        acc = out_space.zero_element(out_deg)
        if any(not e for e in elems) or i not in self.ops:
            return acc
        for combo in product(*(e.coords.items() for e in elems)):
            val = self.m_basis(i, chain, tuple(l for l, _ in combo))
            if val is None:
                continue
            coeff = combo[0][1]
            for _, c in combo[1:]:
                coeff = coeff * c
            acc = acc + val.scale(coeff)
        return acc

    def b_value(self, chain, elems):
        """B_i (the unshifted shadow of b_i) on homogeneous elements."""
        kappa = kappa_exponent([e.degree for e in elems])
        m = self.m_value(chain, elems)
        return m.scale(self.sign(-1)) if kappa == 0 else m

    def m_from_b(self, chain, elems):
        """Recover m_i from the b-side value; inverse of b_value."""
        kappa = kappa_exponent([e.degree for e in elems])
        b = self.b_value(chain, elems)
        return b.scale(self.sign(-1)) if kappa == 0 else b

    def m1_map(self, src, dst):
        """The differential m_1 on hom(src, dst) as a degree +1 GradedMap."""
        space = self.hom(src, dst)
        blocks = {}
        for d in space.degrees():
            labels = space.labels(d)
            target = space.labels(d + 1)
            if not target:
                continue
            cols = []
            for l in labels:
                out = self.m_basis(1, (src, dst), (l,))
                vec = out.vector() if out is not None else [self.field.zero()] * len(target)
                cols.append(vec)
            blocks[d] = [[cols[c][r] for c in range(len(labels))]
                         for r in range(len(target))]
        return GradedMap(space, space, 1, blocks)


# -- relation verification ----------------------------------------------


def relation_residual_b(cat, chain, elems):
    """Left side of the b-side Stasheff identity at one tuple (chain order)."""
    i = len(elems)
    out_space = cat.hom(chain[0], chain[-1])
    out_deg = sum(e.degree for e in elems) + 3 - i
    total = out_space.zero_element(out_deg)
    degs = [e.degree for e in elems]
    for k, l in relation_terms(i):
        inner = cat.b_value(chain[l:l + k + 1], elems[l:l + k])
        if not inner:
            continue
        outer_elems = list(elems[:l]) + [inner] + list(elems[l + k:])
        outer_chain = chain[:l + 1] + chain[l + k:]
        term = cat.b_value(outer_chain, outer_elems)
        if not term:
            continue
        exp = sum(d + 1 for d in degs[l + k:]) % 2
        total = total + (term.scale(cat.sign(-1)) if exp else term)
    return total


def relation_residual_m(cat, chain, elems):
    """Independent expansion of the m-side identity with signs (-1)^{j+kl}."""
    i = len(elems)
    out_space = cat.hom(chain[0], chain[-1])
    out_deg = sum(e.degree for e in elems) + 3 - i
    total = out_space.zero_element(out_deg)
    degs = [e.degree for e in elems]
    for k, l in relation_terms(i):
        j = i - k - l
        inner = cat.m_value(chain[l:l + k + 1], elems[l:l + k])
        if not inner:
            continue
        outer_elems = list(elems[:l]) + [inner] + list(elems[l + k:])
        outer_chain = chain[:l + 1] + chain[l + k:]
        term = cat.m_value(outer_chain, outer_elems)
        if not term:
            continue
        exp = (j + k * l + k * sum(degs[l + k:])) % 2
        total = total + (term.scale(cat.sign(-1)) if exp else term)
    return total


def _iter_basis_tuples(cat, chain):
    steps = [cat.basis_labels(chain[r], chain[r + 1]) for r in range(len(chain) - 1)]
    if any(not s for s in steps):
        return
    for combo in product(*steps):
        labels = tuple(l for l, _ in combo)
        elems = [cat.basis_element(chain[r], chain[r + 1], labels[r])
                 for r in range(len(chain) - 1)]
        yield labels, elems


def verify_relations(cat, up_to_arity, residual_fn=relation_residual_b):
    """Exact check of the Stasheff identities on every basis tuple up to arity.

    Arities where no term can be nonzero (no stored inner arity k pairs with
    a stored outer arity i+1-k) are exactly zero and are skipped outright;
    this is structural, not a tolerance.
    """
    if up_to_arity > cat.max_arity:
        raise PreconditionError(
            f"relations above arity {cat.max_arity} are unknown, not checkable")
    present = set(cat.ops)
    failures = []
    for i in range(1, up_to_arity + 1):
        if not any(k in present and (i + 1 - k) in present
                   for k in range(1, i + 1)):
            continue
        for chain in cat.composable_chains(i):
            for labels, elems in _iter_basis_tuples(cat, chain):
                res = residual_fn(cat, chain, elems)
                if res:
                    failures.append((i, chain, labels, res))
    return CheckReport(not failures, failures, up_to_arity)


def verify_relations_m(cat, up_to_arity):
    """The independently coded m-side verifier (dual route of the b-side one)."""
    return verify_relations(cat, up_to_arity, residual_fn=relation_residual_m)


def relation_status(cat, arity):
    """'pass' | 'fail' | 'unknown' for the relations at one arity."""
    if arity > cat.max_arity:
        return "unknown"
    report = verify_relations(cat, arity)
    return "pass" if report.passed else "fail"


def verify_units(cat):
    """Strict unit axioms, checked on the stored tables.

    m-side form: m_2(x, id) = m_2(id, x) = x for every basis x, and no
    m_i table entry (i != 2) may involve a unit.  These are equivalent to
    the three b-side axioms under the b/m conversion.
    """
    failures = []
    unit_labels = {(o, cat.units[o]) for o in cat.objects}
    for (src, dst) in sorted(cat.homs):
        for label, d in cat.basis_labels(src, dst):
            x = cat.basis_element(src, dst, label)
            left = cat.m_value((src, src, dst), [cat.unit_element(src), x])
            if left != x:
                failures.append(("m2(x, id) != x", src, dst, label, left))
            right = cat.m_value((src, dst, dst), [x, cat.unit_element(dst)])
            if right != x:
                failures.append(("m2(id, x) != x", src, dst, label, right))
    for i, table in sorted(cat.ops.items()):
        if i == 2:
            continue
        for (chain, labels), out in table.items():
            for r, lab in enumerate(labels):
                if (chain[r], lab) in unit_labels and chain[r] == chain[r + 1]:
                    failures.append((f"m_{i} hits a unit", chain, labels, None, out))
    return CheckReport(not failures, failures)


# -- functors ------------------------------------------------------------


class AmFunctor:
    """A_m-functor: object map plus m-side components g_i of degree 1-i.

    comps[i] maps (source chain, labels) -> GradedElement of
    hom(obj_map[A_0], obj_map[A_i]) in the target.  The b-side components
    relate by f_i = s g_i omega^{tensor i}; their unshifted shadows are
    F_i = kappa * g_i with the same kappa as for operations.
    """

    def __init__(self, source, target, arity, obj_map, comps):
        if arity < 1:
            raise PreconditionError("functor arity must be >= 1")
        if arity > min(source.max_arity, target.max_arity):
            raise PreconditionError("functor arity beyond a category's max_arity")
        self.source = source
        self.target = target
        self.arity = int(arity)
        self.obj_map = dict(obj_map)
        for o in source.objects:
            if self.obj_map.get(o) not in target.objects:
                raise PreconditionError(f"object {o!r} not mapped into the target")
        self.comps = {}
        for i, table in comps.items():
            i = int(i)
            if not 1 <= i <= self.arity:
                raise PreconditionError(f"component arity {i} outside 1..{self.arity}")
            clean = {}
            for (chain, labels), out in table.items():
                chain, labels = tuple(chain), tuple(labels)
                degs = [source.label_degree(chain[r], chain[r + 1], labels[r])
                        for r in range(i)]
                want = sum(degs) + 1 - i
                tgt_hom = target.hom(self.obj_map[chain[0]], self.obj_map[chain[-1]])
                if out.space != tgt_hom or out.degree != want:
                    raise PreconditionError(
                        f"g_{i}{labels} must be degree {want} in the image hom")
                if out:
                    clean[(chain, labels)] = out
            if clean:
                self.comps[i] = clean

    def g_value(self, chain, elems):
        i = len(elems)
        out_space = self.target.hom(self.obj_map[chain[0]], self.obj_map[chain[-1]])
        out_deg = sum(e.degree for e in elems) + 1 - i
        acc = out_space.zero_element(out_deg)
        table = self.comps.get(i)
        if table is None or any(not e for e in elems):
            return acc
        for combo in product(*(e.coords.items() for e in elems)):
            val = table.get((tuple(chain), tuple(l for l, _ in combo)))
            if val is None:
                continue
            coeff = combo[0][1]
            for _, c in combo[1:]:
                coeff = coeff * c
            acc = acc + val.scale(coeff)
        return acc

    def f_value(self, chain, elems):
        """Unshifted shadow of the b-side component f_i."""
        kappa = kappa_exponent([e.degree for e in elems])
        g = self.g_value(chain, elems)
        return g.scale(self.target.sign(-1)) if kappa else g


def identity_functor(cat):
    comps = {1: {}}
    for (src, dst) in cat.homs:
        for label, d in cat.basis_labels(src, dst):
            comps[1][((src, dst), (label,))] = cat.basis_element(src, dst, label)
    return AmFunctor(cat, cat, cat.max_arity, {o: o for o in cat.objects}, comps)


def functor_relation_residual(F, chain, elems):
    """Eq-(4) defect at one tuple: sum f(1 b 1) - sum b(f ... f)."""
    i = len(elems)
    src, tgt = F.source, F.target
    out_space = tgt.hom(F.obj_map[chain[0]], F.obj_map[chain[-1]])
    out_deg = sum(e.degree for e in elems) + 2 - i
    total = out_space.zero_element(out_deg)
    degs = [e.degree for e in elems]
    for k, l in relation_terms(i):
        inner = src.b_value(chain[l:l + k + 1], elems[l:l + k])
        if not inner:
            continue
        outer_elems = list(elems[:l]) + [inner] + list(elems[l + k:])
        outer_chain = chain[:l + 1] + chain[l + k:]
        term = F.f_value(outer_chain, outer_elems)
        if not term:
            continue
        exp = sum(d + 1 for d in degs[l + k:]) % 2
        total = total + (term.scale(tgt.sign(-1)) if exp else term)
    for r in range(1, i + 1):
        for split in compositions(i, r):
            pos = 0
            pieces = []
            img_chain = [F.obj_map[chain[0]]]
            ok = True
            for part in split:
                piece = F.f_value(chain[pos:pos + part + 1], elems[pos:pos + part])
                img_chain.append(F.obj_map[chain[pos + part]])
                pos += part
                if not piece:
                    ok = False
                    break
                pieces.append(piece)
            if not ok:
                continue
            term = tgt.b_value(tuple(img_chain), pieces)
            if term:
                total = total - term
    return total


def verify_functor(F, up_to_arity=None):
    """Eq-(4) plus unit conditions on every source basis tuple up to arity.

    Arities where every term of the identity vanishes structurally (no
    stored operation/component arity combination can contribute) are exact
    zero identities and are skipped.
    """
    arity = F.arity if up_to_arity is None else up_to_arity
    if arity > F.arity:
        raise PreconditionError("cannot verify beyond the functor's arity")
    failures = []
    src = F.source
    for obj in src.objects:
        img = F.f_value((obj, obj), [src.unit_element(obj)])
        if img != F.target.unit_element(F.obj_map[obj]):
            failures.append(("f1(id) != id", obj, None, None, img))
    unit_labels = {(o, src.units[o]) for o in src.objects}
    for i, table in sorted(F.comps.items()):
        if i == 1:
            continue
        for (chain, labels), out in table.items():
            for r, lab in enumerate(labels):
                if (chain[r], lab) in unit_labels and chain[r] == chain[r + 1]:
                    failures.append((f"g_{i} hits a unit", chain, labels, None, out))
    ops_src = set(src.ops)
    ops_tgt = set(F.target.ops)
    comp_arities = set(F.comps)
    for i in range(1, arity + 1):
        lhs_possible = any(k in ops_src and (i + 1 - k) in comp_arities
                           for k in range(1, i + 1))
        rhs_possible = any(r in ops_tgt and splittable(i, r, comp_arities)
                           for r in range(1, i + 1))
        if not (lhs_possible or rhs_possible):
            continue
        for chain in src.composable_chains(i):
            for labels, elems in _iter_basis_tuples(src, chain):
                res = functor_relation_residual(F, chain, elems)
                if res:
                    failures.append(("relation", i, chain, labels, res))
    return CheckReport(not failures, failures, arity)


def compose_functors(G, F):
    """Standard composite: (G F)_i sums G_r over ordered splittings of i."""
    if F.target is not G.source and F.target != G.source:
        raise NonComposableError("functor targets/sources do not match")
    arity = min(F.arity, G.arity)
    obj_map = {o: G.obj_map[F.obj_map[o]] for o in F.source.objects}
    comps = {}
    src = F.source
    f_arities = set(F.comps)
    g_arities = set(G.comps)
    for i in range(1, arity + 1):
        if not any(r in g_arities and splittable(i, r, f_arities)
                   for r in range(1, i + 1)):
            continue
        table = {}
        for chain in src.composable_chains(i):
            for labels, elems in _iter_basis_tuples(src, chain):
                acc = None
                for r in range(1, i + 1):
                    for split in compositions(i, r):
                        pos = 0
                        pieces = []
                        img_chain = [F.obj_map[chain[0]]]
                        ok = True
                        for part in split:
                            piece = F.f_value(chain[pos:pos + part + 1],
                                              elems[pos:pos + part])
                            img_chain.append(F.obj_map[chain[pos + part]])
                            pos += part
                            if not piece:
                                ok = False
                                break
                            pieces.append(piece)
                        if not ok:
                            continue
                        val = G.f_value(tuple(img_chain), pieces)
                        acc = val if acc is None else acc + val
                if acc is not None and acc:
                    kappa = kappa_exponent([e.degree for e in elems])
                    if kappa:
                        acc = acc.scale(G.target.sign(-1))
                    table[(chain, labels)] = acc
        if table:
            comps[i] = table
    return AmFunctor(F.source, G.target, arity, obj_map, comps)


# -- cohomology ----------------------------------------------------------


class HomologyData:
    """Kernel/image data of m_1 on every hom, with lifts and primitives.

    Per (src, dst, degree) it stores an echelon boundary span whose
    generators remember their primitives, and chosen class representatives
    (the unit's class first on endomorphism degree 0, then echelon order).
    """

    def __init__(self, cat):
        self.cat = cat
        self.diff = {pair: cat.m1_map(*pair) for pair in cat.homs}
        self._data = {}

    def _slot(self, src, dst, degree):
        key = (src, dst, degree)
        slot = self._data.get(key)
        if slot is not None:
            return slot
        cat = self.cat
        space = cat.hom(src, dst)
        n = space.dim(degree)
        field = cat.field
        d_here = self.diff.get((src, dst))
        bnd = Span(field, n)
        prim_basis = space.labels(degree - 1)
        primitives = []
        if n and d_here is not None:
            for l in prim_basis:
                e = space.basis_element(degree - 1, l)
                bnd.add(d_here.apply(e).vector())
                primitives.append(e)
        cycles = []
        if n:
            block = d_here.blocks.get(degree) if d_here is not None else None
            rows = block if block is not None else []
            cycles = kernel_basis(rows, field, n)
        reps = []
        combined = Span(field, n)
        for v in bnd.basis():
            combined.add(v)
        candidates = []
        if degree == 0 and src == dst:
            unit = cat.unit_element(src)
            if self.is_cycle(unit, src, dst):
                candidates.append(unit.vector())
        candidates.extend(cycles)
        for v in candidates:
            if combined.add(v):
                reps.append(v)
        # membership span: boundary generators first, then the reps
        member = Span(field, n)
        nb = 0
        for v in bnd.basis():
            member.add(v)
            nb += 1
        for v in reps:
            member.add(v)
        slot = {
            "space": space,
            "bnd": bnd,
            "primitive_gens": primitives,
            "reps": reps,
            "member": member,
            "n_bnd": nb,
            "cycle_rank": len(cycles) if n else 0,
        }
        self._data[key] = slot
        return slot

    def h_dim(self, src, dst, degree):
        return len(self._slot(src, dst, degree)["reps"])

    def h_degrees(self, src, dst):
        space = self.cat.hom(src, dst)
        return [d for d in space.degrees() if self.h_dim(src, dst, d)]

    def is_cycle(self, elem, src, dst):
        d_here = self.diff.get((src, dst))
        if d_here is None:
            return True
        return not d_here.apply(elem)

    def class_of(self, elem, src, dst):
        """Coordinates of [elem] on the chosen class representatives."""
        if not self.is_cycle(elem, src, dst):
            raise PreconditionError("element is not closed; it has no class")
        slot = self._slot(src, dst, elem.degree)
        combo = slot["member"].solve_in_terms_of_generators(elem.vector())
        assert combo is not None, "cycle not in boundaries + reps"
        nb = slot["n_bnd"]
        out = [self.cat.field.zero()] * len(slot["reps"])
        for k, v in combo.items():
            if k >= nb:
                out[k - nb] = v
        return out

    def rep_element(self, src, dst, degree, class_coords):
        slot = self._slot(src, dst, degree)
        space = slot["space"]
        acc = space.zero_element(degree)
        for c, vec in zip(class_coords, slot["reps"]):
            if c:
                acc = acc + space.element_from_vector(degree, vec).scale(c)
        return acc

    def rep_basis_element(self, src, dst, degree, k):
        slot = self._slot(src, dst, degree)
        return slot["space"].element_from_vector(degree, slot["reps"][k])

    def primitive_of(self, elem, src, dst):
        """Some p with m_1(p) = elem, deterministic; None if elem not a boundary."""
        slot = self._slot(src, dst, elem.degree)
        combo = slot["bnd"].solve_in_terms_of_generators(elem.vector())
        if combo is None:
            return None
        space = slot["space"]
        acc = space.zero_element(elem.degree - 1)
        for k, c in combo.items():
            acc = acc + slot["primitive_gens"][k].scale(c)
        return acc


def cohomology_category(cat):
    """(H^*(cat), induced m_2) plus the projection/inclusion data.

    Hom spaces are ker(m_1)/im(m_1) with deterministic echelon bases (the
    unit class leads each endomorphism degree 0).  Output is minimal with
    only m_2 populated; composition well-definedness is checked exactly.
    """
    pre = verify_relations(cat, min(3, cat.max_arity))
    if not pre.passed:
        raise PreconditionError("relations fail up to arity 3; no cohomology category")
    data = HomologyData(cat)
    homs = {}
    labels = {}
    for pair in sorted(cat.homs):
        dims = {}
        for d in data.h_degrees(*pair):
            dims[d] = [f"h{d}_{k}" for k in range(data.h_dim(*pair, d))]
        if dims:
            homs[pair] = GradedSpace(cat.field, dims)
            labels[pair] = dims
    units = {}
    for obj in cat.objects:
        cls = data.class_of(cat.unit_element(obj), obj, obj)
        if not any(cls):
            raise PreconditionError(
                f"unit class of {obj!r} vanishes in cohomology")
        # the unit's class is the first representative by construction
        assert cls[0] and not any(cls[1:]), "unit class must lead the basis"
        units[obj] = labels[(obj, obj)][0][0]
    ops2 = {}
    objects_with_hom = sorted(cat.homs)
    for (a, b) in objects_with_hom:
        for (b2, c) in objects_with_hom:
            if b2 != b or (a, b) not in homs or (b, c) not in homs:
                continue
            for d1 in data.h_degrees(a, b):
                for k1 in range(data.h_dim(a, b, d1)):
                    x = data.rep_basis_element(a, b, d1, k1)
                    for d2 in data.h_degrees(b, c):
                        for k2 in range(data.h_dim(b, c, d2)):
                            y = data.rep_basis_element(b, c, d2, k2)
                            prod_elem = cat.m_value((a, b, c), [x, y])
                            if not data.is_cycle(prod_elem, a, c):
                                raise PreconditionError(
                                    "product of cycles is not a cycle")
                            cls = data.class_of(prod_elem, a, c)
                            if not any(cls):
                                continue
                            out_deg = d1 + d2
                            space = homs[(a, c)]
                            out = GradedElement(
                                space, out_deg,
                                {labels[(a, c)][out_deg][j]: cv
                                 for j, cv in enumerate(cls) if cv})
                            key = ((a, b, c),
                                   (labels[(a, b)][d1][k1], labels[(b, c)][d2][k2]))
                            ops2[key] = out
    H = AInftyCategory(cat.field, cat.objects,
                       homs, units, cat.max_arity, {2: ops2})
    _check_descends(cat, data)
    return H, data


def _check_descends(cat, data):
    """Products of class reps with boundaries must again be boundaries."""
    for (a, b) in sorted(cat.homs):
        for (b2, c) in sorted(cat.homs):
            if b2 != b:
                continue
            for d1 in data.h_degrees(a, b):
                for k1 in range(data.h_dim(a, b, d1)):
                    x = data.rep_basis_element(a, b, d1, k1)
                    for d2 in cat.hom(b, c).degrees():
                        slot = data._slot(b, c, d2)
                        for bvec in slot["bnd"].basis():
                            y = slot["space"].element_from_vector(d2, bvec)
                            prod_elem = cat.m_value((a, b, c), [x, y])
                            if prod_elem and data.primitive_of(prod_elem, a, c) is None:
                                raise PreconditionError(
                                    "composition does not descend to cohomology")


def check_formality_witness(cat, F, N):
    """True iff F is a verified functor to the computed cohomology carrying
    an enhanced minimal structure with H(f_1) = id and m_3..m_N all zero."""
    if N < 3:
        raise PreconditionError("N-formality needs N >= 3")
    H, data = cohomology_category(cat)
    tgt = F.target
    if F.source is not cat and F.source != cat:
        raise PreconditionError("witness source is not the category")
    if tgt.ops.get(1):
        raise PreconditionError("witness target is not minimal")
    for pair in sorted(cat.homs):
        ipair = (F.obj_map[pair[0]], F.obj_map[pair[1]])
        hs = H.hom(*pair)
        ts = tgt.hom(*ipair)
        if [(d, hs.dim(d)) for d in hs.degrees()] != [(d, ts.dim(d)) for d in ts.degrees()]:
            raise PreconditionError(
                f"witness target hom {ipair} does not match the cohomology of {pair}")
    if N > tgt.max_arity:
        raise PreconditionError("target arity too small to certify m_3..m_N = 0")
    if not verify_functor(F).passed:
        return False
    # H(f_1) must be the identity matrix in the chosen bases
    for (src, dst) in sorted(cat.homs):
        ipair = (F.obj_map[src], F.obj_map[dst])
        tspace = tgt.hom(*ipair)
        for d in data.h_degrees(src, dst):
            tl = tspace.labels(d)
            for k in range(data.h_dim(src, dst, d)):
                img = F.f_value((src, dst), [data.rep_basis_element(src, dst, d, k)])
                want = {tl[k]: cat.field.one()}
                if img.coords != want:
                    return False
    for i in range(3, N + 1):
        if tgt.ops.get(i):
            return False
    return True
