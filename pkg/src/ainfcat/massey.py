"""Massey triple products and distinguished-triangle detection.

Degree conventions follow the triangulated enrichment: f and g are closed of
degree 0, h is closed of degree 1 (a map Z -> Sigma U in disguise), and the
product coset lives in H^0(X, U).  Both routes are implemented:

  * massey_ainfty builds the representative from nullhomotopies u, v and the
    b_3 term, entirely inside the given category;
  * massey_triangulated lifts f, forms the standard cone triangle inside
    Tw(cat), and solves the diagram-completion equations by exact linear
    algebra on cohomology classes.

Results always carry a representative plus an echelon basis of the
indeterminacy subspace h H^{-1}(X,Z) + H^0(Y,U) f; no bare sets.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .category import HomologyData
from .errors import PreconditionError
from .linalg import Span, kernel_basis, solve, vec_is_zero, zero_vector
from .twisted import (FreeElement, cone, embed_object, materialize_tw)


class H0Category:
    """H^0 (and neighbouring graded) structure of a category, with lifts."""

    def __init__(self, cat, data=None):
        self.cat = cat
        self.data = data or HomologyData(cat)

    def h_dim(self, src, dst, degree=0):
        return self.data.h_dim(src, dst, degree)

    def class_of(self, elem, src, dst):
        return self.data.class_of(elem, src, dst)

    def rep(self, src, dst, degree, coords):
        return self.data.rep_element(src, dst, degree, coords)

    def compose(self, chain, elems):
        """Class of the m_2 product of cycle representatives."""
        prod = self.cat.m_value(chain, elems)
        return self.data.class_of(prod, chain[0], chain[-1])

    def primitive(self, elem, src, dst):
        return self.data.primitive_of(elem, src, dst)


@dataclass
class MasseyResult:
    cat: object
    objects: tuple          # (X, Y, Z, U)
    inputs: tuple           # (f, g, h) cycle representatives
    representative: object  # GradedElement, closed, degree 0 in hom(X, U)
    rep_class: list
    indeterminacy: list     # echelon basis of class-coordinate vectors
    data: HomologyData

    def contains_element(self, elem):
        X, _, _, U = self.objects
        if elem.space != self.cat.hom(X, U) or elem.degree != 0:
            raise PreconditionError("candidate lives in the wrong hom space")
        return self.contains_class(self.data.class_of(elem, X, U))

    def contains_class(self, coords):
        diff = [a - b for a, b in zip(coords, self.rep_class)]
        span = Span(self.cat.field, len(coords))
        for v in self.indeterminacy:
            span.add(v)
        return span.contains(diff)

    def is_singleton(self):
        return not self.indeterminacy


def _require_cycle(data, elem, src, dst, degree, name):
    if elem.degree != degree:
        raise PreconditionError(f"{name} must have degree {degree}")
    if not data.is_cycle(elem, src, dst):
        raise PreconditionError(f"{name} is not closed")


def _indeterminacy(cat, data, objects, f_lift, h_lift):
    """Echelon basis of h H^{-1}(X,Z) + H^0(Y,U) f in class coordinates."""
    X, Y, Z, U = objects
    n = data.h_dim(X, U, 0)
    span = Span(cat.field, n)
    basis = []
    for k in range(data.h_dim(X, Z, -1)):
        alpha = data.rep_basis_element(X, Z, -1, k)
        w = cat.m_value((X, Z, U), [alpha, h_lift])
        vec = data.class_of(w, X, U)
        if span.add(vec):
            basis.append(vec)
    for k in range(data.h_dim(Y, U, 0)):
        beta = data.rep_basis_element(Y, U, 0, k)
        w = cat.m_value((X, Y, U), [f_lift, beta])
        vec = data.class_of(w, X, U)
        if span.add(vec):
            basis.append(vec)
    return span.basis()


def massey_ainfty(cat, objects, f, g, h, data=None, choices=None):
    """The A-infinity Massey product <h, g, f> as representative + indeterminacy.

    objects = (X, Y, Z, U); f, g are closed degree-0 cycle representatives,
    h a closed degree-1 one, with gf and hg boundaries.  `choices` may supply
    alternative lifts "f", "g", "h" (cycles in the same classes) and explicit
    nullhomotopies "u", "v" solving m1(u) = m2(g, f) and m1(v) = m2(h, g);
    supplied data is validated, never trusted.
    """
    X, Y, Z, U = objects
    data = data or HomologyData(cat)
    choices = choices or {}
    f_l, g_l, h_l = choices.get("f", f), choices.get("g", g), choices.get("h", h)
    _require_cycle(data, f_l, X, Y, 0, "f")
    _require_cycle(data, g_l, Y, Z, 0, "g")
    _require_cycle(data, h_l, Z, U, 1, "h")
    for name, alt, orig, pair in (("f", f_l, f, (X, Y)), ("g", g_l, g, (Y, Z)),
                                  ("h", h_l, h, (Z, U))):
        if alt is not orig:
            _require_cycle(data, orig, pair[0], pair[1], alt.degree, name)
            if data.class_of(alt, *pair) != data.class_of(orig, *pair):
                raise PreconditionError(f"supplied lift of {name} changes its class")
    gf = cat.m_value((X, Y, Z), [f_l, g_l])
    hg = cat.m_value((Y, Z, U), [g_l, h_l])
    u = choices.get("u")
    if u is None:
        u = data.primitive_of(gf, X, Z)
        if u is None:
            raise PreconditionError("g f is not a boundary; product undefined")
    else:
        if u.degree != -1 or cat.m_value((X, Z), [u]) != gf:
            raise PreconditionError("supplied u does not solve m1(u) = m2(g, f)")
    v = choices.get("v")
    if v is None:
        v = data.primitive_of(hg, Y, U)
        if v is None:
            raise PreconditionError("h g is not a boundary; product undefined")
    else:
        if v.degree != 0 or cat.m_value((Y, U), [v]) != hg:
            raise PreconditionError("supplied v does not solve m1(v) = m2(h, g)")
    # s b~ = -b2(s h, s u) + b2(s v, s f) - b3(s h, s g, s f)
    term1 = cat.b_value((X, Z, U), [u, h_l])
    term2 = cat.b_value((X, Y, U), [f_l, v])
    term3 = cat.b_value((X, Y, Z, U), [f_l, g_l, h_l])
    rep = term2 - term1 - term3
    assert data.is_cycle(rep, X, U), "closedness of the Massey representative failed"
    rep_class = data.class_of(rep, X, U)
    indet = _indeterminacy(cat, data, objects, f_l, h_l)
    return MasseyResult(cat, tuple(objects), (f, g, h), rep, rep_class, indet, data)


def contains_class(result, elem):
    """Exact membership of a class (given by a cycle) in the Massey coset."""
    return result.contains_element(elem)


def is_distinguished(cat, objects3, f, g, h, data=None):
    """Prop.-A.1 test: the triangle X -> Y -> Z -> (1) X is distinguished iff
    the Massey coset of (h, g, f) contains the identity of X."""
    X, Y, Z = objects3
    data = data or HomologyData(cat)
    result = massey_ainfty(cat, (X, Y, Z, X), f, g, h, data=data)
    return result.contains_element(cat.unit_element(X)), result


# -- the triangulated-side computation ---------------------------------------


def _h_basis_reps(data, src, dst, degree):
    return [data.rep_basis_element(src, dst, degree, k)
            for k in range(data.h_dim(src, dst, degree))]


def massey_triangulated(cat, objects, f, g, h, data=None):
    """Massey product computed in H^0(Tw cat) by completing the cone diagram.

    Builds the standard triangle on the lift of f, then solves the linear
    system [a][i] = [g], [b][p] = [h][a] over cohomology classes of the
    materialized subcategory, returning the b-part of the solution set
    mapped back to the base category's classes.
    """
    X, Y, Z, U = objects
    data = data or HomologyData(cat)
    _require_cycle(data, f, X, Y, 0, "f")
    _require_cycle(data, g, Y, Z, 0, "g")
    _require_cycle(data, h, Z, U, 1, "h")
    ex, ey, ez, eu = (embed_object(cat, o) for o in (X, Y, Z, U))
    f_tw = FreeElement(ex.base, ey.base, 0, {(0, 0): f})
    C, i_tw, p_tw = cone(cat, ex, ey, f_tw)
    names = ["nX", "nY", "nZ", "nU", "nC"]
    model = materialize_tw(cat, [ex, ey, ez, eu, C], 3, names=names)
    mcat = model.category
    mdata = HomologyData(mcat)
    i_el = model.to_graded(1, 4, i_tw)
    p_el = model.to_graded(4, 0, p_tw)
    g_el = model.to_graded(1, 2, FreeElement(ey.base, ez.base, 0, {(0, 0): g}))
    h_el = model.to_graded(2, 3, FreeElement(ez.base, eu.base, 1, {(0, 0): h}))
    a_reps = _h_basis_reps(mdata, "nC", "nZ", 0)
    b_reps = _h_basis_reps(mdata, "nX", "nU", 0)
    eq1_dim = mdata.h_dim("nY", "nZ", 0)
    eq2_dim = mdata.h_dim("nC", "nU", 1)
    field = cat.field
    columns = []
    for a in a_reps:  # coefficient of each a-basis class
        e1 = mdata.class_of(mcat.m_value(("nY", "nC", "nZ"), [i_el, a]), "nY", "nZ")
        e2 = mdata.class_of(mcat.m_value(("nC", "nZ", "nU"), [a, h_el]), "nC", "nU")
        columns.append(e1 + [-c for c in e2])
    for b in b_reps:
        e1 = zero_vector(field, eq1_dim)
        e2 = mdata.class_of(mcat.m_value(("nC", "nX", "nU"), [p_el, b]), "nC", "nU")
        columns.append(e1 + e2)
    rhs = mdata.class_of(g_el, "nY", "nZ") + zero_vector(field, eq2_dim)
    particular = solve(columns, rhs, field)
    if particular is None:
        raise PreconditionError("cone diagram cannot be completed; inputs invalid")
    rows = [[col[r] for col in columns] for r in range(eq1_dim + eq2_dim)]
    kernel = kernel_basis(rows, field, len(columns))
    na = len(a_reps)
    # solution's b-part, mapped back to base-category classes
    def b_part_to_base_class(coeffs):
        acc = mcat.hom("nX", "nU").zero_element(0)
        for c, rep in zip(coeffs, b_reps):
            if c:
                acc = acc + rep.scale(c)
        fel = model.from_graded(0, 3, acc)
        entry = fel.entries.get((0, 0))
        if entry is None:
            entry = cat.hom(X, U).zero_element(0)
        return entry

    rep_elem = b_part_to_base_class(particular[na:])
    assert data.is_cycle(rep_elem, X, U)
    rep_class = data.class_of(rep_elem, X, U)
    span = Span(field, data.h_dim(X, U, 0))
    indet = []
    for kv in kernel:
        elem = b_part_to_base_class(kv[na:])
        vec = data.class_of(elem, X, U)
        if span.add(vec):
            indet.append(vec)
    return MasseyResult(cat, tuple(objects), (f, g, h), rep_elem, rep_class,
                        span.basis(), data)


def cosets_equal(r1, r2):
    """Same affine coset: equal spans and representative difference inside."""
    field = r1.cat.field
    n = len(r1.rep_class)
    s1 = Span(field, n)
    for v in r1.indeterminacy:
        s1.add(v)
    s2 = Span(field, n)
    for v in r2.indeterminacy:
        s2.add(v)
    if s1.rank != s2.rank:
        return False
    if not all(s2.contains(v) for v in s1.basis()):
        return False
    diff = [a - b for a, b in zip(r1.rep_class, r2.rep_class)]
    return s1.contains(diff)


# -- brute-force search oracle ------------------------------------------------


def _all_class_elems(mdata, src, dst, degree, include_zero=False):
    """Every element of H^degree(src, dst) over a finite field, as cycle reps."""
    field = mdata.cat.field
    assert field.kind == "Fp", "exhaustive search needs a finite field"
    dim = mdata.h_dim(src, dst, degree)
    scalars = [field.scalar(k) for k in range(field.p)]
    for coords in iproduct(scalars, repeat=dim):
        if not include_zero and not any(coords):
            continue
        yield list(coords), mdata.rep_element(src, dst, degree, list(coords))


def _is_iso_class(mdata, src, dst, phi):
    """Two-sided invertibility of a degree-0 class, by linear solve."""
    cat = mdata.cat
    n_left = mdata.h_dim(dst, src, 0)
    gens = []
    for k in range(n_left):
        psi = mdata.rep_basis_element(dst, src, 0, k)
        left = mdata.class_of(cat.m_value((src, dst, src), [phi, psi]), src, src)
        right = mdata.class_of(cat.m_value((dst, src, dst), [psi, phi]), dst, dst)
        gens.append(left + right)
    want = (mdata.class_of(cat.unit_element(src), src, src)
            + mdata.class_of(cat.unit_element(dst), dst, dst))
    return solve(gens, want, cat.field) is not None


def brute_force_distinguished(cat, twobjects, triple_indices, f, g, h):
    """Exhaustive Prop.-A.1 oracle over a finite field.

    twobjects: ambient list of twisted complexes (the candidate triangle's
    X, Y, Z are twobjects[i] for i in triple_indices); f, g, h are closed
    morphisms between them (FreeElements; h of total degree 1 back into X).
    Searches all standard triangles on closed degree-0 classes between the
    ambient objects and all triangle isomorphisms onto them.
    """
    iX, iY, iZ = triple_indices
    base_model = materialize_tw(cat, twobjects, 3)
    mdata = HomologyData(base_model.category)
    names = base_model.names
    f_el = base_model.to_graded(iX, iY, f)
    g_el = base_model.to_graded(iY, iZ, g)
    h_el = base_model.to_graded(iZ, iX, h)
    for iA in range(len(twobjects)):
        for iB in range(len(twobjects)):
            for coords, fp_el in _all_class_elems(mdata, names[iA], names[iB], 0,
                                                  include_zero=True):
                fp_free = base_model.from_graded(iA, iB, fp_el)
                try:
                    Cp, ip, pp = cone(cat, twobjects[iA], twobjects[iB], fp_free)
                except PreconditionError:
                    continue
                ext = materialize_tw(cat, twobjects + [Cp], 3)
                edata = HomologyData(ext.category)
                en = ext.names
                if _triangle_iso_exists(cat, ext, edata, en,
                                         (iX, iY, iZ), (iA, iB, len(twobjects)),
                                         (f, g, h), (fp_free, ip, pp)):
                    return True
    return False


def _triangle_iso_exists(cat, ext, edata, names, src_idx, dst_idx, src_maps, dst_maps):
    iX, iY, iZ = src_idx
    iA, iB, iC = dst_idx
    f, g, h = src_maps
    fp, ip, pp = dst_maps
    mcat = ext.category
    f_el = ext.to_graded(iX, iY, f)
    g_el = ext.to_graded(iY, iZ, g)
    h_el = ext.to_graded(iZ, iX, h)
    fp_el = ext.to_graded(iA, iB, fp)
    ip_el = ext.to_graded(iB, iC, ip)
    pp_el = ext.to_graded(iC, iA, pp)
    nX, nY, nZ = names[iX], names[iY], names[iZ]
    nA, nB, nC = names[iA], names[iB], names[iC]
    for _, phi1 in _all_class_elems(edata, nX, nA, 0):
        if not _is_iso_class(edata, nX, nA, phi1):
            continue
        lhs1 = edata.class_of(mcat.m_value((nX, nA, nB), [phi1, fp_el]), nX, nB)
        for _, phi2 in _all_class_elems(edata, nY, nB, 0):
            if edata.class_of(mcat.m_value((nX, nY, nB), [f_el, phi2]), nX, nB) != lhs1:
                continue
            if not _is_iso_class(edata, nY, nB, phi2):
                continue
            lhs2 = edata.class_of(mcat.m_value((nY, nB, nC), [phi2, ip_el]), nY, nC)
            for _, phi3 in _all_class_elems(edata, nZ, nC, 0):
                if edata.class_of(mcat.m_value((nY, nZ, nC), [g_el, phi3]), nY, nC) != lhs2:
                    continue
                if not _is_iso_class(edata, nZ, nC, phi3):
                    continue
                sq3_l = edata.class_of(
                    mcat.m_value((nZ, nC, nA), [phi3, pp_el]), nZ, nA)
                sq3_r = edata.class_of(
                    mcat.m_value((nZ, nX, nA), [h_el, phi1]), nZ, nA)
                if sq3_l == sq3_r:
                    return True
    return False
