"""Formal shifted sums, twisted complexes, cones, truncation, induced functors.

A morphism of formal sums is a sparse matrix of sigma-shifted base elements.
Entry (row, col) of f : X -> Y lives in hom(X_col, Y_row); with offset
c = shift(Y_row) - shift(X_col) it represents sigma^c x and has base degree
|x| = |f| + c.  Composite sigmas are never formed; every sign routes through
the Koszul rule s sigma = -sigma s.  Pulling the arguments' sigmas out of
(s sigma^{c_n} x_n, ..., s sigma^{c_1} x_1) to the front costs

    E = sum_r c_r * (1 + sum_{t>r} (|x_t| + 1))   (indices in chain order):

each sigma^{c_r} crosses its own s and then the stripped blocks s x_t on its
left.  This is the unique extension (up to gauge) for which the free category
satisfies the Stasheff identities, and the shift endofunctor
Sigma(sigma^c x) = (-1)^c sigma^c x is strict for it.

All twisted-complex operations are evaluated by one walk: a path takes any
number of strictly descending delta steps inside each object, interleaved
with the argument steps, and the leaf applies the base operation (b for
compositions, a functor component f for induced functors) with the sign E
of the full interleaved tuple.
"""

from dataclasses import dataclass
from itertools import product

from .category import AInftyCategory, CheckReport, compositions, kappa_exponent
from .errors import ArityLimitError, PreconditionError
from .graded import GradedElement, GradedSpace


class FreeObject:
    """Finite (possibly empty) formal sum of shifted base objects."""

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = tuple((int(a), obj) for a, obj in summands)

    def __len__(self):
        return len(self.summands)

    def shifted(self, n=1):
        return FreeObject([(a + n, obj) for a, obj in self.summands])

    def __eq__(self, other):
        return isinstance(other, FreeObject) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __repr__(self):
        inner = " + ".join(f"S^{a}{o}" for a, o in self.summands) or "0"
        return f"({inner})"


class FreeElement:
    """Homogeneous matrix morphism between formal sums.

    entries[(row, col)] is a homogeneous GradedElement of
    hom(src[col].obj, dst[row].obj) with degree `degree + offset(row, col)`.
    """

    __slots__ = ("src", "dst", "degree", "entries")

    def __init__(self, src, dst, degree, entries):
        self.src = src
        self.dst = dst
        self.degree = int(degree)
        self.entries = {}
        for (row, col), elem in entries.items():
            if not (0 <= row < len(dst) and 0 <= col < len(src)):
                raise PreconditionError(f"entry ({row},{col}) outside the matrix")
            if elem.degree != self.degree + self.offset(row, col):
                raise PreconditionError(
                    f"entry ({row},{col}) has degree {elem.degree}, expected "
                    f"{self.degree + self.offset(row, col)}")
            if elem:
                self.entries[(row, col)] = elem

    def offset(self, row, col):
        return self.dst.summands[row][0] - self.src.summands[col][0]

    def by_col(self):
        out = {}
        for (row, col), e in sorted(self.entries.items()):
            out.setdefault(col, []).append((row, e))
        return out

    def is_zero(self):
        return not self.entries

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other):
        assert (self.src, self.dst, self.degree) == (other.src, other.dst, other.degree)
        entries = dict(self.entries)
        for k, e in other.entries.items():
            entries[k] = entries[k] + e if k in entries else e
        return FreeElement(self.src, self.dst, self.degree, entries)

    def __neg__(self):
        return FreeElement(self.src, self.dst, self.degree,
                           {k: -e for k, e in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FreeElement(self.src, self.dst, self.degree,
                           {k: e.scale(c) for k, e in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self.src, self.dst, self.degree) == (
            other.src, other.dst, other.degree) and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"({r},{c}): {e}" for (r, c), e in sorted(self.entries.items()))
        return f"Free[deg {self.degree}]{{{body}}}"


def zero_free(src, dst, degree):
    return FreeElement(src, dst, degree, {})


def basis_entry(cat, src, dst, row, col, label):
    """Singleton matrix sigma^c x for a base basis label."""
    a, src_obj = src.summands[col]
    b, dst_obj = dst.summands[row]
    base_deg = cat.label_degree(src_obj, dst_obj, label)
    elem = cat.basis_element(src_obj, dst_obj, label)
    return FreeElement(src, dst, base_deg - (b - a), {(row, col): elem})


def identity_free(cat, obj):
    ents = {(k, k): cat.unit_element(o) for k, (a, o) in enumerate(obj.summands)}
    return FreeElement(obj, obj, 0, ents)


def sigma_sign_exponent(offsets, degrees):
    """E = sum_r c_r (1 + sum_{t>r} (d_t + 1)); chain-ordered steps.

    This is the sign of pulling the arguments' sigmas out of a degree-1
    operation (each sigma crosses its own s and the stripped blocks on its
    left).
    """
    e = 0
    suffix = 0
    for c, d in zip(reversed(offsets), reversed(degrees)):
        e += c * (1 + suffix)
        suffix += d + 1
    return e % 2


def functor_sigma_sign_exponent(offsets, degrees):
    """Sigma sign for extending degree-0 functor components to formal sums.

    E = sum_r c_r * sum_{t>r} (d_t + 1); no own-s crossing term, so the
    identity functor extends to the literal identity on every matrix entry
    (forced: Tw(id) = id).
    """
    e = 0
    suffix = 0
    for c, d in zip(reversed(offsets), reversed(degrees)):
        e += c * suffix
        suffix += d + 1
    return e % 2


class TwObject:
    """Twisted complex: formal sum plus strictly lower triangular degree-1 twist.

    The constructor only checks shape and homogeneity; the Maurer-Cartan
    equation is a separate explicit verification.
    """

    __slots__ = ("base", "delta", "delta_cols")

    def __init__(self, base, delta):
        if delta.src != base or delta.dst != base:
            raise PreconditionError("twist must be an endomorphism of the sum")
        if delta.degree != 1:
            raise PreconditionError("twist must be homogeneous of total degree 1")
        for (row, col) in delta.entries:
            if row <= col:
                raise PreconditionError(
                    f"twist entry ({row},{col}) is not strictly lower triangular")
        self.base = base
        self.delta = delta
        self.delta_cols = delta.by_col()

    def __len__(self):
        return len(self.base)

    def summand(self, k):
        return self.base.summands[k]

    def __eq__(self, other):
        return (isinstance(other, TwObject)
                and self.base == other.base and self.delta == other.delta)

    def __hash__(self):
        return hash((self.base, tuple(sorted(
            (k, e.degree, tuple(sorted(e.coords.items(), key=lambda kv: kv[0])))
            for k, e in self.delta.entries.items()))))

    def __repr__(self):
        return f"Tw({self.base!r}, delta={self.delta!r})"


def embed_object(cat, obj, shift=0):
    """An object of the base category as a one-summand twisted complex."""
    base = FreeObject([(shift, obj)])
    return TwObject(base, zero_free(base, base, 1))


# -- the evaluation walk ---------------------------------------------------


def _walk_eval(cat, tws, elems, leaf, out_src, out_dst,
               sign_fn=sigma_sign_exponent, degree_shift=None):
    """Shared delta-insertion walk behind compositions and functor components.

    tws: n+1 twisted complexes; elems[r]: morphism tws[r] -> tws[r+1].
    Emits, for every interleaved matrix path, sign * leaf(chain, entries)
    into the (end_row, start_col) output entry.  Strict lower triangularity
    of the twists makes the walk finite.  degree_shift is 2 - n for the
    operations, 1 - n for functor components.
    """
    n = len(elems)
    assert len(tws) == n + 1
    cols = [e.by_col() for e in elems]
    if degree_shift is None:
        degree_shift = 2 - n
    out_degree = sum(e.degree for e in elems) + degree_shift
    acc = {}
    minus_one = -cat.field.one()

    def emit(j0, j_end, steps):
        arity = len(steps)
        if arity > cat.max_arity:
            raise ArityLimitError(
                f"twisted evaluation needs base arity {arity}, max is {cat.max_arity}")
        chain = tuple(s[2] for s in steps) + (tws[-1].summand(j_end)[1],)
        value = leaf(chain, [s[0] for s in steps])
        if not value:
            return
        if sign_fn([s[1] for s in steps], [s[0].degree for s in steps]):
            value = value.scale(minus_one)
        key = (j_end, j0)
        acc[key] = acc[key] + value if key in acc else value

    def walk(r, j, j0, steps):
        tw = tws[r]
        if r == n:
            emit(j0, j, steps)
        else:
            for row, entry in cols[r].get(j, ()):
                off = elems[r].offset(row, j)
                walk(r + 1, row, j0, steps + [(entry, off, tw.summand(j)[1])])
        for row, entry in tw.delta_cols.get(j, ()):
            off = tw.delta.offset(row, j)
            walk(r, row, j0, steps + [(entry, off, tw.summand(j)[1])])

    for j0 in range(len(tws[0])):
        walk(0, j0, j0, [])
    return FreeElement(out_src, out_dst, out_degree,
                       {k: v for k, v in acc.items() if v})


def b_tw(cat, tws, elems):
    """B-side composition in Tw: the delta-insertion sum (unshifted shadow)."""
    return _walk_eval(cat, tws, elems,
                      lambda chain, ents: cat.b_value(chain, ents),
                      tws[0].base, tws[-1].base)


def b_free(cat, objs, elems):
    """B-side composition in Free (no twists)."""
    bases = [o.base if isinstance(o, TwObject) else o for o in objs]
    tws = [TwObject(b, zero_free(b, b, 1)) for b in bases]
    return _walk_eval(cat, tws, elems,
                      lambda chain, ents: cat.b_value(chain, ents),
                      bases[0], bases[-1])


def m_tw(cat, tws, elems):
    """m-side composition in Tw, via m_i = -kappa * B_i on total degrees."""
    value = b_tw(cat, tws, elems)
    if kappa_exponent([e.degree for e in elems]) == 0:
        value = value.scale(-cat.field.one())
    return value


def tw_differential(cat, src, dst, f):
    """m_{Tw,1}(f); total degree rises by one."""
    return m_tw(cat, [src, dst], [f])


def tw_is_closed(cat, src, dst, f):
    return not b_tw(cat, [src, dst], [f])


def verify_maurer_cartan(cat, X):
    """Exact check of sum_i b_i(s delta, ..., s delta) = 0."""
    n = len(X)
    total = zero_free(X.base, X.base, 2)
    for i in range(1, max(n, 1)):
        term = b_free(cat, [X.base] * (i + 1), [X.delta] * i)
        total = total + term
    failures = [] if total.is_zero() else [("maurer-cartan residual", total)]
    return CheckReport(not failures, failures)


# -- shift functor ---------------------------------------------------------


def shift_free_element(f, n=1):
    """Sigma^n on morphisms: offsets fixed, entries scaled by (-1)^{cn}."""
    src = f.src.shifted(n)
    dst = f.dst.shifted(n)
    entries = {}
    for (row, col), e in f.entries.items():
        c = f.offset(row, col)
        entries[(row, col)] = e if (c * n) % 2 == 0 else -e
    return FreeElement(src, dst, f.degree, entries)


def shift_tw(X, n=1):
    """Strict shift of a twisted complex."""
    if isinstance(X, TwObject):
        return TwObject(X.base.shifted(n), shift_free_element(X.delta, n))
    return shift_free_element(X, n)


# -- cones and standard triangles -------------------------------------------


def cone(cat, src, dst, f):
    """Mapping cone of a closed degree-0 morphism, with the triangle maps.

    Returns (C, i, p): C = (Sigma A + B, delta_C), i : B -> C of degree 0,
    p : C -> A of degree 1.  Sign pattern (derived so that delta_C is
    Maurer-Cartan and i, p are closed for arbitrary summand shifts):
    the Sigma A block keeps delta_A's entries, the f block entries are
    scaled by (-1)^{shift of their target B-summand}, and the p entries
    sigma^{-1} id are scaled by (-1)^{shift of their A-summand}.  When all
    summands sit in even shifts this is literally the matrix
    [[-delta_A, 0], [sigma^{-1} f, delta_B]] written with Sigma delta_A.
    """
    if f.degree != 0:
        raise PreconditionError("cone needs a degree-0 morphism")
    if not tw_is_closed(cat, src, dst, f):
        raise PreconditionError("cone needs a closed morphism")
    nA = len(src)
    csum = [(a + 1, o) for a, o in src.base.summands] + list(dst.base.summands)
    cbase = FreeObject(csum)
    entries = {}
    for (row, col), e in src.delta.entries.items():
        entries[(row, col)] = e
    for (row, col), e in dst.delta.entries.items():
        entries[(nA + row, nA + col)] = e
    for (row, col), e in f.entries.items():
        b_shift = dst.base.summands[row][0]
        entries[(nA + row, col)] = e if b_shift % 2 == 0 else -e
    delta_c = FreeElement(cbase, cbase, 1, entries)
    C = TwObject(cbase, delta_c)
    mc = verify_maurer_cartan(cat, C)
    assert mc.passed, f"cone twist fails Maurer-Cartan: {mc.failures}"
    i_entries = {(nA + k, k): cat.unit_element(o)
                 for k, (a, o) in enumerate(dst.base.summands)}
    i = FreeElement(dst.base, cbase, 0, i_entries)
    p_entries = {}
    for k, (a, o) in enumerate(src.base.summands):
        u = cat.unit_element(o)
        p_entries[(k, k)] = u if a % 2 == 0 else -u
    p = FreeElement(cbase, src.base, 1, p_entries)
    assert tw_is_closed(cat, dst, C, i), "triangle map i is not closed"
    assert tw_is_closed(cat, C, src, p), "triangle map p is not closed"
    return C, i, p


def free_hom_basis(cat, src, dst, degree):
    """Entry-singleton basis of hom(src, dst) in one total degree."""
    out = []
    for row, (b, dobj) in enumerate(dst.base.summands):
        for col, (a, sobj) in enumerate(src.base.summands):
            for lab, d in cat.basis_labels(sobj, dobj):
                if d - (b - a) == degree:
                    out.append(basis_entry(cat, src.base, dst.base, row, col, lab))
    return out


def closed_morphism_space(cat, src, dst, degree=0):
    """Echelon basis of the closed morphisms src -> dst of a total degree."""
    from .linalg import kernel_basis
    basis = free_hom_basis(cat, src, dst, degree)
    if not basis:
        return []
    target = free_hom_basis(cat, src, dst, degree + 1)
    index = {}
    for k, t in enumerate(target):
        (pos, elem), = t.entries.items()
        (lab, _), = elem.coords.items()
        index[(pos, lab)] = k
    zero = cat.field.zero()
    rows = [[zero] * len(basis) for _ in range(len(target))]
    for c, b in enumerate(basis):
        img = b_tw(cat, [src, dst], [b])
        for pos, elem in img.entries.items():
            for lab, coeff in elem.coords.items():
                rows[index[(pos, lab)]][c] = coeff
    kern = kernel_basis(rows, cat.field, len(basis))
    out = []
    for vec in kern:
        acc = zero_free(src.base, dst.base, degree)
        for coeff, b in zip(vec, basis):
            if coeff:
                acc = acc + b.scale(coeff)
        out.append(acc)
    return out


# -- truncation -------------------------------------------------------------


@dataclass
class TruncationWitness:
    blocks: list
    q: int
    accepted: bool

    def __bool__(self):
        return self.accepted


def truncation_check(X, q):
    """Coarsest consecutive block partition with strictly block-lower delta.

    Greedy left-to-right: a summand starts a new block exactly when some
    delta entry would otherwise land inside the current block.  Accepts
    iff the partition has at most q+1 blocks.
    """
    n = len(X)
    blocks = []
    current = []
    start = 0
    for t in range(n):
        violates = any(col >= start for (row, col) in X.delta.entries if row == t)
        if violates and current:
            blocks.append(tuple(current))
            current = []
            start = t
        current.append(t)
    if current:
        blocks.append(tuple(current))
    return TruncationWitness(blocks, q, len(blocks) <= q + 1)


def block_count(X):
    return len(truncation_check(X, 0).blocks)


# -- materialization into a plain category -----------------------------------


class TwModel:
    """A finite full subcategory of Tw(cat) as an honest AInftyCategory.

    Materialized hom bases are the matrix entries, except that on each
    endomorphism hom the identity matrix replaces the last diagonal unit
    entry as a degree-0 basis vector (labelled "id"), so the category is
    strictly unital with unit labels.  `to_graded`/`from_graded` convert
    between FreeElements and materialized elements through that triangular
    basis change.
    """

    def __init__(self, cat, twobjects, arity, names=None):
        self.cat = cat
        self.tws = list(twobjects)
        self.names = names or [f"T{k}" for k in range(len(self.tws))]
        assert len(self.names) == len(self.tws)
        # every twisted operation above the top stored base arity K vanishes
        # (a leaf of arity i + insertions >= i > K is zero), so materializing
        # to depth K makes the model complete for the base's full max_arity
        top = max(cat.ops) if cat.ops else 0
        self.arity = min(arity, top)
        self.declared_arity = cat.max_arity if arity >= top else arity
        self._build()

    def _pair_layout(self, si, sj):
        """Entry labels (row, col, base label, base degree) in basis order."""
        Xi, Xj = self.tws[si], self.tws[sj]
        out = []
        for row, (b, dobj) in enumerate(Xj.base.summands):
            for col, (a, sobj) in enumerate(Xi.base.summands):
                for lab, d in self.cat.basis_labels(sobj, dobj):
                    out.append((row, col, lab, d - (b - a)))
        return out

    def _build(self):
        cat = self.cat
        homs = {}
        self._drop = {}
        for si, ni in enumerate(self.names):
            for sj, nj in enumerate(self.names):
                layout = self._pair_layout(si, sj)
                if not layout and si != sj:
                    continue
                dims = {}
                drop = None
                if si == sj:
                    m = len(self.tws[si])
                    last = self.tws[si].base.summands[m - 1]
                    drop = (m - 1, m - 1, cat.units[last[1]])
                    dims[0] = ["id"]
                self._drop[(si, sj)] = drop
                for row, col, lab, deg in layout:
                    if drop is not None and (row, col, lab) == drop:
                        continue
                    dims.setdefault(deg, []).append(f"{row}.{col}.{lab}")
                if dims:
                    homs[(ni, nj)] = GradedSpace(cat.field, dims)
        units = {n: "id" for n in self.names}
        ops = {}
        idx = {n: k for k, n in enumerate(self.names)}
        for i in range(1, self.arity + 1):
            table = {}
            chains = [(n,) for n in self.names]
            for _ in range(i):
                chains = [c + (n,) for c in chains for n in self.names
                          if (c[-1], n) in homs]
            for chain in chains:
                spaces = [homs[(chain[r], chain[r + 1])] for r in range(i)]
                stacks = [[(l, d) for d in sp.degrees() for l in sp.labels(d)]
                          for sp in spaces]
                if not all(stacks):
                    continue
                self._fill_table(table, chain, stacks, idx, homs, i)
            if table:
                ops[i] = table
        self.category = AInftyCategory(
            cat.field, self.names, homs, units, self.declared_arity, ops)

    def _fill_table(self, table, chain, stacks, idx, homs, i):
        pairs = [(idx[chain[r]], idx[chain[r + 1]]) for r in range(i)]
        for combo in product(*stacks):
            elems = [self._label_to_free(pairs[r][0], pairs[r][1], combo[r][0])
                     for r in range(i)]
            tws = [self.tws[idx[o]] for o in chain]
            value = m_tw(self.cat, tws, elems)
            if not value:
                continue
            out = self._free_to_graded(idx[chain[0]], idx[chain[-1]],
                                       homs[(chain[0], chain[-1])], value)
            if out:
                table[(chain, tuple(l for l, _ in combo))] = out

    def _label_to_free(self, si, sj, label):
        Xi, Xj = self.tws[si], self.tws[sj]
        if label == "id":
            return identity_free(self.cat, Xi.base)
        row, col, lab = label.split(".", 2)
        return basis_entry(self.cat, Xi.base, Xj.base, int(row), int(col), lab)

    def _free_to_graded(self, si, sj, space, fel):
        """Express a FreeElement in the materialized basis of the pair."""
        cat = self.cat
        Xi, Xj = self.tws[si], self.tws[sj]
        drop = self._drop.get((si, sj))
        coords = {}
        id_coeff = None
        for (row, col), e in fel.entries.items():
            for lab, c in e.coords.items():
                key = (row, col, lab)
                if drop is not None and key == drop:
                    id_coeff = c
                else:
                    coords[f"{row}.{col}.{lab}"] = coords.get(
                        f"{row}.{col}.{lab}", cat.field.zero()) + c
        if id_coeff is not None:
            coords["id"] = coords.get("id", cat.field.zero()) + id_coeff
            for k in range(len(Xi) - 1):
                a, o = Xi.base.summands[k]
                lab = cat.units[o]
                keyname = f"{k}.{k}.{lab}"
                coords[keyname] = coords.get(keyname, cat.field.zero()) - id_coeff
        coords = {k: v for k, v in coords.items() if v}
        return GradedElement(space, fel.degree, coords)

    def to_graded(self, si, sj, fel):
        name_i, name_j = self.names[si], self.names[sj]
        space = self.category.hom(name_i, name_j)
        return self._free_to_graded(si, sj, space, fel)

    def from_graded(self, si, sj, elem):
        Xi, Xj = self.tws[si], self.tws[sj]
        acc = zero_free(Xi.base, Xj.base, elem.degree)
        for label, c in elem.coords.items():
            acc = acc + self._label_to_free(si, sj, label).scale(c)
        return acc


def materialize_tw(cat, twobjects, arity, names=None):
    return TwModel(cat, twobjects, arity, names)


# -- induced functors on truncated twisted complexes -------------------------


def map_tw_object(F, X):
    """Image of a twisted complex under an A_m-functor.

    The new twist is omega applied to sum_i f_i(s delta, ..., s delta),
    computed by the same walk (delta steps only, functor leaf).
    """
    cat = F.source
    out_base = FreeObject([(a, F.obj_map[o]) for a, o in X.base.summands])
    acc = {}
    minus_one = -F.target.field.one()

    def emit(j0, j_end, steps):
        if not steps:
            return
        if len(steps) > F.arity:
            raise ArityLimitError(
                f"object image needs functor arity {len(steps)} > {F.arity}")
        chain = tuple(s[2] for s in steps) + (X.summand(j_end)[1],)
        value = F.f_value(chain, [s[0] for s in steps])
        if not value:
            return
        if functor_sigma_sign_exponent([s[1] for s in steps],
                                       [s[0].degree for s in steps]):
            value = value.scale(minus_one)
        key = (j_end, j0)
        acc[key] = acc[key] + value if key in acc else value

    def walk(j, j0, steps):
        emit(j0, j, steps)
        for row, entry in X.delta_cols.get(j, ()):
            off = X.delta.offset(row, j)
            walk(row, j0, steps + [(entry, off, X.summand(j)[1])])

    for j0 in range(len(X)):
        walk(j0, j0, [])
    delta = FreeElement(out_base, out_base, 1, {k: v for k, v in acc.items() if v})
    return TwObject(out_base, delta)


def tw_functor_component(F, tws, elems):
    """Component of Tw f on a composable chain, by the delta-insertion walk."""
    images = [map_tw_object(F, t) for t in tws]

    def leaf(chain, ents):
        if len(ents) > F.arity:
            raise ArityLimitError(
                f"component needs functor arity {len(ents)} > {F.arity}")
        return F.f_value(chain, ents)

    return _walk_eval(F.source, tws, elems, leaf,
                      images[0].base, images[-1].base,
                      sign_fn=functor_sigma_sign_exponent,
                      degree_shift=1 - len(elems))


class TwFunctor:
    """The induced functor on truncated twisted complexes.

    For an A_m-functor and truncation level q it is an A_d-functor with
    d = floor((m - q) / (q + 1)); objects must be Tw_{<= q} (at most q+1
    blocks), which bounds the delta insertions so every walk stays within
    the arity of the underlying functor.
    """

    def __init__(self, F, q):
        if q > F.arity:
            raise PreconditionError("truncation level exceeds functor arity")
        self.F = F
        self.q = q
        self.arity = (F.arity - q) // (q + 1)

    def check_object(self, X):
        wit = truncation_check(X, self.q)
        if not wit.accepted:
            raise PreconditionError(
                f"object has {len(wit.blocks)} blocks, more than q+1 = {self.q + 1}")
        return wit

    def map_object(self, X):
        self.check_object(X)
        img = map_tw_object(self.F, X)
        mc = verify_maurer_cartan(self.F.target, img)
        assert mc.passed, "functor image violates Maurer-Cartan"
        return img

    def component(self, tws, elems):
        if len(elems) > self.arity:
            raise PreconditionError(
                f"component arity {len(elems)} exceeds induced arity {self.arity}")
        for t in tws:
            self.check_object(t)
        return tw_functor_component(self.F, tws, elems)


def tw_functor_relation_residual(G, tws, elems):
    """Eq-(4) defect for the induced functor at one Tw chain."""
    F = G.F
    i = len(elems)
    images = [G.map_object(t) for t in tws]
    out_deg = sum(e.degree for e in elems) + 2 - i
    total = zero_free(images[0].base, images[-1].base, out_deg)
    degs = [e.degree for e in elems]
    minus = -F.target.field.one()
    for k in range(1, i + 1):
        for l in range(0, i - k + 1):
            inner = b_tw(F.source, tws[l:l + k + 1], elems[l:l + k])
            if not inner:
                continue
            outer_elems = list(elems[:l]) + [inner] + list(elems[l + k:])
            outer_tws = tws[:l + 1] + tws[l + k:]
            term = tw_functor_component(F, outer_tws, outer_elems)
            if not term:
                continue
            if sum(d + 1 for d in degs[l + k:]) % 2:
                term = term.scale(minus)
            total = total + term
    for r in range(1, i + 1):
        for split in compositions(i, r):
            pos = 0
            pieces = []
            piece_tws = [images[0]]
            ok = True
            for part in split:
                piece = tw_functor_component(
                    F, tws[pos:pos + part + 1], elems[pos:pos + part])
                pos += part
                piece_tws.append(images[pos])
                if not piece:
                    ok = False
                    break
                pieces.append(piece)
            if not ok:
                continue
            term = b_tw(F.target, piece_tws, pieces)
            if term:
                total = total - term
    return total
