"""Directedness analysis of graded categories and block form of twists.

A category is directed of length l when its objects split into ordered
blocks O_0, ..., O_l with no morphisms pointing backward and only
isomorphisms (or zero) inside each block.  The analysis condenses the
nonzero-hom digraph into strongly connected components and layers them by
longest-path depth, which is the minimal-length valid decomposition; the
within-block condition is then checked per component.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .graded import GradedElement
from .linalg import solve


@dataclass
class DirectedStructure:
    blocks: list        # ordered list of tuples of object ids
    length: int

    def block_of(self, obj):
        for k, blk in enumerate(self.blocks):
            if obj in blk:
                return k
        raise PreconditionError(f"object {obj!r} not assigned to a block")


@dataclass
class DirectedRefusal:
    witness: tuple      # (src, dst, degree, element) violating morphism
    reason: str

    def __bool__(self):
        return False


def _nonzero_pairs(cat):
    return {(s, d) for (s, d), sp in cat.homs.items() if sp.total_dim() > 0}


def _sccs(objects, edges):
    """Tarjan's strongly connected components, iterative, input order kept."""
    index = {}
    low = {}
    onstack = set()
    stack = []
    out = []
    counter = [0]
    adj = {o: sorted(d for (s, d) in edges if s == o and d != o) for o in objects}

    for root in objects:
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    onstack.add(nxt)
                    work.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
                if nxt in onstack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                out.append(tuple(sorted(comp)))
    return out


def _two_sided_inverse(cat, src, dst, elem):
    """Exact solve for psi with m2(psi, elem) = id_src and m2(elem, psi) = id_dst."""
    inv_space = cat.hom(dst, src)
    d = -elem.degree
    labels = inv_space.labels(d)
    if not labels:
        return None
    gens = []
    for lab in labels:
        psi = inv_space.basis_element(d, lab)
        left = cat.m_value((src, dst, src), [elem, psi])
        right = cat.m_value((dst, src, dst), [psi, elem])
        gens.append(left.vector() + right.vector())
    want = cat.unit_element(src).vector() + cat.unit_element(dst).vector()
    coeffs = solve(gens, want, cat.field)
    if coeffs is None:
        return None
    acc = inv_space.zero_element(d)
    for c, lab in zip(coeffs, labels):
        if c:
            acc = acc + inv_space.basis_element(d, lab).scale(c)
    return acc


def _all_nonzero_elements(cat, src, dst, degree):
    """All nonzero elements of one graded piece; finite fields only."""
    from itertools import product
    space = cat.hom(src, dst)
    labels = space.labels(degree)
    scalars = [cat.field.scalar(k) for k in range(cat.field.p)]
    for coords in product(scalars, repeat=len(labels)):
        if any(coords):
            yield GradedElement(space, degree,
                                {l: c for l, c in zip(labels, coords) if c})


EXHAUSTIVE_LIMIT = 4096


def analyze_directed(cat):
    """Directed decomposition of minimal length, or a refusal with witness.

    Requires a graded category (m_1 = 0).  Within-block invertibility is
    checked on basis elements by an exact two-sided linear solve; over a
    finite field with at most EXHAUSTIVE_LIMIT elements per graded piece,
    every nonzero element is checked.
    """
    if cat.ops.get(1):
        raise PreconditionError("directedness is defined for m_1 = 0 categories")
    pairs = _nonzero_pairs(cat)
    comps = _sccs(cat.objects, pairs)
    comp_of = {}
    for k, comp in enumerate(comps):
        for o in comp:
            comp_of[o] = k
    # longest-path depth layering of the condensation
    depth = [0] * len(comps)
    changed = True
    while changed:
        changed = False
        for (s, d) in sorted(pairs):
            cs, cd = comp_of[s], comp_of[d]
            if cs != cd and depth[cd] < depth[cs] + 1:
                depth[cd] = depth[cs] + 1
                changed = True
    # within-component condition: every nonzero map is invertible
    for comp in comps:
        for src in comp:
            for dst in comp:
                space = cat.hom(src, dst)
                for deg in sorted(space.degrees(), reverse=True):
                    for lab in space.labels(deg):
                        elem = space.basis_element(deg, lab)
                        if _two_sided_inverse(cat, src, dst, elem) is None:
                            return DirectedRefusal(
                                (src, dst, deg, elem),
                                "non-invertible morphism inside a block")
                    if (cat.field.kind == "Fp"
                            and cat.field.p ** space.dim(deg) <= EXHAUSTIVE_LIMIT):
                        for elem in _all_nonzero_elements(cat, src, dst, deg):
                            if _two_sided_inverse(cat, src, dst, elem) is None:
                                return DirectedRefusal(
                                    (src, dst, deg, elem),
                                    "non-invertible morphism inside a block")
    length = max(depth) if depth else 0
    blocks = []
    for level in range(length + 1):
        members = []
        for k, comp in enumerate(comps):
            if depth[k] == level:
                members.extend(comp)
        blocks.append(tuple(sorted(members)))
    structure = DirectedStructure(blocks, length)
    # re-verify condition (1) on the layered partition
    for (s, d) in pairs:
        if structure.block_of(d) < structure.block_of(s):
            space = cat.hom(s, d)
            deg = space.degrees()[0]
            return DirectedRefusal(
                (s, d, deg, space.basis_element(deg, space.labels(deg)[0])),
                "backward morphism between blocks")
    return structure


def block_form_check(X, structure):
    """Lemma-6.6 shape: summands grouped by non-decreasing block index and
    delta vanishing on and above the block diagonal in that grouping."""
    indices = [structure.block_of(obj) for _, obj in X.base.summands]
    if any(b < a for a, b in zip(indices, indices[1:])):
        return False
    for (row, col) in X.delta.entries:
        if indices[row] <= indices[col]:
            return False
    return True
