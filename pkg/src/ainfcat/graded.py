"""Finitely supported Z-graded vector spaces, homogeneous elements, graded maps.

Conventions:
  (Sigma A)_i = A_{i+n} for the n-fold shift, so dims shift by -n;
  (Sigma f)_i = (-1)^{|f|} f_{i+1};
  s^n : A -> Sigma^n A has degree -n and is the identity on components.
"""

from .errors import FieldMismatchError, NonComposableError, PreconditionError
from . import linalg


class GradedSpace:
    """Ordered basis labels per degree; finitely many nonzero degrees.

    Labels must be unique within each degree.  Zero-dimensional spaces are
    first-class (empty `dims`).
    """

    __slots__ = ("field", "dims")

    def __init__(self, field, dims):
        clean = {}
        for deg, labels in sorted(dims.items()):
            labels = tuple(labels)
            if not labels:
                continue
            if len(set(labels)) != len(labels):
                raise PreconditionError(f"duplicate basis labels in degree {deg}")
            clean[int(deg)] = labels
        self.field = field
        self.dims = clean

    def degrees(self):
        return sorted(self.dims)

    def dim(self, degree):
        return len(self.dims.get(degree, ()))

    def total_dim(self):
        return sum(len(v) for v in self.dims.values())

    def labels(self, degree):
        return self.dims.get(degree, ())

    def index(self, degree, label):
        try:
            return self.dims[degree].index(label)
        except (KeyError, ValueError):
            raise PreconditionError(f"no basis label {label!r} in degree {degree}")

    def basis_element(self, degree, label):
        self.index(degree, label)
        return GradedElement(self, degree, {label: self.field.one()})

    def zero_element(self, degree):
        return GradedElement(self, degree, {})

    def element_from_vector(self, degree, vec):
        labels = self.labels(degree)
        assert len(vec) == len(labels)
        return GradedElement(
            self, degree, {l: c for l, c in zip(labels, vec) if c})

    def __eq__(self, other):
        return (
            isinstance(other, GradedSpace)
            and self.field == other.field
            and self.dims == other.dims
        )

    def __hash__(self):
        return hash(tuple((d, v) for d, v in sorted(self.dims.items())))

    def __repr__(self):
        inner = ", ".join(f"{d}:{len(v)}" for d, v in sorted(self.dims.items()))
        return f"GradedSpace({{{inner}}})"


def shift_space(space, n):
    """Sigma^n: new degree d holds what the old space had in degree d + n."""
    return GradedSpace(space.field, {d - n: v for d, v in space.dims.items()})


class GradedElement:
    """Homogeneous element: declared degree plus sparse coords on that degree's basis."""

    __slots__ = ("space", "degree", "coords")

    def __init__(self, space, degree, coords):
        self.space = space
        self.degree = degree
        self.coords = {l: c for l, c in coords.items() if c}
        labels = space.dims.get(degree, ())
        for l in self.coords:
            if l not in labels:
                raise PreconditionError(
                    f"label {l!r} not in degree {degree} of the space")

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def __add__(self, other):
        self._compat(other)
        coords = dict(self.coords)
        for l, c in other.coords.items():
            s = coords.get(l)
            coords[l] = c if s is None else s + c
        return GradedElement(self.space, self.degree, coords)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedElement(
            self.space, self.degree, {l: -c for l, c in self.coords.items()})

    def scale(self, c):
        if not c:
            return GradedElement(self.space, self.degree, {})
        return GradedElement(
            self.space, self.degree, {l: c * v for l, v in self.coords.items()})

    def vector(self):
        zero = self.space.field.zero()
        return [self.coords.get(l, zero) for l in self.space.labels(self.degree)]

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return (
            self.space == other.space
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __repr__(self):
        if not self.coords:
            return f"0[deg {self.degree}]"
        parts = " + ".join(f"{c}*{l}" for l, c in sorted(self.coords.items()))
        return f"({parts})[deg {self.degree}]"

    def _compat(self, other):
        if self.space != other.space or self.degree != other.degree:
            raise NonComposableError("elements live in different spaces or degrees")


class GradedMap:
    """Degree-d linear map; block per source degree i sends A_i -> B_{i+d}.

    Blocks are dense row-major matrices (rows indexed by codomain basis).
    Unstored blocks are zero.
    """

    __slots__ = ("domain", "codomain", "degree", "blocks")

    def __init__(self, domain, codomain, degree, blocks):
        if domain.field != codomain.field:
            raise FieldMismatchError("domain and codomain over different fields")
        self.domain = domain
        self.codomain = codomain
        self.degree = degree
        self.blocks = {}
        for i, mat in blocks.items():
            nrows = codomain.dim(i + degree)
            ncols = domain.dim(i)
            assert len(mat) == nrows and all(len(r) == ncols for r in mat), (
                f"block at degree {i} has wrong shape")
            if any(any(row) for row in mat):
                self.blocks[i] = [list(r) for r in mat]

    @property
    def field(self):
        return self.domain.field

    def block(self, i):
        mat = self.blocks.get(i)
        if mat is not None:
            return mat
        zero = self.field.zero()
        return [[zero] * self.domain.dim(i) for _ in range(self.codomain.dim(i + self.degree))]

    def apply(self, elem):
        if elem.space != self.domain:
            raise NonComposableError("element not in the domain")
        i = elem.degree
        out_deg = i + self.degree
        mat = self.blocks.get(i)
        if mat is None:
            return self.codomain.zero_element(out_deg)
        x = elem.vector()
        zero = self.field.zero()
        out = []
        for row in mat:
            acc = zero
            for a, b in zip(row, x):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return self.codomain.element_from_vector(out_deg, out)

    def compose(self, other):
        """self after other; degrees add."""
        if other.codomain != self.domain:
            raise NonComposableError("maps do not compose")
        blocks = {}
        for i, mat in other.blocks.items():
            mid = i + other.degree
            top = self.blocks.get(mid)
            if top is None:
                continue
            nrows = len(top)
            ncols = len(mat[0]) if mat else 0
            zero = self.field.zero()
            prod = [[zero] * ncols for _ in range(nrows)]
            for r in range(nrows):
                for k in range(len(mat)):
                    a = top[r][k]
                    if not a:
                        continue
                    row = mat[k]
                    for c in range(ncols):
                        if row[c]:
                            prod[r][c] = prod[r][c] + a * row[c]
            blocks[i] = prod
        return GradedMap(other.domain, self.codomain, self.degree + other.degree, blocks)

    def __add__(self, other):
        assert (self.domain, self.codomain, self.degree) == (
            other.domain, other.codomain, other.degree)
        blocks = {}
        for i in set(self.blocks) | set(other.blocks):
            a, b = self.block(i), other.block(i)
            blocks[i] = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        return GradedMap(self.domain, self.codomain, self.degree, blocks)

    def __neg__(self):
        return self.scale(-self.field.one())

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        blocks = {i: [[c * x for x in row] for row in mat]
                  for i, mat in self.blocks.items()}
        return GradedMap(self.domain, self.codomain, self.degree, blocks)

    def is_zero(self):
        return not self.blocks

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if (self.domain, self.codomain, self.degree) != (
                other.domain, other.codomain, other.degree):
            return False
        for i in set(self.blocks) | set(other.blocks):
            if self.block(i) != other.block(i):
                return False
        return True

    def kernel_dims(self):
        """Per source degree: dim ker of that block."""
        out = {}
        for i in self.domain.dims:
            ncols = self.domain.dim(i)
            rows = self.blocks.get(i, [])
            out[i] = len(linalg.kernel_basis(rows, self.field, ncols))
        return out

    def image_dims(self):
        out = {}
        for i, mat in self.blocks.items():
            cols = [[mat[r][c] for r in range(len(mat))] for c in range(len(mat[0]))]
            out[i + self.degree] = len(linalg.image_basis(cols, self.field))
        return out


def zero_map(domain, codomain, degree):
    return GradedMap(domain, codomain, degree, {})


def identity_map(space):
    field = space.field
    one, zero = field.one(), field.zero()
    blocks = {}
    for d, labels in space.dims.items():
        n = len(labels)
        blocks[d] = [[one if r == c else zero for c in range(n)] for r in range(n)]
    return GradedMap(space, space, 0, blocks)


def shift_map(f):
    """Sigma f : Sigma A -> Sigma B, components (Sigma f)_i = (-1)^{|f|} f_{i+1}."""
    sA = shift_space(f.domain, 1)
    sB = shift_space(f.codomain, 1)
    sign = f.field.one() if f.degree % 2 == 0 else -f.field.one()
    blocks = {}
    for i, mat in f.blocks.items():
        blocks[i - 1] = [[sign * x for x in row] for row in mat]
    return GradedMap(sA, sB, f.degree, blocks)


def degree_change(space, n):
    """s^n : A -> Sigma^n A, degree -n, identity on every component.

    omega^n is degree_change(space, -n) composed appropriately; concretely
    degree_change(shift_space(A, n), -n) inverts degree_change(A, n).
    """
    target = shift_space(space, n)
    field = space.field
    one, zero = field.one(), field.zero()
    blocks = {}
    for d, labels in space.dims.items():
        m = len(labels)
        blocks[d] = [[one if r == c else zero for c in range(m)] for r in range(m)]
    return GradedMap(space, target, -n, blocks)
