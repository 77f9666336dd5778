"""Exact Gaussian elimination over a FieldSpec.

Vectors are lists of FieldScalar, matrices lists of row vectors.
Pivoting is always first-nonzero, so echelon bases and solution choices
are deterministic and reproducible across runs.
"""


def zero_vector(field, n):
    z = field.zero()
    return [z] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_is_zero(u):
    return not any(u)


def rref(rows, field):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class Span:
    """Incremental row space with reduction against a growing echelon basis.

    Each added generator is tracked so that any vector in the span can be
    rewritten as an explicit combination of the generators.  Combinations
    come from first-nonzero pivoting; generators that did not increase the
    rank never appear, which realizes the deterministic "free coordinates
    set to zero" solve.
    """

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []      # echelon rows (pivot-normalized, mutually reduced)
        self.combos = []    # per row: dict generator_index -> coefficient
        self.pivots = []    # pivot column of each row
        self.ngens = 0

    def reduce(self, vec):
        """Return (residual, combo) with vec = sum(combo over generators) + residual."""
        vec = list(vec)
        combo = {}
        for row, rcombo, p in zip(self.rows, self.combos, self.pivots):
            c = vec[p]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
                for k, v in rcombo.items():
                    combo[k] = combo.get(k, self.field.zero()) + c * v
        combo = {k: v for k, v in combo.items() if v}
        return vec, combo

    def contains(self, vec):
        residual, _ = self.reduce(vec)
        return vec_is_zero(residual)

    def add(self, vec):
        """Add a generator; returns True if it increased the rank."""
        idx = self.ngens
        self.ngens += 1
        residual, combo = self.reduce(vec)
        p = next((j for j, a in enumerate(residual) if a), None)
        if p is None:
            return False
        inv = residual[p].inv()
        row = [inv * a for a in residual]
        # residual = vec - sum(combo), hence row = inv*vec - inv*sum(combo)
        rcombo = {k: -inv * v for k, v in combo.items()}
        rcombo[idx] = inv
        for i in range(len(self.rows)):
            c = self.rows[i][p]
            if c:
                self.rows[i] = [a - c * b for a, b in zip(self.rows[i], row)]
                merged = dict(self.combos[i])
                for k, v in rcombo.items():
                    merged[k] = merged.get(k, self.field.zero()) - c * v
                self.combos[i] = {k: v for k, v in merged.items() if v}
        pos = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(pos, row)
        self.combos.insert(pos, rcombo)
        self.pivots.insert(pos, p)
        return True

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def solve_in_terms_of_generators(self, vec):
        """Coefficients on the added generators producing vec, or None."""
        residual, combo = self.reduce(vec)
        if not vec_is_zero(residual):
            return None
        return combo


def kernel_basis(rows, field, ncols):
    """Echelon basis of {x : sum_j x_j * column_j = 0} for the matrix with given rows.

    Rows are the matrix rows (row r maps coordinate vectors by x -> sum_c rows[r][c] x_c),
    so this is the usual right kernel, one basis vector per free column.
    """
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    one = field.one()
    for fc in free:
        vec = zero_vector(field, ncols)
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def image_basis(rows, field):
    """Reduced echelon basis of the row space."""
    red, _ = rref(rows, field)
    return red


def solve(generators, rhs, field):
    """One coefficient vector x with sum_j x_j * generators[j] = rhs, or None.

    Deterministic: echelon pivoting over the generators in order, unused
    generators get coefficient zero.
    """
    if not generators:
        return [] if vec_is_zero(rhs) else None
    span = Span(field, len(generators[0]))
    for g in generators:
        span.add(g)
    combo = span.solve_in_terms_of_generators(rhs)
    if combo is None:
        return None
    out = zero_vector(field, len(generators))
    for k, v in combo.items():
        out[k] = v
    return out
