"""Dense exact matrices and the tensor-product machinery built on them.

Matrices act on column vectors: column ``j`` holds the image of basis vector
``e_j``.  The basis of ``V (x) V`` with ``dim V = d`` is ordered
lexicographically, ``e_i (x) e_j`` sitting at index ``i*d + j``, which is
the block convention of :func:`kron`.
"""

from .errors import DimensionError, FieldMismatchError, SingularMatrixError
from .fields import QQ


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("rows", "cols", "field", "_data")

    def __init__(self, rows, field=QQ):
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if not data:
            raise DimensionError("a matrix needs at least one row")
        ncols = len(data[0])
        if ncols == 0 or any(len(r) != ncols for r in data):
            raise DimensionError("ragged or empty rows")
        self.rows = len(data)
        self.cols = ncols
        self.field = field
        self._data = data

    @classmethod
    def _trusted(cls, data, field):
        # entries already coerced into ``field``
        m = object.__new__(cls)
        m.rows = len(data)
        m.cols = len(data[0])
        m.field = field
        m._data = data
        return m

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        z = field.zero
        return cls._trusted(tuple((z,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls._trusted(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field)

    @classmethod
    def from_columns(cls, columns, field=QQ):
        """Build a matrix whose ``j``-th column is ``columns[j]``."""
        columns = [tuple(field(x) for x in c) for c in columns]
        return cls._trusted(tuple(zip(*columns)), field)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def entries(self):
        """Row-major flat tuple of entries."""
        return tuple(x for r in self._data for x in r)

    def transpose(self):
        return Matrix._trusted(tuple(zip(*self._data)), self.field)

    @property
    def T(self):
        return self.transpose()

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"matrices over {self.field} and {other.field}")

    def __add__(self, other):
        self._check_same(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix._trusted(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.field,
        )

    def __neg__(self):
        return Matrix._trusted(tuple(tuple(-x for x in r) for r in self._data), self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return Matrix._trusted(tuple(tuple(c * x for x in r) for r in self._data), self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def apply(self, vector):
        """Image of a coordinate vector under this matrix."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        v = [self.field(x) for x in vector]
        zero = self.field.zero
        out = []
        for r in self._data:
            acc = zero
            for a, x in zip(r, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._data == other._data

    def __hash__(self):
        return hash((self.field, self._data))

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    def is_square(self):
        return self.rows == self.cols

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self._data)
        return f"Matrix[{self.field}]({body})"


def mat_mul(a, b):
    """Exact product ``a @ b``; zero entries are skipped, so sparse lifts stay cheap."""
    a._check_same(b)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    zero = a.field.zero
    b_nz = [[(j, x) for j, x in enumerate(r) if x] for r in b._data]
    out = []
    for r in a._data:
        acc = [zero] * b.cols
        for k, aik in enumerate(r):
            if not aik:
                continue
            for j, bkj in b_nz[k]:
                acc[j] = acc[j] + aik * bkj
        out.append(tuple(acc))
    return Matrix._trusted(tuple(out), a.field)


def compose(*ms):
    """``compose(f, g, h) == f @ g @ h`` (apply ``h`` first)."""
    out = ms[0]
    for m in ms[1:]:
        out = mat_mul(out, m)
    return out


def row_reduce(m):
    """Reduced row echelon form; returns ``(rref, pivot_columns)``."""
    field = m.field
    rows = [list(r) for r in m._data]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix._trusted(tuple(tuple(x) for x in rows), field), pivots


def rank(m):
    return len(row_reduce(m)[1])


def mat_inverse(a):
    """Exact inverse by Gauss-Jordan elimination.

    Raises :class:`SingularMatrixError` for rank-deficient input.
    """
    if not a.is_square():
        raise DimensionError(f"cannot invert a {a.shape} matrix")
    n = a.rows
    ident = Matrix.identity(n, a.field)
    aug = Matrix._trusted(tuple(r + s for r, s in zip(a._data, ident._data)), a.field)
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"matrix has rank {sum(p < n for p in pivots)} < {n}")
    return Matrix._trusted(tuple(r[n:] for r in red._data), a.field)


def is_invertible(a):
    return a.is_square() and rank(a) == a.rows


def nullspace(m):
    """Basis of ``{x : m x = 0}`` as a list of coordinate tuples."""
    red, pivots = row_reduce(m)
    field = m.field
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(tuple(v))
    return basis


def solve(m, rhs):
    """All solutions of ``m x = rhs`` as ``(particular, nullspace_basis)``, or None."""
    if len(rhs) != m.rows:
        raise DimensionError("right-hand side length does not match row count")
    field = m.field
    aug = Matrix._trusted(tuple(r + (field(b),) for r, b in zip(m._data, rhs)), field)
    red, pivots = row_reduce(aug)
    if m.cols in pivots:
        return None
    x = [field.zero] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red[i, m.cols]
    return tuple(x), nullspace(m)


def kron(a, b):
    """Kronecker product, ``kron(a, b)[i*b.rows + k, j*b.cols + l] = a[i, j] * b[k, l]``."""
    a._check_same(b)
    zero = a.field.zero
    out = []
    for ar in a._data:
        for br in b._data:
            out.append(tuple((x * y if x and y else zero) for x in ar for y in br))
    return Matrix._trusted(tuple(out), a.field)


def tensor_vectors(*vectors):
    """Coordinates of ``v1 (x) v2 (x) ...`` in the lexicographic product basis."""
    out = vectors[0]
    for v in vectors[1:]:
        out = tuple(x * y for x in out for y in v)
    return tuple(out)


def twist(d, field=QQ):
    """Matrix of ``v (x) w -> w (x) v`` on ``V (x) V`` with ``dim V = d``."""
    if d < 1:
        raise DimensionError("twist needs d >= 1")
    n = d * d
    z, o = field.zero, field.one
    rows = [[z] * n for _ in range(n)]
    for i in range(d):
        for j in range(d):
            rows[j * d + i][i * d + j] = o
    return Matrix._trusted(tuple(tuple(r) for r in rows), field)


def _check_operator(r, d):
    if r.shape != (d * d, d * d):
        raise DimensionError(f"operator of shape {r.shape} does not act on V(x)V with dim V = {d}")


def lift12(r, d):
    _check_operator(r, d)
    return kron(r, Matrix.identity(d, r.field))


def lift23(r, d):
    _check_operator(r, d)
    return kron(Matrix.identity(d, r.field), r)


def lift13(r, d):
    _check_operator(r, d)
    i_tau = kron(Matrix.identity(d, r.field), twist(d, r.field))
    return compose(i_tau, lift12(r, d), i_tau)
