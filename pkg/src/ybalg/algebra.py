"""Finite-dimensional algebras given by structure constants.

``table[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j``.  Elements
are plain tuples of field scalars in the algebra's basis.
"""

from dataclasses import dataclass
from typing import Any, Optional

from .errors import AlgebraValidationError, DimensionError, FieldMismatchError
from .fields import QQ
from .linalg import Matrix, nullspace, solve


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a single property check.

    ``witness`` is set exactly when the property fails and names the basis
    indices (or grid point / parameters) where it breaks.
    """

    prop: str
    holds: bool
    witness: Optional[Any] = None
    detail: str = ""

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("a passing check carries no witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing check needs a witness")

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls, prop, detail=""):
        return cls(prop, True, None, detail)

    @classmethod
    def fail(cls, prop, witness, detail=""):
        return cls(prop, False, witness, detail)


class FiniteAlgebra:
    """Algebra on ``k^n`` with a bilinear product from structure constants.

    A declared ``unit`` is validated on construction, as is homogeneity of the
    product with respect to a declared ``grading`` (one 0/1 per basis vector).
    """

    def __init__(self, table, field=QQ, labels=None, unit=None, grading=None, name=None):
        n = len(table)
        if n < 1:
            raise AlgebraValidationError("dimension must be at least 1")
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise AlgebraValidationError(f"table[{i}] has {len(row)} entries, expected {n}")
            out = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise AlgebraValidationError(f"table[{i}][{j}] has {len(vec)} entries, expected {n}")
                out.append(tuple(field(x) for x in vec))
            rows.append(tuple(out))
        self.dim = n
        self.field = field
        self.table = tuple(rows)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(n))
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise AlgebraValidationError("need one distinct label per basis vector")
        self.name = name
        self.grading = None
        if grading is not None:
            g = tuple(int(x) for x in grading)
            if len(g) != n or any(x not in (0, 1) for x in g):
                raise AlgebraValidationError("grading must list 0 or 1 for each basis vector")
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if self.table[i][j][k] and g[k] != (g[i] + g[j]) % 2:
                            raise AlgebraValidationError(
                                f"product {self.labels[i]}*{self.labels[j]} has a component on "
                                f"{self.labels[k]} of the wrong degree"
                            )
            self.grading = g
        self.unit = None
        if unit is not None:
            u = self.element(unit)
            for i in range(n):
                e = self.basis(i)
                if self.mul(u, e) != e or self.mul(e, u) != e:
                    raise AlgebraValidationError(
                        f"declared unit does not act as identity on {self.labels[i]}"
                    )
            self.unit = u

    # --- elements --------------------------------------------------------

    def element(self, coords):
        if len(coords) != self.dim:
            raise DimensionError(f"element has {len(coords)} coordinates, algebra has dimension {self.dim}")
        return tuple(self.field(x) for x in coords)

    def zero(self):
        return (self.field.zero,) * self.dim

    def basis(self, i):
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    def index(self, label):
        return self.labels.index(label)

    def mul(self, x, y):
        return multiply(self, x, y)

    def add(self, *xs):
        return tuple(sum(cs, self.field.zero) for cs in zip(*xs))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x):
        c = self.field(c)
        return tuple(c * a for a in x)

    def format(self, x):
        """Human form like ``E11 + E22`` or ``2*a - 1/2*b``."""
        parts = []
        for c, lab in zip(x, self.labels):
            if not c:
                continue
            s = self.field.format(c)
            if s == "1":
                term = lab
            elif s == "-1":
                term = "-" + lab
            else:
                term = f"{s}*{lab}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    # --- derived algebras -----------------------------------------------

    def over(self, field):
        """Same structure constants read in another field (e.g. reduced mod p)."""
        if field == self.field:
            return self
        conv = _converter(self.field, field)
        return FiniteAlgebra(
            [[[conv(x) for x in v] for v in row] for row in self.table],
            field, self.labels,
            None if self.unit is None else [conv(x) for x in self.unit],
            self.grading, self.name,
        )

    def with_grading(self, grading):
        return FiniteAlgebra(self.table, self.field, self.labels, self.unit, grading, self.name)

    def product_matrix_left(self, x):
        """Matrix of ``y -> x*y``."""
        return Matrix.from_columns([self.mul(x, e) for e in self.basis_elements()], self.field)

    def product_matrix_right(self, x):
        """Matrix of ``y -> y*x``."""
        return Matrix.from_columns([self.mul(e, x) for e in self.basis_elements()], self.field)

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.field == other.field and self.table == other.table
                and self.labels == other.labels and self.unit == other.unit
                and self.grading == other.grading)

    def __hash__(self):
        return hash((self.field, self.table, self.labels))

    def __repr__(self):
        nm = f"{self.name!r}, " if self.name else ""
        return f"FiniteAlgebra({nm}dim={self.dim}, field={self.field})"


def _converter(src, dst):
    if src == QQ:
        return dst
    if dst == QQ:
        raise FieldMismatchError(f"cannot lift structure constants from {src} to Q")
    raise FieldMismatchError(f"cannot convert structure constants from {src} to {dst}")


def _conform(F, v):
    out = []
    for a in v:
        if F.contains(a):
            out.append(a)
        elif isinstance(a, int) and not isinstance(a, bool):
            out.append(F(a))
        else:
            raise FieldMismatchError(f"{a!r} is not an element of {F}")
    return tuple(out)


def multiply(alg, x, y):
    """Bilinear product of two coordinate vectors."""
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise DimensionError(f"operands of length {len(x)}, {len(y)} in an algebra of dimension {n}")
    F = alg.field
    if not all(F.contains(a) for a in x) or not all(F.contains(a) for a in y):
        x, y = _conform(F, x), _conform(F, y)
    acc = [F.zero] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = alg.table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, t in enumerate(row[j]):
                if t:
                    acc[k] = acc[k] + c * t
    return tuple(acc)


def find_unit(alg):
    """The two-sided unit of ``alg`` as an element, or None.

    Solves ``u*e_i = e_i`` and ``e_i*u = e_i`` for all ``i`` as one linear system
    in the coordinates of ``u``.  A unit, when it exists, is unique.
    """
    n, F, c = alg.dim, alg.field, alg.table
    rows, rhs = [], []
    for i in range(n):
        for m in range(n):
            # (u * e_i)_m = sum_k u_k c[k][i][m]
            rows.append([c[k][i][m] for k in range(n)])
            rhs.append(F.one if i == m else F.zero)
            rows.append([c[i][k][m] for k in range(n)])
            rhs.append(F.one if i == m else F.zero)
    sol = solve(Matrix(rows, F), rhs)
    if sol is None:
        return None
    u, kernel = sol
    # uniqueness of units makes a positive-dimensional kernel impossible here
    assert not kernel, "unit equations have a non-trivial kernel"
    return u


def center(alg):
    """Basis of ``{z : z*e_i = e_i*z = 0 for all i}``, the bracket centre.

    For an antisymmetric product the right-hand conditions repeat the left
    ones; keeping both makes the result meaningful for any product.
    """
    n, c = alg.dim, alg.table
    rows = []
    for i in range(n):
        for m in range(n):
            rows.append([c[k][i][m] for k in range(n)])
            rows.append([c[i][k][m] for k in range(n)])
    return nullspace(Matrix(rows, alg.field))


def is_central(alg, z):
    zero = alg.zero()
    return all(alg.mul(z, e) == zero and alg.mul(e, z) == zero for e in alg.basis_elements())


def is_even(alg, z):
    """True when ``z`` has no component on odd basis vectors."""
    if alg.grading is None:
        return True
    return all(not zk for zk, g in zip(z, alg.grading) if g == 1)
