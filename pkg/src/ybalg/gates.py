"""The two-qubit matrix family with parameters (eta, q) and its link to CZ/CNOT.

The family is displayed with rows as images: row ``i`` lists the coordinates
of the image of the ``i``-th basis vector.  It is realized exactly as
``R^A_{q,1,q} o tau`` on ``A = k[X]/(X^2 - c)`` with ``c = eta / (1 + q)``
in the basis ``(1(x)1, 1(x)x, x(x)1, x(x)x)``; the column-convention matrix
of that operator is the transpose of the display.
"""

from dataclasses import dataclass
from fractions import Fraction

from .corpus import truncated_poly
from .errors import AlgebraValidationError
from .fields import QQ
from .linalg import Matrix, kron, mat_mul, twist
from .yb import check_qybe, build_assoc_operator

CNOT = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
HADAMARD_UNNORMALIZED = Matrix([[1, 1], [1, -1]])

ROWS_AS_IMAGES = "rows-as-images (row i = image of basis vector i; transpose of the column convention)"
COLUMN_CONVENTION = "column convention (column j = image of basis vector j)"


@dataclass(frozen=True)
class Eq3Params:
    eta: int
    q: Fraction

    def __post_init__(self):
        if self.eta not in (0, 1):
            raise ValueError(f"eta must be 0 or 1, got {self.eta!r}")
        q = QQ(self.q)
        if not q:
            raise ValueError("q must be nonzero")
        object.__setattr__(self, "q", q)


def build_eq3_matrix(p):
    """The 4x4 display, exactly as printed (rows as images)."""
    q = p.q
    return Matrix([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 1 - q, q, 0],
        [p.eta, 0, 0, -q],
    ])


@dataclass(frozen=True)
class Realization:
    """How the display was reproduced; ``column_matrix.T == display``."""

    algebra: str
    c: Fraction
    alpha: Fraction
    beta: Fraction
    basis_order: tuple
    convention: str
    column_matrix: Matrix
    display: Matrix


def realize_eq3_from_algebra(p):
    """Rebuild the display from ``R^A_{q,1,q} o tau`` and check it entry-wise.

    Raises ``ValueError`` for ``(eta, q) = (1, -1)``, where ``c`` is undefined,
    and ``AssertionError`` if the realization ever disagrees with the display.
    """
    if p.eta == 1 and p.q == -1:
        raise ValueError("eta = 1 with q = -1 leaves c = eta/(1+q) undefined")
    c = Fraction(p.eta) / (1 + p.q) if p.eta else Fraction(0)
    alg = truncated_poly(c, QQ, name="k[X]/(X^2 - c)")
    r = build_assoc_operator(alg, p.q, 1, p.q)
    op = mat_mul(r, twist(2))
    display = op.transpose()
    expected = build_eq3_matrix(p)
    if display != expected:
        raise AssertionError(f"realization {display!r} differs from the display {expected!r}")
    return display, Realization(
        algebra=f"k[X]/(X^2 - {c})", c=c, alpha=p.q, beta=Fraction(1),
        basis_order=("1(x)1", "1(x)x", "x(x)1", "x(x)x"),
        convention=ROWS_AS_IMAGES, column_matrix=op, display=display,
    )


def cz_matrix():
    return build_eq3_matrix(Eq3Params(0, 1))


def cz_cnot_bridge():
    """Check ``(I (x) H)(CZ)(I (x) H) == 2 CNOT`` with the unnormalized Hadamard
    ``H = [[1, 1], [1, -1]]``, in integer arithmetic."""
    from .algebra import CheckReport

    cz = cz_matrix()
    ih = kron(Matrix.identity(2), HADAMARD_UNNORMALIZED)
    lhs = mat_mul(mat_mul(ih, cz), ih)
    rhs = CNOT.scale(2)
    if lhs == rhs:
        return CheckReport.ok("cz_cnot_bridge", "(I(x)H)·CZ·(I(x)H) = 2·CNOT")
    bad = next((i, j) for i in range(4) for j in range(4) if lhs[i, j] != rhs[i, j])
    return CheckReport.fail("cz_cnot_bridge", bad)


EQ3_GRID = (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 3))


def eq3_grid_points(qs=EQ3_GRID):
    return [Eq3Params(eta, q) for eta in (0, 1) for q in qs if not (eta == 1 and QQ(q) == -1)]


def eq3_qybe_scan(qs=EQ3_GRID):
    """QYBE verdict of the display at each grid point, excluding ``(1, -1)``."""
    return [(p, check_qybe(build_eq3_matrix(p), 2)) for p in eq3_grid_points(qs)]
