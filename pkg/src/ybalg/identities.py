"""Exact checks of algebraic identities on structure-constant algebras.

Multilinear identities (associativity, commutativity, the Lie and super-Lie
axioms, the six-term identity) are decided on basis elements.  The Jordan
identity is cubic in its first argument, so it is decided on the grid
``{0,1,2,3}^n``: a polynomial of degree at most 3 in each variable that
vanishes on four distinct values per variable is identically zero.
"""

from collections import namedtuple
from itertools import product

from .algebra import CheckReport, FiniteAlgebra
from .errors import AlgebraValidationError, UnsupportedFieldError
from .fields import QQ

_JORDAN_GRID = (0, 1, 2, 3)


def _triples(n):
    return product(range(n), repeat=3)


def _e(alg, i):
    return alg.basis(i)


def is_associative(alg):
    n = alg.dim
    for i, j, k in _triples(n):
        a, b, c = _e(alg, i), _e(alg, j), _e(alg, k)
        if alg.mul(alg.mul(a, b), c) != alg.mul(a, alg.mul(b, c)):
            return CheckReport.fail("associative", (i, j, k), "(e_i e_j) e_k != e_i (e_j e_k)")
    return CheckReport.ok("associative")


def is_commutative(alg):
    t = alg.table
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if t[i][j] != t[j][i]:
                return CheckReport.fail("commutative", (i, j), "e_i e_j != e_j e_i")
    return CheckReport.ok("commutative")


def is_lie(alg):
    """Alternating product plus Jacobi identity, checked on the basis.

    ``e_i e_i = 0`` together with antisymmetry on pairs is the alternating
    condition, which is the right axiom in characteristic 2 as well.
    """
    n, t = alg.dim, alg.table
    for i in range(n):
        if any(t[i][i]):
            return CheckReport.fail("lie", ("alternating", i), "[e_i, e_i] != 0")
    for i in range(n):
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(t[i][j], t[j][i])):
                return CheckReport.fail("lie", ("antisymmetry", i, j), "[e_i, e_j] != -[e_j, e_i]")
    for i, j, k in _triples(n):
        if any(jacobi_sum(alg, i, j, k)):
            return CheckReport.fail("lie", ("jacobi", i, j, k), "Jacobi sum does not vanish")
    return CheckReport.ok("lie")


def jacobi_sum(alg, i, j, k):
    """``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``."""
    m = alg.mul
    a, b, c = _e(alg, i), _e(alg, j), _e(alg, k)
    return alg.add(m(m(a, b), c), m(m(b, c), a), m(m(c, a), b))


def _sign(p):
    return -1 if p % 2 else 1


def super_jacobi_sum(alg, i, j, k):
    """Signed Jacobi sum on homogeneous basis vectors x=e_i, y=e_j, z=e_k:
    ``(-1)^{|z||x|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]]``.
    """
    g = alg.grading
    m = alg.mul
    x, y, z = _e(alg, i), _e(alg, j), _e(alg, k)
    return alg.add(
        alg.scale(_sign(g[k] * g[i]), m(x, m(y, z))),
        alg.scale(_sign(g[i] * g[j]), m(y, m(z, x))),
        alg.scale(_sign(g[j] * g[k]), m(z, m(x, y))),
    )


def is_super_lie(alg):
    """Lie superalgebra axioms for the declared grading.

    Homogeneity of the product is enforced when the algebra is built, so
    only graded antisymmetry, ``[x,x] = 0`` for even ``x`` and the signed
    Jacobi identity remain.
    """
    if alg.grading is None:
        raise AlgebraValidationError("is_super_lie needs a Z2 grading")
    n, t, g = alg.dim, alg.table, alg.grading
    for i in range(n):
        if g[i] == 0 and any(t[i][i]):
            return CheckReport.fail("super_lie", ("alternating", i), "[x, x] != 0 for even x")
    for i in range(n):
        for j in range(i, n):
            s = _sign(g[i] * g[j])
            if any(a + s * b for a, b in zip(t[i][j], t[j][i])):
                return CheckReport.fail(
                    "super_lie", ("antisymmetry", i, j), "[x,y] != -(-1)^{|x||y|}[y,x]"
                )
    for i, j, k in _triples(n):
        if any(super_jacobi_sum(alg, i, j, k)):
            return CheckReport.fail("super_lie", ("jacobi", i, j, k), "signed Jacobi sum does not vanish")
    return CheckReport.ok("super_lie")


def unified_defect(alg, a, b, c):
    """``(ab)c + (bc)a + (ca)b - a(bc) - b(ca) - c(ab)``."""
    m = alg.mul
    lhs = alg.add(m(m(a, b), c), m(m(b, c), a), m(m(c, a), b))
    rhs = alg.add(m(a, m(b, c)), m(b, m(c, a)), m(c, m(a, b)))
    return alg.sub(lhs, rhs)


def satisfies_unified_identity(alg):
    """Six-term identity shared by associative, Lie and commutative products."""
    for i, j, k in _triples(alg.dim):
        if any(unified_defect(alg, _e(alg, i), _e(alg, j), _e(alg, k))):
            return CheckReport.fail("unified_identity", (i, j, k))
    return CheckReport.ok("unified_identity")


def _require_jordan_field(alg):
    if alg.field.characteristic in (2, 3):
        raise UnsupportedFieldError(
            f"the Jordan grid needs four distinct scalars and char != 2, 3; got {alg.field}"
        )


def jordan_defect(alg, x, y):
    """``(x^2 y) x - x^2 (y x)``."""
    m = alg.mul
    x2 = m(x, x)
    return alg.sub(m(m(x2, y), x), m(x2, m(y, x)))


def satisfies_jordan_identity(alg):
    _require_jordan_field(alg)
    F = alg.field
    grid = [F(v) for v in _JORDAN_GRID]
    ys = alg.basis_elements()
    for point in product(range(len(grid)), repeat=alg.dim):
        x = tuple(grid[p] for p in point)
        for j, y in enumerate(ys):
            if any(jordan_defect(alg, x, y)):
                return CheckReport.fail(
                    "jordan_identity", (tuple(_JORDAN_GRID[p] for p in point), j),
                    "(x^2 y) x != x^2 (y x) at (x, e_j)",
                )
    return CheckReport.ok("jordan_identity")


def is_jordan(alg):
    comm = is_commutative(alg)
    if not comm:
        return CheckReport.fail("jordan", ("commutative",) + comm.witness, "not commutative")
    jid = satisfies_jordan_identity(alg)
    if not jid:
        return CheckReport.fail("jordan", ("jordan_identity",) + jid.witness, jid.detail)
    return CheckReport.ok("jordan")


# --- two-dimensional family with a^2 = b, b^2 = a ----------------------------

Theorem31Row = namedtuple("Theorem31Row", "alpha beta jordan associative")


def theorem31_algebra(alpha, beta, field=QQ):
    """Commutative algebra on {a, b} with a^2 = b, b^2 = a, ab = ba = alpha*a + beta*b."""
    alpha, beta = field(alpha), field(beta)
    z, o = field.zero, field.one
    ab = (alpha, beta)
    table = [[(z, o), ab], [ab, (o, z)]]
    return FiniteAlgebra(table, field, ("a", "b"), name=f"thm31({alpha},{beta})")


def theorem31_scan(field, samples=None):
    """Jordan and associativity verdicts for each ``(alpha, beta)``.

    Over a prime field with no samples given, all ``p^2`` pairs are scanned
    in lexicographic order.
    """
    if samples is None:
        samples = [(a, b) for a in field.elements() for b in field.elements()]
    rows = []
    for alpha, beta in samples:
        alg = theorem31_algebra(alpha, beta, field)
        if field.characteristic in (2, 3):
            _require_jordan_field(alg)
        rows.append(Theorem31Row(field(alpha), field(beta), is_jordan(alg), is_associative(alg)))
    return rows
