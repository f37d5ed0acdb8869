"""Yang-Baxter operators built from algebras, and exact braid/QYBE checks.

Operators are dense ``d^2 x d^2`` matrices on ``V (x) V`` in the column
convention of :mod:`ybalg.linalg`.
"""

from collections import namedtuple
from dataclasses import dataclass
from itertools import product

from .algebra import CheckReport, center, is_central, is_even
from .errors import AlgebraValidationError, BudgetError, DimensionError
from .identities import is_lie, is_super_lie
from .linalg import Matrix, compose, is_invertible, lift12, lift13, lift23, mat_mul, tensor_vectors, twist

DEFAULT_MAX_OPERATOR = 256


def operator_dim(r):
    """``d`` such that ``r`` acts on ``V (x) V`` with ``dim V = d``."""
    n = r.rows
    d = int(round(n ** 0.5))
    if r.cols != n or d * d != n:
        raise DimensionError(f"a {r.shape} matrix is not an operator on V(x)V")
    return d


def _first_difference(lhs, rhs, d):
    for j in range(lhs.cols):
        if lhs.column(j) != rhs.column(j):
            return (j // (d * d), (j // d) % d, j % d)
    return None


def check_braid(r, d=None):
    """``R12 R23 R12 == R23 R12 R23``; the witness is the first basis tensor
    ``(i, j, k)`` whose images differ."""
    d = operator_dim(r) if d is None else d
    a, b = lift12(r, d), lift23(r, d)
    lhs, rhs = compose(a, b, a), compose(b, a, b)
    w = _first_difference(lhs, rhs, d)
    return CheckReport.ok("braid") if w is None else CheckReport.fail("braid", w)


def check_qybe(r, d=None):
    """``R12 R13 R23 == R23 R13 R12``."""
    d = operator_dim(r) if d is None else d
    a, b, c = lift12(r, d), lift13(r, d), lift23(r, d)
    lhs, rhs = compose(a, b, c), compose(c, b, a)
    w = _first_difference(lhs, rhs, d)
    return CheckReport.ok("qybe") if w is None else CheckReport.fail("qybe", w)


@dataclass(frozen=True)
class YBVerdict:
    braid: CheckReport
    qybe: CheckReport
    invertible: bool

    @property
    def is_yb_operator(self):
        return bool(self.braid) and self.invertible

    @property
    def witness(self):
        return self.braid.witness if not self.braid else self.qybe.witness


def verdict(r, d=None):
    d = operator_dim(r) if d is None else d
    return YBVerdict(check_braid(r, d), check_qybe(r, d), is_invertible(r))


# --- R^A_{alpha,beta,gamma}(a (x) b) = alpha ab (x) 1 + beta 1 (x) ab - gamma a (x) b ----

def build_assoc_operator(alg, alpha, beta, gamma):
    if alg.unit is None:
        raise AlgebraValidationError("the associative family needs an algebra with a declared unit")
    F = alg.field
    alpha, beta, gamma = F(alpha), F(beta), F(gamma)
    one = alg.unit
    cols = []
    for i, j in product(range(alg.dim), repeat=2):
        ei, ej = alg.basis(i), alg.basis(j)
        ab = alg.mul(ei, ej)
        t1 = tensor_vectors(ab, one)
        t2 = tensor_vectors(one, ab)
        t3 = tensor_vectors(ei, ej)
        cols.append(tuple(alpha * x + beta * y - gamma * z for x, y, z in zip(t1, t2, t3)))
    return Matrix.from_columns(cols, F)


def classify_params(alpha, beta, gamma):
    """Cases under which the associative family is a Yang-Baxter operator.

    case_i:   alpha == gamma != 0 and beta != 0
    case_ii:  beta == gamma != 0 and alpha != 0
    case_iii: alpha == beta == 0 and gamma != 0
    """
    out = set()
    if alpha == gamma and gamma and beta:
        out.add("case_i")
    if beta == gamma and gamma and alpha:
        out.add("case_ii")
    if not alpha and not beta and gamma:
        out.add("case_iii")
    return frozenset(out)


ScanRow = namedtuple("ScanRow", "alpha beta gamma cases predicted braid invertible")


def _scan_row(alg, triple):
    alpha, beta, gamma = triple
    cases = classify_params(alpha, beta, gamma)
    r = build_assoc_operator(alg, alpha, beta, gamma)
    return ScanRow(alpha, beta, gamma, cases, bool(cases), bool(check_braid(r, alg.dim)), is_invertible(r))


def scan_triples(field):
    els = field.elements()
    return [(a, b, c) for a in els for b in els for c in els]


def scan_assoc_family(alg, max_operator=DEFAULT_MAX_OPERATOR, triples=None):
    """Every ``(alpha, beta, gamma)`` over the algebra's prime field, in
    lexicographic order, with predicted and measured outcomes."""
    if alg.dim ** 2 > max_operator:
        raise BudgetError("operator size", alg.dim ** 2, max_operator)
    if alg.unit is None:
        raise AlgebraValidationError("the associative family needs an algebra with a declared unit")
    if triples is None:
        triples = scan_triples(alg.field)
    return [_scan_row(alg, t) for t in triples]


def scan_summary(rows):
    """Counts of predicted-but-failing (exceptions) and unpredicted passers (extras)."""
    passes = [r.braid and r.invertible for r in rows]
    exceptions = [r for r, ok in zip(rows, passes) if r.predicted and not ok]
    extras = [r for r, ok in zip(rows, passes) if ok and not r.predicted]
    return exceptions, extras


# --- x (x) y -> alpha [x,y] (x) z + (-1)^{|x||y|} y (x) x ------------------------------

def build_superlie_operator(alg, z, alpha):
    F = alg.field
    z = alg.element(z)
    alpha = F(alpha)
    axioms = is_super_lie(alg) if alg.grading is not None else is_lie(alg)
    if not axioms:
        raise AlgebraValidationError(f"algebra fails the (super) Lie axioms: {axioms.witness}")
    if not is_central(alg, z):
        raise AlgebraValidationError("z is not in the centre")
    if not is_even(alg, z):
        raise AlgebraValidationError("z must be homogeneous of even degree")
    g = alg.grading or (0,) * alg.dim
    cols = []
    for i, j in product(range(alg.dim), repeat=2):
        ei, ej = alg.basis(i), alg.basis(j)
        br = tensor_vectors(alg.mul(ei, ej), z)
        sw = tensor_vectors(ej, ei)
        s = -1 if g[i] * g[j] else 1
        cols.append(tuple(alpha * x + s * y for x, y in zip(br, sw)))
    return Matrix.from_columns(cols, F)


def admissible_z(alg):
    """Basis of the even part of the centre."""
    return [z for z in center(alg) if is_even(alg, z)]


# --- braid <-> QYBE ---------------------------------------------------------------------

TransferVerdict = namedtuple("TransferVerdict", "braid qybe_r_tau qybe_tau_r")


def transfer_check(r, d=None):
    """``(braid(R), qybe(R tau), qybe(tau R))``; the three always agree."""
    d = operator_dim(r) if d is None else d
    t = twist(d, r.field)
    return TransferVerdict(
        bool(check_braid(r, d)),
        bool(check_qybe(mat_mul(r, t), d)),
        bool(check_qybe(mat_mul(t, r), d)),
    )


def transfer_agrees(v):
    return v.braid == v.qybe_r_tau == v.qybe_tau_r
