"""Builders for the bundled example algebras.

The JSON files under ``ybalg/data`` are generated from these builders with
``python -m ybalg.corpus`` and are what the CLI loads by name.
"""

from collections import namedtuple
from fractions import Fraction
from itertools import product
from pathlib import Path

from .algebra import FiniteAlgebra
from .fields import GF, QQ
from .identities import theorem31_algebra

DATA_DIR = Path(__file__).parent / "data"


def _zeros(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def one_dim(field=QQ, name="field_q"):
    return FiniteAlgebra([[[1]]], field, ("1",), unit=(1,), name=name)


def truncated_poly(c, field=QQ, name=None):
    """k[X]/(X^2 - c) on the basis (1, x)."""
    t = [[[1, 0], [0, 1]], [[0, 1], [c, 0]]]
    return FiniteAlgebra(t, field, ("1", "x"), unit=(1, 0), name=name)


def matrix_algebra(n=2, field=QQ, name=None):
    """M_n(k) on matrix units E_ij, ordered row-major; E_ij E_kl = delta_jk E_il."""
    d = n * n
    t = _zeros(d)
    for i, j, k, l in product(range(n), repeat=4):
        if j == k:
            t[i * n + j][k * n + l][i * n + l] = 1
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return FiniteAlgebra(t, field, labels, unit=unit, name=name)


def _bracket_table(n, brackets):
    """Antisymmetric table from ``{(i, j): {k: coeff}}`` given for i < j or any order."""
    t = _zeros(n)
    for (i, j), out in brackets.items():
        for k, c in out.items():
            t[i][j][k] += c
            t[j][i][k] -= c
    return t


def sl2(field=QQ):
    # basis e, f, h
    t = _bracket_table(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}})
    return FiniteAlgebra(t, field, ("e", "f", "h"), name="sl2")


def heisenberg(field=QQ):
    t = _bracket_table(3, {(0, 1): {2: 1}})
    return FiniteAlgebra(t, field, ("x", "y", "z"), name="h3")


def abelian(n, field=QQ):
    return FiniteAlgebra(_zeros(n), field, [f"e{i + 1}" for i in range(n)], name=f"abelian{n}")


def super_11(field=QQ, grading=(0, 1)):
    """u even, v odd, [v, v] = u, u central."""
    t = _zeros(2)
    t[1][1][0] = 1
    return FiniteAlgebra(t, field, ("u", "v"), grading=grading, name="super11")


def cross_product(field=QQ):
    t = _zeros(3)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        t[i][j][k] = 1
        t[j][i][k] = -1
    return FiniteAlgebra(t, field, ("e1", "e2", "e3"), name="cross3")


def symmetric_jordan(field=QQ):
    """Symmetric 2x2 matrices under x o y = (xy + yx)/2.

    Basis S1 = E11, S2 = E22, S3 = E12 + E21.
    """
    mats = [((1, 0), (0, 0)), ((0, 0), (0, 1)), ((0, 1), (1, 0))]

    def mm(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))

    def coords(m):
        # symmetric m = m00*S1 + m11*S2 + m01*S3
        return [m[0][0], m[1][1], m[0][1]]

    t = _zeros(3)
    half = Fraction(1, 2)
    for i, j in product(range(3), repeat=2):
        ab, ba = mm(mats[i], mats[j]), mm(mats[j], mats[i])
        s = tuple(tuple(half * (ab[r][c] + ba[r][c]) for c in range(2)) for r in range(2))
        t[i][j] = coords(s)
    return FiniteAlgebra(t, field, ("S1", "S2", "S3"), unit=(1, 1, 0), name="sym2")


def eq4_counterexample(field=QQ):
    """e1 e1 = e2, e1 e2 = e1, every other product zero."""
    t = _zeros(2)
    t[0][0][1] = 1
    t[0][1][0] = 1
    return FiniteAlgebra(t, field, ("e1", "e2"), name="eq4_counter")


def _named(alg, name):
    alg.name = name
    return alg


BUILDERS = {
    "field_q": lambda: one_dim(QQ, "field_q"),
    "field_gf5": lambda: one_dim(GF(5), "field_gf5"),
    "kx2": lambda: truncated_poly(0, name="kx2"),
    "kx2m1": lambda: truncated_poly(1, name="kx2m1"),
    "m2q": lambda: matrix_algebra(2, QQ, "m2q"),
    "m2gf5": lambda: matrix_algebra(2, GF(5), "m2gf5"),
    "sl2": sl2,
    "h3": heisenberg,
    "abelian1": lambda: abelian(1),
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "super11": super_11,
    "sym2": symmetric_jordan,
    "cross3": cross_product,
    "eq4_counter": eq4_counterexample,
    "thm31_0_0": lambda: _named(theorem31_algebra(0, 0), "thm31_0_0"),
    "thm31_m1_m1": lambda: _named(theorem31_algebra(-1, -1), "thm31_m1_m1"),
    "thm31_gf7_3_5": lambda: _named(theorem31_algebra(3, 5, GF(7)), "thm31_gf7_3_5"),
}


def names():
    return sorted(BUILDERS)


def build(name):
    return BUILDERS[name]()


def load(name):
    """Load a bundled algebra from its JSON file."""
    from .fileio import read_algebra
    return read_algebra(DATA_DIR / f"{name}.json")


def write_corpus(directory=DATA_DIR):
    from .fileio import algebra_to_text
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in names():
        (directory / f"{name}.json").write_text(algebra_to_text(build(name)), encoding="utf-8")


FamilyOperator = namedtuple("FamilyOperator", "label family algebra params d matrix")

ASSOC_SAMPLE_TRIPLES = ((1, 1, 1), (2, 3, 2), (3, 5, 5), (0, 0, 4), (1, 2, 3), (0, 1, 1), (2, 0, 2))
SUPERLIE_SAMPLE_ALPHAS = (1, 2, -1)


def family_operators():
    """Labelled operators from every bundled family instance.

    Associative family on each unital associative algebra over Q with a fixed set of
    parameter triples (both predicted and unpredicted), and the super-Lie
    family on each (super) Lie algebra with every admissible basis ``z``.
    """
    from .identities import is_associative, is_lie, is_super_lie
    from .yb import admissible_z, build_assoc_operator, build_superlie_operator

    out = []
    for name in names():
        alg = build(name)
        if alg.field != QQ:
            continue
        if alg.unit is not None and is_associative(alg):
            for t in ASSOC_SAMPLE_TRIPLES:
                label = "assoc:{}:({})".format(name, ",".join(map(str, t)))
                out.append(FamilyOperator(label, "assoc", name, t, alg.dim, build_assoc_operator(alg, *t)))
        lie = is_super_lie(alg) if alg.grading is not None else is_lie(alg)
        if lie:
            zs = admissible_z(alg) or [alg.zero()]
            for z in zs:
                for a in SUPERLIE_SAMPLE_ALPHAS:
                    label = f"superlie:{name}:z={alg.format(z)}:alpha={a}"
                    out.append(FamilyOperator(label, "superlie", name, (z, a), alg.dim,
                                              build_superlie_operator(alg, z, a)))
    return out


if __name__ == "__main__":
    write_corpus()
