"""Command-line front end: ``ybalg algebra-check | ybe | scan | gate | tprod``.

Exit codes: 0 when every requested check holds, 1 when a check fails on
valid input, 2 on malformed input or a violated precondition.  ``--json``
prints the same report as a sorted, timestamp-free JSON document.
"""

import hashlib
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from pathlib import Path

import click

from . import corpus
from .algebra import CheckReport, find_unit
from .errors import AlgebraValidationError, BudgetError, DimensionError, TruncationError, UnsupportedFieldError
from .fields import GFElement, parse_field, parse_fraction
from .fileio import FileFormatError, matrix_to_json, read_algebra, read_matrix
from .gates import (
    COLUMN_CONVENTION, ROWS_AS_IMAGES, Eq3Params, build_eq3_matrix, cz_cnot_bridge,
    realize_eq3_from_algebra,
)
from .identities import (
    is_associative, is_commutative, is_jordan, is_lie, is_super_lie, satisfies_jordan_identity,
    satisfies_unified_identity,
)
from .linalg import is_invertible, lift12, lift23, tensor_vectors
from .tensor import FreeAlgebra, evaluate_in_algebra, mu_11, mu_12, mu_21, tensor
from .yb import (
    DEFAULT_MAX_OPERATOR, build_assoc_operator, build_superlie_operator, check_braid, check_qybe,
    operator_dim, scan_assoc_family, scan_summary, scan_triples, transfer_agrees, transfer_check,
)

DEFAULT_MAX_TRIPLES = 1331  # p = 11

INPUT_ERRORS = (FileFormatError, AlgebraValidationError, BudgetError, DimensionError,
                TruncationError, UnsupportedFieldError, ValueError, ZeroDivisionError)


class InputError(Exception):
    pass


def _plain(x):
    """JSON-friendly copy of witnesses and values."""
    if isinstance(x, bool) or x is None or isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, GFElement):
        return x.value
    if isinstance(x, (tuple, list, frozenset, set)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


class Report:
    def __init__(self, ctx):
        names, c = [], ctx
        while c.parent is not None:
            names.append(c.info_name)
            c = c.parent
        self.command = " ".join(reversed(names))
        self.params = {k: _plain(v) for k, v in sorted(ctx.params.items()) if v not in (None, False)}
        self._hash = hashlib.sha256(json.dumps([self.command, self.params], sort_keys=True).encode())
        self.lines = []
        self.checks = []
        self.data = {}
        self.json = ctx.find_root().params.get("json_out", False)

    def add_input(self, label, raw):
        self._hash.update(label.encode() + b"\0" + raw)

    def say(self, line=""):
        self.lines.append(line)

    def check(self, report, counts=True):
        """Record a CheckReport; only counted checks influence the exit code."""
        self.checks.append({"prop": report.prop, "holds": report.holds,
                            "witness": _plain(report.witness), "detail": report.detail,
                            "counts": counts})
        status = "holds" if report.holds else "FAILS"
        line = f"{report.prop}: {status}"
        if report.witness is not None:
            line += f"  witness={_plain(report.witness)}"
        if report.detail:
            line += f"  ({report.detail})"
        self.say(line)

    def exit_code(self):
        return 1 if any(c["counts"] and not c["holds"] for c in self.checks) else 0

    def finish(self, code=None):
        code = self.exit_code() if code is None else code
        digest = self._hash.hexdigest()
        if self.json:
            doc = {"command": self.command, "params": self.params, "input_sha256": digest,
                   "checks": self.checks, "exit": code}
            doc.update(self.data)
            click.echo(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False))
        else:
            click.echo(f"ybalg {self.command}")
            click.echo(f"input sha256: {digest}")
            for line in self.lines:
                click.echo(line)
            click.echo(f"exit: {code}")
        sys.exit(code)

    def abort(self, message):
        if self.json:
            doc = {"command": self.command, "params": self.params, "error": message, "exit": 2}
            click.echo(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False))
        else:
            click.echo(f"error: {message}", err=True)
        sys.exit(2)


def _run(ctx, body):
    rep = Report(ctx)
    try:
        code = body(rep)
    except InputError as exc:
        rep.abort(str(exc))
    except INPUT_ERRORS as exc:
        rep.abort(f"{type(exc).__name__}: {exc}")
    rep.finish(code)


# --- input resolution ------------------------------------------------------------

def _resolve(ref, suffix):
    p = Path(ref)
    if p.is_file():
        return p
    bundled = corpus.DATA_DIR / (ref if ref.endswith(suffix) else ref + suffix)
    if bundled.is_file():
        return bundled
    raise InputError(f"{ref!r} is neither a file nor a bundled name (known: {', '.join(corpus.names())})")


def load_algebra(rep, ref):
    path = _resolve(ref, ".json")
    rep.add_input("algebra", path.read_bytes())
    alg = read_algebra(path)
    if not alg.name:
        alg.name = path.stem
    return alg


def load_matrix(rep, ref):
    path = _resolve(ref, ".mat")
    rep.add_input("matrix", path.read_bytes())
    return read_matrix(path)


def _scalars(field, text):
    try:
        return [field(parse_fraction(s) if field.characteristic == 0 else s.strip())
                for s in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse {text!r} as a comma-separated scalar list: {exc}") from None


def _show_matrix(rep, m, banner):
    rep.say(f"[{banner}]")
    fmt = m.field.format
    cells = [[fmt(x) for x in row] for row in m.tolist()]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        rep.say("  " + " ".join(c.rjust(width) for c in row))


# --- commands --------------------------------------------------------------------

@click.group()
@click.option("--json", "json_out", is_flag=True, help="Machine-readable report.")
def main(json_out):
    """Exact Yang-Baxter operators from algebra data."""


@main.command("algebra-check")
@click.argument("file")
@click.pass_context
def algebra_check(ctx, file):
    """Property report for an algebra file or bundled algebra name."""
    def body(rep):
        alg = load_algebra(rep, file)
        rep.say(f"algebra: {alg.name} (dim {alg.dim} over {alg.field})")
        rep.check(is_associative(alg), counts=False)
        rep.check(is_commutative(alg), counts=False)
        unit = find_unit(alg)
        rep.data["unit"] = None if unit is None else alg.format(unit)
        rep.say(f"unit: {'none' if unit is None else alg.format(unit)}")
        rep.check(is_lie(alg), counts=False)
        if alg.grading is not None:
            rep.check(is_super_lie(alg), counts=False)
        rep.check(satisfies_unified_identity(alg), counts=False)
        if alg.field.characteristic in (2, 3):
            rep.say("jordan_identity: skipped (characteristic 2 or 3)")
            rep.data["skipped"] = ["jordan_identity", "jordan"]
        else:
            rep.check(satisfies_jordan_identity(alg), counts=False)
            rep.check(is_jordan(alg), counts=False)
        return 0
    _run(ctx, body)


def _operator(rep, matrix, family, algebra, alpha, beta, gamma, z, max_operator):
    if matrix:
        if family or algebra:
            raise InputError("--matrix cannot be combined with --family/--algebra")
        m = load_matrix(rep, matrix)
        d = operator_dim(m)
        rep.say(f"operator: matrix {matrix} (d={d}, over {m.field})")
    elif family:
        if not algebra:
            raise InputError("--family needs --algebra")
        alg = load_algebra(rep, algebra)
        if alg.dim ** 2 > max_operator:
            raise BudgetError("operator size", alg.dim ** 2, max_operator)
        F = alg.field
        a = _scalars(F, alpha or "1")[0]
        if family == "assoc":
            b, g = _scalars(F, beta or "1")[0], _scalars(F, gamma or "1")[0]
            m = build_assoc_operator(alg, a, b, g)
            rep.say(f"operator: assoc on {alg.name} (alpha={a}, beta={b}, gamma={g})")
        else:
            if z is None:
                raise InputError("--family superlie needs --z")
            zv = _scalars(F, z)
            if len(zv) != alg.dim:
                raise InputError(f"--z needs {alg.dim} coordinates, got {len(zv)}")
            try:
                m = build_superlie_operator(alg, zv, a)
            except AlgebraValidationError as exc:
                raise InputError(f"invalid z: {exc}") from None
            rep.say(f"operator: superlie on {alg.name} (z={alg.format(zv)}, alpha={a})")
        d = alg.dim
    else:
        raise InputError("give --matrix FILE or --family assoc|superlie --algebra NAME")
    return m, d


def _operator_options(f):
    opts = [
        click.option("--matrix", help="Matrix file (column convention) or bundled name."),
        click.option("--family", type=click.Choice(["assoc", "superlie"])),
        click.option("--algebra", help="Algebra file or bundled name."),
        click.option("--alpha"), click.option("--beta"), click.option("--gamma"),
        click.option("--z", help="Comma-separated coordinates of a central even element."),
        click.option("--max-operator", type=int, default=DEFAULT_MAX_OPERATOR, show_default=True),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return click.pass_context(f)


@main.group()
def ybe():
    """Braid / QYBE checks of a single operator."""


def _ybe(ctx, which, kw):
    def body(rep):
        m, d = _operator(rep, **kw)
        if which == "transfer":
            v = transfer_check(m, d)
            rep.data["transfer"] = v._asdict()
            rep.say(f"braid(R): {v.braid}")
            rep.say(f"qybe(R tau): {v.qybe_r_tau}")
            rep.say(f"qybe(tau R): {v.qybe_tau_r}")
            agree = transfer_agrees(v)
            rep.check(CheckReport.ok("transfer_agreement") if agree
                      else CheckReport.fail("transfer_agreement", tuple(v)))
        else:
            rep.check((check_braid if which == "braid" else check_qybe)(m, d))
        inv = is_invertible(m)
        rep.data["invertible"] = inv
        rep.say(f"invertible: {'yes' if inv else 'no'}")
        return None
    _run(ctx, body)


@ybe.command()
@_operator_options
def braid(ctx, **kw):
    """R12 R23 R12 = R23 R12 R23."""
    _ybe(ctx, "braid", kw)


@ybe.command()
@_operator_options
def qybe(ctx, **kw):
    """R12 R13 R23 = R23 R13 R12."""
    _ybe(ctx, "qybe", kw)


@ybe.command()
@_operator_options
def transfer(ctx, **kw):
    """Compare braid(R), qybe(R tau) and qybe(tau R)."""
    _ybe(ctx, "transfer", kw)


def _scan_chunk(args):
    alg, triples = args
    return scan_assoc_family(alg, max_operator=alg.dim ** 2, triples=triples)


@main.command()
@click.option("--algebra", required=True)
@click.option("--field", "field_name", help="gf:p; defaults to the algebra's own field.")
@click.option("--parallel", is_flag=True, help="Split the triples across worker processes.")
@click.option("--max-operator", type=int, default=DEFAULT_MAX_OPERATOR, show_default=True)
@click.option("--max-triples", type=int, default=DEFAULT_MAX_TRIPLES, show_default=True)
@click.pass_context
def scan(ctx, algebra, field_name, parallel, max_operator, max_triples):
    """Exhaustive (alpha, beta, gamma) scan of the associative family."""
    def body(rep):
        alg = load_algebra(rep, algebra)
        F = parse_field(field_name) if field_name else alg.field
        if F.characteristic == 0:
            raise InputError("scan needs a finite field; pass --field gf:p")
        if F.characteristic ** 3 > max_triples:
            raise BudgetError("triples", F.characteristic ** 3, max_triples)
        if alg.dim ** 2 > max_operator:
            raise BudgetError("operator size", alg.dim ** 2, max_operator)
        alg = alg.over(F)
        triples = scan_triples(F)
        if parallel:
            workers = min(os.cpu_count() or 1, 8)
            chunks = [triples[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_scan_chunk, [(alg, c) for c in chunks]))
            rows = sorted((r for part in parts for r in part),
                          key=lambda r: (r.alpha.value, r.beta.value, r.gamma.value))
        else:
            rows = scan_assoc_family(alg, max_operator, triples)
        exceptions, extras = scan_summary(rows)
        rep.say(f"algebra: {alg.name} over {F}")
        rep.say("alpha beta gamma  cases            predicted braid invertible")
        table = []
        for r in rows:
            cases = ",".join(sorted(c.replace("case_", "") for c in r.cases)) or "-"
            rep.say(f"{r.alpha.value:>5} {r.beta.value:>4} {r.gamma.value:>5}  {cases:<16} "
                    f"{'yes' if r.predicted else 'no':<9} {'yes' if r.braid else 'no':<5} "
                    f"{'yes' if r.invertible else 'no'}")
            table.append({"alpha": r.alpha.value, "beta": r.beta.value, "gamma": r.gamma.value,
                          "cases": sorted(r.cases), "predicted": r.predicted, "braid": r.braid,
                          "invertible": r.invertible})
        rep.data["rows"] = table
        rep.data["exceptions"] = [[r.alpha.value, r.beta.value, r.gamma.value] for r in exceptions]
        rep.data["extras"] = [[r.alpha.value, r.beta.value, r.gamma.value] for r in extras]
        rep.say(f"rows: {len(rows)}")
        rep.say(f"exceptions: {len(exceptions)}")
        rep.say(f"extras (unpredicted passers): {len(extras)}")
        return 1 if exceptions else 0
    _run(ctx, body)


@main.command()
@click.option("--eta", type=int, required=True)
@click.option("--q", "q_text", required=True)
@click.option("--realize", is_flag=True, help="Rebuild the matrix from k[X]/(X^2 - c).")
@click.option("--bridge", is_flag=True, help="Check (I(x)H) CZ (I(x)H) = 2 CNOT.")
@click.option("--columns", is_flag=True, help="Also print the column-convention matrix.")
@click.pass_context
def gate(ctx, eta, q_text, realize, bridge, columns):
    """Two-qubit matrix family in (eta, q)."""
    def body(rep):
        p = Eq3Params(eta, parse_fraction(q_text))
        m = build_eq3_matrix(p)
        _show_matrix(rep, m, ROWS_AS_IMAGES)
        rep.data["matrix"] = matrix_to_json(m)["rows"]
        rep.data["convention"] = ROWS_AS_IMAGES
        if columns:
            _show_matrix(rep, m.T, COLUMN_CONVENTION)
            rep.data["column_matrix"] = matrix_to_json(m.T)["rows"]
        rep.check(check_qybe(m, 2))
        if realize:
            _, real = realize_eq3_from_algebra(p)
            rep.say(f"realized as R^A_(q,1,q) o tau on {real.algebra}")
            rep.data["realization"] = {"algebra": real.algebra, "c": str(real.c)}
            rep.check(CheckReport.ok("realization", "display equals the algebra construction"))
        if bridge:
            if (p.eta, p.q) == (0, 1):
                rep.check(cz_cnot_bridge())
            else:
                rep.say("cz_cnot_bridge: inapplicable (needs eta=0, q=1)")
                rep.data["bridge"] = "inapplicable"
        return None
    _run(ctx, body)


CASES = {
    "11": (["a", "b"], lambda g: mu_11(g["a"], g["b"])),
    "21": (["a", "a'", "b"], lambda g: mu_21(tensor(g["a"], g["a'"]), g["b"])),
    "12": (["a", "b", "b'"], lambda g: mu_12(g["a"], tensor(g["b"], g["b'"]))),
}

_TERM = re.compile(r"\s*([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*)?\s*([^+\-\s]+)")


def _element(alg, text):
    """Parse ``x``, ``2*E11 - E22`` and similar into coordinates."""
    coords = list(alg.zero())
    pos, text = 0, text.strip()
    if not text:
        raise InputError("empty assignment value")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse element {text!r}")
        sign, coeff, label = m.groups()
        c = alg.field(parse_fraction(coeff) if coeff else 1)
        if sign == "-":
            c = -c
        if label in alg.labels:
            coords[alg.index(label)] += c
        elif label == "1" and alg.unit is not None:
            coords = [x + c * u for x, u in zip(coords, alg.unit)]
        else:
            raise InputError(f"unknown basis label {label!r} (basis: {', '.join(alg.labels)})")
        pos = m.end()
    return tuple(coords)


def _format_tensor_vector(alg, vec, m):
    parts = []
    for idx, c in zip(product(range(alg.dim), repeat=m), vec):
        if c:
            parts.append((alg.field.format(c), " ⊗ ".join(alg.labels[i] for i in idx)))
    if not parts:
        return "0"
    out = ""
    for s, word in parts:
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        term = word if mag == "1" else f"{mag}*{word}"
        out += (" - " if neg else " + ") + term if out else ("-" if neg else "") + term
    return out


@main.command()
@click.option("--case", "case", type=click.Choice(sorted(CASES)), required=True)
@click.option("--algebra")
@click.option("--assign", help="Generator values, e.g. a=x,a'=x,b=x.")
@click.pass_context
def tprod(ctx, case, algebra, assign):
    """Symbolic product on the tensor algebra, optionally evaluated."""
    def body(rep):
        alphabet, build = CASES[case]
        fa = FreeAlgebra(alphabet)
        t = build({g: fa.gen(g) for g in alphabet})
        rep.say(f"expansion: {t}")
        rep.data["expansion"] = str(t)
        rep.data["terms"] = len(t)
        if assign and not algebra:
            raise InputError("--assign needs --algebra")
        if not algebra:
            return 0
        alg = load_algebra(rep, algebra)
        if alg.unit is None:
            raise InputError(f"{alg.name} has no declared unit")
        values = {}
        for item in (assign or "").split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise InputError(f"assignment {item!r} is not of the form name=value")
            k, v = item.split("=", 1)
            values[k.strip()] = _element(alg, v)
        missing = [g for g in alphabet if g not in values]
        if missing:
            raise InputError(f"incomplete assignment: missing {', '.join(missing)}")
        got = evaluate_in_algebra(t, alg, values)
        r = build_assoc_operator(alg, 1, 1, 1)
        d = alg.dim
        if case == "11":
            want = r.apply(tensor_vectors(values["a"], values["b"]))
        elif case == "21":
            want = lift12(r, d).apply(lift23(r, d).apply(tensor_vectors(*(values[g] for g in alphabet))))
        else:
            want = lift23(r, d).apply(lift12(r, d).apply(tensor_vectors(*(values[g] for g in alphabet))))
        shown = _format_tensor_vector(alg, got, t.m)
        rep.say(f"evaluated in {alg.name}: {shown}")
        rep.data["evaluation"] = shown
        if got == want:
            rep.check(CheckReport.ok("lift_cross_check", "equals the lift-matrix product"))
        else:
            bad = next(i for i, (x, y) in enumerate(zip(got, want)) if x != y)
            rep.check(CheckReport.fail("lift_cross_check", bad))
        return None
    _run(ctx, body)


if __name__ == "__main__":
    main()
