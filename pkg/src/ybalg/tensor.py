"""Symbolic products on the truncated tensor algebra of an algebra A.

Elements of A are modelled by the free unital associative algebra on a
generator alphabet: linear combinations of words, the empty word being 1.
Elements of ``T^m(A) = A^(x)m`` are linear combinations of m-tuples of
words.  The operator ``R(u (x) v) = uv (x) 1 + 1 (x) uv - u (x) v`` acts on
neighbouring factors, and the products

    mu(a (x) b)          = R(a (x) b)
    mu((a (x) a') (x) b) = R12 R23 (a (x) a' (x) b)
    mu(a (x) (b (x) b')) = R23 R12 (a (x) b (x) b')

are expanded symbolically.  Relations of a concrete algebra are applied only
in :func:`evaluate_in_algebra`.

Terms keep the order in which the expansion first produces them, with
cancelled terms removed; this order is deterministic and is the order used
for printing.  Equality ignores term order.
"""

import re
from fractions import Fraction

from .errors import DimensionError, TruncationError
from .fields import QQ
from .linalg import tensor_vectors

TENSOR_SIGN = "⊗"
DEFAULT_MAX_DEGREE = 8


class FreeAlgebra:
    """Free unital associative algebra on ``alphabet`` with words of length
    at most ``max_degree``."""

    def __init__(self, alphabet, field=QQ, max_degree=DEFAULT_MAX_DEGREE):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet) or "1" in self.alphabet:
            raise ValueError("generators must be distinct and may not be named '1'")
        self.field = field
        self.max_degree = max_degree
        pattern = "|".join(re.escape(g) for g in sorted(self.alphabet, key=len, reverse=True))
        self._token = re.compile(pattern)

    def one(self):
        return FreeElement(self, {(): self.field.one})

    def zero(self):
        return FreeElement(self, {})

    def gen(self, name):
        if name not in self.alphabet:
            raise KeyError(f"unknown generator {name!r}")
        return FreeElement(self, {(name,): self.field.one})

    def gens(self):
        return [self.gen(g) for g in self.alphabet]

    def check_word(self, w):
        if len(w) > self.max_degree:
            raise TruncationError(f"word of length {len(w)} exceeds the degree bound {self.max_degree}")
        return w

    def parse_word(self, text):
        """``"aa'b"`` -> ``("a", "a'", "b")``; ``"1"`` is the empty word."""
        text = text.strip()
        if text == "1":
            return ()
        out, pos = [], 0
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None:
                raise ValueError(f"cannot split {text!r} into generators {self.alphabet}")
            out.append(m.group())
            pos = m.end()
        return self.check_word(tuple(out))

    def word_str(self, w):
        return "".join(w) if w else "1"

    def sort_key(self, w):
        return (len(w), [self.alphabet.index(g) for g in w])


class _Combination:
    """Shared bookkeeping for linear combinations with insertion-ordered keys."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}

    def _new(self, terms):
        return type(self)(self.algebra, terms)

    def _accumulate(self, pairs):
        acc = {}
        for k, c in pairs:
            acc[k] = acc.get(k, self.algebra.field.zero) + c
        return self._new(acc)

    def __add__(self, other):
        self._check(other)
        return self._accumulate(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.algebra.field(c)
        return self._new({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if type(other) is not type(self) or other.algebra is not self.algebra:
            raise TypeError("operands belong to different free algebras")

    def _format(self, key_str, keys):
        if not keys:
            return "0"
        parts = []
        for k in keys:
            c = self.terms[k]
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            body = key_str(k) if mag == 1 else f"{mag}*{key_str(k)}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


class FreeElement(_Combination):
    """Linear combination of words in a :class:`FreeAlgebra`."""

    __slots__ = ()

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return self.scale(other)
        self._check(other)
        fa = self.algebra
        return self._accumulate(
            (fa.check_word(u + v), a * b) for u, a in self.terms.items() for v, b in other.terms.items()
        )

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def __str__(self):
        return self._format(self.algebra.word_str, list(self.terms))

    def __repr__(self):
        return f"FreeElement({self})"


class TensorElement(_Combination):
    """Linear combination of m-tuples of words, an element of ``A^(x)m``."""

    __slots__ = ("m",)

    def __init__(self, algebra, terms, m=None):
        super().__init__(algebra, terms)
        lengths = {len(k) for k in self.terms}
        if m is None:
            if len(lengths) != 1:
                raise DimensionError("cannot infer the tensor length of an empty or mixed combination")
            m = lengths.pop()
        elif lengths - {m}:
            raise DimensionError(f"terms of lengths {sorted(lengths)} in a T^{m} element")
        if m < 1:
            raise DimensionError("tensor length must be at least 1")
        for k in self.terms:
            for w in k:
                algebra.check_word(w)
        self.m = m

    def _new(self, terms):
        return TensorElement(self.algebra, terms, self.m)

    def _check(self, other):
        super()._check(other)
        if other.m != self.m:
            raise DimensionError(f"cannot add T^{self.m} and T^{other.m} elements")

    def canonical_terms(self):
        """Terms sorted by a fixed key (per-factor word length, then generator index)."""
        key = self.algebra.sort_key
        return sorted(self.terms.items(), key=lambda kv: [key(w) for w in kv[0]])

    def _key_str(self, k):
        return f" {TENSOR_SIGN} ".join(self.algebra.word_str(w) for w in k)

    def format(self, canonical=False):
        keys = [k for k, _ in self.canonical_terms()] if canonical else list(self.terms)
        return self._format(self._key_str, keys)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"TensorElement(T^{self.m}: {self})"


def tensor(*factors):
    """Pure tensor ``f1 (x) f2 (x) ...`` of FreeElements, expanded multilinearly."""
    fa = factors[0].algebra
    terms = {(): fa.field.one}
    for f in factors:
        if f.algebra is not fa:
            raise TypeError("factors belong to different free algebras")
        nxt = {}
        for k, c in terms.items():
            for w, d in f.terms.items():
                key = k + (w,)
                nxt[key] = nxt.get(key, fa.field.zero) + c * d
        terms = nxt
    return TensorElement(fa, terms, len(factors))


def _r_pairs(pairs, pos, fa):
    for k, c in pairs:
        u, v = k[pos], k[pos + 1]
        uv = fa.check_word(u + v)
        head, tail = k[:pos], k[pos + 2:]
        yield head + (uv, ()) + tail, c
        yield head + ((), uv) + tail, c
        yield k, -c


def apply_r(t, pos):
    """Apply ``R`` to factors ``pos`` and ``pos + 1`` (zero-based) of every term."""
    if not 0 <= pos < t.m - 1:
        raise DimensionError(f"no factor pair at position {pos} in T^{t.m}")
    return t._accumulate(_r_pairs(t.terms.items(), pos, t.algebra))


def raw_expansion(t, positions):
    """Terms produced by applying ``R`` at each of ``positions`` in turn,
    without collecting or cancelling anything."""
    pairs = list(t.terms.items())
    for pos in positions:
        pairs = list(_r_pairs(pairs, pos, t.algebra))
    return pairs


def _as_t1(x):
    if not isinstance(x, FreeElement):
        raise DimensionError("expected an element of T^1(A)")
    return x


def _join(x, y):
    """``x (x) y`` for tensor elements given as TensorElement or FreeElement."""
    if isinstance(x, FreeElement):
        x = tensor(x)
    if isinstance(y, FreeElement):
        y = tensor(y)
    if x.algebra is not y.algebra:
        raise TypeError("operands belong to different free algebras")
    fa = x.algebra
    terms = {}
    for k, c in x.terms.items():
        for l, d in y.terms.items():
            terms[k + l] = terms.get(k + l, fa.field.zero) + c * d
    return TensorElement(fa, terms, x.m + y.m)


def mu_11(x, y):
    """Product of two elements of ``T^1 = A``, landing in ``T^2``."""
    return apply_r(_join(_as_t1(x), _as_t1(y)), 0)


def mu_21(x, y):
    """Product of ``x`` in ``T^2`` with ``y`` in ``T^1``: ``R12 R23 (x (x) y)``."""
    if not isinstance(x, TensorElement) or x.m != 2:
        raise DimensionError("mu_21 expects an element of T^2 on the left")
    return apply_r(apply_r(_join(x, _as_t1(y)), 1), 0)


def mu_12(x, y):
    """Product of ``x`` in ``T^1`` with ``y`` in ``T^2``: ``R23 R12 (x (x) y)``."""
    if not isinstance(y, TensorElement) or y.m != 2:
        raise DimensionError("mu_12 expects an element of T^2 on the right")
    return apply_r(apply_r(_join(_as_t1(x), y), 0), 1)


_COEFF_RE = re.compile(r"^(\d+(?:/\d+)?)\s*\*?\s*(.*)$")


def parse_tensor(text, algebra):
    """Parse notation such as ``"aa'b ⊗ 1 ⊗ 1 - a ⊗ a'b ⊗ 1"``.

    ``(x)`` is accepted for the tensor sign; a term may carry a coefficient
    like ``2*`` or ``1/2 ``.
    """
    text = text.replace("(x)", TENSOR_SIGN).strip()
    if not text:
        raise ValueError("empty expression")
    chunks = re.split(r"\s*([+-])\s*", text)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    pairs = []
    m = None
    for sign, body in zip(chunks[0::2], chunks[1::2]):
        coeff = Fraction(1)
        cm = _COEFF_RE.match(body)
        if cm and cm.group(2) and not cm.group(2).startswith(TENSOR_SIGN):
            coeff = Fraction(cm.group(1))
            body = cm.group(2)
        key = tuple(algebra.parse_word(w) for w in body.split(TENSOR_SIGN))
        if m is None:
            m = len(key)
        pairs.append((key, algebra.field(coeff if sign == "+" else -coeff)))
    return TensorElement(algebra, {}, m)._accumulate(pairs)


def evaluate_word(word, alg, assignment):
    """Left-to-right product of the assigned elements; the empty word is the unit."""
    if alg.unit is None:
        raise ValueError("evaluation needs an algebra with a unit")
    out = alg.unit
    for g in word:
        if g not in assignment:
            raise ValueError(f"generator {g!r} is not assigned")
        out = alg.mul(out, alg.element(assignment[g]))
    return out


def evaluate_in_algebra(t, alg, assignment):
    """Coordinates of ``t`` in ``A^(x)m`` after substituting generators."""
    if isinstance(t, FreeElement):
        t = tensor(t)
    F = alg.field
    acc = [F.zero] * alg.dim ** t.m
    for k, c in t.terms.items():
        vec = tensor_vectors(*(evaluate_word(w, alg, assignment) for w in k))
        coeff = F(c)
        acc = [a + coeff * v for a, v in zip(acc, vec)]
    return tuple(acc)


def associativity_probe(x, y, z):
    """``mu(mu(x (x) y) (x) z)`` and ``mu(x (x) mu(y (x) z))`` for x, y, z in T^1."""
    return mu_21(mu_11(x, y), z), mu_12(x, mu_11(y, z))
