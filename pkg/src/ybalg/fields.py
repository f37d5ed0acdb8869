"""Exact ground fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values, which are
always stored in lowest terms with a positive denominator.  Prime-field
scalars are :class:`GFElement` instances.  Python ints embed canonically in
every field and may be mixed freely; combining a ``Fraction`` with a
``GFElement`` or two ``GFElement`` values of different characteristic raises
:class:`~ybalg.errors.FieldMismatchError`.
"""

from fractions import Fraction
from functools import lru_cache
import re

from .errors import FieldMismatchError

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def parse_fraction(text):
    """Parse ``"3"``, ``"-1/2"`` and friends into a Fraction.

    Decimal points and exponents are rejected so that no float ever
    sneaks in through a data file.
    """
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact scalar: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


class GFElement:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine GF({self.p}) with GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine GF({self.p}) with a rational")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * GFElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        return GFElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.p})({self.value})"

    def __str__(self):
        return str(self.value)


class RationalField:
    """The field Q; scalars are Fractions."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return parse_fraction(x)
        if isinstance(x, GFElement):
            raise FieldMismatchError(f"cannot coerce a GF({x.p}) element into Q")
        raise TypeError(f"cannot make an exact rational from {type(x).__name__}")

    def contains(self, x):
        return isinstance(x, Fraction)

    def elements(self):
        raise ValueError("Q is infinite")

    def format(self, x):
        return str(x)

    def to_json(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"

    def __reduce__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """GF(p); build through :func:`GF` so equal fields are identical."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime p, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def __call__(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldMismatchError(f"cannot coerce a GF({x.p}) element into GF({self.p})")
            return x
        if isinstance(x, str):
            x = parse_fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return GFElement(x.numerator, self.p) / x.denominator
        if isinstance(x, int) and not isinstance(x, bool):
            return GFElement(x, self.p)
        raise TypeError(f"cannot make a GF({self.p}) element from {type(x).__name__}")

    def contains(self, x):
        return isinstance(x, GFElement) and x.p == self.p

    def elements(self):
        return [GFElement(v, self.p) for v in range(self.p)]

    def format(self, x):
        return str(x.value)

    def to_json(self):
        return {"gf": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__

    def __reduce__(self):
        return (GF, (self.p,))


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_from_json(obj):
    """Inverse of ``field.to_json()``: ``"Q"`` or ``{"gf": p}``."""
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"gf"} and isinstance(obj["gf"], int):
        return GF(obj["gf"])
    raise ValueError(f"unknown field descriptor {obj!r}")


def parse_field(text):
    """Parse a command-line field name: ``Q`` or ``gf:p``."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("gf:"):
        return GF(int(t[3:]))
    raise ValueError(f"unknown field {text!r}; use Q or gf:p")
