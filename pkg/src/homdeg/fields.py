"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational arithmetic uses gmpy2.mpq when available and falls back to
fractions.Fraction.  Both behave identically under the arithmetic the
engine performs; everything stays exact.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is normally present
    _mpq = None


class FpElement:
    """An element of GF(p).  Immutable."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElement(self.v + other.v, self.p)

    def __sub__(self, other):
        return FpElement(self.v - other.v, self.p)

    def __mul__(self, other):
        return FpElement(self.v * other.v, self.p)

    def __truediv__(self, other):
        return FpElement(self.v * pow(other.v, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        return isinstance(other, FpElement) and self.v == other.v and self.p == other.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


class RationalField:
    """The field of rational numbers."""

    name = "QQ"
    char = 0

    def __init__(self):
        self._make = _mpq if _mpq is not None else Fraction
        self.zero = self._make(0)
        self.one = self._make(1)

    def from_int(self, n):
        return self._make(n)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p.  Offered as a fast surrogate for an infinite
    coefficient field; p should be large (>= 32003) when random linear
    recombinations matter."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.char = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def from_int(self, n):
        return FpElement(n, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()
