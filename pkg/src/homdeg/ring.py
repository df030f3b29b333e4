"""Multivariate polynomial rings over an exact field, grevlex order."""

from .errors import InhomogeneousError, RingMismatchError
from .fields import QQ
from .kernel import mono_deg, mono_key, mono_mul


class PolyRing:
    """k[x_1, ..., x_n] with the degree-reverse-lexicographic order.

    degree_cap bounds every Groebner computation over this ring; exceeding
    it raises DegreeCapError rather than hanging.
    """

    def __init__(self, names, field=QQ, degree_cap=64):
        self.names = tuple(names)
        self.n = len(self.names)
        self.field = field
        self.degree_cap = degree_cap
        self.zero_mono = (0,) * self.n

    def var(self, i):
        m = [0] * self.n
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field.one})

    def gens(self):
        return tuple(self.var(i) for i in range(self.n))

    def const(self, n):
        if n == 0:
            return Polynomial(self, {})
        return Polynomial(self, {self.zero_mono: self.field.from_int(n)})

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.const(1)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.names)}]"


class Polynomial:
    """Immutable sparse polynomial: dict from exponent tuple to coefficient.

    Zero coefficients are never stored; the term map is canonical, so dict
    equality is polynomial equality.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError("polynomials over different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        if not self.is_homogeneous():
            raise InhomogeneousError(str(self))
        return self.degree()

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=mono_key)

    def lead_coefficient(self):
        return self.terms[self.lead_monomial()]

    def monic(self):
        if not self.terms:
            return self
        lc = self.lead_coefficient()
        return Polynomial(self.ring, {m: c / lc for m, c in self.terms.items()})

    def substitute(self, sub):
        """Apply the map x_i -> sub[i] (a Polynomial, or None to keep x_i)."""
        ring = self.ring
        out = ring.zero
        pow_cache = {}
        for m, c in self.terms.items():
            part = Polynomial(ring, {ring.zero_mono: c})
            plain = [0] * ring.n
            for i, e in enumerate(m):
                if not e:
                    continue
                if sub[i] is None:
                    plain[i] = e
                else:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = sub[i] ** e
                    part = part * pow_cache[key]
            if any(plain):
                part = part * Polynomial(ring, {tuple(plain): ring.field.one})
            out = out + part
        return out

    def coefficient_of_degree_one(self):
        """Vector of coefficients of the linear monomials; None entries mean 0.

        Only meaningful for homogeneous degree-1 polynomials."""
        vec = [None] * self.ring.n
        for m, c in self.terms.items():
            if mono_deg(m) != 1:
                raise ValueError("not a linear form")
            vec[m.index(1)] = c
        return vec

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=mono_key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(self.ring.names, m)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif str(c) == "1":
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)
