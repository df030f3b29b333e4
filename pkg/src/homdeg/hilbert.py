"""Hilbert series and Hilbert-Samuel functions, polynomials, and
multiplicities with respect to an ideal generated by homogeneous forms.

The Samuel function n -> l(M / Q^{n+1} M) is computed exactly; the Samuel
polynomial is recovered by solving for its coefficients in the binomial
basis and confirming the fit on a window of further samples, sliding past
the postulation number if needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .errors import EngineBugError, SampleCapError
from .groebner import GroebnerEngine
from .modules import Presentation, minimal_generators
from .monomial_ideals import count_standard_monomials
from .ring import Polynomial


@dataclass(frozen=True)
class HilbertCoefficients:
    """The Samuel polynomial of Q on M in binomial form:

        l(M / Q^(n+1) M) = sum_i (-1)^i e[i] C(n + s - i, s - i)  (n >= postulation)

    samples holds the raw length table that was actually computed.
    """

    s: int
    e: tuple
    postulation: int
    samples: tuple

    def __iter__(self):
        return iter(self.e)

    def __getitem__(self, i):
        return self.e[i]

    def __len__(self):
        return len(self.e)

    def value_at(self, n):
        return _eval_samuel(self.e, n, self.s)


_DEFAULT_SAMPLE_CAP = [50]


def set_default_sample_cap(cap):
    """Session-wide default for the Samuel sampling cap (CLI knob)."""
    if cap < 1:
        raise ValueError("sample cap must be positive")
    _DEFAULT_SAMPLE_CAP[0] = cap


def hilbert_series(pres):
    """(numerator, n) with series = numerator / (1-t)^n, twists included."""
    return pres.hilbert_series()


class SamuelFunction:
    """Incremental evaluator of n -> l(M / Q^{n+1} M).

    Q is given by homogeneous generators in the polynomial cover.  The
    Groebner basis of the module relations is computed once; each sample
    clones that engine state, feeds in the generators of one power of Q,
    and reads the length off as a standard-monomial count.  When all
    generators are linear, an initial change of coordinates turns Q into a
    subset of the variables, so the powers become plain monomial lists.
    """

    def __init__(self, pres, q_gens, sample_cap=None):
        q_gens = [g for g in q_gens if g]
        if not q_gens:
            raise ValueError("Samuel function needs a nonzero ideal")
        self.sample_cap = _DEFAULT_SAMPLE_CAP[0] if sample_cap is None else sample_cap
        self._values = []
        linear = all(g.degree() == 1 for g in q_gens)
        if linear:
            pres, q_gens = _linearize(pres, q_gens)
            self._pivots = [g.lead_monomial().index(1) for g in q_gens]
        else:
            self._pivots = None
        self.pres = pres
        self.q_gens = q_gens
        self._power = list(q_gens)  # generators of Q^(k) for current k
        self._power_k = 1
        self._base = GroebnerEngine(pres.ambient)
        for r in pres.relation_gens():
            self._base.add(r)
        self._base.compute()

    def _power_gens(self, k):
        """Generators of Q^k: plain monomials after the linear change of
        coordinates, otherwise incrementally built and pruned products."""
        ring = self.pres.ring
        if self._pivots is not None:
            out = []
            for picks in combinations_with_replacement(self._pivots, k):
                mono = [0] * ring.n
                for i in picks:
                    mono[i] += 1
                out.append(Polynomial(ring, {tuple(mono): ring.field.one}))
            return out
        while self._power_k < k:
            nxt = []
            seen = set()
            for p in self._power:
                for g in self.q_gens:
                    q = p * g
                    if q and q not in seen:
                        seen.add(q)
                        nxt.append(q)
            self._power = _prune_ideal_gens(nxt)
            self._power_k += 1
        return self._power

    def _sample(self, k):
        """l(M / Q^{k+1} M) via an incremental Groebner run."""
        eng = self._base.clone()
        ambient = self.pres.ambient
        for g in self._power_gens(k + 1):
            for i in range(ambient.rank):
                eng.add(ambient.inject(g, i))
        eng.compute()
        per = [[] for _ in range(ambient.rank)]
        for c, m in eng.leads:
            per[c].append(m)
        total = 0
        for monos in per:
            cnt = count_standard_monomials(monos)
            if cnt is None:
                raise EngineBugError(
                    "Samuel quotient has infinite length; the ideal is not "
                    "an ideal of definition for the module"
                )
            total += cnt
        return total

    def __call__(self, n):
        if n >= self.sample_cap:
            raise SampleCapError(self.sample_cap)
        while len(self._values) <= n:
            self._values.append(self._sample(len(self._values)))
        return self._values[n]


def _prune_ideal_gens(gens):
    """Drop generators that are monomial multiples of earlier ones and
    minimalize the rest against the ideal they span."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    module = None
    from .freemod import FreeModule

    ring = gens[0].ring
    module = FreeModule(ring, 1)
    els = [module.inject(g) for g in gens]
    kept = minimal_generators(els)
    return [e.component(0) for e in kept]


def _linearize(pres, q_gens):
    """Change coordinates so that every generator of Q becomes a variable.

    Returns (isomorphic presentation, new generators).  Requires all
    generators linear; redundant generators are dropped by row reduction.
    """
    ring = pres.ring
    n = ring.n
    zero = ring.field.zero
    rows = []
    for g in q_gens:
        rows.append(
            [c if c is not None else zero for c in g.coefficient_of_degree_one()]
        )
    # exact Gaussian elimination to reduced row echelon form
    pivots = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    rows = rows[:r]
    # substitution x_p -> x_p - (non-pivot tail of its row)
    sub = [None] * n
    for row, p in zip(rows, pivots):
        tail = ring.zero
        for j in range(n):
            if j != p and row[j]:
                tail = tail + ring.var(j).scale(row[j])
        sub[p] = ring.var(p) - tail
    phi = lambda poly: poly.substitute(sub)
    new_algebra = type(pres.algebra)(ring, [phi(g) for g in pres.algebra.relations])
    new_cols = [c.map_monos(phi) for c in pres.columns]
    new_pres = Presentation(new_algebra, pres.rank, pres.twists, new_cols)
    new_gens = [ring.var(p) for p in pivots]
    return new_pres, new_gens


def hilbert_coefficients(pres, q_gens, sample_cap=None):
    """The Samuel polynomial of Q on M in binomial form.

    The fit uses s + 1 consecutive samples, is confirmed on s + 2 further
    samples, and the window slides past any pre-polynomial values.  The
    postulation index is the least n from which every computed sample
    agrees with the polynomial.
    """
    s = pres.dim()
    if s < 0:
        raise ValueError("the zero module has no Samuel polynomial")
    if sample_cap is None:
        sample_cap = _DEFAULT_SAMPLE_CAP[0]
    cache_key = ("samuel", tuple(sorted(repr(g) for g in q_gens)), sample_cap)
    cached = pres._cache.get(cache_key)
    if cached is not None:
        return cached
    f = SamuelFunction(pres, q_gens, sample_cap=sample_cap)
    if s == 0:
        ln = pres.length()
        n = 0
        while f(n) != ln:
            n += 1
        result = HilbertCoefficients(0, (ln,), n, tuple(f._values))
        pres._cache[cache_key] = result
        return result
    window = s + 2
    n0 = 0
    while True:
        samples = [f(n0 + k) for k in range(s + 1 + window)]
        coeffs = _fit_binomial(samples[: s + 1], n0, s)
        if coeffs is not None and all(
            _eval_samuel(coeffs, n0 + s + 1 + k, s) == samples[s + 1 + k]
            for k in range(window)
        ):
            out = []
            for c in coeffs:
                if c.denominator != 1:
                    raise EngineBugError("non-integer Samuel coefficient")
                out.append(int(c))
            e = tuple(out)
            all_samples = tuple(f._values)
            post = len(all_samples)
            while post > 0 and _eval_samuel(e, post - 1, s) == all_samples[post - 1]:
                post -= 1
            result = HilbertCoefficients(s, e, post, all_samples)
            pres._cache[cache_key] = result
            return result
        n0 += 1


def _fit_binomial(values, n0, s):
    """Solve for (e_0..e_s) from s+1 consecutive Samuel values at n0..n0+s."""
    size = s + 1
    mat = []
    for k in range(size):
        n = n0 + k
        row = [
            Fraction((-1) ** i * comb(n + s - i, s - i)) for i in range(size)
        ]
        row.append(Fraction(values[k]))
        mat.append(row)
    for col in range(size):
        pr = next((i for i in range(col, size) if mat[i][col]), None)
        if pr is None:
            return None
        mat[col], mat[pr] = mat[pr], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for i in range(size):
            if i != col and mat[i][col]:
                fct = mat[i][col]
                mat[i] = [a - fct * b for a, b in zip(mat[i], mat[col])]
    return [mat[i][size] for i in range(size)]


def _eval_samuel(coeffs, n, s):
    return sum(
        c * ((-1) ** i) * comb(n + s - i, s - i) for i, c in enumerate(coeffs)
    )


def multiplicity(pres, q_gens, sample_cap=None):
    """Samuel multiplicity e(Q; M) = e_0 of the Samuel polynomial."""
    return hilbert_coefficients(pres, q_gens, sample_cap=sample_cap)[0]
