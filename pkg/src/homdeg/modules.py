"""Graded algebras A = S/J and finitely presented graded A-modules.

A module is always carried as the cokernel of a graded matrix over the
polynomial cover S; working over A is realized by silently appending the
defining ideal J (pulled into each free-module component) to every
relation computation.
"""

from .errors import EngineBugError, InhomogeneousError
from .freemod import FreeElement, FreeModule
from .groebner import (
    GroebnerEngine,
    groebner_basis,
    lift_relations,
    normal_form,
    syzygy_module,
)
from .kernel import mono_deg, mono_key, reduce_full, term_key
from .monomial_ideals import (
    eval_at_one,
    hilbert_numerator,
    minimalize,
    poly_add,
    poly_shift,
    reduce_pole,
)
from .ring import Polynomial

#: Krull dimension marker for the zero module.
DIM_ZERO = -1


class Algebra:
    """A = S/J for a homogeneous ideal J (J empty gives A = S)."""

    def __init__(self, ring, relations=()):
        self.ring = ring
        rels = []
        for g in relations:
            if not g:
                continue
            if not g.is_homogeneous():
                raise InhomogeneousError(repr(g))
            rels.append(g)
        self.relations = tuple(rels)

    def irrelevant_gens(self):
        """Generators of the maximal (irrelevant) ideal: the variables."""
        return [self.ring.var(i) for i in range(self.ring.n)]

    def free_module(self, rank, twists=None):
        return FreeModule(self.ring, rank, twists)

    def as_module(self):
        """A as a module over itself."""
        return Presentation(self, 1, (0,), ())

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.ring == other.ring
            and set(self.relations) == set(other.relations)
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.relations)))

    def __repr__(self):
        if not self.relations:
            return repr(self.ring)
        return f"{self.ring}/({', '.join(map(repr, self.relations))})"


class Presentation:
    """A finitely generated graded module M = F / N, with F = S^rank
    (twisted) and N spanned by the matrix columns plus J copies.

    Immutable; all derived data is cached on first use.
    """

    def __init__(self, algebra, rank, twists, columns):
        self.algebra = algebra
        self.ring = algebra.ring
        self.rank = rank
        self.twists = tuple(twists)
        self.ambient = FreeModule(self.ring, rank, self.twists)
        cols = []
        for c in columns:
            if not c:
                continue
            if c.module != self.ambient:
                raise EngineBugError("presentation column in wrong ambient")
            if not c.is_homogeneous():
                raise InhomogeneousError(repr(c))
            cols.append(c)
        self.columns = tuple(cols)
        self._gb = None
        self._series = None
        self._cache = {}

    # ---- relation calculus -------------------------------------------

    def relation_gens(self):
        """Matrix columns plus the defining ideal in every component."""
        out = list(self.columns)
        for g in self.algebra.relations:
            for i in range(self.rank):
                out.append(self.ambient.inject(g, i))
        return out

    def gb(self):
        """Reduced Groebner basis of the relation submodule."""
        if self._gb is None:
            rels = self.relation_gens()
            if rels:
                self._gb = tuple(groebner_basis(rels, module=self.ambient))
            else:
                self._gb = ()
        return self._gb

    def reduce(self, el):
        """Normal form of an ambient element against the relations."""
        return normal_form(el, self.gb())

    def contains_in_relations(self, el):
        return not self.reduce(el)

    def lead_monomials(self):
        """Per-component minimal lead monomials of the relation module."""
        per = [[] for _ in range(self.rank)]
        for g in self.gb():
            (c, m), _ = g.lead()
            per[c].append(m)
        return [minimalize(ms) for ms in per]

    # ---- numerical invariants ----------------------------------------

    def hilbert_numerator(self):
        """Numerator of the graded Hilbert series over (1-t)^n, twists
        included; {} for the zero module."""
        if self._series is None:
            total = {}
            memo = {}
            for c, monos in enumerate(self.lead_monomials()):
                num = hilbert_numerator(monos, memo)
                total = poly_add(total, poly_shift(num, self.twists[c]))
            self._series = total
        return self._series

    def hilbert_series(self):
        """(numerator, n): series = numerator / (1-t)^n."""
        return dict(self.hilbert_numerator()), self.ring.n

    def is_zero(self):
        return not self.hilbert_numerator()

    def dim(self):
        """Krull dimension; DIM_ZERO (= -1) marks the zero module."""
        num = self.hilbert_numerator()
        if not num:
            return DIM_ZERO
        _, s = reduce_pole(num, self.ring.n)
        return s

    def length(self):
        """Length over the base field if finite, else None."""
        num = self.hilbert_numerator()
        if not num:
            return 0
        p, s = reduce_pole(num, self.ring.n)
        if s > 0:
            return None
        return eval_at_one(p)

    def degree_multiplicity(self):
        """Multiplicity with respect to the irrelevant maximal ideal:
        the reduced numerator evaluated at t = 1."""
        num = self.hilbert_numerator()
        if not num:
            return 0
        p, _ = reduce_pole(num, self.ring.n)
        return eval_at_one(p)

    # ---- derived modules ---------------------------------------------

    def quotient_by_ideal(self, ideal_gens):
        """M / (ideal) M."""
        cols = list(self.columns)
        for g in ideal_gens:
            if not g:
                continue
            for i in range(self.rank):
                cols.append(self.ambient.inject(g, i))
        return Presentation(self.algebra, self.rank, self.twists, cols)

    def subquotient(self, gens, extra_relations=()):
        """The submodule of M spanned by (the images of) gens, presented on
        those generators.  extra_relations enlarges the submodule worked
        modulo, giving (<gens> + N') / N' with N' = N + <extra_relations>."""
        gens = [g for g in gens if g]
        if not gens:
            return Presentation(self.algebra, 0, (), ())
        modulo = self.relation_gens() + [r for r in extra_relations if r]
        cols = lift_relations(gens, modulo)
        twists = tuple(g.homogeneous_degree() for g in gens)
        return Presentation(self.algebra, len(gens), twists, cols)

    def minimized(self):
        """An isomorphic presentation with no constant matrix entries."""
        cols = list(self.columns) + [
            self.ambient.inject(g, i)
            for g in self.algebra.relations
            for i in range(self.rank)
        ]
        rank, twists, cols = _prune_constants(self.ring, self.rank, self.twists, cols)
        # J re-enters via Presentation's relation_gens; stripping duplicate
        # copies of it here is only an optimization, not required.
        return Presentation(self.algebra, rank, twists, cols)

    def canonical_key(self):
        key = self._cache.get("canon")
        if key is None:
            elems = []
            for g in self.gb():
                elems.append(
                    tuple(
                        sorted(
                            ((c, m, str(v)) for (c, m), v in g.terms.items()),
                        )
                    )
                )
            key = (self.rank, self.twists, tuple(sorted(elems)))
            self._cache["canon"] = key
        return key

    def __repr__(self):
        return (
            f"Presentation(rank={self.rank}, twists={list(self.twists)}, "
            f"{len(self.columns)} columns over {self.algebra})"
        )


def _prune_constants(ring, rank, twists, cols):
    """Gaussian elimination of unit matrix entries (graded Nakayama)."""
    cols = [c for c in cols if c]
    while True:
        hit = None
        for ci, col in enumerate(cols):
            for (comp, m), v in col.terms.items():
                if mono_deg(m) == 0:
                    hit = (ci, comp, v)
                    break
            if hit:
                break
        if hit is None:
            break
        ci, comp, v = hit
        col = cols[ci]
        inv = ring.field.one / v
        new_cols = []
        for j, d in enumerate(cols):
            if j == ci:
                continue
            p = d.component(comp)
            if p:
                d = d - (p.scale(inv) * col)
            new_cols.append(d)
        # drop the eliminated component everywhere
        rank -= 1
        twists = twists[:comp] + twists[comp + 1 :]
        module = FreeModule(ring, rank, twists)
        cols = []
        for d in new_cols:
            terms = {}
            for (c, m), coeff in d.terms.items():
                if c == comp:
                    raise EngineBugError("pruning left a term in a dropped component")
                terms[(c - 1 if c > comp else c, m)] = coeff
            if terms:
                cols.append(FreeElement(module, terms))
    return rank, twists, cols


# ---- submodule calculus inside a presentation ------------------------


def exact_divide(el, f):
    """el / f for an element known to lie in f * F; exactness is checked."""
    module = el.module
    ring = module.ring
    out = {}
    fl = f.lead_monomial()
    flc = f.terms[fl]
    work = dict(el.terms)
    while work:
        (c, m) = max(work, key=lambda t: term_key(t[0], t[1], module.rank))
        coef = work[(c, m)]
        from .kernel import mono_divides, mono_div, mono_mul

        if not mono_divides(fl, m):
            raise EngineBugError("exact division failed: element not in f*F")
        q = mono_div(m, fl)
        qc = coef / flc
        out[(c, q)] = qc
        for fm, fc in f.terms.items():
            key = (c, mono_mul(q, fm))
            s = work.get(key)
            s = -qc * fc if s is None else s - qc * fc
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return FreeElement(module, out)


def intersect_submodules(gens1, gens2, module):
    """Generators of <gens1> cap <gens2> inside a free module."""
    g1 = [g for g in gens1 if g]
    g2 = [g for g in gens2 if g]
    if not g1 or not g2:
        return []
    syz = syzygy_module(g1 + g2)
    out = []
    for s in syz:
        el = module.zero()
        for (c, m), v in s.terms.items():
            if c < len(g1):
                el = el + Polynomial(module.ring, {m: v}) * g1[c]
        if el:
            out.append(el)
    return groebner_basis(out, module=module) if out else []


def colon_by_element(pres, sub_gens, f):
    """Generators of (N :_M f) = {u in M : f u in N}, for N = <sub_gens>
    inside M.  f = 0 returns all of M (documented behaviour)."""
    module = pres.ambient
    if not f:
        return [module.basis(i) for i in range(module.rank)]
    if not f.is_homogeneous():
        raise InhomogeneousError(repr(f))
    big_n = [g for g in sub_gens if g] + pres.relation_gens()
    f_f = [module.inject(f, i) for i in range(module.rank)]
    inter = intersect_submodules(big_n, f_f, module)
    out = [exact_divide(el, f) for el in inter]
    return groebner_basis(out, module=module) if out else []


def colon_by_ideal(pres, sub_gens, ideal_gens):
    """(N :_M J) as the intersection of the element colons."""
    ideal_gens = [f for f in ideal_gens if f]
    if not ideal_gens:
        raise ValueError("colon by the empty (zero) ideal is not defined")
    result = None
    for f in ideal_gens:
        part = colon_by_element(pres, sub_gens, f)
        if result is None:
            result = part
        else:
            result = intersect_submodules(result, part, pres.ambient)
    return result


def saturate(pres, sub_gens, ideal_gens):
    """(N :_M J^infinity): iterate the colon until it stabilizes."""
    current = [g for g in sub_gens if g] + pres.relation_gens()
    current = groebner_basis(current, module=pres.ambient) if current else []
    while True:
        nxt = colon_by_ideal(pres, current, ideal_gens)
        if submodule_key(nxt) == submodule_key(current):
            return current
        current = nxt


def submodule_key(gb_gens):
    """Canonical key of a submodule given by a reduced Groebner basis."""
    return tuple(
        sorted(
            tuple(sorted((c, m, str(v)) for (c, m), v in g.terms.items()))
            for g in gb_gens
        )
    )


def submodule_gb(pres, gens):
    """Reduced GB of <gens> + relations inside the ambient of pres."""
    full = [g for g in gens if g] + pres.relation_gens()
    return groebner_basis(full, module=pres.ambient) if full else []


def submodules_equal(pres, gens1, gens2):
    return submodule_key(submodule_gb(pres, gens1)) == submodule_key(
        submodule_gb(pres, gens2)
    )


def minimal_generators(gens):
    """A minimal homogeneous generating subset (graded Nakayama greedy)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    module = gens[0].module
    order = sorted(range(len(gens)), key=lambda i: gens[i].homogeneous_degree())
    eng = GroebnerEngine(module)
    kept = []
    for i in order:
        eng.compute()
        nf = reduce_full(gens[i].terms, eng.by_comp, eng.split)
        if nf:
            kept.append(gens[i])
            eng.add(gens[i])
    return kept
