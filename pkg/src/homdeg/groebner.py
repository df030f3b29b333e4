"""Buchberger's algorithm for homogeneous submodules of graded free modules.

Normal selection strategy (pairs by ascending degree), chain criterion,
and the product criterion in the ideal (rank one) case.  The product
criterion is not sound for modules of higher rank, so it is only applied
when the ambient has a single component.

All public functions return canonical data: the reduced Groebner basis of
a submodule is unique for the fixed order, so downstream results are
deterministic.
"""

import heapq

from .errors import DegreeCapError, EngineBugError, InhomogeneousError
from .freemod import FreeElement, FreeModule
from .kernel import (
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    reduce_full,
    term_key,
)


def _monic(terms, split):
    (c, m) = max(terms, key=lambda t: term_key(t[0], t[1], split))
    lc = terms[(c, m)]
    if str(lc) == "1":
        return terms, (c, m)
    return {t: v / lc for t, v in terms.items()}, (c, m)


class GroebnerEngine:
    """Incremental Buchberger.  Elements can be added after a compute();
    the engine resumes with the new pairs only."""

    def __init__(self, module, split=None):
        self.module = module
        self.ring = module.ring
        self.split = module.rank if split is None else split
        self.cap = self.ring.degree_cap
        self.basis = []      # monic term dicts
        self.leads = []      # (comp, mono) per basis element
        self.by_comp = {}    # comp -> [(mono, terms)] view for the kernel
        self.pairs = []      # heap of (degree, i, j)
        self.pending = set()

    def clone(self):
        """Snapshot of the engine state; term dicts are shared (they are
        never mutated after insertion), bookkeeping is copied."""
        out = GroebnerEngine.__new__(GroebnerEngine)
        out.module = self.module
        out.ring = self.ring
        out.split = self.split
        out.cap = self.cap
        out.basis = list(self.basis)
        out.leads = list(self.leads)
        out.by_comp = {c: list(v) for c, v in self.by_comp.items()}
        out.pairs = list(self.pairs)
        out.pending = set(self.pending)
        return out

    def add(self, el):
        if not isinstance(el, FreeElement) or el.module != self.module:
            raise EngineBugError("element added to engine over a different ambient")
        if not el.is_homogeneous():
            raise InhomogeneousError(repr(el))
        self._add_terms(el.terms)

    def _add_terms(self, terms):
        nf = reduce_full(terms, self.by_comp, self.split)
        if not nf:
            return
        deg = self._degree(nf)
        if deg > self.cap:
            raise DegreeCapError(self.cap)
        terms, (c, m) = _monic(nf, self.split)
        idx = len(self.basis)
        self.basis.append(terms)
        self.leads.append((c, m))
        self.by_comp.setdefault(c, []).append((m, terms))
        for j, (jc, jm) in enumerate(self.leads[:idx]):
            if jc != c:
                continue
            lcm = mono_lcm(jm, m)
            pdeg = mono_deg(lcm) + self.module.twists[c]
            heapq.heappush(self.pairs, (pdeg, j, idx))
            self.pending.add((j, idx))

    def _degree(self, terms):
        c, m = next(iter(terms))
        return mono_deg(m) + self.module.twists[c]

    def compute(self):
        rank_one = self.module.rank == 1
        while self.pairs:
            deg, i, j = heapq.heappop(self.pairs)
            if (i, j) not in self.pending:
                continue
            self.pending.discard((i, j))
            if deg > self.cap:
                raise DegreeCapError(self.cap)
            ci, mi = self.leads[i]
            cj, mj = self.leads[j]
            lcm = mono_lcm(mi, mj)
            if rank_one and mono_mul(mi, mj) == lcm:
                continue  # coprime lead monomials: S-pair reduces to zero
            if self._chain_skip(i, j, ci, lcm):
                continue
            s = self._spair(i, j, lcm)
            self._add_terms(s)
        return self

    def _chain_skip(self, i, j, comp, lcm):
        for k, (kc, km) in enumerate(self.leads):
            if k == i or k == j or kc != comp:
                continue
            if not mono_divides(km, lcm):
                continue
            a, b = (i, k) if i < k else (k, i)
            if (a, b) in self.pending:
                continue
            a, b = (j, k) if j < k else (k, j)
            if (a, b) in self.pending:
                continue
            return True
        return False

    def _spair(self, i, j, lcm):
        ci, mi = self.leads[i]
        cj, mj = self.leads[j]
        qi = mono_div(lcm, mi)
        qj = mono_div(lcm, mj)
        out = {}
        for (tc, tm), c in self.basis[i].items():
            out[(tc, mono_mul(qi, tm))] = c
        for (tc, tm), c in self.basis[j].items():
            key = (tc, mono_mul(qj, tm))
            s = out.get(key)
            s = -c if s is None else s - c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return out

    def reduced_elements(self):
        """The reduced Groebner basis as canonical FreeElements."""
        self.compute()
        elems = interreduce(list(self.basis), self.split)
        return [FreeElement(self.module, t) for t in elems]


def interreduce(elems, split):
    """Interreduce monic term dicts to the reduced basis; canonical order."""
    elems = [e for e in elems if e]
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            if elems[i] is None:
                continue
            by_comp = {}
            for j, other in enumerate(elems):
                if j == i or other is None:
                    continue
                (c, m) = max(other, key=lambda t: term_key(t[0], t[1], split))
                by_comp.setdefault(c, []).append((m, other))
            nf = reduce_full(elems[i], by_comp, split)
            if nf != elems[i]:
                changed = True
                elems[i] = _monic(nf, split)[0] if nf else None
    elems = [e for e in elems if e]
    elems.sort(
        key=lambda t: term_key(*max(t, key=lambda u: term_key(u[0], u[1], split)), split),
        reverse=True,
    )
    return elems


def groebner_basis(gens, module=None, split=None):
    """Reduced Groebner basis of the submodule generated by gens.

    Verifies membership of every input generator (zero normal form) before
    returning; a failure is an engine bug, not bad input.
    """
    gens = [g for g in gens if g]
    if module is None:
        if not gens:
            raise ValueError("cannot infer ambient from an empty generator list")
        module = gens[0].module
    eng = GroebnerEngine(module, split=split)
    for g in gens:
        eng.add(g)
    gb = eng.reduced_elements()
    for g in gens:
        if normal_form(g, gb, split=split):
            raise EngineBugError("generator does not reduce to zero against its own basis")
    return gb


def normal_form(el, gb, split=None):
    """Full normal form of el against a reduced (or at least monic) basis."""
    if split is None:
        split = el.module.rank
    by_comp = {}
    for g in gb:
        (c, m), _ = g.lead(split)
        by_comp.setdefault(c, []).append((m, g.terms))
    return FreeElement(el.module, reduce_full(el.terms, by_comp, split))


def syzygy_module(gens):
    """Generators of the syzygy module of a list of nonzero homogeneous
    elements of a common graded free module.

    Returned elements live in S^k with twists = the generator degrees, so
    they are homogeneous with correct bookkeeping.
    """
    if not gens:
        return []
    ambient = gens[0].module
    ring = ambient.ring
    r = ambient.rank
    k = len(gens)
    degs = []
    for g in gens:
        if not g:
            raise ValueError("syzygy_module expects nonzero generators")
        degs.append(g.homogeneous_degree())
    big = FreeModule(ring, r + k, ambient.twists + tuple(degs))
    tagged = []
    for i, g in enumerate(gens):
        terms = dict(g.terms)
        terms[(r + i, ring.zero_mono)] = ring.field.one
        tagged.append(FreeElement(big, terms))
    gb = groebner_basis(tagged, module=big, split=r)
    target = FreeModule(ring, k, tuple(degs))
    out = []
    for el in gb:
        if any(c < r for c, _ in el.terms):
            continue
        out.append(FreeElement(target, {(c - r, m): v for (c, m), v in el.terms.items()}))
    return out


def lift_relations(gens, modulo):
    """Relations among the images of gens in F / <modulo>.

    Returns generators of {a in S^k : sum a_i gens_i in <modulo>}, the
    presentation matrix columns of the subquotient (<gens> + <modulo>) /
    <modulo> on the generators gens.  Zero gens contribute unit relations.
    """
    k = len(gens)
    nonzero = [(i, g) for i, g in enumerate(gens) if g]
    degs = tuple(g.homogeneous_degree() if g else 0 for g in gens)
    if not nonzero:
        ring = modulo[0].module.ring if modulo else None
        if ring is None:
            raise ValueError("cannot infer ring")
        target = FreeModule(ring, k, degs)
        return [target.basis(i) for i in range(k)]
    ring = nonzero[0][1].module.ring
    target = FreeModule(ring, k, degs)
    combined = [g for _, g in nonzero] + [m for m in modulo if m]
    syz = syzygy_module(combined)
    out = []
    for s in syz:
        terms = {}
        for (c, m), v in s.terms.items():
            if c < len(nonzero):
                terms[(nonzero[c][0], m)] = v
        if terms:
            out.append(FreeElement(target, terms))
    for i, g in enumerate(gens):
        if not g:
            out.append(target.basis(i))
    return out
