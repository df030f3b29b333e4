"""Homological degree, homological torsions, the Stueckrad-Vogel invariant,
m-torsion length, and the structural predicates built on them: generalized
Cohen-Macaulayness, unmixedness, d-sequences, superficial elements, and the
length formulas expressing Samuel coefficients of a d-sequence.
"""

from dataclasses import dataclass
from math import comb

from .errors import EngineBugError
from .groebner import groebner_basis, normal_form
from .hilbert import HilbertCoefficients, hilbert_coefficients, multiplicity
from .koszul import euler_char_1
from .modules import (
    Presentation,
    colon_by_element,
    intersect_submodules,
    minimal_generators,
    saturate,
    submodule_gb,
    submodule_key,
)
from .resolution import ext_codims, local_cohomology_duals


class NotDSequenceError(ValueError):
    """Raised with the first failing colon pair when a sequence is required
    to be a d-sequence but is not."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"not a d-sequence: colon test fails at (i, j) = {pair}")


def _duals(pres):
    duals = pres._cache.get("duals")
    if duals is None:
        duals = local_cohomology_duals(pres)
        pres._cache["duals"] = duals
    return duals


def _ideal_key(q_gens):
    ring = q_gens[0].ring
    from .freemod import FreeModule

    module = FreeModule(ring, 1)
    gb = groebner_basis([module.inject(g) for g in q_gens if g], module=module)
    return submodule_key(gb)


def hdeg(pres, q_gens, _memo=None):
    """Homological degree of M with respect to the ideal Q:

        hdeg = e0(Q; M) + sum_{j=0}^{s-1} C(s-1, j) hdeg(M_j)   (s = dim M),

    with hdeg = l(M) when s <= 0.  The recursion descends through the
    graded local-cohomology duals and terminates because dim M_j <= j < s.
    """
    if _memo is None:
        _memo = {}
    if pres.is_zero():
        return 0
    key = (pres.canonical_key(), _ideal_key(q_gens))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    s = pres.dim()
    if s <= 0:
        out = pres.length()
    else:
        out = multiplicity(pres, q_gens)
        duals = _duals(pres)
        for j in range(s):
            out += comb(s - 1, j) * hdeg(duals[j], q_gens, _memo)
    _memo[key] = out
    return out


def torsion(pres, q_gens, i, _memo=None):
    """Homological torsion T^i = sum_{j=1}^{s-i} C(s-i-1, j-1) hdeg(M_j)."""
    s = pres.dim()
    if s < 2:
        raise ValueError("torsion requires dim M >= 2")
    if not 1 <= i <= s - 1:
        raise ValueError(f"torsion index {i} out of range 1..{s - 1}")
    if _memo is None:
        _memo = {}
    duals = _duals(pres)
    return sum(
        comb(s - i - 1, j - 1) * hdeg(duals[j], q_gens, _memo)
        for j in range(1, s - i + 1)
    )


def torsions(pres, q_gens):
    """(T^1, ..., T^{s-1}); empty for dim < 2."""
    s = pres.dim()
    if s < 2:
        return ()
    memo = {}
    return tuple(torsion(pres, q_gens, i, memo) for i in range(1, s))


def h0_torsion_module(pres):
    """H^0_m(M) = (0 :_M m^infinity) presented as a module."""
    m_gens = pres.algebra.irrelevant_gens()
    sat = saturate(pres, [], m_gens)
    return pres.subquotient(sat)


def h0_length(pres):
    """l(H^0_m(M)), computed by saturation and cross-checked against the
    length of the dual module M_0 (duality preserves length)."""
    if pres.is_zero():
        return 0
    via_sat = h0_torsion_module(pres).length()
    if via_sat is None:
        raise EngineBugError("m-torsion submodule has infinite length")
    via_dual = _duals(pres)[0].length()
    if via_sat != via_dual:
        raise EngineBugError(
            f"H^0 length mismatch: saturation gives {via_sat}, "
            f"dual module gives {via_dual}"
        )
    return via_sat


def is_generalized_cm(pres):
    """True iff every dual M_j with j < dim M has finite length."""
    s = pres.dim()
    if s <= 0:
        return True
    duals = _duals(pres)
    return all(duals[j].dim() <= 0 for j in range(s))


def stuckrad_vogel(pres, q_gens=None):
    """The invariant sum C(s-1, j) l(M_j) over j < s, defined exactly for
    generalized Cohen-Macaulay modules; None otherwise.

    With the ideal supplied, the identity sv = hdeg - e0 is asserted.
    """
    if pres.is_zero():
        return 0
    if not is_generalized_cm(pres):
        return None
    s = pres.dim()
    duals = _duals(pres)
    sv = sum(comb(s - 1, j) * duals[j].length() for j in range(s)) if s > 0 else 0
    if q_gens is not None and s > 0:
        h = hdeg(pres, q_gens)
        e0 = multiplicity(pres, q_gens)
        if sv != h - e0:
            raise EngineBugError(
                f"Stueckrad-Vogel identity fails: {sv} != {h} - {e0}"
            )
    return sv


def is_unmixed(pres):
    """True iff every associated prime has maximal dimension, decided by the
    codimension criterion on the transposed-resolution cohomology: M is
    unmixed iff codim Ext^i >= i + 1 for every i > n - dim M."""
    if pres.is_zero():
        raise ValueError("unmixedness of the zero module is undefined")
    n = pres.ring.n
    c = n - pres.dim()
    for i, codim in enumerate(ext_codims(pres)):
        if codim is None or i <= c:
            continue
        if codim < i + 1:
            return False
    return True


def _ideal_times_module_gens(pres, ideal_gens):
    """Generators of (ideal) M inside the ambient free module."""
    out = []
    for g in ideal_gens:
        if not g:
            continue
        for i in range(pres.rank):
            out.append(pres.ambient.inject(g, i))
    return out


def is_d_sequence(pres, seq):
    """Test the colon conditions

        ((a_1..a_{i-1})M : a_i a_j) = ((a_1..a_{i-1})M : a_j),  1 <= i <= j <= d.

    Returns (True, None) or (False, (i, j)) with the first failing pair.
    """
    d = len(seq)
    for i in range(1, d + 1):
        prefix = _ideal_times_module_gens(pres, seq[: i - 1])
        for j in range(i, d + 1):
            lhs = colon_by_element(pres, prefix, seq[i - 1] * seq[j - 1])
            rhs = colon_by_element(pres, prefix, seq[j - 1])
            if submodule_key(lhs) != submodule_key(rhs):
                return False, (i, j)
    return True, None


def is_superficial(pres, a, ideal_gens, c_range=(1, 4), window=4, cap=12):
    """Windowed test of superficiality of a for M with respect to I:
    look for c with (I^{n+1}M : a) cap I^c M = I^n M for n = c .. c+window.

    Returns "yes", "no", or "indeterminate".  The definition quantifies
    over all large n, so a sampled check can only refute within the cap;
    "indeterminate" is returned when the cap forecloses every window.
    """
    ideal_gens = [g for g in ideal_gens if g]
    if not a:
        raise ValueError("the zero element is never superficial")
    # membership a in I (inside A, so modulo the defining ideal)
    from .freemod import FreeModule

    ring = pres.ring
    one_mod = FreeModule(ring, 1)
    igb = groebner_basis(
        [one_mod.inject(g) for g in ideal_gens + list(pres.algebra.relations)],
        module=one_mod,
    )
    if normal_form(one_mod.inject(a), igb):
        raise ValueError("element does not lie in the given ideal")

    powers = {1: list(ideal_gens)}

    def power(k):
        while max(powers) < k:
            top = max(powers)
            nxt = []
            seen = set()
            for p in powers[top]:
                for g in ideal_gens:
                    q = p * g
                    if q and q not in seen:
                        seen.add(q)
                        nxt.append(q)
            kept = minimal_generators([one_mod.inject(q) for q in nxt])
            powers[top + 1] = [e.component(0) for e in kept]
        return powers[k]

    saw_violation = False
    tested_any = False
    for c in range(c_range[0], c_range[1] + 1):
        if c + window > cap:
            break
        ok = True
        for n in range(c, c + window + 1):
            icm = _ideal_times_module_gens(pres, power(c))
            inm = _ideal_times_module_gens(pres, power(n))
            in1m = _ideal_times_module_gens(pres, power(n + 1))
            lhs_colon = colon_by_element(pres, in1m, a)
            lhs = intersect_submodules(
                lhs_colon, submodule_gb(pres, icm), pres.ambient
            )
            if submodule_key(groebner_basis(lhs, module=pres.ambient) if lhs else []) != submodule_key(
                submodule_gb(pres, inm)
            ):
                ok = False
                saw_violation = True
                break
        tested_any = True
        if ok:
            return "yes"
    if tested_any and saw_violation:
        return "no"
    return "indeterminate"


def dseq_coefficients(pres, seq):
    """Samuel coefficients of Q = (seq) on M assembled from colon and
    m-torsion lengths, valid when seq is a d-sequence and a system of
    parameters:

        e0 = l(M/QM) - l((Q_{d-1}M : a_d) / Q_{d-1}M)
        (-1)^i e_i = l(H^0(M/Q_{d-i}M)) - l(H^0(M/Q_{d-i-1}M)),  1 <= i <= d-1
        (-1)^d e_d = l(H^0(M))

    The result is checked exactly against the fitted Samuel polynomial; a
    mismatch is fatal.  Returns (HilbertCoefficients, details dict).
    """
    d = len(seq)
    ok, pair = is_d_sequence(pres, seq)
    if not ok:
        raise NotDSequenceError(pair)
    s = pres.dim()
    if d != s:
        raise ValueError(f"sequence length {d} differs from dim M = {s}")
    details = {}

    quotients = {}

    def quo(i):
        # M / Q_i M
        if i not in quotients:
            quotients[i] = pres.quotient_by_ideal(seq[:i])
        return quotients[i]

    l_mqm = quo(d).length()
    if l_mqm is None:
        raise ValueError("the sequence is not a system of parameters")
    details["l_M_QM"] = l_mqm
    prefix = _ideal_times_module_gens(pres, seq[: d - 1])
    colon = colon_by_element(pres, prefix, seq[d - 1])
    correction = pres.subquotient(colon, extra_relations=prefix).length()
    if correction is None:
        raise EngineBugError("colon correction module has infinite length")
    details["l_colon_correction"] = correction
    e = [l_mqm - correction]
    for i in range(1, d):
        hi = h0_length(quo(d - i))
        lo = h0_length(quo(d - i - 1))
        details[f"h0_M_Q{d - i}M"] = hi
        details[f"h0_M_Q{d - i - 1}M"] = lo
        e.append((-1) ** i * (hi - lo))
    if d >= 1:
        h0m = h0_length(pres)
        details["h0_M"] = h0m
        if d > 0 and len(e) == d:
            e.append((-1) ** d * h0m)
    fitted = hilbert_coefficients(pres, seq)
    if tuple(e) != fitted.e:
        raise EngineBugError(
            f"d-sequence coefficient formulas give {tuple(e)} but the fitted "
            f"Samuel polynomial has {fitted.e}"
        )
    return fitted, details


@dataclass
class InvariantReport:
    """All numerical invariants of one (module, parameter ideal) instance."""

    dim: int
    depth: int
    e: HilbertCoefficients
    hdeg: int
    torsions: tuple
    h0_length: int
    sv_invariant: object  # int or None
    chi1: int
    generalized_cm: bool
    unmixed: bool
    cohen_macaulay: bool


def invariant_report(pres, q_gens):
    """Compute the full report; the internal cross-checks (Serre identity,
    duality of H^0 lengths, Stueckrad-Vogel identity) all run as part of
    the computation and raise EngineBugError on any inconsistency."""
    from .resolution import depth as depth_of

    s = pres.dim()
    dep = depth_of(pres)
    e = hilbert_coefficients(pres, q_gens)
    h = hdeg(pres, q_gens)
    t = torsions(pres, q_gens)
    h0 = h0_length(pres)
    sv = stuckrad_vogel(pres, q_gens)
    chi1 = euler_char_1(pres, q_gens, multiplicity=e[0]) if s >= 1 else 0
    gcm = is_generalized_cm(pres)
    unm = is_unmixed(pres)
    cm = dep == s
    if h < e[0]:
        raise EngineBugError(f"hdeg {h} < multiplicity {e[0]}")
    if s >= 1 and chi1 > h - e[0]:
        raise EngineBugError(f"chi1 {chi1} exceeds hdeg - e0 = {h - e[0]}")
    if cm and (h != e[0] or chi1 != 0):
        raise EngineBugError("Cohen-Macaulay module with hdeg > e0 or chi1 != 0")
    return InvariantReport(
        dim=s,
        depth=dep,
        e=e,
        hdeg=h,
        torsions=t,
        h0_length=h0,
        sv_invariant=sv,
        chi1=chi1,
        generalized_cm=gcm,
        unmixed=unm,
        cohen_macaulay=cm,
    )
