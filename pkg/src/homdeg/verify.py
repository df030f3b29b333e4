"""Mechanical checkers for the two structure theorems on parameter ideals,
generators for the two benchmark families, and the inequality audit.

Theorem "thm1" (any module M, Q a parameter ideal):
    (1) chi_1(Q;M) = hdeg_Q(M) - e0_Q(M)
is equivalent to
    (2a) (-1)^i e_i = T^i for 1 <= i <= d-1 and (-1)^d e_d = l(H^0(M)),
    (2b) the Samuel function equals its polynomial for every n >= 0,
and implies (i) Q admits d-sequence generators and (ii) QM cap H^0(M) = 0
with Q H^i(M) = 0 for 1 <= i <= d-2.

Theorem "thm2" (M unmixed, d >= 2): (1) is equivalent to
    (2) e_1 = -T^1,
implying (-1)^i e_i = T^i for 2 <= i <= d-1, e_d = 0, polynomial
exactness, d-sequence generators, and Q H^i(M) = 0 for 1 <= i <= d-2.
The mixed benchmark family witnesses that (2) does not imply (1) without
unmixedness.
"""

import hashlib
import json
import random
from dataclasses import dataclass, field

from .errors import EngineBugError
from .freemod import FreeModule
from .groebner import groebner_basis, normal_form
from .hilbert import hilbert_coefficients
from .invariants import (
    _duals,
    _ideal_times_module_gens,
    hdeg,
    is_d_sequence,
    is_unmixed,
    torsions,
)
from .koszul import euler_char_1
from .modules import Algebra, intersect_submodules, submodule_key
from .ring import PolyRing


@dataclass
class ProblemInstance:
    """A module together with a parameter ideal and provenance metadata."""

    pres: object
    q_gens: list
    metadata: dict = field(default_factory=dict)

    @property
    def name(self):
        fam = self.metadata.get("family", "instance")
        params = self.metadata.get("params", {})
        tail = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
        return f"{fam}({tail})" if tail else fam


@dataclass
class TheoremVerdict:
    theorem: str
    condition1: bool
    condition2a: tuple = ()  # per-i booleans (thm1)
    condition2b: bool = None
    condition2: bool = None  # thm2: e1 = -T^1
    unmixed: bool = None
    equivalence_consistent: bool = True
    consequences: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)


def _core_numbers(inst):
    pres, q = inst.pres, inst.q_gens
    e = hilbert_coefficients(pres, q)
    d = e.s
    h = hdeg(pres, q)
    chi1 = euler_char_1(pres, q, multiplicity=e[0])
    t = torsions(pres, q)
    from .invariants import h0_length

    h0 = h0_length(pres)
    return d, e, h, chi1, t, h0


def _polynomial_exact_from_zero(e):
    return e.postulation == 0


def _q_kills_dual(pres, q_gens, i):
    """True iff Q annihilates the dual module M_i."""
    duals = _duals(pres)
    if i >= len(duals):
        return True
    mi = duals[i]
    if mi.is_zero():
        return True
    gb = mi.gb()
    for q in q_gens:
        for j in range(mi.rank):
            if normal_form(mi.ambient.inject(q, j), gb):
                return False
    return True


def _qm_meets_h0(pres, q_gens):
    """True iff QM cap H^0(M) = 0 inside M."""
    from .modules import saturate

    qm = _ideal_times_module_gens(pres, q_gens) + pres.relation_gens()
    sat_gens = saturate(pres, [], pres.algebra.irrelevant_gens())
    inter = intersect_submodules(qm, sat_gens, pres.ambient)
    gb = pres.gb()
    return all(not normal_form(el, gb) for el in inter)


def find_dseq_generators(pres, q_gens, seed=0, trials=20, metadata=None):
    """Search for generators of Q forming a d-sequence on M.

    The given generators are tried first, then up to `trials` random linear
    recombinations over small integers, seeded deterministically from the
    instance metadata and the session seed.  Returns the generator list or
    None if the search fails.
    """
    ok, _ = is_d_sequence(pres, q_gens)
    if ok:
        return list(q_gens)
    ring = pres.ring
    one_mod = FreeModule(ring, 1)
    j_gens = list(pres.algebra.relations)
    target = submodule_key(
        groebner_basis(
            [one_mod.inject(g) for g in list(q_gens) + j_gens], module=one_mod
        )
    )
    material = json.dumps(metadata or {}, sort_keys=True, default=str) + f"#{seed}"
    rng = random.Random(
        int.from_bytes(hashlib.sha256(material.encode()).digest()[:8], "big")
    )
    k = len(q_gens)
    for _ in range(trials):
        coeffs = [[rng.randrange(0, 20) for _ in range(k)] for _ in range(k)]
        cand = []
        for row in coeffs:
            b = ring.zero
            for c, g in zip(row, q_gens):
                if c:
                    b = b + g.scale(ring.field.from_int(c))
            cand.append(b)
        if any(not b for b in cand):
            continue
        key = submodule_key(
            groebner_basis(
                [one_mod.inject(g) for g in cand + j_gens], module=one_mod
            )
        )
        if key != target:
            continue
        ok, _ = is_d_sequence(pres, cand)
        if ok:
            return cand
    return None


def check_thm1(inst, seed=0):
    """Verdict for the chi_1 = hdeg - e0 equivalence theorem."""
    pres, q = inst.pres, inst.q_gens
    if pres.dim() < 1:
        raise ValueError("the theorem concerns modules of positive dimension")
    d, e, h, chi1, t, h0 = _core_numbers(inst)
    witnesses = []
    cond1 = chi1 == h - e[0]
    per_i = []
    for i in range(1, d):
        ok = (-1) ** i * e[i] == t[i - 1]
        per_i.append(ok)
        if not ok:
            witnesses.append(
                f"(-1)^{i} e_{i} = {(-1) ** i * e[i]} != T^{i} = {t[i - 1]}"
            )
    ok_d = (-1) ** d * e[d] == h0
    per_i.append(ok_d)
    if not ok_d:
        witnesses.append(f"(-1)^{d} e_{d} = {(-1) ** d * e[d]} != l(H^0) = {h0}")
    cond2b = _polynomial_exact_from_zero(e)
    if not cond2b:
        witnesses.append(f"Samuel function differs from polynomial below n = {e.postulation}")
    cond2 = all(per_i) and cond2b
    consistent = cond1 == cond2
    if not consistent:
        witnesses.append(
            f"equivalence violated: condition (1) is {cond1} but (2a and 2b) is {cond2}"
        )
    consequences = {}
    if cond1:
        gens = find_dseq_generators(pres, q, seed=seed, metadata=inst.metadata)
        if gens is None:
            consequences["d_sequence"] = "unverified"
            witnesses.append("no d-sequence generators found within the trial budget")
        else:
            consequences["d_sequence"] = [repr(g) for g in gens]
        qm_h0 = _qm_meets_h0(pres, q)
        consequences["qm_cap_h0_zero"] = qm_h0
        if not qm_h0:
            witnesses.append("QM cap H^0(M) != 0")
        kills = all(_q_kills_dual(pres, q, i) for i in range(1, max(d - 1, 1)))
        consequences["q_kills_hi"] = kills
        if not kills:
            witnesses.append("Q does not annihilate some H^i(M), 1 <= i <= d-2")
    return TheoremVerdict(
        theorem="thm1",
        condition1=cond1,
        condition2a=tuple(per_i),
        condition2b=cond2b,
        equivalence_consistent=consistent,
        consequences=consequences,
        witnesses=witnesses,
    )


def check_thm2(inst, seed=0):
    """Verdict for the e_1 = -T^1 equivalence theorem (unmixed, dim >= 2)."""
    pres, q = inst.pres, inst.q_gens
    if pres.dim() < 2:
        raise ValueError("the theorem requires dim M >= 2")
    d, e, h, chi1, t, h0 = _core_numbers(inst)
    unmixed = is_unmixed(pres)
    witnesses = []
    cond1 = chi1 == h - e[0]
    cond2 = e[1] == -t[0]
    consistent = True
    if unmixed:
        consistent = cond1 == cond2
        if not consistent:
            witnesses.append(
                f"equivalence violated on an unmixed module: (1) is {cond1}, (2) is {cond2}"
            )
    consequences = {}
    if unmixed and cond1 and cond2:
        per_i = all((-1) ** i * e[i] == t[i - 1] for i in range(2, d))
        consequences["higher_coefficients"] = per_i and e[d] == 0
        if not consequences["higher_coefficients"]:
            witnesses.append("consequence (i) fails: higher coefficients or e_d")
        consequences["polynomial_exact"] = _polynomial_exact_from_zero(e)
        if not consequences["polynomial_exact"]:
            witnesses.append("consequence fails: Samuel polynomial not exact from n = 0")
        gens = find_dseq_generators(pres, q, seed=seed, metadata=inst.metadata)
        consequences["d_sequence"] = (
            "unverified" if gens is None else [repr(g) for g in gens]
        )
        if gens is None:
            witnesses.append("no d-sequence generators found within the trial budget")
        kills = all(_q_kills_dual(pres, q, i) for i in range(1, max(d - 1, 1)))
        consequences["q_kills_hi"] = kills
        if not kills:
            witnesses.append("Q does not annihilate some H^i(M), 1 <= i <= d-2")
    return TheoremVerdict(
        theorem="thm2",
        condition1=cond1,
        condition2=cond2,
        unmixed=unmixed,
        equivalence_consistent=consistent,
        consequences=consequences,
        witnesses=witnesses,
    )


def gen_example_39(l, m, field=None):
    """The intersection-of-linear-ideals family: A = S/(X_1..X_l) cap
    (Y_1..Y_l) in 2l + m variables, Q = (x_i - y_i; z_j)."""
    if l < 2 or m < 1:
        raise ValueError("family requires l >= 2 and m >= 1")
    names = (
        [f"x{i}" for i in range(1, l + 1)]
        + [f"y{i}" for i in range(1, l + 1)]
        + [f"z{j}" for j in range(1, m + 1)]
    )
    kwargs = {} if field is None else {"field": field}
    ring = PolyRing(names, **kwargs)
    xs = [ring.var(i) for i in range(l)]
    ys = [ring.var(l + i) for i in range(l)]
    zs = [ring.var(2 * l + j) for j in range(m)]
    one_mod = FreeModule(ring, 1)
    inter = intersect_submodules(
        [one_mod.inject(x) for x in xs], [one_mod.inject(y) for y in ys], one_mod
    )
    j_gens = [el.component(0) for el in inter]
    pres = Algebra(ring, j_gens).as_module()
    q = [x - y for x, y in zip(xs, ys)] + zs
    return ProblemInstance(pres, q, {"family": "ex39", "params": {"l": l, "m": m}})


def gen_example_46(l, field=None):
    """The mixed-ring family: A = k[x,y,z]/((X) cap (Y^l, Z)), with the
    parameter ideal Q = (x - y, x - z)."""
    if l < 1:
        raise ValueError("family requires l >= 1")
    kwargs = {} if field is None else {"field": field}
    ring = PolyRing(["x", "y", "z"], **kwargs)
    x, y, z = ring.gens()
    pres = Algebra(ring, [x * y**l, x * z]).as_module()
    q = [x - y, x - z]
    return ProblemInstance(pres, q, {"family": "ex46", "params": {"l": l}})


def audit_inequalities(inst):
    """Evaluate the unconditional inequalities; any violation is fatal.

    Checks chi1 >= 0, chi1 <= hdeg - e0, e1 <= 0, e1 >= -T^1 (dim >= 2),
    and dim M_j <= j for every dual.  Returns the evaluated report.
    """
    pres, q = inst.pres, inst.q_gens
    d, e, h, chi1, t, h0 = _core_numbers(inst)
    report = {
        "chi1": chi1,
        "hdeg": h,
        "e": tuple(e.e),
        "torsions": t,
        "dual_dims": tuple(m.dim() for m in _duals(pres)),
    }
    if chi1 < 0:
        raise EngineBugError(f"chi1 = {chi1} < 0 on {inst.name}")
    if chi1 > h - e[0]:
        raise EngineBugError(f"chi1 = {chi1} > hdeg - e0 = {h - e[0]} on {inst.name}")
    if d >= 1 and e[1] > 0:
        raise EngineBugError(f"e1 = {e[1]} > 0 on {inst.name}")
    if d >= 2 and e[1] < -t[0]:
        raise EngineBugError(f"e1 = {e[1]} < -T^1 = {-t[0]} on {inst.name}")
    for j, mj in enumerate(_duals(pres)):
        if mj.dim() > j:
            raise EngineBugError(f"dim M_{j} = {mj.dim()} > {j} on {inst.name}")
    return report
