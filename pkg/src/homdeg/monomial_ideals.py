"""Monomial-ideal combinatorics: Hilbert series numerators.

The graded dimension data of a quotient by a submodule only depends on the
lead-term module, which is monomial; everything here works on plain
exponent tuples.  A "series polynomial" is a dict degree -> int coeff
(degrees may be negative once twists enter).
"""

from .kernel import mono_deg, mono_divides


def minimalize(monos):
    """Minimal generators of the monomial ideal generated by monos."""
    monos = sorted(set(monos), key=mono_deg)
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _colon(monos, m):
    """Minimal generators of (monos) : m."""
    return minimalize([tuple(max(a - b, 0) for a, b in zip(g, m)) for g in monos])


def poly_add(p, q, sign=1):
    out = dict(p)
    for d, c in q.items():
        s = out.get(d, 0) + sign * c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def poly_shift(p, k):
    return {d + k: c for d, c in p.items()}


def hilbert_numerator(monos, _memo=None):
    """Numerator N(t) with Hilbert series of S/(monos) = N(t)/(1-t)^n."""
    monos = minimalize(monos)
    if _memo is None:
        _memo = {}
    key = frozenset(monos)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if not monos:
        out = {0: 1}
    elif len(monos) == 1:
        d = mono_deg(monos[0])
        out = {0: 1, d: -1} if d else {}
    else:
        rest = monos[:-1]
        m = monos[-1]
        out = poly_add(
            hilbert_numerator(rest, _memo),
            poly_shift(hilbert_numerator(_colon(rest, m), _memo), mono_deg(m)),
            sign=-1,
        )
    _memo[key] = out
    return out


def reduce_pole(num, n):
    """Cancel (1-t) factors: return (p, s) with num/(1-t)^n = p/(1-t)^s and
    p(1) != 0, or (p={}, s=0) for the zero series.  s is the Krull dimension
    of the module the series came from."""
    s = n
    p = dict(num)
    while p and s > 0 and sum(p.values()) == 0:
        # divide by (1 - t): q_d = sum_{e <= d} p_e
        lo, hi = min(p), max(p)
        q = {}
        acc = 0
        for d in range(lo, hi + 1):
            acc += p.get(d, 0)
            if acc:
                q[d] = acc
        # the top accumulates to zero exactly when (1-t) divides
        p = q
        s -= 1
    return p, s


def eval_at_one(p):
    return sum(p.values())


def count_standard_monomials(monos):
    """Number of monomials outside the monomial ideal (monos), or None if
    infinite.  The standard monomials form an order ideal, so a breadth
    search from 1 enumerates them all."""
    monos = minimalize(monos)
    if not monos:
        return None
    n = len(monos[0])
    zero = (0,) * n
    if zero in monos:
        return 0
    # finite iff some pure power of every variable is a generator
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in monos):
            return None
    seen = {zero}
    stack = [zero]
    while stack:
        m = stack.pop()
        for i in range(n):
            m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if m2 in seen:
                continue
            if any(mono_divides(g, m2) for g in monos):
                continue
            seen.add(m2)
            stack.append(m2)
    return len(seen)
