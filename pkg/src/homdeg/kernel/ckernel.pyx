# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: the hot inner loops of the Groebner engine.

Twin of pykernel with the same data layout and API; see that module for
the contract.  Monomials stay plain Python tuples so elements move freely
between the two kernels; the win comes from typed loops and fewer
temporary objects in the reduction loop.
"""

KERNEL_NAME = "c"


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cpdef tuple mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


cpdef bint mono_divides(tuple a, tuple b):
    """True if a divides b."""
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] >= b[i] else b[i]
    return tuple(out)


cpdef mono_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    total = 0
    for i in range(n):
        total += a[i]
    return total


cpdef tuple mono_key(tuple m):
    """Sort key for grevlex; max() picks the lead monomial."""
    cdef Py_ssize_t i, n = len(m)
    rev = [0] * n
    total = 0
    for i in range(n):
        total += m[i]
        rev[n - 1 - i] = -m[i]
    return (total, tuple(rev))


cpdef tuple term_key(c, tuple m, split):
    """Sort key for module terms under the (possibly block) order."""
    cdef Py_ssize_t i, n = len(m)
    rev = [0] * n
    total = 0
    for i in range(n):
        total += m[i]
        rev[n - 1 - i] = -m[i]
    return (c < split, total, tuple(rev), -c)


cdef int _term_cmp(t_a, tuple m_a, t_b, tuple m_b, split) except -2:
    """-1 / 0 / 1 comparison of two module terms under the block order."""
    cdef bint blk_a = t_a < split
    cdef bint blk_b = t_b < split
    if blk_a != blk_b:
        return 1 if blk_a else -1
    cdef Py_ssize_t i, n = len(m_a)
    da = 0
    db = 0
    for i in range(n):
        da += m_a[i]
        db += m_b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, -1, -1):
        if m_a[i] != m_b[i]:
            return 1 if m_a[i] < m_b[i] else -1
    if t_a != t_b:
        return 1 if t_a < t_b else -1
    return 0


cpdef lead_term(dict terms, split):
    """Largest term of a nonzero element: ((comp, mono), coeff)."""
    best = None
    cdef tuple best_m = None
    best_c = None
    for key in terms:
        c = key[0]
        m = key[1]
        if best is None or _term_cmp(c, m, best_c, best_m, split) > 0:
            best = key
            best_c = c
            best_m = m
    return best, terms[best]


cpdef dict add_scaled(dict u, c, tuple m, dict v):
    """Return u + c * m * v as a fresh dict; inputs are not mutated."""
    cdef dict out = dict(u)
    for key, vcoef in v.items():
        nk = (key[0], mono_mul(m, key[1]))
        s = out.get(nk)
        s = c * vcoef if s is None else s + c * vcoef
        if s:
            out[nk] = s
        else:
            out.pop(nk, None)
    return out


cpdef dict reduce_full(dict f, dict by_comp, split):
    """Full normal form of f against a monic basis.

    by_comp maps a component to a list of (lead_mono, terms) entries whose
    lead coefficient is 1.  Returns the remainder: no remaining term is
    divisible by any basis lead term.
    """
    cdef dict work = dict(f)
    cdef dict out = {}
    cdef dict bt
    cdef tuple m, bm, q
    while work:
        best = None
        best_c = None
        m = None
        for key in work:
            kc = key[0]
            km = key[1]
            if best is None or _term_cmp(kc, km, best_c, m, split) > 0:
                best = key
                best_c = kc
                m = km
        coef = work.pop(best)
        c = best_c
        hit_m = None
        hit_t = None
        for entry in by_comp.get(c, ()):
            bm = entry[0]
            if mono_divides(bm, m):
                hit_m = bm
                hit_t = entry[1]
                break
        if hit_m is None:
            out[best] = coef
            continue
        q = mono_div(m, hit_m)
        bt = hit_t
        for tkey, tcoef in bt.items():
            if tkey[0] == c and tkey[1] == hit_m:
                continue  # lead term cancels against the popped term
            nk = (tkey[0], mono_mul(q, tkey[1]))
            s = work.get(nk)
            s = -coef * tcoef if s is None else s - coef * tcoef
            if s:
                work[nk] = s
            else:
                work.pop(nk, None)
    return out
