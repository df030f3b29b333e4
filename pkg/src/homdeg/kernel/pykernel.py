"""Pure-Python kernel: the hot inner loops of the Groebner engine.

Data layout shared with the compiled twin (ckernel):

* a monomial is a tuple of nonnegative ints (one exponent per variable);
* a free-module term index is a pair (component, monomial);
* an element is a dict mapping term indices to nonzero field coefficients.

The term order is grevlex on monomials, term-over-position on components
(lower component wins ties).  `split` turns the order into a block
elimination order: components < split dominate components >= split.  With
split = rank the order degenerates to the plain module order.
"""

KERNEL_NAME = "python"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_key(m):
    """Sort key for grevlex; max() picks the lead monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def term_key(c, m, split):
    """Sort key for module terms under the (possibly block) order."""
    return (c < split, sum(m), tuple(-e for e in reversed(m)), -c)


def lead_term(terms, split):
    """Largest term of a nonzero element: ((comp, mono), coeff)."""
    best = max(terms, key=lambda t: term_key(t[0], t[1], split))
    return best, terms[best]


def add_scaled(u, c, m, v):
    """Return u + c * m * v as a fresh dict; inputs are not mutated."""
    out = dict(u)
    for (vc, vm), vcoef in v.items():
        key = (vc, mono_mul(m, vm))
        s = out.get(key)
        s = c * vcoef if s is None else s + c * vcoef
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def reduce_full(f, by_comp, split):
    """Full normal form of f against a monic basis.

    by_comp maps a component to a list of (lead_mono, terms) entries whose
    lead coefficient is 1.  Returns the remainder: no remaining term is
    divisible by any basis lead term.
    """
    work = dict(f)
    out = {}
    while work:
        (c, m) = max(work, key=lambda t: term_key(t[0], t[1], split))
        coef = work.pop((c, m))
        hit = None
        for bm, bt in by_comp.get(c, ()):
            if mono_divides(bm, m):
                hit = (bm, bt)
                break
        if hit is None:
            out[(c, m)] = coef
            continue
        bm, bt = hit
        q = mono_div(m, bm)
        for (tc, tm), tcoef in bt.items():
            if tc == c and tm == bm:
                continue  # lead term cancels against the popped term
            key = (tc, mono_mul(q, tm))
            s = work.get(key)
            s = -coef * tcoef if s is None else s - coef * tcoef
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return out
