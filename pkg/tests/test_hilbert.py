"""Hilbert series, Samuel functions, and the fitted Samuel polynomial."""

from math import comb

import pytest

from homdeg import (
    Algebra,
    PolyRing,
    SamuelFunction,
    hilbert_coefficients,
    hilbert_series,
    multiplicity,
)
from homdeg.errors import SampleCapError


def test_series_hypersurface():
    # k[x,y]/(xy): series (1 - t^2)/(1-t)^2 = (1 + t)/(1 - t)
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    pres = Algebra(ring, [x * y]).as_module()
    num, n = hilbert_series(pres)
    assert n == 2
    assert num == {0: 1, 2: -1}


def test_series_finite_length():
    ring = PolyRing(("y",))
    (y,) = ring.gens()
    pres = Algebra(ring, [y**3]).as_module()
    assert pres.length() == 3  # 1, y, y^2
    assert pres.dim() == 0


def test_samuel_function_polynomial_ring():
    # l(S/m^{n+1}) = C(n+3, 3) in three variables
    ring = PolyRing(("x", "y", "z"))
    pres = Algebra(ring, ()).as_module()
    f = SamuelFunction(pres, list(ring.gens()))
    for n in range(5):
        assert f(n) == comb(n + 3, 3)


def test_samuel_function_nonlinear_generators():
    # Q = (x^2, y): l(S/Q^{n+1}) grows like 2(n+1) in two variables
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    pres = Algebra(ring, ()).as_module()
    f = SamuelFunction(pres, [x**2, y])
    # S/(x^2, y) has length 2; the function is the full Samuel function
    assert f(0) == 2
    e = hilbert_coefficients(pres, [x**2, y])
    assert e[0] == 2  # e(Q) = 2


def test_sample_cap_enforced():
    ring = PolyRing(("x",))
    pres = Algebra(ring, ()).as_module()
    f = SamuelFunction(pres, [ring.var(0)], sample_cap=3)
    with pytest.raises(SampleCapError):
        f(3)


def test_coefficients_polynomial_ring():
    ring = PolyRing(("x", "y"))
    pres = Algebra(ring, ()).as_module()
    e = hilbert_coefficients(pres, list(ring.gens()))
    assert e.s == 2
    assert e.e == (1, 0, 0)
    assert e.postulation == 0
    assert multiplicity(pres, list(ring.gens())) == 1


def test_coefficients_low_depth():
    # A = k[x,y]/(x^2, xy), Q = (y): e = (1, -1), exact from n = 0
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    pres = Algebra(ring, [x**2, x * y]).as_module()
    e = hilbert_coefficients(pres, [y])
    assert e.e == (1, -1)
    assert e.value_at(4) == e.samples[4]


def test_coefficients_multiplicity_two():
    # A = k[x,y]/(xy), Q = (x - y): l(A/Q^{n+1}) = 2(n+1)
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    pres = Algebra(ring, [x * y]).as_module()
    e = hilbert_coefficients(pres, [x - y])
    assert e.e == (2, 0)
    assert e.postulation == 0


def test_coefficients_dim_zero():
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    pres = Algebra(ring, [x**2, x * y, y**2]).as_module()
    e = hilbert_coefficients(pres, [x, y])
    assert e.s == 0
    assert e.e == (3,)


def test_samuel_values_match_koszul_h0():
    # l(M/QM) from the Samuel table equals l(H_0) of the Koszul complex
    from homdeg import koszul_homology_lengths

    ring = PolyRing(("x", "y", "z"))
    x, y, z = ring.gens()
    pres = Algebra(ring, [x * y, x * z]).as_module()
    q = [x - y, z]
    f = SamuelFunction(pres, q)
    assert f(0) == koszul_homology_lengths(pres, q)[0]
