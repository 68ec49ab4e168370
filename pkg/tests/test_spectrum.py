import json
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

import oracles
from jordanmax.errors import PreconditionError
from jordanmax.spectrum import (
    SpectrumPoly,
    alpha_dprime,
    alpha_prime,
    geometric_sum,
    parse_exponents,
    spectrum_homogeneous,
    spectrum_yomdin,
)

FROZEN = json.loads((Path(__file__).parent / "frozen_oracles.json").read_text())
F = Fraction


def t_ppp_closed_form(p):
    out = SpectrumPoly({1: 1, 2: -2})
    for l in range(1, p + 1):
        out = out + SpectrumPoly.monomial(1 + F(l, p), 3)
    return out


def test_cubic_with_three_nodes():
    assert spectrum_homogeneous(2, 3, [1, 1, 1]) == SpectrumPoly({1: 1, 2: -2})


@pytest.mark.parametrize("p", range(4, 13))
def test_t_ppp(p):
    sp_ = spectrum_yomdin(2, 3, p - 3, [1, 1, 1])
    assert sp_ == t_ppp_closed_form(p)
    assert sp_.is_symmetric(3)
    assert sp_.total() == 3 * p - 1 == FROZEN["t_ppp_milnor"][str(p)]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_smooth_homogeneous_total_is_milnor(d):
    x, y, z = sp.symbols("x y z")
    s = spectrum_homogeneous(2, d)
    assert s.total() == (d - 1) ** 3 == oracles.milnor_number(x**d + y**d + z**d, (x, y, z))
    assert s.is_symmetric(3)


def test_plane_curve_ordinary_points():
    # n = 1: x^d + y^d has spectrum sum t^{(i+j)/d}
    s = spectrum_homogeneous(1, 3)
    assert s == SpectrumPoly({F(2, 3): 1, 1: 2, F(4, 3): 1})


def test_alpha_maps():
    assert alpha_prime(1, 3) == F(4, 3)
    assert alpha_prime(F(1, 2), 4) == F(3, 4)
    assert alpha_dprime(1, 3, 0) == alpha_prime(1, 3)
    assert alpha_dprime(1, 3, 2) == F(6, 5)
    with pytest.raises(PreconditionError):
        alpha_dprime(1, 3, -1)
    with pytest.raises(PreconditionError):
        alpha_prime(1, 0)


def test_preconditions():
    with pytest.raises(PreconditionError):
        spectrum_homogeneous(0, 3)
    with pytest.raises(PreconditionError):
        spectrum_homogeneous(2, 1)
    with pytest.raises(PreconditionError):
        spectrum_yomdin(2, 3, -1)


def test_poly_arithmetic():
    a = geometric_sum(0, 2, 3)
    assert a.items() == [(0, 1), (F(1, 3), 1), (F(2, 3), 1)]
    assert (a - a) == SpectrumPoly()
    assert (a * 2).total() == 6
    assert (a**2)[F(2, 3)] == 3
    assert a.shift(1)[F(4, 3)] == 1
    assert repr(SpectrumPoly()) == "0"


def test_parse_exponents():
    assert parse_exponents("1, 1/2;5/6") == [1, F(1, 2), F(5, 6)]
    assert parse_exponents("") == []
    with pytest.raises(PreconditionError):
        parse_exponents("x")
