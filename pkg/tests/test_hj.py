from fractions import Fraction
from math import gcd

import pytest

from ratblow.hj import (HJError, HJFraction, WahlParams, dual_chain, hj_expand,
                        hj_value, lens_boundary, meridian_coefficients,
                        plumbing_matrix, recognize_wahl, wahl_chain,
                        wahl_extensions)
from ratblow.zlinalg import determinant


def continued_fraction_value(chain):
    """Independent bottom-up evaluation with exact rationals."""
    val = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        val = b - 1 / val
    return val


def test_expand_36_5():
    assert hj_expand(36, 5) == [8, 2, 2, 2, 2]


def test_expand_12100_7369():
    assert hj_expand(12100, 7369) == [2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3]


def test_expand_trivial():
    assert hj_expand(2, 1) == [2]


def test_expand_rejects_bad_fraction():
    with pytest.raises(HJError):
        hj_expand(5, 36)
    with pytest.raises(HJError):
        hj_expand(6, 3)


def test_value_examples():
    assert hj_value([8, 2, 2, 2, 2]) == HJFraction(36, 5)
    assert hj_value([4]) == HJFraction(4, 1)
    assert hj_value([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3]) == HJFraction(12100, 7369)
    v = continued_fraction_value([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3])
    assert (v.numerator, v.denominator) == (12100, 7369)


def test_roundtrip_all_coprime_up_to_200():
    for p in range(2, 201):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            chain = hj_expand(p, q)
            assert all(b >= 2 for b in chain)
            assert hj_value(chain) == HJFraction(p, q)
            v = continued_fraction_value(chain)
            assert (v.numerator, v.denominator) == (p, q)


def test_wahl_chain_examples():
    assert wahl_chain(6, 1) == [8, 2, 2, 2, 2]
    assert wahl_chain(110, 67) == [2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3]
    assert wahl_chain(2, 1) == [4]


def test_wahl_params_validation():
    with pytest.raises(HJError):
        WahlParams(4, 2)  # not coprime
    with pytest.raises(HJError):
        WahlParams(3, 3)


def test_recognize_wahl():
    assert recognize_wahl([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3]) == WahlParams(110, 67)
    assert recognize_wahl([8, 2, 2, 2, 2]) == WahlParams(6, 1)
    assert recognize_wahl([2, 2]) is None  # value 3/2, 3 is not a square
    assert recognize_wahl([4]) == WahlParams(2, 1)
    assert recognize_wahl([3, 3]) is None  # value 8/3


def test_recognize_round_trips_parameters():
    for n in range(2, 30):
        for a in range(1, n):
            if gcd(n, a) != 1:
                continue
            assert recognize_wahl(wahl_chain(n, a)) == WahlParams(n, a)


def test_meridian_examples():
    m = meridian_coefficients([8, 2, 2, 2, 2])
    assert m.coefficients == (1, 8, 15, 22, 29)
    assert m.order == 36
    m = meridian_coefficients([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3])
    assert m.coefficients == (1, 2, 5, 23, 156, 289, 422, 977, 1532, 2087, 4729)
    assert m.order == 12100
    assert meridian_coefficients([4]) == meridian_coefficients([4])
    assert meridian_coefficients([4]).coefficients == (1,)
    assert meridian_coefficients([4]).order == 4


def test_meridian_order_is_numerator():
    for p in range(2, 201):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            chain = hj_expand(p, q)
            m = meridian_coefficients(chain)
            assert m.order == p
            assert gcd(m.coefficients[-1], p) == 1


def test_meridian_rows_annihilated():
    # the plumbing rows pair to 0 with the meridian coefficients mod p
    for chain in ([8, 2, 2, 2, 2], [2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3], [4]):
        m = meridian_coefficients(chain)
        c = m.coefficients
        rows = plumbing_matrix(chain).data
        for row in rows:
            assert sum(a * b for a, b in zip(row, c)) % m.order == 0
        k = len(chain)
        for j in range(1, k - 1):
            assert c[j - 1] - chain[j] * c[j] + c[j + 1] == 0


def test_dual_chain():
    assert dual_chain([8, 2, 2, 2, 2]) == [2, 2, 2, 2, 2, 2, 6]
    assert dual_chain([2]) == [2]
    assert dual_chain([4]) == [2, 2, 2]


def test_dual_is_involution():
    for p in range(2, 80):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            chain = hj_expand(p, q)
            assert dual_chain(dual_chain(chain)) == chain


def test_lens_boundary():
    lb = lens_boundary([8, 2, 2, 2, 2])
    assert (lb.plumbing.p, lb.plumbing.q) == (36, 5)
    assert lb.plumbing.side == "plumbing-boundary"
    assert (lb.complement.p, lb.complement.q) == (36, -5)
    assert lb.complement.normalized() == (36, 31)
    assert str(lb.complement) == "L(36, -5)"

    lb = lens_boundary([2])
    assert lb.plumbing.normalized() == (2, 1)
    assert lb.complement.normalized() == (2, 1)

    lb = lens_boundary([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3])
    assert (lb.plumbing.p, lb.plumbing.q) == (12100, 7369)


def test_plumbing_determinant_is_numerator():
    for p in range(2, 60):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            chain = hj_expand(p, q)
            assert abs(determinant(plumbing_matrix(chain))) == p


def test_wahl_closure_under_extension_moves():
    frontier = [[4]]
    seen = set()
    for _ in range(6):
        nxt = []
        for chain in frontier:
            for ext in wahl_extensions(chain):
                key = tuple(ext)
                if key in seen:
                    continue
                seen.add(key)
                assert recognize_wahl(ext) is not None, ext
                nxt.append(ext)
        frontier = nxt
    assert (8, 2, 2, 2, 2) in seen


def test_chain_validation():
    with pytest.raises(HJError):
        hj_value([1, 2])
    with pytest.raises(HJError):
        hj_value([])
