"""One-sided division, Bezout gcds, cofactors, and Gaussian gcds.

The division contract under test: divide(a, b, "right") solves
a = b * q + r, divide(a, b, "left") solves a = q * b + r, with
2 * N(r) <= N(b) for Hurwitz quotients and N(r) <= N(b) when the
quotient is restricted to Lipschitz form.
"""

import random

import pytest

from quatlat import (
    ONE,
    UNITS,
    ZERO,
    BothZero,
    DivisionByZero,
    GaussianInteger,
    HurwitzQuaternion,
    I,
    J,
    K,
    canonical_associate,
    cofactor,
    divide,
    gaussian_gcd,
    gcd,
    is_associate,
    is_multiple,
)
from conftest import random_hurwitz, random_lipschitz, random_nonzero


def test_right_division_invariant():
    rng = random.Random(2101)
    for _ in range(500):
        a = random_hurwitz(rng, 40)
        b = random_nonzero(rng, 20, hurwitz=True)
        res = divide(a, b, "right")
        assert res.side == "right"
        assert a == b * res.quotient + res.remainder
        assert 2 * res.remainder.norm() <= b.norm()


def test_left_division_invariant():
    rng = random.Random(2102)
    for _ in range(500):
        a = random_hurwitz(rng, 40)
        b = random_nonzero(rng, 20, hurwitz=True)
        res = divide(a, b, "left")
        assert res.side == "left"
        assert a == res.quotient * b + res.remainder
        assert 2 * res.remainder.norm() <= b.norm()


def test_lipschitz_only_division_keeps_integer_quotient():
    rng = random.Random(2103)
    for _ in range(400):
        a = random_lipschitz(rng, 40)
        b = random_nonzero(rng, 20)
        for side in ("left", "right"):
            res = divide(a, b, side, lipschitz_only=True)
            assert res.quotient.is_lipschitz
            assert res.remainder.norm() <= b.norm()
            if side == "right":
                assert a == b * res.quotient + res.remainder
            else:
                assert a == res.quotient * b + res.remainder


def test_exact_division_leaves_zero_remainder():
    rng = random.Random(2104)
    for _ in range(200):
        b = random_nonzero(rng, 15, hurwitz=True)
        q = random_hurwitz(rng, 15)
        res = divide(b * q, b, "right")
        assert res.remainder == ZERO and res.quotient == q
        res = divide(q * b, b, "left")
        assert res.remainder == ZERO and res.quotient == q


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        divide(ONE, ZERO, "right")
    with pytest.raises(ZeroDivisionError):
        divide(ONE, ZERO, "left")


def test_division_tie_breaks_deterministically():
    # Whatever candidate wins, reruns win identically.
    rng = random.Random(2105)
    for _ in range(200):
        a = random_hurwitz(rng, 30)
        b = random_nonzero(rng, 10, hurwitz=True)
        first = divide(a, b, "right")
        again = divide(a, b, "right")
        assert first.quotient == again.quotient
        assert first.remainder == again.remainder


def test_right_gcd_bezout_witnesses():
    rng = random.Random(2106)
    for _ in range(300):
        a = random_hurwitz(rng, 25)
        b = random_hurwitz(rng, 25)
        if a.is_zero and b.is_zero:
            continue
        res = gcd(a, b, "right")
        g = res.gcd
        assert res.x * a + res.y * b == g
        assert is_multiple(a, g, "right")
        assert is_multiple(b, g, "right")


def test_left_gcd_bezout_witnesses():
    rng = random.Random(2107)
    for _ in range(300):
        a = random_hurwitz(rng, 25)
        b = random_hurwitz(rng, 25)
        if a.is_zero and b.is_zero:
            continue
        res = gcd(a, b, "left")
        g = res.gcd
        assert a * res.x + b * res.y == g
        assert is_multiple(a, g, "left")
        assert is_multiple(b, g, "left")


def test_gcd_is_canonical_and_order_insensitive():
    rng = random.Random(2108)
    for _ in range(150):
        a = random_nonzero(rng, 20, hurwitz=True)
        b = random_nonzero(rng, 20, hurwitz=True)
        right = gcd(a, b, "right").gcd
        # A right gcd is determined up to a left unit; the canonical
        # pick must erase that freedom.
        assert canonical_associate(right, "left")[0] == right
        assert gcd(b, a, "right").gcd == right
        left = gcd(a, b, "left").gcd
        assert canonical_associate(left, "right")[0] == left
        assert gcd(b, a, "left").gcd == left


def test_gcd_absorbs_common_factor():
    rng = random.Random(2109)
    for _ in range(150):
        d = random_nonzero(rng, 8, hurwitz=True)
        u = random_hurwitz(rng, 8)
        v = random_hurwitz(rng, 8)
        if (u * d).is_zero and (v * d).is_zero:
            continue
        g = gcd(u * d, v * d, "right").gcd
        assert is_multiple(g, d, "right")
        g = gcd(d * u, d * v, "left").gcd
        assert is_multiple(g, d, "left")


def test_gcd_with_zero_and_both_zero():
    a = HurwitzQuaternion.from_coords(1, 1, 1, 0)
    res = gcd(a, ZERO, "right")
    assert is_associate(res.gcd, a, "left")
    assert res.x * a + res.y * ZERO == res.gcd
    with pytest.raises(BothZero):
        gcd(ZERO, ZERO, "right")


def test_coprime_pair_reaches_a_unit():
    res = gcd(HurwitzQuaternion.from_coords(1, 1, 0, 0), HurwitzQuaternion.from_coords(1, 0, 1, 0), "right")
    assert res.gcd.norm() == 1 or res.gcd.norm() == 2
    res = gcd(HurwitzQuaternion.from_integer(3), HurwitzQuaternion.from_integer(5), "right")
    assert res.gcd.is_unit


def test_cofactor_recovers_exact_quotients():
    rng = random.Random(2110)
    for _ in range(300):
        d = random_nonzero(rng, 12, hurwitz=True)
        m = random_hurwitz(rng, 12)
        assert cofactor(d * m, d, "left") == m
        assert cofactor(m * d, d, "right") == m


def test_cofactor_returns_none_off_lattice():
    rng = random.Random(2111)
    misses = 0
    for _ in range(300):
        d = random_nonzero(rng, 8)
        m = random_lipschitz(rng, 8)
        bumped = d * m + ONE
        got = cofactor(bumped, d, "left")
        if got is None:
            misses += 1
        else:
            assert d * got == bumped
    assert misses > 200


def test_is_multiple_distinguishes_lipschitz_cofactors():
    d = HurwitzQuaternion.from_coords(1, 1, 0, 0)
    omega = HurwitzQuaternion(1, 1, 1, 1)
    a = d * omega
    assert a.is_lipschitz
    assert is_multiple(a, d, "left")
    assert not is_multiple(a, d, "left", lipschitz_cofactor=True)
    twice = d * HurwitzQuaternion.from_coords(1, 1, 1, 1)
    assert is_multiple(twice, d, "left", lipschitz_cofactor=True)


def test_is_multiple_sides_differ():
    alpha = HurwitzQuaternion.from_coords(1, 2, 0, 0)
    target = HurwitzQuaternion.from_coords(0, 0, -8, 4)
    assert is_multiple(target, alpha, "left", lipschitz_cofactor=True)
    assert not is_multiple(target, alpha, "right")


def test_unit_divides_everything():
    rng = random.Random(2112)
    for _ in range(100):
        a = random_hurwitz(rng, 20)
        eps = UNITS[rng.randrange(24)]
        assert is_multiple(a, eps, "left")
        assert is_multiple(a, eps, "right")


def test_gaussian_gcd_known_values():
    assert gaussian_gcd(GaussianInteger(2, 1), GaussianInteger(1, 3)) == GaussianInteger(2, 1)
    assert gaussian_gcd(GaussianInteger(4, 0), GaussianInteger(6, 0)) == GaussianInteger(2, 0)
    assert gaussian_gcd(GaussianInteger(3, 0), GaussianInteger(5, 0)) == GaussianInteger(1, 0)
    assert gaussian_gcd(GaussianInteger(0, 5), GaussianInteger(5, 0)) == GaussianInteger(5, 0)


def test_gaussian_gcd_divides_and_is_canonical():
    rng = random.Random(2113)

    def divides(g: GaussianInteger, z: GaussianInteger) -> bool:
        n = g.norm()
        prod = z * g.conjugate()
        return prod.re % n == 0 and prod.im % n == 0

    for _ in range(300):
        z = GaussianInteger(rng.randint(-30, 30), rng.randint(-30, 30))
        w = GaussianInteger(rng.randint(-30, 30), rng.randint(-30, 30))
        if z == GaussianInteger(0, 0) and w == GaussianInteger(0, 0):
            continue
        g = gaussian_gcd(z, w)
        assert divides(g, z) and divides(g, w)
        assert g.re > 0 and g.im >= 0  # half-open first quadrant
        assert gaussian_gcd(w, z) == g
        scaled = gaussian_gcd(z * GaussianInteger(0, 1), w * GaussianInteger(0, 1))
        assert scaled == g


def test_division_handles_basis_vectors():
    res = divide(HurwitzQuaternion.from_coords(7, 2, -1, 0), HurwitzQuaternion.from_coords(1, 1, 1, 1), "right")
    b = HurwitzQuaternion.from_coords(1, 1, 1, 1)
    assert HurwitzQuaternion.from_coords(7, 2, -1, 0) == b * res.quotient + res.remainder
    assert 2 * res.remainder.norm() <= b.norm()
    for unit in (I, J, K):
        exact = divide(unit, unit, "left")
        assert exact.quotient == ONE and exact.remainder == ZERO
