"""Orthogonal lattices of primitive quaternions and norm-sphere
enumeration.

The census oracle is a plain four-deep loop over the coordinate box
computing dot products directly, so the lattice kernel is checked
against an implementation that shares none of its code.
"""

import random
from itertools import product

import pytest

from quatlat import (
    OMEGA,
    HurwitzQuaternion,
    BoundExceeded,
    EvenNorm,
    NotLipschitz,
    NotPrimitive,
    PreconditionViolated,
    ZeroInput,
    ZERO,
    enumeration_bound,
    gram_norm,
    in_orthogonal_lattice,
    inner_product,
    orthogonal_basis,
    orthogonality_census,
    representation_count,
    representations,
)
from conftest import random_primitive


def _brute_orthogonal_count(alpha: HurwitzQuaternion, q_bound: int) -> int:
    a, b, c, d = alpha.coords
    span = range(-q_bound, q_bound + 1)
    return sum(
        1
        for x, y, z, t in product(span, repeat=4)
        if a * x + b * y + c * z + d * t == 0
    )


def test_basis_rows_are_orthogonal_to_alpha():
    rng = random.Random(4101)
    for _ in range(300):
        alpha = random_primitive(rng, 30)
        basis = orthogonal_basis(alpha)
        for beta in (basis.beta1, basis.beta2, basis.beta3):
            assert inner_product(alpha, beta) == 0
        assert basis.rows() == (basis.beta1.coords, basis.beta2.coords, basis.beta3.coords)


def test_basis_gram_determinant_equals_norm():
    # The orthogonal lattice of a primitive alpha has covolume N(alpha)
    # inside its hyperplane.
    rng = random.Random(4102)
    for _ in range(300):
        alpha = random_primitive(rng, 30)
        basis = orthogonal_basis(alpha)
        assert gram_norm(basis.beta1, basis.beta2, basis.beta3) == alpha.norm()


def test_basis_input_validation():
    with pytest.raises(ZeroInput):
        orthogonal_basis(ZERO)
    with pytest.raises(NotLipschitz):
        orthogonal_basis(OMEGA)
    with pytest.raises(NotPrimitive):
        orthogonal_basis(HurwitzQuaternion.from_coords(2, 2, 0, 0))
    with pytest.raises(NotPrimitive):
        orthogonal_basis(HurwitzQuaternion.from_coords(0, 3, -3, 6))


def test_degenerate_coordinate_patterns_are_covered():
    cases = [
        HurwitzQuaternion.from_coords(0, 0, 1, 2),
        HurwitzQuaternion.from_coords(0, 0, 0, 1),
        HurwitzQuaternion.from_coords(3, 4, 0, 0),
        HurwitzQuaternion.from_coords(1, 0, 0, 0),
        HurwitzQuaternion.from_coords(0, 1, 0, 0),
        HurwitzQuaternion.from_coords(2, 3, 0, 5),
        HurwitzQuaternion.from_coords(0, 5, 7, 0),
    ]
    for alpha in cases:
        basis = orthogonal_basis(alpha)
        for beta in (basis.beta1, basis.beta2, basis.beta3):
            assert inner_product(alpha, beta) == 0
        assert gram_norm(basis.beta1, basis.beta2, basis.beta3) == alpha.norm()
        count, failures = orthogonality_census(alpha, 4)
        assert failures == 0
        assert count == _brute_orthogonal_count(alpha, 4)


def test_census_matches_brute_force_count():
    rng = random.Random(4103)
    for _ in range(20):
        alpha = random_primitive(rng, 6)
        count, failures = orthogonality_census(alpha, 4)
        assert failures == 0
        assert count == _brute_orthogonal_count(alpha, 4)


def test_membership_examples():
    alpha = HurwitzQuaternion.from_coords(1, 2, 0, 0)
    assert in_orthogonal_lattice(alpha, HurwitzQuaternion.from_coords(2, -1, 0, 0))
    assert in_orthogonal_lattice(alpha, HurwitzQuaternion.from_coords(0, 0, 1, 0))
    assert in_orthogonal_lattice(alpha, ZERO)
    assert not in_orthogonal_lattice(alpha, HurwitzQuaternion.from_coords(1, 0, 0, 0))
    assert not in_orthogonal_lattice(alpha, OMEGA)


def test_membership_agrees_with_inner_product():
    rng = random.Random(4104)
    for _ in range(200):
        alpha = random_primitive(rng, 10)
        q = HurwitzQuaternion.from_coords(*(rng.randint(-12, 12) for _ in range(4)))
        assert in_orthogonal_lattice(alpha, q) == (inner_product(alpha, q) == 0)


def test_integer_combinations_of_basis_are_members():
    rng = random.Random(4105)
    for _ in range(200):
        alpha = random_primitive(rng, 12)
        basis = orthogonal_basis(alpha)
        q = sum(
            (rng.randint(-6, 6) * beta for beta in (basis.beta1, basis.beta2, basis.beta3)),
            ZERO,
        )
        assert in_orthogonal_lattice(alpha, q)


def test_representation_counts_for_small_norms():
    assert len(representations(1)) == 8
    assert len(representations(1, hurwitz=True)) == 24
    assert len(representations(2)) == 24
    assert len(representations(3)) == 32
    assert len(representations(3, hurwitz=True)) == 32 + 64
    assert len(representations(4)) == 24


def test_representations_are_sorted_unique_and_on_sphere():
    for n in (1, 2, 5, 9, 15, 25):
        for hurwitz in (False, True):
            reps = representations(n, hurwitz=hurwitz)
            doubles = [u.doubled for u in reps]
            assert doubles == sorted(doubles)
            assert len(set(doubles)) == len(doubles)
            for u in reps:
                assert u.norm() == n
                if not hurwitz:
                    assert u.is_lipschitz
            if not hurwitz:
                assert all(u.is_lipschitz for u in reps)


def test_hurwitz_flag_only_adds_half_odd_elements():
    for n in (3, 5, 15):
        plain = set(u.doubled for u in representations(n))
        full = representations(n, hurwitz=True)
        extra = [u for u in full if u.doubled not in plain]
        assert all(not u.is_lipschitz for u in extra)
        assert len(full) == len(plain) + len(extra)
    # Even norms never have half-odd representations.
    assert representations(4, hurwitz=True) == representations(4)


def test_representation_count_is_eight_sigma():
    def sigma(n: int) -> int:
        return sum(d for d in range(1, n + 1) if n % d == 0)

    for n in range(1, 120, 2):
        assert representation_count(n) == 8 * sigma(n)


def test_representation_count_rejects_even_norms():
    with pytest.raises(EvenNorm):
        representation_count(6)


def test_representations_input_validation():
    with pytest.raises(PreconditionViolated):
        representations(0)
    with pytest.raises(BoundExceeded):
        representations(50, bound=49)
    assert len(representations(50, bound=50)) > 0


def test_enumeration_bound_environment_override(monkeypatch):
    monkeypatch.delenv("QUATLAT_ENUM_BOUND", raising=False)
    assert enumeration_bound() == 10000
    monkeypatch.setenv("QUATLAT_ENUM_BOUND", "64")
    assert enumeration_bound() == 64
    with pytest.raises(BoundExceeded):
        representations(65)
    assert len(representations(64)) > 0
    monkeypatch.setenv("QUATLAT_ENUM_BOUND", "abc")
    with pytest.raises(PreconditionViolated):
        enumeration_bound()
    monkeypatch.setenv("QUATLAT_ENUM_BOUND", "0")
    with pytest.raises(PreconditionViolated):
        enumeration_bound()


def test_explicit_bound_beats_environment(monkeypatch):
    monkeypatch.setenv("QUATLAT_ENUM_BOUND", "10")
    assert len(representations(30, bound=30)) > 0
    with pytest.raises(BoundExceeded):
        representations(30)
