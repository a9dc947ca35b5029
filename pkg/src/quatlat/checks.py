"""Named, runnable verification suites for the library's identities.

Each suite re-derives one structural fact the library leans on: the
scaling law for inner products of common-factor products, unit-orbit
orthogonality, one-sided factorization and unit migration, the eight
right divisors of a prescribed odd norm, the explicit orthogonal
basis, the generalized cross product memberships, coincidence of the
ideal and coprimality tests for embedded Gaussian pairs, association
of orthogonal primes, and the measured semiprime pair fraction.

`quatlat check all` runs every suite and prints one pass or fail line
each; a failing suite carries a counterexample or the measured
discrepancy in its detail text.  All random sweeps use fixed seeds so
repeated runs print identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from quatlat.core import (
    GaussianInteger,
    HurwitzQuaternion,
    I,
    J,
    K,
    ONE,
    UNITS,
    ZERO,
    inner_product,
    is_primitive,
    is_primitive_mod,
)
from quatlat.cross import cross3, gram_norm
from quatlat.euclid import is_multiple
from quatlat.factor import (
    ModelledFactorization,
    factor_modelled,
    igama_check,
    orthogonal_primes_check,
    pall_right_divisors,
    rational_factorize,
    semiprime_pair_fraction,
    unit_migration_equal,
)
from quatlat.lattice import (
    orthogonal_basis,
    orthogonality_census,
    representations,
)

BASIS = (ONE, I, J, K)
AXIS_NAMES = ("1", "i", "j", "k")


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one verification suite."""

    suite: str
    description: str
    passed: bool
    detail: str


def _random_quaternion(
    rng: random.Random, span: int, hurwitz: bool = False
) -> HurwitzQuaternion:
    """A quaternion with coordinates in [-span, span].

    With hurwitz=True, half the draws come out half-odd with the same
    coordinate magnitude.
    """
    if hurwitz and rng.random() < 0.5:
        return HurwitzQuaternion(
            *(2 * rng.randint(-span, span - 1) + 1 for _ in range(4))
        )
    return HurwitzQuaternion(*(2 * rng.randint(-span, span) for _ in range(4)))


def _random_nonzero(
    rng: random.Random, span: int, hurwitz: bool = False
) -> HurwitzQuaternion:
    while True:
        q = _random_quaternion(rng, span, hurwitz)
        if not q.is_zero:
            return q


def _random_primitive(rng: random.Random, span: int) -> HurwitzQuaternion:
    while True:
        q = _random_quaternion(rng, span)
        if not q.is_zero and is_primitive(q):
            return q


def _check_inner_product_scaling(bound):
    """(uv).(uw) = N(u) (v.w) on both sides, and the divisibility it buys.

    When two quaternions with integer coordinates share a common
    integer-coordinate divisor tau on one side, with integer-coordinate
    cofactors, their inner product must be divisible by N(tau).  The
    cofactor restriction matters: with half-odd cofactors the inner
    product can pick up a denominator of 2 and the divisibility fails.
    """
    rng = random.Random(7101)
    scaling = 0
    divisibility = 0
    for _ in range(400):
        u = _random_quaternion(rng, 30, hurwitz=True)
        v = _random_quaternion(rng, 30, hurwitz=True)
        w = _random_quaternion(rng, 30, hurwitz=True)
        expected = u.norm() * inner_product(v, w)
        left = inner_product(u * v, u * w)
        right = inner_product(v * u, w * u)
        if left != expected or right != expected:
            return False, (
                f"u={u}, v={v}, w={w}: (uv).(uw)={left}, "
                f"(vu).(wu)={right}, N(u)(v.w)={expected}"
            )
        scaling += 1
    for _ in range(400):
        tau = _random_nonzero(rng, 12)
        v = _random_quaternion(rng, 12)
        w = _random_quaternion(rng, 12)
        dot = inner_product(tau * v, tau * w)
        if dot.denominator != 1 or dot.numerator % tau.norm():
            return False, (
                f"tau={tau}, alpha={tau * v}, beta={tau * w}: "
                f"alpha.beta={dot} not divisible by N(tau)={tau.norm()}"
            )
        dot = inner_product(v * tau, w * tau)
        if dot.denominator != 1 or dot.numerator % tau.norm():
            return False, (
                f"tau={tau} on the right, alpha={v * tau}, beta={w * tau}: "
                f"alpha.beta={dot} not divisible by N(tau)={tau.norm()}"
            )
        divisibility += 1
    return True, (
        f"{scaling} scaling triples and {divisibility} divisibility"
        f" pairs verified"
    )


def _check_unit_axis_orthogonality(bound):
    """alpha*eps is orthogonal to alpha*delta for distinct basis units."""
    rng = random.Random(7102)
    checked = 0
    for _ in range(300):
        alpha = _random_quaternion(rng, 40, hurwitz=True)
        for a in range(4):
            for b in range(a + 1, 4):
                eps, delta = BASIS[a], BASIS[b]
                if inner_product(alpha * eps, alpha * delta) != 0:
                    return False, (
                        f"alpha={alpha}: (alpha*{AXIS_NAMES[a]})."
                        f"(alpha*{AXIS_NAMES[b]}) != 0"
                    )
                if inner_product(eps * alpha, delta * alpha) != 0:
                    return False, (
                        f"alpha={alpha}: ({AXIS_NAMES[a]}*alpha)."
                        f"({AXIS_NAMES[b]}*alpha) != 0"
                    )
                checked += 1
    return True, f"{checked} orthogonal unit-axis pairs verified"


def _check_orthogonal_primes(bound):
    """Orthogonal prime pairs of equal norm associate on at least one side."""
    lines = []
    for p in (3, 5, 7, 11, 13):
        rep = orthogonal_primes_check(p, bound=bound)
        lines.append(
            f"p={p}: {rep.orthogonal_pairs} orthogonal pairs "
            f"({rep.left_only_pairs} left-only, {rep.right_only_pairs} "
            f"right-only, {rep.both_sides_pairs} both), "
            f"{len(rep.failures)} unassociated"
        )
        if not rep.passed:
            return False, "; ".join(lines)
    return True, "; ".join(lines)


def _check_gaussian_ideal_coprimality(bound):
    """ideal_trivial and coprime agree for every small odd-norm pair."""
    checked = 0
    for rz in range(-4, 5):
        for iz in range(-4, 5):
            for rw in range(-4, 5):
                for iw in range(-4, 5):
                    z = GaussianInteger(rz, iz)
                    w = GaussianInteger(rw, iw)
                    if (z.norm() + w.norm()) % 2 == 0:
                        continue
                    res = igama_check(z, w)
                    if res.ideal_trivial != res.coprime:
                        return False, (
                            f"z={z}, w={w}: ideal_trivial="
                            f"{res.ideal_trivial}, coprime={res.coprime}, "
                            f"gcld norm {res.gcld_norm}"
                        )
                    checked += 1
    return True, f"{checked} odd-norm Gaussian pairs verified exhaustively"


def _check_unique_factorization(bound):
    """Modelled factorization works for every permutation of the norm.

    Each factorization multiplies back to alpha with the prescribed
    factor norms; rethreading units through the factors is recognized
    as migration, while changing a single factor alone is not.
    """
    rng = random.Random(7103)
    models = 0
    migrations = 0
    for _ in range(40):
        count = rng.choice((2, 3))
        norms = rng.sample((3, 5, 7, 11, 13), count)
        pieces = [
            rng.choice(representations(p, hurwitz=True, bound=bound))
            for p in norms
        ]
        alpha = pieces[0]
        for piece in pieces[1:]:
            alpha = alpha * piece
        if not is_primitive(alpha):
            return False, f"product {alpha} of distinct prime norms not primitive"
        base = None
        for model in permutations(norms):
            fac = factor_modelled(alpha, model)
            if fac.product() != alpha:
                return False, f"model {model}: factors of {alpha} do not multiply back"
            for factor, p in zip(fac.factors, model):
                if factor.norm() != p:
                    return False, (
                        f"model {model}: factor {factor} of {alpha} has "
                        f"norm {factor.norm()}, wanted {p}"
                    )
            if model == tuple(norms):
                base = fac
            models += 1
        twisted = list(base.factors)
        for idx in range(len(twisted) - 1):
            eps = rng.choice(UNITS)
            twisted[idx] = twisted[idx] * eps
            twisted[idx + 1] = eps.conjugate() * twisted[idx + 1]
        twin = ModelledFactorization(tuple(twisted), base.model)
        if not unit_migration_equal(base, twin):
            return False, f"unit migration through {alpha} not recognized"
        broken = list(base.factors)
        broken[0] = broken[0] * I
        lone = ModelledFactorization(tuple(broken), base.model)
        if unit_migration_equal(base, lone):
            return False, (
                f"one-sided unit twist of {alpha} wrongly accepted as migration"
            )
        migrations += 1
    return True, (
        f"{models} permutation models factored, {migrations} migration"
        f" twins recognized"
    )


def _check_eight_right_divisors(bound):
    """Primitive-mod-m quaternions have 8 left-associated right divisors."""
    rng = random.Random(7104)
    fixed = HurwitzQuaternion.from_coords(-1, 3, 1, -2)
    reports = []
    for m in (1, 3, 5, 15):
        reports.append(pall_right_divisors(fixed, m, bound=bound))
    random_checked = 0
    attempts = 0
    while random_checked < 25 and attempts < 400:
        attempts += 1
        alpha = _random_nonzero(rng, 6)
        odd_primes = [p for p in rational_factorize(alpha.norm()) if p % 2]
        if not odd_primes:
            continue
        m = rng.choice(odd_primes)
        if not is_primitive_mod(alpha, m):
            continue
        reports.append(pall_right_divisors(alpha, m, bound=bound))
        random_checked += 1
    for rep in reports:
        if rep.count != 8 or not rep.left_associated:
            return False, (
                f"alpha={rep.alpha}, m={rep.m}: {rep.count} right divisors"
                f" of norm {rep.m}, left-associated={rep.left_associated}"
            )
    return True, (
        f"{len(reports)} (alpha, m) pairs each produced 8 left-associated"
        f" right divisors"
    )


def _check_orthogonal_basis(bound):
    """The explicit basis spans exactly the orthogonal Lipschitz lattice.

    Every basis vector is orthogonal to alpha, the Gram determinant
    equals N(alpha), and an exhaustive box census finds no orthogonal
    vector outside the basis span.
    """
    rng = random.Random(7105)
    degenerate = [
        ONE,
        I,
        J,
        K,
        HurwitzQuaternion.from_coords(0, 0, 2, 3),
        HurwitzQuaternion.from_coords(4, 7, 0, 0),
    ]
    samples = degenerate + [_random_primitive(rng, 25) for _ in range(200)]
    for alpha in samples:
        basis = orthogonal_basis(alpha)
        betas = (basis.beta1, basis.beta2, basis.beta3)
        for beta in betas:
            if inner_product(alpha, beta) != 0:
                return False, f"alpha={alpha}: basis vector {beta} not orthogonal"
        gram = gram_norm(*betas)
        if gram != alpha.norm():
            return False, (
                f"alpha={alpha}: Gram determinant {gram} != N(alpha)"
                f"={alpha.norm()}"
            )
    census_points = 0
    census_samples = degenerate + [_random_primitive(rng, 6) for _ in range(12)]
    for alpha in census_samples:
        found, failures = orthogonality_census(alpha, 6)
        census_points += found
        if failures:
            return False, (
                f"alpha={alpha}: {failures} of {found} orthogonal box"
                f" vectors escape the basis span"
            )
    return True, (
        f"{len(samples)} bases verified; census matched"
        f" {census_points} orthogonal vectors over {len(census_samples)} boxes"
    )


def _check_cross_of_perpendiculars(bound):
    """alpha x beta x gamma is a two-sided multiple for perpendicular beta, gamma."""
    rng = random.Random(7106)
    checked = 0
    for _ in range(300):
        alpha = _random_primitive(rng, 12)
        basis = orthogonal_basis(alpha)
        betas = (basis.beta1, basis.beta2, basis.beta3)
        combo = []
        for _ in range(2):
            out = ZERO
            for beta in betas:
                out = out + HurwitzQuaternion.from_integer(rng.randint(-4, 4)) * beta
            combo.append(out)
        beta, gamma = combo
        product = cross3(alpha, beta, gamma)
        if not is_multiple(product, alpha, "left", lipschitz_cofactor=True):
            return False, (
                f"alpha={alpha}, beta={beta}, gamma={gamma}: "
                f"cross {product} has no Lipschitz right cofactor"
            )
        if not is_multiple(product, alpha, "right", lipschitz_cofactor=True):
            return False, (
                f"alpha={alpha}, beta={beta}, gamma={gamma}: "
                f"cross {product} has no Lipschitz left cofactor"
            )
        checked += 1
    return True, f"{checked} perpendicular triples gave two-sided multiples"


def _mu_coords(u: int, v: int, a: int, b: int, c: int, d: int):
    """Middle factor of the closed form for cross3(alpha e, alpha u e, v e).

    Row (u, v) gives mu with
    cross3(alpha*e, alpha*(u*e), v*e) = alpha * mu * e
    for every basis unit e, where alpha = a + b i + c j + d k.  The e
    factor, and not e cubed, is forced: right multiplication by a unit
    is a rotation of the coordinate space, and the determinant-defined
    cross product commutes with rotations, so the e = 1 column
    propagates to the others with a single right factor of e.
    """
    table = {
        (1, 0): (0, 0, d, -c),
        (1, 1): (0, 0, -c, -d),
        (1, 2): (0, 0, b, a),
        (1, 3): (0, 0, -a, b),
        (2, 0): (0, -d, 0, b),
        (2, 1): (0, c, 0, -a),
        (2, 2): (0, -b, 0, -d),
        (2, 3): (0, a, 0, c),
        (3, 0): (0, c, -b, 0),
        (3, 1): (0, d, a, 0),
        (3, 2): (0, -a, d, 0),
        (3, 3): (0, -b, -c, 0),
    }
    return table[(u, v)]


def _check_cross_of_left_multiples(bound):
    """cross3(alpha beta, alpha gamma, delta) lands in alpha L, not L alpha.

    The 48 closed-form identities for basis units are checked exactly,
    random quadruples confirm left membership, and a fixed quadruple
    witnesses that right membership genuinely fails.
    """
    rng = random.Random(7107)
    identities = 0
    for _ in range(50):
        alpha = _random_nonzero(rng, 20)
        a, b, c, d = alpha.coords
        for u in (1, 2, 3):
            for v in range(4):
                mu = HurwitzQuaternion.from_coords(*_mu_coords(u, v, a, b, c, d))
                for eps in BASIS:
                    lhs = cross3(alpha * eps, alpha * (BASIS[u] * eps), BASIS[v] * eps)
                    rhs = alpha * mu * eps
                    if lhs != rhs:
                        return False, (
                            f"alpha={alpha}, u={AXIS_NAMES[u]}, "
                            f"v={AXIS_NAMES[v]}, e={eps}: cross gave {lhs}, "
                            f"closed form gives {rhs}"
                        )
                    identities += 1
    members = 0
    for _ in range(400):
        alpha = _random_nonzero(rng, 10)
        beta = _random_quaternion(rng, 10)
        gamma = _random_quaternion(rng, 10)
        delta = _random_quaternion(rng, 10)
        product = cross3(alpha * beta, alpha * gamma, delta)
        if not is_multiple(product, alpha, "left", lipschitz_cofactor=True):
            return False, (
                f"alpha={alpha}, beta={beta}, gamma={gamma}, delta={delta}: "
                f"cross {product} not a left multiple of alpha"
            )
        members += 1
    alpha = HurwitzQuaternion.from_coords(1, 2, 0, 0)
    beta = HurwitzQuaternion.from_coords(1, 1, 0, 0)
    gamma = HurwitzQuaternion.from_coords(1, 0, 1, 0)
    witness = cross3(alpha * beta, alpha * gamma, beta)
    if not is_multiple(witness, alpha, "left", lipschitz_cofactor=True):
        return False, f"witness {witness} unexpectedly escaped alpha L"
    if is_multiple(witness, alpha, "right", lipschitz_cofactor=True):
        return False, (
            f"witness {witness} for alpha={alpha} unexpectedly lies in"
            f" L alpha; no one-sided witness"
        )
    return True, (
        f"{identities} closed-form identities and {members} random left"
        f" memberships verified; {witness} witnesses the one-sidedness"
    )


def _check_pair_fraction(bound):
    """Measured nontrivial-gcd fractions against the predicted closed form."""
    lines = []
    passed = True
    for p, q in ((3, 5), (3, 7), (5, 7)):
        for convention in ("right", "left", "either"):
            rep = semiprime_pair_fraction(p, q, convention, bound=bound)
            ok = rep.matches_prediction
            passed = passed and ok
            lines.append(
                f"n={rep.n} {convention}: measured {rep.fraction},"
                f" predicted {rep.predicted_fraction}"
                f" ({'match' if ok else 'MISMATCH'})"
            )
    return passed, "; ".join(lines)


SUITES = (
    (
        "thm-3-2",
        "inner products scale by the norm of a common factor",
        _check_inner_product_scaling,
    ),
    (
        "cor-3-3",
        "basis-unit multiples of one quaternion stay orthogonal",
        _check_unit_axis_orthogonality,
    ),
    (
        "thm-3-4",
        "orthogonal equal-norm primes associate on at least one side",
        _check_orthogonal_primes,
    ),
    (
        "thm-3-5",
        "trivial left gcd of (i*gamma, gamma) matches coprimality in Z[i]",
        _check_gaussian_ideal_coprimality,
    ),
    (
        "thm-2-1",
        "modelled factorizations exist and are unique up to unit migration",
        _check_unique_factorization,
    ),
    (
        "thm-2-2",
        "eight left-associated right divisors per odd norm divisor",
        _check_eight_right_divisors,
    ),
    (
        "lemma-4-2",
        "explicit rank-3 basis of the orthogonal lattice, Gram = N(alpha)",
        _check_orthogonal_basis,
    ),
    (
        "thm-4-3",
        "cross with two perpendiculars is a two-sided multiple",
        _check_cross_of_perpendiculars,
    ),
    (
        "thm-4-4",
        "cross of left multiples is a left multiple, one-sidedly",
        _check_cross_of_left_multiples,
    ),
    (
        "frac-1",
        "semiprime pair fraction matches the predicted closed form",
        _check_pair_fraction,
    ),
)

SUITE_IDS = tuple(suite for suite, _, _ in SUITES)


def run_check(suite: str, bound: int | None = None) -> CheckOutcome:
    """Run one named suite; exceptions become failures, not crashes."""
    for name, description, fn in SUITES:
        if name == suite:
            break
    else:
        raise KeyError(f"unknown check suite {suite!r}")
    try:
        passed, detail = fn(bound)
    except Exception as exc:
        return CheckOutcome(name, description, False, f"raised {type(exc).__name__}: {exc}")
    return CheckOutcome(name, description, passed, detail)


def run_all(bound: int | None = None) -> list[CheckOutcome]:
    """Run every suite in declaration order."""
    return [run_check(name, bound) for name in SUITE_IDS]
