"""Generalized cross products and their exact norm identities.

In n-space the cross product of n-1 integer vectors is the formal
cofactor expansion along a final row of basis vectors, so it is the
unique vector whose inner product with any v equals the determinant of
the n-1 vectors stacked over v.  Sign convention in 4-space, reading
axes as (1, i, j, k): cross of (1, i, j) is k and cross of (i, j, k)
is -1.

For Hurwitz quaternion arguments the product is computed on doubled
coordinates and divided back by 8; with three integer-coordinate
(Lipschitz) inputs the result is again Lipschitz, while half-odd
inputs may land outside the order, in which case a RationalQuaternion
carrying the exact denominator is returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from quatlat import _kernel
from quatlat.core import HurwitzQuaternion
from quatlat.errors import DimensionMismatch, NotLipschitz

__all__ = [
    "RationalQuaternion",
    "cross_general",
    "cross3",
    "triple_scalar",
    "gram_norm",
    "expanded_norm",
    "det_int",
]

_BAREISS_THRESHOLD = 5


def _det_cofactor(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    rest = m[1:]
    for col in range(n):
        if m[0][col] == 0:
            continue
        sub = [row[:col] + row[col + 1 :] for row in rest]
        term = m[0][col] * _det_cofactor(sub)
        total += term if col % 2 == 0 else -term
    return total


def _det_bareiss(m: list[list[int]]) -> int:
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def det_int(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Plain cofactor expansion up to 5x5, fraction-free (Bareiss)
    elimination above that to keep intermediate growth polynomial.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    if n <= _BAREISS_THRESHOLD:
        return _det_cofactor(m)
    return _det_bareiss(m)


def _as_int_vector(v, length: int | None = None):
    if isinstance(v, HurwitzQuaternion):
        vec = v.coords  # raises NotLipschitz for half-odd elements
    else:
        vec = tuple(v)
        if not all(isinstance(x, int) for x in vec):
            raise DimensionMismatch("vector entries must be ints")
    if length is not None and len(vec) != length:
        raise DimensionMismatch(
            f"expected a vector of length {length}, got {len(vec)}"
        )
    return vec


def cross_general(vectors) -> tuple[int, ...]:
    """Cross product of n-1 integer vectors in n-space.

    Accepts any iterable of equal-length int sequences (Lipschitz
    quaternions are read as their coordinate 4-vectors).  The result w
    satisfies w . v = det(vectors stacked over v) for every v, hence
    w is orthogonal to every input.

    Raises:
        DimensionMismatch: unless k vectors of length k+1 are supplied.
    """
    rows = [_as_int_vector(v) for v in vectors]
    if not rows:
        raise DimensionMismatch("cross product needs at least one vector")
    n = len(rows) + 1
    if any(len(r) != n for r in rows):
        raise DimensionMismatch(
            f"{len(rows)} vectors must each have length {n}"
        )
    out = []
    for col in range(n):
        sub = [list(r[:col]) + list(r[col + 1 :]) for r in rows]
        minor = det_int(sub)
        # Cofactor sign of entry (n, col+1) in 1-based indexing.
        out.append(minor if (n + col + 1) % 2 == 0 else -minor)
    return tuple(out)


@dataclass(frozen=True)
class RationalQuaternion:
    """An exact quaternion with a common denominator, in lowest terms.

    Only produced by cross3 on half-odd inputs whose product leaves the
    Hurwitz order; the denominator then divides 8.
    """

    numerators: tuple[int, int, int, int]
    denominator: int

    @property
    def is_hurwitz(self) -> bool:
        if self.denominator == 1:
            return True
        return self.denominator == 2 and all(n % 2 for n in self.numerators)

    def to_hurwitz(self) -> HurwitzQuaternion:
        if not self.is_hurwitz:
            raise NotLipschitz(f"{self} is not a Hurwitz integer")
        if self.denominator == 1:
            return HurwitzQuaternion(*(2 * x for x in self.numerators))
        return HurwitzQuaternion(*self.numerators)

    def __str__(self) -> str:
        body = "+".join(
            f"{n}{axis}" for n, axis in zip(self.numerators, ("", "i", "j", "k"))
        ).replace("+-", "-")
        return f"({body})/{self.denominator}"


def cross3(
    u: HurwitzQuaternion, v: HurwitzQuaternion, w: HurwitzQuaternion
):
    """Cross product of three Hurwitz quaternions.

    Computed on doubled coordinates and divided back by 8 exactly.
    Lipschitz inputs always yield a Lipschitz HurwitzQuaternion; a
    half-odd triple whose exact product is not a Hurwitz integer comes
    back as a RationalQuaternion instead.
    """
    c = _kernel.cross4(u.doubled, v.doubled, w.doubled)
    if all(x % 4 == 0 for x in c):
        d = tuple(x // 4 for x in c)
        par = d[0] & 1
        if (d[1] & 1) == par and (d[2] & 1) == par and (d[3] & 1) == par:
            return HurwitzQuaternion._raw(d)
    g = gcd(gcd(abs(c[0]), abs(c[1])), gcd(abs(c[2]), abs(c[3])), 8)
    return RationalQuaternion(tuple(x // g for x in c), 8 // g)


def triple_scalar(u1, u2, u3, v) -> int:
    """Determinant of four stacked 4-vectors: cross(u1,u2,u3) . v."""
    rows = [_as_int_vector(x, 4) for x in (u1, u2, u3, v)]
    return det_int(rows)


def _dot_int(u: HurwitzQuaternion, v: HurwitzQuaternion) -> int:
    if not (u.is_lipschitz and v.is_lipschitz):
        raise NotLipschitz("integer inner products need Lipschitz arguments")
    return _kernel.qdot4(u.doubled, v.doubled) // 4


def gram_norm(
    u: HurwitzQuaternion, v: HurwitzQuaternion, w: HurwitzQuaternion
) -> int:
    """Determinant of the 3x3 Gram matrix of three Lipschitz quaternions."""
    uu, vv, ww = u.norm(), v.norm(), w.norm()
    uv, uw, vw = _dot_int(u, v), _dot_int(u, w), _dot_int(v, w)
    return det_int([[uu, uv, uw], [uv, vv, vw], [uw, vw, ww]])


def expanded_norm(
    u: HurwitzQuaternion, v: HurwitzQuaternion, w: HurwitzQuaternion
) -> int:
    """The Gram determinant multiplied out into norms and inner products.

    N(u)N(v)N(w) - N(u)(v.w)^2 - N(v)(u.w)^2 - N(w)(u.v)^2
    + 2(u.v)(u.w)(v.w); agrees with gram_norm and with the norm of
    cross3 for Lipschitz inputs.
    """
    nu, nv, nw = u.norm(), v.norm(), w.norm()
    uv, uw, vw = _dot_int(u, v), _dot_int(u, w), _dot_int(v, w)
    return (
        nu * nv * nw
        - nu * vw * vw
        - nv * uw * uw
        - nw * uv * uv
        + 2 * uv * uw * vw
    )
