# cython: language_level=3
"""Compiled arithmetic kernel.

Same contracts as the pure twin, with C int64 fast paths.  Every entry
point checks that its inputs fit comfortably inside 64 bits (with room
for the worst intermediate the algorithm can produce) and delegates the
call to the pure module otherwise, so results are identical at every
magnitude.
"""

from libc.math cimport sqrtl
from libc.stdlib cimport free, malloc

from quatlat._kernel import pure as _pure

BACKEND = "compiled"

# Plain products stay below 2**62 for inputs under 2**30; the division
# and gcd paths form conj(b)*a style products plus quotient blowup, so
# they get the tighter bound.
cdef long long GUARD_MUL = 1LL << 30
cdef long long GUARD_DIV = 1LL << 20
cdef long long GUARD_BOX = 1LL << 10
cdef long long SPAN_FREE = 1LL << 62


cdef inline bint _bad(long long x, long long g) noexcept:
    return x < -g or x > g


cdef inline long long _isqrt(long long v) noexcept:
    cdef long long s = <long long> sqrtl(<long double> v)
    if s < 0:
        s = 0
    while s * s > v:
        s -= 1
    while (s + 1) * (s + 1) <= v:
        s += 1
    return s


cdef inline void _cmul(long long *r,
                       long long x0, long long x1, long long x2, long long x3,
                       long long y0, long long y1, long long y2, long long y3) noexcept:
    r[0] = (x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3) // 2
    r[1] = (x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2) // 2
    r[2] = (x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1) // 2
    r[3] = (x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0) // 2


cdef inline long long _cnorm(long long *u) noexcept:
    return (u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) // 4


cdef void _division(long long *va, long long *vb, bint rq, bint lipschitz_only,
                    long long *q_out, long long *r_out):
    # Assumes norm(vb) > 0 and entry magnitudes within GUARD_DIV.
    cdef long long n = _cnorm(vb)
    cdef long long two_n = 2 * n
    cdef long long num[4]
    cdef long long qe[4]
    cdef long long re_[4]
    cdef long long qo[4]
    cdef long long ro[4]
    cdef long long t[4]
    cdef long long nre, nro
    cdef int m
    if rq:
        _cmul(num, vb[0], -vb[1], -vb[2], -vb[3], va[0], va[1], va[2], va[3])
    else:
        _cmul(num, va[0], va[1], va[2], va[3], vb[0], -vb[1], -vb[2], -vb[3])
    for m in range(4):
        qe[m] = 2 * ((num[m] + n) // two_n)
    if rq:
        _cmul(t, vb[0], vb[1], vb[2], vb[3], qe[0], qe[1], qe[2], qe[3])
    else:
        _cmul(t, qe[0], qe[1], qe[2], qe[3], vb[0], vb[1], vb[2], vb[3])
    for m in range(4):
        re_[m] = va[m] - t[m]
    if lipschitz_only:
        for m in range(4):
            q_out[m] = qe[m]
            r_out[m] = re_[m]
        return
    for m in range(4):
        qo[m] = 2 * (num[m] // two_n) + 1
    if rq:
        _cmul(t, vb[0], vb[1], vb[2], vb[3], qo[0], qo[1], qo[2], qo[3])
    else:
        _cmul(t, qo[0], qo[1], qo[2], qo[3], vb[0], vb[1], vb[2], vb[3])
    for m in range(4):
        ro[m] = va[m] - t[m]
    nre = _cnorm(re_)
    nro = _cnorm(ro)
    # Norm tie goes to the lexicographically smaller quotient; the
    # candidates differ in parity, so index 0 always decides.
    if nre < nro or (nre == nro and qe[0] < qo[0]):
        for m in range(4):
            q_out[m] = qe[m]
            r_out[m] = re_[m]
    else:
        for m in range(4):
            q_out[m] = qo[m]
            r_out[m] = ro[m]


cdef long long _gcd_norm(long long *pa, long long *pb, bint right):
    cdef long long x[4]
    cdef long long y[4]
    cdef long long q[4]
    cdef long long r[4]
    cdef bint rq = not right
    cdef int m
    for m in range(4):
        x[m] = pa[m]
        y[m] = pb[m]
    while y[0] or y[1] or y[2] or y[3]:
        _division(x, y, rq, False, q, r)
        for m in range(4):
            x[m] = y[m]
            y[m] = r[m]
    return _cnorm(x)


cdef inline long long _cdet3(long long *p, long long *q, long long *r) noexcept:
    return (p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


cdef bint _span(long long base, long long step, long long bound,
                long long *lo, long long *hi):
    """Clip {s : |base + s*step| <= bound}; returns False when empty."""
    cdef long long lo_num, hi_num, t
    if step == 0:
        if -bound <= base <= bound:
            lo[0] = -SPAN_FREE
            hi[0] = SPAN_FREE
            return True
        return False
    lo_num = -bound - base
    hi_num = bound - base
    if step < 0:
        t = lo_num
        lo_num = -hi_num
        hi_num = -t
        step = -step
    # ceil(lo_num/step) and floor(hi_num/step) with Python-style floor
    # division semantics (Cython default).
    lo[0] = -((-lo_num) // step)
    hi[0] = hi_num // step
    return lo[0] <= hi[0]


def qconj(u):
    return (u[0], -u[1], -u[2], -u[3])


def qneg(u):
    return (-u[0], -u[1], -u[2], -u[3])


def qadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3])


def qsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def qmul(u, v):
    """Product in doubled coordinates; see the pure twin for the contract."""
    cdef long long a0, a1, a2, a3, b0, b1, b2, b3
    try:
        a0 = u[0]; a1 = u[1]; a2 = u[2]; a3 = u[3]
        b0 = v[0]; b1 = v[1]; b2 = v[2]; b3 = v[3]
    except OverflowError:
        return _pure.qmul(u, v)
    if (_bad(a0, GUARD_MUL) or _bad(a1, GUARD_MUL) or _bad(a2, GUARD_MUL)
            or _bad(a3, GUARD_MUL) or _bad(b0, GUARD_MUL) or _bad(b1, GUARD_MUL)
            or _bad(b2, GUARD_MUL) or _bad(b3, GUARD_MUL)):
        return _pure.qmul(u, v)
    return (
        (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3) // 2,
        (a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2) // 2,
        (a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1) // 2,
        (a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0) // 2,
    )


def qnorm(u):
    """Reduced norm; an ordinary nonnegative integer for every Hurwitz input."""
    cdef long long a0, a1, a2, a3
    try:
        a0 = u[0]; a1 = u[1]; a2 = u[2]; a3 = u[3]
    except OverflowError:
        return _pure.qnorm(u)
    if (_bad(a0, GUARD_MUL) or _bad(a1, GUARD_MUL)
            or _bad(a2, GUARD_MUL) or _bad(a3, GUARD_MUL)):
        return _pure.qnorm(u)
    return (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3) // 4


def qdot4(u, v):
    """Four times the Euclidean inner product of the two quaternions."""
    cdef long long a0, a1, a2, a3, b0, b1, b2, b3
    try:
        a0 = u[0]; a1 = u[1]; a2 = u[2]; a3 = u[3]
        b0 = v[0]; b1 = v[1]; b2 = v[2]; b3 = v[3]
    except OverflowError:
        return _pure.qdot4(u, v)
    if (_bad(a0, GUARD_MUL) or _bad(a1, GUARD_MUL) or _bad(a2, GUARD_MUL)
            or _bad(a3, GUARD_MUL) or _bad(b0, GUARD_MUL) or _bad(b1, GUARD_MUL)
            or _bad(b2, GUARD_MUL) or _bad(b3, GUARD_MUL)):
        return _pure.qdot4(u, v)
    return a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3


def qdivmod(a, b, right_quotient, lipschitz_only=False):
    """Nearest-point division; see the pure twin for the contract."""
    cdef long long va[4]
    cdef long long vb[4]
    cdef long long q[4]
    cdef long long r[4]
    try:
        va[0] = a[0]; va[1] = a[1]; va[2] = a[2]; va[3] = a[3]
        vb[0] = b[0]; vb[1] = b[1]; vb[2] = b[2]; vb[3] = b[3]
    except OverflowError:
        return _pure.qdivmod(a, b, right_quotient, lipschitz_only)
    if (_bad(va[0], GUARD_DIV) or _bad(va[1], GUARD_DIV) or _bad(va[2], GUARD_DIV)
            or _bad(va[3], GUARD_DIV) or _bad(vb[0], GUARD_DIV)
            or _bad(vb[1], GUARD_DIV) or _bad(vb[2], GUARD_DIV)
            or _bad(vb[3], GUARD_DIV)):
        return _pure.qdivmod(a, b, right_quotient, lipschitz_only)
    if not (vb[0] or vb[1] or vb[2] or vb[3]):
        raise ZeroDivisionError("quaternion division by zero")
    _division(va, vb, bool(right_quotient), bool(lipschitz_only), q, r)
    return (q[0], q[1], q[2], q[3]), (r[0], r[1], r[2], r[3])


def qgcd(a, b, right):
    """One-sided gcd by the Euclidean loop; not canonicalized."""
    cdef long long va[4]
    cdef long long vb[4]
    cdef long long x[4]
    cdef long long y[4]
    cdef long long q[4]
    cdef long long r[4]
    cdef bint rq
    cdef int m
    try:
        va[0] = a[0]; va[1] = a[1]; va[2] = a[2]; va[3] = a[3]
        vb[0] = b[0]; vb[1] = b[1]; vb[2] = b[2]; vb[3] = b[3]
    except OverflowError:
        return _pure.qgcd(a, b, right)
    if (_bad(va[0], GUARD_DIV) or _bad(va[1], GUARD_DIV) or _bad(va[2], GUARD_DIV)
            or _bad(va[3], GUARD_DIV) or _bad(vb[0], GUARD_DIV)
            or _bad(vb[1], GUARD_DIV) or _bad(vb[2], GUARD_DIV)
            or _bad(vb[3], GUARD_DIV)):
        return _pure.qgcd(a, b, right)
    rq = not right
    for m in range(4):
        x[m] = va[m]
        y[m] = vb[m]
    while y[0] or y[1] or y[2] or y[3]:
        _division(x, y, rq, False, q, r)
        for m in range(4):
            x[m] = y[m]
            y[m] = r[m]
    return (x[0], x[1], x[2], x[3])


def cross4(u, v, w):
    """Cross product of three integer 4-vectors; see the pure twin."""
    cdef long long u1, u2, u3, u4, v1, v2, v3, v4, w1, w2, w3, w4
    cdef long long m12, m13, m14, m23, m24, m34
    try:
        u1 = u[0]; u2 = u[1]; u3 = u[2]; u4 = u[3]
        v1 = v[0]; v2 = v[1]; v3 = v[2]; v4 = v[3]
        w1 = w[0]; w2 = w[1]; w3 = w[2]; w4 = w[3]
    except OverflowError:
        return _pure.cross4(u, v, w)
    if (_bad(u1, GUARD_DIV) or _bad(u2, GUARD_DIV) or _bad(u3, GUARD_DIV)
            or _bad(u4, GUARD_DIV) or _bad(v1, GUARD_DIV) or _bad(v2, GUARD_DIV)
            or _bad(v3, GUARD_DIV) or _bad(v4, GUARD_DIV) or _bad(w1, GUARD_DIV)
            or _bad(w2, GUARD_DIV) or _bad(w3, GUARD_DIV) or _bad(w4, GUARD_DIV)):
        return _pure.cross4(u, v, w)
    m12 = v1 * w2 - v2 * w1
    m13 = v1 * w3 - v3 * w1
    m14 = v1 * w4 - v4 * w1
    m23 = v2 * w3 - v3 * w2
    m24 = v2 * w4 - v4 * w2
    m34 = v3 * w4 - v4 * w3
    return (
        -(u2 * m34 - u3 * m24 + u4 * m23),
        u1 * m34 - u3 * m14 + u4 * m13,
        -(u1 * m24 - u2 * m14 + u4 * m12),
        u1 * m23 - u2 * m13 + u3 * m12,
    )


def norm_representations(n, include_half_odd):
    """All doubled tuples of norm n, sorted; see the pure twin."""
    cdef long long nn
    try:
        nn = n
    except OverflowError:
        return _pure.norm_representations(n, include_half_odd)
    if nn < 0 or nn > (1LL << 40):
        return _pure.norm_representations(n, include_half_odd)
    cdef long long a, b, c, d, n1, n2, n3, r0, r1, r2, m
    out = []
    r0 = _isqrt(nn)
    for a in range(-r0, r0 + 1):
        n1 = nn - a * a
        r1 = _isqrt(n1)
        for b in range(-r1, r1 + 1):
            n2 = n1 - b * b
            r2 = _isqrt(n2)
            for c in range(-r2, r2 + 1):
                n3 = n2 - c * c
                d = _isqrt(n3)
                if d * d == n3:
                    if d == 0:
                        out.append((2 * a, 2 * b, 2 * c, 0))
                    else:
                        out.append((2 * a, 2 * b, 2 * c, 2 * d))
                        out.append((2 * a, 2 * b, 2 * c, -2 * d))
    if include_half_odd and nn % 2 == 1:
        m = 4 * nn
        r0 = _isqrt(m)
        r0 -= 1 - r0 % 2
        for a in range(-r0, r0 + 1, 2):
            n1 = m - a * a
            r1 = _isqrt(n1)
            r1 -= 1 - r1 % 2
            for b in range(-r1, r1 + 1, 2):
                n2 = n1 - b * b
                r2 = _isqrt(n2)
                r2 -= 1 - r2 % 2
                for c in range(-r2, r2 + 1, 2):
                    n3 = n2 - c * c
                    d = _isqrt(n3)
                    if d % 2 == 1 and d * d == n3:
                        out.append((a, b, c, d))
                        out.append((a, b, c, -d))
    out.sort()
    return out


def count_nontrivial_gcd_pairs(reps, n):
    """Gcd statistics over representation pairs; see the pure twin."""
    cdef long long nn
    try:
        nn = n
    except OverflowError:
        return _pure.count_nontrivial_gcd_pairs(reps, n)
    if nn > GUARD_MUL:
        return _pure.count_nontrivial_gcd_pairs(reps, n)
    cdef Py_ssize_t k = len(reps)
    cdef long long *buf = <long long *> malloc(4 * k * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long nr, nl
    cdef long long right_ct = 0, left_ct = 0, either_ct = 0
    cdef bint r_nt, l_nt
    try:
        for i in range(k):
            t = reps[i]
            buf[4 * i] = t[0]
            buf[4 * i + 1] = t[1]
            buf[4 * i + 2] = t[2]
            buf[4 * i + 3] = t[3]
    except OverflowError:
        free(buf)
        return _pure.count_nontrivial_gcd_pairs(reps, n)
    for i in range(k):
        for j in range(i + 1, k):
            nr = _gcd_norm(buf + 4 * i, buf + 4 * j, True)
            nl = _gcd_norm(buf + 4 * i, buf + 4 * j, False)
            r_nt = nr != 1 and nr != nn
            l_nt = nl != 1 and nl != nn
            if r_nt:
                right_ct += 2
            if l_nt:
                left_ct += 2
            if r_nt or l_nt:
                either_ct += 2
    free(buf)
    return right_ct, left_ct, either_ct, k * k


def count_orthogonality_failures(alpha, basis, q_bound):
    """Exhaustive orthogonal-basis check; see the pure twin."""
    cdef long long al[4]
    cdef long long bm[3][4]
    cdef long long bound
    cdef int i, j
    try:
        bound = q_bound
        for i in range(4):
            al[i] = alpha[i]
        for i in range(3):
            row = basis[i]
            for j in range(4):
                bm[i][j] = row[j]
    except OverflowError:
        return _pure.count_orthogonality_failures(alpha, basis, q_bound)
    if bound < 0 or bound > GUARD_BOX:
        return _pure.count_orthogonality_failures(alpha, basis, q_bound)
    for i in range(4):
        if _bad(al[i], GUARD_BOX):
            return _pure.count_orthogonality_failures(alpha, basis, q_bound)
    for i in range(3):
        for j in range(4):
            if _bad(bm[i][j], GUARD_BOX):
                return _pure.count_orthogonality_failures(alpha, basis, q_bound)

    # Columns of the basis, one per coordinate.
    cdef long long cl[4][3]
    for i in range(4):
        for j in range(3):
            cl[i][j] = bm[j][i]

    # First coordinate triple whose basis columns are independent; its
    # Cramer solution is checked against the remaining coordinate.
    cdef int picks[4][3]
    picks[0][0] = 0; picks[0][1] = 1; picks[0][2] = 2
    picks[1][0] = 0; picks[1][1] = 1; picks[1][2] = 3
    picks[2][0] = 0; picks[2][1] = 2; picks[2][2] = 3
    picks[3][0] = 1; picks[3][1] = 2; picks[3][2] = 3
    cdef long long det = 0
    cdef int p0 = 0, p1 = 0, p2 = 0, rest = 0
    cdef bint have_pick = False
    for i in range(4):
        det = _cdet3(cl[picks[i][0]], cl[picks[i][1]], cl[picks[i][2]])
        if det:
            p0 = picks[i][0]; p1 = picks[i][1]; p2 = picks[i][2]
            have_pick = True
            break
    if have_pick:
        rest = 0 + 1 + 2 + 3 - p0 - p1 - p2

    # Orthogonality equation: solve on one coordinate pair, iterate the
    # complementary pair freely (same slot choice as the pure twin).
    cdef int f0, f1, s0, s1
    cdef long long cu, cv
    if al[2] or al[3]:
        f0 = 0; f1 = 1; s0 = 2; s1 = 3
        cu = al[2]; cv = al[3]
    else:
        f0 = 2; f1 = 3; s0 = 0; s1 = 1
        cu = al[0]; cv = al[1]
    cdef long long old_r = cu, rr = cv, old_s = 1, ss = 0, old_t = 0, tt = 1
    cdef long long qq, tmp
    while rr:
        qq = old_r // rr
        tmp = old_r - qq * rr; old_r = rr; rr = tmp
        tmp = old_s - qq * ss; old_s = ss; ss = tmp
        tmp = old_t - qq * tt; old_t = tt; tt = tmp
    cdef long long g = old_r, bu = old_s, bv = old_t
    if g < 0:
        g = -g; bu = -bu; bv = -bv
    cdef long long du = cv // g, dv = -(cu // g)
    cdef long long fa = al[f0], fb = al[f1]

    cdef long long orthogonal = 0, failures = 0
    cdef long long x, y, mxy, kk, u0, v0, lo, hi, lo2, hi2, step
    cdef long long qv[4]
    cdef long long sub0[3]
    cdef long long sub1[3]
    cdef long long sub2[3]
    cdef long long num, acc, keep0, keep1, keep2
    cdef long long coef[3]
    cdef int m
    cdef bint ok
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            mxy = -fa * x - fb * y
            if mxy % g:
                continue
            kk = mxy // g
            u0 = bu * kk
            v0 = bv * kk
            if not _span(u0, du, bound, &lo, &hi):
                continue
            if not _span(v0, dv, bound, &lo2, &hi2):
                continue
            # du and dv are never both zero, so at least one span is a
            # finite clip and the intersection below is finite.
            if lo2 > lo:
                lo = lo2
            if hi2 < hi:
                hi = hi2
            if lo > hi:
                continue
            for step in range(lo, hi + 1):
                qv[f0] = x
                qv[f1] = y
                qv[s0] = u0 + step * du
                qv[s1] = v0 + step * dv
                orthogonal += 1
                if have_pick:
                    sub0[0] = cl[p0][0]; sub0[1] = cl[p0][1]; sub0[2] = cl[p0][2]
                    sub1[0] = cl[p1][0]; sub1[1] = cl[p1][1]; sub1[2] = cl[p1][2]
                    sub2[0] = cl[p2][0]; sub2[1] = cl[p2][1]; sub2[2] = cl[p2][2]
                    ok = True
                    for m in range(3):
                        keep0 = sub0[m]; sub0[m] = qv[p0]
                        keep1 = sub1[m]; sub1[m] = qv[p1]
                        keep2 = sub2[m]; sub2[m] = qv[p2]
                        num = _cdet3(sub0, sub1, sub2)
                        sub0[m] = keep0; sub1[m] = keep1; sub2[m] = keep2
                        if num % det:
                            ok = False
                            break
                        coef[m] = num // det
                    if ok:
                        acc = (coef[0] * bm[0][rest] + coef[1] * bm[1][rest]
                               + coef[2] * bm[2][rest])
                        if acc != qv[rest]:
                            ok = False
                    if not ok:
                        failures += 1
                else:
                    if qv[0] or qv[1] or qv[2] or qv[3]:
                        failures += 1
    return orthogonal, failures
