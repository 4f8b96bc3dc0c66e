# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python term-algebra kernel.

Same data layout, same canonical results, bit-for-bit:

  scalar = (re_num, re_den, im_num, im_den)
  atom   = (m, scalar)
  poly   = {atom: scalar}

Rationals reduce through a C gcd fast path while both operands fit in a
64-bit word, falling back to Python's arbitrary-precision gcd otherwise.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from math import gcd as _pygcd

S_ZERO = (0, 1, 0, 1)
S_ONE = (1, 1, 0, 1)


cdef long long _cgcd(long long a, long long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef object _gcd(object n, object d):
    cdef int overflow_n = 0, overflow_d = 0
    cdef long long cn, cd
    cn = PyLong_AsLongLongAndOverflow(n, &overflow_n)
    cd = PyLong_AsLongLongAndOverflow(d, &overflow_d)
    if overflow_n == 0 and overflow_d == 0:
        return _cgcd(cn, cd)
    return _pygcd(n, d)


cpdef tuple q_norm(object n, object d):
    """Reduce one rational component; denominator comes out positive."""
    if d < 0:
        n, d = -n, -d
    elif d == 0:
        raise ZeroDivisionError("zero denominator")
    g = _gcd(n, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


cpdef tuple s_make(object rn, object rd, object im_n, object im_d):
    cdef tuple re = q_norm(rn, rd)
    cdef tuple im = q_norm(im_n, im_d)
    return (re[0], re[1], im[0], im[1])


cpdef tuple s_from_int(object n):
    return (n, 1, 0, 1)


cpdef bint s_is_zero(tuple x):
    return x[0] == 0 and x[2] == 0


cpdef tuple s_add(tuple x, tuple y):
    cdef tuple re = q_norm(x[0] * y[1] + y[0] * x[1], x[1] * y[1])
    cdef tuple im = q_norm(x[2] * y[3] + y[2] * x[3], x[3] * y[3])
    return (re[0], re[1], im[0], im[1])


cpdef tuple s_neg(tuple x):
    return (-x[0], x[1], -x[2], x[3])


cpdef tuple s_sub(tuple x, tuple y):
    return s_add(x, s_neg(y))


cpdef tuple s_conj(tuple x):
    return (x[0], x[1], -x[2], x[3])


cpdef tuple s_mul(tuple x, tuple y):
    ar, ad, br, bd = x
    cr, cd, dr, dd = y
    cdef tuple re = q_norm(ar * cr * bd * dd - br * dr * ad * cd,
                           ad * cd * bd * dd)
    cdef tuple im = q_norm(ar * dr * bd * cd + br * cr * ad * dd,
                           ad * dd * bd * cd)
    return (re[0], re[1], im[0], im[1])


cpdef tuple s_inv(tuple x):
    ar, ad, br, bd = x
    if ar == 0 and br == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    n = ar * ar * bd * bd + br * br * ad * ad
    d = ad * ad * bd * bd
    cdef tuple re = q_norm(ar * d, ad * n)
    cdef tuple im = q_norm(-br * d, bd * n)
    return (re[0], re[1], im[0], im[1])


cpdef tuple s_div(tuple x, tuple y):
    return s_mul(x, s_inv(y))


cpdef dict p_add(dict f, dict g):
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    cdef dict out = dict(f)
    for atom, c in g.items():
        prev = out.get(atom)
        if prev is None:
            out[atom] = c
        else:
            s = s_add(<tuple> prev, <tuple> c)
            if s[0] == 0 and s[2] == 0:
                del out[atom]
            else:
                out[atom] = s
    return out


cpdef dict p_scale(dict f, tuple c):
    if c[0] == 0 and c[2] == 0:
        return {}
    cdef dict out = {}
    for atom, coeff in f.items():
        out[atom] = s_mul(<tuple> coeff, c)
    return out


cpdef dict p_mul(dict f, dict g):
    cdef dict out = {}
    cdef tuple atom, c
    for a1, c1 in f.items():
        m1 = (<tuple> a1)[0]
        l1 = (<tuple> a1)[1]
        for a2, c2 in g.items():
            atom = (m1 + (<tuple> a2)[0], s_add(<tuple> l1, <tuple> (<tuple> a2)[1]))
            c = s_mul(<tuple> c1, <tuple> c2)
            prev = out.get(atom)
            if prev is None:
                out[atom] = c
            else:
                out[atom] = s_add(<tuple> prev, c)
    cdef dict clean = {}
    for atom2, c3 in out.items():
        if (<tuple> c3)[0] != 0 or (<tuple> c3)[2] != 0:
            clean[atom2] = c3
    return clean


cpdef dict p_diff(dict f):
    cdef dict out = {}
    cdef tuple atom, term
    for a, c in f.items():
        m = (<tuple> a)[0]
        lam = (<tuple> a)[1]
        if m:
            atom = (m - 1, lam)
            term = s_mul(<tuple> c, (m, 1, 0, 1))
            prev = out.get(atom)
            out[atom] = s_add(<tuple> prev, term) if prev is not None else term
        if (<tuple> lam)[0] != 0 or (<tuple> lam)[2] != 0:
            atom = (m, lam)
            term = s_mul(<tuple> c, <tuple> lam)
            prev = out.get(atom)
            out[atom] = s_add(<tuple> prev, term) if prev is not None else term
    cdef dict clean = {}
    for atom2, c3 in out.items():
        if (<tuple> c3)[0] != 0 or (<tuple> c3)[2] != 0:
            clean[atom2] = c3
    return clean


cpdef dict p_antideriv(dict f):
    """Termwise antiderivative for atoms with lambda != 0 (see pure twin)."""
    cdef dict out = {}
    cdef tuple atom, term, factor, linv
    cdef Py_ssize_t j
    for a, c in f.items():
        m = (<tuple> a)[0]
        lam = <tuple> (<tuple> a)[1]
        if lam[0] == 0 and lam[2] == 0:
            raise ZeroDivisionError("antiderivative kernel needs lambda != 0")
        linv = s_inv(lam)
        factor = s_mul(<tuple> c, linv)
        falling = 1
        for j in range(m + 1):
            atom = (m - j, lam)
            term = s_mul(factor, (falling, 1, 0, 1))
            if j % 2 == 1:
                term = s_neg(term)
            prev = out.get(atom)
            out[atom] = s_add(<tuple> prev, term) if prev is not None else term
            falling *= m - j
            factor = s_mul(factor, linv)
    cdef dict clean = {}
    for atom2, c3 in out.items():
        if (<tuple> c3)[0] != 0 or (<tuple> c3)[2] != 0:
            clean[atom2] = c3
    return clean
