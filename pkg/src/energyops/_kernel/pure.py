"""Pure-Python term-algebra kernel.

This module defines the raw data layout shared with the compiled kernel
(``_speedups``) and implements every hot operation on it:

  scalar  = (re_num, re_den, im_num, im_den)   4 ints, dens > 0, reduced
  atom    = (m, scalar)                        t**m * exp(lambda*t), m >= 0
  poly    = {atom: scalar}                     no zero coefficients stored

The zero scalar is (0, 1, 0, 1); the zero poly is the empty dict.  Both
kernels must produce identical canonical values for identical inputs, so
exact-equality tests work across backends.
"""

from math import gcd

S_ZERO = (0, 1, 0, 1)
S_ONE = (1, 1, 0, 1)


def q_norm(n, d):
    """Reduce one rational component; denominator comes out positive."""
    if d < 0:
        n, d = -n, -d
    elif d == 0:
        raise ZeroDivisionError("zero denominator")
    g = gcd(n, d)
    if g > 1:
        return n // g, d // g
    return n, d


def s_make(rn, rd, im_n, im_d):
    a, b = q_norm(rn, rd)
    c, d = q_norm(im_n, im_d)
    return (a, b, c, d)


def s_from_int(n):
    return (n, 1, 0, 1)


def s_is_zero(x):
    return x[0] == 0 and x[2] == 0


def s_add(x, y):
    a, b = q_norm(x[0] * y[1] + y[0] * x[1], x[1] * y[1])
    c, d = q_norm(x[2] * y[3] + y[2] * x[3], x[3] * y[3])
    return (a, b, c, d)


def s_neg(x):
    return (-x[0], x[1], -x[2], x[3])


def s_sub(x, y):
    return s_add(x, s_neg(y))


def s_conj(x):
    return (x[0], x[1], -x[2], x[3])


def s_mul(x, y):
    # (a + bi)(c + di) = (ac - bd) + (ad + bc)i, componentwise rationals
    ar, ad, br, bd = x
    cr, cd, dr, dd = y
    rn = ar * cr * bd * dd - br * dr * ad * cd
    rd = ad * cd * bd * dd
    im_n = ar * dr * bd * cd + br * cr * ad * dd
    im_d = ad * dd * bd * cd
    a, b = q_norm(rn, rd)
    c, d = q_norm(im_n, im_d)
    return (a, b, c, d)


def s_inv(x):
    # 1/(a + bi) = (a - bi) / (a^2 + b^2)
    ar, ad, br, bd = x
    if ar == 0 and br == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    # n/d = a^2 + b^2 as one rational
    n = ar * ar * bd * bd + br * br * ad * ad
    d = ad * ad * bd * bd
    a, b = q_norm(ar * d, ad * n)
    c, e = q_norm(-br * d, bd * n)
    return (a, b, c, e)


def s_div(x, y):
    return s_mul(x, s_inv(y))


def p_add(f, g):
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    out = dict(f)
    for atom, c in g.items():
        prev = out.get(atom)
        if prev is None:
            out[atom] = c
        else:
            s = s_add(prev, c)
            if s[0] == 0 and s[2] == 0:
                del out[atom]
            else:
                out[atom] = s
    return out


def p_scale(f, c):
    if c[0] == 0 and c[2] == 0:
        return {}
    return {atom: s_mul(coeff, c) for atom, coeff in f.items()}


def p_mul(f, g):
    out = {}
    for (m1, l1), c1 in f.items():
        for (m2, l2), c2 in g.items():
            atom = (m1 + m2, s_add(l1, l2))
            c = s_mul(c1, c2)
            prev = out.get(atom)
            if prev is None:
                out[atom] = c
            else:
                out[atom] = s_add(prev, c)
    return {atom: c for atom, c in out.items() if c[0] != 0 or c[2] != 0}


def p_diff(f):
    # d/dt [c t^m e^{lt}] = c*m t^(m-1) e^{lt} + c*l t^m e^{lt}
    out = {}
    for (m, lam), c in f.items():
        if m:
            atom = (m - 1, lam)
            cm = s_mul(c, (m, 1, 0, 1))
            prev = out.get(atom)
            out[atom] = s_add(prev, cm) if prev is not None else cm
        if lam[0] != 0 or lam[2] != 0:
            atom = (m, lam)
            cl = s_mul(c, lam)
            prev = out.get(atom)
            out[atom] = s_add(prev, cl) if prev is not None else cl
    return {atom: c for atom, c in out.items() if c[0] != 0 or c[2] != 0}


def p_antideriv(f):
    """Termwise antiderivative for atoms with lambda != 0.

    int t^m e^{lt} dt = e^{lt} * sum_{j=0}^{m} (-1)^j m!/(m-j)! t^(m-j) / l^(j+1)

    Callers are responsible for the convergence policy (which lambdas are
    admissible); here lambda == 0 is a hard error.
    """
    out = {}
    for (m, lam), c in f.items():
        if lam[0] == 0 and lam[2] == 0:
            raise ZeroDivisionError("antiderivative kernel needs lambda != 0")
        linv = s_inv(lam)
        factor = s_mul(c, linv)  # j = 0 term: c / l
        falling = 1
        for j in range(m + 1):
            atom = (m - j, lam)
            term = s_mul(factor, (falling, 1, 0, 1))
            if j % 2 == 1:
                term = s_neg(term)
            prev = out.get(atom)
            out[atom] = s_add(prev, term) if prev is not None else term
            falling *= m - j
            factor = s_mul(factor, linv)
    return {atom: c for atom, c in out.items() if c[0] != 0 or c[2] != 0}
