"""Paired-double ("double-double") arithmetic for the extended precision tier.

Only what the series evaluators need: a complex value held as four doubles
(hi/lo for each part), addition, and multiplication/division by ordinary
complex factors.  Roughly 31 significant digits, enough to survive the
1e14 cancellation guard with margin.
"""

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(a, b):
    s, e = _two_sum(a[0], b[0])
    e += a[1] + b[1]
    return _quick_two_sum(s, e)


def dd_mul(a, b):
    p, e = _two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return _quick_two_sum(p, e)


def dd_div(a, b):
    q1 = a[0] / b[0]
    # r = a - q1*b, computed in dd
    p = dd_mul((q1, 0.0), b)
    r = dd_add(a, (-p[0], -p[1]))
    q2 = r[0] / b[0]
    return _quick_two_sum(q1, q2)


# Complex double-double: ((re_hi, re_lo), (im_hi, im_lo))

def cdd_from(z):
    z = complex(z)
    return ((z.real, 0.0), (z.imag, 0.0))


def cdd_to_complex(z):
    return complex(z[0][0] + z[0][1], z[1][0] + z[1][1])


def cdd_add(a, b):
    return (dd_add(a[0], b[0]), dd_add(a[1], b[1]))


def cdd_mul(a, b):
    re = dd_add(dd_mul(a[0], b[0]), _dd_neg(dd_mul(a[1], b[1])))
    im = dd_add(dd_mul(a[0], b[1]), dd_mul(a[1], b[0]))
    return (re, im)


def _dd_neg(a):
    return (-a[0], -a[1])


def cdd_mul_c(a, z):
    """Multiply by an ordinary complex number."""
    return cdd_mul(a, cdd_from(z))


def cdd_div_c(a, z):
    """Divide by an ordinary complex number."""
    z = complex(z)
    d = dd_add(_two_prod(z.real, z.real), _two_prod(z.imag, z.imag))
    w = cdd_mul(a, cdd_from(z.conjugate()))
    return (dd_div(w[0], d), dd_div(w[1], d))


def cdd_abs(a):
    return abs(cdd_to_complex(a))
