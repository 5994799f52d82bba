# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernel; mirrors _pure exactly.

Exponents are tuples of small non-negative ints (kept as C longs inside the
comparators), coefficients arbitrary exact-rational Python objects.
"""

import functools

LEX = 0
GREVLEX = 1
WEIGHT_LEX = 2
WEIGHT_GREVLEX = 3
BLOCK_GREVLEX = 4


cdef int _cmp_lex_c(tuple a, tuple b) except? -2:
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x != y:
            return 1 if x > y else -1
    return 0


cdef int _cmp_grevlex_c(tuple a, tuple b) except? -2:
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, d
    for i in range(n):
        da += <long>a[i]
        db += <long>b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, -1, -1):
        d = <long>a[i] - <long>b[i]
        if d:
            return -1 if d > 0 else 1
    return 0


cdef int _cmp_grevlex_masked_c(tuple a, tuple b, tuple mask, long which) except? -2:
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, d
    for i in range(n):
        if <long>mask[i] == which:
            da += <long>a[i]
            db += <long>b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, -1, -1):
        if <long>mask[i] == which:
            d = <long>a[i] - <long>b[i]
            if d:
                return -1 if d > 0 else 1
    return 0


cdef int _cmp_c(int code, aux, tuple a, tuple b) except? -2:
    cdef int c
    # weight degrees use Python ints: weight entries may be large after
    # inequality-system scaling.
    if code == GREVLEX:
        return _cmp_grevlex_c(a, b)
    if code == LEX:
        return _cmp_lex_c(a, b)
    if code == WEIGHT_LEX or code == WEIGHT_GREVLEX:
        wa = 0
        wb = 0
        for i in range(len(a)):
            wa += aux[i] * a[i]
            wb += aux[i] * b[i]
        if wa != wb:
            return 1 if wa > wb else -1
        if code == WEIGHT_LEX:
            return _cmp_lex_c(a, b)
        return _cmp_grevlex_c(a, b)
    if code == BLOCK_GREVLEX:
        c = _cmp_grevlex_masked_c(a, b, aux, 1)
        if c:
            return c
        return _cmp_grevlex_masked_c(a, b, aux, 0)
    raise ValueError("unknown order code %r" % (code,))


def cmp_expvec(code, aux, a, b):
    """Compare exponent vectors under an order code; returns -1, 0 or 1."""
    return _cmp_c(code, aux, a, b)


cdef bint _divides_c(tuple a, tuple b) except? 2:
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def exp_divides(a, b):
    """True when x^a divides x^b."""
    return _divides_c(a, b)


def exp_sub(a, b):
    """a - b componentwise; caller guarantees b divides a."""
    return tuple([a[i] - b[i] for i in range(len(a))])


def exp_add(a, b):
    return tuple([a[i] + b[i] for i in range(len(a))])


def exp_lcm(a, b):
    return tuple([a[i] if a[i] > b[i] else b[i] for i in range(len(a))])


def sort_terms(terms, code, aux):
    """Canonicalize a raw term iterable: sort descending, merge duplicate
    exponents, drop zero coefficients."""
    buckets = {}
    for exps, c in terms:
        if exps in buckets:
            buckets[exps] = buckets[exps] + c
        else:
            buckets[exps] = c
    out = [(e, c) for e, c in buckets.items() if c != 0]
    out.sort(
        key=functools.cmp_to_key(lambda s, t: _cmp_c(code, aux, s[0], t[0])),
        reverse=True,
    )
    return out


def add_terms(f, g, code, aux):
    """Merge-add two sorted term lists."""
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef int c
    while i < nf and j < ng:
        c = _cmp_c(code, aux, f[i][0], g[j][0])
        if c > 0:
            out.append(f[i])
            i += 1
        elif c < 0:
            out.append(g[j])
            j += 1
        else:
            s = f[i][1] + g[j][1]
            if s != 0:
                out.append((f[i][0], s))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    if j < ng:
        out.extend(g[j:])
    return out


def neg_terms(f):
    return [(e, -c) for e, c in f]


def scale_terms(f, c):
    if c == 0:
        return []
    return [(e, c * k) for e, k in f]


def mul_term(f, c, m):
    """(c * x^m) * f; preserves sortedness for any multiplicative order."""
    if c == 0:
        return []
    return [(exp_add(e, m), c * k) for e, k in f]


def mul_terms(f, g, code, aux):
    acc = {}
    for ef, cf in f:
        for eg, cg in g:
            e = exp_add(ef, eg)
            if e in acc:
                acc[e] = acc[e] + cf * cg
            else:
                acc[e] = cf * cg
    out = [(e, c) for e, c in acc.items() if c != 0]
    out.sort(
        key=functools.cmp_to_key(lambda s, t: _cmp_c(code, aux, s[0], t[0])),
        reverse=True,
    )
    return out


cdef list _sub_scaled_c(list f, c, tuple m, list g, int code, aux):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef int cres
    cdef tuple ge
    while i < nf and j < ng:
        ge = exp_add(g[j][0], m)
        cres = _cmp_c(code, aux, f[i][0], ge)
        if cres > 0:
            out.append(f[i])
            i += 1
        elif cres < 0:
            out.append((ge, -c * g[j][1]))
            j += 1
        else:
            s = f[i][1] - c * g[j][1]
            if s != 0:
                out.append((f[i][0], s))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    while j < ng:
        out.append((exp_add(g[j][0], m), -c * g[j][1]))
        j += 1
    return out


def sub_scaled(f, c, m, g, code, aux):
    """f - c * x^m * g for sorted term lists; the workhorse of division."""
    return _sub_scaled_c(list(f), c, m, list(g), code, aux)


def normal_form_terms(f, gterms, code, aux):
    """Full multivariate division remainder of f by the list gterms.

    Divisors are tried in list order; each gterms[i] is a nonzero sorted
    term list.  Returns the remainder, none of whose monomials is divisible
    by any leading monomial of gterms.
    """
    cdef list glead = [g[0][0] for g in gterms]
    cdef list glc = [g[0][1] for g in gterms]
    cdef Py_ssize_t ng = len(gterms), k, hit
    cdef list rem = []
    cdef list work = list(f)
    cdef tuple m
    cdef int icode = code
    while work:
        m = work[0][0]
        c = work[0][1]
        hit = -1
        for k in range(ng):
            if _divides_c(<tuple>glead[k], m):
                hit = k
                break
        if hit < 0:
            rem.append(work[0])
            work = work[1:]
        else:
            work = _sub_scaled_c(work, c / glc[hit], exp_sub(m, glead[hit]),
                                 <list>gterms[hit], icode, aux)
    return rem
