"""Pure-Python term kernel.

A term list is a list of ``(exponents, coefficient)`` pairs with exponents
stored as tuples of non-negative ints, kept sorted strictly descending under
one of the order codes below.  Coefficients are exact rationals (anything
supporting field arithmetic and ``== 0``); the kernel never introduces
floats.  The compiled twin (``_speedups``) implements the same signatures.
"""

LEX = 0
GREVLEX = 1
WEIGHT_LEX = 2
WEIGHT_GREVLEX = 3
BLOCK_GREVLEX = 4


def cmp_expvec(code, aux, a, b):
    """Compare exponent vectors under an order code; returns -1, 0 or 1.

    ``aux`` is the weight vector for the WEIGHT_* codes, the 0/1 dominance
    mask for BLOCK_GREVLEX (1 = dominant block), and None otherwise.
    """
    if code == GREVLEX:
        return _cmp_grevlex(a, b)
    if code == LEX:
        return _cmp_lex(a, b)
    if code == WEIGHT_LEX or code == WEIGHT_GREVLEX:
        wa = 0
        wb = 0
        for i in range(len(a)):
            wa += aux[i] * a[i]
            wb += aux[i] * b[i]
        if wa != wb:
            return 1 if wa > wb else -1
        if code == WEIGHT_LEX:
            return _cmp_lex(a, b)
        return _cmp_grevlex(a, b)
    if code == BLOCK_GREVLEX:
        c = _cmp_grevlex_masked(a, b, aux, 1)
        if c:
            return c
        return _cmp_grevlex_masked(a, b, aux, 0)
    raise ValueError("unknown order code %r" % (code,))


def _cmp_lex(a, b):
    for i in range(len(a)):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def _cmp_grevlex(a, b):
    da = 0
    db = 0
    for i in range(len(a)):
        da += a[i]
        db += b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        d = a[i] - b[i]
        if d:
            return -1 if d > 0 else 1
    return 0


def _cmp_grevlex_masked(a, b, mask, which):
    da = 0
    db = 0
    for i in range(len(a)):
        if mask[i] == which:
            da += a[i]
            db += b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        if mask[i] == which:
            d = a[i] - b[i]
            if d:
                return -1 if d > 0 else 1
    return 0


def exp_divides(a, b):
    """True when x^a divides x^b."""
    for i in range(len(a)):
        if a[i] > b[i]:
            return False
    return True


def exp_sub(a, b):
    """a - b componentwise; caller guarantees b divides a."""
    return tuple(a[i] - b[i] for i in range(len(a)))


def exp_add(a, b):
    return tuple(a[i] + b[i] for i in range(len(a)))


def exp_lcm(a, b):
    return tuple(a[i] if a[i] > b[i] else b[i] for i in range(len(a)))


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
    _sort_desc(out, code, aux)
    return out


def _sort_desc(termlist, code, aux):
    import functools

    termlist.sort(
        key=functools.cmp_to_key(lambda s, t: cmp_expvec(code, aux, s[0], t[0])),
        reverse=True,
    )


def add_terms(f, g, code, aux):
    """Merge-add two sorted term lists."""
    out = []
    i = 0
    j = 0
    nf = len(f)
    ng = len(g)
    while i < nf and j < ng:
        c = cmp_expvec(code, aux, f[i][0], g[j][0])
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
    _sort_desc(out, code, aux)
    return out


def sub_scaled(f, c, m, g, code, aux):
    """f - c * x^m * g for sorted term lists; the workhorse of division."""
    out = []
    i = 0
    j = 0
    nf = len(f)
    ng = len(g)
    while i < nf and j < ng:
        ge = exp_add(g[j][0], m)
        cres = cmp_expvec(code, aux, f[i][0], ge)
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


def normal_form_terms(f, gterms, code, aux):
    """Full multivariate division remainder of f by the list gterms.

    Divisors are tried in list order; each gterms[i] is a nonzero sorted
    term list.  Returns the remainder, none of whose monomials is divisible
    by any leading monomial of gterms.
    """
    glead = [g[0][0] for g in gterms]
    glc = [g[0][1] for g in gterms]
    ng = len(gterms)
    rem = []
    work = f
    while work:
        m, c = work[0]
        hit = -1
        for k in range(ng):
            if exp_divides(glead[k], m):
                hit = k
                break
        if hit < 0:
            rem.append(work[0])
            work = work[1:]
        else:
            work = sub_scaled(work, c / glc[hit], exp_sub(m, glead[hit]), gterms[hit], code, aux)
    return rem
