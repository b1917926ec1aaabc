"""Pure-Python term kernel.

Hot primitives shared by polynomial multiplication and Groebner reduction.
`jonq._kernel_c` is a compiled twin with the same signatures; `jonq.kernel`
picks one at import time.  Terms are (key, coeff) pairs where `key` is a
tuple of ints (an additive order key or packed exponent vector) and `coeff`
is an int or Fraction.  Term lists are sorted by key, descending.
"""

BACKEND = "python"


def merge_linear(a, ia, ca, sa, b, ib, cb, sb):
    """Merge ca*shift(sa, a[ia:]) + cb*shift(sb, b[ib:]) into one sorted list.

    `a`, `b` are term lists sorted descending by key; `sa`, `sb` are key
    tuples added componentwise (or None).  Cancelling terms are dropped.
    """
    out = []
    append = out.append
    na, nb = len(a), len(b)
    if ia < na:
        ka, va = a[ia]
        if sa is not None:
            ka = tuple(map(sum, zip(ka, sa)))
    while ia < na and ib < nb:
        kb, vb = b[ib]
        if sb is not None:
            kb = tuple(map(sum, zip(kb, sb)))
        if ka > kb:
            append((ka, ca * va))
            ia += 1
            if ia < na:
                ka, va = a[ia]
                if sa is not None:
                    ka = tuple(map(sum, zip(ka, sa)))
        elif kb > ka:
            append((kb, cb * vb))
            ib += 1
        else:
            c = ca * va + cb * vb
            if c:
                append((ka, c))
            ia += 1
            ib += 1
            if ia < na:
                ka, va = a[ia]
                if sa is not None:
                    ka = tuple(map(sum, zip(ka, sa)))
    while ia < na:
        k, v = a[ia]
        if sa is not None:
            k = tuple(map(sum, zip(k, sa)))
        append((k, ca * v))
        ia += 1
    while ib < nb:
        k, v = b[ib]
        if sb is not None:
            k = tuple(map(sum, zip(k, sb)))
        append((k, cb * v))
        ib += 1
    return out


def mul_packed(a_items, b_items):
    """Sparse product of two packed-key term mappings.

    Keys are ints packed so that monomial product is integer addition.
    Returns a dict; zero coefficients are dropped.
    """
    out = {}
    get = out.get
    for ka, va in a_items:
        for kb, vb in b_items:
            k = ka + kb
            c = get(k)
            if c is None:
                out[k] = va * vb
            else:
                c = c + va * vb
                if c:
                    out[k] = c
                else:
                    del out[k]
    return out


def find_reducer(exps, mask, lead_data):
    """Index of the first basis element whose lead monomial divides `exps`.

    `lead_data` is a list of (support_mask, lead_exponents, index) triples.
    Returns -1 when nothing divides.
    """
    for lm_mask, lm, idx in lead_data:
        if lm_mask & ~mask:
            continue
        ok = True
        for e, m in zip(lm, exps):
            if e > m:
                ok = False
                break
        if ok:
            return idx
    return -1


def scale_terms(terms, c):
    """Return terms scaled by a nonzero constant."""
    return [(k, c * v) for k, v in terms]
