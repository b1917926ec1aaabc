# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of jonq._kernel (same signatures, same semantics).

Coefficients stay Python ints/Fractions (arbitrary precision); the win is
C-level loop control in the merge and product kernels that dominate
Groebner reduction time.
"""

BACKEND = "cython"


cdef inline tuple _shift(tuple key, tuple s):
    cdef Py_ssize_t n = len(key)
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = key[i] + s[i]
    return tuple(out)


def merge_linear(list a, Py_ssize_t ia, ca, sa, list b, Py_ssize_t ib, cb, sb):
    """Merge ca*shift(sa, a[ia:]) + cb*shift(sb, b[ib:]); descending keys."""
    cdef list out = []
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef tuple ka = None
    cdef tuple kb = None
    cdef bint have_a = False
    cdef bint have_b = False
    va = None
    vb = None
    if ia < na:
        ka, va = <tuple>a[ia]
        if sa is not None:
            ka = _shift(ka, <tuple>sa)
        have_a = True
    while have_a and ib < nb:
        if not have_b:
            kb, vb = <tuple>b[ib]
            if sb is not None:
                kb = _shift(kb, <tuple>sb)
            have_b = True
        if ka > kb:
            out.append((ka, ca * va))
            ia += 1
            if ia < na:
                ka, va = <tuple>a[ia]
                if sa is not None:
                    ka = _shift(ka, <tuple>sa)
            else:
                have_a = False
        elif kb > ka:
            out.append((kb, cb * vb))
            ib += 1
            have_b = False
        else:
            c = ca * va + cb * vb
            if c:
                out.append((ka, c))
            ia += 1
            ib += 1
            have_b = False
            if ia < na:
                ka, va = <tuple>a[ia]
                if sa is not None:
                    ka = _shift(ka, <tuple>sa)
            else:
                have_a = False
    while ia < na:
        ka, va = <tuple>a[ia]
        if sa is not None:
            ka = _shift(ka, <tuple>sa)
        out.append((ka, ca * va))
        ia += 1
    while ib < nb:
        kb, vb = <tuple>b[ib]
        if sb is not None:
            kb = _shift(kb, <tuple>sb)
        out.append((kb, cb * vb))
        ib += 1
    return out


def mul_packed(list a_items, list b_items):
    """Sparse product over packed integer keys (monomial mul = int add)."""
    cdef dict out = {}
    cdef Py_ssize_t i, j
    cdef Py_ssize_t na = len(a_items)
    cdef Py_ssize_t nb = len(b_items)
    for i in range(na):
        ka, va = <tuple>a_items[i]
        for j in range(nb):
            kb, vb = <tuple>b_items[j]
            k = ka + kb
            c = out.get(k)
            if c is None:
                out[k] = va * vb
            else:
                c = c + va * vb
                if c:
                    out[k] = c
                else:
                    del out[k]
    return out


def find_reducer(tuple exps, mask, list lead_data):
    """First basis index whose lead monomial divides exps; -1 if none."""
    cdef Py_ssize_t t, k, n
    cdef tuple lm
    cdef bint ok
    cdef Py_ssize_t nlead = len(lead_data)
    n = len(exps)
    for t in range(nlead):
        lm_mask, lm_obj, idx = <tuple>lead_data[t]
        if lm_mask & ~mask:
            continue
        lm = <tuple>lm_obj
        ok = True
        for k in range(n):
            if lm[k] > exps[k]:
                ok = False
                break
        if ok:
            return idx
    return -1


def scale_terms(list terms, c):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(terms)):
        k, v = <tuple>terms[i]
        out.append((k, c * v))
    return out
