# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_kernels_py``."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef tuple t
    cdef object v
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    if lb == 0:
        return a
    t = PyTuple_New(la)
    for i in range(lb):
        v = (<object>PyTuple_GET_ITEM(a, i)) + (<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, i, v)
    for i in range(lb, la):
        v = <object>PyTuple_GET_ITEM(a, i)
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, i, v)
    return t


def seq_add(tuple a, tuple b):
    return _add(a, b)


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object ca, cb, old
    if len(a) < len(b):
        a, b = b, a
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = _add(ka, kb)
            old = out.get(k)
            if old is None:
                out[k] = ca * cb
            else:
                out[k] = old + ca * cb
    return {k: v for k, v in out.items() if v}


def tensor_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple p1, p2, k
    cdef object c1, c2, old
    for p1, c1 in a.items():
        for p2, c2 in b.items():
            k = (_add(<tuple>p1[0], <tuple>p2[0]), _add(<tuple>p1[1], <tuple>p2[1]))
            old = out.get(k)
            if old is None:
                out[k] = c1 * c2
            else:
                out[k] = old + c1 * c2
    return {k: v for k, v in out.items() if v}


def flag_reduce(exps, object qmask):
    cdef Py_ssize_t n = len(exps), i = 0
    cdef long carry = 0, t
    cdef unsigned long long q, m = 0
    if qmask.bit_length() > 63 or n > 63:
        return _flag_reduce_big(exps, qmask)
    q = qmask
    while i < n or carry:
        if i >= 64:
            return -1
        t = carry + (<long>exps[i] if i < n else 0)
        if t:
            if not (q >> i) & 1:
                return -1
            m |= (<unsigned long long>1) << i
            carry = t - 1
        i += 1
    return m


def _flag_reduce_big(exps, qmask):
    mask = 0
    carry = 0
    i = 0
    n = len(exps)
    while i < n or carry:
        t = carry + (exps[i] if i < n else 0)
        if t:
            if not (qmask >> i) & 1:
                return -1
            mask |= 1 << i
            carry = t - 1
        i += 1
    return mask


cdef long long _mul_masks(unsigned long long r1, unsigned long long r2,
                          unsigned long long q):
    cdef unsigned long long m = 0
    cdef long carry = 0, t
    cdef int i = 0
    if not (r1 & r2):
        return <long long>(r1 | r2)
    while i < 64 and ((r1 >> i) or (r2 >> i) or carry):
        t = carry + <long>((r1 >> i) & 1) + <long>((r2 >> i) & 1)
        if t:
            if not (q >> i) & 1:
                return -1
            m |= (<unsigned long long>1) << i
            carry = t - 1
        i += 1
    if carry:
        return -1
    return <long long>m


def flag_mul_masks(r1, r2, qmask):
    if qmask.bit_length() > 62:
        from flagcob._kernels_py import flag_mul_masks as slow
        return slow(r1, r2, qmask)
    return _mul_masks(r1, r2, qmask)


def flag_mul(dict a, dict b, qmask):
    cdef dict out = {}, acc, prod
    cdef long long r
    cdef unsigned long long q
    if qmask.bit_length() > 62:
        from flagcob._kernels_py import flag_mul as slow
        return slow(a, b, qmask)
    q = qmask
    for r1, c1 in a.items():
        for r2, c2 in b.items():
            r = _mul_masks(r1, r2, q)
            if r < 0:
                continue
            prod = poly_mul(c1, c2)
            acc = out.get(r)
            if acc is None:
                out[r] = prod
            else:
                for k, v in prod.items():
                    acc[k] = acc.get(k, 0) + v
    res = {}
    for r, poly in out.items():
        poly = {k: v for k, v in poly.items() if v}
        if poly:
            res[r] = poly
    return res
