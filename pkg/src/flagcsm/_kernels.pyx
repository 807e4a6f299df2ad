# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels.

Same contract as :mod:`flagcsm._kernels_py`. When every key and coefficient
is a machine-sized integer and the accumulated values provably stay below
2**62, the products are summed in a C++ hash map; anything else (fractions,
big integers) goes through the generic object path.
"""

from libc.stdint cimport int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

BACKEND = "cython"

cdef object LIMIT = 1 << 62


cdef object _maxabs(dict d):
    """Largest |coefficient| if every entry is a small int, else None."""
    cdef object m = 0
    for k, v in d.items():
        if type(v) is not int or type(k) is not int:
            return None
        if k < 0 or k >= LIMIT:
            return None
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


cdef dict _fast(dict a, dict b, dict acc):
    cdef vector[int64_t] ak, av, bk, bv
    cdef unordered_map[int64_t, int64_t] out
    cdef unordered_map[int64_t, int64_t].iterator it
    cdef Py_ssize_t i, j, na, nb
    cdef int64_t ka, ca
    for k, v in a.items():
        ak.push_back(k)
        av.push_back(v)
    for k, v in b.items():
        bk.push_back(k)
        bv.push_back(v)
    na = ak.size()
    nb = bk.size()
    out.reserve(na * nb + len(acc))
    for k, v in acc.items():
        out[<int64_t>k] = <int64_t>v
    for i in range(na):
        ka = ak[i]
        ca = av[i]
        for j in range(nb):
            out[ka + bk[j]] += ca * bv[j]
    res = {}
    it = out.begin()
    while it != out.end():
        if deref(it).second != 0:
            res[deref(it).first] = deref(it).second
        inc(it)
    return res


cdef dict _generic(dict a, dict b, dict acc):
    out = dict(acc)
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


cdef dict _accumulate(dict a, dict b, dict acc):
    if len(a) > len(b):
        a, b = b, a
    ma = _maxabs(a)
    mb = _maxabs(b) if ma is not None else None
    mc = _maxabs(acc) if mb is not None else None
    if mc is not None and ma * mb * len(a) + mc < LIMIT:
        return _fast(a, b, acc)
    return _generic(a, b, acc)


def mul(dict a, dict b):
    """Return the product of two packed polynomials."""
    if not a or not b:
        return {}
    return _accumulate(a, b, {})


def addmul(dict acc, dict a, dict b):
    """In place ``acc += a * b``."""
    if not a or not b:
        return
    res = _accumulate(a, b, acc)
    acc.clear()
    acc.update(res)


def dot(pairs):
    """Return the sum of ``a * b`` over an iterable of polynomial pairs."""
    cdef unordered_map[int64_t, int64_t] out
    cdef unordered_map[int64_t, int64_t].iterator it
    cdef int64_t ka, ca, kb, cb
    cdef object bound = 0
    rest = []
    for a, b in pairs:
        if not a or not b:
            continue
        if rest:
            rest.append((a, b))
            continue
        if len(a) > len(b):
            a, b = b, a
        ma = _maxabs(a)
        mb = _maxabs(b) if ma is not None else None
        if mb is None or bound + ma * mb * len(a) >= LIMIT:
            rest.append((a, b))
            continue
        bound += ma * mb * len(a)
        bitems = [(k, v) for k, v in b.items()]
        for k, v in a.items():
            ka = k
            ca = v
            for kb, cb in bitems:
                out[ka + kb] += ca * cb
    acc = {}
    it = out.begin()
    while it != out.end():
        if deref(it).second != 0:
            acc[deref(it).first] = deref(it).second
        inc(it)
    for a, b in rest:
        acc = _generic(a, b, acc)
    return acc
