"""Pure-Python sparse polynomial kernels.

Polynomials are dicts mapping a packed monomial key (8 bits per exponent)
to a rational coefficient (``int`` or ``Fraction``). Packing makes monomial
multiplication an integer addition.
"""

BACKEND = "python"


def mul(a, b):
    """Return the product of two packed polynomials."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def addmul(acc, a, b):
    """In place ``acc += a * b``."""
    if len(a) > len(b):
        a, b = b, a
    get = acc.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    for k in [k for k, v in acc.items() if not v]:
        del acc[k]


def dot(pairs):
    """Return the sum of ``a * b`` over an iterable of polynomial pairs."""
    acc = {}
    for a, b in pairs:
        if a and b:
            addmul(acc, a, b)
    return acc
