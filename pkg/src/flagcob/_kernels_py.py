"""Pure-Python reference kernels.

These are the inner loops of the package: sparse products of integer
polynomials keyed by exponent tuples, and the normal form of monomials in
the truncated flag ring.  A compiled twin lives in ``_kernels_c.pyx`` and
must agree with this module on every input.

Exponent tuples are canonical: entry ``i`` is the multiplicity of the
generator of index ``i + 1`` and trailing zeros are stripped.  Subsets of
``[n]`` are bitmasks with bit ``i - 1`` standing for element ``i``.
"""


def seq_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def poly_mul(a, b):
    """Product of two sparse polynomials ``{exponent tuple: int}``."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, cb in b.items():
        lb = len(kb)
        for ka, ca in a.items():
            if not kb:
                k = ka
            elif not ka:
                k = kb
            elif len(ka) >= lb:
                k = tuple(x + y for x, y in zip(ka, kb)) + ka[lb:]
            else:
                k = tuple(x + y for x, y in zip(ka, kb)) + kb[len(ka):]
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def tensor_mul(a, b):
    """Product in the tensor square; keys are pairs of exponent tuples."""
    out = {}
    get = out.get
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            k = (seq_add(l1, l2), seq_add(r1, r2))
            out[k] = get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def flag_reduce(exps, qmask):
    """Normal form of ``prod x_i^exps[i-1]`` in the ring of ``X_Q``.

    Applies ``x_i^2 -> x_i x_{i+1}`` left to right; ``x_i`` vanishes for
    ``i`` outside ``Q``.  Returns the square-free support as a bitmask, or
    ``-1`` when the monomial is zero.
    """
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


def flag_mul_masks(r1, r2, qmask):
    """Normal form of ``x^R1 * x^R2`` for square-free ``R1``, ``R2``."""
    if not r1 & r2:
        return r1 | r2
    mask = 0
    carry = 0
    i = 0
    while (r1 >> i) or (r2 >> i) or carry:
        t = carry + ((r1 >> i) & 1) + ((r2 >> i) & 1)
        if t:
            if not (qmask >> i) & 1:
                return -1
            mask |= 1 << i
            carry = t - 1
        i += 1
    return mask


def flag_mul(a, b, qmask):
    """Product of two flag-ring elements ``{mask: {exponent tuple: int}}``."""
    out = {}
    for r1, c1 in a.items():
        for r2, c2 in b.items():
            r = flag_mul_masks(r1, r2, qmask)
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
