"""Exact rational linear algebra on numpy object arrays of ``Fraction``.

Every vector, matrix and rank-3 tensor in the package is a numpy array with
``dtype=object`` whose entries are ``fractions.Fraction``.  Small products use
numpy's own object arithmetic.  Heavy multilinear identities go through an
integer kernel: operands are cleared of denominators, contracted as machine
integers when a magnitude bound proves that int64 cannot overflow (Python
integers otherwise), and rescaled at the end.  The result is exact either way.

Rank, inverse and null space come from sympy's ``DomainMatrix`` over QQ.
"""

import math
from fractions import Fraction
from functools import reduce

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import DimMismatch, Singular

_INT64_SAFE = 2**62


def Q(x):
    """Coerce ``x`` to an exact ``Fraction``; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, np.bool_)):
        raise TypeError(f"not an exact scalar: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (float, np.floating)):
        raise TypeError(f"floats are not exact scalars: {x!r}")
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"not an exact scalar: {x!r}")


_to_q = np.frompyfunc(Q, 1, 1)


def qarray(data):
    """Object array of Fractions built from nested lists, arrays or scalars."""
    a = np.array(data, dtype=object)
    if a.size == 0:
        return a
    out = _to_q(a)
    return np.asarray(out, dtype=object)


def zeros(*shape):
    if len(shape) == 1 and isinstance(shape[0], tuple):
        shape = shape[0]
    a = np.empty(shape, dtype=object)
    a.fill(Fraction(0))
    return a


def eye(n):
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return a


def basis_vector(n, i):
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def is_zero(a):
    return all(x == 0 for x in np.asarray(a, dtype=object).flat)


def equal(a, b):
    a, b = np.asarray(a, dtype=object), np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


# ---------------------------------------------------------------------------
# integer kernel


def integerize(a):
    """Return ``(ints, d)`` with ``a == ints / d`` entrywise and ``d`` minimal."""
    a = np.asarray(a, dtype=object)
    flat = [Q(x) for x in a.flat]
    den = math.lcm(*(f.denominator for f in flat)) if flat else 1
    ints = np.empty(a.shape, dtype=object)
    ints.flat[:] = [f.numerator * (den // f.denominator) for f in flat] if flat else []
    return ints, den


def _maxabs(a):
    return max((abs(int(x)) for x in a.flat), default=0)


def _int_einsum(subscripts, ints):
    inputs, output = subscripts.replace(" ", "").split("->")
    names = inputs.split(",")
    if len(names) != len(ints):
        raise DimMismatch(f"{subscripts!r} expects {len(names)} operands, got {len(ints)}")
    sizes = {}
    for name, arr in zip(names, ints):
        if len(name) != arr.ndim:
            raise DimMismatch(f"operand {name!r} has {arr.ndim} axes")
        for ch, n in zip(name, arr.shape):
            if sizes.setdefault(ch, n) != n:
                raise DimMismatch(f"index {ch!r} has sizes {sizes[ch]} and {n}")
    summed = set("".join(names)) - set(output)
    bound = math.prod(_maxabs(a) for a in ints) * math.prod(sizes[c] for c in summed)
    if bound < _INT64_SAFE:
        return np.einsum(subscripts, *(a.astype(np.int64) for a in ints))
    return np.einsum(subscripts, *ints)


def _rescale(ints, den):
    if ints.ndim == 0:
        return Fraction(int(ints), den)
    out = np.empty(ints.shape, dtype=object)
    out.flat[:] = [Fraction(int(x), den) for x in ints.flat]
    return out


def einsum(subscripts, *operands):
    """Exact ``np.einsum`` over Fraction arrays (explicit ``->`` required)."""
    pairs = [integerize(op) for op in operands]
    ints = _int_einsum(subscripts, [p[0] for p in pairs])
    return _rescale(ints, math.prod(p[1] for p in pairs))


def combine(terms):
    """Integer form of ``Σ coef · einsum(sub, *ops)`` over ``(coef, sub, ops)`` terms.

    Returns ``(ints, d)`` with the exact value ``ints / d``.  Operands shared
    between terms are integerized once.
    """
    cache = {}

    def ints_of(op):
        key = id(op)
        if key not in cache:
            cache[key] = (op, integerize(op))
        return cache[key][1]

    parts = []
    for coef, sub, ops in terms:
        coef = Q(coef)
        if coef == 0:
            continue
        pairs = [ints_of(op) for op in ops]
        val = _int_einsum(sub, [p[0] for p in pairs])
        parts.append((val, coef.numerator, coef.denominator * math.prod(p[1] for p in pairs)))
    if not parts:
        raise ValueError("combine needs at least one nonzero term")
    den = math.lcm(*(p[2] for p in parts))
    weights = [num * (den // d) for _, num, d in parts]
    bound = sum(_maxabs(v) * abs(w) for (v, _, _), w in zip(parts, weights))
    if bound < _INT64_SAFE:
        total = sum(v.astype(np.int64) * w for (v, _, _), w in zip(parts, weights))
    else:
        total = sum(v.astype(object) * w for (v, _, _), w in zip(parts, weights))
    g = reduce(math.gcd, (int(x) for x in np.asarray(total).flat), den)
    if g > 1:
        total = total // g
        den //= g
    return total, den


def residual(terms):
    """Exact value of a linear combination of einsum terms, as Fractions."""
    ints, den = combine(terms)
    return _rescale(np.asarray(ints), den)


def vanishes(terms):
    ints, _ = combine(terms)
    return not np.any(np.asarray(ints) != 0)


# ---------------------------------------------------------------------------
# matrices


def _dm(m):
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise DimMismatch(f"expected a matrix, got shape {m.shape}")
    rows = [[QQ(Q(x).numerator, Q(x).denominator) for x in row] for row in m]
    return DomainMatrix(rows, m.shape, QQ)


def _from_dm(dm):
    rows = dm.to_list()
    out = zeros(*dm.shape)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = Fraction(int(x.numerator), int(x.denominator))
    return out


def rank(m):
    m = np.asarray(m, dtype=object)
    if 0 in m.shape:
        return 0
    return _dm(m).rank()


def det(m):
    m = np.asarray(m, dtype=object)
    if m.shape[0] != m.shape[1]:
        raise DimMismatch(f"det of non-square {m.shape}")
    if m.shape[0] == 0:
        return Fraction(1)
    x = _dm(m).det()
    return Fraction(int(x.numerator), int(x.denominator))


def invert(m):
    """Exact inverse; raises ``Singular`` when rank < n."""
    m = np.asarray(m, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatch(f"invert needs a square matrix, got {m.shape}")
    n = m.shape[0]
    if n == 0:
        return zeros(0, 0)
    if rank(m) < n:
        raise Singular(f"matrix of size {n} has rank {rank(m)}")
    return _from_dm(_dm(m).inv())


def nullspace(m):
    """Rows spanning ``{v : m @ v = 0}`` (possibly zero rows)."""
    m = np.asarray(m, dtype=object)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return eye(cols)
    ns = _dm(m).nullspace()
    if ns.shape[0] == 0:
        return zeros(0, cols)
    return _from_dm(ns)


def contract(t, u, v):
    """``Σ_ij u_i v_j t[i, j, :]`` — the product of two vectors in a structure tensor."""
    t = np.asarray(t, dtype=object)
    u, v = np.asarray(u, dtype=object), np.asarray(v, dtype=object)
    if t.ndim != 3 or u.shape != (t.shape[0],) or v.shape != (t.shape[1],):
        raise DimMismatch(f"contract: tensor {t.shape} with vectors {u.shape}, {v.shape}")
    out = zeros(t.shape[2])
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        for j, vj in enumerate(v):
            if vj:
                out = out + (ui * vj) * t[i, j]
    return out
