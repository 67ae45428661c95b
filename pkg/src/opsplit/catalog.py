"""Reference structures: sl(2) with its averaging operator and trace form, and small algebras.

The sl(2) basis is ordered ``(x, h, y)`` with ``x = E12``, ``h = diag(1, -1)``,
``y = E21``.
"""

import json
from functools import lru_cache
from importlib import resources

from . import linalg as la

SL2_LABELS = ("x", "h", "y")
X, H, Y = range(3)


def structure_tensor(n, products):
    """Tensor from ``{(i, j): vector}`` (missing products are zero)."""
    c = la.zeros(n, n, n)
    for (i, j), v in products.items():
        c[i, j] = la.qarray(v)
    return c


def sl2_bracket():
    """``[h,x] = 2x``, ``[h,y] = -2y``, ``[x,y] = h`` and antisymmetry."""
    c = la.zeros(3, 3, 3)
    for (i, j), (k, v) in {(H, X): (X, 2), (H, Y): (Y, -2), (X, Y): (H, 1)}.items():
        c[i, j, k] = la.Q(v)
        c[j, i, k] = la.Q(-v)
    return c


def sl2_averaging():
    """``P(x) = P(h) = 2x + 4y + 2h`` and ``P(y) = x + 2y + h`` (columns are images)."""
    return la.qarray([[2, 2, 1], [2, 2, 1], [4, 4, 2]])


def sl2_form():
    """Trace form: ``B(x,y) = B(y,x) = 1``, ``B(h,h) = 2``."""
    return la.qarray([[0, 0, 1], [0, 2, 0], [1, 0, 0]])


def so3_bracket():
    """Cross product: ``[e1,e2] = e3`` and cyclic."""
    c = la.zeros(3, 3, 3)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = la.Q(1)
        c[j, i, k] = la.Q(-1)
    return c


def heisenberg_bracket():
    """``[e1,e2] = e3``, everything else zero."""
    c = la.zeros(3, 3, 3)
    c[0, 1, 2], c[1, 0, 2] = la.Q(1), la.Q(-1)
    return c


def affine_bracket():
    """The nonabelian 2-dim Lie algebra ``[e1,e2] = e2``."""
    c = la.zeros(2, 2, 2)
    c[0, 1, 1], c[1, 0, 1] = la.Q(1), la.Q(-1)
    return c


def leibniz_nilpotent():
    """2-dim Leibniz (not Lie): ``e1∘e1 = e2``."""
    c = la.zeros(2, 2, 2)
    c[0, 0, 1] = la.Q(1)
    return c


@lru_cache(maxsize=None)
def _data_text(name):
    return resources.files("opsplit").joinpath("data").joinpath(name).read_text()


def data_path(name):
    return resources.files("opsplit").joinpath("data").joinpath(name)


def golden_tables():
    """Product tables for the sl(2) pipeline, as ``{table: {"a*b": "vector"}}``."""
    return json.loads(_data_text("sl2_golden.json"))


def table_tensor(table, labels=SL2_LABELS):
    """Tensor from a literal table such as ``{"x*y": "2h-4y"}``; missing entries are zero."""
    from .core import parse_element

    n = len(labels)
    index = {name: i for i, name in enumerate(labels)}
    c = la.zeros(n, n, n)
    for key, value in table.items():
        left, right = key.split("*")
        c[index[left], index[right]] = parse_element(value, labels)
    return c
