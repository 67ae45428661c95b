"""Structure-constant algebras, quadratic relations and representations.

A multiplication on an ``n``-dimensional space is a rank-3 tensor ``c`` with
``e_i ∘ e_j = Σ_k c[i, j, k] e_k``.  Functions accept either such a tensor or
an :class:`Algebra` plus the name of one of its multiplications.

A representation ``(l, r, V)`` is stored as two families of ``vdim × vdim``
matrices indexed by the basis of the algebra: ``left[i] = l(e_i)``.  It is a
representation for a set of relations exactly when the semidirect product
``A ⋉ V`` satisfies them, and that is how it is checked here.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import linalg as la
from .errors import DimMismatch, UnknownMult

DEFAULT_CAP = 100


def default_cap():
    """Violation cap, overridable through ``OPSPLIT_VIOLATION_CAP``."""
    raw = os.environ.get("OPSPLIT_VIOLATION_CAP")
    if raw is None:
        return DEFAULT_CAP
    return max(1, int(raw))


# ---------------------------------------------------------------------------
# algebras


@dataclass(frozen=True, eq=False)
class Algebra:
    """A vector space with one or more named multiplications."""

    mults: dict
    labels: tuple = None

    def __post_init__(self):
        if not self.mults:
            raise ValueError("an algebra needs at least one multiplication")
        mults = {name: la.qarray(t) for name, t in self.mults.items()}
        dims = {t.shape for t in mults.values()}
        if len(dims) != 1:
            raise DimMismatch(f"multiplications have different shapes: {dims}")
        (shape,) = dims
        if len(shape) != 3 or len(set(shape)) != 1:
            raise DimMismatch(f"structure tensor must be n×n×n, got {shape}")
        for t in mults.values():
            t.setflags(write=False)
        object.__setattr__(self, "mults", mults)
        labels = self.labels
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(shape[0]))
        if len(labels) != shape[0]:
            raise DimMismatch(f"{len(labels)} labels for dimension {shape[0]}")
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def dim(self):
        return len(self.labels)

    def __getitem__(self, name):
        try:
            return self.mults[name]
        except KeyError:
            raise UnknownMult(name) from None

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.labels == other.labels
            and self.mults.keys() == other.mults.keys()
            and all(la.equal(self.mults[k], other.mults[k]) for k in self.mults)
        )


def tensor_of(a, mult=None):
    """The structure tensor meant by ``(a, mult)``."""
    if isinstance(a, Algebra):
        if mult is None:
            if len(a.mults) != 1:
                raise UnknownMult(f"ambiguous: choose one of {sorted(a.mults)}")
            (mult,) = a.mults
        return a[mult]
    if hasattr(a, "circ") and mult is None:
        return a.circ
    t = la.qarray(a)
    if t.ndim != 3 or len(set(t.shape)) != 1:
        raise DimMismatch(f"structure tensor must be n×n×n, got {t.shape}")
    return t


def multiply(a, u, v, mult=None):
    return la.contract(tensor_of(a, mult), la.qarray(u), la.qarray(v))


def left_mults(c):
    """``L(e_i)`` as matrices: ``L[i] @ y = e_i ∘ y``."""
    return np.ascontiguousarray(la.qarray(c).transpose(0, 2, 1))


def right_mults(c):
    """``R(e_i)`` as matrices: ``R[i] @ y = y ∘ e_i``."""
    return np.ascontiguousarray(la.qarray(c).transpose(1, 2, 0))


def dual_family(f):
    """``ρ*`` with ``⟨ρ*(x)u*, v⟩ = −⟨u*, ρ(x)v⟩``: minus the transposes."""
    f = la.qarray(f)
    return np.ascontiguousarray(-f.transpose(0, 2, 1))


def apply_family(f, x):
    """``ρ(x)`` for a vector ``x`` of the acting algebra."""
    return la.einsum("i,iab->ab", la.qarray(x), la.qarray(f))


# ---------------------------------------------------------------------------
# relations

# (x∘y)∘z, (x∘z)∘y, x∘(y∘z), x∘(z∘y), (y∘z)∘x, (y∘x)∘z,
# y∘(z∘x), y∘(x∘z), (z∘x)∘y, (z∘y)∘x, z∘(x∘y), z∘(y∘x)
# with x, y, z = e_i, e_j, e_k and output coordinate l.
RELATION_TERMS = (
    "ijm,mkl->ijkl",
    "ikm,mjl->ijkl",
    "jkm,iml->ijkl",
    "kjm,iml->ijkl",
    "jkm,mil->ijkl",
    "jim,mkl->ijkl",
    "kim,jml->ijkl",
    "ikm,jml->ijkl",
    "kim,mjl->ijkl",
    "kjm,mil->ijkl",
    "ijm,kml->ijkl",
    "jim,kml->ijkl",
)

SYMMETRIES = ("none", "symmetric", "antisymmetric")


@dataclass(frozen=True)
class RelationSet:
    """Quadratic relations ``Σ k_t · term_t = 0`` plus an optional symmetry."""

    relations: tuple
    symmetry: str = "none"
    name: str = ""

    def __post_init__(self):
        rels = tuple(tuple(la.Q(k) for k in r) for r in self.relations)
        if any(len(r) != 12 for r in rels):
            raise ValueError("each relation needs exactly 12 coefficients")
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}")
        object.__setattr__(self, "relations", rels)


def _coeffs(**ks):
    out = [0] * 12
    for key, val in ks.items():
        out[int(key[1:]) - 1] = val
    return tuple(out)


# x∘(y∘z) = (x∘y)∘z + y∘(x∘z)
LEIBNIZ = RelationSet((_coeffs(k1=1, k3=-1, k8=1),), "none", "leibniz")
# [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 with [x,y] = −[y,x]
LIE = RelationSet((_coeffs(k3=1, k7=1, k11=1),), "antisymmetric", "lie")
ASSOCIATIVE = RelationSet((_coeffs(k1=1, k3=-1),), "none", "associative")
PRESETS = {"leibniz": LEIBNIZ, "lie": LIE, "associative": ASSOCIATIVE}


class Violation(NamedTuple):
    relation: object
    triple: tuple
    residual: tuple


@dataclass(frozen=True)
class ViolationReport:
    ok: bool
    violations: tuple = ()
    total: int = 0

    def __bool__(self):
        return self.ok


def _sort_key(v):
    rel = v.relation
    return (0, rel, "") if isinstance(rel, int) else (1, 0, str(rel)), v.triple


def report_from_residual(ints, den, relation, cap=None):
    """Violations of one identity given its integer residual ``ints / den``.

    The last axis of ``ints`` is the output coordinate; the leading axes index
    the basis tuple.
    """
    cap = default_cap() if cap is None else cap
    ints = np.asarray(ints)
    bad = np.argwhere((ints != 0).any(axis=-1)) if ints.ndim > 1 else np.argwhere(ints != 0)
    total = len(bad)
    vs = []
    for idx in bad[:cap]:
        idx = tuple(int(i) for i in idx)
        res = ints[idx] if ints.ndim > 1 else np.array([ints[idx]])
        vs.append(Violation(relation, idx, tuple(Fraction(int(x), den) for x in res)))
    return ViolationReport(total == 0, tuple(vs), total)


def merge_reports(reports, cap=None):
    cap = default_cap() if cap is None else cap
    reports = list(reports)
    vs = sorted((v for r in reports for v in r.violations), key=_sort_key)
    total = sum(r.total for r in reports)
    return ViolationReport(total == 0, tuple(vs[:cap]), total)


def identity_report(terms, relation, cap=None):
    """Report for ``Σ coef · einsum(...) = 0`` given as :func:`linalg.combine` terms."""
    ints, den = la.combine(terms)
    return report_from_residual(ints, den, relation, cap)


def _symmetry_report(c, symmetry, cap):
    if symmetry == "none":
        return ViolationReport(True)
    sign = -1 if symmetry == "antisymmetric" else 1
    swapped = np.ascontiguousarray(c.transpose(1, 0, 2))
    ints, den = la.combine([(1, "ijk->ijk", (c,)), (-sign, "ijk->ijk", (swapped,))])
    n = c.shape[0]
    mask = np.zeros((n, n, 1), dtype=bool)
    for i in range(n):
        mask[i, i:] = True
    ints = np.where(mask, ints, 0)
    return report_from_residual(ints, den, symmetry, cap)


def check_relations(a, rs, mult=None, cap=None):
    """Check every relation of ``rs`` (and its symmetry) on all basis triples."""
    c = tensor_of(a, mult)
    reports = [_symmetry_report(c, rs.symmetry, cap)]
    for index, ks in enumerate(rs.relations):
        terms = [(k, sub, (c, c)) for k, sub in zip(ks, RELATION_TERMS) if k != 0]
        if terms:
            reports.append(identity_report(terms, index, cap))
    return merge_reports(reports, cap)


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class Rep:
    """Actions ``left[i] = l(e_i)`` and ``right[i] = r(e_i)`` on a space ``V``."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        left, right = la.qarray(self.left), la.qarray(self.right)
        if left.shape != right.shape or left.ndim != 3 or left.shape[1] != left.shape[2]:
            raise DimMismatch(f"rep families have shapes {left.shape}, {right.shape}")
        left.setflags(write=False)
        right.setflags(write=False)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def dim(self):
        return self.left.shape[0]

    @property
    def vdim(self):
        return self.left.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, Rep)
            and la.equal(self.left, other.left)
            and la.equal(self.right, other.right)
        )


def adjoint_rep(a, mult=None):
    c = tensor_of(a, mult)
    return Rep(left_mults(c), right_mults(c))


def zero_rep(n, m):
    return Rep(la.zeros(n, m, m), la.zeros(n, m, m))


def semidirect_product(a, rep, mult=None):
    """Multiplication on ``A ⊕ V``: ``(x+u)(y+v) = xy + l(x)v + r(y)u``."""
    c = tensor_of(a, mult)
    n, m = c.shape[0], rep.vdim
    if rep.dim != n:
        raise DimMismatch(f"rep acts by {rep.dim} elements, algebra has dim {n}")
    d = la.zeros(n + m, n + m, n + m)
    d[:n, :n, :n] = c
    d[:n, n:, n:] = rep.left.transpose(0, 2, 1)
    d[n:, :n, n:] = rep.right.transpose(2, 0, 1)
    return d


def is_representation(a, rs, rep, mult=None, cap=None):
    return check_relations(semidirect_product(a, rep, mult), rs, cap=cap)


def dual_rep(rep):
    return Rep(dual_family(rep.left), dual_family(rep.right))


def rep_equivalent(r1, r2, phi):
    """Whether the invertible ``φ: V1 → V2`` intertwines both actions."""
    phi = la.qarray(phi)
    if r1.dim != r2.dim or phi.shape != (r2.vdim, r1.vdim) or r1.vdim != r2.vdim:
        return False
    if la.rank(phi) < r1.vdim:
        return False
    for f1, f2 in ((r1.left, r2.left), (r1.right, r2.right)):
        if not la.vanishes([(1, "ab,ibc->iac", (phi, f1)), (-1, "iab,bc->iac", (f2, phi))]):
            return False
    return True


# ---------------------------------------------------------------------------
# type matrices


@dataclass(frozen=True)
class TypeMatrix:
    """``M = [[a1, b1], [a2, b2]]``, acting on pairs by ``(f, g)M = (a1 f + a2 g, b1 f + b2 g)``."""

    a1: Fraction
    b1: Fraction
    a2: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("a1", "b1", "a2", "b2"):
            object.__setattr__(self, name, la.Q(getattr(self, name)))

    @classmethod
    def of(cls, rows):
        (a1, b1), (a2, b2) = rows
        return cls(a1, b1, a2, b2)

    @property
    def det(self):
        return self.a1 * self.b2 - self.a2 * self.b1

    @property
    def rows(self):
        return ((self.a1, self.b1), (self.a2, self.b2))

    def __matmul__(self, other):
        (p, q), (r, s) = self.rows
        (t, u), (v, w) = other.rows
        return TypeMatrix(p * t + q * v, p * u + q * w, r * t + s * v, r * u + s * w)

    def inverse(self):
        d = self.det
        if d == 0:
            from .errors import SingularTypeMatrix

            raise SingularTypeMatrix(f"|M| = 0 for {self.rows}")
        return TypeMatrix(self.b2 / d, -self.b1 / d, -self.a2 / d, self.a1 / d)

    def __str__(self):
        return "[[{},{}],[{},{}]]".format(self.a1, self.b1, self.a2, self.b2)


IDENTITY = TypeMatrix(1, 0, 0, 1)


def combine_reps(alpha, beta, M):
    """The pair ``(α, β)M = (a1 α + a2 β, b1 α + b2 β)`` as a :class:`Rep`."""
    alpha, beta = la.qarray(alpha), la.qarray(beta)
    if alpha.shape != beta.shape:
        raise DimMismatch(f"α has shape {alpha.shape}, β has {beta.shape}")
    return Rep(M.a1 * alpha + M.a2 * beta, M.b1 * alpha + M.b2 * beta)


# ---------------------------------------------------------------------------
# display


def format_element(v, labels):
    """Render a vector like ``4x-4h`` (coefficients in basis order)."""
    parts = []
    for coef, name in zip(v, labels):
        coef = la.Q(coef)
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if mag == 1:
            body = name
        elif mag.denominator == 1:
            body = f"{mag.numerator}{name}"
        else:
            body = f"({mag}){name}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_element(text, labels):
    """Inverse of :func:`format_element` (used for literal product tables)."""
    import re

    text = text.replace(" ", "").replace("−", "-")
    v = la.zeros(len(labels))
    if text == "0":
        return v
    index = {name: i for i, name in enumerate(labels)}
    names = "|".join(sorted(map(re.escape, labels), key=len, reverse=True))
    pattern = re.compile(rf"([+-]?)(?:\(([^)]+)\)|(\d+))?({names})")
    pos = 0
    for m in pattern.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        coef = la.Q(m.group(2) or m.group(3) or 1)
        v[index[m.group(4)]] += -coef if m.group(1) == "-" else coef
    if pos != len(text):
        raise ValueError(f"cannot parse {text!r}")
    return v
