"""Leibniz algebras: explicit representation identities, SDPL algebras and quadratic forms.

An SDPL algebra ("special type-a pre-Leibniz") is a pair ``(≻, ≺)`` with
``≺`` anticommutative, ``∘ = ≻ + ≺`` Leibniz, and
``x∘(y≺z) = (x∘y)≺z + y≺(x∘z) = x≺(y≺z)``.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .core import (
    LEIBNIZ,
    Rep,
    TypeMatrix,
    check_relations,
    combine_reps,
    dual_family,
    left_mults,
    rep_equivalent,
    right_mults,
    tensor_of,
)
from .errors import DegenerateForm, DimMismatch, NotLeftInvariant, NotLeibniz, NotSDPL, NotSymmetric
from .splitting import (
    SplitAlgebra,
    check_type_m_pre,
    is_nondegenerate,
    is_symmetric,
    splitting_from_form,
)

L_MATRIX = TypeMatrix(1, -1, 0, -1)
TYPE_A = TypeMatrix(1, -1, -1, 0)
TYPE_B = TYPE_A @ L_MATRIX  # [[1, 0], [-1, 1]]
ROUTES = ("typeA", "dualTypeB", "identities")


# ---------------------------------------------------------------------------
# representations, written out


def leibniz_rep_failures(a, rep, mult=None):
    """Names of the violated representation identities (empty when ``rep`` is one).

    rep1: ``l(x∘y) = l(x)l(y) − l(y)l(x)``
    rep2: ``r(x∘y) = l(x)r(y) − r(y)l(x)``
    rep3: ``r(y)l(x) = −r(y)r(x)``
    """
    c = tensor_of(a, mult)
    l, r = rep.left, rep.right
    if rep.dim != c.shape[0]:
        raise DimMismatch(f"rep acts by {rep.dim} elements, algebra has dim {c.shape[0]}")
    identities = {
        "rep1": [
            (1, "ijk,kab->ijab", (c, l)),
            (-1, "iac,jcb->ijab", (l, l)),
            (1, "jac,icb->ijab", (l, l)),
        ],
        "rep2": [
            (1, "ijk,kab->ijab", (c, r)),
            (-1, "iac,jcb->ijab", (l, r)),
            (1, "jac,icb->ijab", (r, l)),
        ],
        "rep3": [(1, "jac,icb->ijab", (r, l)), (1, "jac,icb->ijab", (r, r))],
    }
    return [name for name, terms in identities.items() if not la.vanishes(terms)]


def check_leibniz_rep(a, rep, mult=None):
    c = tensor_of(a, mult)
    if not check_relations(c, LEIBNIZ).ok:
        raise NotLeibniz("the acting multiplication is not Leibniz")
    return not leibniz_rep_failures(c, rep)


def dualize_leibniz_rep(rep):
    """``(l, r) ↦ (l*, −l* − r*)``, i.e. the dual pair combined with ``L``."""
    return combine_reps(dual_family(rep.left), dual_family(rep.right), L_MATRIX)


# ---------------------------------------------------------------------------
# type-a splittings


def bullet(s):
    """``x•y = x≻y − y≺x``."""
    return s.succ - s.prec.transpose(1, 0, 2)


def _identity_failures(s):
    c, prec, bu = s.succ + s.prec, s.prec, bullet(s)
    identities = {
        # (x∘y)•z = x•(y•z) − y•(x•z)
        "gppa2": [
            (1, "ijm,mkl->ijkl", (c, bu)),
            (-1, "jkm,iml->ijkl", (bu, bu)),
            (1, "ikm,jml->ijkl", (bu, bu)),
        ],
        # z≺(x∘y) = x•(z≺y) − (x•z)≺y
        "gppa3": [
            (1, "ijm,kml->ijkl", (c, prec)),
            (-1, "kjm,iml->ijkl", (prec, bu)),
            (1, "ikm,mjl->ijkl", (bu, prec)),
        ],
        # x•(z≺y) = −(z≺y)≺x
        "gppa4": [(1, "kjm,iml->ijkl", (prec, bu)), (1, "kjm,mil->ijkl", (prec, prec))],
    }
    return [name for name, terms in identities.items() if not la.vanishes(terms)]


def check_type_a(s, route):
    """Type-a splitting test along one of three equivalent routes."""
    if route == "typeA":
        return check_type_m_pre(s, LEIBNIZ, TYPE_A, dual=False).ok
    if route == "dualTypeB":
        return check_type_m_pre(s, LEIBNIZ, TYPE_B, dual=True).ok
    if route == "identities":
        return check_relations(s.succ + s.prec, LEIBNIZ).ok and not _identity_failures(s)
    raise ValueError(f"route must be one of {ROUTES}")


# ---------------------------------------------------------------------------
# SDPL algebras


def sdpl_failure(s):
    """First SDPL identity ``s`` violates, or ``None``."""
    c, prec = s.succ + s.prec, s.prec
    if not la.equal(prec, -prec.transpose(1, 0, 2)):
        return "antisymmetry"
    if not check_relations(c, LEIBNIZ).ok:
        return "leibniz"
    lhs = (1, "jkm,iml->ijkl", (prec, c))  # x∘(y≺z)
    if not la.vanishes([lhs, (-1, "ijm,mkl->ijkl", (c, prec)), (-1, "ikm,jml->ijkl", (c, prec))]):
        return "sdpp-derivation"
    if not la.vanishes([lhs, (-1, "jkm,iml->ijkl", (prec, prec))]):
        return "sdpp-prec"
    return None


def check_sdpl(s):
    return sdpl_failure(s) is None


class SDPLAlgebra(SplitAlgebra):
    """A :class:`SplitAlgebra` validated as SDPL on construction."""

    def __post_init__(self):
        super().__post_init__()
        failed = sdpl_failure(self)
        if failed:
            raise NotSDPL(failed)

    @classmethod
    def of(cls, s):
        return cls(s.succ, s.prec, s.labels)


@dataclass(frozen=True, eq=False)
class SDPLRep:
    """``(l≻, r≻, l≺)`` on ``V``; ``l∘ = l≻ + l≺`` and ``r∘ = r≻ − l≺``."""

    l_succ: np.ndarray
    r_succ: np.ndarray
    l_prec: np.ndarray

    def __post_init__(self):
        fams = [la.qarray(f) for f in (self.l_succ, self.r_succ, self.l_prec)]
        if len({f.shape for f in fams}) != 1 or fams[0].ndim != 3:
            raise DimMismatch(f"SDPL rep families have shapes {[f.shape for f in fams]}")
        for name, f in zip(("l_succ", "r_succ", "l_prec"), fams):
            f.setflags(write=False)
            object.__setattr__(self, name, f)

    @property
    def vdim(self):
        return self.l_succ.shape[1]

    @property
    def l_circ(self):
        return self.l_succ + self.l_prec

    @property
    def r_circ(self):
        return self.r_succ - self.l_prec

    def __eq__(self, other):
        return isinstance(other, SDPLRep) and all(
            la.equal(getattr(self, k), getattr(other, k)) for k in ("l_succ", "r_succ", "l_prec")
        )


def sdpl_rep_failures(s, rep):
    c, prec = s.succ + s.prec, s.prec
    lc, rc, lp = rep.l_circ, rep.r_circ, rep.l_prec
    failures = leibniz_rep_failures(c, Rep(lc, rc))
    first = (1, "iac,jcb->ijab", (lc, lp))  # l∘(x)l≺(y)
    if not la.vanishes([first, (-1, "ijk,kab->ijab", (c, lp)), (-1, "jac,icb->ijab", (lp, lc))]):
        failures.append("sdpp-rep1a")
    if not la.vanishes([first, (-1, "iac,jcb->ijab", (lp, lp))]):
        failures.append("sdpp-rep1b")
    second = (1, "ijk,kab->ijab", (prec, rc))  # r∘(x≺y)
    if not la.vanishes([second, (-1, "iac,jcb->ijab", (lp, rc)), (1, "jac,icb->ijab", (lp, rc))]):
        failures.append("sdpp-rep2a")
    if not la.vanishes([second, (1, "ijk,kab->ijab", (prec, lp))]):
        failures.append("sdpp-rep2b")
    return failures


def check_sdpl_rep(s, rep):
    return not sdpl_rep_failures(s, rep)


def adjoint_sdpl_rep(s):
    return SDPLRep(left_mults(s.succ), right_mults(s.succ), left_mults(s.prec))


def dual_sdpl_rep(rep):
    """``(l*≻ + r*≻, −r*≻, −r*∘)``."""
    ls, rs = dual_family(rep.l_succ), dual_family(rep.r_succ)
    return SDPLRep(ls + rs, -rs, -dual_family(rep.r_circ))


def coadjoint_sdpl_rep(s):
    return dual_sdpl_rep(adjoint_sdpl_rep(s))


def sdpl_rep_equivalent(r1, r2, phi):
    phi = la.qarray(phi)
    if phi.shape != (r2.vdim, r1.vdim) or la.rank(phi) < r1.vdim:
        return False
    for k in ("l_succ", "r_succ", "l_prec"):
        f1, f2 = getattr(r1, k), getattr(r2, k)
        if not la.vanishes([(1, "ab,ibc->iac", (phi, f1)), (-1, "iab,bc->iac", (f2, phi))]):
            return False
    return True


# ---------------------------------------------------------------------------
# forms


def form_identities(a, B, s=None, mult=None):
    """Verdicts for the invariance-type identities of a form.

    ``li``: B(x∘y,z) + B(y,x∘z) = 0; ``left_inv1``: B(x∘y,z) =
    −B(y,x∘z+z∘x) − B(x,z∘y); ``twisted``: B(x∘y,z) = −B(y,x∘z) =
    −B(x∘z,y).  With a split ``s`` also ``cor3``: B(x≻y,z) =
    −B(y,x∘z+z∘x), ``cor4``: B(x≺y,z) = −B(x,z∘y) and ``cor3_37``:
    B(x≻y,z) = B(x,z≻y).
    """
    c = s.succ + s.prec if s is not None else tensor_of(a, mult)
    B = la.qarray(B)
    cz = (1, "ijm,mk->ijk", (c, B))
    y_xz = (1, "jm,ikm->ijk", (B, c))
    y_zx = (1, "jm,kim->ijk", (B, c))
    x_zy = (1, "im,kjm->ijk", (B, c))
    out = {
        "li": la.vanishes([cz, y_xz]),
        "left_inv1": la.vanishes([cz, y_xz, y_zx, x_zy]),
        "twisted": la.vanishes([cz, y_xz]) and la.vanishes([cz, (1, "ikm,mj->ijk", (c, B))]),
    }
    if s is not None:
        sz = (1, "ijm,mk->ijk", (s.succ, B))
        out["cor3"] = la.vanishes([sz, y_xz, y_zx])
        out["cor4"] = la.vanishes([(1, "ijm,mk->ijk", (s.prec, B)), x_zy])
        out["cor3_37"] = la.vanishes([sz, (-1, "im,kjm->ijk", (B, s.succ))])
    return out


def sdpl_from_form(a, B, mult=None):
    """Quadratic SDPL structure of a Leibniz algebra with a nondegenerate
    symmetric left-invariant form: ``B(x≻y,z) = −B(y,x∘z+z∘x)`` and
    ``B(x≺y,z) = −B(x,z∘y)``."""
    c, B = tensor_of(a, mult), la.qarray(B)
    if not check_relations(c, LEIBNIZ).ok:
        raise NotLeibniz("the multiplication is not Leibniz")
    if not is_symmetric(B):
        raise NotSymmetric("B is not symmetric")
    if not is_nondegenerate(B):
        raise DegenerateForm("B has rank below its size")
    if not form_identities(c, B)["li"]:
        raise NotLeftInvariant("B(x∘y,z) + B(y,x∘z) ≠ 0")
    s = SDPLAlgebra.of(splitting_from_form(c, LEIBNIZ, B, TYPE_B))
    Lc, Rc = left_mults(c), right_mults(c)
    Lc_, Rc_ = dual_family(Lc), dual_family(Rc)
    assert rep_equivalent(Rep(Lc, Rc), Rep(Lc_, -dual_family(left_mults(s.prec))), B)
    assert rep_equivalent(Rep(Lc, -left_mults(s.succ)), Rep(Lc_, -Lc_ - Rc_), B)
    return s


def quadratic_form_of(s, B):
    """Whether ``B`` is symmetric, nondegenerate and satisfies ``B(x≺y,z) = −B(x,z∘y)``."""
    B = la.qarray(B)
    if not (is_symmetric(B) and is_nondegenerate(B)):
        return False
    ids = form_identities(None, B, s)
    if not ids["cor4"]:
        return False
    assert ids["li"] and ids["cor3"] and ids["cor3_37"] or not check_sdpl(s)
    return True
