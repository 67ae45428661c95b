"""Splittings of a multiplication into ``≻ + ≺`` and the operators that produce them.

A pair of multiplications ``(≻, ≺)`` with sum ``∘`` is a type-M splitting
when the combination ``(L≻, R≺)M`` of its left/right actions is a
representation of ``(A, ∘)``, and a dual type-M splitting when the same
combination of the dual actions is.  O-operators ``T: V → A`` relative to a
pair of families ``(α, β)`` induce such splittings (when ``T`` is invertible)
and nondegenerate invariant forms induce invertible O-operators.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .core import (
    IDENTITY,
    LEIBNIZ,
    Rep,
    TypeMatrix,
    adjoint_rep,
    check_relations,
    combine_reps,
    dual_family,
    is_representation,
    left_mults,
    merge_reports,
    rep_equivalent,
    right_mults,
    tensor_of,
)
from .errors import (
    DegenerateForm,
    DimMismatch,
    NotAnOperator,
    NotInvariant,
    Singular,
    SingularTypeMatrix,
)

__all__ = [
    "TypeMatrix",
    "IDENTITY",
    "SplitAlgebra",
    "check_type_m_pre",
    "check_o_operator",
    "classify_o_operator",
    "circ_on_v",
    "check_strong",
    "induce_splitting",
    "v_side_splitting",
    "check_type_m_rota_baxter",
    "star_product",
    "mults_from_M_inverse",
    "check_type_m_invariance",
    "form_operator",
    "splitting_from_form",
    "is_symmetric",
    "is_antisymmetric",
    "is_nondegenerate",
]


@dataclass(frozen=True, eq=False)
class SplitAlgebra:
    """Two multiplications ``succ`` (≻) and ``prec`` (≺); ``circ`` is their sum."""

    succ: np.ndarray
    prec: np.ndarray
    labels: tuple = None

    def __post_init__(self):
        succ, prec = la.qarray(self.succ), la.qarray(self.prec)
        if succ.shape != prec.shape or succ.ndim != 3 or len(set(succ.shape)) != 1:
            raise DimMismatch(f"succ {succ.shape} and prec {prec.shape}")
        succ.setflags(write=False)
        prec.setflags(write=False)
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "prec", prec)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(succ.shape[0])))

    @property
    def dim(self):
        return self.succ.shape[0]

    @property
    def circ(self):
        return self.succ + self.prec

    def __eq__(self, other):
        return (
            isinstance(other, SplitAlgebra)
            and la.equal(self.succ, other.succ)
            and la.equal(self.prec, other.prec)
        )

    def actions(self):
        """``(L≻, R≺)``, the families the type-M conditions combine."""
        return left_mults(self.succ), right_mults(self.prec)


def _require_nonsingular(M):
    if M.det == 0:
        raise SingularTypeMatrix(f"|M| = 0 for M = {M}")


def _tag(report, prefix):
    from .core import Violation, ViolationReport

    vs = tuple(Violation(f"{prefix}:{v.relation}", v.triple, v.residual) for v in report.violations)
    return ViolationReport(report.ok, vs, report.total)


def check_type_m_pre(s, rs, M, dual=False, cap=None):
    """Admissibility of ``∘ = ≻ + ≺`` plus the representation condition on ``(L≻,R≺)M``."""
    circ = s.succ + s.prec
    alpha, beta = s.actions()
    if dual:
        alpha, beta = dual_family(alpha), dual_family(beta)
    admissible = check_relations(circ, rs, cap=cap)
    rep = is_representation(circ, rs, combine_reps(alpha, beta, M), cap=cap)
    return merge_reports([_tag(admissible, "circ"), _tag(rep, "rep")], cap)


# ---------------------------------------------------------------------------
# O-operators


def _operator_shapes(c, alpha, beta, T):
    alpha, beta, T = la.qarray(alpha), la.qarray(beta), la.qarray(T)
    n = c.shape[0]
    if T.ndim != 2 or T.shape[0] != n:
        raise DimMismatch(f"T must be {n}×m, got {T.shape}")
    m = T.shape[1]
    for name, f in (("α", alpha), ("β", beta)):
        if f.shape != (n, m, m):
            raise DimMismatch(f"{name} must have shape {(n, m, m)}, got {f.shape}")
    return alpha, beta, T


def check_o_operator(a, alpha, beta, T, mult=None):
    """``(Tu)∘(Tv) = T(α(Tu)v + β(Tv)u)`` on all basis pairs of ``V``."""
    c = tensor_of(a, mult)
    alpha, beta, T = _operator_shapes(c, alpha, beta, T)
    return la.vanishes(
        [
            (1, "ip,jq,ijk->pqk", (T, T, c)),
            (-1, "ip,ibq,kb->pqk", (T, alpha, T)),
            (-1, "iq,ibp,kb->pqk", (T, beta, T)),
        ]
    )


def classify_o_operator(a, rs, alpha, beta, T, M, dual=False, mult=None):
    """Whether ``T`` is a (dual) type-M O-operator associated to ``(α, β)``."""
    c = tensor_of(a, mult)
    if not check_o_operator(c, alpha, beta, T):
        return False
    alpha, beta = la.qarray(alpha), la.qarray(beta)
    if dual:
        alpha, beta = dual_family(alpha), dual_family(beta)
    return is_representation(c, rs, combine_reps(alpha, beta, M)).ok


def circ_on_v(alpha, beta, T):
    """``u∘_V v = α(Tu)v + β(Tv)u`` as a structure tensor on ``V``."""
    alpha, beta, T = la.qarray(alpha), la.qarray(beta), la.qarray(T)
    return la.residual([(1, "ip,ibq->pqb", (T, alpha)), (1, "iq,ibp->pqb", (T, beta))])


def check_strong(a, rs, alpha, beta, T, mult=None):
    c = tensor_of(a, mult)
    if not check_o_operator(c, alpha, beta, T):
        raise NotAnOperator("T fails (Tu)∘(Tv) = T(α(Tu)v + β(Tv)u)")
    return check_relations(circ_on_v(alpha, beta, T), rs).ok


def v_side_splitting(alpha, beta, T):
    """``u ≻_V v = α(Tu)v`` and ``u ≺_V v = β(Tv)u``."""
    alpha, beta, T = la.qarray(alpha), la.qarray(beta), la.qarray(T)
    succ = la.einsum("ip,ibq->pqb", T, alpha)
    prec = la.einsum("iq,ibp->pqb", T, beta)
    return SplitAlgebra(succ, prec)


def induce_splitting(a, alpha, beta, T, mult=None):
    """``x≻y = Tα(x)T⁻¹y`` and ``x≺y = Tβ(y)T⁻¹x`` for an invertible O-operator."""
    c = tensor_of(a, mult)
    alpha, beta, T = _operator_shapes(c, alpha, beta, T)
    if T.shape[0] != T.shape[1]:
        raise Singular(f"T of shape {T.shape} is not invertible")
    Tinv = la.invert(T)
    if not check_o_operator(c, alpha, beta, T):
        raise NotAnOperator("T fails (Tu)∘(Tv) = T(α(Tu)v + β(Tv)u)")
    succ = la.einsum("ka,iab,bj->ijk", T, alpha, Tinv)
    prec = la.einsum("ka,jab,bi->ijk", T, beta, Tinv)
    assert la.equal(succ + prec, c), "induced ≻ + ≺ must reproduce ∘"
    return SplitAlgebra(succ, prec)


# ---------------------------------------------------------------------------
# Rota–Baxter operators


def star_product(a, R, M, mult=None):
    """``x⋆y = b2 R(x)∘y − a2 y∘R(x) + a1 x∘R(y) − b1 R(y)∘x``."""
    c, R = tensor_of(a, mult), la.qarray(R)
    return la.residual(
        [
            (M.b2, "ip,iqk->pqk", (R, c)),
            (-M.a2, "ip,qik->pqk", (R, c)),
            (M.a1, "jq,pjk->pqk", (R, c)),
            (-M.b1, "jq,jpk->pqk", (R, c)),
        ]
    )


def check_type_m_rota_baxter(a, R, M, strong=False, rs=LEIBNIZ, mult=None):
    """``|M| R(x)∘R(y) = R(x⋆y)``; with ``strong``, also ``(A, ⋆)`` satisfies ``rs``."""
    _require_nonsingular(M)
    c, R = tensor_of(a, mult), la.qarray(R)
    if R.shape != (c.shape[0],) * 2:
        raise DimMismatch(f"R must be square of size {c.shape[0]}")
    holds = la.vanishes(
        [
            (M.det, "ip,jq,ijk->pqk", (R, R, c)),
            (-M.b2, "ip,iqm,km->pqk", (R, c, R)),
            (M.a2, "ip,qim,km->pqk", (R, c, R)),
            (-M.a1, "jq,pjm,km->pqk", (R, c, R)),
            (M.b1, "jq,jpm,km->pqk", (R, c, R)),
        ]
    )
    if not holds or not strong:
        return holds
    return check_relations(star_product(c, R, M), rs).ok


def mults_from_M_inverse(a, M, mult=None):
    """``(≻, ≺)`` with ``(L≻, R≺) = (L∘, R∘)M⁻¹``.

    Explicitly ``x≻y = (b2 x∘y − a2 y∘x)/|M|`` and
    ``x≺y = (a1 x∘y − b1 y∘x)/|M|``.  These are the actions a type-M
    Rota–Baxter operator is an O-operator for; their sum is ∘ only for
    special M.
    """
    _require_nonsingular(M)
    c = tensor_of(a, mult)
    d = M.det
    swap = c.transpose(1, 0, 2)
    succ = (M.b2 * c - M.a2 * swap) / d
    prec = (M.a1 * c - M.b1 * swap) / d
    out = SplitAlgebra(succ, prec)
    expected = combine_reps(left_mults(c), right_mults(c), M.inverse())
    assert Rep(*out.actions()) == expected, "(L≻, R≺) must equal (L∘, R∘)M⁻¹"
    return out


# ---------------------------------------------------------------------------
# bilinear forms


def is_symmetric(B):
    B = la.qarray(B)
    return la.equal(B, B.T)


def is_antisymmetric(B):
    B = la.qarray(B)
    return la.equal(B, -B.T)


def is_nondegenerate(B):
    B = la.qarray(B)
    return B.ndim == 2 and B.shape[0] == B.shape[1] and la.rank(B) == B.shape[0]


def type_m_invariance_terms(c, B, M):
    """Terms of ``|M|B(x∘y,z) − B(x, b1 y∘z − a1 z∘y) − B(y, a2 z∘x − b2 x∘z)``."""
    return [
        (M.det, "ijm,mk->ijk", (c, B)),
        (-M.b1, "im,jkm->ijk", (B, c)),
        (M.a1, "im,kjm->ijk", (B, c)),
        (-M.a2, "jm,kim->ijk", (B, c)),
        (M.b2, "jm,ikm->ijk", (B, c)),
    ]


def check_type_m_invariance(a, B, M, mult=None):
    """``|M|B(x∘y,z) = B(x, b1 y∘z − a1 z∘y) + B(y, a2 z∘x − b2 x∘z)``."""
    _require_nonsingular(M)
    c, B = tensor_of(a, mult), la.qarray(B)
    return la.vanishes(type_m_invariance_terms(c, B, M))


def form_operator(a, B, M, mult=None):
    """The invertible dual type-M O-operator a form provides.

    Returns ``(α, β, T)`` acting on ``A*`` with ``T = (B♮)⁻¹``,
    ``α = (b2 L*∘ − a2 R*∘)/|M|`` and ``β = (a1 R*∘ − b1 L*∘)/|M|``.
    """
    _require_nonsingular(M)
    c, B = tensor_of(a, mult), la.qarray(B)
    if not is_nondegenerate(B):
        raise DegenerateForm("B has rank below its size")
    Lstar, Rstar = dual_family(left_mults(c)), dual_family(right_mults(c))
    d = M.det
    alpha = (M.b2 * Lstar - M.a2 * Rstar) / d
    beta = (M.a1 * Rstar - M.b1 * Lstar) / d
    return alpha, beta, la.invert(B.T)


def splitting_from_form(a, rs, B, M, mult=None):
    """Solve ``|M|B(x≻y,z) = B(y, a2 z∘x − b2 x∘z)`` and
    ``|M|B(x≺y,z) = B(x, b1 y∘z − a1 z∘y)`` for ``≻`` and ``≺``."""
    _require_nonsingular(M)
    c, B = tensor_of(a, mult), la.qarray(B)
    if not is_nondegenerate(B):
        raise DegenerateForm("B has rank below its size")
    if not check_type_m_invariance(c, B, M):
        raise NotInvariant(f"B fails the type-{M} invariance condition")
    Binv = la.invert(B)
    d = M.det
    succ_rhs = la.residual([(M.a2 / d, "jm,kim->ijk", (B, c)), (-M.b2 / d, "jm,ikm->ijk", (B, c))])
    prec_rhs = la.residual([(M.b1 / d, "im,jkm->ijk", (B, c)), (-M.a1 / d, "im,kjm->ijk", (B, c))])
    s = SplitAlgebra(la.einsum("ijm,mk->ijk", succ_rhs, Binv), la.einsum("ijm,mk->ijk", prec_rhs, Binv))
    assert la.equal(s.circ, c), "≻ + ≺ must reproduce ∘"
    assert check_type_m_pre(s, rs, M, dual=True).ok or not check_relations(c, rs).ok
    alpha, beta = (dual_family(f) for f in s.actions())
    assert rep_equivalent(adjoint_rep(c), combine_reps(alpha, beta, M), B)
    return s
