"""Coalgebras, SDPL bialgebras, matched pairs, doubles and Manin triples.

A comultiplication is a tensor ``d`` with ``η(e_k) = Σ d[k, i, j] e_i ⊗ e_j``.
On ``A ⊕ A*`` the ``A`` half occupies indices ``0..n-1`` and ``A*`` the
indices ``n..2n-1``; the pairing form is ``B_d = [[0, I], [I, 0]]``.
Dual actions are negative transposes (``ρ*``), and the multiplication of
``A*`` dual to a comultiplication ``d`` is ``d.transpose(1, 2, 0)``.

Doubles are built unconditionally; ``check_*`` functions judge them.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .averaging import AveragingLieAlgebra, check_admissible, check_averaging, induced_leibniz, sdpl_from_admissible
from .core import LEIBNIZ, LIE, Rep, check_relations, dual_family, is_representation, left_mults, right_mults, tensor_of
from .errors import BadShape, DimMismatch, NotAvgLieBialgebra, NotBialgebra, NotCoalgebra, NotLie
from .leibniz import SDPLAlgebra, check_sdpl, form_identities, sdpl_from_form
from .splitting import SplitAlgebra

# ---------------------------------------------------------------------------
# dualization


def dualize_mult(m):
    """Comultiplication on ``A*`` dual to a multiplication on ``A``: ``d[k,i,j] = m[i,j,k]``."""
    return np.ascontiguousarray(la.qarray(m).transpose(2, 0, 1))


def dualize_comult(d):
    """Multiplication on ``A*`` dual to ``d``: ``⟨a*∘b*, x⟩ = ⟨a*⊗b*, d(x)⟩``."""
    return np.ascontiguousarray(la.qarray(d).transpose(1, 2, 0))


def _swap(d):
    return d.transpose(0, 2, 1)


def pairing_form(n):
    """``B_d(x + a*, y + b*) = ⟨x, b*⟩ + ⟨a*, y⟩``."""
    B = la.zeros(2 * n, 2 * n)
    B[:n, n:] = la.eye(n)
    B[n:, :n] = la.eye(n)
    return B


# ---------------------------------------------------------------------------
# coalgebras


def check_leibniz_coalgebra(eta):
    """``(η⊗id)η + (τ⊗id)(id⊗η)η − (id⊗η)η = 0``."""
    eta = la.qarray(eta)
    return la.vanishes(
        [
            (1, "kir,ipq->kpqr", (eta, eta)),
            (1, "kqj,jpr->kpqr", (eta, eta)),
            (-1, "kpj,jqr->kpqr", (eta, eta)),
        ]
    )


def sdpl_coalgebra_failure(vartheta, theta):
    vartheta, theta = la.qarray(vartheta), la.qarray(theta)
    if vartheta.shape != theta.shape:
        raise DimMismatch(f"ϑ {vartheta.shape} and θ {theta.shape}")
    eta = vartheta + theta
    if not check_leibniz_coalgebra(eta):
        return "leibniz-coalgebra"
    if not la.equal(theta, -_swap(theta)):
        return "co1"
    co4 = [
        (1, "kpj,jqr->kpqr", (eta, theta)),
        (-1, "kir,ipq->kpqr", (theta, eta)),
        (-1, "kqj,jpr->kpqr", (theta, eta)),
    ]
    if not la.vanishes(co4):
        return "co4"
    if not la.vanishes([(1, "kpj,jqr->kpqr", (vartheta, theta))]):
        return "co5"
    return None


def check_sdpl_coalgebra(vartheta, theta):
    """``η = ϑ + θ`` Leibniz, ``θ = −τθ``, ``(id⊗θ)η = (η⊗id)θ + (τ⊗id)(id⊗η)θ``, ``(id⊗θ)ϑ = 0``."""
    return sdpl_coalgebra_failure(vartheta, theta) is None


def bialgebra_failures(s, vartheta, theta):
    """Which of the four compatibility identities fail (x = e_p, y = e_q)."""
    vartheta, theta = la.qarray(vartheta), la.qarray(theta)
    if not check_sdpl_coalgebra(vartheta, theta):
        raise NotCoalgebra(sdpl_coalgebra_failure(vartheta, theta))
    eta, c, prec = vartheta + theta, s.succ + s.prec, s.prec
    identities = {
        # η(x≺y) = (1−τ)(id⊗L≺(x))η(y) + (1−τ)(id⊗R≺(y))η(x)
        "bialg1": [
            (1, "pqm,mab->pqab", (prec, eta)),
            (-1, "qaj,pjb->pqab", (eta, prec)),
            (1, "qbj,pja->pqab", (eta, prec)),
            (-1, "paj,jqb->pqab", (eta, prec)),
            (1, "pbj,jqa->pqab", (eta, prec)),
        ],
        # (L∘(x)⊗id)η(y) = (L≺(x)⊗id)η(y) + (id⊗R∘(y))η(x) − (id⊗R∘(y))θ(x)
        "bialg2": [
            (1, "qib,pia->pqab", (eta, c)),
            (-1, "qib,pia->pqab", (eta, prec)),
            (-1, "paj,jqb->pqab", (eta, c)),
            (1, "paj,jqb->pqab", (theta, c)),
        ],
        # θ(x∘y) = (id⊗L∘(x) + L∘(x)⊗id)θ(y) − (id⊗L∘(y) + L∘(y)⊗id)θ(x)
        "bialg3": [
            (1, "pqm,mab->pqab", (c, theta)),
            (-1, "qaj,pjb->pqab", (theta, c)),
            (-1, "qib,pia->pqab", (theta, c)),
            (1, "paj,qjb->pqab", (theta, c)),
            (1, "pib,qia->pqab", (theta, c)),
        ],
        # η(x∘y) = (id⊗R∘(y))η(x) + (id⊗L∘(x) + L≺(x)⊗id)η(y) − (L≺(y)⊗id)θ(x)
        "bialg4": [
            (1, "pqm,mab->pqab", (c, eta)),
            (-1, "paj,jqb->pqab", (eta, c)),
            (-1, "qaj,pjb->pqab", (eta, c)),
            (-1, "qib,pia->pqab", (eta, prec)),
            (1, "pib,qia->pqab", (theta, prec)),
        ],
    }
    return [name for name, terms in identities.items() if not la.vanishes(terms)]


def check_sdpl_bialgebra(s, vartheta, theta):
    return not bialgebra_failures(s, vartheta, theta)


@dataclass(frozen=True, eq=False)
class SDPLBialgebra:
    sdpl: SDPLAlgebra
    vartheta: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        vt, th = la.qarray(self.vartheta), la.qarray(self.theta)
        object.__setattr__(self, "vartheta", vt)
        object.__setattr__(self, "theta", th)
        failed = bialgebra_failures(self.sdpl, vt, th)
        if failed:
            raise NotBialgebra(failed[0])

    def dual_split(self):
        """The SDPL structure on ``A*`` dual to ``(ϑ, θ)``."""
        return SplitAlgebra(dualize_comult(self.vartheta), dualize_comult(self.theta))


# ---------------------------------------------------------------------------
# matched pairs


@dataclass(frozen=True, eq=False)
class MatchedPairData:
    """Leibniz algebras ``A`` (dim n) and ``B`` (dim m) with ``lA, rA: A → End(B)`` and ``lB, rB: B → End(A)``."""

    a: np.ndarray
    b: np.ndarray
    lA: np.ndarray
    rA: np.ndarray
    lB: np.ndarray
    rB: np.ndarray

    def __post_init__(self):
        for k in ("a", "b", "lA", "rA", "lB", "rB"):
            object.__setattr__(self, k, la.qarray(getattr(self, k)))
        n, m = self.a.shape[0], self.b.shape[0]
        if self.lA.shape != (n, m, m) or self.rA.shape != (n, m, m):
            raise DimMismatch("lA, rA must be n×m×m")
        if self.lB.shape != (m, n, n) or self.rB.shape != (m, n, n):
            raise DimMismatch("lB, rB must be m×n×n")


def matched_pair_product(d):
    """``(x+a)(y+b) = xy + lB(a)y + rB(b)x + ab + lA(x)b + rA(y)a`` on ``A ⊕ B``."""
    n, m = d.a.shape[0], d.b.shape[0]
    t = la.zeros(n + m, n + m, n + m)
    t[:n, :n, :n] = d.a
    t[n:, n:, n:] = d.b
    t[:n, n:, :n] = d.rB.transpose(2, 0, 1)
    t[:n, n:, n:] = d.lA.transpose(0, 2, 1)
    t[n:, :n, :n] = d.lB.transpose(0, 2, 1)
    t[n:, :n, n:] = d.rA.transpose(2, 0, 1)
    return t


def _mp_terms(A, B, lA, rA, lB, rB):
    """The three mixed identities for the A-actions on B (indices x, a, b, out)."""
    return {
        "first": [
            (1, "abk,xok->xabo", (B, rA)),
            (-1, "xkb,ako->xabo", (rA, B)),
            (1, "xka,bko->xabo", (rA, B)),
            (-1, "bkx,koa->xabo", (lB, rA)),
            (1, "akx,kob->xabo", (lB, rA)),
        ],
        "second": [
            (1, "abk,xok->xabo", (B, lA)),
            (-1, "xka,kbo->xabo", (lA, B)),
            (-1, "xkb,ako->xabo", (lA, B)),
            (-1, "akx,kob->xabo", (rB, lA)),
            (-1, "bkx,koa->xabo", (rB, rA)),
        ],
        "third": [
            (1, "xka,kbo->xabo", (lA, B)),
            (1, "akx,kob->xabo", (rB, lA)),
            (1, "xka,kbo->xabo", (rA, B)),
            (1, "akx,kob->xabo", (lB, lA)),
        ],
    }


def _require_leibniz(rsA, rsB):
    if rsA is not LEIBNIZ or rsB is not LEIBNIZ:
        raise ValueError("the mixed compatibility identities are stated for Leibniz algebras only")


def matched_pair_failures(d, rsA=LEIBNIZ, rsB=LEIBNIZ):
    """Failed conditions, in order: repA, repB, mp1 … mp6."""
    _require_leibniz(rsA, rsB)
    out = []
    if not is_representation(d.a, rsA, Rep(d.lA, d.rA)).ok:
        out.append("repA")
    if not is_representation(d.b, rsB, Rep(d.lB, d.rB)).ok:
        out.append("repB")
    ab = _mp_terms(d.a, d.b, d.lA, d.rA, d.lB, d.rB)
    ba = _mp_terms(d.b, d.a, d.lB, d.rB, d.lA, d.rA)
    names = ("mp1", "mp2", "mp3", "mp4", "mp5", "mp6")
    groups = [ab["first"], ab["second"], ab["third"], ba["first"], ba["second"], ba["third"]]
    out += [name for name, terms in zip(names, groups) if not la.vanishes(terms)]
    return out


def check_matched_pair(d, rsA=LEIBNIZ, rsB=LEIBNIZ):
    """Representation conditions plus the six compatibility identities."""
    return not matched_pair_failures(d, rsA, rsB)


def check_matched_pair_product(d, rsA=LEIBNIZ, rsB=LEIBNIZ):
    """The same verdict read off the product on ``A ⊕ B``."""
    _require_leibniz(rsA, rsB)
    return check_relations(matched_pair_product(d), LEIBNIZ).ok


# ---------------------------------------------------------------------------
# doubles


def _dual_halves(sA, sAstar):
    if sA.dim != sAstar.dim:
        raise DimMismatch(f"A has dim {sA.dim}, A* has dim {sAstar.dim}")


def leibniz_double_data(sA, sAstar):
    """Matched pair ``(L*∘, −L*≺)`` in both directions."""
    _dual_halves(sA, sAstar)
    cA, cS = sA.succ + sA.prec, sAstar.succ + sAstar.prec
    return MatchedPairData(
        cA,
        cS,
        dual_family(left_mults(cA)),
        -dual_family(left_mults(sA.prec)),
        dual_family(left_mults(cS)),
        -dual_family(left_mults(sAstar.prec)),
    )


def build_leibniz_double(sA, sAstar):
    """``∘_d`` on ``A ⊕ A*`` from two (candidate) SDPL structures."""
    return matched_pair_product(leibniz_double_data(sA, sAstar))


def build_sdpl_double(sA, sAstar):
    """``≻_d`` and ``≺_d`` on ``A ⊕ A*``."""
    _dual_halves(sA, sAstar)

    def star(f):
        return dual_family(f)

    cA, cS = sA.succ + sA.prec, sAstar.succ + sAstar.prec
    LsA, RsA = star(left_mults(sA.succ)), star(right_mults(sA.succ))
    LsS, RsS = star(left_mults(sAstar.succ)), star(right_mults(sAstar.succ))
    RcA, RcS = star(right_mults(cA)), star(right_mults(cS))
    succ = matched_pair_product(MatchedPairData(sA.succ, sAstar.succ, LsA + RsA, -RsA, LsS + RsS, -RsS))
    prec = matched_pair_product(MatchedPairData(sA.prec, sAstar.prec, -RcA, RcA, -RcS, RcS))
    return SplitAlgebra(succ, prec)


def _halves_closed(t, n):
    return la.is_zero(t[:n, :n, n:]) and la.is_zero(t[n:, n:, :n])


def check_manin_triple(double, kind):
    """Manin-triple test for a double on ``A ⊕ A*`` (halves at ``0..n-1`` and ``n..2n-1``).

    ``leibnizLeftInv``: Leibniz, both halves subalgebras, ``B_d`` left-invariant.
    ``sdplQuadratic``: SDPL, both halves closed under ≻ and ≺, ``B_d`` invariant
    (``B(x≺y,z) = −B(x,z∘y)``).
    """
    if kind == "leibnizLeftInv":
        t = tensor_of(double)
        N = t.shape[0]
        if N % 2:
            raise BadShape(f"odd dimension {N}")
        n = N // 2
        return (
            check_relations(t, LEIBNIZ).ok
            and _halves_closed(t, n)
            and form_identities(t, pairing_form(n))["li"]
        )
    if kind == "sdplQuadratic":
        N = double.dim
        if N % 2:
            raise BadShape(f"odd dimension {N}")
        n = N // 2
        Bd = pairing_form(n)
        return (
            check_sdpl(double)
            and _halves_closed(double.succ, n)
            and _halves_closed(double.prec, n)
            and form_identities(None, Bd, double)["cor4"]
        )
    raise ValueError("kind must be 'leibnizLeftInv' or 'sdplQuadratic'")


def _restricts_to(split, sA, sAstar):
    n = sA.dim
    lo, hi = slice(0, n), slice(n, 2 * n)
    return (
        la.equal(split.succ[lo, lo, lo], sA.succ)
        and la.equal(split.prec[lo, lo, lo], sA.prec)
        and la.equal(split.succ[hi, hi, hi], sAstar.succ)
        and la.equal(split.prec[hi, hi, hi], sAstar.prec)
    )


def manin_chain(sA, sAstar):
    """The five equivalent conditions for a pair of SDPL structures on ``A`` and ``A*``.

    a: ``(A, ≻, ≺, ϑ, θ)`` is an SDPL bialgebra (ϑ, θ dual to ``A*``);
    b: the Leibniz double is a Manin triple whose form-induced SDPL structure
    restricts to both halves; c: that SDPL structure is a quadratic Manin
    triple; d: the Leibniz double is Leibniz; e: the SDPL double is SDPL.
    """
    vt, th = dualize_mult(sAstar.succ), dualize_mult(sAstar.prec)
    try:
        a = check_sdpl(sA) and check_sdpl_bialgebra(sA, vt, th)
    except NotCoalgebra:
        a = False
    n = sA.dim
    dbl = build_leibniz_double(sA, sAstar)
    b = c = False
    if check_manin_triple(dbl, "leibnizLeftInv"):
        induced = sdpl_from_form(dbl, pairing_form(n))
        b = _restricts_to(induced, sA, sAstar)
        c = b and check_manin_triple(induced, "sdplQuadratic")
    d = check_relations(dbl, LEIBNIZ).ok
    e = check_sdpl(build_sdpl_double(sA, sAstar))
    return {"a": a, "b": b, "c": c, "d": d, "e": e}


# ---------------------------------------------------------------------------
# Lie bialgebras


def colie_failure(delta):
    delta = la.qarray(delta)
    if not la.equal(delta, -_swap(delta)):
        return "antisymmetry"
    cyclic = [
        (1, "kpj,jqr->kpqr", (delta, delta)),
        (1, "kqj,jrp->kpqr", (delta, delta)),
        (1, "krj,jpq->kpqr", (delta, delta)),
    ]
    if not la.vanishes(cyclic):
        return "co-jacobi"
    return None


def cocycle_holds(lie, delta):
    """``δ([x,y]) = (ad x⊗1 + 1⊗ad x)δ(y) − (ad y⊗1 + 1⊗ad y)δ(x)``."""
    c, delta = tensor_of(lie), la.qarray(delta)
    return la.vanishes(
        [
            (1, "pqm,mab->pqab", (c, delta)),
            (-1, "qib,pia->pqab", (delta, c)),
            (-1, "qaj,pjb->pqab", (delta, c)),
            (1, "pib,qia->pqab", (delta, c)),
            (1, "paj,qjb->pqab", (delta, c)),
        ]
    )


def check_lie_bialgebra(lie, delta):
    c = tensor_of(lie)
    if not check_relations(c, LIE).ok:
        raise NotLie("the bracket is not a Lie bracket")
    return colie_failure(delta) is None and cocycle_holds(c, delta)


def lie_double(lie, lie_star):
    """``[x+a*, y+b*]_d`` with coadjoint cross terms."""
    c, cs = tensor_of(lie), tensor_of(lie_star)
    if c.shape != cs.shape:
        raise DimMismatch(f"{c.shape} vs {cs.shape}")
    adA, adS = dual_family(left_mults(c)), dual_family(left_mults(cs))
    return matched_pair_product(MatchedPairData(c, cs, adA, -adA, adS, -adS))


def lie_bialgebra_via_double(lie, delta):
    """Lie-bialgebra verdict read off the double: Lie with ``B_d`` invariant."""
    c = tensor_of(lie)
    D = lie_double(c, dualize_comult(delta))
    if not check_relations(D, LIE).ok:
        return False
    Bd = pairing_form(c.shape[0])
    return la.vanishes([(1, "ijm,mk->ijk", (D, Bd)), (-1, "im,jkm->ijk", (Bd, D))])


# ---------------------------------------------------------------------------
# averaging Lie bialgebras


@dataclass(frozen=True, eq=False)
class AvgLieBialgebra:
    """Candidate ``(A, [,], δ, P, Q)``; judged by :func:`check_avg_lie_bialgebra`."""

    bracket: np.ndarray
    delta: np.ndarray
    P: np.ndarray
    Q: np.ndarray

    def __post_init__(self):
        for k in ("bracket", "delta", "P", "Q"):
            object.__setattr__(self, k, la.qarray(getattr(self, k)))
        n = self.P.shape[0]
        if self.bracket.shape != (n,) * 3 or self.delta.shape != (n,) * 3 or self.Q.shape != (n, n):
            raise DimMismatch("bracket, δ, P, Q must share one dimension")

    @property
    def dim(self):
        return self.P.shape[0]


def avg_lie_bialgebra_failures(b):
    c, delta, P, Q = b.bracket, b.delta, b.P, b.Q
    if not check_relations(c, LIE).ok:
        return ["lie"]
    out = []
    if colie_failure(delta):
        out.append("colie")
    if not cocycle_holds(c, delta):
        out.append("cocycle")
    if not check_averaging(c, P):
        out.append("averaging")
    elif not check_admissible(c, P, Q):
        out.append("admissible")
    if not la.vanishes([(1, "ai,bj,kij->kab", (Q, Q, delta)), (-1, "mk,ai,mib->kab", (Q, Q, delta))]):
        out.append("aoco1")
    QP = (1, "ai,bj,kij->kab", (Q, P, delta))
    if not (
        la.vanishes([QP, (-1, "mk,ai,mib->kab", (P, Q, delta))])
        and la.vanishes([QP, (-1, "mk,bj,maj->kab", (P, P, delta))])
    ):
        out.append("aoco2")
    return out


def check_avg_lie_bialgebra(b):
    return not avg_lie_bialgebra_failures(b)


def _block(top, bottom):
    n = top.shape[0]
    out = la.zeros(2 * n, 2 * n)
    out[:n, :n], out[n:, n:] = top, bottom
    return out


def avg_lie_bialgebra_via_double(b):
    """Lie bialgebra whose double carries ``P + Q*`` as an averaging operator."""
    if not lie_bialgebra_via_double(b.bracket, b.delta):
        return False
    D = lie_double(b.bracket, dualize_comult(b.delta))
    return check_averaging(D, _block(b.P, b.Q.T))


def _require_avg(b):
    failed = avg_lie_bialgebra_failures(b)
    if failed:
        raise NotAvgLieBialgebra(", ".join(failed))


def induce_sdpl_bialgebra(b):
    """``(≻, ≺)`` from ``(P, Q)`` and ``ϑ = (Q⊗id)δ − δP``, ``θ = δP``."""
    _require_avg(b)
    sdpl = sdpl_from_admissible(AveragingLieAlgebra(b.bracket, b.P, b.Q))
    theta = la.einsum("mk,mab->kab", b.P, b.delta)
    vartheta = la.einsum("ai,kib->kab", b.Q, b.delta) - theta
    out = SDPLBialgebra(sdpl, vartheta, theta)
    dual = sdpl_from_admissible(AveragingLieAlgebra(dualize_comult(b.delta), b.Q.T, b.P.T))
    assert out.dual_split() == dual, "dual split must match [Q*a*, b*] − P*[a*, b*]"
    return out


def avg_manin_to_leibniz_manin(b):
    """Leibniz double ``[(P+Q*)X, Y]_d`` and its SDPL split via ``Q + P*``."""
    _require_avg(b)
    D = lie_double(b.bracket, dualize_comult(b.delta))
    PQ, QP = _block(b.P, b.Q.T), _block(b.Q, b.P.T)
    al = AveragingLieAlgebra(D, PQ, QP)
    circ = induced_leibniz(al)
    split = sdpl_from_admissible(al)
    assert la.equal(split.circ, circ)
    assert check_manin_triple(circ, "leibnizLeftInv")
    assert check_manin_triple(split, "sdplQuadratic")
    return circ, SplitAlgebra(split.succ, split.prec)
