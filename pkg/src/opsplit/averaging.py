"""Averaging operators on Lie algebras and the Leibniz/SDPL structures they induce.

Operators are matrices acting on coordinate columns: ``P @ e_i`` is the image
of the ``i``-th basis vector.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .core import LIE, Rep, check_relations, semidirect_product, tensor_of
from .errors import CapExceeded, DegenerateForm, DimMismatch, NotAdmissible, NotAveraging, NotLie, NotLieRep
from .leibniz import SDPLAlgebra


@dataclass(frozen=True, eq=False)
class AveragingLieAlgebra:
    """A Lie bracket with an operator ``P`` and optionally a second operator ``Q``.

    Nothing is validated on construction; use :func:`check_averaging`,
    :func:`check_admissible` or :func:`is_admissible_averaging`.
    """

    bracket: np.ndarray
    P: np.ndarray
    Q: np.ndarray = None
    labels: tuple = None

    def __post_init__(self):
        c = la.qarray(self.bracket)
        n = c.shape[0]
        P = la.qarray(self.P)
        if c.shape != (n, n, n) or P.shape != (n, n):
            raise DimMismatch(f"bracket {c.shape} and P {P.shape}")
        object.__setattr__(self, "bracket", c)
        object.__setattr__(self, "P", P)
        if self.Q is not None:
            Q = la.qarray(self.Q)
            if Q.shape != (n, n):
                raise DimMismatch(f"Q must be {n}×{n}")
            object.__setattr__(self, "Q", Q)

    @property
    def dim(self):
        return self.P.shape[0]


def _require_lie(c):
    if not check_relations(c, LIE).ok:
        raise NotLie("the bracket is not a Lie bracket")


def check_averaging(lie, P, mult=None):
    """``[P(x), P(y)] = P([P(x), y])`` on all basis pairs."""
    c, P = tensor_of(lie, mult), la.qarray(P)
    _require_lie(c)
    return la.vanishes([(1, "ai,bj,abk->ijk", (P, P, c)), (-1, "ai,ajm,km->ijk", (P, c, P))])


def induced_leibniz(al):
    """``x∘y = [P(x), y]``."""
    return la.einsum("ai,ajk->ijk", al.P, al.bracket)


def check_admissible(lie, P, Q, mult=None):
    """``[P(x), Q(y)] = Q([P(x), y]) = Q([x, Q(y)])`` on all basis pairs."""
    c, P, Q = tensor_of(lie, mult), la.qarray(P), la.qarray(Q)
    if not check_averaging(c, P):
        raise NotAveraging("P is not an averaging operator")
    lhs = (1, "ai,bj,abk->ijk", (P, Q, c))
    return la.vanishes([lhs, (-1, "ai,ajm,km->ijk", (P, c, Q))]) and la.vanishes(
        [lhs, (-1, "bj,ibm,km->ijk", (Q, c, Q))]
    )


def is_admissible_averaging(al):
    """Admissibility as a plain verdict (``False`` where the checks would raise)."""
    try:
        if al.Q is None:
            return check_averaging(al.bracket, al.P)
        return check_admissible(al.bracket, al.P, al.Q)
    except (NotLie, NotAveraging):
        return False


def adjoint_map(P, B):
    """``P̂`` with ``B(P(x), y) = B(x, P̂(y))``, i.e. ``B⁻¹ Pᵀ B``."""
    P, B = la.qarray(P), la.qarray(B)
    if B.shape != P.shape or la.rank(B) < B.shape[0]:
        raise DegenerateForm("B is degenerate")
    Phat = la.invert(B) @ P.T @ B
    assert la.equal(P.T @ B, B @ Phat)
    return Phat


def avg_rep_failures(al, rho, alpha):
    """Violated parts of ``ρ(Px)α = α ρ(Px) = α ρ(x) α``."""
    rho, alpha = la.qarray(rho), la.qarray(alpha)
    n, m = al.dim, alpha.shape[0]
    if rho.shape != (n, m, m) or alpha.shape != (m, m):
        raise DimMismatch(f"ρ {rho.shape} and α {alpha.shape}")
    if not check_relations(semidirect_product(al.bracket, Rep(rho, -rho)), LIE).ok:
        raise NotLieRep("ρ is not a representation of the Lie algebra")
    first = (1, "ki,kac,cb->iab", (al.P, rho, alpha))
    out = []
    if not la.vanishes([first, (-1, "ac,ki,kcb->iab", (alpha, al.P, rho))]):
        out.append("commute")
    if not la.vanishes([first, (-1, "ac,icd,db->iab", (alpha, rho, alpha))]):
        out.append("absorb")
    return out


def check_avg_rep(al, rho, alpha):
    return not avg_rep_failures(al, rho, alpha)


def check_avg_rep_semidirect(al, rho, alpha):
    """The same condition read off ``(A ⋉ V, P + α)`` being an averaging Lie algebra."""
    rho, alpha = la.qarray(rho), la.qarray(alpha)
    n, m = al.dim, alpha.shape[0]
    c = semidirect_product(al.bracket, Rep(rho, -rho))
    if not check_relations(c, LIE).ok:
        raise NotLieRep("ρ is not a representation of the Lie algebra")
    op = la.zeros(n + m, n + m)
    op[:n, :n], op[n:, n:] = al.P, alpha
    return check_averaging(c, op)


def sdpl_from_admissible(al):
    """``x≻y = [P(x),y] − Q([x,y])`` and ``x≺y = Q([x,y])``."""
    if al.Q is None:
        raise NotAdmissible("an admissible pair needs Q")
    if not check_admissible(al.bracket, al.P, al.Q):
        raise NotAdmissible("(P, Q) fails [P(x),Q(y)] = Q([P(x),y]) = Q([x,Q(y)])")
    prec = la.einsum("ijm,km->ijk", al.bracket, al.Q)
    s = SDPLAlgebra(induced_leibniz(al) - prec, prec, al.labels)
    return s


def endo_double(a, mult=None, cap=64):
    """``End(A) ⊕ A`` with ``[f+x, g+y] = [f,g] + f(y) − g(x)``, ``P(f+x) = L∘(x)``, ``Q(f+x) = −R∘(x)``.

    ``End(A)`` has the row-major basis ``E_ij`` (``E_ij e_k = δ_jk e_i``) at
    index ``i·n + j``; ``A`` follows at ``n² + k``.
    """
    c = tensor_of(a, mult)
    n = c.shape[0]
    N = n * n + n
    if N > cap:
        raise CapExceeded(f"End(A) ⊕ A has dimension {N} > {cap}")

    def E(i, j):
        return i * n + j

    def V(k):
        return n * n + k

    d = la.zeros(N, N, N)
    one = la.Q(1)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        d[E(i, j), E(k, l), E(i, l)] += one
                    if l == i:
                        d[E(i, j), E(k, l), E(k, j)] -= one
            # E_ij acting on e_j gives e_i
            d[E(i, j), V(j), V(i)] += one
            d[V(j), E(i, j), V(i)] -= one
    P, Q = la.zeros(N, N), la.zeros(N, N)
    for k in range(n):
        for m in range(n):
            for j in range(n):
                P[E(m, j), V(k)] = c[k, j, m]
                Q[E(m, j), V(k)] = -c[j, k, m]
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    labels += tuple(f"e{k + 1}" for k in range(n))
    return AveragingLieAlgebra(d, P, Q, labels)
