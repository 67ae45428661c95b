"""Random and brute-force instance generators for property tests and demos.

Everything takes an explicit ``random.Random`` so runs are reproducible.
Instances are built from structures whose validity is decided by the
checkers, never assumed: generators that promise validity assert it.
"""

import itertools
from functools import lru_cache

from . import linalg as la
from .averaging import AveragingLieAlgebra, check_admissible, check_averaging, induced_leibniz
from .bialgebra import check_lie_bialgebra
from .catalog import affine_bracket, heisenberg_bracket, sl2_bracket, sl2_form, so3_bracket
from .core import LEIBNIZ, LIE, TypeMatrix, check_relations
from .splitting import SplitAlgebra, check_type_m_invariance, is_nondegenerate, type_m_invariance_terms

# ---------------------------------------------------------------------------
# scalars, matrices, tensors


def small(rng, lo=-2, hi=2):
    return la.Q(rng.randint(lo, hi))


def random_matrix(rng, n, m=None, lo=-2, hi=2):
    m = n if m is None else m
    return la.qarray([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)])


def random_invertible(rng, n, lo=-2, hi=2):
    while True:
        g = random_matrix(rng, n, lo=lo, hi=hi)
        if la.rank(g) == n:
            return g


def random_type_matrix(rng, lo=-2, hi=2):
    while True:
        M = TypeMatrix(*(rng.randint(lo, hi) for _ in range(4)))
        if M.det != 0:
            return M


def random_tensor(rng, n, lo=-2, hi=2, density=0.5):
    t = la.zeros(n, n, n)
    for idx in itertools.product(range(n), repeat=3):
        if rng.random() < density:
            t[idx] = small(rng, lo, hi)
    return t


def perturb(rng, t, lo=-2, hi=2):
    """Copy of ``t`` with one entry shifted by a nonzero integer."""
    out = t.copy()
    idx = tuple(rng.randrange(s) for s in t.shape)
    shift = 0
    while shift == 0:
        shift = rng.randint(lo, hi)
    out[idx] += la.Q(shift)
    return out


def block_diag(top, bottom):
    n, m = top.shape[0], bottom.shape[0]
    out = la.zeros(n + m, n + m)
    out[:n, :n], out[n:, n:] = top, bottom
    return out


# ---------------------------------------------------------------------------
# basis changes (new basis f_i = Σ_a g[a, i] e_a)


def change_basis(c, g):
    return la.einsum("ai,bj,abm,km->ijk", g, g, c, la.invert(g))


def transform_form(B, g):
    return g.T @ B @ g


def transform_operator(P, g):
    return la.invert(g) @ P @ g


# ---------------------------------------------------------------------------
# Lie and Leibniz algebras


def quadratic_lie(rng, basis_change=True):
    """``(bracket, B)``: sl(2) or so(3) with an invariant nondegenerate symmetric form."""
    c, B = rng.choice([(sl2_bracket(), sl2_form()), (so3_bracket(), la.eye(3))])
    if basis_change:
        g = random_invertible(rng, 3, -1, 1)
        c, B = change_basis(c, g), transform_form(B, g)
    return c, B


def lie_algebra(rng, n=3):
    """A small Lie algebra of dimension 2 or 3 (possibly abelian), in a random basis."""
    if n == 2:
        c = rng.choice([affine_bracket(), la.zeros(2, 2, 2)])
    elif n == 3:
        c = rng.choice([sl2_bracket(), so3_bracket(), heisenberg_bracket(), la.zeros(3, 3, 3)])
    else:
        raise ValueError("only dimensions 2 and 3 are catalogued")
    return change_basis(c, random_invertible(rng, n, -1, 1))


def rank_one_averaging(rng, c):
    """``P = v fᵀ`` with ``f([v, ·]) = 0``; then both sides of the averaging identity vanish."""
    n = c.shape[0]
    for _ in range(20):
        v = la.qarray([rng.randint(-2, 2) for _ in range(n)])
        if la.is_zero(v):
            continue
        ad_v = la.einsum("i,ijk->jk", v, c)
        null = la.nullspace(ad_v)
        if null.shape[0] == 0:
            continue
        f = sum((small(rng) * row for row in null), la.zeros(n))
        if la.is_zero(f):
            continue
        P = la.qarray([[vi * fj for fj in f] for vi in v])
        assert check_averaging(c, P)
        return P
    return la.zeros(n, n)


def random_averaging(rng, c):
    """Rank-one, scalar or zero averaging operator on the Lie algebra ``c``."""
    n = c.shape[0]
    kind = rng.choice(["rank-one", "rank-one", "scalar", "zero"])
    if kind == "rank-one":
        return rank_one_averaging(rng, c)
    if kind == "scalar":
        return small(rng) * la.eye(n)
    return la.zeros(n, n)


def nilpotent_leibniz(rng, n=3):
    """Products of the first ``n−1`` basis vectors land in the central last one."""
    c = la.zeros(n, n, n)
    for i in range(n - 1):
        for j in range(n - 1):
            c[i, j, n - 1] = small(rng)
    return c


def random_leibniz(rng, n=3):
    """A Leibniz algebra: a Lie algebra, one induced by an averaging operator, or nilpotent."""
    kind = rng.choice(["lie", "induced", "induced", "nilpotent"])
    if kind == "lie":
        c = lie_algebra(rng, n)
    elif kind == "induced":
        lie = lie_algebra(rng, n)
        c = induced_leibniz(AveragingLieAlgebra(lie, random_averaging(rng, lie)))
    else:
        c = change_basis(nilpotent_leibniz(rng, n), random_invertible(rng, n, -1, 1))
    assert check_relations(c, LEIBNIZ).ok
    return c


def random_multiplication(rng, n):
    """Half Leibniz by construction, half an unconstrained random tensor."""
    if rng.random() < 0.5:
        return random_leibniz(rng, n)
    return random_tensor(rng, n, -1, 1, density=0.3)


# ---------------------------------------------------------------------------
# forms found as null spaces of linear conditions


def _form_basis(n, kind):
    for i in range(n):
        for j in range(n):
            B = la.zeros(n, n)
            if kind == "all":
                B[i, j] = la.Q(1)
            elif kind == "symmetric" and i <= j:
                B[i, j] = B[j, i] = la.Q(1)
            elif kind == "antisymmetric" and i < j:
                B[i, j], B[j, i] = la.Q(1), la.Q(-1)
            else:
                continue
            yield B


def solve_forms(n, condition, kind="all"):
    """Basis of the forms ``B`` of the given symmetry kind with ``condition(B) = 0``.

    ``condition`` must be linear in ``B`` and tensor-valued.
    """
    basis = list(_form_basis(n, kind))
    columns = [condition(B).reshape(-1) for B in basis]
    system = la.qarray([[col[r] for col in columns] for r in range(len(columns[0]))])
    return [sum((coef * B for coef, B in zip(row, basis)), la.zeros(n, n)) for row in la.nullspace(system)]


def left_invariant_forms(c):
    """Symmetric forms with ``B(x∘y, z) + B(y, x∘z) = 0``."""
    n = c.shape[0]
    return solve_forms(
        n, lambda B: la.residual([(1, "ijm,mk->ijk", (c, B)), (1, "jm,ikm->ijk", (B, c))]), "symmetric"
    )


def type_m_invariant_forms(c, M):
    """All forms (not necessarily symmetric) satisfying the type-M invariance condition."""
    return solve_forms(c.shape[0], lambda B: la.residual(type_m_invariance_terms(c, B, M)))


def nondegenerate_member(rng, basis, tries=20):
    """A random integer combination of ``basis`` of full rank, or ``None``."""
    if not basis:
        return None
    n = basis[0].shape[0]
    for _ in range(tries):
        B = sum((small(rng) * b for b in basis), la.zeros(n, n))
        if is_nondegenerate(B):
            return B
    return None


def leibniz_with_form(rng, n=3, tries=50):
    """``(c, B)``: a Leibniz algebra with a nondegenerate symmetric left-invariant form found by search."""
    for _ in range(tries):
        if rng.random() < 0.6:
            lie, _ = quadratic_lie(rng)
            c = induced_leibniz(AveragingLieAlgebra(lie, random_averaging(rng, lie)))
        else:
            c = random_leibniz(rng, n)
        B = nondegenerate_member(rng, left_invariant_forms(c))
        if B is not None:
            return c, B
    raise RuntimeError("no Leibniz algebra with a nondegenerate left-invariant form found")


def type_m_form_instance(rng, tries=200):
    """``(c, B, M)`` with ``B`` nondegenerate and type-M invariant on a Leibniz algebra ``c``."""
    for _ in range(tries):
        c = random_leibniz(rng, 3) if rng.random() < 0.5 else quadratic_lie(rng)[0]
        M = random_type_matrix(rng)
        B = nondegenerate_member(rng, type_m_invariant_forms(c, M))
        if B is not None:
            assert check_type_m_invariance(c, B, M)
            return c, B, M
    raise RuntimeError("no type-M invariant form found")


# ---------------------------------------------------------------------------
# splittings and operators


def random_split(rng, c):
    """``(≻, ≺)`` with ``≻ + ≺ = c`` and ``≻`` random."""
    succ = random_tensor(rng, c.shape[0], -1, 1, density=0.3)
    return SplitAlgebra(succ, c - succ)


def conjugated_operator(s, T):
    """``(α, β)`` with ``α(x) = T⁻¹L≻(x)T`` and ``β(y) = T⁻¹R≺(y)T``.

    ``T`` is then an invertible O-operator of ``≻ + ≺`` associated to
    ``(α, β)`` and induces ``s`` back.
    """
    Tinv = la.invert(T)
    Ls, Rp = s.actions()
    alpha = la.einsum("pa,iab,bq->ipq", Tinv, Ls, T)
    beta = la.einsum("pa,iab,bq->ipq", Tinv, Rp, T)
    return alpha, beta


def brute_force_matrices(n, values=(-1, 0, 1)):
    for entries in itertools.product(values, repeat=n * n):
        yield la.qarray([list(entries[i * n:(i + 1) * n]) for i in range(n)])


@lru_cache(maxsize=None)
def _averaging_2d(key, values):
    c = la.qarray(key).reshape(2, 2, 2)
    return tuple(tuple(map(tuple, P)) for P in brute_force_matrices(2, values) if check_averaging(c, P))


def averaging_operators_2d(c, values=(-2, -1, 0, 1, 2)):
    """Every averaging operator on a 2-dim Lie algebra with entries in ``values``."""
    return [la.qarray(P) for P in _averaging_2d(tuple(c.reshape(-1)), tuple(values))]


def admissible_partners(c, P, values=(-1, 0, 1)):
    """Every ``Q`` with entries in ``values`` making ``(P, Q)`` admissible."""
    return [Q for Q in brute_force_matrices(c.shape[0], values) if check_admissible(c, P, Q)]


def antisymmetric_comults_2d(values=(-1, 0, 1)):
    """All ``δ`` on a 2-dim space with ``δ = −τδ`` and coefficients in ``values``."""
    for a, b in itertools.product(values, repeat=2):
        d = la.zeros(2, 2, 2)
        d[0, 0, 1], d[0, 1, 0] = la.Q(a), la.Q(-a)
        d[1, 0, 1], d[1, 1, 0] = la.Q(b), la.Q(-b)
        yield d


def lie_bialgebras_2d(c, values=(-1, 0, 1)):
    """Every Lie-bialgebra cobracket on the 2-dim Lie algebra ``c`` with coefficients in ``values``."""
    return [d for d in antisymmetric_comults_2d(values) if check_lie_bialgebra(c, d)]


def coboundary(c, r):
    """``δ(x) = (ad x ⊗ 1 + 1 ⊗ ad x) r`` for ``r`` a 2-tensor."""
    return la.residual([(1, "kia,ij->kaj", (c, r)), (1, "kjb,ij->kib", (c, r))])


def is_lie(c):
    return check_relations(c, LIE).ok


def solve_mults(n, condition):
    """Basis of the multiplications ``c`` with ``condition(c) = 0`` (``condition`` linear in ``c``)."""
    basis = []
    for idx in itertools.product(range(n), repeat=3):
        c = la.zeros(n, n, n)
        c[idx] = la.Q(1)
        basis.append(c)
    columns = [condition(c).reshape(-1) for c in basis]
    system = la.qarray([[col[r] for col in columns] for r in range(len(columns[0]))])
    return [sum((coef * c for coef, c in zip(row, basis)), la.zeros(n, n, n)) for row in la.nullspace(system)]


@lru_cache(maxsize=None)
def _avg_lie_bialgebras_2d(key, values):
    from .bialgebra import AvgLieBialgebra, check_avg_lie_bialgebra

    c = la.qarray(key).reshape(2, 2, 2)
    out = []
    deltas = lie_bialgebras_2d(c, values)
    for P in averaging_operators_2d(c, values):
        for Q in admissible_partners(c, P):
            for delta in deltas:
                b = AvgLieBialgebra(c, delta, P, Q)
                if check_avg_lie_bialgebra(b):
                    out.append(b)
    return tuple(out)


def avg_lie_bialgebras_2d(c, values=(-2, -1, 0, 1, 2)):
    """Every averaging Lie bialgebra ``(c, δ, P, Q)`` on a 2-dim Lie algebra with
    ``P`` and ``δ`` coefficients in ``values`` and ``Q`` entries in {−1, 0, 1}."""
    return list(_avg_lie_bialgebras_2d(tuple(c.reshape(-1)), tuple(values)))
