import itertools
import random

import pytest

from opsplit import linalg as la
from opsplit.catalog import affine_bracket, leibniz_nilpotent
from opsplit.core import (
    IDENTITY,
    LEIBNIZ,
    LIE,
    TypeMatrix,
    adjoint_rep,
    check_relations,
    combine_reps,
    left_mults,
    right_mults,
)
from opsplit.errors import DegenerateForm, DimMismatch, NotAnOperator, NotInvariant, Singular, SingularTypeMatrix
from opsplit.leibniz import L_MATRIX, TYPE_B
from opsplit.search import (
    brute_force_matrices,
    conjugated_operator,
    nilpotent_leibniz,
    nondegenerate_member,
    random_invertible,
    random_leibniz,
    random_matrix,
    random_split,
    random_tensor,
    random_type_matrix,
    solve_forms,
    solve_mults,
    type_m_form_instance,
)
from opsplit.splitting import (
    SplitAlgebra,
    check_o_operator,
    check_strong,
    check_type_m_invariance,
    check_type_m_pre,
    check_type_m_rota_baxter,
    circ_on_v,
    classify_o_operator,
    form_operator,
    induce_splitting,
    is_antisymmetric,
    is_nondegenerate,
    is_symmetric,
    mults_from_M_inverse,
    splitting_from_form,
    v_side_splitting,
)

from . import sl2_reference
from .oracles import apply, form, leibniz_ok, mul, pairs, triples, vec

NONSINGULAR = [M for M in itertools.starmap(TypeMatrix, itertools.product((-1, 0, 1), repeat=4)) if M.det != 0]


def swap(c):
    return c.transpose(1, 0, 2)


def commutator_split(c):
    """``x≻y = x∘y − y∘x`` and ``x≺y = y∘x``."""
    return SplitAlgebra(c - swap(c), swap(c))


def symplectic_form():
    """The standard nondegenerate antisymmetric form on a 4-dim space."""
    w = la.zeros(4, 4)
    w[0, 2] = w[1, 3] = la.Q(1)
    w[2, 0] = w[3, 1] = la.Q(-1)
    return w


def leibniz_with_antisymmetric_form():
    """Leibniz algebras on which ``ω(x, y∘z) = ω(x∘z + z∘x, y)`` for the standard ω, found by solving."""
    w = symplectic_form()
    condition = lambda c: la.residual(  # noqa: E731
        [(1, "im,jkm->ijk", (w, c)), (-1, "ikm,mj->ijk", (c, w)), (-1, "kim,mj->ijk", (c, w))]
    )
    return w, [c for c in solve_mults(4, condition) if check_relations(c, LEIBNIZ).ok]


# ---------------------------------------------------------------------------
# type-M pre-Leibniz checks


def test_commutator_split_is_type_m_and_dual_type_ml(sl2):
    s = commutator_split(sl2["circ"])
    M = TypeMatrix(0, -1, 1, 1)
    assert M @ L_MATRIX == TypeMatrix(0, 1, 1, -2)
    assert check_type_m_pre(s, LEIBNIZ, M).ok
    assert check_type_m_pre(s, LEIBNIZ, M @ L_MATRIX, dual=True).ok
    Ls, Rp = s.actions()
    r = combine_reps(Ls, Rp, M)
    assert la.equal(r.left, Rp) and la.equal(r.right, -Ls + Rp)


def test_commutator_split_on_random_leibniz_algebras():
    rng = random.Random(10)
    for _ in range(20):
        s = commutator_split(random_leibniz(rng, 3))
        assert check_type_m_pre(s, LEIBNIZ, TypeMatrix(0, -1, 1, 1)).ok
        assert check_type_m_pre(s, LEIBNIZ, TypeMatrix(0, 1, 1, -2), dual=True).ok


def test_type_m_pre_trivial_and_negative(sl2):
    zero = SplitAlgebra(la.zeros(3, 3, 3), la.zeros(3, 3, 3))
    for M in NONSINGULAR[:5]:
        assert check_type_m_pre(zero, LEIBNIZ, M).ok
        assert check_type_m_pre(zero, LEIBNIZ, M, dual=True).ok
    # the circ check fails when ∘ is not Leibniz, whatever the actions
    bad = SplitAlgebra(sl2["circ"], la.qarray(sl2_reference.bracket()))
    report = check_type_m_pre(bad, LEIBNIZ, IDENTITY)
    assert not report.ok and any(str(v.relation).startswith("circ:") for v in report.violations)


# ---------------------------------------------------------------------------
# O-operators


def test_o_operator_examples(sl2):
    c = sl2["circ"]
    s = SplitAlgebra(sl2["succ_table"], sl2["prec_table"])
    Ls, Rp = s.actions()
    assert check_o_operator(c, Ls, Rp, la.eye(3))
    assert check_o_operator(c, Ls, Rp, la.zeros(3, 3))
    with pytest.raises(DimMismatch):
        check_o_operator(c, Ls, Rp, la.eye(2))


def test_averaging_operators_are_o_operators_for_ad_and_zero(sl2):
    c, P = sl2["bracket"], sl2["P"]
    ad, zero = left_mults(c), la.zeros(3, 3, 3)
    assert check_o_operator(c, ad, zero, P)
    # the same identity is the averaging identity, so a non-averaging map such as ad(h) fails
    ad_h = ad[1]
    assert not check_o_operator(c, ad, zero, ad_h)
    x, y = vec(3, 0), vec(3, 2)
    lhs = mul(c, apply(ad_h, x), apply(ad_h, y))
    rhs = apply(ad_h, mul(c, apply(ad_h, x), y))
    assert lhs != rhs


def test_o_operator_matches_loop_oracle():
    rng = random.Random(11)
    hits = 0
    for _ in range(300):
        c = rng.choice([affine_bracket(), leibniz_nilpotent(), la.zeros(2, 2, 2)])
        a, b = random_tensor(rng, 2, -1, 1, 0.4), random_tensor(rng, 2, -1, 1, 0.4)
        T = random_matrix(rng, 2, lo=-1, hi=1)
        expected = all(
            mul(c, apply(T, u), apply(T, v))
            == apply(T, [p + q for p, q in zip(apply(sum(x * a[i] for i, x in enumerate(apply(T, u))), v), apply(sum(x * b[i] for i, x in enumerate(apply(T, v))), u))])
            for u, v in pairs(2)
        )
        assert check_o_operator(c, a, b, T) == expected
        hits += expected
    assert hits > 10


def test_classify_examples(sl2):
    c = sl2["circ"]
    alpha, beta, T = form_operator(c, sl2["B"], TYPE_B)
    assert classify_o_operator(c, LEIBNIZ, alpha, beta, T, TYPE_B, dual=True)
    ad = adjoint_rep(c)
    assert not classify_o_operator(c, LEIBNIZ, ad.left, ad.left, la.zeros(3, 3), IDENTITY)
    assert not classify_o_operator(c, LEIBNIZ, ad.left, ad.right, la.eye(3), IDENTITY)


def test_classify_equals_type_m_pre_under_conjugation():
    """Conjugating the actions of a split by invertible T gives an O-operator of the same type."""
    rng = random.Random(12)
    verdicts = set()
    for _ in range(40):
        c = random_leibniz(rng, 3)
        s = random_split(rng, c) if rng.random() < 0.5 else commutator_split(c)
        T = random_invertible(rng, 3, -1, 1)
        alpha, beta = conjugated_operator(s, T)
        M, dual = random_type_matrix(rng, -1, 1), rng.random() < 0.5
        v = classify_o_operator(c, LEIBNIZ, alpha, beta, T, M, dual)
        assert v == check_type_m_pre(s, LEIBNIZ, M, dual).ok
        assert induce_splitting(c, alpha, beta, T) == s
        verdicts.add(v)
    assert verdicts == {True, False}


# ---------------------------------------------------------------------------
# strongness


def searched_operators(seed, want_weak=3, limit=30000):
    """Rank-one type-M O-operators on 2-dim Leibniz algebras, with their type matrices."""
    rng = random.Random(seed)
    out = {True: [], False: []}
    for _ in range(limit):
        c = rng.choice([la.zeros(2, 2, 2), leibniz_nilpotent(), affine_bracket()])
        T = random_matrix(rng, 2, lo=-1, hi=1)
        if la.rank(T) != 1:
            continue
        a, b = random_tensor(rng, 2, -1, 1, 0.4), random_tensor(rng, 2, -1, 1, 0.4)
        if not check_o_operator(c, a, b, T):
            continue
        M = rng.choice(NONSINGULAR)
        if not classify_o_operator(c, LEIBNIZ, a, b, T, M):
            continue
        out[check_strong(c, LEIBNIZ, a, b, T)].append((c, a, b, T, M))
        if len(out[False]) >= want_weak and len(out[True]) >= 20:
            break
    return out


@pytest.fixture(scope="module")
def operators():
    return searched_operators(5)


def test_non_invertible_type_m_operators_need_not_be_strong(operators):
    assert operators[False], "search found no non-strong type-M O-operator"
    c, a, b, T, M = operators[False][0]
    assert M != IDENTITY and la.rank(T) == 1
    assert not leibniz_ok(circ_on_v(a, b, T))


def test_v_side_split_is_type_m_iff_strong(operators):
    assert operators[True] and operators[False]
    for strong, found in operators.items():
        for c, a, b, T, M in found:
            s = v_side_splitting(a, b, T)
            assert la.equal(s.circ, circ_on_v(a, b, T))
            assert check_type_m_pre(s, LEIBNIZ, M).ok == strong


def test_check_strong_requires_an_operator(sl2):
    ad = adjoint_rep(sl2["circ"])
    with pytest.raises(NotAnOperator):
        check_strong(sl2["circ"], LEIBNIZ, ad.left, ad.right, la.eye(3))


def test_invertible_and_classical_operators_are_strong(sl2):
    c = sl2["circ"]
    alpha, beta, T = form_operator(c, sl2["B"], TYPE_B)
    assert check_strong(c, LEIBNIZ, alpha, beta, T)
    # classical: every O-operator for the adjoint actions (M = I) on small Leibniz algebras
    found = 0
    for c in (affine_bracket(), leibniz_nilpotent()):
        ad = adjoint_rep(c)
        for T in brute_force_matrices(2):
            if la.is_zero(T) or not check_o_operator(c, ad.left, ad.right, T):
                continue
            assert classify_o_operator(c, LEIBNIZ, ad.left, ad.right, T, IDENTITY)
            assert check_strong(c, LEIBNIZ, ad.left, ad.right, T)
            found += 1
    assert found >= 5


# ---------------------------------------------------------------------------
# induced splittings


def test_induce_splitting_round_trip():
    rng = random.Random(14)
    for _ in range(20):
        c = random_tensor(rng, 3)
        s = random_split(rng, c)
        Ls, Rp = s.actions()
        assert induce_splitting(c, Ls, Rp, la.eye(3)) == s


def test_induce_splitting_from_form_operator_gives_sl2_table(sl2):
    c = sl2["circ"]
    alpha, beta, T = form_operator(c, sl2["B"], TYPE_B)
    s = induce_splitting(c, alpha, beta, T)
    assert la.equal(s.succ, sl2_reference.succ())
    assert la.equal(s.prec, sl2_reference.prec())


def test_induce_splitting_errors(sl2):
    c = sl2["circ"]
    ad = adjoint_rep(c)
    with pytest.raises(Singular):
        induce_splitting(c, ad.left, ad.right, la.zeros(3, 3))
    with pytest.raises(NotAnOperator):
        induce_splitting(c, ad.left, ad.right, la.eye(3))


# ---------------------------------------------------------------------------
# Rota–Baxter operators


def test_rota_baxter_examples():
    rng = random.Random(15)
    for _ in range(30):
        c = random_tensor(rng, 2, -1, 1, 0.5)
        R = random_matrix(rng, 2, lo=-1, hi=1)
        assert check_type_m_rota_baxter(c, la.zeros(2, 2), random_type_matrix(rng))
        classical = all(
            mul(c, apply(R, x), apply(R, y))
            == apply(R, [p + q for p, q in zip(mul(c, apply(R, x), y), mul(c, x, apply(R, y)))])
            for x, y in pairs(2)
        )
        assert check_type_m_rota_baxter(c, R, IDENTITY) == classical
    with pytest.raises(SingularTypeMatrix):
        check_type_m_rota_baxter(la.zeros(2, 2, 2), la.eye(2), TypeMatrix(1, 1, 1, 1))


def test_mults_from_M_inverse_values(sl2):
    c = sl2["circ"]
    s = mults_from_M_inverse(c, IDENTITY)
    assert la.equal(s.succ, c) and la.equal(s.prec, c)
    s = mults_from_M_inverse(c, TYPE_B)
    assert la.equal(s.succ, c + swap(c))
    assert la.equal(s.prec, c)
    with pytest.raises(SingularTypeMatrix):
        mults_from_M_inverse(c, TypeMatrix(1, 2, 2, 4))


def test_mults_from_M_inverse_sum_and_actions():
    rng = random.Random(16)
    for _ in range(30):
        c = random_tensor(rng, 3)
        M = random_type_matrix(rng)
        s = mults_from_M_inverse(c, M)
        total = ((M.b2 + M.a1) * c - (M.a2 + M.b1) * swap(c)) / M.det
        assert la.equal(s.succ + s.prec, total)
        r = combine_reps(left_mults(c), right_mults(c), M.inverse())
        Ls, Rp = s.actions()
        assert la.equal(Ls, r.left) and la.equal(Rp, r.right)
        # ≻ + ≺ = ∘ exactly when b2 + a1 = |M| and a2 + b1 = 0 (for ∘ with ∘ ≠ ±τ∘ generic)
        if M.b2 + M.a1 == M.det and M.a2 + M.b1 == 0:
            assert la.equal(s.circ, c)


# ---------------------------------------------------------------------------
# forms


def test_form_predicates(sl2):
    B = sl2["B"]
    assert is_symmetric(B) and is_nondegenerate(B) and not is_antisymmetric(B)
    w = symplectic_form()
    assert is_antisymmetric(w) and is_nondegenerate(w) and not is_symmetric(w)
    assert not is_nondegenerate(la.zeros(3, 3))


def test_type_m_invariance_examples(sl2):
    rng = random.Random(17)
    zero = la.zeros(3, 3, 3)
    for _ in range(5):
        assert check_type_m_invariance(zero, random_matrix(rng, 3), random_type_matrix(rng))
    assert check_type_m_invariance(sl2["circ"], sl2["B"], TYPE_B)
    assert not check_type_m_invariance(sl2["circ"], sl2["B"], IDENTITY)
    with pytest.raises(SingularTypeMatrix):
        check_type_m_invariance(zero, sl2["B"], TypeMatrix(0, 0, 1, 1))


def test_type_m_invariance_matches_loop_oracle():
    rng = random.Random(18)
    for _ in range(20):
        c = random_tensor(rng, 2, -1, 1)
        B = random_matrix(rng, 2, lo=-1, hi=1)
        M = random_type_matrix(rng, -1, 1)
        expected = all(
            M.det * form(B, mul(c, x, y), z)
            == form(B, x, [M.b1 * p - M.a1 * q for p, q in zip(mul(c, y, z), mul(c, z, y))])
            + form(B, y, [M.a2 * p - M.b2 * q for p, q in zip(mul(c, z, x), mul(c, x, z))])
            for x, y, z in triples(2)
        )
        assert check_type_m_invariance(c, B, M) == expected


@pytest.fixture(scope="module")
def omega_instances():
    return leibniz_with_antisymmetric_form()


def test_antisymmetric_invariant_form_gives_commutator_split(omega_instances):
    w, algebras = omega_instances
    M = TypeMatrix(0, 1, 1, -2)
    nonzero = [c for c in algebras if not la.is_zero(c)]
    assert len(nonzero) >= 5
    assert any(not check_relations(c, LIE).ok for c in nonzero)
    for c in nonzero:
        assert check_type_m_invariance(c, w, M)
        s = splitting_from_form(c, LEIBNIZ, w, M)
        assert s == commutator_split(c)
        assert check_type_m_pre(s, LEIBNIZ, M, dual=True).ok


def test_splitting_from_form_on_sl2_gives_sl2_table(sl2):
    s = splitting_from_form(sl2["circ"], LEIBNIZ, sl2["B"], TYPE_B)
    assert la.equal(s.succ, sl2_reference.succ())
    assert la.equal(s.prec, sl2_reference.prec())


def symplectic_leibniz_instances(rng, count):
    """Leibniz algebras with a symmetric ``B(z,x∘y) = −B(y,x∘z) + B(x,y∘z) + B(x,z∘y)``."""
    out = []
    while len(out) < count:
        c = random_leibniz(rng, 3) if rng.random() < 0.5 else nilpotent_leibniz(rng, 3)
        if la.is_zero(c):
            continue
        cond = lambda B: la.residual(  # noqa: E731
            [(1, "km,ijm->ijk", (B, c)), (1, "jm,ikm->ijk", (B, c)), (-1, "im,jkm->ijk", (B, c)), (-1, "im,kjm->ijk", (B, c))]
        )
        B = nondegenerate_member(rng, solve_forms(3, cond, "symmetric"))
        if B is not None:
            out.append((c, B))
    return out


def test_symplectic_leibniz_forms_give_pre_leibniz_algebras():
    rng = random.Random(19)
    for c, B in symplectic_leibniz_instances(rng, 10):
        assert check_type_m_invariance(c, B, L_MATRIX)
        s = splitting_from_form(c, LEIBNIZ, B, L_MATRIX)
        for x, y, z in triples(3):
            assert form(B, mul(s.succ, x, y), z) == -form(B, y, mul(c, x, z))
            assert form(B, mul(s.prec, x, y), z) == form(B, x, mul(c, y, z)) + form(B, x, mul(c, z, y))
        assert check_type_m_pre(s, LEIBNIZ, IDENTITY).ok
        assert check_type_m_pre(s, LEIBNIZ, L_MATRIX, dual=True).ok


def test_splitting_from_form_trivial_and_errors(sl2):
    zero = la.zeros(3, 3, 3)
    s = splitting_from_form(zero, LEIBNIZ, sl2["B"], TYPE_B)
    assert la.is_zero(s.succ) and la.is_zero(s.prec)
    with pytest.raises(DegenerateForm):
        splitting_from_form(zero, LEIBNIZ, la.zeros(3, 3), TYPE_B)
    with pytest.raises(NotInvariant):
        splitting_from_form(sl2["circ"], LEIBNIZ, sl2["B"], IDENTITY)
    with pytest.raises(SingularTypeMatrix):
        splitting_from_form(sl2["circ"], LEIBNIZ, sl2["B"], TypeMatrix(1, 1, 1, 1))


def test_splitting_from_form_properties():
    rng = random.Random(20)
    for _ in range(15):
        c, B, M = type_m_form_instance(rng)
        s = splitting_from_form(c, LEIBNIZ, B, M)
        assert la.equal(s.circ, c)
        assert check_type_m_pre(s, LEIBNIZ, M, dual=True).ok
        # the split solves the two defining form equations
        for x, y, z in triples(3):
            assert M.det * form(B, mul(s.succ, x, y), z) == form(
                B, y, [M.a2 * p - M.b2 * q for p, q in zip(mul(c, z, x), mul(c, x, z))]
            )
        alpha, beta, T = form_operator(c, B, M)
        assert classify_o_operator(c, LEIBNIZ, alpha, beta, T, M, dual=True)
        assert induce_splitting(c, alpha, beta, T) == s
