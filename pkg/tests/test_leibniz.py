import random

import pytest

from opsplit import linalg as la
from opsplit.core import LEIBNIZ, Rep, adjoint_rep, check_relations, dual_family, is_representation, rep_equivalent, zero_rep
from opsplit.errors import DegenerateForm, NotLeftInvariant, NotLeibniz, NotSDPL, NotSymmetric
from opsplit.leibniz import (
    ROUTES,
    TYPE_A,
    TYPE_B,
    SDPLAlgebra,
    SDPLRep,
    adjoint_sdpl_rep,
    bullet,
    check_leibniz_rep,
    check_sdpl,
    check_sdpl_rep,
    check_type_a,
    coadjoint_sdpl_rep,
    dual_sdpl_rep,
    dualize_leibniz_rep,
    form_identities,
    leibniz_rep_failures,
    quadratic_form_of,
    sdpl_failure,
    sdpl_from_form,
    sdpl_rep_equivalent,
)
from opsplit.search import (
    leibniz_with_form,
    perturb,
    random_invertible,
    random_leibniz,
    random_matrix,
    random_split,
    random_tensor,
)
from opsplit.splitting import SplitAlgebra, check_type_m_pre

from . import sl2_reference
from .oracles import form, leibniz_rep_ok, mul, triples


@pytest.fixture(scope="module")
def sl2_sdpl():
    return SDPLAlgebra(sl2_reference.succ(), sl2_reference.prec())


def conjugate(phi, f):
    return la.einsum("ab,ibc,cd->iad", phi, f, la.invert(phi))


def semidirect_split(s, rep):
    """``A ⊕ V`` with ``(x+u)≻(y+v) = x≻y + l≻(x)v + r≻(y)u`` and
    ``(x+u)≺(y+v) = x≺y + l≺(x)v − l≺(y)u``."""
    n, m = s.dim, rep.vdim
    succ, prec = la.zeros(n + m, n + m, n + m), la.zeros(n + m, n + m, n + m)
    succ[:n, :n, :n], prec[:n, :n, :n] = s.succ, s.prec
    succ[:n, n:, n:] = rep.l_succ.transpose(0, 2, 1)
    succ[n:, :n, n:] = rep.r_succ.transpose(2, 0, 1)
    prec[:n, n:, n:] = rep.l_prec.transpose(0, 2, 1)
    prec[n:, :n, n:] = -rep.l_prec.transpose(2, 0, 1)
    return SplitAlgebra(succ, prec)


# ---------------------------------------------------------------------------
# representations


def test_leibniz_rep_examples(sl2):
    c = sl2["circ"]
    ad = adjoint_rep(c)
    assert check_leibniz_rep(c, ad)
    assert check_leibniz_rep(c, dualize_leibniz_rep(ad))
    assert not check_leibniz_rep(c, Rep(ad.left, ad.left))
    # negating R∘ keeps rep1, rep2 and leaves rep3 only when (z∘x)∘y = 0; on the sl(2)
    # induced algebra (z∘x)∘y = [[Pz,Px],y] = 0 since P has rank one, but not on the bracket
    assert check_leibniz_rep(c, Rep(ad.left, -ad.right))
    lie = adjoint_rep(sl2["bracket"])
    flipped = Rep(lie.left, -lie.right)
    assert leibniz_rep_failures(sl2["bracket"], flipped) == ["rep3"]
    assert not leibniz_rep_ok(sl2["bracket"], flipped.left, flipped.right)
    with pytest.raises(NotLeibniz):
        check_leibniz_rep(sl2["succ_table"], ad)


def test_negated_right_action_criterion():
    rng = random.Random(38)
    seen = set()
    for _ in range(40):
        c = random_leibniz(rng, 3)
        ad = adjoint_rep(c)
        nilpotent_right = la.is_zero(la.einsum("kxm,myl->kxyl", c, c))  # (z∘x)∘y = 0
        verdict = check_leibniz_rep(c, Rep(ad.left, -ad.right))
        assert verdict == nilpotent_right
        seen.add(verdict)
    assert seen == {True, False}


def test_leibniz_rep_agrees_with_semidirect_route_and_loops():
    rng = random.Random(30)
    seen = {True: 0, False: 0}
    for _ in range(200):
        c = random_leibniz(rng, 2 + rng.randint(0, 1))
        n = c.shape[0]
        kind = rng.choice(["adjoint", "dual", "conjugated", "random", "perturbed"])
        r = adjoint_rep(c)
        if kind == "dual":
            r = dualize_leibniz_rep(r)
        elif kind == "conjugated":
            g = random_invertible(rng, n, -1, 1)
            r = Rep(conjugate(g, r.left), conjugate(g, r.right))
        elif kind == "random":
            r = Rep(random_tensor(rng, n, -1, 1, 0.2), random_tensor(rng, n, -1, 1, 0.2))
        elif kind == "perturbed":
            r = Rep(perturb(rng, r.left), r.right)
        verdict = check_leibniz_rep(c, r)
        assert verdict == is_representation(c, LEIBNIZ, r).ok
        assert verdict == leibniz_rep_ok(c, r.left, r.right)
        seen[verdict] += 1
    assert min(seen.values()) >= 30


def test_dualize_leibniz_rep():
    assert dualize_leibniz_rep(zero_rep(3, 2)) == zero_rep(3, 2)
    rng = random.Random(31)
    for _ in range(20):
        r = Rep(random_tensor(rng, 3), random_tensor(rng, 3))
        d = dualize_leibniz_rep(r)
        assert la.equal(d.left, dual_family(r.left))
        assert la.equal(d.right, -dual_family(r.left) - dual_family(r.right))
        phi = random_invertible(rng, 3)
        r2 = Rep(conjugate(phi, r.left), conjugate(phi, r.right))
        assert rep_equivalent(r, r2, phi)
        assert rep_equivalent(d, dualize_leibniz_rep(r2), la.invert(phi).T)


# ---------------------------------------------------------------------------
# type-a splittings and SDPL algebras


def test_type_a_examples(sl2_sdpl):
    for route in ROUTES:
        assert check_type_a(sl2_sdpl, route)
        assert check_type_a(SplitAlgebra(la.zeros(3, 3, 3), la.zeros(3, 3, 3)), route)
    rng = random.Random(32)
    for _ in range(10):
        s = random_split(rng, random_tensor(rng, 3))
        if not check_relations(s.circ, LEIBNIZ).ok:
            assert not any(check_type_a(s, route) for route in ROUTES)
    with pytest.raises(ValueError):
        check_type_a(sl2_sdpl, "typeC")
    assert TYPE_A.rows == ((1, -1), (-1, 0)) and TYPE_B.rows == ((1, 0), (-1, 1))


def test_bullet_product(sl2_sdpl):
    bu = bullet(sl2_sdpl)
    for x, y, _ in triples(3):
        assert mul(bu, x, y) == [p - q for p, q in zip(mul(sl2_sdpl.succ, x, y), mul(sl2_sdpl.prec, y, x))]


def test_sdpl_examples(sl2, sl2_sdpl):
    assert check_sdpl(sl2_sdpl)
    assert la.equal(sl2_sdpl.circ, sl2["circ"])
    assert check_sdpl(SplitAlgebra(sl2["circ"], la.zeros(3, 3, 3)))
    # flipping the sign of x≺y alone breaks anticommutativity
    prec = sl2_sdpl.prec.copy()
    prec[0, 2] = -prec[0, 2]
    assert sdpl_failure(SplitAlgebra(sl2_sdpl.succ, prec)) == "antisymmetry"
    # flipping both x≺y and y≺x keeps anticommutativity but not the other identities
    prec[2, 0] = -prec[2, 0]
    flipped = SplitAlgebra(sl2_sdpl.succ, prec)
    assert sdpl_failure(flipped) in ("leibniz", "sdpp-derivation", "sdpp-prec")
    with pytest.raises(NotSDPL):
        SDPLAlgebra.of(flipped)


def test_sdpl_equals_type_a_with_anticommutative_prec():
    rng = random.Random(33)
    seen = {True: 0, False: 0}
    for _ in range(60):
        c, B = leibniz_with_form(rng)
        s = sdpl_from_form(c, B)
        if rng.random() < 0.5:
            prec = perturb(rng, s.prec, -1, 1)
            if rng.random() < 0.5:
                prec = (prec - prec.transpose(1, 0, 2)) / 2
            s = SplitAlgebra(s.succ, prec)
        anti = la.equal(s.prec, -s.prec.transpose(1, 0, 2))
        verdict = check_sdpl(s)
        assert verdict == (check_type_a(s, "identities") and anti)
        seen[verdict] += 1
    assert min(seen.values()) >= 10


# ---------------------------------------------------------------------------
# quadratic SDPL algebras


def test_sdpl_from_form_on_sl2(sl2, sl2_sdpl):
    s = sdpl_from_form(sl2["circ"], sl2["B"])
    assert s == sl2_sdpl
    assert quadratic_form_of(s, sl2["B"])
    ids = form_identities(None, sl2["B"], s)
    assert ids["li"] and ids["cor3"] and ids["cor4"] and ids["cor3_37"]
    B = sl2["B"]
    for x, y, z in triples(3):
        assert form(B, mul(s.succ, x, y), z) == form(B, x, mul(s.succ, z, y))


def test_sdpl_from_form_trivial_and_errors(sl2):
    rng = random.Random(34)
    B = random_matrix(rng, 3)
    B = B + B.T + 7 * la.eye(3)
    s = sdpl_from_form(la.zeros(3, 3, 3), B)
    assert la.is_zero(s.succ) and la.is_zero(s.prec)
    with pytest.raises(NotSymmetric):
        sdpl_from_form(sl2["circ"], la.qarray([[0, 0, 1], [0, 2, 0], [2, 0, 0]]))
    with pytest.raises(DegenerateForm):
        sdpl_from_form(sl2["circ"], la.zeros(3, 3))
    with pytest.raises(NotLeftInvariant):
        sdpl_from_form(sl2["circ"], la.eye(3))
    with pytest.raises(NotLeibniz):
        sdpl_from_form(sl2["succ_table"], sl2["B"])


def test_sdpl_from_form_round_trip():
    rng = random.Random(35)
    for _ in range(20):
        c, B = leibniz_with_form(rng)
        s = sdpl_from_form(c, B)
        assert la.equal(s.circ, c)
        assert quadratic_form_of(s, B)
        for x, y, z in triples(3):
            assert form(B, mul(s.prec, x, y), z) == -form(B, x, mul(c, z, y))
            assert form(B, mul(s.succ, x, y), z) == -form(B, y, [p + q for p, q in zip(mul(c, x, z), mul(c, z, x))])


def test_quadratic_form_of_negatives(sl2_sdpl):
    assert not quadratic_form_of(sl2_sdpl, la.zeros(3, 3))
    rng = random.Random(36)
    rejected = 0
    for _ in range(20):
        c, B = leibniz_with_form(rng)
        s = sdpl_from_form(c, B)
        B2 = random_matrix(rng, 3)
        B2 = B2 + B2.T
        if la.rank(B2) < 3 or la.is_zero(s.prec):
            continue
        if not quadratic_form_of(s, B2):
            rejected += 1
            assert not form_identities(None, B2, s)["cor4"]
    assert rejected >= 3


def test_type_b_condition_on_sl2(sl2, sl2_sdpl):
    assert check_type_m_pre(sl2_sdpl, LEIBNIZ, TYPE_B, dual=True).ok


# ---------------------------------------------------------------------------
# SDPL representations


def test_sdpl_rep_examples(sl2_sdpl):
    assert check_sdpl_rep(sl2_sdpl, adjoint_sdpl_rep(sl2_sdpl))
    assert check_sdpl_rep(sl2_sdpl, coadjoint_sdpl_rep(sl2_sdpl))
    zero = SDPLAlgebra(la.zeros(3, 3, 3), la.zeros(3, 3, 3))
    zrep = SDPLRep(la.zeros(3, 2, 2), la.zeros(3, 2, 2), la.zeros(3, 2, 2))
    assert check_sdpl_rep(zero, zrep)
    assert coadjoint_sdpl_rep(zero) == SDPLRep(*(la.zeros(3, 3, 3),) * 3)
    co = coadjoint_sdpl_rep(sl2_sdpl)
    Ls, Rs = (dual_family(f) for f in (sl2_sdpl.actions()[0], la.qarray(sl2_sdpl.succ).transpose(1, 2, 0)))
    Rc = dual_family(la.qarray(sl2_sdpl.circ).transpose(1, 2, 0))
    assert la.equal(co.l_succ, Ls + Rs) and la.equal(co.r_succ, -Rs) and la.equal(co.l_prec, -Rc)


def test_sdpl_rep_agrees_with_semidirect_split_and_dualizes():
    rng = random.Random(37)
    seen = {True: 0, False: 0}
    for _ in range(60):
        c, B = leibniz_with_form(rng)
        s = sdpl_from_form(c, B)
        kind = rng.choice(["adjoint", "coadjoint", "conjugated", "random", "perturbed"])
        r = coadjoint_sdpl_rep(s) if kind == "coadjoint" else adjoint_sdpl_rep(s)
        if kind == "conjugated":
            g = random_invertible(rng, 3)
            r2 = SDPLRep(conjugate(g, r.l_succ), conjugate(g, r.r_succ), conjugate(g, r.l_prec))
            assert sdpl_rep_equivalent(r, r2, g)
            r = r2
        elif kind == "random":
            r = SDPLRep(*(random_tensor(rng, 3, -1, 1, 0.2) for _ in range(3)))
        elif kind == "perturbed":
            r = SDPLRep(perturb(rng, r.l_succ), r.r_succ, r.l_prec)
        verdict = check_sdpl_rep(s, r)
        assert verdict == check_sdpl(semidirect_split(s, r))
        if verdict:
            assert check_sdpl_rep(s, dual_sdpl_rep(r))
        seen[verdict] += 1
    assert min(seen.values()) >= 10


def test_quadratic_sdpl_adjoint_and_coadjoint_are_equivalent(sl2_sdpl, sl2):
    assert sdpl_rep_equivalent(adjoint_sdpl_rep(sl2_sdpl), coadjoint_sdpl_rep(sl2_sdpl), sl2["B"])
    assert not sdpl_rep_equivalent(adjoint_sdpl_rep(sl2_sdpl), coadjoint_sdpl_rep(sl2_sdpl), la.eye(3))
