"""The sl(2) pipeline: averaging operator → Leibniz algebra → SDPL algebra, two ways.

Every computed table is diffed against the bundled golden tables.
"""

from . import linalg as la
from .averaging import (
    AveragingLieAlgebra,
    adjoint_map,
    check_averaging,
    endo_double,
    induced_leibniz,
    is_admissible_averaging,
    sdpl_from_admissible,
)
from .bialgebra import AvgLieBialgebra, avg_manin_to_leibniz_manin, build_sdpl_double, induce_sdpl_bialgebra, manin_chain
from .catalog import SL2_LABELS, golden_tables, sl2_averaging, sl2_bracket, sl2_form, table_tensor
from .core import Violation, parse_element
from .leibniz import ROUTES, check_sdpl, check_type_a, form_identities, sdpl_from_form
from .splitting import is_nondegenerate, is_symmetric


def table_diffs(name, got, expected):
    """One violation per product ``e_i * e_j`` whose value differs (residual = got − expected)."""
    out = []
    n = got.shape[0]
    for i in range(n):
        for j in range(n):
            delta = got[i, j] - expected[i, j]
            if not la.is_zero(delta):
                out.append(Violation(name, (i, j), tuple(delta)))
    return out


def sl2_pipeline():
    """Run every step; return ``(verdicts, diffs)``."""
    gold = golden_tables()
    c, P, B = sl2_bracket(), sl2_averaging(), sl2_form()
    verdicts, diffs = {}, []

    verdicts["averaging"] = check_averaging(c, P)
    al = AveragingLieAlgebra(c, P, P, SL2_LABELS)
    circ = induced_leibniz(al)
    diffs += table_diffs("leibniz", circ, table_tensor(gold["leibniz"]))

    ids = form_identities(circ, B)
    verdicts["form-symmetric"] = is_symmetric(B)
    verdicts["form-nondegenerate"] = is_nondegenerate(B)
    verdicts["form-left-invariant"] = ids["li"]

    Phat = adjoint_map(P, B)
    verdicts["adjoint-equals-P"] = la.equal(Phat, P)
    expected = la.zeros(3, 3)
    for name, image in gold["adjoint_of_P"].items():
        expected[:, SL2_LABELS.index(name)] = parse_element(image, SL2_LABELS)
    diffs += [
        Violation("adjoint_of_P", (j,), tuple(Phat[:, j] - expected[:, j]))
        for j in range(3)
        if not la.equal(Phat[:, j], expected[:, j])
    ]

    verdicts["admissible"] = is_admissible_averaging(AveragingLieAlgebra(c, P, Phat))
    s_op = sdpl_from_admissible(AveragingLieAlgebra(c, P, Phat, SL2_LABELS))
    s_form = sdpl_from_form(circ, B)
    for tag, s in (("from-operator", s_op), ("from-form", s_form)):
        diffs += table_diffs(f"succ:{tag}", s.succ, table_tensor(gold["succ"]))
        diffs += table_diffs(f"prec:{tag}", s.prec, table_tensor(gold["prec"]))
    verdicts["sdpl"] = check_sdpl(s_op)
    for route in ROUTES:
        verdicts[f"type-a:{route}"] = check_type_a(s_op, route)

    verdicts["endo-double-admissible"] = is_admissible_averaging(endo_double(circ))

    b = AvgLieBialgebra(c, la.zeros(3, 3, 3), P, Phat)
    bi = induce_sdpl_bialgebra(b)
    chain = manin_chain(bi.sdpl, bi.dual_split())
    verdicts.update({f"manin-chain:{k}": v for k, v in chain.items()})
    circ_d, split_d = avg_manin_to_leibniz_manin(b)
    verdicts["double-consistent"] = split_d == build_sdpl_double(bi.sdpl, bi.dual_split())
    diffs += table_diffs("double-restriction", circ_d[:3, :3, :3], table_tensor(gold["leibniz"]))
    verdicts["golden-tables"] = not diffs
    return verdicts, diffs
