"""From an averaging operator on sl(2) to a quadratic SDPL algebra, printed step by step.

    python demos/sl2_pipeline.py
"""

from opsplit import linalg as la
from opsplit.averaging import AveragingLieAlgebra, adjoint_map, check_averaging, induced_leibniz, sdpl_from_admissible
from opsplit.catalog import SL2_LABELS, sl2_averaging, sl2_bracket, sl2_form
from opsplit.core import LEIBNIZ, LIE, check_relations, format_element
from opsplit.leibniz import ROUTES, check_sdpl, check_type_a, form_identities, sdpl_from_form


def table(name, c, symbol):
    print(f"\n{name}")
    for i, a in enumerate(SL2_LABELS):
        row = [f"{a}{symbol}{b} = {format_element(c[i, j], SL2_LABELS)}" for j, b in enumerate(SL2_LABELS)]
        print("  " + ",  ".join(row))


def main():
    c, P, B = sl2_bracket(), sl2_averaging(), sl2_form()
    table("sl(2) bracket", c, "·")
    print("\nbracket satisfies Jacobi:", check_relations(c, LIE).ok)
    print("P =", [format_element(P[:, j], SL2_LABELS) for j in range(3)], "on", SL2_LABELS)
    print("P is averaging ([Px,Py] = P[Px,y]):", check_averaging(c, P))

    circ = induced_leibniz(AveragingLieAlgebra(c, P))
    table("induced product x∘y = [Px, y]", circ, "∘")
    print("\nLeibniz:", check_relations(circ, LEIBNIZ).ok, "  Lie:", check_relations(circ, LIE).ok)
    print("trace form left-invariant on ∘:", form_identities(circ, B)["li"])

    Phat = adjoint_map(P, B)
    print("adjoint of P under the trace form equals P:", la.equal(Phat, P))

    s_op = sdpl_from_admissible(AveragingLieAlgebra(c, P, Phat))
    s_form = sdpl_from_form(circ, B)
    table("x≻y = [Px,y] − P̂[x,y]", s_op.succ, "≻")
    table("x≺y = P̂[x,y]", s_op.prec, "≺")
    print("\noperator route and form route agree:", s_op == s_form)
    print("SDPL:", check_sdpl(s_op), " type-a by every route:", {r: check_type_a(s_op, r) for r in ROUTES})


if __name__ == "__main__":
    main()
